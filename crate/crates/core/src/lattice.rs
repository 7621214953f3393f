//! The submodules `V(m, J)`, `L(m, j)` and the simple subquotients `W(m, J)`.
//!
//! All three are spanned by monomials, so membership is a predicate on exponent
//! vectors:
//!
//! * `x^k` lies in `V(m, J)` iff `deg k = m` and `k_neg ∩ I_alpha ⊆ J`;
//! * `x^k` lies in `L(m, j)` iff `deg k = m` and `|k_neg ∩ I_alpha| <= j`;
//! * the monomials with `k_neg ∩ I_alpha = J` give a basis of `W(m, J)`.
//!
//! `L(m, -1)` is the zero module.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::action::{act_on_monomial, weight_of, MatrixUnit, Weight};
use crate::error::{Error, Result};
use crate::laurent::{check_same_dim, AlphaParam, Exponent, IndexSet, LaurentPoly};
use crate::window::Window;

/// Identifies one of the modules `V(m, J)`, `L(m, j)` or `W(m, J)` of `L_n^alpha`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ModuleId {
    V { alpha: AlphaParam, m: i64, set: IndexSet },
    L { alpha: AlphaParam, m: i64, level: i64 },
    W { alpha: AlphaParam, m: i64, set: IndexSet },
}

fn check_subset(set: IndexSet, alpha: &AlphaParam) -> Result<()> {
    if set.max_index() > alpha.n() {
        return Err(Error::IndexOutOfRange { index: set.max_index(), n: alpha.n() });
    }
    if !set.is_subset(alpha.zero_set()) {
        return Err(Error::NotSubsetOfZeroSet { set: set.to_string(), zero_set: alpha.zero_set().to_string() });
    }
    Ok(())
}

fn check_level(level: i64, alpha: &AlphaParam) -> Result<()> {
    let max = alpha.zero_set().len();
    if level < 0 || level > max as i64 {
        return Err(Error::LevelOutOfRange { j: level, max });
    }
    Ok(())
}

impl ModuleId {
    pub fn v(alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<Self> {
        check_subset(set, alpha)?;
        Ok(ModuleId::V { alpha: alpha.clone(), m, set })
    }

    /// `L(m, j)`; `j = -1` names the zero module.
    pub fn l(alpha: &AlphaParam, m: i64, level: i64) -> Result<Self> {
        if level != -1 {
            check_level(level, alpha)?;
        }
        Ok(ModuleId::L { alpha: alpha.clone(), m, level })
    }

    pub fn w(alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<Self> {
        check_subset(set, alpha)?;
        Ok(ModuleId::W { alpha: alpha.clone(), m, set })
    }

    pub fn alpha(&self) -> &AlphaParam {
        match self {
            ModuleId::V { alpha, .. } | ModuleId::L { alpha, .. } | ModuleId::W { alpha, .. } => alpha,
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            ModuleId::V { m, .. } | ModuleId::L { m, .. } | ModuleId::W { m, .. } => *m,
        }
    }

    /// For `V` and `L`: whether `x^k` is in the module. For `W`: whether `x^k`
    /// is a basis monomial (its coset is nonzero).
    pub fn contains(&self, k: &Exponent) -> bool {
        match self {
            ModuleId::V { alpha, m, set } => in_v(k, alpha, *m, *set),
            ModuleId::L { alpha, m, level } => in_l(k, alpha, *m, *level),
            ModuleId::W { alpha, m, set } => in_w_basis(k, alpha, *m, *set),
        }
    }
}

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleId::V { alpha, m, set } => write!(f, "V^{alpha}({m},{set})"),
            ModuleId::L { alpha, m, level } => write!(f, "L^{alpha}({m},{level})"),
            ModuleId::W { alpha, m, set } => write!(f, "W^{alpha}({m},{set})"),
        }
    }
}

impl fmt::Debug for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ModuleIdJson {
    kind: String,
    alpha: AlphaParam,
    m: i64,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    set: Option<IndexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<i64>,
}

impl Serialize for ModuleId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw = match self {
            ModuleId::V { alpha, m, set } => {
                ModuleIdJson { kind: "V".into(), alpha: alpha.clone(), m: *m, set: Some(*set), j: None }
            }
            ModuleId::L { alpha, m, level } => {
                ModuleIdJson { kind: "L".into(), alpha: alpha.clone(), m: *m, set: None, j: Some(*level) }
            }
            ModuleId::W { alpha, m, set } => {
                ModuleIdJson { kind: "W".into(), alpha: alpha.clone(), m: *m, set: Some(*set), j: None }
            }
        };
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuleId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ModuleIdJson::deserialize(d)?;
        let built = match (raw.kind.as_str(), raw.set, raw.j) {
            ("V", Some(set), None) => ModuleId::v(&raw.alpha, raw.m, set),
            ("W", Some(set), None) => ModuleId::w(&raw.alpha, raw.m, set),
            ("L", None, Some(j)) => ModuleId::l(&raw.alpha, raw.m, j),
            (kind, _, _) => return Err(D::Error::custom(format!("module kind `{kind}` needs `J` (V, W) or `j` (L)"))),
        };
        built.map_err(D::Error::custom)
    }
}

pub(crate) fn in_v(k: &Exponent, alpha: &AlphaParam, m: i64, set: IndexSet) -> bool {
    k.degree() == m && k.neg_support().intersection(alpha.zero_set()).is_subset(set)
}

pub(crate) fn in_l(k: &Exponent, alpha: &AlphaParam, m: i64, level: i64) -> bool {
    level >= 0 && k.degree() == m && k.neg_support().intersection(alpha.zero_set()).len() as i64 <= level
}

pub(crate) fn in_w_basis(k: &Exponent, alpha: &AlphaParam, m: i64, set: IndexSet) -> bool {
    k.degree() == m && k.neg_support().intersection(alpha.zero_set()) == set
}

/// Whether `x^k` lies in `V^alpha(m, J)`.
pub fn member_v(k: &Exponent, alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<bool> {
    check_same_dim(alpha.n(), k.n())?;
    check_subset(set, alpha)?;
    Ok(in_v(k, alpha, m, set))
}

/// Whether `x^k` lies in `L^alpha(m, j)`.
pub fn member_l(k: &Exponent, alpha: &AlphaParam, m: i64, level: i64) -> Result<bool> {
    check_same_dim(alpha.n(), k.n())?;
    check_level(level, alpha)?;
    Ok(in_l(k, alpha, m, level))
}

/// Which clause of the cyclic-generator classification applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorCase {
    /// `alpha != 0`: generated by `x_{J,t}`, `t` outside `I_alpha`.
    NonzeroAlpha,
    /// `alpha = 0`, `m >= 0`, `j <= n - 1`: generated by `x_{J,t}`.
    NonnegCyclic,
    /// `alpha = 0`, `m >= 0`, `j = n`: collapses onto `L(m, n - 1)`.
    NonnegCollapse,
    NegSmallZero,
    NegSmallSingleStack,
    NegSmallSpread,
    NegSmallCollapse,
    NegLargeZero,
    NegLargeSingleStack,
}

impl GeneratorCase {
    pub fn label(self) -> &'static str {
        match self {
            GeneratorCase::NonzeroAlpha => "Thm4.2",
            GeneratorCase::NonnegCyclic => "Thm4.3-1",
            GeneratorCase::NonnegCollapse => "Thm4.3-2",
            GeneratorCase::NegSmallZero => "Thm4.4-1a",
            GeneratorCase::NegSmallSingleStack => "Thm4.4-1b",
            GeneratorCase::NegSmallSpread => "Thm4.4-1c",
            GeneratorCase::NegSmallCollapse => "Thm4.4-1d",
            GeneratorCase::NegLargeZero => "Thm4.4-2a",
            GeneratorCase::NegLargeSingleStack => "Thm4.4-2b",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        use GeneratorCase::*;
        [
            NonzeroAlpha,
            NonnegCyclic,
            NonnegCollapse,
            NegSmallZero,
            NegSmallSingleStack,
            NegSmallSpread,
            NegSmallCollapse,
            NegLargeZero,
            NegLargeSingleStack,
        ]
        .into_iter()
        .find(|c| c.label() == label)
    }
}

impl fmt::Display for GeneratorCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for GeneratorCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for GeneratorCase {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GeneratorCase::from_label(&s).ok_or_else(|| serde::de::Error::custom(format!("unknown case label `{s}`")))
    }
}

/// Outcome of [`generator_of_v`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorResult {
    Generator { exponent: Exponent, case: GeneratorCase },
    ZeroModule { case: GeneratorCase },
    EqualsModule { module: ModuleId, case: GeneratorCase },
}

impl GeneratorResult {
    pub fn case(&self) -> GeneratorCase {
        match self {
            GeneratorResult::Generator { case, .. }
            | GeneratorResult::ZeroModule { case }
            | GeneratorResult::EqualsModule { case, .. } => *case,
        }
    }

    pub fn exponent(&self) -> Option<&Exponent> {
        match self {
            GeneratorResult::Generator { exponent, .. } => Some(exponent),
            _ => None,
        }
    }
}

/// `x_{l_1}^-1 ... x_{l_j}^-1 x_t^(m+j)`.
fn spread_generator(n: usize, m: i64, set: IndexSet, t: usize) -> Exponent {
    let mut v = vec![0i64; n];
    for l in set.iter() {
        v[l - 1] = -1;
    }
    v[t - 1] = m + set.len() as i64;
    Exponent::new(v)
}

/// `x_{l_1}^-1 ... x_{l_(j-1)}^-1 x_{l_j}^(m+j-1)` with `l_j` the largest index.
fn stacked_generator(n: usize, m: i64, set: IndexSet) -> Exponent {
    let mut v = vec![0i64; n];
    let last = set.max_index();
    for l in set.iter() {
        v[l - 1] = -1;
    }
    v[last - 1] = m + set.len() as i64 - 1;
    Exponent::new(v)
}

/// Canonical cyclic generator of `V^alpha(m, J)`, or the collapse that replaces it.
///
/// Where a choice of `t` is open, the smallest admissible index is used.
pub fn generator_of_v(alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<GeneratorResult> {
    check_subset(set, alpha)?;
    let n = alpha.n();
    let j = set.len();
    if !alpha.is_zero() {
        let t = alpha.zero_set().first_missing(n).expect("alpha != 0 has a nonzero entry");
        return Ok(GeneratorResult::Generator { exponent: spread_generator(n, m, set, t), case: GeneratorCase::NonzeroAlpha });
    }
    let collapse = |case| -> Result<GeneratorResult> {
        Ok(GeneratorResult::EqualsModule { module: ModuleId::l(alpha, m, n as i64 - 1)?, case })
    };
    if m >= 0 {
        if j < n {
            let t = set.first_missing(n).expect("j < n");
            return Ok(GeneratorResult::Generator { exponent: spread_generator(n, m, set, t), case: GeneratorCase::NonnegCyclic });
        }
        return collapse(GeneratorCase::NonnegCollapse);
    }
    let depth = (-m) as usize;
    if depth < n {
        if j == 0 {
            Ok(GeneratorResult::ZeroModule { case: GeneratorCase::NegSmallZero })
        } else if j <= depth {
            Ok(GeneratorResult::Generator { exponent: stacked_generator(n, m, set), case: GeneratorCase::NegSmallSingleStack })
        } else if j < n {
            let t = set.first_missing(n).expect("j < n");
            Ok(GeneratorResult::Generator { exponent: spread_generator(n, m, set, t), case: GeneratorCase::NegSmallSpread })
        } else {
            collapse(GeneratorCase::NegSmallCollapse)
        }
    } else if j == 0 {
        Ok(GeneratorResult::ZeroModule { case: GeneratorCase::NegLargeZero })
    } else {
        Ok(GeneratorResult::Generator { exponent: stacked_generator(n, m, set), case: GeneratorCase::NegLargeSingleStack })
    }
}

/// Whether `x^k` alone generates `V^alpha(m, J)`: it must be a member with
/// `k_neg ∩ I_alpha = J` exactly.
pub fn is_generator(k: &Exponent, alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<bool> {
    check_same_dim(alpha.n(), k.n())?;
    match generator_of_v(alpha, m, set)? {
        GeneratorResult::Generator { .. } => Ok(in_w_basis(k, alpha, m, set)),
        other => Err(Error::UndefinedGenerator(format!(
            "V^{alpha}({m},{set}) is not cyclic on a single monomial ({})",
            other.case()
        ))),
    }
}

/// Canonical representative of `f + L(m, j-1)` in `L(m, j) / L(m, j-1)`:
/// drops every term lying in the lower layer.
pub fn reduce_mod_lower(f: &LaurentPoly, alpha: &AlphaParam, m: i64, level: i64) -> Result<LaurentPoly> {
    check_same_dim(alpha.n(), f.n())?;
    check_level(level, alpha)?;
    if let Some(bad) = f.exponents().find(|k| !in_l(k, alpha, m, level)) {
        return Err(Error::NotAMember { exps: bad.to_string(), module: format!("L^{alpha}({m},{level})") });
    }
    Ok(f.filter_terms(|k| !in_l(k, alpha, m, level - 1)))
}

/// Window slice of the monomial basis of `W^alpha(m, J)`: exponents of degree `m`,
/// entries bounded by `B` in absolute value, with `k_neg ∩ I_alpha = J`.
pub fn w_basis_window(alpha: &AlphaParam, m: i64, set: IndexSet, bound: i64) -> Result<Vec<Exponent>> {
    check_subset(set, alpha)?;
    let window = Window::new(alpha.n(), m, bound)?;
    Ok(window.points_with_signs(set, alpha.zero_set().difference(set)))
}

/// Which highest-weight pattern a certificate instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HwPattern {
    /// `alpha` supported at a single index `l`, `J = {1..l-1}`.
    #[serde(rename = "Thm6.3-1")]
    TwistedPrefix,
    /// `alpha = 0`, `J = {1..l-1}`, `m + l - 1 >= 0`.
    #[serde(rename = "Thm6.3-2")]
    UntwistedNonneg,
    /// `alpha = 0`, `J = {1..l}`, `m + l - 1 < 0`.
    #[serde(rename = "Thm6.3-3")]
    UntwistedNeg,
}

impl HwPattern {
    pub fn label(self) -> &'static str {
        match self {
            HwPattern::TwistedPrefix => "Thm6.3-1",
            HwPattern::UntwistedNonneg => "Thm6.3-2",
            HwPattern::UntwistedNeg => "Thm6.3-3",
        }
    }
}

/// A highest weight vector `x^k + L(m, j-1)` of `W(m, J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwCertificate {
    pub module: ModuleId,
    pub pattern: HwPattern,
    pub ell: usize,
    pub vector: Exponent,
    pub weight: Weight,
    pub lowered_into: ModuleId,
}

/// `x_1^-1 ... x_(l-1)^-1 x_l^(m+l-1)`.
fn hw_vector(n: usize, m: i64, ell: usize) -> Exponent {
    let mut v = vec![0i64; n];
    for slot in v.iter_mut().take(ell - 1) {
        *slot = -1;
    }
    v[ell - 1] = m + ell as i64 - 1;
    Exponent::new(v)
}

fn is_prefix(set: IndexSet) -> bool {
    set == IndexSet::prefix(set.len())
}

/// Highest weight certificate for `W^alpha(m, J)` when `(alpha, m, J)` matches one
/// of the three known patterns; `None` otherwise.
pub fn classify_hw(alpha: &AlphaParam, m: i64, set: IndexSet) -> Option<HwCertificate> {
    let n = alpha.n();
    if set.max_index() > n || !set.is_subset(alpha.zero_set()) || !is_prefix(set) {
        return None;
    }
    let p = set.len();
    let (pattern, ell) = if let Some(ell) = alpha.single_support() {
        if p + 1 != ell {
            return None;
        }
        (HwPattern::TwistedPrefix, ell)
    } else if alpha.is_zero() {
        if p < n && m + p as i64 >= 0 {
            (HwPattern::UntwistedNonneg, p + 1)
        } else if p >= 1 && m + p as i64 - 1 < 0 {
            (HwPattern::UntwistedNeg, p)
        } else {
            return None;
        }
    } else {
        return None;
    };
    let vector = hw_vector(n, m, ell);
    let weight = weight_of(&vector, alpha);
    Some(HwCertificate {
        module: ModuleId::W { alpha: alpha.clone(), m, set },
        pattern,
        ell,
        vector,
        weight,
        lowered_into: ModuleId::L { alpha: alpha.clone(), m, level: p as i64 - 1 },
    })
}

/// Re-checks a certificate from scratch: the vector is a basis monomial of the
/// named `W`, carries the stated weight, and every raising operator `E_ab`
/// (`a < b`) sends it into the lower layer `L(m, j-1)`.
pub fn verify_hw(cert: &HwCertificate, alpha: &AlphaParam) -> bool {
    let ModuleId::W { alpha: w_alpha, m, set } = &cert.module else {
        return false;
    };
    let ModuleId::L { alpha: l_alpha, m: l_m, level } = &cert.lowered_into else {
        return false;
    };
    if w_alpha != alpha || l_alpha != alpha || l_m != m || *level != set.len() as i64 - 1 {
        return false;
    }
    if cert.vector.n() != alpha.n() || !in_w_basis(&cert.vector, alpha, *m, *set) {
        return false;
    }
    if weight_of(&cert.vector, alpha) != cert.weight {
        return false;
    }
    MatrixUnit::raising(alpha.n()).all(|u| match act_on_monomial(u, &cert.vector, alpha) {
        None => true,
        Some((q, _)) => in_l(&q, alpha, *m, *level),
    })
}

/// Dimension of `W^alpha(m, J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    Finite(#[serde(with = "biguint_str")] BigUint),
    Infinite,
}

impl Dimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, Dimension::Finite(_))
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

mod biguint_str {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

pub fn binomial(top: u64, bottom: u64) -> BigUint {
    if bottom > top {
        return BigUint::zero();
    }
    let bottom = bottom.min(top - bottom);
    let mut acc = BigUint::one();
    for i in 0..bottom {
        acc = acc * BigUint::from(top - i) / BigUint::from(i + 1);
    }
    acc
}

/// Counts the monomial basis of `W^alpha(m, J)`.
pub fn dimension_count(alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<Dimension> {
    check_subset(set, alpha)?;
    let n = alpha.n();
    if !alpha.is_zero() {
        // Only n = 1 leaves no free direction once the degree is fixed.
        return Ok(if n == 1 { Dimension::Finite(BigUint::one()) } else { Dimension::Infinite });
    }
    let nn = n as i64;
    if set.is_empty() {
        return Ok(Dimension::Finite(if m >= 0 { binomial((m + nn - 1) as u64, (nn - 1) as u64) } else { BigUint::zero() }));
    }
    if set.len() == n {
        return Ok(Dimension::Finite(if m <= -nn { binomial((-m - 1) as u64, (nn - 1) as u64) } else { BigUint::zero() }));
    }
    Ok(Dimension::Infinite)
}

/// Whether `W^alpha(m, J)` is nonzero and finite dimensional.
pub fn is_finite_dimensional(alpha: &AlphaParam, m: i64, set: IndexSet) -> bool {
    matches!(dimension_count(alpha, m, set), Ok(Dimension::Finite(d)) if !d.is_zero())
}

/// Compares the monomial count of `W^0(m, ∅)` with the `m + 1` figure quoted for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionNote {
    pub stated: u64,
    #[serde(with = "biguint_str")]
    pub counted: BigUint,
    pub agrees: bool,
}

fn dimension_note(alpha: &AlphaParam, m: i64, set: IndexSet, dim: &Dimension) -> Option<DimensionNote> {
    if !alpha.is_zero() || !set.is_empty() || m < 0 {
        return None;
    }
    let Dimension::Finite(counted) = dim else { return None };
    let stated = m as u64 + 1;
    Some(DimensionNote { stated, counted: counted.clone(), agrees: *counted == BigUint::from(stated) })
}

/// Everything the library can say about `V^alpha(m, J)` and `W^alpha(m, J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub module: ModuleId,
    pub case: GeneratorCase,
    pub generator: GeneratorResult,
    pub w_dimension: Dimension,
    pub finite_dimensional: bool,
    pub highest_weight: Option<HwCertificate>,
    pub dimension_note: Option<DimensionNote>,
}

pub fn classify(alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<Classification> {
    let generator = generator_of_v(alpha, m, set)?;
    let w_dimension = dimension_count(alpha, m, set)?;
    let finite_dimensional = matches!(&w_dimension, Dimension::Finite(d) if !d.is_zero());
    let dimension_note = dimension_note(alpha, m, set, &w_dimension);
    Ok(Classification {
        module: ModuleId::v(alpha, m, set)?,
        case: generator.case(),
        generator,
        w_dimension,
        finite_dimensional,
        highest_weight: classify_hw(alpha, m, set),
        dimension_note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    fn alpha(list: &str) -> AlphaParam {
        AlphaParam::parse_normalized(list).unwrap().0
    }

    fn set(n: usize, idx: &[usize]) -> IndexSet {
        IndexSet::from_indices(n, idx.iter().copied()).unwrap()
    }

    fn ex<const N: usize>(v: [i64; N]) -> Exponent {
        Exponent::from(v)
    }

    #[test]
    fn member_v_examples() {
        let a = alpha("0,1/2,0,0");
        assert!(member_v(&ex([-2, 5, 3, -4]), &a, 2, set(4, &[1, 4])).unwrap());
        assert!(member_v(&ex([2, 0, 0, 0]), &a, 2, set(4, &[3])).unwrap());
        assert!(!member_v(&ex([1, 1, -3, 3]), &a, 2, set(4, &[1, 4])).unwrap());
        assert!(matches!(member_v(&ex([2, 0, 0, 0]), &a, 2, set(4, &[2])), Err(Error::NotSubsetOfZeroSet { .. })));
    }

    #[test]
    fn member_l_examples() {
        let a = alpha("0,1/2,0,0");
        assert!(member_l(&ex([-1, 2, -3, 4]), &a, 2, 2).unwrap());
        assert!(member_l(&ex([-1, 9, -3, -3]), &a, 2, 3).unwrap());
        assert!(!member_l(&ex([-1, -1, -1, 5]), &AlphaParam::zero(4), 2, 2).unwrap());
        assert!(matches!(member_l(&ex([2, 0, 0, 0]), &a, 2, 4), Err(Error::LevelOutOfRange { .. })));
        assert!(matches!(member_l(&ex([2, 0, 0, 0]), &a, 2, -1), Err(Error::LevelOutOfRange { .. })));
    }

    #[test]
    fn generator_examples() {
        let a3 = AlphaParam::zero(3);
        assert_eq!(
            generator_of_v(&a3, 2, set(3, &[1])).unwrap(),
            GeneratorResult::Generator { exponent: ex([-1, 3, 0]), case: GeneratorCase::NonnegCyclic }
        );
        assert_eq!(
            generator_of_v(&a3, -2, IndexSet::EMPTY).unwrap(),
            GeneratorResult::ZeroModule { case: GeneratorCase::NegSmallZero }
        );
        assert_eq!(
            generator_of_v(&AlphaParam::zero(2), -3, set(2, &[1, 2])).unwrap(),
            GeneratorResult::Generator { exponent: ex([-1, -2]), case: GeneratorCase::NegLargeSingleStack }
        );
        assert_eq!(
            generator_of_v(&a3, -2, set(3, &[2])).unwrap(),
            GeneratorResult::Generator { exponent: ex([0, -2, 0]), case: GeneratorCase::NegSmallSingleStack }
        );
    }

    #[test]
    fn generator_remaining_cases() {
        let a3 = AlphaParam::zero(3);
        // 1c: degree -1, J = {1,3}: x1^-1 x3^-1 x2^1.
        assert_eq!(
            generator_of_v(&a3, -1, set(3, &[1, 3])).unwrap(),
            GeneratorResult::Generator { exponent: ex([-1, 1, -1]), case: GeneratorCase::NegSmallSpread }
        );
        // 1d and 4.3(2) collapse onto L(m, n-1).
        for m in [-2, 0, 3] {
            let r = generator_of_v(&a3, m, IndexSet::full(3)).unwrap();
            assert_eq!(r, GeneratorResult::EqualsModule { module: ModuleId::l(&a3, m, 2).unwrap(), case: r.case() });
        }
        assert_eq!(generator_of_v(&a3, -3, IndexSet::EMPTY).unwrap().case(), GeneratorCase::NegLargeZero);
        // alpha != 0: t is the first index outside I_alpha.
        let a = alpha("0,1/2,0");
        assert_eq!(
            generator_of_v(&a, -4, set(3, &[1, 3])).unwrap(),
            GeneratorResult::Generator { exponent: ex([-1, -2, -1]), case: GeneratorCase::NonzeroAlpha }
        );
        assert!(generator_of_v(&a, 0, set(3, &[2])).is_err());
    }

    #[test]
    fn is_generator_examples() {
        let a3 = AlphaParam::zero(3);
        let j1 = set(3, &[1]);
        assert!(is_generator(&ex([-1, 3, 0]), &a3, 2, j1).unwrap());
        assert!(is_generator(&ex([-2, 4, 0]), &a3, 2, j1).unwrap());
        assert!(!is_generator(&ex([0, 2, 0]), &a3, 2, j1).unwrap());
        assert!(matches!(is_generator(&ex([0, 0, -2]), &a3, -2, IndexSet::EMPTY), Err(Error::UndefinedGenerator(_))));
        assert!(matches!(is_generator(&ex([-1, -1, 2]), &a3, 0, IndexSet::full(3)), Err(Error::UndefinedGenerator(_))));
    }

    #[test]
    fn reduce_examples() {
        let a2 = AlphaParam::zero(2);
        let f = LaurentPoly::x([2, -1]).add(&LaurentPoly::x([1, 0])).unwrap().add(&LaurentPoly::x([0, 1])).unwrap();
        assert_eq!(reduce_mod_lower(&f, &a2, 1, 1).unwrap(), LaurentPoly::x([2, -1]));
        let low = LaurentPoly::x([1, 0]).add(&LaurentPoly::x([0, 1])).unwrap();
        assert!(reduce_mod_lower(&low, &a2, 1, 1).unwrap().is_zero());
        let top = LaurentPoly::x([2, -1]).add(&LaurentPoly::x([-1, 2])).unwrap();
        assert_eq!(reduce_mod_lower(&top, &a2, 1, 1).unwrap(), top);
        assert!(matches!(reduce_mod_lower(&f, &a2, 1, 0), Err(Error::NotAMember { .. })));
        assert!(matches!(reduce_mod_lower(&f, &a2, 2, 1), Err(Error::NotAMember { .. })));
    }

    #[test]
    fn w_basis_examples() {
        let a2 = AlphaParam::zero(2);
        assert_eq!(
            w_basis_window(&a2, 3, IndexSet::EMPTY, 3).unwrap(),
            vec![ex([0, 3]), ex([1, 2]), ex([2, 1]), ex([3, 0])]
        );
        assert!(w_basis_window(&a2, 0, IndexSet::full(2), 4).unwrap().is_empty());
        assert_eq!(w_basis_window(&a2, -3, IndexSet::full(2), 4).unwrap(), vec![ex([-2, -1]), ex([-1, -2])]);
    }

    #[test]
    fn hw_examples() {
        let a2 = AlphaParam::zero(2);
        let c = classify_hw(&a2, 3, IndexSet::EMPTY).unwrap();
        assert_eq!(c.vector, ex([3, 0]));
        assert_eq!(c.weight, weight_of(&ex([3, 0]), &a2));
        assert_eq!(c.pattern, HwPattern::UntwistedNonneg);
        assert!(verify_hw(&c, &a2));

        let c = classify_hw(&a2, -3, IndexSet::full(2)).unwrap();
        assert_eq!(c.vector, ex([-1, -2]));
        assert_eq!(c.pattern, HwPattern::UntwistedNeg);
        assert!(verify_hw(&c, &a2));

        let cval: GaussianRational = "1/3+2i".parse().unwrap();
        let a = AlphaParam::new(vec![GaussianRational::zero(), cval.clone()]).unwrap();
        let c = classify_hw(&a, 0, set(2, &[1])).unwrap();
        assert_eq!(c.vector, ex([-1, 1]));
        assert_eq!(c.weight.entries(), &[GaussianRational::from(-1), &GaussianRational::from(1) + &cval]);
        assert!(verify_hw(&c, &a));
    }

    #[test]
    fn hw_rejects_corruption() {
        let a2 = AlphaParam::zero(2);
        let good = classify_hw(&a2, -3, IndexSet::full(2)).unwrap();
        let mut bad = good.clone();
        bad.vector = ex([1, -4]);
        assert!(!verify_hw(&bad, &a2));
        let mut bad = good.clone();
        bad.weight = weight_of(&ex([-2, -1]), &a2);
        assert!(!verify_hw(&bad, &a2));
        // (-2,-1) is a basis monomial, but E_12 maps it to -x1^-1 x2^-2, still at level 2.
        let mut bad = good;
        bad.vector = ex([-2, -1]);
        bad.weight = weight_of(&bad.vector, &a2);
        assert!(!verify_hw(&bad, &a2));
    }

    #[test]
    fn hw_non_patterns() {
        let a3 = AlphaParam::zero(3);
        assert!(classify_hw(&a3, 2, set(3, &[2])).is_none());
        assert!(classify_hw(&a3, 2, IndexSet::full(3)).is_none());
        assert!(classify_hw(&alpha("1/2,1/2,0"), 1, IndexSet::EMPTY).is_none());
        // J = {1}, m = 5: pattern 2 with l = 2; pattern 3 would need m < 0.
        assert_eq!(classify_hw(&a3, 5, set(3, &[1])).unwrap().vector, ex([-1, 6, 0]));
    }

    #[test]
    fn finite_dimension_examples() {
        let a0 = |n| AlphaParam::zero(n);
        assert!(is_finite_dimensional(&a0(4), 5, IndexSet::EMPTY));
        assert!(is_finite_dimensional(&a0(3), -3, IndexSet::full(3)));
        assert!(!is_finite_dimensional(&a0(2), -1, set(2, &[1])));
        assert!(!is_finite_dimensional(&a0(3), -2, IndexSet::full(3)));
        assert!(!is_finite_dimensional(&alpha("1/2,0"), 3, IndexSet::EMPTY));
    }

    #[test]
    fn dimension_examples() {
        let a0 = |n| AlphaParam::zero(n);
        assert_eq!(dimension_count(&a0(2), 3, IndexSet::EMPTY).unwrap(), Dimension::Finite(4u32.into()));
        assert_eq!(dimension_count(&a0(3), 2, IndexSet::EMPTY).unwrap(), Dimension::Finite(6u32.into()));
        assert_eq!(dimension_count(&a0(2), -3, IndexSet::full(2)).unwrap(), Dimension::Finite(2u32.into()));
        assert_eq!(dimension_count(&a0(2), 1, set(2, &[2])).unwrap(), Dimension::Infinite);
        assert_eq!(dimension_count(&a0(3), -1, IndexSet::EMPTY).unwrap(), Dimension::Finite(0u32.into()));
    }

    #[test]
    fn classification_flags_dimension_discrepancy() {
        let c = classify(&AlphaParam::zero(2), 3, IndexSet::EMPTY).unwrap();
        assert!(c.dimension_note.unwrap().agrees);
        let c = classify(&AlphaParam::zero(3), 2, IndexSet::EMPTY).unwrap();
        let note = c.dimension_note.unwrap();
        assert_eq!((note.stated, note.agrees), (3, false));
        assert_eq!(note.counted, BigUint::from(6u32));
        let c = classify(&AlphaParam::zero(2), -3, IndexSet::full(2)).unwrap();
        assert_eq!(c.case.label(), "Thm4.4-2b");
        assert!(c.finite_dimensional);
        assert!(c.dimension_note.is_none());
    }

    #[test]
    fn module_id_json() {
        let a = alpha("0,1/2,0,0");
        let v = ModuleId::v(&a, 2, set(4, &[1, 4])).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["kind"], "V");
        assert_eq!(json["J"], serde_json::json!([1, 4]));
        let back: ModuleId = serde_json::from_value(json).unwrap();
        assert_eq!(back, v);
        let l = ModuleId::l(&a, 2, 1).unwrap();
        let back: ModuleId = serde_json::from_str(&serde_json::to_string(&l).unwrap()).unwrap();
        assert_eq!(back, l);
        let bad = r#"{"kind":"V","alpha":["0","1/2"],"m":1,"J":[2]}"#;
        assert!(serde_json::from_str::<ModuleId>(bad).is_err());
        let bad = r#"{"kind":"L","alpha":["0","1/2"],"m":1,"J":[1]}"#;
        assert!(serde_json::from_str::<ModuleId>(bad).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }
}
