//! The `Z x P_n` filtration of the untwisted Laurent ring and its graded pieces.
//!
//! Membership in `L^{<=(m,J)}` and `L^{<(m,J)}` is decided in closed form from
//! the degree and negative support of a monomial.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::laurent::{check_dim, AlphaParam, Exponent, IndexSet};
use crate::lattice::w_basis_window;
use crate::window::{enumerate_box_slice, Window};

/// An element `(m, J)` of the monoid `Z x P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PosetIndex {
    pub m: i64,
    #[serde(rename = "J")]
    pub set: IndexSet,
}

impl PosetIndex {
    pub const IDENTITY: PosetIndex = PosetIndex { m: 0, set: IndexSet::EMPTY };

    pub fn new(m: i64, set: IndexSet) -> Self {
        PosetIndex { m, set }
    }

    /// The smallest index whose filtration piece contains `x^k`.
    pub fn of(k: &Exponent) -> Self {
        PosetIndex { m: k.degree(), set: k.neg_support() }
    }
}

impl fmt::Display for PosetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.set)
    }
}

pub fn poset_leq(x: PosetIndex, y: PosetIndex) -> bool {
    x.m <= y.m && x.set.is_subset(y.set)
}

pub fn poset_lt(x: PosetIndex, y: PosetIndex) -> bool {
    poset_leq(x, y) && x != y
}

pub fn monoid_mul(x: PosetIndex, y: PosetIndex) -> PosetIndex {
    PosetIndex { m: x.m + y.m, set: x.set.union(y.set) }
}

/// `x^k ∈ L^{<=(m,J)}`.
pub fn member_leq(k: &Exponent, idx: PosetIndex) -> bool {
    k.degree() <= idx.m && k.neg_support().is_subset(idx.set)
}

/// `x^k ∈ L^{<(m,J)}`.
pub fn member_lt(k: &Exponent, idx: PosetIndex) -> bool {
    let deg = k.degree();
    let neg = k.neg_support();
    (deg < idx.m && neg.is_subset(idx.set)) || (deg == idx.m && neg.is_proper_subset(idx.set))
}

/// Window monomials of `L^{<=idx} / L^{<idx}`.
pub fn graded_basis(n: usize, idx: PosetIndex, bound: i64) -> Result<Vec<Exponent>> {
    let w = Window::new(n, idx.m, bound)?;
    Ok(w.points().into_iter().filter(|k| member_leq(k, idx) && !member_lt(k, idx)).collect())
}

/// Whether the graded piece at `idx` has the same window basis as `W^0(m, J)`.
pub fn graded_iso_check(n: usize, idx: PosetIndex, bound: i64) -> Result<bool> {
    let graded = graded_basis(n, idx, bound)?;
    let w = w_basis_window(&AlphaParam::zero(n), idx.m, idx.set, bound)?;
    Ok(graded == w)
}

/// Parameters of an axiom check: all `k` with `|k[i]| <= B` and degree in `m_range`,
/// and all indices `(m, J)` with `m` in `m_range`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationConfig {
    pub n: usize,
    pub m_range: [i64; 2],
    #[serde(rename = "B")]
    pub bound: i64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFlags {
    pub unit: bool,
    pub monotone: bool,
    pub product: bool,
    pub exhaustive: bool,
    pub strict_product: bool,
    /// The strict rule restricted to index pairs with disjoint `J` parts.
    #[serde(default)]
    pub strict_product_disjoint: bool,
}

impl AxiomFlags {
    /// Unit, monotone, product and exhaustive.
    pub fn filtration(&self) -> bool {
        self.unit && self.monotone && self.product && self.exhaustive
    }

    pub fn all(&self) -> bool {
        self.unit && self.monotone && self.product && self.exhaustive && self.strict_product
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub axiom: String,
    pub k: Exponent,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k2: Option<Exponent>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<PosetIndex>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub y: Option<PosetIndex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    pub config: FiltrationConfig,
    pub axioms: AxiomFlags,
    pub counterexamples: Vec<Counterexample>,
    /// `(m, J)` pairs whose graded window basis differs from the `W` basis.
    pub graded_iso_failures: Vec<PosetIndex>,
}

impl FiltrationReport {
    /// Filtration axioms, the disjoint strict rule and the graded isomorphism.
    /// The unrestricted strict rule is reported but not required.
    pub fn passed(&self) -> bool {
        self.axioms.filtration() && self.axioms.strict_product_disjoint && self.graded_iso_failures.is_empty()
    }
}

fn window_points(config: &FiltrationConfig) -> Vec<Exponent> {
    let n = config.n;
    let b = config.bound;
    let mut out = Vec::new();
    for m in config.m_range[0]..=config.m_range[1] {
        enumerate_box_slice(&vec![-b; n], &vec![b; n], m, |k| out.push(Exponent::new(k.to_vec())));
    }
    out
}

fn indices(config: &FiltrationConfig) -> Vec<PosetIndex> {
    let full = IndexSet::full(config.n);
    (config.m_range[0]..=config.m_range[1])
        .flat_map(|m| full.subsets().map(move |set| PosetIndex { m, set }))
        .collect()
}

/// Checks the filtration axioms on monomials of a finite window.
///
/// Products are checked with the left factor at its minimal index
/// [`PosetIndex::of`], which suffices given monotonicity (also checked) and
/// monotonicity of [`monoid_mul`]. The right factor ranges over every index in
/// range for the strict rule.
///
/// The strict rule `L^{<=x} L^{<y} ⊆ L^{<x*y}` fails in general because the
/// union in `x*y` can absorb the strictness of `y`: `x1^-1 ∈ L^{<=(-1,{1})}`
/// and `x2^-1 ∈ L^{<(-1,{1,2})}`, but `x1^-1 x2^-1` has index exactly
/// `(-2,{1,2})`. It does hold when the `J` parts of `x` and `y` are disjoint;
/// both versions are reported.
pub fn check_filtration_axioms(config: &FiltrationConfig) -> Result<FiltrationReport> {
    let n = config.n;
    check_dim(n)?;
    Window::new(n, 0, config.bound)?;
    let points = window_points(config);
    let idx = indices(config);
    let mut counterexamples = Vec::new();
    let mut flags = AxiomFlags { unit: member_leq(&Exponent::zero(n), PosetIndex::IDENTITY), ..Default::default() };
    if !flags.unit {
        counterexamples.push(Counterexample { axiom: "unit".into(), k: Exponent::zero(n), k2: None, x: None, y: None });
    }

    let monotone_fail = points.par_iter().find_map_first(|k| {
        for &x in &idx {
            if !member_leq(k, x) {
                continue;
            }
            for &y in &idx {
                if poset_leq(x, y) && !member_leq(k, y) {
                    return Some(Counterexample { axiom: "monotone".into(), k: k.clone(), k2: None, x: Some(x), y: Some(y) });
                }
            }
        }
        None
    });
    let mul_monotone_fail = idx.par_iter().find_map_first(|&x| {
        for &x2 in &idx {
            if !poset_leq(x, x2) {
                continue;
            }
            for &y in &idx {
                if !poset_leq(monoid_mul(x, y), monoid_mul(x2, y)) {
                    return Some(Counterexample {
                        axiom: "monotone".into(),
                        k: Exponent::zero(n),
                        k2: None,
                        x: Some(x),
                        y: Some(x2),
                    });
                }
            }
        }
        None
    });
    flags.monotone = monotone_fail.is_none() && mul_monotone_fail.is_none();
    counterexamples.extend(monotone_fail);
    counterexamples.extend(mul_monotone_fail);

    let product_fail = points.par_iter().find_map_first(|k| {
        let x = PosetIndex::of(k);
        points.iter().find_map(|k2| {
            let y = PosetIndex::of(k2);
            let sum = k.translated(k2);
            (!member_leq(&sum, monoid_mul(x, y))).then(|| Counterexample {
                axiom: "product".into(),
                k: k.clone(),
                k2: Some(k2.clone()),
                x: Some(x),
                y: Some(y),
            })
        })
    });
    flags.product = product_fail.is_none();
    counterexamples.extend(product_fail);

    flags.exhaustive = true;
    for k in &points {
        if !idx.iter().any(|&x| member_leq(k, x)) {
            flags.exhaustive = false;
            counterexamples.push(Counterexample { axiom: "exhaustive".into(), k: k.clone(), k2: None, x: None, y: None });
            break;
        }
    }

    let minimal: Vec<PosetIndex> = points.iter().map(PosetIndex::of).collect();
    let strict_search = |disjoint_only: bool| {
        points.par_iter().enumerate().find_map_first(|(i, k)| {
            let x = minimal[i];
            for (k2, &x2) in points.iter().zip(&minimal) {
                let sum = PosetIndex::of(&k.translated(k2));
                for &y in &idx {
                    // x^k2 ∈ L^{<y}; x itself may be enlarged only within J-disjoint pairs.
                    if !poset_lt(x2, y) || (disjoint_only && !x.set.intersection(y.set).is_empty()) {
                        continue;
                    }
                    if !poset_lt(sum, monoid_mul(x, y)) || !poset_lt(sum, monoid_mul(y, x)) {
                        return Some(Counterexample {
                            axiom: if disjoint_only { "strict_product_disjoint" } else { "strict_product" }.into(),
                            k: k.clone(),
                            k2: Some(k2.clone()),
                            x: Some(x),
                            y: Some(y),
                        });
                    }
                }
            }
            None
        })
    };
    let strict_fail = strict_search(false);
    let disjoint_fail = strict_search(true);
    flags.strict_product = strict_fail.is_none();
    flags.strict_product_disjoint = disjoint_fail.is_none();
    counterexamples.extend(strict_fail);
    counterexamples.extend(disjoint_fail);

    let mut graded_iso_failures = Vec::new();
    for &x in &idx {
        if !graded_iso_check(n, x, config.bound)? {
            graded_iso_failures.push(x);
        }
    }

    Ok(FiltrationReport { config: config.clone(), axioms: flags, counterexamples, graded_iso_failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(n, ix.iter().copied()).unwrap()
    }

    fn idx(m: i64, ix: &[usize]) -> PosetIndex {
        PosetIndex::new(m, set(4, ix))
    }

    #[test]
    fn poset_and_monoid() {
        assert!(poset_leq(idx(0, &[]), idx(1, &[2])));
        assert!(!poset_leq(idx(1, &[1]), idx(1, &[2])));
        assert!(poset_leq(idx(1, &[1]), idx(1, &[1])));
        assert_eq!(monoid_mul(idx(1, &[1]), idx(2, &[2])), idx(3, &[1, 2]));
        assert_eq!(monoid_mul(idx(-2, &[1]), PosetIndex::IDENTITY), idx(-2, &[1]));
        assert_eq!(monoid_mul(idx(-2, &[1]), idx(2, &[1])), idx(0, &[1]));
    }

    #[test]
    fn membership_examples() {
        assert!(member_leq(&Exponent::zero(3), PosetIndex::IDENTITY));
        assert!(member_leq(&Exponent::from([3, -2]), idx(1, &[2])));
        assert!(!member_leq(&Exponent::from([-1, 3]), idx(1, &[2])));
        assert!(member_lt(&Exponent::from([0, 1]), idx(1, &[2])));
        assert!(!member_lt(&Exponent::from([3, -2]), idx(1, &[2])));
        assert!(member_lt(&Exponent::from([0, 0]), idx(1, &[2])));
        assert!(member_leq(&Exponent::from([1, -1]), idx(1, &[2])));
        assert!(member_lt(&Exponent::from([1, -1]), monoid_mul(idx(1, &[]), idx(0, &[2]))));
    }

    #[test]
    fn graded_basis_examples() {
        assert_eq!(
            graded_basis(2, idx(1, &[2]), 3).unwrap(),
            vec![Exponent::from([2, -1]), Exponent::from([3, -2])]
        );
        assert_eq!(graded_basis(2, idx(0, &[]), 2).unwrap(), vec![Exponent::from([0, 0])]);
        assert!(graded_basis(3, idx(-1, &[]), 4).unwrap().is_empty());
        assert!(graded_iso_check(2, idx(1, &[2]), 4).unwrap());
        assert!(graded_basis(3, idx(0, &[1, 2, 3]), 4).unwrap().is_empty());
    }

    /// Truncated union of `V^0(m1, J1)` over `(m1, J1) <= idx` (or `<`), with `m1 >= -nB`.
    fn brute_leq(k: &Exponent, n: usize, bound: i64, x: PosetIndex, strict: bool) -> bool {
        let floor = -(n as i64) * bound;
        (floor..=x.m).any(|m1| {
            IndexSet::full(n).subsets().any(|j1| {
                let y = PosetIndex::new(m1, j1);
                let below = if strict { poset_lt(y, x) } else { poset_leq(y, x) };
                below && k.degree() == m1 && k.neg_support().is_subset(j1)
            })
        })
    }

    #[test]
    fn closed_forms_match_defining_sums() {
        let n = 2;
        let b = 3;
        let config = FiltrationConfig { n, m_range: [-3, 3], bound: b };
        let points = window_points(&config);
        for x in indices(&config) {
            for k in &points {
                assert_eq!(member_leq(k, x), brute_leq(k, n, b, x, false), "{k} {x}");
                assert_eq!(member_lt(k, x), brute_leq(k, n, b, x, true), "{k} {x}");
            }
        }
    }

    #[test]
    fn axioms_hold_on_small_window() {
        let report = check_filtration_axioms(&FiltrationConfig { n: 2, m_range: [-3, 3], bound: 4 }).unwrap();
        assert!(report.axioms.filtration() && report.axioms.strict_product_disjoint, "{report:?}");
        assert!(report.graded_iso_failures.is_empty());
        let json = serde_json::to_value(&report).unwrap();
        assert!(!json["axioms"]["strict_product"].as_bool().unwrap());
        assert_eq!(json["counterexamples"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn strict_rule_counterexample() {
        let k = Exponent::from([-1, 0]);
        let k2 = Exponent::from([0, -1]);
        let x = idx(-1, &[1]);
        let y = idx(-1, &[1, 2]);
        assert!(member_leq(&k, x) && member_lt(&k2, y));
        assert!(!member_lt(&k.translated(&k2), monoid_mul(x, y)));
    }

    #[test]
    fn graded_pieces_partition_each_degree() {
        let n = 3;
        for m in -3..=3 {
            let w = Window::new(n, m, 3).unwrap();
            let mut pieces: Vec<Exponent> = IndexSet::full(n)
                .subsets()
                .flat_map(|s| graded_basis(n, PosetIndex::new(m, s), 3).unwrap())
                .collect();
            pieces.sort();
            assert_eq!(pieces, w.points());
        }
    }
}
