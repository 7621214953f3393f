//! The twisted action of `gl(n)` on Laurent polynomials.
//!
//! The matrix unit `E_ab` sends `x^k` to `(k[b] + alpha[b]) x^(k + e_a - e_b)`,
//! and acts on general polynomials by linearity. Enveloping-algebra words are
//! evaluated operationally, one unit at a time.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{check_same_dim, AlphaParam, Exponent, LaurentPoly};
use crate::scalar::GaussianRational;

/// `E_ab`, the matrix with a single one at row `a`, column `b` (1-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixUnit {
    pub a: usize,
    pub b: usize,
}

impl MatrixUnit {
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        for index in [a, b] {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        Ok(MatrixUnit { a, b })
    }

    pub fn is_diagonal(self) -> bool {
        self.a == self.b
    }

    /// Every `E_ab` with `1 <= a, b <= n`.
    pub fn all(n: usize) -> impl Iterator<Item = MatrixUnit> {
        (1..=n).flat_map(move |a| (1..=n).map(move |b| MatrixUnit { a, b }))
    }

    /// Raising operators `E_ab` with `a < b`.
    pub fn raising(n: usize) -> impl Iterator<Item = MatrixUnit> {
        Self::all(n).filter(|u| u.a < u.b)
    }
}

impl fmt::Display for MatrixUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{},{}", self.a, self.b)
    }
}

impl fmt::Debug for MatrixUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MatrixUnit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for MatrixUnit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        if a == 0 || b == 0 {
            return Err(serde::de::Error::custom("matrix unit indices are 1-based"));
        }
        Ok(MatrixUnit { a, b })
    }
}

/// Coefficient `k[b] + alpha[b]` of `E_ab` on `x^k`.
pub fn unit_coefficient(u: MatrixUnit, k: &Exponent, alpha: &AlphaParam) -> GaussianRational {
    &GaussianRational::from(k.get(u.b)) + alpha.get(u.b)
}

/// Whether `E_ab x^k` is nonzero.
///
/// With `alpha` normalized, `k[b] + alpha[b]` vanishes only when both terms do.
pub fn moves_nonzero(b: usize, k: &Exponent, alpha: &AlphaParam) -> bool {
    !(k.get(b) == 0 && alpha.zero_set().contains(b))
}

/// `E_ab x^k` as a single term, or `None` when the coefficient vanishes.
pub fn act_on_monomial(u: MatrixUnit, k: &Exponent, alpha: &AlphaParam) -> Option<(Exponent, GaussianRational)> {
    let c = unit_coefficient(u, k, alpha);
    if c.is_zero() {
        None
    } else {
        Some((k.moved(u.a, u.b), c))
    }
}

fn check_unit(u: MatrixUnit, n: usize) -> Result<()> {
    MatrixUnit::new(n, u.a, u.b).map(|_| ())
}

/// `E_ab . f` under the `alpha`-twisted action.
pub fn act_unit(u: MatrixUnit, f: &LaurentPoly, alpha: &AlphaParam) -> Result<LaurentPoly> {
    check_same_dim(alpha.n(), f.n())?;
    check_unit(u, f.n())?;
    let mut out = LaurentPoly::zero(f.n());
    for (k, c) in f.terms() {
        if let Some((q, w)) = act_on_monomial(u, k, alpha) {
            out.add_term(q, &(c * &w));
        }
    }
    Ok(out)
}

/// A scalar multiple of an ordered product of matrix units in the enveloping algebra.
///
/// `factors` are stored as written, left to right; evaluation applies the
/// rightmost factor first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UWord {
    pub prefactor: GaussianRational,
    pub factors: Vec<MatrixUnit>,
}

impl UWord {
    pub fn identity() -> Self {
        UWord { prefactor: GaussianRational::one(), factors: Vec::new() }
    }

    pub fn new(prefactor: GaussianRational, factors: Vec<MatrixUnit>) -> Self {
        UWord { prefactor, factors }
    }

    pub fn from_units(factors: Vec<MatrixUnit>) -> Self {
        UWord { prefactor: GaussianRational::one(), factors }
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty() && self.prefactor.is_one()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.prefactor);
        }
        if !self.prefactor.is_one() {
            write!(f, "({}) ", self.prefactor)?;
        }
        let parts: Vec<String> = self.factors.iter().map(|u| u.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UWord[{self}]")
    }
}

/// `w . f`: factors applied right to left, then scaled by the prefactor.
pub fn act_word(w: &UWord, f: &LaurentPoly, alpha: &AlphaParam) -> Result<LaurentPoly> {
    check_same_dim(alpha.n(), f.n())?;
    let mut current = f.clone();
    for &u in w.factors.iter().rev() {
        if current.is_zero() {
            break;
        }
        current = act_unit(u, &current, alpha)?;
    }
    Ok(current.scale(&w.prefactor))
}

/// The Cartan eigenvalues `k + alpha` of `x^k`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<GaussianRational>);

impl Weight {
    pub fn entries(&self) -> &[GaussianRational] {
        &self.0
    }

    /// `self + e_a - e_b`.
    pub fn moved(&self, a: usize, b: usize) -> Weight {
        let mut w = self.0.clone();
        w[a - 1] += &GaussianRational::one();
        w[b - 1] -= &GaussianRational::one();
        Weight(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

pub fn weight_of(k: &Exponent, alpha: &AlphaParam) -> Weight {
    Weight(k.entries().iter().zip(alpha.entries()).map(|(&e, a)| &GaussianRational::from(e) + a).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::normalize_alpha;

    fn gr(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn alpha(list: &str) -> AlphaParam {
        AlphaParam::parse_normalized(list).unwrap().0
    }

    fn e(n: usize, a: usize, b: usize) -> MatrixUnit {
        MatrixUnit::new(n, a, b).unwrap()
    }

    #[test]
    fn act_unit_examples() {
        let a0 = AlphaParam::zero(2);
        let out = act_unit(e(2, 2, 1), &LaurentPoly::x([2, -1]), &a0).unwrap();
        assert_eq!(out, LaurentPoly::monomial(Exponent::from([1, 0]), gr("2")));

        let a = alpha("1/2,i,0");
        let out = act_unit(e(3, 3, 1), &LaurentPoly::x([4, 0, 0]), &a).unwrap();
        assert_eq!(out, LaurentPoly::monomial(Exponent::from([3, 0, 1]), gr("9/2")));

        let out = act_unit(e(3, 1, 2), &LaurentPoly::x([3, 0, 2]), &AlphaParam::zero(3)).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn act_unit_rejects_bad_input() {
        let a0 = AlphaParam::zero(2);
        assert!(act_unit(MatrixUnit { a: 3, b: 1 }, &LaurentPoly::x([1, 0]), &a0).is_err());
        assert!(act_unit(e(2, 1, 2), &LaurentPoly::x([1, 0, 0]), &a0).is_err());
        assert!(MatrixUnit::new(2, 0, 1).is_err());
    }

    #[test]
    fn act_word_examples() {
        let a0 = AlphaParam::zero(3);
        let f = LaurentPoly::x([-1, 0, -1]);
        assert_eq!(act_word(&UWord::identity(), &f, &a0).unwrap(), f);

        let units = vec![e(3, 1, 3), e(3, 1, 3), e(3, 2, 3), e(3, 2, 3)];
        let y = UWord::from_units(units.clone());
        let out = act_word(&y, &f, &a0).unwrap();
        assert_eq!(out, LaurentPoly::monomial(Exponent::from([1, 2, -5]), gr("24")));

        let x = UWord::new(gr("1/24"), units);
        assert_eq!(act_word(&x, &f, &a0).unwrap(), LaurentPoly::x([1, 2, -5]));
    }

    #[test]
    fn word_applies_rightmost_first() {
        // E_12 E_21 x1 = E_12 (x2) = x1, while E_21 E_12 x1 = 0.
        let a0 = AlphaParam::zero(2);
        let f = LaurentPoly::x([1, 0]);
        let w = UWord::from_units(vec![e(2, 1, 2), e(2, 2, 1)]);
        assert_eq!(act_word(&w, &f, &a0).unwrap(), f);
        let w = UWord::from_units(vec![e(2, 2, 1), e(2, 1, 2)]);
        assert!(act_word(&w, &f, &a0).unwrap().is_zero());
    }

    #[test]
    fn weight_examples() {
        let k = Exponent::from([3, -2, 7]);
        let w = weight_of(&k, &AlphaParam::zero(3));
        assert_eq!(w.entries(), &[gr("3"), gr("-2"), gr("7")]);

        let (a, _) = normalize_alpha(&[gr("1/2"), gr("i"), gr("0")]).unwrap();
        let w = weight_of(&Exponent::from([2, -1, 0]), &a);
        assert_eq!(w.entries(), &[gr("5/2"), gr("-1+i"), gr("0")]);

        // (-1, ..., -1, m + l - 1 + c, 0, ..., 0) with n = 4, l = 3, m = 2, c = 1/3.
        let a = AlphaParam::new(vec![gr("0"), gr("0"), gr("1/3"), gr("0")]).unwrap();
        let w = weight_of(&Exponent::from([-1, -1, 4, 0]), &a);
        assert_eq!(w.entries(), &[gr("-1"), gr("-1"), gr("13/3"), gr("0")]);
    }

    #[test]
    fn nonzero_predicate_matches_coefficient() {
        let a = alpha("0,1/2,i,0");
        for k in [[0, 0, 0, 0], [1, -1, 0, 0], [0, 3, -2, 1], [-1, 0, 0, 0]] {
            let k = Exponent::from(k);
            for b in 1..=4 {
                let u = MatrixUnit { a: 1, b };
                assert_eq!(moves_nonzero(b, &k, &a), !unit_coefficient(u, &k, &a).is_zero());
            }
        }
    }

    #[test]
    fn uword_json() {
        let w = UWord::new(gr("1/24"), vec![e(3, 1, 3), e(3, 2, 3)]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"prefactor":{"re":{"num":"1","den":"24"},"im":{"num":"0","den":"1"}},"factors":[[1,3],[2,3]]}"#);
        let back: UWord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
