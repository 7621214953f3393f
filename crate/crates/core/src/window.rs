//! Finite windows of a degree slice: `{k in Z^n : sum k = m, |k[i]| <= B}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{check_dim, Exponent, IndexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub n: usize,
    pub m: i64,
    #[serde(rename = "B")]
    pub bound: i64,
}

impl Window {
    pub fn new(n: usize, m: i64, bound: i64) -> Result<Self> {
        check_dim(n)?;
        if bound < 0 {
            return Err(Error::Parse(format!("window bound must be >= 0, got {bound}")));
        }
        Ok(Window { n, m, bound })
    }

    pub fn contains(&self, k: &Exponent) -> bool {
        k.n() == self.n && k.degree() == self.m && k.max_abs() <= self.bound
    }

    /// All window points in lexicographic order.
    pub fn points(&self) -> Vec<Exponent> {
        self.points_with_signs(IndexSet::EMPTY, IndexSet::EMPTY)
    }

    /// Window points with `k[i] < 0` for `i` in `negative` and `k[i] >= 0` for `i`
    /// in `nonnegative`, in lexicographic order.
    pub fn points_with_signs(&self, negative: IndexSet, nonnegative: IndexSet) -> Vec<Exponent> {
        let b = self.bound;
        let mut lo = vec![-b; self.n];
        let mut hi = vec![b; self.n];
        for i in 1..=self.n {
            if negative.contains(i) {
                hi[i - 1] = -1;
            }
            if nonnegative.contains(i) {
                lo[i - 1] = lo[i - 1].max(0);
            }
        }
        let mut out = Vec::new();
        enumerate_box_slice(&lo, &hi, self.m, |k| out.push(Exponent::new(k.to_vec())));
        out
    }
}

/// Calls `visit` on every integer vector `v` with `lo <= v <= hi` componentwise and
/// `sum v = total`, in lexicographic order.
pub fn enumerate_box_slice(lo: &[i64], hi: &[i64], total: i64, mut visit: impl FnMut(&[i64])) {
    let n = lo.len();
    assert_eq!(n, hi.len());
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    // suffix_lo[i] / suffix_hi[i]: reachable sums of coordinates i..n.
    let mut suffix_lo = vec![0i64; n + 1];
    let mut suffix_hi = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix_lo[i] = suffix_lo[i + 1] + lo[i];
        suffix_hi[i] = suffix_hi[i + 1] + hi[i];
    }
    let mut current = vec![0i64; n];
    fn rec(
        i: usize,
        remaining: i64,
        lo: &[i64],
        hi: &[i64],
        suffix_lo: &[i64],
        suffix_hi: &[i64],
        current: &mut [i64],
        visit: &mut dyn FnMut(&[i64]),
    ) {
        let n = lo.len();
        if i == n {
            if remaining == 0 {
                visit(current);
            }
            return;
        }
        let start = lo[i].max(remaining - suffix_hi[i + 1]);
        let end = hi[i].min(remaining - suffix_lo[i + 1]);
        for v in start..=end {
            current[i] = v;
            rec(i + 1, remaining - v, lo, hi, suffix_lo, suffix_hi, current, visit);
        }
    }
    if n == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    rec(0, total, lo, hi, &suffix_lo, &suffix_hi, &mut current, &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_points_match_brute_force() {
        for n in 1..=3usize {
            for m in -4..=4 {
                let w = Window::new(n, m, 3).unwrap();
                let fast = w.points();
                let mut brute = Vec::new();
                let side = 7i64.pow(n as u32);
                for code in 0..side {
                    let mut c = code;
                    let mut v = Vec::new();
                    for _ in 0..n {
                        v.push(c % 7 - 3);
                        c /= 7;
                    }
                    v.reverse();
                    if v.iter().sum::<i64>() == m {
                        brute.push(Exponent::new(v));
                    }
                }
                brute.sort();
                assert_eq!(fast, brute, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn sign_constraints() {
        let w = Window::new(2, -3, 4).unwrap();
        let pts = w.points_with_signs(IndexSet::full(2), IndexSet::EMPTY);
        assert_eq!(pts, vec![Exponent::from([-2, -1]), Exponent::from([-1, -2])]);
        assert!(Window::new(2, 0, -1).is_err());
        assert!(Window::new(0, 0, 1).is_err());
    }
}
