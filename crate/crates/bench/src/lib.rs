//! Shared workloads for the benchmarks.

use laurent_gl::{AlphaParam, Exponent, GaussianRational, LaurentPoly, Window};

/// The twist `(1/2, i, 0, ...)` in `n` variables.
pub fn twisted(n: usize) -> AlphaParam {
    let mut v = vec![GaussianRational::from(0); n];
    v[0] = GaussianRational::ratio(1, 2);
    if n > 1 {
        v[1] = GaussianRational::i();
    }
    AlphaParam::new(v).expect("normalized twist")
}

/// Every window monomial of degree `m`.
pub fn monomials(n: usize, m: i64, bound: i64) -> Vec<Exponent> {
    Window::new(n, m, bound).expect("valid window").points()
}

/// A polynomial with `terms` distinct monomials of degree `m` and coefficients `1..=terms`.
pub fn dense_poly(n: usize, m: i64, bound: i64, terms: usize) -> LaurentPoly {
    let pts = monomials(n, m, bound);
    let picked = pts.into_iter().take(terms).enumerate().map(|(i, k)| (k, GaussianRational::from(i as i64 + 1)));
    LaurentPoly::from_terms(n, picked).expect("same dimension")
}
