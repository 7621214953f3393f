//! Exponent vectors, sparse Laurent polynomials and the twist parameter.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Largest supported number of variables (index sets are 64-bit masks).
pub const MAX_VARS: usize = 64;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::InvalidDimension(n))
    } else {
        Ok(())
    }
}

pub(crate) fn check_same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A subset of `{1, ..., n}` for `n <= 64`, stored as a bit mask.
///
/// Indices are 1-based everywhere in the public API.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    /// `{1, ..., k}`; empty for `k = 0`.
    pub fn prefix(k: usize) -> Self {
        Self::full(k)
    }

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from 1-based indices, rejecting anything outside `1..=n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        check_dim(n)?;
        let mut bits = 0u64;
        for index in indices {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, n });
            }
            bits |= 1 << (index - 1);
        }
        Ok(IndexSet(bits))
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!((1..=MAX_VARS).contains(&index));
        IndexSet(1 << (index - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_VARS).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: IndexSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn union(self, other: IndexSet) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndexSet) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndexSet) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, index: usize) {
        *self = self.union(Self::singleton(index));
    }

    /// Largest index bounding the set (0 when empty).
    pub fn max_index(self) -> usize {
        (u64::BITS - self.0.leading_zeros()) as usize
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    /// Smallest element of `{1..=n}` outside this set.
    pub fn first_missing(self, n: usize) -> Option<usize> {
        (1..=n).find(|&i| !self.contains(i))
    }

    /// All subsets of `self`, in increasing bit-mask order.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == mask { None } else { Some((current.wrapping_sub(mask)) & mask) };
            Some(IndexSet(current))
        })
    }

    /// Subsets of `self` with exactly `k` elements.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = IndexSet> {
        self.subsets().filter(move |s| s.len() == k)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(d)?;
        IndexSet::from_indices(MAX_VARS, indices).map_err(serde::de::Error::custom)
    }
}

/// Integer exponent vector `k`, naming the monomial `x^k`.
///
/// Ordering is lexicographic on the entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<i64>);

impl Exponent {
    pub fn new(entries: Vec<i64>) -> Self {
        Exponent(entries)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// `e_i` (1-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Exponent(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry at 1-based index `i`.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Sum of the entries.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `{l : k[l] < 0}`.
    pub fn neg_support(&self) -> IndexSet {
        let mut bits = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e < 0 {
                bits |= 1 << i;
            }
        }
        IndexSet::from_bits(bits)
    }

    /// `k + e_a - e_b` (1-based).
    pub fn moved(&self, a: usize, b: usize) -> Exponent {
        let mut v = self.0.clone();
        v[a - 1] += 1;
        v[b - 1] -= 1;
        Exponent(v)
    }

    pub fn translated(&self, shift: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&shift.0).map(|(a, b)| a + b).collect())
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).max().unwrap_or(0)
    }
}

impl From<Vec<i64>> for Exponent {
    fn from(v: Vec<i64>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[i64; N]> for Exponent {
    fn from(v: [i64; N]) -> Self {
        Exponent(v.to_vec())
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, e) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sum of the entries of `k`.
pub fn degree(k: &Exponent) -> i64 {
    k.degree()
}

/// `{l : k[l] < 0}`.
pub fn neg_support(k: &Exponent) -> IndexSet {
    k.neg_support()
}

/// A finite Laurent polynomial in `n` variables with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Exponent, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn monomial(k: Exponent, coeff: GaussianRational) -> Self {
        let mut p = LaurentPoly::zero(k.n());
        p.add_term(k, &coeff);
        p
    }

    /// `1 * x^k`.
    pub fn x(k: impl Into<Exponent>) -> Self {
        Self::monomial(k.into(), GaussianRational::one())
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, GaussianRational)>,
    {
        check_dim(n)?;
        let mut p = LaurentPoly::zero(n);
        for (k, c) in terms {
            check_same_dim(n, k.n())?;
            p.add_term(k, &c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &Exponent) -> GaussianRational {
        self.terms.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Adds `c * x^k` in place. Dimensions are the caller's responsibility.
    pub(crate) fn add_term(&mut self, k: Exponent, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(k.n(), self.n);
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        check_same_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        check_same_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), &-c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// `c1 * self + c2 * other`.
    pub fn combine(&self, c1: &GaussianRational, other: &LaurentPoly, c2: &GaussianRational) -> Result<LaurentPoly> {
        self.scale(c1).add(&other.scale(c2))
    }

    /// Translates every exponent by `shift`; coefficients are unchanged.
    pub fn shift_iso(&self, shift: &Exponent) -> Result<LaurentPoly> {
        check_same_dim(self.n, shift.n())?;
        Ok(LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.translated(shift), c.clone())).collect(),
        })
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Exponent) -> bool) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }
}

pub fn poly_add(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.add(g)
}

pub fn poly_scale(c: &GaussianRational, f: &LaurentPoly) -> LaurentPoly {
    f.scale(c)
}

/// Translates every exponent of `f` by `shift`.
pub fn shift_iso(f: &LaurentPoly, shift: &Exponent) -> Result<LaurentPoly> {
    f.shift_iso(shift)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, (k, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = k
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            let mono = mono.join("*");
            let coeff = if c.is_real() { c.to_string() } else { format!("({c})") };
            let (sign, coeff) = match coeff.strip_prefix('-') {
                Some(rest) if c.is_real() => ("-", rest.to_string()),
                _ => ("+", coeff),
            };
            if pos == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), coeff == "1") {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[n={}]({self})", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Exponent,
    coeff: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| TermJson { exps: k.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        LaurentPoly::from_terms(raw.n, raw.terms.into_iter().map(|t| (t.exps, t.coeff))).map_err(serde::de::Error::custom)
    }
}

/// The twist parameter in normalized form: `0 <= Re(alpha[l]) < 1` for every `l`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphaParam {
    entries: Vec<GaussianRational>,
    zero_set: IndexSet,
}

impl AlphaParam {
    pub fn zero(n: usize) -> Self {
        AlphaParam { entries: vec![GaussianRational::zero(); n], zero_set: IndexSet::full(n) }
    }

    /// Accepts entries that are already normalized.
    pub fn new(entries: Vec<GaussianRational>) -> Result<Self> {
        check_dim(entries.len())?;
        let mut zero_set = IndexSet::EMPTY;
        for (i, a) in entries.iter().enumerate() {
            let re = a.re();
            if re < &num_rational::BigRational::zero() || re >= &num_rational::BigRational::one() {
                return Err(Error::Parse(format!("alpha[{}] = {a} is not normalized (need 0 <= Re < 1)", i + 1)));
            }
            if a.is_zero() {
                zero_set.insert(i + 1);
            }
        }
        Ok(AlphaParam { entries, zero_set })
    }

    /// Parses a comma-separated list of scalar literals, e.g. `1/2,i,0`, then normalizes it.
    pub fn parse_normalized(list: &str) -> Result<(AlphaParam, Exponent)> {
        let raw = list
            .split(',')
            .map(|s| s.trim().parse::<GaussianRational>())
            .collect::<Result<Vec<_>>>()?;
        normalize_alpha(&raw)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    /// `alpha[l]`, 1-based.
    pub fn get(&self, l: usize) -> &GaussianRational {
        &self.entries[l - 1]
    }

    /// `I_alpha = {l : alpha[l] = 0}`.
    pub fn zero_set(&self) -> IndexSet {
        self.zero_set
    }

    pub fn is_zero(&self) -> bool {
        self.zero_set.len() == self.n()
    }

    /// The single index carrying a nonzero entry, if exactly one does.
    pub fn single_support(&self) -> Option<usize> {
        let support = IndexSet::full(self.n()).difference(self.zero_set);
        if support.len() == 1 {
            support.iter().next()
        } else {
            None
        }
    }
}

impl fmt::Display for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for AlphaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaParam{self}")
    }
}

impl Serialize for AlphaParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<GaussianRational>::deserialize(d)?;
        AlphaParam::new(entries).map_err(serde::de::Error::custom)
    }
}

/// Moves each entry into the strip `0 <= Re < 1` by subtracting the floor of its
/// real part. Returns the normalized parameter and the integer shift
/// `raw - alpha`.
pub fn normalize_alpha(raw: &[GaussianRational]) -> Result<(AlphaParam, Exponent)> {
    check_dim(raw.len())?;
    let mut entries = Vec::with_capacity(raw.len());
    let mut shift = Vec::with_capacity(raw.len());
    for a in raw {
        let fl = a.floor_re();
        let fl_i64 = i64::try_from(&fl).map_err(|_| Error::Parse(format!("alpha entry {a} too large")))?;
        entries.push(a - &GaussianRational::from(fl));
        shift.push(fl_i64);
    }
    Ok((AlphaParam::new(entries)?, Exponent::new(shift)))
}
