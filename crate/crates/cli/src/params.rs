//! Flag parsing and merging with `--input` JSON.
//!
//! Exponents and degrees given as flags are in the coordinates of the twist as
//! typed; they are translated by the normalization shift. Values read back from
//! emitted JSON are already normalized.

use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use laurent_gl::{normalize_alpha, AlphaParam, Exponent, GaussianRational, IndexSet};
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::args::Common;

pub fn parse_list<T: std::str::FromStr>(flag: &str, s: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    let body = s.trim().trim_start_matches(['{', '(', '[']).trim_end_matches(['}', ')', ']']);
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|e| anyhow!("--{flag}: cannot parse `{}`: {e}", t.trim())))
        .collect()
}

pub fn parse_scalar(flag: &str, s: &str) -> Result<GaussianRational> {
    s.trim().parse().map_err(|e| anyhow!("--{flag}: {e}"))
}

/// Normalized twist plus the shift `raw - alpha` applied to user coordinates.
pub struct Twist {
    pub alpha: AlphaParam,
    pub shift: Exponent,
    /// Shift to report; carried over from `--input` when the twist comes from there.
    pub reported: Exponent,
}

impl Twist {
    pub fn n(&self) -> usize {
        self.alpha.n()
    }
}

pub struct Resolver<'a> {
    pub args: &'a Common,
    pub json: Option<Value>,
}

impl<'a> Resolver<'a> {
    pub fn new(args: &'a Common) -> Result<Self> {
        let json = match &args.input {
            Some(path) => {
                let text = fs::read_to_string(path).with_context(|| format!("--input: cannot read {}", path.display()))?;
                Some(serde_json::from_str(&text).with_context(|| format!("--input: {} is not JSON", path.display()))?)
            }
            None => None,
        };
        Ok(Resolver { args, json })
    }

    /// Looks up `key` at the top level of the input, then inside its
    /// `module`, `config` and `certificate` objects.
    pub fn find(&self, key: &str) -> Option<&Value> {
        let root = self.json.as_ref()?;
        std::iter::once(Some(root))
            .chain(["module", "config", "certificate"].iter().map(|k| root.get(*k)))
            .flatten()
            .find_map(|v| v.get(key).filter(|x| !x.is_null()))
    }

    pub fn decode<T: DeserializeOwned>(&self, key: &str) -> Result<Option<T>> {
        match self.find(key) {
            Some(v) => Ok(Some(serde_json::from_value(v.clone()).with_context(|| format!("--input: bad `{key}`"))?)),
            None => Ok(None),
        }
    }

    fn flag_n(&self) -> Result<Option<usize>> {
        match &self.args.n {
            Some(s) => Ok(Some(s.trim().parse().map_err(|e| anyhow!("--n: cannot parse `{s}`: {e}"))?)),
            None => Ok(None),
        }
    }

    pub fn twist(&self) -> Result<Twist> {
        let n_flag = self.flag_n()?;
        let twist = if let Some(text) = self.args.alpha.first() {
            if self.args.alpha.len() > 1 {
                bail!("--alpha: given more than once");
            }
            let raw: Vec<GaussianRational> = parse_list("alpha", text)?;
            let (alpha, shift) = normalize_alpha(&raw).map_err(|e| anyhow!("--alpha: {e}"))?;
            Twist { alpha, reported: shift.clone(), shift }
        } else if let Some(alpha) = self.decode::<AlphaParam>("alpha")? {
            let n = alpha.n();
            let reported = self.recorded_shift(n)?;
            Twist { alpha, shift: Exponent::zero(n), reported }
        } else {
            let n = match n_flag {
                Some(n) => n,
                None => self.infer_n().ok_or_else(|| anyhow!("--n: required (or give --alpha or --p)"))?,
            };
            Twist { alpha: AlphaParam::zero(n), shift: Exponent::zero(n), reported: Exponent::zero(n) }
        };
        if let Some(n) = n_flag {
            if n != twist.n() {
                bail!("--n: {n} disagrees with --alpha of length {}", twist.n());
            }
        }
        laurent_gl::Window::new(twist.n(), 0, 0).map_err(|e| anyhow!("--n: {e}"))?;
        Ok(twist)
    }

    /// `alpha_shift` from the input, or zero.
    pub fn recorded_shift(&self, n: usize) -> Result<Exponent> {
        let shift = self.decode::<Exponent>("alpha_shift")?.unwrap_or_else(|| Exponent::zero(n));
        if shift.n() != n {
            bail!("--input: `alpha_shift` has {} entries but n = {n}", shift.n());
        }
        Ok(shift)
    }

    fn infer_n(&self) -> Option<usize> {
        if let Some(p) = &self.args.p {
            return parse_list::<i64>("p", p).ok().map(|v| v.len());
        }
        self.find("p").or_else(|| self.find("from")).and_then(|v| v.as_array()).map(|a| a.len())
    }

    pub fn degree(&self, t: &Twist) -> Result<i64> {
        if let Some(s) = &self.args.m {
            let m: i64 = s.trim().parse().map_err(|e| anyhow!("--m: cannot parse `{s}`: {e}"))?;
            return Ok(m + t.shift.degree());
        }
        self.decode::<i64>("m")?.ok_or_else(|| anyhow!("--m: required"))
    }

    pub fn degree_range(&self, default: [i64; 2]) -> Result<[i64; 2]> {
        if let Some(s) = &self.args.m {
            let v: Vec<i64> = parse_list("m", s)?;
            return match v.as_slice() {
                [m] => Ok([*m, *m]),
                [lo, hi] if lo <= hi => Ok([*lo, *hi]),
                _ => bail!("--m: expected `m` or `lo,hi` with lo <= hi, got `{s}`"),
            };
        }
        Ok(self.decode::<[i64; 2]>("m_range")?.unwrap_or(default))
    }

    pub fn index_set(&self, t: &Twist) -> Result<IndexSet> {
        if let Some(s) = &self.args.set {
            let ix: Vec<usize> = parse_list("J", s)?;
            return IndexSet::from_indices(t.n(), ix).map_err(|e| anyhow!("--J: {e}"));
        }
        self.decode::<IndexSet>("J")?.ok_or_else(|| anyhow!("--J: required"))
    }

    pub fn level(&self) -> Result<Option<i64>> {
        match self.args.level {
            Some(j) => Ok(Some(j)),
            None => self.decode::<i64>("j"),
        }
    }

    pub fn bound(&self, default: i64) -> Result<i64> {
        let b = match self.args.bound {
            Some(b) => b,
            None => self.decode::<i64>("B")?.unwrap_or(default),
        };
        if b < 0 {
            bail!("--B: must be >= 0, got {b}");
        }
        Ok(b)
    }

    /// `--p` / `--q`, falling back to the given JSON keys.
    pub fn exponent(&self, flag: &str, keys: &[&str], t: &Twist) -> Result<Exponent> {
        let text = if flag == "p" { &self.args.p } else { &self.args.q };
        let (k, from_flag) = if let Some(s) = text {
            (Exponent::new(parse_list(flag, s)?), true)
        } else {
            let found = keys.iter().find_map(|k| self.find(k)).ok_or_else(|| anyhow!("--{flag}: required"))?;
            let k = serde_json::from_value::<Exponent>(found.clone()).with_context(|| format!("--input: bad exponent for --{flag}"))?;
            (k, false)
        };
        if k.n() != t.n() {
            bail!("--{flag}: has {} entries but n = {}", k.n(), t.n());
        }
        Ok(if from_flag { k.translated(&t.shift) } else { k })
    }
}
