//! Constructive certificates.
//!
//! [`ladder_word`] builds an explicit enveloping-algebra element carrying
//! `x^p` to `x^q` whenever `q_neg ∩ I_alpha ⊆ p_neg ∩ I_alpha`: the excess of
//! `p` over `q` is moved one unit at a time onto the coordinates where `q`
//! exceeds `p`, and the resulting coefficient product is inverted.
//!
//! [`separation_certificate`] isolates each term of a polynomial using only
//! Cartan elements `E_aa` and linear combinations, which is possible because
//! distinct monomials have distinct weights.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::action::{act_unit, act_word, unit_coefficient, MatrixUnit, UWord};
use crate::error::{Error, Result};
use crate::laurent::{check_same_dim, AlphaParam, Exponent, LaurentPoly};
use crate::scalar::GaussianRational;

/// One application of `E_ts` along a ladder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderStep {
    /// `[t, s]`.
    pub unit: MatrixUnit,
    /// `p_(k-1)[s] + alpha[s]`.
    pub coeff: GaussianRational,
    /// Exponent reached after this step.
    pub exps: Exponent,
}

/// A word `X` with `X . x^p = x^q`, together with its step-by-step trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderCertificate {
    pub from: Exponent,
    pub to: Exponent,
    pub word: UWord,
    pub steps: Vec<LadderStep>,
}

impl LadderCertificate {
    /// Product of the step coefficients.
    pub fn coefficient_product(&self) -> GaussianRational {
        self.steps.iter().map(|s| &s.coeff).product()
    }

    /// Re-applies the word to `x^from` and compares against `x^to`, and re-derives
    /// every recorded step.
    pub fn replay(&self, alpha: &AlphaParam) -> Result<bool> {
        check_same_dim(alpha.n(), self.from.n())?;
        check_same_dim(alpha.n(), self.to.n())?;
        let image = act_word(&self.word, &LaurentPoly::x(self.from.clone()), alpha)?;
        if image != LaurentPoly::x(self.to.clone()) {
            return Ok(false);
        }
        let mut current = self.from.clone();
        for step in &self.steps {
            let c = unit_coefficient(step.unit, &current, alpha);
            if c.is_zero() || c != step.coeff {
                return Ok(false);
            }
            current = current.moved(step.unit.a, step.unit.b);
            if current != step.exps {
                return Ok(false);
            }
        }
        Ok(current == self.to)
    }
}

/// Compact record of a replayed ladder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderSummary {
    pub from: Exponent,
    pub to: Exponent,
    pub steps: usize,
    pub prefactor: GaussianRational,
    pub replayed: bool,
}

impl LadderSummary {
    pub fn of(cert: &LadderCertificate, alpha: &AlphaParam) -> Result<Self> {
        Ok(LadderSummary {
            from: cert.from.clone(),
            to: cert.to.clone(),
            steps: cert.steps.len(),
            prefactor: cert.word.prefactor.clone(),
            replayed: cert.replay(alpha)?,
        })
    }
}

/// Builds the ladder word from `x^p` to `x^q`.
///
/// Lowered coordinates `s_1 <= ... <= s_r` and raised coordinates
/// `t_1 <= ... <= t_r` are paired in sorted order and applied as
/// `E_(t_1 s_1)` first. The word stores the units right to left so that
/// evaluation reproduces this order; since no `s` equals any `t`, the units
/// commute and the word equals the plain product `E_(t_1 s_1) ... E_(t_r s_r)`
/// scaled by the inverse coefficient product.
pub fn ladder_word(p: &Exponent, q: &Exponent, alpha: &AlphaParam) -> Result<LadderCertificate> {
    check_same_dim(alpha.n(), p.n())?;
    check_same_dim(alpha.n(), q.n())?;
    if p.degree() != q.degree() {
        return Err(Error::LadderPrecondition(format!("deg {p} = {} but deg {q} = {}", p.degree(), q.degree())));
    }
    let zs = alpha.zero_set();
    let p_neg = p.neg_support().intersection(zs);
    let q_neg = q.neg_support().intersection(zs);
    if !q_neg.is_subset(p_neg) {
        return Err(Error::LadderPrecondition(format!(
            "negative support {q_neg} of {q} within I_alpha is not contained in {p_neg} of {p}"
        )));
    }
    let mut lowered = Vec::new();
    let mut raised = Vec::new();
    for l in 1..=p.n() {
        let diff = p.get(l) - q.get(l);
        let slot = if diff > 0 { &mut lowered } else { &mut raised };
        slot.extend(std::iter::repeat_n(l, diff.unsigned_abs() as usize));
    }
    debug_assert_eq!(lowered.len(), raised.len());

    let mut steps = Vec::with_capacity(lowered.len());
    let mut current = p.clone();
    for (&s, &t) in lowered.iter().zip(&raised) {
        let unit = MatrixUnit { a: t, b: s };
        let coeff = unit_coefficient(unit, &current, alpha);
        assert!(!coeff.is_zero(), "ladder step {unit} on {current} has zero coefficient under {alpha}");
        current = current.moved(t, s);
        steps.push(LadderStep { unit, coeff, exps: current.clone() });
    }
    debug_assert_eq!(&current, q);

    let product: GaussianRational = steps.iter().map(|s| &s.coeff).product();
    let prefactor = product.inv().expect("nonzero step coefficients");
    let factors = steps.iter().rev().map(|s| s.unit).collect();
    Ok(LadderCertificate { from: p.clone(), to: q.clone(), word: UWord::new(prefactor, factors), steps })
}

/// One node of a separation derivation. Nodes only refer to earlier nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum DerivationNode {
    /// The polynomial being separated.
    Input,
    /// `E_aa` applied to an earlier node.
    Cartan { a: usize, of: usize },
    /// `c1 * lhs + c2 * rhs`.
    Combine { c1: GaussianRational, lhs: usize, c2: GaussianRational, rhs: usize },
}

/// A straight-line program over [`DerivationNode`]s whose last node is the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub nodes: Vec<DerivationNode>,
}

impl Derivation {
    pub fn evaluate(&self, f: &LaurentPoly, alpha: &AlphaParam) -> Result<LaurentPoly> {
        let mut values: Vec<LaurentPoly> = Vec::with_capacity(self.nodes.len());
        for (i, node) in self.nodes.iter().enumerate() {
            let fetch = |j: usize| -> Result<&LaurentPoly> {
                values.get(j).filter(|_| j < i).ok_or_else(|| Error::Parse(format!("node {i} refers forward to {j}")))
            };
            let v = match node {
                DerivationNode::Input => f.clone(),
                DerivationNode::Cartan { a, of } => act_unit(MatrixUnit { a: *a, b: *a }, fetch(*of)?, alpha)?,
                DerivationNode::Combine { c1, lhs, c2, rhs } => fetch(*lhs)?.combine(c1, fetch(*rhs)?, c2)?,
            };
            values.push(v);
        }
        values.pop().ok_or_else(|| Error::Parse("empty derivation".into()))
    }

    /// Number of Cartan applications.
    pub fn cartan_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, DerivationNode::Cartan { .. })).count()
    }
}

struct Arena {
    nodes: Vec<DerivationNode>,
}

impl Arena {
    fn push(&mut self, node: DerivationNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    /// Returns, for each term of `value` (the value of node `at`), a node that
    /// evaluates to exactly that term.
    fn separate(&mut self, at: usize, value: &LaurentPoly, alpha: &AlphaParam, out: &mut Vec<(Exponent, usize)>) {
        if value.len() <= 1 {
            if let Some(k) = value.exponents().next() {
                out.push((k.clone(), at));
            }
            return;
        }
        let exps: Vec<&Exponent> = value.exponents().collect();
        let reference = *exps.last().expect("at least two terms");
        let a = (1..=value.n())
            .find(|&a| exps.iter().any(|k| k.get(a) != reference.get(a)))
            .expect("distinct exponents differ somewhere");
        let w_ref = &GaussianRational::from(reference.get(a)) + alpha.get(a);

        // g = w_ref * v - E_aa v keeps exactly the terms whose a-th weight differs.
        let h_node = self.push(DerivationNode::Cartan { a, of: at });
        let g_node = self.push(DerivationNode::Combine { c1: w_ref.clone(), lhs: at, c2: -GaussianRational::one(), rhs: h_node });
        let g_value = value
            .scale(&w_ref)
            .sub(&act_unit(MatrixUnit { a, b: a }, value, alpha).expect("dimensions checked"))
            .expect("dimensions checked");

        let mut g_terms = Vec::new();
        self.separate(g_node, &g_value, alpha, &mut g_terms);

        let mut rest = at;
        for (k, node) in g_terms {
            let factor = GaussianRational::from(reference.get(a) - k.get(a));
            let term = if factor.is_one() {
                node
            } else {
                let inv = factor.inv().expect("weights differ");
                self.push(DerivationNode::Combine { c1: inv, lhs: node, c2: GaussianRational::zero(), rhs: node })
            };
            rest = self.push(DerivationNode::Combine {
                c1: GaussianRational::one(),
                lhs: rest,
                c2: -GaussianRational::one(),
                rhs: term,
            });
            out.push((k, term));
        }
        let h_value = value.filter_terms(|k| k.get(a) == reference.get(a));
        self.separate(rest, &h_value, alpha, out);
    }
}

/// For each term `c_i x^(k_i)` of `f`, a derivation from `f` producing exactly
/// that term. Results are sorted by exponent.
pub fn separation_certificate(f: &LaurentPoly, alpha: &AlphaParam) -> Result<Vec<(Exponent, Derivation)>> {
    check_same_dim(alpha.n(), f.n())?;
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut arena = Arena { nodes: vec![DerivationNode::Input] };
    let mut roots = Vec::new();
    arena.separate(0, f, alpha, &mut roots);
    roots.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(roots
        .into_iter()
        .map(|(k, root)| (k, Derivation { nodes: arena.nodes[..=root].to_vec() }))
        .collect())
}
