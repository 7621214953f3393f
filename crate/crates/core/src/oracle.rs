//! Brute-force verification on finite windows.
//!
//! The action graph has an edge `k -> k + e_a - e_b` whenever
//! `k[b] + alpha[b] != 0`. Every check here enumerates window points directly
//! and never consults the closed-form generator or ladder constructions except
//! to compare against them.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{act_on_monomial, moves_nonzero, weight_of, MatrixUnit};
use crate::error::{Error, Result};
use crate::ladder::{ladder_word, LadderSummary};
use crate::laurent::{check_same_dim, AlphaParam, Exponent, IndexSet, LaurentPoly};
use crate::lattice::{
    binomial, generator_of_v, in_l, in_v, in_w_basis, reduce_mod_lower, w_basis_window, GeneratorCase, GeneratorResult,
    ModuleId,
};
use crate::scalar::GaussianRational;
use crate::window::Window;

/// Window neighbours of `k` under nonzero single-unit moves, in `(a, b)` order.
fn successors<'a>(k: &'a Exponent, alpha: &'a AlphaParam, w: &'a Window) -> impl Iterator<Item = Exponent> + 'a {
    let n = k.n();
    (1..=n).filter(move |&b| moves_nonzero(b, k, alpha)).flat_map(move |b| {
        (1..=n).filter(move |&a| a != b).map(move |a| k.moved(a, b)).filter(move |q| w.contains(q))
    })
}

/// BFS tree from several starts; maps each reached point to its parent.
fn bfs_tree(starts: &[Exponent], alpha: &AlphaParam, w: &Window) -> Result<BTreeMap<Exponent, Option<Exponent>>> {
    let mut parent = BTreeMap::new();
    let mut queue = VecDeque::new();
    for s in starts {
        check_same_dim(alpha.n(), s.n())?;
        if !w.contains(s) {
            return Err(Error::OutsideWindow(format!("{s} (n={} m={} B={})", w.n, w.m, w.bound)));
        }
        if !parent.contains_key(s) {
            parent.insert(s.clone(), None);
            queue.push_back(s.clone());
        }
    }
    while let Some(k) = queue.pop_front() {
        for q in successors(&k, alpha, w) {
            if !parent.contains_key(&q) {
                parent.insert(q.clone(), Some(k.clone()));
                queue.push_back(q);
            }
        }
    }
    Ok(parent)
}

fn path_to(tree: &BTreeMap<Exponent, Option<Exponent>>, target: &Exponent) -> Vec<Exponent> {
    let mut path = vec![target.clone()];
    let mut cur = target;
    while let Some(Some(p)) = tree.get(cur) {
        path.push(p.clone());
        cur = p;
    }
    path.reverse();
    path
}

/// Window points reachable from `start` through nonzero single-unit moves.
pub fn reachability_set(start: &Exponent, alpha: &AlphaParam, w: &Window) -> Result<BTreeSet<Exponent>> {
    Ok(bfs_tree(std::slice::from_ref(start), alpha, w)?.into_keys().collect())
}

/// Comparison of a reached set against an expected set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachReport {
    pub module: ModuleId,
    pub window: Window,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<GeneratorCase>,
    pub starts: Vec<Exponent>,
    pub reached: BTreeSet<Exponent>,
    pub expected: BTreeSet<Exponent>,
    pub verdict: bool,
    pub missing: Vec<Exponent>,
    pub extra: Vec<Exponent>,
    /// A BFS path from a start to the last point discovered.
    pub witness_path: Vec<Exponent>,
}

impl ReachReport {
    fn build(
        module: ModuleId,
        window: Window,
        case: Option<GeneratorCase>,
        starts: Vec<Exponent>,
        reached: BTreeSet<Exponent>,
        expected: BTreeSet<Exponent>,
        witness_path: Vec<Exponent>,
    ) -> Self {
        let missing: Vec<Exponent> = expected.difference(&reached).cloned().collect();
        let extra: Vec<Exponent> = reached.difference(&expected).cloned().collect();
        let verdict = missing.is_empty() && extra.is_empty();
        ReachReport { module, window, case, starts, reached, expected, verdict, missing, extra, witness_path }
    }
}

/// Generators of `V(m, J)`, following collapses to `L(m, level)`.
fn generating_monomials(alpha: &AlphaParam, m: i64, set: IndexSet) -> Result<Vec<Exponent>> {
    match generator_of_v(alpha, m, set)? {
        GeneratorResult::Generator { exponent, .. } => Ok(vec![exponent]),
        GeneratorResult::ZeroModule { .. } => Ok(Vec::new()),
        GeneratorResult::EqualsModule { module, .. } => {
            let ModuleId::L { level, .. } = module else {
                return Err(Error::UndefinedGenerator(format!("unexpected collapse target {module}")));
            };
            let mut out = BTreeSet::new();
            for sub in alpha.zero_set().subsets_of_size(level.max(0) as usize) {
                if sub == set {
                    return Err(Error::UndefinedGenerator(format!("V({m}, {set}) collapses onto itself")));
                }
                out.extend(generating_monomials(alpha, m, sub)?);
            }
            Ok(out.into_iter().collect())
        }
    }
}

fn window_set(w: &Window, keep: impl Fn(&Exponent) -> bool) -> BTreeSet<Exponent> {
    w.points().into_iter().filter(|k| keep(k)).collect()
}

/// Reachability from the canonical generator(s) of `V(m, J)` against the
/// window members of `V(m, J)`.
pub fn check_cyclic(alpha: &AlphaParam, m: i64, set: IndexSet, bound: i64) -> Result<ReachReport> {
    let module = ModuleId::v(alpha, m, set)?;
    let case = generator_of_v(alpha, m, set)?.case();
    let w = Window::new(alpha.n(), m, bound)?;
    let starts = generating_monomials(alpha, m, set)?;
    // A generator outside the window is searched from a window wide enough to hold
    // it; ladder paths stay in the box spanned by their endpoints.
    let reach = starts.iter().map(Exponent::max_abs).max().unwrap_or(0).max(bound);
    let tree = bfs_tree(&starts, alpha, &Window::new(alpha.n(), m, reach)?)?;
    let witness = tree.keys().rev().find(|k| w.contains(k)).map(|t| path_to(&tree, t)).unwrap_or_default();
    let reached = tree.into_keys().filter(|k| w.contains(k)).collect();
    let expected = window_set(&w, |k| in_v(k, alpha, m, set));
    Ok(ReachReport::build(module, w, Some(case), starts, reached, expected, witness))
}

/// Quotient-action neighbours of a basis monomial of `W(m, J)` inside the window.
fn quotient_successors(k: &Exponent, alpha: &AlphaParam, m: i64, level: i64, w: &Window) -> Vec<Exponent> {
    let mut out = Vec::new();
    for u in MatrixUnit::all(alpha.n()).filter(|u| !u.is_diagonal()) {
        let Some((q, c)) = act_on_monomial(u, k, alpha) else { continue };
        if !w.contains(&q) {
            continue;
        }
        let image = reduce_mod_lower(&LaurentPoly::monomial(q, c), alpha, m, level).expect("closure of L(m, j)");
        out.extend(image.exponents().cloned());
    }
    out
}

/// Mutual reachability of the `W(m, J)` window basis under the quotient action.
///
/// Strong connectivity is checked with one forward and one reverse search from
/// the first basis element; `reached` holds the points reachable both ways.
pub fn check_simple_w(alpha: &AlphaParam, m: i64, set: IndexSet, bound: i64) -> Result<ReachReport> {
    let module = ModuleId::w(alpha, m, set)?;
    let w = Window::new(alpha.n(), m, bound)?;
    let basis: BTreeSet<Exponent> = w_basis_window(alpha, m, set, bound)?.into_iter().collect();
    let level = set.len() as i64;
    let Some(first) = basis.iter().next().cloned() else {
        return Ok(ReachReport::build(module, w, None, Vec::new(), BTreeSet::new(), basis, Vec::new()));
    };
    let mut forward: BTreeMap<Exponent, Vec<Exponent>> = BTreeMap::new();
    let mut backward: BTreeMap<Exponent, Vec<Exponent>> = BTreeMap::new();
    for k in &basis {
        for q in quotient_successors(k, alpha, m, level, &w) {
            backward.entry(q.clone()).or_default().push(k.clone());
            forward.entry(k.clone()).or_default().push(q);
        }
    }
    let search = |graph: &BTreeMap<Exponent, Vec<Exponent>>| {
        let mut parent: BTreeMap<Exponent, Option<Exponent>> = BTreeMap::new();
        parent.insert(first.clone(), None);
        let mut queue = VecDeque::from([first.clone()]);
        while let Some(k) = queue.pop_front() {
            for q in graph.get(&k).into_iter().flatten() {
                if !parent.contains_key(q) {
                    parent.insert(q.clone(), Some(k.clone()));
                    queue.push_back(q.clone());
                }
            }
        }
        parent
    };
    let fwd = search(&forward);
    let bwd = search(&backward);
    let witness = fwd.keys().last().map(|t| path_to(&fwd, t)).unwrap_or_default();
    let reached: BTreeSet<Exponent> = fwd.keys().filter(|k| bwd.contains_key(*k)).cloned().collect();
    // Anything reached outside the basis would be a closure failure; keep it visible.
    let stray: BTreeSet<Exponent> = fwd.keys().chain(bwd.keys()).filter(|k| !basis.contains(*k)).cloned().collect();
    Ok(ReachReport::build(module, w, None, vec![first], &reached | &stray, basis, witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    #[serde(rename = "J")]
    pub set: IndexSet,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSumReport {
    pub alpha: AlphaParam,
    pub m: i64,
    pub j: usize,
    pub window: Window,
    /// Window monomials of `L(m, j)` outside `L(m, j-1)`.
    pub quotient_size: usize,
    pub blocks: Vec<Block>,
    /// Every quotient monomial lies in exactly one block.
    pub partition: bool,
    /// For `alpha = 0`, negative degree, `j = 1`: the `V(m, {l})` supports
    /// partition the window of `L(m, 1)` itself.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub v_supports: Option<bool>,
    /// Monomials covered by zero or several blocks.
    pub violations: Vec<Exponent>,
    pub verdict: bool,
}

fn partition_violations(points: &[Exponent], blocks: &[IndexSet], member: impl Fn(&Exponent, IndexSet) -> bool) -> Vec<Exponent> {
    points
        .iter()
        .filter(|k| blocks.iter().filter(|&&b| member(k, b)).count() != 1)
        .cloned()
        .collect()
}

/// Window evidence that `L(m, j) / L(m, j-1)` splits into the `W(m, J)`, `|J| = j`.
pub fn check_direct_sum(alpha: &AlphaParam, m: i64, j: usize, bound: i64) -> Result<DirectSumReport> {
    let zs = alpha.zero_set();
    if j == 0 || j > zs.len() {
        return Err(Error::LevelOutOfRange { j: j as i64, max: zs.len() });
    }
    let w = Window::new(alpha.n(), m, bound)?;
    let level = j as i64;
    let quotient: Vec<Exponent> =
        w.points().into_iter().filter(|k| in_l(k, alpha, m, level) && !in_l(k, alpha, m, level - 1)).collect();
    let sets: Vec<IndexSet> = zs.subsets_of_size(j).collect();
    let mut violations = partition_violations(&quotient, &sets, |k, s| in_w_basis(k, alpha, m, s));
    let blocks = sets
        .iter()
        .map(|&s| Block { set: s, size: quotient.iter().filter(|k| in_w_basis(k, alpha, m, s)).count() })
        .collect();
    let partition = violations.is_empty();

    let v_supports = (alpha.is_zero() && m < 0 && j == 1).then(|| {
        let whole: Vec<Exponent> = w.points().into_iter().filter(|k| in_l(k, alpha, m, 1)).collect();
        let singles: Vec<IndexSet> = (1..=alpha.n()).map(IndexSet::singleton).collect();
        let bad = partition_violations(&whole, &singles, |k, s| in_v(k, alpha, m, s));
        let ok = bad.is_empty();
        violations.extend(bad);
        ok
    });
    let verdict = partition && v_supports.unwrap_or(true);
    Ok(DirectSumReport {
        alpha: alpha.clone(),
        m,
        j,
        window: w,
        quotient_size: quotient.len(),
        blocks,
        partition,
        v_supports,
        violations,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCheck {
    pub n1: usize,
    pub n2: usize,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    #[serde(rename = "J")]
    pub first: IndexSet,
    #[serde(rename = "J2")]
    pub second: IndexSet,
    pub meet: IndexSet,
    /// Generator of `V(m, J ∩ J')`, present exactly when that module is nonzero.
    pub generator: Option<Exponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndecomposabilityArgument {
    /// Every generator reaches a common nonzero floor submodule.
    Floor,
    /// Binomial counting plus nonzero pairwise intersections.
    PairwiseIntersection,
    /// A single cyclic generator.
    SingleGenerator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndecomposabilityReport {
    pub alpha: AlphaParam,
    pub m: i64,
    pub j: usize,
    /// Level actually examined after collapses `L(m, j) = L(m, j-1)`.
    pub effective_j: usize,
    pub argument: IndecomposabilityArgument,
    pub splits: Vec<SplitCheck>,
    pub pair_witnesses: Vec<PairWitness>,
    pub floor_ladders: Vec<LadderSummary>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

/// `binom(n, j) > binom(n1, j) + binom(n2, j)` for each split `n1 + n2 = n`, `n1, n2 >= 1`.
pub fn binomial_splits(n: usize, j: usize) -> Vec<SplitCheck> {
    (1..n)
        .map(|n1| {
            let n2 = n - n1;
            let lhs = binomial(n as u64, j as u64);
            let rhs = binomial(n1 as u64, j as u64) + binomial(n2 as u64, j as u64);
            SplitCheck { n1, n2, holds: lhs > rhs, lhs: lhs.to_string(), rhs: rhs.to_string() }
        })
        .collect()
}

/// For every pair of `j`-subsets of `{1..n}` that meet, the generator of `V(m, J ∩ J')`.
pub fn pair_witnesses(alpha: &AlphaParam, m: i64, j: usize) -> Result<Vec<PairWitness>> {
    let sets: Vec<IndexSet> = alpha.zero_set().subsets_of_size(j).collect();
    let mut out = Vec::new();
    for (i, &s) in sets.iter().enumerate() {
        for &t in &sets[i + 1..] {
            let meet = s.intersection(t);
            if meet.is_empty() {
                continue;
            }
            let generator = generator_of_v(alpha, m, meet)?.exponent().cloned();
            out.push(PairWitness { first: s, second: t, meet, generator });
        }
    }
    Ok(out)
}

fn floor_ladders(alpha: &AlphaParam, m: i64, j: usize) -> Result<Vec<LadderSummary>> {
    let n = alpha.n();
    let zs = alpha.zero_set();
    let t = zs.first_missing(n).unwrap_or(1);
    let mut floor = vec![0; n];
    floor[t - 1] = m;
    let floor = Exponent::new(floor);
    let mut out = Vec::new();
    for set in zs.subsets_of_size(j) {
        for g in generating_monomials(alpha, m, set)? {
            let cert = ladder_word(&g, &floor, alpha)?;
            out.push(LadderSummary::of(&cert, alpha)?);
        }
    }
    Ok(out)
}

/// Checkable ingredients of the indecomposability argument for `L(m, j)`.
pub fn indecomposability_certificate(alpha: &AlphaParam, m: i64, j: usize) -> Result<IndecomposabilityReport> {
    let n = alpha.n();
    let zs = alpha.zero_set();
    if j > zs.len() {
        return Err(Error::LevelOutOfRange { j: j as i64, max: zs.len() });
    }
    let untwisted_negative = alpha.is_zero() && m < 0;
    if untwisted_negative && j <= 1 {
        let what = if j == 0 { "is the zero module" } else { "splits into the V(m, {l})" };
        return Err(Error::NotAssertedCase(format!("L({m}, {j}) {what} for alpha = 0 and negative degree")));
    }
    if alpha.is_zero() && m >= 0 && j == 0 {
        return Err(Error::NotAssertedCase(format!("L({m}, 0) is simple; no decomposition argument applies")));
    }
    let mut report = IndecomposabilityReport {
        alpha: alpha.clone(),
        m,
        j,
        effective_j: j,
        argument: IndecomposabilityArgument::Floor,
        splits: Vec::new(),
        pair_witnesses: Vec::new(),
        floor_ladders: Vec::new(),
        verdict: false,
        reason: None,
    };

    if !untwisted_negative {
        // The top level collapses onto the one below when all coordinates are barriers and m >= 0.
        if alpha.is_zero() && j == n {
            report.effective_j = n - 1;
        }
        report.floor_ladders = floor_ladders(alpha, m, report.effective_j)?;
        report.verdict = !report.floor_ladders.is_empty() && report.floor_ladders.iter().all(|l| l.replayed);
        return Ok(report);
    }

    if j == n && -m >= n as i64 {
        report.argument = IndecomposabilityArgument::SingleGenerator;
        let g = generating_monomials(alpha, m, zs)?;
        report.verdict = g.len() == 1;
        return Ok(report);
    }
    if j == n {
        report.effective_j = n - 1;
    }
    let jj = report.effective_j;
    report.argument = IndecomposabilityArgument::PairwiseIntersection;
    if jj < 2 {
        report.reason = Some(format!("L({m}, {j}) = L({m}, {jj}), which is a direct sum of {n} nonzero submodules"));
        return Ok(report);
    }
    report.splits = binomial_splits(n, jj);
    report.pair_witnesses = pair_witnesses(alpha, m, jj)?;
    report.verdict = report.splits.iter().all(|s| s.holds) && report.pair_witnesses.iter().all(|p| p.generator.is_some());
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureViolation {
    pub k: Exponent,
    pub unit: MatrixUnit,
    pub image: Exponent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub module: ModuleId,
    pub window: Window,
    pub members: usize,
    pub images_checked: usize,
    pub violations: Vec<ClosureViolation>,
    pub verdict: bool,
}

/// Every in-window image of a window member under every `E_ab` is again a member.
pub fn closure_check(module: &ModuleId, bound: i64) -> Result<ClosureReport> {
    let alpha = module.alpha();
    let w = Window::new(alpha.n(), module.degree(), bound)?;
    let members: Vec<Exponent> = w.points().into_iter().filter(|k| module.contains(k)).collect();
    let mut images_checked = 0;
    let mut violations = Vec::new();
    for k in &members {
        for u in MatrixUnit::all(alpha.n()) {
            let Some((q, _)) = act_on_monomial(u, k, alpha) else { continue };
            if q.max_abs() > bound {
                continue;
            }
            images_checked += 1;
            if !module.contains(&q) {
                violations.push(ClosureViolation { k: k.clone(), unit: u, image: q });
            }
        }
    }
    let verdict = violations.is_empty();
    Ok(ClosureReport { module: module.clone(), window: w, members: members.len(), images_checked, violations, verdict })
}

/// Whether `weight_of` separates the given monomials.
pub fn weights_injective(points: &[Exponent], alpha: &AlphaParam) -> bool {
    let mut seen = HashSet::new();
    points.iter().all(|k| seen.insert(weight_of(k, alpha).0))
}

/// Sweep parameters. An `alphas` entry shorter than `n` is padded with zeros;
/// entries longer than `n` are skipped for that `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: Vec<usize>,
    pub m_range: [i64; 2],
    #[serde(rename = "B")]
    pub bound: i64,
    pub alphas: Vec<Vec<GaussianRational>>,
    /// Replay a ladder from the generator to every reached point.
    #[serde(default = "default_true")]
    pub ladders: bool,
}

fn default_true() -> bool {
    true
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n: vec![2, 3, 4],
            m_range: [-5, 5],
            bound: 6,
            alphas: vec![Vec::new(), vec![GaussianRational::ratio(1, 2), GaussianRational::i()]],
            ladders: true,
        }
    }
}

impl SweepConfig {
    /// Normalized twists for dimension `n`.
    pub fn alphas_for(&self, n: usize) -> Result<Vec<AlphaParam>> {
        let mut out = Vec::new();
        for raw in &self.alphas {
            if raw.len() > n {
                continue;
            }
            let mut padded = raw.clone();
            padded.resize(n, GaussianRational::from(0));
            let (alpha, _) = crate::laurent::normalize_alpha(&padded)?;
            if !out.contains(&alpha) {
                out.push(alpha);
            }
        }
        Ok(out)
    }
}

/// Results for one `(alpha, m, J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub alpha: AlphaParam,
    pub m: i64,
    #[serde(rename = "J")]
    pub set: IndexSet,
    pub case: GeneratorCase,
    pub starts: Vec<Exponent>,
    pub cyclic: bool,
    pub reached: usize,
    pub expected: usize,
    pub missing: Vec<Exponent>,
    pub extra: Vec<Exponent>,
    pub witness_path: Vec<Exponent>,
    pub simple_w: bool,
    pub w_basis: usize,
    pub weights_injective: bool,
    pub closure: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ladders_replayed: Option<bool>,
}

impl CaseSummary {
    pub fn passed(&self) -> bool {
        self.cyclic && self.simple_w && self.weights_injective && self.closure && self.ladders_replayed.unwrap_or(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub cases: Vec<CaseSummary>,
    pub direct_sums: Vec<DirectSumReport>,
    pub passed: bool,
}

/// Runs every check for one `(alpha, m, J)`.
pub fn verify_case(alpha: &AlphaParam, m: i64, set: IndexSet, bound: i64, ladders: bool) -> Result<CaseSummary> {
    let cyc = check_cyclic(alpha, m, set, bound)?;
    let simple = check_simple_w(alpha, m, set, bound)?;
    let basis: Vec<Exponent> = simple.expected.iter().cloned().collect();
    let closure = closure_check(&ModuleId::v(alpha, m, set)?, bound)?;
    let ladders_replayed = if ladders && cyc.starts.len() == 1 {
        let g = &cyc.starts[0];
        let mut ok = true;
        for q in &cyc.reached {
            let cert = ladder_word(g, q, alpha)?;
            if !cert.replay(alpha)? {
                ok = false;
                break;
            }
        }
        Some(ok)
    } else {
        None
    };
    Ok(CaseSummary {
        alpha: alpha.clone(),
        m,
        set,
        case: cyc.case.expect("cyclic reports carry a case"),
        starts: cyc.starts,
        cyclic: cyc.verdict,
        reached: cyc.reached.len(),
        expected: cyc.expected.len(),
        missing: cyc.missing,
        extra: cyc.extra,
        witness_path: cyc.witness_path,
        simple_w: simple.verdict,
        w_basis: basis.len(),
        weights_injective: weights_injective(&basis, alpha),
        closure: closure.verdict,
        ladders_replayed,
    })
}

/// Runs the configured sweep. Cases run in parallel; output order is fixed.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let mut jobs = Vec::new();
    let mut sums = Vec::new();
    for &n in &config.n {
        for alpha in config.alphas_for(n)? {
            for m in config.m_range[0]..=config.m_range[1] {
                for set in alpha.zero_set().subsets() {
                    jobs.push((alpha.clone(), m, set));
                }
                for j in 1..=alpha.zero_set().len() {
                    sums.push((alpha.clone(), m, j));
                }
            }
        }
    }
    let cases = jobs
        .par_iter()
        .map(|(alpha, m, set)| verify_case(alpha, *m, *set, config.bound, config.ladders))
        .collect::<Result<Vec<_>>>()?;
    let direct_sums = sums
        .par_iter()
        .map(|(alpha, m, j)| check_direct_sum(alpha, *m, *j, config.bound))
        .collect::<Result<Vec<_>>>()?;
    let passed = cases.iter().all(CaseSummary::passed) && direct_sums.iter().all(|d| d.verdict);
    Ok(SweepReport { config: config.clone(), cases, direct_sums, passed })
}

/// [`run_sweep`] on a pool sized by `LGL_SWEEP_THREADS` when set.
pub fn run_sweep_with_env(config: &SweepConfig) -> Result<SweepReport> {
    let threads = std::env::var("LGL_SWEEP_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&t| t > 0);
    match threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
            pool.install(|| run_sweep(config))
        }
        None => run_sweep(config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(n, ix.iter().copied()).unwrap()
    }

    fn alpha(list: &str) -> AlphaParam {
        AlphaParam::parse_normalized(list).unwrap().0
    }

    #[test]
    fn reachability_examples() {
        let a = AlphaParam::zero(2);
        let w = Window::new(2, 3, 4).unwrap();
        let r = reachability_set(&Exponent::from([3, 0]), &a, &w).unwrap();
        let expected: BTreeSet<Exponent> = (0..=3).map(|i| Exponent::from([i, 3 - i])).collect();
        assert_eq!(r, expected);

        let w = Window::new(2, -2, 5).unwrap();
        let r = reachability_set(&Exponent::from([0, -2]), &a, &w).unwrap();
        let expected: BTreeSet<Exponent> = (0..=3).map(|i| Exponent::from([i, -2 - i])).collect();
        assert_eq!(r, expected);

        let w = Window::new(3, 0, 3).unwrap();
        let r = reachability_set(&Exponent::zero(3), &AlphaParam::zero(3), &w).unwrap();
        assert_eq!(r, BTreeSet::from([Exponent::zero(3)]));

        assert!(matches!(reachability_set(&Exponent::from([9, -6]), &a, &Window::new(2, 3, 4).unwrap()), Err(Error::OutsideWindow(_))));
    }

    #[test]
    fn generator_outside_window() {
        let a = AlphaParam::zero(3);
        let r = check_cyclic(&a, 2, set(3, &[1, 2]), 3).unwrap();
        assert_eq!(r.starts, vec![Exponent::from([-1, -1, 4])]);
        assert!(r.verdict, "{r:?}");
        assert!(r.reached.iter().all(|k| k.max_abs() <= 3));
    }

    #[test]
    fn cyclic_examples() {
        let r = check_cyclic(&AlphaParam::zero(2), 2, set(2, &[1]), 5).unwrap();
        assert!(r.verdict, "{r:?}");
        let a = alpha("1/2,i,0");
        let r = check_cyclic(&a, 4, IndexSet::EMPTY, 6).unwrap();
        assert!(r.verdict);
        assert!(r.reached.contains(&Exponent::from([1, -2, 5])));
        let r = check_cyclic(&AlphaParam::zero(3), -2, IndexSet::EMPTY, 4).unwrap();
        assert!(r.verdict && r.reached.is_empty() && r.starts.is_empty());
    }

    #[test]
    fn cyclic_collapse_cases() {
        let a = AlphaParam::zero(3);
        for m in [-2, 0, 2] {
            let r = check_cyclic(&a, m, IndexSet::full(3), 5).unwrap();
            assert!(r.verdict, "m={m}: {:?} {:?}", r.missing, r.extra);
            assert_eq!(r.starts.len(), 3);
        }
    }

    #[test]
    fn simple_w_examples() {
        let a = AlphaParam::zero(2);
        assert!(check_simple_w(&a, -3, set(2, &[1]), 6).unwrap().verdict);
        let r = check_simple_w(&a, 3, IndexSet::EMPTY, 3).unwrap();
        assert!(r.verdict && r.expected.len() == 4);
        let r = check_simple_w(&a, 0, IndexSet::EMPTY, 3).unwrap();
        assert!(r.verdict && r.expected.len() == 1);
    }

    #[test]
    fn direct_sum_examples() {
        let r = check_direct_sum(&AlphaParam::zero(3), -2, 1, 5).unwrap();
        assert!(r.verdict && r.v_supports == Some(true));
        assert_eq!(r.blocks.len(), 3);
        let r = check_direct_sum(&AlphaParam::zero(3), 2, 3, 5).unwrap();
        assert!(r.verdict && r.quotient_size == 0);
        let r = check_direct_sum(&alpha("0,1/2,0,0"), 2, 1, 4).unwrap();
        assert!(r.verdict);
        let sets: Vec<IndexSet> = r.blocks.iter().map(|b| b.set).collect();
        assert_eq!(sets, vec![set(4, &[1]), set(4, &[3]), set(4, &[4])]);
        assert!(check_direct_sum(&alpha("0,1/2,0,0"), 2, 4, 4).is_err());
    }

    #[test]
    fn indecomposability_examples() {
        let splits = binomial_splits(4, 2);
        assert!(splits.iter().all(|s| s.holds));
        assert_eq!((splits[0].lhs.as_str(), splits[0].rhs.as_str()), ("6", "3"));
        assert_eq!(splits[1].rhs, "2");

        let a = AlphaParam::zero(3);
        let r = indecomposability_certificate(&a, -3, 2).unwrap();
        assert!(r.verdict);
        let w = r.pair_witnesses.iter().find(|p| p.first == set(3, &[1, 2]) && p.second == set(3, &[2, 3])).unwrap();
        assert_eq!(w.generator, Some(Exponent::from([0, -3, 0])));

        assert!(matches!(indecomposability_certificate(&AlphaParam::zero(2), -1, 1), Err(Error::NotAssertedCase(_))));
        let edge = indecomposability_certificate(&AlphaParam::zero(2), -1, 2).unwrap();
        assert!(!edge.verdict && edge.reason.is_some());
        assert!(indecomposability_certificate(&AlphaParam::zero(2), -2, 2).unwrap().verdict);

        let t = indecomposability_certificate(&alpha("1/2,i,0"), 4, 1).unwrap();
        assert!(t.verdict && t.argument == IndecomposabilityArgument::Floor);
        assert!(indecomposability_certificate(&AlphaParam::zero(3), 2, 3).unwrap().verdict);
    }

    #[test]
    fn closure_examples() {
        let a = AlphaParam::zero(2);
        let r = closure_check(&ModuleId::v(&a, 2, set(2, &[1])).unwrap(), 5).unwrap();
        assert!(r.verdict && r.images_checked > 0);
        let r = closure_check(&ModuleId::l(&a, 2, 2).unwrap(), 4).unwrap();
        assert!(r.verdict);
        let b = alpha("1/2,0");
        assert!(!closure_check(&ModuleId::w(&b, 1, set(2, &[2])).unwrap(), 4).unwrap().verdict);
    }

    #[test]
    fn small_sweep_passes() {
        let config = SweepConfig { n: vec![2], m_range: [-2, 2], bound: 4, ..SweepConfig::default() };
        let report = run_sweep(&config).unwrap();
        assert!(report.passed, "{:#?}", report.cases.iter().filter(|c| !c.passed()).collect::<Vec<_>>());
        let json = serde_json::to_string(&report).unwrap();
        let back: SweepReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
