use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use laurent_gl::filtration::FiltrationConfig;
use laurent_gl::{
    act_word, check_direct_sum, check_filtration_axioms, classify, classify_hw, generator_of_v,
    indecomposability_certificate, ladder_word, run_sweep_with_env, verify_hw, Error, GaussianRational,
    GeneratorResult, HwCertificate, LaurentPoly, MatrixUnit, ModuleId, SweepConfig, UWord,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::{Common, Format};
use crate::figure;
use crate::params::{parse_list, parse_scalar, Resolver, Twist};

/// Result of a command: a JSON document, its text rendering, and whether
/// everything it checked held.
pub struct Outcome {
    pub value: Value,
    pub text: String,
    pub ok: bool,
    /// DOT and TikZ renderings, for commands that have them.
    pub graph: Option<(String, String)>,
}

impl Outcome {
    fn new(value: Value, text: String, ok: bool) -> Self {
        Outcome { value, text, ok, graph: None }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.value)? + "\n"),
            Format::Text => Ok(self.text.clone()),
            Format::Dot => self.graph.as_ref().map(|g| g.0.clone()).ok_or_else(|| anyhow!("--format: dot is only available for figure")),
            Format::Tikz => self.graph.as_ref().map(|g| g.1.clone()).ok_or_else(|| anyhow!("--format: tikz is only available for figure")),
        }
    }
}

fn to_object<T: Serialize>(v: &T) -> Result<Map<String, Value>> {
    match serde_json::to_value(v)? {
        Value::Object(map) => Ok(map),
        other => Ok(Map::from_iter([("value".to_string(), other)])),
    }
}

fn with_shift(mut map: Map<String, Value>, t: &Twist) -> Result<Value> {
    map.insert("alpha_shift".into(), serde_json::to_value(&t.reported)?);
    Ok(Value::Object(map))
}

fn lib(e: Error) -> anyhow::Error {
    anyhow!("{e}")
}

pub fn classify_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let t = r.twist()?;
    let m = r.degree(&t)?;
    let level = if args.set.is_some() { None } else { r.level()? };
    if let Some(j) = level {
        return classify_level(&r, &t, m, j);
    }
    let set = r.index_set(&t)?;
    let c = classify(&t.alpha, m, set).map_err(lib)?;
    let hw_ok = c.highest_weight.as_ref().map(|h| verify_hw(h, &t.alpha));
    let mut map = to_object(&c)?;
    if let Some(ok) = hw_ok {
        map.insert("hw_verified".into(), Value::Bool(ok));
    }
    let mut text = String::new();
    writeln!(text, "module: {}", c.module)?;
    writeln!(text, "case: {}", c.case)?;
    match &c.generator {
        GeneratorResult::Generator { exponent, .. } => writeln!(text, "generator: {exponent}")?,
        GeneratorResult::ZeroModule { .. } => writeln!(text, "generator: none (zero module)")?,
        GeneratorResult::EqualsModule { module, .. } => writeln!(text, "generator: equals {module}")?,
    }
    writeln!(text, "dim W: {}", c.w_dimension)?;
    writeln!(text, "finite dimensional: {}", c.finite_dimensional)?;
    if let Some(h) = &c.highest_weight {
        writeln!(text, "highest weight vector: {} weight {} ({})", h.vector, h.weight, h.pattern.label())?;
    }
    if let Some(note) = &c.dimension_note {
        writeln!(text, "monomial count {} vs stated {}: agrees = {}", note.counted, note.stated, note.agrees)?;
    }
    Ok(Outcome::new(with_shift(map, &t)?, text, hw_ok.unwrap_or(true)))
}

fn classify_level(r: &Resolver, t: &Twist, m: i64, j: i64) -> Result<Outcome> {
    let module = ModuleId::l(&t.alpha, m, j).map_err(|e| anyhow!("--j: {e}"))?;
    let bound = r.bound(6)?;
    let mut map = Map::new();
    map.insert("module".into(), serde_json::to_value(&module)?);
    map.insert("B".into(), json!(bound));
    let mut ok = true;
    let mut text = format!("module: {module}\n");
    if j >= 0 {
        match indecomposability_certificate(&t.alpha, m, j as usize) {
            Ok(rep) => {
                ok &= rep.verdict;
                writeln!(text, "indecomposable: {} ({:?})", rep.verdict, rep.argument)?;
                if let Some(reason) = &rep.reason {
                    writeln!(text, "  {reason}")?;
                }
                map.insert("indecomposability".into(), serde_json::to_value(&rep)?);
            }
            Err(Error::NotAssertedCase(reason)) => {
                writeln!(text, "indecomposability: not asserted ({reason})")?;
                map.insert("indecomposability".into(), json!({ "not_asserted": reason }));
            }
            Err(e) => return Err(lib(e)),
        }
    }
    if j >= 1 && (j as usize) <= t.alpha.zero_set().len() {
        let ds = check_direct_sum(&t.alpha, m, j as usize, bound).map_err(lib)?;
        ok &= ds.verdict;
        writeln!(text, "quotient by level {}: {} window monomials in {} blocks, partition = {}", j - 1, ds.quotient_size, ds.blocks.len(), ds.verdict)?;
        map.insert("direct_sum".into(), serde_json::to_value(&ds)?);
    }
    Ok(Outcome::new(with_shift(map, t)?, text, ok))
}

pub fn generator_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let t = r.twist()?;
    let m = r.degree(&t)?;
    let set = r.index_set(&t)?;
    let module = ModuleId::v(&t.alpha, m, set).map_err(lib)?;
    let g = generator_of_v(&t.alpha, m, set).map_err(lib)?;
    let text = match &g {
        GeneratorResult::Generator { exponent, case } => format!("{module}: generated by x^{exponent} [{case}]\n"),
        GeneratorResult::ZeroModule { case } => format!("{module}: zero module [{case}]\n"),
        GeneratorResult::EqualsModule { module: other, case } => format!("{module} = {other} [{case}]\n"),
    };
    let map = Map::from_iter([("module".to_string(), serde_json::to_value(&module)?), ("generator".to_string(), serde_json::to_value(&g)?)]);
    Ok(Outcome::new(with_shift(map, &t)?, text, true))
}

fn parse_word(s: &str, n: usize) -> Result<Vec<MatrixUnit>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|pair| {
            let ab: Vec<usize> = parse_list("word", pair)?;
            let [a, b] = ab.as_slice() else { bail!("--word: `{pair}` is not a pair a,b") };
            MatrixUnit::new(n, *a, *b).map_err(|e| anyhow!("--word: {e}"))
        })
        .collect()
}

pub fn act_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let t = r.twist()?;
    let word = match &args.word {
        Some(s) => {
            let prefactor = match &args.prefactor {
                Some(p) => parse_scalar("prefactor", p)?,
                None => GaussianRational::from(1),
            };
            UWord::new(prefactor, parse_word(s, t.n())?)
        }
        None => {
            let mut w = r.decode::<UWord>("word")?.ok_or_else(|| anyhow!("--word: required"))?;
            if let Some(p) = &args.prefactor {
                w.prefactor = parse_scalar("prefactor", p)?;
            }
            w
        }
    };
    let input = if args.p.is_some() {
        LaurentPoly::x(r.exponent("p", &[], &t)?)
    } else if let Some(f) = r.decode::<LaurentPoly>("input")? {
        f
    } else {
        bail!("--p: required");
    };
    if input.n() != t.n() {
        bail!("--input: polynomial has n = {} but alpha has {}", input.n(), t.n());
    }
    let output = act_word(&word, &input, &t.alpha).map_err(lib)?;
    let text = format!("({word}) . ({input}) = {output}\n");
    let map = Map::from_iter([
        ("alpha".to_string(), serde_json::to_value(&t.alpha)?),
        ("word".to_string(), serde_json::to_value(&word)?),
        ("input".to_string(), serde_json::to_value(&input)?),
        ("output".to_string(), serde_json::to_value(&output)?),
    ]);
    Ok(Outcome::new(with_shift(map, &t)?, text, true))
}

pub fn ladder_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let t = r.twist()?;
    let p = r.exponent("p", &["p", "from"], &t)?;
    let q = r.exponent("q", &["q", "to"], &t)?;
    let cert = ladder_word(&p, &q, &t.alpha).map_err(lib)?;
    let replayed = cert.replay(&t.alpha).map_err(lib)?;
    let product = cert.coefficient_product();
    let mut text = format!("ladder {p} -> {q} under alpha = {}\n", t.alpha);
    for (i, s) in cert.steps.iter().enumerate() {
        writeln!(text, "  step {}: {} coefficient {} -> {}", i + 1, s.unit, s.coeff, s.exps)?;
    }
    writeln!(text, "coefficient product: {product}")?;
    writeln!(text, "word: {}", cert.word)?;
    writeln!(text, "replayed: {replayed}")?;
    let map = Map::from_iter([
        ("alpha".to_string(), serde_json::to_value(&t.alpha)?),
        ("certificate".to_string(), serde_json::to_value(&cert)?),
        ("coefficient_product".to_string(), serde_json::to_value(&product)?),
        ("replayed".to_string(), Value::Bool(replayed)),
    ]);
    Ok(Outcome::new(with_shift(map, &t)?, text, replayed))
}

pub fn hw_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let flags_given = !args.alpha.is_empty() || args.m.is_some() || args.set.is_some() || args.n.is_some();
    let given = match r.json.as_ref().and_then(|j| j.get("certificate")) {
        Some(v) if !v.is_null() && !flags_given => Some(serde_json::from_value::<HwCertificate>(v.clone())?),
        _ => None,
    };
    let (cert, shift, module) = match given {
        Some(cert) => {
            let shift = r.recorded_shift(cert.module.alpha().n())?;
            let module = cert.module.clone();
            (Some(cert), shift, module)
        }
        None => {
            let t = r.twist()?;
            let m = r.degree(&t)?;
            let set = r.index_set(&t)?;
            (classify_hw(&t.alpha, m, set), t.reported.clone(), ModuleId::w(&t.alpha, m, set).map_err(lib)?)
        }
    };
    let verified = cert.as_ref().is_some_and(|c| verify_hw(c, module.alpha()));
    let text = match &cert {
        Some(c) => format!(
            "{}: highest weight vector x^{} of weight {} ({}, l = {}), raising images in {}; verified = {verified}\n",
            c.module,
            c.vector,
            c.weight,
            c.pattern.label(),
            c.ell,
            c.lowered_into
        ),
        None => format!("{module}: no highest-weight pattern applies\n"),
    };
    let mut map = Map::from_iter([
        ("module".to_string(), serde_json::to_value(&module)?),
        ("certificate".to_string(), serde_json::to_value(&cert)?),
        ("verified".to_string(), Value::Bool(verified)),
        ("alpha_shift".to_string(), serde_json::to_value(&shift)?),
    ]);
    if cert.is_none() {
        map.insert("reason".into(), json!("no highest-weight pattern applies"));
    }
    Ok(Outcome::new(Value::Object(map), text, verified))
}

pub fn sweep_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let mut config = match r.json.as_ref() {
        Some(root) => {
            let body = root.get("config").unwrap_or(root);
            serde_json::from_value::<SweepConfig>(body.clone()).map_err(|e| anyhow!("--input: not a sweep config or report: {e}"))?
        }
        None => SweepConfig::default(),
    };
    if let Some(s) = &args.n {
        config.n = parse_list("n", s)?;
    }
    if args.m.is_some() {
        config.m_range = r.degree_range(config.m_range)?;
    }
    if let Some(b) = args.bound {
        if b < 0 {
            bail!("--B: must be >= 0, got {b}");
        }
        config.bound = b;
    }
    if !args.alpha.is_empty() {
        config.alphas = args.alpha.iter().map(|a| parse_list("alpha", a)).collect::<Result<_>>()?;
    }
    for &n in &config.n {
        laurent_gl::Window::new(n, 0, 0).map_err(|e| anyhow!("--n: {e}"))?;
    }
    let report = run_sweep_with_env(&config).map_err(lib)?;
    let failed: Vec<_> = report.cases.iter().filter(|c| !c.passed()).collect();
    let ds_failed = report.direct_sums.iter().filter(|d| !d.verdict).count();
    let mut text = format!(
        "{} cases, {} failed; {} direct-sum checks, {} failed\n",
        report.cases.len(),
        failed.len(),
        report.direct_sums.len(),
        ds_failed
    );
    for c in failed {
        writeln!(text, "  FAIL alpha={} m={} J={} [{}]", c.alpha, c.m, c.set, c.case)?;
    }
    Ok(Outcome::new(serde_json::to_value(&report)?, text, report.passed))
}

pub fn filtration_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let n = match &args.n {
        Some(s) => s.trim().parse::<usize>().map_err(|e| anyhow!("--n: cannot parse `{s}`: {e}"))?,
        None => r.decode::<usize>("n")?.unwrap_or(2),
    };
    let config = FiltrationConfig { n, m_range: r.degree_range([-3, 3])?, bound: r.bound(4)? };
    let report = check_filtration_axioms(&config).map_err(|e| anyhow!("--n: {e}"))?;
    let a = report.axioms;
    let mut text = format!("n = {n}, m in [{}, {}], B = {}\n", config.m_range[0], config.m_range[1], config.bound);
    for (name, v) in [
        ("unit", a.unit),
        ("monotone", a.monotone),
        ("product", a.product),
        ("exhaustive", a.exhaustive),
        ("strict_product", a.strict_product),
        ("strict_product_disjoint", a.strict_product_disjoint),
    ] {
        writeln!(text, "  {name}: {}", if v { "pass" } else { "FAIL" })?;
    }
    for c in &report.counterexamples {
        writeln!(text, "  counterexample ({}): k = {} k' = {:?} x = {:?} y = {:?}", c.axiom, c.k, c.k2.as_ref().map(|k| k.to_string()), c.x.map(|x| x.to_string()), c.y.map(|y| y.to_string()))?;
    }
    writeln!(text, "  graded pieces matching W bases: {}", report.graded_iso_failures.is_empty())?;
    Ok(Outcome::new(serde_json::to_value(&report)?, text, report.passed()))
}

pub fn figure_cmd(args: &Common) -> Result<Outcome> {
    let r = Resolver::new(args)?;
    let t = r.twist()?;
    let m = r.degree(&t)?;
    let mode = match args.mode {
        Some(mode) => mode,
        None => r.decode::<crate::args::FigureMode>("mode")?.unwrap_or(crate::args::FigureMode::SignRegions),
    };
    let fig = match mode {
        crate::args::FigureMode::SignRegions => figure::sign_regions(&t.alpha, m),
        crate::args::FigureMode::Lattice => figure::lattice(&t.alpha, m, r.bound(2)?).map_err(lib)?,
    };
    let mut map = to_object(&fig)?;
    map.insert("alpha".into(), serde_json::to_value(&t.alpha)?);
    let value = with_shift(map, &t)?;
    let text = fig.text();
    let graph = Some((fig.dot(), fig.tikz()));
    Ok(Outcome { value, text, ok: true, graph })
}
