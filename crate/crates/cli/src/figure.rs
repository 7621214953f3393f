//! Diagrams of the action on a degree slice.
//!
//! `sign-regions` has one node per realizable sign pattern of the exponent and
//! an arrow `S -> T` whenever some nonzero single-unit move carries a monomial
//! with negative support `S` to one with negative support `T`. Arrows are
//! found by scanning a window large enough to contain every pattern.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use laurent_gl::action::moves_nonzero;
use laurent_gl::{AlphaParam, Exponent, IndexSet, Result, Window};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Node {
    pub id: String,
    pub label: String,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Serialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub color: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Figure {
    pub mode: &'static str,
    pub n: usize,
    pub m: i64,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

fn sign_label(n: usize, neg: IndexSet) -> String {
    let signs: Vec<&str> = (1..=n).map(|i| if neg.contains(i) { "-" } else { "+" }).collect();
    format!("({})", signs.join(","))
}

fn region_id(neg: IndexSet) -> String {
    format!("r{}", neg.bits())
}

/// Moves `k -> k + e_a - e_b` with nonzero coefficient.
fn moves<'a>(k: &'a Exponent, alpha: &'a AlphaParam) -> impl Iterator<Item = Exponent> + 'a {
    let n = k.n();
    (1..=n)
        .filter(move |&b| moves_nonzero(b, k, alpha))
        .flat_map(move |b| (1..=n).filter(move |&a| a != b).map(move |a| k.moved(a, b)))
}

pub fn sign_regions(alpha: &AlphaParam, m: i64) -> Figure {
    let n = alpha.n();
    // Every realizable pattern, and every one-move transition between patterns,
    // has a witness with entries in [-(|m|+n+1), |m|+n+1].
    let bound = m.abs() + n as i64 + 1;
    let w = Window { n, m, bound };
    let mut regions = BTreeSet::new();
    let mut arrows = BTreeSet::new();
    for k in w.points() {
        let s = k.neg_support();
        regions.insert(s);
        for q in moves(&k, alpha) {
            let t = q.neg_support();
            if t != s {
                arrows.insert((s, t));
            }
        }
    }
    let mut rows: Vec<Vec<IndexSet>> = vec![Vec::new(); n + 1];
    for &s in &regions {
        rows[s.len()].push(s);
    }
    let mut nodes = Vec::new();
    for (level, row) in rows.iter().enumerate() {
        let width = row.len() as f64;
        for (i, &s) in row.iter().enumerate() {
            nodes.push(Node {
                id: region_id(s),
                label: sign_label(n, s),
                x: 2.5 * (i as f64 - (width - 1.0) / 2.0),
                y: -1.5 * level as f64 + 0.0,
            });
        }
    }
    let edges = arrows
        .into_iter()
        .map(|(s, t)| Edge {
            from: region_id(s),
            to: region_id(t),
            color: if t.is_proper_subset(s) { "red" } else { "blue" },
        })
        .collect();
    Figure { mode: "sign-regions", n, m, nodes, edges }
}

pub fn lattice(alpha: &AlphaParam, m: i64, bound: i64) -> Result<Figure> {
    let n = alpha.n();
    let w = Window::new(n, m, bound)?;
    let points = w.points();
    let id = |k: &Exponent| {
        let parts: Vec<String> = k.entries().iter().map(|v| v.to_string().replace('-', "m")).collect();
        format!("k_{}", parts.join("_"))
    };
    let nodes = points
        .iter()
        .map(|k| {
            let (x, y) = match n {
                1 => (0.0, 0.0),
                2 => (k.get(1) as f64, 0.0),
                3 => ((k.get(1) - k.get(3)) as f64 * 0.866, k.get(2) as f64 - (k.get(1) + k.get(3)) as f64 / 2.0),
                _ => (k.get(1) as f64, k.get(2) as f64),
            };
            Node { id: id(k), label: k.to_string(), x, y }
        })
        .collect();
    let mut edges = Vec::new();
    for k in &points {
        let targets: BTreeSet<Exponent> = moves(k, alpha).filter(|q| w.contains(q)).collect();
        for q in targets {
            let color = if q.neg_support() != k.neg_support() { "red" } else { "gray" };
            edges.push(Edge { from: id(k), to: id(&q), color });
        }
    }
    Ok(Figure { mode: "lattice", n, m, nodes, edges })
}

impl Figure {
    pub fn dot(&self) -> String {
        let name = self.mode.replace('-', "_");
        let mut out = format!("digraph {name} {{\n  label=\"n={}, m={}\";\n  node [shape=box];\n", self.n, self.m);
        for v in &self.nodes {
            let _ = writeln!(out, "  {} [label=\"{}\", pos=\"{:.3},{:.3}!\"];", v.id, v.label, v.x, v.y);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  {} -> {} [color={}];", e.from, e.to, e.color);
        }
        out.push_str("}\n");
        out
    }

    pub fn tikz(&self) -> String {
        let mut out = String::from("\\begin{tikzpicture}[>=stealth]\n");
        for v in &self.nodes {
            let _ = writeln!(out, "  \\node[draw] ({}) at ({:.3},{:.3}) {{${}$}};", v.id, v.x, v.y, v.label);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  \\draw[->,{}] ({}) -- ({});", e.color, e.from, e.to);
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }

    pub fn text(&self) -> String {
        let mut out = format!("{} n={} m={}: {} nodes, {} arrows\n", self.mode, self.n, self.m, self.nodes.len(), self.edges.len());
        let label = |id: &str| self.nodes.iter().find(|v| v.id == id).map(|v| v.label.clone()).unwrap_or_default();
        for e in &self.edges {
            let _ = writeln!(out, "  {} -> {} ({})", label(&e.from), label(&e.to), e.color);
        }
        out
    }
}
