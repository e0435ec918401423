//! Text, JSON and DOT renderings. Every renderer is a pure function of its
//! input, so identical inputs give byte-identical output.

use std::fmt::Write as _;

use orbitposet_core::{HeReport, OrbitPoset, OrbitSpace, SuiteReport, WeylGroup};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct StratumJson {
    #[serde(rename = "K")]
    k: String,
    p: String,
    orbits: usize,
}

#[derive(Serialize)]
struct EnumJson {
    schema_version: u32,
    cartan: String,
    group_order: usize,
    orbit_count: usize,
    strata: Vec<StratumJson>,
    orbits: Vec<String>,
}

fn strata(space: &OrbitSpace) -> Vec<StratumJson> {
    let order = space.group().order();
    space
        .model()
        .family()
        .iter()
        .map(|m| StratumJson {
            k: m.k.to_string(),
            p: m.p.to_string(),
            orbits: space.min_reps(m.k).map_or(0, <[_]>::len) * order,
        })
        .collect()
}

pub fn enum_text(space: &OrbitSpace) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cartan: {}", space.model().cartan());
    for s in strata(space) {
        let _ = writeln!(out, "K = {} ; p = {} : {} orbits", s.k, s.p, s.orbits);
    }
    for o in space.orbits() {
        let _ = writeln!(out, "{}", space.format_orbit(o));
    }
    let _ = writeln!(out, "{} orbits", space.orbits().len());
    out
}

pub fn enum_json(space: &OrbitSpace) -> String {
    let doc = EnumJson {
        schema_version: SCHEMA_VERSION,
        cartan: space.model().cartan().to_string(),
        group_order: space.group().order(),
        orbit_count: space.orbits().len(),
        strata: strata(space),
        orbits: space.orbits().iter().map(|o| space.format_orbit(o)).collect(),
    };
    to_json(&doc)
}

pub fn hasse_dot(space: &OrbitSpace, poset: &OrbitPoset) -> String {
    let mut out = String::new();
    out.push_str("digraph orbit_closures {\n");
    out.push_str("  node [shape=box];\n");
    for (i, o) in poset.orbits().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", space.format_orbit(o));
    }
    for &(a, b) in poset.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    label: String,
}

#[derive(Serialize)]
struct HasseJson {
    schema_version: u32,
    cartan: String,
    nodes: Vec<NodeJson>,
    /// `[upper, lower]`: the lower orbit is covered by the upper one.
    edges: Vec<[usize; 2]>,
}

pub fn hasse_json(space: &OrbitSpace, poset: &OrbitPoset) -> String {
    let doc = HasseJson {
        schema_version: SCHEMA_VERSION,
        cartan: space.model().cartan().to_string(),
        nodes: poset
            .orbits()
            .iter()
            .enumerate()
            .map(|(id, o)| NodeJson { id, label: space.format_orbit(o) })
            .collect(),
        edges: poset.covers().iter().map(|&(a, b)| [a, b]).collect(),
    };
    to_json(&doc)
}

pub fn hasse_text(space: &OrbitSpace, poset: &OrbitPoset) -> String {
    let mut out = String::new();
    for &(a, b) in poset.covers() {
        let _ = writeln!(
            out,
            "{} > {}",
            space.format_orbit(&poset.orbits()[a]),
            space.format_orbit(&poset.orbits()[b])
        );
    }
    let _ = writeln!(out, "{} orbits, {} covering relations", poset.len(), poset.covers().len());
    out
}

#[derive(Serialize)]
struct CheckJson {
    id: &'static str,
    description: &'static str,
    cases: u64,
    passed: bool,
    counterexample: Option<String>,
}

#[derive(Serialize)]
struct SuiteJson {
    schema_version: u32,
    cartan: String,
    orbit_count: usize,
    cover_count: usize,
    all_passed: bool,
    checks: Vec<CheckJson>,
}

pub fn suite_text(space: &OrbitSpace, report: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "cartan: {} ({} orbits, {} covering relations)",
        space.model().cartan(),
        report.orbits,
        report.covers
    );
    for c in &report.checks {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{verdict} {:<8} {:>10} cases  {}", c.id.key(), c.cases, c.id.description());
        if let Some(cx) = &c.counterexample {
            let _ = writeln!(out, "     counterexample: {cx}");
        }
    }
    let passed = report.checks.iter().filter(|c| c.passed()).count();
    let _ = writeln!(out, "{passed}/{} checks passed", report.checks.len());
    out
}

pub fn suite_json(space: &OrbitSpace, report: &SuiteReport) -> String {
    let doc = SuiteJson {
        schema_version: SCHEMA_VERSION,
        cartan: space.model().cartan().to_string(),
        orbit_count: report.orbits,
        cover_count: report.covers,
        all_passed: report.all_passed(),
        checks: report
            .checks
            .iter()
            .map(|c| CheckJson {
                id: c.id.key(),
                description: c.id.description(),
                cases: c.cases,
                passed: c.passed(),
                counterexample: c.counterexample.clone(),
            })
            .collect(),
    };
    to_json(&doc)
}

#[derive(Serialize)]
pub struct LeqJson {
    pub schema_version: u32,
    pub upper: String,
    pub lower: String,
    pub reformulation: Criterion,
    pub bclosure: Criterion,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct Criterion {
    pub holds: bool,
    pub u: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_prime: Option<String>,
}

pub fn leq_text(doc: &LeqJson) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} ⊆ closure {}", doc.lower, doc.upper);
    match &doc.reformulation.u {
        Some(u) => {
            let _ = writeln!(out, "reformulation: true (u = {u})");
        }
        None => out.push_str("reformulation: false\n"),
    }
    match (&doc.bclosure.u, &doc.bclosure.u_prime) {
        (Some(u), Some(up)) => {
            let _ = writeln!(out, "bclosure: true (u = {u}, u' = {up})");
        }
        _ => out.push_str("bclosure: false\n"),
    }
    if !doc.agree {
        out.push_str("criteria disagree\n");
    }
    out
}

pub fn leq_json(doc: &LeqJson) -> String {
    to_json(doc)
}

#[derive(Serialize)]
struct HeJson {
    inner: String,
    outer: String,
    checked: u64,
    passed: bool,
    counterexample: Option<String>,
}

#[derive(Serialize)]
struct HeSuiteJson {
    schema_version: u32,
    cartan: String,
    all_passed: bool,
    pairs: Vec<HeJson>,
}

fn he_counterexample(g: &WeylGroup, r: &HeReport) -> Option<String> {
    r.counterexample.map(|c| {
        format!(
            "u = {} = ({})({}), w = {}, w' = {}",
            g.format(c.u),
            g.format(c.u1),
            g.format(c.u2),
            g.format(c.w),
            g.format(c.w_prime)
        )
    })
}

pub fn he_text(g: &WeylGroup, reports: &[HeReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict} inner = {} outer = {} ({} cases)",
            r.inner, r.outer, r.checked
        );
        if let Some(cx) = he_counterexample(g, r) {
            let _ = writeln!(out, "     counterexample: {cx}");
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "{passed}/{} pairs passed", reports.len());
    out
}

pub fn he_json(g: &WeylGroup, reports: &[HeReport]) -> String {
    let doc = HeSuiteJson {
        schema_version: SCHEMA_VERSION,
        cartan: g.root_system().cartan().to_string(),
        all_passed: reports.iter().all(HeReport::passed),
        pairs: reports
            .iter()
            .map(|r| HeJson {
                inner: r.inner.to_string(),
                outer: r.outer.to_string(),
                checked: r.checked,
                passed: r.passed(),
                counterexample: he_counterexample(g, r),
            })
            .collect(),
    };
    to_json(&doc)
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}
