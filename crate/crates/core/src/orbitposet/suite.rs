//! Exhaustive verification of the combinatorial statements about orbit
//! closures over an enumerated model.
//!
//! Every check walks its cases in orbit order and stops at the first
//! failure, so a reported counterexample is the smallest one in that order.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Orbit, OrbitPoset, OrbitSpace};
use crate::coxeter::WeylElement;
use crate::embedding::DivisorSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// Reflexive, antisymmetric, transitive.
    PosetAxioms,
    /// `[∅, e, w0]` is the unique orbit whose closure contains all others.
    UniqueMaximum,
    /// `|orbits| = Σ_K |W^{I-p(K)}| |W|`.
    CountIdentity,
    /// (a) containment forces `v <= v'`.
    ContainmentV,
    /// (b) `[K,v,w'] ⊆ closure [K',v,w]` iff `w' <= w` and `K' ⊆ K`.
    ContainmentSameV,
    /// (c) `v w0^{I-J} <= v' w0^{I-J}` and `w' <= w` give containment.
    LongestTwist,
    /// (d) `[∅,e,w]` with `l(w) < l(w0) - 1` is a component of two others.
    BruhatCellComponent,
    /// (e) `[K,e,w]` is a component of `[∅,e,w] ∩ [K,e,w0]`.
    BoundaryComponent,
    /// (f) `[K,v,w0]` is a component of `[K,v',w0] ∩ [∅,e,w0 v^{-1}]`.
    DescentComponentTop,
    /// (g) `[K,v,w]` is a component of `[K,v,w0] ∩ [K,v',w]`.
    DescentComponent,
    /// (h) the non-maximal orbits that are not components of an intersection
    /// of two other closures are exactly the divisorial ones.
    ComponentIntersection,
    /// (i) both closure criteria agree on every ordered pair.
    CriterionEquivalence,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::PosetAxioms,
        CheckId::UniqueMaximum,
        CheckId::CountIdentity,
        CheckId::ContainmentV,
        CheckId::ContainmentSameV,
        CheckId::LongestTwist,
        CheckId::BruhatCellComponent,
        CheckId::BoundaryComponent,
        CheckId::DescentComponentTop,
        CheckId::DescentComponent,
        CheckId::ComponentIntersection,
        CheckId::CriterionEquivalence,
    ];

    /// Stable short key used in reports.
    pub fn key(self) -> &'static str {
        match self {
            CheckId::PosetAxioms => "poset",
            CheckId::UniqueMaximum => "maximum",
            CheckId::CountIdentity => "count",
            CheckId::ContainmentV => "a",
            CheckId::ContainmentSameV => "b",
            CheckId::LongestTwist => "c",
            CheckId::BruhatCellComponent => "d",
            CheckId::BoundaryComponent => "e",
            CheckId::DescentComponentTop => "f",
            CheckId::DescentComponent => "g",
            CheckId::ComponentIntersection => "h",
            CheckId::CriterionEquivalence => "i",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CheckId::PosetAxioms => "closure order is reflexive, antisymmetric and transitive",
            CheckId::UniqueMaximum => "[{}; e; w0] is the unique maximum",
            CheckId::CountIdentity => "orbit count equals sum over K of |W^(I-p(K))|*|W|",
            CheckId::ContainmentV => "containment implies v <= v'",
            CheckId::ContainmentSameV => "[K,v,w'] in closure [K',v,w] iff w' <= w and K' in K",
            CheckId::LongestTwist => "v*w0^(I-J) <= v'*w0^(I-J) and w' <= w imply containment",
            CheckId::BruhatCellComponent => "[{},e,w] is a component of two larger cell closures",
            CheckId::BoundaryComponent => "[K,e,w] is a component of [{},e,w] and [K,e,w0]",
            CheckId::DescentComponentTop => "[K,v,w0] is a component of [K,v',w0] and [{},e,w0*v^-1]",
            CheckId::DescentComponent => "[K,v,w] is a component of [K,v,w0] and [K,v',w]",
            CheckId::ComponentIntersection => {
                "non-components of two-fold intersections are exactly the divisorial orbits"
            }
            CheckId::CriterionEquivalence => "both closure criteria agree on all ordered pairs",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: CheckId,
    /// Number of cases examined (for a failure: up to and including it).
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub orbits: usize,
    pub covers: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, id: CheckId) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

struct Ctx<'a> {
    space: &'a OrbitSpace,
    poset: &'a OrbitPoset,
}

impl Ctx<'_> {
    fn idx(&self, o: &Orbit) -> usize {
        self.poset.index_of(o).expect("orbit enumerated")
    }

    fn fmt(&self, o: &Orbit) -> String {
        self.space.format_orbit(o)
    }

    fn fmt_i(&self, i: usize) -> String {
        self.fmt(&self.poset.orbits()[i])
    }

    fn word(&self, x: WeylElement) -> String {
        self.space.group().format(x)
    }

    fn orbit(&self, k: DivisorSet, v: WeylElement, w: WeylElement) -> Orbit {
        Orbit { k, v, w }
    }
}

/// Counts cases and records the first failure.
struct Tally {
    id: CheckId,
    cases: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(id: CheckId) -> Self {
        Self { id, cases: 0, failure: None }
    }

    /// Records one case; returns `false` once a failure has been recorded.
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok {
            self.failure = Some(describe());
        }
        ok
    }

    fn finish(self) -> CheckResult {
        CheckResult { id: self.id, cases: self.cases, counterexample: self.failure }
    }
}

pub(super) fn run(space: &OrbitSpace, poset: &OrbitPoset) -> SuiteReport {
    let cx = Ctx { space, poset };
    let checks = CheckId::ALL
        .iter()
        .map(|&id| match id {
            CheckId::PosetAxioms => poset_axioms(&cx),
            CheckId::UniqueMaximum => unique_maximum(&cx),
            CheckId::CountIdentity => count_identity(&cx),
            CheckId::ContainmentV => containment_v(&cx),
            CheckId::ContainmentSameV => containment_same_v(&cx),
            CheckId::LongestTwist => longest_twist(&cx),
            CheckId::BruhatCellComponent => bruhat_cell_component(&cx),
            CheckId::BoundaryComponent => boundary_component(&cx),
            CheckId::DescentComponentTop => descent_component_top(&cx),
            CheckId::DescentComponent => descent_component(&cx),
            CheckId::ComponentIntersection => component_intersection(&cx),
            CheckId::CriterionEquivalence => criterion_equivalence(&cx),
        })
        .collect();
    SuiteReport { orbits: poset.len(), covers: poset.covers().len(), checks }
}

fn poset_axioms(cx: &Ctx) -> CheckResult {
    let p = cx.poset;
    let mut t = Tally::new(CheckId::PosetAxioms);
    'outer: for a in 0..p.len() {
        if !t.case(p.leq(a, a), || alloc::format!("not reflexive at {}", cx.fmt_i(a))) {
            break;
        }
        for b in p.below(a).iter() {
            if b != a && !t.case(!p.leq(b, a), || {
                alloc::format!("antisymmetry fails: {} and {}", cx.fmt_i(a), cx.fmt_i(b))
            }) {
                break 'outer;
            }
            if !t.case(p.below(b).is_subset(p.below(a)), || {
                let c = p.below(b).iter().find(|&c| !p.leq(a, c)).unwrap_or(b);
                alloc::format!(
                    "transitivity fails: {} >= {} >= {}",
                    cx.fmt_i(a),
                    cx.fmt_i(b),
                    cx.fmt_i(c)
                )
            }) {
                break 'outer;
            }
        }
    }
    t.finish()
}

fn unique_maximum(cx: &Ctx) -> CheckResult {
    let mut t = Tally::new(CheckId::UniqueMaximum);
    let expected = cx.idx(&cx.space.maximum());
    let maxima = cx.poset.maxima_dominating_all();
    t.case(maxima == [expected], || {
        let shown: Vec<String> = maxima.iter().map(|&i| cx.fmt_i(i)).collect();
        alloc::format!("elements dominating all orbits: [{}]", shown.join(", "))
    });
    t.finish()
}

fn count_identity(cx: &Ctx) -> CheckResult {
    let mut t = Tally::new(CheckId::CountIdentity);
    let g = cx.space.group();
    let expected: usize = cx
        .space
        .model()
        .family()
        .iter()
        .map(|m| {
            let levi = cx.space.levi(m.k).map_or(0, <[_]>::len);
            (g.order() / levi) * g.order()
        })
        .sum();
    t.case(expected == cx.poset.len(), || {
        alloc::format!("formula gives {expected}, enumeration {}", cx.poset.len())
    });
    t.finish()
}

fn containment_v(cx: &Ctx) -> CheckResult {
    let (p, g) = (cx.poset, cx.space.group());
    let mut t = Tally::new(CheckId::ContainmentV);
    'outer: for a in 0..p.len() {
        for b in p.below(a).iter() {
            let (oa, ob) = (&p.orbits()[a], &p.orbits()[b]);
            if !t.case(g.bruhat_leq(oa.v, ob.v), || {
                alloc::format!("{} ⊆ closure {} but v ≰ v'", cx.fmt(ob), cx.fmt(oa))
            }) {
                break 'outer;
            }
        }
    }
    t.finish()
}

fn containment_same_v(cx: &Ctx) -> CheckResult {
    let (space, g) = (cx.space, cx.space.group());
    let mut t = Tally::new(CheckId::ContainmentSameV);
    let family = space.model().family();
    for m in family {
        for m2 in family {
            // v ∈ W^{I-p(K)} ∩ W^{I-p(K')}
            let reps2 = space.min_reps(m2.k).unwrap_or(&[]);
            for &v in space.min_reps(m.k).unwrap_or(&[]) {
                if reps2.binary_search(&v).is_err() {
                    continue;
                }
                for w in g.elements() {
                    for w_prime in g.elements() {
                        let upper = cx.orbit(m2.k, v, w);
                        let lower = cx.orbit(m.k, v, w_prime);
                        let got = cx.poset.leq(cx.idx(&upper), cx.idx(&lower));
                        let want = g.bruhat_leq(w_prime, w) && m2.k.is_subset(m.k);
                        if !t.case(got == want, || {
                            alloc::format!(
                                "{} ⊆ closure {} is {got}, expected {want}",
                                cx.fmt(&lower),
                                cx.fmt(&upper)
                            )
                        }) {
                            return t.finish();
                        }
                    }
                }
            }
        }
    }
    t.finish()
}

fn longest_twist(cx: &Ctx) -> CheckResult {
    let (space, g) = (cx.space, cx.space.group());
    let mut t = Tally::new(CheckId::LongestTwist);
    for m in space.model().family() {
        let complement = space.complement(m.k).expect("member");
        let twist = g.longest_element(complement);
        let reps = space.min_reps(m.k).expect("member");
        for &v in reps {
            for &v_prime in reps {
                if !g.bruhat_leq(g.mul(v, twist), g.mul(v_prime, twist)) {
                    continue;
                }
                for w in g.elements() {
                    for w_prime in g.elements() {
                        if !g.bruhat_leq(w_prime, w) {
                            continue;
                        }
                        let upper = cx.orbit(m.k, v, w);
                        let lower = cx.orbit(m.k, v_prime, w_prime);
                        if !t.case(cx.poset.leq(cx.idx(&upper), cx.idx(&lower)), || {
                            alloc::format!("{} ⊄ closure {}", cx.fmt(&lower), cx.fmt(&upper))
                        }) {
                            return t.finish();
                        }
                    }
                }
            }
        }
    }
    t.finish()
}

fn bruhat_cell_component(cx: &Ctx) -> CheckResult {
    let g = cx.space.group();
    let mut t = Tally::new(CheckId::BruhatCellComponent);
    let top = g.length(g.w0());
    let e = g.identity();
    let cells: Vec<usize> = g
        .elements()
        .map(|w| cx.idx(&cx.orbit(DivisorSet::EMPTY, e, w)))
        .collect();
    for w in g.elements().filter(|&w| g.length(w) + 1 < top) {
        let z = cells[w.index()];
        let found = cells.iter().enumerate().any(|(i, &z1)| {
            cells[i + 1..].iter().any(|&z2| {
                z1 != z && z2 != z && cx.poset.is_component_of(z, z1, z2)
            })
        });
        if !t.case(found, || {
            alloc::format!("no pair of cell closures has {} as a component", cx.fmt_i(z))
        }) {
            break;
        }
    }
    t.finish()
}

fn boundary_component(cx: &Ctx) -> CheckResult {
    let g = cx.space.group();
    let mut t = Tally::new(CheckId::BoundaryComponent);
    let e = g.identity();
    for m in cx.space.model().family() {
        for w in g.elements() {
            let z = cx.orbit(m.k, e, w);
            let z1 = cx.orbit(DivisorSet::EMPTY, e, w);
            let z2 = cx.orbit(m.k, e, g.w0());
            let ok = cx.poset.is_component_of(cx.idx(&z), cx.idx(&z1), cx.idx(&z2));
            if !t.case(ok, || {
                alloc::format!(
                    "{} is not a component of {} ∩ {}",
                    cx.fmt(&z),
                    cx.fmt(&z1),
                    cx.fmt(&z2)
                )
            }) {
                return t.finish();
            }
        }
    }
    t.finish()
}

/// Pairs `(v', v = s_i v')` in `W^{I-p(K)}` with `l(v) = l(v') + 1`.
fn descent_pairs(cx: &Ctx, k: DivisorSet) -> Vec<(WeylElement, WeylElement)> {
    let g = cx.space.group();
    let reps = cx.space.min_reps(k).expect("member");
    let mut out = Vec::new();
    for &v_prime in reps {
        for i in 0..g.rank() {
            let v = g.mul_simple_left(v_prime, i);
            if g.length(v) == g.length(v_prime) + 1 && reps.binary_search(&v).is_ok() {
                out.push((v_prime, v));
            }
        }
    }
    out
}

fn descent_component_top(cx: &Ctx) -> CheckResult {
    let g = cx.space.group();
    let mut t = Tally::new(CheckId::DescentComponentTop);
    let (e, w0) = (g.identity(), g.w0());
    for m in cx.space.model().family() {
        for (v_prime, v) in descent_pairs(cx, m.k) {
            let z = cx.orbit(m.k, v, w0);
            let z1 = cx.orbit(m.k, v_prime, w0);
            let z2 = cx.orbit(DivisorSet::EMPTY, e, g.mul(w0, g.inverse(v)));
            let ok = cx.poset.is_component_of(cx.idx(&z), cx.idx(&z1), cx.idx(&z2));
            if !t.case(ok, || {
                alloc::format!(
                    "{} is not a component of {} ∩ {} (v' = {})",
                    cx.fmt(&z),
                    cx.fmt(&z1),
                    cx.fmt(&z2),
                    cx.word(v_prime)
                )
            }) {
                return t.finish();
            }
        }
    }
    t.finish()
}

fn descent_component(cx: &Ctx) -> CheckResult {
    let g = cx.space.group();
    let mut t = Tally::new(CheckId::DescentComponent);
    let w0 = g.w0();
    for m in cx.space.model().family() {
        for (v_prime, v) in descent_pairs(cx, m.k) {
            for w in g.elements() {
                let z = cx.orbit(m.k, v, w);
                let z1 = cx.orbit(m.k, v, w0);
                let z2 = cx.orbit(m.k, v_prime, w);
                let ok = cx.poset.is_component_of(cx.idx(&z), cx.idx(&z1), cx.idx(&z2));
                if !t.case(ok, || {
                    alloc::format!(
                        "{} is not a component of {} ∩ {}",
                        cx.fmt(&z),
                        cx.fmt(&z1),
                        cx.fmt(&z2)
                    )
                }) {
                    return t.finish();
                }
            }
        }
    }
    t.finish()
}

fn component_intersection(cx: &Ctx) -> CheckResult {
    let p = cx.poset;
    let mut t = Tally::new(CheckId::ComponentIntersection);
    let max = cx.idx(&cx.space.maximum());
    let divisorial = cx.space.divisorial_orbits();
    for z in (0..p.len()).filter(|&z| z != max) {
        let is_divisorial = divisorial.contains(&p.orbits()[z]);
        let witness = p.component_witness(z);
        let ok = witness.is_some() != is_divisorial;
        if !t.case(ok, || match witness {
            Some((z1, z2)) => alloc::format!(
                "divisorial {} is a component of {} ∩ {}",
                cx.fmt_i(z),
                cx.fmt_i(z1),
                cx.fmt_i(z2)
            ),
            None => alloc::format!(
                "{} is neither divisorial nor a component of two other closures",
                cx.fmt_i(z)
            ),
        }) {
            break;
        }
    }
    t.finish()
}

fn criterion_equivalence(cx: &Ctx) -> CheckResult {
    let (space, p) = (cx.space, cx.poset);
    let mut t = Tally::new(CheckId::CriterionEquivalence);
    'outer: for (a, oa) in p.orbits().iter().enumerate() {
        for (b, ob) in p.orbits().iter().enumerate() {
            let first = p.leq(a, b);
            let second = space.closure_leq_bclosure(oa, ob);
            if !t.case(first == second, || {
                alloc::format!(
                    "criteria disagree on {} ⊆ closure {}: {first} vs {second}",
                    cx.fmt(ob),
                    cx.fmt(oa)
                )
            }) {
                break 'outer;
            }
        }
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{group_only, wonderful};
    use super::*;

    #[test]
    fn suite_passes_on_small_wonderful_models() {
        for name in ["A1", "A2", "B2"] {
            let report = wonderful(name).verify_suite().unwrap();
            for c in &report.checks {
                assert!(c.passed(), "{name} {}: {:?}", c.id, c.counterexample);
            }
        }
    }

    #[test]
    fn suite_on_group_only() {
        let report = group_only("A2").verify_suite().unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.orbits, 6);
    }

    #[test]
    fn sabotaged_relation_is_caught() {
        let space = wonderful("A1");
        let good = space.build_poset().unwrap();
        let n = good.len();
        // drop every containment into the K = {1} stratum
        let mut rows = alloc::vec::Vec::new();
        for a in 0..n {
            let mut r = good.below(a).clone();
            for b in 0..n {
                if b != a && !good.orbits()[b].k.is_empty() {
                    r.remove(b);
                }
            }
            rows.push(r);
        }
        let bad = OrbitPoset::from_relation(
            good.orbits().to_vec(),
            crate::bits::BitMatrix::from_rows(rows),
        );
        let report = run(&space, &bad);
        assert!(!report.get(CheckId::CriterionEquivalence).unwrap().passed());
        assert!(!report.get(CheckId::UniqueMaximum).unwrap().passed());
        assert!(report.get(CheckId::PosetAxioms).unwrap().passed());
    }

    #[test]
    fn keys_are_unique() {
        let mut keys: Vec<_> = CheckId::ALL.iter().map(|c| c.key()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), CheckId::ALL.len());
    }
}
