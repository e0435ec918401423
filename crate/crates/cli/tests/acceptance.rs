//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run with `cargo test -p orbitposet --test acceptance`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use orbitposet_core::{
    Bounds, CartanDatum, CheckId, DivisorSet, EmbeddingModel, Orbit, OrbitSpace, ParabolicSet,
    RootSystem, WeylGroup,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn wonderful(name: &str) -> OrbitSpace {
    let m = EmbeddingModel::wonderful(CartanDatum::from_type(name).unwrap());
    OrbitSpace::new(m, Bounds::default()).unwrap()
}

fn group(name: &str) -> WeylGroup {
    let rs = RootSystem::new(CartanDatum::from_type(name).unwrap()).unwrap();
    WeylGroup::new(rs, 1_000_000).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{what} took {took:?}, limit {limit:?}"));
    }
    Ok(())
}

/// Orbit counts, each also recomputed as a sum over strata of
/// `|W| / |W_{I-p(K)}|` times `|W|`, with `|W_J|` counted by support.
fn orbit_counts() -> Outcome {
    let cases = [
        ("A1", false, 6),
        ("A2", false, 78),
        ("B2", false, 136),
        ("A2", true, 6),
    ];
    let mut notes = Vec::new();
    for (name, group_only, expected) in cases {
        let start = Instant::now();
        let cartan = CartanDatum::from_type(name).unwrap();
        let model = if group_only {
            EmbeddingModel::group_only(cartan)
        } else {
            EmbeddingModel::wonderful(cartan)
        };
        let space = OrbitSpace::new(model, Bounds::default()).map_err(|e| e.to_string())?;
        let got = space.orbits().len();
        within(start, Duration::from_secs(1), name)?;
        let g = space.group();
        let rank = g.rank();
        let identity: usize = space
            .model()
            .family()
            .iter()
            .map(|m| {
                let j = m.p.complement(rank);
                let sub = g.elements().filter(|&x| g.support(x).is_subset(j)).count();
                g.order() / sub * g.order()
            })
            .sum();
        let distinct: BTreeSet<&Orbit> = space.orbits().iter().collect();
        if got != expected || identity != expected || distinct.len() != got {
            return Err(format!(
                "{name}{}: enumerated {got}, identity {identity}, distinct {}, expected {expected}",
                if group_only { " group" } else { "" },
                distinct.len()
            ));
        }
        notes.push(format!("{name}{}={got}", if group_only { "(group)" } else { "" }));
    }
    Ok(notes.join(" "))
}

fn criterion_equivalence() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (name, pairs) in [("A1", 36), ("A2", 6084), ("B2", 18496)] {
        let s = wonderful(name);
        let mut count = 0;
        let mut disagreements = 0;
        for a in s.orbits() {
            for b in s.orbits() {
                count += 1;
                if s.closure_leq(a, b) != s.closure_leq_bclosure(a, b) {
                    disagreements += 1;
                }
            }
        }
        if count != pairs || disagreements != 0 {
            return Err(format!("{name}: {count} pairs, {disagreements} disagreements"));
        }
        notes.push(format!("{name}:{count}"));
    }
    within(start, Duration::from_secs(30), "sweep")?;
    Ok(format!("0 disagreements ({})", notes.join(" ")))
}

/// Independent Bruhat oracle: `x <= y` iff some subword of a reduced word for
/// `y` is a reduced word for `x`. Elements are compared as integer matrices
/// acting on root coordinates; reducedness is checked by counting inversions.
struct SubwordOracle {
    roots: RootSystem,
    mats: Vec<Vec<Vec<i32>>>,
}

impl SubwordOracle {
    fn new(name: &str) -> Self {
        let roots = RootSystem::new(CartanDatum::from_type(name).unwrap()).unwrap();
        let mats = (0..roots.rank()).map(|i| roots.simple_reflection_matrix(i)).collect();
        Self { roots, mats }
    }

    fn images(&self, word: &[usize]) -> Vec<Vec<i32>> {
        let l = self.roots.rank();
        (0..l)
            .map(|j| {
                let mut v = vec![0i32; l];
                v[j] = 1;
                for &i in word.iter().rev() {
                    let m = &self.mats[i];
                    v = (0..l).map(|r| (0..l).map(|c| m[r][c] * v[c]).sum()).collect();
                }
                v
            })
            .collect()
    }

    fn is_reduced(&self, word: &[usize]) -> bool {
        let images = self.images(word);
        let l = self.roots.rank();
        let inversions = self
            .roots
            .positive_roots()
            .iter()
            .filter(|r| {
                (0..l)
                    .map(|k| (0..l).map(|j| r.coords()[j] * images[j][k]).sum::<i32>())
                    .any(|c| c < 0)
            })
            .count();
        inversions == word.len()
    }

    fn below(&self, word: &[usize]) -> BTreeSet<Vec<Vec<i32>>> {
        (0u32..1 << word.len())
            .filter_map(|mask| {
                let sub: Vec<usize> =
                    (0..word.len()).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
                self.is_reduced(&sub).then(|| self.images(&sub))
            })
            .collect()
    }
}

fn bruhat_oracle() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (name, pairs) in [("A3", 576), ("B3", 2304)] {
        let oracle = SubwordOracle::new(name);
        let g = group(name);
        let mut count = 0;
        for y in g.elements() {
            let word = g.reduced_word(y);
            if !oracle.is_reduced(&word) {
                return Err(format!("{name}: stored word for {} is not reduced", g.format(y)));
            }
            let below = oracle.below(&word);
            for x in g.elements() {
                count += 1;
                let expected = below.contains(&oracle.images(&g.reduced_word(x)));
                if g.bruhat_leq(x, y) != expected {
                    return Err(format!("{name}: {} <= {} should be {expected}", g.format(x), g.format(y)));
                }
            }
        }
        if count != pairs {
            return Err(format!("{name}: {count} pairs, expected {pairs}"));
        }
        notes.push(format!("{name}:{count}"));
    }
    within(start, Duration::from_secs(10), "oracle sweep")?;
    Ok(format!("0 mismatches ({})", notes.join(" ")))
}

fn leq_matrix(s: &OrbitSpace) -> Vec<Vec<bool>> {
    let o = s.orbits();
    o.iter().map(|a| o.iter().map(|b| s.closure_leq(a, b)).collect()).collect()
}

fn poset_axioms() -> Outcome {
    let mut notes = Vec::new();
    for name in ["A1", "A2", "B2"] {
        let s = wonderful(name);
        let le = leq_matrix(&s);
        let n = le.len();
        for a in 0..n {
            if !le[a][a] {
                return Err(format!("{name}: not reflexive at {}", s.format_orbit(&s.orbits()[a])));
            }
            for b in 0..n {
                if a != b && le[a][b] && le[b][a] {
                    return Err(format!("{name}: antisymmetry fails at {a}, {b}"));
                }
                if le[a][b] {
                    for c in 0..n {
                        if le[b][c] && !le[a][c] {
                            return Err(format!("{name}: transitivity fails at {a}, {b}, {c}"));
                        }
                    }
                }
            }
        }
        let top = s.index_of(&s.maximum()).unwrap();
        let dominating: Vec<usize> = (0..n).filter(|&a| (0..n).all(|b| le[a][b])).collect();
        if dominating != [top] {
            return Err(format!("{name}: dominating orbits {dominating:?}, expected [{top}]"));
        }
        notes.push(format!("{name}:{n}"));
    }
    Ok(format!("0 violations ({})", notes.join(" ")))
}

fn component_suite() -> Outcome {
    let start = Instant::now();
    let ids = [
        CheckId::ContainmentV,
        CheckId::ContainmentSameV,
        CheckId::LongestTwist,
        CheckId::BruhatCellComponent,
        CheckId::BoundaryComponent,
        CheckId::DescentComponentTop,
        CheckId::DescentComponent,
    ];
    let mut cases = 0;
    for name in ["A2", "B2"] {
        let report = wonderful(name).verify_suite().map_err(|e| e.to_string())?;
        for id in ids {
            let r = report.get(id).ok_or_else(|| format!("{name}: check {} missing", id.key()))?;
            if let Some(cx) = &r.counterexample {
                return Err(format!("{name} ({}): {cx}", id.key()));
            }
            if r.cases == 0 {
                return Err(format!("{name} ({}): no cases examined", id.key()));
            }
            cases += r.cases;
        }
    }
    within(start, Duration::from_secs(60), "suite")?;
    Ok(format!("0 counterexamples over {cases} cases"))
}

/// Brute force over all pairs of distinct closures: mark every maximal element
/// of their common down-set, then compare the unmarked orbits (minus the
/// maximum) with the boundary divisors and the codimension-one cells.
fn non_components() -> Outcome {
    let mut notes = Vec::new();
    for name in ["A1", "A2", "B2"] {
        let s = wonderful(name);
        let g = s.group();
        let le = leq_matrix(&s);
        let n = le.len();
        let mut component = vec![false; n];
        for z1 in 0..n {
            for z2 in z1 + 1..n {
                let common: Vec<usize> = (0..n).filter(|&z| le[z1][z] && le[z2][z]).collect();
                for &z in &common {
                    if z == z1 || z == z2 {
                        continue;
                    }
                    if common.iter().all(|&y| y == z || !le[y][z]) {
                        component[z] = true;
                    }
                }
            }
        }
        let top = s.index_of(&s.maximum()).unwrap();
        let got: BTreeSet<Orbit> = (0..n)
            .filter(|&z| z != top && !component[z])
            .map(|z| s.orbits()[z])
            .collect();
        let e = g.identity();
        let mut expected = BTreeSet::new();
        for i in 0..g.rank() {
            let k = DivisorSet::from_labels(&[i + 1]);
            expected.insert(s.make_orbit(k, e, g.w0()).unwrap());
            let si = g.simple_reflection(i).unwrap();
            expected.insert(s.make_orbit(DivisorSet::EMPTY, e, g.mul(si, g.w0())).unwrap());
        }
        if got != expected {
            let show = |set: &BTreeSet<Orbit>| set.iter().map(|o| s.format_orbit(o)).collect::<Vec<_>>().join(" ");
            return Err(format!("{name}: got {} expected {}", show(&got), show(&expected)));
        }
        notes.push(format!("{name}:{}", got.len()));
    }
    Ok(format!("0 discrepancies ({})", notes.join(" ")))
}

fn he_factorization() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    let mut checked = 0;
    for name in ["A2", "B2"] {
        let g = group(name);
        for outer in ParabolicSet::full(g.rank()).subsets() {
            for inner in outer.subsets() {
                let r = g
                    .verify_he_factorization(outer, inner, Bounds::default().max_search)
                    .map_err(|e| e.to_string())?;
                if let Some(c) = r.counterexample {
                    return Err(format!(
                        "{name} inner={inner} outer={outer}: u={} w={} w'={}",
                        g.format(c.u),
                        g.format(c.w),
                        g.format(c.w_prime)
                    ));
                }
                pairs += 1;
                checked += r.checked;
            }
        }
    }
    within(start, Duration::from_secs(60), "factorization")?;
    Ok(format!("0 counterexamples ({pairs} subset pairs, {checked} cases)"))
}

fn determinism() -> Outcome {
    let run = |threads: Option<&str>| -> Result<Vec<u8>, String> {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbitposet"));
        cmd.args(["hasse", "--cartan", "A2", "--model", "wonderful", "--format", "dot"]);
        match threads {
            Some(t) => cmd.env("ORBITPOSET_THREADS", t),
            None => cmd.env_remove("ORBITPOSET_THREADS"),
        };
        let out = cmd.output().map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        Ok(out.stdout)
    };
    let first = run(None)?;
    let runs = [("second run", run(None)?), ("1 thread", run(Some("1"))?), ("4 threads", run(Some("4"))?)];
    for (label, bytes) in &runs {
        if *bytes != first {
            return Err(format!("{label} differs from the first run"));
        }
    }
    Ok(format!("{} identical bytes across 4 runs", first.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 orbit counts", orbit_counts),
        ("2 criterion equivalence", criterion_equivalence),
        ("3 bruhat subword oracle", bruhat_oracle),
        ("4 poset axioms", poset_axioms),
        ("5 containment and component suite", component_suite),
        ("6 non-components are divisorial", non_components),
        ("7 parabolic factorization", he_factorization),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (label, f) in criteria {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("PASS {label}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {label}: {why} [{:.2?}]", start.elapsed());
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
