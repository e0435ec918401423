//! `B x B`-orbits `[K, v, w]` of a toroidal embedding and their closure order.
//!
//! For `K ∈ 𝓘` the orbits inside `X_K` are indexed by `v ∈ W^{I-p(K)}` and
//! `w ∈ W`. Two independent closure criteria are implemented:
//!
//! * [`OrbitSpace::closure_leq`]: `[K',v',w'] ⊆ closure [K,v,w]` iff
//!   `K ⊆ K'` and some `u ∈ W_{I-p(K)}` has `v u <= v'` and `w' <= w u`.
//! * [`OrbitSpace::closure_leq_bclosure`]: `K ⊆ K'` and some
//!   `u ∈ W_{I-p(K')}`, `u' ∈ W_{I-p(K)} ∩ W^{I-p(K')}` have
//!   `v u' u^{-1} <= v'` and `w' u <= w u'`.
//!
//! Both searches are exhaustive over the parabolic subgroups involved.

mod poset;
mod suite;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::coxeter::{ParabolicSet, WeylElement, WeylGroup};
use crate::embedding::{DivisorSet, EmbeddingModel, Member};
use crate::rootsys::RootSystem;
use crate::{Bounds, Error, Result};

pub use poset::OrbitPoset;
pub use suite::{CheckId, CheckResult, SuiteReport};

/// The orbit `[K, v, w]`. Ordered by `K` (lexicographic), then `v` and `w`
/// in ShortLex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orbit {
    pub k: DivisorSet,
    pub v: WeylElement,
    pub w: WeylElement,
}

/// Codimension-one candidates: boundary divisors `[{i}, e, w0]` and the
/// closures `[∅, e, s_i w0]` of the codimension-one Bruhat cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorialOrbits {
    pub boundary: Vec<Orbit>,
    pub schubert: Vec<Orbit>,
}

impl DivisorialOrbits {
    pub fn contains(&self, o: &Orbit) -> bool {
        self.boundary.contains(o) || self.schubert.contains(o)
    }
}

#[derive(Debug)]
struct Stratum {
    member: Member,
    /// `I - p(K)`.
    complement: ParabolicSet,
    /// `W_{I-p(K)}`.
    levi: Vec<WeylElement>,
    /// `W^{I-p(K)}`.
    reps: Vec<WeylElement>,
}

/// An embedding model together with its Weyl group and enumerated orbits.
#[derive(Debug)]
pub struct OrbitSpace {
    model: EmbeddingModel,
    group: WeylGroup,
    bounds: Bounds,
    strata: Vec<Stratum>,
    orbits: Vec<Orbit>,
}

impl OrbitSpace {
    pub fn new(model: EmbeddingModel, bounds: Bounds) -> Result<Self> {
        model.validate().map_err(Error::InvalidModel)?;
        let roots = RootSystem::new(model.cartan().clone())?;
        let group = WeylGroup::new(roots, bounds.max_group)?;
        let rank = group.rank();
        let strata: Vec<Stratum> = model
            .family()
            .iter()
            .map(|&member| {
                let complement = member.p.complement(rank);
                Stratum {
                    member,
                    complement,
                    levi: group.parabolic_subgroup(complement),
                    reps: group.min_coset_reps(complement),
                }
            })
            .collect();

        let count: usize = strata.iter().map(|s| s.reps.len() * group.order()).sum();
        if count > bounds.max_orbits {
            return Err(Error::TooManyOrbits { count, bound: bounds.max_orbits });
        }
        let mut orbits = Vec::with_capacity(count);
        for s in &strata {
            for &v in &s.reps {
                for w in group.elements() {
                    orbits.push(Orbit { k: s.member.k, v, w });
                }
            }
        }
        debug_assert!(orbits.windows(2).all(|p| p[0] < p[1]));
        Ok(Self { model, group, bounds, strata, orbits })
    }

    pub fn model(&self) -> &EmbeddingModel {
        &self.model
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    /// Every orbit, sorted.
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn index_of(&self, o: &Orbit) -> Option<usize> {
        self.orbits.binary_search(o).ok()
    }

    fn stratum(&self, k: DivisorSet) -> Option<&Stratum> {
        self.strata
            .binary_search_by(|s| s.member.k.cmp(&k))
            .ok()
            .map(|i| &self.strata[i])
    }

    /// `I - p(K)`, if `K ∈ 𝓘`.
    pub fn complement(&self, k: DivisorSet) -> Option<ParabolicSet> {
        self.stratum(k).map(|s| s.complement)
    }

    /// `W^{I-p(K)}` in ShortLex order, if `K ∈ 𝓘`.
    pub fn min_reps(&self, k: DivisorSet) -> Option<&[WeylElement]> {
        self.stratum(k).map(|s| s.reps.as_slice())
    }

    /// `W_{I-p(K)}` in ShortLex order, if `K ∈ 𝓘`.
    pub fn levi(&self, k: DivisorSet) -> Option<&[WeylElement]> {
        self.stratum(k).map(|s| s.levi.as_slice())
    }

    /// Checks `K ∈ 𝓘` and `v ∈ W^{I-p(K)}`; never rewrites `v`.
    pub fn make_orbit(&self, k: DivisorSet, v: WeylElement, w: WeylElement) -> Result<Orbit> {
        let s = self
            .stratum(k)
            .ok_or_else(|| Error::NotInFamily(k.to_string()))?;
        if !self.group.owns(v) || !self.group.owns(w) {
            return Err(Error::ContextMismatch);
        }
        if !self.group.is_min_coset_rep(v, s.complement) {
            return Err(Error::NotMinimalRepresentative {
                v: self.group.format(v),
                complement: s.complement.to_string(),
            });
        }
        Ok(Orbit { k, v, w })
    }

    /// Replaces `v` by its minimal representative modulo `W_{I-p(K)}` and
    /// returns the discarded factor alongside the orbit.
    pub fn normalize(
        &self,
        k: DivisorSet,
        v: WeylElement,
        w: WeylElement,
    ) -> Result<(Orbit, WeylElement)> {
        let s = self
            .stratum(k)
            .ok_or_else(|| Error::NotInFamily(k.to_string()))?;
        if !self.group.owns(v) || !self.group.owns(w) {
            return Err(Error::ContextMismatch);
        }
        let (rep, rest) = self.group.coset_factor(v, s.complement);
        Ok((Orbit { k, v: rep, w }, rest))
    }

    /// The orbit `[∅, e, w0]`, dense in the embedding.
    pub fn maximum(&self) -> Orbit {
        Orbit {
            k: DivisorSet::EMPTY,
            v: self.group.identity(),
            w: self.group.w0(),
        }
    }

    /// Whether `b` lies in the closure of `a`.
    pub fn closure_leq(&self, a: &Orbit, b: &Orbit) -> bool {
        self.closure_witness(a, b).is_some()
    }

    /// A `u ∈ W_{I-p(K_a)}` with `v_a u <= v_b` and `w_b <= w_a u`, if any.
    pub fn closure_witness(&self, a: &Orbit, b: &Orbit) -> Option<WeylElement> {
        if !a.k.is_subset(b.k) {
            return None;
        }
        let g = &self.group;
        let sa = self.stratum(a.k)?;
        sa.levi.iter().copied().find(|&u| {
            g.bruhat_leq(g.mul(a.v, u), b.v) && g.bruhat_leq(b.w, g.mul(a.w, u))
        })
    }

    /// Whether `b` lies in the closure of `a`, by the second criterion.
    pub fn closure_leq_bclosure(&self, a: &Orbit, b: &Orbit) -> bool {
        self.bclosure_witness(a, b).is_some()
    }

    /// A pair `(u, u')` with `u ∈ W_{I-p(K_b)}`,
    /// `u' ∈ W_{I-p(K_a)} ∩ W^{I-p(K_b)}`, `v_a u' u^{-1} <= v_b` and
    /// `w_b u <= w_a u'`, if any.
    pub fn bclosure_witness(&self, a: &Orbit, b: &Orbit) -> Option<(WeylElement, WeylElement)> {
        if !a.k.is_subset(b.k) {
            return None;
        }
        let g = &self.group;
        let sa = self.stratum(a.k)?;
        let sb = self.stratum(b.k)?;
        for &u_prime in sa
            .levi
            .iter()
            .filter(|&&x| g.is_min_coset_rep(x, sb.complement))
        {
            let vu = g.mul(a.v, u_prime);
            let wu = g.mul(a.w, u_prime);
            for &u in &sb.levi {
                if g.bruhat_leq(g.mul(vu, g.inverse(u)), b.v) && g.bruhat_leq(g.mul(b.w, u), wu) {
                    return Some((u, u_prime));
                }
            }
        }
        None
    }

    pub fn divisorial_orbits(&self) -> DivisorialOrbits {
        let g = &self.group;
        let e = g.identity();
        let boundary = self
            .model
            .family()
            .iter()
            .filter(|m| m.k.len() == 1)
            .map(|m| Orbit { k: m.k, v: e, w: g.w0() })
            .collect();
        let schubert = (0..g.rank())
            .map(|i| Orbit {
                k: DivisorSet::EMPTY,
                v: e,
                w: g.mul_simple_left(g.w0(), i),
            })
            .collect();
        DivisorialOrbits { boundary, schubert }
    }

    /// `[K={1,3}; v=1,2; w=2,1,2]`.
    pub fn format_orbit(&self, o: &Orbit) -> String {
        alloc::format!(
            "[K={}; v={}; w={}]",
            o.k,
            self.group.format(o.v),
            self.group.format(o.w)
        )
    }

    /// Parses an orbit literal; the `K=`, `v=`, `w=` prefixes are optional,
    /// so `[{1};e;2,1]` is accepted too. The orbit is validated, not normalized.
    pub fn parse_orbit(&self, text: &str) -> Result<Orbit> {
        let t = text.trim();
        let err = |reason: &str| Error::Parse { input: t.to_string(), reason: reason.to_string() };
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| err("expected `[K; v; w]`"))?;
        let parts: Vec<&str> = inner.split(';').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(err("expected three `;`-separated fields"));
        }
        let field = |s: &'_ str, name: char| -> String {
            let s = s.trim();
            let mut chars = s.chars();
            match (chars.next(), chars.as_str().trim_start().strip_prefix('=')) {
                (Some(c), Some(rest)) if c == name => rest.trim().to_string(),
                _ => s.to_string(),
            }
        };
        let k = parse_divisor_set(&field(parts[0], 'K'))
            .ok_or_else(|| err("K must look like `{}` or `{1,3}`"))?;
        let v = self.group.parse(&field(parts[1], 'v'))?;
        let w = self.group.parse(&field(parts[2], 'w'))?;
        self.make_orbit(k, v, w)
    }

    /// Materializes the closure relation; rows are computed in parallel when
    /// the `parallel` feature is enabled.
    pub fn build_poset(&self) -> Result<OrbitPoset> {
        OrbitPoset::build(self)
    }

    /// Runs every verification check over a freshly built poset.
    pub fn verify_suite(&self) -> Result<SuiteReport> {
        let poset = self.build_poset()?;
        Ok(suite::run(self, &poset))
    }
}

/// `{}` / `{1,3}` with 1-based labels.
pub fn parse_divisor_set(text: &str) -> Option<DivisorSet> {
    let inner = text.trim().strip_prefix('{')?.strip_suffix('}')?.trim();
    if inner.is_empty() {
        return Some(DivisorSet::EMPTY);
    }
    let mut bits = 0u64;
    for part in inner.split(',') {
        let i: usize = part.trim().parse().ok()?;
        if i == 0 || i > 64 {
            return None;
        }
        bits |= 1 << (i - 1);
    }
    Some(DivisorSet::from_bits(bits))
}

/// `{}` / `{1,3}` with 1-based simple-root labels.
pub fn parse_parabolic_set(text: &str) -> Option<ParabolicSet> {
    let k = parse_divisor_set(text)?;
    if k.bits() > u32::MAX as u64 {
        return None;
    }
    Some(ParabolicSet::from_bits(k.bits() as u32))
}
