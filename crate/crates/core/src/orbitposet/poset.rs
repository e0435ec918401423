//! The materialized closure order on orbits.

use alloc::vec::Vec;

use super::{Orbit, OrbitSpace};
use crate::bits::{BitMatrix, BitSet};
use crate::{Error, Result};

/// Orbits with the relation "`b` lies in the closure of `a`" stored as a bit
/// matrix (`below`, row `a`) and its transpose (`above`, row `b`).
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    orbits: Vec<Orbit>,
    below: BitMatrix,
    above: BitMatrix,
    covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    pub(super) fn build(space: &OrbitSpace) -> Result<Self> {
        let orbits = space.orbits().to_vec();
        let n = orbits.len();
        let bound = space.bounds().max_orbits;
        if n > bound {
            return Err(Error::TooManyOrbits { count: n, bound });
        }
        let row = |a: usize| {
            let mut r = BitSet::new(n);
            for (b, ob) in orbits.iter().enumerate() {
                if space.closure_leq(&orbits[a], ob) {
                    r.insert(b);
                }
            }
            r
        };
        #[cfg(feature = "parallel")]
        let rows: Vec<BitSet> = {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(row).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let rows: Vec<BitSet> = (0..n).map(row).collect();
        Ok(Self::from_relation(orbits, BitMatrix::from_rows(rows)))
    }

    /// Wraps an already computed relation; `below.get(a, b)` must mean that
    /// `b` lies in the closure of `a`.
    pub fn from_relation(orbits: Vec<Orbit>, below: BitMatrix) -> Self {
        let above = below.transpose();
        let covers = transitive_reduction(&below);
        Self { orbits, below, above, covers }
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn index_of(&self, o: &Orbit) -> Option<usize> {
        self.orbits.binary_search(o).ok()
    }

    /// Whether orbit `b` lies in the closure of orbit `a`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below.get(a, b)
    }

    /// Orbits in the closure of `a` (including `a`).
    pub fn below(&self, a: usize) -> &BitSet {
        self.below.row(a)
    }

    /// Orbits whose closure contains `b` (including `b`).
    pub fn above(&self, b: usize) -> &BitSet {
        self.above.row(b)
    }

    /// Covering pairs `(upper, lower)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements whose closure contains every orbit.
    pub fn maxima_dominating_all(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.below(a).count() == self.len())
            .collect()
    }

    /// Maximal elements of `set` under the closure order.
    pub fn maximal_in(&self, set: &BitSet) -> Vec<usize> {
        let mut strictly_lower = BitSet::new(self.len());
        for c in set.iter() {
            let mut row = self.below(c).clone();
            row.remove(c);
            strictly_lower.union_with(&row);
        }
        let mut out = set.clone();
        out.difference_with(&strictly_lower);
        out.iter().collect()
    }

    /// Maximal orbits satisfying `pred`.
    pub fn maximal_below(&self, mut pred: impl FnMut(usize, &Orbit) -> bool) -> Vec<usize> {
        let mut set = BitSet::new(self.len());
        for (i, o) in self.orbits.iter().enumerate() {
            if pred(i, o) {
                set.insert(i);
            }
        }
        self.maximal_in(&set)
    }

    /// Orbit closures that are components of `closure(z1) ∩ closure(z2)`: the
    /// maximal orbits lying in both.
    pub fn intersection_components(&self, z1: usize, z2: usize) -> Vec<usize> {
        let mut common = self.below(z1).clone();
        common.intersect_with(self.below(z2));
        self.maximal_in(&common)
    }

    /// Whether `z` is maximal among the orbits in both closures.
    pub fn is_component_of(&self, z: usize, z1: usize, z2: usize) -> bool {
        if !self.leq(z1, z) || !self.leq(z2, z) {
            return false;
        }
        let mut strict_up = self.above(z).clone();
        strict_up.remove(z);
        strict_up.disjoint_from_both(self.below(z1), self.below(z2))
    }

    /// A pair `z1, z2`, both different from `z`, such that `closure(z)` is a
    /// component of `closure(z1) ∩ closure(z2)`. The first pair in index
    /// order is returned.
    pub fn component_witness(&self, z: usize) -> Option<(usize, usize)> {
        let mut strict_up = self.above(z).clone();
        strict_up.remove(z);
        let ups: Vec<usize> = strict_up.iter().collect();
        for (k, &z1) in ups.iter().enumerate() {
            for &z2 in &ups[k..] {
                if strict_up.disjoint_from_both(self.below(z1), self.below(z2)) {
                    return Some((z1, z2));
                }
            }
        }
        None
    }
}

fn transitive_reduction(below: &BitMatrix) -> Vec<(usize, usize)> {
    let n = below.len();
    let mut covers = Vec::new();
    for a in 0..n {
        let mut strict = below.row(a).clone();
        strict.remove(a);
        let mut reachable = BitSet::new(n);
        for c in strict.iter() {
            let mut row = below.row(c).clone();
            row.remove(c);
            reachable.union_with(&row);
        }
        strict.difference_with(&reachable);
        covers.extend(strict.iter().map(|b| (a, b)));
    }
    covers
}

#[cfg(test)]
mod tests {
    use super::super::tests::{group_only, wonderful};
    use super::*;

    #[test]
    fn a1_poset_has_maximum() {
        let s = wonderful("A1");
        let p = s.build_poset().unwrap();
        assert_eq!(p.len(), 6);
        let max = p.index_of(&s.maximum()).unwrap();
        assert_eq!(p.maxima_dominating_all(), [max]);
    }

    #[test]
    fn covers_generate_the_order() {
        let s = wonderful("A2");
        let p = s.build_poset().unwrap();
        // reflexive-transitive closure of the covers equals the relation
        let n = p.len();
        let mut closure = BitMatrix::new(n);
        for a in (0..n).rev() {
            closure.set(a, a);
        }
        let mut changed = true;
        while changed {
            changed = false;
            for &(a, b) in p.covers() {
                let row = closure.row(b).clone();
                for c in row.iter() {
                    if !closure.get(a, c) {
                        closure.set(a, c);
                        changed = true;
                    }
                }
            }
        }
        for a in 0..n {
            assert_eq!(closure.row(a), p.below(a));
        }
        // and no cover is implied by two others
        for &(a, b) in p.covers() {
            assert!((0..n).all(|c| c == a || c == b || !(p.leq(a, c) && p.leq(c, b))));
        }
    }

    #[test]
    fn group_only_matches_bruhat() {
        let s = group_only("A2");
        let g = s.group();
        let p = s.build_poset().unwrap();
        assert_eq!(p.len(), 6);
        // Hasse diagram of S3 under Bruhat order has 8 edges
        assert_eq!(p.covers().len(), 8);
        for &(a, b) in p.covers() {
            let (wa, wb) = (p.orbits()[a].w, p.orbits()[b].w);
            assert!(g.bruhat_leq(wb, wa));
            assert_eq!(g.length(wa), g.length(wb) + 1);
        }
    }

    #[test]
    fn self_intersection_is_itself() {
        let s = wonderful("A2");
        let p = s.build_poset().unwrap();
        for z in 0..p.len() {
            assert_eq!(p.intersection_components(z, z), [z]);
            assert!(p.is_component_of(z, z, z));
        }
    }

    #[test]
    fn component_witness_matches_brute_force() {
        let s = wonderful("A2");
        let p = s.build_poset().unwrap();
        for z in 0..p.len() {
            let brute = (0..p.len())
                .flat_map(|a| (0..p.len()).map(move |b| (a, b)))
                .find(|&(a, b)| a != z && b != z && p.intersection_components(a, b).contains(&z));
            assert_eq!(p.component_witness(z).is_some(), brute.is_some(), "{z}");
            if let Some((a, b)) = p.component_witness(z) {
                assert!(p.intersection_components(a, b).contains(&z));
            }
        }
    }
}
