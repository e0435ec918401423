//! Exhaustive check of the parabolic factorization step used to pass between
//! the two closure criteria.
//!
//! For `J_inner ⊆ J_outer`, every `u ∈ W_{J_outer}` factors as `u = u1 u2`
//! with `u1 ∈ W_{J_outer} ∩ W^{J_inner}` and `u2 ∈ W_{J_inner}`. The claim
//! checked here: whenever `w' <= w u`, some `u2' <= u2` satisfies
//! `w' u2'^{-1} <= w u1`.

use alloc::vec::Vec;

use super::{ParabolicSet, WeylElement, WeylGroup};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeCounterexample {
    pub u: WeylElement,
    pub u1: WeylElement,
    pub u2: WeylElement,
    pub w: WeylElement,
    pub w_prime: WeylElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeReport {
    pub outer: ParabolicSet,
    pub inner: ParabolicSet,
    /// Number of `(u, w, w')` triples with `w' <= w u` that were checked.
    pub checked: u64,
    pub counterexample: Option<HeCounterexample>,
}

impl HeReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl WeylGroup {
    pub fn verify_he_factorization(
        &self,
        outer: ParabolicSet,
        inner: ParabolicSet,
        max_search: u64,
    ) -> Result<HeReport> {
        let full = ParabolicSet::full(self.rank());
        if !inner.is_subset(outer) || !outer.is_subset(full) {
            return Err(Error::InvalidArgument(alloc::format!(
                "need J_inner ⊆ J_outer ⊆ I, got {inner} and {outer}"
            )));
        }
        let outer_group = self.parabolic_subgroup(outer);
        let n = self.order() as u64;
        let size = (outer_group.len() as u64) * n * n;
        if size > max_search {
            return Err(Error::SearchTooLarge { size, bound: max_search });
        }

        let mut checked = 0u64;
        for &u in &outer_group {
            let (u1, u2) = self.coset_factor(u, inner);
            let below_u2: Vec<WeylElement> = self
                .elements()
                .take_while(|&x| self.length(x) <= self.length(u2))
                .filter(|&x| self.bruhat_leq(x, u2))
                .map(|x| self.inverse(x))
                .collect();
            for w in self.elements() {
                let wu = self.mul(w, u);
                let wu1 = self.mul(w, u1);
                for w_prime in self.elements() {
                    if !self.bruhat_leq(w_prime, wu) {
                        continue;
                    }
                    checked += 1;
                    let ok = below_u2
                        .iter()
                        .any(|&inv| self.bruhat_leq(self.mul(w_prime, inv), wu1));
                    if !ok {
                        return Ok(HeReport {
                            outer,
                            inner,
                            checked,
                            counterexample: Some(HeCounterexample { u, u1, u2, w, w_prime }),
                        });
                    }
                }
            }
        }
        Ok(HeReport { outer, inner, checked, counterexample: None })
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::group;
    use super::*;

    #[test]
    fn empty_outer_is_vacuous() {
        let g = group("A2");
        let r = g
            .verify_he_factorization(ParabolicSet::EMPTY, ParabolicSet::EMPTY, u64::MAX)
            .unwrap();
        assert!(r.passed());
        // u = e: one check per Bruhat-comparable pair
        let pairs = g
            .elements()
            .flat_map(|x| g.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| g.bruhat_leq(x, y))
            .count() as u64;
        assert_eq!(r.checked, pairs);
    }

    #[test]
    fn a2_and_b2_examples() {
        let a2 = group("A2");
        let r = a2
            .verify_he_factorization(ParabolicSet::full(2), ParabolicSet::from_labels(&[2]), u64::MAX)
            .unwrap();
        assert!(r.passed());
        let b2 = group("B2");
        let r = b2
            .verify_he_factorization(ParabolicSet::full(2), ParabolicSet::from_labels(&[1]), u64::MAX)
            .unwrap();
        assert!(r.passed());
    }

    #[test]
    fn bounds_and_preconditions() {
        let g = group("A2");
        assert!(matches!(
            g.verify_he_factorization(ParabolicSet::full(2), ParabolicSet::EMPTY, 100),
            Err(Error::SearchTooLarge { size: 216, bound: 100 })
        ));
        assert!(g
            .verify_he_factorization(ParabolicSet::from_labels(&[1]), ParabolicSet::from_labels(&[2]), u64::MAX)
            .is_err());
    }
}
