//! Combinatorial model of a toroidal embedding.
//!
//! An embedding with boundary divisors `X_1, ..., X_n` is described by the
//! family `𝓘` of divisor subsets `K` that index its `G x G`-orbit closures
//! `X_K`, together with the map `p` sending `K` to the subset of simple roots
//! indexing the image of `X_K` in the wonderful compactification. The empty
//! set stands for the open orbit `G`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::coxeter::ParabolicSet;
use crate::rootsys::CartanDatum;
use crate::{Error, Result};

/// Largest supported number of boundary divisors.
pub const MAX_DIVISORS: usize = 64;

/// A set of boundary divisors (bit `i` is the divisor labelled `i + 1`).
///
/// Ordered lexicographically by the sorted label sequence, so
/// `{} < {1} < {1,2} < {2}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DivisorSet(u64);

impl DivisorSet {
    pub const EMPTY: DivisorSet = DivisorSet(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// From 1-based divisor labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self(labels.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }

    pub fn labels(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 >> i & 1 == 1).map(|i| i + 1)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max_label(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl Ord for DivisorSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.labels().cmp(other.labels())
    }
}

impl PartialOrd for DivisorSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DivisorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.labels().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// One member `K` of `𝓘` with its image `p(K)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Member {
    pub k: DivisorSet,
    pub p: ParabolicSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingOpenOrbit,
    OpenOrbitImage { p: ParabolicSet },
    DuplicateMember { k: DivisorSet },
    DivisorOutOfRange { k: DivisorSet, divisors: usize },
    ImageOutOfRange { k: DivisorSet, p: ParabolicSet },
    NotMonotone { k: DivisorSet, k_prime: DivisorSet },
    TooManyDivisors { divisors: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingOpenOrbit => f.write_str("{} is not a member"),
            Violation::OpenOrbitImage { p } => write!(f, "p(∅) ≠ ∅ (p({{}}) = {p})"),
            Violation::DuplicateMember { k } => write!(f, "K = {k} listed more than once"),
            Violation::DivisorOutOfRange { k, divisors } => {
                write!(f, "K = {k} uses a divisor outside 1..={divisors}")
            }
            Violation::ImageOutOfRange { k, p } => {
                write!(f, "p({k}) = {p} is not a subset of I")
            }
            Violation::NotMonotone { k, k_prime } => {
                write!(f, "{k} ⊆ {k_prime} but p({k}) ⊄ p({k_prime})")
            }
            Violation::TooManyDivisors { divisors } => {
                write!(f, "{divisors} divisors exceed the supported {MAX_DIVISORS}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingModel {
    cartan: CartanDatum,
    divisors: usize,
    family: Vec<Member>,
}

impl EmbeddingModel {
    /// Assembles a model without validating it; members are sorted by `K`.
    pub fn from_parts(cartan: CartanDatum, divisors: usize, mut family: Vec<Member>) -> Self {
        family.sort();
        Self { cartan, divisors, family }
    }

    /// Validated constructor.
    pub fn new(cartan: CartanDatum, divisors: usize, family: Vec<Member>) -> Result<Self> {
        let m = Self::from_parts(cartan, divisors, family);
        m.validate().map_err(Error::InvalidModel)?;
        Ok(m)
    }

    /// The wonderful compactification: one divisor per simple root,
    /// `𝓘` = all subsets of `I`, `p` = identity.
    pub fn wonderful(cartan: CartanDatum) -> Self {
        let l = cartan.rank();
        let family = ParabolicSet::full(l)
            .subsets()
            .map(|j| Member { k: DivisorSet::from_bits(j.bits() as u64), p: j })
            .collect();
        Self::from_parts(cartan, l, family)
    }

    /// The group itself: no boundary, `𝓘 = {∅}`.
    pub fn group_only(cartan: CartanDatum) -> Self {
        Self::from_parts(
            cartan,
            0,
            alloc::vec![Member { k: DivisorSet::EMPTY, p: ParabolicSet::EMPTY }],
        )
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn divisors(&self) -> usize {
        self.divisors
    }

    /// Members of `𝓘` in `K` order.
    pub fn family(&self) -> &[Member] {
        &self.family
    }

    pub fn contains(&self, k: DivisorSet) -> bool {
        self.p(k).is_some()
    }

    pub fn p(&self, k: DivisorSet) -> Option<ParabolicSet> {
        self.family.iter().find(|m| m.k == k).map(|m| m.p)
    }

    /// Reports every violated invariant; an empty list means the model is valid.
    pub fn validate(&self) -> core::result::Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if self.divisors > MAX_DIVISORS {
            out.push(Violation::TooManyDivisors { divisors: self.divisors });
        }
        match self.p(DivisorSet::EMPTY) {
            None => out.push(Violation::MissingOpenOrbit),
            Some(p) if !p.is_empty() => out.push(Violation::OpenOrbitImage { p }),
            Some(_) => {}
        }
        for pair in self.family.windows(2) {
            if pair[0].k == pair[1].k {
                out.push(Violation::DuplicateMember { k: pair[0].k });
            }
        }
        let full = ParabolicSet::full(self.cartan.rank());
        for m in &self.family {
            if m.k.max_label() > self.divisors {
                out.push(Violation::DivisorOutOfRange { k: m.k, divisors: self.divisors });
            }
            if !m.p.is_subset(full) {
                out.push(Violation::ImageOutOfRange { k: m.k, p: m.p });
            }
        }
        for a in &self.family {
            for b in &self.family {
                if a.k != b.k && a.k.is_subset(b.k) && !a.p.is_subset(b.p) {
                    out.push(Violation::NotMonotone { k: a.k, k_prime: b.k });
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// E.g. `2 divisors, 4 orbit closures over A2`.
    pub fn summary(&self) -> String {
        alloc::format!(
            "{} divisors, {} orbit closures over {}",
            self.divisors,
            self.family.len(),
            self.cartan
        )
    }
}
