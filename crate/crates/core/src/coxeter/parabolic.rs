//! Parabolic subgroups `W_J`, minimal coset representatives `W^J` and the
//! factorization `w = w^J w_J`.

use alloc::vec::Vec;
use core::fmt;

use super::{WeylElement, WeylGroup};

/// A subset `J` of the simple-root indices, stored as a bit mask
/// (bit `i` is the 0-based generator `i`, shown as label `i + 1`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicSet(u32);

impl ParabolicSet {
    pub const EMPTY: ParabolicSet = ParabolicSet(0);

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{0, ..., rank-1}`.
    pub fn full(rank: usize) -> Self {
        if rank >= 32 {
            Self(u32::MAX)
        } else {
            Self((1u32 << rank) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Self(indices.into_iter().fold(0, |m, i| m | 1 << i))
    }

    /// From 1-based labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_indices(labels.iter().map(|&j| j - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    /// `{0..rank} \ self`.
    pub fn complement(self, rank: usize) -> Self {
        Self(!self.0 & Self::full(rank).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// Every subset of `self`, ordered by bit mask.
    pub fn subsets(self) -> impl Iterator<Item = ParabolicSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(ParabolicSet(cur))
        })
    }
}

/// `{}` or `{1,3}` with 1-based labels.
impl fmt::Display for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl WeylGroup {
    /// Elements of `W_J` in ShortLex order.
    pub fn parabolic_subgroup(&self, j: ParabolicSet) -> Vec<WeylElement> {
        self.elements().filter(|&x| self.support(x).is_subset(j)).collect()
    }

    /// The longest element `w0^J` of `W_J`.
    pub fn longest_element(&self, j: ParabolicSet) -> WeylElement {
        // Climb by right multiplication until no generator of J lengthens.
        let mut x = self.identity();
        'climb: loop {
            for i in j.iter().filter(|&i| i < self.rank()) {
                let y = self.mul_simple_right(x, i);
                if self.length(y) > self.length(x) {
                    x = y;
                    continue 'climb;
                }
            }
            return x;
        }
    }

    /// `W^J`: elements without right descents in `J`, in ShortLex order.
    pub fn min_coset_reps(&self, j: ParabolicSet) -> Vec<WeylElement> {
        self.elements().filter(|&x| self.is_min_coset_rep(x, j)).collect()
    }

    pub fn is_min_coset_rep(&self, x: WeylElement, j: ParabolicSet) -> bool {
        let len = self.length(x);
        j.iter()
            .filter(|&i| i < self.rank())
            .all(|i| self.length(self.mul_simple_right(x, i)) > len)
    }

    /// The unique length-additive factorization `w = w^J w_J`.
    pub fn coset_factor(&self, w: WeylElement, j: ParabolicSet) -> (WeylElement, WeylElement) {
        let mut rep = w;
        'descend: loop {
            for i in j.iter().filter(|&i| i < self.rank()) {
                let y = self.mul_simple_right(rep, i);
                if self.length(y) < self.length(rep) {
                    rep = y;
                    continue 'descend;
                }
            }
            break;
        }
        let part = self.mul(self.inverse(rep), w);
        (rep, part)
    }
}
