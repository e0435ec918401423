//! Combinatorics of `B x B`-orbit closures in toroidal embeddings of reductive
//! groups.
//!
//! The crate is layered bottom-up:
//!
//! * [`rootsys`]: finite-type Cartan data and positive-root enumeration.
//! * [`coxeter`]: the Weyl group as an enumerated context with lengths,
//!   descents, Bruhat order and parabolic subgroups / quotients.
//! * [`embedding`]: the index family of `G x G`-orbit closures of an
//!   embedding together with its map to subsets of simple roots.
//! * [`orbitposet`]: orbits `[K, v, w]`, the two closure criteria, the
//!   materialized closure poset and exhaustive verification suites.
//!
//! Everything is exact integer arithmetic and the crate is `no_std` (it needs
//! `alloc`). The `parallel` feature pulls in `std` and rayon to spread the
//! pairwise closure sweep across threads; results do not depend on the number
//! of workers.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bits;
pub mod coxeter;
pub mod embedding;
mod error;
pub mod orbitposet;
pub mod rootsys;

pub use coxeter::{HeCounterexample, HeReport, ParabolicSet, WeylElement, WeylGroup};
pub use embedding::{DivisorSet, EmbeddingModel, Member, Violation};
pub use error::Error;
pub use orbitposet::{
    CheckId, CheckResult, DivisorialOrbits, Orbit, OrbitPoset, OrbitSpace, SuiteReport,
};
pub use rootsys::{CartanDatum, Root, RootSystem};

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Resource limits shared by every exhaustive computation.
///
/// Exceeding a bound is always reported as an error, never by truncating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest Weyl group that will be enumerated.
    pub max_group: usize,
    /// Largest orbit set that will be enumerated or materialized.
    pub max_orbits: usize,
    /// Largest number of candidate tuples an exhaustive search may visit.
    pub max_search: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_group: 1_000_000,
            max_orbits: 20_000,
            max_search: 200_000_000,
        }
    }
}
