use alloc::string::String;
use alloc::vec::Vec;

use crate::embedding::Violation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("unknown Cartan type `{0}`")]
    UnknownCartanType(String),
    #[error("not finite type: more than {bound} positive roots")]
    NotFiniteType { bound: usize },
    #[error("Weyl group has more than {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("elements belong to different group contexts")]
    ContextMismatch,
    #[error("generator {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("search space of {size} candidates exceeds the bound {bound}; use a smaller rank")]
    SearchTooLarge { size: u64, bound: u64 },
    #[error("{count} orbits exceed the bound {bound}")]
    TooManyOrbits { count: usize, bound: usize },
    #[error("invalid embedding model: {}", join(.0))]
    InvalidModel(Vec<Violation>),
    #[error("{0} is not a member of the orbit-closure family")]
    NotInFamily(String),
    #[error("{v} is not a minimal coset representative for W_{complement}")]
    NotMinimalRepresentative { v: String, complement: String },
}

impl Error {
    /// `true` for errors caused by a configured size bound rather than by bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(
            self,
            Error::GroupTooLarge { .. }
                | Error::SearchTooLarge { .. }
                | Error::TooManyOrbits { .. }
                | Error::NotFiniteType { .. }
        )
    }
}

fn join(violations: &[Violation]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, v) in violations.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        let _ = write!(out, "{v}");
    }
    out
}
