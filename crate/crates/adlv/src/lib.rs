//! Exact combinatorics of affine Deligne-Lusztig varieties X_x(b) for pure
//! translations b, inside the affine Weyl group of a finite root system.
//!
//! The crate has three layers:
//!
//! * an exhaustive *oracle*: depth-first enumeration of positively folded
//!   alcove walks of a fixed type, scored against a periodic orientation at
//!   infinity ([`search`], [`adlv::adlv_dim_oracle`]);
//! * *closed-form predictions* for nonemptiness and dimension (Reuman-style
//!   support criterion, shrunken-translation equality, forward-shift and
//!   conjugation bounds, virtual dimension in the strips), each behind a
//!   common [`adlv::predictions::Prediction`] trait and registered by name;
//! * *explicit witnesses*: galleries built by hand (dominant-regular loop
//!   gallery, root-operator descendants, forward shifts, conjugation
//!   surgeries, diagram-automorphism transport) that re-score to the
//!   predicted dimensions ([`constructions`]).
//!
//! All arithmetic is exact: integers for coweights, pairings and wall
//! offsets, rationals only for alcove barycenters and panel vertices.
//!
//! Coordinate conventions (used everywhere, documented once here):
//!
//! * Coweights are written in fundamental-coweight coordinates, so the
//!   pairing with a root α = Σ cᵢαᵢ is ⟨α, λ⟩ = Σ cᵢλᵢ.
//! * The coroot αⱼ^∨ is column j of the Cartan matrix; the coroot lattice is
//!   the integer column span of the Cartan matrix.
//! * ⟨ρ, λ⟩ = Σᵢ λᵢ; the simple reflection acts by
//!   sᵢ·λ = λ − λᵢ·(column i of the Cartan matrix).

pub mod adlv;
pub mod affine;
pub mod config;
pub mod constructions;
pub mod gallery;
pub mod parse;
pub mod render;
pub mod root_ops;
pub mod root_system;
pub mod search;
pub mod verify;

pub use affine::AffineElement;
pub use gallery::{Gallery, Orientation, Step, StepKind};
pub use root_system::{RootSystem, TypeLabel, WeylElt};

/// Every failure mode surfaced by the public API.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}` (expected e.g. A2, C2, G2, A3)")]
    UnknownType(String),
    #[error("rank {rank} out of range for family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("coweight {0:?} is not in the coroot lattice")]
    NotInCorootLattice(Vec<i64>),
    #[error("parse error in `{input}`: {msg}")]
    Parse { input: String, msg: String },
    #[error("word is not reduced")]
    WordNotReduced,
    #[error("gallery is not positively folded: negative fold at step {step}")]
    NotPositivelyFolded { step: usize },
    #[error("gallery is malformed: {0}")]
    InvalidGallery(String),
    #[error("alcove element is not shrunken (deep in its Weyl chamber)")]
    NotShrunken,
    #[error("hypothesis `{name}` fails: {detail}")]
    HypothesisFailed { name: &'static str, detail: String },
    #[error("root operator {which}_{root} is undefined here")]
    OperatorUndefined { which: char, root: usize },
    #[error("search cap exceeded after visiting {visited} branches (cap {cap})")]
    CapExceeded { visited: u64, cap: u64 },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
