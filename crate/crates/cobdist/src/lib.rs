//! Exact cobordism-distance machinery on the span of 2-stranded torus knots.
//!
//! The crate computes, with no floating point anywhere:
//!
//! * signature step functions of torus knots `T(2,2m+1)` and their integer
//!   linear combinations ([`exactnum`], [`knots`]);
//! * certified four-genus intervals, with signature lower bounds and
//!   band-surgery upper bounds from a combinatorial schema solver ([`genus`]);
//! * projectivizations of finitely generated abelian groups together with
//!   canonical class forms ([`projective`]);
//! * the projective pseudo-metric `delta` and the chain metric `Delta` on
//!   classes of knots, including radius-one balls and an integer-lattice
//!   demonstration metric ([`metric`]);
//! * Vietoris-Rips complexes over any certified integer-distance oracle
//!   ([`rips`]).
//!
//! Every numeric claim is paired with a machine-checkable certificate: a
//!   signature evaluation point, an explicit surgery schema, a closed-form
//!   bound, or an axiom-labelled geometric fact.

pub mod exactnum;
pub mod genus;
pub mod knots;
pub mod metric;
pub mod parse;
pub mod projective;
pub mod rips;

pub use exactnum::{rat, Rational, StepFunction};
pub use genus::{g4_interval, GenusInterval, SurgerySchema, UpperWitness};
pub use knots::{Generator, KnotCombo};
pub use metric::{ClassNode, DistInterval};

use thiserror::Error as ThisError;

/// Errors shared by the engine modules.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("evaluation point {0} lies outside (0, 1]")]
    OutOfDomain(Rational),
    #[error("{name} must be at least {min}, got {got}")]
    ParameterRange {
        name: &'static str,
        min: i64,
        got: i64,
    },
    #[error("invalid step function: {0}")]
    InvalidStepFunction(&'static str),
    #[error("twist-knot generators carry no signature step function")]
    UnsupportedTwist,
    #[error("combination is not primitive: interval values have gcd {gcd}")]
    NotPrimitive { gcd: i64 },
    #[error("duplicate twist parameter {0}")]
    DuplicateTwist(u32),
    #[error("group has positive rank {0}; class count is only defined for finite groups")]
    InfiniteGroup(usize),
    #[error("element does not match group shape: {0}")]
    BadElement(&'static str),
    #[error(
        "radius-one classification disagrees with direct computation at parameter {param}: \
         classified {classified}, computed {computed}"
    )]
    BallMismatch {
        param: u32,
        classified: bool,
        computed: bool,
    },
    #[error("distance value is not certified exact")]
    Uncertified,
}
