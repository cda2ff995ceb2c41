//! Crate-wide error type.
//!
//! Every fallible operation reports a structured reason; none of the
//! verification routines ever substitutes a default value for a failed
//! computation. In particular, running out of precision while deciding a
//! metric comparison is an error, never a verdict.

use alloc::string::String;
use core::fmt;

/// Errors raised by construction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Window bounds are inverted or otherwise unusable.
    BadWindowBounds { lo: i64, hi: i64 },
    /// A member list contained the same index twice.
    DuplicateMember(i64),
    /// A member fell outside the window's bounds.
    MemberOutOfRange { member: i64, lo: i64, hi: i64 },
    /// Index 0 appeared in a window whose universe excludes it.
    ZeroExcluded,
    /// The operation needs at least two members (e.g. gap statistics).
    TooFewMembers { have: usize, need: usize },
    /// A classification requirement must be at least 1.
    BadRequirement(i64),
    /// Two windows cannot be combined (incompatible bounds or universes).
    IncompatibleWindows(String),
    /// Explicit-family universes are capped to keep exhaustive scans exact.
    UniverseTooLarge { size: usize, max: usize },
    /// A subset bitmask used bits beyond the family universe.
    SubsetOutOfUniverse { mask: u32, universe: usize },
    /// The family is not closed under taking supersets.
    NotUpwardHereditary { member: u32, superset: u32 },
    /// Result of a dyadic subtraction would be negative.
    NegativeDyadic,
    /// An interval comparison still straddles the threshold at the largest
    /// permitted budget. Carries the budget and the undecided index.
    PrecisionExhausted { budget: u32, index: i64 },
    /// A sequence index outside the source's resolved range was requested.
    IndexUnavailable { index: i64, resolved: i64 },
    /// Negative iterates require an invertible system.
    NotInvertible,
    /// One-sided and two-sided points cannot be mixed.
    MixedSidedness,
    /// A constructed bit did not satisfy its defining inequality.
    ConstraintContradiction { position_a: i64, position_b: i64 },
    /// A binary pattern argument was empty or contained non-bits.
    BadPattern(String),
    /// Requested size parameter is below the smallest sensible value.
    SizeTooSmall { got: usize, min: usize },
    /// The distance table is not a metric; the string names the violation.
    NotAMetric(String),
    /// The map table referenced a point outside the system.
    MapOutOfRange { image: usize, size: usize },
    /// A bijection was required (inverse limits, conjugacies).
    NotABijection,
    /// Thresholds for chains and separations must be positive.
    NonPositiveThreshold,
    /// Mismatched dimensions between two systems or tables.
    DimensionMismatch { left: usize, right: usize },
    /// A power/shift exponent was outside its allowed range.
    BadExponent(i64),
    /// The given sets do not cover the space.
    NotACover { uncovered_point: usize },
    /// Named point lookup failed.
    UnknownPoint(String),
    /// The two points must be distinct for this check.
    PointsNotDistinct,
    /// No threshold on the search grid satisfies the requested bound.
    NoSuitableDelta,
    /// A stated precondition of a compositional check does not hold.
    PreconditionViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadWindowBounds { lo, hi } => {
                write!(f, "window bounds [{lo}, {hi}] are invalid")
            }
            Error::DuplicateMember(m) => write!(f, "duplicate member {m}"),
            Error::MemberOutOfRange { member, lo, hi } => {
                write!(f, "member {member} outside window [{lo}, {hi}]")
            }
            Error::ZeroExcluded => write!(f, "index 0 is excluded from this window's universe"),
            Error::TooFewMembers { have, need } => {
                write!(f, "need at least {need} members, have {have}")
            }
            Error::BadRequirement(r) => write!(f, "requirement must be >= 1, got {r}"),
            Error::IncompatibleWindows(why) => write!(f, "incompatible windows: {why}"),
            Error::UniverseTooLarge { size, max } => {
                write!(f, "universe size {size} exceeds exhaustive-scan cap {max}")
            }
            Error::SubsetOutOfUniverse { mask, universe } => {
                write!(
                    f,
                    "subset {mask:#b} uses bits outside universe of size {universe}"
                )
            }
            Error::NotUpwardHereditary { member, superset } => write!(
                f,
                "family contains {member:#b} but not its superset {superset:#b}"
            ),
            Error::NegativeDyadic => write!(f, "dyadic subtraction would be negative"),
            Error::PrecisionExhausted { budget, index } => write!(
                f,
                "comparison undecided at index {index} with budget {budget} bits"
            ),
            Error::IndexUnavailable { index, resolved } => write!(
                f,
                "sequence index {index} beyond resolved length {resolved}"
            ),
            Error::NotInvertible => write!(f, "system is not invertible"),
            Error::MixedSidedness => write!(f, "cannot mix one-sided and two-sided points"),
            Error::ConstraintContradiction {
                position_a,
                position_b,
            } => write!(
                f,
                "inequality constraint between positions {position_a} and {position_b} is violated"
            ),
            Error::BadPattern(p) => write!(f, "invalid binary pattern: {p}"),
            Error::SizeTooSmall { got, min } => write!(f, "size {got} below minimum {min}"),
            Error::NotAMetric(why) => write!(f, "distance table is not a metric: {why}"),
            Error::MapOutOfRange { image, size } => {
                write!(f, "map image {image} outside point set of size {size}")
            }
            Error::NotABijection => write!(f, "map table is not a bijection"),
            Error::NonPositiveThreshold => write!(f, "threshold must be positive"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::BadExponent(m) => write!(f, "exponent {m} out of range"),
            Error::NotACover { uncovered_point } => {
                write!(f, "point {uncovered_point} is not covered")
            }
            Error::UnknownPoint(name) => write!(f, "unknown point: {name}"),
            Error::PointsNotDistinct => write!(f, "points must be distinct"),
            Error::NoSuitableDelta => write!(f, "no grid threshold satisfies the bound"),
            Error::PreconditionViolated(why) => write!(f, "precondition violated: {why}"),
        }
    }
}

impl core::error::Error for Error {}
