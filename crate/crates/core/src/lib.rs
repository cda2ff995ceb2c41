//! Exact-arithmetic kernel for analysing how orbits of a map separate over time.
//!
//! The crate is organised around one primitive: the *separation window*
//! `N(x, y, δ) = {n : d(fⁿx, fⁿy) > δ}` of a pair of points under iteration,
//! computed with exact rational/dyadic arithmetic so that every membership
//! decision is provable rather than floating-point folklore. On top of that
//! sit horizon-relative classifiers (thick / syndetic / cofinite), explicit
//! finite families with duals, a library of concrete systems (interval
//! ladders, binary subshifts, finite metric tables), combinators (products,
//! powers, conjugates, inverse limits) and open-cover generator checks.
//!
//! Everything here is `no_std + alloc`; IO, serialization and the CLI live in
//! the companion binary crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod combinators;
pub mod constructions;
pub mod dyadic;
pub mod error;
pub mod families;
pub mod finite;
pub mod generators;
pub mod sequences;

pub use dyadic::Dyadic;
pub use error::Error;

/// Exact rational scalar used for all metric values.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn ratio(num: i64, den: i64) -> Rational {
    use num_bigint::BigInt;
    Rational::new(BigInt::from(num), BigInt::from(den))
}
