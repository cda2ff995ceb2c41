//! Command-line companion to `expanselab-core`: builds the library's
//! combinatorial objects, runs the verification suites over a corpus of
//! finite metric systems, and emits deterministic JSON-line reports.

pub mod corpus;
pub mod report;
pub mod suites;

pub use expanselab_core::{ratio, Rational};

use anyhow::{anyhow, bail, Context};
use num_bigint::BigInt;

/// Renders a rational as `p` or `p/q` in lowest terms.
pub fn format_rational(value: &Rational) -> String {
    use num_traits::One;
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `p` or `p/q` into an exact rational.
pub fn parse_rational(text: &str) -> anyhow::Result<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|e| anyhow!("bad numerator in {text:?}: {e}"))?;
    let denom: BigInt = denom
        .parse()
        .map_err(|e| anyhow!("bad denominator in {text:?}: {e}"))?;
    if denom == BigInt::from(0) {
        bail!("zero denominator in {text:?}");
    }
    Ok(Rational::new(numer, denom))
}

/// Parses a comma-separated list of integers.
pub fn parse_int_list(text: &str) -> anyhow::Result<Vec<i64>> {
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .with_context(|| format!("bad integer {part:?}"))
        })
        .collect()
}
