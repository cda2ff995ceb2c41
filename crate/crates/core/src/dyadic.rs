//! Exact nonnegative dyadic rationals `p / 2^q`.
//!
//! Dyadics are the currency of thresholds and interval endpoints: partial
//! sums of the binary metric and their tail bounds are always of this form,
//! so comparisons against a dyadic threshold are exact integer comparisons.
//! Metric values that are *not* finite binary sums (geometric closed forms
//! over odd periods, for example) are carried as [`crate::Rational`] instead;
//! conversion in that direction is lossless.

use crate::error::Error;
use crate::Rational;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// A nonnegative dyadic rational in canonical form.
///
/// Canonical means the numerator is odd or zero, except that integers keep
/// exponent 0; zero is represented as `0 / 2^0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    numer: BigUint,
    exp: u32,
}

impl Dyadic {
    /// Builds `numer / 2^exp`, reducing to canonical form.
    pub fn new(numer: BigUint, exp: u32) -> Self {
        let mut d = Dyadic { numer, exp };
        d.normalize();
        d
    }

    /// Builds from a machine integer numerator.
    pub fn from_parts(numer: u64, exp: u32) -> Self {
        Self::new(BigUint::from(numer), exp)
    }

    pub fn zero() -> Self {
        Dyadic {
            numer: BigUint::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            numer: BigUint::one(),
            exp: 0,
        }
    }

    /// `2^(-j)` for `j >= 0`.
    pub fn pow2_neg(j: u32) -> Self {
        Dyadic {
            numer: BigUint::one(),
            exp: j,
        }
    }

    /// Builds from an integer.
    pub fn from_int(n: u64) -> Self {
        Dyadic {
            numer: BigUint::from(n),
            exp: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    fn normalize(&mut self) {
        if self.numer.is_zero() {
            self.exp = 0;
            return;
        }
        // Strip shared factors of two while the representation stays exact.
        let tz = self.numer.trailing_zeros().unwrap_or(0);
        let shift = core::cmp::min(tz, u64::from(self.exp));
        if shift > 0 {
            self.numer >>= shift;
            self.exp -= shift as u32;
        }
    }

    /// Rescales both operands to a common exponent and returns the pair of
    /// numerators plus that exponent.
    fn common(&self, other: &Self) -> (BigUint, BigUint, u32) {
        let exp = core::cmp::max(self.exp, other.exp);
        let a = &self.numer << u64::from(exp - self.exp);
        let b = &other.numer << u64::from(exp - other.exp);
        (a, b, exp)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, exp) = self.common(other);
        Dyadic::new(a + b, exp)
    }

    /// Exact subtraction; errors if the result would be negative.
    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        let (a, b, exp) = self.common(other);
        if a < b {
            return Err(Error::NegativeDyadic);
        }
        Ok(Dyadic::new(a - b, exp))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Dyadic::new(&self.numer * &other.numer, self.exp + other.exp)
    }

    /// Divides by `2^j` exactly.
    pub fn shr(&self, j: u32) -> Self {
        Dyadic::new(self.numer.clone(), self.exp + j)
    }

    /// Exact value as a big rational.
    pub fn to_rational(&self) -> Rational {
        let den = BigInt::one() << u64::from(self.exp);
        Rational::new(BigInt::from(self.numer.clone()), den)
    }

    /// Parses decimal-free forms: `"p"`, `"p/q"` with `q` a power of two,
    /// or `"p/2^e"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let bad = || Error::BadPattern(String::from(text));
        let (p, rest) = match text.split_once('/') {
            None => (text.trim(), None),
            Some((p, q)) => (p.trim(), Some(q.trim())),
        };
        let numer: BigUint = p.parse().map_err(|_| bad())?;
        let exp = match rest {
            None => 0u32,
            Some(q) => {
                if let Some(e) = q.strip_prefix("2^") {
                    e.parse().map_err(|_| bad())?
                } else {
                    let den: BigUint = q.parse().map_err(|_| bad())?;
                    if den.is_zero() || den.count_ones() != 1 {
                        return Err(bad());
                    }
                    den.trailing_zeros().unwrap_or(0) as u32
                }
            }
        };
        Ok(Dyadic::new(numer, exp))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.common(other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/2^{}", self.numer, self.exp)
        }
    }
}
