//! Binary sequence spaces, their shift maps, and separation windows.
//!
//! Points of the one-sided space are maps `i ↦ x_i ∈ {0,1}` for `i ≥ 1`,
//! with metric `d(x, y) = Σ_{i≥1} |x_i − y_i| / 2^i`. Two-sided points are
//! indexed over all of ℤ with weight `1 / 2^|i|` (so index 0 carries weight
//! 1). Distances between eventually periodic points are computed in closed
//! form as exact rationals; otherwise a partial sum plus a rigorous tail
//! bound yields a dyadic enclosure that membership decisions refine on
//! demand. The separation window of a pair is the set of iteration counts
//! at which the orbit distance strictly exceeds a threshold, clipped to a
//! finite horizon.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::Error;
use crate::families::WindowSet;
use crate::Rational;

/// Exact distance value, or a rigorous two-sided dyadic enclosure of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceBound {
    /// The distance is known exactly.
    Exact(Rational),
    /// The distance lies in `[lo, hi]`; both ends are exact dyadics.
    Enclosure { lo: Dyadic, hi: Dyadic },
}

impl DistanceBound {
    /// Decides `distance > threshold` if the bound is tight enough.
    pub fn exceeds(&self, threshold: &Rational) -> Option<bool> {
        match self {
            DistanceBound::Exact(value) => Some(value > threshold),
            DistanceBound::Enclosure { lo, hi } => {
                if lo.to_rational() > *threshold {
                    Some(true)
                } else if hi.to_rational() <= *threshold {
                    Some(false)
                } else {
                    None
                }
            }
        }
    }

    /// Exact value when available.
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            DistanceBound::Exact(value) => Some(value),
            DistanceBound::Enclosure { .. } => None,
        }
    }

    /// A lower bound on the distance.
    pub fn lower(&self) -> Rational {
        match self {
            DistanceBound::Exact(value) => value.clone(),
            DistanceBound::Enclosure { lo, .. } => lo.to_rational(),
        }
    }

    /// An upper bound on the distance.
    pub fn upper(&self) -> Rational {
        match self {
            DistanceBound::Exact(value) => value.clone(),
            DistanceBound::Enclosure { hi, .. } => hi.to_rational(),
        }
    }
}

/// A dynamical system: point iteration plus exact pairwise distance.
///
/// `iterate` accepts any `n ≥ 0`; negative `n` is permitted only when
/// `invertible` reports true. `distance` may return an enclosure whose
/// width shrinks as `budget` grows; exact systems ignore the budget.
pub trait System {
    type Point: Clone;

    fn invertible(&self) -> bool;

    fn iterate(&self, point: &Self::Point, n: i64) -> Result<Self::Point, Error>;

    fn distance(
        &self,
        a: &Self::Point,
        b: &Self::Point,
        budget: u32,
    ) -> Result<DistanceBound, Error>;
}

/// Budget schedule for refining distance enclosures during membership
/// decisions: start at `initial` bits and double up to `max`.
#[derive(Clone, Copy, Debug)]
pub struct Refinement {
    pub initial: u32,
    pub max: u32,
}

impl Default for Refinement {
    fn default() -> Self {
        Refinement {
            initial: 64,
            max: 4096,
        }
    }
}

impl Refinement {
    pub fn new(initial: u32, max: u32) -> Self {
        Refinement {
            initial: initial.max(1),
            max: max.max(initial).max(1),
        }
    }

    fn budgets(&self) -> impl Iterator<Item = u32> {
        let max = self.max;
        let mut next = Some(self.initial.min(max));
        core::iter::from_fn(move || {
            let current = next?;
            next = if current >= max {
                None
            } else {
                Some(current.saturating_mul(2).min(max))
            };
            Some(current)
        })
    }
}

fn check_symbols(bits: &[u8]) -> Result<(), Error> {
    if bits.iter().any(|&b| b > 1) {
        return Err(Error::BadPattern(String::from("symbols must be 0 or 1")));
    }
    Ok(())
}

/// An eventually periodic bit rule `i ↦ bit(i)` for `i ≥ 1`: a finite
/// preperiod followed by a nonempty repeating period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpStream {
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

impl EpStream {
    pub fn new(preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self, Error> {
        if period.is_empty() {
            return Err(Error::BadPattern(String::from("period must be nonempty")));
        }
        check_symbols(&preperiod)?;
        check_symbols(&period)?;
        Ok(EpStream { preperiod, period })
    }

    /// Purely periodic stream repeating `period`.
    pub fn periodic(period: Vec<u8>) -> Result<Self, Error> {
        Self::new(Vec::new(), period)
    }

    /// Constant stream of a single symbol.
    pub fn constant(symbol: u8) -> Result<Self, Error> {
        Self::periodic(alloc::vec![symbol])
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    /// Bit at index `i ≥ 1`.
    pub fn bit(&self, i: u64) -> u8 {
        debug_assert!(i >= 1);
        let idx = (i - 1) as usize;
        if idx < self.preperiod.len() {
            self.preperiod[idx]
        } else {
            let into_tail = idx - self.preperiod.len();
            self.period[into_tail % self.period.len()]
        }
    }

    /// The stream `i ↦ bit(i + k)`: drop the first `k` entries.
    pub fn shifted(&self, k: u64) -> EpStream {
        let pre_len = self.preperiod.len() as u64;
        if k <= pre_len {
            EpStream {
                preperiod: self.preperiod[k as usize..].to_vec(),
                period: self.period.clone(),
            }
        } else {
            let rot = ((k - pre_len) % self.period.len() as u64) as usize;
            let mut period = self.period[rot..].to_vec();
            period.extend_from_slice(&self.period[..rot]);
            EpStream {
                preperiod: Vec::new(),
                period,
            }
        }
    }
}

/// Bit rule backing a one-sided point: an eventually periodic descriptor,
/// or a finite sampled prefix with no information past its end.
#[derive(Clone, Debug)]
pub enum BitStream {
    Ep(EpStream),
    Sampled(Arc<[u8]>),
}

impl BitStream {
    /// Bit at index `i ≥ 1`, or `None` past the end of a sample.
    fn try_bit(&self, i: u64) -> Option<u8> {
        match self {
            BitStream::Ep(stream) => Some(stream.bit(i)),
            BitStream::Sampled(bits) => bits.get((i - 1) as usize).copied(),
        }
    }

    /// Number of leading indices with defined bits (`None` = unbounded).
    fn defined_prefix(&self) -> Option<u64> {
        match self {
            BitStream::Ep(_) => None,
            BitStream::Sampled(bits) => Some(bits.len() as u64),
        }
    }
}

/// A point of the one-sided binary sequence space: a bit rule together
/// with a shift offset, so `x_i = rule(i + offset)` for `i ≥ 1`.
#[derive(Clone, Debug)]
pub struct OneSidedPoint {
    stream: BitStream,
    offset: u64,
}

impl OneSidedPoint {
    pub fn eventually_periodic(preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self, Error> {
        Ok(OneSidedPoint {
            stream: BitStream::Ep(EpStream::new(preperiod, period)?),
            offset: 0,
        })
    }

    pub fn periodic(period: Vec<u8>) -> Result<Self, Error> {
        Self::eventually_periodic(Vec::new(), period)
    }

    /// A point defined only on a finite sampled prefix.
    pub fn sampled(bits: Vec<u8>) -> Result<Self, Error> {
        check_symbols(&bits)?;
        Ok(OneSidedPoint {
            stream: BitStream::Sampled(Arc::from(bits)),
            offset: 0,
        })
    }

    /// Bit at index `i ≥ 1`.
    pub fn bit(&self, i: u64) -> Result<u8, Error> {
        debug_assert!(i >= 1);
        let resolved = i + self.offset;
        self.stream
            .try_bit(resolved)
            .ok_or(Error::IndexUnavailable {
                index: i as i64,
                resolved: resolved as i64,
            })
    }

    /// The shifted point `i ↦ x_{i+k}`; one-sided shifts cannot go back.
    pub fn shifted(&self, k: i64) -> Result<Self, Error> {
        if k < 0 {
            return Err(Error::NotInvertible);
        }
        Ok(OneSidedPoint {
            stream: self.stream.clone(),
            offset: self.offset + k as u64,
        })
    }

    /// Eventually periodic view of this point, when it has one.
    fn ep_view(&self) -> Option<EpStream> {
        match &self.stream {
            BitStream::Ep(stream) => Some(stream.shifted(self.offset)),
            BitStream::Sampled(_) => None,
        }
    }

    /// Number of indices `i ≥ 1` with defined bits (`None` = unbounded).
    fn defined_prefix(&self) -> Option<u64> {
        self.stream
            .defined_prefix()
            .map(|len| len.saturating_sub(self.offset))
    }
}

/// Exact distance between two eventually periodic one-sided bit rules:
/// the difference sequence has preperiod `P` (the longer of the two) and
/// period `L = lcm` of the two periods, so
/// `d = Σ_{i≤P} diff(i)/2^i + 2^{−P} · S / (2^L − 1)` with
/// `S = Σ_{j=1..L} diff(P+j) · 2^{L−j}`.
fn ep_distance(x: &EpStream, y: &EpStream) -> Rational {
    let p = x.preperiod.len().max(y.preperiod.len()) as u64;
    let l = x.period.len().lcm(&y.period.len()) as u64;
    let mut head = BigUint::zero();
    for i in 1..=p {
        head <<= 1;
        if x.bit(i) != y.bit(i) {
            head += 1u32;
        }
    }
    let mut cycle = BigUint::zero();
    for j in 1..=l {
        cycle <<= 1;
        if x.bit(p + j) != y.bit(p + j) {
            cycle += 1u32;
        }
    }
    let pow_l = BigUint::one() << l;
    let cycle_denom = &pow_l - BigUint::one();
    let numer = head * &cycle_denom + cycle;
    let denom = (BigUint::one() << p) * cycle_denom;
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Partial-sum enclosure of the one-sided distance: sum the first `m`
/// difference bits and bound the tail by `2^{−m}`, where `m` is the
/// budget clipped to the indices both points actually define.
fn partial_enclosure(
    x: &OneSidedPoint,
    y: &OneSidedPoint,
    budget: u32,
) -> Result<DistanceBound, Error> {
    let mut m = budget.max(1) as u64;
    for limit in [x.defined_prefix(), y.defined_prefix()]
        .into_iter()
        .flatten()
    {
        m = m.min(limit);
    }
    let mut numer = BigUint::zero();
    for i in 1..=m {
        numer <<= 1;
        if x.bit(i)? != y.bit(i)? {
            numer += 1u32;
        }
    }
    let lo = Dyadic::new(numer, m as u32);
    let hi = lo.add(&Dyadic::pow2_neg(m as u32));
    Ok(DistanceBound::Enclosure { lo, hi })
}

/// Distance between one-sided points: exact closed form when both are
/// eventually periodic, otherwise a partial-sum enclosure at `budget` bits.
pub fn metric_distance(
    x: &OneSidedPoint,
    y: &OneSidedPoint,
    budget: u32,
) -> Result<DistanceBound, Error> {
    match (x.ep_view(), y.ep_view()) {
        (Some(ex), Some(ey)) => Ok(DistanceBound::Exact(ep_distance(&ex, &ey))),
        _ => partial_enclosure(x, y, budget),
    }
}

/// A point of the two-sided binary sequence space: two eventually periodic
/// rays spliced around a center symbol, plus a shift offset. The bit at
/// index `i ∈ ℤ` is read at `j = i + offset`: the center for `j = 0`, the
/// right ray at `j ≥ 1`, the left ray at `−j` for `j ≤ −1`.
#[derive(Clone, Debug)]
pub struct TwoSidedPoint {
    left: EpStream,
    center: u8,
    right: EpStream,
    offset: i64,
}

impl TwoSidedPoint {
    pub fn new(left: EpStream, center: u8, right: EpStream) -> Result<Self, Error> {
        check_symbols(&[center])?;
        Ok(TwoSidedPoint {
            left,
            center,
            right,
            offset: 0,
        })
    }

    /// Bit at any index `i ∈ ℤ`.
    pub fn bit(&self, i: i64) -> u8 {
        let j = i + self.offset;
        if j == 0 {
            self.center
        } else if j > 0 {
            self.right.bit(j as u64)
        } else {
            self.left.bit((-j) as u64)
        }
    }

    /// The shifted point `i ↦ x_{i+k}` for any `k ∈ ℤ`.
    pub fn shifted(&self, k: i64) -> Self {
        TwoSidedPoint {
            left: self.left.clone(),
            center: self.center,
            right: self.right.clone(),
            offset: self.offset + k,
        }
    }

    /// The ray `i ↦ bit(dir · i)` for `i ≥ 1`, materialized as an
    /// eventually periodic stream (`dir` is `+1` or `−1`).
    fn ray(&self, dir: i64) -> EpStream {
        debug_assert!(dir == 1 || dir == -1);
        // Index (in i) from which the ray reads purely from the periodic
        // tail of the corresponding side's stream.
        let (side, tail_start) = if dir == 1 {
            let start = self.right.preperiod.len() as i64 + 1 - self.offset;
            (&self.right, start)
        } else {
            let start = self.left.preperiod.len() as i64 + 1 + self.offset;
            (&self.left, start)
        };
        let start = tail_start.max(1);
        let mut preperiod = Vec::with_capacity((start - 1) as usize);
        for i in 1..start {
            preperiod.push(self.bit(dir * i));
        }
        let side_index = if dir == 1 {
            start + self.offset
        } else {
            start - self.offset
        };
        debug_assert!(side_index > side.preperiod.len() as i64);
        let into_tail = (side_index - 1) as usize - side.preperiod.len();
        let rot = into_tail % side.period.len();
        let mut period = side.period[rot..].to_vec();
        period.extend_from_slice(&side.period[..rot]);
        EpStream { preperiod, period }
    }
}

/// Exact distance between two-sided points under the weighting `2^{−|i|}`:
/// the center difference plus the closed-form sums of both rays.
pub fn metric_distance_two_sided(x: &TwoSidedPoint, y: &TwoSidedPoint) -> Rational {
    let center = if x.bit(0) != y.bit(0) {
        Rational::one()
    } else {
        Rational::zero()
    };
    let right = ep_distance(&x.ray(1), &y.ray(1));
    let left = ep_distance(&x.ray(-1), &y.ray(-1));
    center + right + left
}

/// The one-sided full 2-shift: drop the first coordinate.
#[derive(Clone, Copy, Debug, Default)]
pub struct OneSidedShift;

impl System for OneSidedShift {
    type Point = OneSidedPoint;

    fn invertible(&self) -> bool {
        false
    }

    fn iterate(&self, point: &OneSidedPoint, n: i64) -> Result<OneSidedPoint, Error> {
        point.shifted(n)
    }

    fn distance(
        &self,
        a: &OneSidedPoint,
        b: &OneSidedPoint,
        budget: u32,
    ) -> Result<DistanceBound, Error> {
        metric_distance(a, b, budget)
    }
}

/// The two-sided full 2-shift: translate the indexing, invertibly.
#[derive(Clone, Copy, Debug, Default)]
pub struct TwoSidedShift;

impl System for TwoSidedShift {
    type Point = TwoSidedPoint;

    fn invertible(&self) -> bool {
        true
    }

    fn iterate(&self, point: &TwoSidedPoint, n: i64) -> Result<TwoSidedPoint, Error> {
        Ok(point.shifted(n))
    }

    fn distance(
        &self,
        a: &TwoSidedPoint,
        b: &TwoSidedPoint,
        _budget: u32,
    ) -> Result<DistanceBound, Error> {
        Ok(DistanceBound::Exact(metric_distance_two_sided(a, b)))
    }
}

/// Decides `d(a, b) > delta` exactly, refining enclosure budgets on the
/// given schedule; a straddling enclosure at the maximum budget is an
/// explicit error tagged with the iteration index, never a silent verdict.
pub fn decide_exceeds<S: System>(
    sys: &S,
    a: &S::Point,
    b: &S::Point,
    delta: &Rational,
    refinement: &Refinement,
    index: i64,
) -> Result<bool, Error> {
    for budget in refinement.budgets() {
        if let Some(answer) = sys.distance(a, b, budget)?.exceeds(delta) {
            return Ok(answer);
        }
    }
    Err(Error::PrecisionExhausted {
        budget: refinement.max,
        index,
    })
}

fn require_positive(delta: &Rational) -> Result<(), Error> {
    if *delta <= Rational::zero() {
        return Err(Error::NonPositiveThreshold);
    }
    Ok(())
}

/// The separation window over `[1, horizon]`: iteration counts `n ≥ 1`
/// at which the orbit distance strictly exceeds `delta`.
pub fn separation_window<S: System>(
    sys: &S,
    x: &S::Point,
    y: &S::Point,
    delta: &Rational,
    horizon: i64,
    refinement: &Refinement,
) -> Result<WindowSet, Error> {
    require_positive(delta)?;
    if horizon < 1 {
        return Err(Error::BadWindowBounds { lo: 1, hi: horizon });
    }
    let mut members = Vec::new();
    let mut cur_x = x.clone();
    let mut cur_y = y.clone();
    for n in 1..=horizon {
        cur_x = sys.iterate(&cur_x, 1)?;
        cur_y = sys.iterate(&cur_y, 1)?;
        if decide_exceeds(sys, &cur_x, &cur_y, delta, refinement, n)? {
            members.push(n);
        }
    }
    WindowSet::new(members, 1, horizon, false)
}

/// The separation window over `[−horizon, horizon] ∖ {0}` for invertible
/// systems.
pub fn separation_window_z<S: System>(
    sys: &S,
    x: &S::Point,
    y: &S::Point,
    delta: &Rational,
    horizon: i64,
    refinement: &Refinement,
) -> Result<WindowSet, Error> {
    require_positive(delta)?;
    if !sys.invertible() {
        return Err(Error::NotInvertible);
    }
    if horizon < 1 {
        return Err(Error::BadWindowBounds {
            lo: -horizon,
            hi: horizon,
        });
    }
    let mut members = Vec::new();
    let mut cur_x = x.clone();
    let mut cur_y = y.clone();
    for n in 1..=horizon {
        cur_x = sys.iterate(&cur_x, 1)?;
        cur_y = sys.iterate(&cur_y, 1)?;
        if decide_exceeds(sys, &cur_x, &cur_y, delta, refinement, n)? {
            members.push(n);
        }
    }
    cur_x = x.clone();
    cur_y = y.clone();
    for n in 1..=horizon {
        cur_x = sys.iterate(&cur_x, -1)?;
        cur_y = sys.iterate(&cur_y, -1)?;
        if decide_exceeds(sys, &cur_x, &cur_y, delta, refinement, -n)? {
            members.push(-n);
        }
    }
    WindowSet::new(members, -horizon, horizon, true)
}

/// Checks the window-composition mechanism: given `n` in the window of
/// `(x, y)` and `k` in the window of `(fⁿx, fⁿy)` — both verified, with
/// violations reported as errors — asserts `n + k` is in the window of
/// `(x, y)`, computing that distance both directly and via the two-stage
/// iterate to confirm they agree.
pub fn separation_compose_check<S: System>(
    sys: &S,
    x: &S::Point,
    y: &S::Point,
    delta: &Rational,
    n: i64,
    k: i64,
    refinement: &Refinement,
) -> Result<bool, Error> {
    require_positive(delta)?;
    if n < 1 || k < 1 {
        return Err(Error::PreconditionViolated(String::from(
            "composition requires n >= 1 and k >= 1",
        )));
    }
    let fx = sys.iterate(x, n)?;
    let fy = sys.iterate(y, n)?;
    if !decide_exceeds(sys, &fx, &fy, delta, refinement, n)? {
        return Err(Error::PreconditionViolated(String::from(
            "n is not in the separation window of (x, y)",
        )));
    }
    let gx = sys.iterate(&fx, k)?;
    let gy = sys.iterate(&fy, k)?;
    if !decide_exceeds(sys, &gx, &gy, delta, refinement, n + k)? {
        return Err(Error::PreconditionViolated(String::from(
            "k is not in the separation window of (f^n x, f^n y)",
        )));
    }
    let hx = sys.iterate(x, n + k)?;
    let hy = sys.iterate(y, n + k)?;
    decide_exceeds(sys, &hx, &hy, delta, refinement, n + k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use alloc::vec;

    fn point_01() -> OneSidedPoint {
        OneSidedPoint::periodic(vec![0, 1]).unwrap()
    }

    fn point_10() -> OneSidedPoint {
        OneSidedPoint::periodic(vec![1, 0]).unwrap()
    }

    fn zero_point() -> OneSidedPoint {
        OneSidedPoint::periodic(vec![0]).unwrap()
    }

    fn exact(x: &OneSidedPoint, y: &OneSidedPoint) -> Rational {
        match metric_distance(x, y, 8).unwrap() {
            DistanceBound::Exact(value) => value,
            DistanceBound::Enclosure { .. } => panic!("expected exact distance"),
        }
    }

    #[test]
    fn closed_form_distances_match_hand_values() {
        assert_eq!(exact(&point_01(), &point_10()), ratio(1, 1));
        assert_eq!(exact(&point_01(), &point_01()), ratio(0, 1));
        let e1 = OneSidedPoint::eventually_periodic(vec![1], vec![0]).unwrap();
        assert_eq!(exact(&zero_point(), &e1), ratio(1, 2));
        // Differences only at odd indices: 1/2 + 1/8 + 1/32 + … = 2/3.
        let half_odd = OneSidedPoint::periodic(vec![1, 0]).unwrap();
        assert_eq!(exact(&zero_point(), &half_odd), ratio(2, 3));
    }

    #[test]
    fn shifting_drops_leading_coordinates() {
        let x = point_01();
        let shifted = x.shifted(1).unwrap();
        for i in 1..=12 {
            assert_eq!(shifted.bit(i).unwrap(), point_10().bit(i).unwrap());
        }
        let twice = x.shifted(2).unwrap().shifted(3).unwrap();
        let direct = x.shifted(5).unwrap();
        for i in 1..=12 {
            assert_eq!(twice.bit(i).unwrap(), direct.bit(i).unwrap());
        }
        assert!(x.shifted(-1).is_err());
    }

    #[test]
    fn sampled_points_report_missing_indices() {
        let x = OneSidedPoint::sampled(vec![1, 0, 1]).unwrap();
        assert_eq!(x.bit(3).unwrap(), 1);
        match x.bit(4) {
            Err(Error::IndexUnavailable { index, resolved }) => {
                assert_eq!((index, resolved), (4, 4));
            }
            other => panic!("expected missing index, got {other:?}"),
        }
        let shifted = x.shifted(2).unwrap();
        assert_eq!(shifted.bit(1).unwrap(), 1);
        assert!(shifted.bit(2).is_err());
    }

    #[test]
    fn enclosures_contain_the_closed_form_value() {
        // Same bits, one wrapped as a finite sample to force the interval path.
        let pattern: Vec<u8> = (1..=64).map(|i| point_01().bit(i).unwrap()).collect();
        let sampled = OneSidedPoint::sampled(pattern).unwrap();
        let exact_value = exact(&zero_point(), &point_01());
        match metric_distance(&zero_point(), &sampled, 16).unwrap() {
            DistanceBound::Enclosure { lo, hi } => {
                assert!(lo.to_rational() <= exact_value);
                assert!(exact_value <= hi.to_rational());
                let width = hi.to_rational() - lo.to_rational();
                assert_eq!(width, ratio(1, 65536));
            }
            DistanceBound::Exact(_) => panic!("expected enclosure"),
        }
    }

    #[test]
    fn enclosure_budget_clips_to_sampled_data() {
        let short = OneSidedPoint::sampled(vec![0, 0, 0]).unwrap();
        match metric_distance(&zero_point(), &short, 64).unwrap() {
            DistanceBound::Enclosure { lo, hi } => {
                assert!(lo.is_zero());
                assert_eq!(hi.to_rational(), ratio(1, 8));
            }
            DistanceBound::Exact(_) => panic!("expected enclosure"),
        }
    }

    #[test]
    fn shift_erases_a_single_leading_difference() {
        let sys = OneSidedShift;
        let e1 = OneSidedPoint::eventually_periodic(vec![1], vec![0]).unwrap();
        let window = separation_window(
            &sys,
            &zero_point(),
            &e1,
            &ratio(1, 4),
            50,
            &Refinement::default(),
        )
        .unwrap();
        assert!(window.is_empty());
    }

    #[test]
    fn persistent_difference_fills_the_window() {
        let sys = OneSidedShift;
        let window = separation_window(
            &sys,
            &point_01(),
            &point_10(),
            &ratio(1, 2),
            20,
            &Refinement::default(),
        )
        .unwrap();
        assert_eq!(window.members(), (1..=20).collect::<Vec<_>>().as_slice());
        let empty = separation_window(
            &sys,
            &point_01(),
            &point_01(),
            &ratio(1, 2),
            20,
            &Refinement::default(),
        )
        .unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn windows_are_symmetric_and_monotone_in_delta() {
        let sys = OneSidedShift;
        let x = OneSidedPoint::eventually_periodic(vec![1, 1, 0, 1], vec![0, 0, 1]).unwrap();
        let y = point_01();
        let small =
            separation_window(&sys, &x, &y, &ratio(1, 4), 30, &Refinement::default()).unwrap();
        let large =
            separation_window(&sys, &x, &y, &ratio(1, 2), 30, &Refinement::default()).unwrap();
        let swapped =
            separation_window(&sys, &y, &x, &ratio(1, 4), 30, &Refinement::default()).unwrap();
        assert!(large.is_subset_of(&small));
        assert_eq!(small.members(), swapped.members());
    }

    #[test]
    fn composition_check_verifies_preconditions() {
        let sys = OneSidedShift;
        let x = point_01();
        let y = point_10();
        let delta = ratio(1, 2);
        assert!(
            separation_compose_check(&sys, &x, &y, &delta, 1, 1, &Refinement::default()).unwrap()
        );
        let e1 = OneSidedPoint::eventually_periodic(vec![1], vec![0]).unwrap();
        let err = separation_compose_check(
            &sys,
            &zero_point(),
            &e1,
            &ratio(1, 4),
            1,
            1,
            &Refinement::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
    }

    #[test]
    fn straddling_enclosure_exhausts_the_budget_loudly() {
        // Distance is exactly 1/4 (single difference at index 2), but only a
        // finite sample is available, so the interval always straddles 1/4.
        let mut bits = vec![0u8; 8192];
        bits[1] = 1;
        let x = OneSidedPoint::sampled(bits).unwrap();
        let err = decide_exceeds(
            &OneSidedShift,
            &x,
            &zero_point(),
            &ratio(1, 4),
            &Refinement::default(),
            7,
        )
        .unwrap_err();
        match err {
            Error::PrecisionExhausted { budget, index } => {
                assert_eq!((budget, index), (4096, 7));
            }
            other => panic!("expected precision exhaustion, got {other:?}"),
        }
    }

    fn two_sided_zero() -> TwoSidedPoint {
        TwoSidedPoint::new(
            EpStream::constant(0).unwrap(),
            0,
            EpStream::constant(0).unwrap(),
        )
        .unwrap()
    }

    fn step_point() -> TwoSidedPoint {
        // 1 on indices i <= 0, 0 on i >= 1.
        TwoSidedPoint::new(
            EpStream::constant(1).unwrap(),
            1,
            EpStream::constant(0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn two_sided_step_distances_follow_the_tail_weights() {
        let x = two_sided_zero();
        let y = step_point();
        assert_eq!(metric_distance_two_sided(&x, &y), ratio(2, 1));
        for n in 1..=6 {
            let d = metric_distance_two_sided(&x.shifted(n), &y.shifted(n));
            assert_eq!(d, ratio(2, 1 << n));
        }
        for n in 1..=4 {
            let d = metric_distance_two_sided(&x.shifted(-n), &y.shifted(-n));
            assert_eq!(d, ratio(3, 1) - ratio(1, 1 << n));
        }
    }

    #[test]
    fn two_sided_window_splits_by_sign() {
        let sys = TwoSidedShift;
        let window = separation_window_z(
            &sys,
            &two_sided_zero(),
            &step_point(),
            &ratio(1, 2),
            8,
            &Refinement::default(),
        )
        .unwrap();
        // Positive side: d(n) = 2^{1−n} > 1/2 iff n = 1; negative side: every
        // d <= −1 is at least 5/2.
        let expected: Vec<i64> = (-8..=-1).chain([1]).collect();
        assert_eq!(window.members(), expected.as_slice());
        assert!(window.excludes_zero());
    }

    #[test]
    fn one_sided_window_rejects_negative_indexing() {
        let sys = OneSidedShift;
        let err = separation_window_z(
            &sys,
            &point_01(),
            &point_10(),
            &ratio(1, 2),
            5,
            &Refinement::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotInvertible));
    }

    #[test]
    fn two_sided_rays_respect_offsets_across_the_splice() {
        let point = TwoSidedPoint::new(
            EpStream::new(vec![1, 0], vec![0, 1, 1]).unwrap(),
            1,
            EpStream::new(vec![0, 0, 1], vec![1, 0]).unwrap(),
        )
        .unwrap();
        for shift in -7..=7 {
            let moved = point.shifted(shift);
            let right = moved.ray(1);
            let left = moved.ray(-1);
            for i in 1..=40 {
                assert_eq!(right.bit(i as u64), moved.bit(i));
                assert_eq!(left.bit(i as u64), moved.bit(-i));
            }
        }
    }
}
