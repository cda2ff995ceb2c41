//! Exact builders for the engineered symbolic and finite systems the
//! verification suites exercise.
//!
//! The centerpiece is a binary sequence assembled from an alternating
//! block structure on ℕ: *include* blocks (the set `P`, lengths 2, 2, 4,
//! 4, 6, 6, …) carry a parity pattern, and each *skip* block `B_m` (the
//! m-th maximal run of the complement, length `2m`) splits into a
//! constrained lower part `C_m` governed by a count ledger and a parity
//! tail. The ledger, the inequality constraints, and the resolved
//! sequence are all reproduced exactly, with every applied rule logged so
//! tests can re-verify the result against its own constraints and a
//! pinned reference prefix.
//!
//! Alongside it: a ladder system on rationals converging to 1/2 from both
//! sides (a compact system that is not positively expansive), periodic
//! orbit-closure systems, and the two-sided asymptotic pair used to
//! refute syndetic separation over ℤ.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::families::{FamilyVerdict, VerdictKind, WindowSet, Witness};
use crate::finite::FiniteMetricSystem;
use crate::ratio;
use crate::sequences::{
    metric_distance, separation_window_z, DistanceBound, EpStream, OneSidedPoint, Refinement,
    TwoSidedPoint, TwoSidedShift,
};
use crate::Rational;

/// The include set clipped to `[1, hi]`: blocks of lengths 2, 2, 4, 4,
/// 6, 6, … separated by skip blocks of the same length schedule.
pub fn build_p(hi: i64) -> Result<WindowSet, Error> {
    if hi < 2 {
        return Err(Error::BadRequirement(hi));
    }
    let mut members = Vec::new();
    let mut k = 1i64;
    loop {
        let lo = 2 * k * (k - 1) + 1;
        if lo > hi {
            break;
        }
        let block_hi = (2 * k * k).min(hi);
        members.extend(lo..=block_hi);
        k += 1;
    }
    WindowSet::new(members, 1, hi, false)
}

/// The include set with the last `s` elements of every block removed,
/// clipped to `[1, hi]`.
pub fn p_prime(s: i64, hi: i64) -> Result<WindowSet, Error> {
    if s < 1 {
        return Err(Error::BadRequirement(s));
    }
    if hi < 2 {
        return Err(Error::BadRequirement(hi));
    }
    let mut members = Vec::new();
    let mut k = 1i64;
    loop {
        let lo = 2 * k * (k - 1) + 1;
        if lo > hi {
            break;
        }
        let trimmed_hi = (2 * k * k - s).min(hi);
        members.extend(lo..=trimmed_hi);
        k += 1;
    }
    WindowSet::new(members, 1, hi, false)
}

/// Union of the parity tails of skip blocks `B_m` for `m ≥ 3` (the upper
/// part `[t+m+1, t+2m−1]` of each), clipped to `[1, hi]`.
pub fn upper_half_union(hi: i64) -> Result<WindowSet, Error> {
    if hi < 1 {
        return Err(Error::BadRequirement(hi));
    }
    let mut members = Vec::new();
    let mut m = 3i64;
    loop {
        let t = 2 * m * m + 1;
        let lo = t + m + 1;
        if lo > hi {
            break;
        }
        let tail_hi = (t + 2 * m - 1).min(hi);
        members.extend(lo..=tail_hi);
        m += 1;
    }
    WindowSet::new(members, 1, hi, false)
}

/// Ledger breakpoints: `b_1 = 2`, `b_n = b_{n−1} + n`. A new count opens
/// exactly when the block index reaches a breakpoint.
pub fn b_seq(n: i64) -> Result<i64, Error> {
    if n < 1 {
        return Err(Error::BadRequirement(n));
    }
    let mut b = 2i64;
    for j in 2..=n {
        b += j;
    }
    Ok(b)
}

/// Start and extent of skip block `B_m` and its constrained part `C_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSpan {
    pub m: i64,
    /// First position of `B_m`.
    pub b_start: i64,
    /// `B_m` has exactly this many positions (`2m`).
    pub b_len: i64,
    /// `C_m` starts at `b_start` and has this many positions (`m+1`).
    pub c_len: i64,
}

impl BlockSpan {
    pub fn b_end(&self) -> i64 {
        self.b_start + self.b_len - 1
    }

    pub fn c_end(&self) -> i64 {
        self.b_start + self.c_len - 1
    }

    /// The parity tail `[t+m+1, t+2m−1]` of the block.
    pub fn tail_range(&self) -> (i64, i64) {
        (self.b_start + self.m + 1, self.b_end())
    }
}

/// Finds `B_m` as the first maximal run of length exactly `2m` in the
/// complement of the include set, extending the scan horizon as needed,
/// and returns it with `C_m`.
pub fn block_b_c(m: i64) -> Result<BlockSpan, Error> {
    if m < 1 {
        return Err(Error::BadRequirement(m));
    }
    let mut hi = 2 * (m + 1) * (m + 1) + 2 * (m + 1);
    loop {
        let p = build_p(hi)?;
        let mut run_start: Option<i64> = None;
        for i in 1..=hi {
            if !p.contains(i) {
                run_start.get_or_insert(i);
                continue;
            }
            if let Some(start) = run_start.take() {
                // Run [start, i-1] is flanked by members on both sides
                // (position 1 is always a member, so start > 1).
                if i - start == 2 * m {
                    return Ok(BlockSpan {
                        m,
                        b_start: start,
                        b_len: 2 * m,
                        c_len: m + 1,
                    });
                }
            }
        }
        // A trailing run is clipped by the horizon: indeterminate, extend.
        hi *= 2;
    }
}

/// Per-block count ledger: how many inequality spans of each half-length
/// the constrained part `C_m` carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLedger {
    m: i64,
    span: BlockSpan,
    /// `r ↦ d_{2r}`, nonzero entries only.
    counts: BTreeMap<i64, i64>,
}

impl BlockLedger {
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn span(&self) -> BlockSpan {
        self.span
    }

    /// Nonzero counts, keyed by half-length index `r` (span length `2r+1`).
    pub fn counts(&self) -> &BTreeMap<i64, i64> {
        &self.counts
    }

    pub fn count(&self, r: i64) -> i64 {
        self.counts.get(&r).copied().unwrap_or(0)
    }

    pub fn max_index(&self) -> i64 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Offset of the first span of half-length `r`: the total count of
    /// spans with strictly larger half-length.
    pub fn offset(&self, r: i64) -> i64 {
        self.counts.range(r + 1..).map(|(_, count)| *count).sum()
    }

    /// The inequality spans inside `C_m`, as `(a, a + 2r)` position pairs.
    pub fn constraint_edges(&self) -> Vec<(i64, i64)> {
        let t = self.span.b_start;
        let mut edges = Vec::new();
        for (&r, &count) in self.counts.iter().rev() {
            let base = t + self.offset(r);
            for j in 0..count {
                let a = base + j;
                edges.push((a, a + 2 * r));
            }
        }
        edges
    }
}

/// Builds the count ledger for block `m ≥ 2` by the breakpoint induction:
/// start from a single count at step 2; at step `m+1 = b_k + r`
/// (1 ≤ r ≤ k) increment the count for `r`; at a breakpoint `m+1 = b_{k+1}`
/// open a fresh count of 1 at the new top index.
pub fn d_counts(m: i64) -> Result<BlockLedger, Error> {
    if m < 2 {
        return Err(Error::BadRequirement(m));
    }
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    counts.insert(1, 1);
    let mut step = 2i64;
    while step < m {
        let next = step + 1;
        let mut k = 1i64;
        while b_seq(k + 1)? <= next {
            k += 1;
        }
        if b_seq(k)? == next {
            counts.insert(k, 1);
        } else {
            let r = next - b_seq(k)?;
            debug_assert!(1 <= r && r <= k);
            *counts.entry(r).or_insert(0) += 1;
        }
        step = next;
    }
    let total: i64 = counts.values().sum();
    if total != m - 1 {
        return Err(Error::PreconditionViolated(String::from(
            "ledger counts must sum to m - 1",
        )));
    }
    let values: Vec<i64> = counts.values().copied().collect();
    if values.windows(2).any(|pair| pair[0] <= pair[1]) {
        return Err(Error::PreconditionViolated(String::from(
            "ledger counts must strictly decrease in the half-length index",
        )));
    }
    let span = BlockSpan {
        m,
        b_start: 2 * m * m + 1,
        b_len: 2 * m,
        c_len: m + 1,
    };
    Ok(BlockLedger { m, span, counts })
}

/// A rule application recorded while assembling the engineered sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssignmentRule {
    /// Include-block position: 1 at odd positions, 0 at even.
    IncludeParity { position: i64 },
    /// Parity tail of skip block `m ≥ 3`: 0 at odd positions, 1 at even.
    TailParity { m: i64, position: i64 },
    /// The one-position tail of skip block 2 is filled with 0.
    TailFill { m: i64, position: i64 },
    /// Position colored by two-coloring the block's inequality spans
    /// (components seeded 0 at their smallest position).
    ConstraintColor { m: i64, position: i64 },
    /// Constrained-part position untouched by any span: 0 at odd
    /// positions, 1 at even.
    GapFill { m: i64, position: i64 },
}

/// An inequality `x_a ≠ x_b` contributed by block `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InequalityEdge {
    pub m: i64,
    pub a: i64,
    pub b: i64,
}

/// The engineered sequence with its full assignment log.
#[derive(Clone, Debug)]
pub struct XBarSpec {
    bits: Vec<u8>,
    log: Vec<AssignmentRule>,
    edges: Vec<InequalityEdge>,
}

impl XBarSpec {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at position `i ≥ 1`.
    pub fn bit(&self, i: i64) -> u8 {
        self.bits[(i - 1) as usize]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    pub fn log(&self) -> &[AssignmentRule] {
        &self.log
    }

    pub fn edges(&self) -> &[InequalityEdge] {
        &self.edges
    }

    /// Re-verifies every logged rule and inequality against the bits.
    pub fn verify(&self) -> Result<(), Error> {
        let len = self.bits.len() as i64;
        let check = |position: i64, expected: u8| -> Result<(), Error> {
            if position >= 1 && position <= len && self.bit(position) != expected {
                return Err(Error::ConstraintContradiction {
                    position_a: position,
                    position_b: position,
                });
            }
            Ok(())
        };
        for rule in &self.log {
            match *rule {
                AssignmentRule::IncludeParity { position } => {
                    check(position, if position % 2 == 1 { 1 } else { 0 })?;
                }
                AssignmentRule::TailParity { position, .. }
                | AssignmentRule::GapFill { position, .. } => {
                    check(position, if position % 2 == 1 { 0 } else { 1 })?;
                }
                AssignmentRule::TailFill { position, .. } => check(position, 0)?,
                AssignmentRule::ConstraintColor { .. } => {}
            }
        }
        for edge in &self.edges {
            if edge.a <= len && edge.b <= len && self.bit(edge.a) == self.bit(edge.b) {
                return Err(Error::ConstraintContradiction {
                    position_a: edge.a,
                    position_b: edge.b,
                });
            }
        }
        Ok(())
    }

    /// The bits rendered as a `0`/`1` string.
    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect()
    }
}

/// Block values, constraint edges, and colored-position flags.
type ResolvedBlock = (Vec<u8>, Vec<(i64, i64)>, Vec<bool>);

/// Two-colors the inequality spans of block `m` over `C_m = [t, t+m]`:
/// breadth-first over each constraint component in ascending position
/// order, seeding the smallest position of every component with 0;
/// untouched positions get the 0-at-odd/1-at-even fill. Returns the
/// values, the edges, and which positions were colored.
fn resolve_constrained_block(m: i64) -> Result<ResolvedBlock, Error> {
    let t = 2 * m * m + 1;
    let size = (m + 1) as usize;
    let edges = if m >= 2 {
        d_counts(m)?.constraint_edges()
    } else {
        Vec::new()
    };
    let mut adjacency: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(a, b) in &edges {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    for neighbors in adjacency.values_mut() {
        neighbors.sort_unstable();
    }
    let mut color: BTreeMap<i64, u8> = BTreeMap::new();
    let starts: Vec<i64> = adjacency.keys().copied().collect();
    for start in starts {
        if color.contains_key(&start) {
            continue;
        }
        color.insert(start, 0);
        let mut queue: Vec<i64> = alloc::vec![start];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let u_color = color[&u];
            for &v in &adjacency[&u] {
                match color.get(&v) {
                    Some(&c) if c == u_color => {
                        return Err(Error::ConstraintContradiction {
                            position_a: u,
                            position_b: v,
                        });
                    }
                    Some(_) => {}
                    None => {
                        color.insert(v, 1 - u_color);
                        queue.push(v);
                    }
                }
            }
        }
    }
    let mut values = Vec::with_capacity(size);
    let mut colored = Vec::with_capacity(size);
    for i in t..=t + m {
        match color.get(&i) {
            Some(&c) => {
                values.push(c);
                colored.push(true);
            }
            None => {
                values.push(if i % 2 == 1 { 0 } else { 1 });
                colored.push(false);
            }
        }
    }
    Ok((values, edges, colored))
}

/// Assembles the engineered sequence to `length` positions, logging every
/// applied rule: include-block parity, block two-colorings with their
/// inequality edges, gap fills, and parity tails.
pub fn build_xbar(length: u64) -> Result<XBarSpec, Error> {
    if length < 1 {
        return Err(Error::BadRequirement(length as i64));
    }
    let hi = length as i64;
    let mut bits = alloc::vec![0u8; length as usize];
    let mut log = Vec::new();
    let mut all_edges = Vec::new();
    let mut k = 1i64;
    loop {
        let include_lo = 2 * k * (k - 1) + 1;
        if include_lo > hi {
            break;
        }
        for i in include_lo..=(2 * k * k).min(hi) {
            bits[(i - 1) as usize] = if i % 2 == 1 { 1 } else { 0 };
            log.push(AssignmentRule::IncludeParity { position: i });
        }
        let m = k;
        let t = 2 * k * k + 1;
        if t <= hi {
            let (values, edges, colored) = resolve_constrained_block(m)?;
            for (idx, &value) in values.iter().enumerate() {
                let i = t + idx as i64;
                if i > hi {
                    break;
                }
                bits[(i - 1) as usize] = value;
                log.push(if colored[idx] {
                    AssignmentRule::ConstraintColor { m, position: i }
                } else {
                    AssignmentRule::GapFill { m, position: i }
                });
            }
            for (a, b) in edges {
                all_edges.push(InequalityEdge { m, a, b });
            }
            for i in (t + m + 1)..=(t + 2 * m - 1).min(hi) {
                if m >= 3 {
                    bits[(i - 1) as usize] = if i % 2 == 1 { 0 } else { 1 };
                    log.push(AssignmentRule::TailParity { m, position: i });
                } else {
                    bits[(i - 1) as usize] = 0;
                    log.push(AssignmentRule::TailFill { m, position: i });
                }
            }
        }
        k += 1;
    }
    let spec = XBarSpec {
        bits,
        log,
        edges: all_edges,
    };
    spec.verify()?;
    Ok(spec)
}

/// The engineered sequence sampled to a fixed length, exposing its shift
/// orbit and the alternating reference points as one-sided shift points.
#[derive(Clone, Debug)]
pub struct EngineeredOrbit {
    bits: alloc::sync::Arc<[u8]>,
}

impl EngineeredOrbit {
    pub fn new(length: u64) -> Result<Self, Error> {
        let spec = build_xbar(length)?;
        Ok(EngineeredOrbit {
            bits: alloc::sync::Arc::from(spec.into_bits()),
        })
    }

    pub fn length(&self) -> u64 {
        self.bits.len() as u64
    }

    /// The base point (a finite sample; queries past the sample error out).
    pub fn point(&self) -> Result<OneSidedPoint, Error> {
        OneSidedPoint::sampled(self.bits.to_vec())
    }

    /// The base point shifted `r ≥ 0` times.
    pub fn shifted_point(&self, r: i64) -> Result<OneSidedPoint, Error> {
        self.point()?.shifted(r)
    }

    /// The period-2 point starting with `first` (`01…` or `10…`).
    pub fn alternating(first: u8) -> Result<OneSidedPoint, Error> {
        OneSidedPoint::periodic(alloc::vec![first, 1 - first])
    }
}

/// A ladder of rationals accumulating at 1/2 from both sides: the points
/// are 0, 1, and 1/n together with 1 − 1/n for the truncation range, the
/// metric is the real line's, and the map fixes {0, 1/2, 1} while moving
/// every other point one rung toward 1/2.
pub fn ladder_system(n_max: i64) -> Result<FiniteMetricSystem, Error> {
    if n_max < 3 {
        return Err(Error::BadRequirement(n_max));
    }
    let mut values: Vec<Rational> = Vec::new();
    values.push(Rational::zero());
    for n in 1..=n_max {
        let v = ratio(1, n);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    for n in 3..=n_max {
        let v = Rational::one() - ratio(1, n);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    values.sort();
    let half = ratio(1, 2);
    let size = values.len();
    let mut map = Vec::with_capacity(size);
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() || *v == half || v.is_one() {
            map.push(i);
        } else if *v < half {
            map.push(i + 1);
        } else {
            map.push(i - 1);
        }
    }
    let labels: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    let dist: Vec<Vec<Rational>> = values
        .iter()
        .map(|a| values.iter().map(|b| (a - b).abs()).collect())
        .collect();
    FiniteMetricSystem::new(labels, dist, map)
}

/// The finite orbit closure of the periodic sequence repeating `pattern`
/// under the one-sided shift: points are the distinct rotations, the
/// metric is the sequence metric in closed form, and the map rotates.
pub fn periodic_closure_system(pattern: &[u8]) -> Result<FiniteMetricSystem, Error> {
    if pattern.is_empty() {
        return Err(Error::BadPattern(String::from("pattern must be nonempty")));
    }
    if pattern.iter().any(|&b| b > 1) {
        return Err(Error::BadPattern(String::from("symbols must be 0 or 1")));
    }
    let k = pattern.len();
    let mut rotations: Vec<Vec<u8>> = Vec::new();
    let mut successor: Vec<usize> = Vec::new();
    for j in 0..k {
        let mut rot = pattern[j..].to_vec();
        rot.extend_from_slice(&pattern[..j]);
        if !rotations.contains(&rot) {
            rotations.push(rot);
        }
    }
    for rot in &rotations {
        let mut next = rot[1..].to_vec();
        next.push(rot[0]);
        let target = rotations
            .iter()
            .position(|r| *r == next)
            .expect("rotation set is closed under rotation");
        successor.push(target);
    }
    let points: Vec<OneSidedPoint> = rotations
        .iter()
        .map(|rot| OneSidedPoint::periodic(rot.clone()))
        .collect::<Result<_, _>>()?;
    let size = rotations.len();
    let mut dist = alloc::vec![alloc::vec![Rational::zero(); size]; size];
    for i in 0..size {
        for j in 0..size {
            if i == j {
                continue;
            }
            match metric_distance(&points[i], &points[j], 1)? {
                DistanceBound::Exact(value) => dist[i][j] = value,
                DistanceBound::Enclosure { .. } => {
                    return Err(Error::PreconditionViolated(String::from(
                        "periodic points must have closed-form distances",
                    )))
                }
            }
        }
    }
    let labels: Vec<String> = rotations
        .iter()
        .map(|rot| {
            rot.iter()
                .map(|&b| if b == 1 { '1' } else { '0' })
                .collect()
        })
        .collect();
    FiniteMetricSystem::new(labels, dist, successor)
}

/// Which direction an asymptotic pair converges in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsymptoticKind {
    /// Distances vanish as the iterate goes to +∞.
    Positively,
    /// Distances vanish as the iterate goes to −∞.
    Negatively,
}

/// A two-sided pair that is asymptotic in the requested direction: the
/// all-zero point against the point whose 1s occupy one half-line. For
/// the positive kind, `d(σⁿx, σⁿy) = 2^{1−n}` for `n ≥ 1` while every
/// `n ≤ 0` keeps distance at least 2; the negative kind mirrors.
pub fn asymptotic_pair(kind: AsymptoticKind) -> Result<(TwoSidedPoint, TwoSidedPoint), Error> {
    let zero = TwoSidedPoint::new(EpStream::constant(0)?, 0, EpStream::constant(0)?)?;
    let other = match kind {
        AsymptoticKind::Positively => {
            TwoSidedPoint::new(EpStream::constant(1)?, 1, EpStream::constant(0)?)?
        }
        AsymptoticKind::Negatively => {
            TwoSidedPoint::new(EpStream::constant(0)?, 1, EpStream::constant(1)?)?
        }
    };
    Ok((zero, other))
}

/// One refutation record from [`syndetic_refutation_check`].
#[derive(Clone, Debug)]
pub struct SyndeticRefutation {
    pub epsilon: Rational,
    /// All separation indices are < `tail_start`; the upper tail from
    /// `tail_start` to the horizon is empty.
    pub tail_start: i64,
    pub verdict: FamilyVerdict,
}

/// For each threshold: computes the ℤ-window of the positively asymptotic
/// pair, verifies the upper tail past the closed-form bound is empty, and
/// refutes syndetic structure with that tail as the witness gap.
pub fn syndetic_refutation_check(
    x: &TwoSidedPoint,
    y: &TwoSidedPoint,
    epsilon_grid: &[Rational],
    horizon: i64,
) -> Result<Vec<SyndeticRefutation>, Error> {
    let sys = TwoSidedShift;
    let refinement = Refinement::default();
    let mut out = Vec::new();
    for epsilon in epsilon_grid {
        let window = separation_window_z(&sys, x, y, epsilon, horizon, &refinement)?;
        // Smallest N ≥ 0 with 2^N ≥ 2/epsilon: beyond it the positive-side
        // distances 2^{1−n} can no longer exceed epsilon.
        let mut bound = 0i64;
        let mut power = Rational::one();
        let two = ratio(2, 1);
        while &power * epsilon < two {
            power *= &two;
            bound += 1;
        }
        if window.members().iter().any(|&n| n > bound) {
            return Err(Error::PreconditionViolated(String::from(
                "separation index found beyond the closed-form tail bound",
            )));
        }
        let verdict = if bound < horizon {
            FamilyVerdict {
                kind: VerdictKind::Refuted,
                witness: Some(Witness::Gap {
                    after: bound,
                    len: horizon - bound,
                }),
                lo: -horizon,
                hi: horizon,
            }
        } else {
            FamilyVerdict {
                kind: VerdictKind::Inconclusive,
                witness: None,
                lo: -horizon,
                hi: horizon,
            }
        };
        out.push(SyndeticRefutation {
            epsilon: epsilon.clone(),
            tail_start: bound + 1,
            verdict,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyKind;
    use crate::sequences::{separation_window, OneSidedShift, System};
    use alloc::vec;

    const REFERENCE_PREFIX: &str =
        "10011010011010101000110110101010000111011010101010000110010110101010101";

    /// Pointwise membership rule for the include set: block `k` is
    /// `[2k(k−1)+1, 2k²]`, followed by a skip block of length `2k`.
    fn include_member(i: i64) -> bool {
        assert!(i >= 1);
        let mut k = 1i64;
        loop {
            let lo = 2 * k * (k - 1) + 1;
            let hi = 2 * k * k;
            if i < lo {
                return false;
            }
            if i <= hi {
                return true;
            }
            if i <= hi + 2 * k {
                return false;
            }
            k += 1;
        }
    }

    #[test]
    fn include_set_matches_the_pinned_listing() {
        let p = build_p(18).unwrap();
        assert_eq!(p.members(), &[1, 2, 5, 6, 7, 8, 13, 14, 15, 16, 17, 18]);
        let p24 = build_p(24).unwrap();
        let complement = p24.complement_in_window();
        assert_eq!(
            complement.members(),
            &[3, 4, 9, 10, 11, 12, 19, 20, 21, 22, 23, 24]
        );
        assert_eq!(build_p(2).unwrap().members(), &[1, 2]);
        assert!(build_p(1).is_err());
        // The block construction agrees with the pointwise membership rule.
        let p = build_p(500).unwrap();
        for i in 1..=500 {
            assert_eq!(p.contains(i), include_member(i), "index {i}");
        }
    }

    #[test]
    fn breakpoints_follow_the_recurrence() {
        assert_eq!(b_seq(1).unwrap(), 2);
        assert_eq!(b_seq(2).unwrap(), 4);
        assert_eq!(b_seq(3).unwrap(), 7);
        assert_eq!(b_seq(4).unwrap(), 11);
        assert_eq!(b_seq(8).unwrap(), 37);
        assert!(b_seq(0).is_err());
    }

    #[test]
    fn skip_blocks_are_found_by_scanning_the_complement() {
        let b2 = block_b_c(2).unwrap();
        assert_eq!((b2.b_start, b2.b_end()), (9, 12));
        assert_eq!((b2.b_start, b2.c_end()), (9, 11));
        let b3 = block_b_c(3).unwrap();
        assert_eq!((b3.b_start, b3.b_end()), (19, 24));
        assert_eq!(b3.c_end(), 22);
        let b4 = block_b_c(4).unwrap();
        assert_eq!((b4.b_start, b4.b_end()), (33, 40));
        assert_eq!(b4.c_end(), 37);
        for m in 1..=25 {
            let span = block_b_c(m).unwrap();
            assert_eq!(span.b_start, 2 * m * m + 1, "closed form at m={m}");
        }
    }

    #[test]
    fn ledgers_match_the_worked_examples() {
        let l2 = d_counts(2).unwrap();
        assert_eq!(l2.counts(), &BTreeMap::from([(1, 1)]));
        let l3 = d_counts(3).unwrap();
        assert_eq!(l3.counts(), &BTreeMap::from([(1, 2)]));
        let l4 = d_counts(4).unwrap();
        assert_eq!(l4.counts(), &BTreeMap::from([(1, 2), (2, 1)]));
        let l11 = d_counts(11).unwrap();
        assert_eq!(
            l11.counts(),
            &BTreeMap::from([(1, 4), (2, 3), (3, 2), (4, 1)])
        );
        assert!(d_counts(1).is_err());
    }

    #[test]
    fn ledger_invariants_hold_over_a_long_sweep() {
        let mut previous: Option<BlockLedger> = None;
        for m in 2..=60 {
            let ledger = d_counts(m).unwrap();
            let total: i64 = ledger.counts().values().sum();
            assert_eq!(total, m - 1, "sum at m={m}");
            let values: Vec<i64> = ledger.counts().values().copied().collect();
            assert!(
                values.windows(2).all(|pair| pair[0] > pair[1]),
                "strict decrease at m={m}"
            );
            if let Some(prev) = previous {
                for (&r, &count) in prev.counts() {
                    assert!(
                        ledger.count(r) >= count,
                        "monotone count for r={r} at m={m}"
                    );
                }
            }
            previous = Some(ledger);
        }
    }

    #[test]
    fn constraint_edges_tile_the_constrained_part() {
        for m in 2..=40 {
            let ledger = d_counts(m).unwrap();
            let edges = ledger.constraint_edges();
            let t = ledger.span().b_start;
            for &(a, b) in &edges {
                assert!(a >= t && b <= ledger.span().c_end(), "edge bounds at m={m}");
                assert_eq!((b - a) % 2, 0, "edges join same-parity positions");
            }
            // The last unit-span batch must end exactly at the block's end.
            if ledger.count(1) > 0 {
                let last_start = t + ledger.offset(1) + ledger.count(1) - 1;
                assert_eq!(last_start + 2, ledger.span().c_end());
            }
        }
    }

    #[test]
    fn sequence_prefix_matches_the_pinned_reference() {
        let spec = build_xbar(71).unwrap();
        assert_eq!(spec.to_bit_string(), REFERENCE_PREFIX);
        let spec8 = build_xbar(8).unwrap();
        assert_eq!(spec8.to_bit_string(), "10011010");
    }

    #[test]
    fn logged_rules_and_inequalities_are_internally_consistent() {
        let spec = build_xbar(3000).unwrap();
        spec.verify().unwrap();
        // Include-block odd positions carry 1.
        for &i in &[1i64, 5, 7, 13] {
            assert_eq!(spec.bit(i), 1);
        }
        // Every logged edge inside range is genuinely unequal.
        let mut checked = 0;
        for edge in spec.edges() {
            if edge.b <= 3000 {
                assert_ne!(spec.bit(edge.a), spec.bit(edge.b));
                checked += 1;
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn constrained_blocks_resolve_without_contradiction_far_out() {
        for m in 2..=200 {
            resolve_constrained_block(m).unwrap();
        }
    }

    #[test]
    fn trimmed_include_set_drops_block_tails() {
        let p3 = p_prime(3, 75).unwrap();
        assert_eq!(
            p3.members(),
            &[
                5, 13, 14, 15, 25, 26, 27, 28, 29, 41, 42, 43, 44, 45, 46, 47, 61, 62, 63, 64, 65,
                66, 67, 68, 69
            ]
        );
    }

    #[test]
    fn tail_union_collects_upper_block_parts() {
        let f = upper_half_union(80).unwrap();
        // m=3: t=19, tail 23..24; m=4: t=33, tail 38..40; m=5: t=51,
        // tail 57..60; m=6: t=73, tail 80..84 clipped to 80.
        assert_eq!(f.members(), &[23, 24, 38, 39, 40, 57, 58, 59, 60, 80]);
    }

    #[test]
    fn ladder_map_absorbs_interior_points_at_the_center() {
        let sys = ladder_system(6).unwrap();
        let half = sys.index_of("1/2").unwrap();
        let third = sys.index_of("1/3").unwrap();
        let two_thirds = sys.index_of("2/3").unwrap();
        assert_eq!(sys.iterate(&third, 1).unwrap(), half);
        assert_eq!(sys.iterate(&two_thirds, 1).unwrap(), half);
        assert!(!sys.invertible());
        let zero = sys.index_of("0").unwrap();
        let one = sys.index_of("1").unwrap();
        assert_eq!(sys.iterate(&zero, 5).unwrap(), zero);
        assert_eq!(sys.iterate(&one, 5).unwrap(), one);
        assert!(ladder_system(2).is_err());
    }

    #[test]
    fn ladder_pair_at_the_center_never_separates() {
        let sys = ladder_system(8).unwrap();
        let half = sys.index_of("1/2").unwrap();
        let third = sys.index_of("1/3").unwrap();
        for delta in [ratio(1, 100), ratio(1, 12), ratio(1, 7)] {
            let window = crate::sequences::separation_window(
                &sys,
                &half,
                &third,
                &delta,
                60,
                &Refinement::default(),
            )
            .unwrap();
            assert!(window.is_empty(), "delta {delta}");
        }
    }

    #[test]
    fn ladder_windows_off_the_center_are_finite() {
        let sys = ladder_system(8).unwrap();
        let a = sys.index_of("1/4").unwrap();
        let b = sys.index_of("1/5").unwrap();
        let window = crate::sequences::separation_window(
            &sys,
            &a,
            &b,
            &ratio(1, 30),
            100,
            &Refinement::default(),
        )
        .unwrap();
        assert!(!window.is_empty());
        // Both orbits land on 1/2 and stay: membership stops.
        assert!(window.members().iter().all(|&n| n <= 5));
        let zero = sys.index_of("0").unwrap();
        let half = sys.index_of("1/2").unwrap();
        let fixed = crate::sequences::separation_window(
            &sys,
            &zero,
            &half,
            &ratio(1, 4),
            100,
            &Refinement::default(),
        )
        .unwrap();
        assert_eq!(fixed.members().len(), 100);
    }

    #[test]
    fn periodic_closure_separates_with_bounded_gaps() {
        let sys = periodic_closure_system(&[0, 1]).unwrap();
        assert_eq!(sys.size(), 2);
        let a = sys.index_of("01").unwrap();
        let b = sys.index_of("10").unwrap();
        assert_eq!(sys.dist(a, b), &ratio(1, 1));
        let window = crate::sequences::separation_window(
            &sys,
            &a,
            &b,
            &ratio(1, 2),
            40,
            &Refinement::default(),
        )
        .unwrap();
        assert_eq!(window.members().len(), 40);
        let verdict = window.classify(FamilyKind::Syndetic, 2).unwrap();
        assert_eq!(verdict.kind, VerdictKind::ConsistentWitness);

        let sys3 = periodic_closure_system(&[0, 0, 1]).unwrap();
        assert_eq!(sys3.size(), 3);
        for i in 0..3 {
            for j in i + 1..3 {
                let window = crate::sequences::separation_window(
                    &sys3,
                    &i,
                    &j,
                    &ratio(1, 2),
                    60,
                    &Refinement::default(),
                )
                .unwrap();
                let verdict = window.classify(FamilyKind::Syndetic, 3).unwrap();
                assert_eq!(verdict.kind, VerdictKind::ConsistentWitness, "pair {i},{j}");
            }
        }

        let singleton = periodic_closure_system(&[0]).unwrap();
        assert_eq!(singleton.size(), 1);
        assert_eq!(periodic_closure_system(&[0, 1, 0, 1]).unwrap().size(), 2);
        assert!(periodic_closure_system(&[]).is_err());
    }

    #[test]
    fn engineered_orbit_exposes_shift_points() {
        let orbit = EngineeredOrbit::new(200).unwrap();
        let x = orbit.point().unwrap();
        assert_eq!(x.bit(1).unwrap(), 1);
        let shifted = orbit.shifted_point(2).unwrap();
        assert_eq!(shifted.bit(1).unwrap(), x.bit(3).unwrap());
        let alt = EngineeredOrbit::alternating(0).unwrap();
        assert_eq!(alt.bit(1).unwrap(), 0);
        assert_eq!(alt.bit(2).unwrap(), 1);
    }

    #[test]
    fn engineered_pair_separates_on_the_alternating_points() {
        // The two alternating points differ everywhere: full window.
        let sys = OneSidedShift;
        let a = EngineeredOrbit::alternating(0).unwrap();
        let b = EngineeredOrbit::alternating(1).unwrap();
        let window =
            separation_window(&sys, &a, &b, &ratio(1, 4), 200, &Refinement::default()).unwrap();
        assert_eq!(window.members().len(), 200);
        let thick = window.classify(FamilyKind::Thick, 50).unwrap();
        assert_eq!(thick.kind, VerdictKind::ConsistentWitness);
    }

    #[test]
    fn asymptotic_distances_halve_forward() {
        let (x, y) = asymptotic_pair(AsymptoticKind::Positively).unwrap();
        for n in 1..=8i64 {
            let d = crate::sequences::metric_distance_two_sided(&x.shifted(n), &y.shifted(n));
            assert_eq!(d, ratio(2, 1 << n));
        }
        for n in 1..=8i64 {
            assert!(
                crate::sequences::metric_distance_two_sided(&x.shifted(-n), &y.shifted(-n))
                    >= ratio(5, 2)
            );
        }
        // For a threshold of 1/8, every iterate from 5 on stays within it.
        for n in 5..=12i64 {
            let d = crate::sequences::metric_distance_two_sided(&x.shifted(n), &y.shifted(n));
            assert!(d <= ratio(1, 8));
        }
        let (nx, ny) = asymptotic_pair(AsymptoticKind::Negatively).unwrap();
        for n in 1..=8i64 {
            let forward = crate::sequences::metric_distance_two_sided(&x.shifted(n), &y.shifted(n));
            let mirrored =
                crate::sequences::metric_distance_two_sided(&nx.shifted(-n), &ny.shifted(-n));
            assert_eq!(forward, mirrored);
        }
    }

    #[test]
    fn asymptotic_window_stays_left_of_the_bound() {
        let (x, y) = asymptotic_pair(AsymptoticKind::Positively).unwrap();
        let window = separation_window_z(
            &TwoSidedShift,
            &x,
            &y,
            &ratio(1, 2),
            20,
            &Refinement::default(),
        )
        .unwrap();
        let expected: Vec<i64> = (-20..=-1).chain([1]).collect();
        assert_eq!(window.members(), expected.as_slice());
    }

    #[test]
    fn syndetic_structure_is_refuted_on_every_grid_threshold() {
        let (x, y) = asymptotic_pair(AsymptoticKind::Positively).unwrap();
        let grid = vec![ratio(1, 2), ratio(1, 16), ratio(2, 1)];
        let results = syndetic_refutation_check(&x, &y, &grid, 50).unwrap();
        assert_eq!(results.len(), 3);
        assert_eq!(results[0].tail_start, 3);
        assert_eq!(results[1].tail_start, 6);
        assert_eq!(results[2].tail_start, 1);
        for result in &results {
            assert_eq!(result.verdict.kind, VerdictKind::Refuted);
            assert!(matches!(result.verdict.witness, Some(Witness::Gap { .. })));
        }
    }
}
