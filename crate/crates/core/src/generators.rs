//! Finite open covers, exhaustive generator checks, family-indexed
//! generator checks, the exact Lebesgue number of a cover, and the
//! equivalence suite tying separation behavior to generator behavior on
//! finite systems.
//!
//! On a finite metric table every subset is closed, so a cover set equals
//! its closure and the strict and weak generator conditions coincide; the
//! checks compute one exhaustive answer and expose the flag only so the
//! coincidence itself can be asserted. Intersections follow the generator
//! convention of starting at index 0, unlike separation windows, which
//! start at 1.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::combinators::CheckReport;
use crate::error::Error;
use crate::families::{ExplicitFamily, FamilyVerdict, VerdictKind, Witness};
use crate::finite::{
    positive_expansivity_search, threshold_grid, ExpansivityOutcome, FiniteMetricSystem,
};
use crate::ratio;
use crate::sequences::{separation_window, Refinement};
use crate::Rational;

/// Largest point count a cover can describe (point sets are `u64` masks).
pub const MAX_COVER_POINTS: usize = 64;

/// Largest point count the exhaustive Lebesgue-number scan accepts.
pub const MAX_LEBESGUE_POINTS: usize = 20;

/// A finite cover of a finite system's point set, stored as bitmasks.
/// On finite metric tables each set is its own closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    sets: Vec<u64>,
    point_count: usize,
}

impl Cover {
    /// Builds a cover from point-index lists; the union must be the whole
    /// point set.
    pub fn from_sets(sets: &[Vec<usize>], point_count: usize) -> Result<Self, Error> {
        let mut masks = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask = 0u64;
            for &p in set {
                if p >= point_count {
                    return Err(Error::UnknownPoint(format!("point index {p}")));
                }
                mask |= 1 << p;
            }
            masks.push(mask);
        }
        Cover::from_masks(masks, point_count)
    }

    pub fn from_masks(sets: Vec<u64>, point_count: usize) -> Result<Self, Error> {
        if point_count == 0 {
            return Err(Error::SizeTooSmall { got: 0, min: 1 });
        }
        if point_count > MAX_COVER_POINTS {
            return Err(Error::UniverseTooLarge {
                size: point_count,
                max: MAX_COVER_POINTS,
            });
        }
        let full = mask_of_all(point_count);
        let mut union = 0u64;
        for &s in &sets {
            if s & !full != 0 {
                return Err(Error::MapOutOfRange {
                    image: (s & !full).trailing_zeros() as usize,
                    size: point_count,
                });
            }
            union |= s;
        }
        if union != full {
            return Err(Error::NotACover {
                uncovered_point: (!union & full).trailing_zeros() as usize,
            });
        }
        Ok(Cover { sets, point_count })
    }

    /// One singleton set per point.
    pub fn singletons(point_count: usize) -> Result<Self, Error> {
        Cover::from_masks((0..point_count).map(|p| 1u64 << p).collect(), point_count)
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    /// The sets as sorted point-index lists (for serialization).
    pub fn sets_as_indices(&self) -> Vec<Vec<usize>> {
        self.sets
            .iter()
            .map(|&mask| {
                (0..self.point_count)
                    .filter(|&p| mask & (1 << p) != 0)
                    .collect()
            })
            .collect()
    }

    /// True iff every set of `self` is contained in some set of `coarser`.
    pub fn refines(&self, coarser: &Cover) -> bool {
        self.point_count == coarser.point_count
            && self
                .sets
                .iter()
                .all(|&s| coarser.sets.iter().any(|&c| s & !c == 0))
    }
}

fn mask_of_all(point_count: usize) -> u64 {
    if point_count == 64 {
        u64::MAX
    } else {
        (1u64 << point_count) - 1
    }
}

/// Cover by open balls `{y : d(x, y) < r}` centered at every point.
pub fn ball_cover(sys: &FiniteMetricSystem, r: &Rational) -> Result<Cover, Error> {
    if *r <= Rational::zero() {
        return Err(Error::NonPositiveThreshold);
    }
    let n = sys.size();
    if n > MAX_COVER_POINTS {
        return Err(Error::UniverseTooLarge {
            size: n,
            max: MAX_COVER_POINTS,
        });
    }
    let sets = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| sys.dist(x, y) < r)
                .fold(0u64, |mask, y| mask | (1 << y))
        })
        .collect();
    Cover::from_masks(sets, n)
}

/// Searches all cover-set choices over the given intersection indices for
/// one whose preimage intersection keeps at least two points. Memoizes on
/// (depth, surviving mask); intersections only shrink, so branches are
/// abandoned once at most one point survives.
fn intersection_refutation(
    sys: &FiniteMetricSystem,
    cover: &Cover,
    indices: &[i64],
) -> Result<Option<(Vec<usize>, u64)>, Error> {
    let n = sys.size();
    let full = mask_of_all(n);
    if indices.is_empty() {
        return Ok(if full.count_ones() >= 2 {
            Some((Vec::new(), full))
        } else {
            None
        });
    }
    // Preimage of each cover set under f^index, per intersection slot.
    let mut iterated: Vec<usize> = (0..n).collect();
    let mut reached = 0i64;
    let mut preimages: Vec<Vec<u64>> = Vec::with_capacity(indices.len());
    for &index in indices {
        debug_assert!(index >= reached);
        while reached < index {
            for entry in iterated.iter_mut() {
                *entry = sys.map_index(*entry);
            }
            reached += 1;
        }
        preimages.push(
            cover
                .sets()
                .iter()
                .map(|&s| {
                    (0..n)
                        .filter(|&p| s & (1 << iterated[p]) != 0)
                        .fold(0u64, |mask, p| mask | (1 << p))
                })
                .collect(),
        );
    }
    let mut visited: BTreeSet<(usize, u64)> = BTreeSet::new();
    let mut choices: Vec<usize> = Vec::new();
    fn dfs(
        depth: usize,
        mask: u64,
        preimages: &[Vec<u64>],
        visited: &mut BTreeSet<(usize, u64)>,
        choices: &mut Vec<usize>,
    ) -> Option<u64> {
        if mask.count_ones() <= 1 {
            return None;
        }
        if depth == preimages.len() {
            return Some(mask);
        }
        if !visited.insert((depth, mask)) {
            return None;
        }
        for (set_idx, &pre) in preimages[depth].iter().enumerate() {
            choices.push(set_idx);
            if let Some(found) = dfs(depth + 1, mask & pre, preimages, visited, choices) {
                return Some(found);
            }
            choices.pop();
        }
        None
    }
    Ok(dfs(0, full, &preimages, &mut visited, &mut choices).map(|mask| (choices, mask)))
}

fn refutation_verdict(
    indices: &[i64],
    refutation: Option<(Vec<usize>, u64)>,
    lo: i64,
    hi: i64,
    cases: u64,
) -> FamilyVerdict {
    match refutation {
        Some((choices, mask)) => FamilyVerdict {
            kind: VerdictKind::Refuted,
            witness: Some(Witness::Intersection {
                indices: indices.to_vec(),
                choices,
                points: (0..64usize).filter(|&p| mask & (1 << p) != 0).collect(),
            }),
            lo,
            hi,
        },
        None => FamilyVerdict {
            kind: VerdictKind::ConsistentWitness,
            witness: Some(Witness::Exhausted { cases }),
            lo,
            hi,
        },
    }
}

/// Exhaustively checks the generator condition over all cover-set
/// sequences indexed by `0..=horizon`: consistent iff every preimage
/// intersection keeps at most one point. On a finite system a horizon of
/// at least `size²` makes the verdict exact rather than horizon-relative.
/// The `weak` flag selects the closure variant, which coincides with the
/// strict one on finite tables (every set is closed); it alters nothing.
pub fn generator_verdict(
    sys: &FiniteMetricSystem,
    cover: &Cover,
    horizon: i64,
    weak: bool,
) -> Result<FamilyVerdict, Error> {
    let _ = weak;
    if horizon < 1 {
        return Err(Error::BadRequirement(horizon));
    }
    if cover.point_count() != sys.size() {
        return Err(Error::DimensionMismatch {
            left: cover.point_count(),
            right: sys.size(),
        });
    }
    let indices: Vec<i64> = (0..=horizon).collect();
    let refutation = intersection_refutation(sys, cover, &indices)?;
    let cases = (cover.sets().len() as u64).saturating_pow((horizon + 1) as u32);
    Ok(refutation_verdict(&indices, refutation, 0, horizon, cases))
}

/// Checks the family-indexed generator condition: for every member `S` of
/// the family (upward heredity reduces this to the minimal members) and
/// every cover-set choice over `S`, the preimage intersection keeps at
/// most one point. The family universe must be `{0, …, horizon}`.
pub fn f_star_generator_verdict(
    sys: &FiniteMetricSystem,
    cover: &Cover,
    family: &ExplicitFamily,
    horizon: i64,
) -> Result<FamilyVerdict, Error> {
    if horizon < 1 {
        return Err(Error::BadRequirement(horizon));
    }
    if family.universe_size() != (horizon + 1) as usize {
        return Err(Error::DimensionMismatch {
            left: family.universe_size(),
            right: (horizon + 1) as usize,
        });
    }
    if cover.point_count() != sys.size() {
        return Err(Error::DimensionMismatch {
            left: cover.point_count(),
            right: sys.size(),
        });
    }
    let mut minimal = family.minimal_elements();
    minimal.sort_unstable();
    let mut cases = 0u64;
    for s in minimal {
        let indices: Vec<i64> = (0..family.universe_size() as i64)
            .filter(|&n| s & (1 << n) != 0)
            .collect();
        cases =
            cases.saturating_add((cover.sets().len() as u64).saturating_pow(indices.len() as u32));
        if let Some(refutation) = intersection_refutation(sys, cover, &indices)? {
            return Ok(refutation_verdict(
                &indices,
                Some(refutation),
                0,
                horizon,
                cases,
            ));
        }
    }
    Ok(FamilyVerdict {
        kind: VerdictKind::ConsistentWitness,
        witness: Some(Witness::Exhausted { cases }),
        lo: 0,
        hi: horizon,
    })
}

/// Exact Lebesgue number of a cover: the smallest diameter of a point set
/// contained in no cover set, scanned over all subsets. Every set of
/// strictly smaller diameter fits inside some cover set. When everything
/// fits (some cover set is the whole space), returns diameter + 1.
pub fn lebesgue_number(sys: &FiniteMetricSystem, cover: &Cover) -> Result<Rational, Error> {
    let n = sys.size();
    if n > MAX_LEBESGUE_POINTS {
        return Err(Error::UniverseTooLarge {
            size: n,
            max: MAX_LEBESGUE_POINTS,
        });
    }
    if cover.point_count() != n {
        return Err(Error::DimensionMismatch {
            left: cover.point_count(),
            right: n,
        });
    }
    let mut best: Option<Rational> = None;
    for mask in 1u64..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        if cover.sets().iter().any(|&s| mask & !s == 0) {
            continue;
        }
        let mut diam = Rational::zero();
        for a in 0..n {
            if mask & (1 << a) == 0 {
                continue;
            }
            for b in a + 1..n {
                if mask & (1 << b) == 0 {
                    continue;
                }
                let d = sys.dist(a, b);
                if *d > diam {
                    diam = d.clone();
                }
            }
        }
        if best.as_ref().is_none_or(|cur| diam < *cur) {
            best = Some(diam);
        }
    }
    Ok(best.unwrap_or_else(|| sys.diameter() + ratio(1, 1)))
}

/// Report of the expansivity ↔ generator equivalence suite.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub expansivity: ExpansivityOutcome,
    pub implications: Vec<CheckReport>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.implications.iter().all(|r| r.holds())
    }
}

/// Ties separation behavior to generator behavior on one finite system.
///
/// When the expansivity search finds a threshold δ: builds the family
/// generated by all separation windows over `{0, …, H}`, checks that the
/// half-δ ball cover passes the generator check indexed by the dual
/// family, checks duality is an involution, extracts the cover's Lebesgue
/// number λ, and re-derives separation at the largest grid threshold
/// below λ: every window must meet every member of the dual family
/// (membership in the double dual). Also asserts the strict and weak
/// generator verdicts coincide on the cover.
///
/// When the search refutes expansivity: the witnessing pair's orbits
/// merge, so the singleton ball cover must fail the generator check
/// indexed by the family generated by `{1, …, H}` — the contrapositive.
pub fn equivalence_suite(
    sys: &FiniteMetricSystem,
    horizon: i64,
) -> Result<EquivalenceReport, Error> {
    if horizon < 1 {
        return Err(Error::BadRequirement(horizon));
    }
    let n = sys.size();
    let sweep = ((n * n) as u64).max(horizon as u64);
    let expansivity = positive_expansivity_search(sys, sweep)?;
    let family_horizon = horizon.min(19);
    let universe = (family_horizon + 1) as usize;
    let refinement = Refinement::default();
    let mut implications = Vec::new();
    match &expansivity {
        ExpansivityOutcome::Expansive { delta } => {
            let mut forward = CheckReport::new(String::from(
                "separation threshold yields a dual-family generator",
            ));
            forward.constant("delta", delta.clone());
            let radius = delta / ratio(2, 1);
            let cover = ball_cover(sys, &radius)?;
            let mut window_masks: Vec<u32> = Vec::new();
            for x in 0..n {
                for y in x + 1..n {
                    let window =
                        separation_window(sys, &x, &y, delta, family_horizon, &refinement)?;
                    let mask = window
                        .members()
                        .iter()
                        .fold(0u32, |acc, &m| acc | (1 << m as u32));
                    window_masks.push(mask);
                }
            }
            let family = ExplicitFamily::upward_close(&window_masks, universe)?;
            let dual = family.dual();
            let verdict = f_star_generator_verdict(sys, &cover, &dual, family_horizon)?;
            forward.checked += 1;
            if verdict.kind != VerdictKind::ConsistentWitness {
                forward.failures.push(String::from(
                    "half-ball cover fails the dual-family generator check",
                ));
            }
            forward.checked += 1;
            if dual.dual() != family {
                forward
                    .failures
                    .push(String::from("duality fails to be an involution"));
            }
            implications.push(forward);

            let mut backward = CheckReport::new(String::from(
                "generator cover re-derives a separation threshold",
            ));
            let lambda = lebesgue_number(sys, &cover)?;
            backward.constant("lambda", lambda.clone());
            let delta_check = threshold_grid(sys).into_iter().find(|v| *v < lambda);
            match delta_check {
                Some(delta_check) => {
                    backward.constant("delta_check", delta_check.clone());
                    for x in 0..n {
                        for y in x + 1..n {
                            let window = separation_window(
                                sys,
                                &x,
                                &y,
                                &delta_check,
                                family_horizon,
                                &refinement,
                            )?;
                            let mask = window
                                .members()
                                .iter()
                                .fold(0u32, |acc, &m| acc | (1 << m as u32));
                            backward.checked += 1;
                            if !dual.meets_all_members(mask) {
                                backward.failures.push(format!(
                                    "window of pair ({x},{y}) escapes the double dual"
                                ));
                            }
                        }
                    }
                }
                None => {
                    backward.failures.push(String::from(
                        "no grid threshold lies below the Lebesgue number",
                    ));
                }
            }
            implications.push(backward);

            let mut coincide =
                CheckReport::new(String::from("strict and weak generator verdicts coincide"));
            let strict = generator_verdict(sys, &cover, family_horizon, false)?;
            let weak = generator_verdict(sys, &cover, family_horizon, true)?;
            coincide.checked += 1;
            if strict.kind != weak.kind {
                coincide
                    .failures
                    .push(String::from("closure variant changes the verdict"));
            }
            implications.push(coincide);
        }
        ExpansivityOutcome::Refuted { pair } => {
            let mut contrapositive = CheckReport::new(format!(
                "merged pair ({},{}) defeats every fine ball cover",
                pair.0, pair.1
            ));
            let mut min_positive: Option<Rational> = None;
            for x in 0..n {
                for y in x + 1..n {
                    let d = sys.dist(x, y);
                    if min_positive.as_ref().is_none_or(|cur| d < cur) {
                        min_positive = Some(d.clone());
                    }
                }
            }
            let radius = match min_positive {
                Some(d) => d / ratio(2, 1),
                None => ratio(1, 2),
            };
            contrapositive.constant("radius", radius.clone());
            let cover = ball_cover(sys, &radius)?;
            let tail_mask = (1u32 << universe) - 2;
            let family = ExplicitFamily::upward_close(&[tail_mask], universe)?;
            let verdict = f_star_generator_verdict(sys, &cover, &family, family_horizon)?;
            contrapositive.checked += 1;
            if verdict.kind != VerdictKind::Refuted {
                contrapositive.failures.push(String::from(
                    "tail-indexed generator check unexpectedly passes",
                ));
            }
            implications.push(contrapositive);
        }
    }
    Ok(EquivalenceReport {
        expansivity,
        implications,
    })
}
