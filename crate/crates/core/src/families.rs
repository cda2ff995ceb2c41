//! Integer windows, horizon-relative family classification, and explicit
//! finite families with exact duals.
//!
//! A [`WindowSet`] is the computable stand-in for an infinite subset of ℕ
//! (or ℤ∖{0}): the portion of the set visible inside a finite window
//! `[lo, hi]`. Whether the underlying infinite set is thick, syndetic or
//! cofinite can rarely be *decided* from a window, so [`WindowSet::classify`]
//! returns three-valued [`FamilyVerdict`]s that carry their horizon and a
//! re-checkable witness instead of pretending to settle the infinite
//! question.
//!
//! An [`ExplicitFamily`] is an upward-hereditary collection of subsets of a
//! small finite universe `{0, …, n−1}`, stored exhaustively as bitmasks so
//! that the dual family can be computed exactly by scanning all `2^n`
//! subsets.

use crate::error::Error;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Finite truth-window of a subset of ℕ or ℤ∖{0}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSet {
    lo: i64,
    hi: i64,
    members: Vec<i64>,
    excludes_zero: bool,
}

/// Gap statistics of a window: the largest difference between consecutive
/// members plus the two boundary gaps, which bound syndeticity evidence at
/// the horizon edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    /// Maximum difference between consecutive members.
    pub max_internal: i64,
    /// Distance from the window's lower bound to the first member.
    pub leading: i64,
    /// Distance from the last member to the window's upper bound.
    pub trailing: i64,
}

impl GapReport {
    /// Largest gap when boundary gaps count as gaps.
    pub fn max_with_boundaries(&self) -> i64 {
        self.max_internal.max(self.leading).max(self.trailing)
    }
}

/// The three family kinds classified directly on windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Thick,
    Syndetic,
    Cofinite,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Thick => write!(f, "thick"),
            FamilyKind::Syndetic => write!(f, "syndetic"),
            FamilyKind::Cofinite => write!(f, "cofinite"),
        }
    }
}

/// Outcome of a horizon-relative classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    /// The window exhibits the required structure; a witness is attached.
    ConsistentWitness,
    /// The window already contradicts the property.
    Refuted,
    /// The window neither exhibits nor contradicts the property.
    Inconclusive,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::ConsistentWitness => write!(f, "consistent-witness"),
            VerdictKind::Refuted => write!(f, "refuted"),
            VerdictKind::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Structured evidence attached to a verdict; every variant can be re-checked
/// against the window (or cover search) it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A run of consecutive members starting at `start`.
    Block { start: i64, len: i64 },
    /// All gaps (boundaries included) are bounded by this value.
    GapBound { max_gap: i64 },
    /// A gap exceeding the requirement; `after` is the member (or bound)
    /// the gap starts from.
    Gap { after: i64, len: i64 },
    /// A run of consecutive non-members starting at `start`.
    ComplementBlock { start: i64, len: i64 },
    /// An index set and cover choice whose preimage intersection keeps at
    /// least two points (generator refutation).
    Intersection {
        indices: Vec<i64>,
        choices: Vec<usize>,
        points: Vec<usize>,
    },
    /// An exhaustive search completed without finding a violation.
    Exhausted { cases: u64 },
    /// A least index from which a property holds onward.
    Onset { index: i64 },
    /// An arithmetic progression `start, start+step, start+2·step, …` of
    /// counterexample indices.
    Progression { start: i64, step: i64 },
}

/// A classification outcome together with the window it refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub kind: VerdictKind,
    pub witness: Option<Witness>,
    /// Lower horizon bound the verdict refers to.
    pub lo: i64,
    /// Upper horizon bound the verdict refers to.
    pub hi: i64,
}

impl FamilyVerdict {
    pub fn is_consistent(&self) -> bool {
        self.kind == VerdictKind::ConsistentWitness
    }

    pub fn is_refuted(&self) -> bool {
        self.kind == VerdictKind::Refuted
    }
}

impl WindowSet {
    /// Builds a validated window. Members may arrive in any order and are
    /// normalized to increasing; duplicates, out-of-range members, and a zero
    /// member under `excludes_zero` are rejected.
    pub fn new(
        mut members: Vec<i64>,
        lo: i64,
        hi: i64,
        excludes_zero: bool,
    ) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::BadWindowBounds { lo, hi });
        }
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateMember(pair[0]));
            }
        }
        for &m in &members {
            if m < lo || m > hi {
                return Err(Error::MemberOutOfRange { member: m, lo, hi });
            }
            if excludes_zero && m == 0 {
                return Err(Error::ZeroExcluded);
            }
        }
        Ok(WindowSet {
            lo,
            hi,
            members,
            excludes_zero,
        })
    }

    /// Empty window over `[lo, hi]`.
    pub fn empty(lo: i64, hi: i64, excludes_zero: bool) -> Result<Self, Error> {
        Self::new(Vec::new(), lo, hi, excludes_zero)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn excludes_zero(&self) -> bool {
        self.excludes_zero
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.members.binary_search(&n).is_ok()
    }

    /// Longest run of consecutive integers contained in the window (0 if
    /// empty), together with its starting member.
    pub fn max_block(&self) -> Option<(i64, i64)> {
        let mut best: Option<(i64, i64)> = None;
        let mut run_start = 0i64;
        let mut run_len = 0i64;
        for (k, &m) in self.members.iter().enumerate() {
            if k > 0 && m == self.members[k - 1] + 1 {
                run_len += 1;
            } else {
                run_start = m;
                run_len = 1;
            }
            if best.is_none_or(|(_, l)| run_len > l) {
                best = Some((run_start, run_len));
            }
        }
        best
    }

    /// Length of the longest run of consecutive members (0 if empty).
    pub fn max_block_length(&self) -> i64 {
        self.max_block().map_or(0, |(_, len)| len)
    }

    /// Gap statistics; requires at least two members.
    pub fn gaps(&self) -> Result<GapReport, Error> {
        if self.members.len() < 2 {
            return Err(Error::TooFewMembers {
                have: self.members.len(),
                need: 2,
            });
        }
        let max_internal = self
            .members
            .windows(2)
            .map(|pair| pair[1] - pair[0])
            .max()
            .unwrap_or(0);
        Ok(GapReport {
            max_internal,
            leading: self.members[0] - self.lo,
            trailing: self.hi - self.members[self.members.len() - 1],
        })
    }

    /// Gap evidence usable by classification even for sparse windows: an
    /// empty window counts as a single gap spanning it; a singleton window
    /// has only boundary gaps.
    fn gap_evidence(&self) -> GapReport {
        match self.members.len() {
            0 => GapReport {
                max_internal: self.hi - self.lo + 1,
                leading: self.hi - self.lo + 1,
                trailing: self.hi - self.lo + 1,
            },
            1 => GapReport {
                max_internal: 0,
                leading: self.members[0] - self.lo,
                trailing: self.hi - self.members[0],
            },
            _ => self.gaps().expect("two or more members"),
        }
    }

    /// Classifies the window against one family kind, horizon-relatively.
    ///
    /// * `Thick`: `ConsistentWitness` iff some run of consecutive members has
    ///   length ≥ `requirement`; otherwise `Inconclusive` (a longer run may
    ///   always appear beyond the horizon).
    /// * `Syndetic`: `ConsistentWitness` iff every gap — boundary gaps
    ///   included — is ≤ `requirement`; otherwise `Refuted` with the
    ///   offending gap.
    /// * `Cofinite`: `Refuted` iff the in-window complement contains a run of
    ///   length ≥ `requirement`; otherwise `ConsistentWitness` carrying the
    ///   complement's longest run.
    pub fn classify(&self, kind: FamilyKind, requirement: i64) -> Result<FamilyVerdict, Error> {
        if requirement < 1 {
            return Err(Error::BadRequirement(requirement));
        }
        let verdict = match kind {
            FamilyKind::Thick => match self.max_block() {
                Some((start, len)) if len >= requirement => FamilyVerdict {
                    kind: VerdictKind::ConsistentWitness,
                    witness: Some(Witness::Block { start, len }),
                    lo: self.lo,
                    hi: self.hi,
                },
                _ => FamilyVerdict {
                    kind: VerdictKind::Inconclusive,
                    witness: None,
                    lo: self.lo,
                    hi: self.hi,
                },
            },
            FamilyKind::Syndetic => {
                let report = self.gap_evidence();
                let max_gap = report.max_with_boundaries();
                if max_gap <= requirement {
                    FamilyVerdict {
                        kind: VerdictKind::ConsistentWitness,
                        witness: Some(Witness::GapBound { max_gap }),
                        lo: self.lo,
                        hi: self.hi,
                    }
                } else {
                    let witness = self.worst_gap(report);
                    FamilyVerdict {
                        kind: VerdictKind::Refuted,
                        witness: Some(witness),
                        lo: self.lo,
                        hi: self.hi,
                    }
                }
            }
            FamilyKind::Cofinite => {
                let complement = self.complement_in_window();
                match complement.max_block() {
                    Some((start, len)) if len >= requirement => FamilyVerdict {
                        kind: VerdictKind::Refuted,
                        witness: Some(Witness::ComplementBlock { start, len }),
                        lo: self.lo,
                        hi: self.hi,
                    },
                    other => FamilyVerdict {
                        kind: VerdictKind::ConsistentWitness,
                        witness: Some(match other {
                            Some((start, len)) => Witness::ComplementBlock { start, len },
                            None => Witness::ComplementBlock {
                                start: self.lo,
                                len: 0,
                            },
                        }),
                        lo: self.lo,
                        hi: self.hi,
                    },
                }
            }
        };
        Ok(verdict)
    }

    /// Locates the largest gap for a refutation witness.
    fn worst_gap(&self, report: GapReport) -> Witness {
        let max = report.max_with_boundaries();
        if self.members.is_empty() {
            return Witness::Gap {
                after: self.lo,
                len: max,
            };
        }
        if report.leading == max {
            return Witness::Gap {
                after: self.lo,
                len: max,
            };
        }
        if report.max_internal == max {
            for pair in self.members.windows(2) {
                if pair[1] - pair[0] == max {
                    return Witness::Gap {
                        after: pair[0],
                        len: max,
                    };
                }
            }
        }
        Witness::Gap {
            after: self.members[self.members.len() - 1],
            len: max,
        }
    }

    fn check_compatible(&self, other: &WindowSet) -> Result<(), Error> {
        if self.excludes_zero != other.excludes_zero {
            return Err(Error::IncompatibleWindows(String::from(
                "one window excludes 0, the other does not",
            )));
        }
        Ok(())
    }

    /// Exact union; the result window is the hull of both bounds.
    pub fn union(&self, other: &WindowSet) -> Result<WindowSet, Error> {
        self.check_compatible(other)?;
        let mut members = self.members.clone();
        for &m in &other.members {
            if !self.contains(m) {
                members.push(m);
            }
        }
        WindowSet::new(
            members,
            self.lo.min(other.lo),
            self.hi.max(other.hi),
            self.excludes_zero,
        )
    }

    /// Exact intersection; the result window is the overlap of both bounds.
    pub fn intersect(&self, other: &WindowSet) -> Result<WindowSet, Error> {
        self.check_compatible(other)?;
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo > hi {
            return Err(Error::IncompatibleWindows(String::from(
                "window bounds do not overlap",
            )));
        }
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        WindowSet::new(members, lo, hi, self.excludes_zero)
    }

    /// Non-members within the window bounds (respecting zero exclusion).
    pub fn complement_in_window(&self) -> WindowSet {
        let members: Vec<i64> = (self.lo..=self.hi)
            .filter(|&n| !(self.excludes_zero && n == 0))
            .filter(|&n| !self.contains(n))
            .collect();
        WindowSet {
            lo: self.lo,
            hi: self.hi,
            members,
            excludes_zero: self.excludes_zero,
        }
    }

    /// Shifts every member by `k`, clipping to the original bounds. Members
    /// landing on 0 are dropped when the universe excludes 0.
    pub fn translate(&self, k: i64) -> WindowSet {
        let members: Vec<i64> = self
            .members
            .iter()
            .map(|&m| m + k)
            .filter(|&m| m >= self.lo && m <= self.hi)
            .filter(|&m| !(self.excludes_zero && m == 0))
            .collect();
        WindowSet {
            lo: self.lo,
            hi: self.hi,
            members,
            excludes_zero: self.excludes_zero,
        }
    }

    /// Builds `⋃_{q=0}^{m−1} (m·A − q)` clipped to the original bounds: the
    /// index set whose membership at `n` means `⌈n/m⌉ ∈ A`.
    pub fn dilate_preimage(&self, m: i64) -> Result<WindowSet, Error> {
        if m < 1 {
            return Err(Error::BadExponent(m));
        }
        let mut members = Vec::new();
        for &a in &self.members {
            for q in 0..m {
                let v = m * a - q;
                if v >= self.lo && v <= self.hi && !(self.excludes_zero && v == 0) {
                    members.push(v);
                }
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(WindowSet {
            lo: self.lo,
            hi: self.hi,
            members,
            excludes_zero: self.excludes_zero,
        })
    }

    /// Restriction to a sub-range of the window.
    pub fn restrict(&self, lo: i64, hi: i64) -> Result<WindowSet, Error> {
        if lo > hi || lo < self.lo || hi > self.hi {
            return Err(Error::BadWindowBounds { lo, hi });
        }
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| m >= lo && m <= hi)
            .collect();
        Ok(WindowSet {
            lo,
            hi,
            members,
            excludes_zero: self.excludes_zero,
        })
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &WindowSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }
}

/// Upward-hereditary family of subsets of `{0, …, n−1}` stored as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitFamily {
    universe_size: usize,
    /// Sorted list of member subsets.
    subsets: Vec<u32>,
}

/// Exhaustive scans over `2^n` subsets stay desk-scale up to this universe.
pub const MAX_UNIVERSE: usize = 20;

impl ExplicitFamily {
    /// Smallest upward-hereditary family containing every generator subset.
    pub fn upward_close(generators: &[u32], universe_size: usize) -> Result<Self, Error> {
        if universe_size > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: universe_size,
                max: MAX_UNIVERSE,
            });
        }
        let top: u32 = if universe_size == 32 {
            u32::MAX
        } else {
            (1u32 << universe_size) - 1
        };
        for &g in generators {
            if g & !top != 0 {
                return Err(Error::SubsetOutOfUniverse {
                    mask: g,
                    universe: universe_size,
                });
            }
        }
        // Mark every superset of every generator by scanning all subsets once.
        let mut included = alloc::vec![false; 1usize << universe_size];
        for (mask, slot) in included.iter_mut().enumerate() {
            let bits = mask as u32;
            if generators.iter().any(|&g| g & !bits == 0) {
                *slot = true;
            }
        }
        let subsets = included
            .iter()
            .enumerate()
            .filter(|(_, &inc)| inc)
            .map(|(mask, _)| mask as u32)
            .collect();
        Ok(ExplicitFamily {
            universe_size,
            subsets,
        })
    }

    /// Builds from an explicit subset list, validating upward heredity.
    pub fn from_subsets(subsets: Vec<u32>, universe_size: usize) -> Result<Self, Error> {
        if universe_size > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: universe_size,
                max: MAX_UNIVERSE,
            });
        }
        let mut sorted = subsets;
        sorted.sort_unstable();
        sorted.dedup();
        let family = ExplicitFamily {
            universe_size,
            subsets: sorted,
        };
        for &b in &family.subsets {
            if usize::try_from(b).unwrap_or(usize::MAX) >= (1usize << universe_size) {
                return Err(Error::SubsetOutOfUniverse {
                    mask: b,
                    universe: universe_size,
                });
            }
            // One-bit extensions suffice: heredity for them implies heredity
            // for all supersets by induction on popcount.
            for bit in 0..universe_size {
                let sup = b | (1u32 << bit);
                if sup != b && !family.contains(sup) {
                    return Err(Error::NotUpwardHereditary {
                        member: b,
                        superset: sup,
                    });
                }
            }
        }
        Ok(family)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn subsets(&self) -> &[u32] {
        &self.subsets
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn contains(&self, subset: u32) -> bool {
        self.subsets.binary_search(&subset).is_ok()
    }

    /// Member subsets with no proper member subset — the generators of the
    /// family under upward closure.
    pub fn minimal_elements(&self) -> Vec<u32> {
        self.subsets
            .iter()
            .copied()
            .filter(|&b| !self.subsets.iter().any(|&c| c != b && c & b == c))
            .collect()
    }

    /// Exact dual: `{A : A ∩ B ≠ ∅ for every B in the family}`, computed via
    /// the complement law `A ∈ F* ⟺ (universe ∖ A) ∉ F` over all `2^n`
    /// subsets.
    pub fn dual(&self) -> ExplicitFamily {
        let n = self.universe_size;
        let top: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut membership = alloc::vec![false; 1usize << n];
        for &b in &self.subsets {
            membership[b as usize] = true;
        }
        let subsets = (0..(1usize << n))
            .map(|mask| mask as u32)
            .filter(|&a| !membership[(top & !a) as usize])
            .collect();
        ExplicitFamily {
            universe_size: n,
            subsets,
        }
    }

    /// Definition-based dual membership: does `a` intersect every member?
    /// Quadratic; used as an independent cross-check of [`Self::dual`].
    pub fn meets_all_members(&self, a: u32) -> bool {
        self.subsets.iter().all(|&b| a & b != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(members: &[i64], lo: i64, hi: i64) -> WindowSet {
        WindowSet::new(members.to_vec(), lo, hi, false).unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        let ws = WindowSet::new(vec![6, 1, 5, 2], 1, 8, false).unwrap();
        assert_eq!(ws.members(), &[1, 2, 5, 6]);
        assert!(WindowSet::new(vec![], 1, 10, false).unwrap().is_empty());
        assert_eq!(
            WindowSet::new(vec![3, 3], 1, 5, false),
            Err(Error::DuplicateMember(3))
        );
        assert_eq!(
            WindowSet::new(vec![9], 1, 5, false),
            Err(Error::MemberOutOfRange {
                member: 9,
                lo: 1,
                hi: 5
            })
        );
        assert_eq!(
            WindowSet::new(vec![0], -3, 3, true),
            Err(Error::ZeroExcluded)
        );
        assert_eq!(
            WindowSet::new(vec![], 4, 2, false),
            Err(Error::BadWindowBounds { lo: 4, hi: 2 })
        );
    }

    #[test]
    fn max_block_length_counts_runs() {
        assert_eq!(w(&[1, 2, 5, 6, 7, 8], 1, 8).max_block_length(), 4);
        assert_eq!(w(&[], 1, 10).max_block_length(), 0);
        assert_eq!(w(&[1, 3, 5, 7], 1, 7).max_block_length(), 1);
        assert_eq!(w(&[1, 2, 5, 6, 7, 8], 1, 8).max_block(), Some((5, 4)));
    }

    #[test]
    fn gap_report_includes_boundaries() {
        let report = w(&[1, 3, 5, 7], 1, 7).gaps().unwrap();
        assert_eq!(report.max_internal, 2);
        assert_eq!(report.leading, 0);
        assert_eq!(report.trailing, 0);

        let report = w(&[1, 2], 1, 100).gaps().unwrap();
        assert_eq!(report.max_internal, 1);
        assert_eq!(report.trailing, 98);

        assert_eq!(
            w(&[5], 1, 10).gaps(),
            Err(Error::TooFewMembers { have: 1, need: 2 })
        );
    }

    #[test]
    fn thick_classification_witnesses_or_abstains() {
        let ws = w(&[1, 2, 5, 6, 7, 8], 1, 10);
        let verdict = ws.classify(FamilyKind::Thick, 4).unwrap();
        assert_eq!(verdict.kind, VerdictKind::ConsistentWitness);
        assert_eq!(verdict.witness, Some(Witness::Block { start: 5, len: 4 }));
        let verdict = ws.classify(FamilyKind::Thick, 5).unwrap();
        assert_eq!(verdict.kind, VerdictKind::Inconclusive);
        assert_eq!(
            ws.classify(FamilyKind::Thick, 0),
            Err(Error::BadRequirement(0))
        );
    }

    #[test]
    fn syndetic_classification_counts_boundary_gaps() {
        let evens: Vec<i64> = (1..=50).map(|k| 2 * k).collect();
        let ws = WindowSet::new(evens, 1, 100, false).unwrap();
        let verdict = ws.classify(FamilyKind::Syndetic, 2).unwrap();
        assert_eq!(verdict.kind, VerdictKind::ConsistentWitness);

        let ws = w(&[1, 2], 1, 100);
        let verdict = ws.classify(FamilyKind::Syndetic, 50).unwrap();
        assert_eq!(verdict.kind, VerdictKind::Refuted);
        assert_eq!(verdict.witness, Some(Witness::Gap { after: 2, len: 98 }));

        let empty = WindowSet::empty(1, 10, false).unwrap();
        let verdict = empty.classify(FamilyKind::Syndetic, 5).unwrap();
        assert_eq!(verdict.kind, VerdictKind::Refuted);
    }

    #[test]
    fn cofinite_classification_scans_complement() {
        let ws = w(&[1, 2, 3, 4, 6, 7, 8, 9, 10], 1, 10);
        let verdict = ws.classify(FamilyKind::Cofinite, 2).unwrap();
        assert_eq!(verdict.kind, VerdictKind::ConsistentWitness);
        let verdict = ws.classify(FamilyKind::Cofinite, 1).unwrap();
        assert_eq!(verdict.kind, VerdictKind::Refuted);
        assert_eq!(
            verdict.witness,
            Some(Witness::ComplementBlock { start: 5, len: 1 })
        );
    }

    #[test]
    fn set_algebra_matches_hand_results() {
        let a = w(&[1, 2, 3], 1, 10);
        assert_eq!(a.translate(2).members(), &[3, 4, 5]);
        assert_eq!(a.translate(9).members(), &[10]);

        let b = w(&[2, 3], 1, 10);
        assert_eq!(b.dilate_preimage(2).unwrap().members(), &[3, 4, 5, 6]);

        let c = w(&[1, 2], 1, 4);
        assert_eq!(c.complement_in_window().members(), &[3, 4]);

        let u = a.union(&b).unwrap();
        assert_eq!(u.members(), &[1, 2, 3]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.members(), &[2, 3]);

        let z = WindowSet::new(vec![-2, 1], -5, 5, true).unwrap();
        assert!(a.union(&z).is_err());
        // Translating onto 0 drops the member in a zero-excluding universe.
        assert_eq!(z.translate(-1).members(), &[-3]);
    }

    #[test]
    fn translation_preserves_block_length_inside_bounds() {
        let ws = w(&[4, 5, 6, 9], 1, 20);
        for k in 0..=5 {
            assert_eq!(ws.translate(k).max_block_length(), 3);
        }
    }

    #[test]
    fn upward_closure_small_cases() {
        let f = ExplicitFamily::upward_close(&[0b01], 2).unwrap();
        assert_eq!(f.subsets(), &[0b01, 0b11]);
        let empty = ExplicitFamily::upward_close(&[], 3).unwrap();
        assert!(empty.is_empty());
        let top_only = ExplicitFamily::upward_close(&[0b111], 3).unwrap();
        assert_eq!(top_only.subsets(), &[0b111]);
        assert!(ExplicitFamily::upward_close(&[], 21).is_err());
        assert!(ExplicitFamily::upward_close(&[0b100], 2).is_err());
    }

    #[test]
    fn from_subsets_rejects_non_hereditary() {
        let err = ExplicitFamily::from_subsets(vec![0b01], 2);
        assert_eq!(
            err,
            Err(Error::NotUpwardHereditary {
                member: 0b01,
                superset: 0b11
            })
        );
        assert!(ExplicitFamily::from_subsets(vec![0b01, 0b11], 2).is_ok());
    }

    #[test]
    fn dual_small_cases() {
        // All subsets of {0,1} containing 0: dual is the same family.
        let f = ExplicitFamily::upward_close(&[0b01], 2).unwrap();
        assert_eq!(f.dual(), f);

        // {whole universe} over n=3: dual is all nonempty subsets.
        let f = ExplicitFamily::upward_close(&[0b111], 3).unwrap();
        let dual = f.dual();
        assert_eq!(dual.subsets().len(), 7);
        assert!(!dual.contains(0));
    }

    #[test]
    fn dual_satisfies_complement_law_and_involution() {
        let f = ExplicitFamily::upward_close(&[0b0011, 0b1100], 4).unwrap();
        let dual = f.dual();
        let top = 0b1111u32;
        for a in 0..=top {
            assert_eq!(dual.contains(a), !f.contains(top & !a));
            assert_eq!(dual.contains(a), f.meets_all_members(a));
        }
        assert_eq!(dual.dual(), f);
    }

    #[test]
    fn dual_of_empty_family_is_everything() {
        let f = ExplicitFamily::upward_close(&[], 2).unwrap();
        let dual = f.dual();
        assert_eq!(dual.subsets().len(), 4);
        assert_eq!(dual.dual(), f);
    }

    #[test]
    fn minimal_elements_generate() {
        let f = ExplicitFamily::upward_close(&[0b011, 0b100], 3).unwrap();
        let minimal = f.minimal_elements();
        assert_eq!(minimal, vec![0b011, 0b100]);
        let regenerated = ExplicitFamily::upward_close(&minimal, 3).unwrap();
        assert_eq!(regenerated, f);
    }
}
