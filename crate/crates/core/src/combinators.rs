//! Derived systems — max-metric products, iterated-map powers, metric
//! conjugates, and the two-sided orbit system of an invertible base — each
//! paired with the window-inclusion checks its structural statement calls
//! for. Uniform-continuity constants (ε, η, β) are extracted as exact
//! minima over the finite system and recorded in the reports rather than
//! assumed to exist.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::families::WindowSet;
use crate::finite::{ExpansivityOutcome, FiniteMetricSystem, PairOrbit};
use crate::ratio;
use crate::sequences::{separation_window, separation_window_z, DistanceBound, Refinement, System};
use crate::Rational;

/// Outcome of one structural check: the computed constants, how many
/// claims were examined, and a description of every violation found.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub label: String,
    /// Named constants the check computed (ε, η, β, …).
    pub constants: Vec<(String, Rational)>,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub(crate) fn new(label: String) -> Self {
        CheckReport {
            label,
            constants: Vec::new(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub(crate) fn constant(&mut self, name: &str, value: Rational) {
        self.constants.push((String::from(name), value));
    }

    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Max-metric product of two finite systems, iterating componentwise,
/// with index helpers for projecting points back to their factors.
#[derive(Clone, Debug)]
pub struct ProductSystem {
    system: FiniteMetricSystem,
    left_size: usize,
    right_size: usize,
}

impl ProductSystem {
    pub fn new(left: &FiniteMetricSystem, right: &FiniteMetricSystem) -> Result<Self, Error> {
        let ln = left.size();
        let rn = right.size();
        let mut labels = Vec::with_capacity(ln * rn);
        let mut map = Vec::with_capacity(ln * rn);
        for i in 0..ln {
            for j in 0..rn {
                labels.push(format!("({},{})", left.label(i), right.label(j)));
                map.push(left.map_index(i) * rn + right.map_index(j));
            }
        }
        let mut dist = alloc::vec![alloc::vec![Rational::zero(); ln * rn]; ln * rn];
        for i in 0..ln {
            for j in 0..rn {
                for k in 0..ln {
                    for l in 0..rn {
                        let a = left.dist(i, k);
                        let b = right.dist(j, l);
                        dist[i * rn + j][k * rn + l] = if a >= b { a.clone() } else { b.clone() };
                    }
                }
            }
        }
        Ok(ProductSystem {
            system: FiniteMetricSystem::new(labels, dist, map)?,
            left_size: ln,
            right_size: rn,
        })
    }

    pub fn system(&self) -> &FiniteMetricSystem {
        &self.system
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left_size && j < self.right_size);
        i * self.right_size + j
    }

    pub fn components(&self, index: usize) -> (usize, usize) {
        (index / self.right_size, index % self.right_size)
    }
}

/// Max-metric product of two finite systems.
pub fn product(
    left: &FiniteMetricSystem,
    right: &FiniteMetricSystem,
) -> Result<ProductSystem, Error> {
    ProductSystem::new(left, right)
}

/// Window checks for the product: a factor where the pair differs embeds
/// its window into the product window at β, a pair equal in one
/// coordinate has exactly the other factor's window, and a pair differing
/// in both covers the union of factor windows at β.
pub fn product_window_checks(
    left: &FiniteMetricSystem,
    right: &FiniteMetricSystem,
    delta: &Rational,
    horizon: i64,
) -> Result<CheckReport, Error> {
    if *delta <= Rational::zero() {
        return Err(Error::NonPositiveThreshold);
    }
    let prod = ProductSystem::new(left, right)?;
    let mut report = CheckReport::new(format!("product window checks at delta {delta}"));
    // The right factor's own expansivity constant, when it has one, caps β.
    let sweep = (right.size() * right.size()).max(4) as u64;
    let eta = match crate::finite::positive_expansivity_search(right, sweep)? {
        ExpansivityOutcome::Expansive { delta: value } => value,
        ExpansivityOutcome::Refuted { .. } => delta.clone(),
    };
    let beta = if eta < *delta { &eta } else { delta } / ratio(2, 1);
    report.constant("eta", eta.clone());
    report.constant("beta", beta.clone());
    let refinement = Refinement::default();
    let sys = prod.system();
    for x1 in 0..left.size() {
        for y1 in 0..left.size() {
            for x2 in 0..right.size() {
                for y2 in 0..right.size() {
                    if x1 == y1 && x2 == y2 {
                        continue;
                    }
                    let px = prod.index(x1, x2);
                    let py = prod.index(y1, y2);
                    let wp_beta = separation_window(sys, &px, &py, &beta, horizon, &refinement)?;
                    if x1 != y1 {
                        let wl = separation_window(left, &x1, &y1, delta, horizon, &refinement)?;
                        report.checked += 1;
                        if !wl.is_subset_of(&wp_beta) {
                            report
                                .failures
                                .push(format!("left window not embedded for pair ({px},{py})"));
                        }
                    }
                    if x1 != y1 && x2 != y2 {
                        let wl = separation_window(left, &x1, &y1, &beta, horizon, &refinement)?;
                        let wr = separation_window(right, &x2, &y2, &beta, horizon, &refinement)?;
                        report.checked += 1;
                        if !wl.union(&wr)?.is_subset_of(&wp_beta) {
                            report
                                .failures
                                .push(format!("factor union not covered for pair ({px},{py})"));
                        }
                    }
                    if x2 == y2 {
                        let wl = separation_window(left, &x1, &y1, delta, horizon, &refinement)?;
                        let wp = separation_window(sys, &px, &py, delta, horizon, &refinement)?;
                        report.checked += 1;
                        if wl.members() != wp.members() {
                            report
                                .failures
                                .push(format!("projection mismatch for pair ({px},{py})"));
                        }
                    }
                    if x1 == y1 {
                        let wr = separation_window(right, &x2, &y2, delta, horizon, &refinement)?;
                        let wp = separation_window(sys, &px, &py, delta, horizon, &refinement)?;
                        report.checked += 1;
                        if wr.members() != wp.members() {
                            report
                                .failures
                                .push(format!("projection mismatch for pair ({px},{py})"));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The same points and metric with the map iterated `m` times.
pub fn power(sys: &FiniteMetricSystem, m: i64) -> Result<FiniteMetricSystem, Error> {
    if m < 1 {
        return Err(Error::BadExponent(m));
    }
    let n = sys.size();
    let mut map = Vec::with_capacity(n);
    for i in 0..n {
        let mut cur = i;
        for _ in 0..m {
            cur = sys.map_index(cur);
        }
        map.push(cur);
    }
    let labels = sys.labels().to_vec();
    let dist: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| sys.dist(i, j).clone()).collect())
        .collect();
    FiniteMetricSystem::new(labels, dist, map)
}

/// The downsampled index set `{r : 0 < n − rm ≤ m for some n ∈ A}`: the
/// block positions an iterated-map window inherits from `A`.
pub fn b_forward(a: &WindowSet, m: i64) -> Result<WindowSet, Error> {
    if m < 1 {
        return Err(Error::BadExponent(m));
    }
    let mut members: Vec<i64> = a
        .members()
        .iter()
        .filter(|&&n| n >= 1)
        .map(|&n| (n - 1) / m)
        .collect();
    members.sort_unstable();
    members.dedup();
    let hi = if a.hi() >= 1 { (a.hi() - 1) / m } else { 0 };
    WindowSet::new(members, 0, hi, false)
}

/// The dilated index set `⋃_{q=0}^{m−1} (m·A − q)`, i.e. `{n : ⌈n/m⌉ ∈ A}`,
/// on the widened range `[lo, m·hi]`.
pub fn b_backward(a: &WindowSet, m: i64) -> Result<WindowSet, Error> {
    if m < 1 {
        return Err(Error::BadExponent(m));
    }
    let widened = WindowSet::new(
        a.members().to_vec(),
        a.lo(),
        a.hi().saturating_mul(m),
        a.excludes_zero(),
    )?;
    widened.dilate_preimage(m)
}

/// Largest `η` (halved for strictness) such that `d(t,w) ≤ η` forces
/// `d(fⁱt, fⁱw) < δ` for every `0 ≤ i ≤ steps`: half the minimum distance
/// among pairs that reach `δ` within `steps` iterations. Falls back to
/// `δ/2` when no pair ever does (every claim guarded by it is vacuous).
pub fn iterate_continuity_threshold(
    sys: &FiniteMetricSystem,
    delta: &Rational,
    steps: i64,
) -> Result<Rational, Error> {
    if *delta <= Rational::zero() {
        return Err(Error::NonPositiveThreshold);
    }
    if steps < 0 {
        return Err(Error::BadExponent(steps));
    }
    let n = sys.size();
    let mut best: Option<Rational> = None;
    for t in 0..n {
        for w in t + 1..n {
            let mut a = t;
            let mut b = w;
            let mut reaches = false;
            for _ in 0..=steps {
                if sys.dist(a, b) >= delta {
                    reaches = true;
                    break;
                }
                a = sys.map_index(a);
                b = sys.map_index(b);
            }
            if reaches {
                let d = sys.dist(t, w);
                if best.as_ref().is_none_or(|cur| d < cur) {
                    best = Some(d.clone());
                }
            }
        }
    }
    Ok(best.unwrap_or_else(|| delta.clone()) / ratio(2, 1))
}

/// Window checks for the iterated map: every index the forward
/// downsampling produces from an `f`-window lands in the `f^m`-window at
/// the swept η, and every index the backward dilation produces from an
/// `f^m`-window lands in the `f`-window at its own swept η.
pub fn power_window_checks(
    sys: &FiniteMetricSystem,
    m: i64,
    delta: &Rational,
    horizon: i64,
) -> Result<CheckReport, Error> {
    if m < 1 {
        return Err(Error::BadExponent(m));
    }
    if horizon < m {
        return Err(Error::BadRequirement(horizon));
    }
    let fm = power(sys, m)?;
    let eta_forward = iterate_continuity_threshold(sys, delta, m)?;
    let eta_backward = iterate_continuity_threshold(sys, delta, m - 1)?;
    let mut report = CheckReport::new(format!("power m={m} window checks at delta {delta}"));
    report.constant("eta_forward", eta_forward.clone());
    report.constant("eta_backward", eta_backward.clone());
    let refinement = Refinement::default();
    let coarse_horizon = horizon / m;
    let n = sys.size();
    for x in 0..n {
        for y in x + 1..n {
            let a = separation_window(sys, &x, &y, delta, horizon, &refinement)?;
            let wm = separation_window(&fm, &x, &y, &eta_forward, coarse_horizon, &refinement)?;
            let forward = b_forward(&a, m)?;
            report.checked += 1;
            for &r in forward.members() {
                if r >= 1 && !wm.contains(r) {
                    report.failures.push(format!(
                        "forward index {r} missing from the iterated window for pair ({x},{y})"
                    ));
                }
            }
            let a2 = separation_window(&fm, &x, &y, delta, coarse_horizon, &refinement)?;
            let wf =
                separation_window(sys, &x, &y, &eta_backward, coarse_horizon * m, &refinement)?;
            let backward = b_backward(&a2, m)?;
            report.checked += 1;
            if !backward.is_subset_of(&wf) {
                report.failures.push(format!(
                    "backward dilation escapes the base window for pair ({x},{y})"
                ));
            }
        }
    }
    Ok(report)
}

/// Transports a finite system along a relabeling bijection `g` onto a
/// target metric: the result has the target's points and distances and
/// the map `g ∘ f ∘ g⁻¹`.
pub fn conjugate(
    sys: &FiniteMetricSystem,
    target_labels: Vec<String>,
    target_dist: Vec<Vec<Rational>>,
    g: &[usize],
) -> Result<FiniteMetricSystem, Error> {
    let n = sys.size();
    if g.len() != n || target_labels.len() != n {
        return Err(Error::DimensionMismatch {
            left: g.len(),
            right: n,
        });
    }
    let mut inverse = alloc::vec![usize::MAX; n];
    for (i, &gi) in g.iter().enumerate() {
        if gi >= n {
            return Err(Error::MapOutOfRange { image: gi, size: n });
        }
        if inverse[gi] != usize::MAX {
            return Err(Error::NotABijection);
        }
        inverse[gi] = i;
    }
    let map: Vec<usize> = (0..n).map(|j| g[sys.map_index(inverse[j])]).collect();
    FiniteMetricSystem::new(target_labels, target_dist, map)
}

/// The exact uniform-separation constant of the relabeling: the minimum
/// target distance `ρ(g t, g w)` over pairs with `d(t, w) ≥ δ`, or `None`
/// when no pair separates that far.
pub fn conjugacy_epsilon(
    source: &FiniteMetricSystem,
    target: &FiniteMetricSystem,
    g: &[usize],
    delta: &Rational,
) -> Result<Option<Rational>, Error> {
    if *delta <= Rational::zero() {
        return Err(Error::NonPositiveThreshold);
    }
    let n = source.size();
    if g.len() != n || target.size() != n {
        return Err(Error::DimensionMismatch {
            left: g.len(),
            right: n,
        });
    }
    let mut best: Option<Rational> = None;
    for t in 0..n {
        for w in t + 1..n {
            if source.dist(t, w) >= delta {
                let image = target.dist(g[t], g[w]);
                if best.as_ref().is_none_or(|cur| image < cur) {
                    best = Some(image.clone());
                }
            }
        }
    }
    Ok(best)
}

/// Window checks for the conjugate: every source window at δ embeds into
/// the conjugated system's window at η = ε/2 under the relabeling.
pub fn conjugacy_window_checks(
    source: &FiniteMetricSystem,
    conjugated: &FiniteMetricSystem,
    g: &[usize],
    delta: &Rational,
    horizon: i64,
) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new(format!("conjugacy window checks at delta {delta}"));
    let epsilon = conjugacy_epsilon(source, conjugated, g, delta)?;
    let eta = match &epsilon {
        Some(value) => {
            report.constant("epsilon", value.clone());
            value / ratio(2, 1)
        }
        // No source pair reaches δ: all windows at δ are empty and the
        // inclusion is vacuous at any threshold.
        None => delta / ratio(2, 1),
    };
    report.constant("eta", eta.clone());
    let refinement = Refinement::default();
    let n = source.size();
    for t in 0..n {
        for w in t + 1..n {
            let ws = separation_window(source, &t, &w, delta, horizon, &refinement)?;
            let wc = separation_window(conjugated, &g[t], &g[w], &eta, horizon, &refinement)?;
            report.checked += 1;
            if !ws.is_subset_of(&wc) {
                report.failures.push(format!(
                    "source window escapes the conjugated window for pair ({t},{w})"
                ));
            }
        }
    }
    Ok(report)
}

/// The two-sided orbit system of an invertible finite base: points are
/// full orbits keyed by their coordinate 0, the map is the orbit shift
/// (coordinate 0 advances through the base map), and the distance is the
/// exact weighted sum `Σ_{i∈ℤ} d(x_i, y_i)/2^|i|` evaluated in closed
/// form over the pair's cycle.
#[derive(Clone, Debug)]
pub struct InverseLimitSystem {
    base: FiniteMetricSystem,
}

impl InverseLimitSystem {
    pub fn new(base: FiniteMetricSystem) -> Result<Self, Error> {
        if !base.invertible() {
            return Err(Error::NotInvertible);
        }
        Ok(InverseLimitSystem { base })
    }

    pub fn base(&self) -> &FiniteMetricSystem {
        &self.base
    }

    /// Coordinate `i ∈ ℤ` of the orbit keyed by `point`.
    pub fn coordinate(&self, point: usize, i: i64) -> Result<usize, Error> {
        self.base.iterate(&point, i)
    }

    /// One-directional half of the weighted orbit sum: `Σ_{i≥1} d_i/2^i`
    /// along the pure pair cycle in the given direction.
    fn ray_sum(&self, x: usize, y: usize, direction: i64) -> Result<Rational, Error> {
        let mut states = Vec::new();
        let mut cur = (x, y);
        loop {
            cur = (
                self.base.iterate(&cur.0, direction)?,
                self.base.iterate(&cur.1, direction)?,
            );
            states.push(cur);
            if cur == (x, y) {
                break;
            }
        }
        // Σ_{i≥1} w(i)/2^i with w of period λ equals
        // (Σ_{i=1}^{λ} w_i·2^{λ−i}) / (2^λ − 1).
        let lambda = states.len();
        let mut weighted = Rational::zero();
        for (idx, &(a, b)) in states.iter().enumerate() {
            let weight = Rational::new(BigInt::one() << (lambda - 1 - idx), BigInt::one());
            weighted += weight * self.base.dist(a, b);
        }
        let denom = Rational::new((BigInt::one() << lambda) - BigInt::one(), BigInt::one());
        Ok(weighted / denom)
    }

    /// Exact distance `Σ_{i∈ℤ} d(x_i, y_i)/2^|i|` between two orbits.
    pub fn orbit_distance(&self, x: usize, y: usize) -> Result<Rational, Error> {
        if x == y {
            return Ok(Rational::zero());
        }
        let center = self.base.dist(x, y).clone();
        let forward = self.ray_sum(x, y, 1)?;
        let backward = self.ray_sum(x, y, -1)?;
        Ok(center + forward + backward)
    }
}

impl System for InverseLimitSystem {
    type Point = usize;

    fn invertible(&self) -> bool {
        true
    }

    fn iterate(&self, point: &usize, n: i64) -> Result<usize, Error> {
        self.base.iterate(point, n)
    }

    fn distance(&self, a: &usize, b: &usize, _budget: u32) -> Result<DistanceBound, Error> {
        Ok(DistanceBound::Exact(self.orbit_distance(*a, *b)?))
    }
}

/// Builds the orbit system over an invertible base.
pub fn inverse_limit(base: FiniteMetricSystem) -> Result<InverseLimitSystem, Error> {
    InverseLimitSystem::new(base)
}

/// Structural checks for the orbit system: shifted-orbit windows translate
/// into the base pair's window, every base-coordinate window embeds into
/// the orbit window, the orbit window projects into the coordinate-0
/// window at the swept η, the distance is pinched between the coordinate-0
/// distance and three times the largest coordinate distance, and the shift
/// commutes with its own powers.
pub fn inverse_limit_checks(
    base: &FiniteMetricSystem,
    delta: &Rational,
    horizon: i64,
) -> Result<CheckReport, Error> {
    if *delta <= Rational::zero() {
        return Err(Error::NonPositiveThreshold);
    }
    let sys = InverseLimitSystem::new(base.clone())?;
    let mut report = CheckReport::new(format!("orbit system checks at delta {delta}"));
    // Tail cutoff k: beyond it the two tails contribute at most
    // diam·2^{1−k} ≤ δ/3, so the middle must carry more than 2δ/3 and
    // some coordinate |i| ≤ k must separate by at least 2δ/9.
    let diameter = base.diameter();
    let mut k = 0i64;
    let third = delta / ratio(3, 1);
    while &diameter * ratio(2, 1 << k.min(62)) > third {
        k += 1;
        if k >= 62 {
            break;
        }
    }
    let tau = delta * ratio(2, 9);
    let mut epsilon_min: Option<Rational> = None;
    let n = base.size();
    for t in 0..n {
        for w in t + 1..n {
            let mut reaches = false;
            for i in -k..=k {
                let a = base.iterate(&t, i)?;
                let b = base.iterate(&w, i)?;
                if *base.dist(a, b) >= tau {
                    reaches = true;
                    break;
                }
            }
            if reaches {
                let d = base.dist(t, w);
                if epsilon_min.as_ref().is_none_or(|cur| d < cur) {
                    epsilon_min = Some(d.clone());
                }
            }
        }
    }
    let eta = match &epsilon_min {
        Some(value) => {
            report.constant("epsilon", value.clone());
            value / ratio(2, 1)
        }
        // No coordinate within the cutoff ever reaches 2δ/9, so every
        // orbit distance stays below δ and the projection is vacuous.
        None => delta.clone(),
    };
    report.constant("eta", eta.clone());
    report.constant("tail_cutoff", ratio(k, 1));
    let refinement = Refinement::default();
    for x in 0..n {
        for y in x + 1..n {
            let w0 = separation_window_z(&sys, &x, &y, delta, horizon, &refinement)?;
            // Distance pinch: d(x₀,y₀) ≤ d̄ ≤ 3·max_i d(x_i,y_i).
            let d_bar = sys.orbit_distance(x, y)?;
            let orbit = PairOrbit::new(base, x, y);
            let spread = orbit.sup_distance(base);
            report.checked += 1;
            if &d_bar < base.dist(x, y) || d_bar > ratio(3, 1) * &spread {
                report
                    .failures
                    .push(format!("distance pinch fails for pair ({x},{y})"));
            }
            for j in -3..=3i64 {
                let xj = base.iterate(&x, j)?;
                let yj = base.iterate(&y, j)?;
                let wj = separation_window_z(&sys, &xj, &yj, delta, horizon, &refinement)?;
                report.checked += 1;
                if !wj.translate(j).is_subset_of(&w0) {
                    report.failures.push(format!(
                        "shifted window fails to translate for pair ({x},{y}) at j={j}"
                    ));
                }
                let base_window = separation_window(base, &xj, &yj, delta, horizon, &refinement)?;
                report.checked += 1;
                if base_window.members().iter().any(|&m| !wj.contains(m)) {
                    report.failures.push(format!(
                        "coordinate window escapes the orbit window for pair ({x},{y}) at j={j}"
                    ));
                }
            }
            let projected = separation_window(base, &x, &y, &eta, horizon, &refinement)?;
            report.checked += 1;
            if w0
                .members()
                .iter()
                .any(|&m| m >= 1 && !projected.contains(m))
            {
                report.failures.push(format!(
                    "orbit window escapes the coordinate-0 window for pair ({x},{y})"
                ));
            }
        }
    }
    for p in 0..n {
        for j in -3..=3i64 {
            let via_shift = base.iterate(&base.iterate(&p, j)?, 1)?;
            let direct = base.iterate(&p, j + 1)?;
            report.checked += 1;
            if via_shift != direct {
                report
                    .failures
                    .push(format!("shift fails to commute at point {p}, j={j}"));
            }
        }
    }
    Ok(report)
}

/// Outcome of the finite-complement extension check.
#[derive(Clone, Debug)]
pub struct ExtendReport {
    /// The unique point of the subset the extra point shadows at δ/2
    /// forever, when one exists.
    pub partner: Option<usize>,
    pub eta: Rational,
    pub report: CheckReport,
}

/// Extension dichotomy for one extra point `x` against a subset `A` on
/// which separation behaves well at `δ`: at most one `y ∈ A` stays within
/// `δ/2` of `x`'s orbit forever (checked exactly over pair cycles). If
/// such a `y` exists, every other pair's window at δ embeds into `x`'s
/// window at η = min(δ/2, d(x,y))/2; if none does, every pair `(x, z)`
/// separates beyond η = δ/4 somewhere on its cycle.
pub fn extend_check(
    sys: &FiniteMetricSystem,
    subset: &[usize],
    x: usize,
    delta: &Rational,
    horizon: i64,
) -> Result<ExtendReport, Error> {
    if *delta <= Rational::zero() {
        return Err(Error::NonPositiveThreshold);
    }
    let n = sys.size();
    if x >= n {
        return Err(Error::UnknownPoint(format!("point index {x}")));
    }
    for &z in subset {
        if z >= n {
            return Err(Error::UnknownPoint(format!("point index {z}")));
        }
        if z == x {
            return Err(Error::PreconditionViolated(String::from(
                "subset must not contain the extra point",
            )));
        }
    }
    let mut seen = alloc::vec![false; n];
    for &z in subset {
        if seen[z] {
            return Err(Error::PointsNotDistinct);
        }
        seen[z] = true;
    }
    let half = delta / ratio(2, 1);
    let mut partners = Vec::new();
    for &z in subset {
        let orbit = PairOrbit::new(sys, x, z);
        let mut shadows = true;
        for m in 1..=orbit.state_count() as u64 {
            let (a, b) = orbit.state(m);
            if *sys.dist(a, b) > half {
                shadows = false;
                break;
            }
        }
        if shadows {
            partners.push(z);
        }
    }
    let mut report = CheckReport::new(format!("extension dichotomy at delta {delta}"));
    if partners.len() > 1 {
        report.failures.push(format!(
            "dichotomy violated: {} shadow partners",
            partners.len()
        ));
    }
    let partner = partners.first().copied();
    let refinement = Refinement::default();
    let eta = match partner {
        Some(y) => {
            let d = sys.dist(x, y).clone();
            let cap = if d < half { d } else { half.clone() };
            cap / ratio(2, 1)
        }
        None => delta / ratio(4, 1),
    };
    match partner {
        Some(y) => {
            for &z in subset {
                if z == y {
                    continue;
                }
                let wy = separation_window(sys, &y, &z, delta, horizon, &refinement)?;
                let wx = separation_window(sys, &x, &z, &eta, horizon, &refinement)?;
                report.checked += 1;
                if !wy.is_subset_of(&wx) {
                    report.failures.push(format!(
                        "partner window escapes the extension window for subset point {z}"
                    ));
                }
            }
        }
        None => {
            for &z in subset {
                let orbit = PairOrbit::new(sys, x, z);
                report.checked += 1;
                if orbit.sup_distance(sys) <= eta {
                    report
                        .failures
                        .push(format!("pair ({x},{z}) never separates beyond eta"));
                }
            }
        }
    }
    report.constant("eta", eta.clone());
    Ok(ExtendReport {
        partner,
        eta,
        report,
    })
}
