//! Acceptance checks: one test per shipped guarantee, each printing a
//! single pass/fail line. Horizons and thresholds here are the contract;
//! the unit and property tests cover the machinery behind them.

use std::collections::BTreeSet;

use expanselab::corpus::{canonical_corpus, seeded_corpus, DEFAULT_SEED};
use expanselab::report::Report;
use expanselab::suites::{
    chen_suite, conjugacy_suite, extension_suite, inverse_limit_suite, orbit_suite, periodic_suite,
    powers_suite, product_suite, SuiteConfig,
};
use expanselab_core::combinators::InverseLimitSystem;
use expanselab_core::constructions::{
    asymptotic_pair, b_seq, block_b_c, build_p, build_xbar, d_counts, ladder_system,
    syndetic_refutation_check, AsymptoticKind,
};
use expanselab_core::families::{ExplicitFamily, FamilyKind, VerdictKind};
use expanselab_core::finite::{positive_expansivity_search, ExpansivityOutcome, PairOrbit};
use expanselab_core::generators::{ball_cover, f_star_generator_verdict};
use expanselab_core::ratio;
use expanselab_core::sequences::{
    separation_window, separation_window_z, Refinement, System, TwoSidedShift,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const REFERENCE_BITS: &str =
    "10011010011010101000110110101010000111011010101010000110010110101010101";

fn assert_all_pass(reports: &[Report]) {
    assert!(!reports.is_empty(), "suite produced no claims");
    for report in reports {
        assert!(
            report.passed(),
            "claim {} failed: {}",
            report.claim,
            report.detail
        );
    }
}

fn claim_ids(reports: &[Report]) -> BTreeSet<String> {
    reports.iter().map(|r| r.claim.clone()).collect()
}

#[test]
fn criterion_01_golden_vectors_match_exactly() {
    let p = build_p(40).unwrap();
    let expected_members: Vec<i64> = vec![
        1, 2, 5, 6, 7, 8, 13, 14, 15, 16, 17, 18, 25, 26, 27, 28, 29, 30, 31, 32,
    ];
    assert_eq!(p.members(), expected_members.as_slice());
    let expected_complement: Vec<i64> = vec![
        3, 4, 9, 10, 11, 12, 19, 20, 21, 22, 23, 24, 33, 34, 35, 36, 37, 38, 39, 40,
    ];
    assert_eq!(
        p.complement_in_window().members(),
        expected_complement.as_slice()
    );

    let seq: Vec<i64> = (1..=4).map(|n| b_seq(n).unwrap()).collect();
    assert_eq!(seq, vec![2, 4, 7, 11]);

    for (m, start, b_len, c_len) in [(2i64, 9i64, 4i64, 3i64), (3, 19, 6, 4), (4, 33, 8, 5)] {
        let span = block_b_c(m).unwrap();
        assert_eq!(
            (span.b_start, span.b_len, span.c_len),
            (start, b_len, c_len),
            "m={m}"
        );
    }

    for (m, expected) in [(2i64, vec![1i64]), (3, vec![2]), (4, vec![2, 1])] {
        let ledger = d_counts(m).unwrap();
        let counts: Vec<i64> = ledger.counts().values().copied().collect();
        assert_eq!(counts, expected, "m={m}");
    }

    let spec = build_xbar(REFERENCE_BITS.len() as u64).unwrap();
    assert_eq!(spec.to_bit_string(), REFERENCE_BITS);
    eprintln!("ACCEPTANCE 01 PASS — golden construction vectors match exactly");
}

#[test]
fn criterion_02_ladder_center_pair_empty_and_interior_pairs_finite() {
    let sys = ladder_system(10).unwrap();
    let refinement = Refinement::new(64, 4096);
    let half = sys.index_of("1/2").unwrap();
    let third = sys.index_of("1/3").unwrap();
    let zero = sys.index_of("0").unwrap();
    let one = sys.index_of("1").unwrap();

    // The pair's images coincide after one step, so its separation window
    // is empty for every positive threshold; the sampled grid spans (0, 1/6).
    assert_eq!(sys.map_index(half), sys.map_index(third));
    for delta in [
        ratio(1, 1000),
        ratio(1, 100),
        ratio(1, 12),
        ratio(1, 7),
        ratio(33, 200),
    ] {
        let window = separation_window(&sys, &half, &third, &delta, 10_000, &refinement).unwrap();
        assert!(
            window.is_empty(),
            "delta {delta} produced a nonempty window"
        );
    }

    // Every pair avoiding the fixed endpoints merges exactly once its
    // preperiod has elapsed, so its window is finite at every threshold.
    let n = sys.size();
    let small = ratio(1, 100);
    let mut interior_pairs = 0usize;
    for x in 0..n {
        for y in x + 1..n {
            if x == zero || y == zero || x == one || y == one {
                continue;
            }
            interior_pairs += 1;
            let orbit = PairOrbit::new(&sys, x, y);
            let preperiod = orbit.preperiod() as i64;
            let merged_x = sys.iterate(&x, preperiod).unwrap();
            let merged_y = sys.iterate(&y, preperiod).unwrap();
            assert_eq!(merged_x, merged_y, "pair ({x}, {y}) never merges");
            let horizon = preperiod + orbit.cycle_length() as i64;
            let window =
                separation_window(&sys, &x, &y, &small, horizon.max(1), &refinement).unwrap();
            assert!(
                window.members().iter().all(|&m| m <= preperiod),
                "pair ({x}, {y}) separates inside its cycle"
            );
        }
    }
    assert!(interior_pairs > 100);
    eprintln!(
        "ACCEPTANCE 02 PASS — center pair has an empty window across (0, 1/6) at horizon 10000; {interior_pairs} interior pairs merge"
    );
}

#[test]
fn criterion_03_engineered_orbit_window_inclusions_at_one_quarter() {
    let config = SuiteConfig {
        horizon: 2000,
        ..SuiteConfig::default()
    };
    let reports = orbit_suite(&config).unwrap();
    assert_all_pass(&reports);
    for report in &reports {
        assert_eq!(report.params["horizon"], "2000");
        assert_eq!(report.params["delta"], "1/4");
    }
    let ids = claim_ids(&reports);
    for expected in [
        "orbit.case1.full-window",
        "orbit.case2.r=0",
        "orbit.case2.r=1",
        "orbit.case2.r=2",
        "orbit.case2.r=3",
        "orbit.case2.r=4",
        "orbit.case3.s=1",
        "orbit.case3.s=3",
        "orbit.case3.s=5",
        "orbit.case3.s=2.blocks",
        "orbit.case3.s=4.blocks",
        "orbit.case3.s=2.not-cofinite",
    ] {
        assert!(ids.contains(expected), "missing claim {expected}");
    }
    eprintln!(
        "ACCEPTANCE 03 PASS — every stated window inclusion holds at delta 1/4, horizon 2000, and the even self-shift window is refuted as cofinite"
    );
}

#[test]
fn criterion_04_periodic_closures_are_syndetic_with_period_gaps() {
    let config = SuiteConfig {
        horizon: 1000,
        ..SuiteConfig::default()
    };
    let reports = periodic_suite(&config).unwrap();
    assert_all_pass(&reports);
    for (claim, bound) in [("periodic.01.syndetic", 2i64), ("periodic.001.syndetic", 3)] {
        let report = reports
            .iter()
            .find(|r| r.claim == claim)
            .unwrap_or_else(|| panic!("missing claim {claim}"));
        let max_gap: i64 = report.constants["max_gap"].parse().unwrap();
        assert!(
            max_gap <= bound,
            "{claim}: worst gap {max_gap} exceeds {bound}"
        );
    }
    eprintln!(
        "ACCEPTANCE 04 PASS — both periodic closures separate syndetically at delta 1/2 with gaps bounded by their period, boundaries included"
    );
}

#[test]
fn criterion_05_duality_laws_hold_on_seeded_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for case in 0..200 {
        let n = rng.gen_range(2usize..=10);
        let top: u32 = (1u32 << n) - 1;
        let count = rng.gen_range(1usize..=5);
        let generators: Vec<u32> = (0..count).map(|_| rng.gen_range(0..=top)).collect();
        let family = ExplicitFamily::upward_close(&generators, n).unwrap();
        let dual = family.dual();
        for a in 0..=top {
            assert_eq!(
                dual.contains(a),
                !family.contains(top & !a),
                "case {case}: complement law fails at mask {a:#b}"
            );
        }
        let double = dual.dual();
        assert_eq!(
            double.subsets(),
            family.subsets(),
            "case {case}: double dual differs"
        );
    }
    eprintln!(
        "ACCEPTANCE 05 PASS — 200 seeded families on up to 10 points satisfy the complement law and double-dual identity"
    );
}

#[test]
fn criterion_06_tracking_thresholds_survive_exhaustive_recheck() {
    let reports = chen_suite(&SuiteConfig::default()).unwrap();
    assert_all_pass(&reports);
    assert_eq!(
        reports.len(),
        20,
        "expected 5 systems x 2 accuracies x 2 segment lengths"
    );
    for report in &reports {
        assert!(report.constants.contains_key("delta"));
    }
    eprintln!(
        "ACCEPTANCE 06 PASS — all 20 searched tracking thresholds pass the exhaustive pseudo-orbit segment recheck"
    );
}

#[test]
fn criterion_07_transport_skeletons_hold_and_log_constants() {
    let config = SuiteConfig {
        horizon: 1000,
        ..SuiteConfig::default()
    };
    let constant_keys = ["beta", "eta", "eta_forward", "eta_backward", "epsilon"];
    for (name, reports) in [
        ("powers", powers_suite(&config).unwrap()),
        ("product", product_suite(&config).unwrap()),
        ("conjugacy", conjugacy_suite(&config).unwrap()),
        ("extension", extension_suite(&config).unwrap()),
    ] {
        assert_all_pass(&reports);
        for report in &reports {
            assert!(
                constant_keys
                    .iter()
                    .any(|k| report.constants.contains_key(*k)),
                "{name}: claim {} logs no derived threshold",
                report.claim
            );
        }
    }
    eprintln!(
        "ACCEPTANCE 07 PASS — power, product, conjugacy, and extension window skeletons hold with their derived thresholds logged"
    );
}

#[test]
fn criterion_08_fine_ball_covers_certify_or_refute_generation() {
    let family_horizon = 12i64;
    let universe = (family_horizon + 1) as usize;
    let tail_mask = (1u32 << universe) - 2;
    let tail_family = ExplicitFamily::upward_close(&[tail_mask], universe).unwrap();

    let mut entries = canonical_corpus();
    entries.extend(seeded_corpus(DEFAULT_SEED, 3, 8, false));
    let mut expansive_members = 0usize;
    for entry in &entries {
        let sys = &entry.system;
        let sweep = ((sys.size() * sys.size()) as u64).max(4);
        let ExpansivityOutcome::Expansive { delta } =
            positive_expansivity_search(sys, sweep).unwrap()
        else {
            continue;
        };
        expansive_members += 1;
        let cover = ball_cover(sys, &(&delta * ratio(1, 2))).unwrap();
        let verdict = f_star_generator_verdict(sys, &cover, &tail_family, family_horizon).unwrap();
        assert_eq!(
            verdict.kind,
            VerdictKind::ConsistentWitness,
            "{}: half-threshold ball cover fails the tail-indexed generator check",
            entry.name
        );
    }
    assert!(expansive_members >= 5, "corpus lost its separating members");

    let ladder = ladder_system(6).unwrap();
    for radius in [ratio(1, 24), ratio(1, 30), ratio(1, 48), ratio(1, 96)] {
        let cover = ball_cover(&ladder, &radius).unwrap();
        let verdict =
            f_star_generator_verdict(&ladder, &cover, &tail_family, family_horizon).unwrap();
        assert_eq!(
            verdict.kind,
            VerdictKind::Refuted,
            "radius {radius}: ladder ball cover unexpectedly generates"
        );
    }
    eprintln!(
        "ACCEPTANCE 08 PASS — {expansive_members} separating members certify their half-threshold ball covers; every fine ladder cover is refuted"
    );
}

#[test]
fn criterion_09_orbit_space_windows_translate_both_ways() {
    let config = SuiteConfig {
        horizon: 1000,
        ..SuiteConfig::default()
    };
    let reports = inverse_limit_suite(&config).unwrap();
    assert_all_pass(&reports);
    assert!(claim_ids(&reports).contains("invlimit.cycle4-uniform.orbit-distance"));

    let uniform4 = canonical_corpus()
        .into_iter()
        .find(|e| e.name == "cycle4-uniform")
        .unwrap();
    let orbit_space = InverseLimitSystem::new(uniform4.system).unwrap();
    assert_eq!(orbit_space.orbit_distance(0, 2).unwrap(), ratio(3, 1));
    eprintln!(
        "ACCEPTANCE 09 PASS — orbit-space windows pinch base windows, translate under shifts j in [-3, 3], and the 4-cycle's orbit distance is exactly 3"
    );
}

#[test]
fn criterion_10_asymptotic_pair_refutes_syndeticity_at_every_modulus() {
    let horizon = 1000i64;
    let refinement = Refinement::new(64, 4096);
    let shift = TwoSidedShift;
    let (x, y) = asymptotic_pair(AsymptoticKind::Positively).unwrap();
    for k in 1..=6i64 {
        let epsilon = ratio(1, 1 << k);
        let window = separation_window_z(&shift, &x, &y, &epsilon, horizon, &refinement).unwrap();
        let mut expected: Vec<i64> = (-horizon..=-1).collect();
        expected.extend(1..=k);
        assert_eq!(
            window.members(),
            expected.as_slice(),
            "epsilon 1/2^{k}: window differs from the closed form"
        );
        for modulus in [1i64, 10, 100] {
            let verdict = window.classify(FamilyKind::Syndetic, modulus).unwrap();
            assert_eq!(
                verdict.kind,
                VerdictKind::Refuted,
                "epsilon 1/2^{k}: syndeticity not refuted at modulus {modulus}"
            );
        }
    }

    let grid: Vec<_> = (1..=6).map(|k| ratio(1, 1 << k)).collect();
    let rows = syndetic_refutation_check(&x, &y, &grid, horizon).unwrap();
    assert_eq!(rows.len(), 6);
    for (k, row) in (1..=6i64).zip(&rows) {
        // The closed-form tail bound is ceil(log2(2/epsilon)) = k + 1.
        assert_eq!(row.tail_start, k + 2, "epsilon 1/2^{k}");
        assert_eq!(row.verdict.kind, VerdictKind::Refuted, "epsilon 1/2^{k}");
    }
    eprintln!(
        "ACCEPTANCE 10 PASS — the asymptotic pair's two-sided window is empty beyond the tail bound and syndeticity is refuted at every modulus up to 100"
    );
}
