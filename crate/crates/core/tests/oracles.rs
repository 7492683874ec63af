use crnoma::app::sweep_rows;
use crnoma::sensing::{pd_from_pf, pf_from_pd, simulate_detection};
use crnoma::statmath::{q, q_inv};
use crnoma::{
    optimal_sensing_time, Method, ObjectiveKind, Probability, ScenarioConfig, SensingParams,
    GOLDEN_RATIO,
};

mod common;

/// Inverse of the quadrature tail by plain bisection.
fn quadrature_inverse(p: f64) -> f64 {
    let (mut lo, mut hi) = (-10.0, 10.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if common::tail_by_quadrature(mid) > p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn q_matches_quadrature() {
    for i in -80..=80 {
        let x = i as f64 / 10.0;
        let oracle = common::tail_by_quadrature(x);
        assert!((q(x).unwrap().value() - oracle).abs() < 1e-12, "x = {x}");
    }
    assert!((common::tail_by_quadrature(1.0) - 0.158655253931).abs() < 1e-12);
}

#[test]
fn q_inv_matches_bisection_of_quadrature() {
    for p in [1e-12, 1e-6, 0.01, 0.158655253931, 0.3, 0.5, 0.9, 0.999] {
        let oracle = quadrature_inverse(p);
        let x = q_inv(Probability::new(p).unwrap()).unwrap();
        assert!((x - oracle).abs() < 1e-9, "p = {p}: {x} vs {oracle}");
    }
}

#[test]
fn closed_form_detection_maps() {
    let pd = Probability::new(0.9).unwrap();
    let oracle = common::tail_by_quadrature(1.1f64.sqrt() * quadrature_inverse(0.9) + 1.0);
    let pf = pf_from_pd(pd, 0.05, 0.4, 1000.0).unwrap().value();
    assert!((pf - oracle).abs() < 1e-9, "{pf} vs {oracle}");

    let pf = pf_from_pd(Probability::new(0.5).unwrap(), 0.1, 0.1, 1000.0)
        .unwrap()
        .value();
    assert!((pf - common::tail_by_quadrature(1.0)).abs() < 1e-12);
    let back = pd_from_pf(
        Probability::new(common::tail_by_quadrature(1.0)).unwrap(),
        0.1,
        0.1,
        1000.0,
    )
    .unwrap();
    assert!((back.value() - 0.5).abs() < 1e-10);
}

#[test]
fn golden_ratio_power() {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    assert!((GOLDEN_RATIO - g).abs() < 1e-16);
    let g20 = (0..20).fold(1.0, |acc, _| acc * g);
    assert!((g20 - 6.61e-5).abs() < 5e-8);
}

#[test]
fn noise_only_threshold_gives_even_odds() {
    // Y_th = σ² sits on the H0 mean, so p_f = ½ up to the statistic's skew.
    let params = SensingParams::new(0.05, 1.0, 1000.0, 2.0, 0.9).unwrap();
    let trials = 100_000;
    let outcome = simulate_detection(&params, 1.0, 1.0, trials, 99).unwrap();
    assert_eq!(outcome.samples_per_trial, 1000);
    let band = 4.0 * (0.25 / trials as f64).sqrt();
    assert!(
        (outcome.empirical_pf.value() - 0.5).abs() <= band,
        "{}",
        outcome.empirical_pf
    );
}

#[test]
fn sweep_argmax_matches_grid_optimum() {
    let s = ScenarioConfig::reference();
    let steps = 1001;
    let rows = sweep_rows(&s, steps).unwrap();
    let best = rows
        .iter()
        .fold(&rows[0], |b, r| if r.r0 > b.r0 { r } else { b });
    let grid = optimal_sensing_time(&s, ObjectiveKind::Obtainable, Method::Grid, steps).unwrap();
    assert!((best.tau - grid.tau_opt).abs() <= grid.bracket_width);
}
