//! Monte-Carlo check of the analytic detector.
//!
//! At five sensing times the detector threshold is set for the scenario's
//! target `p_d`; the simulated exceedance rates must land within four
//! binomial standard deviations of the analytic `p_f` and `p_d`.

use std::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::sensing::{
    num_samples, pd_from_threshold, pf_from_threshold, simulate_detection, threshold_from_pd,
};
use crate::throughput::ScenarioConfig;

/// Sensing times as fractions of the frame.
pub const VALIDATION_FRACTIONS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

pub const MIN_TRIALS: usize = 100;

/// Width of the acceptance band in binomial standard deviations.
pub const BAND_SIGMAS: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    FalseAlarm,
    Detection,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::FalseAlarm => "p_f",
            Quantity::Detection => "p_d",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationCell {
    pub tau: f64,
    pub samples: usize,
    pub threshold: f64,
    pub quantity: Quantity,
    pub analytic: f64,
    pub empirical: f64,
    pub band: f64,
}

impl ValidationCell {
    pub fn passes(&self) -> bool {
        (self.empirical - self.analytic).abs() <= self.band
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub trials: usize,
    pub seed: u64,
    pub cells: Vec<ValidationCell>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(ValidationCell::passes)
    }
}

/// `BAND_SIGMAS·√(p(1−p)/trials)`.
pub fn binomial_band(p: f64, trials: usize) -> f64 {
    BAND_SIGMAS * (p * (1.0 - p) / trials as f64).sqrt()
}

/// Seed of the `index`-th sensing time, so cells draw unrelated streams.
fn cell_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Compares analytic and simulated detector performance at one sensing time.
pub fn validate_at(
    scenario: &ScenarioConfig,
    tau: f64,
    trials: usize,
    seed: u64,
) -> Result<[ValidationCell; 2]> {
    let sensing = &scenario.sensing;
    let threshold = threshold_from_pd(sensing, tau)?;
    let outcome = simulate_detection(sensing, tau, threshold, trials, seed)?;
    let samples = num_samples(tau, sensing.sample_rate)?;
    let pf = pf_from_threshold(threshold, sensing, tau)?.value();
    let pd = pd_from_threshold(threshold, sensing, tau)?.value();
    let cell = |quantity, analytic: f64, empirical: f64| ValidationCell {
        tau,
        samples,
        threshold,
        quantity,
        analytic,
        empirical,
        band: binomial_band(analytic, trials),
    };
    Ok([
        cell(Quantity::FalseAlarm, pf, outcome.empirical_pf.value()),
        cell(Quantity::Detection, pd, outcome.empirical_pd.value()),
    ])
}

pub fn run_validation(
    scenario: &ScenarioConfig,
    trials: usize,
    seed: u64,
) -> Result<ValidationReport> {
    if trials < MIN_TRIALS {
        return Err(Error::InvalidArgument(format!(
            "validation needs at least {MIN_TRIALS} trials, got {trials}"
        )));
    }
    let frame = scenario.frame_duration();
    let mut cells = Vec::with_capacity(2 * VALIDATION_FRACTIONS.len());
    for (i, fraction) in VALIDATION_FRACTIONS.iter().enumerate() {
        cells.extend(validate_at(
            scenario,
            fraction * frame,
            trials,
            cell_seed(seed, i),
        )?);
    }
    Ok(ValidationReport {
        trials,
        seed,
        cells,
    })
}

/// Aligned plain-text rendering of a report.
pub fn format_report(report: &ValidationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trials = {}, seed = {}", report.trials, report.seed);
    let _ = writeln!(
        out,
        "{:>10} {:>8} {:>12} {:<4} {:>10} {:>10} {:>10} {:>10} {:<6}",
        "tau_s", "M", "threshold", "qty", "analytic", "empirical", "deviation", "band", "status"
    );
    for c in &report.cells {
        let _ = writeln!(
            out,
            "{:>10.6} {:>8} {:>12.6} {:<4} {:>10.6} {:>10.6} {:>+10.6} {:>10.6} {:<6}",
            c.tau,
            c.samples,
            c.threshold,
            c.quantity.to_string(),
            c.analytic,
            c.empirical,
            c.empirical - c.analytic,
            c.band,
            if c.passes() { "PASS" } else { "FAIL" },
        );
    }
    let passed = report.cells.iter().filter(|c| c.passes()).count();
    let _ = writeln!(
        out,
        "{passed}/{} cells within the {BAND_SIGMAS}-sigma band",
        report.cells.len()
    );
    out
}
