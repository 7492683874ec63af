//! Monte-Carlo energy detector.
//!
//! Noise samples are circularly symmetric complex Gaussian with variance
//! `σ_u²`; the primary signal is QPSK with constant power `γ·σ_u²`. Both
//! hypotheses then match the first two moments used by the analytic maps.
//!
//! Every trial draws from its own ChaCha8 stream keyed by `seed`, with the
//! stream id encoding `(hypothesis, trial index)`, so the outcome does not
//! depend on how trials are scheduled across threads.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use super::{num_samples, SensingParams};
use crate::error::{Error, Result};
use crate::statmath::Probability;

/// Squared magnitude of one received sample.
pub trait SampleEnergy {
    fn energy(&self) -> f64;
}

impl SampleEnergy for f64 {
    fn energy(&self) -> f64 {
        self * self
    }
}

impl SampleEnergy for Complex64 {
    fn energy(&self) -> f64 {
        self.norm_sqr()
    }
}

/// Average energy `(1/M)·Σ|y(n)|²`.
pub fn test_statistic<S: SampleEnergy>(samples: &[S]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::InvalidArgument(
            "test statistic needs at least one sample".into(),
        ));
    }
    let total: f64 = samples.iter().map(SampleEnergy::energy).sum();
    Ok(total / samples.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionOutcome {
    pub empirical_pf: Probability,
    pub empirical_pd: Probability,
    pub trials: usize,
    pub samples_per_trial: usize,
    pub seed: u64,
}

#[derive(Clone, Copy)]
enum Hypothesis {
    Idle = 0,
    Busy = 1,
}

fn stream_id(hypothesis: Hypothesis, trial: usize) -> u64 {
    ((hypothesis as u64) << 63) | (trial as u64 & (u64::MAX >> 1))
}

struct Detector {
    noise_scale: f64,
    signal_amplitude: f64,
    samples: usize,
    threshold: f64,
}

impl Detector {
    fn decide(
        &self,
        base: &ChaCha8Rng,
        hypothesis: Hypothesis,
        trial: usize,
        buf: &mut Vec<Complex64>,
    ) -> bool {
        let mut rng = base.clone();
        rng.set_stream(stream_id(hypothesis, trial));
        buf.clear();
        for _ in 0..self.samples {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            let mut y = Complex64::new(self.noise_scale * re, self.noise_scale * im);
            if let Hypothesis::Busy = hypothesis {
                let symbol: u8 = rng.random();
                let a = self.signal_amplitude;
                y.re += if symbol & 1 == 0 { a } else { -a };
                y.im += if symbol & 2 == 0 { a } else { -a };
            }
            buf.push(y);
        }
        // decide H_1 only on strict exceedance; ties go to H_0
        test_statistic(buf)
            .map(|t| t > self.threshold)
            .unwrap_or(false)
    }

    fn exceedance_rate(
        &self,
        base: &ChaCha8Rng,
        hypothesis: Hypothesis,
        trials: usize,
    ) -> Probability {
        let hits = (0..trials)
            .into_par_iter()
            .map_init(
                || Vec::with_capacity(self.samples),
                |buf, i| self.decide(base, hypothesis, i, buf),
            )
            .filter(|&hit| hit)
            .count();
        Probability::saturating(hits as f64 / trials as f64)
    }
}

/// Runs `trials` sensing windows under each hypothesis and reports how often
/// the statistic exceeds `threshold`.
pub fn simulate_detection(
    params: &SensingParams,
    tau: f64,
    threshold: f64,
    trials: usize,
    seed: u64,
) -> Result<DetectionOutcome> {
    params.validate()?;
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "simulation needs at least one trial".into(),
        ));
    }
    params.check_tau(tau)?;
    let samples = num_samples(tau, params.sample_rate)?;
    let detector = Detector {
        noise_scale: (0.5 * params.noise_variance).sqrt(),
        signal_amplitude: (0.5 * params.signal_variance()).sqrt(),
        samples,
        threshold,
    };
    let base = ChaCha8Rng::seed_from_u64(seed);
    Ok(DetectionOutcome {
        empirical_pf: detector.exceedance_rate(&base, Hypothesis::Idle, trials),
        empirical_pd: detector.exceedance_rate(&base, Hypothesis::Busy, trials),
        trials,
        samples_per_trial: samples,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistic_examples() {
        assert_eq!(test_statistic(&[0.0; 10]).unwrap(), 0.0);
        assert_eq!(test_statistic(&[1.5; 7]).unwrap(), 2.25);
        assert_eq!(test_statistic(&[3.0, 4.0]).unwrap(), 12.5);
        assert_eq!(test_statistic(&[Complex64::new(3.0, 4.0)]).unwrap(), 25.0);
        assert!(test_statistic::<f64>(&[]).is_err());
    }

    #[test]
    fn streams_are_distinct() {
        assert_ne!(
            stream_id(Hypothesis::Idle, 3),
            stream_id(Hypothesis::Busy, 3)
        );
        assert_ne!(
            stream_id(Hypothesis::Idle, 3),
            stream_id(Hypothesis::Idle, 4)
        );
    }

    #[test]
    fn deterministic_under_seed() {
        let p = SensingParams::new(0.1, 1.0, 1000.0, 1.0, 0.9).unwrap();
        let a = simulate_detection(&p, 0.05, 1.05, 2000, 7).unwrap();
        let b = simulate_detection(&p, 0.05, 1.05, 2000, 7).unwrap();
        assert_eq!(a, b);
        let c = simulate_detection(&p, 0.05, 1.05, 2000, 8).unwrap();
        assert_ne!(a, c);
        assert_eq!(a.samples_per_trial, 50);
    }

    #[test]
    fn rejects_bad_arguments() {
        let p = SensingParams::new(0.1, 1.0, 1000.0, 1.0, 0.9).unwrap();
        assert!(simulate_detection(&p, 0.05, 1.0, 0, 1).is_err());
        assert!(simulate_detection(&p, 1.0, 1.0, 10, 1).is_err());
        assert!(simulate_detection(&p, 1e-4, 1.0, 10, 1).is_err());
    }

    #[test]
    fn zero_snr_hypotheses_coincide() {
        let p = SensingParams::new(0.0, 1.0, 1000.0, 1.0, 0.9).unwrap();
        let trials = 20_000;
        for threshold in [0.9, 1.0, 1.1] {
            let out = simulate_detection(&p, 0.05, threshold, trials, 11).unwrap();
            let pf = out.empirical_pf.value();
            let pd = out.empirical_pd.value();
            let band = 4.0 * (pf * (1.0 - pf) / trials as f64).sqrt();
            assert!((pf - pd).abs() <= band, "{pf} vs {pd}");
        }
    }
}
