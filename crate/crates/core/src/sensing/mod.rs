//! Energy-detector analytics.
//!
//! Under the large-sample Gaussian approximation the test statistic is
//! distributed as `N(σ², σ⁴/M)` when the primary user is idle and as
//! `N((1+γ)σ², (1+2γ)σ⁴/M)` when it transmits. This is the convention of a
//! circularly symmetric complex noise and a constant-modulus primary signal,
//! and it is the only one under which the threshold maps
//! ([`pf_from_threshold`], [`pd_from_threshold`]) and the closed-form
//! `p_f ↔ p_d` maps ([`pf_from_pd`], [`pd_from_pf`]) describe the same
//! detector.

mod montecarlo;

pub use montecarlo::{simulate_detection, test_statistic, DetectionOutcome, SampleEnergy};

use crate::error::{check_non_negative, check_positive, Error, Result};
use crate::statmath::{gaussian_tail, q_inv, Probability};

/// Energy-detector configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensingParams {
    /// Linear primary-user SNR `γ = σ_s²/σ_u²`.
    pub pu_snr: f64,
    /// Noise variance `σ_u²` (W).
    pub noise_variance: f64,
    /// Sample rate `f_s` (Hz).
    pub sample_rate: f64,
    /// Frame duration `T` (s).
    pub frame_duration: f64,
    pub target_pd: Probability,
}

impl SensingParams {
    pub fn new(
        pu_snr: f64,
        noise_variance: f64,
        sample_rate: f64,
        frame_duration: f64,
        target_pd: f64,
    ) -> Result<Self> {
        let params = SensingParams {
            pu_snr,
            noise_variance,
            sample_rate,
            frame_duration,
            target_pd: Probability::named("target_pd", target_pd)?,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        check_non_negative("pu_snr", self.pu_snr)?;
        check_positive("noise_variance", self.noise_variance)?;
        check_positive("sample_rate", self.sample_rate)?;
        check_positive("frame_duration", self.frame_duration)?;
        if !self.target_pd.is_interior() {
            return Err(Error::out_of_range(
                "target_pd",
                self.target_pd.value(),
                "(0, 1)",
            ));
        }
        Ok(())
    }

    /// Signal variance `σ_s² = γ·σ_u²`.
    pub fn signal_variance(&self) -> f64 {
        self.pu_snr * self.noise_variance
    }

    fn check_tau(&self, tau: f64) -> Result<f64> {
        if tau > 0.0 && tau < self.frame_duration {
            Ok(tau)
        } else {
            Err(Error::out_of_range("tau", tau, "(0, frame_duration)"))
        }
    }
}

/// Number of samples `M = ⌊τ·f_s⌋` in a sensing window.
///
/// Products within a few ulps of an integer are taken as that integer, so
/// `0.29 s × 100 Hz` is 29 samples and not 28.
pub fn num_samples(tau: f64, sample_rate: f64) -> Result<usize> {
    check_positive("tau", tau)?;
    check_positive("sample_rate", sample_rate)?;
    let product = tau * sample_rate;
    let nearest = product.round();
    let m = if (product - nearest).abs() <= 8.0 * f64::EPSILON * nearest.max(1.0) {
        nearest
    } else {
        product.floor()
    };
    if m < 1.0 {
        return Err(Error::SensingWindowTooShort { tau, sample_rate });
    }
    Ok(m as usize)
}

/// False-alarm probability of the energy detector at threshold `Y_th`.
pub fn pf_from_threshold(threshold: f64, params: &SensingParams, tau: f64) -> Result<Probability> {
    params.check_tau(tau)?;
    let m = num_samples(tau, params.sample_rate)? as f64;
    let s2 = params.noise_variance;
    let z = (threshold - s2) / (s2 / m.sqrt());
    Ok(Probability::saturating(gaussian_tail(z)))
}

/// Detection probability of the energy detector at threshold `Y_th`.
pub fn pd_from_threshold(threshold: f64, params: &SensingParams, tau: f64) -> Result<Probability> {
    params.check_tau(tau)?;
    let m = num_samples(tau, params.sample_rate)? as f64;
    let s2 = params.noise_variance;
    let g = params.pu_snr;
    let z = (threshold - (1.0 + g) * s2) / (((1.0 + 2.0 * g) / m).sqrt() * s2);
    Ok(Probability::saturating(gaussian_tail(z)))
}

/// Threshold at which the detector meets `params.target_pd`.
pub fn threshold_from_pd(params: &SensingParams, tau: f64) -> Result<f64> {
    params.check_tau(tau)?;
    let m = num_samples(tau, params.sample_rate)? as f64;
    let s2 = params.noise_variance;
    let g = params.pu_snr;
    let x = q_inv(params.target_pd)?;
    Ok((1.0 + g) * s2 + ((1.0 + 2.0 * g) / m).sqrt() * s2 * x)
}

fn check_map_args(pu_snr: f64, tau: f64, sample_rate: f64) -> Result<()> {
    check_non_negative("pu_snr", pu_snr)?;
    check_positive("tau", tau)?;
    check_positive("sample_rate", sample_rate)?;
    Ok(())
}

/// `p_f = Q(√(1+2γ)·Q⁻¹(p_d) + γ·√(τ·f_s))`.
pub fn pf_from_pd(
    target_pd: Probability,
    pu_snr: f64,
    tau: f64,
    sample_rate: f64,
) -> Result<Probability> {
    check_map_args(pu_snr, tau, sample_rate)?;
    let x =
        q_inv(target_pd).map_err(|_| Error::out_of_range("p_d", target_pd.value(), "(0, 1)"))?;
    Ok(pf_from_pd_inverse(x, pu_snr, tau * sample_rate))
}

/// [`pf_from_pd`] with `Q⁻¹(p_d)` precomputed, for inner loops.
pub(crate) fn pf_from_pd_inverse(q_inv_pd: f64, pu_snr: f64, samples: f64) -> Probability {
    let z = (1.0 + 2.0 * pu_snr).sqrt() * q_inv_pd + pu_snr * samples.sqrt();
    Probability::saturating(gaussian_tail(z))
}

/// `p_d = Q((Q⁻¹(p_f) − γ·√(τ·f_s)) / √(1+2γ))`, the inverse of [`pf_from_pd`].
pub fn pd_from_pf(
    target_pf: Probability,
    pu_snr: f64,
    tau: f64,
    sample_rate: f64,
) -> Result<Probability> {
    check_map_args(pu_snr, tau, sample_rate)?;
    let x =
        q_inv(target_pf).map_err(|_| Error::out_of_range("p_f", target_pf.value(), "(0, 1)"))?;
    let z = (x - pu_snr * (tau * sample_rate).sqrt()) / (1.0 + 2.0 * pu_snr).sqrt();
    Ok(Probability::saturating(gaussian_tail(z)))
}
