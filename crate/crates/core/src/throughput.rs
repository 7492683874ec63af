//! Secondary-network throughput as a function of the sensing time `τ`.
//!
//! All objectives share the transmission fraction `(T − τ)/T`. The idle-side
//! term pairs `1 − p_f` with `P(H_0)` and the NOMA throughput `K_n`; the
//! busy-side term pairs `1 − p_d` with `P(H_1)` and `K_ns`. The
//! interference-weighted variants scale those terms by `1 − P_p` and
//! `1 − P_ip`, the probabilities that the primary user does not return
//! (idle side) or stays active (busy side) during the uplink sub-slot.

use std::fmt;

use crate::error::{check_positive, Error, Result};
use crate::noma::{
    throughput_pu_absent, throughput_pu_present, uplink_transmit_power, HarvestModel, NomaNetwork,
    NomaUser,
};
use crate::sensing::{pf_from_pd, pf_from_pd_inverse, SensingParams};
use crate::statmath::{q_inv, Probability};

/// Primary-user activity prior and exponential holding times.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrafficModel {
    p_h0: Probability,
    /// `α` (s), drives [`interference_prob_imperfect`].
    pub alpha: f64,
    /// `β` (s), drives [`interference_prob_perfect`].
    pub beta: f64,
}

impl TrafficModel {
    pub fn new(p_h0: f64, alpha: f64, beta: f64) -> Result<Self> {
        if !(p_h0 > 0.0 && p_h0 < 1.0) {
            return Err(Error::out_of_range("p_h0", p_h0, "(0, 1)"));
        }
        check_positive("alpha", alpha)?;
        check_positive("beta", beta)?;
        Ok(TrafficModel {
            p_h0: Probability::saturating(p_h0),
            alpha,
            beta,
        })
    }

    pub fn p_h0(&self) -> Probability {
        self.p_h0
    }

    /// Always `1 − P(H_0)`.
    pub fn p_h1(&self) -> Probability {
        self.p_h0.complement()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    /// `R_0`
    Obtainable,
    /// `R_0p`
    ObtainablePerfect,
    /// `R_th = R_0 + R_1`
    Standard,
    /// `R_thp = R_0p + R_1pip`
    StandardWithInterference,
}

impl ObjectiveKind {
    pub const ALL: [ObjectiveKind; 4] = [
        ObjectiveKind::Obtainable,
        ObjectiveKind::Standard,
        ObjectiveKind::ObtainablePerfect,
        ObjectiveKind::StandardWithInterference,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            ObjectiveKind::Obtainable => "R_0",
            ObjectiveKind::ObtainablePerfect => "R_0p",
            ObjectiveKind::Standard => "R_th",
            ObjectiveKind::StandardWithInterference => "R_thp",
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectiveKind::Obtainable => "obtainable",
            ObjectiveKind::ObtainablePerfect => "obtainable-perfect",
            ObjectiveKind::Standard => "standard",
            ObjectiveKind::StandardWithInterference => "standard-interference",
        })
    }
}

/// How per-user uplink powers are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PowerPolicy {
    /// Split the harvested uplink power `P_T(τ)` evenly across users.
    UniformFromHarvest,
    /// Use the powers stored in the network; `K_n`, `K_ns` do not depend on `τ`.
    #[default]
    Explicit,
}

/// Everything needed to evaluate the objectives at any `τ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub sensing: SensingParams,
    pub network: NomaNetwork,
    pub harvest: HarvestModel,
    pub traffic: TrafficModel,
    pub power_policy: PowerPolicy,
}

impl ScenarioConfig {
    pub fn frame_duration(&self) -> f64 {
        self.sensing.frame_duration
    }

    /// The shipped reference scenario. These are illustrative defaults, not
    /// measured values.
    pub fn reference() -> Self {
        let users = vec![
            NomaUser {
                channel_gain: 1.0,
                power: 1.0,
            },
            NomaUser {
                channel_gain: 0.5,
                power: 1.0,
            },
        ];
        ScenarioConfig {
            sensing: SensingParams::new(0.05, 1.0, 1000.0, 1.0, 0.9).expect("valid sensing"),
            network: NomaNetwork::new(users, 1.0, 1.0, 0.5).expect("valid network"),
            harvest: HarvestModel::new(1.0).expect("valid harvest"),
            traffic: TrafficModel::new(0.8, 0.5, 0.5).expect("valid traffic"),
            power_policy: PowerPolicy::Explicit,
        }
    }

    /// Network with the uplink powers in effect at sensing time `tau`.
    pub fn network_at(&self, tau: f64) -> Result<NomaNetwork> {
        match self.power_policy {
            PowerPolicy::Explicit => Ok(self.network.clone()),
            PowerPolicy::UniformFromHarvest => {
                let total = uplink_transmit_power(&self.harvest, tau, self.frame_duration())?;
                self.network
                    .with_uniform_power(total / self.network.len() as f64)
            }
        }
    }
}

fn check_tau_half_open(tau: f64, frame_duration: f64) -> Result<f64> {
    check_positive("frame_duration", frame_duration)?;
    if tau >= 0.0 && tau < frame_duration {
        Ok(frame_duration - tau)
    } else {
        Err(Error::out_of_range("tau", tau, "[0, frame_duration)"))
    }
}

/// `(1 − e^{−x})/x`, accurate for small `x`.
fn relative_expm1(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        -(-x).exp_m1() / x
    }
}

/// `P_p = 1 − (β/(T−τ))·(1 − e^{−(T−τ)/β})`.
pub fn interference_prob_perfect(tau: f64, frame_duration: f64, beta: f64) -> Result<Probability> {
    check_positive("beta", beta)?;
    let remaining = check_tau_half_open(tau, frame_duration)?;
    Ok(Probability::saturating(
        1.0 - relative_expm1(remaining / beta),
    ))
}

/// `P_ip = (α/(T−τ))·(1 − e^{−(T−τ)/α})`.
pub fn interference_prob_imperfect(
    tau: f64,
    frame_duration: f64,
    alpha: f64,
) -> Result<Probability> {
    check_positive("alpha", alpha)?;
    let remaining = check_tau_half_open(tau, frame_duration)?;
    Ok(Probability::saturating(relative_expm1(remaining / alpha)))
}

/// Every per-`τ` quantity the objectives are built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThroughputComponents {
    pub tau: f64,
    /// `(T − τ)/T`
    pub transmit_fraction: f64,
    pub p_f: Probability,
    pub p_d: Probability,
    pub p_p: Probability,
    pub p_ip: Probability,
    pub p_h0: Probability,
    pub k_n: f64,
    pub k_ns: f64,
}

impl ThroughputComponents {
    pub fn r0(&self) -> f64 {
        self.transmit_fraction * (1.0 - self.p_f.value()) * self.p_h0.value() * self.k_n
    }

    pub fn r0p(&self) -> f64 {
        self.r0() * (1.0 - self.p_p.value())
    }

    pub fn r1(&self) -> f64 {
        self.transmit_fraction * (1.0 - self.p_d.value()) * (1.0 - self.p_h0.value()) * self.k_ns
    }

    pub fn r1pip(&self) -> f64 {
        self.r1() * (1.0 - self.p_ip.value())
    }

    pub fn r_th(&self) -> f64 {
        self.r0() + self.r1()
    }

    pub fn r_thp(&self) -> f64 {
        self.r0p() + self.r1pip()
    }

    pub fn objective(&self, kind: ObjectiveKind) -> f64 {
        match kind {
            ObjectiveKind::Obtainable => self.r0(),
            ObjectiveKind::ObtainablePerfect => self.r0p(),
            ObjectiveKind::Standard => self.r_th(),
            ObjectiveKind::StandardWithInterference => self.r_thp(),
        }
    }
}

/// Evaluates a scenario repeatedly, caching the `τ`-independent terms.
#[derive(Debug, Clone)]
pub struct ScenarioEvaluator<'a> {
    scenario: &'a ScenarioConfig,
    q_inv_pd: f64,
    fixed_rates: Option<(f64, f64)>,
}

impl<'a> ScenarioEvaluator<'a> {
    pub fn new(scenario: &'a ScenarioConfig) -> Result<Self> {
        scenario.sensing.validate()?;
        let q_inv_pd = q_inv(scenario.sensing.target_pd)?;
        let fixed_rates = match scenario.power_policy {
            PowerPolicy::Explicit => Some((
                throughput_pu_absent(&scenario.network),
                throughput_pu_present(&scenario.network),
            )),
            PowerPolicy::UniformFromHarvest => None,
        };
        Ok(ScenarioEvaluator {
            scenario,
            q_inv_pd,
            fixed_rates,
        })
    }

    pub fn scenario(&self) -> &ScenarioConfig {
        self.scenario
    }

    /// Components at `tau ∈ (0, T)`.
    pub fn components(&self, tau: f64) -> Result<ThroughputComponents> {
        let s = self.scenario;
        let frame = s.frame_duration();
        if !(tau > 0.0 && tau < frame) {
            return Err(Error::out_of_range("tau", tau, "(0, frame_duration)"));
        }
        let (k_n, k_ns) = match self.fixed_rates {
            Some(rates) => rates,
            None => {
                let total = uplink_transmit_power(&s.harvest, tau, frame)?;
                s.network
                    .uniform_power_rates(total / s.network.len() as f64)
            }
        };
        let sensing = &s.sensing;
        Ok(ThroughputComponents {
            tau,
            transmit_fraction: (frame - tau) / frame,
            p_f: pf_from_pd_inverse(self.q_inv_pd, sensing.pu_snr, tau * sensing.sample_rate),
            p_d: sensing.target_pd,
            p_p: interference_prob_perfect(tau, frame, s.traffic.beta)?,
            p_ip: interference_prob_imperfect(tau, frame, s.traffic.alpha)?,
            p_h0: s.traffic.p_h0(),
            k_n,
            k_ns,
        })
    }

    pub fn objective(&self, kind: ObjectiveKind, tau: f64) -> Result<f64> {
        Ok(self.components(tau)?.objective(kind))
    }
}

/// Components at `tau` via the public closed forms, without caching.
pub fn components(tau: f64, scenario: &ScenarioConfig) -> Result<ThroughputComponents> {
    let sensing = &scenario.sensing;
    let frame = scenario.frame_duration();
    if !(tau > 0.0 && tau < frame) {
        return Err(Error::out_of_range("tau", tau, "(0, frame_duration)"));
    }
    let network = scenario.network_at(tau)?;
    Ok(ThroughputComponents {
        tau,
        transmit_fraction: (frame - tau) / frame,
        p_f: pf_from_pd(sensing.target_pd, sensing.pu_snr, tau, sensing.sample_rate)?,
        p_d: sensing.target_pd,
        p_p: interference_prob_perfect(tau, frame, scenario.traffic.beta)?,
        p_ip: interference_prob_imperfect(tau, frame, scenario.traffic.alpha)?,
        p_h0: scenario.traffic.p_h0(),
        k_n: throughput_pu_absent(&network),
        k_ns: throughput_pu_present(&network),
    })
}

/// Obtainable throughput `R_0(τ)`.
pub fn r0(tau: f64, scenario: &ScenarioConfig) -> Result<f64> {
    Ok(components(tau, scenario)?.r0())
}

/// `R_0(τ)` weighted by the chance `1 − P_p` that the primary user stays idle.
pub fn r0p(tau: f64, scenario: &ScenarioConfig) -> Result<f64> {
    Ok(components(tau, scenario)?.r0p())
}

/// Missed-detection throughput `R_1(τ)`.
pub fn r1(tau: f64, scenario: &ScenarioConfig) -> Result<f64> {
    Ok(components(tau, scenario)?.r1())
}

/// `R_1(τ)` weighted by `1 − P_ip`.
pub fn r1pip(tau: f64, scenario: &ScenarioConfig) -> Result<f64> {
    Ok(components(tau, scenario)?.r1pip())
}

pub fn objective_value(kind: ObjectiveKind, tau: f64, scenario: &ScenarioConfig) -> Result<f64> {
    Ok(components(tau, scenario)?.objective(kind))
}
