//! Harvest-then-transmit power and uplink NOMA throughput under perfect SIC.

use crate::error::{check_non_negative, check_positive, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NomaUser {
    /// Power gain `h_n`.
    pub channel_gain: f64,
    /// Transmit power `P_n` (W).
    pub power: f64,
}

impl NomaUser {
    pub fn new(channel_gain: f64, power: f64) -> Result<Self> {
        check_positive("channel_gain", channel_gain)?;
        check_non_negative("power", power)?;
        Ok(NomaUser {
            channel_gain,
            power,
        })
    }
}

/// Secondary users in SIC decoding order, strongest channel first.
#[derive(Debug, Clone, PartialEq)]
pub struct NomaNetwork {
    users: Vec<NomaUser>,
    bandwidth: f64,
    noise_density: f64,
    pu_interference: f64,
}

impl NomaNetwork {
    /// Rejects empty user lists and gains that are not strictly descending.
    pub fn new(
        users: Vec<NomaUser>,
        bandwidth: f64,
        noise_density: f64,
        pu_interference: f64,
    ) -> Result<Self> {
        if users.is_empty() {
            return Err(Error::InvalidArgument(
                "a NOMA network needs at least one user".into(),
            ));
        }
        for user in &users {
            check_positive("channel_gain", user.channel_gain)?;
            check_non_negative("power", user.power)?;
        }
        for (i, pair) in users.windows(2).enumerate() {
            if pair[0].channel_gain <= pair[1].channel_gain {
                return Err(Error::UserOrder {
                    index: i + 1,
                    gain: pair[0].channel_gain,
                    next: i + 2,
                    next_gain: pair[1].channel_gain,
                });
            }
        }
        check_positive("bandwidth", bandwidth)?;
        check_positive("noise_density", noise_density)?;
        check_non_negative("pu_interference", pu_interference)?;
        Ok(NomaNetwork {
            users,
            bandwidth,
            noise_density,
            pu_interference,
        })
    }

    pub fn users(&self) -> &[NomaUser] {
        &self.users
    }

    pub fn len(&self) -> usize {
        self.users.len()
    }

    pub fn is_empty(&self) -> bool {
        self.users.is_empty()
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    pub fn noise_density(&self) -> f64 {
        self.noise_density
    }

    pub fn pu_interference(&self) -> f64 {
        self.pu_interference
    }

    /// Normalized channel condition `γ_n = h_n / (N_0·W)` of user `n` (1-based).
    pub fn normalized_gain(&self, n: usize) -> Result<f64> {
        self.check_index(n)?;
        Ok(self.normalized(&self.users[n - 1]))
    }

    /// Same network with every user transmitting at `power`.
    pub fn with_uniform_power(&self, power: f64) -> Result<Self> {
        check_non_negative("power", power)?;
        let mut network = self.clone();
        for user in &mut network.users {
            user.power = power;
        }
        Ok(network)
    }

    /// Same network with a different primary-user interference level.
    pub fn with_pu_interference(&self, pu_interference: f64) -> Result<Self> {
        check_non_negative("pu_interference", pu_interference)?;
        Ok(NomaNetwork {
            pu_interference,
            ..self.clone()
        })
    }

    fn normalized(&self, user: &NomaUser) -> f64 {
        user.channel_gain / (self.noise_density * self.bandwidth)
    }

    /// Received powers `P_n·γ_n` in decoding order.
    pub(crate) fn received_powers(&self) -> impl Iterator<Item = f64> + '_ {
        self.users.iter().map(|u| u.power * self.normalized(u))
    }

    /// `Σ P_j·γ_j`, the argument of the telescoped sum-rate.
    pub fn total_received_power(&self) -> f64 {
        self.received_powers().sum()
    }

    fn check_index(&self, n: usize) -> Result<()> {
        if n >= 1 && n <= self.users.len() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "user index {n} outside 1..={}",
                self.users.len()
            )))
        }
    }

    /// `W·Σ log₂(1 + P_nγ_n / (floor + Σ_{j>n} P_jγ_j))`, with every power
    /// replaced by `power` when one is given.
    fn sic_sum_rate(&self, floor: f64, power: Option<f64>) -> f64 {
        let mut residual = 0.0;
        let mut rate = 0.0;
        // walk from the last-decoded user so the interference sum accumulates
        for user in self.users.iter().rev() {
            let p = power.unwrap_or(user.power) * self.normalized(user);
            rate += (p / (floor + residual)).ln_1p();
            residual += p;
        }
        self.bandwidth * rate / std::f64::consts::LN_2
    }

    /// `(K_n, K_ns)` with every user transmitting at `power`, without
    /// building a new network.
    pub(crate) fn uniform_power_rates(&self, power: f64) -> (f64, f64) {
        (
            self.sic_sum_rate(1.0, Some(power)),
            self.sic_sum_rate(1.0 + self.pu_interference, Some(power)),
        )
    }
}

/// SINR of user `n` (1-based) after cancelling users `1..n`.
pub fn user_snr(network: &NomaNetwork, n: usize) -> Result<f64> {
    network.check_index(n)?;
    let received: Vec<f64> = network.received_powers().collect();
    let interference: f64 = received[n..].iter().sum();
    Ok(received[n - 1] / (1.0 + interference))
}

/// Sum throughput `K_n` while the primary user is idle.
pub fn throughput_pu_absent(network: &NomaNetwork) -> f64 {
    network.sic_sum_rate(1.0, None)
}

/// Sum throughput `K_ns` while the primary user transmits; its interference
/// adds to the unit noise floor of every user.
pub fn throughput_pu_present(network: &NomaNetwork) -> f64 {
    network.sic_sum_rate(1.0 + network.pu_interference, None)
}

/// Uplink power budget of the base station during harvesting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarvestModel {
    /// `P_bs` (W).
    pub bs_power: f64,
}

impl HarvestModel {
    pub fn new(bs_power: f64) -> Result<Self> {
        check_positive("bs_power", bs_power)?;
        Ok(HarvestModel { bs_power })
    }
}

/// Energy `τ·P_bs` collected during the downlink sub-slot.
pub fn harvested_energy(model: &HarvestModel, tau: f64) -> Result<f64> {
    check_non_negative("tau", tau)?;
    Ok(tau * model.bs_power)
}

/// Power `τ·P_bs / (T − τ)` available when the harvested energy is spent
/// over the uplink sub-slot.
pub fn uplink_transmit_power(model: &HarvestModel, tau: f64, frame_duration: f64) -> Result<f64> {
    check_non_negative("tau", tau)?;
    if tau >= frame_duration {
        return Err(Error::out_of_range("tau", tau, "[0, frame_duration)"));
    }
    Ok(tau * model.bs_power / (frame_duration - tau))
}
