use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the analytic kernels, the simulator and the optimizers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument or field violates its documented range.
    #[error("{name} = {value} is outside {bound}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        bound: &'static str,
    },

    #[error("sensing window shorter than one sample (tau = {tau} s, f_s = {sample_rate} Hz)")]
    SensingWindowTooShort { tau: f64, sample_rate: f64 },

    /// The objective returned NaN or an infinity.
    #[error("objective evaluated to {value} at tau = {tau}")]
    NonFiniteObjective { tau: f64, value: f64 },

    /// Channel gains must be listed in strictly descending order.
    #[error("users must satisfy h_1 > h_2 > … > h_n, but h_{index} = {gain} does not exceed h_{next} = {next_gain}")]
    UserOrder {
        index: usize,
        gain: f64,
        next: usize,
        next_gain: f64,
    },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: f64, bound: &'static str) -> Self {
        Error::OutOfRange { name, value, bound }
    }
}

/// Checks `lo < value < hi`.
pub(crate) fn check_open(
    name: &'static str,
    value: f64,
    lo: f64,
    hi: f64,
    bound: &'static str,
) -> Result<f64> {
    if value > lo && value < hi {
        Ok(value)
    } else {
        Err(Error::out_of_range(name, value, bound))
    }
}

/// Checks `value > 0` and finite.
pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<f64> {
    check_open(name, value, 0.0, f64::INFINITY, "(0, inf)")
}

/// Checks `value >= 0` and finite.
pub(crate) fn check_non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::out_of_range(name, value, "[0, inf)"))
    }
}
