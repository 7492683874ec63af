//! Scalar probability kernels and univariate maximizers.
//!
//! The Gaussian tail function `Q(x)` and its inverse feed every detection
//! formula in the crate. The two maximizers share one result type so that a
//! golden-section answer can be checked directly against the brute-force grid.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use crate::error::{Error, Result};

/// The golden-section contraction factor `(√5 − 1)/2`.
pub const GOLDEN_RATIO: f64 = 0.618_033_988_749_894_9;

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub const ZERO: Probability = Probability(0.0);
    pub const ONE: Probability = Probability(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::out_of_range("probability", value, "[0, 1]"))
        }
    }

    /// Like [`Probability::new`] but reports `name` in the error.
    pub fn named(name: &'static str, value: f64) -> Result<Self> {
        Probability::new(value).map_err(|_| Error::out_of_range(name, value, "[0, 1]"))
    }

    /// Clamps a computed value into `[0, 1]`. NaN is a bug in the caller.
    pub(crate) fn saturating(value: f64) -> Self {
        debug_assert!(!value.is_nan());
        Probability(value.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn complement(self) -> Probability {
        Probability(1.0 - self.0)
    }

    /// True when `0 < p < 1`.
    pub fn is_interior(self) -> bool {
        self.0 > 0.0 && self.0 < 1.0
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Standard normal density.
pub fn gaussian_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Unchecked Gaussian tail `Q(x) = ½·erfc(x/√2)`; NaN in, NaN out.
pub fn gaussian_tail(x: f64) -> f64 {
    0.5 * libm::erfc(x * FRAC_1_SQRT_2)
}

/// Complementary distribution function of the standard Gaussian.
pub fn q(x: f64) -> Result<Probability> {
    if !x.is_finite() {
        return Err(Error::out_of_range("x", x, "finite reals"));
    }
    Ok(Probability::saturating(gaussian_tail(x)))
}

/// Inverse of [`q`] on the open interval `(0, 1)`.
///
/// Upper-half probabilities are reflected (`Q⁻¹(p) = −Q⁻¹(1 − p)`, exact in
/// floating point for `p ≥ ½`) so the root search always runs on the tail,
/// where `Q` keeps full relative precision.
pub fn q_inv(p: Probability) -> Result<f64> {
    let p = p.value();
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::out_of_range("p", p, "(0, 1)"));
    }
    Ok(if p == 0.5 {
        0.0
    } else if p > 0.5 {
        -tail_inv(1.0 - p)
    } else {
        tail_inv(p)
    })
}

/// Solves `Q(x) = p` for `0 < p ≤ ½`, so `x ≥ 0`.
fn tail_inv(p: f64) -> f64 {
    // Q(38.5) is below the smallest subnormal, so the root lies in [0, 40].
    let (mut lo, mut hi) = (0.0_f64, 40.0_f64);
    while hi - lo > 1e-2 {
        let mid = 0.5 * (lo + hi);
        if gaussian_tail(mid) > p {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Newton on ln Q(x) = ln p; ln Q is concave so the iterates approach the root
    // monotonically after the first step.
    let target = p.ln();
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let tail = gaussian_tail(x);
        let density = gaussian_pdf(x);
        if tail <= 0.0 || density <= 0.0 {
            break;
        }
        let step = (tail.ln() - target) * tail / density;
        let next = (x + step).clamp(lo, hi);
        let moved = (next - x).abs();
        x = next;
        if moved <= 4.0 * f64::EPSILON * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// Search interval for the maximizers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    low: f64,
    high: f64,
}

impl Bracket {
    pub fn new(low: f64, high: f64) -> Result<Self> {
        if low.is_finite() && high.is_finite() && low < high {
            Ok(Bracket { low, high })
        } else {
            Err(Error::InvalidArgument(format!(
                "bracket requires finite low < high, got [{low}, {high}]"
            )))
        }
    }

    pub fn low(&self) -> f64 {
        self.low
    }

    pub fn high(&self) -> f64 {
        self.high
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }

    pub fn golden_ratio(&self) -> f64 {
        GOLDEN_RATIO
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.low && x <= self.high
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    GoldenSection,
    Grid,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::GoldenSection => "golden-section",
            Method::Grid => "grid",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    pub tau_opt: f64,
    pub value_opt: f64,
    /// Golden-section iterations, or grid points evaluated.
    pub iterations: usize,
    /// Final bracket width (golden section) or grid spacing.
    pub bracket_width: f64,
    pub method: Method,
}

fn evaluate<F>(f: &mut F, tau: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let value = f(tau)?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteObjective { tau, value })
    }
}

/// Golden-section maximization of a unimodal objective.
///
/// Interior points sit at `low + (1−g)·w` and `low + g·w` for the current
/// width `w`. Each iteration discards the side whose interior value is
/// smaller, reuses the surviving interior point and evaluates one new one,
/// so the width after `k` iterations is exactly `g^k·(high − low)`. Ties
/// keep the left part of the bracket. The answer is the upper end of the
/// final bracket and its objective value.
pub fn golden_section_max<F>(
    mut f: F,
    bracket: Bracket,
    iterations: usize,
) -> Result<OptimizationResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if iterations == 0 {
        return Err(Error::InvalidArgument(
            "golden-section search needs at least one iteration".into(),
        ));
    }
    let g = GOLDEN_RATIO;
    let mut low = bracket.low;
    let mut width = bracket.width();

    let mut lower = low + (1.0 - g) * width;
    let mut upper = low + g * width;
    let mut f_lower = evaluate(&mut f, lower)?;
    let mut f_upper = evaluate(&mut f, upper)?;

    for _ in 0..iterations {
        width *= g;
        if f_lower >= f_upper {
            upper = lower;
            f_upper = f_lower;
            lower = low + (1.0 - g) * width;
            f_lower = evaluate(&mut f, lower)?;
        } else {
            low = lower;
            lower = upper;
            f_lower = f_upper;
            upper = low + g * width;
            f_upper = evaluate(&mut f, upper)?;
        }
    }

    let tau_opt = (low + width).min(bracket.high);
    let value_opt = evaluate(&mut f, tau_opt)?;
    Ok(OptimizationResult {
        tau_opt,
        value_opt,
        iterations,
        bracket_width: width,
        method: Method::GoldenSection,
    })
}

/// Abscissa `i` of an evenly spaced grid with `points` nodes on `bracket`.
pub fn grid_point(bracket: Bracket, points: usize, i: usize) -> f64 {
    if i + 1 == points {
        bracket.high
    } else {
        bracket.low + bracket.width() * (i as f64) / ((points - 1) as f64)
    }
}

/// Brute-force maximization over `points` evenly spaced abscissae including
/// both endpoints. Ties go to the smaller abscissa.
pub fn grid_max<F>(mut f: F, bracket: Bracket, points: usize) -> Result<OptimizationResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if points < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid search needs at least 2 points, got {points}"
        )));
    }
    let mut best = (bracket.low, f64::NEG_INFINITY);
    for i in 0..points {
        let tau = grid_point(bracket, points, i);
        let value = evaluate(&mut f, tau)?;
        if value > best.1 {
            best = (tau, value);
        }
    }
    Ok(OptimizationResult {
        tau_opt: best.0,
        value_opt: best.1,
        iterations: points,
        bracket_width: bracket.width() / ((points - 1) as f64),
        method: Method::Grid,
    })
}
