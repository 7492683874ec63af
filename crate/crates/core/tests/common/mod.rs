#![allow(dead_code)]

use crnoma::throughput::PowerPolicy;
use crnoma::{HarvestModel, NomaNetwork, NomaUser, ScenarioConfig, SensingParams, TrafficModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adaptive Simpson integration of `f` on `[a, b]` to absolute tolerance `eps`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn step(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * eps {
            left + right + delta / 15.0
        } else {
            step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1)
                + step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, eps, 50)
}

/// Gaussian tail by direct quadrature of the density. For negative `x` the
/// complement is integrated so the small side keeps full precision.
pub fn tail_by_quadrature(x: f64) -> f64 {
    let pdf = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let upper = |x: f64| {
        // past x + 12 the remaining mass is below e⁻⁷² of the total
        let end = x + 12.0;
        let mut total = 0.0;
        let mut lo = x;
        while lo < end {
            let hi = (lo + 0.5).min(end);
            // relative tolerance so far tails keep their precision
            total += adaptive_simpson(&pdf, lo, hi, 1e-14 * pdf(lo));
            lo = hi;
        }
        total
    };
    if x >= 0.0 {
        upper(x)
    } else {
        1.0 - upper(-x)
    }
}

/// Randomized scenario; `index` selects an independent draw from `seed`.
pub fn random_scenario(seed: u64, index: u64) -> ScenarioConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let frame = rng.random_range(0.5..2.0);
    let sensing = SensingParams::new(
        rng.random_range(0.01..0.3),
        rng.random_range(0.5..2.0),
        rng.random_range(200.0..2000.0),
        frame,
        rng.random_range(0.8..0.97),
    )
    .unwrap();
    let n = rng.random_range(1..=4);
    let mut gain = rng.random_range(0.5..2.0);
    let mut users = Vec::with_capacity(n);
    for _ in 0..n {
        users.push(NomaUser::new(gain, rng.random_range(0.1..2.0)).unwrap());
        gain *= rng.random_range(0.2..0.9);
    }
    let network = NomaNetwork::new(
        users,
        rng.random_range(0.5..2.0),
        rng.random_range(0.5..2.0),
        rng.random_range(0.0..1.0),
    )
    .unwrap();
    let power_policy = if rng.random_bool(0.5) {
        PowerPolicy::Explicit
    } else {
        PowerPolicy::UniformFromHarvest
    };
    ScenarioConfig {
        sensing,
        network,
        harvest: HarvestModel::new(rng.random_range(0.5..2.0)).unwrap(),
        traffic: TrafficModel::new(
            rng.random_range(0.3..0.9),
            rng.random_range(0.1..2.0),
            rng.random_range(0.1..2.0),
        )
        .unwrap(),
        power_policy,
    }
}
