//! Optimal sensing time for each throughput objective.

use crate::error::Result;
use crate::statmath::{
    golden_section_max, grid_max, grid_point, Bracket, Method, OptimizationResult,
};
use crate::throughput::{ObjectiveKind, ScenarioConfig, ScenarioEvaluator};

/// Iteration count of the reference golden-section loop.
pub const DEFAULT_GOLDEN_ITERATIONS: usize = 20;

/// Relative inset of the search bracket from both ends of the frame.
pub const BRACKET_INSET: f64 = 1e-6;

/// `[T·10⁻⁶, T − T·10⁻⁶]`; the objectives are undefined at the frame ends.
pub fn sensing_bracket(frame_duration: f64) -> Result<Bracket> {
    let eps = frame_duration * BRACKET_INSET;
    Bracket::new(eps, frame_duration - eps)
}

/// Maximizes one objective over the sensing bracket.
///
/// `iterations_or_points` is the golden-section iteration count or the number
/// of grid nodes, depending on `method`.
pub fn optimal_sensing_time(
    scenario: &ScenarioConfig,
    kind: ObjectiveKind,
    method: Method,
    iterations_or_points: usize,
) -> Result<OptimizationResult> {
    let evaluator = ScenarioEvaluator::new(scenario)?;
    let bracket = sensing_bracket(scenario.frame_duration())?;
    let objective = |tau: f64| evaluator.objective(kind, tau);
    match method {
        Method::GoldenSection => golden_section_max(objective, bracket, iterations_or_points),
        Method::Grid => grid_max(objective, bracket, iterations_or_points),
    }
}

/// Counts sign changes of the forward differences of `kind` over `points`
/// grid nodes. Differences within `1e-15` of the largest magnitude seen are
/// treated as flat and skipped.
pub fn difference_sign_changes(
    scenario: &ScenarioConfig,
    kind: ObjectiveKind,
    points: usize,
) -> Result<usize> {
    let evaluator = ScenarioEvaluator::new(scenario)?;
    let bracket = sensing_bracket(scenario.frame_duration())?;
    let values = (0..points)
        .map(|i| evaluator.objective(kind, grid_point(bracket, points, i)))
        .collect::<Result<Vec<f64>>>()?;
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let floor = 1e-15 * scale;
    let mut changes = 0;
    let mut last_sign = 0.0;
    for pair in values.windows(2) {
        let diff = pair[1] - pair[0];
        if diff.abs() <= floor {
            continue;
        }
        let sign = diff.signum();
        if last_sign != 0.0 && sign != last_sign {
            changes += 1;
        }
        last_sign = sign;
    }
    Ok(changes)
}

/// Precondition for trusting golden-section search on `kind`: the difference
/// sequence over a 10⁴-node grid changes sign exactly once.
pub fn passes_unimodality_check(scenario: &ScenarioConfig, kind: ObjectiveKind) -> Result<bool> {
    Ok(difference_sign_changes(scenario, kind, 10_000)? == 1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizeOptions {
    pub golden_iterations: usize,
    pub grid_points: usize,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        OptimizeOptions {
            golden_iterations: DEFAULT_GOLDEN_ITERATIONS,
            grid_points: 1_000_001,
        }
    }
}

/// Golden-section and grid answers for one objective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveOptimum {
    pub kind: ObjectiveKind,
    pub golden: OptimizationResult,
    pub grid: OptimizationResult,
}

impl ObjectiveOptimum {
    /// `τ*_golden − τ*_grid`.
    pub fn delta_tau(&self) -> f64 {
        self.golden.tau_opt - self.grid.tau_opt
    }

    /// `R*_golden − R*_grid`.
    pub fn delta_value(&self) -> f64 {
        self.golden.value_opt - self.grid.value_opt
    }

    /// False when the two methods land further apart than the golden bracket
    /// plus one grid step, which signals a non-unimodal objective.
    pub fn agrees(&self) -> bool {
        self.delta_tau().abs() <= self.golden.bracket_width + self.grid.bracket_width
    }
}

/// Optima of all four objectives, in [`ObjectiveKind::ALL`] order.
pub fn optimize_all(
    scenario: &ScenarioConfig,
    options: OptimizeOptions,
) -> Result<Vec<ObjectiveOptimum>> {
    ObjectiveKind::ALL
        .iter()
        .map(|&kind| {
            Ok(ObjectiveOptimum {
                kind,
                golden: optimal_sensing_time(
                    scenario,
                    kind,
                    Method::GoldenSection,
                    options.golden_iterations,
                )?,
                grid: optimal_sensing_time(scenario, kind, Method::Grid, options.grid_points)?,
            })
        })
        .collect()
}
