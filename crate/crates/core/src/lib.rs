//! Sensing-throughput analysis for NOMA cognitive-radio networks whose
//! secondary users harvest energy before they transmit.
//!
//! The crate evaluates energy-detector statistics, the NOMA sum throughput
//! with and without a primary user on the channel, and four throughput
//! objectives of the sensing time `τ`. Each objective can be maximized by
//! golden-section search and cross-checked against a brute-force grid.
//!
//! ```
//! use crnoma::{optimal_sensing_time, Method, ObjectiveKind, ScenarioConfig};
//!
//! let scenario = ScenarioConfig::reference();
//! let best = optimal_sensing_time(&scenario, ObjectiveKind::Obtainable, Method::GoldenSection, 20)?;
//! assert!(best.tau_opt > 0.0 && best.tau_opt < scenario.frame_duration());
//! # Ok::<(), crnoma::Error>(())
//! ```

pub mod app;
mod error;
pub mod noma;
pub mod optimize;
pub mod sensing;
pub mod statmath;
pub mod throughput;

pub use error::{Error, Result};
pub use noma::{HarvestModel, NomaNetwork, NomaUser};
pub use optimize::{optimal_sensing_time, optimize_all, ObjectiveOptimum, OptimizeOptions};
pub use sensing::{DetectionOutcome, SensingParams};
pub use statmath::{Bracket, Method, OptimizationResult, Probability, GOLDEN_RATIO};
pub use throughput::{ObjectiveKind, PowerPolicy, ScenarioConfig, ScenarioEvaluator, TrafficModel};
