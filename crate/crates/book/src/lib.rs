//! Compiles the guide's code blocks as doctests. mdbook cannot link against
//! workspace crates, so each chapter is included as a module doc instead.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/q-function.md")]
pub mod q_function {}
#[doc = include_str!("../../../book/src/energy-detection.md")]
pub mod energy_detection {}
#[doc = include_str!("../../../book/src/noma.md")]
pub mod noma {}
#[doc = include_str!("../../../book/src/throughput.md")]
pub mod throughput {}
#[doc = include_str!("../../../book/src/optimization.md")]
pub mod optimization {}
#[doc = include_str!("../../../book/src/monte-carlo.md")]
pub mod monte_carlo {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
