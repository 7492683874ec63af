//! Uniform `τ` sweeps written as CSV.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::optimize::sensing_bracket;
use crate::statmath::grid_point;
use crate::throughput::{ScenarioConfig, ScenarioEvaluator, ThroughputComponents};

pub const SWEEP_HEADER: &str = "tau,p_f,p_d,p_p,p_ip,k_n,k_ns,r0,r0p,r1,r1pip,r_th,r_thp";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub tau: f64,
    pub p_f: f64,
    pub p_d: f64,
    pub p_p: f64,
    pub p_ip: f64,
    pub k_n: f64,
    pub k_ns: f64,
    pub r0: f64,
    pub r0p: f64,
    pub r1: f64,
    pub r1pip: f64,
    pub r_th: f64,
    pub r_thp: f64,
}

impl From<ThroughputComponents> for SweepRow {
    fn from(c: ThroughputComponents) -> Self {
        let (r0, r0p, r1, r1pip) = (c.r0(), c.r0p(), c.r1(), c.r1pip());
        SweepRow {
            tau: c.tau,
            p_f: c.p_f.value(),
            p_d: c.p_d.value(),
            p_p: c.p_p.value(),
            p_ip: c.p_ip.value(),
            k_n: c.k_n,
            k_ns: c.k_ns,
            r0,
            r0p,
            r1,
            r1pip,
            r_th: r0 + r1,
            r_thp: r0p + r1pip,
        }
    }
}

impl SweepRow {
    pub fn fields(&self) -> [f64; 13] {
        [
            self.tau, self.p_f, self.p_d, self.p_p, self.p_ip, self.k_n, self.k_ns, self.r0,
            self.r0p, self.r1, self.r1pip, self.r_th, self.r_thp,
        ]
    }
}

/// Rows at `steps` evenly spaced sensing times spanning the inset bracket.
pub fn sweep_rows(scenario: &ScenarioConfig, steps: usize) -> Result<Vec<SweepRow>> {
    if steps < 2 {
        return Err(Error::InvalidArgument(format!(
            "a sweep needs at least 2 steps, got {steps}"
        )));
    }
    let evaluator = ScenarioEvaluator::new(scenario)?;
    let bracket = sensing_bracket(scenario.frame_duration())?;
    (0..steps)
        .map(|i| {
            evaluator
                .components(grid_point(bracket, steps, i))
                .map(SweepRow::from)
        })
        .collect()
}

/// Header plus one line per row; 17 significant digits, LF endings.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for row in rows {
        let line = row
            .fields()
            .iter()
            .map(|v| format!("{v:.16e}"))
            .collect::<Vec<_>>()
            .join(",");
        writeln!(out, "{line}")?;
    }
    out.flush()
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Model(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

/// Computes a sweep and writes it to `out`; returns the number of data rows.
pub fn run_sweep(scenario: &ScenarioConfig, steps: usize, out: &Path) -> Result<usize, SweepError> {
    let rows = sweep_rows(scenario, steps)?;
    let io_err = |source| SweepError::Io {
        path: out.display().to_string(),
        source,
    };
    let file = File::create(out).map_err(io_err)?;
    write_sweep_csv(&rows, BufWriter::new(file)).map_err(io_err)?;
    Ok(rows.len())
}
