use std::fmt::Write;

use crate::optimize::ObjectiveOptimum;

/// Plain-text table of optimal sensing times, one row per objective.
pub fn format_optimize_table(rows: &[ObjectiveOptimum]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<22} {:<6} {:>12} {:>12} {:<15} {:>10} {:>12} {:>12} {:>12} {:<5}",
        "objective",
        "symbol",
        "tau_opt_s",
        "value_opt",
        "method",
        "iterations",
        "grid_tau_s",
        "delta_tau",
        "delta_value",
        "check"
    );
    for row in rows {
        let _ = writeln!(
            out,
            "{:<22} {:<6} {:>12.6} {:>12.6} {:<15} {:>10} {:>12.6} {:>12.3e} {:>12.3e} {:<5}",
            row.kind.to_string(),
            row.kind.symbol(),
            row.golden.tau_opt,
            row.golden.value_opt,
            row.golden.method.to_string(),
            row.golden.iterations,
            row.grid.tau_opt,
            row.delta_tau(),
            row.delta_value(),
            if row.agrees() { "ok" } else { "WARN" },
        );
    }
    out
}
