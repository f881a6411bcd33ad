use anyhow::{Context, Result};
use kgspec::bound::QuantumNumbers;
use kgspec::par::{self, Execution};

use super::{branches, levels, output_path};
use crate::config::RunConfig;
use crate::output::{fmt_g, opt, write_csv};
use crate::{Common, Outcome};

pub fn run(config: &RunConfig, common: &Common) -> Result<Outcome> {
    let sweep = config.sweep.context("sweep needs a `sweep` block in the config")?;
    let qns = if config.quantum.is_empty() { vec![QuantumNumbers::new(0, 0, 3)] } else { config.quantum.clone() };
    let base = config.model();
    let window = config.search_window();
    let jobs: Vec<(f64, QuantumNumbers)> =
        sweep.range.values().into_iter().flat_map(|v| qns.iter().map(move |qn| (v, *qn))).collect();

    let results = par::map(&jobs, Execution::Parallel, |(value, qn)| {
        let model = sweep.variable.apply(&base, *value);
        model.validate()?;
        branches(&levels(qn, &model, &window, common.solver)?, &model)
    });

    let mut rows = Vec::with_capacity(jobs.len());
    for ((value, qn), r) in jobs.iter().zip(results) {
        let (plus, minus, found) = match r {
            Ok((p, m)) => {
                let found = match (p, m) {
                    (Some(_), Some(_)) => "both",
                    (Some(_), None) => "upper",
                    (None, Some(_)) => "lower",
                    (None, None) => "none",
                };
                (p, m, found)
            }
            Err(e) => {
                eprintln!("sweep: {}={} {qn:?}: {e}", sweep.variable.name(), fmt_g(*value));
                (None, None, "error")
            }
        };
        rows.push(vec![
            fmt_g(*value),
            qn.n.to_string(),
            qn.l.to_string(),
            qn.d.to_string(),
            opt(plus),
            opt(minus),
            found.to_string(),
        ]);
    }
    let name = sweep.variable.name();
    write_csv(output_path(config, common).as_deref(), &[name, "n", "l", "D", "E_plus", "E_minus", "found"], &rows)?;
    Ok(Outcome::Success)
}
