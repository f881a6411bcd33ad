use anyhow::{bail, Context, Result};
use kgspec::bound::{Model, QuantumNumbers};
use kgspec::oracle::{oracle_phase_shift, PhaseGrid};
use kgspec::par::{self, Execution};
use kgspec::scatter::{hulthen_case, scattering_state_with, woods_saxon_case, CaseResult, PhaseVariant};
use kgspec::Error;

use super::output_path;
use crate::config::{RunConfig, ScatterCase, ScatterConfig};
use crate::output::{fmt_g, opt, write_csv};
use crate::{Common, Outcome, Solver};

struct Row {
    qn: QuantumNumbers,
    e: f64,
    k: f64,
    delta_raw: f64,
    delta: f64,
    oracle: Option<f64>,
    norm: f64,
    dedicated: Option<CaseResult>,
}

fn model_for(s: &ScatterConfig, config: &RunConfig) -> Model {
    match s.case {
        ScatterCase::General => config.model(),
        ScatterCase::Hulthen => s.hulthen.expect("validated").to_model(),
        ScatterCase::WoodsSaxon => s.woods_saxon.expect("validated").to_hulthen().to_model(),
    }
}

fn row(s: &ScatterConfig, model: &Model, qn: &QuantumNumbers, e: f64, oracle: bool) -> Result<Row, Error> {
    let variant = PhaseVariant::from(s.variant);
    let state = scattering_state_with(e, qn, model, variant)?;
    let dedicated = match s.case {
        ScatterCase::General => None,
        ScatterCase::Hulthen => Some(hulthen_case(&s.hulthen.expect("validated"), e, qn, variant)?.dedicated),
        ScatterCase::WoodsSaxon => {
            Some(woods_saxon_case(&s.woods_saxon.expect("validated"), e, qn, variant)?.dedicated)
        }
    };
    let oracle = if oracle { Some(oracle_phase_shift(e, qn, model, &PhaseGrid::default())?.delta) } else { None };
    Ok(Row {
        qn: *qn,
        e,
        k: state.k,
        delta_raw: state.delta_raw,
        delta: state.delta,
        oracle,
        norm: state.norm,
        dedicated,
    })
}

pub fn run(config: &RunConfig, common: &Common) -> Result<Outcome> {
    let s = config.scatter.context("scatter needs a `scatter` block in the config")?;
    let model = model_for(&s, config);
    let qns = if config.quantum.is_empty() { vec![QuantumNumbers::new(0, 0, 3)] } else { config.quantum.clone() };
    let oracle = s.oracle || common.solver == Solver::Oracle;
    let jobs: Vec<(QuantumNumbers, f64)> =
        qns.iter().flat_map(|qn| s.energies.values().into_iter().map(move |e| (*qn, e))).collect();
    let results = par::map(&jobs, Execution::Parallel, |(qn, e)| row(&s, &model, qn, *e, oracle));

    let mut rows = Vec::new();
    let mut below = 0;
    for ((qn, e), r) in jobs.iter().zip(results) {
        match r {
            Ok(r) => rows.push(r),
            Err(Error::BelowThreshold { .. }) => below += 1,
            Err(err) => bail!("{qn:?} at E = {e}: {err}"),
        }
    }
    if rows.is_empty() {
        bail!("every requested energy is below the continuum threshold");
    }
    if below > 0 {
        eprintln!("scatter: skipped {below} energies below threshold");
    }

    let mut header = vec!["n", "l", "D", "E", "k", "delta_raw", "delta_reduced", "delta_oracle", "N"];
    if s.case != ScatterCase::General {
        header.extend(["delta_dedicated", "N_dedicated"]);
    }
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![
                r.qn.n.to_string(),
                r.qn.l.to_string(),
                r.qn.d.to_string(),
                fmt_g(r.e),
                fmt_g(r.k),
                fmt_g(r.delta_raw),
                fmt_g(r.delta),
                opt(r.oracle),
                fmt_g(r.norm),
            ];
            if let Some(d) = r.dedicated {
                v.extend([fmt_g(d.delta_raw), fmt_g(d.norm)]);
            }
            v
        })
        .collect();
    write_csv(output_path(config, common).as_deref(), &header, &table)?;
    Ok(Outcome::Success)
}
