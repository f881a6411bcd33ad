use anyhow::Result;
use kgspec::bound::QuantumNumbers;
use kgspec::par::{self, Execution};
use kgspec::reference::{suspect_cells, table1_entries, TableEntry};

use super::{branches, levels, output_path};
use crate::config::{Range, RunConfig};
use crate::output::{fmt_g, opt, write_csv};
use crate::{Common, Outcome, Solver};

const DEFAULT_TOL: f64 = 1e-5;

/// Reference entry the `S0` scan tries to hit.
const SCAN_CELL: QuantumNumbers = QuantumNumbers { n: 0, l: 0, d: 3 };
const DEFAULT_S0_SCAN: Range = Range { start: -10.0, stop: 10.0, samples: 401 };

pub fn run(config: &RunConfig, common: &Common) -> Result<Outcome> {
    let tol = common.tol.or(config.tolerance).unwrap_or(DEFAULT_TOL);
    let model = config.model();
    let window = config.search_window();
    let table = table1_entries();
    let entries: Vec<TableEntry> = if config.quantum.is_empty() {
        table
    } else {
        config
            .quantum
            .iter()
            .map(|qn| {
                table
                    .iter()
                    .find(|e| e.qn == *qn)
                    .copied()
                    .ok_or_else(|| anyhow::anyhow!("{qn:?} is not a Table 1 cell"))
            })
            .collect::<Result<_>>()?
    };

    let solved = par::map(&entries, Execution::Parallel, |e| -> Result<(Option<f64>, Option<f64>)> {
        branches(&levels(&e.qn, &model, &window, common.solver)?, &model)
    });

    let mut rows = Vec::with_capacity(entries.len());
    let mut misses = 0;
    let mut worst = 0.0f64;
    for (e, r) in entries.iter().zip(solved) {
        let (plus, minus) = r?;
        let err_plus = plus.map(|v| (v - e.plus).abs());
        let err_minus = minus.map(|v| (v - e.minus).abs());
        for err in [err_plus, err_minus] {
            match err {
                Some(x) if x < tol => {}
                Some(x) => {
                    misses += 1;
                    worst = worst.max(x);
                }
                None => {
                    misses += 1;
                    worst = f64::INFINITY;
                }
            }
        }
        rows.push(vec![
            e.qn.n.to_string(),
            e.qn.l.to_string(),
            e.qn.d.to_string(),
            opt(plus),
            opt(minus),
            fmt_g(e.plus),
            fmt_g(e.minus),
            opt(err_plus),
            opt(err_minus),
        ]);
    }
    write_csv(
        output_path(config, common).as_deref(),
        &["n", "l", "D", "E_plus", "E_minus", "E_plus_ref", "E_minus_ref", "abs_err_plus", "abs_err_minus"],
        &rows,
    )?;

    if misses == 0 {
        eprintln!("table1: all {} cells within {tol:e}", 2 * entries.len());
        return Ok(Outcome::Success);
    }
    eprintln!(
        "table1: {misses} of {} cells miss the printed value by more than {tol:e} (worst {})",
        2 * entries.len(),
        fmt_g(worst)
    );
    for s in suspect_cells() {
        eprintln!(
            "table1: printed {} for {:?} ({}) disagrees with its degenerate partners ({})",
            fmt_g(s.printed),
            s.qn,
            if s.upper { "E_plus" } else { "E_minus" },
            fmt_g(s.partner)
        );
    }
    if let Some(cell) = table_cell(&SCAN_CELL) {
        s0_report(config, &cell)?;
    }
    Ok(Outcome::CheckFailed)
}

fn table_cell(qn: &QuantumNumbers) -> Option<TableEntry> {
    table1_entries().into_iter().find(|e| e.qn == *qn)
}

/// Best `S0` for one cell, to show whether the unstated `S0` explains the misses.
/// Always analytic: the oracle would take minutes over the scan.
fn s0_report(config: &RunConfig, cell: &TableEntry) -> Result<()> {
    let range = config.table1.and_then(|t| t.s0_scan).unwrap_or(DEFAULT_S0_SCAN);
    let values = range.values();
    let base = config.model();
    let window = config.search_window();
    let errors = par::map(&values, Execution::Parallel, |&s0| {
        let mut model = base;
        model.potential.s0 = s0;
        let (plus, minus) = levels(&cell.qn, &model, &window, Solver::Analytic)
            .and_then(|e| branches(&e, &model))
            .unwrap_or((None, None));
        let ep = plus.map_or(f64::INFINITY, |v| (v - cell.plus).abs());
        let em = minus.map_or(f64::INFINITY, |v| (v - cell.minus).abs());
        (ep, em)
    });
    let best = |pick: fn(&(f64, f64)) -> f64| {
        values
            .iter()
            .zip(&errors)
            .map(|(s0, e)| (*s0, pick(e)))
            .fold((f64::NAN, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a })
    };
    let (s_plus, e_plus) = best(|e| e.0);
    let (s_minus, e_minus) = best(|e| e.1);
    let (s_both, e_both) = best(|e| e.0.max(e.1));
    eprintln!(
        "table1: S0 scan over [{}, {}] ({} samples) for {:?}:",
        fmt_g(range.start),
        fmt_g(range.stop),
        range.samples,
        cell.qn
    );
    eprintln!("table1:   E_plus  closest at S0 = {}, |error| {}", fmt_g(s_plus), fmt_g(e_plus));
    eprintln!("table1:   E_minus closest at S0 = {}, |error| {}", fmt_g(s_minus), fmt_g(e_minus));
    eprintln!("table1:   both    closest at S0 = {}, max |error| {}", fmt_g(s_both), fmt_g(e_both));
    Ok(())
}
