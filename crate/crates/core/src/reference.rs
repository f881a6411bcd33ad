//! Published Table 1 energies and the parameter panel used for cross-checks.
//!
//! Values are stored exactly as printed, including cells that disagree with
//! their degenerate partners; see [`duplicate_conflicts`].

use serde::Serialize;

use crate::bound::{Model, QuantumNumbers};
use crate::potential::{MassParams, PotentialParams};

/// Table 1 parameters with `S0 = 0`, which the caption leaves out.
pub const TABLE1_POTENTIAL: PotentialParams =
    PotentialParams { v0: 2.0, v1: 0.5, s0: 0.0, s1: 3.0, q: 1.0, alpha: 0.01 };
pub const TABLE1_MASS: MassParams = MassParams { m0: -5.0, m1: -0.2 };

pub fn table1_model() -> Model {
    Model::new(TABLE1_POTENTIAL, TABLE1_MASS)
}

pub const TABLE1_DIMENSIONS: [usize; 4] = [1, 2, 3, 4];

/// One printed row: fixed `(n, l)`, columns `D = 1..4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub l: usize,
    pub plus: [f64; 4],
    pub minus: [f64; 4],
}

#[rustfmt::skip]
pub const TABLE1: [TableRow; 15] = [
    TableRow { n: 0, l: 0, plus: [2.569172676, 2.569156234, 2.569172676, 2.569221997], minus: [-2.203041293, -2.203011271, -2.203041203, -2.203130998] },
    TableRow { n: 0, l: 1, plus: [2.569172676, 2.569221997, 2.569304187, 2.569419235], minus: [-2.203041203, -2.203130998, -2.203280640, -2.203490115] },
    TableRow { n: 0, l: 2, plus: [2.569304187, 2.569419235, 2.569567123, 2.569747824], minus: [-2.203280640, -2.203490115, -2.203759397, -2.204088452] },
    TableRow { n: 0, l: 3, plus: [2.569567123, 2.569747824, 2.569961309, 2.570207541], minus: [-2.203759397, -2.204088452, -2.204477240, -2.204925711] },
    TableRow { n: 0, l: 4, plus: [2.569961309, 2.570207541, 2.570486483, 2.570798087], minus: [-2.204477240, -2.204925711, -2.205433819, -2.206001495] },
    TableRow { n: 1, l: 0, plus: [2.5953363031, 2.595347227, 2.595363031, 2.595410441], minus: [-2.251003944, -2.250974832, -2.251003944, -2.251091282] },
    TableRow { n: 1, l: 1, plus: [2.595363031, 2.595410441, 2.595489446, 2.595600036], minus: [-2.251003944, -2.251091282, -2.251236828, -2.251440570] },
    TableRow { n: 1, l: 2, plus: [2.595489446, 2.595600036, 2.595742192, 2.595915893], minus: [-2.251236828, -2.251440570, -2.251702481, -2.252022535] },
    TableRow { n: 1, l: 3, plus: [2.595742192, 2.595915893, 2.596121109, 2.596357804], minus: [-2.251702481, -2.252022535, -2.252400688, -2.252836894] },
    TableRow { n: 1, l: 4, plus: [2.596121109, 2.596357804, 2.596625945, 2.596925485], minus: [-2.252400688, -2.252836894, -2.253331107, -2.253883264] },
    TableRow { n: 2, l: 0, plus: [2.620547699, 2.620532497, 2.620547699, 2.620593305], minus: [-2.297667736, -2.297639403, -2.297667736, -2.297752733] },
    TableRow { n: 2, l: 1, plus: [2.620547699, 2.620593305, 2.620669304, 2.620775688], minus: [-2.297667736, -2.297752733, -2.297894378, -2.2980922663] },
    TableRow { n: 2, l: 2, plus: [2.620669304, 2.620775688, 2.620912436, 2.621079530], minus: [-2.297894378, -2.298092663, -2.298347556, -2.298659035] },
    TableRow { n: 2, l: 3, plus: [2.620912436, 2.621079530, 2.621276940, 2.621504637], minus: [-2.298347556, -2.298659035, -2.299027058, -2.299451584] },
    TableRow { n: 2, l: 4, plus: [2.621276940, 2.621504637, 2.621762582, 2.622050736], minus: [-2.299027058, -2.299451584, -2.299932564, -2.300469940] },];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableEntry {
    pub qn: QuantumNumbers,
    pub plus: f64,
    pub minus: f64,
}

/// All 60 cells in row order.
pub fn table1_entries() -> Vec<TableEntry> {
    TABLE1
        .iter()
        .flat_map(|row| {
            TABLE1_DIMENSIONS.iter().enumerate().map(move |(j, &d)| TableEntry {
                qn: QuantumNumbers::new(row.n, row.l, d),
                plus: row.plus[j],
                minus: row.minus[j],
            })
        })
        .collect()
}

/// Two printed cells that share `n` and `D + 2l` (or `D + 2l = 2, 4`, where
/// the centrifugal constant coincides) but differ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DuplicateConflict {
    pub first: QuantumNumbers,
    pub second: QuantumNumbers,
    /// `true` for the positive-energy branch.
    pub upper: bool,
    pub first_value: f64,
    pub second_value: f64,
}

/// Cells whose centrifugal constant matches another cell but whose printed energies differ.
pub fn duplicate_conflicts() -> Vec<DuplicateConflict> {
    let entries = table1_entries();
    let mut out = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.qn.n != b.qn.n || a.qn.gamma() != b.qn.gamma() {
                continue;
            }
            for (upper, va, vb) in [(true, a.plus, b.plus), (false, a.minus, b.minus)] {
                if va != vb {
                    out.push(DuplicateConflict { first: a.qn, second: b.qn, upper, first_value: va, second_value: vb });
                }
            }
        }
    }
    out
}

/// A printed value judged to be a misprint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SuspectCell {
    pub qn: QuantumNumbers,
    pub upper: bool,
    pub printed: f64,
    /// Value printed for the degenerate partners.
    pub partner: f64,
}

fn extra_digits(v: f64) -> bool {
    (v * 1e9).round() / 1e9 != v
}

/// Cells outvoted by their degenerate partners, or printed with more than nine
/// decimals where a partner is not.
pub fn suspect_cells() -> Vec<SuspectCell> {
    let entries = table1_entries();
    let mut out = Vec::new();
    for e in &entries {
        for upper in [true, false] {
            let value = |x: &TableEntry| if upper { x.plus } else { x.minus };
            let v = value(e);
            let partners: Vec<f64> = entries
                .iter()
                .filter(|x| x.qn != e.qn && x.qn.n == e.qn.n && x.qn.gamma() == e.qn.gamma())
                .map(value)
                .collect();
            let Some(&other) = partners.iter().find(|&&p| p != v) else { continue };
            let agreeing = partners.iter().filter(|&&p| p == v).count();
            let disagreeing = partners.len() - agreeing;
            let outvoted = disagreeing > agreeing + 1;
            let tie_breaker = disagreeing == agreeing + 1 && extra_digits(v) && !extra_digits(other);
            if outvoted || tie_breaker {
                out.push(SuspectCell { qn: e.qn, upper, printed: v, partner: other });
            }
        }
    }
    out
}

/// Number of cell pairs the table prints twice.
pub fn duplicate_pairs() -> usize {
    let entries = table1_entries();
    let mut count = 0;
    for (i, a) in entries.iter().enumerate() {
        count += entries[i + 1..].iter().filter(|b| b.qn.n == a.qn.n && b.qn.gamma() == a.qn.gamma()).count();
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PanelPoint {
    pub model: Model,
    pub qn: QuantumNumbers,
}

/// Table 1 potential at `q in {1, 0.5}`, `alpha in {0.01, 0.1, 0.5}`, two
/// quantum-number sets each; every point has at least one bound level.
pub fn panel() -> Vec<PanelPoint> {
    const POINTS: [(f64, f64, [(usize, usize, usize); 2]); 6] = [
        (1.0, 0.01, [(0, 0, 3), (2, 1, 4)]),
        (1.0, 0.1, [(1, 0, 1), (0, 2, 3)]),
        (1.0, 0.5, [(0, 1, 4), (1, 0, 3)]),
        (0.5, 0.01, [(1, 1, 3), (0, 0, 4)]),
        (0.5, 0.1, [(2, 0, 3), (0, 1, 1)]),
        (0.5, 0.5, [(0, 0, 3), (2, 0, 4)]),
    ];
    POINTS
        .iter()
        .flat_map(|&(q, alpha, qns)| {
            let model = Model::new(PotentialParams { q, alpha, ..TABLE1_POTENTIAL }, TABLE1_MASS);
            qns.into_iter().map(move |(n, l, d)| PanelPoint { model, qn: QuantumNumbers::new(n, l, d) })
        })
        .collect()
}
