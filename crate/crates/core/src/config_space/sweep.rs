//! Sweeps of the dimension table over case cells with reproducible RNG
//! streams: trial `k` of cell `c` for class `s` always sees the same rotation
//! for a given seed, independent of evaluation order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{config_dimension, predicted_dimension, CaseCell, PermClass};
use crate::geom::Tolerances;
use crate::rotation::classify_rotation;

/// RNG for one trial, derived from the user seed and a stream index.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn stream_id(class: PermClass, cell: CaseCell, trial: usize) -> u64 {
    let c = PermClass::ALL.iter().position(|x| *x == class).unwrap_or(0) as u64;
    let k = CaseCell::ALL.iter().position(|x| *x == cell).unwrap_or(0) as u64;
    ((c * 16 + k) << 32) | trial as u64
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellReport {
    pub class: PermClass,
    pub cell: CaseCell,
    pub trials: usize,
    /// Sorted distinct predicted dimensions seen in the cell.
    pub predicted: Vec<usize>,
    /// Sorted distinct computed dimensions seen in the cell.
    pub computed: Vec<usize>,
    pub mismatches: usize,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

pub fn sweep_cell(class: PermClass, cell: CaseCell, trials: usize, seed: u64, tol: &Tolerances) -> CellReport {
    let mut predicted = Vec::new();
    let mut computed = Vec::new();
    let mut mismatches = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, stream_id(class, cell, trial));
        let q = cell.sample_rotation(&mut rng);
        let rc = classify_rotation(&q, tol.angle_abs);
        let want = predicted_dimension(class, rc.axis_class, rc.angle, tol.angle_abs);
        let got = config_dimension(&q, class, tol);
        match (want, got) {
            (Ok(w), Ok(g)) => {
                if w != g {
                    mismatches += 1;
                }
                predicted.push(w);
                computed.push(g);
            }
            _ => mismatches += 1,
        }
    }
    predicted.sort_unstable();
    predicted.dedup();
    computed.sort_unstable();
    computed.dedup();
    CellReport {
        class,
        cell,
        trials,
        predicted,
        computed,
        mismatches,
    }
}

/// Every class against every case cell.
pub fn sweep_all(trials: usize, seed: u64, tol: &Tolerances) -> Vec<CellReport> {
    PermClass::ALL
        .iter()
        .flat_map(|&class| CaseCell::ALL.iter().map(move |&cell| (class, cell)))
        .map(|(class, cell)| sweep_cell(class, cell, trials, seed, tol))
        .collect()
}
