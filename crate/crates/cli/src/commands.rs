//! Subcommand implementations. Each returns a serializable report and
//! whether the run succeeded; input problems are reported as `Err`.

use std::path::Path;

use nalgebra::Matrix3;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};
use tetraproj_core::config_space::sweep::{sweep_all, trial_rng};
use tetraproj_core::solver::projection_residual;
use tetraproj_core::*;

use crate::input::{load_projection, load_rotation, load_tetrahedron};

pub type Outcome = std::result::Result<(Value, bool), String>;

fn to_value<T: Serialize>(report: &T) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn rows(m: &Matrix3<f64>) -> [[f64; 3]; 3] {
    [0, 1, 2].map(|i| [m[(i, 0)], m[(i, 1)], m[(i, 2)]])
}

fn xyz(v: &Vec3) -> [f64; 3] {
    [v.x, v.y, v.z]
}

#[derive(Serialize)]
struct CandidateReport {
    sigma: String,
    quaternion: [f64; 4],
    matrix: [[f64; 3]; 3],
    residual: f64,
    planar_ambiguous: bool,
}

impl From<&SolveCandidate> for CandidateReport {
    fn from(c: &SolveCandidate) -> Self {
        CandidateReport {
            sigma: c.sigma.to_string(),
            quaternion: c.rotation.to_array(),
            matrix: c.matrix().rows(),
            residual: c.residual,
            planar_ambiguous: c.planar_ambiguous,
        }
    }
}

#[derive(Serialize)]
struct SolveReport {
    mode: &'static str,
    count: usize,
    candidates: Vec<CandidateReport>,
}

pub fn solve(tetrahedron: &Path, projection: &Path, labeled: bool, tol: &Tolerances) -> Outcome {
    let t = load_tetrahedron(tetrahedron)?;
    let u = load_projection(projection)?;
    let found = if labeled { labeled_solve(&t, &u, tol) } else { unlabeled_solve(&t, &u, tol) };
    let found = found.map_err(|e| format!("cannot solve: {e}"))?;
    let report = SolveReport {
        mode: if labeled { "labeled" } else { "unlabeled" },
        count: found.len(),
        candidates: found.iter().map(CandidateReport::from).collect(),
    };
    Ok((to_value(&report), !found.is_empty()))
}

#[derive(Serialize)]
struct AnalyzeReport {
    class: String,
    quaternion: [f64; 4],
    axis: [f64; 3],
    axis_class: &'static str,
    angle_rad: f64,
    rank: usize,
    computed_dim: usize,
    predicted_dim: usize,
    lemma_case: String,
    matches: bool,
}

pub fn analyze(rotation: &Path, class: PermClass, tol: &Tolerances) -> Outcome {
    let q = load_rotation(rotation)?;
    if q.is_identity(tol.angle_abs) {
        return Err("the rotation is the identity".into());
    }
    let rc = classify_rotation(&q, tol.angle_abs);
    let (predicted, case) =
        predicted_case(class, rc.axis_class, rc.angle, tol.angle_abs).map_err(|e| e.to_string())?;
    let rank = numeric_rank(&build_config_matrix(&q, class), tol.rank_rel);
    let report = AnalyzeReport {
        class: class.to_string(),
        quaternion: q.to_array(),
        axis: xyz(&rc.axis),
        axis_class: rc.axis_class.name(),
        angle_rad: rc.angle,
        rank,
        computed_dim: 9 - rank,
        predicted_dim: predicted,
        lemma_case: case.to_string(),
        matches: 9 - rank == predicted,
    };
    Ok((to_value(&report), report.matches))
}

#[derive(Serialize)]
struct SampleEntry {
    seed: u64,
    vertices: [[f64; 3]; 4],
    residual: f64,
    verified: bool,
}

#[derive(Serialize)]
struct SampleReport {
    class: String,
    quaternion: [f64; 4],
    dimension: usize,
    samples: Vec<SampleEntry>,
    all_verified: bool,
}

/// Sample `k` uses seed `seed + k`.
pub fn sample(rotation: &Path, class: PermClass, count: usize, seed: u64, tol: &Tolerances) -> Outcome {
    let q = load_rotation(rotation)?;
    let r = q.to_matrix().into_inner();
    let sigma = class.representative();
    let mut samples = Vec::with_capacity(count);
    for k in 0..count as u64 {
        let s = seed.wrapping_add(k);
        let t = sample_tetrahedron(&q, class, s, tol).map_err(|e| e.to_string())?;
        let residual = projection_residual(&t, &project(&t), &sigma, &r);
        samples.push(SampleEntry {
            seed: s,
            vertices: t.vertices().map(|v| xyz(&v)),
            residual,
            verified: residual <= tol.geom_abs,
        });
    }
    let report = SampleReport {
        class: class.to_string(),
        quaternion: q.to_array(),
        dimension: config_dimension(&q, class, tol).unwrap_or(9),
        all_verified: samples.iter().all(|s| s.verified),
        samples,
    };
    Ok((to_value(&report), report.all_verified))
}

#[derive(Serialize)]
struct CellEntry {
    class: String,
    cell: &'static str,
    predicted: Vec<usize>,
    computed: Vec<usize>,
    mismatches: usize,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    trials: usize,
    seed: u64,
    cells: Vec<CellEntry>,
    failed_cells: usize,
    passed: bool,
}

pub fn verify_lemmas(trials: usize, seed: u64, tol: &Tolerances) -> Outcome {
    let cells: Vec<CellEntry> = sweep_all(trials, seed, tol)
        .into_iter()
        .map(|r| CellEntry {
            class: r.class.to_string(),
            cell: r.cell.name(),
            passed: r.passed(),
            predicted: r.predicted,
            computed: r.computed,
            mismatches: r.mismatches,
        })
        .collect();
    let failed_cells = cells.iter().filter(|c| !c.passed).count();
    let report = VerifyReport { trials, seed, cells, failed_cells, passed: failed_cells == 0 };
    Ok((to_value(&report), report.passed))
}

pub const EXAMPLES: [&str; 4] = ["four-cycle", "norm-prune", "planar", "theorem"];

pub fn reproduce(name: &str, trials: usize, seed: u64, tol: &Tolerances) -> Outcome {
    match name {
        "four-cycle" => reproduce_four_cycle(tol),
        "norm-prune" => reproduce_norm_prune(tol),
        "planar" => reproduce_planar(tol),
        "theorem" => reproduce_theorem(trials, seed, tol),
        other => Err(format!("unknown example '{other}' (expected one of: {})", EXAMPLES.join(", "))),
    }
}

fn reproduce_four_cycle(tol: &Tolerances) -> Outcome {
    let ex = instances::four_cycle();
    let computed: Vec<Vec3> = ex.tetrahedron.vertices().iter().map(|p| apply(&ex.rotation, p)).collect();
    let vertex_error = computed
        .iter()
        .zip(&ex.rotated)
        .map(|(a, b)| (a - b).amax())
        .fold(0.0, f64::max);
    let sigma = Permutation4::from_one_based([2, 3, 4, 1]).expect("valid permutation");
    let found = unlabeled_solve(&ex.tetrahedron, &ex.projection, tol).map_err(|e| e.to_string())?;
    let matrix_error = found
        .iter()
        .filter(|c| c.sigma == sigma)
        .map(|c| (c.matrix().into_inner() - ex.matrix).norm())
        .fold(f64::INFINITY, f64::min);
    let ok = vertex_error <= 1e-12 && matrix_error <= 1e-10;
    let report = json!({
        "name": "four-cycle",
        "expected_rotated": ex.rotated.iter().map(xyz).collect::<Vec<_>>(),
        "computed_rotated": computed.iter().map(xyz).collect::<Vec<_>>(),
        "vertex_error": vertex_error,
        "expected_matrix": rows(&ex.matrix),
        "sigma": sigma.to_string(),
        "matrix_error": if matrix_error.is_finite() { json!(matrix_error) } else { Value::Null },
        "candidates": found.iter().map(CandidateReport::from).collect::<Vec<_>>(),
        "matches": ok,
    });
    Ok((report, ok))
}

fn reproduce_norm_prune(tol: &Tolerances) -> Outcome {
    let (vertices, u) = instances::norm_prune();
    let survivors: Vec<String> = prune_permutations(&vertices, &u, tol.geom_abs)
        .iter()
        .map(|s| s.to_string())
        .collect();
    let expected = vec![Permutation4::IDENTITY.to_string()];
    let ok = survivors == expected;
    let report = json!({
        "name": "norm-prune",
        "expected_survivors": expected,
        "computed_survivors": survivors,
        "matches": ok,
    });
    Ok((report, ok))
}

fn reproduce_planar(tol: &Tolerances) -> Outcome {
    let ex = instances::planar();
    let swap = Permutation4::from_one_based([1, 3, 2, 4]).expect("valid permutation");
    let found = unlabeled_solve(&ex.tetrahedron, &ex.projection, tol).map_err(|e| e.to_string())?;
    let branch: Vec<Matrix3<f64>> = found
        .iter()
        .filter(|c| c.sigma == swap)
        .map(|c| c.matrix().into_inner())
        .collect();
    let ok = branch.len() == 2
        && ex
            .matrices
            .iter()
            .all(|m| branch.iter().filter(|b| (*b - m).norm() <= 1e-10).count() == 1);
    let report = json!({
        "name": "planar",
        "sigma": swap.to_string(),
        "expected_matrices": ex.matrices.iter().map(rows).collect::<Vec<_>>(),
        "computed_matrices": branch.iter().map(rows).collect::<Vec<_>>(),
        "matches": ok,
    });
    Ok((report, ok))
}

fn random_tetrahedron(seed: u64, k: u64, rank_rel: f64) -> Tetrahedron {
    let mut rng = trial_rng(seed, k);
    loop {
        let v = [(); 4].map(|_| Vec3::from_fn(|_, _| rng.random_range(-1.0..1.0)));
        if let Ok(t) = recentre(v) {
            if t.is_full_dimensional(rank_rel.max(1e-3)) {
                return t;
            }
        }
    }
}

fn reproduce_theorem(trials: usize, seed: u64, tol: &Tolerances) -> Outcome {
    let max_dim = sweep_all(trials.min(20), seed, tol)
        .iter()
        .flat_map(|r| r.computed.iter().copied())
        .max()
        .unwrap_or(0);
    let identity = RotationMatrix::from_matrix(Matrix3::identity(), 0.0).expect("identity is a rotation");
    let mut ambiguous = 0;
    for k in 0..trials as u64 {
        let t = random_tetrahedron(seed, k, tol.rank_rel);
        let found = unlabeled_solve(&t, &project(&t), tol).map_err(|e| e.to_string())?;
        if found.iter().any(|c| c.matrix().distance(&identity) > tol.dedupe) {
            ambiguous += 1;
        }
    }
    let ok = max_dim <= 7 && ambiguous == 0;
    let report = json!({
        "name": "theorem",
        "expected_max_dimension": 7,
        "computed_max_dimension": max_dim,
        "random_tetrahedra": trials,
        "ambiguous": ambiguous,
        "matches": ok,
    });
    Ok((report, ok))
}
