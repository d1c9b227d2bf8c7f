//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use nalgebra::Matrix3;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_geometric_instance, random_tetrahedron};
use tetraproj_core::config_space::sweep::sweep_all;
use tetraproj_core::config_space::{fourcycle_lambda_check, verify_fourcycle_relations};
use tetraproj_core::instances;
use tetraproj_core::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn lemma_tables() -> Outcome {
    let start = Instant::now();
    let reports = sweep_all(100, 0, &Tolerances::default());
    let elapsed = start.elapsed().as_secs_f64();
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} / {}: {} mismatches", r.class, r.cell.name(), r.mismatches))
        .collect();
    let summary = format!("{} cells x 100 rotations in {elapsed:.2}s", reports.len());
    if !failed.is_empty() {
        return Err(format!("{summary}; {}", failed.join("; ")));
    }
    if elapsed >= 10.0 {
        return Err(format!("{summary}; runtime target is 10s"));
    }
    Ok(summary)
}

fn four_cycle_example() -> Outcome {
    let ex = instances::four_cycle();
    let worst = (0..4)
        .map(|i| (apply(&ex.rotation, &ex.tetrahedron.vertex(i)) - ex.rotated[i]).amax())
        .fold(0.0, f64::max);
    if worst > 1e-12 {
        return Err(format!("rotated vertices off by {worst:e}"));
    }
    let sigma = Permutation4::from_one_based([2, 3, 4, 1]).unwrap();
    let sols = unlabeled_solve(&ex.tetrahedron, &ex.projection, &Tolerances::default()).map_err(|e| e.to_string())?;
    let err = sols
        .iter()
        .filter(|c| c.sigma == sigma)
        .map(|c| (c.matrix().into_inner() - ex.matrix).norm())
        .fold(f64::INFINITY, f64::min);
    if err <= 1e-10 {
        Ok(format!("vertex error {worst:.1e}, matrix error {err:.1e}, {} candidates", sols.len()))
    } else {
        Err(format!("no (2,3,4,1) candidate within 1e-10 (best {err:e})"))
    }
}

fn norm_pruning() -> Outcome {
    let (v, u) = instances::norm_prune();
    let kept = prune_permutations(&v, &u, Tolerances::default().geom_abs);
    if kept == vec![Permutation4::IDENTITY] {
        Ok("survivors {id}".into())
    } else {
        Err(format!("survivors {:?}", kept.iter().map(|s| s.to_string()).collect::<Vec<_>>()))
    }
}

fn planar_remark() -> Outcome {
    let ex = instances::planar();
    let swap = Permutation4::from_one_based([1, 3, 2, 4]).unwrap();
    let sols = unlabeled_solve(&ex.tetrahedron, &ex.projection, &Tolerances::default()).map_err(|e| e.to_string())?;
    let branch: Vec<Matrix3<f64>> = sols
        .iter()
        .filter(|c| c.sigma == swap)
        .map(|c| c.matrix().into_inner())
        .collect();
    let matched = ex
        .matrices
        .iter()
        .all(|m| branch.iter().filter(|b| (*b - m).norm() <= 1e-10).count() == 1);
    if branch.len() == 2 && matched {
        Ok("swap branch yields identity and diag(1,-1,-1)".into())
    } else {
        Err(format!("swap branch has {} matrices: {branch:?}", branch.len()))
    }
}

fn minor_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut stated, mut corrected) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let q = UnitQuaternion::random(&mut rng);
        let m = minor_sigma_id(&q);
        stated = stated.max((m - 8.0 * q.d().powi(6)).abs());
        corrected = corrected.max((m - 64.0 * q.d().powi(6)).abs());
    }
    let detail = format!("max |minor - 8d^6| = {stated:.3e}; max |minor - 64d^6| = {corrected:.3e}");
    if stated <= 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn labeled_uniqueness() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let t = random_tetrahedron(&mut rng);
        let q = UnitQuaternion::random(&mut rng);
        let u = project(&t.rotated(q.to_matrix().as_matrix()));
        let sols = labeled_solve(&t, &u, &tol).map_err(|e| e.to_string())?;
        if sols.len() != 1 {
            return Err(format!("instance {k}: {} candidates", sols.len()));
        }
        worst = worst.max(sols[0].matrix().distance(&q.to_matrix()));
    }
    if worst <= 1e-8 {
        Ok(format!("1000 unique solutions, max Frobenius error {worst:.1e}"))
    } else {
        Err(format!("max Frobenius error {worst:e}"))
    }
}

fn identity_samples_planar() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let q = loop {
            let q = UnitQuaternion::random(&mut rng);
            if !q.is_identity(1e-6) {
                break q;
            }
        };
        let t = sample_tetrahedron(&q, PermClass::Identity, k, &tol).map_err(|e| e.to_string())?;
        worst = worst.max(t.affine_determinant().abs() / t.scale().powi(3));
    }
    if worst <= 1e-9 {
        Ok(format!("max |det|/scale^3 = {worst:.1e}"))
    } else {
        Err(format!("max |det|/scale^3 = {worst:e}"))
    }
}

fn generic_uniqueness() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = 0;
    for _ in 0..10_000 {
        let t = random_tetrahedron(&mut rng);
        let sols = unlabeled_solve(&t, &project(&t), &tol).map_err(|e| e.to_string())?;
        let identity = RotationMatrix::from_matrix(Matrix3::identity(), 0.0).unwrap();
        if sols
            .iter()
            .any(|c| c.residual <= 1e-8 && c.matrix().distance(&identity) > tol.dedupe)
        {
            failures += 1;
        }
    }
    if failures == 0 {
        Ok("10000 instances, no non-identity rotation".into())
    } else {
        Err(format!("{failures} instances admit a non-identity rotation"))
    }
}

fn oracle_equivalence() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for k in 0..200 {
        let (t, q) = random_geometric_instance(&mut rng);
        let u = project(&t.rotated(q.to_matrix().as_matrix()));
        let lin = labeled_solve(&t, &u, &tol).map_err(|e| e.to_string())?;
        let geo = reconstruct_geometric(&t, &u, &tol).map_err(|e| format!("instance {k}: {e}"))?;
        if lin.len() != 1 || geo.len() != 1 {
            return Err(format!("instance {k}: {} linear vs {} geometric", lin.len(), geo.len()));
        }
        worst = worst.max(lin[0].matrix().distance(&geo[0].matrix()));
    }
    if worst <= 1e-6 {
        Ok(format!("200 instances, max disagreement {worst:.1e}"))
    } else {
        Err(format!("max disagreement {worst:e}"))
    }
}

fn four_cycle_relations() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let cells = [
        CaseCell::GenericOblique,
        CaseCell::ObliqueHalfTurn,
        CaseCell::HorizontalGeneric,
        CaseCell::VerticalQuarterTurn,
        CaseCell::VerticalHalfTurn,
    ];
    let mut lambda_checks = 0;
    for k in 0..100 {
        let cell = cells[k % cells.len()];
        let q = cell.sample_rotation(&mut rng);
        let t = sample_tetrahedron(&q, PermClass::FourCycle, k as u64, &tol).map_err(|e| e.to_string())?;
        if !verify_fourcycle_relations(&t, &q, 1e-8) {
            return Err(format!("sample {k} ({}) violates the midpoint relations", cell.name()));
        }
        if cell == CaseCell::GenericOblique {
            let check = fourcycle_lambda_check(&t, &q, tol.angle_abs).ok_or("lambda check undefined")?;
            if !check.holds(1e-8) {
                return Err(format!("sample {k}: lambda {} vs {}", check.lambda, check.predicted));
            }
            lambda_checks += 1;
        }
    }
    let ex = instances::four_cycle();
    if !verify_fourcycle_relations(&ex.tetrahedron, &ex.rotation, 1e-8) {
        return Err("worked example violates the midpoint relations".into());
    }
    Ok(format!("100 samples, {lambda_checks} lambda checks"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("C1 lemma dimension tables", lemma_tables),
        ("C2 four-cycle worked example", four_cycle_example),
        ("C3 norm pruning example", norm_pruning),
        ("C4 planar two-rotation example", planar_remark),
        ("C5 minor identity 8d^6", minor_identity),
        ("C6 labeled uniqueness", labeled_uniqueness),
        ("C7 identity-class samples are planar", identity_samples_planar),
        ("C8 generic tetrahedra are unambiguous", generic_uniqueness),
        ("C9 geometric vs linear reconstruction", oracle_equivalence),
        ("C10 four-cycle midpoint relations", four_cycle_relations),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
