use nalgebra::{Matrix3, Matrix4x2, Vector4};

use super::{candidate_from_matrix, dedupe_rotations, SolveCandidate};
use crate::error::{Error, Result};
use crate::geom::{Permutation4, ProjectionQuad, Tetrahedron, Tolerances, Vec3};

/// Tolerance on `‖r‖ − 1` and `r1·r2` when accepting recovered rows.
pub const ORTHO_TOL: f64 = 1e-7;

/// Recovers the rotations with `π R p_i = u_i` for every label `i`.
///
/// The first two rows `r1, r2` of `R` satisfy the linear equations
/// `r1·p_i = u_i.x` and `r2·p_i = u_i.y`. For a full-dimensional tetrahedron
/// they are determined by the first three vertices (the fourth equation
/// follows from the zero centroid) and at most one rotation results. For a
/// planar tetrahedron the rows are fixed only within the plane, and each is
/// completed along the plane normal so that the rows are orthonormal; this
/// yields one or two rotations.
///
/// Returns an empty list when no rotation reproduces `u` within
/// `tol.geom_abs`.
pub fn labeled_solve(t: &Tetrahedron, u: &ProjectionQuad, tol: &Tolerances) -> Result<Vec<SolveCandidate>> {
    let rank = t.rank(tol.rank_rel);
    let raw = match rank {
        3 => full_rank_rows(t, u)?.into_iter().collect::<Vec<_>>(),
        2 => planar_rows(t, u),
        _ => return Err(Error::DegenerateVertices),
    };
    let candidates = raw
        .iter()
        .map(|(r1, r2)| {
            let m = Matrix3::from_rows(&[r1.transpose(), r2.transpose(), r1.cross(r2).transpose()]);
            candidate_from_matrix(t, u, Permutation4::IDENTITY, &m, rank == 2)
        })
        .filter(|c| c.residual <= tol.geom_abs)
        .collect();
    Ok(dedupe_rotations(candidates, tol.dedupe))
}

fn orthonormal(r1: &Vec3, r2: &Vec3) -> bool {
    (r1.norm() - 1.0).abs() <= ORTHO_TOL && (r2.norm() - 1.0).abs() <= ORTHO_TOL && r1.dot(r2).abs() <= ORTHO_TOL
}

fn full_rank_rows(t: &Tetrahedron, u: &ProjectionQuad) -> Result<Option<(Vec3, Vec3)>> {
    let p = t.basis_matrix().transpose();
    let lu = p.lu();
    let rhs_x = Vec3::new(u.point(0).x, u.point(1).x, u.point(2).x);
    let rhs_y = Vec3::new(u.point(0).y, u.point(1).y, u.point(2).y);
    let (Some(r1), Some(r2)) = (lu.solve(&rhs_x), lu.solve(&rhs_y)) else {
        return Err(Error::NotFullDimensional);
    };
    Ok(orthonormal(&r1, &r2).then_some((r1, r2)))
}

fn planar_rows(t: &Tetrahedron, u: &ProjectionQuad) -> Vec<(Vec3, Vec3)> {
    let svd = t.basis_matrix().svd(true, false);
    let basis = svd.u.expect("requested U");
    // singular values are sorted, so the third column is the plane normal
    let (e1, e2, n) = (
        basis.column(0).into_owned(),
        basis.column(1).into_owned(),
        basis.column(2).into_owned(),
    );
    let coords = Matrix4x2::from_fn(|i, k| t.vertex(i).dot(if k == 0 { &e1 } else { &e2 }));
    let lsq = coords.svd(true, true);
    let solve = |rhs: Vector4<f64>| {
        lsq.solve(&rhs, 1e-14)
            .map(|c| e1 * c[0] + e2 * c[1])
            .unwrap_or_else(|_| Vec3::zeros())
    };
    let r1 = solve(Vector4::from_fn(|i, _| u.point(i).x));
    let r2 = solve(Vector4::from_fn(|i, _| u.point(i).y));

    let s2 = 1.0 - r1.norm_squared();
    let t2 = 1.0 - r2.norm_squared();
    if s2 < -2.0 * ORTHO_TOL || t2 < -2.0 * ORTHO_TOL {
        return Vec::new();
    }
    let (s0, t0) = (s2.max(0.0).sqrt(), t2.max(0.0).sqrt());
    let mut out: Vec<(f64, f64)> = Vec::new();
    for (s, t) in [(s0, t0), (s0, -t0), (-s0, t0), (-s0, -t0)] {
        let (a, b) = (r1 + n * s, r2 + n * t);
        if orthonormal(&a, &b) && !out.iter().any(|&(x, y)| x == s && y == t) {
            out.push((s, t));
        }
    }
    out.into_iter().map(|(s, t)| (r1 + n * s, r2 + n * t)).collect()
}
