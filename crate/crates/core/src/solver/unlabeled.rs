use super::{labeled_solve, SolveCandidate};
use crate::error::Result;
use crate::geom::{Permutation4, ProjectionQuad, Tetrahedron, Tolerances, Vec3};

/// Labelings compatible with the norm bound `‖u_σ(i)‖ ≤ ‖p_i‖`.
///
/// A rotation about the origin preserves norms and projection never
/// increases them, so any labeling that violates the bound by more than
/// `geom_abs` cannot be realised. The vertices are used exactly as given.
pub fn prune_permutations(vertices: &[Vec3; 4], u: &ProjectionQuad, geom_abs: f64) -> Vec<Permutation4> {
    let norms = vertices.map(|p| p.norm());
    Permutation4::all()
        .filter(|s| (0..4).all(|i| u.point(s.apply(i)).norm() <= norms[i] + geom_abs))
        .collect()
}

/// Merges candidates with the same labeling whose rotation matrices are
/// closer than `dedupe` in Frobenius norm, keeping the smaller residual.
pub fn dedupe_rotations(candidates: Vec<SolveCandidate>, dedupe: f64) -> Vec<SolveCandidate> {
    let mut out: Vec<SolveCandidate> = Vec::with_capacity(candidates.len());
    for c in candidates {
        let m = c.matrix();
        match out
            .iter_mut()
            .find(|k| k.sigma == c.sigma && k.matrix().distance(&m) < dedupe)
        {
            Some(kept) if c.residual < kept.residual => *kept = c,
            Some(_) => {}
            None => out.push(c),
        }
    }
    out
}

/// Every (labeling, rotation) pair that maps `t` onto the multiset `u`.
///
/// Labelings are visited in lexicographic order; at most one rotation per
/// labeling for a full-dimensional tetrahedron, so at most 24 in total.
pub fn unlabeled_solve(t: &Tetrahedron, u: &ProjectionQuad, tol: &Tolerances) -> Result<Vec<SolveCandidate>> {
    let mut out = Vec::new();
    for sigma in prune_permutations(t.vertices(), u, tol.geom_abs) {
        let relabeled = u.relabeled(&sigma);
        for mut c in labeled_solve(t, &relabeled, tol)? {
            c.sigma = sigma;
            out.push(c);
        }
    }
    Ok(dedupe_rotations(out, tol.dedupe))
}
