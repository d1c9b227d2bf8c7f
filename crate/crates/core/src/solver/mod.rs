//! Rotation recovery from a projection quad.
//!
//! [`labeled_solve`] handles a known correspondence, [`reconstruct_geometric`]
//! is an independent circle/ellipse construction for the same problem, and
//! [`unlabeled_solve`] enumerates the labelings that survive norm pruning.

mod geometric;
mod labeled;
mod unlabeled;

use nalgebra::Matrix3;

use crate::geom::{Permutation4, ProjectionQuad, Tetrahedron};
use crate::rotation::{matrix_to_quat_unchecked, quat_to_matrix, RotationMatrix, UnitQuaternion};

pub use geometric::{circumcircle3, fit_conic, reconstruct_geometric, Circle3D, Conic, EllipseParams};
pub use labeled::{labeled_solve, ORTHO_TOL};
pub use unlabeled::{dedupe_rotations, prune_permutations, unlabeled_solve};

/// A rotation that maps the tetrahedron onto the projection under labeling `sigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveCandidate {
    pub sigma: Permutation4,
    pub rotation: UnitQuaternion,
    /// `max_i ‖π R p_i − u_σ(i)‖`.
    pub residual: f64,
    /// Set when the tetrahedron is planar, where a projection may admit two
    /// rotations related by a reflection in the xy-plane.
    pub planar_ambiguous: bool,
}

impl SolveCandidate {
    pub fn matrix(&self) -> RotationMatrix {
        quat_to_matrix(&self.rotation)
    }
}

/// Largest distance between the projected rotated vertices and their
/// assigned projection points.
pub fn projection_residual(t: &Tetrahedron, u: &ProjectionQuad, sigma: &Permutation4, r: &Matrix3<f64>) -> f64 {
    (0..4)
        .map(|i| ((r * t.vertex(i)).xy() - u.point(sigma.apply(i))).norm())
        .fold(0.0, f64::max)
}

fn candidate_from_matrix(
    t: &Tetrahedron,
    u: &ProjectionQuad,
    sigma: Permutation4,
    raw: &Matrix3<f64>,
    planar_ambiguous: bool,
) -> SolveCandidate {
    let rotation = matrix_to_quat_unchecked(raw);
    let residual = projection_residual(t, u, &sigma, quat_to_matrix(&rotation).as_matrix());
    SolveCandidate {
        sigma,
        rotation,
        residual,
        planar_ambiguous,
    }
}
