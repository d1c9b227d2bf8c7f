//! Recovering the rotation of a known tetrahedron from the orthogonal
//! projection of its vertices onto the xy-plane, and characterising when that
//! rotation is ambiguous.
//!
//! * [`geom`]: points, tetrahedra, projection quads, permutations, tolerances.
//! * [`rotation`]: unit quaternions, axis–angle and rotation matrices.
//! * [`config_space`]: the linear spaces of tetrahedra that a rotation maps
//!   onto the same projection, their dimensions and samplers.
//! * [`solver`]: labeled, geometric and unlabeled rotation recovery.
//! * [`instances`]: worked instances with known answers.

pub mod config_space;
pub mod error;
pub mod geom;
pub mod instances;
pub mod rotation;
pub mod solver;

pub use config_space::{
    build_config_matrix, config_dimension, minor_sigma_id, null_space_basis, numeric_rank,
    predicted_case, predicted_dimension, sample_tetrahedron, CaseCell, ConfigMatrix, LemmaCase,
    PermClass,
};
pub use error::{Error, Result};
pub use geom::{project, quad_match, recentre, Permutation4, ProjectionQuad, Tetrahedron, Tolerances, Vec2, Vec3};
pub use rotation::{
    apply, classify_rotation, matrix_to_quat, quat_from_axis_angle, quat_to_axis_angle, quat_to_matrix,
    AxisAngle, AxisClass, RotationClass, RotationMatrix, UnitQuaternion,
};
pub use solver::{
    circumcircle3, dedupe_rotations, fit_conic, labeled_solve, prune_permutations, reconstruct_geometric,
    unlabeled_solve, Circle3D, Conic, SolveCandidate,
};
