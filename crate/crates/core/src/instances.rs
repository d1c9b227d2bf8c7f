//! Worked instances with known answers, used by tests and the `reproduce`
//! command.

use std::f64::consts::FRAC_PI_3;

use nalgebra::Matrix3;

use crate::geom::{project, ProjectionQuad, Tetrahedron, Vec3};
use crate::rotation::{quat_from_axis_angle, UnitQuaternion};

/// A full-dimensional tetrahedron and a rotation by π/3 about
/// `(1/√2, 0, 1/√2)` that cycles its projected vertices: `π φ p_i = π p_{i+1}`.
pub struct FourCycleExample {
    pub tetrahedron: Tetrahedron,
    pub rotation: UnitQuaternion,
    pub matrix: Matrix3<f64>,
    pub rotated: [Vec3; 4],
    pub projection: ProjectionQuad,
}

pub fn four_cycle() -> FourCycleExample {
    let s = 6f64.sqrt();
    let r = (3.0f64 / 8.0).sqrt();
    let tetrahedron = Tetrahedron::from_arrays([
        [-2.0, -3.0 + s, 16.0 - 3.0 * s],
        [1.0, 3.0 - 4.0 * s, -19.0 + 3.0 * s],
        [2.0, -3.0 + 3.0 * s, 8.0 - 3.0 * s],
        [-1.0, 3.0, -5.0 + 3.0 * s],
    ])
    .expect("finite");
    let axis = Vec3::new(1.0, 0.0, 1.0) / 2f64.sqrt();
    FourCycleExample {
        projection: project(&tetrahedron),
        tetrahedron,
        rotation: quat_from_axis_angle(&axis, FRAC_PI_3).expect("unit axis"),
        matrix: Matrix3::new(0.75, -r, 0.25, r, 0.5, -r, 0.25, r, 0.75),
        rotated: [
            Vec3::new(1.0, 3.0 - 4.0 * s, 13.0 - 3.0 * s),
            Vec3::new(2.0, -3.0 + 3.0 * s, -20.0 + 3.0 * s),
            Vec3::new(-1.0, 3.0, 11.0 - 3.0 * s),
            Vec3::new(-2.0, -3.0 + s, -4.0 + 3.0 * s),
        ],
    }
}

/// Raw (not centred) vertices whose norms rule out every labeling but the
/// identity: squared norms 1, 2, 9, 24 against projected 1, 2, 5, 20.
pub fn norm_prune() -> ([Vec3; 4], ProjectionQuad) {
    let v = [
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(1.0, 1.0, 0.0),
        Vec3::new(2.0, 1.0, 2.0),
        Vec3::new(4.0, -2.0, -2.0),
    ];
    let u = ProjectionQuad::new(v.map(|p| p.xy())).expect("finite");
    (v, u)
}

/// A planar tetrahedron in the xz-plane whose second and third vertices
/// project to the same point. Its projection is reached by exactly two
/// rotations: the identity and the half-turn about the x-axis.
pub struct PlanarExample {
    pub tetrahedron: Tetrahedron,
    pub projection: ProjectionQuad,
    pub matrices: [Matrix3<f64>; 2],
}

pub fn planar() -> PlanarExample {
    let tetrahedron = Tetrahedron::from_arrays([
        [-1.0, 0.0, 1.0],
        [0.0, 0.0, 0.0],
        [0.0, 0.0, -2.0],
        [1.0, 0.0, 1.0],
    ])
    .expect("finite");
    PlanarExample {
        projection: project(&tetrahedron),
        tetrahedron,
        matrices: [
            Matrix3::identity(),
            Matrix3::from_diagonal(&Vec3::new(1.0, -1.0, -1.0)),
        ],
    }
}
