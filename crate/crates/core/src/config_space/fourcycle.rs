//! Midpoint coordinates for the four-cycle class.
//!
//! With `n_i = (p_1 + p_i)/2` for `i = 2, 3, 4`, a member of the four-cycle
//! space satisfies `φ n_2 ≡ −n_4`, `φ n_3 ≡ −n_3` and `φ n_4 ≡ n_2`, where
//! `≡` means equal up to a vertical offset.

use std::f64::consts::PI;

use crate::geom::{Tetrahedron, Vec3};
use crate::rotation::{classify_rotation, quat_to_matrix, AxisClass, UnitQuaternion};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MidpointFrame {
    pub n2: Vec3,
    pub n3: Vec3,
    pub n4: Vec3,
}

impl MidpointFrame {
    /// Recovers the four vertices.
    pub fn vertices(&self) -> [Vec3; 4] {
        let MidpointFrame { n2, n3, n4 } = *self;
        [n2 + n3 + n4, n2 - n3 - n4, -n2 + n3 - n4, -n2 - n3 + n4]
    }
}

pub fn midpoint_frame(t: &Tetrahedron) -> MidpointFrame {
    let [p1, p2, p3, p4] = *t.vertices();
    MidpointFrame {
        n2: (p1 + p2 - p3 - p4) / 4.0,
        n3: (p1 - p2 + p3 - p4) / 4.0,
        n4: (p1 - p2 - p3 + p4) / 4.0,
    }
}

/// Checks the three midpoint relations on their horizontal components.
pub fn verify_fourcycle_relations(t: &Tetrahedron, q: &UnitQuaternion, tol: f64) -> bool {
    let r = quat_to_matrix(q).into_inner();
    let MidpointFrame { n2, n3, n4 } = midpoint_frame(t);
    [r * n2 + n4, r * n3 + n3, r * n4 - n2]
        .iter()
        .all(|v| v.xy().norm() <= tol)
}

/// Both sides of `‖π n_3‖ = ‖π c_3‖ tan(α/2)`, where `c_3` is the foot of
/// `n_3` on the rotation axis and `π` projects along `e_3` onto the plane
/// orthogonal to the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaCheck {
    pub lambda: f64,
    pub predicted: f64,
}

impl LambdaCheck {
    pub fn holds(&self, tol: f64) -> bool {
        (self.lambda - self.predicted).abs() <= tol
    }
}

/// Only defined for an oblique axis with `0 < α < π`.
pub fn fourcycle_lambda_check(t: &Tetrahedron, q: &UnitQuaternion, angle_tol: f64) -> Option<LambdaCheck> {
    let rc = classify_rotation(q, angle_tol);
    if rc.axis_class != AxisClass::Oblique || rc.angle_is(PI) {
        return None;
    }
    let u = rc.axis;
    let along_e3 = |x: Vec3| x - Vec3::z() * (x.dot(&u) / u.z);
    let n3 = midpoint_frame(t).n3;
    let c3 = u * n3.dot(&u);
    Some(LambdaCheck {
        lambda: along_e3(n3).norm(),
        predicted: along_e3(c3).norm() * (rc.angle / 2.0).tan(),
    })
}
