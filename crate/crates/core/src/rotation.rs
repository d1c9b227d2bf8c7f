//! Unit quaternions, axis–angle pairs and 3x3 rotation matrices.
//!
//! Quaternions are kept in a canonical sign (`a ≥ 0`, and when `a = 0` the
//! first nonzero of `b, c, d` is positive) so that `q` and `-q`, which give
//! the same rotation, have a single representative. Angles live in `[0, π]`.

use std::f64::consts::PI;

use nalgebra::Matrix3;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::geom::Vec3;

/// Tolerance on `‖w‖ − 1` for axis inputs.
pub const AXIS_NORM_TOL: f64 = 1e-9;

/// A unit quaternion `a + bi + cj + dk` in canonical sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion {
    pub(crate) a: f64,
    pub(crate) b: f64,
    pub(crate) c: f64,
    pub(crate) d: f64,
}

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 0.0,
    };

    /// Normalises and canonicalises `(a, b, c, d)`.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let n = (a * a + b * b + c * c + d * d).sqrt();
        if !n.is_finite() {
            return Err(Error::NonFinite);
        }
        if n == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        Ok(Self::canonical(a / n, b / n, c / n, d / n))
    }

    pub fn from_array(q: [f64; 4]) -> Result<Self> {
        Self::new(q[0], q[1], q[2], q[3])
    }

    fn canonical(a: f64, b: f64, c: f64, d: f64) -> Self {
        let flip = if a != 0.0 {
            a < 0.0
        } else {
            [b, c, d].into_iter().find(|&x| x != 0.0).is_some_and(|x| x < 0.0)
        };
        let s = if flip { -1.0 } else { 1.0 };
        Self {
            a: s * a,
            b: s * b,
            c: s * c,
            d: s * d,
        }
    }

    /// Uniformly distributed rotation.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let v: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
            if v.iter().map(|x| x * x).sum::<f64>() > 1e-12 {
                return Self::canonical_normalised(v);
            }
        }
    }

    fn canonical_normalised(v: [f64; 4]) -> Self {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        Self::canonical(v[0] / n, v[1] / n, v[2] / n, v[3] / n)
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn to_matrix(&self) -> RotationMatrix {
        quat_to_matrix(self)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        quat_to_axis_angle(self).angle <= tol
    }
}

/// Rotation axis (unit vector) and angle in `[0, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle {
    pub axis: Vec3,
    pub angle: f64,
}

/// A proper orthogonal 3x3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix(Matrix3<f64>);

impl RotationMatrix {
    /// Accepts `m` if `‖mᵀm − I‖_max ≤ tol` and `|det m − 1| ≤ tol`.
    pub fn from_matrix(m: Matrix3<f64>, tol: f64) -> Result<Self> {
        if !m.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let err = orthonormality_error(&m);
        if err > tol {
            return Err(Error::NotRotation(err));
        }
        Ok(Self(m))
    }

    pub fn as_matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix3<f64> {
        self.0
    }

    /// Frobenius distance to another rotation.
    pub fn distance(&self, other: &RotationMatrix) -> f64 {
        (self.0 - other.0).norm()
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.0[(i, j)]))
    }
}

/// Largest of `‖mᵀm − I‖_max` and `|det m − 1|`.
pub fn orthonormality_error(m: &Matrix3<f64>) -> f64 {
    let gram = (m.transpose() * m - Matrix3::identity()).amax();
    gram.max((m.determinant() - 1.0).abs())
}

/// Whether the axis lies in the xy-plane, along the z-axis, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisClass {
    Horizontal,
    Vertical,
    Oblique,
    /// Only for the identity rotation.
    NoAxis,
}

impl AxisClass {
    pub fn name(&self) -> &'static str {
        match self {
            AxisClass::Horizontal => "horizontal",
            AxisClass::Vertical => "vertical",
            AxisClass::Oblique => "oblique",
            AxisClass::NoAxis => "none",
        }
    }
}

/// Axis class and angle of a rotation, with special-angle predicates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationClass {
    pub axis_class: AxisClass,
    pub axis: Vec3,
    pub angle: f64,
    pub tol: f64,
}

impl RotationClass {
    pub fn angle_is(&self, target: f64) -> bool {
        (self.angle - target).abs() <= self.tol
    }

    pub fn is_half_turn(&self) -> bool {
        self.angle_is(PI)
    }
}

pub fn quat_from_axis_angle(axis: &Vec3, angle: f64) -> Result<UnitQuaternion> {
    let n = axis.norm();
    if !n.is_finite() || !angle.is_finite() {
        return Err(Error::NonFinite);
    }
    if (n - 1.0).abs() > AXIS_NORM_TOL {
        return Err(Error::NonUnitAxis(n));
    }
    let (s, c) = (angle / 2.0).sin_cos();
    Ok(UnitQuaternion::canonical(c, axis.x * s, axis.y * s, axis.z * s))
}

/// The rotation matrix of a unit quaternion.
pub fn quat_to_matrix(q: &UnitQuaternion) -> RotationMatrix {
    let UnitQuaternion { a, b, c, d } = *q;
    RotationMatrix(Matrix3::new(
        a * a + b * b - c * c - d * d,
        2.0 * b * c - 2.0 * a * d,
        2.0 * b * d + 2.0 * a * c,
        2.0 * b * c + 2.0 * a * d,
        a * a - b * b + c * c - d * d,
        2.0 * c * d - 2.0 * a * b,
        2.0 * b * d - 2.0 * a * c,
        2.0 * c * d + 2.0 * a * b,
        a * a - b * b - c * c + d * d,
    ))
}

/// Axis and angle; the identity maps to axis `(0,0,1)` with angle 0.
pub fn quat_to_axis_angle(q: &UnitQuaternion) -> AxisAngle {
    let v = Vec3::new(q.b, q.c, q.d);
    let n = v.norm();
    if n == 0.0 {
        return AxisAngle {
            axis: Vec3::z(),
            angle: 0.0,
        };
    }
    AxisAngle {
        axis: v / n,
        angle: 2.0 * n.atan2(q.a),
    }
}

/// Quaternion of a rotation matrix, rejecting matrices that are not
/// rotations within `tol`.
pub fn matrix_to_quat(m: &Matrix3<f64>, tol: f64) -> Result<UnitQuaternion> {
    let r = RotationMatrix::from_matrix(*m, tol)?;
    Ok(matrix_to_quat_unchecked(r.as_matrix()))
}

/// Shepperd's extraction followed by normalisation. For a nearly orthonormal
/// input this returns the quaternion of a nearby rotation.
pub(crate) fn matrix_to_quat_unchecked(m: &Matrix3<f64>) -> UnitQuaternion {
    let tr = m.trace();
    let (a, b, c, d);
    if tr >= m[(0, 0)] && tr >= m[(1, 1)] && tr >= m[(2, 2)] {
        let s = 2.0 * (1.0 + tr).max(0.0).sqrt();
        a = 0.25 * s;
        b = (m[(2, 1)] - m[(1, 2)]) / s;
        c = (m[(0, 2)] - m[(2, 0)]) / s;
        d = (m[(1, 0)] - m[(0, 1)]) / s;
    } else if m[(0, 0)] >= m[(1, 1)] && m[(0, 0)] >= m[(2, 2)] {
        let s = 2.0 * (1.0 + m[(0, 0)] - m[(1, 1)] - m[(2, 2)]).max(0.0).sqrt();
        a = (m[(2, 1)] - m[(1, 2)]) / s;
        b = 0.25 * s;
        c = (m[(0, 1)] + m[(1, 0)]) / s;
        d = (m[(0, 2)] + m[(2, 0)]) / s;
    } else if m[(1, 1)] >= m[(2, 2)] {
        let s = 2.0 * (1.0 + m[(1, 1)] - m[(0, 0)] - m[(2, 2)]).max(0.0).sqrt();
        a = (m[(0, 2)] - m[(2, 0)]) / s;
        b = (m[(0, 1)] + m[(1, 0)]) / s;
        c = 0.25 * s;
        d = (m[(1, 2)] + m[(2, 1)]) / s;
    } else {
        let s = 2.0 * (1.0 + m[(2, 2)] - m[(0, 0)] - m[(1, 1)]).max(0.0).sqrt();
        a = (m[(1, 0)] - m[(0, 1)]) / s;
        b = (m[(0, 2)] + m[(2, 0)]) / s;
        c = (m[(1, 2)] + m[(2, 1)]) / s;
        d = 0.25 * s;
    }
    UnitQuaternion::new(a, b, c, d).unwrap_or(UnitQuaternion::IDENTITY)
}

pub fn classify_rotation(q: &UnitQuaternion, tol: f64) -> RotationClass {
    let AxisAngle { axis, angle } = quat_to_axis_angle(q);
    let axis_class = if angle <= tol {
        AxisClass::NoAxis
    } else if axis.z.abs() <= tol {
        AxisClass::Horizontal
    } else if axis.x.abs() <= tol && axis.y.abs() <= tol {
        AxisClass::Vertical
    } else {
        AxisClass::Oblique
    };
    RotationClass {
        axis_class,
        axis,
        angle,
        tol,
    }
}

/// Rotates a point.
pub fn apply(q: &UnitQuaternion, p: &Vec3) -> Vec3 {
    quat_to_matrix(q).0 * p
}
