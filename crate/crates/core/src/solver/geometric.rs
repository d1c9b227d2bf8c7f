//! Labeled reconstruction through the projected circumcircle.
//!
//! The circle through `p1, p2, p3` projects to an ellipse whose semi-major
//! axis equals the circle radius. Three points of that ellipse are the given
//! projections; three more come from the second intersections of the medians
//! with the circle, whose projections follow from ratios along the projected
//! medians (orthogonal projection preserves ratios on a line). The ellipse
//! then fixes the tilt of the rotated circle up to a reflection in the
//! xy-plane; the fourth vertex and orientation pick the right one.

use nalgebra::{DMatrix, Matrix2, Matrix3, Vector2};

use super::{candidate_from_matrix, dedupe_rotations, SolveCandidate};
use crate::error::{Error, Result};
use crate::geom::{Permutation4, ProjectionQuad, Tetrahedron, Tolerances, Vec2, Vec3};
use crate::rotation::orthonormality_error;

/// A circle in space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle3D {
    pub center: Vec3,
    pub radius: f64,
    pub normal: Vec3,
}

/// Circle through three non-collinear points. The normal follows the
/// right-hand rule on `(p, q, r)`.
pub fn circumcircle3(p: &Vec3, q: &Vec3, r: &Vec3) -> Result<Circle3D> {
    let a = p - r;
    let b = q - r;
    let axb = a.cross(&b);
    let area2 = axb.norm_squared();
    if area2.is_nan() || area2 <= (1e-12 * a.norm() * b.norm()).powi(2) {
        return Err(Error::Collinear);
    }
    let center = r + (b * a.norm_squared() - a * b.norm_squared()).cross(&axb) / (2.0 * area2);
    Ok(Circle3D {
        center,
        radius: (p - center).norm(),
        normal: axb / area2.sqrt(),
    })
}

/// Conic `A x² + B xy + C y² + D x + E y + F = 0` with unit coefficient norm
/// and its first nonzero coefficient positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic {
    pub coeffs: [f64; 6],
}

/// Centre, semi-axes and minor-axis direction of an ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseParams {
    pub center: Vec2,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub minor_dir: Vec2,
}

impl Conic {
    fn normalised(c: [f64; 6]) -> Self {
        let n = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        let sign = c.iter().find(|x| **x != 0.0).map_or(1.0, |x| x.signum());
        Self {
            coeffs: c.map(|x| sign * x / n),
        }
    }

    pub fn evaluate(&self, p: &Vec2) -> f64 {
        let [a, b, c, d, e, f] = self.coeffs;
        a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f
    }

    /// `B² − 4AC`; negative for an ellipse.
    pub fn discriminant(&self) -> f64 {
        let [a, b, c, ..] = self.coeffs;
        b * b - 4.0 * a * c
    }

    pub fn is_ellipse(&self) -> bool {
        self.discriminant() < 0.0
    }

    /// Geometric parameters of a real, non-degenerate ellipse.
    pub fn ellipse(&self) -> Option<EllipseParams> {
        if !self.is_ellipse() {
            return None;
        }
        let [a, b, c, d, e, f] = self.coeffs;
        let q = Matrix2::new(a, b / 2.0, b / 2.0, c);
        let center = q.lu().solve(&Vector2::new(-d / 2.0, -e / 2.0))?;
        let f0 = f + (d * center.x + e * center.y) / 2.0;
        let eig = q.symmetric_eigen();
        let (l0, l1) = (eig.eigenvalues[0], eig.eigenvalues[1]);
        let (s0, s1) = (-f0 / l0, -f0 / l1);
        if !(s0 > 0.0 && s1 > 0.0) {
            return None;
        }
        // larger |λ| pairs with the shorter axis
        let minor = if l0.abs() >= l1.abs() { 0 } else { 1 };
        let (minor_sq, major_sq) = if minor == 0 { (s0, s1) } else { (s1, s0) };
        Some(EllipseParams {
            center,
            semi_major: major_sq.sqrt(),
            semi_minor: minor_sq.sqrt(),
            minor_dir: eig.eigenvectors.column(minor).normalize(),
        })
    }
}

/// Conic through at least five points: the null vector of the design matrix
/// with rows `(x², xy, y², x, y, 1)`, computed on centred and scaled points.
pub fn fit_conic(points: &[Vec2]) -> Result<Conic> {
    if points.len() < 5 {
        return Err(Error::TooFewPoints(points.len()));
    }
    if points.iter().any(|p| !p.iter().all(|c| c.is_finite())) {
        return Err(Error::NonFinite);
    }
    let n = points.len() as f64;
    let centre = points.iter().sum::<Vec2>() / n;
    let scale = (points.iter().map(|p| (p - centre).norm_squared()).sum::<f64>() / n).sqrt();
    if scale == 0.0 {
        return Err(Error::DegenerateConic);
    }
    let rows = points.len().max(6);
    let mut design = DMatrix::<f64>::zeros(rows, 6);
    for (i, p) in points.iter().enumerate() {
        let (x, y) = ((p.x - centre.x) / scale, (p.y - centre.y) / scale);
        design.set_row(i, &nalgebra::RowDVector::from_row_slice(&[x * x, x * y, y * y, x, y, 1.0]));
    }
    let svd = design.svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let sv = &svd.singular_values;
    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&i, &j| sv[i].total_cmp(&sv[j]));
    if sv[order[1]] <= 1e-10 * sv[order[sv.len() - 1]] {
        return Err(Error::DegenerateConic);
    }
    let w = v_t.row(order[0]);
    let (a, b, c, d, e, f) = (w[0], w[1], w[2], w[3], w[4], w[5]);
    // undo x' = (x − cx)/s, y' = (y − cy)/s and clear the 1/s² factor
    let (cx, cy, s) = (centre.x, centre.y, scale);
    Ok(Conic::normalised([
        a,
        b,
        c,
        -2.0 * a * cx - b * cy + d * s,
        -b * cx - 2.0 * c * cy + e * s,
        a * cx * cx + b * cx * cy + c * cy * cy - d * s * cx - e * s * cy + f * s * s,
    ]))
}

fn cross2(a: &Vec2, b: &Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Labeled reconstruction through the projected circumcircle of the first
/// three vertices. Returns the rotations (at most one for a full-dimensional
/// tetrahedron) that reproduce `u` within `tol.geom_abs`.
pub fn reconstruct_geometric(t: &Tetrahedron, u: &ProjectionQuad, tol: &Tolerances) -> Result<Vec<SolveCandidate>> {
    if !t.is_full_dimensional(tol.rank_rel) {
        return Err(Error::NotFullDimensional);
    }
    let p = *t.vertices();
    let uu = *u.points();
    let circle = circumcircle3(&p[0], &p[1], &p[2])?;

    let (e1, e2) = (uu[1] - uu[0], uu[2] - uu[0]);
    if cross2(&e1, &e2).abs() <= 1e-12 * e1.norm() * e2.norm() {
        return Err(Error::CollinearProjection);
    }

    // projected second intersections of the medians with the circle
    let mut ellipse_points = uu[..3].to_vec();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mid = (p[j] + p[k]) / 2.0;
        let dir = mid - p[i];
        // p_i + λ·dir lies on the circle for λ = 0 and for this λ
        let lambda = -2.0 * (p[i] - circle.center).dot(&dir) / dir.norm_squared();
        if !lambda.is_finite() || lambda <= 1.0 + 1e-12 {
            return Err(Error::DegenerateChord);
        }
        let umid = (uu[j] + uu[k]) / 2.0;
        ellipse_points.push(uu[i] + (umid - uu[i]) * lambda);
    }

    let conic = fit_conic(&ellipse_points)?;
    let Some(ellipse) = conic.ellipse() else {
        return Err(Error::NotAnEllipse(conic.discriminant()));
    };
    let cos_tilt = (ellipse.semi_minor / ellipse.semi_major).min(1.0);
    if cos_tilt < 1e-9 {
        return Err(Error::NotAnEllipse(conic.discriminant()));
    }
    let sin_tilt = (1.0 - cos_tilt * cos_tilt).sqrt();
    let lifts: Vec<Vec3> = if sin_tilt < 1e-12 {
        vec![Vec3::z()]
    } else {
        [1.0, -1.0]
            .iter()
            .map(|s| Vec3::new(s * sin_tilt * ellipse.minor_dir.x, s * sin_tilt * ellipse.minor_dir.y, cos_tilt))
            .collect()
    };

    // p4 − c in the frame (p1 − c, p2 − c, n)
    let w: [Vec3; 3] = [p[0] - circle.center, p[1] - circle.center, circle.normal];
    let Some(coef) = Matrix3::from_columns(&w).lu().solve(&(p[3] - circle.center)) else {
        return Err(Error::NotFullDimensional);
    };
    let orientation = Matrix3::from_columns(&[p[1] - p[0], p[2] - p[0], p[3] - p[0]]).determinant();
    let basis_inv = t.basis_matrix().try_inverse().ok_or(Error::NotFullDimensional)?;

    let mut out = Vec::new();
    for normal in lifts {
        // rotated vertices relative to the rotated circle centre; heights
        // follow from lying in the circle plane
        let lift = |q: &Vec2| {
            let d = q - ellipse.center;
            Vec3::new(d.x, d.y, -(normal.x * d.x + normal.y * d.y) / normal.z)
        };
        let v = [lift(&uu[0]), lift(&uu[1]), lift(&uu[2])];
        for side in [1.0, -1.0] {
            let v4 = v[0] * coef[0] + v[1] * coef[1] + normal * (side * coef[2]);
            let rel = [v[0], v[1], v[2], v4];
            let det = Matrix3::from_columns(&[rel[1] - rel[0], rel[2] - rel[0], rel[3] - rel[0]]).determinant();
            if det.signum() != orientation.signum() {
                continue;
            }
            // zero centroid fixes the vertical offset
            let z0 = -rel.iter().map(|x| x.z).sum::<f64>() / 4.0;
            let image: Vec<Vec3> = rel
                .iter()
                .map(|x| Vec3::new(x.x + ellipse.center.x, x.y + ellipse.center.y, x.z + z0))
                .collect();
            let r = Matrix3::from_columns(&image[..3]) * basis_inv;
            if orthonormality_error(&r) > 1e-6 {
                continue;
            }
            let c = candidate_from_matrix(t, u, Permutation4::IDENTITY, &r, false);
            if c.residual <= tol.geom_abs {
                out.push(c);
            }
        }
    }
    Ok(dedupe_rotations(out, tol.dedupe))
}
