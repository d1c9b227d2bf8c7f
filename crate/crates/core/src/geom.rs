//! Value types shared by every other module: points, tetrahedra, projection
//! quads, permutations of four labels and numeric tolerances.

use std::fmt;

use nalgebra::{Matrix3, Vector2, Vector3};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;
pub type Vec2 = Vector2<f64>;

/// Numeric thresholds used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative singular-value threshold for numeric rank.
    pub rank_rel: f64,
    /// Absolute tolerance when matching points.
    pub geom_abs: f64,
    /// Tolerance for axis classes and special angles.
    pub angle_abs: f64,
    /// Frobenius distance below which two rotations are merged.
    pub dedupe: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rank_rel: 1e-9,
            geom_abs: 1e-8,
            angle_abs: 1e-9,
            dedupe: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn new(rank_rel: f64, geom_abs: f64, angle_abs: f64, dedupe: f64) -> Result<Self> {
        for t in [rank_rel, geom_abs, angle_abs, dedupe] {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidTolerance(t));
            }
        }
        Ok(Self {
            rank_rel,
            geom_abs,
            angle_abs,
            dedupe,
        })
    }
}

fn all_finite3(v: &[Vec3]) -> bool {
    v.iter().all(|p| p.iter().all(|c| c.is_finite()))
}

/// Four points in space with centroid at the origin.
///
/// The points may be coplanar (a "lower-dimensional" tetrahedron); use
/// [`Tetrahedron::is_full_dimensional`] to test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tetrahedron {
    vertices: [Vec3; 4],
}

impl Tetrahedron {
    /// Builds a tetrahedron, translating the vertices so their centroid is the origin.
    pub fn new(vertices: [Vec3; 4]) -> Result<Self> {
        recentre(vertices)
    }

    pub fn from_arrays(v: [[f64; 3]; 4]) -> Result<Self> {
        Self::new(v.map(Vec3::from))
    }

    pub fn vertices(&self) -> &[Vec3; 4] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Vec3 {
        self.vertices[i]
    }

    /// Matrix with the first three vertices as columns.
    pub fn basis_matrix(&self) -> Matrix3<f64> {
        Matrix3::from_columns(&self.vertices[..3])
    }

    /// Root-mean-square vertex norm.
    pub fn scale(&self) -> f64 {
        (self.vertices.iter().map(|p| p.norm_squared()).sum::<f64>() / 4.0).sqrt()
    }

    /// Rank of the vertex set (0 to 3) under the relative tolerance `rank_rel`.
    pub fn rank(&self, rank_rel: f64) -> usize {
        let sv = self.basis_matrix().singular_values();
        let max = sv.max();
        if max == 0.0 {
            return 0;
        }
        sv.iter().filter(|&&s| s > rank_rel * max).count()
    }

    /// Smallest singular value of `[p1 p2 p3]` exceeds `rank_rel` times the largest.
    ///
    /// With a zero centroid this is the same as affine independence of the
    /// four vertices.
    pub fn is_full_dimensional(&self, rank_rel: f64) -> bool {
        self.rank(rank_rel) == 3
    }

    /// Determinant of the 4x4 matrix with rows `(1,1,1,1)` and the vertex
    /// coordinates; zero exactly when the vertices are coplanar.
    pub fn affine_determinant(&self) -> f64 {
        let p = &self.vertices;
        Matrix3::from_columns(&[p[1] - p[0], p[2] - p[0], p[3] - p[0]]).determinant()
    }

    /// Applies the rotation matrix to every vertex.
    pub fn rotated(&self, r: &Matrix3<f64>) -> Tetrahedron {
        Tetrahedron {
            vertices: self.vertices.map(|p| r * p),
        }
    }

    pub fn scaled(&self, s: f64) -> Tetrahedron {
        Tetrahedron {
            vertices: self.vertices.map(|p| p * s),
        }
    }

    pub(crate) fn from_centred_unchecked(vertices: [Vec3; 4]) -> Self {
        Self { vertices }
    }
}

/// Translates four points so that their centroid is the origin.
pub fn recentre(vertices: [Vec3; 4]) -> Result<Tetrahedron> {
    if !all_finite3(&vertices) {
        return Err(Error::NonFinite);
    }
    let centroid = vertices.iter().sum::<Vec3>() / 4.0;
    let mut v = vertices.map(|p| p - centroid);
    // absorb rounding into the last vertex so the sum is exact to one ulp
    v[3] = -(v[0] + v[1] + v[2]);
    Ok(Tetrahedron { vertices: v })
}

/// Four projected points. Labeled comparisons use the order; unlabeled ones
/// treat the quad as a multiset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionQuad {
    points: [Vec2; 4],
}

impl ProjectionQuad {
    pub fn new(points: [Vec2; 4]) -> Result<Self> {
        if points.iter().any(|p| !p.iter().all(|c| c.is_finite())) {
            return Err(Error::NonFinite);
        }
        Ok(Self { points })
    }

    pub fn from_arrays(p: [[f64; 2]; 4]) -> Result<Self> {
        Self::new(p.map(Vec2::from))
    }

    pub fn points(&self) -> &[Vec2; 4] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Vec2 {
        self.points[i]
    }

    /// Reorders the quad so that entry `i` is the point labeled `σ(i)`.
    pub fn relabeled(&self, sigma: &Permutation4) -> ProjectionQuad {
        ProjectionQuad {
            points: std::array::from_fn(|i| self.points[sigma.apply(i)]),
        }
    }

    /// Multiset equality within `tol`: some permutation matches the points.
    pub fn multiset_eq(&self, other: &ProjectionQuad, tol: f64) -> bool {
        Permutation4::all().any(|s| quad_match(self, other, &s, tol))
    }
}

/// Orthogonal projection onto the xy-plane.
pub fn project_point(p: &Vec3) -> Vec2 {
    Vec2::new(p.x, p.y)
}

/// Projects every vertex onto the xy-plane, keeping labels.
pub fn project(t: &Tetrahedron) -> ProjectionQuad {
    ProjectionQuad {
        points: t.vertices.map(|p| project_point(&p)),
    }
}

/// True iff `‖P_i − Q_σ(i)‖ ≤ tol` for every label `i`.
pub fn quad_match(p: &ProjectionQuad, q: &ProjectionQuad, sigma: &Permutation4, tol: f64) -> bool {
    (0..4).all(|i| (p.points[i] - q.points[sigma.apply(i)]).norm() <= tol)
}

/// A bijection of `{0,1,2,3}`. Displayed and parsed one-based, matching the
/// image-list notation `(2,3,4,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation4 {
    images: [usize; 4],
}

impl Permutation4 {
    pub const IDENTITY: Permutation4 = Permutation4 {
        images: [0, 1, 2, 3],
    };

    /// From zero-based images.
    pub fn new(images: [usize; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i >= 4 || seen[i] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// From one-based images, e.g. `[2, 3, 4, 1]`.
    pub fn from_one_based(images: [usize; 4]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(images));
        }
        Self::new(images.map(|i| i - 1)).map_err(|_| Error::InvalidPermutation(images))
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> [usize; 4] {
        self.images
    }

    pub fn one_based(&self) -> [usize; 4] {
        self.images.map(|i| i + 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Sorted lengths of the non-trivial cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 4];
        let mut lens = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 1 {
                lens.push(len);
            }
        }
        lens.sort_unstable();
        lens
    }

    /// All 24 permutations in lexicographic order of their image lists.
    pub fn all() -> impl Iterator<Item = Permutation4> {
        (0..24).map(|mut k| {
            let mut pool = vec![0, 1, 2, 3];
            let mut images = [0; 4];
            for (slot, f) in [6, 2, 1, 1].into_iter().enumerate() {
                images[slot] = pool.remove(k / f);
                k %= f;
            }
            Permutation4 { images }
        })
    }
}

impl fmt::Display for Permutation4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.one_based();
        write!(f, "({a},{b},{c},{d})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn s6() -> f64 {
        6f64.sqrt()
    }

    fn fourcycle_vertices() -> [[f64; 3]; 4] {
        let s = s6();
        [
            [-2.0, -3.0 + s, 16.0 - 3.0 * s],
            [1.0, 3.0 - 4.0 * s, -19.0 + 3.0 * s],
            [2.0, -3.0 + 3.0 * s, 8.0 - 3.0 * s],
            [-1.0, 3.0, -5.0 + 3.0 * s],
        ]
    }

    #[test]
    fn recentre_removes_offset() {
        let t = Tetrahedron::from_arrays([
            [1.0, 0.0, 0.0],
            [1.0, 1.0, 0.0],
            [2.0, 1.0, 2.0],
            [4.0, -2.0, -2.0],
        ])
        .unwrap();
        let sum: Vec3 = t.vertices().iter().sum();
        assert!(sum.norm() < 1e-15);
        assert_abs_diff_eq!(t.vertex(0), Vec3::new(-1.0, 0.0, 0.0), epsilon = 1e-15);
        assert_abs_diff_eq!(t.vertex(3), Vec3::new(2.0, -2.0, -2.0), epsilon = 1e-15);
    }

    #[test]
    fn recentre_keeps_centred_input() {
        let raw = fourcycle_vertices();
        let t = Tetrahedron::from_arrays(raw).unwrap();
        for (i, v) in raw.iter().enumerate() {
            assert_abs_diff_eq!(t.vertex(i), Vec3::from(*v), epsilon = 1e-13);
        }
    }

    #[test]
    fn recentre_zero_and_nonfinite() {
        let t = Tetrahedron::from_arrays([[0.0; 3]; 4]).unwrap();
        assert!(t.vertices().iter().all(|p| *p == Vec3::zeros()));
        assert_eq!(
            Tetrahedron::from_arrays([[f64::NAN, 0.0, 0.0], [0.0; 3], [0.0; 3], [0.0; 3]]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn projection_of_fourcycle_example() {
        let s = s6();
        let u = project(&Tetrahedron::from_arrays(fourcycle_vertices()).unwrap());
        let expected = [
            [-2.0, -3.0 + s],
            [1.0, 3.0 - 4.0 * s],
            [2.0, -3.0 + 3.0 * s],
            [-1.0, 3.0],
        ];
        for i in 0..4 {
            assert_abs_diff_eq!(u.point(i), Vec2::from(expected[i]), epsilon = 1e-13);
        }
    }

    #[test]
    fn projection_of_planar_example_has_coincident_points() {
        let t = Tetrahedron::from_arrays([
            [-1.0, 0.0, 1.0],
            [0.0, 0.0, 0.0],
            [0.0, 0.0, -2.0],
            [1.0, 0.0, 1.0],
        ])
        .unwrap();
        let u = project(&t);
        assert_eq!(u.point(1), u.point(2));
        assert_eq!(u.point(0), Vec2::new(-1.0, 0.0));
        assert_eq!(u.point(3), Vec2::new(1.0, 0.0));
    }

    #[test]
    fn quad_match_respects_labels() {
        let p = ProjectionQuad::from_arrays([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
        assert!(quad_match(&p, &p, &Permutation4::IDENTITY, 0.0));
        let sigma = Permutation4::from_one_based([2, 3, 4, 1]).unwrap();
        let shifted = p.relabeled(&Permutation4::from_one_based([4, 1, 2, 3]).unwrap());
        assert!(quad_match(&shifted, &p, &Permutation4::from_one_based([4, 1, 2, 3]).unwrap(), 0.0));
        assert!(!quad_match(&shifted, &p, &sigma, 1e-3));
        assert!(shifted.multiset_eq(&p, 0.0));
    }

    #[test]
    fn full_dimensional_predicate() {
        let t = Tetrahedron::from_arrays(fourcycle_vertices()).unwrap();
        assert!(t.is_full_dimensional(1e-9));
        let flat = Tetrahedron::from_arrays([
            [1.0, 2.0, 0.0],
            [-3.0, 1.0, 0.0],
            [0.5, -1.0, 0.0],
            [1.5, -2.0, 0.0],
        ])
        .unwrap();
        assert!(!flat.is_full_dimensional(1e-9));
        assert_eq!(flat.rank(1e-9), 2);
        assert!(flat.affine_determinant().abs() < 1e-12);
    }

    #[test]
    fn permutations_enumerate_and_classify() {
        let all: Vec<_> = Permutation4::all().collect();
        assert_eq!(all.len(), 24);
        assert!(all[0].is_identity());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let counts = all.iter().fold([0usize; 5], |mut acc, p| {
            let idx = match p.cycle_type().as_slice() {
                [] => 0,
                [2] => 1,
                [2, 2] => 2,
                [3] => 3,
                [4] => 4,
                other => panic!("unexpected cycle type {other:?}"),
            };
            acc[idx] += 1;
            acc
        });
        assert_eq!(counts, [1, 6, 3, 8, 6]);
        assert!(Permutation4::from_one_based([1, 1, 2, 3]).is_err());
        assert_eq!(Permutation4::from_one_based([2, 3, 4, 1]).unwrap().to_string(), "(2,3,4,1)");
    }

    #[test]
    fn tolerances_must_be_positive() {
        assert!(Tolerances::new(1e-9, 0.0, 1e-9, 1e-6).is_err());
        assert!(Tolerances::new(1e-9, 1e-8, 1e-9, 1e-6).is_ok());
    }
}
