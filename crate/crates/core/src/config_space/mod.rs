//! Linear configuration spaces of tetrahedra that a rotation maps onto the
//! same projection, up to a permutation of the vertex labels.
//!
//! For a rotation `φ` and a permutation `σ`, a centred tetrahedron belongs to
//! the space when `(φ p_i)_j = (p_σ(i))_j` for `j = 1, 2`. Eliminating the
//! fourth vertex through the zero centroid leaves six linear equations in the
//! nine coordinates of `p_1, p_2, p_3`, collected in a 6x9 [`ConfigMatrix`].

mod fourcycle;
mod lemmas;
pub mod sweep;

use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix2x3, SMatrix, SVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::geom::{Permutation4, Tetrahedron, Tolerances, Vec3};
use crate::rotation::{classify_rotation, quat_to_matrix, AxisClass, UnitQuaternion};

pub use fourcycle::{
    fourcycle_lambda_check, midpoint_frame, verify_fourcycle_relations, LambdaCheck, MidpointFrame,
};
pub use lemmas::{predicted_case, predicted_dimension, CaseCell, LemmaCase};

/// Top two rows of a rotation matrix.
pub type BlockA = Matrix2x3<f64>;
pub type ConfigMatrix = SMatrix<f64, 6, 9>;
pub type Vec9 = SVector<f64, 9>;

/// Conjugacy class of a permutation of four labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PermClass {
    Identity,
    TwoCycle,
    DoubleTwoCycle,
    ThreeCycle,
    FourCycle,
}

impl PermClass {
    pub const ALL: [PermClass; 5] = [
        PermClass::Identity,
        PermClass::TwoCycle,
        PermClass::DoubleTwoCycle,
        PermClass::ThreeCycle,
        PermClass::FourCycle,
    ];

    pub fn of(sigma: &Permutation4) -> PermClass {
        match sigma.cycle_type().as_slice() {
            [] => PermClass::Identity,
            [2] => PermClass::TwoCycle,
            [2, 2] => PermClass::DoubleTwoCycle,
            [3] => PermClass::ThreeCycle,
            _ => PermClass::FourCycle,
        }
    }

    /// Representative used to build the matrices: `id`, `(2,1,3,4)`,
    /// `(2,1,4,3)`, `(2,3,1,4)` and `(2,3,4,1)`.
    pub fn representative(&self) -> Permutation4 {
        let images = match self {
            PermClass::Identity => [1, 2, 3, 4],
            PermClass::TwoCycle => [2, 1, 3, 4],
            PermClass::DoubleTwoCycle => [2, 1, 4, 3],
            PermClass::ThreeCycle => [2, 3, 1, 4],
            PermClass::FourCycle => [2, 3, 4, 1],
        };
        Permutation4::from_one_based(images).expect("valid representative")
    }

    pub fn name(&self) -> &'static str {
        match self {
            PermClass::Identity => "identity",
            PermClass::TwoCycle => "two-cycle",
            PermClass::DoubleTwoCycle => "double-two-cycle",
            PermClass::ThreeCycle => "three-cycle",
            PermClass::FourCycle => "four-cycle",
        }
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PermClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace(['_', ' '], "-");
        PermClass::ALL
            .into_iter()
            .find(|c| c.name() == key || c.name().replace('-', "") == key.replace('-', ""))
            .ok_or_else(|| format!("unknown permutation class '{s}'"))
    }
}

#[allow(non_snake_case)]
pub fn block_A(q: &UnitQuaternion) -> BlockA {
    quat_to_matrix(q).as_matrix().fixed_rows::<2>(0).into_owned()
}

fn block_i() -> BlockA {
    BlockA::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0)
}

/// Coefficient matrix whose null space is the configuration space of `class`
/// at rotation `q`. Variables are ordered `p1.x, p1.y, p1.z, p2.x, …, p3.z`;
/// rows `2i, 2i+1` hold the x and y equations of block `i`.
pub fn build_config_matrix(q: &UnitQuaternion, class: PermClass) -> ConfigMatrix {
    let a = block_A(q);
    let i = block_i();
    let z = BlockA::zeros();
    let blocks: [[BlockA; 3]; 3] = match class {
        PermClass::Identity => [[a - i, z, z], [z, a - i, z], [z, z, a - i]],
        PermClass::TwoCycle => [[a, -i, z], [-i, a, z], [z, z, a - i]],
        PermClass::DoubleTwoCycle => [[a, -i, z], [-i, a, z], [i, i, a + i]],
        PermClass::ThreeCycle => [[a, -i, z], [z, a, -i], [-i, z, a]],
        PermClass::FourCycle => [[a, -i, z], [z, a, -i], [i, i, a + i]],
    };
    let mut m = ConfigMatrix::zeros();
    for (r, row) in blocks.iter().enumerate() {
        for (c, b) in row.iter().enumerate() {
            m.fixed_view_mut::<2, 3>(2 * r, 3 * c).copy_from(b);
        }
    }
    m
}

struct Decomposition {
    singular_values: Vec<f64>,
    right_vectors: Vec<Vec9>,
}

// Padding with zero rows gives a square matrix whose SVD carries the full
// right singular basis.
fn decompose(m: &ConfigMatrix) -> Decomposition {
    let mut padded = SMatrix::<f64, 9, 9>::zeros();
    padded.fixed_rows_mut::<6>(0).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    Decomposition {
        singular_values: svd.singular_values.iter().copied().collect(),
        right_vectors: (0..9).map(|k| v_t.row(k).transpose()).collect(),
    }
}

fn threshold(sv: &[f64], rank_rel: f64) -> Option<f64> {
    let max = sv.iter().copied().fold(0.0, f64::max);
    (max > 0.0).then_some(rank_rel * max)
}

/// Number of singular values above `rank_rel` times the largest.
pub fn numeric_rank(m: &ConfigMatrix, rank_rel: f64) -> usize {
    let sv = m.singular_values();
    match threshold(sv.as_slice(), rank_rel) {
        Some(t) => sv.iter().filter(|&&s| s > t).count(),
        None => 0,
    }
}

/// Orthonormal basis of the numeric null space.
pub fn null_space_basis(m: &ConfigMatrix, rank_rel: f64) -> Vec<Vec9> {
    let d = decompose(m);
    let t = threshold(&d.singular_values, rank_rel);
    d.singular_values
        .iter()
        .zip(d.right_vectors)
        .filter(|(s, _)| t.is_none_or(|t| **s <= t))
        .map(|(_, v)| v)
        .collect()
}

/// Dimension of the configuration space, `9 − rank`.
pub fn config_dimension(q: &UnitQuaternion, class: PermClass, tol: &Tolerances) -> Result<usize> {
    if classify_rotation(q, tol.angle_abs).axis_class == AxisClass::NoAxis {
        return Err(Error::IdentityRotation);
    }
    Ok(9 - numeric_rank(&build_config_matrix(q, class), tol.rank_rel))
}

/// Determinant of the 6x6 submatrix of the identity-class matrix on columns
/// 1, 2, 4, 5, 7, 8 (the x and y coordinates of each vertex).
pub fn minor_sigma_id(q: &UnitQuaternion) -> f64 {
    let m = build_config_matrix(q, PermClass::Identity);
    let cols = [0, 1, 3, 4, 6, 7];
    let sub = SMatrix::<f64, 6, 6>::from_fn(|r, c| m[(r, cols[c])]);
    sub.determinant()
}

/// Splits a 9-vector into the three leading vertices and appends the fourth
/// from the zero-centroid condition.
pub fn vertices_from_vec9(x: &Vec9) -> [Vec3; 4] {
    let p1 = Vec3::new(x[0], x[1], x[2]);
    let p2 = Vec3::new(x[3], x[4], x[5]);
    let p3 = Vec3::new(x[6], x[7], x[8]);
    [p1, p2, p3, -(p1 + p2 + p3)]
}

/// Draws a member of the configuration space: a uniformly random unit vector
/// of the null space, scaled so the RMS vertex norm is one.
pub fn sample_tetrahedron(
    q: &UnitQuaternion,
    class: PermClass,
    seed: u64,
    tol: &Tolerances,
) -> Result<Tetrahedron> {
    let basis = null_space_basis(&build_config_matrix(q, class), tol.rank_rel);
    if basis.is_empty() {
        return Err(Error::EmptyNullSpace);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<f64> = loop {
        let c: Vec<f64> = basis.iter().map(|_| StandardNormal.sample(&mut rng)).collect();
        if c.iter().map(|x| x * x).sum::<f64>() > 1e-12 {
            break c;
        }
    };
    let x: Vec9 = basis
        .iter()
        .zip(&coeffs)
        .fold(Vec9::zeros(), |acc, (v, c)| acc + v * *c);
    let mut v = vertices_from_vec9(&x);
    let rms = (v.iter().map(|p| p.norm_squared()).sum::<f64>() / 4.0).sqrt();
    for p in v.iter_mut().take(3) {
        *p /= rms;
    }
    v[3] = -(v[0] + v[1] + v[2]);
    Ok(Tetrahedron::from_centred_unchecked(v))
}
