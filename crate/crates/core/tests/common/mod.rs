#![allow(dead_code)]

use rand::Rng;
use rand_distr::StandardNormal;
use tetraproj_core::solver::circumcircle3;
use tetraproj_core::{project, Tetrahedron, UnitQuaternion, Vec3};

pub fn random_vec3<R: Rng>(rng: &mut R) -> Vec3 {
    Vec3::new(rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Centred Gaussian tetrahedron whose vertex matrix has condition number
/// below 10.
pub fn random_tetrahedron<R: Rng>(rng: &mut R) -> Tetrahedron {
    loop {
        let t = Tetrahedron::new(std::array::from_fn(|_| random_vec3(rng))).unwrap();
        let sv = t.basis_matrix().singular_values();
        if sv.min() > 0.1 * sv.max() {
            return t;
        }
    }
}

/// Random instance for the circle construction: the rotated circumcircle is
/// tilted at most ~70° from horizontal and the projected triangle is not
/// thin.
pub fn random_geometric_instance<R: Rng>(rng: &mut R) -> (Tetrahedron, UnitQuaternion) {
    loop {
        let t = random_tetrahedron(rng);
        let q = UnitQuaternion::random(rng);
        let r = *q.to_matrix().as_matrix();
        let p = t.vertices();
        let Ok(c) = circumcircle3(&p[0], &p[1], &p[2]) else { continue };
        if (r * c.normal).z.abs() < 0.3 {
            continue;
        }
        let u = project(&t.rotated(&r));
        let (a, b) = (u.point(1) - u.point(0), u.point(2) - u.point(0));
        if (a.x * b.y - a.y * b.x).abs() < 0.1 * a.norm() * b.norm() {
            continue;
        }
        return (t, q);
    }
}
