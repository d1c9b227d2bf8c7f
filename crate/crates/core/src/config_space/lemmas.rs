//! Closed-form dimension table of the configuration spaces, and the case
//! cells used to sweep it.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use rand::Rng;

use super::PermClass;
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::rotation::{quat_from_axis_angle, AxisClass, UnitQuaternion};

/// Which branch of the classification a rotation falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaCase {
    Generic,
    /// Roman-numeral case label, e.g. `"(iv)"`, or `"horizontal"` for the
    /// identity class.
    Exceptional(&'static str),
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaCase::Generic => f.write_str("generic"),
            LemmaCase::Exceptional(s) => f.write_str(s),
        }
    }
}

/// Predicted dimension and case label for a non-identity rotation with the
/// given axis class and angle. Special angles are matched within `angle_tol`.
pub fn predicted_case(
    class: PermClass,
    axis_class: AxisClass,
    angle: f64,
    angle_tol: f64,
) -> Result<(usize, LemmaCase)> {
    use AxisClass::*;
    use LemmaCase::*;

    if axis_class == NoAxis || angle <= angle_tol {
        return Err(Error::IdentityRotation);
    }
    let is = |target: f64| (angle - target).abs() <= angle_tol;
    let half = is(PI);
    let out = match class {
        PermClass::Identity => match axis_class {
            Horizontal => (6, Exceptional("horizontal")),
            _ => (3, Generic),
        },
        PermClass::TwoCycle => match axis_class {
            Oblique if half => (4, Exceptional("(i)")),
            Vertical if half => (5, Exceptional("(ii)")),
            Horizontal if !half => (5, Exceptional("(ii)")),
            Horizontal => (6, Exceptional("(iii)")),
            _ => (3, Generic),
        },
        PermClass::DoubleTwoCycle => match axis_class {
            Horizontal if !half => (4, Exceptional("(i)")),
            Oblique if half => (5, Exceptional("(ii)")),
            Horizontal => (6, Exceptional("(iii)")),
            Vertical if half => (7, Exceptional("(iv)")),
            _ => (3, Generic),
        },
        PermClass::ThreeCycle => match axis_class {
            Horizontal => (4, Exceptional("(i)")),
            Vertical if is(2.0 * PI / 3.0) => (5, Exceptional("(ii)")),
            _ => (3, Generic),
        },
        // Horizontal half-turns are tabulated as generic, but the rank
        // computation gives 4 there; left as tabulated.
        PermClass::FourCycle => match axis_class {
            Oblique if half => (4, Exceptional("(i)")),
            Vertical if half || is(FRAC_PI_2) => (5, Exceptional("(ii)")),
            _ => (3, Generic),
        },
    };
    Ok(out)
}

pub fn predicted_dimension(
    class: PermClass,
    axis_class: AxisClass,
    angle: f64,
    angle_tol: f64,
) -> Result<usize> {
    predicted_case(class, axis_class, angle, angle_tol).map(|(d, _)| d)
}

/// A region of rotation space on which every dimension is constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseCell {
    GenericOblique,
    ObliqueHalfTurn,
    HorizontalGeneric,
    HorizontalHalfTurn,
    VerticalGeneric,
    VerticalHalfTurn,
    VerticalQuarterTurn,
    VerticalThirdTurn,
}

// keeps generic angles clear of 0, π and the special vertical angles
const MARGIN: f64 = 0.05;

impl CaseCell {
    pub const ALL: [CaseCell; 8] = [
        CaseCell::GenericOblique,
        CaseCell::ObliqueHalfTurn,
        CaseCell::HorizontalGeneric,
        CaseCell::HorizontalHalfTurn,
        CaseCell::VerticalGeneric,
        CaseCell::VerticalHalfTurn,
        CaseCell::VerticalQuarterTurn,
        CaseCell::VerticalThirdTurn,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CaseCell::GenericOblique => "oblique, 0<a<pi",
            CaseCell::ObliqueHalfTurn => "oblique, a=pi",
            CaseCell::HorizontalGeneric => "horizontal, 0<a<pi",
            CaseCell::HorizontalHalfTurn => "horizontal, a=pi",
            CaseCell::VerticalGeneric => "vertical, generic a",
            CaseCell::VerticalHalfTurn => "vertical, a=pi",
            CaseCell::VerticalQuarterTurn => "vertical, a=pi/2",
            CaseCell::VerticalThirdTurn => "vertical, a=2pi/3",
        }
    }

    /// A random rotation inside the cell. Axis classes and special angles
    /// are hit exactly.
    pub fn sample_rotation<R: Rng + ?Sized>(&self, rng: &mut R) -> UnitQuaternion {
        let generic_angle = |rng: &mut R| rng.random_range(MARGIN..PI - MARGIN);
        let (axis, angle) = match self {
            CaseCell::GenericOblique => (oblique_axis(rng), generic_angle(rng)),
            CaseCell::ObliqueHalfTurn => (oblique_axis(rng), PI),
            CaseCell::HorizontalGeneric => (horizontal_axis(rng), generic_angle(rng)),
            CaseCell::HorizontalHalfTurn => (horizontal_axis(rng), PI),
            CaseCell::VerticalGeneric => {
                let specials = [FRAC_PI_2, 2.0 * PI / 3.0];
                let angle = loop {
                    let a = generic_angle(rng);
                    if specials.iter().all(|s| (a - s).abs() > MARGIN) {
                        break a;
                    }
                };
                (vertical_axis(rng), angle)
            }
            CaseCell::VerticalHalfTurn => (vertical_axis(rng), PI),
            CaseCell::VerticalQuarterTurn => (vertical_axis(rng), FRAC_PI_2),
            CaseCell::VerticalThirdTurn => (vertical_axis(rng), 2.0 * PI / 3.0),
        };
        quat_from_axis_angle(&axis, angle).expect("unit axis")
    }
}

fn oblique_axis<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    loop {
        let z: f64 = rng.random_range(-1.0..1.0);
        let theta: f64 = rng.random_range(0.0..2.0 * PI);
        let r = (1.0 - z * z).sqrt();
        if z.abs() > MARGIN && r > MARGIN {
            return Vec3::new(r * theta.cos(), r * theta.sin(), z);
        }
    }
}

fn horizontal_axis<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    let theta: f64 = rng.random_range(0.0..2.0 * PI);
    Vec3::new(theta.cos(), theta.sin(), 0.0)
}

fn vertical_axis<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    if rng.random::<bool>() {
        Vec3::z()
    } else {
        -Vec3::z()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config_space::config_dimension;
    use crate::geom::Tolerances;
    use crate::rotation::classify_rotation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn table_examples() {
        assert_eq!(predicted_dimension(PermClass::ThreeCycle, AxisClass::Horizontal, 0.4, 1e-9), Ok(4));
        assert_eq!(predicted_dimension(PermClass::FourCycle, AxisClass::Vertical, FRAC_PI_2, 1e-9), Ok(5));
        assert_eq!(predicted_dimension(PermClass::TwoCycle, AxisClass::Oblique, 1.0, 1e-9), Ok(3));
        assert_eq!(
            predicted_case(PermClass::DoubleTwoCycle, AxisClass::Vertical, PI, 1e-9),
            Ok((7, LemmaCase::Exceptional("(iv)")))
        );
        assert_eq!(
            predicted_dimension(PermClass::Identity, AxisClass::Oblique, 0.0, 1e-9),
            Err(Error::IdentityRotation)
        );
    }

    #[test]
    fn cells_produce_their_axis_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for cell in CaseCell::ALL {
            for _ in 0..20 {
                let c = classify_rotation(&cell.sample_rotation(&mut rng), 1e-9);
                let want = match cell {
                    CaseCell::GenericOblique | CaseCell::ObliqueHalfTurn => AxisClass::Oblique,
                    CaseCell::HorizontalGeneric | CaseCell::HorizontalHalfTurn => AxisClass::Horizontal,
                    _ => AxisClass::Vertical,
                };
                assert_eq!(c.axis_class, want, "{}", cell.name());
            }
        }
    }

    // A 1e-6 nudge off a special cell lands in the generic branch of both the
    // table and the numeric rank.
    #[test]
    fn perturbation_drops_dimension_back() {
        let tol = Tolerances::default();
        let nudges = [
            (Vec3::new(0.0, 0.0, 1.0), PI - 1e-6),
            (Vec3::new(1e-6, 0.0, 1.0).normalize(), PI),
            (Vec3::new(1.0, 0.0, 1e-6).normalize(), 1.0),
            (Vec3::new(0.0, 0.0, 1.0), 2.0 * PI / 3.0 + 1e-6),
            (Vec3::new(0.0, 0.0, 1.0), FRAC_PI_2 + 1e-6),
        ];
        for (axis, angle) in nudges {
            let q = quat_from_axis_angle(&axis, angle).unwrap();
            let rc = classify_rotation(&q, tol.angle_abs);
            for class in PermClass::ALL {
                let computed = config_dimension(&q, class, &tol).unwrap();
                let predicted = predicted_dimension(class, rc.axis_class, rc.angle, tol.angle_abs).unwrap();
                assert_eq!(computed, predicted, "{class} {axis} {angle}");
            }
        }
    }
}
