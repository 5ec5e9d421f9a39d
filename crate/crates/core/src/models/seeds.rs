use num::{Signed, Zero};
use serde::Serialize;

use super::class::{Parameter, Sign, SingularityClass};
use super::deformation::discriminant_membership;
use crate::classify::{classify_f4, Crossings, F4Type, OvalState};
use crate::error::{Error, Result};
use crate::exactpoly::{rat, ratio, Rational};

/// Side of the boundary line an uncrossed oval should end up on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OvalSide {
    Left,
    Right,
}

impl OvalSide {
    /// The type the perturbed seed is expected to realize.
    pub fn target_type(self) -> F4Type {
        match self {
            OvalSide::Left => F4Type::new(Crossings::ThreeAscending, OvalState::Left),
            OvalSide::Right => F4Type::new(Crossings::ThreeDescending, OvalState::Right),
        }
    }
}

/// Point of the stratum where `f` has a Morse critical point with value zero
/// on the boundary, at `(0, y0)`: `(a, b, c, d) = (-c y0, -3 y0^2, c, 2 y0^3)`.
/// The boundary cubic is `(y - y0)^2 (y + 2 y0)`.
pub fn xi0_point(y0: &Rational, c: &Rational) -> Parameter {
    Parameter::new(vec![
        -(c * y0),
        rat(-3) * y0 * y0,
        c.clone(),
        rat(2) * y0 * y0 * y0,
    ])
}

/// The `c` used for the seeds: `|c| = 1 + 12 y0`, which makes the critical
/// point a saddle, with sign chosen by the side.
pub fn xi0_c(side: OvalSide, y0: &Rational) -> Rational {
    let m = rat(1) + rat(12) * y0;
    match side {
        OvalSide::Left => m,
        OvalSide::Right => -m,
    }
}

/// Perturbs the seed point `xi0_point(y0, xi0_c(side, y0))` off the
/// discriminant: translate `x -> x - s` with `s = eps` for the right side and
/// `s = -eps` for the left, then raise `d` by `delta`. With `eps = delta = 0`
/// the seed point itself is returned.
///
/// # Errors
/// `SeedNotSmallEnough` if the perturbed parameter is singular or does not
/// realize [`OvalSide::target_type`].
pub fn f4_seed_oval_side(
    side: OvalSide,
    y0: &Rational,
    eps: &Rational,
    delta: &Rational,
) -> Result<Parameter> {
    assert!(y0.is_positive(), "y0 must be positive");
    let c = xi0_c(side, y0);
    let base = xi0_point(y0, &c);
    if eps.is_zero() && delta.is_zero() {
        return Ok(base);
    }
    let s = match side {
        OvalSide::Right => eps.clone(),
        OvalSide::Left => -eps,
    };
    let l = base.values();
    let a = &l[0] - rat(2) * &s;
    let b = &l[1] - &c * &s;
    let d = &l[3] + &s * &s - &l[0] * &s + delta;
    let lambda = Parameter::new(vec![a, b, c, d]);
    let f4 = SingularityClass::f4(Sign::Plus);
    if !discriminant_membership(&f4, &lambda)?.is_nonsingular() {
        return Err(Error::SeedNotSmallEnough);
    }
    match classify_f4(&lambda) {
        Ok(desc) if desc.topological_type() == side.target_type() => Ok(lambda),
        _ => Err(Error::SeedNotSmallEnough),
    }
}

/// Result of the halving search for a seed perturbation.
#[derive(Clone, Debug, Serialize)]
pub struct SeedSearch {
    pub side: OvalSide,
    pub lambda: Parameter,
    #[serde(with = "crate::exactpoly::rational::serde_rational")]
    pub epsilon: Rational,
    #[serde(with = "crate::exactpoly::rational::serde_rational")]
    pub delta: Rational,
    pub steps: usize,
}

/// Starting from `eps = 1/8`, `delta = 1/64`, halves both until
/// [`f4_seed_oval_side`] succeeds, for at most 40 steps.
pub fn find_f4_seed(side: OvalSide, y0: &Rational) -> Result<SeedSearch> {
    let mut eps = ratio(1, 8);
    let mut delta = ratio(1, 64);
    for steps in 0..40 {
        match f4_seed_oval_side(side, y0, &eps, &delta) {
            Ok(lambda) => {
                return Ok(SeedSearch {
                    side,
                    lambda,
                    epsilon: eps,
                    delta,
                    steps,
                })
            }
            Err(Error::SeedNotSmallEnough) => {
                eps /= rat(2);
                delta /= rat(2);
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::SeedNotSmallEnough)
}
