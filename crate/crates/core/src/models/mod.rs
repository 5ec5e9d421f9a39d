//! Singularity classes, miniversal deformations and discriminant membership.

mod class;
mod deformation;
mod eliminant;
mod seeds;

use serde::{Deserialize, Serialize};

pub use class::{Parameter, Sign, SingularityClass};
pub use deformation::{
    boundary_polynomial, deformation_polynomial, discriminant_membership, h_polynomial,
    reduce_f4_minus, symbolic_h,
};
pub use eliminant::{
    compute_f4_sigma0_eliminant, f4_sigma0_eliminant, f4_sigma1_polynomial, is_squarefree_certified,
    restricted_sigma, sigma_polynomials, SigmaPolynomials,
};
pub use seeds::{f4_seed_oval_side, find_f4_seed, xi0_c, xi0_point, OvalSide, SeedSearch};

/// Where a parameter sits relative to the two discriminant components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Membership {
    NonSingular,
    Sigma0,
    Sigma1,
    Both,
}

impl Membership {
    pub fn from_flags(sigma0: bool, sigma1: bool) -> Self {
        match (sigma0, sigma1) {
            (false, false) => Membership::NonSingular,
            (true, false) => Membership::Sigma0,
            (false, true) => Membership::Sigma1,
            (true, true) => Membership::Both,
        }
    }

    pub fn is_nonsingular(self) -> bool {
        self == Membership::NonSingular
    }

    pub fn in_sigma0(self) -> bool {
        matches!(self, Membership::Sigma0 | Membership::Both)
    }

    pub fn in_sigma1(self) -> bool {
        matches!(self, Membership::Sigma1 | Membership::Both)
    }
}
