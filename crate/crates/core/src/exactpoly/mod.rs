//! Exact rational polynomial kernel.
//!
//! Everything here is exact: coefficients are [`BigRational`](num::BigRational)s,
//! root counting uses Sturm sequences built from pseudo-remainders with the
//! content stripped, and resultants are evaluated by fraction-free elimination.

pub mod interval;
pub mod multipoly;
pub mod rational;
pub mod resultant;
pub mod sturm;
pub mod unipoly;

pub use interval::{Endpoint, Interval};
pub use multipoly::MultiPoly;
pub use rational::{format_rational, from_f64, midpoint, parse_rational, rat, ratio, to_f64, Rational};
pub use resultant::{
    bareiss_determinant, interpolate, resultant, resultant_with_derivative, univariate_resultant,
};
pub use sturm::{
    isolate_real_roots, real_roots, root_signature, squarefree_decomposition, sturm_count,
    RealAlgebraic, RootSignature, SquarefreeDecomposition, SturmChain,
};
pub use unipoly::UniPoly;

use crate::error::Result;

/// Exact value of `poly` at `point`.
pub fn eval(poly: &MultiPoly, point: &[Rational]) -> Result<Rational> {
    poly.eval(point)
}

/// `poly((1−t)·p0 + t·p1)` as a polynomial in `t`.
pub fn restrict_to_segment(poly: &MultiPoly, p0: &[Rational], p1: &[Rational]) -> Result<UniPoly> {
    poly.restrict_to_segment(p0, p1)
}
