//! Exact discriminants and component atlases for the simple real boundary
//! singularities `B_mu`, `C_mu` and `F4`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactpoly`] is an exact rational polynomial kernel (Sturm chains, root
//!   isolation, resultants).
//! * [`models`] holds the singularity classes, their miniversal deformations
//!   and exact discriminant membership.
//! * [`classify`] maps a parameter off the discriminant to the topological type
//!   of its set of lower values.
//! * [`atlas`] samples the parameter space, builds representatives and
//!   certifies paths between parameters.
//! * [`render`] draws zero sets and parameter slices as SVG.
//! * [`cli`] is the JSON command line front end.

pub mod atlas;
pub mod classify;
pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod models;
pub mod render;

pub use error::{Error, Result};
pub use models::{Membership, Parameter, Sign, SingularityClass};
