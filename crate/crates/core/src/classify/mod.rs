//! Topological type of the set of lower values `{f <= 0}` for parameters off
//! the discriminant.

mod bc;
mod catalog;
mod f4;

use serde::{Deserialize, Serialize};

pub use bc::{classify_bc, BCSignature};
pub use catalog::{
    catalog_id, oval_side_seeds, realized_catalog, slice_seeds, Catalog, CatalogEntry, CATALOG_TYPES,
};
pub use f4::{
    classify_f4, classify_f4_class, support_polynomial, Component, Crossings, F4Descriptor, F4Type,
    OvalState, RootTag,
};

use crate::error::{Error, Result};
use crate::models::{discriminant_membership, Membership, Parameter, SingularityClass};

/// The invariant for a single class: a root signature or an F4 type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TypeKind {
    BC(BCSignature),
    F4(F4Type),
}

impl TypeKind {
    /// Compact canonical JSON, used as a map key in reports.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// A type together with the class it was computed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LowerSetType {
    pub class: SingularityClass,
    pub kind: TypeKind,
}

/// Full classification record of a parameter off the discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub membership: Membership,
    #[serde(rename = "type")]
    pub kind: TypeKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<F4Descriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog_id: Option<u8>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub reduced: bool,
}

/// Classifies `lambda` for any class.
///
/// # Errors
/// `DiscriminantParameter` (carrying the membership) on the discriminant,
/// `NonGenericConfiguration` for F4 boundary folds, `ArityMismatch`.
pub fn classify(class: &SingularityClass, lambda: &Parameter) -> Result<Classification> {
    let membership = discriminant_membership(class, lambda)?;
    if !membership.is_nonsingular() {
        return Err(Error::DiscriminantParameter(membership));
    }
    if class.is_bc() {
        return Ok(Classification {
            membership,
            kind: TypeKind::BC(classify_bc(class, lambda)?),
            descriptor: None,
            catalog_id: None,
            reduced: false,
        });
    }
    let (d, reduced) = classify_f4_class(class, lambda)?;
    let t = d.topological_type();
    Ok(Classification {
        membership,
        kind: TypeKind::F4(t),
        catalog_id: catalog_id(&t),
        descriptor: Some(d),
        reduced,
    })
}

/// The [`LowerSetType`] of `lambda`.
pub fn lower_set_type(class: &SingularityClass, lambda: &Parameter) -> Result<LowerSetType> {
    Ok(LowerSetType {
        class: *class,
        kind: classify(class, lambda)?.kind,
    })
}
