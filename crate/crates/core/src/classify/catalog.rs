use std::sync::OnceLock;

use serde::Serialize;

use super::f4::{classify_f4, Crossings, F4Type, OvalState};
use crate::error::{Error, Result};
use crate::exactpoly::rat;
use crate::models::{find_f4_seed, OvalSide, Parameter};

/// Conventional numbering of the realized F4 types. Types 1 to 6 occur on
/// the slice `c = 0`, types 7 and 8 only off it.
pub const CATALOG_TYPES: [(u8, F4Type); 8] = [
    (1, F4Type { crossings: Crossings::One, oval: OvalState::Absent }),
    (2, F4Type { crossings: Crossings::ThreeAscending, oval: OvalState::Absent }),
    (3, F4Type { crossings: Crossings::ThreeDescending, oval: OvalState::Absent }),
    (4, F4Type { crossings: Crossings::One, oval: OvalState::Right }),
    (5, F4Type { crossings: Crossings::One, oval: OvalState::Left }),
    (6, F4Type { crossings: Crossings::One, oval: OvalState::Crossed }),
    (7, F4Type { crossings: Crossings::ThreeDescending, oval: OvalState::Right }),
    (8, F4Type { crossings: Crossings::ThreeAscending, oval: OvalState::Left }),
];

/// Hand-picked points of the slice `c = 0`, one per slice type, by id.
pub fn slice_seeds() -> Vec<(u8, Parameter)> {
    let p = |s: [&str; 4]| Parameter::parse(&s).expect("valid literal");
    vec![
        (1, p(["1", "1", "0", "0"])),
        (2, p(["-2", "-3", "0", "-3/2"])),
        (3, p(["2", "-3", "0", "-3/2"])),
        (4, p(["-2", "-3", "0", "5/2"])),
        (5, p(["2", "-3", "0", "5/2"])),
        (6, p(["1", "-1", "0", "0"])),
    ]
}

/// The two off-slice seeds obtained by perturbing boundary Morse points with
/// `y0 = 1`, by id.
pub fn oval_side_seeds() -> Result<Vec<(u8, Parameter)>> {
    let y0 = rat(1);
    Ok(vec![
        (7, find_f4_seed(OvalSide::Right, &y0)?.lambda),
        (8, find_f4_seed(OvalSide::Left, &y0)?.lambda),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: u8,
    #[serde(rename = "type")]
    pub f4_type: F4Type,
    pub representative: Parameter,
    pub on_slice: bool,
}

/// The eight realized F4 types with a representative each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Builds the catalog from the stored seeds, classifying each one.
    ///
    /// # Errors
    /// `CatalogMissing` if a seed does not classify to its stored type.
    pub fn from_seeds() -> Result<Catalog> {
        let mut seeds = slice_seeds();
        seeds.extend(oval_side_seeds().map_err(|_| Error::CatalogMissing)?);
        let mut entries = Vec::new();
        for ((id, lambda), (cid, t)) in seeds.into_iter().zip(CATALOG_TYPES) {
            debug_assert_eq!(id, cid);
            let d = classify_f4(&lambda).map_err(|_| Error::CatalogMissing)?;
            if d.topological_type() != t {
                return Err(Error::CatalogMissing);
            }
            let on_slice = lambda.values()[2] == rat(0);
            entries.push(CatalogEntry {
                id,
                f4_type: t,
                representative: lambda,
                on_slice,
            });
        }
        Ok(Catalog { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn id_of(&self, t: &F4Type) -> Option<u8> {
        self.entries.iter().find(|e| &e.f4_type == t).map(|e| e.id)
    }

    pub fn get(&self, id: u8) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn representative(&self, t: &F4Type) -> Option<&Parameter> {
        self.entries.iter().find(|e| &e.f4_type == t).map(|e| &e.representative)
    }
}

/// The stored catalog, built and validated once.
pub fn realized_catalog() -> Result<&'static Catalog> {
    static CELL: OnceLock<Result<Catalog>> = OnceLock::new();
    CELL.get_or_init(Catalog::from_seeds).as_ref().map_err(Clone::clone)
}

/// Catalog id for a type, if the type is realized.
pub fn catalog_id(t: &F4Type) -> Option<u8> {
    CATALOG_TYPES.iter().find(|(_, c)| c == t).map(|(id, _)| *id)
}
