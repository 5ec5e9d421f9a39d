//! Enumeration of the components of the discriminant complement, explicit
//! representatives and exact path certificates.

mod certify;
mod construct;
mod sampling;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use certify::{
    certify_path, certify_segment, CrossingWitness, PathCertificate, SegmentOutcome, SegmentProof,
    DEFAULT_BUDGET,
};
pub use construct::{canonical_definite_factor, canonical_roots, construct_representative, parameter_from_h};
pub use sampling::{random_bc_member, random_member, sample_type_near, SamplingConfig, MAX_GRID};

use crate::classify::{catalog_id, classify, oval_side_seeds, slice_seeds, BCSignature, TypeKind, CATALOG_TYPES};
use crate::error::Error;
use crate::models::{reduce_f4_minus, Membership, Parameter, Sign, SingularityClass};

/// Where a point of the atlas came from. Seeds order before samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum Source {
    Seed(usize),
    Sample(usize),
}

/// Outcome of one sampled or seeded parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub source: Source,
    pub lambda: Parameter,
    pub membership: Membership,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub kind: Option<TypeKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejection: Option<String>,
}

/// Statistics for one realized type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeEntry {
    #[serde(rename = "type")]
    pub kind: TypeKind,
    pub count: usize,
    pub representative: Parameter,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog_id: Option<u8>,
    /// For F4: a point of this type on the slice `c = 0`, if one was seen.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slice_representative: Option<Parameter>,
    #[serde(skip)]
    slice_source: Option<Source>,
}

impl TypeEntry {
    fn from_record(r: &SampleRecord, kind: TypeKind) -> Self {
        let on_slice = sampling::is_slice_point(&r.lambda);
        TypeEntry {
            kind,
            count: 1,
            representative: r.lambda.clone(),
            source: r.source,
            catalog_id: match kind {
                TypeKind::F4(t) => catalog_id(&t),
                TypeKind::BC(_) => None,
            },
            slice_representative: on_slice.then(|| r.lambda.clone()),
            slice_source: on_slice.then_some(r.source),
        }
    }

    fn merge(mut self, other: TypeEntry) -> Self {
        self.count += other.count;
        if other.source < self.source {
            self.representative = other.representative;
            self.source = other.source;
        }
        match (self.slice_source, other.slice_source) {
            (_, None) => {}
            (Some(a), Some(b)) if a <= b => {}
            _ => {
                self.slice_representative = other.slice_representative;
                self.slice_source = other.slice_source;
            }
        }
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    types: BTreeMap<TypeKind, TypeEntry>,
    rejections: BTreeMap<String, usize>,
    total: usize,
}

impl Tally {
    fn add(mut self, r: SampleRecord) -> Self {
        self.total += 1;
        match (r.kind, &r.rejection) {
            (Some(kind), _) => {
                let e = TypeEntry::from_record(&r, kind);
                let merged = match self.types.remove(&kind) {
                    Some(old) => old.merge(e),
                    None => e,
                };
                self.types.insert(kind, merged);
            }
            (None, reason) => {
                let key = reason.clone().unwrap_or_else(|| "unknown".into());
                *self.rejections.entry(key).or_default() += 1;
            }
        }
        self
    }

    fn merge(mut self, other: Tally) -> Self {
        self.total += other.total;
        for (k, v) in other.rejections {
            *self.rejections.entry(k).or_default() += v;
        }
        for (k, e) in other.types {
            let merged = match self.types.remove(&k) {
                Some(old) => old.merge(e),
                None => e,
            };
            self.types.insert(k, merged);
        }
        self
    }
}

fn serialize_types<S: Serializer>(
    types: &BTreeMap<TypeKind, TypeEntry>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let keyed: BTreeMap<String, &TypeEntry> = types.iter().map(|(k, v)| (k.canonical_json(), v)).collect();
    keyed.serialize(s)
}

/// Result of [`enumerate_components`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasReport {
    pub class: SingularityClass,
    pub expected_count: usize,
    pub realized_count: usize,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(rename = "realized", serialize_with = "serialize_types")]
    pub types: BTreeMap<TypeKind, TypeEntry>,
    pub rejections: BTreeMap<String, usize>,
    pub seeds: usize,
    pub samples: usize,
    pub config: SamplingConfig,
}

impl AtlasReport {
    /// Types with a representative on the slice `c = 0` (F4 only).
    pub fn slice_types(&self) -> Vec<TypeKind> {
        self.types
            .values()
            .filter(|e| e.slice_representative.is_some())
            .map(|e| e.kind)
            .collect()
    }
}

fn membership_key(m: Membership) -> &'static str {
    match m {
        Membership::NonSingular => "nonsingular",
        Membership::Sigma0 => "sigma0",
        Membership::Sigma1 => "sigma1",
        Membership::Both => "both",
    }
}

/// Classifies one point; a non-generic F4 point is jittered once.
fn record(class: &SingularityClass, cfg: &SamplingConfig, source: Source, lambda: Parameter) -> SampleRecord {
    let attempt = |l: &Parameter| classify(class, l);
    let (lambda, result) = match attempt(&lambda) {
        Err(Error::NonGenericConfiguration) => {
            let index = match source {
                Source::Seed(i) => i as u64 | (1 << 63),
                Source::Sample(i) => i as u64,
            };
            let mut rng = cfg.rng_for(index ^ (1 << 62));
            let moved = cfg.jitter(&lambda, &mut rng);
            let r = attempt(&moved);
            (moved, r)
        }
        other => (lambda, other),
    };
    match result {
        Ok(c) => SampleRecord {
            source,
            lambda,
            membership: c.membership,
            kind: Some(c.kind),
            rejection: None,
        },
        Err(Error::DiscriminantParameter(m)) => SampleRecord {
            source,
            lambda,
            membership: m,
            kind: None,
            rejection: Some(membership_key(m).into()),
        },
        Err(e) => SampleRecord {
            source,
            lambda,
            membership: Membership::NonSingular,
            kind: None,
            rejection: Some(match e {
                Error::NonGenericConfiguration => "non-generic".into(),
                other => other.to_string(),
            }),
        },
    }
}

/// Constructive seeds: every root signature for B and C; the six slice
/// points and the two oval-side seeds for F4.
pub fn constructive_seeds(class: &SingularityClass) -> Vec<Parameter> {
    if class.is_bc() {
        return BCSignature::all(class.mu())
            .into_iter()
            .map(|sig| construct_representative(class, sig).expect("admissible signature"))
            .collect();
    }
    let mut seeds: Vec<Parameter> = slice_seeds().into_iter().map(|(_, l)| l).collect();
    if let Ok(extra) = oval_side_seeds() {
        seeds.extend(extra.into_iter().map(|(_, l)| l));
    }
    match class.sign() {
        Sign::Plus => seeds,
        Sign::Minus => seeds.iter().map(reduce_f4_minus).collect(),
    }
}

/// The `index`-th sample of the configuration: grid points first, then
/// random points.
pub fn sample_point(class: &SingularityClass, cfg: &SamplingConfig, index: usize) -> Parameter {
    let mu = class.mu();
    let grid = cfg.grid_size(mu);
    if index < grid {
        cfg.grid_point(mu, index)
    } else {
        cfg.random_point(mu, &mut cfg.rng_for(index as u64))
    }
}

/// Samples the parameter space, adds the constructive seeds and collects the
/// realized types. The result depends only on `class` and `cfg`, not on the
/// number of worker threads.
pub fn enumerate_components(class: &SingularityClass, cfg: &SamplingConfig) -> AtlasReport {
    let seeds = constructive_seeds(class);
    let n_samples = cfg.grid_size(class.mu()) + cfg.random_count;
    let seeded = seeds
        .par_iter()
        .enumerate()
        .map(|(i, l)| record(class, cfg, Source::Seed(i), l.clone()));
    let sampled = (0..n_samples)
        .into_par_iter()
        .map(|i| record(class, cfg, Source::Sample(i), sample_point(class, cfg, i)));
    let tally = seeded
        .chain(sampled)
        .fold(Tally::default, Tally::add)
        .reduce(Tally::default, Tally::merge);
    let expected_count = class.expected_component_count();
    AtlasReport {
        class: *class,
        expected_count,
        realized_count: tally.types.len(),
        matches: tally.types.len() == expected_count,
        types: tally.types,
        rejections: tally.rejections,
        seeds: seeds.len(),
        samples: n_samples,
        config: cfg.clone(),
    }
}

/// Comparison of a report with the component count of the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Check {
    pub class: SingularityClass,
    pub expected: usize,
    pub realized: usize,
    pub pass: bool,
    pub missing: Vec<TypeKind>,
    pub extra: Vec<TypeKind>,
}

/// The types a complete atlas of `class` realizes.
pub fn expected_types(class: &SingularityClass) -> Vec<TypeKind> {
    if class.is_bc() {
        BCSignature::all(class.mu()).into_iter().map(TypeKind::BC).collect()
    } else {
        CATALOG_TYPES.iter().map(|(_, t)| TypeKind::F4(*t)).collect()
    }
}

pub fn verify_against_table1(report: &AtlasReport) -> Table1Check {
    let expected_types = expected_types(&report.class);
    let missing: Vec<TypeKind> = expected_types
        .iter()
        .filter(|t| !report.types.contains_key(t))
        .copied()
        .collect();
    let extra: Vec<TypeKind> = report
        .types
        .keys()
        .filter(|t| !expected_types.contains(t))
        .copied()
        .collect();
    let expected = report.class.expected_component_count();
    Table1Check {
        class: report.class,
        expected,
        realized: report.types.len(),
        pass: report.types.len() == expected && missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    }
}
