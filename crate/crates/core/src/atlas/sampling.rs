use num::{BigInt, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, BCSignature, TypeKind};
use crate::error::Result;
use crate::exactpoly::rational::serde_rational;
use crate::exactpoly::{rat, ratio, Rational, UniPoly};
use crate::models::{Parameter, SingularityClass};

use super::construct::parameter_from_h;

/// Parameters of the seeded sampler.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingConfig {
    /// Samples lie in the box `[-box_radius, box_radius]^mu`.
    #[serde(with = "serde_rational")]
    pub box_radius: Rational,
    pub random_count: usize,
    /// Grid points per axis; the grid is skipped when it would exceed
    /// `MAX_GRID` points.
    pub grid_resolution: usize,
    pub rng_seed: u64,
    /// Random coordinates are multiples of `1 / denominator_bound`.
    pub denominator_bound: u64,
}

/// Largest grid that is still enumerated in full.
pub const MAX_GRID: usize = 100_000;

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            box_radius: rat(5),
            random_count: 10_000,
            grid_resolution: 5,
            rng_seed: 1,
            denominator_bound: 64,
        }
    }
}

impl SamplingConfig {
    pub fn grid_size(&self, mu: usize) -> usize {
        match self.grid_resolution.checked_pow(mu as u32) {
            Some(n) if n <= MAX_GRID => n,
            _ => 0,
        }
    }

    /// The `index`-th grid point, coordinates evenly spaced in the box.
    pub fn grid_point(&self, mu: usize, mut index: usize) -> Parameter {
        let res = self.grid_resolution;
        let mut out = Vec::with_capacity(mu);
        for _ in 0..mu {
            let i = index % res;
            index /= res;
            out.push(if res == 1 {
                Rational::zero()
            } else {
                -&self.box_radius + &self.box_radius * ratio(2 * i as i64, res as i64 - 1)
            });
        }
        Parameter::new(out)
    }

    /// Generator for the `index`-th random sample; independent of any other
    /// sample.
    pub fn rng_for(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.rng_seed);
        rng.set_stream(index);
        rng
    }

    /// Largest numerator for coordinates in the box.
    fn numerator_bound(&self) -> i64 {
        (&self.box_radius * Rational::from_integer(BigInt::from(self.denominator_bound)))
            .floor()
            .to_integer()
            .to_i64()
            .unwrap_or(i64::MAX / 2)
    }

    pub fn random_coordinate<R: Rng>(&self, rng: &mut R) -> Rational {
        let n = self.numerator_bound();
        ratio(rng.gen_range(-n..=n), self.denominator_bound as i64)
    }

    pub fn random_point<R: Rng>(&self, mu: usize, rng: &mut R) -> Parameter {
        Parameter::new((0..mu).map(|_| self.random_coordinate(rng)).collect())
    }

    /// Moves every coordinate by at most `1 / denominator_bound^2`.
    pub fn jitter<R: Rng>(&self, lambda: &Parameter, rng: &mut R) -> Parameter {
        let d = self.denominator_bound as i64;
        Parameter::new(
            lambda
                .values()
                .iter()
                .map(|v| v + ratio(rng.gen_range(-d..=d), d * d * d))
                .collect(),
        )
    }
}

/// Random point of the component with root signature `sig`: `p` negative
/// and `q` positive distinct roots drawn from a grid, the remaining factor a
/// product of random positive definite quadratics.
pub fn random_bc_member<R: Rng>(
    class: &SingularityClass,
    sig: BCSignature,
    radius: i64,
    rng: &mut R,
) -> Result<Parameter> {
    sig.validate(class.mu())?;
    let den = 16i64;
    let mut pick = |count: usize, negative: bool| -> Vec<Rational> {
        let mut vals: Vec<i64> = Vec::new();
        while vals.len() < count {
            let v = rng.gen_range(1..=radius * den);
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
        vals.into_iter()
            .map(|v| ratio(if negative { -v } else { v }, den))
            .collect()
    };
    let mut roots = pick(sig.p, true);
    roots.extend(pick(sig.q, false));
    let mut h = UniPoly::from_roots(&roots);
    for _ in 0..(class.mu() - sig.p - sig.q) / 2 {
        let b = ratio(rng.gen_range(-radius * den..=radius * den), den);
        let margin = ratio(rng.gen_range(1..=radius * den), den);
        let c = &b * &b / rat(4) + margin;
        h = &h * &UniPoly::new(vec![c, b, rat(1)]);
    }
    Ok(parameter_from_h(class, &h))
}

/// Rejection sampler for a point of a given type inside `[-r, r]^mu` around
/// `center`, trying at most `attempts` points.
pub fn sample_type_near<R: Rng>(
    class: &SingularityClass,
    kind: &TypeKind,
    center: &Parameter,
    radius: &Rational,
    denominator: i64,
    attempts: usize,
    rng: &mut R,
) -> Option<Parameter> {
    let n = (radius * Rational::from_integer(BigInt::from(denominator)))
        .floor()
        .to_integer()
        .to_i64()
        .unwrap_or(1)
        .max(1);
    for _ in 0..attempts {
        let lambda = Parameter::new(
            center
                .values()
                .iter()
                .map(|c| c + ratio(rng.gen_range(-n..=n), denominator))
                .collect(),
        );
        if let Ok(c) = classify(class, &lambda) {
            if &c.kind == kind {
                return Some(lambda);
            }
        }
    }
    None
}

pub(crate) fn is_slice_point(lambda: &Parameter) -> bool {
    lambda.len() == 4 && lambda.values()[2].is_zero()
}

/// A random parameter of the given type. B and C use [`random_bc_member`].
/// F4 first draws from the box `[-5, 5]^4` and falls back to shrinking boxes
/// around the catalog representative for types that are rare in the box.
pub fn random_member<R: Rng>(class: &SingularityClass, kind: &TypeKind, rng: &mut R) -> Option<Parameter> {
    match kind {
        TypeKind::BC(sig) => random_bc_member(class, *sig, 3, rng).ok(),
        TypeKind::F4(t) => {
            let cfg = SamplingConfig::default();
            for _ in 0..400 {
                let lambda = cfg.random_point(4, rng);
                if matches!(classify(class, &lambda), Ok(c) if &c.kind == kind) {
                    return Some(lambda);
                }
            }
            let rep = crate::classify::realized_catalog().ok()?.representative(t)?.clone();
            let rep = match class.sign() {
                crate::models::Sign::Plus => rep,
                crate::models::Sign::Minus => crate::models::reduce_f4_minus(&rep),
            };
            let mut radius = rat(1);
            for _ in 0..12 {
                if let Some(l) = sample_type_near(class, kind, &rep, &radius, 4096, 50, rng) {
                    return Some(l);
                }
                radius /= rat(2);
            }
            None
        }
    }
}
