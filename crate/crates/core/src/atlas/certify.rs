use num::{BigInt, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify, realized_catalog, BCSignature, TypeKind};
use crate::error::{Error, Result};
use crate::exactpoly::{
    midpoint, rat, ratio, real_roots, sturm_count, Interval, Rational, RealAlgebraic, UniPoly,
};
use crate::models::{
    boundary_polynomial, discriminant_membership, reduce_f4_minus, restricted_sigma, Parameter, Sign,
    SingularityClass,
};

use super::construct::{canonical_definite_factor, canonical_roots, parameter_from_h};

/// Proof that the segment between two parameters avoids the discriminant:
/// the product of the discriminant polynomials restricted to the segment has
/// no root in the closed interval `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentProof {
    pub from: Parameter,
    pub to: Parameter,
    #[serde(serialize_with = "poly_in_t")]
    pub restricted: UniPoly,
    pub sturm_count: usize,
}

impl SegmentProof {
    /// The same proof for the segment traversed backwards: `t -> 1 - t`.
    pub fn reversed(self) -> SegmentProof {
        let flip = UniPoly::from_ints(&[1, -1]);
        let mut acc = UniPoly::zero();
        for c in self.restricted.coeffs().iter().rev() {
            acc = &(&acc * &flip) + &UniPoly::constant(c.clone());
        }
        SegmentProof {
            from: self.to,
            to: self.from,
            restricted: acc,
            sturm_count: self.sturm_count,
        }
    }
}

fn poly_in_t<S: serde::Serializer>(p: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text("t"))
}

/// A root in `[0, 1]` of the restricted product, isolated by `interval`.
/// `components` names the factors that vanish in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingWitness {
    pub from: Parameter,
    pub to: Parameter,
    pub restricted: String,
    pub interval: Interval,
    pub components: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum SegmentOutcome {
    Certified(SegmentProof),
    Crossing(CrossingWitness),
}

impl SegmentOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, SegmentOutcome::Certified(_))
    }
}

/// A piecewise-linear path with a proof for every segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCertificate {
    pub class: SingularityClass,
    pub waypoints: Vec<Parameter>,
    pub segments: Vec<SegmentProof>,
    pub segment_checks: usize,
}

impl PathCertificate {
    /// Re-checks every segment from scratch.
    pub fn verify(&self) -> bool {
        self.segments.len() + 1 == self.waypoints.len()
            && self.segments.iter().zip(self.waypoints.windows(2)).all(|(s, w)| {
                s.from == w[0]
                    && s.to == w[1]
                    && matches!(
                        certify_segment(&self.class, &w[0], &w[1]),
                        Ok(SegmentOutcome::Certified(_))
                    )
            })
    }
}

/// Decides whether the straight segment from `l0` to `l1` avoids the
/// discriminant.
///
/// # Errors
/// `DiscriminantEndpoint` if an endpoint is on the discriminant.
pub fn certify_segment(class: &SingularityClass, l0: &Parameter, l1: &Parameter) -> Result<SegmentOutcome> {
    for l in [l0, l1] {
        if !discriminant_membership(class, l)?.is_nonsingular() {
            return Err(Error::DiscriminantEndpoint);
        }
    }
    let factors = restricted_sigma(class, l0, l1)?;
    let product = &factors[0] * &factors[1];
    let unit = Interval::closed(rat(0), rat(1));
    let crossing = |interval: Interval, components: Vec<&'static str>| {
        SegmentOutcome::Crossing(CrossingWitness {
            from: l0.clone(),
            to: l1.clone(),
            restricted: product.to_text("t"),
            interval,
            components,
        })
    };
    if product.is_zero() {
        return Ok(crossing(unit, vec!["sigma0", "sigma1"]));
    }
    let n = sturm_count(&product, &unit)?;
    if n == 0 {
        return Ok(SegmentOutcome::Certified(SegmentProof {
            from: l0.clone(),
            to: l1.clone(),
            restricted: product.clone(),
            sturm_count: 0,
        }));
    }
    let mut components = Vec::new();
    for (name, f) in ["sigma0", "sigma1"].into_iter().zip(&factors) {
        if f.is_zero() || sturm_count(f, &unit)? > 0 {
            components.push(name);
        }
    }
    let mut root = real_roots(&product)?
        .into_iter()
        .find(|r| r.cmp_rational(&rat(0)).is_ge() && r.cmp_rational(&rat(1)).is_le())
        .expect("Sturm count reported a root in [0, 1]");
    root.refine_to(&ratio(1, 1024));
    Ok(crossing(root.interval(), components))
}

struct Search<'a> {
    class: &'a SingularityClass,
    budget: usize,
    checks: usize,
    segments: Vec<SegmentProof>,
    rng: ChaCha8Rng,
}

impl Search<'_> {
    fn check(&mut self, a: &Parameter, b: &Parameter) -> Result<bool> {
        if self.checks >= self.budget {
            return Err(Error::NotFound { budget: self.budget });
        }
        self.checks += 1;
        match certify_segment(self.class, a, b)? {
            SegmentOutcome::Certified(p) => {
                self.segments.push(p);
                Ok(true)
            }
            SegmentOutcome::Crossing(_) => Ok(false),
        }
    }

    /// Certifies the curve `gamma` on `[ta, tb]` by straight segments,
    /// bisecting in `t` on failure.
    fn follow(
        &mut self,
        gamma: &dyn Fn(&Rational) -> Parameter,
        ta: &Rational,
        tb: &Rational,
        depth: usize,
    ) -> Result<bool> {
        let (a, b) = (gamma(ta), gamma(tb));
        if self.check(&a, &b)? {
            return Ok(true);
        }
        if depth == 0 {
            return Ok(false);
        }
        let tm = midpoint(ta, tb);
        let mark = self.segments.len();
        if self.follow(gamma, ta, &tm, depth - 1)? && self.follow(gamma, &tm, tb, depth - 1)? {
            return Ok(true);
        }
        self.segments.truncate(mark);
        Ok(false)
    }

    /// Connects `a` to `b` inside the component of type `kind` by recursive
    /// subdivision at jittered midpoints.
    fn connect(&mut self, kind: &TypeKind, a: &Parameter, b: &Parameter, depth: usize) -> Result<bool> {
        if self.check(a, b)? {
            return Ok(true);
        }
        if depth == 0 {
            return Ok(false);
        }
        let spread = a
            .values()
            .iter()
            .zip(b.values())
            .map(|(x, y)| (x - y).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        let den = 1i64 << (8 + 2 * (6usize.saturating_sub(depth)).min(10));
        for attempt in 0..4 {
            let scale = &spread / rat(2 << attempt);
            let m = Parameter::new(
                a.values()
                    .iter()
                    .zip(b.values())
                    .map(|(x, y)| {
                        let u: i64 = self.rng.gen_range(-1000..=1000);
                        round_to(&(midpoint(x, y) + &scale * ratio(u, 1000)), den)
                    })
                    .collect(),
            );
            if !matches!(classify(self.class, &m), Ok(c) if &c.kind == kind) {
                continue;
            }
            let mark = self.segments.len();
            if self.connect(kind, a, &m, depth - 1)? && self.connect(kind, &m, b, depth - 1)? {
                return Ok(true);
            }
            self.segments.truncate(mark);
        }
        Ok(false)
    }
}

fn round_to(x: &Rational, den: i64) -> Rational {
    let d = Rational::from_integer(BigInt::from(den));
    (x * &d).round() / d
}

/// Interpolation data for a B/C parameter: `h = lead * R * Q` with `R`
/// having rational roots close to the real roots of `h` and `Q` positive.
struct RootApprox {
    roots: Vec<Rational>,
    definite: UniPoly,
}

fn approximate_roots(class: &SingularityClass, lambda: &Parameter, width: &Rational) -> Result<Option<RootApprox>> {
    let h = boundary_polynomial(class, lambda)?;
    let mut roots: Vec<RealAlgebraic> = real_roots(&h)?;
    let mut mids = Vec::with_capacity(roots.len());
    for r in roots.iter_mut() {
        r.refine_to(width);
        while r.cmp_rational(&rat(0)).is_ne() && {
            let (lo, hi) = r.bounds();
            lo.is_negative() != hi.is_negative() || lo.is_zero() || hi.is_zero()
        } && r.exact().is_none()
        {
            r.refine();
        }
        let (lo, hi) = r.bounds();
        mids.push(midpoint(&lo, &hi));
    }
    let monic = h.monic();
    let (definite, _) = monic.div_rem(&UniPoly::from_roots(&mids));
    if sturm_count(&definite, &Interval::real_line())? > 0 {
        return Ok(None);
    }
    Ok(Some(RootApprox {
        roots: mids,
        definite,
    }))
}

/// Waypoint curve from the approximation to the canonical representative:
/// roots and the definite factor are interpolated linearly.
fn interpolation_curve(
    class: SingularityClass,
    approx: &RootApprox,
    sig: BCSignature,
) -> impl Fn(&Rational) -> Parameter {
    let target_roots = canonical_roots(sig);
    let target_q = canonical_definite_factor((class.mu() - sig.p - sig.q) / 2);
    let roots = approx.roots.clone();
    let q0 = approx.definite.clone();
    move |t: &Rational| {
        let s = rat(1) - t;
        let rt: Vec<Rational> = roots
            .iter()
            .zip(&target_roots)
            .map(|(a, b)| a * &s + b * t)
            .collect();
        let q = &q0.scale(&s) + &target_q.scale(t);
        snap(&class, parameter_from_h(&class, &(&UniPoly::from_roots(&rt) * &q)), sig)
    }
}

/// The coarsest dyadic rounding of `lambda` that keeps the signature, or
/// `lambda` itself. Small denominators keep the segment checks cheap.
fn snap(class: &SingularityClass, lambda: Parameter, sig: BCSignature) -> Parameter {
    for bits in (6..=60).step_by(6) {
        let den = 1i64 << bits;
        let rounded = Parameter::new(lambda.values().iter().map(|x| round_to(x, den)).collect());
        if matches!(classify(class, &rounded), Ok(c) if c.kind == TypeKind::BC(sig)) {
            return rounded;
        }
    }
    lambda
}

/// Path from `lambda` to the canonical representative of `sig`.
fn bc_leg(search: &mut Search, lambda: &Parameter, sig: BCSignature) -> Result<bool> {
    let class = *search.class;
    let mut width = ratio(1, 256);
    for _ in 0..8 {
        if let Some(approx) = approximate_roots(&class, lambda, &width)? {
            let mark = search.segments.len();
            let gamma = interpolation_curve(class, &approx, sig);
            if search.check(lambda, &gamma(&rat(0)))? {
                let mut ok = true;
                let steps = 8i64;
                for j in 0..steps {
                    if !search.follow(&gamma, &ratio(j, steps), &ratio(j + 1, steps), 10)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return Ok(true);
                }
            }
            search.segments.truncate(mark);
        }
        width /= rat(16);
    }
    Ok(false)
}

/// Certified path between two parameters of the same type.
///
/// B and C: the straight segment, else a path through the canonical
/// representative obtained by interpolating roots. F4: the straight segment,
/// then recursive subdivision at jittered midpoints, then routing through
/// the catalog representative. Every segment check counts against `budget`.
///
/// # Errors
/// `TypeMismatch` for endpoints of different types; `DiscriminantEndpoint`
/// for an endpoint on the discriminant; `NotFound` when the budget runs out,
/// which is inconclusive and not evidence of disconnection.
pub fn certify_path(
    class: &SingularityClass,
    l0: &Parameter,
    l1: &Parameter,
    budget: usize,
) -> Result<PathCertificate> {
    let kind = |l: &Parameter| match classify(class, l) {
        Ok(c) => Ok(c.kind),
        Err(Error::DiscriminantParameter(_)) => Err(Error::DiscriminantEndpoint),
        Err(e) => Err(e),
    };
    let k0 = kind(l0)?;
    if k0 != kind(l1)? {
        return Err(Error::TypeMismatch);
    }
    let mut search = Search {
        class,
        budget,
        checks: 0,
        segments: Vec::new(),
        rng: ChaCha8Rng::seed_from_u64(0x9e37_79b9),
    };
    let found = if search.check(l0, l1)? {
        true
    } else {
        match k0 {
            TypeKind::BC(sig) => {
                bc_leg(&mut search, l0, sig)? && {
                    let mark = search.segments.len();
                    let ok = bc_leg(&mut search, l1, sig)?;
                    if ok {
                        let tail: Vec<SegmentProof> = search.segments.drain(mark..).collect();
                        search
                            .segments
                            .extend(tail.into_iter().rev().map(SegmentProof::reversed));
                    }
                    ok
                }
            }
            TypeKind::F4(t) => {
                search.connect(&k0, l0, l1, 6)? || {
                    search.segments.clear();
                    let rep = realized_catalog()?
                        .representative(&t)
                        .cloned()
                        .ok_or(Error::CatalogMissing)?;
                    let rep = match class.sign() {
                        Sign::Plus => rep,
                        Sign::Minus => reduce_f4_minus(&rep),
                    };
                    search.connect(&k0, l0, &rep, 6)? && search.connect(&k0, &rep, l1, 6)?
                }
            }
        }
    };
    if !found {
        return Err(Error::NotFound { budget });
    }
    let mut waypoints = vec![l0.clone()];
    waypoints.extend(search.segments.iter().map(|s| s.to.clone()));
    Ok(PathCertificate {
        class: *class,
        waypoints,
        segments: search.segments,
        segment_checks: search.checks,
    })
}

/// Budget used when the caller does not choose one.
pub const DEFAULT_BUDGET: usize = 400;
