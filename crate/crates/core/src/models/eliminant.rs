use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::class::{Parameter, Sign, SingularityClass};
use super::deformation::symbolic_h;
use crate::exactpoly::{
    interpolate, rat, ratio, resultant, resultant_with_derivative, univariate_resultant, MultiPoly,
    Rational, UniPoly,
};

const F4_VARS: [&str; 4] = ["a", "b", "c", "d"];

/// `Res_y` of the critical point system of the `+x^2` family after solving
/// `2x + a + cy = 0` for `x`, normalized to a primitive polynomial in
/// `(a, b, c, d)` with positive leading coefficient.
///
/// # Panics
/// Panics if the result cannot be certified squarefree, which would be a
/// defect in the elimination.
pub fn compute_f4_sigma0_eliminant() -> MultiPoly {
    let v = MultiPoly::vars_of(&["y", "a", "b", "c", "d"]);
    let (y, a, b, c, d) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
    let x = (a + &(c * y)).scale(&ratio(-1, 2));
    let f = &(&(&(&x.pow(2) + &y.pow(3)) + &(a * &x)) + &(&(b * y) + &(&(c * &x) * y))) + d;
    let fy = &(&y.pow(2).scale(&rat(3)) + b) + &(c * &x);
    let r = resultant(&f, &fy, "y").expect("both equations have positive degree in y");
    let r = r.primitive();
    assert!(is_squarefree_certified(&r), "eliminant is not certified squarefree");
    r
}

/// Cached eliminant cutting out the critical-value component of the F4
/// discriminant.
pub fn f4_sigma0_eliminant() -> &'static MultiPoly {
    static CELL: OnceLock<MultiPoly> = OnceLock::new();
    CELL.get_or_init(compute_f4_sigma0_eliminant)
}

/// `27 d^2 + 4 b^3` over `(a, b, c, d)`.
pub fn f4_sigma1_polynomial() -> MultiPoly {
    MultiPoly::parse(&F4_VARS, "4*b^3 + 27*d^2").expect("valid literal")
}

/// Sufficient test for squarefreeness: restrict to a fixed line along which
/// the polynomial keeps its total degree and check the restriction.
///
/// A repeated factor `q^2` would restrict to a repeated factor of positive
/// degree, since the top-degree part of every factor is nonzero along the
/// direction. `false` means "not certified", not "has a square factor".
pub fn is_squarefree_certified(p: &MultiPoly) -> bool {
    let Some(deg) = p.total_degree() else {
        return false;
    };
    if deg == 0 {
        return true;
    }
    let n = p.arity();
    for attempt in 0..8i64 {
        let p0: Vec<Rational> = (0..n as i64).map(|i| ratio(3 * i + 1 + attempt, 7 + i)).collect();
        let p1: Vec<Rational> = (0..n as i64)
            .map(|i| &p0[i as usize] + ratio(2 * i * i + 5 + 3 * attempt, 11 + 2 * i))
            .collect();
        let Ok(u) = p.restrict_to_segment(&p0, &p1) else {
            return false;
        };
        if u.degree() != Some(deg as usize) {
            continue;
        }
        return u.gcd(&u.derivative()).is_constant();
    }
    false
}

/// The polynomials in the parameters whose zero sets are the two components of
/// the discriminant.
#[derive(Clone, Debug)]
pub struct SigmaPolynomials {
    pub class: SingularityClass,
    pub sigma0: MultiPoly,
    pub sigma1: MultiPoly,
}

impl SigmaPolynomials {
    /// Both polynomials, `sigma0` first.
    pub fn factors(&self) -> [&MultiPoly; 2] {
        [&self.sigma0, &self.sigma1]
    }
}

fn build_sigma(class: &SingularityClass) -> SigmaPolynomials {
    match *class {
        SingularityClass::F4 { sign } => {
            let mut sigma0 = f4_sigma0_eliminant().clone();
            if sign == Sign::Minus {
                let neg = |i: usize| sigma0.monomial(i, 1).scale(&rat(-1));
                sigma0 = sigma0.substitute(0, &neg(0)).substitute(3, &neg(3)).primitive();
            }
            SigmaPolynomials {
                class: *class,
                sigma0,
                sigma1: f4_sigma1_polynomial(),
            }
        }
        _ => {
            let h = symbolic_h(class);
            let disc = resultant_with_derivative(&h, "t")
                .expect("h has degree mu in t")
                .primitive();
            let mu = class.mu();
            let last = disc.monomial(mu - 1, 1);
            let (sigma0, sigma1) = match class {
                SingularityClass::B { .. } => (disc, last),
                _ => (last, disc),
            };
            SigmaPolynomials {
                class: *class,
                sigma0,
                sigma1,
            }
        }
    }
}

/// Cached discriminant polynomials for `class`. For B and C the repeated-root
/// factor is the discriminant of `h`, which also vanishes at complex repeated
/// roots; it is used only as a certificate that a path avoids the
/// discriminant.
pub fn sigma_polynomials(class: &SingularityClass) -> Arc<SigmaPolynomials> {
    static CACHE: OnceLock<Mutex<HashMap<SingularityClass, Arc<SigmaPolynomials>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().expect("cache lock").get(class) {
        return s.clone();
    }
    let built = Arc::new(build_sigma(class));
    cache
        .lock()
        .expect("cache lock")
        .entry(*class)
        .or_insert(built)
        .clone()
}

/// Both discriminant polynomials restricted to the segment from `p0` to `p1`,
/// as polynomials in `t`, `sigma0` first.
///
/// For B and C the repeated-root factor is computed after restriction, as the
/// resultant in `x` of `h` and `h'` over `Q[t]`, which avoids expanding the
/// symbolic discriminant of `h`. It agrees with the restriction of
/// `sigma_polynomials(class)` up to a nonzero constant.
pub fn restricted_sigma(
    class: &SingularityClass,
    p0: &Parameter,
    p1: &Parameter,
) -> crate::error::Result<[UniPoly; 2]> {
    p0.check_arity(class)?;
    p1.check_arity(class)?;
    if class.is_f4() {
        let s = sigma_polynomials(class);
        return Ok([
            s.sigma0.restrict_to_segment(p0.values(), p1.values())?,
            s.sigma1.restrict_to_segment(p0.values(), p1.values())?,
        ]);
    }
    let mu = class.mu();
    let h_at = |t: &Rational| {
        let mut c: Vec<Rational> = p0
            .values()
            .iter()
            .zip(p1.values())
            .rev()
            .map(|(a, b)| a + (b - a) * t)
            .collect();
        c.push(rat(class.h_leading_sign()));
        UniPoly::new(c)
    };
    let nodes: Vec<Rational> = (0..2 * mu as i64).map(rat).collect();
    let values = nodes
        .iter()
        .map(|t| {
            let h = h_at(t);
            univariate_resultant(&h, &h.derivative())
        })
        .collect::<crate::error::Result<Vec<_>>>()?;
    let disc = interpolate(&nodes, &values);
    let last = UniPoly::new(vec![
        p0.values()[mu - 1].clone(),
        &p1.values()[mu - 1] - &p0.values()[mu - 1],
    ]);
    Ok(match class {
        SingularityClass::B { .. } => [disc, last],
        _ => [last, disc],
    })
}
