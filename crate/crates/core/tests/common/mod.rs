#![allow(dead_code)]

use boundsing::exactpoly::{ratio, MultiPoly, Rational, UniPoly};
use rand::Rng;

pub fn random_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// A polynomial of degree at most `max_degree` built from factors, with the
/// distinct real roots it was built from.
pub struct Factored {
    pub poly: UniPoly,
    pub roots: Vec<Rational>,
}

pub fn random_factored<R: Rng>(rng: &mut R, max_degree: usize) -> Factored {
    let mut poly = UniPoly::constant(ratio(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=4)));
    let mut roots: Vec<Rational> = Vec::new();
    let mut degree = 0;
    let target = rng.gen_range(1..=max_degree);
    while degree < target {
        if target - degree >= 2 && rng.gen_bool(0.25) {
            // (x - u)^2 + v^2 with v != 0
            let u = random_rational(rng, 6, 3);
            let v = ratio(rng.gen_range(1..=5), rng.gen_range(1..=3));
            let q = UniPoly::new(vec![&u * &u + &v * &v, -&u * ratio(2, 1), ratio(1, 1)]);
            poly = &poly * &q;
            degree += 2;
        } else {
            let r = random_rational(rng, 6, 4);
            let mult = rng.gen_range(1..=(target - degree).min(3));
            poly = &poly * &UniPoly::linear_root(&r).pow(mult as u32);
            if !roots.contains(&r) {
                roots.push(r);
            }
            degree += mult;
        }
    }
    Factored { poly, roots }
}

pub fn univariate_as_multi(p: &UniPoly, var: &str) -> MultiPoly {
    MultiPoly::from_terms(&[var], p.coeffs().iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())))
}
