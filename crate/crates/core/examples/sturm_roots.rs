//! Isolates the real roots of a polynomial given by integer coefficients
//! (highest degree first) and refines them to a chosen width.
//!
//! cargo run --example sturm_roots -- 1 0 -2

use boundsing::exactpoly::{format_rational, ratio, real_roots, root_signature, UniPoly};

fn main() {
    let mut coeffs: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer coefficient")).collect();
    if coeffs.is_empty() {
        // (x^2 - 2)(x - 1)^2
        coeffs = vec![1, -2, -1, 4, -2];
    }
    coeffs.reverse();
    let p = UniPoly::from_ints(&coeffs);
    println!("p = {p}");
    let sig = root_signature(&p).expect("nonzero polynomial");
    println!("negative roots {}, positive roots {}, zero is a root: {}", sig.neg, sig.pos, sig.zero_is_root);
    for mut r in real_roots(&p).expect("nonzero polynomial") {
        r.refine_to(&ratio(1, 1 << 30));
        let (lo, hi) = r.bounds();
        match r.exact() {
            Some(x) => println!("  {}", format_rational(x)),
            None => println!("  in ({}, {})  ~ {:.9}", format_rational(&lo), format_rational(&hi), boundsing::exactpoly::to_f64(&lo)),
        }
    }
}
