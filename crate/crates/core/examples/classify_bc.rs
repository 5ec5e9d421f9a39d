//! Classifies random parameters of a B or C class and tallies the lower-set
//! types that show up.
//!
//! cargo run --example classify_bc -- C-5 2000

use std::collections::BTreeMap;

use boundsing::classify::classify;
use boundsing::exactpoly::ratio;
use boundsing::{Error, Parameter, SingularityClass};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let class: SingularityClass = args.next().as_deref().unwrap_or("B+4").parse().expect("class");
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = BTreeMap::new();
    let mut on_disc = 0;
    for _ in 0..n {
        let l = Parameter::new((0..class.mu()).map(|_| ratio(rng.gen_range(-20..=20), 4)).collect());
        match classify(&class, &l) {
            Ok(c) => *seen.entry(c.kind.canonical_json()).or_insert(0usize) += 1,
            Err(Error::DiscriminantParameter(_)) => on_disc += 1,
            Err(e) => panic!("{l}: {e}"),
        }
    }
    println!("{class}: {} of {} types seen, {on_disc} samples on the discriminant", seen.len(), class.expected_component_count());
    for (t, k) in seen {
        println!("  {t:<16} {k}");
    }
}
