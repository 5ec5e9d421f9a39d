//! Walks away from a doubly singular point to find parameters with a closed
//! oval on either side of the boundary.

use boundsing::classify::classify;
use boundsing::exactpoly::{format_rational, ratio};
use boundsing::models::{find_f4_seed, xi0_c, xi0_point, OvalSide};
use boundsing::SingularityClass;

fn main() {
    let f4: SingularityClass = "F4+".parse().unwrap();
    for y0 in [ratio(1, 2), ratio(1, 1), ratio(3, 2)] {
        for side in [OvalSide::Left, OvalSide::Right] {
            let base = xi0_point(&y0, &xi0_c(side, &y0));
            let s = find_f4_seed(side, &y0).expect("seed");
            let c = classify(&f4, &s.lambda).expect("seed off the discriminant");
            println!(
                "y0 = {:<5} {side:?}: from {base} to {} (eps {}, delta {}, {} steps) catalog {:?}",
                format_rational(&y0),
                s.lambda,
                format_rational(&s.epsilon),
                format_rational(&s.delta),
                s.steps,
                c.catalog_id,
            );
        }
    }
}
