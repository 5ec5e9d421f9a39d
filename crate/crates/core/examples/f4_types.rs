//! Prints the realized F4 catalog with each representative's descriptor.

use boundsing::classify::{classify, realized_catalog};
use boundsing::SingularityClass;

fn main() {
    let f4: SingularityClass = "F4+".parse().unwrap();
    for e in &realized_catalog().expect("catalog").entries {
        let c = classify(&f4, &e.representative).expect("representative off the discriminant");
        let d = c.descriptor.expect("F4 descriptor");
        println!(
            "{} {:<10} lambda = {:<28} boundary roots {} mirror of {:?}",
            e.id,
            e.f4_type.to_string(),
            e.representative.to_string(),
            d.roots.len(),
            boundsing::classify::catalog_id(&e.f4_type.mirror()),
        );
    }
}
