//! Enumerates the components of the discriminant complement for every class
//! and compares the counts with the expected ones.
//!
//! cargo run --release --example component_counts -- [random samples per class]

use std::time::Instant;

use boundsing::atlas::{enumerate_components, verify_against_table1, SamplingConfig};
use boundsing::{Sign, SingularityClass};

fn main() {
    let samples = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2_000);
    let mut classes = SingularityClass::all_bc(7);
    classes.push(SingularityClass::f4(Sign::Plus));
    classes.push(SingularityClass::f4(Sign::Minus));
    println!("{:<6} {:>8} {:>8} {:>6} {:>9}", "class", "expected", "realized", "pass", "seconds");
    for class in classes {
        let cfg = SamplingConfig {
            random_count: samples,
            ..SamplingConfig::default()
        };
        let start = Instant::now();
        let report = enumerate_components(&class, &cfg);
        let check = verify_against_table1(&report);
        println!(
            "{:<6} {:>8} {:>8} {:>6} {:>9.2}",
            class.to_string(),
            check.expected,
            check.realized,
            check.pass,
            start.elapsed().as_secs_f64()
        );
        if class.is_f4() {
            println!("       types with a c = 0 representative: {}", report.slice_types().len());
        }
    }
}
