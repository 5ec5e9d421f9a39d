//! Certifies paths between random parameters of the same type and shows
//! that parameters of different types are separated.
//!
//! cargo run --release --example certify_path -- [class] [pairs per type]

use std::time::Instant;

use boundsing::atlas::{certify_path, certify_segment, expected_types, random_member, DEFAULT_BUDGET};
use boundsing::SingularityClass;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let class: SingularityClass = args.next().as_deref().unwrap_or("B+4").parse().expect("class");
    let pairs: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let types = expected_types(&class);
    let start = Instant::now();
    for kind in &types {
        let (mut ok, mut inconclusive, mut checks, mut segs) = (0, 0, 0, 0);
        for _ in 0..pairs {
            let (Some(a), Some(b)) = (random_member(&class, kind, &mut rng), random_member(&class, kind, &mut rng)) else {
                inconclusive += 1;
                continue;
            };
            match certify_path(&class, &a, &b, DEFAULT_BUDGET) {
                Ok(cert) => {
                    ok += 1;
                    checks += cert.segment_checks;
                    segs += cert.segments.len();
                }
                Err(e) => {
                    inconclusive += 1;
                    println!("  {}: {e}", kind.canonical_json());
                }
            }
        }
        println!(
            "{:<48} certified {ok}/{pairs} inconclusive {inconclusive} segments {segs} checks {checks}",
            kind.canonical_json()
        );
    }
    let mut separated = 0;
    for i in 0..types.len() {
        let j = (i + 1) % types.len();
        let a = random_member(&class, &types[i], &mut rng).expect("member");
        let b = random_member(&class, &types[j], &mut rng).expect("member");
        if !certify_segment(&class, &a, &b).expect("endpoints off the discriminant").is_certified() {
            separated += 1;
        }
    }
    println!("cross-type segments with a crossing witness: {separated}/{}", types.len());
    println!("elapsed {:.2}s", start.elapsed().as_secs_f64());
}
