//! Eliminates the critical point from the F4 deformation and checks the
//! result against the two-variable slice c = 0.

use boundsing::exactpoly::rat;
use boundsing::models::{compute_f4_sigma0_eliminant, f4_sigma1_polynomial, is_squarefree_certified};

fn main() {
    let start = std::time::Instant::now();
    let s0 = compute_f4_sigma0_eliminant();
    println!("sigma0 = {}", s0.to_text());
    println!("  total degree {:?}, {} terms, squarefree {}", s0.total_degree(), s0.terms().count(), is_squarefree_certified(&s0));
    println!("  computed in {:.3}s", start.elapsed().as_secs_f64());
    println!("sigma1 = {}", f4_sigma1_polynomial().to_text());
    let slice = s0.specialize(&[(2, rat(0))]);
    println!("sigma0 at c = 0: {}", slice.to_text());
}
