//! Writes SVG figures of the catalog zero sets and two discriminant slices.
//!
//! cargo run --release --example render_figures -- [output directory]

use boundsing::classify::realized_catalog;
use boundsing::exactpoly::rat;
use boundsing::render::{default_viewport, figure_file_name, render_parameter_slice, render_zero_set, Viewport};
use boundsing::SingularityClass;

fn main() {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir).expect("output directory");
    let f4: SingularityClass = "F4+".parse().unwrap();
    for e in &realized_catalog().expect("catalog").entries {
        let l = &e.representative;
        let fig = render_zero_set(&f4, l, &default_viewport(&f4, l).unwrap()).unwrap();
        let path = dir.join(figure_file_name(&f4, l));
        std::fs::write(&path, &fig.svg).unwrap();
        println!("type {} -> {} ({} boundary crossings)", e.id, path.display(), fig.boundary_crossings);
    }
    let vp = Viewport::square(rat(3)).unwrap();
    for a in [0, 2] {
        let fixed = [("a".to_string(), rat(a)), ("c".to_string(), rat(0))];
        let fig = render_parameter_slice(&f4, &fixed, ("b", "d"), &vp).unwrap();
        let path = dir.join(format!("slice_a{a}.svg"));
        std::fs::write(&path, &fig.svg).unwrap();
        println!("slice a = {a} -> {} ({} / {} segments)", path.display(), fig.sigma0_segments, fig.sigma1_segments);
    }
}
