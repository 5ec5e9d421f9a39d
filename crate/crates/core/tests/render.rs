use boundsing::classify::{classify, realized_catalog};
use boundsing::exactpoly::{from_f64, rat, real_roots, to_f64};
use boundsing::models::{boundary_polynomial, deformation_polynomial, Parameter, SingularityClass};
use boundsing::render::{
    default_viewport, figure_file_name, render_parameter_slice, render_zero_set, Viewport, ZeroSetFigure,
};
use boundsing::Error;

fn residual(class: &SingularityClass, l: &Parameter, fig: &ZeroSetFigure) -> f64 {
    let f = deformation_polynomial(class, l).unwrap();
    fig.curves
        .iter()
        .flatten()
        .map(|p| to_f64(&f.eval(&[from_f64(p[0]).unwrap(), from_f64(p[1]).unwrap()]).unwrap()).abs())
        .fold(0.0, f64::max)
}

#[test]
fn catalog_figures_match_their_descriptors() {
    let f4: SingularityClass = "F4+".parse().unwrap();
    for e in &realized_catalog().unwrap().entries {
        let l = &e.representative;
        let fig = render_zero_set(&f4, l, &default_viewport(&f4, l).unwrap()).unwrap();
        let roots = classify(&f4, l).unwrap().descriptor.unwrap().roots.len();
        assert_eq!(fig.boundary_crossings, roots, "type {}", e.id);
        assert!(residual(&f4, l, &fig) < 1e-6, "type {}", e.id);
    }
}

#[test]
fn bc_crossings_match_boundary_roots() {
    for class in SingularityClass::all_bc(6) {
        let l = boundsing::atlas::construct_representative(&class, boundsing::classify::BCSignature::all(class.mu())[1]).unwrap();
        let fig = render_zero_set(&class, &l, &default_viewport(&class, &l).unwrap()).unwrap();
        assert!(residual(&class, &l, &fig) < 1e-6, "{class}");
        let f = deformation_polynomial(&class, &l).unwrap();
        // roots of f(0, y)
        let on_boundary = f.specialize(&[(0, rat(0))]).to_univariate(1).unwrap();
        assert_eq!(fig.boundary_crossings, real_roots(&on_boundary).unwrap().len(), "{class} {l}");
    }
}

#[test]
fn unit_circle_figure() {
    let class: SingularityClass = "B+2".parse().unwrap();
    let l = Parameter::from_ints(&[0, -1]);
    let vp = Viewport::square(rat(2)).unwrap();
    let fig = render_zero_set(&class, &l, &vp).unwrap();
    assert_eq!(fig.curves.len(), 1);
    for p in &fig.curves[0] {
        assert!((p[0].hypot(p[1]) - 1.0).abs() < 1e-9);
    }
    assert!(fig.svg.starts_with("<?xml"));
    assert!(fig.svg.contains(r#"stroke-dasharray="4,3""#));
    assert!(fig.svg.contains("fill-opacity"));
    assert_eq!(fig.svg, render_zero_set(&class, &l, &vp).unwrap().svg);
}

#[test]
fn c3_graph_has_a_pole() {
    let class: SingularityClass = "C3+".parse().unwrap();
    let l = Parameter::from_ints(&[0, 0, 1]);
    let fig = render_zero_set(&class, &l, &Viewport::square(rat(3)).unwrap()).unwrap();
    assert!(fig.curves.len() >= 2);
    assert!(residual(&class, &l, &fig) < 1e-6);
    assert!(fig.curves.iter().flatten().all(|p| p[1] != 0.0));
}

#[test]
fn discriminant_parameters_still_render() {
    let class: SingularityClass = "F4+".parse().unwrap();
    let l = Parameter::from_ints(&[0, -3, 0, 2]);
    let fig = render_zero_set(&class, &l, &Viewport::square(rat(3)).unwrap()).unwrap();
    assert!(!fig.curves.is_empty());
    assert!(residual(&class, &l, &fig) < 1e-6);
    assert_eq!(real_roots(&boundary_polynomial(&class, &l).unwrap()).unwrap().len(), 2);
}

#[test]
fn slices_of_the_f4_discriminant() {
    let f4: SingularityClass = "F4+".parse().unwrap();
    let vp = Viewport::square(rat(3)).unwrap();
    let at = |a: i64| {
        render_parameter_slice(&f4, &[("a".into(), rat(a)), ("c".into(), rat(0))], ("b", "d"), &vp).unwrap()
    };
    let flat = at(0);
    assert_eq!(flat.sigma0_segments, flat.sigma1_segments);
    let bent = at(2);
    assert!(bent.sigma0_segments > 0 && bent.sigma1_segments > 0);
    assert_ne!(bent.svg, flat.svg);
    assert_eq!(bent.svg, at(2).svg);
}

#[test]
fn slice_argument_errors() {
    let f4: SingularityClass = "F4+".parse().unwrap();
    let vp = Viewport::square(rat(3)).unwrap();
    let fixed = vec![("a".to_string(), rat(0)), ("c".to_string(), rat(0))];
    assert!(matches!(render_parameter_slice(&f4, &fixed, ("b", "x"), &vp), Err(Error::BadAxes(_))));
    assert!(matches!(render_parameter_slice(&f4, &fixed, ("a", "b"), &vp), Err(Error::BadAxes(_))));
    assert!(matches!(render_parameter_slice(&f4, &fixed[..1], ("b", "d"), &vp), Err(Error::BadAxes(_))));
    let b2: SingularityClass = "B+2".parse().unwrap();
    let fig = render_parameter_slice(&b2, &[], ("l1", "l2"), &vp).unwrap();
    assert!(fig.sigma0_segments > 0 && fig.sigma1_segments > 0);
}

#[test]
fn viewport_validation() {
    assert_eq!(Viewport::new((rat(0), rat(0)), (rat(0), rat(1)), 10, 10, 16), Err(Error::EmptyViewport));
    assert_eq!(Viewport::new((rat(0), rat(1)), (rat(0), rat(1)), 10, 10, 15), Err(Error::EmptyViewport));
    assert_eq!(Viewport::new((rat(0), rat(1)), (rat(0), rat(1)), 0, 10, 16), Err(Error::EmptyViewport));
    assert!(Viewport::new((rat(0), rat(1)), (rat(0), rat(1)), 10, 10, 16).is_ok());
}

#[test]
fn file_names_depend_on_the_parameter() {
    let f4: SingularityClass = "F4+".parse().unwrap();
    let a = figure_file_name(&f4, &Parameter::from_ints(&[1, -1, 0, 0]));
    let b = figure_file_name(&f4, &Parameter::from_ints(&[1, -1, 0, 1]));
    assert_ne!(a, b);
    assert!(a.starts_with("F4p_") && a.ends_with(".svg"));
    assert_eq!(a, figure_file_name(&f4, &Parameter::from_ints(&[1, -1, 0, 0])));
}
