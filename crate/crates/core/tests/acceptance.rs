//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so every line is printed; the process fails if any check fails.

mod common;

use std::time::{Duration, Instant};

use boundsing::atlas::{
    certify_path, certify_segment, enumerate_components, expected_types, random_member, SamplingConfig, Source,
    DEFAULT_BUDGET,
};
use boundsing::classify::{classify, realized_catalog};
use boundsing::exactpoly::{
    from_f64, rat, ratio, resultant, sturm_count, to_f64, Interval, MultiPoly, Rational, UniPoly,
};
use boundsing::models::{
    deformation_polynomial, discriminant_membership, f4_sigma0_eliminant, is_squarefree_certified, Parameter,
    Sign, SingularityClass,
};
use boundsing::render::{default_viewport, render_zero_set};
use boundsing::Error;
use common::{random_factored, random_rational, univariate_as_multi};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn bc_classes() -> Vec<SingularityClass> {
    let mut out = Vec::new();
    for mu in 2..=7 {
        for sign in [Sign::Plus, Sign::Minus] {
            out.push(SingularityClass::B { mu, sign });
        }
    }
    for mu in 2..=7 {
        for sign in [Sign::Plus, Sign::Minus] {
            out.push(SingularityClass::C { mu, sign });
        }
    }
    out
}

/// `(k+1)^2` for even `mu`, `(k+1)(k+2)` for odd `mu`, `k = floor(mu/2)`.
fn table_count(mu: usize) -> usize {
    let k = mu / 2;
    if mu.is_multiple_of(2) {
        (k + 1) * (k + 1)
    } else {
        (k + 1) * (k + 2)
    }
}

fn component_counts_bc() -> Verdict {
    let cfg = SamplingConfig::default();
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    for class in bc_classes() {
        let start = Instant::now();
        let report = enumerate_components(&class, &cfg);
        let took = start.elapsed();
        slowest = slowest.max(took);
        let want = table_count(class.mu());
        if report.realized_count != want || report.expected_count != want || took > Duration::from_secs(60) {
            failures.push(format!("{class}: {} of {want} in {:.1}s", report.realized_count, took.as_secs_f64()));
        }
    }
    if failures.is_empty() {
        verdict(true, format!("24/24 classes exact, slowest {:.1}s", slowest.as_secs_f64()))
    } else {
        verdict(false, failures.join("; "))
    }
}

fn component_count_f4() -> Verdict {
    let class = SingularityClass::f4(Sign::Plus);
    let cfg = SamplingConfig { random_count: 100_000, ..SamplingConfig::default() };
    let start = Instant::now();
    let report = enumerate_components(&class, &cfg);
    let took = start.elapsed();
    let slice = report.slice_types();
    let catalog = realized_catalog().expect("catalog");
    let off_slice: Vec<_> = report.types.values().filter(|e| e.slice_representative.is_none()).collect();
    // the off-slice types must come from the two seeds with c != 0
    let seeds = boundsing::atlas::constructive_seeds(&class);
    let from_xi0 = off_slice.iter().all(|e| match e.source {
        Source::Seed(i) => seeds[i].values()[2] != rat(0) && matches!(e.catalog_id, Some(7 | 8)),
        Source::Sample(_) => false,
    });
    let pass = report.realized_count == 8
        && slice.len() == 6
        && off_slice.len() == 2
        && from_xi0
        && catalog.len() == 8
        && took < Duration::from_secs(600);
    verdict(
        pass,
        format!(
            "{} types, {} with c=0 representative, {} from the off-slice seeds, {} samples in {:.1}s",
            report.realized_count,
            slice.len(),
            off_slice.len(),
            report.samples,
            took.as_secs_f64()
        ),
    )
}

fn sigma1_closed_form() -> Verdict {
    let class = SingularityClass::f4(Sign::Plus);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut on = 0;
    for i in 0..10_000 {
        let a = random_rational(&mut rng, 20, 8);
        let c = random_rational(&mut rng, 20, 8);
        let (b, d) = if i % 2 == 0 {
            // force 27 d^2 + 4 b^3 = 0 through b = -3 t^2, d = ±2 t^3
            let t = random_rational(&mut rng, 10, 6);
            let s = if rng.gen_bool(0.5) { rat(1) } else { rat(-1) };
            (-rat(3) * &t * &t, s * rat(2) * &t * &t * &t)
        } else {
            (random_rational(&mut rng, 20, 8), random_rational(&mut rng, 20, 8))
        };
        let oracle = rat(27) * &d * &d + rat(4) * &b * &b * &b == rat(0);
        on += oracle as usize;
        let m = discriminant_membership(&class, &Parameter::new(vec![a.clone(), b.clone(), c.clone(), d.clone()])).unwrap();
        if m.in_sigma1() != oracle {
            return verdict(false, format!("disagreement at ({a}, {b}, {c}, {d})"));
        }
    }
    verdict(true, format!("10000 points agree, {on} of them on the zero set"))
}

fn sigma0_slice_identity() -> Verdict {
    let e = f4_sigma0_eliminant();
    let restricted = e.specialize(&[(2, rat(0))]);
    if !is_squarefree_certified(&restricted) {
        return verdict(false, "restriction to c=0 could not be certified squarefree");
    }
    let v = MultiPoly::vars_of(&["a", "b", "c", "d"]);
    let (a, b, d) = (&v[0], &v[1], &v[3]);
    let quarter_a2 = a.pow(2).scale(&ratio(1, 4));
    let target = |shift: &MultiPoly| &(d + shift).pow(2).scale(&rat(27)) + &b.pow(3).scale(&rat(4));
    let stated = target(&quarter_a2);
    if restricted.is_proportional(&stated) {
        return verdict(true, "squarefree part proportional to 27(d + a^2/4)^2 + 4b^3");
    }
    let mirrored = target(&quarter_a2.scale(&rat(-1)));
    let note = if restricted.is_proportional(&mirrored) {
        "it is proportional to 27(d - a^2/4)^2 + 4b^3 instead"
    } else {
        "it matches neither sign of the a^2/4 shift"
    };
    verdict(false, format!("squarefree part is {}; {note}", restricted.primitive().to_text()))
}

/// The system `f = f_x = f_y = 0` with `x` eliminated by `f_x = 0`, as two
/// polynomials in `y`.
fn eliminated_system(l: &[Rational]) -> (UniPoly, UniPoly) {
    let (a, b, c, d) = (&l[0], &l[1], &l[2], &l[3]);
    // x = -(a + c y)/2
    let lin = UniPoly::new(vec![a.clone(), c.clone()]);
    let cubic = UniPoly::new(vec![d.clone(), b.clone(), rat(0), rat(1)]);
    let f = &cubic - &(&lin * &lin).scale(&ratio(1, 4));
    let fy = &UniPoly::new(vec![b.clone(), rat(0), rat(3)]) - &lin.scale(&(c * ratio(1, 2)));
    (f, fy)
}

fn sigma0_oracle() -> Verdict {
    let e = f4_sigma0_eliminant();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let constructed = |rng: &mut ChaCha8Rng| {
        let (x0, y0, c) = (random_rational(rng, 9, 5), random_rational(rng, 9, 5), random_rational(rng, 9, 5));
        let a = -rat(2) * &x0 - &c * &y0;
        let b = -rat(3) * &y0 * &y0 - &c * &x0;
        let d = -(&x0 * &x0 + &y0 * &y0 * &y0 + &a * &x0 + &b * &y0 + &c * &x0 * &y0);
        vec![a, b, c, d]
    };
    for _ in 0..500 {
        let l = constructed(&mut rng);
        if e.eval(&l).unwrap() != rat(0) {
            return verdict(false, format!("nonzero at constructed critical parameter {}", Parameter::new(l)));
        }
    }
    let mut zeros = 0;
    for i in 0..500 {
        let l = if i % 2 == 0 {
            constructed(&mut rng)
        } else {
            (0..4).map(|_| random_rational(&mut rng, 12, 6)).collect()
        };
        let vanishes = e.eval(&l).unwrap() == rat(0);
        let (f, fy) = eliminated_system(&l);
        let degenerate = fy.degree() != Some(2);
        let common = !f.gcd(&fy).is_constant();
        if vanishes != (common || degenerate) {
            return verdict(false, format!("oracle mismatch at {}", Parameter::new(l)));
        }
        zeros += vanishes as usize;
    }
    verdict(true, format!("500 constructed points vanish; 500 mixed points agree with the gcd test ({zeros} zeros)"))
}

fn path_certification() -> Verdict {
    let mut classes = bc_classes();
    classes.push(SingularityClass::f4(Sign::Plus));
    classes.push(SingularityClass::f4(Sign::Minus));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut problems = Vec::new();
    let (mut pairs, mut certified, mut witnesses) = (0, 0, 0);
    let mut f4_rate = 1.0_f64;
    for class in &classes {
        let types = expected_types(class);
        let (mut ok, mut total) = (0, 0);
        for kind in &types {
            for _ in 0..10 {
                let (Some(a), Some(b)) = (random_member(class, kind, &mut rng), random_member(class, kind, &mut rng)) else {
                    problems.push(format!("{class}: no sample of {}", kind.canonical_json()));
                    continue;
                };
                total += 1;
                match certify_path(class, &a, &b, DEFAULT_BUDGET) {
                    Ok(cert) if cert.verify() => ok += 1,
                    Ok(_) => problems.push(format!("{class}: certificate failed verification")),
                    Err(Error::NotFound { .. }) => {}
                    Err(e) => problems.push(format!("{class}: {e}")),
                }
            }
        }
        pairs += total;
        certified += ok;
        let rate = ok as f64 / total.max(1) as f64;
        if class.is_bc() && ok != total {
            problems.push(format!("{class}: {ok}/{total} certified"));
        }
        if class.is_f4() {
            f4_rate = f4_rate.min(rate);
            if rate < 0.95 {
                problems.push(format!("{class}: {ok}/{total} certified"));
            }
        }
        for _ in 0..100 {
            let i = rng.gen_range(0..types.len());
            let j = (i + rng.gen_range(1..types.len())) % types.len();
            let (Some(a), Some(b)) = (random_member(class, &types[i], &mut rng), random_member(class, &types[j], &mut rng)) else {
                problems.push(format!("{class}: no cross-type sample"));
                continue;
            };
            match certify_segment(class, &a, &b) {
                Ok(o) if !o.is_certified() => witnesses += 1,
                _ => problems.push(format!("{class}: cross-type segment without witness")),
            }
        }
    }
    let detail = format!(
        "{certified}/{pairs} same-type pairs certified (F4 worst {:.0}%), {witnesses}/{} cross-type witnesses",
        f4_rate * 100.0,
        classes.len() * 100
    );
    if problems.is_empty() {
        verdict(true, detail)
    } else {
        problems.truncate(5);
        verdict(false, format!("{detail}; {}", problems.join("; ")))
    }
}

fn kernel_properties() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let fp = random_factored(&mut rng, 10);
        let lo = random_rational(&mut rng, 8, 4);
        let hi = &lo + ratio(rng.gen_range(0..=40), 4);
        let iv = Interval::closed(lo.clone(), hi.clone());
        let want = fp.roots.iter().filter(|r| **r >= lo && **r <= hi).count();
        if sturm_count(&fp.poly, &iv).unwrap() != want {
            return verdict(false, format!("Sturm count mismatch for {} on [{lo}, {hi}]", fp.poly));
        }
    }
    for _ in 0..500 {
        let f = random_factored(&mut rng, 5).poly;
        let mut g = random_factored(&mut rng, 5).poly;
        if rng.gen_bool(0.5) {
            g = &g * &UniPoly::linear_root(&random_rational(&mut rng, 6, 4));
            let shared = UniPoly::linear_root(&random_rational(&mut rng, 6, 4));
            let f2 = &f * &shared;
            let g2 = &g * &shared;
            if !resultant_vanishing_agrees(&f2, &g2) {
                return verdict(false, format!("resultant/gcd disagree on {f2} and {g2}"));
            }
        } else if !resultant_vanishing_agrees(&f, &g) {
            return verdict(false, format!("resultant/gcd disagree on {f} and {g}"));
        }
    }
    let names = ["u", "v", "w"];
    for _ in 0..200 {
        let p = MultiPoly::from_terms(
            &names,
            (0..6).map(|_| ((0..3).map(|_| rng.gen_range(0..4)).collect(), random_rational(&mut rng, 9, 4))),
        );
        let p0: Vec<Rational> = (0..3).map(|_| random_rational(&mut rng, 9, 4)).collect();
        let p1: Vec<Rational> = (0..3).map(|_| random_rational(&mut rng, 9, 4)).collect();
        let r = p.restrict_to_segment(&p0, &p1).unwrap();
        let at = |t: Rational| {
            let q: Vec<Rational> = p0.iter().zip(&p1).map(|(a, b)| a + (b - a) * &t).collect();
            p.eval(&q).unwrap()
        };
        if r.eval(&rat(0)) != at(rat(0)) || r.eval(&rat(1)) != at(rat(1)) || r.eval(&ratio(1, 3)) != at(ratio(1, 3)) {
            return verdict(false, format!("segment restriction of {} is wrong", p.to_text()));
        }
    }
    verdict(true, "10000 Sturm counts, 500 resultant/gcd pairs, 200 segment restrictions")
}

fn resultant_vanishing_agrees(f: &UniPoly, g: &UniPoly) -> bool {
    let r = resultant(&univariate_as_multi(f, "x"), &univariate_as_multi(g, "x"), "x").unwrap();
    r.is_zero() == !f.gcd(g).is_constant()
}

fn rendering_smoke() -> Verdict {
    let class = SingularityClass::f4(Sign::Plus);
    let catalog = realized_catalog().expect("catalog");
    let mut worst = 0.0_f64;
    for entry in &catalog.entries {
        let l = &entry.representative;
        let vp = default_viewport(&class, l).unwrap();
        let fig = match render_zero_set(&class, l, &vp) {
            Ok(f) => f,
            Err(e) => return verdict(false, format!("type {}: {e}", entry.id)),
        };
        let f = deformation_polynomial(&class, l).unwrap();
        for p in fig.curves.iter().flatten() {
            let v = to_f64(&f.eval(&[from_f64(p[0]).unwrap(), from_f64(p[1]).unwrap()]).unwrap()).abs();
            worst = worst.max(v);
        }
        let roots = classify(&class, l).unwrap().descriptor.unwrap().roots.len();
        if fig.boundary_crossings != roots {
            return verdict(false, format!("type {}: {} crossings drawn, {roots} expected", entry.id, fig.boundary_crossings));
        }
    }
    verdict(worst < 1e-6, format!("8 figures, crossings match, max |f| on curve {worst:.1e}"))
}

type Check = (&'static str, fn() -> Verdict);

fn main() {
    let checks: [Check; 8] = [
        ("component counts, B and C", component_counts_bc),
        ("component count, F4", component_count_f4),
        ("sigma1 closed form", sigma1_closed_form),
        ("sigma0 slice identity", sigma0_slice_identity),
        ("sigma0 oracle equivalence", sigma0_oracle),
        ("path certification", path_certification),
        ("kernel property suites", kernel_properties),
        ("rendering smoke", rendering_smoke),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        failed += !v.pass as usize;
        println!(
            "criterion {}: {} {name}: {} [{:.1}s]",
            i + 1,
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", checks.len());
        std::process::exit(1);
    }
}
