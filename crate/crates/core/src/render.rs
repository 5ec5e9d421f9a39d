//! Deterministic SVG figures: zero sets of `f_lambda` with the shaded
//! lower set `W = {f <= 0}` and the dashed boundary `x = 0`, and
//! two-dimensional slices of the discriminant in parameter space.

use std::fmt::Write as _;

use num::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactpoly::{format_rational, rat, ratio, real_roots, to_f64, MultiPoly, Rational, UniPoly};
use crate::models::{deformation_polynomial, h_polynomial, sigma_polynomials, Parameter, SingularityClass};

const BOUNDARY_DASH: &str = "4,3";
const W_OPACITY: &str = "0.25";
const MIN_SAMPLES: u32 = 16;
/// Points per curve piece; independent of the viewport so that small ovals
/// keep their shape.
const PIECE_SAMPLES: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Viewport {
    #[serde(with = "crate::exactpoly::rational::serde_rational")]
    pub x_min: Rational,
    #[serde(with = "crate::exactpoly::rational::serde_rational")]
    pub x_max: Rational,
    #[serde(with = "crate::exactpoly::rational::serde_rational")]
    pub y_min: Rational,
    #[serde(with = "crate::exactpoly::rational::serde_rational")]
    pub y_max: Rational,
    pub width: u32,
    pub height: u32,
    pub samples: u32,
}

impl Viewport {
    pub fn new(x: (Rational, Rational), y: (Rational, Rational), width: u32, height: u32, samples: u32) -> Result<Self> {
        let vp = Viewport { x_min: x.0, x_max: x.1, y_min: y.0, y_max: y.1, width, height, samples };
        vp.validate()?;
        Ok(vp)
    }

    /// Square viewport `[-r, r]^2`, 480 pixels, 96 shading samples per axis.
    pub fn square(r: Rational) -> Result<Self> {
        Viewport::new((-r.clone(), r.clone()), (-r.clone(), r), 480, 480, 96)
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_min >= self.x_max || self.y_min >= self.y_max || self.width == 0 || self.height == 0 || self.samples < MIN_SAMPLES {
            return Err(Error::EmptyViewport);
        }
        Ok(())
    }

    fn bounds_f64(&self) -> [f64; 4] {
        [to_f64(&self.x_min), to_f64(&self.x_max), to_f64(&self.y_min), to_f64(&self.y_max)]
    }

    fn to_pixel(&self, [x, y]: [f64; 2]) -> (f64, f64) {
        let [x0, x1, y0, y1] = self.bounds_f64();
        let px = (x - x0) / (x1 - x0) * f64::from(self.width);
        let py = (y1 - y) / (y1 - y0) * f64::from(self.height);
        (px, py)
    }

    fn contains(&self, [x, y]: [f64; 2]) -> bool {
        let [x0, x1, y0, y1] = self.bounds_f64();
        (x0..=x1).contains(&x) && (y0..=y1).contains(&y)
    }
}

/// A rendered zero set together with the plotted geometry.
#[derive(Clone, Debug)]
pub struct ZeroSetFigure {
    pub svg: String,
    /// Curve pieces in `(x, y)` coordinates, before the pixel mapping.
    pub curves: Vec<Vec<[f64; 2]>>,
    /// Transversal crossings of the plotted curve with `x = 0`.
    pub boundary_crossings: usize,
}

/// `<class tag>_<16 hex digits of sha256(lambda)>.svg`.
pub fn figure_file_name(class: &SingularityClass, lambda: &Parameter) -> String {
    let digest = Sha256::digest(lambda.to_string().as_bytes());
    format!("{}_{}.svg", class.file_tag(), &hex::encode(digest)[..16])
}

/// A square viewport containing the boundary points, the real roots of the
/// branch discriminant and every bounded curve piece, with margin.
pub fn default_viewport(class: &SingularityClass, lambda: &Parameter) -> Result<Viewport> {
    let family = BranchFamily::of(class, lambda)?;
    let mut extent: f64 = 1.0;
    for piece in family.pieces(f64::INFINITY)? {
        if piece.bounded {
            for p in &piece.points {
                extent = extent.max(p[0].abs()).max(p[1].abs());
            }
        }
    }
    for r in family.critical_values()? {
        extent = extent.max(r.abs());
    }
    for r in real_roots(&crate::models::boundary_polynomial(class, lambda)?)? {
        extent = extent.max(r.to_f64().abs());
    }
    // round up to a multiple of 1/4
    let r = ((extent * 1.25 + 0.5) * 4.0).ceil() as i64;
    Viewport::square(ratio(r, 4))
}

/// Draws `f_lambda = 0` from closed-form branches, the dashed boundary and
/// the shaded set `{f_lambda <= 0}`.
pub fn render_zero_set(class: &SingularityClass, lambda: &Parameter, vp: &Viewport) -> Result<ZeroSetFigure> {
    vp.validate()?;
    let f = deformation_polynomial(class, lambda)?;
    let family = BranchFamily::of(class, lambda)?;
    let [x0, x1, y0, y1] = vp.bounds_f64();
    let span = if family.param_is_x { (x0, x1) } else { (y0, y1) };
    let reach = span.0.abs().max(span.1.abs());
    let mut curves = Vec::new();
    for piece in family.pieces(reach)? {
        curves.extend(split_visible(vp, piece.points));
    }
    let boundary_crossings = curves.iter().map(|c| crossings(c)).sum();

    let mut svg = String::new();
    let (w, h) = (vp.width, vp.height);
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(svg, "<title>{class} at ({lambda})</title>").unwrap();
    writeln!(svg, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##).unwrap();

    // shading, merged into horizontal runs per row
    let n = vp.samples as usize;
    let (dx, dy) = ((x1 - x0) / n as f64, (y1 - y0) / n as f64);
    writeln!(svg, r##"<g fill="#4a78b5" fill-opacity="{W_OPACITY}" stroke="none">"##).unwrap();
    for j in 0..n {
        let yc = y1 - (j as f64 + 0.5) * dy;
        let mut i = 0;
        while i < n {
            let inside = |i: usize| f.eval_f64(&[x0 + (i as f64 + 0.5) * dx, yc]) <= 0.0;
            if !inside(i) {
                i += 1;
                continue;
            }
            let start = i;
            while i < n && inside(i) {
                i += 1;
            }
            let (px, py) = vp.to_pixel([x0 + start as f64 * dx, y1 - j as f64 * dy]);
            let (qx, qy) = vp.to_pixel([x0 + i as f64 * dx, y1 - (j + 1) as f64 * dy]);
            writeln!(svg, r#"<rect x="{px:.2}" y="{py:.2}" width="{:.2}" height="{:.2}"/>"#, qx - px, qy - py).unwrap();
        }
    }
    writeln!(svg, "</g>").unwrap();

    if x0 <= 0.0 && 0.0 <= x1 {
        let (bx, _) = vp.to_pixel([0.0, 0.0]);
        writeln!(
            svg,
            r##"<line x1="{bx:.2}" y1="0" x2="{bx:.2}" y2="{h}" stroke="#000000" stroke-width="1.5" stroke-dasharray="{BOUNDARY_DASH}"/>"##
        )
        .unwrap();
    }
    for c in &curves {
        writeln!(svg, r##"<path d="{}" fill="none" stroke="#b22222" stroke-width="2"/>"##, path_data(vp, c)).unwrap();
    }
    writeln!(svg, "</svg>").unwrap();
    Ok(ZeroSetFigure { svg, curves, boundary_crossings })
}

/// `value = (centre(p) ± sqrt(disc(p))) / scale` over the parameter `p`,
/// where `p` is `x` (B), or `y` (C and F4). For C the discriminant is zero
/// and the single branch has a pole at `p = 0`.
struct BranchFamily {
    param_is_x: bool,
    centre: UniPoly,
    disc: UniPoly,
    /// `None` for C, where the curve is `x = centre(y) / y`.
    scale: Option<Rational>,
    /// Parameter values where the curve meets `x = 0`.
    marks: Vec<f64>,
}

struct Piece {
    points: Vec<[f64; 2]>,
    bounded: bool,
}

impl BranchFamily {
    fn of(class: &SingularityClass, lambda: &Parameter) -> Result<Self> {
        lambda.check_arity(class)?;
        Ok(match *class {
            SingularityClass::B { mu, sign } => {
                let s = if mu % 2 == 0 { sign.value() } else { class.h_leading_sign() };
                // y^2 = -s h(x), as s = ±1
                BranchFamily {
                    param_is_x: true,
                    centre: UniPoly::zero(),
                    disc: (-&h_polynomial(class, lambda)?).scale(&rat(s)),
                    scale: Some(rat(1)),
                    marks: vec![0.0],
                }
            }
            SingularityClass::C { mu, sign } => {
                let e = if mu % 2 == 0 { 1 } else { sign.value() };
                let centre = (-&h_polynomial(class, lambda)?).scale(&rat(e));
                BranchFamily {
                    param_is_x: false,
                    marks: refined_roots(&centre)?,
                    centre,
                    disc: UniPoly::zero(),
                    scale: None,
                }
            }
            SingularityClass::F4 { sign } => {
                let l = lambda.values();
                let s = rat(sign.value());
                // s x^2 + (a + c y) x + (y^3 + b y + d) = 0
                let lin = UniPoly::new(vec![l[0].clone(), l[2].clone()]);
                let cst = UniPoly::new(vec![l[3].clone(), l[1].clone(), Rational::zero(), rat(1)]);
                BranchFamily {
                    param_is_x: false,
                    centre: -&lin,
                    disc: &(&lin * &lin) - &cst.scale(&rat(4 * sign.value())),
                    scale: Some(&s * rat(2)),
                    marks: refined_roots(&cst)?,
                }
            }
        })
    }

    fn critical_values(&self) -> Result<Vec<f64>> {
        if self.disc.is_zero() {
            return Ok(Vec::new());
        }
        Ok(real_roots(&self.disc)?.iter().map(|r| r.to_f64()).collect())
    }

    /// Uniform samples of `[a, b]` plus each mark inside it and a point just
    /// to either side, so thin crossings are not stepped over.
    fn samples(&self, a: f64, b: f64) -> Vec<f64> {
        let mut ps: Vec<f64> = (0..=PIECE_SAMPLES).map(|k| a + (b - a) * k as f64 / PIECE_SAMPLES as f64).collect();
        for &m in &self.marks {
            if m <= a || m >= b {
                continue;
            }
            let delta = (1e-9 * m.abs().max(1.0)).min((m - a) / 2.0).min((b - m) / 2.0);
            ps.extend([m - delta, m, m + delta]);
        }
        ps.sort_by(f64::total_cmp);
        ps.dedup();
        ps
    }

    fn point(&self, p: f64, v: f64) -> [f64; 2] {
        if self.param_is_x { [p, v] } else { [v, p] }
    }

    /// Curve pieces with the parameter restricted to `[-reach, reach]` on
    /// unbounded stretches.
    fn pieces(&self, reach: f64) -> Result<Vec<Piece>> {
        let Some(scale) = &self.scale else {
            return Ok(self.pole_pieces(reach));
        };
        let scale = to_f64(scale);
        let mut roots = Vec::new();
        if !self.disc.is_zero() {
            for mut r in real_roots(&self.disc)? {
                r.refine_to(&ratio(1, 1 << 40));
                roots.push(r.to_f64());
            }
        }
        let reach = if reach.is_finite() { reach } else { roots.iter().fold(1.0_f64, |m, r| m.max(r.abs())) + 1.0 };
        let mut ends = vec![f64::NEG_INFINITY];
        ends.extend(roots.iter().copied());
        ends.push(f64::INFINITY);
        let mut out = Vec::new();
        for w in ends.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mid = if lo.is_finite() && hi.is_finite() {
                (lo + hi) / 2.0
            } else if lo.is_finite() {
                lo + 1.0
            } else if hi.is_finite() {
                hi - 1.0
            } else {
                0.0
            };
            if self.disc.eval_f64(mid) < 0.0 {
                continue;
            }
            let (a, b) = (lo.max(-reach), hi.min(reach));
            if a >= b {
                continue;
            }
            let ps = self.samples(a, b);
            let branch = |p: f64, sgn: f64| {
                let g = self.disc.eval_f64(p).max(0.0);
                self.point(p, (self.centre.eval_f64(p) + sgn * g.sqrt()) / scale)
            };
            let upper: Vec<[f64; 2]> = ps.iter().map(|&p| branch(p, 1.0)).collect();
            let lower: Vec<[f64; 2]> = ps.iter().rev().map(|&p| branch(p, -1.0)).collect();
            let bounded = lo.is_finite() && hi.is_finite();
            if bounded {
                let mut loop_pts = upper;
                loop_pts.extend(lower);
                out.push(Piece { points: loop_pts, bounded });
            } else if lo.is_finite() || hi.is_finite() {
                // one turning point: join the two branches there
                let pts = if lo.is_finite() {
                    lower.into_iter().chain(upper).collect()
                } else {
                    upper.into_iter().chain(lower).collect()
                };
                out.push(Piece { points: pts, bounded: false });
            } else {
                out.push(Piece { points: upper, bounded: false });
                out.push(Piece { points: lower, bounded: false });
            }
        }
        Ok(out)
    }

    fn pole_pieces(&self, reach: f64) -> Vec<Piece> {
        let reach = if reach.is_finite() { reach } else { 4.0 };
        let one_side = |a: f64, b: f64| {
            let pts = self
                .samples(a, b)
                .into_iter()
                .filter(|&p| p != 0.0)
                .map(|p| self.point(p, self.centre.eval_f64(p) / p))
                .collect();
            Piece { points: pts, bounded: false }
        };
        vec![one_side(-reach, 0.0), one_side(0.0, reach)]
    }
}

fn refined_roots(p: &UniPoly) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Ok(Vec::new());
    }
    Ok(real_roots(p)?
        .into_iter()
        .map(|mut r| {
            r.refine_to(&ratio(1, 1 << 40));
            r.to_f64()
        })
        .collect())
}

/// Splits a polyline into maximal runs inside the viewport.
fn split_visible(vp: &Viewport, pts: Vec<[f64; 2]>) -> Vec<Vec<[f64; 2]>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for p in pts {
        if p[0].is_finite() && p[1].is_finite() && vp.contains(p) {
            cur.push(p);
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if cur.len() > 1 {
        out.push(cur);
    }
    out.retain(|c| c.len() > 1);
    out
}

fn crossings(c: &[[f64; 2]]) -> usize {
    let mut n = 0;
    let mut prev = 0.0_f64;
    for p in c {
        if p[0] != 0.0 {
            if prev != 0.0 && (prev < 0.0) != (p[0] < 0.0) {
                n += 1;
            }
            prev = p[0];
        }
    }
    n
}

fn path_data(vp: &Viewport, c: &[[f64; 2]]) -> String {
    let mut d = String::new();
    for (i, p) in c.iter().enumerate() {
        let (px, py) = vp.to_pixel(*p);
        write!(d, "{}{px:.2},{py:.2}", if i == 0 { "M" } else { " L" }).unwrap();
    }
    d
}

/// A slice of the discriminant through fixed parameter values.
#[derive(Clone, Debug)]
pub struct SliceFigure {
    pub svg: String,
    pub sigma0_segments: usize,
    pub sigma1_segments: usize,
}

/// Marching-squares contours of the two discriminant polynomials over the
/// plane spanned by `axes`, with every other parameter fixed. The viewport's
/// x range is the first axis, the y range the second.
pub fn render_parameter_slice(
    class: &SingularityClass,
    fixed: &[(String, Rational)],
    axes: (&str, &str),
    vp: &Viewport,
) -> Result<SliceFigure> {
    vp.validate()?;
    let names = class.param_names();
    let index = |n: &str| names.iter().position(|m| m == n).ok_or_else(|| Error::BadAxes(format!("unknown parameter `{n}`")));
    let (ia, ib) = (index(axes.0)?, index(axes.1)?);
    if ia == ib {
        return Err(Error::BadAxes("the two axes coincide".into()));
    }
    let mut values: Vec<Option<Rational>> = vec![None; names.len()];
    for (n, v) in fixed {
        let i = index(n)?;
        if i == ia || i == ib {
            return Err(Error::BadAxes(format!("`{n}` is both fixed and an axis")));
        }
        values[i] = Some(v.clone());
    }
    let free: Vec<&String> = names.iter().zip(&values).enumerate().filter(|(i, (_, v))| v.is_none() && *i != ia && *i != ib).map(|(_, (n, _))| n).collect();
    if !free.is_empty() {
        let list: Vec<&str> = free.iter().map(|s| s.as_str()).collect();
        return Err(Error::BadAxes(format!("parameters left free besides the axes: {}", list.join(", "))));
    }
    let assignment: Vec<(usize, Rational)> = values.iter().enumerate().filter_map(|(i, v)| v.clone().map(|v| (i, v))).collect();
    let sigma = sigma_polynomials(class);
    let restrict = |p: &MultiPoly| p.specialize(&assignment);
    let (s0, s1) = (restrict(&sigma.sigma0), restrict(&sigma.sigma1));
    let seg0 = contour(&s0, ia, ib, vp);
    let seg1 = contour(&s1, ia, ib, vp);

    let mut svg = String::new();
    let (w, h) = (vp.width, vp.height);
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    let fixed_text: Vec<String> = fixed.iter().map(|(n, v)| format!("{n}={}", format_rational(v))).collect();
    writeln!(svg, "<title>{class} slice ({}, {}) at {}</title>", axes.0, axes.1, fixed_text.join(" ")).unwrap();
    writeln!(svg, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##).unwrap();
    let [x0, x1, y0, y1] = vp.bounds_f64();
    if x0 <= 0.0 && 0.0 <= x1 {
        let (px, _) = vp.to_pixel([0.0, 0.0]);
        writeln!(svg, r##"<line x1="{px:.2}" y1="0" x2="{px:.2}" y2="{h}" stroke="#999999" stroke-width="0.5"/>"##).unwrap();
    }
    if y0 <= 0.0 && 0.0 <= y1 {
        let (_, py) = vp.to_pixel([0.0, 0.0]);
        writeln!(svg, r##"<line x1="0" y1="{py:.2}" x2="{w}" y2="{py:.2}" stroke="#999999" stroke-width="0.5"/>"##).unwrap();
    }
    writeln!(svg, r##"<path d="{}" fill="none" stroke="#b22222" stroke-width="2"/>"##, segments_data(vp, &seg0)).unwrap();
    writeln!(
        svg,
        r##"<path d="{}" fill="none" stroke="#1f4e99" stroke-width="1.5" stroke-dasharray="6,2"/>"##,
        segments_data(vp, &seg1)
    )
    .unwrap();
    writeln!(svg, "</svg>").unwrap();
    Ok(SliceFigure { svg, sigma0_segments: seg0.len(), sigma1_segments: seg1.len() })
}

type Segment = [[f64; 2]; 2];

fn contour(p: &MultiPoly, ia: usize, ib: usize, vp: &Viewport) -> Vec<Segment> {
    let n = vp.samples as usize;
    let [x0, x1, y0, y1] = vp.bounds_f64();
    let xs: Vec<f64> = (0..=n).map(|i| x0 + (x1 - x0) * i as f64 / n as f64).collect();
    let ys: Vec<f64> = (0..=n).map(|j| y0 + (y1 - y0) * j as f64 / n as f64).collect();
    let mut point = vec![0.0; p.arity()];
    let mut grid = vec![vec![0.0; n + 1]; n + 1];
    for (j, &y) in ys.iter().enumerate() {
        for (i, &x) in xs.iter().enumerate() {
            point[ia] = x;
            point[ib] = y;
            grid[j][i] = p.eval_f64(&point);
        }
    }
    let cross = |a: [f64; 2], va: f64, b: [f64; 2], vb: f64| {
        let t = va / (va - vb);
        [a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t]
    };
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let c = [[xs[i], ys[j]], [xs[i + 1], ys[j]], [xs[i + 1], ys[j + 1]], [xs[i], ys[j + 1]]];
            let v = [grid[j][i], grid[j][i + 1], grid[j + 1][i + 1], grid[j + 1][i]];
            let mut hits = Vec::new();
            for k in 0..4 {
                let (a, b) = (k, (k + 1) % 4);
                if (v[a] > 0.0) != (v[b] > 0.0) {
                    hits.push(cross(c[a], v[a], c[b], v[b]));
                }
            }
            match hits.len() {
                2 => out.push([hits[0], hits[1]]),
                4 => {
                    let centre = (v[0] + v[1] + v[2] + v[3]) / 4.0;
                    if (centre > 0.0) == (v[0] > 0.0) {
                        out.push([hits[0], hits[3]]);
                        out.push([hits[1], hits[2]]);
                    } else {
                        out.push([hits[0], hits[1]]);
                        out.push([hits[2], hits[3]]);
                    }
                }
                _ => {}
            }
        }
    }
    out
}

fn segments_data(vp: &Viewport, segs: &[Segment]) -> String {
    let mut d = String::new();
    for s in segs {
        let (ax, ay) = vp.to_pixel(s[0]);
        let (bx, by) = vp.to_pixel(s[1]);
        if !d.is_empty() {
            d.push(' ');
        }
        write!(d, "M{ax:.2},{ay:.2} L{bx:.2},{by:.2}").unwrap();
    }
    d
}
