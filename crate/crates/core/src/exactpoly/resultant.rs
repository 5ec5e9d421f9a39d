//! Sylvester resultants with fraction-free (Bareiss) determinant evaluation.

use num::{BigInt, Integer, One, Zero};

use super::multipoly::MultiPoly;
use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Fraction-free determinant of a square matrix of polynomials. Every
/// intermediate division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    let one = m[0][0].constant_like(Rational::one());
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return one.scale(&Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if prev == one {
                    num
                } else {
                    num.exact_div(&prev).expect("Bareiss step must divide exactly")
                };
            }
            m[i][k] = one.scale(&Rational::zero());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Positive integer clearing every denominator of `p`.
fn denominator_lcm(p: &MultiPoly) -> BigInt {
    p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()))
}

/// Sylvester matrix of `f` and `g` with respect to variable `idx`.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, idx: usize) -> Vec<Vec<MultiPoly>> {
    let fc = f.coefficients_in(idx);
    let gc = g.coefficients_in(idx);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let zero = f.scale(&Rational::zero());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in fc.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in gc.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of `f` and `g` eliminating variable `var`. The eliminated
/// variable is removed from the result's variable list.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let idx = f.index_of(var)?;
    g.index_of(var)?;
    let m = f.degree_in(idx).unwrap_or(0);
    let n = g.degree_in(idx).unwrap_or(0);
    if m == 0 || n == 0 {
        return Err(Error::DegreeZero(var.to_string()));
    }
    // Res(αf, βg) = α^n β^m Res(f, g)
    let alpha = denominator_lcm(f);
    let beta = denominator_lcm(g);
    let fi = f.scale(&Rational::from_integer(alpha.clone()));
    let gi = g.scale(&Rational::from_integer(beta.clone()));
    let det = bareiss_determinant(sylvester_matrix(&fi, &gi, idx));
    let factor = Rational::from_integer(num::pow::pow(alpha, n as usize) * num::pow::pow(beta, m as usize));
    Ok(det.scale(&factor.recip()).drop_var(idx))
}

/// Discriminant-style helper: `Res_var(p, ∂p/∂var)`.
pub fn resultant_with_derivative(p: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let idx = p.index_of(var)?;
    resultant(p, &p.partial(idx), var)
}

/// Resultant of two univariate polynomials with rational coefficients, by
/// the Euclidean remainder sequence.
///
/// # Errors
/// `ZeroPolynomial` if either input is zero.
pub fn univariate_resultant(f: &UniPoly, g: &UniPoly) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = Rational::one();
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return Ok(acc * num::pow::pow(b.coeff(0), m));
        }
        if m < n {
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(Rational::zero());
        }
        // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
        let k = r.degree().unwrap();
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= num::pow::pow(b.leading().unwrap().clone(), m - k);
        a = b;
        b = r;
    }
}

/// The polynomial of degree at most `xs.len() - 1` through the points
/// `(xs[i], ys[i])`, by Newton divided differences.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    assert_eq!(xs.len(), ys.len(), "one value per node");
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::new(vec![-xs[i].clone(), Rational::one()])) + &UniPoly::constant(dd[i].clone());
    }
    acc
}
