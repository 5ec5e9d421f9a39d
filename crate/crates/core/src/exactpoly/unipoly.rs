use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use super::rational::{format_rational, rat, sign, to_f64, Rational};

/// Dense univariate polynomial over ℚ, coefficients from the constant term up.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and `degree() == coeffs.len() - 1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    /// `x − r`.
    pub fn linear_root(r: &Rational) -> Self {
        UniPoly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(UniPoly::constant(Rational::one()), |acc, r| &acc * &UniPoly::linear_root(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    /// Sign as x → +∞ (`positive = true`) or x → −∞.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        match (self.leading(), self.degree()) {
            (None, _) => 0,
            (Some(lc), Some(d)) => {
                let s = sign(lc);
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division over ℚ. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let f = &r[k] / lc;
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = &f * c;
                r[k - dd + j] -= t;
            }
            q[k - dd] = f;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Positive rational multiple with coprime integer coefficients. The sign
    /// of every value is preserved, which Sturm sequences rely on.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &den / c.denom())));
        self.scale(&Rational::new(den, num.abs()))
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.rem(&b).primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::constant(Rational::one()), |acc, _| &acc * self)
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            push_term(&mut out, c, &mono);
        }
        out
    }
}

/// Appends `c*mono` to a `+`/`-` separated term list.
pub(crate) fn push_term(out: &mut String, c: &Rational, mono: &str) {
    let neg = c.is_negative();
    let abs = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&format_rational(&abs));
    } else if abs.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&format_rational(&abs));
        out.push('*');
        out.push_str(mono);
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::ratio;

    #[test]
    fn division_identity() {
        let a = UniPoly::from_ints(&[2, -1, -2, 1]);
        let b = UniPoly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = UniPoly::from_roots(&[rat(1), rat(1), rat(-2)]);
        let g = a.gcd(&a.derivative());
        assert_eq!(g, UniPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn primitive_keeps_sign() {
        let p = UniPoly::new(vec![ratio(-1, 2), ratio(3, 4)]);
        assert_eq!(p.primitive(), UniPoly::from_ints(&[-2, 3]));
        let n = UniPoly::new(vec![ratio(1, 2), ratio(-3, 4)]);
        assert_eq!(n.primitive(), UniPoly::from_ints(&[2, -3]));
    }

    #[test]
    fn text_form() {
        assert_eq!(UniPoly::from_ints(&[-4, 0, 27]).to_text("t"), "27*t^2 - 4");
        assert_eq!(UniPoly::zero().to_text("t"), "0");
    }
}
