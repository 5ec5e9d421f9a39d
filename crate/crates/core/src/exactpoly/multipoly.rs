//! Sparse multivariate polynomials over ℚ.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, Integer, One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::rational::{format_rational, parse_rational, rat, to_f64, Rational};
use super::unipoly::{push_term, UniPoly};
use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

/// A polynomial in an ordered list of named variables. Terms are keyed by
/// exponent tuples; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: Arc::new(vars.iter().map(|v| v.to_string()).collect()),
            terms: BTreeMap::new(),
        }
    }

    fn empty_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: Rational) -> Self {
        let mut p = self.empty_like();
        p.add_term(vec![0; self.arity()], c);
        p
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        MultiPoly::zero(vars).constant_like(c)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let z = MultiPoly::zero(vars);
        let i = z.index_of(name)?;
        Ok(z.monomial(i, 1))
    }

    /// All variables of `vars` as polynomials, in order.
    pub fn vars_of(vars: &[&str]) -> Vec<Self> {
        let z = MultiPoly::zero(vars);
        (0..vars.len()).map(|i| z.monomial(i, 1)).collect()
    }

    pub fn monomial(&self, idx: usize, power: u32) -> Self {
        let mut e = vec![0; self.arity()];
        e[idx] = power;
        let mut p = self.empty_like();
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent tuple arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.arity()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.last_key_value()
    }

    fn same_ring(&self, o: &MultiPoly) {
        assert!(
            Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars,
            "polynomials over different variable lists: {:?} vs {:?}",
            self.vars,
            o.vars
        );
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return self.empty_like();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.constant_like(Rational::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        self.check_arity(point.len())?;
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[k as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.arity());
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(to_f64(c), |acc, (&k, &v)| acc * v.powi(k as i32))
            })
            .sum()
    }

    fn check_arity(&self, got: usize) -> Result<()> {
        if got != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got,
            });
        }
        Ok(())
    }

    /// Dense list of coefficients with respect to variable `idx`, lowest power
    /// first; each coefficient lives in the same ring with `idx` absent.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut out = vec![self.empty_like(); deg + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[idx], 0) as usize;
            out[k].terms.insert(e2, c.clone());
        }
        if self.is_zero() {
            out.truncate(1);
        }
        out
    }

    /// Replaces variable `idx` by the polynomial `v` (same ring).
    pub fn substitute(&self, idx: usize, v: &MultiPoly) -> Self {
        self.same_ring(v);
        let coeffs = self.coefficients_in(idx);
        let mut acc = self.empty_like();
        for c in coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    /// Fixes the listed variables to rational values (they remain in the
    /// variable list with degree zero).
    pub fn specialize(&self, assignment: &[(usize, Rational)]) -> Self {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut t = c.clone();
            for (i, v) in assignment {
                let k = std::mem::replace(&mut e2[*i], 0);
                if k > 0 {
                    t *= num::pow::pow(v.clone(), k as usize);
                }
            }
            out.add_term(e2, t);
        }
        out
    }

    /// Removes a variable the polynomial does not depend on.
    pub fn drop_var(&self, idx: usize) -> Self {
        assert_eq!(self.degree_in(idx).unwrap_or(0), 0, "cannot drop a live variable");
        let mut vars = (*self.vars).clone();
        vars.remove(idx);
        MultiPoly {
            vars: Arc::new(vars),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.remove(idx);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Re-expresses the polynomial over a larger (or reordered) variable list.
    pub fn embed(&self, vars: &[&str]) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(MultiPoly::from_terms(
            vars,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = vec![0; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    e2[map[i]] = k;
                }
                (e2, c.clone())
            }),
        ))
    }

    pub fn partial(&self, idx: usize) -> Self {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            if e[idx] > 0 {
                let mut e2 = e.clone();
                e2[idx] -= 1;
                out.add_term(e2, c * rat(e[idx] as i64));
            }
        }
        out
    }

    /// Univariate view when the polynomial depends on `idx` alone.
    pub fn to_univariate(&self, idx: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(idx).unwrap_or(0) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != idx && k > 0) {
                return None;
            }
            coeffs[e[idx] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// `F((1−t)·p0 + t·p1)` as a polynomial in `t`.
    pub fn restrict_to_segment(&self, p0: &[Rational], p1: &[Rational]) -> Result<UniPoly> {
        self.check_arity(p0.len())?;
        self.check_arity(p1.len())?;
        let lines: Vec<UniPoly> = p0
            .iter()
            .zip(p1)
            .map(|(a, b)| UniPoly::new(vec![a.clone(), b - a]))
            .collect();
        let mut powers: Vec<Vec<UniPoly>> = lines
            .iter()
            .map(|l| vec![UniPoly::constant(Rational::one()), l.clone()])
            .collect();
        let mut acc = UniPoly::zero();
        for (e, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap() * &lines[i];
                    pw.push(next);
                }
                t = &t * &pw[k as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Exact quotient by lexicographic division; `None` if `d` does not divide.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.same_ring(d);
        let (le, lc) = d.leading_term()?;
        let (le, lc) = (le.clone(), lc.clone());
        let mut r = self.clone();
        let mut q = self.empty_like();
        while let Some((re, rc)) = r.leading_term() {
            if re.iter().zip(&le).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponents = re.iter().zip(&le).map(|(a, b)| a - b).collect();
            let c = rc / &lc;
            let mut t = self.empty_like();
            t.terms.insert(e, c);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Positive rational multiple with coprime integer coefficients and a
    /// positive lexicographically leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        let Some((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &den / c.denom())));
        let mut s = Rational::new(den, num);
        if lc.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// True when `self = k·other` for some nonzero rational `k`.
    pub fn is_proportional(&self, other: &MultiPoly) -> bool {
        !self.is_zero() && !other.is_zero() && self.primitive() == other.primitive()
    }

    /// Canonical text: terms in descending lexicographic exponent order.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            push_term(&mut out, c, &mono.join("*"));
        }
        out
    }

    /// Parses the canonical text form (`3/4*a^2*b - c + 1`).
    pub fn parse(vars: &[&str], text: &str) -> Result<MultiPoly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |m: &str| Error::Parse(format!("{m} in polynomial `{text}`"));
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let mut p = MultiPoly::zero(vars);
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        pieces.push(&s[start..]);
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coeff = Rational::one();
            let mut e = vec![0u32; vars.len()];
            for factor in body.split('*') {
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= parse_rational(factor)?;
                } else {
                    let (name, k) = match factor.split_once('^') {
                        Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (factor, 1),
                    };
                    let i = p.index_of(name)?;
                    e[i] += k;
                }
            }
            p.add_term(e, if neg { -coeff } else { coeff });
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&Exponents, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (e, format_rational(c)))
            .collect();
        let mut st = s.serialize_struct("MultiPoly", 3)?;
        st.serialize_field("variables", &*self.vars)?;
        st.serialize_field("text", &self.to_text())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.same_ring(o);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.same_ring(o);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.same_ring(o);
        let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: self.vars.clone(),
            terms: acc,
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&rat(-1))
    }
}
