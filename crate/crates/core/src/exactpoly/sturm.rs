//! Sturm sequences, root counting, squarefree parts and real root isolation.

use std::cmp::Ordering;
use std::sync::Arc;

use num::{BigInt, Integer, One, Signed, Zero};
use serde::Serialize;

use super::interval::{Endpoint, Interval};
use super::rational::{midpoint, rat, sign, to_f64, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub gcd_with_derivative: UniPoly,
    pub squarefree_part: UniPoly,
}

/// `p = squarefree_part · gcd_with_derivative` up to a constant; both factors monic.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(SquarefreeDecomposition {
        squarefree_part: p.exact_div(&g).monic(),
        gcd_with_derivative: g,
    })
}

/// Integer polynomial, constant term first, used inside Sturm sequences so
/// that remainders and sign evaluations avoid rational normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    /// Positive multiple of `p` with coprime integer coefficients.
    fn from_uni(p: &UniPoly) -> IntPoly {
        let prim = p.primitive();
        IntPoly(prim.coeffs().iter().map(|c| c.numer().clone()).collect())
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    fn make_primitive(&mut self) {
        let g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in self.0.iter_mut() {
                *c /= &g;
            }
        }
    }

    fn derivative(&self) -> IntPoly {
        let mut d = IntPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        );
        d.make_primitive();
        d
    }

    /// A positive multiple of the remainder of `self` by `d`.
    fn positive_rem(&self, d: &IntPoly) -> IntPoly {
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.0.last().expect("nonzero divisor");
        let (lc_abs, lc_neg) = (lc.abs(), lc.is_negative());
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let mut lead = r.last().unwrap().clone();
            if lc_neg {
                lead = -lead;
            }
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            for (j, c) in d.0.iter().enumerate() {
                r[k + j] -= &lead * c;
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        let mut out = IntPoly(r);
        out.trim();
        out.make_primitive();
        out
    }

    fn sign_at(&self, x: &Rational) -> i8 {
        let (p, q) = (x.numer(), x.denom());
        let mut it = self.0.iter().rev();
        let Some(lead) = it.next() else {
            return 0;
        };
        let mut acc = lead.clone();
        let mut qp = BigInt::one();
        for c in it {
            qp *= q;
            acc = acc * p + c * &qp;
        }
        match acc.sign() {
            num::bigint::Sign::Minus => -1,
            num::bigint::Sign::NoSign => 0,
            num::bigint::Sign::Plus => 1,
        }
    }

    fn sign_at_infinity(&self, positive: bool) -> i8 {
        match self.0.last() {
            None => 0,
            Some(lc) => {
                let s: i8 = if lc.is_negative() { -1 } else { 1 };
                if positive || self.degree().is_multiple_of(2) {
                    s
                } else {
                    -s
                }
            }
        }
    }

    fn to_uni(&self) -> UniPoly {
        UniPoly::new(self.0.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }
}

/// Signed remainder sequence of `p` and `p'`, each member scaled by a
/// positive factor.
fn remainder_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![p.clone()];
    if p.degree() == 0 {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let mut r = seq[n - 2].positive_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        for c in r.0.iter_mut() {
            *c = -c.clone();
        }
        seq.push(r);
    }
    seq
}

/// Sturm sequence of the squarefree part of a polynomial. When the input is
/// squarefree the sequence is built directly from it; otherwise its last
/// member is the gcd with the derivative, which is kept.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
    base: UniPoly,
    repeated: Option<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let ip = IntPoly::from_uni(p);
        let seq = remainder_sequence(&ip);
        let last = seq.last().unwrap();
        if last.degree() == 0 {
            return Ok(SturmChain {
                base: ip.to_uni(),
                seq,
                repeated: None,
            });
        }
        let g = last.to_uni().monic();
        let sqf = ip.to_uni().exact_div(&g);
        let sqf_int = IntPoly::from_uni(&sqf);
        Ok(SturmChain {
            seq: remainder_sequence(&sqf_int),
            base: sqf_int.to_uni(),
            repeated: Some(g),
        })
    }

    /// The squarefree polynomial the chain was built from.
    pub fn base(&self) -> &UniPoly {
        &self.base
    }

    /// Whether the input polynomial had no repeated (complex) roots.
    pub fn input_is_squarefree(&self) -> bool {
        self.repeated.is_none()
    }

    /// Monic gcd of the input and its derivative, when nonconstant.
    pub fn repeated_part(&self) -> Option<&UniPoly> {
        self.repeated.as_ref()
    }

    fn sign_base(&self, x: &Rational) -> i8 {
        self.seq[0].sign_at(x)
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn variations_at(&self, e: &Endpoint, upper: bool) -> usize {
        match e.value() {
            None => Self::variations(self.seq.iter().map(|p| p.sign_at_infinity(upper))),
            Some(x) => Self::variations(self.seq.iter().map(|p| p.sign_at(x))),
        }
    }

    /// Number of distinct real roots in `iv`.
    pub fn count(&self, iv: &Interval) -> usize {
        if self.seq[0].degree() == 0 {
            return 0;
        }
        let va = self.variations_at(&iv.lo, false);
        let vb = self.variations_at(&iv.hi, true);
        // va - vb counts roots in the half-open (lo, hi]
        let mut n = va as isize - vb as isize;
        if let Endpoint::Closed(a) = &iv.lo {
            if self.sign_base(a) == 0 {
                n += 1;
            }
        }
        if let Endpoint::Open(b) = &iv.hi {
            if self.sign_base(b) == 0 {
                n -= 1;
            }
        }
        debug_assert!(n >= 0);
        n.max(0) as usize
    }

    fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        self.count(&Interval::open(a.clone(), b.clone()))
    }
}

pub fn sturm_count(p: &UniPoly, iv: &Interval) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(iv))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSignature {
    pub neg: usize,
    pub pos: usize,
    pub zero_is_root: bool,
    pub is_squarefree: bool,
}

pub fn root_signature(p: &UniPoly) -> Result<RootSignature> {
    let chain = SturmChain::new(p)?;
    let zero = Rational::zero();
    Ok(RootSignature {
        neg: chain.count(&Interval::new(Endpoint::Infinite, Endpoint::Open(zero.clone()))),
        pos: chain.count(&Interval::new(Endpoint::Open(zero), Endpoint::Infinite)),
        zero_is_root: p.coeff(0).is_zero(),
        is_squarefree: chain.input_is_squarefree(),
    })
}

/// Cauchy bound: every root lies strictly inside (−B, B).
fn cauchy_bound(p: &UniPoly) -> Rational {
    let lc = p.leading().expect("nonzero").abs();
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    m + rat(1)
}

/// A real root of a squarefree polynomial, held as an isolating interval that
/// can be refined on demand.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    chain: Arc<SturmChain>,
    repr: RootRepr,
}

#[derive(Clone, Debug)]
enum RootRepr {
    Exact(Rational),
    /// The only root of the chain's base polynomial in the open (lo, hi).
    Open(Rational, Rational),
}

impl RealAlgebraic {
    pub fn exact(&self) -> Option<&Rational> {
        match &self.repr {
            RootRepr::Exact(r) => Some(r),
            RootRepr::Open(..) => None,
        }
    }

    pub fn interval(&self) -> Interval {
        match &self.repr {
            RootRepr::Exact(r) => Interval::point(r.clone()),
            RootRepr::Open(a, b) => Interval::open(a.clone(), b.clone()),
        }
    }

    pub fn bounds(&self) -> (Rational, Rational) {
        match &self.repr {
            RootRepr::Exact(r) => (r.clone(), r.clone()),
            RootRepr::Open(a, b) => (a.clone(), b.clone()),
        }
    }

    pub fn width(&self) -> Rational {
        let (a, b) = self.bounds();
        b - a
    }

    /// Halves the isolating interval (or lands on the root exactly).
    pub fn refine(&mut self) {
        if let RootRepr::Open(a, b) = &self.repr {
            let m = midpoint(a, b);
            let sm = self.chain.sign_base(&m);
            if sm == 0 {
                self.repr = RootRepr::Exact(m);
            } else if match self.chain.sign_base(a) {
                0 => self.chain.count_open(a, &m) == 1,
                s => s != sm,
            } {
                self.repr = RootRepr::Open(a.clone(), m);
            } else {
                self.repr = RootRepr::Open(m, b.clone());
            }
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while self.exact().is_none() && &self.width() > width {
            self.refine();
        }
    }

    /// Exact comparison of the root with a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        match &self.repr {
            RootRepr::Exact(r) => r.cmp(x),
            RootRepr::Open(a, b) => {
                if x <= a {
                    Ordering::Greater
                } else if x >= b {
                    Ordering::Less
                } else if self.chain.sign_base(x) == 0 {
                    Ordering::Equal
                } else if self.chain.count_open(a, x) == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    /// Sign of `q` evaluated at the root, decided exactly.
    pub fn sign_of(&mut self, q: &UniPoly) -> i8 {
        if q.is_zero() {
            return 0;
        }
        if let Some(r) = self.exact() {
            return q.sign_at(r);
        }
        let g = self.chain.base().gcd(q);
        if !g.is_constant() {
            let common = SturmChain::new(&g).expect("nonzero gcd");
            if common.count(&self.interval()) > 0 {
                return 0;
            }
        }
        let qc = SturmChain::new(q).expect("nonzero");
        loop {
            if let Some(r) = self.exact() {
                return q.sign_at(r);
            }
            let (a, b) = self.bounds();
            if qc.count(&Interval::closed(a.clone(), b.clone())) == 0 {
                return q.sign_at(&midpoint(&a, &b));
            }
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut r = self.clone();
        let (a, b) = r.bounds();
        let scale = a.abs().max(b.abs()).max(rat(1));
        r.refine_to(&(scale * Rational::new(1.into(), num::BigInt::from(1u64 << 52))));
        let (a, b) = r.bounds();
        to_f64(&midpoint(&a, &b))
    }
}

/// Real roots of `p` in ascending order as refinable algebraic numbers.
pub fn real_roots(p: &UniPoly) -> Result<Vec<RealAlgebraic>> {
    let chain = Arc::new(SturmChain::new(p)?);
    let base = chain.base();
    if base.is_constant() {
        return Ok(Vec::new());
    }
    let b = cauchy_bound(base);
    let n = chain.count_open(&-b.clone(), &b);
    let mut out = Vec::with_capacity(n);
    split(&chain, -b.clone(), b, n, &mut out);
    Ok(out)
}

fn split(
    chain: &Arc<SturmChain>,
    lo: Rational,
    hi: Rational,
    n: usize,
    out: &mut Vec<RealAlgebraic>,
) {
    match n {
        0 => {}
        1 => out.push(RealAlgebraic {
            chain: chain.clone(),
            repr: RootRepr::Open(lo, hi),
        }),
        _ => {
            let m = midpoint(&lo, &hi);
            let nl = chain.count_open(&lo, &m);
            split(chain, lo, m.clone(), nl, out);
            if chain.sign_base(&m) == 0 {
                out.push(RealAlgebraic {
                    chain: chain.clone(),
                    repr: RootRepr::Exact(m.clone()),
                });
                split(chain, m, hi, n - nl - 1, out);
            } else {
                split(chain, m, hi, n - nl, out);
            }
        }
    }
}

/// Disjoint ascending isolating intervals, one per distinct real root, each of
/// width at most `max_width` or a rational point.
pub fn isolate_real_roots(p: &UniPoly, max_width: &Rational) -> Result<Vec<Interval>> {
    assert!(max_width.is_positive(), "max_width must be positive");
    let mut roots = real_roots(p)?;
    Ok(roots
        .iter_mut()
        .map(|r| {
            r.refine_to(max_width);
            r.interval()
        })
        .collect())
}

/// Sign of `p` at a rational point, exposed for callers holding intervals.
pub fn sign_at(p: &UniPoly, x: &Rational) -> i8 {
    sign(&p.eval(x))
}
