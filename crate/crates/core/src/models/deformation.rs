use num::{One, Zero};

use super::class::{Parameter, Sign, SingularityClass};
use super::eliminant::f4_sigma0_eliminant;
use super::Membership;
use crate::error::Result;
use crate::exactpoly::{rat, sturm_count, Interval, MultiPoly, Rational, SturmChain, UniPoly};

/// `h(t) = ±t^mu + l1 t^(mu-1) + ... + l_mu` for a B or C class.
///
/// # Panics
/// Panics for F4.
pub fn h_polynomial(class: &SingularityClass, lambda: &Parameter) -> Result<UniPoly> {
    assert!(class.is_bc(), "h is defined for B and C only");
    lambda.check_arity(class)?;
    let mu = class.mu();
    let mut coeffs = vec![Rational::zero(); mu + 1];
    coeffs[mu] = rat(class.h_leading_sign());
    for (i, l) in lambda.values().iter().enumerate() {
        coeffs[mu - 1 - i] = l.clone();
    }
    Ok(UniPoly::new(coeffs))
}

/// `h` with symbolic coefficients, over the variables `t, l1, ..., l_mu`.
pub fn symbolic_h(class: &SingularityClass) -> MultiPoly {
    assert!(class.is_bc(), "h is defined for B and C only");
    let mu = class.mu();
    let names = class.param_names();
    let mut vars: Vec<&str> = vec!["t"];
    vars.extend(names.iter().map(String::as_str));
    let z = MultiPoly::zero(&vars);
    let mut h = z.monomial(0, mu as u32).scale(&rat(class.h_leading_sign()));
    for i in 1..=mu {
        h = &h + &(&z.monomial(i, 1) * &z.monomial(0, (mu - i) as u32));
    }
    h
}

/// The deformed function `f_lambda(x, y)`.
pub fn deformation_polynomial(class: &SingularityClass, lambda: &Parameter) -> Result<MultiPoly> {
    lambda.check_arity(class)?;
    let v = MultiPoly::vars_of(&["x", "y"]);
    let (x, y) = (&v[0], &v[1]);
    let c = |r: &Rational| x.constant_like(r.clone());
    let l = lambda.values();
    let f = match *class {
        SingularityClass::B { mu, sign } => {
            let h = h_polynomial(class, lambda)?;
            let y2 = y.pow(2);
            let y_coeff = if mu % 2 == 0 { sign.value() } else { class.h_leading_sign() };
            &compose(&h, x) + &y2.scale(&rat(y_coeff))
        }
        SingularityClass::C { mu, sign } => {
            let h = h_polynomial(class, lambda)?;
            let xy_coeff = if mu % 2 == 0 { 1 } else { sign.value() };
            &compose(&h, y) + &(x * y).scale(&rat(xy_coeff))
        }
        SingularityClass::F4 { sign } => {
            let mut f = &x.pow(2).scale(&rat(sign.value())) + &y.pow(3);
            f = &f + &(x * &c(&l[0]));
            f = &f + &(y * &c(&l[1]));
            f = &f + &(&(x * y) * &c(&l[2]));
            &f + &c(&l[3])
        }
    };
    Ok(f)
}

fn compose(h: &UniPoly, var: &MultiPoly) -> MultiPoly {
    let mut acc = var.constant_like(Rational::zero());
    for c in h.coeffs().iter().rev() {
        acc = &(&acc * var) + &var.constant_like(c.clone());
    }
    acc
}

/// The univariate polynomial governing the boundary: `h` for B and C,
/// `f(0, y) = y^3 + b y + d` for F4.
pub fn boundary_polynomial(class: &SingularityClass, lambda: &Parameter) -> Result<UniPoly> {
    match class {
        SingularityClass::F4 { .. } => {
            lambda.check_arity(class)?;
            let l = lambda.values();
            Ok(UniPoly::new(vec![
                l[3].clone(),
                l[1].clone(),
                Rational::zero(),
                Rational::one(),
            ]))
        }
        _ => h_polynomial(class, lambda),
    }
}

/// `(a, b, c, d) -> (-a, b, c, -d)`: the parameter of the `+x^2` family whose
/// function is `-f(x, -y)` for the `-x^2` family at `(a, b, c, d)`.
pub fn reduce_f4_minus(lambda: &Parameter) -> Parameter {
    let l = lambda.values();
    Parameter::new(vec![-&l[0], l[1].clone(), l[2].clone(), -&l[3]])
}

fn has_repeated_real_root(p: &UniPoly) -> Result<bool> {
    Ok(match SturmChain::new(p)?.repeated_part() {
        Some(g) => sturm_count(g, &Interval::real_line())? > 0,
        None => false,
    })
}

/// Exact position of `lambda` relative to the discriminant.
///
/// For B, `Sigma0` means `h` has a repeated real root and `Sigma1` means
/// `h(0) = 0`; for C the two conditions trade places. For F4, `Sigma0` is the
/// vanishing of the eliminant and `Sigma1` that of `27d^2 + 4b^3`.
pub fn discriminant_membership(class: &SingularityClass, lambda: &Parameter) -> Result<Membership> {
    lambda.check_arity(class)?;
    let m = match *class {
        SingularityClass::B { .. } | SingularityClass::C { .. } => {
            let h = h_polynomial(class, lambda)?;
            let repeated = has_repeated_real_root(&h)?;
            let at_zero = h.coeff(0).is_zero();
            if matches!(class, SingularityClass::B { .. }) {
                Membership::from_flags(repeated, at_zero)
            } else {
                Membership::from_flags(at_zero, repeated)
            }
        }
        SingularityClass::F4 { sign } => {
            let reduced = match sign {
                Sign::Plus => lambda.clone(),
                Sign::Minus => reduce_f4_minus(lambda),
            };
            let l = reduced.values();
            let s0 = f4_sigma0_eliminant().eval(l)?.is_zero();
            let s1 = (rat(27) * &l[3] * &l[3] + rat(4) * &l[1] * &l[1] * &l[1]).is_zero();
            Membership::from_flags(s0, s1)
        }
    };
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str) -> SingularityClass {
        s.parse().unwrap()
    }

    #[test]
    fn deformation_examples() {
        let f = deformation_polynomial(&class("B+2"), &Parameter::from_ints(&[0, -1])).unwrap();
        assert_eq!(f.to_text(), "x^2 + y^2 - 1");
        let f = deformation_polynomial(&class("F4+"), &Parameter::from_ints(&[1, -1, 0, 0])).unwrap();
        assert_eq!(f.to_text(), "x^2 + x + y^3 - y");
        let f = deformation_polynomial(&class("C3+"), &Parameter::from_ints(&[0, 0, 0])).unwrap();
        assert_eq!(f.to_text(), "x*y + y^3");
        assert!(deformation_polynomial(&class("C3+"), &Parameter::from_ints(&[0, 0])).is_err());
    }

    #[test]
    fn odd_minus_is_global_sign() {
        let f = deformation_polynomial(&class("-B3"), &Parameter::from_ints(&[0, 0, 0])).unwrap();
        assert_eq!(f.to_text(), "-x^3 - y^2");
        let f = deformation_polynomial(&class("-C3"), &Parameter::from_ints(&[0, 0, 0])).unwrap();
        assert_eq!(f.to_text(), "-x*y - y^3");
        let f = deformation_polynomial(&class("C-4"), &Parameter::from_ints(&[0, 0, 0, 0])).unwrap();
        assert_eq!(f.to_text(), "x*y - y^4");
    }

    #[test]
    fn boundary_examples() {
        let h = boundary_polynomial(&class("B+2"), &Parameter::from_ints(&[0, -1])).unwrap();
        assert_eq!(h, UniPoly::from_ints(&[-1, 0, 1]));
        let h = boundary_polynomial(&class("C+4"), &Parameter::from_ints(&[1, 0, 0, 2])).unwrap();
        assert_eq!(h, UniPoly::from_ints(&[2, 0, 0, 1, 1]));
        let p = boundary_polynomial(&class("F4+"), &Parameter::from_ints(&[5, -1, 7, 0])).unwrap();
        assert_eq!(p, UniPoly::from_ints(&[0, -1, 0, 1]));
    }

    #[test]
    fn membership_examples() {
        let m = |c: &str, l: &[i64]| discriminant_membership(&class(c), &Parameter::from_ints(l)).unwrap();
        assert_eq!(m("B+2", &[0, 0]), Membership::Both);
        assert_eq!(m("B+2", &[0, -1]), Membership::NonSingular);
        // y^3 - 3y + 2 has a double root at y = 1, and (0, 1) is also a critical
        // point of x^2 + y^3 - 3y + 2 with value 0
        assert_eq!(m("F4+", &[0, -3, 0, 2]), Membership::Both);
        assert_eq!(m("F4+", &[1, -3, 0, 2]), Membership::Sigma1);
        assert_eq!(m("F4+", &[-1, -3, 1, 2]), Membership::Both);
        // complex double roots are not on the real discriminant
        assert_eq!(m("B+4", &[0, 2, 0, 1]), Membership::NonSingular);
        assert_eq!(m("C+2", &[0, 0]), Membership::Both);
        assert_eq!(m("C+2", &[2, 1]), Membership::Sigma1);
        assert_eq!(m("B+2", &[2, 1]), Membership::Sigma0);
    }
}
