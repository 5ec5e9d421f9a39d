use crate::classify::BCSignature;
use crate::error::Result;
use crate::exactpoly::{rat, Rational, UniPoly};
use crate::models::{Parameter, SingularityClass};

/// Reads `lambda` off a polynomial `h` of degree `mu` whose leading
/// coefficient is the class sign.
///
/// # Panics
/// Panics if the degree or the leading coefficient do not fit the class.
pub fn parameter_from_h(class: &SingularityClass, h: &UniPoly) -> Parameter {
    let mu = class.mu();
    assert_eq!(h.degree(), Some(mu), "h must have degree mu");
    let lead = rat(class.h_leading_sign());
    let h = if h.leading() == Some(&lead) {
        h.clone()
    } else {
        h.monic().scale(&lead)
    };
    Parameter::new((1..=mu).map(|i| h.coeff(mu - i)).collect())
}

/// Roots `-p, ..., -1, 1, ..., q` of the canonical representative.
pub fn canonical_roots(sig: BCSignature) -> Vec<Rational> {
    let neg = (1..=sig.p as i64).rev().map(|i| rat(-i));
    let pos = (1..=sig.q as i64).map(rat);
    neg.chain(pos).collect()
}

/// `prod_{m=1}^{n} (x^2 + m)`.
pub fn canonical_definite_factor(n: usize) -> UniPoly {
    (1..=n as i64).fold(UniPoly::constant(rat(1)), |acc, m| {
        &acc * &UniPoly::from_ints(&[m, 0, 1])
    })
}

/// The parameter whose `h` is
/// `(sign) (x+1)...(x+p) (x-1)...(x-q) (x^2+1)...(x^2+(mu-p-q)/2)`.
///
/// # Errors
/// `InvalidSignature` when `p + q > mu` or `p + q` has the wrong parity.
pub fn construct_representative(class: &SingularityClass, sig: BCSignature) -> Result<Parameter> {
    assert!(class.is_bc(), "representatives are constructed for B and C");
    sig.validate(class.mu())?;
    let r = UniPoly::from_roots(&canonical_roots(sig));
    let q = canonical_definite_factor((class.mu() - sig.p - sig.q) / 2);
    Ok(parameter_from_h(class, &(&r * &q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_bc;

    #[test]
    fn examples() {
        let b2: SingularityClass = "B+2".parse().unwrap();
        assert_eq!(construct_representative(&b2, BCSignature::new(1, 1)).unwrap(), Parameter::from_ints(&[0, -1]));
        assert_eq!(construct_representative(&b2, BCSignature::new(0, 0)).unwrap(), Parameter::from_ints(&[0, 1]));
        let b3: SingularityClass = "+B3".parse().unwrap();
        assert_eq!(
            construct_representative(&b3, BCSignature::new(1, 2)).unwrap(),
            Parameter::from_ints(&[-2, -1, 2])
        );
        assert!(construct_representative(&b3, BCSignature::new(1, 1)).is_err());
    }

    #[test]
    fn round_trip_all_classes() {
        for class in SingularityClass::all_bc(7) {
            for sig in BCSignature::all(class.mu()) {
                let lambda = construct_representative(&class, sig).unwrap();
                assert_eq!(classify_bc(&class, &lambda).unwrap(), sig, "{class} {sig:?}");
            }
        }
    }
}
