use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::root_signature;
use crate::models::{boundary_polynomial, discriminant_membership, Parameter, SingularityClass};

/// Numbers of negative and positive roots of `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BCSignature {
    pub p: usize,
    pub q: usize,
}

impl BCSignature {
    pub fn new(p: usize, q: usize) -> Self {
        BCSignature { p, q }
    }

    /// `p + q <= mu` and `p + q = mu (mod 2)`.
    pub fn validate(&self, mu: usize) -> Result<()> {
        let n = self.p + self.q;
        if n > mu || !(mu - n).is_multiple_of(2) {
            return Err(Error::InvalidSignature {
                p: self.p,
                q: self.q,
                mu,
            });
        }
        Ok(())
    }

    /// Every admissible signature for Milnor number `mu`, ordered by `(p, q)`.
    pub fn all(mu: usize) -> Vec<BCSignature> {
        let mut out = Vec::new();
        for p in 0..=mu {
            for q in 0..=mu - p {
                if (mu - p - q).is_multiple_of(2) {
                    out.push(BCSignature { p, q });
                }
            }
        }
        out
    }
}

/// Root signature of `h` at a parameter off the discriminant.
///
/// # Errors
/// `DiscriminantParameter` on the discriminant, `ArityMismatch` for a wrong
/// number of values.
pub fn classify_bc(class: &SingularityClass, lambda: &Parameter) -> Result<BCSignature> {
    assert!(class.is_bc(), "classify_bc needs a B or C class");
    let m = discriminant_membership(class, lambda)?;
    if !m.is_nonsingular() {
        return Err(Error::DiscriminantParameter(m));
    }
    let sig = root_signature(&boundary_polynomial(class, lambda)?)?;
    Ok(BCSignature::new(sig.neg, sig.pos))
}
