use std::fmt;

use num::Zero;
use serde::ser::SerializeTuple;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpoly::{
    midpoint, real_roots, Endpoint, Interval, Rational, RealAlgebraic, SturmChain, UniPoly,
};
use crate::models::{discriminant_membership, Parameter, Sign, SingularityClass};

/// Which part of the zero set a boundary crossing lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Branch,
    Oval,
}

/// A crossing of the zero set with the boundary line, at a root `s` of
/// `y^3 + b y + d`. `fx_sign` is the sign of `a + c s`; the zero set meets the
/// horizontal line `y = s` a second time at `x = -(a + c s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootTag {
    pub component: Component,
    pub fx_sign: Sign,
}

impl Serialize for RootTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(match self.component {
            Component::Branch => "B",
            Component::Oval => "O",
        })?;
        t.serialize_element(&self.fx_sign.symbol().to_string())?;
        t.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OvalState {
    #[serde(rename = "A")]
    Absent,
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
    #[serde(rename = "X")]
    Crossed,
}

impl OvalState {
    pub fn mirror(self) -> Self {
        match self {
            OvalState::Left => OvalState::Right,
            OvalState::Right => OvalState::Left,
            s => s,
        }
    }

    pub fn code(self) -> char {
        match self {
            OvalState::Absent => 'A',
            OvalState::Left => 'L',
            OvalState::Right => 'R',
            OvalState::Crossed => 'X',
        }
    }
}

/// The boundary crossings of the zero set in ascending `y`, each tagged, plus
/// the position of the compact oval.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct F4Descriptor {
    pub roots: Vec<RootTag>,
    pub oval: OvalState,
}

/// How the non-compact branch meets the boundary: once, or three times. With
/// three crossings the branch either enters the half-plane `x > 0` from below
/// (ascending) or from above (descending).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Crossings {
    One,
    ThreeAscending,
    ThreeDescending,
}

impl Crossings {
    pub fn count(self) -> usize {
        match self {
            Crossings::One => 1,
            _ => 3,
        }
    }

    pub fn mirror(self) -> Self {
        match self {
            Crossings::ThreeAscending => Crossings::ThreeDescending,
            Crossings::ThreeDescending => Crossings::ThreeAscending,
            Crossings::One => Crossings::One,
        }
    }
}

/// Topological type of the set of lower values for F4: the descriptor with
/// the per-crossing signs forgotten except for the orientation of a
/// three-fold crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F4Type {
    pub crossings: Crossings,
    pub oval: OvalState,
}

impl F4Type {
    pub fn new(crossings: Crossings, oval: OvalState) -> Self {
        F4Type { crossings, oval }
    }

    /// Image under `(a, b, c, d) -> (-a, b, -c, d)`, i.e. `x -> -x`.
    pub fn mirror(self) -> Self {
        F4Type::new(self.crossings.mirror(), self.oval.mirror())
    }

    /// Every type compatible with the crossing and oval rules.
    pub fn candidates() -> Vec<F4Type> {
        let mut out = Vec::new();
        for oval in [OvalState::Absent, OvalState::Left, OvalState::Right, OvalState::Crossed] {
            out.push(F4Type::new(Crossings::One, oval));
        }
        for c in [Crossings::ThreeAscending, Crossings::ThreeDescending] {
            for oval in [OvalState::Absent, OvalState::Left, OvalState::Right] {
                out.push(F4Type::new(c, oval));
            }
        }
        out
    }
}

impl fmt::Display for F4Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.crossings {
            Crossings::One => "1",
            Crossings::ThreeAscending => "3a",
            Crossings::ThreeDescending => "3d",
        };
        write!(f, "{c}{}", self.oval.code())
    }
}

impl F4Descriptor {
    pub fn branch_count(&self) -> usize {
        self.roots.iter().filter(|r| r.component == Component::Branch).count()
    }

    pub fn oval_root_count(&self) -> usize {
        self.roots.len() - self.branch_count()
    }

    pub fn topological_type(&self) -> F4Type {
        let crossings = match (self.branch_count(), self.roots.first()) {
            (3, Some(first)) if first.fx_sign == Sign::Minus => Crossings::ThreeAscending,
            (3, _) => Crossings::ThreeDescending,
            _ => Crossings::One,
        };
        F4Type::new(crossings, self.oval)
    }

    pub fn mirror(&self) -> Self {
        F4Descriptor {
            roots: self
                .roots
                .iter()
                .map(|r| RootTag {
                    component: r.component,
                    fx_sign: r.fx_sign.flip(),
                })
                .collect(),
            oval: self.oval.mirror(),
        }
    }

    /// Checks the structural rules: one or three crossings, branch crossings
    /// below oval crossings, and an oval crossed exactly when two crossings
    /// lie on it.
    pub fn is_well_formed(&self) -> bool {
        let n = self.roots.len();
        let nb = self.branch_count();
        let ordered = self
            .roots
            .windows(2)
            .all(|w| !(w[0].component == Component::Oval && w[1].component == Component::Branch));
        (n == 1 || n == 3)
            && ordered
            && nb >= 1
            && match self.oval {
                OvalState::Crossed => self.oval_root_count() == 2,
                _ => self.oval_root_count() == 0,
            }
    }

    /// The a-priori descriptor space: 38 values.
    pub fn candidates() -> Vec<F4Descriptor> {
        let signs = [Sign::Plus, Sign::Minus];
        let tag = |component, fx_sign| RootTag { component, fx_sign };
        let mut out = Vec::new();
        for s in signs {
            for oval in [OvalState::Absent, OvalState::Left, OvalState::Right] {
                out.push(F4Descriptor {
                    roots: vec![tag(Component::Branch, s)],
                    oval,
                });
            }
        }
        for s1 in signs {
            for s2 in signs {
                for s3 in signs {
                    for oval in [OvalState::Absent, OvalState::Left, OvalState::Right] {
                        out.push(F4Descriptor {
                            roots: vec![
                                tag(Component::Branch, s1),
                                tag(Component::Branch, s2),
                                tag(Component::Branch, s3),
                            ],
                            oval,
                        });
                    }
                    out.push(F4Descriptor {
                        roots: vec![
                            tag(Component::Branch, s1),
                            tag(Component::Oval, s2),
                            tag(Component::Oval, s3),
                        ],
                        oval: OvalState::Crossed,
                    });
                }
            }
        }
        out
    }
}

/// `g(y) = (a + c y)^2 - 4 (y^3 + b y + d)`: the discriminant in `x` of `f`,
/// so the zero set lies over `{g >= 0}`.
pub fn support_polynomial(lambda: &Parameter) -> UniPoly {
    let l = lambda.values();
    let lin = UniPoly::new(vec![l[0].clone(), l[2].clone()]);
    let p = UniPoly::new(vec![l[3].clone(), l[1].clone(), Rational::zero(), num::One::one()]);
    &(&lin * &lin) - &p.scale(&crate::exactpoly::rat(4))
}

/// Descriptor of the `+x^2` family at `lambda`.
///
/// # Errors
/// `DiscriminantParameter` on the discriminant; `NonGenericConfiguration` if
/// the zero set meets the boundary at a point with vertical tangent.
pub fn classify_f4(lambda: &Parameter) -> Result<F4Descriptor> {
    let class = SingularityClass::f4(Sign::Plus);
    let m = discriminant_membership(&class, lambda)?;
    if !m.is_nonsingular() {
        return Err(Error::DiscriminantParameter(m));
    }
    let l = lambda.values();
    let p = UniPoly::new(vec![l[3].clone(), l[1].clone(), Rational::zero(), num::One::one()]);
    let g = support_polynomial(lambda);
    let lin = UniPoly::new(vec![l[0].clone(), l[2].clone()]);
    let g_chain = SturmChain::new(&g)?;
    let g_roots = real_roots(&g)?;
    let mut roots = Vec::new();
    for mut s in real_roots(&p)? {
        let fx = s.sign_of(&lin);
        if fx == 0 || s.sign_of(&g) == 0 {
            return Err(Error::NonGenericConfiguration);
        }
        let (lo, _) = s.bounds();
        let below = g_chain.count(&Interval::new(Endpoint::Infinite, Endpoint::Closed(lo)));
        let component = match below {
            0 => Component::Branch,
            2 => Component::Oval,
            _ => return Err(Error::NonGenericConfiguration),
        };
        roots.push(RootTag {
            component,
            fx_sign: if fx > 0 { Sign::Plus } else { Sign::Minus },
        });
    }
    let oval_roots = roots.iter().filter(|r| r.component == Component::Oval).count();
    let oval = match (g_roots.len(), oval_roots) {
        (1, 0) => OvalState::Absent,
        (3, 2) => OvalState::Crossed,
        (3, 0) => {
            let y_mid = separating_point(g_roots[1].clone(), g_roots[2].clone());
            match crate::exactpoly::rational::sign(&-lin.eval(&y_mid)) {
                1 => OvalState::Right,
                -1 => OvalState::Left,
                _ => return Err(Error::NonGenericConfiguration),
            }
        }
        _ => return Err(Error::NonGenericConfiguration),
    };
    Ok(F4Descriptor { roots, oval })
}

/// A rational strictly between two distinct ascending roots.
fn separating_point(mut r2: RealAlgebraic, mut r3: RealAlgebraic) -> Rational {
    loop {
        let (_, hi2) = r2.bounds();
        let (lo3, _) = r3.bounds();
        if hi2 < lo3 || (hi2 == lo3 && r2.exact().is_none() && r3.exact().is_none()) {
            return midpoint(&hi2, &lo3);
        }
        r2.refine();
        r3.refine();
    }
}

/// Descriptor for either sign of F4. The `-x^2` family is classified through
/// `(a, b, c, d) -> (-a, b, c, -d)`; the returned flag marks that reduction.
/// Under it the zero set is reflected in `y` and lower values trade places
/// with upper values, so the descriptor is a complete invariant but describes
/// the reduced function.
pub fn classify_f4_class(class: &SingularityClass, lambda: &Parameter) -> Result<(F4Descriptor, bool)> {
    lambda.check_arity(class)?;
    match class {
        SingularityClass::F4 { sign: Sign::Plus } => Ok((classify_f4(lambda)?, false)),
        SingularityClass::F4 { sign: Sign::Minus } => {
            Ok((classify_f4(&crate::models::reduce_f4_minus(lambda))?, true))
        }
        _ => panic!("classify_f4_class needs an F4 class"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json(lambda: &[i64]) -> String {
        serde_json::to_string(&classify_f4(&Parameter::from_ints(lambda)).unwrap()).unwrap()
    }

    #[test]
    fn descriptor_examples() {
        assert_eq!(json(&[1, 1, 0, 0]), r#"{"roots":[["B","+"]],"oval":"A"}"#);
        assert_eq!(
            json(&[1, -1, 0, 0]),
            r#"{"roots":[["B","+"],["O","+"],["O","+"]],"oval":"X"}"#
        );
        assert_eq!(json(&[3, -3, 0, 3]), r#"{"roots":[["B","+"]],"oval":"L"}"#);
    }

    #[test]
    fn candidate_spaces() {
        let d = F4Descriptor::candidates();
        assert_eq!(d.len(), 38);
        assert!(d.iter().all(F4Descriptor::is_well_formed));
        assert_eq!(F4Type::candidates().len(), 10);
    }

    #[test]
    fn mirror_symmetry() {
        let lambda = Parameter::from_ints(&[2, -3, 1, 1]);
        let mirrored = Parameter::from_ints(&[-2, -3, -1, 1]);
        assert_eq!(classify_f4(&mirrored).unwrap(), classify_f4(&lambda).unwrap().mirror());
    }
}
