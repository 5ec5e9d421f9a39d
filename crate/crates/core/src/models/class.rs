use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpoly::rational::{format_rational, parse_rational, serde_rational_vec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A family from the classification of simple real boundary singularities in
/// two variables, boundary `x = 0`.
///
/// For even `mu` the sign of `B` is the sign of the `y^2` term and the sign of
/// `C` the sign of the `y^mu` term; for odd `mu` it is the global sign of the
/// normal form. For `F4` it is the sign of the `x^2` term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityClass {
    B { mu: usize, sign: Sign },
    C { mu: usize, sign: Sign },
    F4 { sign: Sign },
}

impl SingularityClass {
    pub fn b(mu: usize, sign: Sign) -> Result<Self> {
        Self::check_mu(mu)?;
        Ok(SingularityClass::B { mu, sign })
    }

    pub fn c(mu: usize, sign: Sign) -> Result<Self> {
        Self::check_mu(mu)?;
        Ok(SingularityClass::C { mu, sign })
    }

    pub fn f4(sign: Sign) -> Self {
        SingularityClass::F4 { sign }
    }

    fn check_mu(mu: usize) -> Result<()> {
        if mu < 2 {
            return Err(Error::Parse(format!("Milnor number must be at least 2, got {mu}")));
        }
        Ok(())
    }

    /// Every B and C class with `2 <= mu <= max_mu`, both signs.
    pub fn all_bc(max_mu: usize) -> Vec<SingularityClass> {
        let mut out = Vec::new();
        for mu in 2..=max_mu {
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(SingularityClass::B { mu, sign });
                out.push(SingularityClass::C { mu, sign });
            }
        }
        out
    }

    pub fn mu(&self) -> usize {
        match *self {
            SingularityClass::B { mu, .. } | SingularityClass::C { mu, .. } => mu,
            SingularityClass::F4 { .. } => 4,
        }
    }

    pub fn sign(&self) -> Sign {
        match *self {
            SingularityClass::B { sign, .. }
            | SingularityClass::C { sign, .. }
            | SingularityClass::F4 { sign } => sign,
        }
    }

    pub fn is_bc(&self) -> bool {
        !matches!(self, SingularityClass::F4 { .. })
    }

    pub fn is_f4(&self) -> bool {
        matches!(self, SingularityClass::F4 { .. })
    }

    /// `k` with `mu = 2k` or `mu = 2k + 1`; `None` for F4.
    pub fn k(&self) -> Option<usize> {
        self.is_bc().then(|| self.mu() / 2)
    }

    /// Number of components of the discriminant complement.
    pub fn expected_component_count(&self) -> usize {
        match self.k() {
            None => 8,
            Some(k) if self.mu().is_multiple_of(2) => (k + 1) * (k + 1),
            Some(k) => (k + 1) * (k + 2),
        }
    }

    pub fn asymptotic_sector_count(&self) -> usize {
        match *self {
            SingularityClass::B { mu, sign } if mu % 2 == 0 => match sign {
                Sign::Plus => 0,
                Sign::Minus => 2,
            },
            SingularityClass::B { .. } => 1,
            SingularityClass::C { .. } => 2,
            SingularityClass::F4 { .. } => 1,
        }
    }

    /// (type as an ordinary singularity, type of the boundary restriction).
    pub fn decomposition(&self) -> (String, String) {
        match *self {
            SingularityClass::B { mu, .. } => (format!("A{}", mu - 1), "A1".into()),
            SingularityClass::C { mu, .. } => ("A1".into(), format!("A{}", mu - 1)),
            SingularityClass::F4 { .. } => ("A2".into(), "A2".into()),
        }
    }

    /// Leading sign of the governing univariate polynomial `h` (B and C).
    pub fn h_leading_sign(&self) -> i64 {
        match *self {
            SingularityClass::B { mu, sign } if mu % 2 == 0 => {
                let _ = sign;
                1
            }
            SingularityClass::C { mu, sign } if mu % 2 == 0 => sign.value(),
            SingularityClass::B { sign, .. } | SingularityClass::C { sign, .. } => sign.value(),
            SingularityClass::F4 { .. } => 1,
        }
    }

    pub fn normal_form(&self) -> String {
        match *self {
            SingularityClass::B { mu, sign } if mu % 2 == 0 => format!("x^{mu} {} y^2", sign.symbol()),
            SingularityClass::C { mu, sign } if mu % 2 == 0 => format!("xy {} y^{mu}", sign.symbol()),
            SingularityClass::B { mu, sign } => match sign {
                Sign::Plus => format!("x^{mu} + y^2"),
                Sign::Minus => format!("-(x^{mu} + y^2)"),
            },
            SingularityClass::C { mu, sign } => match sign {
                Sign::Plus => format!("xy + y^{mu}"),
                Sign::Minus => format!("-(xy + y^{mu})"),
            },
            SingularityClass::F4 { sign } => match sign {
                Sign::Plus => "x^2 + y^3".into(),
                Sign::Minus => "-x^2 + y^3".into(),
            },
        }
    }

    /// Names of the deformation parameters in order.
    pub fn param_names(&self) -> Vec<String> {
        match self {
            SingularityClass::F4 { .. } => ["a", "b", "c", "d"].map(String::from).to_vec(),
            _ => (1..=self.mu()).map(|i| format!("l{i}")).collect(),
        }
    }

    /// Short tag usable in file names.
    pub fn file_tag(&self) -> String {
        let s = match self.sign() {
            Sign::Plus => "p",
            Sign::Minus => "m",
        };
        match self {
            SingularityClass::B { mu, .. } => format!("B{mu}{s}"),
            SingularityClass::C { mu, .. } => format!("C{mu}{s}"),
            SingularityClass::F4 { .. } => format!("F4{s}"),
        }
    }
}

impl fmt::Display for SingularityClass {
    /// Even B/C as `B+4`, odd as `-B5`, F4 as `F4+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SingularityClass::B { mu, sign } if mu % 2 == 0 => write!(f, "B{}{mu}", sign.symbol()),
            SingularityClass::C { mu, sign } if mu % 2 == 0 => write!(f, "C{}{mu}", sign.symbol()),
            SingularityClass::B { mu, sign } => write!(f, "{}B{mu}", sign.symbol()),
            SingularityClass::C { mu, sign } => write!(f, "{}C{mu}", sign.symbol()),
            SingularityClass::F4 { sign } => write!(f, "F4{}", sign.symbol()),
        }
    }
}

impl FromStr for SingularityClass {
    type Err = Error;

    /// Accepts the sign before the letter, after the letter or after the
    /// number: `B+4`, `B4+`, `+B5`, `C5-`, `F4+`. A missing sign means `+`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown singularity class `{s}`"));
        let t = s.trim();
        let mut sign = None;
        let mut letter = None;
        let mut digits = String::new();
        for ch in t.chars() {
            match ch {
                '+' | '-' => {
                    if sign.is_some() {
                        return Err(bad());
                    }
                    sign = Some(if ch == '+' { Sign::Plus } else { Sign::Minus });
                }
                'B' | 'b' | 'C' | 'c' | 'F' | 'f' if letter.is_none() && digits.is_empty() => {
                    letter = Some(ch.to_ascii_uppercase())
                }
                '0'..='9' if letter.is_some() => digits.push(ch),
                _ => return Err(bad()),
            }
        }
        let sign = sign.unwrap_or(Sign::Plus);
        let mu: usize = digits.parse().map_err(|_| bad())?;
        match letter.ok_or_else(bad)? {
            'B' => SingularityClass::b(mu, sign),
            'C' => SingularityClass::c(mu, sign),
            'F' if mu == 4 => Ok(SingularityClass::f4(sign)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for SingularityClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SingularityClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A point of the deformation base: `(l1, ..., l_mu)` or `(a, b, c, d)` for F4.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Parameter(#[serde(with = "serde_rational_vec")] pub Vec<Rational>);

impl Parameter {
    pub fn new(values: Vec<Rational>) -> Self {
        Parameter(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Parameter(values.iter().map(|&v| crate::exactpoly::rat(v)).collect())
    }

    pub fn parse(literals: &[&str]) -> Result<Self> {
        Ok(Parameter(
            literals
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_arity(&self, class: &SingularityClass) -> Result<()> {
        if self.len() != class.mu() {
            return Err(Error::ArityMismatch {
                expected: class.mu(),
                got: self.len(),
            });
        }
        Ok(())
    }

    /// `(1−t)·self + t·other`.
    pub fn lerp(&self, other: &Parameter, t: &Rational) -> Parameter {
        Parameter(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + (b - a) * t)
                .collect(),
        )
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(crate::exactpoly::rational::to_f64).collect()
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}
