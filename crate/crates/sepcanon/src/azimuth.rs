//! Exact projective arithmetic for azimuths at biseps.
//!
//! An azimuth is a point of a projective line P(V ⊕ W): a pair `[a : b]` of
//! exact rationals, not both zero. The summands V, W are cotangent-line
//! labels fixed by the bisep's edge order; this module never computes them,
//! it only does the algebra. Azimuth equality must be decidable with no
//! epsilon, so coordinates are normalized: `b = 1` whenever `b != 0`, and
//! `a = 1` when `b = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AzimuthError {
    /// `(0, 0)` is not a projective point.
    #[error("coordinates [0 : 0] do not define an azimuth")]
    ZeroPair,
    /// Composing `[1 : 0]` with `[0 : 1]` (in either order) lands on `(0, 0)`.
    #[error("cannot compose azimuths singular in opposite coordinates")]
    IncompatibleSingular,
    /// Fewer than two entries of a triple were supplied.
    #[error("at least two of left/middle/right are needed to complete a triple")]
    UnderDetermined,
    /// All three entries of a triple were supplied; nothing to solve for.
    #[error("exactly two of left/middle/right must be supplied")]
    OverDetermined,
    /// The two supplied entries are both singular; the third is not
    /// uniquely determined.
    #[error("both supplied azimuths are singular; the third entry is not determined")]
    BothSingular,
    /// The two supplied entries admit no compatible completion.
    #[error("the supplied azimuths admit no compatible completion")]
    InconsistentSingular,
    /// A regular azimuth was required.
    #[error("expected a regular azimuth, got {0}")]
    NonRegular(String),
}

/// A projective pair `[a : b]` of exact rationals in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Azimuth {
    a: Rational,
    b: Rational,
}

impl Azimuth {
    /// Build an azimuth from projective coordinates, canonicalizing.
    pub fn new(a: Rational, b: Rational) -> Result<Self, AzimuthError> {
        if a.is_zero() && b.is_zero() {
            return Err(AzimuthError::ZeroPair);
        }
        if b.is_zero() {
            Ok(Azimuth {
                a: Rational::one(),
                b: Rational::zero(),
            })
        } else {
            Ok(Azimuth {
                a: a / &b,
                b: Rational::one(),
            })
        }
    }

    pub fn from_integers(a: i64, b: i64) -> Result<Self, AzimuthError> {
        Self::new(
            Rational::from(BigInt::from(a)),
            Rational::from(BigInt::from(b)),
        )
    }

    pub fn coords(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    /// `[a : b]` with both coordinates nonzero.
    pub fn is_regular(&self) -> bool {
        !self.a.is_zero() && !self.b.is_zero()
    }

    /// `[1 : 0]` or `[0 : 1]`.
    pub fn is_singular(&self) -> bool {
        !self.is_regular()
    }

    /// Componentwise product `[a_l * a_r : b_l * b_r]`.
    ///
    /// The result is singular iff either factor is; it is undefined
    /// (`IncompatibleSingular`) when the factors are singular in opposite
    /// coordinates.
    pub fn compose(&self, right: &Azimuth) -> Result<Azimuth, AzimuthError> {
        let a = &self.a * &right.a;
        let b = &self.b * &right.b;
        if a.is_zero() && b.is_zero() {
            return Err(AzimuthError::IncompatibleSingular);
        }
        Azimuth::new(a, b)
    }

    /// Solve `self = quotient * divisor` for `quotient`, componentwise.
    ///
    /// Used to peel one factor off a middle azimuth. Unique exactly when the
    /// divisor is regular, or when the divisor and `self` are singular in the
    /// same coordinate would leave it underdetermined; see `complete_triple`
    /// for the case analysis.
    fn solve_factor(&self, divisor: &Azimuth) -> Result<Azimuth, AzimuthError> {
        if divisor.is_regular() {
            // [a_m * b_d : b_m * a_d] is the unique projective solution.
            return Azimuth::new(&self.a * &divisor.b, &self.b * &divisor.a)
                .map_err(|_| AzimuthError::InconsistentSingular);
        }
        if self.is_regular() {
            // A singular factor forces a singular product.
            return Err(AzimuthError::InconsistentSingular);
        }
        // Both singular: same coordinate means any azimuth with the matching
        // support works (not unique); opposite coordinates have no solution.
        if (self.a.is_zero() && divisor.a.is_zero()) || (self.b.is_zero() && divisor.b.is_zero()) {
            Err(AzimuthError::BothSingular)
        } else {
            Err(AzimuthError::InconsistentSingular)
        }
    }
}

impl fmt::Display for Azimuth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.a, self.b)
    }
}

/// Left, middle and right azimuths at a bisep, any of which may be missing.
///
/// A full triple is compatible when `middle = left * right` componentwise up
/// to scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AzimuthTriple {
    pub left: Option<Azimuth>,
    pub middle: Option<Azimuth>,
    pub right: Option<Azimuth>,
    /// Id of the bisep this triple is attached to (edge ids joined by `+`).
    pub bisep: String,
}

impl AzimuthTriple {
    pub fn is_compatible(&self) -> bool {
        match (&self.left, &self.middle, &self.right) {
            (Some(l), Some(m), Some(r)) => match l.compose(r) {
                Ok(prod) => prod == *m,
                Err(_) => false,
            },
            _ => false,
        }
    }
}

/// Fill in the missing entry of a triple so that `middle = left * right`.
///
/// Exactly two entries must be present and they must not both be singular.
pub fn complete_triple(t: &AzimuthTriple) -> Result<AzimuthTriple, AzimuthError> {
    let present = t.left.is_some() as u8 + t.middle.is_some() as u8 + t.right.is_some() as u8;
    match present {
        0 | 1 => return Err(AzimuthError::UnderDetermined),
        3 => return Err(AzimuthError::OverDetermined),
        _ => {}
    }
    let mut out = t.clone();
    match (&t.left, &t.middle, &t.right) {
        (Some(l), None, Some(r)) => {
            if l.is_singular() && r.is_singular() {
                return Err(AzimuthError::BothSingular);
            }
            out.middle = Some(l.compose(r)?);
        }
        (Some(l), Some(m), None) => {
            out.right = Some(m.solve_factor(l)?);
        }
        (None, Some(m), Some(r)) => {
            out.left = Some(m.solve_factor(r)?);
        }
        _ => unreachable!("present count was checked above"),
    }
    debug_assert!(out.is_compatible());
    Ok(out)
}

/// The left azimuth induced by a middle azimuth and the hyperelliptic right
/// azimuth across a right-hyperelliptic bisep.
///
/// Both inputs must be regular: hyperelliptic azimuths always are, and a
/// singular middle azimuth does not determine the left factor.
pub fn induced_left_azimuth(
    middle: &Azimuth,
    hyperelliptic_right: &Azimuth,
) -> Result<Azimuth, AzimuthError> {
    if !middle.is_regular() {
        return Err(AzimuthError::NonRegular(middle.to_string()));
    }
    if !hyperelliptic_right.is_regular() {
        return Err(AzimuthError::NonRegular(hyperelliptic_right.to_string()));
    }
    let left = middle.solve_factor(hyperelliptic_right)?;
    debug_assert_eq!(left.compose(hyperelliptic_right).unwrap(), *middle);
    Ok(left)
}

/// Parse one JSON-style coordinate: an integer or a `"num/den"` string.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => {
            let num: BigInt = text.parse().ok()?;
            Some(Rational::from(num))
        }
    }
}

/// Render a rational the way the JSON schema spells it: a bare integer when
/// the denominator is 1, otherwise `num/den`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Azimuth {
    /// Canonical JSON spelling `[p, q]` with each coordinate an integer or
    /// a `num/den` string.
    pub fn to_json(&self) -> serde_json::Value {
        let coord = |r: &Rational| -> serde_json::Value {
            if r.denom().is_one() {
                if let Some(n) = to_i64(r.numer()) {
                    return serde_json::Value::from(n);
                }
            }
            serde_json::Value::from(rational_to_string(r))
        };
        serde_json::Value::Array(vec![coord(&self.a), coord(&self.b)])
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, String> {
        let arr = value
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| format!("azimuth must be a 2-element array, got {value}"))?;
        let coord = |v: &serde_json::Value| -> Result<Rational, String> {
            if let Some(n) = v.as_i64() {
                return Ok(Rational::from(BigInt::from(n)));
            }
            if let Some(s) = v.as_str() {
                return parse_rational(s).ok_or_else(|| format!("bad rational {s:?}"));
            }
            Err(format!("bad rational coordinate {v}"))
        };
        Azimuth::new(coord(&arr[0])?, coord(&arr[1])?).map_err(|e| e.to_string())
    }
}

fn to_i64(n: &BigInt) -> Option<i64> {
    use num_traits::ToPrimitive;
    if n.abs() <= BigInt::from(i64::MAX) {
        n.to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn az(a: i64, b: i64) -> Azimuth {
        Azimuth::from_integers(a, b).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(az(4, 3), az(8, 6));
        assert_eq!(az(3, 0), az(1, 0));
        assert_eq!(az(0, -2), az(0, 1));
        assert_eq!(az(5, -7), az(-5, 7));
        assert!(Azimuth::from_integers(0, 0).is_err());
    }

    #[test]
    fn regularity() {
        assert!(az(1, 1).is_regular());
        assert!(!az(1, 0).is_regular());
        assert!(az(-5, 7).is_regular());
    }

    #[test]
    fn compose_basics() {
        assert_eq!(az(1, 1).compose(&az(1, 1)).unwrap(), az(1, 1));
        assert_eq!(az(2, 3).compose(&az(2, 1)).unwrap(), az(4, 3));
        assert_eq!(
            az(1, 0).compose(&az(0, 1)),
            Err(AzimuthError::IncompatibleSingular)
        );
        // Singular in the same coordinate composes fine.
        assert_eq!(az(1, 0).compose(&az(1, 0)).unwrap(), az(1, 0));
        // Regularity is multiplicative.
        assert!(!az(1, 0).compose(&az(2, 3)).unwrap().is_regular());
    }

    #[test]
    fn triple_completion() {
        let t = AzimuthTriple {
            left: Some(az(2, 3)),
            middle: Some(az(4, 3)),
            right: None,
            bisep: "e1+e2".into(),
        };
        let done = complete_triple(&t).unwrap();
        assert_eq!(done.right.unwrap(), az(2, 1));

        let t = AzimuthTriple {
            left: Some(az(1, 1)),
            middle: None,
            right: Some(az(1, 1)),
            bisep: "e1+e2".into(),
        };
        assert_eq!(complete_triple(&t).unwrap().middle.unwrap(), az(1, 1));

        let t = AzimuthTriple {
            left: Some(az(1, 0)),
            middle: Some(az(0, 1)),
            right: None,
            bisep: "e1+e2".into(),
        };
        assert_eq!(complete_triple(&t), Err(AzimuthError::InconsistentSingular));
    }

    #[test]
    fn triple_completion_error_cases() {
        let empty = AzimuthTriple {
            left: None,
            middle: None,
            right: Some(az(1, 1)),
            bisep: String::new(),
        };
        assert_eq!(complete_triple(&empty), Err(AzimuthError::UnderDetermined));

        let full = AzimuthTriple {
            left: Some(az(1, 1)),
            middle: Some(az(1, 1)),
            right: Some(az(1, 1)),
            bisep: String::new(),
        };
        assert_eq!(complete_triple(&full), Err(AzimuthError::OverDetermined));

        let both_singular = AzimuthTriple {
            left: Some(az(1, 0)),
            middle: None,
            right: Some(az(1, 0)),
            bisep: String::new(),
        };
        assert_eq!(
            complete_triple(&both_singular),
            Err(AzimuthError::BothSingular)
        );

        // Middle and one side singular in the same slot: underdetermined.
        let same_slot = AzimuthTriple {
            left: Some(az(1, 0)),
            middle: Some(az(1, 0)),
            right: None,
            bisep: String::new(),
        };
        assert_eq!(complete_triple(&same_slot), Err(AzimuthError::BothSingular));
    }

    #[test]
    fn induced_left() {
        assert_eq!(
            induced_left_azimuth(&az(4, 3), &az(2, 1)).unwrap(),
            az(2, 3)
        );
        assert_eq!(
            induced_left_azimuth(&az(1, 1), &az(1, 1)).unwrap(),
            az(1, 1)
        );
        assert!(matches!(
            induced_left_azimuth(&az(1, 0), &az(1, 1)),
            Err(AzimuthError::NonRegular(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let a = Azimuth::new(
            Rational::new(BigInt::from(4), BigInt::from(3)),
            Rational::one(),
        )
        .unwrap();
        let j = a.to_json();
        assert_eq!(j, serde_json::json!(["4/3", 1]));
        assert_eq!(Azimuth::from_json(&j).unwrap(), a);
        assert_eq!(
            Azimuth::from_json(&serde_json::json!([4, 3])).unwrap(),
            az(4, 3)
        );
    }
}
