//! Central charges and slope functions on the `(beta, alpha^2)` half-plane.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::ChernCharacter;
use crate::error::{Error, ParseError};
use crate::rational::{int, parse_rational, rat, ExtendedRational, Rational};

/// A point of the tilt half-plane, stored with `alpha^2 > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct TiltPoint {
    beta: Rational,
    alpha_sq: Rational,
}

impl TiltPoint {
    pub fn new(beta: Rational, alpha_sq: Rational) -> Result<Self, Error> {
        if !alpha_sq.is_positive() {
            return Err(Error::NonPositiveAlphaSq(alpha_sq.to_string()));
        }
        Ok(Self { beta, alpha_sq })
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn alpha_sq(&self) -> &Rational {
        &self.alpha_sq
    }
}

impl fmt::Display for TiltPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta={},alpha2={}", self.beta, self.alpha_sq)
    }
}

impl FromStr for TiltPoint {
    type Err = ParseError;

    /// Parses `"beta=<rat>,alpha2=<rat>"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 2 {
            return Err(ParseError::Arity {
                expected: 2,
                found: parts.len(),
            });
        }
        let mut values = Vec::with_capacity(2);
        for (i, (part, key)) in parts.iter().zip(["beta", "alpha2"]).enumerate() {
            let position = i + 1;
            let (k, value) = part.split_once('=').ok_or_else(|| ParseError::Invalid {
                position,
                message: format!("expected `{key}=<rational>`"),
            })?;
            if k.trim() != key {
                return Err(ParseError::Key {
                    position,
                    key: k.trim().to_string(),
                    expected: key.to_string(),
                });
            }
            values.push(
                parse_rational(value).map_err(|source| ParseError::Rational { position, source })?,
            );
        }
        let alpha_sq = values.pop().unwrap();
        let beta = values.pop().unwrap();
        TiltPoint::new(beta, alpha_sq).map_err(|e| ParseError::Invalid {
            position: 2,
            message: e.to_string(),
        })
    }
}

impl From<TiltPoint> for String {
    fn from(p: TiltPoint) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for TiltPoint {
    type Error = ParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BridgelandParams {
    point: TiltPoint,
    s: Rational,
}

impl BridgelandParams {
    pub fn new(point: TiltPoint, s: Rational) -> Result<Self, Error> {
        if !s.is_positive() {
            return Err(Error::NonPositiveS(s.to_string()));
        }
        Ok(Self { point, s })
    }

    /// The command-line default `s = 1/3`.
    pub fn default_s() -> Rational {
        rat(1, 3)
    }

    pub fn point(&self) -> &TiltPoint {
        &self.point
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChargeValue {
    pub re: Rational,
    pub im: Rational,
}

impl ChargeValue {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    /// `-re/im`, or `+inf` when `im = 0`.
    pub fn slope(&self) -> ExtendedRational {
        if self.im.is_zero() {
            ExtendedRational::PosInfinity
        } else {
            ExtendedRational::Finite(-&self.re / &self.im)
        }
    }
}

impl std::ops::Add for ChargeValue {
    type Output = ChargeValue;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

/// `ch2^beta - alpha^2/2 ch0^beta`, shared by the tilt real part and the
/// Bridgeland imaginary part.
fn tilt_numerator(tw: &ChernCharacter, p: &TiltPoint) -> Rational {
    &tw.d - &p.alpha_sq * &tw.r / int(2)
}

/// Twisted Mumford slope `(c - beta r)/r`, `+inf` in rank zero.
pub fn mu_beta(ch: &ChernCharacter, beta: &Rational) -> ExtendedRational {
    if ch.r.is_zero() {
        ExtendedRational::PosInfinity
    } else {
        ExtendedRational::Finite((&ch.c - beta * &ch.r) / &ch.r)
    }
}

pub fn tilt_charge(ch: &ChernCharacter, p: &TiltPoint) -> ChargeValue {
    let tw = ch.twist(&p.beta);
    ChargeValue::new(-tilt_numerator(&tw, p), tw.c.clone())
}

pub fn nu(ch: &ChernCharacter, p: &TiltPoint) -> ExtendedRational {
    tilt_charge(ch, p).slope()
}

pub fn bridgeland_charge(ch: &ChernCharacter, params: &BridgelandParams) -> ChargeValue {
    let p = &params.point;
    let tw = ch.twist(&p.beta);
    let re = -&tw.e + (&params.s + rat(1, 6)) * &p.alpha_sq * &tw.c;
    ChargeValue::new(re, tilt_numerator(&tw, p))
}

pub fn lambda(ch: &ChernCharacter, params: &BridgelandParams) -> ExtendedRational {
    bridgeland_charge(ch, params).slope()
}

/// `alpha^2 Delta^beta + 4 (ch2^beta)^2 - 6 ch1^beta ch3^beta`.
pub fn bmt_form(ch: &ChernCharacter, p: &TiltPoint) -> Rational {
    bmt_form_at(ch, &p.beta, &p.alpha_sq)
}

/// [`bmt_form`] without the `alpha^2 > 0` restriction; the wall search
/// evaluates it on the boundary `alpha^2 = 0` to recover the zero circle.
pub fn bmt_form_at(ch: &ChernCharacter, beta: &Rational, alpha_sq: &Rational) -> Rational {
    let tw = ch.twist(beta);
    alpha_sq * tw.discriminant() + int(4) * &tw.d * &tw.d - int(6) * &tw.c * &tw.e
}

/// Zero circle `(beta - center)^2 + alpha^2 = radius_sq` of the BMT form.
///
/// `Q(beta, alpha^2)` equals `Delta (alpha^2 + beta^2) + l beta + q0`, so its
/// coefficients are recovered from three values on `alpha^2 = 0`. Returns
/// `None` when `Delta = 0` or the circle has no real points.
pub fn bmt_zero_circle(ch: &ChernCharacter) -> Option<(Rational, Rational)> {
    let zero = int(0);
    let q0 = bmt_form_at(ch, &zero, &zero);
    let q1 = bmt_form_at(ch, &int(1), &zero);
    let qm = bmt_form_at(ch, &int(-1), &zero);
    let quad = (&q1 + &qm) / int(2) - &q0;
    if quad.is_zero() {
        return None;
    }
    let lin = (q1 - qm) / int(2);
    let center = -lin / (int(2) * &quad);
    let radius_sq = &center * &center - q0 / quad;
    radius_sq.is_positive().then_some((center, radius_sq))
}

/// Numerical admissibility: `0 < Im Z(sub) < Im Z(total)`.
pub fn wall_admissible(sub: &ChernCharacter, total: &ChernCharacter, p: &TiltPoint) -> bool {
    let a = &sub.c - &p.beta * &sub.r;
    let b = &total.c - &p.beta * &total.r;
    a.is_positive() && a < b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::line_bundle_ch;

    fn v() -> ChernCharacter {
        ChernCharacter::from_ints(1, 0, -6, 15)
    }

    fn pt(b: Rational, a2: Rational) -> TiltPoint {
        TiltPoint::new(b, a2).unwrap()
    }

    fn fin(x: Rational) -> ExtendedRational {
        ExtendedRational::Finite(x)
    }

    #[test]
    fn tilt_points_reject_nonpositive_alpha() {
        assert!(TiltPoint::new(int(0), int(0)).is_err());
        assert!(TiltPoint::new(int(0), int(-1)).is_err());
        let p: TiltPoint = "beta=-15/4,alpha2=33/16".parse().unwrap();
        assert_eq!(p, pt(rat(-15, 4), rat(33, 16)));
        assert_eq!(p.to_string(), "beta=-15/4,alpha2=33/16");
        assert!(matches!(
            "gamma=1,alpha2=2".parse::<TiltPoint>(),
            Err(ParseError::Key { position: 1, .. })
        ));
        assert!("beta=1,alpha2=0".parse::<TiltPoint>().is_err());
        assert!(BridgelandParams::new(p, int(0)).is_err());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu_beta(&v(), &int(-4)), fin(int(4)));
        assert!(mu_beta(&ChernCharacter::from_ints(0, 1, 0, 0), &int(3)).is_infinite());
        assert_eq!(mu_beta(&line_bundle_ch(&rat(5, 2)), &int(0)), fin(rat(5, 2)));
    }

    #[test]
    fn tilt_charge_examples() {
        let top = pt(int(-4), int(4));
        assert_eq!(tilt_charge(&v(), &top), ChargeValue::new(int(0), int(4)));
        let f = ChernCharacter::from_ints(1, -2, 2, 0);
        assert_eq!(tilt_charge(&f, &top), ChargeValue::new(int(0), int(2)));
        let o = ChernCharacter::from_ints(1, 0, 0, 0);
        assert_eq!(
            tilt_charge(&o, &pt(int(0), rat(3, 7))),
            ChargeValue::new(rat(3, 14), int(0))
        );
    }

    #[test]
    fn nu_examples() {
        let top = pt(int(-4), int(4));
        assert_eq!(nu(&v(), &top), fin(int(0)));
        assert_eq!(nu(&ChernCharacter::from_ints(1, -2, 2, 0), &top), fin(int(0)));
        assert!(nu(&ChernCharacter::from_ints(0, 0, 1, 0), &pt(int(7), int(1))).is_infinite());
    }

    #[test]
    fn bridgeland_examples() {
        let o = ChernCharacter::from_ints(1, 0, 0, 0);
        let params = BridgelandParams::new(pt(int(0), int(2)), rat(1, 3)).unwrap();
        assert_eq!(bridgeland_charge(&o, &params), ChargeValue::new(int(0), int(-1)));
        assert_eq!(
            bridgeland_charge(&ChernCharacter::zero(), &params),
            ChargeValue::new(int(0), int(0))
        );
        assert!(lambda(&ChernCharacter::from_ints(0, 0, 0, 1), &params).is_infinite());
        // beta^2 - alpha^2 = 12 is the vanishing locus of Im Z(v)
        let on = BridgelandParams::new(pt(int(-4), int(4)), int(5)).unwrap();
        assert!(lambda(&v(), &on).is_infinite());
    }

    #[test]
    fn bmt_examples() {
        assert_eq!(bmt_form(&v(), &pt(rat(-15, 4), rat(33, 16))), int(0));
        assert_eq!(bmt_form(&v(), &pt(int(-4), int(4))), int(24));
        assert_eq!(bmt_form(&line_bundle_ch(&rat(-3, 2)), &pt(int(2), int(9))), int(0));
        assert_eq!(bmt_zero_circle(&v()), Some((rat(-15, 4), rat(33, 16))));
        assert_eq!(bmt_zero_circle(&line_bundle_ch(&int(2))), None);
    }

    #[test]
    fn admissibility() {
        let top = pt(int(-4), int(4));
        assert!(wall_admissible(&ChernCharacter::from_ints(1, -2, 2, 0), &v(), &top));
        assert!(!wall_admissible(&v(), &v(), &top));
        assert!(!wall_admissible(&ChernCharacter::from_ints(1, -4, 0, 0), &v(), &top));
    }
}
