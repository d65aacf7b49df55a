//! Chern characters on projective 3-space.
//!
//! A character is the vector `(ch0, ch1.H^2, ch2.H, ch3)` of rationals. The
//! Chow ring is `Q[H]/H^4` with `H^3` the class of a point, so products of
//! characters are truncated polynomial products in `H`.
//!
//! The lattice predicate [`ChernCharacter::is_integral`] is this crate's own
//! codification of the conditions every character of an object on P^3
//! satisfies: integral rank and degree, `2 ch2 = ch1 (mod 2)`, `6 ch3` integral
//! and `chi(O, -)` integral. It is necessary, not claimed sufficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};
use crate::rational::{int, is_integer, parse_rational, rat, Rational};

/// Todd class of P^3: `(1 + H)^4` divided by the Chern character of `O(1)^4 / O`.
fn todd() -> [Rational; 4] {
    [int(1), int(2), rat(11, 6), int(1)]
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ChernCharacter {
    /// `ch0`, the rank.
    pub r: Rational,
    /// `ch1 . H^2`, the degree.
    pub c: Rational,
    /// `ch2 . H`.
    pub d: Rational,
    /// `ch3`.
    pub e: Rational,
}

impl ChernCharacter {
    pub fn new(r: Rational, c: Rational, d: Rational, e: Rational) -> Self {
        Self { r, c, d, e }
    }

    pub fn zero() -> Self {
        Self::new(int(0), int(0), int(0), int(0))
    }

    /// Builds a character from `(numerator, denominator)` pairs.
    pub fn from_ratios(parts: [(i64, i64); 4]) -> Self {
        let [r, c, d, e] = parts.map(|(n, q)| rat(n, q));
        Self::new(r, c, d, e)
    }

    pub fn from_ints(r: i64, c: i64, d: i64, e: i64) -> Self {
        Self::new(int(r), int(c), int(d), int(e))
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.r, &self.c, &self.d, &self.e]
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.r * k, &self.c * k, &self.d * k, &self.e * k)
    }

    /// Product in the truncated Chow ring.
    pub fn tensor(&self, other: &Self) -> Self {
        let a = self.components();
        let b = other.components();
        let coeff = |k: usize| -> Rational { (0..=k).map(|i| a[i] * b[k - i]).sum() };
        Self::new(coeff(0), coeff(1), coeff(2), coeff(3))
    }

    /// The twisted character `e^{-beta H} . ch`.
    pub fn twist(&self, beta: &Rational) -> Self {
        let b2 = beta * beta / int(2);
        let b3 = beta * beta * beta / int(6);
        Self::new(
            self.r.clone(),
            &self.c - beta * &self.r,
            &self.d - beta * &self.c + &b2 * &self.r,
            &self.e - beta * &self.d + &b2 * &self.c - &b3 * &self.r,
        )
    }

    /// Sign alternation `(r, -c, d, -e)`; the character of the derived dual.
    pub fn dual(&self) -> Self {
        Self::new(self.r.clone(), -&self.c, self.d.clone(), -&self.e)
    }

    /// Bogomolov discriminant `c^2 - 2 r d`.
    pub fn discriminant(&self) -> Rational {
        &self.c * &self.c - int(2) * &self.r * &self.d
    }

    /// Lattice membership as used throughout the crate: `r, c` integers, `2d`
    /// an integer with `2d = c (mod 2)`, `6e` an integer and `chi(O, ch)` an
    /// integer. This is a chosen codification of the lattice, not derived here.
    pub fn is_integral(&self) -> bool {
        if !is_integer(&self.r) || !is_integer(&self.c) {
            return false;
        }
        let two_d = int(2) * &self.d;
        if !is_integer(&two_d) || !is_integer(&((two_d - &self.c) / int(2))) {
            return false;
        }
        if !is_integer(&(int(6) * &self.e)) {
            return false;
        }
        is_integer(&euler_pairing(&Self::from_ints(1, 0, 0, 0), self))
    }

    /// Integrality of the part that enters tilt-wall geometry: `r, c` integers,
    /// `2d` an integer of the same parity as `c`.
    pub fn is_lattice_truncation(&self) -> bool {
        self.truncate().is_lattice()
    }

    pub fn truncate(&self) -> TruncatedCharacter {
        TruncatedCharacter::new(self.r.clone(), self.c.clone(), self.d.clone())
    }
}

/// `ch(O(t)) = e^{tH} = (1, t, t^2/2, t^3/6)`.
pub fn line_bundle_ch(t: &Rational) -> ChernCharacter {
    ChernCharacter::new(
        int(1),
        t.clone(),
        t * t / int(2),
        t * t * t / int(6),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// One term `sign . O(twist)` of a resolution by line bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionTerm {
    pub twist: i64,
    pub sign: Sign,
}

impl ResolutionTerm {
    pub fn plus(twist: i64) -> Self {
        Self {
            twist,
            sign: Sign::Plus,
        }
    }

    pub fn minus(twist: i64) -> Self {
        Self {
            twist,
            sign: Sign::Minus,
        }
    }
}

/// Alternating sum of line-bundle characters.
pub fn from_resolution(terms: &[ResolutionTerm]) -> Result<ChernCharacter, Error> {
    if terms.is_empty() {
        return Err(Error::EmptyResolution);
    }
    Ok(terms.iter().fold(ChernCharacter::zero(), |acc, term| {
        let ch = line_bundle_ch(&int(term.twist));
        match term.sign {
            Sign::Plus => acc + ch,
            Sign::Minus => acc - ch,
        }
    }))
}

/// Character of the ideal sheaf of a curve of the given degree and arithmetic
/// genus: `(1, 0, -deg, 2 deg + g - 1)`.
pub fn curve_ideal_ch(degree: u64, arithmetic_genus: i64) -> Result<ChernCharacter, Error> {
    if degree == 0 {
        return Err(Error::OutOfRange {
            what: "curve degree",
            value: "0".into(),
        });
    }
    let deg = degree as i64;
    Ok(ChernCharacter::from_ints(
        1,
        0,
        -deg,
        2 * deg + arithmetic_genus - 1,
    ))
}

/// `chi(a, b)` by Hirzebruch-Riemann-Roch: the `H^3` coefficient of
/// `dual(a) . b . td(P^3)`.
pub fn euler_pairing(a: &ChernCharacter, b: &ChernCharacter) -> Rational {
    let p = a.dual().tensor(b);
    let td = todd();
    &p.e * &td[0] + &p.d * &td[1] + &p.c * &td[2] + &p.r * &td[3]
}

impl Add for ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, o: Self) -> Self {
        Self::new(self.r + o.r, self.c + o.c, self.d + o.d, self.e + o.e)
    }
}

impl<'a> Add<&'a ChernCharacter> for &'a ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, o: Self) -> ChernCharacter {
        ChernCharacter::new(&self.r + &o.r, &self.c + &o.c, &self.d + &o.d, &self.e + &o.e)
    }
}

impl Sub for ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, o: Self) -> Self {
        Self::new(self.r - o.r, self.c - o.c, self.d - o.d, self.e - o.e)
    }
}

impl<'a> Sub<&'a ChernCharacter> for &'a ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, o: Self) -> ChernCharacter {
        ChernCharacter::new(&self.r - &o.r, &self.c - &o.c, &self.d - &o.d, &self.e - &o.e)
    }
}

impl Neg for ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> Self {
        Self::new(-self.r, -self.c, -self.d, -self.e)
    }
}

impl Mul<&ChernCharacter> for &Rational {
    type Output = ChernCharacter;
    fn mul(self, ch: &ChernCharacter) -> ChernCharacter {
        ch.scale(self)
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.r, self.c, self.d, self.e)
    }
}

fn parse_entries<const N: usize>(text: &str) -> Result<[Rational; N], ParseError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != N {
        return Err(ParseError::Arity {
            expected: N,
            found: parts.len(),
        });
    }
    let mut out: [Rational; N] = std::array::from_fn(|_| Rational::zero());
    for (i, part) in parts.iter().enumerate() {
        out[i] = parse_rational(part).map_err(|source| ParseError::Rational {
            position: i + 1,
            source,
        })?;
    }
    Ok(out)
}

impl FromStr for ChernCharacter {
    type Err = ParseError;

    /// Parses `"r,c,d,e"`, each entry `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let [r, c, d, e] = parse_entries::<4>(s)?;
        Ok(Self::new(r, c, d, e))
    }
}

impl From<ChernCharacter> for String {
    fn from(ch: ChernCharacter) -> String {
        ch.to_string()
    }
}

impl TryFrom<String> for ChernCharacter {
    type Error = ParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// `(ch0, ch1, ch2)` only; the data tilt-wall geometry depends on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct TruncatedCharacter {
    pub r: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl TruncatedCharacter {
    pub fn new(r: Rational, c: Rational, d: Rational) -> Self {
        Self { r, c, d }
    }

    pub fn from_ratios(parts: [(i64, i64); 3]) -> Self {
        let [r, c, d] = parts.map(|(n, q)| rat(n, q));
        Self::new(r, c, d)
    }

    pub fn is_lattice(&self) -> bool {
        let two_d = int(2) * &self.d;
        is_integer(&self.r)
            && is_integer(&self.c)
            && is_integer(&two_d)
            && is_integer(&((two_d - &self.c) / int(2)))
    }

    pub fn discriminant(&self) -> Rational {
        &self.c * &self.c - int(2) * &self.r * &self.d
    }

    /// Completes to a full character with the given `ch3`.
    pub fn with_ch3(&self, e: Rational) -> ChernCharacter {
        ChernCharacter::new(self.r.clone(), self.c.clone(), self.d.clone(), e)
    }

    /// Twist of the truncation; agrees with truncating [`ChernCharacter::twist`].
    pub fn twist(&self, beta: &Rational) -> Self {
        self.with_ch3(int(0)).twist(beta).truncate()
    }
}

impl<'a> Sub<&'a TruncatedCharacter> for &'a TruncatedCharacter {
    type Output = TruncatedCharacter;
    fn sub(self, o: Self) -> TruncatedCharacter {
        TruncatedCharacter::new(&self.r - &o.r, &self.c - &o.c, &self.d - &o.d)
    }
}

impl fmt::Display for TruncatedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.r, self.c, self.d)
    }
}

impl FromStr for TruncatedCharacter {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let [r, c, d] = parse_entries::<3>(s)?;
        Ok(Self::new(r, c, d))
    }
}

impl From<TruncatedCharacter> for String {
    fn from(ch: TruncatedCharacter) -> String {
        ch.to_string()
    }
}

impl TryFrom<String> for TruncatedCharacter {
    type Error = ParseError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(s: &str) -> ChernCharacter {
        s.parse().unwrap()
    }

    fn v() -> ChernCharacter {
        ChernCharacter::from_ints(1, 0, -6, 15)
    }

    #[test]
    fn twist_examples() {
        assert_eq!(v().twist(&int(0)), v());
        let t = v().twist(&int(-4));
        assert_eq!(t.truncate(), TruncatedCharacter::from_ratios([(1, 1), (4, 1), (2, 1)]));
        let f = ch("1,-2,2,0").twist(&int(-4)).truncate();
        assert_eq!(f, TruncatedCharacter::from_ratios([(1, 1), (2, 1), (2, 1)]));
    }

    #[test]
    fn line_bundles() {
        assert_eq!(line_bundle_ch(&int(0)), ch("1,0,0,0"));
        assert_eq!(line_bundle_ch(&int(-2)), ch("1,-2,2,-4/3"));
        assert_eq!(line_bundle_ch(&int(1)), ch("1,1,1/2,1/6"));
    }

    #[test]
    fn resolutions() {
        let ci = from_resolution(&[
            ResolutionTerm::plus(-2),
            ResolutionTerm::plus(-3),
            ResolutionTerm::minus(-5),
        ])
        .unwrap();
        assert_eq!(ci, v());
        assert_eq!(from_resolution(&[ResolutionTerm::plus(0)]).unwrap(), ch("1,0,0,0"));
        let koszul = from_resolution(&[
            ResolutionTerm::plus(0),
            ResolutionTerm::minus(-1),
            ResolutionTerm::minus(-1),
            ResolutionTerm::plus(-2),
        ])
        .unwrap();
        assert_eq!(koszul, ch("0,0,1,-1"));
        assert_eq!(ch("1,0,0,0") - koszul, ch("1,0,-1,1"));
        assert_eq!(from_resolution(&[]), Err(Error::EmptyResolution));
    }

    #[test]
    fn curve_ideals() {
        assert_eq!(curve_ideal_ch(6, 4).unwrap(), v());
        assert_eq!(curve_ideal_ch(1, 0).unwrap(), ch("1,0,-1,1"));
        assert_eq!(curve_ideal_ch(2, 0).unwrap(), ch("1,0,-2,3"));
        // conic: O(-3) -> O(-1) + O(-2) -> I_conic
        let conic = from_resolution(&[
            ResolutionTerm::plus(-1),
            ResolutionTerm::plus(-2),
            ResolutionTerm::minus(-3),
        ])
        .unwrap();
        assert_eq!(curve_ideal_ch(2, 0).unwrap(), conic);
        assert!(curve_ideal_ch(0, 0).is_err());
    }

    #[test]
    fn duals() {
        assert_eq!(v().dual(), ch("1,0,-6,-15"));
        assert_eq!(ch("0,1,-11/2,79/6").dual(), ch("0,-1,-11/2,-79/6"));
        assert_eq!(v().dual().dual(), v());
    }

    #[test]
    fn euler_examples() {
        let o = ch("1,0,0,0");
        assert_eq!(euler_pairing(&o, &o), int(1));
        assert_eq!(euler_pairing(&o, &ch("1,1,1/2,1/6")), int(4));
        assert_eq!(
            euler_pairing(&ch("0,1,-11/2,79/6"), &ch("1,-1,-1/2,11/6")),
            int(-18)
        );
    }

    #[test]
    fn discriminants() {
        assert_eq!(v().discriminant(), int(12));
        assert_eq!(line_bundle_ch(&rat(-7, 3)).discriminant(), int(0));
        assert_eq!(ch("0,2,-8,0").discriminant(), int(4));
    }

    #[test]
    fn integrality() {
        assert!(v().is_integral());
        assert!(ch("0,1,-11/2,79/6").is_integral());
        assert!(!ch("1,0,-1/3,0").is_integral());
        // wrong parity of 2ch2 against ch1
        assert!(!ch("1,0,1/2,0").is_integral());
        // 6ch3 integral but chi(O, -) is not
        assert!(!ch("1,0,0,1/6").is_integral());
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            "1,0".parse::<ChernCharacter>(),
            Err(ParseError::Arity {
                expected: 4,
                found: 2
            })
        );
        match "1,0,x,2".parse::<ChernCharacter>() {
            Err(ParseError::Rational { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn serde_uses_text_form() {
        let json = serde_json::to_string(&ch("0,1,-11/2,79/6")).unwrap();
        assert_eq!(json, "\"0,1,-11/2,79/6\"");
        let back: ChernCharacter = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ch("0,1,-11/2,79/6"));
    }
}
