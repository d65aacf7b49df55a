//! Exact rational helpers shared by every module.
//!
//! All geometry in this crate is decided by exact comparisons. Square roots
//! never get materialised: a quantity like a wall radius is carried as its
//! square and compared through [`cmp_sqrt`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseRationalError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let t = text.trim();
    let bad = || ParseRationalError {
        text: text.to_string(),
    };
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Compares `x` with the non-negative square root of `q` (`q >= 0`).
pub fn cmp_sqrt(x: &Rational, q: &Rational) -> Ordering {
    debug_assert!(!q.is_negative());
    if x.is_negative() {
        return if q.is_zero() && x.is_zero() {
            Ordering::Equal
        } else {
            Ordering::Less
        };
    }
    (x * x).cmp(q)
}

/// Rational upper bound on `sqrt(q)` for `q >= 0`.
pub fn sqrt_upper(q: &Rational) -> Rational {
    let prod = q.numer() * q.denom();
    let root = prod.sqrt();
    let ceil = if &root * &root == prod {
        root
    } else {
        root + 1
    };
    Rational::new(ceil, q.denom().clone())
}

/// `floor(sqrt(q))` for `q >= 0`.
pub fn sqrt_floor(q: &Rational) -> BigInt {
    let prod = q.numer() * q.denom();
    prod.sqrt() / q.denom()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn floor_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// A rational extended by `+∞`, the codomain of every slope function.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    PosInfinity,
}

impl ExtendedRational {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::PosInfinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(x) => Some(x),
            ExtendedRational::PosInfinity => None,
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(x: Rational) -> Self {
        ExtendedRational::Finite(x)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(x) => write!(f, "{x}"),
            ExtendedRational::PosInfinity => f.write_str("+inf"),
        }
    }
}
