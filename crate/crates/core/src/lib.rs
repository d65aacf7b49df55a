//! Exact wall-and-chamber computations for tilt and Bridgeland stability on
//! projective 3-space.
//!
//! Everything is computed over arbitrary-precision rationals. The tilt
//! half-plane is parameterised by `(beta, alpha^2)`, so slope equalities and
//! wall memberships are exact rational identities.
//!
//! Module map:
//! - [`chern`]: Chern characters, twisting, resolutions, Euler pairing.
//! - [`stability`]: central charges, slopes, Bogomolov and BMT forms.
//! - [`walls`]: numerical wall loci and wall enumeration with a brute-force oracle.
//! - [`genus4`]: the worked example `v = (1, 0, -6, 15)`.
//! - [`svg`] and [`cli`]: wall diagrams and the `p3walls` command line.

pub mod chern;
pub mod cli;
pub mod error;
pub mod genus4;
pub mod rational;
pub mod stability;
pub mod svg;
pub mod walls;

pub use chern::ChernCharacter;
pub use error::{Error, ParseError};
pub use rational::{ExtendedRational, Rational};
pub use stability::{BridgelandParams, ChargeValue, TiltPoint};
pub use walls::{Region, WallCandidate, WallLocus};
