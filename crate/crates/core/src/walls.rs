//! Numerical tilt walls.
//!
//! A numerical wall for `v` is the locus where `nu(w) = nu(v)` for some
//! lattice class `w`. For non-proportional classes the locus is a semicircle
//! centred on the beta-axis or a vertical line. Walls for a fixed `v` with
//! `ch0(v) != 0` are nested, and each one meets the hyperbola
//! `Im Z(v) = 0` at its top.
//!
//! # Search conditions
//!
//! A candidate `{w, v - w}` is reported when its locus is a circle meeting the
//! search region, both members satisfy Bogomolov (`Delta >= 0`), the pair is
//! admissible at the top of the circle (`0 < ch1^b(w) < ch1^b(v)`), and the
//! BMT form of `v` is non-negative at that top. The last condition removes
//! walls lying strictly inside the BMT zero circle of `v`, where no
//! tilt-semistable object of class `v` exists.
//!
//! # Finiteness
//!
//! Write `v = (R, C, D, E)`, `Delta = Delta(v)`. If `Delta <= 0` there are no
//! walls: Bogomolov for both members forces `C' >= (|r| + |R - r|) rho` at the
//! top, hence `Delta >= 0`, with equality only for proportional classes.
//!
//! For `R != 0` let `mu = C/R`, `t0^2 = Delta/R^2` and `E_mu = ch3^mu(v)`.
//! The admissible circles have centre `s = mu - sign(R) t` with `t > t0` and
//! `rho^2 = t^2 - t0^2`. At the top, `Q(v) = 2t (Delta t - 3|R| E_mu)`, so BMT
//! holds iff `t >= t_B = 3|R| E_mu / Delta`. When `t_B > t0` the radius is
//! bounded below by `rho_min^2 = t_B^2 - t0^2`, and Bogomolov on both members
//! gives `k = |r| + |R - r| <= |R| t / rho <= |R| t_B / rho_min`. For each rank:
//! - if `k > |R|`, `t^2 <= k^2 t0^2 / (k^2 - R^2)`;
//! - if `k = |R|`, the integer `R c - r C` is non-zero and at most
//!   `|R| (t - rho) max(|r|, |R - r|)` in absolute value, so
//!   `t <= |R| max(|r|, |R - r|) t0^2`.
//!
//! The degree then lies in `(s r, s r + |R| t)` and `d` follows from the centre.
//!
//! For `R = 0` all walls are concentric about `s0 = D/C` (and `C <= 0` leaves
//! none). With `E' = ch3^{s0}(v)`, BMT reads `rho^2 >= 6 E'/C` and Bogomolov
//! gives `2 |r| rho <= C`.
//!
//! When `t_B <= t0` (or `E' <= 0`) the conditions above do not bound the search
//! and [`enumerate_tilt_walls`] returns [`Error::UnboundedSearch`]; use
//! [`brute_force_walls`] with explicit bounds instead.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chern::{ChernCharacter, TruncatedCharacter};
use crate::error::{Error, ParseError};
use crate::rational::{
    ceil_int, cmp_sqrt, floor_int, int, parse_rational, sqrt_floor, sqrt_upper,
    Rational,
};
use crate::stability::{bmt_form, wall_admissible, TiltPoint};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WallLocus {
    Circle { center: Rational, radius_sq: Rational },
    VerticalLine { beta0: Rational },
    Everywhere,
    Empty,
}

impl fmt::Display for WallLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallLocus::Circle { center, radius_sq } => {
                write!(f, "(beta - ({center}))^2 + alpha^2 = {radius_sq}")
            }
            WallLocus::VerticalLine { beta0 } => write!(f, "beta = {beta0}"),
            WallLocus::Everywhere => f.write_str("everywhere"),
            WallLocus::Empty => f.write_str("empty"),
        }
    }
}

/// Locus of `nu(v) = nu(w)`, computed from the truncations only.
pub fn tilt_wall_locus(v: &ChernCharacter, w: &ChernCharacter) -> WallLocus {
    wall_locus_truncated(&v.truncate(), &w.truncate())
}

pub fn wall_locus_truncated(v: &TruncatedCharacter, w: &TruncatedCharacter) -> WallLocus {
    let k1 = &v.r * &w.c - &w.r * &v.c;
    let k2 = &v.r * &w.d - &w.r * &v.d;
    let k3 = &v.c * &w.d - &w.c * &v.d;
    if !k1.is_zero() {
        let center = &k2 / &k1;
        let radius_sq = &center * &center - int(2) * &k3 / &k1;
        if radius_sq.is_positive() {
            WallLocus::Circle { center, radius_sq }
        } else {
            WallLocus::Empty
        }
    } else if !k2.is_zero() {
        WallLocus::VerticalLine { beta0: k3 / k2 }
    } else if k3.is_zero() {
        WallLocus::Everywhere
    } else {
        WallLocus::Empty
    }
}

pub fn wall_top(locus: &WallLocus) -> Result<TiltPoint, Error> {
    match locus {
        WallLocus::Circle { center, radius_sq } => TiltPoint::new(center.clone(), radius_sq.clone()),
        _ => Err(Error::NotACircle),
    }
}

/// `alpha^2` on the hyperbola `Im Z(v) = 0` over `beta`, or `None` where the
/// hyperbola has no point with `alpha^2 > 0`.
pub fn hyperbola_alpha_sq(v: &ChernCharacter, beta: &Rational) -> Result<Option<Rational>, Error> {
    if v.r.is_zero() {
        let beta0 = if v.c.is_zero() {
            "undefined".to_string()
        } else {
            (&v.d / &v.c).to_string()
        };
        return Err(Error::RankZeroHyperbola(beta0));
    }
    let tw = v.twist(beta);
    let alpha_sq = int(2) * tw.d / &v.r;
    Ok(alpha_sq.is_positive().then_some(alpha_sq))
}

pub fn on_hyperbola(v: &ChernCharacter, p: &TiltPoint) -> bool {
    let tw = v.twist(p.beta());
    tw.d == p.alpha_sq() * &tw.r / int(2)
}

/// The hyperbola `Im Z(v) = 0` as a drawable object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolaLocus {
    class: ChernCharacter,
}

impl HyperbolaLocus {
    pub fn new(v: &ChernCharacter) -> Result<Self, Error> {
        hyperbola_alpha_sq(v, &int(0))?;
        Ok(Self { class: v.clone() })
    }

    pub fn class(&self) -> &ChernCharacter {
        &self.class
    }

    /// `(beta, alpha^2)` on the branch at rational parameters `beta`.
    pub fn alpha_sq(&self, beta: &Rational) -> Option<Rational> {
        hyperbola_alpha_sq(&self.class, beta).ok().flatten()
    }

    /// `(mu, Delta / r^2)` where the hyperbola reads `(beta - mu)^2 - alpha^2 = Delta / r^2`.
    pub fn center_and_offset_sq(&self) -> (Rational, Rational) {
        let v = &self.class;
        let mu = &v.c / &v.r;
        (mu, v.discriminant() / (&v.r * &v.r))
    }
}

/// Closed search window `beta_min <= beta < beta_max`, `0 < alpha^2 <= alpha_sq_max`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    pub beta_min: Rational,
    pub beta_max: Rational,
    pub alpha_sq_max: Rational,
}

impl Region {
    pub fn new(beta_min: Rational, beta_max: Rational, alpha_sq_max: Rational) -> Result<Self, Error> {
        let region = Self {
            beta_min,
            beta_max,
            alpha_sq_max,
        };
        if region.is_empty() {
            return Err(Error::InvalidRegion(format!(
                "need beta_min < beta_max and alpha2_max > 0, got [{}, {}) x (0, {}]",
                region.beta_min, region.beta_max, region.alpha_sq_max
            )));
        }
        Ok(region)
    }

    /// `beta in [-12, 0)`, `alpha^2 <= 64`.
    pub fn default_window() -> Self {
        Self {
            beta_min: int(-12),
            beta_max: int(0),
            alpha_sq_max: int(64),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.beta_min >= self.beta_max || !self.alpha_sq_max.is_positive()
    }

    /// Reflection `beta -> -beta`.
    pub fn mirrored(&self) -> Self {
        Self {
            beta_min: -&self.beta_max,
            beta_max: -&self.beta_min,
            alpha_sq_max: self.alpha_sq_max.clone(),
        }
    }

    /// Whether the upper semicircle `(beta - center)^2 + alpha^2 = radius_sq`
    /// has a point in the region.
    pub fn meets_circle(&self, center: &Rational, radius_sq: &Rational) -> bool {
        if self.is_empty() || !radius_sq.is_positive() {
            return false;
        }
        // alpha^2 <= A cuts the arc to |beta - center| >= m, m^2 = rho^2 - A.
        let m_sq = if radius_sq > &self.alpha_sq_max {
            radius_sq - &self.alpha_sq_max
        } else {
            Rational::zero()
        };
        let left = cmp_sqrt(&(center - &self.beta_max), radius_sq) == Ordering::Less
            && cmp_sqrt(&(center - &self.beta_min), &m_sq) != Ordering::Less;
        let right = cmp_sqrt(&(&self.beta_max - center), &m_sq) == Ordering::Greater
            && cmp_sqrt(&(&self.beta_min - center), radius_sq) == Ordering::Less;
        left || right
    }
}

/// Containment relation between two circles centred on the beta-axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nesting {
    Equal,
    /// The first circle lies inside the second.
    Inside,
    /// The first circle contains the second.
    Contains,
    Disjoint,
    Intersecting,
}

fn encloses(outer_sq: &Rational, inner_sq: &Rational, dist_sq: &Rational) -> bool {
    // rho_out - rho_in >= dist
    if outer_sq < inner_sq {
        return false;
    }
    let base = outer_sq + inner_sq - dist_sq;
    !base.is_negative() && &base * &base >= int(4) * outer_sq * inner_sq
}

pub fn nested(a: &WallLocus, b: &WallLocus) -> Result<Nesting, Error> {
    let (
        WallLocus::Circle {
            center: ca,
            radius_sq: ra,
        },
        WallLocus::Circle {
            center: cb,
            radius_sq: rb,
        },
    ) = (a, b)
    else {
        return Err(Error::NotACircle);
    };
    if ca == cb && ra == rb {
        return Ok(Nesting::Equal);
    }
    let diff = ca - cb;
    let dist_sq = &diff * &diff;
    if encloses(rb, ra, &dist_sq) {
        return Ok(Nesting::Inside);
    }
    if encloses(ra, rb, &dist_sq) {
        return Ok(Nesting::Contains);
    }
    // dist >= rho_a + rho_b
    let base = &dist_sq - ra - rb;
    if !base.is_negative() && &base * &base >= int(4) * ra * rb {
        return Ok(Nesting::Disjoint);
    }
    Ok(Nesting::Intersecting)
}

/// A numerical wall `{sub, quotient}` for a fixed class. Only `ch<=2` of the
/// members is determined; `ch3` is pinned separately with [`WallCandidate::pin_ch3`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WallCandidate {
    total: ChernCharacter,
    sub: TruncatedCharacter,
    quotient: TruncatedCharacter,
    center: Rational,
    radius_sq: Rational,
}

impl WallCandidate {
    /// Canonical orientation: the member of larger rank is `sub`; equal ranks
    /// put the lexicographically smaller member first.
    fn canonical(
        total: &ChernCharacter,
        w: TruncatedCharacter,
        center: Rational,
        radius_sq: Rational,
    ) -> Self {
        let q = &total.truncate() - &w;
        let (sub, quotient) = match w.r.cmp(&q.r) {
            Ordering::Greater => (w, q),
            Ordering::Less => (q, w),
            Ordering::Equal if w <= q => (w, q),
            Ordering::Equal => (q, w),
        };
        Self {
            total: total.clone(),
            sub,
            quotient,
            center,
            radius_sq,
        }
    }

    pub fn total(&self) -> &ChernCharacter {
        &self.total
    }

    pub fn sub(&self) -> &TruncatedCharacter {
        &self.sub
    }

    pub fn quotient(&self) -> &TruncatedCharacter {
        &self.quotient
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn radius_sq(&self) -> &Rational {
        &self.radius_sq
    }

    pub fn locus(&self) -> WallLocus {
        WallLocus::Circle {
            center: self.center.clone(),
            radius_sq: self.radius_sq.clone(),
        }
    }

    pub fn top(&self) -> TiltPoint {
        TiltPoint::new(self.center.clone(), self.radius_sq.clone())
            .expect("wall radius is positive")
    }

    /// `ch1^beta` of `sub` and of the total at the top of the wall.
    pub fn top_imaginary_parts(&self) -> (Rational, Rational) {
        let b = &self.center;
        (
            &self.sub.c - b * &self.sub.r,
            &self.total.c - b * &self.total.r,
        )
    }

    pub fn members(&self) -> [&TruncatedCharacter; 2] {
        [&self.sub, &self.quotient]
    }

    pub fn positive_rank_members(&self) -> Vec<&TruncatedCharacter> {
        self.members()
            .into_iter()
            .filter(|m| m.r.is_positive())
            .collect()
    }

    /// Full characters of `(sub, quotient)` once `ch3(sub) = e` is fixed.
    pub fn pin_ch3(&self, e: Rational) -> (ChernCharacter, ChernCharacter) {
        let qe = &self.total.e - &e;
        (self.sub.with_ch3(e), self.quotient.with_ch3(qe))
    }

    pub fn to_record(&self) -> WallRecord {
        let (im_sub, im_total) = self.top_imaginary_parts();
        WallRecord {
            center: self.center.to_string(),
            radius_sq: self.radius_sq.to_string(),
            total: self.total.to_string(),
            sub: self.sub.to_string(),
            quotient: self.quotient.to_string(),
            admissible_top: TopRecord {
                beta: self.center.to_string(),
                alpha2: self.radius_sq.to_string(),
                im_sub: im_sub.to_string(),
                im_total: im_total.to_string(),
            },
            positive_rank: self
                .positive_rank_members()
                .into_iter()
                .map(|m| m.to_string())
                .collect(),
        }
    }

    /// Rebuilds a candidate from its record, checking that the stored locus
    /// agrees with the members.
    pub fn from_record(record: &WallRecord) -> Result<Self, ParseError> {
        let invalid = |message: String| ParseError::Invalid {
            position: 1,
            message,
        };
        let total: ChernCharacter = record.total.parse()?;
        let sub: TruncatedCharacter = record.sub.parse()?;
        let quotient: TruncatedCharacter = record.quotient.parse()?;
        let center = parse_rational(&record.center)
            .map_err(|source| ParseError::Rational { position: 1, source })?;
        let radius_sq = parse_rational(&record.radius_sq)
            .map_err(|source| ParseError::Rational { position: 2, source })?;
        if &sub - &(&total.truncate() - &quotient) != TruncatedCharacter::new(int(0), int(0), int(0)) {
            return Err(invalid("sub + quotient differs from total".into()));
        }
        let locus = wall_locus_truncated(&total.truncate(), &sub);
        if locus
            != (WallLocus::Circle {
                center: center.clone(),
                radius_sq: radius_sq.clone(),
            })
        {
            return Err(invalid(format!("members do not span the stated circle ({locus})")));
        }
        Ok(Self::canonical(&total, sub, center, radius_sq))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopRecord {
    pub beta: String,
    pub alpha2: String,
    pub im_sub: String,
    pub im_total: String,
}

/// Serialized wall, all rationals as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallRecord {
    pub center: String,
    pub radius_sq: String,
    pub total: String,
    pub sub: String,
    pub quotient: String,
    pub admissible_top: TopRecord,
    pub positive_rank: Vec<String>,
}

/// Box for [`brute_force_walls`]: `|r| <= r_max`, `|c| <= c_max`, `|2d| <= two_d_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBounds {
    pub r_max: u32,
    pub c_max: u32,
    pub two_d_max: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            r_max: 5,
            c_max: 20,
            two_d_max: 100,
        }
    }
}

impl SearchBounds {
    pub fn contains(&self, w: &TruncatedCharacter) -> bool {
        let within = |x: &Rational, m: u32| x.abs() <= int(i64::from(m));
        within(&w.r, self.r_max) && within(&w.c, self.c_max) && within(&(int(2) * &w.d), self.two_d_max)
    }
}

fn require_lattice(v: &ChernCharacter) -> Result<(), Error> {
    if v.is_lattice_truncation() {
        Ok(())
    } else {
        Err(Error::NonLatticeClass(v.to_string()))
    }
}

/// Applies every search condition to the pair `{w, v - w}`.
pub fn check_candidate(
    v: &ChernCharacter,
    w: &TruncatedCharacter,
    region: &Region,
) -> Option<WallCandidate> {
    let vt = v.truncate();
    let WallLocus::Circle { center, radius_sq } = wall_locus_truncated(&vt, w) else {
        return None;
    };
    if !region.meets_circle(&center, &radius_sq) {
        return None;
    }
    let q = &vt - w;
    if w.discriminant().is_negative() || q.discriminant().is_negative() {
        return None;
    }
    let top = TiltPoint::new(center.clone(), radius_sq.clone()).ok()?;
    if !wall_admissible(&w.with_ch3(int(0)), v, &top) {
        return None;
    }
    if bmt_form(v, &top).is_negative() {
        return None;
    }
    Some(WallCandidate::canonical(v, w.clone(), center, radius_sq))
}

fn canonical_order(found: impl IntoIterator<Item = WallCandidate>) -> Vec<WallCandidate> {
    let unique: BTreeMap<TruncatedCharacter, WallCandidate> =
        found.into_iter().map(|w| (w.sub.clone(), w)).collect();
    let mut walls: Vec<WallCandidate> = unique.into_values().collect();
    walls.sort_by(|a, b| b.radius_sq.cmp(&a.radius_sq).then_with(|| a.sub.cmp(&b.sub)));
    walls
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("search range fits in i64")
}

fn big(x: &Rational) -> BigInt {
    x.to_integer()
}

/// Scans every lattice `w` in the box. Applies the search conditions directly,
/// with no derived bounds.
pub fn brute_force_walls(
    v: &ChernCharacter,
    region: &Region,
    bounds: SearchBounds,
) -> Result<Vec<WallCandidate>, Error> {
    require_lattice(v)?;
    if region.is_empty() {
        return Ok(Vec::new());
    }
    let r_max = i64::from(bounds.r_max);
    let c_max = i64::from(bounds.c_max);
    let d_max = i64::from(bounds.two_d_max);
    let found: Vec<WallCandidate> = (-r_max..=r_max)
        .into_par_iter()
        .flat_map_iter(|r| {
            let mut out = Vec::new();
            for c in -c_max..=c_max {
                for two_d in -d_max..=d_max {
                    if (two_d - c).rem_euclid(2) != 0 {
                        continue;
                    }
                    let w = TruncatedCharacter::new(
                        int(r),
                        int(c),
                        Rational::new(two_d.into(), 2.into()),
                    );
                    out.extend(check_candidate(v, &w, region));
                }
            }
            out
        })
        .collect();
    Ok(canonical_order(found))
}

/// Search ranges for one value of the rank of `w`.
struct RankSlice {
    r: i64,
    /// Range of wall centres.
    s_lo: Rational,
    s_hi: Rational,
    c_lo: i64,
    c_hi: i64,
}

/// The finite search space derived in the module documentation.
struct SearchPlan {
    slices: Vec<RankSlice>,
}

fn unbounded(v: &ChernCharacter, reason: &str) -> Error {
    Error::UnboundedSearch {
        class: v.to_string(),
        reason: reason.to_string(),
    }
}

fn plan_nonzero_rank(v: &ChernCharacter) -> Result<SearchPlan, Error> {
    let rr = &v.r;
    let abs_r = rr.abs();
    let delta = v.discriminant();
    let mu = &v.c / rr;
    let sigma = if rr.is_positive() { int(1) } else { int(-1) };
    let t0_sq = &delta / (rr * rr);
    let e_mu = v.twist(&mu).e;
    if !e_mu.is_positive() {
        return Err(unbounded(v, "ch3 at the hyperbola centre is not positive, so BMT never binds"));
    }
    let t_b = int(3) * &abs_r * &e_mu / &delta;
    let t_b_sq = &t_b * &t_b;
    if t_b_sq <= t0_sq {
        return Err(unbounded(v, "the BMT circle does not bound the wall radii away from zero"));
    }
    let rho_min_sq = &t_b_sq - &t0_sq;
    let k_max = to_i64(&sqrt_floor(&(&abs_r * &abs_r * &t_b_sq / &rho_min_sq)));
    let big_r = to_i64(&big(rr));
    let abs_big_r = big_r.abs();
    let mut slices = Vec::new();
    for r in -k_max..=k_max + abs_big_r {
        let k = r.abs() + (big_r - r).abs();
        if k > k_max {
            continue;
        }
        let t_hi = if k > abs_big_r {
            let k2 = int(k * k);
            sqrt_upper(&(&k2 * &t0_sq / (&k2 - &abs_r * &abs_r)))
        } else {
            &abs_r * int(r.abs().max((big_r - r).abs())) * &t0_sq
        };
        if t_hi < t_b {
            continue;
        }
        let s_at = |t: &Rational| &mu - &sigma * t;
        let (s_a, s_b) = (s_at(&t_b), s_at(&t_hi));
        let rq = int(r);
        let c_ends = [
            &s_a * &rq,
            &s_b * &rq,
            &s_a * &rq + &abs_r * &t_b,
            &s_b * &rq + &abs_r * &t_hi,
        ];
        let c_lo = to_i64(&floor_int(c_ends.iter().min().unwrap()));
        let c_hi = to_i64(&ceil_int(c_ends.iter().max().unwrap()));
        let (s_lo, s_hi) = if s_a <= s_b { (s_a, s_b) } else { (s_b, s_a) };
        slices.push(RankSlice {
            r,
            s_lo,
            s_hi,
            c_lo,
            c_hi,
        });
    }
    Ok(SearchPlan { slices })
}

fn plan_rank_zero(v: &ChernCharacter) -> Result<SearchPlan, Error> {
    let cc = &v.c;
    if !cc.is_positive() {
        return Ok(SearchPlan { slices: Vec::new() });
    }
    let s0 = &v.d / cc;
    let e0 = v.twist(&s0).e;
    if !e0.is_positive() {
        return Err(unbounded(v, "ch3 at the concentric centre is not positive, so BMT never binds"));
    }
    let rho_min_sq = int(6) * &e0 / cc;
    let r_max = to_i64(&sqrt_floor(&(cc * cc / (int(4) * &rho_min_sq))));
    let mut slices = Vec::new();
    for r in (-r_max..=r_max).filter(|&r| r != 0) {
        let rq = int(r);
        let c_ends = [&s0 * &rq, &s0 * &rq + cc];
        slices.push(RankSlice {
            r,
            s_lo: s0.clone(),
            s_hi: s0.clone(),
            c_lo: to_i64(&floor_int(c_ends.iter().min().unwrap())),
            c_hi: to_i64(&ceil_int(c_ends.iter().max().unwrap())),
        });
    }
    Ok(SearchPlan { slices })
}

/// Range of `2d` for fixed `(r, c)`.
fn two_d_range(v: &ChernCharacter, slice: &RankSlice, c: i64) -> Option<(i64, i64)> {
    let r = int(slice.r);
    let c = int(c);
    let ends: Vec<Rational> = if v.r.is_zero() {
        // 2d = r rho^2 + 2 s0 c - s0^2 r with rho^2 in [rho_min^2, C^2 / 4r^2]
        let s0 = &slice.s_lo;
        let e0 = v.twist(s0).e;
        let lo_sq = int(6) * e0 / &v.c;
        let hi_sq = &v.c * &v.c / (int(4) * &r * &r);
        if hi_sq < lo_sq {
            return None;
        }
        let base = int(2) * s0 * &c - s0 * s0 * &r;
        vec![&r * lo_sq + &base, &r * hi_sq + &base]
    } else {
        let k1 = &v.r * &c - &r * &v.c;
        if k1.is_zero() {
            return None;
        }
        [&slice.s_lo, &slice.s_hi]
            .into_iter()
            .map(|s| int(2) * (&k1 * s + &r * &v.d) / &v.r)
            .collect()
    };
    let lo = to_i64(&ceil_int(ends.iter().min().unwrap()));
    let hi = to_i64(&floor_int(ends.iter().max().unwrap()));
    (lo <= hi).then_some((lo, hi))
}

/// Every numerical wall for `v` meeting `region`, in canonical order: radius
/// descending, then `sub` ascending.
///
/// Uses the finite search space derived in the module documentation and
/// returns [`Error::UnboundedSearch`] when that derivation does not apply.
pub fn enumerate_tilt_walls(v: &ChernCharacter, region: &Region) -> Result<Vec<WallCandidate>, Error> {
    require_lattice(v)?;
    if region.is_empty() || !v.discriminant().is_positive() {
        return Ok(Vec::new());
    }
    let plan = if v.r.is_zero() {
        plan_rank_zero(v)?
    } else {
        plan_nonzero_rank(v)?
    };
    let found: Vec<WallCandidate> = plan
        .slices
        .par_iter()
        .flat_map_iter(|slice| {
            let mut out = Vec::new();
            for c in slice.c_lo..=slice.c_hi {
                let Some((lo, hi)) = two_d_range(v, slice, c) else {
                    continue;
                };
                for two_d in lo..=hi {
                    if (two_d - c).rem_euclid(2) != 0 {
                        continue;
                    }
                    let w = TruncatedCharacter::new(
                        int(slice.r),
                        int(c),
                        Rational::new(two_d.into(), 2.into()),
                    );
                    out.extend(check_candidate(v, &w, region));
                }
            }
            out
        })
        .collect();
    Ok(canonical_order(found))
}

/// Distinct circles among `walls`, in order of first appearance.
pub fn distinct_loci(walls: &[WallCandidate]) -> Vec<WallLocus> {
    let mut out: Vec<WallLocus> = Vec::new();
    for w in walls {
        let locus = w.locus();
        if !out.contains(&locus) {
            out.push(locus);
        }
    }
    out
}
