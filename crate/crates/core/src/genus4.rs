//! The canonical genus-4 class `v = (1, 0, -6, 15)`: the ideal sheaf of a
//! (2,3) complete intersection in P^3.
//!
//! Walls, Jordan-Hölder factor characters and `ch3` refinements are computed.
//! Ext dimensions and moduli dimensions are stored, with each stored number
//! checked against the arithmetic that produces it (Euler pairing, projective
//! bundle dimension counts).
//!
//! Notation: `A = I_L(-1)` for a line `L`, `B` the class of the pushforward
//! of the derived dual of `I_{Z_2}` from a plane, twisted by `-5`.

use std::fmt::Write as _;

use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chern::{
    curve_ideal_ch, euler_pairing, from_resolution, line_bundle_ch, ChernCharacter, ResolutionTerm,
    TruncatedCharacter,
};
use crate::error::Error;
use crate::rational::{int, is_integer, rat, Rational};
use crate::walls::{distinct_loci, enumerate_tilt_walls, Region, WallCandidate, WallLocus};

pub fn canonical_class() -> ChernCharacter {
    from_resolution(&[
        ResolutionTerm::plus(-2),
        ResolutionTerm::plus(-3),
        ResolutionTerm::minus(-5),
    ])
    .expect("resolution is nonempty")
}

/// `A = I_L(-1)`.
pub fn class_a() -> ChernCharacter {
    curve_ideal_ch(1, 0).expect("degree 1").twist(&int(1))
}

/// `B = v - A`.
pub fn class_b() -> ChernCharacter {
    canonical_class() - class_a()
}

/// `(center, radius^2)` of the four walls, innermost first.
pub fn expected_walls() -> [WallLocus; 4] {
    let circle = |c: Rational, r: Rational| WallLocus::Circle {
        center: c,
        radius_sq: r,
    };
    [
        circle(int(-4), int(4)),
        circle(rat(-9, 2), rat(33, 4)),
        circle(rat(-11, 2), rat(73, 4)),
        circle(rat(-13, 2), rat(121, 4)),
    ]
}

/// The walls of `v` in `[-12, 0) x (0, 64]`, innermost first. Fails with
/// [`Error::WallMismatch`] if the search does not return exactly the four
/// expected circles with one pair each.
pub fn known_walls() -> Result<Vec<WallCandidate>, Error> {
    let mut walls = enumerate_tilt_walls(&canonical_class(), &Region::default_window())?;
    walls.reverse();
    let loci = distinct_loci(&walls);
    if walls.len() != 4 || loci != expected_walls() {
        let found: Vec<String> = loci.iter().map(|l| l.to_string()).collect();
        return Err(Error::WallMismatch(format!(
            "{} candidates on [{}]",
            walls.len(),
            found.join("; ")
        )));
    }
    Ok(walls)
}

/// Full characters of the factors on walls 1 and 2, from resolutions:
/// `O(-2)` and its quotient, `I_{C_2}(-1)` for a conic and `O_P(-4)`.
pub fn wall_factors() -> [(ChernCharacter, ChernCharacter); 2] {
    let v = canonical_class();
    let o_minus_2 = line_bundle_ch(&int(-2));
    let wall1 = (o_minus_2.clone(), &v - &o_minus_2);
    let conic = curve_ideal_ch(2, 0).expect("degree 2").twist(&int(1));
    let plane = from_resolution(&[ResolutionTerm::plus(-4), ResolutionTerm::minus(-5)])
        .expect("resolution is nonempty");
    [wall1, (conic, plane)]
}

/// Length of the zero-dimensional part for a planar factor of class
/// `(0, 1, -i - 1/2, e)`: `1/6 + i(i+1)/2 - e`.
pub fn jh_length_planar(i: i64, e: &Rational) -> Rational {
    rat(1, 6) + int(i * (i + 1)) / int(2) - e
}

/// Cokernel length for a rank-one factor of class `(1, -1, 1/2 - D, e)`,
/// `D in {1, 2}`: `3D - e - 7/6`.
pub fn jh_length_pair(degree: i64, e: &Rational) -> Result<Rational, Error> {
    if !(1..=2).contains(&degree) {
        return Err(Error::OutOfRange {
            what: "curve degree D (expected 1 or 2)",
            value: degree.to_string(),
        });
    }
    Ok(int(3 * degree) - e - rat(7, 6))
}

fn is_length(x: &Rational) -> bool {
    is_integer(x) && !x.is_negative()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    /// `ch3` of the rank-one factor.
    pub e: Rational,
    pub sub: ChernCharacter,
    pub quotient: ChernCharacter,
    /// Cokernel length of the rank-one factor.
    pub l: Rational,
    /// Length of the planar factor's zero-dimensional part.
    pub l_prime: Rational,
}

/// All `ch3` values on wall 3 for which both Jordan-Hölder length constraints
/// are non-negative integers, in increasing order.
pub fn wall3_refinements() -> Vec<Refinement> {
    let v = canonical_class();
    let sub = TruncatedCharacter::from_ratios([(1, 1), (-1, 1), (-1, 2)]);
    let quotient = &v.truncate() - &sub;
    // l = 11/6 - e >= 0 and l' = 1/6 + e >= 0 leave finitely many sixths.
    let mut out = Vec::new();
    for six_e in -1..=11 {
        let e = rat(six_e, 6);
        let l = jh_length_pair(1, &e).expect("D = 1");
        let qe = &v.e - &e;
        let l_prime = jh_length_planar(5, &qe);
        if is_length(&l) && is_length(&l_prime) {
            out.push(Refinement {
                sub: sub.with_ch3(e.clone()),
                quotient: quotient.with_ch3(qe),
                e,
                l,
                l_prime,
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stratum {
    /// The line through `Z_2` misses `L`.
    Disjoint,
    /// The line through `Z_2` meets `L` but differs from it.
    MeetsNotSpanned,
    /// The line through `Z_2` is `L`.
    Spanned,
}

impl Stratum {
    pub const ALL: [Stratum; 3] = [Stratum::Disjoint, Stratum::MeetsNotSpanned, Stratum::Spanned];

    pub fn name(self) -> &'static str {
        match self {
            Stratum::Disjoint => "disjoint",
            Stratum::MeetsNotSpanned => "meets-not-spanned",
            Stratum::Spanned => "spanned",
        }
    }

    pub fn ext1_ab(self) -> i64 {
        match self {
            Stratum::Disjoint => 0,
            Stratum::MeetsNotSpanned => 1,
            Stratum::Spanned => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    A,
    B,
}

impl Label {
    pub fn class(self) -> ChernCharacter {
        match self {
            Label::A => class_a(),
            Label::B => class_b(),
        }
    }
}

/// One stored Ext dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Dim {
    Recorded(i64),
    /// A vanishing or normalisation assumed rather than computed.
    Assumed(i64),
    Unknown,
}

impl Dim {
    pub fn value(self) -> Option<i64> {
        match self {
            Dim::Recorded(n) | Dim::Assumed(n) => Some(n),
            Dim::Unknown => None,
        }
    }

    fn describe(self) -> String {
        match self {
            Dim::Recorded(n) => n.to_string(),
            Dim::Assumed(n) => format!("{n} (assumed)"),
            Dim::Unknown => "?".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtProfile {
    pub first: Label,
    pub second: Label,
    /// `hom, ext1, ext2, ext3`.
    pub dims: [Dim; 4],
}

impl ExtProfile {
    pub fn pair_name(&self) -> String {
        format!("{:?},{:?}", self.first, self.second)
    }

    /// `hom - ext1 + ext2 - ext3` when every entry is known.
    pub fn alternating_sum(&self) -> Option<i64> {
        let [h, e1, e2, e3] = self.dims.map(Dim::value);
        Some(h? - e1? + e2? - e3?)
    }
}

/// Stored Ext dimensions between `A` and `B` on a stratum.
pub fn ext_table(stratum: Stratum) -> Vec<ExtProfile> {
    use Dim::{Assumed, Recorded, Unknown};
    let profile = |first, second, dims| ExtProfile {
        first,
        second,
        dims,
    };
    vec![
        profile(Label::A, Label::A, [Assumed(1), Recorded(4), Recorded(0), Assumed(0)]),
        profile(Label::B, Label::B, [Assumed(1), Recorded(7), Recorded(4), Assumed(0)]),
        profile(Label::B, Label::A, [Assumed(0), Recorded(18), Recorded(0), Assumed(0)]),
        profile(
            Label::A,
            Label::B,
            [Assumed(0), Recorded(stratum.ext1_ab()), Unknown, Unknown],
        ),
    ]
}

/// The assumptions behind [`ext_table`], as printed in the report.
pub fn ext_assumptions() -> Vec<&'static str> {
    vec![
        "hom(A,A) = hom(B,B) = 1 (stable objects are simple)",
        "hom(A,B) = hom(B,A) = 0 (distinct stable factors of equal phase)",
        "ext3(A,A) = ext3(B,B) = ext3(B,A) = 0",
        "ext2(A,B) and ext3(A,B) are not stored; only their difference is inferred",
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCheck {
    pub pair: String,
    pub stratum: Option<Stratum>,
    /// Alternating sum of stored dimensions, where all are known.
    pub table: Option<i64>,
    pub hrr: Rational,
    /// Relation implied when the table is incomplete.
    pub inferred: Option<String>,
    pub ok: bool,
}

/// Compares stored Ext dimensions with the Euler pairing. Pairs with unknown
/// entries yield the implied relation `ext2 - ext3 = ext1 - hom + chi`.
pub fn validate_ext_table() -> Vec<EulerCheck> {
    let mut out = Vec::new();
    for stratum in Stratum::ALL {
        for profile in ext_table(stratum) {
            let complete = profile.alternating_sum().is_some();
            if complete && stratum != Stratum::Disjoint {
                continue;
            }
            let hrr = euler_pairing(&profile.first.class(), &profile.second.class());
            let (table, inferred, ok) = match profile.alternating_sum() {
                Some(sum) => (Some(sum), None, int(sum) == hrr),
                None => {
                    let [h, e1, _, _] = profile.dims.map(Dim::value);
                    let ok = is_integer(&hrr);
                    let diff = match (h, e1) {
                        (Some(h), Some(e1)) => (int(e1 - h) + &hrr).to_string(),
                        _ => "?".into(),
                    };
                    (None, Some(format!("ext2 - ext3 = {diff}")), ok && h.is_some() && e1.is_some())
                }
            };
            out.push(EulerCheck {
                pair: profile.pair_name(),
                stratum: (!complete).then_some(stratum),
                table,
                hrr,
                inferred,
                ok,
            });
        }
    }
    out
}

/// Dimension of a `P^{linear - 1}`-bundle over a base of dimension `base`.
pub fn proj_bundle_dim(base: i64, linear: i64) -> Result<i64, Error> {
    if linear < 1 {
        return Err(Error::OutOfRange {
            what: "fiber vector space dimension",
            value: linear.to_string(),
        });
    }
    Ok(base + linear - 1)
}

/// Upper bound on `ext1(E,E)` for `E` an extension of `G` by `F`.
pub fn ext1_wall_bound(ff: i64, gg: i64, fg: i64, gf: i64) -> i64 {
    ff + gg + fg + gf - 1
}

/// `ext1(E,E) = 28 + dim ker(zeta)` on the new component.
pub fn singular_ext_dim(ker_zeta: i64) -> Result<i64, Error> {
    if !(0..=2).contains(&ker_zeta) {
        return Err(Error::OutOfRange {
            what: "dim ker(zeta) (expected 0, 1 or 2)",
            value: ker_zeta.to_string(),
        });
    }
    Ok(28 + ker_zeta)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub name: &'static str,
    pub value: i64,
    pub recorded: i64,
    pub derivation: String,
}

impl LedgerEntry {
    pub fn ok(&self) -> bool {
        self.value == self.recorded
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionLedger {
    pub entries: Vec<LedgerEntry>,
}

impl DimensionLedger {
    pub fn get(&self, name: &str) -> Option<i64> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.value)
    }

    pub fn mismatches(&self) -> Vec<&LedgerEntry> {
        self.entries.iter().filter(|e| !e.ok()).collect()
    }
}

/// Moduli and exceptional-locus dimensions, each recomputed from its parts.
pub fn exceptional_ledger() -> DimensionLedger {
    let pbd = |b, l| proj_bundle_dim(b, l).expect("positive fiber");
    let sing = |k| singular_ext_dim(k).expect("kernel in range");
    let mut entries = Vec::new();
    let mut add = |name, value, recorded, derivation: &str| {
        entries.push(LedgerEntry {
            name,
            value,
            recorded,
            derivation: derivation.to_string(),
        })
    };

    // Outside the last wall: extensions of O_Q(-3) by O(-2), Q a quadric.
    let m1 = pbd(9, 16);
    add("M1", m1, 24, "P^15-bundle over |O(2)| = P^9: 9 + 16 - 1");
    add("M_sigma-", m1, 24, "blow-up of M1, birational to it");
    let center = pbd(8 + 3, 1);
    add("blowup_center", center, 11, "conics (8) x planes (3), ext1(F,G) = 1: 11 + 1 - 1");
    let divisor = pbd(center, 13);
    add("exceptional_divisor_wall2", divisor, 23, "P^12-bundle over the centre: 11 + 13 - 1");
    add("divisor_codimension_check", m1 - divisor, 1, "24 - 23");
    add("ext1_bound_wall2", ext1_wall_bound(8, 3, 1, 13), 24, "8 + 3 + 1 + 13 - 1");

    let m_prime = pbd(4 + 7, 18);
    add("M_prime", m_prime, 28, "P^17-bundle over Gr(2,4) x Fl_2, base 4 + 7: 11 + 18 - 1");
    add("ext1_bound_wall3", ext1_wall_bound(4, 7, 2, 18), 30, "4 + 7 + 2 + 18 - 1");
    add("ext1_smooth", sing(0), 28, "28 + dim ker(zeta), ker = 0");
    add("ext1_singular_case1", sing(1), 29, "28 + 1");
    add("ext1_singular_case2", sing(2), 30, "28 + 2");
    add("ext1_E_A", 4 + 18 - 1, 21, "ext1(A,A) + ext1(B,A) - hom(A,A)");

    let ker1 = 18 - 4;
    add("ker_delta_meets", ker1, 14, "delta: C^18 -> C^4 surjective: 18 - 4");
    let ker2 = 18 - 4 * 2;
    add("ker_delta_spanned", ker2, 10, "delta: C^18 -> 4x2 matrices surjective: 18 - 8");
    let base_generic = 3 + 4 + 3;
    add("exceptional_base_generic", base_generic, 10, "plane 3 + two points 4 + line 3");
    let fiber_generic = pbd(0, ker1);
    add("exceptional_fiber_generic", fiber_generic, 13, "P(ker delta) = P^13");
    add("exceptional_divisor_wall3", pbd(base_generic, ker1), 23, "P^13-bundle over 10-dim base: 10 + 13");
    add("exceptional_divisor_codim", m1 - pbd(base_generic, ker1), 1, "24 - 23");

    let base_special = 3 + 4;
    add("cone_base", base_special, 7, "plane 3 + two points 4");
    let vertex = pbd(0, ker2);
    add("cone_vertex", vertex, 9, "P(ker delta) = P^9");
    let rank_one_affine = 2 + 4 - 1;
    add("rank_one_2x4_affine", rank_one_affine, 5, "2 + 4 - 1");
    let y = rank_one_affine - 1;
    add("cone_Y", y, 4, "projectivised rank-one 2x4 matrices in P^7");
    add("cone_fiber", vertex + y + 1, 14, "cone over Y with vertex P^9: 9 + 4 + 1");

    let u_image = 3 + 4;
    add("phi_image", u_image, 7, "Z_2 in L in P: plane 3 + two points 4");
    add("phi_exceptional", pbd(u_image, 2), 8, "P^1-bundle over the image: 7 + 2 - 1");
    add("U_minus_plus", pbd(base_generic, 1), 10, "P^0-bundle over the generic configuration");

    DimensionLedger { entries }
}

/// `ch(H^0) - ch(H^1)` for the quintic union a line: an ideal sheaf of degree
/// 6 and genus 6 minus a length-2 skyscraper.
pub fn quintic_union_line_check() -> (ChernCharacter, ChernCharacter, ChernCharacter) {
    let h0 = curve_ideal_ch(6, 6).expect("degree 6");
    let h1 = ChernCharacter::from_ints(0, 0, 0, 2);
    let diff = &h0 - &h1;
    (h0, h1, diff)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NarrativeItem {
    pub text: &'static str,
    /// `computed` when the statement is checked by this crate, otherwise `recorded`.
    pub tag: &'static str,
}

pub fn narrative() -> Vec<NarrativeItem> {
    let item = |text, tag| NarrativeItem { text, tag };
    vec![
        item("four numerical tilt walls for v on the left branch, nested, with tops on the hyperbola", "computed"),
        item("walls inside the BMT circle (beta + 15/4)^2 + alpha^2 = 33/16 carry no semistable objects", "computed"),
        item("wall 3 splits into three Bridgeland walls, ch3(A) in {-1/6, 5/6, 11/6}", "computed"),
        item("phi: M_sigma-(v) -> M_sigma0(v) is a small contraction of an 8-dimensional P^1-bundle", "recorded"),
        item("psi from the birational component to M_sigma0(v) is a divisorial contraction", "recorded"),
        item("M_sigma+(v) has two components meeting along a 23-dimensional divisor", "recorded"),
        item("M_sigma0(v) is not Q-factorial", "recorded"),
        item("sigma0, sigma-, sigma+, the flip spaces and the sheaves T_beta, F_beta carry no numerical data here", "recorded"),
    ]
}

fn wall_json(w: &WallCandidate, factors: Option<&(ChernCharacter, ChernCharacter)>) -> Value {
    let mut value = serde_json::to_value(w.to_record()).expect("record serializes");
    if let Some((f, g)) = factors {
        value["factors"] = json!({ "F": f.to_string(), "G": g.to_string() });
    }
    value
}

/// The whole scenario as a JSON document.
pub fn report_json() -> Result<Value, Error> {
    let v = canonical_class();
    let walls = known_walls()?;
    let factors = wall_factors();
    let (h0, h1, diff) = quintic_union_line_check();
    let wall_values: Vec<Value> = walls
        .iter()
        .enumerate()
        .map(|(i, w)| wall_json(w, factors.get(i)))
        .collect();
    let refinements: Vec<Value> = wall3_refinements()
        .iter()
        .map(|r| {
            json!({
                "e": r.e.to_string(),
                "sub": r.sub.to_string(),
                "quotient": r.quotient.to_string(),
                "l": r.l.to_string(),
                "l_prime": r.l_prime.to_string(),
                "sums_to_v": (&r.sub + &r.quotient) == v,
            })
        })
        .collect();
    let (a, b) = (class_a(), class_b());
    let euler: Vec<Value> = [("A,A", &a, &a), ("B,B", &b, &b), ("B,A", &b, &a), ("A,B", &a, &b)]
        .iter()
        .map(|(name, x, y)| json!({ "pair": name, "chi": euler_pairing(x, y).to_string() }))
        .collect();
    let mut tables = serde_json::Map::new();
    for stratum in Stratum::ALL {
        let rows: Vec<Value> = ext_table(stratum)
            .iter()
            .map(|p| {
                json!({
                    "pair": p.pair_name(),
                    "hom": p.dims[0].describe(),
                    "ext1": p.dims[1].describe(),
                    "ext2": p.dims[2].describe(),
                    "ext3": p.dims[3].describe(),
                })
            })
            .collect();
        tables.insert(stratum.name().to_string(), Value::Array(rows));
    }
    let checks: Vec<Value> = validate_ext_table()
        .iter()
        .map(|c| {
            json!({
                "pair": c.pair,
                "stratum": c.stratum.map(Stratum::name),
                "table": c.table,
                "hrr": c.hrr.to_string(),
                "inferred": c.inferred,
                "ok": c.ok,
            })
        })
        .collect();
    let ledger: Vec<Value> = exceptional_ledger()
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "value": e.value,
                "recorded": e.recorded,
                "derivation": e.derivation,
                "ok": e.ok(),
            })
        })
        .collect();
    let consistent = v == curve_ideal_ch(6, 4)?;
    Ok(json!({
        "schema": "p3walls/1",
        "class": {
            "ch": v.to_string(),
            "resolution": "O(-2) + O(-3) - O(-5)",
            "equals_curve_ideal_6_4": consistent,
            "A": a.to_string(),
            "B": b.to_string(),
            "quintic_union_line": {
                "h0": h0.to_string(),
                "h1": h1.to_string(),
                "difference": diff.to_string(),
                "ok": diff == v,
            },
        },
        "walls": wall_values,
        "refinements": refinements,
        "euler_table": euler,
        "ext_tables": {
            "strata": tables,
            "assumptions": ext_assumptions(),
            "validation": checks,
        },
        "ledger": ledger,
        "narrative": serde_json::to_value(narrative()).expect("narrative serializes"),
    }))
}

/// The same content as [`report_json`] in a fixed-layout text form.
pub fn report_text() -> Result<String, Error> {
    let v = canonical_class();
    let walls = known_walls()?;
    let factors = wall_factors();
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "class v = {v}");
    let _ = writeln!(w, "  resolution O(-2) + O(-3) - O(-5); equals curve ideal (6, 4): {}", v == curve_ideal_ch(6, 4)?);
    let (h0, h1, diff) = quintic_union_line_check();
    let _ = writeln!(w, "  quintic union line: {h0} - {h1} = {diff} ({})", ok_str(diff == v));
    let _ = writeln!(w, "\nwalls (innermost first)");
    for (i, wall) in walls.iter().enumerate() {
        let (im_sub, im_total) = wall.top_imaginary_parts();
        let _ = writeln!(
            w,
            "  {}. center {:>6}  radius^2 {:>6}  sub {:<10} quotient {:<10} top im {im_sub} < {im_total}",
            i + 1,
            wall.center().to_string(),
            wall.radius_sq().to_string(),
            wall.sub().to_string(),
            wall.quotient().to_string(),
        );
        if let Some((f, g)) = factors.get(i) {
            let _ = writeln!(w, "     factors F = {f}, G = {g}");
        }
    }
    let _ = writeln!(w, "\nwall 3 refinements");
    for r in wall3_refinements() {
        let _ = writeln!(w, "  e = {:>5}  l = {}  l' = {}  A = {}  B = {}", r.e.to_string(), r.l, r.l_prime, r.sub, r.quotient);
    }
    let (a, b) = (class_a(), class_b());
    let _ = writeln!(w, "\neuler pairing");
    for (name, x, y) in [("A,A", &a, &a), ("B,B", &b, &b), ("B,A", &b, &a), ("A,B", &a, &b)] {
        let _ = writeln!(w, "  chi({name}) = {}", euler_pairing(x, y));
    }
    let _ = writeln!(w, "\next tables (hom, ext1, ext2, ext3)");
    for stratum in Stratum::ALL {
        let _ = writeln!(w, "  [{}]", stratum.name());
        for p in ext_table(stratum) {
            let dims: Vec<String> = p.dims.iter().map(|d| d.describe()).collect();
            let _ = writeln!(w, "    {}: {}", p.pair_name(), dims.join(", "));
        }
    }
    let _ = writeln!(w, "  assumptions:");
    for a in ext_assumptions() {
        let _ = writeln!(w, "    - {a}");
    }
    let _ = writeln!(w, "  validation:");
    for c in validate_ext_table() {
        let stratum = c.stratum.map(|s| format!(" [{}]", s.name())).unwrap_or_default();
        let table = c.table.map(|t| t.to_string()).unwrap_or_else(|| "-".into());
        let inferred = c.inferred.map(|s| format!("; {s}")).unwrap_or_default();
        let _ = writeln!(w, "    {}{stratum}: table {table}, hrr {}{inferred} ({})", c.pair, c.hrr, ok_str(c.ok));
    }
    let _ = writeln!(w, "\ndimension ledger");
    for e in exceptional_ledger().entries {
        let _ = writeln!(w, "  {:<28} {:>3}  {} ({})", e.name, e.value, e.derivation, ok_str(e.ok()));
    }
    let _ = writeln!(w, "\nnarrative");
    for n in narrative() {
        let _ = writeln!(w, "  [{}] {}", n.tag, n.text);
    }
    Ok(out)
}

fn ok_str(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn classes() {
        let v = canonical_class();
        assert_eq!(v, ChernCharacter::from_ints(1, 0, -6, 15));
        assert_eq!(v, curve_ideal_ch(6, 4).unwrap());
        assert_eq!(
            v.twist(&int(-4)).truncate(),
            TruncatedCharacter::from_ratios([(1, 1), (4, 1), (2, 1)])
        );
        assert_eq!(class_a().to_string(), "1,-1,-1/2,11/6");
        assert_eq!(class_b().to_string(), "0,1,-11/2,79/6");
    }

    #[test]
    fn walls_and_factors() {
        let walls = known_walls().unwrap();
        assert_eq!(distinct_loci(&walls), expected_walls());
        let [(f1, g1), (f2, g2)] = wall_factors();
        assert_eq!(f1.to_string(), "1,-2,2,-4/3");
        assert_eq!(g1.to_string(), "0,2,-8,49/3");
        assert_eq!(f2.to_string(), "1,-1,-3/2,29/6");
        assert_eq!(g2.to_string(), "0,1,-9/2,61/6");
        assert_eq!(&f2 + &g2, canonical_class());
        assert_eq!(walls[0].sub(), &f1.truncate());
        assert_eq!(walls[0].quotient(), &g1.truncate());
        assert_eq!(walls[1].sub(), &f2.truncate());
        assert_eq!(walls[1].quotient(), &g2.truncate());
        assert_eq!(walls[3].sub().to_string(), "1,-1,1/2");
        assert_eq!(walls[3].quotient().to_string(), "0,1,-13/2");
    }

    #[test]
    fn lengths() {
        assert_eq!(jh_length_planar(5, &rat(79, 6)), int(2));
        assert_eq!(jh_length_planar(0, &rat(1, 6)), int(0));
        assert_eq!(jh_length_planar(5, &rat(85, 6)), int(1));
        assert_eq!(jh_length_pair(1, &rat(11, 6)).unwrap(), int(0));
        assert_eq!(jh_length_pair(2, &rat(29, 6)).unwrap(), int(0));
        assert_eq!(jh_length_pair(1, &rat(5, 6)).unwrap(), int(1));
        assert!(jh_length_pair(3, &int(0)).is_err());
    }

    #[test]
    fn refinements() {
        let r = wall3_refinements();
        let es: Vec<Rational> = r.iter().map(|x| x.e.clone()).collect();
        assert_eq!(es, vec![rat(-1, 6), rat(5, 6), rat(11, 6)]);
        for x in &r {
            assert_eq!(&x.sub + &x.quotient, canonical_class());
            assert_eq!(&x.l + &x.l_prime, int(2));
        }
        let pure: Vec<&Refinement> = r.iter().filter(|x| x.l.is_zero()).collect();
        assert_eq!(pure.len(), 1);
        assert_eq!(pure[0].sub, class_a());
        assert_eq!(pure[0].quotient, class_b());
    }

    #[test]
    fn ext_tables() {
        for (stratum, expected) in Stratum::ALL.into_iter().zip([0, 1, 2]) {
            let ab = &ext_table(stratum)[3];
            assert_eq!((ab.first, ab.second), (Label::A, Label::B));
            assert_eq!(ab.dims[1], Dim::Recorded(expected));
        }
        let checks = validate_ext_table();
        assert_eq!(checks.len(), 6);
        assert!(checks.iter().all(|c| c.ok), "{checks:?}");
        let tables: Vec<Option<i64>> = checks.iter().take(3).map(|c| c.table).collect();
        assert_eq!(tables, vec![Some(-3), Some(-2), Some(-18)]);
        let inferred: Vec<String> = checks[3..].iter().map(|c| c.inferred.clone().unwrap()).collect();
        assert_eq!(inferred, vec!["ext2 - ext3 = 0", "ext2 - ext3 = 1", "ext2 - ext3 = 2"]);
    }

    #[test]
    fn dimension_helpers() {
        assert_eq!(proj_bundle_dim(9, 16).unwrap(), 24);
        assert_eq!(proj_bundle_dim(11, 18).unwrap(), 28);
        assert_eq!(proj_bundle_dim(0, 1).unwrap(), 0);
        assert!(proj_bundle_dim(3, 0).is_err());
        assert_eq!(ext1_wall_bound(8, 3, 1, 13), 24);
        assert_eq!(ext1_wall_bound(4, 7, 2, 18), 30);
        assert_eq!(ext1_wall_bound(0, 0, 0, 1), 0);
        assert_eq!(singular_ext_dim(0).unwrap(), 28);
        assert_eq!(singular_ext_dim(1).unwrap(), 29);
        assert_eq!(singular_ext_dim(2).unwrap(), 30);
        assert!(singular_ext_dim(3).is_err());
        for k in 0..=2 {
            assert_eq!(singular_ext_dim(k).unwrap() > 28, k > 0);
        }
    }

    #[test]
    fn wall3_bound_dominates_singular_dims() {
        for stratum in Stratum::ALL {
            let bound = ext1_wall_bound(4, 7, stratum.ext1_ab(), 18);
            for ker in 0..=stratum.ext1_ab() {
                assert!(bound >= singular_ext_dim(ker).unwrap());
            }
        }
    }

    #[test]
    fn ledger_is_consistent() {
        let ledger = exceptional_ledger();
        assert!(ledger.mismatches().is_empty(), "{:?}", ledger.mismatches());
        assert_eq!(ledger.get("M1"), Some(24));
        assert_eq!(ledger.get("M_prime"), Some(28));
        assert_eq!(ledger.get("cone_fiber"), Some(14));
    }

    #[test]
    fn report_contents() {
        let report = report_json().unwrap();
        assert_eq!(report["schema"], "p3walls/1");
        assert_eq!(report["walls"].as_array().unwrap().len(), 4);
        let chis: Vec<&str> = report["euler_table"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["chi"].as_str().unwrap())
            .collect();
        assert_eq!(chis, vec!["-3", "-2", "-18", "0"]);
        assert_eq!(report["class"]["quintic_union_line"]["ok"], true);
        for key in ["class", "walls", "refinements", "euler_table", "ext_tables", "ledger", "narrative"] {
            assert!(report.get(key).is_some(), "missing {key}");
        }
        assert_eq!(report_text().unwrap(), report_text().unwrap());
        assert!(report_text().unwrap().contains("chi(B,A) = -18"));
    }

    #[test]
    fn bmt_circle_of_v() {
        assert_eq!(crate::stability::bmt_zero_circle(&canonical_class()), Some((rat(-15, 4), rat(33, 16))));
    }
}
