use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use p3walls::chern::{curve_ideal_ch, euler_pairing, line_bundle_ch};
use p3walls::rational::{int, rat, ExtendedRational, Rational};
use p3walls::stability::{
    bmt_form, bmt_zero_circle, bridgeland_charge, lambda, nu, tilt_charge, BridgelandParams, TiltPoint,
};
use p3walls::walls::{tilt_wall_locus, WallLocus};
use p3walls::{genus4, ChernCharacter};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=60, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn character() -> impl Strategy<Value = ChernCharacter> {
    (rational(), rational(), rational(), rational()).prop_map(|(r, c, d, e)| ChernCharacter::new(r, c, d, e))
}

/// Integral classes built as sums of line bundles, which always satisfy
/// the lattice conditions.
fn integral() -> impl Strategy<Value = ChernCharacter> {
    prop::collection::vec((-4i64..=4, prop::bool::ANY), 1..5).prop_map(|terms| {
        terms.into_iter().fold(ChernCharacter::zero(), |acc, (t, plus)| {
            let l = line_bundle_ch(&int(t));
            if plus {
                acc + l
            } else {
                acc - l
            }
        })
    })
}

fn point() -> impl Strategy<Value = TiltPoint> {
    (rational(), positive()).prop_map(|(b, a)| TiltPoint::new(b, a).unwrap())
}

proptest! {
    #[test]
    fn twist_is_additive(x in character(), a in rational(), b in rational()) {
        prop_assert_eq!(x.twist(&a).twist(&b), x.twist(&(&a + &b)));
        prop_assert_eq!(x.twist(&Rational::zero()), x);
    }

    #[test]
    fn discriminant_is_twist_invariant(x in character(), a in rational()) {
        prop_assert_eq!(x.twist(&a).discriminant(), x.discriminant());
    }

    #[test]
    fn twist_is_tensor_with_line_bundle(x in character(), t in -6i64..=6) {
        prop_assert_eq!(x.twist(&int(t)), x.tensor(&line_bundle_ch(&int(-t))));
    }

    #[test]
    fn dual_is_involution(x in character()) {
        prop_assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn euler_is_biadditive(a in character(), b in character(), c in character()) {
        prop_assert_eq!(
            euler_pairing(&(&a + &b), &c),
            euler_pairing(&a, &c) + euler_pairing(&b, &c)
        );
        prop_assert_eq!(
            euler_pairing(&a, &(&b + &c)),
            euler_pairing(&a, &b) + euler_pairing(&a, &c)
        );
    }

    #[test]
    fn euler_is_integral_on_lattice(a in integral(), b in integral()) {
        prop_assert!(a.is_integral() && b.is_integral());
        prop_assert!(euler_pairing(&a, &b).is_integer());
    }

    #[test]
    fn euler_of_twists_is_shift_invariant(a in integral(), b in integral(), t in -3i64..=3) {
        let t = int(t);
        prop_assert_eq!(euler_pairing(&a.twist(&t), &b.twist(&t)), euler_pairing(&a, &b));
    }

    #[test]
    fn curve_ideal_has_expected_invariants(d in 1u64..=8, g in -5i64..=15) {
        let ch = curve_ideal_ch(d, g).unwrap();
        let o = ChernCharacter::from_ints(1, 0, 0, 0);
        // chi(O_C) = 1 - g, so chi(I_C) = g.
        prop_assert_eq!(euler_pairing(&o, &ch), int(g));
        prop_assert_eq!(ch.discriminant(), int(2 * d as i64));
        prop_assert!(ch.is_integral());
    }

    #[test]
    fn tilt_charge_is_additive(a in character(), b in character(), p in point()) {
        let sum = tilt_charge(&(&a + &b), &p);
        let parts = tilt_charge(&a, &p) + tilt_charge(&b, &p);
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn slopes_are_scale_invariant(x in character(), p in point(), k in positive(), s in positive()) {
        prop_assert_eq!(nu(&x.scale(&k), &p), nu(&x, &p));
        let params = BridgelandParams::new(p, s).unwrap();
        prop_assert_eq!(lambda(&x.scale(&k), &params), lambda(&x, &params));
    }

    #[test]
    fn imaginary_part_ignores_s(x in character(), p in point(), s in positive(), t in positive()) {
        let a = bridgeland_charge(&x, &BridgelandParams::new(p.clone(), s).unwrap());
        let b = bridgeland_charge(&x, &BridgelandParams::new(p, t).unwrap());
        prop_assert_eq!(a.im, b.im);
    }

    #[test]
    fn locus_is_symmetric(v in character(), w in character()) {
        prop_assert_eq!(tilt_wall_locus(&v, &w), tilt_wall_locus(&w, &v));
    }

    #[test]
    fn locus_ignores_scaling(v in character(), w in character(), k in positive(), m in positive()) {
        prop_assert_eq!(tilt_wall_locus(&v.scale(&k), &w.scale(&m)), tilt_wall_locus(&v, &w));
    }

    #[test]
    fn locus_of_quotient_matches(v in character(), w in character()) {
        prop_assert_eq!(tilt_wall_locus(&v, &w), tilt_wall_locus(&v, &(&v - &w)));
    }

    /// Points on a numerical wall give equal tilt slopes.
    #[test]
    fn nu_agrees_on_circle(v in character(), w in character(), u in -20i64..=20) {
        if let WallLocus::Circle { center, radius_sq } = tilt_wall_locus(&v, &w) {
            // Rational points: beta = center + u/21 * q with q <= sqrt(radius_sq).
            let q = Rational::from(p3walls::rational::sqrt_floor(&(&radius_sq * int(10_000)))) / int(100);
            let beta = &center + rat(u, 21) * q;
            let offset = &beta - &center;
            let alpha_sq = &radius_sq - &offset * &offset;
            prop_assume!(alpha_sq.is_positive());
            let p = TiltPoint::new(beta, alpha_sq).unwrap();
            let (tv, tw) = (tilt_charge(&v, &p), tilt_charge(&w, &p));
            prop_assert_eq!(&tv.re * &tw.im, &tw.re * &tv.im);
        }
    }

    /// The BMT form is negative strictly inside its zero circle and positive outside.
    #[test]
    fn bmt_sign_matches_circle(p in point()) {
        let v = genus4::canonical_class();
        let (center, radius_sq) = bmt_zero_circle(&v).unwrap();
        let offset = p.beta() - &center;
        let power = &offset * &offset + p.alpha_sq() - &radius_sq;
        let q = bmt_form(&v, &p);
        prop_assert_eq!(q.is_positive(), power.is_positive());
        prop_assert_eq!(q.is_zero(), power.is_zero());
    }
}

/// On wall 3 both factors have infinite Bridgeland slope at the top for
/// every `s`. Away from the top the slopes differ, but the obstruction
/// `Im Z(A) Re Z(B) - Re Z(A) Im Z(B)` does not depend on `s`.
#[test]
fn wall3_pair_under_bridgeland_slope() {
    let v = genus4::canonical_class();
    let walls = genus4::known_walls().unwrap();
    let wall3 = &walls[2];
    assert_eq!(wall3.locus(), genus4::expected_walls()[2]);
    let (a, b) = wall3.pin_ch3(rat(11, 6));
    assert_eq!(&a + &b, v);
    let svals = [rat(1, 3), rat(1, 1), rat(7, 2)];
    for s in &svals {
        let params = BridgelandParams::new(wall3.top(), s.clone()).unwrap();
        assert_eq!(lambda(&a, &params), ExtendedRational::PosInfinity);
        assert_eq!(lambda(&b, &params), ExtendedRational::PosInfinity);
    }
    for beta in [rat(-6, 1), rat(-5, 1), rat(-7, 1), rat(-9, 2)] {
        let offset = &beta - wall3.center();
        let p = TiltPoint::new(beta, wall3.radius_sq() - &offset * &offset).unwrap();
        let cross = |s: &Rational| {
            let params = BridgelandParams::new(p.clone(), s.clone()).unwrap();
            let (za, zb) = (bridgeland_charge(&a, &params), bridgeland_charge(&b, &params));
            &za.im * &zb.re - &za.re * &zb.im
        };
        let first = cross(&svals[0]);
        assert!(svals.iter().all(|s| cross(s) == first));
        assert!(!first.is_zero());
    }
}

#[test]
fn line_bundles_have_unit_euler_with_themselves() {
    for t in -5..=5 {
        let l = line_bundle_ch(&int(t));
        assert!(euler_pairing(&l, &l).is_one());
    }
}
