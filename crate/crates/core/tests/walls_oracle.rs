use proptest::prelude::*;

use p3walls::rational::{int, rat};
use p3walls::walls::{brute_force_walls, enumerate_tilt_walls, Region, SearchBounds, WallCandidate};
use p3walls::{ChernCharacter, Error};

const SMALL: SearchBounds = SearchBounds {
    r_max: 3,
    c_max: 8,
    two_d_max: 30,
};

fn lattice_class() -> impl Strategy<Value = ChernCharacter> {
    (-3i64..=3, -6i64..=6, -16i64..=16, -30i64..=30).prop_filter_map("lattice", |(r, c, two_d, six_e)| {
        let ch = ChernCharacter::new(int(r), int(c), rat(two_d, 2), rat(six_e, 6));
        ch.is_integral().then_some(ch)
    })
}

fn region() -> impl Strategy<Value = Region> {
    (-12i64..=0, 1i64..=8, 1i64..=40).prop_map(|(lo, width, a)| Region::new(int(lo), int(lo + width), int(a)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The bounded search agrees with brute force once restricted to the box.
    #[test]
    fn enumeration_matches_brute_force(v in lattice_class(), region in region()) {
        let fast = match enumerate_tilt_walls(&v, &region) {
            Ok(found) => found,
            Err(Error::UnboundedSearch { .. }) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let brute = brute_force_walls(&v, &region, SMALL).unwrap();
        let in_box: Vec<WallCandidate> = fast
            .into_iter()
            .filter(|w| w.members().iter().any(|m| SMALL.contains(m)))
            .collect();
        prop_assert_eq!(in_box, brute);
    }
}

#[test]
fn genus4_class_matches_default_box() {
    let v = ChernCharacter::from_ints(1, 0, -6, 15);
    let region = Region::default_window();
    let fast = enumerate_tilt_walls(&v, &region).unwrap();
    assert_eq!(fast, brute_force_walls(&v, &region, SearchBounds::default()).unwrap());
    assert_eq!(fast.len(), 4);
}

#[test]
fn negative_rank_and_torsion_classes() {
    let region = Region::default_window();
    for v in [
        ChernCharacter::from_ints(0, 2, -8, 16),
        ChernCharacter::from_ints(-1, 0, 6, -15),
        ChernCharacter::from_ratios([(2, 1), (-1, 1), (1, 2), (-1, 6)]),
    ] {
        match enumerate_tilt_walls(&v, &region) {
            Ok(fast) => {
                let brute = brute_force_walls(&v, &region, SMALL).unwrap();
                let in_box: Vec<_> = fast
                    .into_iter()
                    .filter(|w| w.members().iter().any(|m| SMALL.contains(m)))
                    .collect();
                assert_eq!(in_box, brute, "{v}");
            }
            Err(Error::UnboundedSearch { .. }) => {}
            Err(e) => panic!("{v}: {e}"),
        }
    }
}
