mod common;

use arfcurve::*;
use proptest::prelude::*;

fn seq(v: &[u32]) -> MultiplicitySequence {
    MultiplicitySequence::new(v.to_vec()).unwrap()
}

fn box_points(corner: &[u64]) -> Vec<Vec<u64>> {
    let mut pts = vec![vec![]];
    for &c in corner {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                (0..=c).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    pts
}

#[test]
fn arf_pair_against_subtree_sums() {
    let t = MultiplicityTree::new(vec![seq(&[4, 2, 2]), seq(&[2, 2])], vec![1]).unwrap();
    let s = t.to_semigroup().unwrap();
    let corner = s.corner().to_vec();
    let sums = common::subtree_sums(&t, &corner);
    for p in box_points(&corner) {
        assert_eq!(s.contains(&p).unwrap(), sums.contains(&p), "{p:?}");
    }
    assert!(!s.contains(&[7, 4]).unwrap());
    assert!(s.contains(&[6, 5]).unwrap());
    let small = MultiplicityTree::new(vec![seq(&[2]), seq(&[2])], vec![1]).unwrap();
    assert!(small.to_semigroup().unwrap().contains(&[9, 5]).unwrap());
}

#[test]
fn pinch_shrinks_semigroup() {
    let t = MultiplicityTree::new(vec![seq(&[2, 2]), seq(&[2, 2]), seq(&[2])], vec![2, 0]).unwrap();
    let p = t.pinch(0).unwrap();
    assert_eq!(p.splits(), &[3, 0]);
    assert!(p.to_semigroup().unwrap().is_subset_of(&t.to_semigroup().unwrap()));
    assert!(p.leq(&t).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn membership_matches_subtree_sums(t in common::tree(3, 4, 4)) {
        let s = t.to_semigroup().unwrap();
        let corner = s.corner().to_vec();
        let sums = common::subtree_sums(&t, &corner);
        for p in box_points(&corner) {
            prop_assert_eq!(s.contains(&p).unwrap(), sums.contains(&p), "{:?}", p);
        }
    }

    #[test]
    fn tree_semigroups_are_arf_and_good(t in common::tree(3, 5, 6)) {
        let s = t.to_semigroup().unwrap();
        prop_assert!(s.is_good());
        prop_assert!(s.is_arf_good());
        prop_assert!(s.is_local());
        for j in 0..t.d() {
            prop_assert_eq!(s.projection(j).unwrap(), seq_to_semigroup(&t.branches()[j]));
        }
        prop_assert_eq!(s.fine_multiplicity().unwrap(), t.nodes()[0].vector.clone());
    }

    #[test]
    fn node_serialization_round_trip(t in common::tree(3, 6, 6)) {
        let text = serde_json::to_string(&t.to_json()).unwrap();
        prop_assert_eq!(MultiplicityTree::parse_json(&text).unwrap(), t);
    }

    #[test]
    fn canonical_form_is_permutation_invariant(t in common::tree(3, 5, 6)) {
        let (c, perm) = t.canonical_form();
        prop_assert_eq!(t.permuted(&perm).unwrap(), c.clone());
        let reversed: Vec<usize> = (0..t.d()).rev().collect();
        let r = t.permuted(&reversed).unwrap();
        prop_assert_eq!(r.canonical_form().0, c);
        prop_assert!(r.equivalent(&t));
    }

    #[test]
    fn profile_round_trip(t in common::tree(3, 6, 6)) {
        let level = t.splits().iter().max().map_or(0, |m| m + 1);
        let p = t.split_profile(level).unwrap();
        prop_assert_eq!(MultiplicityTree::from_profile(t.branches().to_vec(), &p).unwrap(), t);
    }
}
