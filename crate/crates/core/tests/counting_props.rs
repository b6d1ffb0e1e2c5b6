mod common;

use std::collections::HashSet;

use common::*;
use hypercount::counting::count_real_pairs_at;
use hypercount::point::{Distance, PlanePoint};
use hypercount::{
    bipartite_distinct, count_pairs_at, count_pairs_at_brute_force, distinct_distances, histogram,
    histogram_brute_force, DualDistance, Error, PointSet, Rational,
};
use proptest::prelude::*;

fn check_plane<P>(set: &PointSet<P>, probe: &P::Distance) -> Result<(), TestCaseError>
where
    P: hypercount::counting::PairCounting,
{
    let fast = histogram(set).unwrap();
    let slow = histogram_brute_force(set).unwrap();
    prop_assert_eq!(fast.counts(), slow.counts());
    let n = set.len() as u64;
    prop_assert_eq!(fast.total(), n * (n - 1) / 2);
    for (d, c) in slow.counts() {
        prop_assert_eq!(count_pairs_at(set, d).unwrap(), *c);
    }
    if probe.is_attainable() {
        prop_assert_eq!(
            count_pairs_at(set, probe).unwrap(),
            count_pairs_at_brute_force(set, probe)
        );
    } else {
        prop_assert!(matches!(
            count_pairs_at(set, probe),
            Err(Error::UnattainableDistance(_))
        ));
    }
    let (with_zero, _) = distinct_distances(set, true).unwrap();
    let (without_zero, ds) = distinct_distances(set, false).unwrap();
    let zero_present = slow.counts().keys().any(|d| d.is_zero());
    prop_assert_eq!(with_zero, without_zero + zero_present as usize);
    prop_assert!(ds.iter().all(|d| !d.is_zero()));
    Ok(())
}

fn bipartite_oracle<P: PlanePoint>(a: &PointSet<P>, b: &PointSet<P>) -> usize {
    let mut seen = HashSet::new();
    for p in a {
        for q in b {
            if p != q {
                seen.insert(p.distance(q));
            }
        }
    }
    seen.len()
}

fn arb_distance_components() -> impl Strategy<Value = (Rational, Rational)> {
    (arb_coord(), arb_coord()).prop_map(|(a, b)| (&a * &a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_hash_matches_brute(set in arb_dual_set(80), (d1, d2) in arb_distance_components()) {
        check_plane(&set, &DualDistance { d1, d2 })?;
    }

    #[test]
    fn double_hash_matches_brute(set in arb_double_set(80), (d1, d2) in arb_distance_components()) {
        check_plane(&set, &hypercount::DoubleDistance { d1, d2 })?;
    }

    #[test]
    fn real_hash_matches_brute(set in arb_real_set(80), m in arb_coord()) {
        check_plane(&set, &hypercount::SquaredDistance(m.clone()))?;
        if !m.is_negative() {
            prop_assert_eq!(
                count_real_pairs_at(&set, &m).unwrap(),
                count_pairs_at_brute_force(&set, &hypercount::SquaredDistance(m))
            );
        }
    }

    #[test]
    fn bipartite_matches_oracle(a in arb_double_set(25), b in arb_double_set(25), c in arb_dual_set(25), d in arb_dual_set(25)) {
        prop_assert_eq!(bipartite_distinct(&a, &b).unwrap(), bipartite_oracle(&a, &b));
        prop_assert_eq!(bipartite_distinct(&c, &d).unwrap(), bipartite_oracle(&c, &d));
        prop_assert_eq!(bipartite_distinct(&a, &a).unwrap(), bipartite_oracle(&a, &a));
    }
}

#[test]
fn unattainable_dual_targets() {
    let set = hypercount::construct::mult_construction(3, 3).unwrap();
    for (d1, d2) in [(-1, 0), (0, 1), (0, -3)] {
        let d = DualDistance::new(d1, d2);
        assert!(matches!(
            count_pairs_at(&set, &d),
            Err(Error::UnattainableDistance(_))
        ));
    }
}

#[test]
fn too_few_points() {
    let single = PointSet::new(vec![hypercount::RealPoint::new(0, 0)]);
    assert!(histogram(&single).is_err());
    assert!(distinct_distances(&single, true).is_err());
}
