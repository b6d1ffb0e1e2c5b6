mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use hypercount::incidence::line_of_pair;
use hypercount::point::{multiplicity, rho_dual};
use hypercount::{
    count_pairs_at, dyadic_classify, incidences, rich_lines, DualDistance, DualPoint, DyadicCell,
    Line, PointSet, Rational, RealPoint,
};
use proptest::prelude::*;
use rand::Rng;

/// Cell table built pair by pair, with plane and line populations counted
/// directly from the definitions.
fn dyadic_oracle(set: &PointSet<DualPoint>) -> BTreeMap<DyadicCell, u64> {
    let pts = set.points();
    let unit = DualDistance::unit();
    let mut cells = BTreeMap::new();
    for p in pts {
        for q in pts {
            if rho_dual(p, q) != unit {
                continue;
            }
            let line = line_of_pair(p, q).unwrap();
            let plane_of = |r: &DualPoint| -> Vec<&DualPoint> {
                pts.iter()
                    .filter(|s| s.real_part() == r.real_part())
                    .collect()
            };
            let on_line = |g: &[&DualPoint]| {
                g.iter()
                    .filter(|s| line.contains(&s.imaginary_part()))
                    .count()
            };
            let (hp, hq) = (plane_of(p), plane_of(q));
            let (a, b, c, d) = (hp.len(), hq.len(), on_line(&hp), on_line(&hq));
            *cells
                .entry(DyadicCell::from_counts(a, b, c, d))
                .or_insert(0) += 1;
        }
    }
    cells
}

fn arb_line_points() -> impl Strategy<Value = (i64, i64, i64, Vec<i64>)> {
    // a·x + b·z = c with b != 0, sampled at several integer x.
    (
        -5i64..=5,
        prop_oneof![-5i64..=-1, 1i64..=5],
        -10i64..=10,
        prop::collection::btree_set(-10i64..=10, 4..8),
    )
        .prop_map(|(a, b, c, xs)| (a, b, c, xs.into_iter().collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dyadic_partition_and_legality(seed in any::<u64>()) {
        let mut r = rng(seed);
        let set = random_dual_set(&mut r, 60);
        let cells = dyadic_classify(&set);
        let units = count_pairs_at(&set, &DualDistance::unit()).unwrap();
        prop_assert_eq!(cells.values().sum::<u64>(), 2 * units);
        let m = multiplicity(&set).unwrap();
        for c in cells.keys() {
            prop_assert!(c.gamma <= c.alpha && c.delta <= c.beta);
            prop_assert!(1usize << c.alpha <= m && 1usize << c.beta <= m);
        }
        prop_assert_eq!(cells, dyadic_oracle(&set));
    }

    #[test]
    fn unit_pairs_lie_on_their_line(p in arb_dual_point(), y in arb_coord(), w in arb_coord(), dir in 0usize..4) {
        // q sits at unit real distance; adjust its imaginary part so the pair is at [1, 0].
        let (dx, dz) = [(1, 0), (0, 1), (-1, 0), (0, -1)][dir];
        let mut q = DualPoint {
            x: &p.x + &Rational::integer(dx),
            y,
            z: &p.z + &Rational::integer(dz),
            w,
        };
        if dx != 0 { q.y = p.y.clone(); } else { q.w = p.w.clone(); }
        prop_assert_eq!(rho_dual(&p, &q), DualDistance::unit());
        let line = line_of_pair(&p, &q).unwrap();
        prop_assert!(line.contains(&p.imaginary_part()));
        prop_assert!(line.contains(&q.imaginary_part()));
    }

    #[test]
    fn canonical_lines_are_unique((a, b, c, xs) in arb_line_points(), k in prop_oneof![-7i64..=-1, 1i64..=7]) {
        let on_line: Vec<RealPoint> = xs
            .iter()
            .map(|&x| RealPoint { x: Rational::integer(x), z: Rational::frac(c - a * x, b) })
            .collect();
        let reference = Line::new(&Rational::integer(a), &Rational::integer(b), &Rational::integer(c)).unwrap();
        let scaled = Line::new(&Rational::integer(k * a), &Rational::integer(k * b), &Rational::integer(k * c)).unwrap();
        prop_assert_eq!(&reference, &scaled);
        for i in 0..on_line.len() {
            for j in 0..on_line.len() {
                if i != j {
                    prop_assert_eq!(&Line::through(&on_line[i], &on_line[j]).unwrap(), &reference);
                }
            }
        }
        prop_assert_eq!(reference.to_string().parse::<Line>().unwrap(), reference);
    }

    #[test]
    fn rich_lines_consistency(seed in any::<u64>(), r_rich in 2usize..6) {
        let mut g = rng(seed);
        let side = g.random_range(2..7);
        let set = random_grid_subset(&mut g, side, 2);
        let rich = rich_lines(&set, r_rich).unwrap();
        for l in &rich {
            prop_assert!(incidences(&set, [l]) >= r_rich as u64);
        }
        let pts = set.points();
        let mut all = BTreeSet::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                all.insert(Line::through(&pts[i], &pts[j]).unwrap());
            }
        }
        for l in all.difference(&rich) {
            prop_assert!(incidences(&set, [l]) < r_rich as u64);
        }
    }
}

#[test]
fn grid_lines_are_rich() {
    let grid = hypercount::construct::integer_grid(3).unwrap();
    let rich = rich_lines(&grid, 3).unwrap();
    assert_eq!(rich.len(), 8);
    assert_eq!(incidences(&grid, &rich), 24);
    assert!(rich_lines(&grid, 1).is_err());
}

#[test]
fn equal_real_parts_have_no_line() {
    let p = DualPoint::new(0, 1, 0, 0);
    let q = DualPoint::new(0, 2, 0, 0);
    assert!(line_of_pair(&p, &q).is_err());
}
