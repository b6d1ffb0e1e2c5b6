#![allow(dead_code)]

use hypercount::{DoublePoint, DualPoint, PointSet, Rational, RealPoint};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rationals with denominators up to 3, so that random sets repeat
/// distances often enough to make counting tests meaningful.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.random_range(-4i64..=4);
    let den = if rng.random_bool(0.7) {
        1
    } else {
        rng.random_range(2i64..=3)
    };
    Rational::frac(num, den)
}

fn small_int(rng: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    Rational::integer(rng.random_range(lo..=hi))
}

/// A 𝔻² set whose real parts come from a small integer grid, so unit-length
/// real displacements are common.
pub fn random_dual_set(rng: &mut impl Rng, max_n: usize) -> PointSet<DualPoint> {
    let n = rng.random_range(2..=max_n);
    let groups = rng.random_range(1..=8usize);
    let reals: Vec<(Rational, Rational)> = (0..groups)
        .map(|_| (small_int(rng, 0, 2), small_int(rng, 0, 2)))
        .collect();
    let pts = (0..n)
        .map(|_| {
            let (x, z) = reals[rng.random_range(0..groups)].clone();
            DualPoint {
                x,
                y: small_rational(rng),
                z,
                w: small_rational(rng),
            }
        })
        .collect();
    PointSet::new(pts)
}

pub fn random_double_set(rng: &mut impl Rng, max_n: usize) -> PointSet<DoublePoint> {
    let n = rng.random_range(2..=max_n);
    let pts = (0..n)
        .map(|_| DoublePoint {
            x: small_int(rng, -3, 3),
            y: small_rational(rng),
            z: small_int(rng, -3, 3),
            w: small_rational(rng),
        })
        .collect();
    PointSet::new(pts)
}

pub fn random_real_set(rng: &mut impl Rng, max_n: usize) -> PointSet<RealPoint> {
    let n = rng.random_range(2..=max_n);
    let pts = (0..n)
        .map(|_| {
            if rng.random_bool(0.8) {
                RealPoint {
                    x: small_int(rng, 0, 9),
                    z: small_int(rng, 0, 9),
                }
            } else {
                RealPoint {
                    x: small_rational(rng),
                    z: small_rational(rng),
                }
            }
        })
        .collect();
    PointSet::new(pts)
}

/// Random subset of the `side × side` integer grid with at least `min` points.
pub fn random_grid_subset(rng: &mut impl Rng, side: i64, min: usize) -> PointSet<RealPoint> {
    loop {
        let pts: Vec<RealPoint> = (0..side)
            .flat_map(|x| (0..side).map(move |z| (x, z)))
            .filter(|_| rng.random_bool(0.5))
            .map(|(x, z)| RealPoint::new(x, z))
            .collect();
        if pts.len() >= min {
            return PointSet::new(pts);
        }
    }
}

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        4 => (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d)),
        1 => (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rational::frac(n, d)),
    ]
}

pub fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    arb_rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn arb_positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

/// Coordinates drawn from a tiny pool so that equalities actually occur.
pub fn arb_coord() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Rational::frac(n, d))
}

pub fn arb_dual_point() -> impl Strategy<Value = DualPoint> {
    (arb_coord(), arb_coord(), arb_coord(), arb_coord()).prop_map(|(x, y, z, w)| DualPoint {
        x,
        y,
        z,
        w,
    })
}

pub fn arb_double_point() -> impl Strategy<Value = DoublePoint> {
    (arb_coord(), arb_coord(), arb_coord(), arb_coord()).prop_map(|(x, y, z, w)| DoublePoint {
        x,
        y,
        z,
        w,
    })
}

pub fn arb_real_point() -> impl Strategy<Value = RealPoint> {
    (arb_coord(), arb_coord()).prop_map(|(x, z)| RealPoint { x, z })
}

pub fn arb_dual_set(max: usize) -> impl Strategy<Value = PointSet<DualPoint>> {
    prop::collection::vec(arb_dual_point(), 2..=max).prop_map(PointSet::new)
}

pub fn arb_double_set(max: usize) -> impl Strategy<Value = PointSet<DoublePoint>> {
    prop::collection::vec(arb_double_point(), 2..=max).prop_map(PointSet::new)
}

pub fn arb_real_set(max: usize) -> impl Strategy<Value = PointSet<RealPoint>> {
    prop::collection::vec(arb_real_point(), 2..=max).prop_map(PointSet::new)
}
