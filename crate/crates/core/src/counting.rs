//! Exact repeated-distance and distinct-distance counting.
//!
//! Every statistic has two implementations: an accelerated path that groups
//! points by real part and accumulates into hash maps (partitioned across
//! threads), and a brute-force path that evaluates every pair and counts by
//! sorting. The brute-force path is the oracle for the accelerated one.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::io;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::point::{
    AnyPointSet, Distance, DoubleDistance, DoublePoint, DualDistance, DualPoint, Plane, PlanePoint,
    PointSet, RealPoint, SquaredDistance,
};
use crate::rational::Rational;

/// Multiset of pairwise distances over unordered pairs of distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceHistogram<D> {
    counts: BTreeMap<D, u64>,
    total: u64,
}

impl<D: Distance> DistanceHistogram<D> {
    fn from_counts(counts: BTreeMap<D, u64>) -> Self {
        let total = counts.values().sum();
        DistanceHistogram { counts, total }
    }

    pub fn plane(&self) -> Plane {
        D::PLANE
    }

    pub fn counts(&self) -> &BTreeMap<D, u64> {
        &self.counts
    }

    /// Number of pairs summed over all keys, `C(n, 2)`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, d: &D) -> u64 {
        self.counts.get(d).copied().unwrap_or(0)
    }

    pub fn distinct(&self, include_zero: bool) -> BTreeSet<D> {
        self.counts
            .keys()
            .filter(|d| include_zero || !d.is_zero())
            .cloned()
            .collect()
    }

    /// CSV with header `d1,d2,count`, rows in increasing distance order.
    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["d1", "d2", "count"])?;
        for (d, c) in &self.counts {
            let (d1, d2) = d.components();
            w.write_record([d1.to_string(), d2.to_string(), c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Plane-specific accelerated counting kernels.
pub trait PairCounting: PlanePoint {
    fn accelerated_histogram(points: &[Self]) -> HashMap<Self::Distance, u64>;

    /// Unordered pairs at `d`; `d` is attainable.
    fn accelerated_count(points: &[Self], d: &Self::Distance) -> u64;
}

fn merge_counts<K: Eq + std::hash::Hash>(
    mut a: HashMap<K, u64>,
    b: HashMap<K, u64>,
) -> HashMap<K, u64> {
    if a.len() < b.len() {
        return merge_counts(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn choose2(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Pairwise loop over all unordered pairs, rows processed in parallel.
fn pair_loop_histogram<P: PlanePoint>(points: &[P]) -> HashMap<P::Distance, u64> {
    (0..points.len())
        .into_par_iter()
        .fold(HashMap::new, |mut acc, i| {
            let p = &points[i];
            for q in &points[i + 1..] {
                *acc.entry(p.distance(q)).or_insert(0) += 1;
            }
            acc
        })
        .reduce(HashMap::new, merge_counts)
}

fn pair_loop_count<P: PlanePoint>(points: &[P], d: &P::Distance) -> u64 {
    (0..points.len())
        .into_par_iter()
        .map(|i| {
            let p = &points[i];
            points[i + 1..]
                .iter()
                .filter(|q| &p.distance(q) == d)
                .count() as u64
        })
        .sum()
}

struct RealGroups<'a, P> {
    reals: Vec<RealPoint>,
    members: Vec<Vec<&'a P>>,
}

impl<'a, P: PlanePoint> RealGroups<'a, P> {
    fn new(points: &'a [P]) -> Self {
        let groups = crate::point::group_indices(points, P::real_part);
        let reals = groups.iter().map(|g| points[g[0]].real_part()).collect();
        let members = groups
            .into_iter()
            .map(|g| g.into_iter().map(|i| &points[i]).collect())
            .collect();
        RealGroups { reals, members }
    }

    fn len(&self) -> usize {
        self.reals.len()
    }
}

/// `Δx·y + Δz·w`: with `Δ` the real displacement between two imaginary
/// planes, the 𝔻² distance between members is `[|Δ|², 2(key(p) − key(q))]`.
fn dual_key(delta: &RealPoint, p: &DualPoint) -> Rational {
    &delta.x * &p.y + &delta.z * &p.w
}

fn key_counts(delta: &RealPoint, members: &[&DualPoint]) -> HashMap<Rational, u64> {
    let mut out = HashMap::with_capacity(members.len());
    for p in members {
        *out.entry(dual_key(delta, p)).or_insert(0) += 1;
    }
    out
}

impl PairCounting for DualPoint {
    fn accelerated_histogram(points: &[Self]) -> HashMap<DualDistance, u64> {
        let groups = RealGroups::new(points);
        let zero_pairs: u64 = groups.members.iter().map(|m| choose2(m.len())).sum();
        let mut hist = (0..groups.len())
            .into_par_iter()
            .fold(HashMap::new, |mut acc, a| {
                for b in a + 1..groups.len() {
                    let delta = groups.reals[a].sub(&groups.reals[b]);
                    let d1 = delta.norm_sq();
                    let keys_a = key_counts(&delta, &groups.members[a]);
                    let keys_b = key_counts(&delta, &groups.members[b]);
                    for (ka, ca) in &keys_a {
                        for (kb, cb) in &keys_b {
                            let diff = ka - kb;
                            let d2 = &diff + &diff;
                            *acc.entry(DualDistance { d1: d1.clone(), d2 }).or_insert(0) += ca * cb;
                        }
                    }
                }
                acc
            })
            .reduce(HashMap::new, merge_counts);
        if zero_pairs > 0 {
            hist.insert(DualDistance::new(0, 0), zero_pairs);
        }
        hist
    }

    fn accelerated_count(points: &[Self], d: &DualDistance) -> u64 {
        let groups = RealGroups::new(points);
        if d.d1.is_zero() {
            return groups.members.iter().map(|m| choose2(m.len())).sum();
        }
        let half = &d.d2 * &Rational::frac(1, 2);
        (0..groups.len())
            .into_par_iter()
            .map(|a| {
                let mut total = 0u64;
                for b in a + 1..groups.len() {
                    let delta = groups.reals[a].sub(&groups.reals[b]);
                    if delta.norm_sq() != d.d1 {
                        continue;
                    }
                    let keys_b = key_counts(&delta, &groups.members[b]);
                    for p in &groups.members[a] {
                        let target = dual_key(&delta, p) - &half;
                        total += keys_b.get(&target).copied().unwrap_or(0);
                    }
                }
                total
            })
            .sum()
    }
}

impl PairCounting for DoublePoint {
    fn accelerated_histogram(points: &[Self]) -> HashMap<DoubleDistance, u64> {
        let groups = RealGroups::new(points);
        (0..groups.len())
            .into_par_iter()
            .fold(HashMap::new, |mut acc, a| {
                let ga = &groups.members[a];
                for (i, p) in ga.iter().enumerate() {
                    for q in &ga[i + 1..] {
                        let d2 = p.imaginary_part().dist_sq(&q.imaginary_part());
                        *acc.entry(DoubleDistance {
                            d1: Rational::zero(),
                            d2,
                        })
                        .or_insert(0) += 1;
                    }
                }
                for b in a + 1..groups.len() {
                    let d1 = groups.reals[a].dist_sq(&groups.reals[b]);
                    for p in ga {
                        let ip = p.imaginary_part();
                        for q in &groups.members[b] {
                            let d2 = ip.dist_sq(&q.imaginary_part());
                            *acc.entry(DoubleDistance { d1: d1.clone(), d2 })
                                .or_insert(0) += 1;
                        }
                    }
                }
                acc
            })
            .reduce(HashMap::new, merge_counts)
    }

    fn accelerated_count(points: &[Self], d: &DoubleDistance) -> u64 {
        let groups = RealGroups::new(points);
        (0..groups.len())
            .into_par_iter()
            .map(|a| {
                let mut total = 0u64;
                let ga = &groups.members[a];
                if d.d1.is_zero() {
                    // Same real part; distinct points then differ in imaginary part.
                    for (i, p) in ga.iter().enumerate() {
                        let ip = p.imaginary_part();
                        total += ga[i + 1..]
                            .iter()
                            .filter(|q| ip.dist_sq(&q.imaginary_part()) == d.d2)
                            .count() as u64;
                    }
                    return total;
                }
                for b in a + 1..groups.len() {
                    if groups.reals[a].dist_sq(&groups.reals[b]) != d.d1 {
                        continue;
                    }
                    let gb = &groups.members[b];
                    if d.d2.is_zero() {
                        let imag_b: HashSet<RealPoint> =
                            gb.iter().map(|q| q.imaginary_part()).collect();
                        total += ga
                            .iter()
                            .filter(|p| imag_b.contains(&p.imaginary_part()))
                            .count() as u64;
                    } else {
                        for p in ga {
                            let ip = p.imaginary_part();
                            total += gb
                                .iter()
                                .filter(|q| ip.dist_sq(&q.imaginary_part()) == d.d2)
                                .count() as u64;
                        }
                    }
                }
                total
            })
            .sum()
    }
}

impl PairCounting for RealPoint {
    fn accelerated_histogram(points: &[Self]) -> HashMap<SquaredDistance, u64> {
        pair_loop_histogram(points)
    }

    fn accelerated_count(points: &[Self], d: &SquaredDistance) -> u64 {
        pair_loop_count(points, d)
    }
}

fn require_pairs<P>(set: &PointSet<P>) -> Result<()>
where
    P: PlanePoint,
{
    if set.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            got: set.len(),
        });
    }
    Ok(())
}

pub fn histogram<P: PairCounting>(set: &PointSet<P>) -> Result<DistanceHistogram<P::Distance>> {
    require_pairs(set)?;
    let counts = P::accelerated_histogram(set.points()).into_iter().collect();
    Ok(DistanceHistogram::from_counts(counts))
}

/// Oracle: evaluates every pair, then counts equal values by sorting.
pub fn histogram_brute_force<P: PlanePoint>(
    set: &PointSet<P>,
) -> Result<DistanceHistogram<P::Distance>> {
    require_pairs(set)?;
    let pts = set.points();
    let mut all = Vec::with_capacity(pts.len() * (pts.len() - 1) / 2);
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            all.push(p.distance(q));
        }
    }
    all.sort();
    let mut counts = BTreeMap::new();
    let mut iter = all.into_iter().peekable();
    while let Some(d) = iter.next() {
        let mut c = 1u64;
        while iter.peek() == Some(&d) {
            iter.next();
            c += 1;
        }
        counts.insert(d, c);
    }
    Ok(DistanceHistogram::from_counts(counts))
}

/// Number of unordered pairs of distinct points at distance exactly `d`.
pub fn count_pairs_at<P: PairCounting>(set: &PointSet<P>, d: &P::Distance) -> Result<u64> {
    if !d.is_attainable() {
        return Err(Error::UnattainableDistance(d.to_string()));
    }
    Ok(P::accelerated_count(set.points(), d))
}

pub fn count_pairs_at_brute_force<P: PlanePoint>(set: &PointSet<P>, d: &P::Distance) -> u64 {
    let pts = set.points();
    let mut c = 0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if &p.distance(q) == d {
                c += 1;
            }
        }
    }
    c
}

/// `D(P)`: the number of distinct distances and the distances themselves.
/// The zero distance counts only when `include_zero` is set and some pair of
/// distinct points attains it.
pub fn distinct_distances<P: PairCounting>(
    set: &PointSet<P>,
    include_zero: bool,
) -> Result<(usize, BTreeSet<P::Distance>)> {
    let distinct = histogram(set)?.distinct(include_zero);
    Ok((distinct.len(), distinct))
}

/// `D(P1, P2)`: distinct distances over `(a, b) ∈ P1 × P2` with `a ≠ b`.
pub fn bipartite_distinct<P: PlanePoint>(a: &PointSet<P>, b: &PointSet<P>) -> Result<usize> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let bs = b.points();
    let seen = a
        .points()
        .par_iter()
        .fold(HashSet::new, |mut acc, p| {
            acc.extend(bs.iter().filter(|q| *q != p).map(|q| p.distance(q)));
            acc
        })
        .reduce(HashSet::new, |mut x, y| {
            x.extend(y);
            x
        });
    Ok(seen.len())
}

/// Unordered pairs at squared Euclidean distance `m`.
pub fn count_real_pairs_at(set: &PointSet<RealPoint>, m: &Rational) -> Result<u64> {
    if m.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "squared distance {m} is negative"
        )));
    }
    count_pairs_at(set, &SquaredDistance(m.clone()))
}

/// A distance whose plane is known only at run time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyDistance {
    Dual(DualDistance),
    Double(DoubleDistance),
    Real(SquaredDistance),
}

impl AnyDistance {
    pub fn plane(&self) -> Plane {
        match self {
            AnyDistance::Dual(_) => Plane::Dual,
            AnyDistance::Double(_) => Plane::Double,
            AnyDistance::Real(_) => Plane::Real,
        }
    }

    /// Parses `d1,d2` (or a single `m` for ℝ²) as a distance in `plane`.
    pub fn parse(plane: Plane, text: &str) -> Result<AnyDistance> {
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        let parse = |s: &str| s.parse::<Rational>();
        match (plane, fields.as_slice()) {
            (Plane::Dual, [a, b]) => Ok(AnyDistance::Dual(DualDistance {
                d1: parse(a)?,
                d2: parse(b)?,
            })),
            (Plane::Double, [a, b]) => Ok(AnyDistance::Double(DoubleDistance {
                d1: parse(a)?,
                d2: parse(b)?,
            })),
            (Plane::Real, [a]) => Ok(AnyDistance::Real(SquaredDistance(parse(a)?))),
            (Plane::Real, [a, b]) => {
                let d2 = parse(b)?;
                SquaredDistance::from_components(parse(a)?, d2)
                    .map(AnyDistance::Real)
                    .ok_or_else(|| Error::UnattainableDistance(text.to_string()))
            }
            _ => Err(Error::InvalidParameter(format!(
                "distance `{text}` has the wrong number of components for the {plane} plane"
            ))),
        }
    }
}

impl fmt::Display for AnyDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyDistance::Dual(d) => d.fmt(f),
            AnyDistance::Double(d) => d.fmt(f),
            AnyDistance::Real(d) => d.fmt(f),
        }
    }
}

pub fn count_pairs_at_any(set: &AnyPointSet, d: &AnyDistance) -> Result<u64> {
    match (set, d) {
        (AnyPointSet::Dual(s), AnyDistance::Dual(d)) => count_pairs_at(s, d),
        (AnyPointSet::Double(s), AnyDistance::Double(d)) => count_pairs_at(s, d),
        (AnyPointSet::Real(s), AnyDistance::Real(d)) => count_pairs_at(s, d),
        _ => Err(Error::PlaneMismatch {
            expected: set.plane(),
            found: d.plane(),
        }),
    }
}

pub fn distinct_count_any(set: &AnyPointSet, include_zero: bool) -> Result<usize> {
    Ok(match set {
        AnyPointSet::Dual(s) => distinct_distances(s, include_zero)?.0,
        AnyPointSet::Double(s) => distinct_distances(s, include_zero)?.0,
        AnyPointSet::Real(s) => distinct_distances(s, include_zero)?.0,
    })
}

pub fn bipartite_distinct_any(a: &AnyPointSet, b: &AnyPointSet) -> Result<usize> {
    match (a, b) {
        (AnyPointSet::Dual(a), AnyPointSet::Dual(b)) => bipartite_distinct(a, b),
        (AnyPointSet::Double(a), AnyPointSet::Double(b)) => bipartite_distinct(a, b),
        (AnyPointSet::Real(a), AnyPointSet::Real(b)) => bipartite_distinct(a, b),
        _ => Err(Error::PlaneMismatch {
            expected: a.plane(),
            found: b.plane(),
        }),
    }
}

/// Writes the accelerated histogram of `set` as CSV.
pub fn write_histogram_csv<W: io::Write>(set: &AnyPointSet, out: W) -> Result<()> {
    match set {
        AnyPointSet::Dual(s) => histogram(s)?.write_csv(out),
        AnyPointSet::Double(s) => histogram(s)?.write_csv(out),
        AnyPointSet::Real(s) => histogram(s)?.write_csv(out),
    }
}
