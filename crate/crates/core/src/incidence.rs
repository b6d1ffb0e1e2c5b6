//! Point-line incidences, rich lines, unit-circle incidences, and the dyadic
//! classification of unit-distance pairs in 𝔻².

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::point::{DualPoint, PointSet, RealPoint};
use crate::rational::Rational;

/// The line `a·x + b·z = c` in canonical form: integer coefficients with
/// `gcd(|a|, |b|, |c|) = 1` and the first nonzero of `(a, b)` positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    pub fn new(a: &Rational, b: &Rational, c: &Rational) -> Result<Line> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidParameter(
                "line needs (a, b) != (0, 0)".into(),
            ));
        }
        let lcm = [a, b, c]
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(&r.denom()));
        let scale = |r: &Rational| r.numer() * (&lcm / r.denom());
        let (mut a, mut b, mut c) = (scale(a), scale(b), scale(c));
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    /// The line through `p` with normal vector `normal`.
    pub fn with_normal(p: &RealPoint, normal: &RealPoint) -> Result<Line> {
        let c = &normal.x * &p.x + &normal.z * &p.z;
        Line::new(&normal.x, &normal.z, &c)
    }

    /// The line through two distinct points.
    pub fn through(p: &RealPoint, q: &RealPoint) -> Result<Line> {
        if p == q {
            return Err(Error::InvalidParameter(format!(
                "no unique line through {p} twice"
            )));
        }
        let d = q.sub(p);
        Line::with_normal(p, &RealPoint { x: d.z, z: -d.x })
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains(&self, p: &RealPoint) -> bool {
        let a = Rational::from(self.a.clone());
        let b = Rational::from(self.b.clone());
        &a * &p.x + &b * &p.z == Rational::from(self.c.clone())
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for Line {
    type Err = Error;

    fn from_str(s: &str) -> Result<Line> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::InvalidParameter(format!("line `{s}` is not a,b,c")));
        };
        let int = |t: &str| -> Result<Rational> {
            t.parse::<BigInt>()
                .map(Rational::from)
                .map_err(|_| Error::InvalidParameter(format!("bad line coefficient `{t}`")))
        };
        Line::new(&int(a)?, &int(b)?, &int(c)?)
    }
}

/// The line in imaginary coordinates through `imaginary_part(p)` orthogonal
/// to the real displacement `real_part(p) − real_part(q)`. When `ρ(p, q)`
/// has zero imaginary component it also passes through `imaginary_part(q)`.
pub fn line_of_pair(p: &DualPoint, q: &DualPoint) -> Result<Line> {
    let delta = p.real_part().sub(&q.real_part());
    if delta.x.is_zero() && delta.z.is_zero() {
        return Err(Error::UndefinedLine);
    }
    Line::with_normal(&p.imaginary_part(), &delta)
}

/// `I(P, L)`: number of point-line pairs with the point on the line.
pub fn incidences<'a, I>(points: &PointSet<RealPoint>, lines: I) -> u64
where
    I: IntoIterator<Item = &'a Line>,
{
    let lines: Vec<&Line> = lines.into_iter().collect();
    lines
        .par_iter()
        .map(|l| points.iter().filter(|p| l.contains(p)).count() as u64)
        .sum()
}

/// Number of points `k` with `C(k, 2) = pairs`.
fn support_from_pairs(pairs: u64) -> u64 {
    (1 + 8 * pairs).sqrt().div_ceil(2)
}

/// Every line incident to at least `r` points, found by canonicalizing the
/// line of each point pair.
pub fn rich_lines(points: &PointSet<RealPoint>, r: usize) -> Result<BTreeSet<Line>> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "richness must be at least 2 (every point lies on infinitely many lines), got {r}"
        )));
    }
    let pts = points.points();
    let pair_counts = (0..pts.len())
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Line, u64>, i| {
            for q in &pts[i + 1..] {
                let line = Line::through(&pts[i], q).expect("distinct points");
                *acc.entry(line).or_insert(0) += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(pair_counts
        .into_iter()
        .filter(|&(_, c)| support_from_pairs(c) >= r as u64)
        .map(|(l, _)| l)
        .collect())
}

/// What to measure against the incidence bounds.
#[derive(Clone, Copy, Debug)]
pub enum StQuery<'a> {
    Lines(&'a BTreeSet<Line>),
    Richness(usize),
}

/// Ratios of observed counts to the Szemerédi–Trotter shapes
/// `m^{2/3} n^{2/3} + m + n` and `n²/r³ + n/r`. Constants are unknown, so
/// these are diagnostics only.
#[derive(Clone, Debug, PartialEq)]
pub struct StReport {
    pub points: usize,
    pub lines: usize,
    pub incidences: u64,
    pub incidence_ratio: f64,
    pub richness: Option<usize>,
    pub rich_line_ratio: Option<f64>,
}

impl fmt::Display for StReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "points={}\nlines={}\nincidences={}\nincidence_ratio={:.6}",
            self.points, self.lines, self.incidences, self.incidence_ratio
        )?;
        if let (Some(r), Some(ratio)) = (self.richness, self.rich_line_ratio) {
            write!(f, "\nrichness={r}\nrich_line_ratio={ratio:.6}")?;
        }
        Ok(())
    }
}

pub fn st_diagnostic(points: &PointSet<RealPoint>, query: StQuery<'_>) -> Result<StReport> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let owned;
    let (lines, richness) = match query {
        StQuery::Lines(lines) => (lines, None),
        StQuery::Richness(r) => {
            owned = rich_lines(points, r)?;
            (&owned, Some(r))
        }
    };
    let m = points.len() as f64;
    let n = lines.len() as f64;
    let found = incidences(points, lines);
    let incidence_ratio = if lines.is_empty() {
        0.0
    } else {
        found as f64 / (m.powf(2.0 / 3.0) * n.powf(2.0 / 3.0) + m + n)
    };
    let rich_line_ratio = richness.map(|r| {
        let r = r as f64;
        n / (m * m / (r * r * r) + m / r)
    });
    Ok(StReport {
        points: points.len(),
        lines: lines.len(),
        incidences: found,
        incidence_ratio,
        richness,
        rich_line_ratio,
    })
}

/// `(α, β, γ, δ)`: ⌊log₂⌋ of the population of `p`'s imaginary plane, of
/// `q`'s, and of `ℓ(p, q)` inside each of them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DyadicCell {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub delta: u32,
}

impl DyadicCell {
    pub fn new(alpha: u32, beta: u32, gamma: u32, delta: u32) -> Result<DyadicCell> {
        if gamma > alpha || delta > beta {
            return Err(Error::InvalidParameter(format!(
                "dyadic cell ({alpha},{beta},{gamma},{delta}) needs gamma <= alpha and delta <= beta"
            )));
        }
        Ok(DyadicCell {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    /// Cell of populations `(plane_p, plane_q, line_p, line_q)`, all ≥ 1.
    pub fn from_counts(plane_p: usize, plane_q: usize, line_p: usize, line_q: usize) -> DyadicCell {
        DyadicCell {
            alpha: plane_p.ilog2(),
            beta: plane_q.ilog2(),
            gamma: line_p.ilog2(),
            delta: line_q.ilog2(),
        }
    }
}

impl fmt::Display for DyadicCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

/// Classifies every ordered pair `(p, q)` at distance `[1, 0]` into its
/// dyadic cell.
///
/// For imaginary planes `H_a`, `H_b` with real displacement `Δ = r_a − r_b`
/// of unit length, `p ∈ H_a` and `q ∈ H_b` are at `[1, 0]` exactly when
/// `Δ·imag(p) = Δ·imag(q)`. That common value picks out `ℓ(p, q)`, so the
/// points of `H_a` on the line are the members sharing it.
pub fn dyadic_classify(set: &PointSet<DualPoint>) -> BTreeMap<DyadicCell, u64> {
    let groups = set.real_groups();
    let reals: Vec<RealPoint> = groups
        .iter()
        .map(|g| set.points()[g[0]].real_part())
        .collect();
    let pts = set.points();
    let keys = |delta: &RealPoint, g: &[usize]| {
        let mut out: HashMap<Rational, usize> = HashMap::new();
        for &i in g {
            let p = &pts[i];
            *out.entry(&delta.x * &p.y + &delta.z * &p.w).or_insert(0) += 1;
        }
        out
    };
    let one = Rational::one();
    let mut cells: BTreeMap<DyadicCell, u64> = BTreeMap::new();
    for a in 0..groups.len() {
        for b in a + 1..groups.len() {
            let delta = reals[a].sub(&reals[b]);
            if delta.norm_sq() != one {
                continue;
            }
            let keys_a = keys(&delta, &groups[a]);
            let keys_b = keys(&delta, &groups[b]);
            let (na, nb) = (groups[a].len(), groups[b].len());
            for (k, &ca) in &keys_a {
                let Some(&cb) = keys_b.get(k) else { continue };
                let pairs = (ca * cb) as u64;
                *cells
                    .entry(DyadicCell::from_counts(na, nb, ca, cb))
                    .or_insert(0) += pairs;
                *cells
                    .entry(DyadicCell::from_counts(nb, na, cb, ca))
                    .or_insert(0) += pairs;
            }
        }
    }
    cells
}

pub fn write_dyadic_csv<W: io::Write>(cells: &BTreeMap<DyadicCell, u64>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["alpha", "beta", "gamma", "delta", "count"])?;
    for (c, n) in cells {
        w.write_record([
            c.alpha.to_string(),
            c.beta.to_string(),
            c.gamma.to_string(),
            c.delta.to_string(),
            n.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Incidences between `points` and the unit circles centred at `centers`.
pub fn unit_circle_incidences(points: &PointSet<RealPoint>, centers: &PointSet<RealPoint>) -> u64 {
    let one = Rational::one();
    let cs = centers.points();
    points
        .points()
        .par_iter()
        .map(|p| cs.iter().filter(|c| p.dist_sq(c) == one).count() as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{embed_real, integer_grid, mult_construction};

    fn rp(x: i64, z: i64) -> RealPoint {
        RealPoint::new(x, z)
    }

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(&a.into(), &b.into(), &c.into()).unwrap()
    }

    #[test]
    fn canonical_lines() {
        assert_eq!(line(-2, 0, -4), line(1, 0, 2));
        assert_eq!(line(0, -3, 6).to_string(), "0,1,-2");
        let half = Rational::frac(1, 2);
        assert_eq!(
            Line::new(&half, &half, &Rational::one()).unwrap(),
            line(1, 1, 2)
        );
        assert!(Line::new(&Rational::zero(), &Rational::zero(), &Rational::one()).is_err());
        assert_eq!("2,-2,4".parse::<Line>().unwrap(), line(1, -1, 2));
        assert!("1,2".parse::<Line>().is_err());
    }

    #[test]
    fn line_of_pair_examples() {
        let p = DualPoint::new(0, 2, 0, 3);
        let q = DualPoint::new(1, 0, 0, 0);
        assert_eq!(line_of_pair(&p, &q).unwrap(), line(1, 0, 2));

        // Real displacement (0, 1): the line w = 3 through (2, 3).
        let q = DualPoint::new(0, 9, -1, 9);
        assert_eq!(line_of_pair(&p, &q).unwrap(), line(0, 1, 3));

        let same_real = DualPoint::new(0, 7, 0, 7);
        assert!(matches!(
            line_of_pair(&p, &same_real),
            Err(Error::UndefinedLine)
        ));
    }

    #[test]
    fn grid_incidences() {
        let g = integer_grid(3).unwrap();
        let lines = rich_lines(&g, 3).unwrap();
        assert_eq!(lines.len(), 8);
        assert_eq!(incidences(&g, &lines), 24);
        assert_eq!(incidences(&g, &BTreeSet::new()), 0);
        let one = PointSet::new(vec![rp(1, 1)]);
        assert_eq!(incidences(&one, &[line(1, -1, 0)]), 1);
    }

    #[test]
    fn collinear_points_give_one_line() {
        let pts: PointSet<RealPoint> = (0..6).map(|i| rp(i, 2 * i + 1)).collect();
        let lines = rich_lines(&pts, 2).unwrap();
        assert_eq!(lines.len(), 1);
        assert!(rich_lines(&pts, 1).is_err());
    }

    #[test]
    fn st_examples() {
        let g = integer_grid(3).unwrap();
        let lines = rich_lines(&g, 3).unwrap();
        let rep = st_diagnostic(&g, StQuery::Lines(&lines)).unwrap();
        let expected = 24.0 / (9f64.powf(2.0 / 3.0) * 8f64.powf(2.0 / 3.0) + 17.0);
        assert!((rep.incidence_ratio - expected).abs() < 1e-12);
        assert!((rep.incidence_ratio - 0.6995).abs() < 1e-3);

        let one = PointSet::new(vec![rp(0, 0)]);
        let single: BTreeSet<Line> = [line(1, 0, 0)].into();
        let rep = st_diagnostic(&one, StQuery::Lines(&single)).unwrap();
        assert!(rep.incidence_ratio <= 1.0 / 3.0 + 1e-12);

        assert!(st_diagnostic(&PointSet::new(vec![]), StQuery::Richness(2)).is_err());
    }

    #[test]
    fn dyadic_examples() {
        let cells = dyadic_classify(&mult_construction(2, 3).unwrap());
        let want: BTreeMap<_, _> = [(DyadicCell::new(1, 1, 1, 1).unwrap(), 18)].into();
        assert_eq!(cells, want);

        let pair = embed_real(&PointSet::new(vec![rp(0, 0), rp(1, 0)]));
        let want: BTreeMap<_, _> = [(DyadicCell::new(0, 0, 0, 0).unwrap(), 2)].into();
        assert_eq!(dyadic_classify(&pair), want);

        let mut buf = Vec::new();
        write_dyadic_csv(&want, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "alpha,beta,gamma,delta,count\n0,0,0,0,2\n"
        );

        assert!(DyadicCell::new(0, 1, 1, 0).is_err());
    }

    #[test]
    fn unit_circle_examples() {
        let o = PointSet::new(vec![rp(0, 0)]);
        assert_eq!(
            unit_circle_incidences(&PointSet::new(vec![rp(1, 0)]), &o),
            1
        );
        let g = integer_grid(2).unwrap();
        assert_eq!(unit_circle_incidences(&g, &g), 8);
        let pyth = PointSet::new(vec![RealPoint::new(
            Rational::frac(3, 5),
            Rational::frac(4, 5),
        )]);
        assert_eq!(unit_circle_incidences(&pyth, &o), 1);
    }

    #[test]
    fn support_inversion() {
        for k in 2..200u64 {
            assert_eq!(support_from_pairs(k * (k - 1) / 2), k);
        }
    }
}
