//! Points of 𝔻², 𝕎² and ℝ², their distance functions, and the multiplicity
//! notions used to parametrize the counting problems.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Plane {
    Dual,
    Double,
    Real,
}

impl Plane {
    pub fn tag(self) -> &'static str {
        match self {
            Plane::Dual => "dual",
            Plane::Double => "double",
            Plane::Real => "real",
        }
    }

    /// Number of rational coordinates per point.
    pub fn arity(self) -> usize {
        match self {
            Plane::Dual | Plane::Double => 4,
            Plane::Real => 2,
        }
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Plane {
    type Err = Error;

    fn from_str(s: &str) -> Result<Plane> {
        match s {
            "dual" => Ok(Plane::Dual),
            "double" => Ok(Plane::Double),
            "real" => Ok(Plane::Real),
            other => Err(Error::InvalidParameter(format!(
                "unknown plane tag `{other}`"
            ))),
        }
    }
}

/// A point `(x, z)` of ℝ².
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct RealPoint {
    pub x: Rational,
    pub z: Rational,
}

impl RealPoint {
    pub fn new(x: impl Into<Rational>, z: impl Into<Rational>) -> RealPoint {
        RealPoint {
            x: x.into(),
            z: z.into(),
        }
    }

    pub fn sub(&self, other: &RealPoint) -> RealPoint {
        RealPoint {
            x: &self.x - &other.x,
            z: &self.z - &other.z,
        }
    }

    pub fn norm_sq(&self) -> Rational {
        self.x.square() + self.z.square()
    }

    pub fn dist_sq(&self, other: &RealPoint) -> Rational {
        (&self.x - &other.x).square() + (&self.z - &other.z).square()
    }
}

impl fmt::Display for RealPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.z)
    }
}

/// Twice the signed area of `(a, b, c)`; zero iff the three are collinear.
pub fn orient(a: &RealPoint, b: &RealPoint, c: &RealPoint) -> Rational {
    let ab = b.sub(a);
    let ac = c.sub(a);
    &ab.x * &ac.z - &ab.z * &ac.x
}

/// The point `[x, y, z, w]` of 𝔻², i.e. `(x + yε, z + wε)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct DualPoint {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub w: Rational,
}

impl DualPoint {
    pub fn new(
        x: impl Into<Rational>,
        y: impl Into<Rational>,
        z: impl Into<Rational>,
        w: impl Into<Rational>,
    ) -> DualPoint {
        DualPoint {
            x: x.into(),
            y: y.into(),
            z: z.into(),
            w: w.into(),
        }
    }

    pub fn real_part(&self) -> RealPoint {
        RealPoint {
            x: self.x.clone(),
            z: self.z.clone(),
        }
    }

    pub fn imaginary_part(&self) -> RealPoint {
        RealPoint {
            x: self.y.clone(),
            z: self.w.clone(),
        }
    }
}

impl fmt::Display for DualPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.x, self.y, self.z, self.w)
    }
}

/// The point `⟨x, y, z, w⟩` of 𝕎² in light-cone coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct DoublePoint {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub w: Rational,
}

impl DoublePoint {
    pub fn new(
        x: impl Into<Rational>,
        y: impl Into<Rational>,
        z: impl Into<Rational>,
        w: impl Into<Rational>,
    ) -> DoublePoint {
        DoublePoint {
            x: x.into(),
            y: y.into(),
            z: z.into(),
            w: w.into(),
        }
    }

    /// Builds the point `(X + Yj, Z + Wj)` given in standard coordinates.
    pub fn from_standard(
        big_x: &Rational,
        big_y: &Rational,
        big_z: &Rational,
        big_w: &Rational,
    ) -> DoublePoint {
        DoublePoint {
            x: big_x + big_y,
            y: big_x - big_y,
            z: big_z + big_w,
            w: big_z - big_w,
        }
    }

    /// Standard coordinates `(X, Y, Z, W)`.
    pub fn to_standard(&self) -> [Rational; 4] {
        let half = Rational::frac(1, 2);
        [
            (&self.x + &self.y) * &half,
            (&self.x - &self.y) * &half,
            (&self.z + &self.w) * &half,
            (&self.z - &self.w) * &half,
        ]
    }

    pub fn real_part(&self) -> RealPoint {
        RealPoint {
            x: self.x.clone(),
            z: self.z.clone(),
        }
    }

    pub fn imaginary_part(&self) -> RealPoint {
        RealPoint {
            x: self.y.clone(),
            z: self.w.clone(),
        }
    }
}

impl fmt::Display for DoublePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}, {}, {}⟩", self.x, self.y, self.z, self.w)
    }
}

/// The value `[d1, d2]` of the 𝔻² distance.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct DualDistance {
    pub d1: Rational,
    pub d2: Rational,
}

impl DualDistance {
    pub fn new(d1: impl Into<Rational>, d2: impl Into<Rational>) -> DualDistance {
        DualDistance {
            d1: d1.into(),
            d2: d2.into(),
        }
    }

    pub fn unit() -> DualDistance {
        DualDistance::new(1, 0)
    }
}

impl fmt::Display for DualDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.d1, self.d2)
    }
}

/// The value `⟨d1, d2⟩` of the 𝕎² distance, in light-cone coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct DoubleDistance {
    pub d1: Rational,
    pub d2: Rational,
}

impl DoubleDistance {
    pub fn new(d1: impl Into<Rational>, d2: impl Into<Rational>) -> DoubleDistance {
        DoubleDistance {
            d1: d1.into(),
            d2: d2.into(),
        }
    }
}

impl fmt::Display for DoubleDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.d1, self.d2)
    }
}

/// Squared Euclidean distance in ℝ².
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SquaredDistance(pub Rational);

impl fmt::Display for SquaredDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub trait Distance: Clone + Eq + Ord + Hash + Send + Sync + fmt::Debug + fmt::Display {
    const PLANE: Plane;

    fn is_zero(&self) -> bool;

    /// Whether some pair of points can realize this value.
    fn is_attainable(&self) -> bool;

    /// `(d1, d2)`; ℝ² distances report `d2 = 0`.
    fn components(&self) -> (Rational, Rational);

    fn from_components(d1: Rational, d2: Rational) -> Option<Self>;
}

impl Distance for DualDistance {
    const PLANE: Plane = Plane::Dual;

    fn is_zero(&self) -> bool {
        self.d1.is_zero() && self.d2.is_zero()
    }

    fn is_attainable(&self) -> bool {
        !self.d1.is_negative() && (!self.d1.is_zero() || self.d2.is_zero())
    }

    fn components(&self) -> (Rational, Rational) {
        (self.d1.clone(), self.d2.clone())
    }

    fn from_components(d1: Rational, d2: Rational) -> Option<Self> {
        Some(DualDistance { d1, d2 })
    }
}

impl Distance for DoubleDistance {
    const PLANE: Plane = Plane::Double;

    fn is_zero(&self) -> bool {
        self.d1.is_zero() && self.d2.is_zero()
    }

    fn is_attainable(&self) -> bool {
        !self.d1.is_negative() && !self.d2.is_negative()
    }

    fn components(&self) -> (Rational, Rational) {
        (self.d1.clone(), self.d2.clone())
    }

    fn from_components(d1: Rational, d2: Rational) -> Option<Self> {
        Some(DoubleDistance { d1, d2 })
    }
}

impl Distance for SquaredDistance {
    const PLANE: Plane = Plane::Real;

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_attainable(&self) -> bool {
        !self.0.is_negative()
    }

    fn components(&self) -> (Rational, Rational) {
        (self.0.clone(), Rational::zero())
    }

    fn from_components(d1: Rational, d2: Rational) -> Option<Self> {
        d2.is_zero().then_some(SquaredDistance(d1))
    }
}

/// `ρ_𝔻²(p, q) = [(Δx)² + (Δz)², 2(ΔxΔy + ΔzΔw)]`.
pub fn rho_dual(p: &DualPoint, q: &DualPoint) -> DualDistance {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    let dz = &p.z - &q.z;
    let dw = &p.w - &q.w;
    let d1 = dx.square() + dz.square();
    let cross = &dx * &dy + &dz * &dw;
    DualDistance {
        d1,
        d2: &cross + &cross,
    }
}

/// `ρ_𝕎²(p, q) = ⟨(Δx)² + (Δz)², (Δy)² + (Δw)²⟩` in light-cone coordinates.
pub fn rho_double(p: &DoublePoint, q: &DoublePoint) -> DoubleDistance {
    DoubleDistance {
        d1: (&p.x - &q.x).square() + (&p.z - &q.z).square(),
        d2: (&p.y - &q.y).square() + (&p.w - &q.w).square(),
    }
}

/// The 𝕎² distance evaluated in standard coordinates `(X, Y, Z, W)`:
/// `(ΔX+ΔYj)² + (ΔZ+ΔWj)²`, returned as the standard pair `(S, T)` of
/// `S + Tj`.
pub fn rho_double_standard(p: &[Rational; 4], q: &[Rational; 4]) -> (Rational, Rational) {
    let d: Vec<Rational> = p.iter().zip(q).map(|(a, b)| a - b).collect();
    let s = d.iter().map(Rational::square).sum();
    let cross = &d[0] * &d[1] + &d[2] * &d[3];
    (s, &cross + &cross)
}

pub fn rho_real(p: &RealPoint, q: &RealPoint) -> SquaredDistance {
    SquaredDistance(p.dist_sq(q))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DistanceType {
    A,
    B,
    C,
    Zero,
}

impl fmt::Display for DistanceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DistanceType::A => "A",
            DistanceType::B => "B",
            DistanceType::C => "C",
            DistanceType::Zero => "Zero",
        };
        f.write_str(s)
    }
}

pub fn distance_type(d: &DoubleDistance) -> Result<DistanceType> {
    if !d.is_attainable() {
        return Err(Error::UnattainableDistance(d.to_string()));
    }
    Ok(match (d.d1.is_positive(), d.d2.is_positive()) {
        (true, true) => DistanceType::A,
        (false, true) => DistanceType::B,
        (true, false) => DistanceType::C,
        (false, false) => DistanceType::Zero,
    })
}

/// A point of one of the three planes.
pub trait PlanePoint: Clone + Eq + Ord + Hash + Send + Sync + fmt::Debug + fmt::Display {
    type Distance: Distance;
    const PLANE: Plane;

    fn distance(&self, other: &Self) -> Self::Distance;

    /// The `(x, z)` projection; ℝ² points are their own real part.
    fn real_part(&self) -> RealPoint;

    fn coords(&self) -> Vec<&Rational>;

    /// Builds a point from exactly `PLANE.arity()` coordinates.
    fn from_coords(coords: Vec<Rational>) -> Option<Self>;
}

impl PlanePoint for DualPoint {
    type Distance = DualDistance;
    const PLANE: Plane = Plane::Dual;

    fn distance(&self, other: &Self) -> DualDistance {
        rho_dual(self, other)
    }

    fn real_part(&self) -> RealPoint {
        DualPoint::real_part(self)
    }

    fn coords(&self) -> Vec<&Rational> {
        vec![&self.x, &self.y, &self.z, &self.w]
    }

    fn from_coords(coords: Vec<Rational>) -> Option<Self> {
        let [x, y, z, w]: [Rational; 4] = coords.try_into().ok()?;
        Some(DualPoint { x, y, z, w })
    }
}

impl PlanePoint for DoublePoint {
    type Distance = DoubleDistance;
    const PLANE: Plane = Plane::Double;

    fn distance(&self, other: &Self) -> DoubleDistance {
        rho_double(self, other)
    }

    fn real_part(&self) -> RealPoint {
        DoublePoint::real_part(self)
    }

    fn coords(&self) -> Vec<&Rational> {
        vec![&self.x, &self.y, &self.z, &self.w]
    }

    fn from_coords(coords: Vec<Rational>) -> Option<Self> {
        let [x, y, z, w]: [Rational; 4] = coords.try_into().ok()?;
        Some(DoublePoint { x, y, z, w })
    }
}

impl PlanePoint for RealPoint {
    type Distance = SquaredDistance;
    const PLANE: Plane = Plane::Real;

    fn distance(&self, other: &Self) -> SquaredDistance {
        rho_real(self, other)
    }

    fn real_part(&self) -> RealPoint {
        self.clone()
    }

    fn coords(&self) -> Vec<&Rational> {
        vec![&self.x, &self.z]
    }

    fn from_coords(coords: Vec<Rational>) -> Option<Self> {
        let [x, z]: [Rational; 2] = coords.try_into().ok()?;
        Some(RealPoint { x, z })
    }
}

/// A finite set of points in a single plane.
///
/// Construction removes duplicates, keeping the first occurrence of each
/// point, and records how many inputs were collapsed.
#[derive(Clone, Debug)]
pub struct PointSet<P> {
    points: Vec<P>,
    collapsed: usize,
}

impl<P: PlanePoint> PointSet<P> {
    pub fn new(mut points: Vec<P>) -> PointSet<P> {
        let n = points.len();
        let mut order: Vec<u32> = (0..n as u32).collect();
        // Stable, so equal points stay in index order and the first survives.
        order.sort_by(|&a, &b| points[a as usize].cmp(&points[b as usize]));
        let mut keep = vec![true; n];
        for pair in order.windows(2) {
            if points[pair[0] as usize] == points[pair[1] as usize] {
                keep[pair[1] as usize] = false;
            }
        }
        drop(order);
        let mut flags = keep.iter();
        points.retain(|_| *flags.next().unwrap());
        PointSet {
            collapsed: n - points.len(),
            points,
        }
    }

    pub fn plane(&self) -> Plane {
        P::PLANE
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn into_points(self) -> Vec<P> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of duplicate inputs dropped at construction.
    pub fn collapsed(&self) -> usize {
        self.collapsed
    }

    pub fn iter(&self) -> std::slice::Iter<'_, P> {
        self.points.iter()
    }

    /// Indices of the points grouped by real part, groups in order of first
    /// appearance.
    pub fn real_groups(&self) -> Vec<Vec<usize>> {
        group_indices(&self.points, P::real_part)
    }

    pub fn real_parts(&self) -> Vec<RealPoint> {
        self.points.iter().map(P::real_part).collect()
    }
}

impl<P: PlanePoint> PartialEq for PointSet<P> {
    /// Same points in the same order.
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl<P: PlanePoint> Eq for PointSet<P> {}

impl<P: PlanePoint> FromIterator<P> for PointSet<P> {
    fn from_iter<I: IntoIterator<Item = P>>(iter: I) -> Self {
        PointSet::new(iter.into_iter().collect())
    }
}

impl<'a, P> IntoIterator for &'a PointSet<P> {
    type Item = &'a P;
    type IntoIter = std::slice::Iter<'a, P>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

pub(crate) fn group_indices<T, K, F>(items: &[T], key: F) -> Vec<Vec<usize>>
where
    K: Hash + Eq,
    F: Fn(&T) -> K,
{
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let next = groups.len();
        let g = *slot.entry(key(item)).or_insert(next);
        if g == next {
            groups.push(Vec::new());
        }
        groups[g].push(i);
    }
    groups
}

fn largest_group<T, K: Hash + Eq>(items: &[T], key: impl Fn(&T) -> K) -> Result<usize> {
    group_indices(items, key)
        .iter()
        .map(Vec::len)
        .max()
        .ok_or(Error::EmptySet)
}

/// Largest number of points sharing one real part.
pub fn multiplicity(set: &PointSet<DualPoint>) -> Result<usize> {
    largest_group(set.points(), DualPoint::real_part)
}

/// Largest number of points lying on one line inside one imaginary plane.
pub fn secondary_multiplicity(set: &PointSet<DualPoint>) -> Result<usize> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let best = set
        .real_groups()
        .iter()
        .map(|g| {
            let imag: Vec<RealPoint> = g
                .iter()
                .map(|&i| set.points()[i].imaginary_part())
                .collect();
            max_collinear(&imag)
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

pub fn real_multiplicity(set: &PointSet<DoublePoint>) -> Result<usize> {
    largest_group(set.points(), DoublePoint::real_part)
}

pub fn imaginary_multiplicity(set: &PointSet<DoublePoint>) -> Result<usize> {
    largest_group(set.points(), DoublePoint::imaginary_part)
}

pub fn minimal_multiplicity(set: &PointSet<DoublePoint>) -> Result<usize> {
    Ok(real_multiplicity(set)?.min(imaginary_multiplicity(set)?))
}

#[derive(Hash, PartialEq, Eq)]
enum Direction {
    Vertical,
    Slope(Rational),
}

/// Size of the largest collinear subset of `points`, which must be
/// pairwise distinct.
///
/// Two displacement vectors from a common anchor are parallel exactly when
/// their reduced slopes coincide, which is the vanishing of their 2×2
/// determinant.
pub fn max_collinear(points: &[RealPoint]) -> usize {
    let n = points.len();
    if n <= 2 {
        return n;
    }
    let mut best = 2;
    let mut by_direction: HashMap<Direction, usize> = HashMap::new();
    for (i, anchor) in points.iter().enumerate() {
        // Lines through earlier anchors were already fully counted.
        if n - i <= best {
            break;
        }
        by_direction.clear();
        for other in &points[i + 1..] {
            let d = other.sub(anchor);
            let dir = if d.x.is_zero() {
                Direction::Vertical
            } else {
                Direction::Slope(&d.z / &d.x)
            };
            let count = by_direction.entry(dir).or_insert(0);
            *count += 1;
            best = best.max(*count + 1);
        }
    }
    best
}

/// Multiplicity statistics of a point set. Fields not defined for the set's
/// plane are `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicityReport {
    pub plane: Plane,
    pub n: usize,
    pub multiplicity: Option<usize>,
    pub secondary_multiplicity: Option<usize>,
    pub real_multiplicity: Option<usize>,
    pub imaginary_multiplicity: Option<usize>,
    pub minimal_multiplicity: Option<usize>,
    /// `log_n` of the multiplicity (𝔻²) or minimal multiplicity (𝕎²).
    pub lambda: Option<f64>,
    /// `log_n` of the secondary multiplicity (𝔻² only).
    pub nu: Option<f64>,
}

fn log_base_n(n: usize, k: usize) -> f64 {
    if n <= 1 {
        0.0
    } else {
        (k as f64).ln() / (n as f64).ln()
    }
}

impl MultiplicityReport {
    pub fn for_dual(set: &PointSet<DualPoint>) -> Result<MultiplicityReport> {
        let k = multiplicity(set)?;
        let s = secondary_multiplicity(set)?;
        let n = set.len();
        Ok(MultiplicityReport {
            plane: Plane::Dual,
            n,
            multiplicity: Some(k),
            secondary_multiplicity: Some(s),
            real_multiplicity: None,
            imaginary_multiplicity: None,
            minimal_multiplicity: None,
            lambda: Some(log_base_n(n, k)),
            nu: Some(log_base_n(n, s)),
        })
    }

    pub fn for_double(set: &PointSet<DoublePoint>) -> Result<MultiplicityReport> {
        let k1 = real_multiplicity(set)?;
        let k2 = imaginary_multiplicity(set)?;
        let n = set.len();
        Ok(MultiplicityReport {
            plane: Plane::Double,
            n,
            multiplicity: None,
            secondary_multiplicity: None,
            real_multiplicity: Some(k1),
            imaginary_multiplicity: Some(k2),
            minimal_multiplicity: Some(k1.min(k2)),
            lambda: Some(log_base_n(n, k1.min(k2))),
            nu: None,
        })
    }

    pub fn for_real(set: &PointSet<RealPoint>) -> Result<MultiplicityReport> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(MultiplicityReport {
            plane: Plane::Real,
            n: set.len(),
            multiplicity: None,
            secondary_multiplicity: None,
            real_multiplicity: None,
            imaginary_multiplicity: None,
            minimal_multiplicity: None,
            lambda: None,
            nu: None,
        })
    }
}

impl fmt::Display for MultiplicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "plane={}", self.plane)?;
        write!(f, "n={}", self.n)?;
        let ints = [
            ("multiplicity", self.multiplicity),
            ("secondary_multiplicity", self.secondary_multiplicity),
            ("real_multiplicity", self.real_multiplicity),
            ("imaginary_multiplicity", self.imaginary_multiplicity),
            ("minimal_multiplicity", self.minimal_multiplicity),
        ];
        for (name, value) in ints {
            if let Some(v) = value {
                write!(f, "\n{name}={v}")?;
            }
        }
        for (name, value) in [("lambda", self.lambda), ("nu", self.nu)] {
            if let Some(v) = value {
                write!(f, "\n{name}={v:.6}")?;
            }
        }
        Ok(())
    }
}

/// A point set whose plane is known only at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyPointSet {
    Dual(PointSet<DualPoint>),
    Double(PointSet<DoublePoint>),
    Real(PointSet<RealPoint>),
}

impl AnyPointSet {
    pub fn plane(&self) -> Plane {
        match self {
            AnyPointSet::Dual(_) => Plane::Dual,
            AnyPointSet::Double(_) => Plane::Double,
            AnyPointSet::Real(_) => Plane::Real,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyPointSet::Dual(s) => s.len(),
            AnyPointSet::Double(s) => s.len(),
            AnyPointSet::Real(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn collapsed(&self) -> usize {
        match self {
            AnyPointSet::Dual(s) => s.collapsed(),
            AnyPointSet::Double(s) => s.collapsed(),
            AnyPointSet::Real(s) => s.collapsed(),
        }
    }

    pub fn analyze(&self) -> Result<MultiplicityReport> {
        match self {
            AnyPointSet::Dual(s) => MultiplicityReport::for_dual(s),
            AnyPointSet::Double(s) => MultiplicityReport::for_double(s),
            AnyPointSet::Real(s) => MultiplicityReport::for_real(s),
        }
    }

    pub fn as_dual(&self) -> Result<&PointSet<DualPoint>> {
        match self {
            AnyPointSet::Dual(s) => Ok(s),
            other => Err(Error::PlaneMismatch {
                expected: Plane::Dual,
                found: other.plane(),
            }),
        }
    }

    pub fn as_double(&self) -> Result<&PointSet<DoublePoint>> {
        match self {
            AnyPointSet::Double(s) => Ok(s),
            other => Err(Error::PlaneMismatch {
                expected: Plane::Double,
                found: other.plane(),
            }),
        }
    }

    pub fn as_real(&self) -> Result<&PointSet<RealPoint>> {
        match self {
            AnyPointSet::Real(s) => Ok(s),
            other => Err(Error::PlaneMismatch {
                expected: Plane::Real,
                found: other.plane(),
            }),
        }
    }
}

impl From<PointSet<DualPoint>> for AnyPointSet {
    fn from(s: PointSet<DualPoint>) -> Self {
        AnyPointSet::Dual(s)
    }
}

impl From<PointSet<DoublePoint>> for AnyPointSet {
    fn from(s: PointSet<DoublePoint>) -> Self {
        AnyPointSet::Double(s)
    }
}

impl From<PointSet<RealPoint>> for AnyPointSet {
    fn from(s: PointSet<RealPoint>) -> Self {
        AnyPointSet::Real(s)
    }
}
