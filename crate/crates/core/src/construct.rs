//! Generators for the extremal configurations, each with exactly
//! predictable statistics.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::point::{AnyPointSet, DoublePoint, DualPoint, Plane, PointSet, RealPoint};
use crate::rational::Rational;

fn at_least_one(name: &str, value: i64) -> Result<()> {
    if value < 1 {
        return Err(Error::InvalidParameter(format!(
            "{name} must be at least 1, got {value}"
        )));
    }
    Ok(())
}

/// `{[a, 0, 0, b] : 1 ≤ a ≤ A, 1 ≤ b ≤ B}`: `AB` points of multiplicity `B`
/// spanning `(A − 1)·B²` unit distances and `A` distinct distances.
pub fn mult_construction(a: i64, b: i64) -> Result<PointSet<DualPoint>> {
    at_least_one("A", a)?;
    at_least_one("B", b)?;
    let mut pts = Vec::with_capacity((a * b) as usize);
    for i in 1..=a {
        for j in 1..=b {
            pts.push(DualPoint::new(i, 0, 0, j));
        }
    }
    Ok(PointSet::new(pts))
}

/// `(p_x, p_z) ↦ [p_x, 0, p_z, 0]`, a multiplicity-one copy of a real set.
pub fn embed_real(set: &PointSet<RealPoint>) -> PointSet<DualPoint> {
    set.iter()
        .map(|p| DualPoint {
            x: p.x.clone(),
            y: Rational::zero(),
            z: p.z.clone(),
            w: Rational::zero(),
        })
        .collect()
}

/// `k` rational points `((1 − t²)/(1 + t²), 2t/(1 + t²))`, `t = 0, …, k−1`,
/// on the unit circle.
pub fn rational_circle_points(k: i64) -> Result<PointSet<RealPoint>> {
    at_least_one("k", k)?;
    Ok((0..k)
        .map(|t| {
            let t2 = t * t;
            let den = 1 + t2;
            RealPoint::new(Rational::frac(1 - t2, den), Rational::frac(2 * t, den))
        })
        .collect())
}

/// Two orthogonal families on unit circles: `⟨x, 0, z, 0⟩` for `k1` circle
/// points and `⟨0, y, 0, w⟩` for `k2`. Every cross pair is at `⟨1, 1⟩`.
pub fn lenz(k1: i64, k2: i64) -> Result<PointSet<DoublePoint>> {
    let first = rational_circle_points(k1)?;
    let second = rational_circle_points(k2)?;
    let zero = Rational::zero;
    let pts = first
        .iter()
        .map(|c| DoublePoint {
            x: c.x.clone(),
            y: zero(),
            z: c.z.clone(),
            w: zero(),
        })
        .chain(second.iter().map(|c| DoublePoint {
            x: zero(),
            y: c.x.clone(),
            z: zero(),
            w: c.z.clone(),
        }))
        .collect();
    Ok(PointSet::new(pts))
}

/// All `⟨x, y, z, w⟩` with `(x, z) ∈ real` and `(y, w) ∈ imag`. Pairs at
/// `⟨0, 1⟩` share a real part and have imaginary parts at unit distance.
pub fn type_b_product(
    real: &PointSet<RealPoint>,
    imag: &PointSet<RealPoint>,
) -> Result<PointSet<DoublePoint>> {
    if real.is_empty() || imag.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(product(real, imag))
}

fn product(real: &PointSet<RealPoint>, imag: &PointSet<RealPoint>) -> PointSet<DoublePoint> {
    let mut pts = Vec::with_capacity(real.len() * imag.len());
    for r in real {
        for i in imag {
            pts.push(DoublePoint {
                x: r.x.clone(),
                y: i.x.clone(),
                z: r.z.clone(),
                w: i.z.clone(),
            });
        }
    }
    PointSet::new(pts)
}

/// `{⟨x, 0, z, 0⟩ : (x, z) ∈ p1} ∪ {⟨x, y, z, w⟩ : (x, z) ∈ p2, (y, w) ∈ C_k}`
/// with `C_k` the first `k` rational circle points. Each unit distance
/// between `p1` and `p2` yields `k` pairs at `⟨1, 1⟩`.
pub fn type_a_construction(
    p1: &PointSet<RealPoint>,
    p2: &PointSet<RealPoint>,
    k: i64,
) -> Result<PointSet<DoublePoint>> {
    if p1.is_empty() || p2.is_empty() {
        return Err(Error::EmptySet);
    }
    let circle = rational_circle_points(k)?;
    let mut pts: Vec<DoublePoint> = p1
        .iter()
        .map(|p| DoublePoint {
            x: p.x.clone(),
            y: Rational::zero(),
            z: p.z.clone(),
            w: Rational::zero(),
        })
        .collect();
    pts.extend(product(p2, &circle).into_points());
    Ok(PointSet::new(pts))
}

/// `{0, …, k−1}²`.
pub fn integer_grid(k: i64) -> Result<PointSet<RealPoint>> {
    at_least_one("k", k)?;
    Ok((0..k)
        .flat_map(|x| (0..k).map(move |z| RealPoint::new(x, z)))
        .collect())
}

/// The product set `P' × P'` in 𝕎², of size `|P'|²`.
pub fn grid_product(base: &PointSet<RealPoint>) -> Result<PointSet<DoublePoint>> {
    if base.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(product(base, base))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ConstructionName {
    MultConstruction,
    EmbedReal,
    RationalCirclePoints,
    Lenz,
    TypeBProduct,
    TypeAConstruction,
    GridProduct,
    IntegerGrid,
}

impl ConstructionName {
    pub const ALL: [ConstructionName; 8] = [
        ConstructionName::MultConstruction,
        ConstructionName::EmbedReal,
        ConstructionName::RationalCirclePoints,
        ConstructionName::Lenz,
        ConstructionName::TypeBProduct,
        ConstructionName::TypeAConstruction,
        ConstructionName::GridProduct,
        ConstructionName::IntegerGrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionName::MultConstruction => "mult_construction",
            ConstructionName::EmbedReal => "embed_real",
            ConstructionName::RationalCirclePoints => "rational_circle_points",
            ConstructionName::Lenz => "lenz",
            ConstructionName::TypeBProduct => "typeB_product",
            ConstructionName::TypeAConstruction => "typeA_construction",
            ConstructionName::GridProduct => "grid_product",
            ConstructionName::IntegerGrid => "integer_grid",
        }
    }

    /// Plane of the generated set.
    pub fn plane(self) -> Plane {
        match self {
            ConstructionName::MultConstruction | ConstructionName::EmbedReal => Plane::Dual,
            ConstructionName::RationalCirclePoints | ConstructionName::IntegerGrid => Plane::Real,
            ConstructionName::Lenz
            | ConstructionName::TypeBProduct
            | ConstructionName::TypeAConstruction
            | ConstructionName::GridProduct => Plane::Double,
        }
    }

    /// `(integer parameters, real-plane input sets)` the generator takes.
    pub fn signature(self) -> (usize, usize) {
        match self {
            ConstructionName::MultConstruction | ConstructionName::Lenz => (2, 0),
            ConstructionName::RationalCirclePoints | ConstructionName::IntegerGrid => (1, 0),
            ConstructionName::EmbedReal => (0, 1),
            ConstructionName::TypeBProduct => (0, 2),
            ConstructionName::TypeAConstruction => (1, 2),
            // Either `k` (base is the k×k grid) or an explicit base set.
            ConstructionName::GridProduct => (1, 0),
        }
    }
}

impl fmt::Display for ConstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown construction `{s}`")))
    }
}

/// A named construction with its integer parameters and input sets.
#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    pub name: ConstructionName,
    pub params: Vec<i64>,
    pub inputs: Vec<PointSet<RealPoint>>,
}

impl ConstructionSpec {
    pub fn new(name: ConstructionName, params: Vec<i64>) -> ConstructionSpec {
        ConstructionSpec {
            name,
            params,
            inputs: Vec::new(),
        }
    }

    pub fn with_inputs(mut self, inputs: Vec<PointSet<RealPoint>>) -> ConstructionSpec {
        self.inputs = inputs;
        self
    }

    fn check_shape(&self) -> Result<()> {
        let (n_params, n_inputs) = self.name.signature();
        let grid_from_set = self.name == ConstructionName::GridProduct
            && self.params.is_empty()
            && self.inputs.len() == 1;
        if grid_from_set || (self.params.len() == n_params && self.inputs.len() == n_inputs) {
            return Ok(());
        }
        Err(Error::InvalidParameter(format!(
            "{} takes {n_params} integer parameter(s) and {n_inputs} input set(s), got {} and {}",
            self.name,
            self.params.len(),
            self.inputs.len()
        )))
    }

    /// Cardinality of the generated set.
    pub fn predicted_n(&self) -> Result<usize> {
        self.check_shape()?;
        let p = &self.params;
        let len = |i: usize| self.inputs[i].len();
        Ok(match self.name {
            ConstructionName::MultConstruction => (p[0] * p[1]) as usize,
            ConstructionName::EmbedReal => len(0),
            ConstructionName::RationalCirclePoints => p[0] as usize,
            ConstructionName::Lenz => (p[0] + p[1]) as usize,
            ConstructionName::TypeBProduct => len(0) * len(1),
            ConstructionName::TypeAConstruction => len(0) + len(1) * p[0] as usize,
            ConstructionName::GridProduct if p.is_empty() => len(0) * len(0),
            ConstructionName::GridProduct => (p[0] * p[0] * p[0] * p[0]) as usize,
            ConstructionName::IntegerGrid => (p[0] * p[0]) as usize,
        })
    }

    pub fn generate(&self) -> Result<AnyPointSet> {
        self.check_shape()?;
        let p = &self.params;
        let set: AnyPointSet = match self.name {
            ConstructionName::MultConstruction => mult_construction(p[0], p[1])?.into(),
            ConstructionName::EmbedReal => embed_real(&self.inputs[0]).into(),
            ConstructionName::RationalCirclePoints => rational_circle_points(p[0])?.into(),
            ConstructionName::Lenz => lenz(p[0], p[1])?.into(),
            ConstructionName::TypeBProduct => {
                type_b_product(&self.inputs[0], &self.inputs[1])?.into()
            }
            ConstructionName::TypeAConstruction => {
                type_a_construction(&self.inputs[0], &self.inputs[1], p[0])?.into()
            }
            ConstructionName::GridProduct if p.is_empty() => grid_product(&self.inputs[0])?.into(),
            ConstructionName::GridProduct => grid_product(&integer_grid(p[0])?)?.into(),
            ConstructionName::IntegerGrid => integer_grid(p[0])?.into(),
        };
        Ok(set)
    }
}
