//! Distance-equivalence bijections.
//!
//! Each map sends a point set to a new one of the same size and moves every
//! pairwise distance by a fixed rule, so counts of one distance in the
//! original equal counts of the image distance in the result. Square-root
//! scalings are parametrized by a rational `r` with `s = r²`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::point::{AnyPointSet, DoubleDistance, DoublePoint, DualDistance, DualPoint, PointSet};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TransformKind {
    ShearDual,
    ImaginaryScaleDual,
    RealScaleDual,
    DoubleScaleReal,
    DoubleScaleImaginary,
}

impl TransformKind {
    pub const ALL: [TransformKind; 5] = [
        TransformKind::ShearDual,
        TransformKind::ImaginaryScaleDual,
        TransformKind::RealScaleDual,
        TransformKind::DoubleScaleReal,
        TransformKind::DoubleScaleImaginary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::ShearDual => "shear_dual",
            TransformKind::ImaginaryScaleDual => "imaginary_scale_dual",
            TransformKind::RealScaleDual => "real_scale_dual",
            TransformKind::DoubleScaleReal => "double_scale_real",
            TransformKind::DoubleScaleImaginary => "double_scale_imaginary",
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TransformKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown transform `{s}`")))
    }
}

/// A transform together with its parameter, validated on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransformSpec {
    kind: TransformKind,
    parameter: Rational,
}

impl TransformSpec {
    pub fn new(kind: TransformKind, parameter: Rational) -> Result<TransformSpec> {
        match kind {
            TransformKind::ShearDual => {}
            TransformKind::ImaginaryScaleDual => {
                if parameter.is_zero() {
                    return Err(Error::InvalidParameter(
                        "imaginary scale factor must be nonzero".into(),
                    ));
                }
            }
            TransformKind::RealScaleDual
            | TransformKind::DoubleScaleReal
            | TransformKind::DoubleScaleImaginary => {
                if !parameter.is_positive() {
                    return Err(Error::InvalidParameter(format!(
                        "{kind} needs a positive parameter, got {parameter}"
                    )));
                }
            }
        }
        Ok(TransformSpec { kind, parameter })
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn parameter(&self) -> &Rational {
        &self.parameter
    }

    pub fn apply(&self, set: &AnyPointSet) -> Result<AnyPointSet> {
        let c = &self.parameter;
        Ok(match self.kind {
            TransformKind::ShearDual => shear_dual(set.as_dual()?, c).into(),
            TransformKind::ImaginaryScaleDual => imaginary_scale_dual(set.as_dual()?, c)?.into(),
            TransformKind::RealScaleDual => real_scale_dual(set.as_dual()?, c)?.into(),
            TransformKind::DoubleScaleReal => double_scale_real(set.as_double()?, c)?.into(),
            TransformKind::DoubleScaleImaginary => {
                double_scale_imaginary(set.as_double()?, c)?.into()
            }
        })
    }

    /// Image of a 𝔻² distance; `None` for the double-plane transforms.
    pub fn map_dual_distance(&self, d: &DualDistance) -> Option<DualDistance> {
        match self.kind {
            TransformKind::ShearDual => Some(shear_distance(d, &self.parameter)),
            TransformKind::ImaginaryScaleDual => Some(DualDistance {
                d1: d.d1.clone(),
                d2: &d.d2 * &self.parameter,
            }),
            TransformKind::RealScaleDual => Some(DualDistance {
                d1: &d.d1 * self.parameter.square(),
                d2: d.d2.clone(),
            }),
            _ => None,
        }
    }

    /// Image of a 𝕎² distance; `None` for the dual-plane transforms.
    pub fn map_double_distance(&self, d: &DoubleDistance) -> Option<DoubleDistance> {
        let s = self.parameter.square();
        match self.kind {
            TransformKind::DoubleScaleReal => Some(DoubleDistance {
                d1: &d.d1 * &s,
                d2: d.d2.clone(),
            }),
            TransformKind::DoubleScaleImaginary => Some(DoubleDistance {
                d1: d.d1.clone(),
                d2: &d.d2 * &s,
            }),
            _ => None,
        }
    }
}

fn shear_distance(d: &DualDistance, c: &Rational) -> DualDistance {
    let shift = &d.d1 * c;
    DualDistance {
        d1: d.d1.clone(),
        d2: &d.d2 - &(&shift + &shift),
    }
}

fn map_points<P, Q>(set: &PointSet<P>, f: impl Fn(&P) -> Q) -> PointSet<Q>
where
    P: crate::point::PlanePoint,
    Q: crate::point::PlanePoint,
{
    let out = PointSet::new(set.iter().map(f).collect());
    debug_assert_eq!(out.len(), set.len(), "transform must be injective");
    out
}

/// `[x, y, z, w] ↦ [x, y − cx, z, w − cz]`; distances `[d1, d2] ↦ [d1, d2 − 2c·d1]`.
pub fn shear_dual(set: &PointSet<DualPoint>, c: &Rational) -> PointSet<DualPoint> {
    map_points(set, |p| DualPoint {
        x: p.x.clone(),
        y: &p.y - &(c * &p.x),
        z: p.z.clone(),
        w: &p.w - &(c * &p.z),
    })
}

/// `[x, y, z, w] ↦ [x, sy, z, sw]`; distances `[d1, d2] ↦ [d1, s·d2]`.
pub fn imaginary_scale_dual(
    set: &PointSet<DualPoint>,
    s: &Rational,
) -> Result<PointSet<DualPoint>> {
    TransformSpec::new(TransformKind::ImaginaryScaleDual, s.clone())?;
    Ok(map_points(set, |p| DualPoint {
        x: p.x.clone(),
        y: &p.y * s,
        z: p.z.clone(),
        w: &p.w * s,
    }))
}

/// `[x, y, z, w] ↦ [rx, y/r, rz, w/r]`; distances `[d1, d2] ↦ [r²·d1, d2]`.
pub fn real_scale_dual(set: &PointSet<DualPoint>, r: &Rational) -> Result<PointSet<DualPoint>> {
    TransformSpec::new(TransformKind::RealScaleDual, r.clone())?;
    let inv = r.recip().expect("positive");
    Ok(map_points(set, |p| DualPoint {
        x: &p.x * r,
        y: &p.y * &inv,
        z: &p.z * r,
        w: &p.w * &inv,
    }))
}

/// `⟨x, y, z, w⟩ ↦ ⟨rx, y, rz, w⟩`; distances `⟨d1, d2⟩ ↦ ⟨r²·d1, d2⟩`.
pub fn double_scale_real(
    set: &PointSet<DoublePoint>,
    r: &Rational,
) -> Result<PointSet<DoublePoint>> {
    TransformSpec::new(TransformKind::DoubleScaleReal, r.clone())?;
    Ok(map_points(set, |p| DoublePoint {
        x: &p.x * r,
        y: p.y.clone(),
        z: &p.z * r,
        w: p.w.clone(),
    }))
}

/// `⟨x, y, z, w⟩ ↦ ⟨x, ry, z, rw⟩`; distances `⟨d1, d2⟩ ↦ ⟨d1, r²·d2⟩`.
pub fn double_scale_imaginary(
    set: &PointSet<DoublePoint>,
    r: &Rational,
) -> Result<PointSet<DoublePoint>> {
    TransformSpec::new(TransformKind::DoubleScaleImaginary, r.clone())?;
    Ok(map_points(set, |p| DoublePoint {
        x: p.x.clone(),
        y: &p.y * r,
        z: p.z.clone(),
        w: &p.w * r,
    }))
}
