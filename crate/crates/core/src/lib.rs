//! Exact counting of repeated and distinct distances in the dual plane 𝔻²
//! and the double (split-complex) plane 𝕎², together with the constructions,
//! distance-equivalence transforms and incidence tools used to study them.
//!
//! All arithmetic is over ℚ; nothing is rounded.

pub mod algebra;
pub mod cli;
pub mod construct;
pub mod counting;
pub mod error;
pub mod experiment;
pub mod incidence;
pub mod io;
pub mod point;
pub mod rational;
pub mod transform;

pub use algebra::{Double, Dual};
pub use construct::{ConstructionName, ConstructionSpec};
pub use counting::{
    bipartite_distinct, count_pairs_at, count_pairs_at_brute_force, distinct_distances, histogram,
    histogram_brute_force, AnyDistance, DistanceHistogram,
};
pub use error::{Error, Result};
pub use experiment::{fit_exponent, run_experiment, ExperimentConfig, ExperimentRow, Statistic};
pub use incidence::{dyadic_classify, incidences, rich_lines, DyadicCell, Line};
pub use io::{parse_pointset, serialize_pointset};
pub use point::{
    AnyPointSet, DistanceType, DoubleDistance, DoublePoint, DualDistance, DualPoint,
    MultiplicityReport, Plane, PlanePoint, PointSet, RealPoint, SquaredDistance,
};
pub use rational::Rational;
pub use transform::{TransformKind, TransformSpec};
