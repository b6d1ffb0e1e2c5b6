//! Python bindings. Coordinates are accepted as anything whose `str()` is a
//! rational literal (`int`, `str`, `fractions.Fraction`) and returned as
//! `fractions.Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use hypercount::construct::ConstructionSpec;
use hypercount::counting::{
    bipartite_distinct_any, count_pairs_at_any, distinct_count_any, histogram, AnyDistance,
};
use hypercount::point::{rho_double, rho_dual, Distance, PlanePoint};
use hypercount::{
    AnyPointSet, ConstructionName, DoublePoint, DualPoint, ExperimentConfig, ExperimentRow, Plane,
    PointSet, Rational, RealPoint, Statistic, TransformKind, TransformSpec,
};

fn value_error(e: hypercount::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    obj.str()?
        .to_cow()?
        .parse::<Rational>()
        .map_err(value_error)
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer(), r.denom()))
}

fn pair<'py>(py: Python<'py>, a: &Rational, b: &Rational) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, [fraction(py, a)?, fraction(py, b)?])
}

fn coords_of(point: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    point.iter().map(rational).collect()
}

fn build<P: PlanePoint>(points: &[Vec<Bound<'_, PyAny>>]) -> PyResult<PointSet<P>> {
    let arity = P::PLANE.arity();
    let pts = points
        .iter()
        .map(|p| {
            let coords = coords_of(p)?;
            P::from_coords(coords).ok_or_else(|| {
                PyValueError::new_err(format!("{} points have {arity} coordinates", P::PLANE))
            })
        })
        .collect::<PyResult<Vec<_>>>()?;
    Ok(PointSet::new(pts))
}

type LineCoefficients = (Py<PyAny>, Py<PyAny>, Py<PyAny>);

/// An exact point set in the dual, double or real plane.
#[pyclass(
    name = "PointSet",
    module = "pyhypercount",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyPointSet {
    inner: AnyPointSet,
}

impl From<AnyPointSet> for PyPointSet {
    fn from(inner: AnyPointSet) -> Self {
        PyPointSet { inner }
    }
}

fn histogram_dict<'py, P>(py: Python<'py>, set: &PointSet<P>) -> PyResult<Bound<'py, PyDict>>
where
    P: hypercount::counting::PairCounting,
{
    let h = py.detach(|| histogram(set)).map_err(value_error)?;
    let out = PyDict::new(py);
    for (d, n) in h.counts() {
        let (a, b) = d.components();
        out.set_item(pair(py, &a, &b)?, *n)?;
    }
    Ok(out)
}

#[pymethods]
impl PyPointSet {
    /// `PointSet(plane, points)` with `plane` one of `dual`, `double`, `real`.
    #[new]
    fn new(plane: &str, points: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let plane: Plane = plane.parse().map_err(value_error)?;
        let inner = match plane {
            Plane::Dual => AnyPointSet::Dual(build::<DualPoint>(&points)?),
            Plane::Double => AnyPointSet::Double(build::<DoublePoint>(&points)?),
            Plane::Real => AnyPointSet::Real(build::<RealPoint>(&points)?),
        };
        Ok(inner.into())
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        hypercount::parse_pointset(text)
            .map(Into::into)
            .map_err(value_error)
    }

    fn serialize(&self) -> String {
        hypercount::serialize_pointset(&self.inner)
    }

    #[getter]
    fn plane(&self) -> &'static str {
        self.inner.plane().tag()
    }

    /// Number of duplicate points dropped at construction.
    #[getter]
    fn collapsed(&self) -> usize {
        self.inner.collapsed()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "PointSet({:?}, n={})",
            self.inner.plane().tag(),
            self.inner.len()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn points<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyTuple>>> {
        fn rows<'py, P: PlanePoint>(
            py: Python<'py>,
            set: &PointSet<P>,
        ) -> PyResult<Vec<Bound<'py, PyTuple>>> {
            set.iter()
                .map(|p| {
                    let cs = p
                        .coords()
                        .into_iter()
                        .map(|c| fraction(py, c))
                        .collect::<PyResult<Vec<_>>>()?;
                    PyTuple::new(py, cs)
                })
                .collect()
        }
        match &self.inner {
            AnyPointSet::Dual(s) => rows(py, s),
            AnyPointSet::Double(s) => rows(py, s),
            AnyPointSet::Real(s) => rows(py, s),
        }
    }

    /// Multiplicity report as a dict; entries undefined for the plane are omitted.
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.inner.analyze().map_err(value_error)?;
        let out = PyDict::new(py);
        out.set_item("plane", r.plane.tag())?;
        out.set_item("n", r.n)?;
        let fields = [
            ("multiplicity", r.multiplicity),
            ("secondary_multiplicity", r.secondary_multiplicity),
            ("real_multiplicity", r.real_multiplicity),
            ("imaginary_multiplicity", r.imaginary_multiplicity),
            ("minimal_multiplicity", r.minimal_multiplicity),
        ];
        for (name, v) in fields {
            if let Some(v) = v {
                out.set_item(name, v)?;
            }
        }
        for (name, v) in [("lambda", r.lambda), ("nu", r.nu)] {
            if let Some(v) = v {
                out.set_item(name, v)?;
            }
        }
        Ok(out)
    }

    /// `{(d1, d2): count}` over unordered pairs; real-plane keys have `d2 = 0`.
    fn histogram<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        match &self.inner {
            AnyPointSet::Dual(s) => histogram_dict(py, s),
            AnyPointSet::Double(s) => histogram_dict(py, s),
            AnyPointSet::Real(s) => histogram_dict(py, s),
        }
    }

    /// Pairs at `(d1, d2)`; for the real plane pass the squared distance alone.
    #[pyo3(signature = (d1, d2 = None))]
    fn count_pairs_at(
        &self,
        py: Python<'_>,
        d1: &Bound<'_, PyAny>,
        d2: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<u64> {
        let text = match d2 {
            Some(d2) => format!("{},{}", rational(d1)?, rational(d2)?),
            None => rational(d1)?.to_string(),
        };
        let d = AnyDistance::parse(self.inner.plane(), &text).map_err(value_error)?;
        py.detach(|| count_pairs_at_any(&self.inner, &d))
            .map_err(value_error)
    }

    #[pyo3(signature = (include_zero = true))]
    fn distinct_distances(&self, py: Python<'_>, include_zero: bool) -> PyResult<usize> {
        py.detach(|| distinct_count_any(&self.inner, include_zero))
            .map_err(value_error)
    }

    fn bipartite_distinct(&self, py: Python<'_>, other: &Self) -> PyResult<usize> {
        py.detach(|| bipartite_distinct_any(&self.inner, &other.inner))
            .map_err(value_error)
    }

    /// Applies a named distance-equivalence transform.
    fn transform(&self, kind: &str, param: &Bound<'_, PyAny>) -> PyResult<Self> {
        let kind: TransformKind = kind.parse().map_err(value_error)?;
        let spec = TransformSpec::new(kind, rational(param)?).map_err(value_error)?;
        spec.apply(&self.inner).map(Into::into).map_err(value_error)
    }

    /// `{(alpha, beta, gamma, delta): count}` over ordered unit-distance pairs.
    fn dyadic_classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let set = self.inner.as_dual().map_err(value_error)?;
        let cells = py.detach(|| hypercount::dyadic_classify(set));
        let out = PyDict::new(py);
        for (c, n) in cells {
            out.set_item((c.alpha, c.beta, c.gamma, c.delta), n)?;
        }
        Ok(out)
    }

    /// Canonical `(a, b, c)` of every line `a·x + b·z = c` through at least `r` points.
    fn rich_lines(&self, py: Python<'_>, r: usize) -> PyResult<Vec<LineCoefficients>> {
        let set = self.inner.as_real().map_err(value_error)?;
        let lines = py
            .detach(|| hypercount::rich_lines(set, r))
            .map_err(value_error)?;
        lines
            .iter()
            .map(|l| {
                let (a, b, c) = l.coefficients();
                Ok((
                    a.into_pyobject(py)?.into_any().unbind(),
                    b.into_pyobject(py)?.into_any().unbind(),
                    c.into_pyobject(py)?.into_any().unbind(),
                ))
            })
            .collect()
    }
}

fn real_inputs(inputs: &[PyRef<'_, PyPointSet>]) -> PyResult<Vec<PointSet<RealPoint>>> {
    inputs
        .iter()
        .map(|s| s.inner.as_real().cloned().map_err(value_error))
        .collect()
}

/// Generates a named construction from integer parameters and real-plane inputs.
#[pyfunction]
#[pyo3(signature = (name, params = Vec::new(), inputs = Vec::new()))]
fn construct(
    name: &str,
    params: Vec<i64>,
    inputs: Vec<PyRef<'_, PyPointSet>>,
) -> PyResult<PyPointSet> {
    let name: ConstructionName = name.parse().map_err(value_error)?;
    let spec = ConstructionSpec::new(name, params).with_inputs(real_inputs(&inputs)?);
    spec.generate().map(Into::into).map_err(value_error)
}

#[pyfunction]
fn constructions() -> Vec<&'static str> {
    ConstructionName::ALL.iter().map(|c| c.name()).collect()
}

#[pyfunction]
fn transforms() -> Vec<&'static str> {
    TransformKind::ALL.iter().map(|k| k.name()).collect()
}

fn point4(p: &[Bound<'_, PyAny>]) -> PyResult<[Rational; 4]> {
    coords_of(p)?
        .try_into()
        .map_err(|_| PyValueError::new_err("expected 4 coordinates"))
}

/// `ρ_𝔻²(p, q)` as `(d1, d2)`.
#[pyfunction(name = "rho_dual")]
fn py_rho_dual<'py>(
    py: Python<'py>,
    p: Vec<Bound<'py, PyAny>>,
    q: Vec<Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyTuple>> {
    let [a, b, c, d] = point4(&p)?;
    let [e, f, g, h] = point4(&q)?;
    let r = rho_dual(
        &DualPoint {
            x: a,
            y: b,
            z: c,
            w: d,
        },
        &DualPoint {
            x: e,
            y: f,
            z: g,
            w: h,
        },
    );
    pair(py, &r.d1, &r.d2)
}

/// `ρ_𝕎²(p, q)` as `(d1, d2)` for points in light-cone coordinates.
#[pyfunction(name = "rho_double")]
fn py_rho_double<'py>(
    py: Python<'py>,
    p: Vec<Bound<'py, PyAny>>,
    q: Vec<Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyTuple>> {
    let [a, b, c, d] = point4(&p)?;
    let [e, f, g, h] = point4(&q)?;
    let r = rho_double(
        &DoublePoint {
            x: a,
            y: b,
            z: c,
            w: d,
        },
        &DoublePoint {
            x: e,
            y: f,
            z: g,
            w: h,
        },
    );
    pair(py, &r.d1, &r.d2)
}

/// Runs a sweep and returns `(n, value, seconds)` rows in schedule order.
#[pyfunction]
#[pyo3(signature = (construction, schedule, statistic, at = None, include_zero = true))]
fn run_experiment(
    py: Python<'_>,
    construction: &str,
    schedule: Vec<Vec<i64>>,
    statistic: &str,
    at: Option<&str>,
    include_zero: bool,
) -> PyResult<Vec<(usize, u64, f64)>> {
    let construction: ConstructionName = construction.parse().map_err(value_error)?;
    let statistic = match statistic {
        "unit-count" => Statistic::UnitCount,
        "repeated-count" => {
            let at = at.ok_or_else(|| PyValueError::new_err("repeated-count needs `at`"))?;
            Statistic::RepeatedCount(
                AnyDistance::parse(construction.plane(), at).map_err(value_error)?,
            )
        }
        "distinct-count" => Statistic::DistinctCount { include_zero },
        "multiplicity" => Statistic::Multiplicity,
        "dyadic-table" => Statistic::DyadicTable,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown statistic `{other}`"
            )))
        }
    };
    let cfg = ExperimentConfig {
        construction,
        schedule,
        statistic,
        output: None,
    };
    let rows = py
        .detach(|| hypercount::run_experiment(&cfg))
        .map_err(value_error)?;
    Ok(rows
        .into_iter()
        .map(|r| (r.n, r.value, r.seconds))
        .collect())
}

/// Least-squares slope of `log(value)` against `log(n)` over `(n, value)` rows.
#[pyfunction]
fn fit_exponent(rows: Vec<(usize, u64)>) -> PyResult<f64> {
    let rows: Vec<ExperimentRow> = rows
        .into_iter()
        .map(|(n, value)| ExperimentRow {
            n,
            value,
            seconds: 0.0,
        })
        .collect();
    hypercount::fit_exponent(&rows).map_err(value_error)
}

#[pymodule]
pub fn pyhypercount(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPointSet>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(constructions, m)?)?;
    m.add_function(wrap_pyfunction!(transforms, m)?)?;
    m.add_function(wrap_pyfunction!(py_rho_dual, m)?)?;
    m.add_function(wrap_pyfunction!(py_rho_double, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    m.add_function(wrap_pyfunction!(fit_exponent, m)?)?;
    Ok(())
}
