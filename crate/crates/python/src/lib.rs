//! Python bindings for `p3walls`. Rationals cross the boundary as
//! `fractions.Fraction`; inputs may be `int`, `Fraction` or `"p/q"` strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use p3walls::chern::{self, ResolutionTerm, Sign};
use p3walls::rational::{parse_rational, Rational};
use p3walls::walls::{self, Region, SearchBounds, WallCandidate};
use p3walls::{genus4, stability};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text: String = obj.str()?.extract()?;
    parse_rational(&text).map_err(value_error)
}

fn to_fraction<'py>(py: Python<'py>, x: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((x.to_string(),))
}

#[pyclass(name = "ChernCharacter", module = "p3walls_py", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyChern {
    inner: chern::ChernCharacter,
}

impl From<chern::ChernCharacter> for PyChern {
    fn from(inner: chern::ChernCharacter) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyChern {
    #[new]
    fn new(
        r: &Bound<'_, PyAny>,
        c: &Bound<'_, PyAny>,
        d: &Bound<'_, PyAny>,
        e: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        Ok(chern::ChernCharacter::new(
            to_rational(r)?,
            to_rational(c)?,
            to_rational(d)?,
            to_rational(e)?,
        )
        .into())
    }

    /// Parses `"r,c,d,e"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse::<chern::ChernCharacter>()
            .map(Self::from)
            .map_err(value_error)
    }

    fn components<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.inner
            .components()
            .into_iter()
            .map(|x| to_fraction(py, x))
            .collect()
    }

    fn twist(&self, beta: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(self.inner.twist(&to_rational(beta)?).into())
    }

    fn dual(&self) -> Self {
        self.inner.dual().into()
    }

    fn discriminant<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.inner.discriminant())
    }

    fn is_integral(&self) -> bool {
        self.inner.is_integral()
    }

    fn __add__(&self, other: &Self) -> Self {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &Self) -> Self {
        (&self.inner - &other.inner).into()
    }

    fn __neg__(&self) -> Self {
        (-self.inner.clone()).into()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ChernCharacter('{}')", self.inner)
    }
}

#[pyfunction]
fn euler_pairing<'py>(py: Python<'py>, a: &PyChern, b: &PyChern) -> PyResult<Bound<'py, PyAny>> {
    to_fraction(py, &chern::euler_pairing(&a.inner, &b.inner))
}

#[pyfunction]
fn line_bundle_ch(t: &Bound<'_, PyAny>) -> PyResult<PyChern> {
    Ok(chern::line_bundle_ch(&to_rational(t)?).into())
}

#[pyfunction]
fn curve_ideal_ch(degree: u64, genus: i64) -> PyResult<PyChern> {
    chern::curve_ideal_ch(degree, genus)
        .map(PyChern::from)
        .map_err(value_error)
}

/// `terms` is a list of `(twist, sign)` with sign `+1` or `-1`.
#[pyfunction]
fn from_resolution(terms: Vec<(i64, i64)>) -> PyResult<PyChern> {
    let terms = terms
        .into_iter()
        .map(|(twist, sign)| match sign {
            1 => Ok(ResolutionTerm {
                twist,
                sign: Sign::Plus,
            }),
            -1 => Ok(ResolutionTerm {
                twist,
                sign: Sign::Minus,
            }),
            other => Err(value_error(format!("sign must be +1 or -1, got {other}"))),
        })
        .collect::<PyResult<Vec<_>>>()?;
    chern::from_resolution(&terms)
        .map(PyChern::from)
        .map_err(value_error)
}

#[pyfunction]
fn bmt_zero_circle<'py>(
    py: Python<'py>,
    v: &PyChern,
) -> PyResult<Option<(Bound<'py, PyAny>, Bound<'py, PyAny>)>> {
    stability::bmt_zero_circle(&v.inner)
        .map(|(c, r)| Ok((to_fraction(py, &c)?, to_fraction(py, &r)?)))
        .transpose()
}

#[pyfunction]
fn hyperbola_alpha_sq<'py>(
    py: Python<'py>,
    v: &PyChern,
    beta: &Bound<'_, PyAny>,
) -> PyResult<Option<Bound<'py, PyAny>>> {
    walls::hyperbola_alpha_sq(&v.inner, &to_rational(beta)?)
        .map_err(value_error)?
        .map(|a| to_fraction(py, &a))
        .transpose()
}

fn wall_dicts<'py>(py: Python<'py>, found: &[WallCandidate]) -> PyResult<Bound<'py, PyList>> {
    let list = PyList::empty(py);
    for w in found {
        let dict = PyDict::new(py);
        dict.set_item("center", to_fraction(py, w.center())?)?;
        dict.set_item("radius_sq", to_fraction(py, w.radius_sq())?)?;
        dict.set_item("sub", w.sub().to_string())?;
        dict.set_item("quotient", w.quotient().to_string())?;
        list.append(dict)?;
    }
    Ok(list)
}

fn region(beta_min: &Bound<'_, PyAny>, beta_max: &Bound<'_, PyAny>, alpha2_max: &Bound<'_, PyAny>) -> PyResult<Region> {
    Region::new(
        to_rational(beta_min)?,
        to_rational(beta_max)?,
        to_rational(alpha2_max)?,
    )
    .map_err(value_error)
}

/// Walls of `v` in `[beta_min, beta_max) x (0, alpha2_max]` as a list of dicts.
#[pyfunction]
#[pyo3(signature = (v, beta_min, beta_max, alpha2_max))]
fn enumerate_walls<'py>(
    py: Python<'py>,
    v: &PyChern,
    beta_min: &Bound<'_, PyAny>,
    beta_max: &Bound<'_, PyAny>,
    alpha2_max: &Bound<'_, PyAny>,
) -> PyResult<Bound<'py, PyList>> {
    let region = region(beta_min, beta_max, alpha2_max)?;
    let found = walls::enumerate_tilt_walls(&v.inner, &region).map_err(value_error)?;
    wall_dicts(py, &found)
}

#[pyfunction]
#[pyo3(signature = (v, beta_min, beta_max, alpha2_max, r_max=5, c_max=20, two_d_max=100))]
#[allow(clippy::too_many_arguments)]
fn brute_force_walls<'py>(
    py: Python<'py>,
    v: &PyChern,
    beta_min: &Bound<'_, PyAny>,
    beta_max: &Bound<'_, PyAny>,
    alpha2_max: &Bound<'_, PyAny>,
    r_max: u32,
    c_max: u32,
    two_d_max: u32,
) -> PyResult<Bound<'py, PyList>> {
    let region = region(beta_min, beta_max, alpha2_max)?;
    let bounds = SearchBounds {
        r_max,
        c_max,
        two_d_max,
    };
    let found = walls::brute_force_walls(&v.inner, &region, bounds).map_err(value_error)?;
    wall_dicts(py, &found)
}

/// The genus-4 report as a JSON string.
#[pyfunction]
fn genus4_report_json() -> PyResult<String> {
    let doc = genus4::report_json().map_err(value_error)?;
    Ok(doc.to_string())
}

#[pyfunction]
fn genus4_report_text() -> PyResult<String> {
    genus4::report_text().map_err(value_error)
}

#[pymodule]
pub fn p3walls_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyChern>()?;
    m.add_function(wrap_pyfunction!(euler_pairing, m)?)?;
    m.add_function(wrap_pyfunction!(line_bundle_ch, m)?)?;
    m.add_function(wrap_pyfunction!(curve_ideal_ch, m)?)?;
    m.add_function(wrap_pyfunction!(from_resolution, m)?)?;
    m.add_function(wrap_pyfunction!(bmt_zero_circle, m)?)?;
    m.add_function(wrap_pyfunction!(hyperbola_alpha_sq, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_walls, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_walls, m)?)?;
    m.add_function(wrap_pyfunction!(genus4_report_json, m)?)?;
    m.add_function(wrap_pyfunction!(genus4_report_text, m)?)?;
    Ok(())
}
