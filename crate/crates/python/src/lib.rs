//! Python bindings for the `twotone` library.
//!
//! Words and tilings are exposed as immutable classes; the enumerations are
//! lazy Python iterators. Every validation or parse failure raises
//! `ValueError`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use twotone::textio;
use twotone::{Color, MnWord, Tile, Tilings, TwoTonedTiling, WordDecomposition, Words};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A validated (m,n)-word.
#[pyclass(
    name = "Word",
    module = "twotone",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyWord {
    pub inner: MnWord,
}

#[pymethods]
impl PyWord {
    #[new]
    fn new(m: usize, letters: Vec<usize>) -> PyResult<Self> {
        MnWord::new(m, letters)
            .map(|inner| Self { inner })
            .map_err(value_error)
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn letters(&self) -> Vec<usize> {
        self.inner.letters().to_vec()
    }

    fn is_topless(&self) -> bool {
        self.inner.is_topless()
    }

    /// `(topless, gaps)`: the topless letters and the run of `m+1` after each.
    fn decompose(&self) -> (Vec<usize>, Vec<usize>) {
        let d = self.inner.decompose();
        (d.topless, d.gaps)
    }

    fn to_tiling(&self) -> PyTiling {
        PyTiling {
            inner: twotone::xi(&self.inner),
        }
    }

    fn to_json(&self) -> String {
        textio::word_to_json(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __str__(&self) -> String {
        textio::format_word(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Word({}, {:?})", self.inner.m(), self.inner.letters())
    }
}

/// A validated two-toned tiling. Tiles are `("R", 1)` or `("B", len)` pairs.
#[pyclass(
    name = "Tiling",
    module = "twotone",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyTiling {
    pub inner: TwoTonedTiling,
}

fn tile_from_pair((color, len): (String, usize)) -> PyResult<Tile> {
    match color.as_str() {
        "R" => Ok(Tile {
            color: Color::Red,
            len,
        }),
        "B" => Ok(Tile::blue(len)),
        other => Err(PyValueError::new_err(format!(
            "unknown tile color {other:?}, expected \"R\" or \"B\""
        ))),
    }
}

#[pymethods]
impl PyTiling {
    #[new]
    fn new(m: usize, tiles: Vec<(String, usize)>) -> PyResult<Self> {
        let tiles = tiles
            .into_iter()
            .map(tile_from_pair)
            .collect::<PyResult<Vec<_>>>()?;
        TwoTonedTiling::new(m, tiles)
            .map(|inner| Self { inner })
            .map_err(value_error)
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn tiles(&self) -> Vec<(&'static str, usize)> {
        self.inner
            .tiles()
            .iter()
            .map(|t| (if t.is_red() { "R" } else { "B" }, t.len))
            .collect()
    }

    /// `(blues, red_gaps)` with one more red gap than blue strips.
    fn blue_profile(&self) -> (Vec<usize>, Vec<usize>) {
        let p = self.inner.blue_profile();
        (p.blues, p.red_gaps)
    }

    fn to_word(&self) -> PyWord {
        PyWord {
            inner: twotone::xi_inverse(&self.inner),
        }
    }

    fn to_json(&self) -> String {
        textio::tiling_to_json(&self.inner)
    }

    fn render_ascii(&self) -> String {
        textio::render_ascii(&self.inner)
    }

    #[pyo3(signature = (unit = 20))]
    fn render_svg(&self, unit: u32) -> PyResult<String> {
        if unit == 0 {
            return Err(PyValueError::new_err("unit must be positive"));
        }
        Ok(textio::render_svg(&self.inner, unit))
    }

    fn __str__(&self) -> String {
        textio::format_tiling(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Tiling({}, {:?})", self.inner.m(), self.inner.to_string())
    }
}

#[pyclass(module = "twotone")]
pub struct WordIter {
    inner: Words,
}

#[pymethods]
impl WordIter {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(mut slf: PyRefMut<'_, Self>) -> Option<PyWord> {
        slf.inner.next().map(|inner| PyWord { inner })
    }
}

#[pyclass(module = "twotone")]
pub struct TilingIter {
    inner: Tilings,
}

#[pymethods]
impl TilingIter {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(mut slf: PyRefMut<'_, Self>) -> Option<PyTiling> {
        slf.inner.next().map(|inner| PyTiling { inner })
    }
}

#[pyfunction]
fn validate_word(m: usize, letters: Vec<usize>) -> PyResult<PyWord> {
    PyWord::new(m, letters)
}

#[pyfunction]
fn recompose(m: usize, topless: Vec<usize>, gaps: Vec<usize>) -> PyResult<PyWord> {
    WordDecomposition { m, topless, gaps }
        .recompose()
        .map(|inner| PyWord { inner })
        .map_err(value_error)
}

/// Lazily yields every (m,n)-word in lexicographic order.
#[pyfunction]
fn enumerate_words(m: usize, n: usize) -> WordIter {
    WordIter {
        inner: twotone::enumerate_words(m, n),
    }
}

/// Lazily yields every two-toned tiling of length m+n.
#[pyfunction]
fn enumerate_tilings(m: usize, n: usize) -> TilingIter {
    TilingIter {
        inner: twotone::enumerate_tilings(m, n),
    }
}

#[pyfunction]
fn xi(word: &PyWord) -> PyTiling {
    word.to_tiling()
}

#[pyfunction]
fn xi_inverse(tiling: &PyTiling) -> PyWord {
    tiling.to_word()
}

#[pyfunction]
fn binomial(a: u64, b: i64) -> BigUint {
    twotone::binomial(a, b)
}

#[pyfunction]
fn closed_form_count(m: usize, n: usize) -> BigUint {
    twotone::closed_form_count(m, n)
}

#[pyfunction]
fn gf_coefficient(m: usize, n: usize) -> BigUint {
    twotone::gf_coefficient(m, n)
}

#[pyfunction]
#[pyo3(signature = (text, m = None))]
fn parse_word(text: &str, m: Option<usize>) -> PyResult<PyWord> {
    textio::parse_word(text, m)
        .map(|inner| PyWord { inner })
        .map_err(value_error)
}

/// Parses tile tokens; without `m` the number of red squares is used.
#[pyfunction]
#[pyo3(signature = (text, m = None))]
fn parse_tiling(text: &str, m: Option<usize>) -> PyResult<PyTiling> {
    match m {
        Some(m) => textio::parse_tiling(text, m),
        None => textio::parse_tiling_infer_m(text),
    }
    .map(|inner| PyTiling { inner })
    .map_err(value_error)
}

/// Runs the exhaustive cross-check. Returns `(rows, overall)` where each row
/// is `(m, n, words, tilings, formula, gf, roundtrip_ok)`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn verify(
    py: Python<'_>,
    max_m: usize,
    max_n: usize,
) -> (
    Vec<(usize, usize, BigUint, BigUint, BigUint, BigUint, bool)>,
    bool,
) {
    let report = py.detach(|| twotone::verify_grid(max_m, max_n));
    let rows = report
        .rows
        .into_iter()
        .map(|r| {
            (
                r.m,
                r.n,
                r.enum_word_count,
                r.enum_tiling_count,
                r.closed_form,
                r.gf_coeff,
                r.roundtrip_ok,
            )
        })
        .collect();
    (rows, report.overall)
}

#[pymodule]
#[pyo3(name = "twotone")]
pub fn twotone_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyTiling>()?;
    m.add_class::<WordIter>()?;
    m.add_class::<TilingIter>()?;
    m.add_function(wrap_pyfunction!(validate_word, m)?)?;
    m.add_function(wrap_pyfunction!(recompose, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_words, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tilings, m)?)?;
    m.add_function(wrap_pyfunction!(xi, m)?)?;
    m.add_function(wrap_pyfunction!(xi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_count, m)?)?;
    m.add_function(wrap_pyfunction!(gf_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(parse_word, m)?)?;
    m.add_function(wrap_pyfunction!(parse_tiling, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
