use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use extqsym::ballot::{self, BinarySeq, SeqFilter};
use extqsym::{cli, harmonics, ideal, quasisym, sym_coinv, ExtPolynomial, NonCrossingPairing};

create_exception!(extqsym, ExtqsymError, PyValueError);
create_exception!(extqsym, CapExceededError, ExtqsymError);

fn to_py(e: extqsym::Error) -> PyErr {
    match e {
        extqsym::Error::CapExceeded { .. } => CapExceededError::new_err(e.to_string()),
        _ => ExtqsymError::new_err(e.to_string()),
    }
}

fn seq(alpha: &str) -> PyResult<BinarySeq> {
    alpha.parse().map_err(to_py)
}

fn filter(name: &str) -> PyResult<SeqFilter> {
    match name {
        "all" => Ok(SeqFilter::All),
        "ballot" => Ok(SeqFilter::Ballot),
        "non-ballot" | "non_ballot" => Ok(SeqFilter::NonBallot),
        "minimal-gb" | "minimal_gb" => Ok(SeqFilter::MinimalGb),
        _ => Err(ExtqsymError::new_err(format!("unknown filter {name:?}"))),
    }
}

/// An element of the exterior algebra over ℚ.
#[pyclass(name = "Polynomial", module = "extqsym", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Polynomial {
    inner: ExtPolynomial,
}

impl From<ExtPolynomial> for Polynomial {
    fn from(inner: ExtPolynomial) -> Polynomial {
        Polynomial { inner }
    }
}

#[pymethods]
impl Polynomial {
    /// Parses `text` (e.g. `"3/2*t1*t3 - t2"`) in `R_n`.
    #[new]
    #[pyo3(signature = (n, text = "0"))]
    fn new(n: usize, text: &str) -> PyResult<Self> {
        extqsym::parse_poly(n, text).map(Into::into).map_err(to_py)
    }

    #[staticmethod]
    fn var(n: usize, i: usize) -> PyResult<Self> {
        ExtPolynomial::var(n, i).map(Into::into).map_err(to_py)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        extqsym::parse::from_json_str(text).map(Into::into).map_err(to_py)
    }

    fn to_json(&self) -> String {
        extqsym::parse::to_json(&self.inner).to_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// `(subset, "p/q")` pairs, lex-descending.
    fn terms(&self) -> Vec<(Vec<usize>, String)> {
        self.inner.terms().rev().map(|(m, c)| (m.indices().collect(), c.to_string())).collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn partial(&self, i: usize) -> PyResult<Self> {
        self.inner.partial(i).map(Into::into).map_err(to_py)
    }

    fn bar(&self) -> Self {
        self.inner.bar().into()
    }

    /// `⟨self, other⟩` as a `"p/q"` string.
    fn inner_product(&self, other: &Polynomial) -> PyResult<String> {
        ExtPolynomial::inner_product(&self.inner, &other.inner).map(|c| c.to_string()).map_err(to_py)
    }

    fn __add__(&self, other: &Polynomial) -> PyResult<Self> {
        self.inner.add(&other.inner).map(Into::into).map_err(to_py)
    }

    fn __sub__(&self, other: &Polynomial) -> PyResult<Self> {
        self.inner.sub(&other.inner).map(Into::into).map_err(to_py)
    }

    fn __mul__(&self, other: &Polynomial) -> PyResult<Self> {
        self.inner.mul(&other.inner).map(Into::into).map_err(to_py)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({}, {:?})", self.inner.n(), self.inner.to_string())
    }
}

#[pyfunction]
fn fundamental(n: usize, r: usize) -> PyResult<Polynomial> {
    quasisym::fundamental(n, r).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn pi(i: usize, p: &Polynomial) -> PyResult<Polynomial> {
    quasisym::pi(i, &p.inner).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn is_quasisymmetric(p: &Polynomial) -> bool {
    quasisym::is_quasisymmetric(&p.inner)
}

#[pyfunction]
fn product_coefficient(r: usize, s: usize) -> BigInt {
    quasisym::product_coefficient(r, s)
}

#[pyfunction]
fn product_coefficient_bruteforce(r: usize, s: usize) -> PyResult<i64> {
    quasisym::product_coefficient_bruteforce(r, s).map_err(to_py)
}

#[pyfunction]
fn is_ballot(alpha: &str) -> PyResult<bool> {
    Ok(seq(alpha)?.is_ballot())
}

#[pyfunction]
#[pyo3(signature = (n, kind = "ballot"))]
fn sequences(n: usize, kind: &str) -> PyResult<Vec<String>> {
    Ok(ballot::enumerate(n, filter(kind)?).map_err(to_py)?.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn pairing_from_ballot(alpha: &str) -> PyResult<Vec<(usize, usize)>> {
    Ok(ballot::pairing_from_ballot(&seq(alpha)?).map_err(to_py)?.pairs().to_vec())
}

#[pyfunction]
fn delta(pairs: Vec<(usize, usize)>, n: usize) -> PyResult<Polynomial> {
    let c = NonCrossingPairing::new(pairs).map_err(to_py)?;
    harmonics::delta(&c, n).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn is_harmonic(p: &Polynomial) -> bool {
    harmonics::is_harmonic(&p.inner)
}

#[pyfunction]
fn harmonic_kernel(n: usize, k: usize) -> PyResult<Vec<Polynomial>> {
    Ok(harmonics::harmonic_kernel(n, k).map_err(to_py)?.into_iter().map(Into::into).collect())
}

#[pyfunction]
fn g_poly(alpha: &str) -> PyResult<Polynomial> {
    ideal::g_poly(&seq(alpha)?).map(Into::into).map_err(to_py)
}

/// `(normal form, [(γ, "c"), ...])` with `p = normal form + Σ c·G_γ`.
#[pyfunction]
fn normal_form(p: &Polynomial) -> PyResult<(Polynomial, Vec<(String, String)>)> {
    let r = ideal::normal_form(&p.inner).map_err(to_py)?;
    let dec = r.decomposition.iter().map(|(a, c)| (a.to_string(), c.to_string())).collect();
    Ok((r.normal_form.into(), dec))
}

#[pyfunction]
fn in_ideal(p: &Polynomial) -> PyResult<bool> {
    ideal::in_ideal(&p.inner).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, minimal = false))]
fn groebner_basis(n: usize, minimal: bool) -> PyResult<Vec<(String, Polynomial)>> {
    let basis = if minimal { ideal::minimal_groebner(n) } else { ideal::ideal_basis(n) }.map_err(to_py)?;
    Ok(basis.into_iter().map(|(a, g)| (a.to_string(), g.into())).collect())
}

#[pyfunction]
fn quotient_basis(n: usize) -> PyResult<Vec<Vec<usize>>> {
    Ok(ideal::quotient_basis(n).map_err(to_py)?.iter().map(|m| m.indices().collect()).collect())
}

#[pyfunction]
fn hilbert_series(n: usize) -> PyResult<Vec<u64>> {
    ideal::hilbert_series(n).map_err(to_py)
}

#[pyfunction]
fn reduce_mod_j(p: &Polynomial) -> PyResult<Polynomial> {
    sym_coinv::reduce_mod_j(&p.inner).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn check_freeness(n: usize) -> PyResult<bool> {
    Ok(sym_coinv::check_freeness(n).map_err(to_py)?.holds())
}

/// `[(name, passed, detail), ...]`
#[pyfunction]
fn verify_suite(py: Python<'_>, n_max: usize) -> Vec<(String, bool, String)> {
    let report = py.detach(|| cli::verify_suite(n_max));
    report.checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect()
}

/// Runs CLI arguments (without the program name); returns `(status, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = cli::run_args(std::iter::once("extqsym".to_string()).chain(args));
    (out.status, out.stdout, out.stderr)
}

#[pymodule]
#[pyo3(name = "extqsym")]
pub fn extqsym_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ExtqsymError", m.py().get_type::<ExtqsymError>())?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(fundamental, m)?)?;
    m.add_function(wrap_pyfunction!(pi, m)?)?;
    m.add_function(wrap_pyfunction!(is_quasisymmetric, m)?)?;
    m.add_function(wrap_pyfunction!(product_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(product_coefficient_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(is_ballot, m)?)?;
    m.add_function(wrap_pyfunction!(sequences, m)?)?;
    m.add_function(wrap_pyfunction!(pairing_from_ballot, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(is_harmonic, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(g_poly, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(in_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_basis, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_mod_j, m)?)?;
    m.add_function(wrap_pyfunction!(check_freeness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
