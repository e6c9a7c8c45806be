//! Python bindings for wright-core.
//!
//! Exposes the scalar evaluators (Wright, Mittag-Leffler, Mainardi, and
//! their parameter derivatives), the name-addressable `evaluate`, and the
//! three verification suites.  Every evaluator returns an [`Eval`] carrying
//! the convergence report alongside the value.

use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use wright_core::quad::QuadratureSpec;
use wright_core::WrightError;

/// One series evaluation: the value plus how it converged.
#[pyclass(frozen, get_all, module = "wright_py")]
struct Eval {
    value: f64,
    terms_used: usize,
    last_term_magnitude: f64,
    converged: bool,
}

#[pymethods]
impl Eval {
    fn __repr__(&self) -> String {
        format!(
            "Eval(value={:.16e}, terms_used={}, converged={})",
            self.value, self.terms_used, self.converged
        )
    }

    fn __float__(&self) -> f64 {
        self.value
    }
}

impl From<wright_core::SeriesEval> for Eval {
    fn from(e: wright_core::SeriesEval) -> Self {
        Eval {
            value: e.value,
            terms_used: e.terms_used,
            last_term_magnitude: e.last_term_magnitude,
            converged: e.converged,
        }
    }
}

fn to_py_err(e: WrightError) -> PyErr {
    match e {
        WrightError::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        WrightError::NonConvergence(_) | WrightError::QuadratureFailure(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        // Domain, Pole, Manifest, Io: bad input
        _ => PyValueError::new_err(e.to_string()),
    }
}

macro_rules! expose {
    ($py_name:ident, $core:path, $($arg:ident),+) => {
        #[pyfunction]
        fn $py_name($($arg: f64),+) -> PyResult<Eval> {
            $core($($arg),+).map(Eval::from).map_err(to_py_err)
        }
    };
}

expose!(wright, wright_core::wright, alpha, beta, t);
expose!(mittag_leffler, wright_core::mittag_leffler, alpha, beta, t);
expose!(ml_explicit, wright_core::ml_explicit, beta, t);
expose!(mainardi_m, wright_core::mainardi_m, sigma, t);
expose!(mainardi_f, wright_core::mainardi_f, sigma, t);
expose!(dw_dalpha, wright_core::dw_dalpha, alpha, beta, t);
expose!(dw_dbeta, wright_core::dw_dbeta, alpha, beta, t);
expose!(d2w_dalpha2, wright_core::d2w_dalpha2, alpha, beta, t);
expose!(d2w_dbeta2, wright_core::d2w_dbeta2, alpha, beta, t);
expose!(de_dalpha, wright_core::de_dalpha, alpha, beta, t);
expose!(de_dbeta, wright_core::de_dbeta, alpha, beta, t);
expose!(df_dsigma, wright_core::df_dsigma, sigma, t);
expose!(dm_dsigma, wright_core::dm_dsigma, sigma, t);
expose!(d2f_dsigma2, wright_core::d2f_dsigma2, sigma, t);
expose!(d2m_dsigma2, wright_core::d2m_dsigma2, sigma, t);

/// Evaluate any table entry by name with keyword parameters, e.g.
/// `evaluate("dW/dalpha", alpha=0.5, beta=1.0, t=2.0)`.  Spelling of the
/// name is normalised the same way the CLI does it.
#[pyfunction]
#[pyo3(signature = (name, **params))]
fn evaluate(name: &str, params: Option<&Bound<'_, PyDict>>) -> PyResult<Eval> {
    let mut args: Vec<(String, f64)> = Vec::new();
    if let Some(d) = params {
        for (k, v) in d.iter() {
            args.push((k.extract::<String>()?, v.extract::<f64>()?));
        }
    }
    wright_core::evaluate(name, &args)
        .map(Eval::from)
        .map_err(to_py_err)
}

/// The evaluation table as (name, parameter names, domain text) triples.
#[pyfunction]
fn operations() -> Vec<(&'static str, Vec<&'static str>, &'static str)> {
    wright_core::OPERATIONS
        .iter()
        .map(|op| (op.name, op.params.to_vec(), op.domain))
        .collect()
}

/// Run a verification suite ("identities", "laplace", "limits", or "all").
///
/// Returns (checks, failures, failing check descriptions).  The identities
/// suite currently reports two known finite-difference oracle-noise rows;
/// see the crate documentation.
#[pyfunction]
fn verify(suite: &str) -> PyResult<(usize, usize, Vec<String>)> {
    let pairs = wright_core::builtin_pairs();
    let spec = QuadratureSpec::default();
    let mut rep = wright_core::VerificationReport::new();
    if matches!(suite, "identities" | "all") {
        rep.merge(wright_core::run_identities());
    }
    if matches!(suite, "laplace" | "all") {
        rep.merge(wright_core::run_laplace(&pairs, &spec).map_err(to_py_err)?);
    }
    if matches!(suite, "limits" | "all") {
        rep.merge(wright_core::run_limits(&pairs, &spec).map_err(to_py_err)?);
    }
    if !matches!(suite, "identities" | "laplace" | "limits" | "all") {
        return Err(PyValueError::new_err(format!("unknown suite '{suite}'")));
    }
    let failing: Vec<String> = rep
        .rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} [{}]", r.name, r.params))
        .collect();
    Ok((rep.rows.len(), failing.len(), failing))
}

/// The verification report for a suite as CSV text (same layout the CLI
/// writes): name,param_tuple,lhs,rhs,abs_err,rel_err,pass.
#[pyfunction]
fn verify_csv(suite: &str) -> PyResult<String> {
    let pairs = wright_core::builtin_pairs();
    let spec = QuadratureSpec::default();
    let rep = match suite {
        "identities" => wright_core::run_identities(),
        "laplace" => wright_core::run_laplace(&pairs, &spec).map_err(to_py_err)?,
        "limits" => wright_core::run_limits(&pairs, &spec).map_err(to_py_err)?,
        other => return Err(PyValueError::new_err(format!("unknown suite '{other}'"))),
    };
    Ok(rep.to_csv())
}

#[pymodule]
fn wright_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Eval>()?;
    m.add_function(wrap_pyfunction!(wright, m)?)?;
    m.add_function(wrap_pyfunction!(mittag_leffler, m)?)?;
    m.add_function(wrap_pyfunction!(ml_explicit, m)?)?;
    m.add_function(wrap_pyfunction!(mainardi_m, m)?)?;
    m.add_function(wrap_pyfunction!(mainardi_f, m)?)?;
    m.add_function(wrap_pyfunction!(dw_dalpha, m)?)?;
    m.add_function(wrap_pyfunction!(dw_dbeta, m)?)?;
    m.add_function(wrap_pyfunction!(d2w_dalpha2, m)?)?;
    m.add_function(wrap_pyfunction!(d2w_dbeta2, m)?)?;
    m.add_function(wrap_pyfunction!(de_dalpha, m)?)?;
    m.add_function(wrap_pyfunction!(de_dbeta, m)?)?;
    m.add_function(wrap_pyfunction!(df_dsigma, m)?)?;
    m.add_function(wrap_pyfunction!(dm_dsigma, m)?)?;
    m.add_function(wrap_pyfunction!(d2f_dsigma2, m)?)?;
    m.add_function(wrap_pyfunction!(d2m_dsigma2, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(operations, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_csv, m)?)?;
    Ok(())
}
