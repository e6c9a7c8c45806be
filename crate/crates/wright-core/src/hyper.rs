//! Gauss and confluent hypergeometric series. These back the closed-form
//! cross-checks: 0F1 ties Wright values to Bessel functions, 1F1 to the
//! explicit Mittag-Leffler forms, and 2F1 to the finite-order elements of
//! the delta-sequence family.

use crate::error::{Result, WrightError};
use crate::series::{sum_series, SeriesEval, Tolerance};

const NEG_INT_TOL: f64 = 1e-9;

/// Index n such that x is within 1e-9 of the non-positive integer -n.
fn as_nonpositive_integer(x: f64) -> Option<i64> {
    let r = x.round();
    if r <= 0.0 && (x - r).abs() <= NEG_INT_TOL {
        Some(-r as i64)
    } else {
        None
    }
}

/// 0F1(; b; z) = sum z^k / ((b)_k k!).
pub fn hyp0f1(b: f64, z: f64) -> Result<SeriesEval> {
    if as_nonpositive_integer(b).is_some() {
        return Err(WrightError::Domain(format!(
            "hyp0f1 undefined for non-positive integer b = {b}"
        )));
    }
    let tol = Tolerance::default();
    let mut term = 1.0f64;
    let mut k = 0.0f64;
    let iter = std::iter::from_fn(move || {
        let out = term;
        term *= z / ((b + k) * (k + 1.0));
        k += 1.0;
        Some(out)
    })
    .take(tol.max_terms);
    Ok(sum_series(iter, &tol))
}

/// Kummer confluent 1F1(a; b; z) = sum (a)_k z^k / ((b)_k k!).
///
/// For z < 0 the alternating series cancels badly, so the Kummer
/// transformation 1F1(a; b; z) = e^z 1F1(b-a; b; -z) is applied whenever
/// the transformed series has non-negative parameters.
pub fn hyp1f1(a: f64, b: f64, z: f64) -> Result<SeriesEval> {
    if as_nonpositive_integer(b).is_some() {
        return Err(WrightError::Domain(format!(
            "hyp1f1 undefined for non-positive integer b = {b}"
        )));
    }
    if z < 0.0 && as_nonpositive_integer(a).is_none() && b - a > 0.0 {
        let mut r = hyp1f1(b - a, b, -z)?;
        r.value *= z.exp();
        r.last_term_magnitude *= z.exp();
        return Ok(r);
    }
    let tol = Tolerance::default();
    let mut term = 1.0f64;
    let mut k = 0.0f64;
    let iter = std::iter::from_fn(move || {
        let out = term;
        term *= (a + k) * z / ((b + k) * (k + 1.0));
        k += 1.0;
        Some(out)
    })
    .take(tol.max_terms);
    Ok(sum_series(iter, &tol))
}

/// Gauss 2F1(a, b; c; z) = sum (a)_k (b)_k z^k / ((c)_k k!).
///
/// Exact finite sum when a or b is a non-positive integer (any z);
/// otherwise the defining series, which requires |z| < 1.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<SeriesEval> {
    let na = as_nonpositive_integer(a);
    let nb = as_nonpositive_integer(b);
    let terminates = match (na, nb) {
        (Some(n), Some(m)) => Some(n.min(m)),
        (Some(n), None) => Some(n),
        (None, Some(m)) => Some(m),
        (None, None) => None,
    };
    if let Some(nc) = as_nonpositive_integer(c) {
        // a pole of (c)_k is reached unless the numerator terminates first
        if terminates.map_or(true, |n| n > nc) {
            return Err(WrightError::Domain(format!(
                "hyp2f1 undefined for non-positive integer c = {c}"
            )));
        }
    }
    if terminates.is_none() && z.abs() >= 1.0 {
        return Err(WrightError::Domain(format!(
            "hyp2f1 series requires |z| < 1 for non-terminating parameters, got z = {z}"
        )));
    }
    let tol = Tolerance::default();
    let n_terms = terminates.map_or(tol.max_terms, |n| n as usize + 1);
    let mut term = 1.0f64;
    let mut k = 0.0f64;
    let iter = std::iter::from_fn(move || {
        let out = term;
        term *= (a + k) * (b + k) * z / ((c + k) * (k + 1.0));
        k += 1.0;
        Some(out)
    })
    .take(n_terms);
    let mut r = sum_series(iter, &tol);
    if terminates.is_some() {
        // a polynomial evaluated to its last coefficient is exact
        r.converged = true;
    }
    Ok(r)
}
