//! Delta-sequence limits.
//!
//! The kernel `nu^{nu+1} / (sqrt(nu^2 + xi^2) (xi + sqrt(nu^2 + xi^2))^nu)`
//! has unit mass on [0, inf) for every order nu (substituting xi = nu sinh u
//! collapses the integral to int_0^inf nu e^{-nu u} du), and it converges
//! pointwise to e^{-xi} as nu grows.  Smearing a function against it and
//! driving nu to infinity therefore recovers the function's Laplace
//! transform at s = 1, which gives an entirely independent road to the
//! transform values checked elsewhere in the crate.

use crate::error::{Result, WrightError};
use crate::hyper::hyp2f1;
use crate::quad::{laplace_forward, QuadratureSpec};
use crate::series::SeriesEval;

/// Validated order of the delta sequence.  Orders below 3 are useless in
/// practice (the kernel is nowhere near its limit) and the hypergeometric
/// form additionally needs an odd integer, which it checks itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambornOrder {
    nu: f64,
}

impl LambornOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < 3.0 {
            return Err(WrightError::Domain(format!(
                "delta-sequence order must be finite and >= 3, got nu = {nu}"
            )));
        }
        Ok(LambornOrder { nu })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// Kernel value at xi >= 0, evaluated in log space so large orders neither
/// overflow nu^{nu+1} nor underflow the denominator.
pub fn lamborn_kernel(xi: f64, order: &LambornOrder) -> f64 {
    let nu = order.nu;
    let root = (nu * nu + xi * xi).sqrt();
    ((nu + 1.0) * nu.ln() - root.ln() - nu * (xi + root).ln()).exp()
}

/// Integral of f against the order-nu kernel over xi in [0, inf).
///
/// Computed through the exact substitution xi = nu sinh u, which turns the
/// smearing integral into a Laplace transform at s = nu of
/// g(u) = nu f(nu sinh u); the kernel itself disappears analytically, so
/// no sample of the kernel tail is ever needed.  An evaluation failure of
/// `f` inside the integration region surfaces as a quadrature failure.
pub fn lamborn_limit<F>(f: F, order: &LambornOrder, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let nu = order.nu;
    let g = move |u: f64| match f(nu * u.sinh()) {
        Ok(v) => nu * v,
        Err(_) => f64::NAN,
    };
    laplace_forward(g, nu, spec)
}

/// Terminating Gauss hypergeometric approximant
/// 2F1((nu+1)/2, (1-nu)/2; beta+1; t^2/nu^2) for odd integer nu.
///
/// As nu -> infinity this tends to Gamma(beta+1) W_{1,beta+1}(-t^2/4); at
/// beta = 0 that is J_0(t), at beta = -1/2 it is cos t, and at beta = 1/2
/// it is sin(t)/t.  Requires beta > -1 and 0 < t < nu.
pub fn wright_limit_hyp(t: f64, beta: f64, order: &LambornOrder) -> Result<SeriesEval> {
    let nu = order.nu;
    let rounded = nu.round();
    if (nu - rounded).abs() > 1e-9 || (rounded as i64) % 2 != 1 {
        return Err(WrightError::Domain(format!(
            "hypergeometric delta form needs an odd integer order, got nu = {nu}"
        )));
    }
    if !(beta > -1.0) {
        return Err(WrightError::Domain(format!(
            "hypergeometric delta form needs beta > -1, got beta = {beta}"
        )));
    }
    if !(t > 0.0 && t < nu) {
        return Err(WrightError::Domain(format!(
            "hypergeometric delta form needs 0 < t < nu, got t = {t}, nu = {nu}"
        )));
    }
    hyp2f1(
        (rounded + 1.0) / 2.0,
        (1.0 - rounded) / 2.0,
        beta + 1.0,
        (t * t) / (rounded * rounded),
    )
}
