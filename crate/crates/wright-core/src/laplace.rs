//! Laplace-transform consistency layer.
//!
//! A [`TransformPair`] names a time-domain function built from the library's
//! own evaluators together with the closed-form image it must match.
//! [`verify_pair`] integrates the time side with [`laplace_forward`] and
//! compares against the image on a grid of `s` values; since the quadrature
//! and the image share no code, agreement is strong evidence for both.

use crate::bessel::bessel_k;
use crate::error::{Result, WrightError};
use crate::hyper::hyp1f1;
use crate::quad::{laplace_forward, QuadratureSpec};
use crate::report::VerificationReport;
use crate::scalar::{gamma_p, rgamma};
use crate::series::SeriesEval;
use crate::wright::{mainardi_f, mainardi_m, mittag_leffler, wright};
use std::f64::consts::PI;

/// Closed-form E_{1, beta+1}(z) for beta > 0, built from the regularized
/// lower incomplete gamma function rather than the defining series:
///
///   E_{1, beta+1}(z) = e^z P(beta, z) / z^beta          (z > 0)
///   E_{1, beta+1}(z) = 1F1(1; beta+1; z) / Gamma(beta+1)  (z <= 0)
///
/// where P(a, z) = gamma(a, z)/Gamma(a).  The two branches share no code
/// with `mittag_leffler`, which makes the cross-check in the verification
/// suite meaningful.  At integer beta the positive branch reduces to the
/// familiar E_{1,2}(z) = (e^z - 1)/z ladder.
pub fn ml_explicit(beta: f64, z: f64) -> Result<SeriesEval> {
    if !beta.is_finite() || beta <= 0.0 {
        return Err(WrightError::Domain(format!(
            "ml_explicit requires beta > 0, got beta = {beta}"
        )));
    }
    if !z.is_finite() {
        return Err(WrightError::Domain(format!(
            "ml_explicit requires finite z, got z = {z}"
        )));
    }
    if z == 0.0 {
        return Ok(SeriesEval {
            value: rgamma(beta + 1.0),
            terms_used: 0,
            last_term_magnitude: 0.0,
            converged: true,
        });
    }
    if z > 0.0 {
        let p = gamma_p(beta, z)?;
        // log space: e^z / z^beta alone can overflow where the product is fine
        let value = (z - beta * z.ln() + p.ln()).exp();
        if !value.is_finite() {
            return Err(WrightError::Overflow(format!(
                "ml_explicit({beta}, {z}) exceeds f64 range"
            )));
        }
        Ok(SeriesEval {
            value,
            terms_used: 0,
            last_term_magnitude: 0.0,
            converged: true,
        })
    } else {
        let h = hyp1f1(1.0, beta + 1.0, z)?;
        Ok(SeriesEval {
            value: h.value * rgamma(beta + 1.0),
            ..h
        })
    }
}

/// One verifiable Laplace-transform identity: a named time-domain family
/// with parameters, an evaluation grid (s values for transforms, t values
/// for pointwise identities, delta orders for the limit families), and the
/// tolerances the comparison must meet.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformPair {
    pub name: String,
    pub family: String,
    pub params: Vec<(String, f64)>,
    pub grid: Vec<f64>,
    pub tol_rel: f64,
    pub tol_abs: f64,
    /// expensive row; the limits suite skips it when WRIGHT_SKIP_SLOW is set
    pub slow: bool,
}

impl TransformPair {
    pub fn param(&self, key: &str) -> Result<f64> {
        self.params
            .iter()
            .find(|(k, _)| k == key)
            .map(|&(_, v)| v)
            .ok_or_else(|| {
                WrightError::Manifest(format!(
                    "pair '{}' is missing parameter '{key}'",
                    self.name
                ))
            })
    }

    /// `alpha=1;beta=1.5;lambda=-1` style summary for report rows.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Time side, image side, and quadrature settings for one transform family.
struct PairCheck {
    time_side: Box<dyn Fn(f64) -> Result<f64>>,
    image: Box<dyn Fn(f64) -> Result<f64>>,
    growth_rate: f64,
    sqrt_sub: bool,
}

/// Images of W_{1,k}(-lambda^2 t^2 / 4) for k = 1, 2, 3 (Bessel J kernels
/// J0, 2 J1/(lambda t), 4 J2/(lambda t)^2 in disguise).
pub(crate) fn oscillatory_image(k: u32, lambda: f64, s: f64) -> f64 {
    let root = (s * s + lambda * lambda).sqrt();
    match k {
        1 => 1.0 / root,
        2 => 2.0 / (s + root),
        _ => {
            let u = 1.0 / (s + root);
            u + lambda * lambda * u.powi(3) / 3.0
        }
    }
}

/// F_sigma(x) decays like exp(-c x^{1/(1-sigma)}); beyond x = 60 it is far
/// below every tolerance in play, so skip the evaluation.  Keeps quadrature
/// abscissae arbitrarily close to t = 0 cheap and finite.
pub(crate) fn f_sigma_clipped(sigma: f64, x: f64) -> Result<f64> {
    if x > 60.0 {
        return Ok(0.0);
    }
    mainardi_f(sigma, x).map(|e| e.value)
}

fn pair_check(pair: &TransformPair) -> Result<PairCheck> {
    match pair.family.as_str() {
        "first_kind_ml" => {
            let a = pair.param("alpha")?;
            let b = pair.param("beta")?;
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| wright(a, b, l * t).map(|e| e.value)),
                image: Box::new(move |s| {
                    Ok(mittag_leffler(a, b, l / s)?.value / s)
                }),
                growth_rate: 0.0,
                sqrt_sub: false,
            })
        }
        "exp_shift" => {
            let a = pair.param("alpha")?;
            let b = pair.param("beta")?;
            let l = pair.param("lambda")?;
            let r = pair.param("rho")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    wright(a, b, l * t).map(|e| (r * t).exp() * e.value)
                }),
                image: Box::new(move |s| {
                    Ok(mittag_leffler(a, b, l / (s - r))?.value / (s - r))
                }),
                growth_rate: r.max(0.0),
                sqrt_sub: false,
            })
        }
        "sinh_shift" | "cosh_shift" => {
            let a = pair.param("alpha")?;
            let b = pair.param("beta")?;
            let l = pair.param("lambda")?;
            let r = pair.param("rho")?;
            let odd = pair.family == "sinh_shift";
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    let w = wright(a, b, l * t)?.value;
                    Ok(if odd { (r * t).sinh() } else { (r * t).cosh() } * w)
                }),
                image: Box::new(move |s| {
                    let gm = mittag_leffler(a, b, l / (s - r))?.value / (s - r);
                    let gp = mittag_leffler(a, b, l / (s + r))?.value / (s + r);
                    Ok(0.5 * if odd { gm - gp } else { gm + gp })
                }),
                growth_rate: r.abs(),
                sqrt_sub: false,
            })
        }
        "t_weighted_ml" => {
            let a = pair.param("alpha")?;
            let b = pair.param("beta")?;
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| wright(a, b, l * t).map(|e| t * e.value)),
                image: Box::new(move |s| {
                    let e1 = mittag_leffler(a, b, l / s)?.value;
                    let e0 = mittag_leffler(a, b - 1.0, l / s)?.value;
                    Ok(((a - b + 1.0) * e1 + e0) / (a * s * s))
                }),
                growth_rate: 0.0,
                sqrt_sub: false,
            })
        }
        "oscillatory_bessel" => {
            let k = pair.param("k")?;
            let l = pair.param("lambda")?;
            let ki = k.round();
            if (k - ki).abs() > 1e-9 || !(1.0..=3.0).contains(&ki) {
                return Err(WrightError::Manifest(format!(
                    "oscillatory_bessel needs k in {{1,2,3}}, got k = {k}"
                )));
            }
            let ku = ki as u32;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    wright(1.0, ki, -(l * l * t * t) / 4.0).map(|e| e.value)
                }),
                image: Box::new(move |s| Ok(oscillatory_image(ku, l, s))),
                growth_rate: 0.0,
                sqrt_sub: false,
            })
        }
        "gauss_kernel" => {
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    f_sigma_clipped(0.5, l / t.sqrt()).map(|v| v / t)
                }),
                image: Box::new(move |s| Ok((-l * s.sqrt()).exp())),
                growth_rate: 0.0,
                sqrt_sub: true,
            })
        }
        "gauss_kernel_t" => {
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| f_sigma_clipped(0.5, l / t.sqrt())),
                image: Box::new(move |s| {
                    Ok(l / (2.0 * s.sqrt()) * (-l * s.sqrt()).exp())
                }),
                growth_rate: 0.0,
                sqrt_sub: true,
            })
        }
        "gauss_kernel_wright" => {
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    let x = l / t.sqrt();
                    if x > 60.0 {
                        return Ok(0.0);
                    }
                    wright(-0.5, 0.5, -x).map(|e| x * e.value)
                }),
                image: Box::new(move |s| Ok(l / s.sqrt() * (-l * s.sqrt()).exp())),
                growth_rate: 0.0,
                sqrt_sub: true,
            })
        }
        "gauss_t_weighted" => {
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    f_sigma_clipped(0.5, l / t.sqrt()).map(|v| t * v)
                }),
                image: Box::new(move |s| {
                    let rs = s.sqrt();
                    Ok(l * l / (4.0 * s) * (1.0 + 1.0 / (l * rs)) * (-l * rs).exp())
                }),
                growth_rate: 0.0,
                sqrt_sub: true,
            })
        }
        "gauss_t_weighted_w" => {
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    let x = l / t.sqrt();
                    if x > 60.0 {
                        return Ok(0.0);
                    }
                    wright(-0.5, 0.0, -x).map(|e| 2.0 * t * e.value)
                }),
                image: Box::new(move |s| {
                    let rs = s.sqrt();
                    Ok(l * l / (2.0 * s) * (1.0 + 1.0 / (l * rs)) * (-l * rs).exp())
                }),
                growth_rate: 0.0,
                sqrt_sub: true,
            })
        }
        "airy_kernel" => {
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    f_sigma_clipped(1.0 / 3.0, l / t.cbrt()).map(|v| v / t)
                }),
                image: Box::new(move |s| Ok((-l * s.cbrt()).exp())),
                growth_rate: 0.0,
                sqrt_sub: true,
            })
        }
        "airy_weighted" => {
            let l = pair.param("lambda")?;
            Ok(PairCheck {
                time_side: Box::new(move |t| {
                    f_sigma_clipped(1.0 / 3.0, l / t.cbrt()).map(|v| 3.0 * v)
                }),
                image: Box::new(move |s| {
                    Ok(l * (-l * s.cbrt()).exp() / s.powf(2.0 / 3.0))
                }),
                growth_rate: 0.0,
                sqrt_sub: true,
            })
        }
        "second_kind" => {
            let sg = pair.param("sigma")?;
            let b = pair.param("beta")?;
            if !(0.0 < sg && sg < 1.0) {
                return Err(WrightError::Manifest(format!(
                    "second_kind needs 0 < sigma < 1, got sigma = {sg}"
                )));
            }
            Ok(PairCheck {
                time_side: Box::new(move |t| wright(-sg, b, -t).map(|e| e.value)),
                image: Box::new(move |s| {
                    mittag_leffler(sg, b + sg, -s).map(|e| e.value)
                }),
                growth_rate: 0.0,
                sqrt_sub: false,
            })
        }
        other => Err(WrightError::Manifest(format!(
            "unknown transform family '{other}'"
        ))),
    }
}

/// Pointwise identity 3 F_{1/3}(lambda t^{-1/3}) = lambda^{3/2} / (pi sqrt(t))
/// K_{1/3}(2 lambda^{3/2} / sqrt(27 t)); with `use_m` the left side is taken
/// through M instead, lambda t^{-1/3} M_{1/3}(lambda t^{-1/3}).
fn airy_pointwise_rows(pair: &TransformPair, use_m: bool) -> Result<VerificationReport> {
    let l = pair.param("lambda")?;
    let mut rep = VerificationReport::new();
    for &t in &pair.grid {
        let x = l / t.cbrt();
        let lhs = if use_m {
            mainardi_m(1.0 / 3.0, x).map(|e| x * e.value)
        } else {
            mainardi_f(1.0 / 3.0, x).map(|e| 3.0 * e.value)
        }
        .unwrap_or(f64::NAN);
        let arg = 2.0 * l.powf(1.5) / (27.0 * t).sqrt();
        let rhs = bessel_k(1.0 / 3.0, arg)
            .map(|k| l.powf(1.5) / (PI * t.sqrt()) * k)
            .unwrap_or(f64::NAN);
        rep.check(
            &pair.name,
            format!("lambda={l};t={t}"),
            lhs,
            rhs,
            pair.tol_rel,
            pair.tol_abs,
        );
    }
    Ok(rep)
}

/// Runs one transform pair: quadrature of the time side at every grid `s`
/// against the closed-form image.  A point where either side fails to
/// evaluate becomes a NaN row (which can never pass) rather than an error;
/// `Err` is reserved for structural problems such as an unknown family or a
/// missing parameter.
pub fn verify_pair(pair: &TransformPair, spec: &QuadratureSpec) -> Result<VerificationReport> {
    if pair.family.starts_with("lamborn_") {
        return Err(WrightError::Manifest(format!(
            "pair '{}' has delta-limit family '{}'; run it through the limits suite",
            pair.name, pair.family
        )));
    }
    match pair.family.as_str() {
        "airy_pointwise" => return airy_pointwise_rows(pair, false),
        "airy_pointwise_m" => return airy_pointwise_rows(pair, true),
        _ => {}
    }
    let chk = pair_check(pair)?;
    let qs = QuadratureSpec {
        growth_rate: chk.growth_rate,
        sqrt_substitution: chk.sqrt_sub,
        ..spec.clone()
    };
    let mut rep = VerificationReport::new();
    for &s in &pair.grid {
        let lhs = laplace_forward(|t| (chk.time_side)(t).unwrap_or(f64::NAN), s, &qs)
            .unwrap_or(f64::NAN);
        let rhs = (chk.image)(s).unwrap_or(f64::NAN);
        let params = if pair.params.is_empty() {
            format!("s={s}")
        } else {
            format!("{};s={s}", pair.params_string())
        };
        rep.check(&pair.name, params, lhs, rhs, pair.tol_rel, pair.tol_abs);
    }
    Ok(rep)
}

/// Checks L{W_{-sigma, beta}(-t)}(s) = E_{sigma, beta+sigma}(-s) on the given
/// s grid: the transform of a second-kind Wright function against the
/// two-parameter Mittag-Leffler series.
pub fn second_kind_transform_check(
    sigma: f64,
    beta: f64,
    s_grid: &[f64],
    spec: &QuadratureSpec,
) -> Result<VerificationReport> {
    let pair = TransformPair {
        name: format!("second_kind_sigma{sigma}_beta{beta}"),
        family: "second_kind".into(),
        params: vec![("sigma".into(), sigma), ("beta".into(), beta)],
        grid: s_grid.to_vec(),
        tol_rel: 1e-6,
        tol_abs: 1e-8,
        slow: false,
    };
    verify_pair(&pair, spec)
}

fn mk(
    name: &str,
    family: &str,
    params: &[(&str, f64)],
    grid: &[f64],
    tol_rel: f64,
) -> TransformPair {
    TransformPair {
        name: name.into(),
        family: family.into(),
        params: params.iter().map(|&(k, v)| (k.into(), v)).collect(),
        grid: grid.to_vec(),
        tol_rel,
        tol_abs: 1e-8,
        slow: false,
    }
}

/// The compiled-in pair catalog.  `manifests/laplace_pairs.txt` carries the
/// same rows in text form for the CLI; a test keeps the two in sync.
pub fn builtin_pairs() -> Vec<TransformPair> {
    let mut v = vec![
        // W_{alpha,beta}(lambda t) against E_{alpha,beta}(lambda/s)/s
        mk("fk_ml_pos", "first_kind_ml",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", 1.0)], &[0.5, 1.0, 2.0], 1e-6),
        mk("fk_ml_neg", "first_kind_ml",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", -1.0)], &[0.5, 1.0, 2.0], 1e-6),
        mk("fk_ml_half", "first_kind_ml",
           &[("alpha", 0.5), ("beta", 1.0), ("lambda", 1.0)], &[0.5, 1.0, 2.0], 1e-6),
        mk("fk_ml_half_neg", "first_kind_ml",
           &[("alpha", 0.5), ("beta", 2.0), ("lambda", -1.0)], &[0.5, 1.0, 2.0], 1e-6),
        mk("fk_ml_a2", "first_kind_ml",
           &[("alpha", 2.0), ("beta", 1.5), ("lambda", 1.0)], &[0.5, 1.0, 2.0], 1e-6),
        // exponentially shifted time side, image at s -+ rho
        mk("exp_shift_pos", "exp_shift",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", 1.0), ("rho", 0.5)], &[1.0, 2.0], 1e-6),
        mk("exp_shift_neg", "exp_shift",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", 1.0), ("rho", -0.5)], &[1.0, 2.0], 1e-6),
        mk("sinh_shift", "sinh_shift",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", 1.0), ("rho", 0.5)], &[1.0, 2.0], 1e-6),
        mk("cosh_shift", "cosh_shift",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", 1.0), ("rho", 0.5)], &[1.0, 2.0], 1e-6),
        // t W_{alpha,beta}(lambda t); the image mixes E_{alpha,beta} and
        // E_{alpha,beta-1} and is divided by alpha, not alpha*lambda
        mk("t_weighted", "t_weighted_ml",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        mk("t_weighted_lam2", "t_weighted_ml",
           &[("alpha", 1.0), ("beta", 2.0), ("lambda", 2.0)], &[1.0, 2.0], 1e-6),
        mk("t_weighted_half", "t_weighted_ml",
           &[("alpha", 0.5), ("beta", 1.5), ("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        // Bessel J kernels: alternating first-kind series; keep s >= lambda
        // so rounding noise in the tail stays below the transform tolerance
        mk("osc_j0", "oscillatory_bessel",
           &[("k", 1.0), ("lambda", 1.0)], &[1.0, 2.0, 4.0], 1e-6),
        mk("osc_j1", "oscillatory_bessel",
           &[("k", 2.0), ("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        mk("osc_j2", "oscillatory_bessel",
           &[("k", 3.0), ("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        mk("osc_j0_lam2", "oscillatory_bessel",
           &[("k", 1.0), ("lambda", 2.0)], &[2.0, 4.0], 1e-6),
        // Gaussian-tailed kernels in lambda/sqrt(t)
        mk("gauss_inv_t", "gauss_kernel", &[("lambda", 1.0)], &[0.5, 1.0, 2.0], 1e-6),
        mk("gauss_inv_t_lam2", "gauss_kernel", &[("lambda", 2.0)], &[1.0, 2.0], 1e-6),
        mk("gauss_plain", "gauss_kernel_t", &[("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        mk("gauss_plain_lam2", "gauss_kernel_t", &[("lambda", 2.0)], &[1.0], 1e-6),
        mk("gauss_wright", "gauss_kernel_wright", &[("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        mk("gauss_t1", "gauss_t_weighted", &[("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        mk("gauss_t1_w", "gauss_t_weighted_w", &[("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        // one-sided stable-like kernels in lambda/t^{1/3}
        mk("airy_inv_t", "airy_kernel", &[("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        mk("airy_inv_t_lam2", "airy_kernel", &[("lambda", 2.0)], &[1.0], 1e-6),
        mk("airy_weighted", "airy_weighted", &[("lambda", 1.0)], &[1.0, 2.0], 1e-6),
        // pointwise K_{1/3} identity, grid is t not s
        mk("airy_point_f", "airy_pointwise", &[("lambda", 1.0)], &[0.5, 1.0, 2.0], 1e-8),
        mk("airy_point_m", "airy_pointwise_m", &[("lambda", 1.0)], &[0.5, 1.0, 2.0], 1e-8),
        // second kind: L{W_{-sigma,beta}(-t)} = E_{sigma,beta+sigma}(-s)
        mk("sk_m_half", "second_kind",
           &[("sigma", 0.5), ("beta", 0.5)], &[0.5, 1.0, 2.0], 1e-6),
        mk("sk_w_half", "second_kind",
           &[("sigma", 0.5), ("beta", 1.0)], &[0.5, 1.0, 2.0], 1e-6),
        mk("sk_third", "second_kind",
           &[("sigma", 1.0 / 3.0), ("beta", 2.0 / 3.0)], &[0.5, 1.0, 2.0], 1e-6),
        // delta-sequence limit rows (run by the limits suite); the grid is
        // the sequence order nu and tol_rel binds at the largest order
        mk("lam_hyp_j0", "lamborn_hyp", &[("beta", 0.0), ("t", 2.0)], &[101.0, 401.0], 0.01),
        mk("lam_w11_pos", "lamborn_wright",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", 1.0)], &[101.0, 401.0], 0.01),
        mk("lam_w11_neg", "lamborn_wright",
           &[("alpha", 1.0), ("beta", 1.0), ("lambda", -1.0)], &[101.0, 401.0], 0.01),
        mk("lam_w12_pos", "lamborn_wright",
           &[("alpha", 1.0), ("beta", 2.0), ("lambda", 1.0)], &[101.0, 401.0], 0.01),
        mk("lam_w12_neg", "lamborn_wright",
           &[("alpha", 1.0), ("beta", 2.0), ("lambda", -1.0)], &[101.0, 401.0], 0.01),
        mk("lam_w11_osc", "lamborn_osc",
           &[("k", 1.0), ("lambda", 1.0)], &[101.0, 401.0], 0.01),
        mk("lam_w12_osc", "lamborn_osc",
           &[("k", 2.0), ("lambda", 1.0)], &[101.0, 401.0], 0.01),
        mk("lam_w13_osc", "lamborn_osc",
           &[("k", 3.0), ("lambda", 1.0)], &[101.0, 401.0], 0.01),
        mk("lam_f13", "lamborn_f13", &[("lambda", 1.0)], &[101.0, 401.0], 0.01),
    ];
    // exponentially weighted delta limits converge more slowly; 2% at the
    // top order and flagged slow
    v.push(mk("lam_exp", "lamborn_exp", &[("rho", 0.5)], &[101.0, 401.0], 0.02));
    v.push(mk("lam_sinh", "lamborn_sinh", &[("rho", 0.5)], &[101.0, 401.0], 0.02));
    v.push(mk("lam_cosh", "lamborn_cosh", &[("rho", 0.5)], &[101.0, 401.0], 0.02));
    v
}
