//! Parameter derivatives: d/dalpha and d/dbeta of the first-kind Wright
//! function and of the Mittag-Leffler function, and d/dsigma of the
//! Mainardi functions, together with the corresponding second derivatives.
//!
//! Differentiating the defining series termwise gives sums over the same
//! powers of the argument with the reciprocal-gamma factor replaced by its
//! parameter derivatives,
//!
//! ```text
//! d/dx  [1/Gamma(x)] = -psi(x)/Gamma(x)
//! d2/dx2[1/Gamma(x)] = (psi(x)^2 - psi'(x))/Gamma(x)
//! ```
//!
//! both of which extend continuously across the poles of Gamma; the scalar
//! module supplies them as total functions. The sigma derivatives of
//! M_sigma and F_sigma come from differentiating their reflection-form
//! series, whose terms depend on sigma through Gamma(sigma j) and
//! sin(pi sigma j).

use crate::bessel;
use crate::error::{Result, WrightError};
use crate::scalar;
use crate::series::{exp_signed, sum_series_full, SeriesEval, SeriesFull, Tolerance};

const PI: f64 = std::f64::consts::PI;

fn require_finite(v: f64, what: &str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(WrightError::Domain(format!("{what} must be finite, got {v}")))
    }
}

fn check_first_kind(alpha: f64, beta: f64, t: f64) -> Result<()> {
    require_finite(alpha, "alpha")?;
    require_finite(beta, "beta")?;
    require_finite(t, "t")?;
    if alpha < 0.0 {
        return Err(WrightError::Domain(format!(
            "parameter derivatives require alpha >= 0, got alpha = {alpha}"
        )));
    }
    Ok(())
}

fn check_ml(alpha: f64, beta: f64, z: f64) -> Result<()> {
    require_finite(alpha, "alpha")?;
    require_finite(beta, "beta")?;
    require_finite(z, "z")?;
    if alpha <= 0.0 {
        return Err(WrightError::Domain(format!(
            "mittag_leffler derivatives require alpha > 0, got alpha = {alpha}"
        )));
    }
    Ok(())
}

fn check_sigma(sigma: f64, t: f64) -> Result<()> {
    require_finite(sigma, "sigma")?;
    require_finite(t, "t")?;
    if sigma <= 0.0 || sigma >= 1.0 {
        return Err(WrightError::Domain(format!(
            "sigma must lie in (0, 1), got {sigma}"
        )));
    }
    Ok(())
}

/// Core sum for the first-kind and Mittag-Leffler parameter derivatives:
/// overall_sign * sum_k k^weight * c_k * kernel(alpha k + beta), where
/// c_k = t^k / k! (with_factorial) or t^k, the kernel is psi/Gamma for first
/// derivatives and (psi^2 - psi')/Gamma for second ones, and the k = 0 term
/// is skipped whenever the weight kills it.
fn kernel_series(
    alpha: f64,
    beta: f64,
    t: f64,
    weight: u32,
    second: bool,
    with_factorial: bool,
) -> Result<SeriesEval> {
    let tol = Tolerance::default();
    let overall = if second { 1.0 } else { -1.0 };
    let k0 = if weight > 0 { 1usize } else { 0usize };
    let mut coef = if k0 == 1 { t } else { 1.0 };
    let mut k = k0;
    let iter = std::iter::from_fn(move || {
        let x = alpha * k as f64 + beta;
        let kern = if second {
            scalar::psi2_rgamma(x)
        } else {
            scalar::psi_rgamma(x)
        };
        let w = (k as f64).powi(weight as i32);
        let term = overall * w * coef * kern;
        k += 1;
        coef *= t;
        if with_factorial {
            coef /= k as f64;
        }
        Some(term)
    })
    .take(tol.max_terms);
    let full = sum_series_full(iter, &tol);
    finish(full, "parameter derivative")
}

fn finish(full: SeriesFull, what: &str) -> Result<SeriesEval> {
    let mut eval = full.eval;
    if !eval.value.is_finite() {
        return Err(WrightError::Overflow(format!("{what} exceeds f64 range")));
    }
    if full.cancellation_error() > 1e-6 {
        eval.converged = false;
    }
    Ok(eval)
}

/// d/dalpha of the first-kind Wright function W_{alpha,beta}(t), alpha >= 0.
pub fn dw_dalpha(alpha: f64, beta: f64, t: f64) -> Result<SeriesEval> {
    check_first_kind(alpha, beta, t)?;
    kernel_series(alpha, beta, t, 1, false, true)
}

/// d/dbeta of the first-kind Wright function W_{alpha,beta}(t), alpha >= 0.
pub fn dw_dbeta(alpha: f64, beta: f64, t: f64) -> Result<SeriesEval> {
    check_first_kind(alpha, beta, t)?;
    kernel_series(alpha, beta, t, 0, false, true)
}

/// d2/dalpha2 of the first-kind Wright function W_{alpha,beta}(t).
pub fn d2w_dalpha2(alpha: f64, beta: f64, t: f64) -> Result<SeriesEval> {
    check_first_kind(alpha, beta, t)?;
    kernel_series(alpha, beta, t, 2, true, true)
}

/// d2/dbeta2 of the first-kind Wright function W_{alpha,beta}(t).
pub fn d2w_dbeta2(alpha: f64, beta: f64, t: f64) -> Result<SeriesEval> {
    check_first_kind(alpha, beta, t)?;
    kernel_series(alpha, beta, t, 0, true, true)
}

/// d/dalpha of the Mittag-Leffler function E_{alpha,beta}(z), alpha > 0.
pub fn de_dalpha(alpha: f64, beta: f64, z: f64) -> Result<SeriesEval> {
    check_ml(alpha, beta, z)?;
    kernel_series(alpha, beta, z, 1, false, false)
}

/// d/dbeta of the Mittag-Leffler function E_{alpha,beta}(z), alpha > 0.
pub fn de_dbeta(alpha: f64, beta: f64, z: f64) -> Result<SeriesEval> {
    check_ml(alpha, beta, z)?;
    kernel_series(alpha, beta, z, 0, false, false)
}

/// First-derivative bracket psi(x) sin(pi s) + pi cos(pi s) evaluated with
/// the digamma argument x and the trig phase s supplied separately.
fn bracket1(x: f64, s: f64) -> f64 {
    let psi = scalar::digamma(x).expect("positive argument");
    psi * scalar::sin_pi(s) + PI * scalar::cos_pi(s)
}

/// Second-derivative bracket
/// (psi(x)^2 + psi'(x) - pi^2) sin(pi s) + 2 pi psi(x) cos(pi s).
fn bracket2(x: f64, s: f64) -> f64 {
    let psi = scalar::digamma(x).expect("positive argument");
    let tri = scalar::trigamma(x).expect("positive argument");
    (psi * psi + tri - PI * PI) * scalar::sin_pi(s) + 2.0 * PI * psi * scalar::cos_pi(s)
}

/// Sigma-derivative series for M_sigma(t), t != 0:
/// (1/pi) sum_{j>=1} j^order (-t)^{j-1} Gamma(sigma j) B_order(sigma j) / (j-1)!
fn m_sigma_series(sigma: f64, t: f64, order: u32) -> Result<SeriesEval> {
    let tol = Tolerance::default();
    let ln_t = t.abs().ln();
    let neg_sign = if t < 0.0 { 1.0 } else { -1.0 }; // sign of (-t)
    let mut ln_fact = 0.0f64; // ln (j-1)!
    let mut sign = 1.0f64; // sign of (-t)^{j-1}
    let mut j = 1usize;
    let iter = std::iter::from_fn(move || {
        let x = sigma * j as f64;
        let (ln_g, _) = scalar::ln_abs_gamma(x).expect("positive argument");
        let ln_mag = ln_g + (j as f64 - 1.0) * ln_t - ln_fact;
        let b = if order == 1 { bracket1(x, x) } else { bracket2(x, x) };
        let w = (j as f64).powi(order as i32);
        let term = exp_signed(ln_mag, sign) * w * b / PI;
        ln_fact += (j as f64).ln();
        sign *= neg_sign;
        j += 1;
        Some(term)
    })
    .take(tol.max_terms);
    finish(sum_series_full(iter, &tol), "sigma derivative")
}

/// Sigma-derivative series for F_sigma(t), t != 0:
/// (1/pi) sum_{k>=1} k^order (-1)^{k-1} t^k Gamma(sigma k + 1)
///        B_order(sigma k + 1; pi sigma k) / k!
fn f_sigma_series(sigma: f64, t: f64, order: u32) -> Result<SeriesEval> {
    let tol = Tolerance::default();
    let ln_t = t.abs().ln();
    let t_sign = if t < 0.0 { -1.0 } else { 1.0 };
    let mut ln_fact = 0.0f64; // ln k!
    let mut sign_tk = 1.0f64; // sign of t^k, updated before use
    let mut k = 1usize;
    let iter = std::iter::from_fn(move || {
        ln_fact += (k as f64).ln();
        sign_tk *= t_sign;
        let s = sigma * k as f64;
        let (ln_g, _) = scalar::ln_abs_gamma(s + 1.0).expect("positive argument");
        let ln_mag = ln_g + k as f64 * ln_t - ln_fact;
        let alt = if (k - 1) % 2 == 0 { 1.0 } else { -1.0 };
        let b = if order == 1 {
            bracket1(s + 1.0, s)
        } else {
            bracket2(s + 1.0, s)
        };
        let w = (k as f64).powi(order as i32);
        let term = exp_signed(ln_mag, alt * sign_tk) * w * b / PI;
        k += 1;
        Some(term)
    })
    .take(tol.max_terms);
    finish(sum_series_full(iter, &tol), "sigma derivative")
}

fn constant_eval(value: f64) -> SeriesEval {
    SeriesEval {
        value,
        terms_used: 1,
        last_term_magnitude: 0.0,
        converged: true,
    }
}

/// d/dsigma of the Mainardi function M_sigma(t).
pub fn dm_dsigma(sigma: f64, t: f64) -> Result<SeriesEval> {
    check_sigma(sigma, t)?;
    if t == 0.0 {
        // j = 1 term of the series; equals psi(1-sigma)/Gamma(1-sigma)
        let g = scalar::gamma(sigma).expect("sigma in (0,1)");
        return Ok(constant_eval(g * bracket1(sigma, sigma) / PI));
    }
    m_sigma_series(sigma, t, 1)
}

/// d2/dsigma2 of the Mainardi function M_sigma(t).
pub fn d2m_dsigma2(sigma: f64, t: f64) -> Result<SeriesEval> {
    check_sigma(sigma, t)?;
    if t == 0.0 {
        let g = scalar::gamma(sigma).expect("sigma in (0,1)");
        return Ok(constant_eval(g * bracket2(sigma, sigma) / PI));
    }
    m_sigma_series(sigma, t, 2)
}

/// d/dsigma of the Mainardi function F_sigma(t). Zero at t = 0 because
/// every series term carries a factor of t.
pub fn df_dsigma(sigma: f64, t: f64) -> Result<SeriesEval> {
    check_sigma(sigma, t)?;
    if t == 0.0 {
        return Ok(constant_eval(0.0));
    }
    f_sigma_series(sigma, t, 1)
}

/// d2/dsigma2 of the Mainardi function F_sigma(t).
pub fn d2f_dsigma2(sigma: f64, t: f64) -> Result<SeriesEval> {
    check_sigma(sigma, t)?;
    if t == 0.0 {
        return Ok(constant_eval(0.0));
    }
    f_sigma_series(sigma, t, 2)
}

/// Closed form for the beta derivative of the first-kind Wright function on
/// the Bessel line alpha = 1: differentiating the reductions
///
///   W_{1, beta+1}(-t^2/4) = (2/t)^beta J_beta(t)
///   W_{1, beta+1}(+t^2/4) = (2/t)^beta I_beta(t)
///
/// in beta gives
///
///   dW/dbeta = (2/t)^beta [ dJ_beta/dnu - ln(t/2) J_beta(t) ]
///
/// (I in place of J when `modified` is set).  The order derivative comes
/// from the closed expressions at beta in {0, 1/2, 1} and from quadrature
/// of the integral representations at any other beta > 0; beta < 0 and
/// t <= 0 are rejected.  Entirely independent of the derivative series,
/// which is what makes the cross-check meaningful.
pub fn closed_form_dw_dbeta_bessel(beta: f64, t: f64, modified: bool) -> Result<f64> {
    if !t.is_finite() || t <= 0.0 {
        return Err(WrightError::Domain(format!(
            "closed_form_dw_dbeta_bessel requires t > 0, got t = {t}"
        )));
    }
    if !beta.is_finite() || beta < 0.0 {
        return Err(WrightError::Domain(format!(
            "closed_form_dw_dbeta_bessel requires beta >= 0, got beta = {beta}"
        )));
    }
    let near = |x: f64, v: f64| (x - v).abs() <= 1e-9;
    let dnu = if near(beta, 0.0) {
        if modified { bessel::di_dnu0(t)? } else { bessel::dj_dnu0(t)? }
    } else if near(beta, 0.5) {
        if modified { bessel::di_dnu_half(t)? } else { bessel::dj_dnu_half(t)? }
    } else if near(beta, 1.0) {
        if modified { bessel::di_dnu1(t)? } else { bessel::dj_dnu1(t)? }
    } else if modified {
        bessel::di_dnu_quad(beta, t)?
    } else {
        bessel::dj_dnu_quad(beta, t)?
    };
    let cyl = if modified {
        bessel::bessel_i(beta, t)?
    } else {
        bessel::bessel_j(beta, t)?
    };
    let value = (2.0 / t).powf(beta) * (dnu - (t / 2.0).ln() * cyl);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(WrightError::Overflow(format!(
            "closed_form_dw_dbeta_bessel({beta}, {t}) exceeds f64 range"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wright::{mainardi_f, mainardi_m, mittag_leffler, wright};
    use approx::assert_relative_eq;

    // reference values computed with mpmath at 40 digits

    #[test]
    fn dw_dalpha_table() {
        let cases = [
            (1.0, 1.0, 0.5, -0.340497321013380592398),
            (1.0, 1.0, 1.0, -0.999926769351511206434),
            (1.0, 1.0, 2.0, -3.716313513416661430249),
            (1.0, 1.0, 4.0, -19.15548548842017387212),
            (1.0, 2.0, 1.0, -0.704603958035351292601),
            (0.5, 1.0, 1.0, -0.8210879037697074475872),
            (2.0, 1.0, 1.0, -0.5254564906761132553839),
            (1.0, 1.0, -1.0, 0.05618076074181310120179),
            (0.8, 1.6, 1.2, -1.436238459496141592824),
        ];
        for &(a, b, t, want) in &cases {
            let r = dw_dalpha(a, b, t).unwrap();
            assert!(r.converged);
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn dw_dbeta_table() {
        let cases = [
            (1.0, 1.0, 0.5, 0.3036207729157554708846),
            (1.0, 1.0, 1.0, -0.1138938727495334356527),
            (1.0, 1.0, 2.0, -1.51614428543782521381),
            (1.0, 1.0, 4.0, -7.845055012117703667865),
            (1.0, 2.0, 1.0, -0.999926769351511206434),
            (0.5, 1.0, 1.0, 0.2141834278751265145754),
            (2.0, 1.0, 1.0, 0.08401031348848543134782),
            (1.0, 1.0, -1.0, 0.801696231883694215426),
            (0.8, 1.6, 1.2, -1.136445341258452649863),
        ];
        for &(a, b, t, want) in &cases {
            let r = dw_dbeta(a, b, t).unwrap();
            assert!(r.converged);
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn second_derivative_table() {
        let cases_a = [
            (1.0, 1.0, 1.0, 0.3757539360326350071007),
            (1.0, 2.0, 1.0, 0.8037508365568588857134),
            (0.8, 1.6, 1.2, 1.393463254662888476616),
            (1.0, 1.0, 2.0, 4.559399814269783762107),
        ];
        for &(a, b, t, want) in &cases_a {
            assert_relative_eq!(d2w_dalpha2(a, b, t).unwrap().value, want, max_relative = 1e-12);
        }
        let cases_b = [
            (1.0, 1.0, 1.0, -1.624099602670387405767),
            (1.0, 2.0, 1.0, -0.1148515717406043461939),
            (0.8, 1.6, 1.2, -0.7690632378230870600396),
            (1.0, 1.0, 2.0, -1.436613606281769549196),
        ];
        for &(a, b, t, want) in &cases_b {
            assert_relative_eq!(d2w_dbeta2(a, b, t).unwrap().value, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn ml_derivative_table() {
        let cases = [
            (1.0, 1.0, 1.0, -2.314629190782239309701, -0.5963473623231940743411),
            (1.0, 1.0, -1.0, -0.065054324406508390361, 0.6971748832350660687655),
            (0.5, 1.0, 0.5, -0.626390946358136332032, 0.3410762562682136626982),
            (1.0, 2.0, 1.0, -1.141066163557512374754, -1.173563027224726934948),
            (1.5, 1.0, -2.0, -0.02317658565906353013897, 1.00669705276064747648),
        ];
        for &(a, b, z, want_a, want_b) in &cases {
            assert_relative_eq!(de_dalpha(a, b, z).unwrap().value, want_a, max_relative = 1e-12);
            assert_relative_eq!(de_dbeta(a, b, z).unwrap().value, want_b, max_relative = 1e-12);
        }
    }

    #[test]
    fn sigma_derivative_table() {
        let third = 1.0 / 3.0;
        // (sigma, t, dM/ds, dF/ds, d2M/ds2, d2F/ds2)
        let cases = [
            (0.5, 0.5, -0.1882321930498388230632, 0.2179454840815688551086,
             -0.5670987189485540700104, -0.3300068727869773405658),
            (0.5, 1.0, 0.3529156286118261265909, 0.6158491037736354603423,
             1.422739506927445208686, 1.417201010687374857525),
            (0.5, 2.0, 0.2459055565377625231178, 0.661013053958357226458,
             0.5063848104722178212683, 1.490007036623267913739),
            (third, 1.0, 0.183422414663483155382, 0.4573802845943303022383,
             0.7395854478674416784268, 0.6133733119494468565546),
            (0.25, 0.8, 0.05899013123268281250812, 0.371935931521749205164,
             0.4595111553808121210902, 0.186286441048454934572),
            (0.6, 1.5, 0.7052055132549657612862, 1.200232197253761586591,
             3.749902192076863922478, 5.490528512634074689192),
        ];
        for &(s, t, m1, f1, m2, f2) in &cases {
            assert_relative_eq!(dm_dsigma(s, t).unwrap().value, m1, max_relative = 1e-11);
            assert_relative_eq!(df_dsigma(s, t).unwrap().value, f1, max_relative = 1e-11);
            assert_relative_eq!(d2m_dsigma2(s, t).unwrap().value, m2, max_relative = 1e-11);
            assert_relative_eq!(d2f_dsigma2(s, t).unwrap().value, f2, max_relative = 1e-11);
        }
    }

    #[test]
    fn sigma_derivatives_at_zero() {
        assert_relative_eq!(
            dm_dsigma(0.5, 0.0).unwrap().value,
            -1.107791903872871023171,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            d2m_dsigma2(0.5, 0.0).unwrap().value,
            -0.6090034884161106821637,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            dm_dsigma(0.3, 0.0).unwrap().value,
            -0.9398856296900172069506,
            max_relative = 1e-13
        );
        assert_eq!(df_dsigma(0.7, 0.0).unwrap().value, 0.0);
        assert_eq!(d2f_dsigma2(0.7, 0.0).unwrap().value, 0.0);
    }

    // independent finite-difference checks against the function evaluators

    fn central1(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x + h) - f(x - h)) / (2.0 * h)
    }

    fn central2(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
    }

    #[test]
    fn first_kind_matches_finite_differences() {
        let (a, b, t) = (0.8, 1.6, 1.2);
        let fa = |x: f64| wright(x, b, t).unwrap().value;
        let fb = |x: f64| wright(a, x, t).unwrap().value;
        assert_relative_eq!(dw_dalpha(a, b, t).unwrap().value, central1(fa, a, 1e-5), max_relative = 1e-8);
        assert_relative_eq!(dw_dbeta(a, b, t).unwrap().value, central1(fb, b, 1e-5), max_relative = 1e-8);
        // the difference quotient amplifies the evaluator's own rounding by
        // 1/h^2, so these two only corroborate at ~1e-5
        assert_relative_eq!(d2w_dalpha2(a, b, t).unwrap().value, central2(fa, a, 1e-4), max_relative = 1e-4);
        assert_relative_eq!(d2w_dbeta2(a, b, t).unwrap().value, central2(fb, b, 1e-4), max_relative = 1e-4);
    }

    #[test]
    fn ml_matches_finite_differences() {
        let (a, b, z) = (1.3, 0.9, 1.7);
        let fa = |x: f64| mittag_leffler(x, b, z).unwrap().value;
        let fb = |x: f64| mittag_leffler(a, x, z).unwrap().value;
        assert_relative_eq!(de_dalpha(a, b, z).unwrap().value, central1(fa, a, 1e-5), max_relative = 1e-8);
        assert_relative_eq!(de_dbeta(a, b, z).unwrap().value, central1(fb, b, 1e-5), max_relative = 1e-8);
    }

    #[test]
    fn sigma_matches_finite_differences() {
        let (s, t) = (0.37, 0.9);
        let fm = |x: f64| mainardi_m(x, t).unwrap().value;
        let ff = |x: f64| mainardi_f(x, t).unwrap().value;
        assert_relative_eq!(dm_dsigma(s, t).unwrap().value, central1(fm, s, 1e-5), max_relative = 1e-7);
        assert_relative_eq!(df_dsigma(s, t).unwrap().value, central1(ff, s, 1e-5), max_relative = 1e-7);
        assert_relative_eq!(d2m_dsigma2(s, t).unwrap().value, central2(fm, s, 1e-4), max_relative = 1e-4);
        assert_relative_eq!(d2f_dsigma2(s, t).unwrap().value, central2(ff, s, 1e-4), max_relative = 1e-4);
    }

    #[test]
    fn product_rule_ties_f_to_m() {
        // F = sigma t M gives dF/ds = t (M + sigma dM/ds) and
        // d2F/ds2 = t (2 dM/ds + sigma d2M/ds2)
        for &s in &[0.3, 0.5, 0.7] {
            for &t in &[0.5, 1.0, 2.0] {
                let m = mainardi_m(s, t).unwrap().value;
                let m1 = dm_dsigma(s, t).unwrap().value;
                let m2 = d2m_dsigma2(s, t).unwrap().value;
                assert_relative_eq!(
                    df_dsigma(s, t).unwrap().value,
                    t * (m + s * m1),
                    max_relative = 1e-10
                );
                assert_relative_eq!(
                    d2f_dsigma2(s, t).unwrap().value,
                    t * (2.0 * m1 + s * m2),
                    max_relative = 1e-10
                );
            }
        }
    }

    #[test]
    fn derivative_at_zero_argument() {
        // only the k = 0 term survives at t = 0
        assert_relative_eq!(
            dw_dbeta(1.0, 1.5, 0.0).unwrap().value,
            -scalar::psi_rgamma(1.5),
            max_relative = 1e-13
        );
        assert_eq!(dw_dalpha(1.0, 1.5, 0.0).unwrap().value, 0.0);
        assert_relative_eq!(
            de_dbeta(0.7, 2.0, 0.0).unwrap().value,
            -scalar::psi_rgamma(2.0),
            max_relative = 1e-13
        );
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(dw_dalpha(-0.1, 1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(de_dalpha(0.0, 1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(dm_dsigma(1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(d2f_dsigma2(0.0, 1.0), Err(WrightError::Domain(_))));
        assert!(dw_dbeta(1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn closed_form_bessel_frozen_values() {
        // at t = 2 the ln(t/2) term drops out and the closed form is the
        // bare order derivative; references from mpmath
        assert_relative_eq!(
            closed_form_dw_dbeta_bessel(0.0, 2.0, false).unwrap(),
            0.801696231883694215, // (pi/2) Y_0(2)
            max_relative = 1e-10
        );
        assert_relative_eq!(
            closed_form_dw_dbeta_bessel(0.0, 2.0, true).unwrap(),
            -0.113893872749533436, // -K_0(2)
            max_relative = 1e-10
        );
        assert_relative_eq!(
            closed_form_dw_dbeta_bessel(1.0, 2.0, false).unwrap(),
            -0.0561807607418131012,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            closed_form_dw_dbeta_bessel(1.0, 2.0, true).unwrap(),
            -0.999926769351511206,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            closed_form_dw_dbeta_bessel(0.5, 1.0, false).unwrap(),
            0.080996187193069015,
            max_relative = 1e-10
        );
    }

    #[test]
    fn closed_form_bessel_matches_derivative_series() {
        // dW/dbeta at (1, beta+1, -+t^2/4) from the series evaluator against
        // the Bessel closed form; the two share no code
        for &beta in &[0.0f64, 0.5, 1.0] {
            for &t in &[0.5f64, 1.0, 2.0, 4.0] {
                for &modified in &[false, true] {
                    let sign = if modified { 1.0 } else { -1.0 };
                    let series = dw_dbeta(1.0, beta + 1.0, sign * t * t / 4.0)
                        .unwrap()
                        .value;
                    let closed = closed_form_dw_dbeta_bessel(beta, t, modified).unwrap();
                    let scale = 1.0f64.max(series.abs());
                    assert!(
                        (closed - series).abs() <= 1e-8 * scale,
                        "beta={beta} t={t} modified={modified}: {closed} vs {series}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_bessel_quadrature_branch() {
        // orders away from {0, 1/2, 1} go through the integral representation
        for &beta in &[0.75f64, 1.5] {
            for &t in &[1.0f64, 2.0] {
                for &modified in &[false, true] {
                    let sign = if modified { 1.0 } else { -1.0 };
                    let series = dw_dbeta(1.0, beta + 1.0, sign * t * t / 4.0)
                        .unwrap()
                        .value;
                    let closed = closed_form_dw_dbeta_bessel(beta, t, modified).unwrap();
                    let scale = 1.0f64.max(series.abs());
                    assert!(
                        (closed - series).abs() <= 1e-7 * scale,
                        "beta={beta} t={t} modified={modified}: {closed} vs {series}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_bessel_domain() {
        assert!(matches!(
            closed_form_dw_dbeta_bessel(0.0, 0.0, false),
            Err(WrightError::Domain(_))
        ));
        assert!(matches!(
            closed_form_dw_dbeta_bessel(0.0, -1.0, true),
            Err(WrightError::Domain(_))
        ));
        assert!(matches!(
            closed_form_dw_dbeta_bessel(-0.5, 1.0, false),
            Err(WrightError::Domain(_))
        ));
    }
}
