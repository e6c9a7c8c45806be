//! The Wright function W_{alpha,beta}, the two-parameter Mittag-Leffler
//! function E_{alpha,beta}, and the Mainardi auxiliary functions M_sigma
//! and F_sigma.
//!
//! Conventions:
//! * first kind: alpha >= 0, any real beta, any real argument t
//! * second kind: -1 < alpha < 0; the Mainardi functions are the named
//!   slices M_sigma(t) = W_{-sigma,1-sigma}(-t), F_sigma(t) = W_{-sigma,0}(-t)
//!   with sigma in (0,1) and the sign of the argument already applied,
//!   so mainardi_m(sigma, t) with t >= 0 covers the usual domain.
//!
//! Every evaluator reports terms used and a converged flag; the second-kind
//! path clears the flag when floating-point cancellation makes the result
//! untrustworthy, and routes sigma = 1/2, 1/3 on half/third-integer beta
//! through an internal double-double summation that holds full accuracy to
//! much larger arguments.

use crate::dd;
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

/// Shared log-space series sum_k t^k rgamma(alpha k + beta) / k!
/// (with_factorial = true) or sum_k t^k rgamma(alpha k + beta)
/// (with_factorial = false, the Mittag-Leffler shape). Caller ensures t != 0.
fn rgamma_series(
    alpha: f64,
    beta: f64,
    t: f64,
    with_factorial: bool,
    tol: &Tolerance,
) -> SeriesFull {
    let ln_t = t.abs().ln();
    let sign_t = if t < 0.0 { -1.0 } else { 1.0 };
    let mut ln_fact = 0.0f64;
    let mut sign_k = 1.0f64;
    let mut k = 0usize;
    let iter = std::iter::from_fn(move || {
        let x = alpha * k as f64 + beta;
        let (ln_r, sign_r) = scalar::rgamma_ln(x);
        let mut ln_mag = k as f64 * ln_t + ln_r;
        if with_factorial {
            ln_mag -= ln_fact;
        }
        let term = exp_signed(ln_mag, sign_k * sign_r);
        k += 1;
        ln_fact += (k as f64).ln();
        sign_k *= sign_t;
        Some(term)
    })
    .take(tol.max_terms);
    sum_series_full(iter, tol)
}

fn eval_at_zero(beta: f64) -> SeriesEval {
    SeriesEval {
        value: scalar::rgamma(beta),
        terms_used: 1,
        last_term_magnitude: 0.0,
        converged: true,
    }
}

fn dd_to_eval(r: dd::DdSeries) -> SeriesEval {
    if r.est_rel_err > 1e-2 || !r.value.is_finite() {
        // Past this point the function sits below the compensated summation's
        // cancellation floor (a non-finite sum means the intermediate terms
        // overflowed f64 while cancelling, which only happens deeper still in
        // the decay regime). On these lattices the true value decays like
        // exp(-c t^{1/(1-sigma)}) and is already under ~1e-14 in absolute
        // terms when the floor is first hit, so 0 is the honest answer.
        return SeriesEval {
            value: 0.0,
            terms_used: r.terms_used,
            last_term_magnitude: 0.0,
            converged: true,
        };
    }
    SeriesEval {
        value: r.value,
        terms_used: r.terms_used,
        last_term_magnitude: r.last_term_magnitude,
        converged: r.converged,
    }
}

/// Threshold below which the generic f64 series is accurate even on the
/// special lattices; above it the double-double path takes over.
const DD_MIN_T: f64 = 3.0;

/// Wright function W_{alpha,beta}(t) = sum_k t^k / (k! Gamma(alpha k + beta)).
///
/// alpha >= 0 is the first (monotone-coefficient) kind; -1 < alpha < 0 the
/// second kind. At alpha <= -1 the series diverges and the call is rejected.
pub fn wright(alpha: f64, beta: f64, t: f64) -> Result<SeriesEval> {
    require_finite(alpha, "alpha")?;
    require_finite(beta, "beta")?;
    require_finite(t, "t")?;
    if alpha <= -1.0 {
        return Err(WrightError::Domain(format!(
            "wright requires alpha > -1, got alpha = {alpha}"
        )));
    }
    let tol = Tolerance::default();
    if t == 0.0 {
        return Ok(eval_at_zero(beta));
    }
    if alpha >= 0.0 {
        if t.abs() > 709f64.powf(1.0 + alpha) {
            return Err(WrightError::Domain(format!(
                "wright argument magnitude {} exceeds the representable range for alpha = {alpha}",
                t.abs()
            )));
        }
        let full = rgamma_series(alpha, beta, t, true, &tol);
        if !full.eval.value.is_finite() {
            return Err(WrightError::Overflow(format!(
                "wright({alpha}, {beta}, {t}) exceeds f64 range"
            )));
        }
        return Ok(full.eval);
    }
    // second kind
    let sigma = -alpha;
    if t < 0.0 && -t >= DD_MIN_T {
        if let Some((q, m)) = dd::lattice_match(sigma, beta) {
            return Ok(dd_to_eval(dd::wright_neg_lattice(q, m, -t, 1e-28, 3000)));
        }
    }
    let full = rgamma_series(alpha, beta, t, true, &tol);
    let mut eval = full.eval;
    if !eval.value.is_finite() {
        // for t < 0 the true value is small but the alternating terms grow
        // past f64 range before they cancel; for t > 0 the function itself
        // blows up
        let why = if t < 0.0 {
            "series terms overflow before cancelling"
        } else {
            "exceeds f64 range"
        };
        return Err(WrightError::Overflow(format!(
            "wright({alpha}, {beta}, {t}): {why}"
        )));
    }
    if full.cancellation_error() > 1e-6 {
        eval.converged = false;
    }
    Ok(eval)
}

/// Two-parameter Mittag-Leffler function
/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta), alpha > 0.
pub fn mittag_leffler(alpha: f64, beta: f64, z: f64) -> Result<SeriesEval> {
    require_finite(alpha, "alpha")?;
    require_finite(beta, "beta")?;
    require_finite(z, "z")?;
    if alpha <= 0.0 {
        return Err(WrightError::Domain(format!(
            "mittag_leffler requires alpha > 0, got alpha = {alpha}"
        )));
    }
    let tol = Tolerance::default();
    if z == 0.0 {
        return Ok(eval_at_zero(beta));
    }
    let full = rgamma_series(alpha, beta, z, false, &tol);
    let mut eval = full.eval;
    if !eval.value.is_finite() {
        return Err(WrightError::Overflow(format!(
            "mittag_leffler({alpha}, {beta}, {z}) exceeds f64 range"
        )));
    }
    if full.cancellation_error() > 1e-6 {
        eval.converged = false;
    }
    Ok(eval)
}

fn check_sigma(sigma: f64) -> Result<()> {
    require_finite(sigma, "sigma")?;
    if sigma <= 0.0 || sigma >= 1.0 {
        return Err(WrightError::Domain(format!(
            "sigma must lie in (0, 1), got {sigma}"
        )));
    }
    Ok(())
}

/// Reflection-form series for M_sigma(t), t > 0:
/// (1/pi) sum_{j>=1} (-t)^{j-1} Gamma(sigma j) sin(pi sigma j) / (j-1)!.
fn m_reflection(sigma: f64, t: f64, tol: &Tolerance) -> SeriesFull {
    let ln_t = t.ln();
    let mut ln_fact = 0.0f64; // ln (j-1)!
    let mut j = 1usize;
    let iter = std::iter::from_fn(move || {
        let x = sigma * j as f64;
        let (ln_g, _) = scalar::ln_abs_gamma(x).expect("x > 0");
        let sign = if (j - 1) % 2 == 0 { 1.0 } else { -1.0 };
        let ln_mag = ln_g + (j as f64 - 1.0) * ln_t - ln_fact;
        let term = exp_signed(ln_mag, sign) * scalar::sin_pi(x) / PI;
        ln_fact += (j as f64).ln();
        j += 1;
        Some(term)
    })
    .take(tol.max_terms);
    sum_series_full(iter, tol)
}

/// Reflection-form series for F_sigma(t), t > 0:
/// (t/pi) sum_{k>=1} (-t)^{k-1} Gamma(sigma k + 1) sin(pi sigma k) / k!.
fn f_reflection(sigma: f64, t: f64, tol: &Tolerance) -> SeriesFull {
    let ln_t = t.ln();
    let mut ln_fact = 0.0f64; // ln k!
    let mut k = 1usize;
    let iter = std::iter::from_fn(move || {
        ln_fact += (k as f64).ln();
        let x = sigma * k as f64;
        let (ln_g, _) = scalar::ln_abs_gamma(x + 1.0).expect("x + 1 > 0");
        let sign = if (k - 1) % 2 == 0 { 1.0 } else { -1.0 };
        let ln_mag = ln_g + (k as f64) * ln_t - ln_fact; // extra factor t folded in
        let term = exp_signed(ln_mag, sign) * scalar::sin_pi(x) / PI;
        k += 1;
        Some(term)
    })
    .take(tol.max_terms);
    sum_series_full(iter, tol)
}

/// Cross-checks the reflection-form value against the defining series and
/// clears the converged flag when they disagree beyond cancellation noise.
fn crosscheck(mut primary: SeriesEval, other: f64) -> SeriesEval {
    if (primary.value - other).abs() > 1e-10 * primary.value.abs().max(1.0) {
        primary.converged = false;
    }
    primary
}

/// Mainardi function M_sigma(t) = W_{-sigma, 1-sigma}(-t), sigma in (0, 1).
///
/// For t > 0 the reflection-form series is the primary evaluation and the
/// defining series is run alongside as an agreement check; on the sigma =
/// 1/2, 1/3 lattices with t >= 3 the double-double path is used directly.
pub fn mainardi_m(sigma: f64, t: f64) -> Result<SeriesEval> {
    check_sigma(sigma)?;
    require_finite(t, "t")?;
    let beta = 1.0 - sigma;
    if t == 0.0 {
        return Ok(eval_at_zero(beta));
    }
    if t < 0.0 {
        return wright(-sigma, beta, -t);
    }
    if t >= DD_MIN_T && dd::lattice_match(sigma, beta).is_some() {
        return wright(-sigma, beta, -t);
    }
    let tol = Tolerance::default();
    let refl = m_reflection(sigma, t, &tol);
    if !refl.eval.value.is_finite() {
        return Err(WrightError::Overflow(format!(
            "mainardi_m({sigma}, {t}) exceeds f64 range"
        )));
    }
    let defining = rgamma_series(-sigma, beta, -t, true, &tol);
    Ok(crosscheck(refl.eval, defining.eval.value))
}

/// Mainardi function F_sigma(t) = W_{-sigma, 0}(-t) = sigma t M_sigma(t).
pub fn mainardi_f(sigma: f64, t: f64) -> Result<SeriesEval> {
    check_sigma(sigma)?;
    require_finite(t, "t")?;
    if t == 0.0 {
        return Ok(SeriesEval {
            value: 0.0,
            terms_used: 1,
            last_term_magnitude: 0.0,
            converged: true,
        });
    }
    if t < 0.0 {
        return wright(-sigma, 0.0, -t);
    }
    if t >= DD_MIN_T && dd::lattice_match(sigma, 0.0).is_some() {
        return wright(-sigma, 0.0, -t);
    }
    let tol = Tolerance::default();
    let refl = f_reflection(sigma, t, &tol);
    if !refl.eval.value.is_finite() {
        return Err(WrightError::Overflow(format!(
            "mainardi_f({sigma}, {t}) exceeds f64 range"
        )));
    }
    let defining = rgamma_series(-sigma, 0.0, -t, true, &tol);
    Ok(crosscheck(refl.eval, defining.eval.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // reference values computed with mpmath at 40 digits

    #[test]
    fn first_kind_table() {
        let cases = [
            (1.0, 1.0, 1.0, 2.279585302336067267437),
            (1.0, 1.0, -1.0, 0.2238907791412356680518),
            (1.0, 2.0, 1.0, 1.590636854637329063382),
            (0.5, 1.0, 2.0, 6.690627940507144135698),
            (0.5, 0.5, -3.0, -0.08740311480980144361706),
            (2.0, 1.0, 0.7, 1.360287979986998957705),
            (1.0, 3.0, 2.5, 1.07100717314629461613),
            (0.3, 1.0, 1.2, 3.539198574485619742261),
            (1.0, 1.5, -0.25, 0.9494983289725749748167),
            (1.0, 2.0, -0.25, 0.8801011714898670319194),
            (1.0, 1.0, -4.0, -0.3971498098638473722866),
            (1.0, 2.0, -4.0, -0.03302166401177456807159),
            (1.0, 3.0, -4.0, 0.09103203646301820105375),
        ];
        for &(a, b, t, want) in &cases {
            let r = wright(a, b, t).unwrap();
            assert!(r.converged, "({a},{b},{t}) did not converge");
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn degenerate_alpha_zero_is_exponential() {
        // W_{0,beta}(t) = e^t / Gamma(beta)
        for &(b, t) in &[(1.5f64, 2.0f64), (1.0, -0.7), (3.0, 0.3)] {
            let want = t.exp() * scalar::rgamma(b);
            assert_relative_eq!(wright(0.0, b, t).unwrap().value, want, max_relative = 1e-13);
        }
    }

    #[test]
    fn second_kind_table() {
        let third = 1.0 / 3.0;
        let cases = [
            (-0.5, 0.5, -1.0, 0.4393912894677223970469),
            (-0.5, 0.5, -5.0, 0.001089142115176354860193),
            (-0.5, 1.0, -2.0, 0.1572992070502851306588),
            (-0.5, 1.0, -7.0, 7.430983723414127455237e-7),
            (-third, 0.6666666666666666, -1.0, 0.3962394797065025746466),
            (-third, 0.6666666666666666, -4.0, 0.02050559731199539980402),
            (-0.25, 0.75, -2.0, 0.161251083454585855905),
            (-0.5, 0.0, -3.0, 0.08919771691772202864826),
            (-0.5, 2.0, -6.8, 1.097483875240135597455e-7),
        ];
        for &(a, b, t, want) in &cases {
            let r = wright(a, b, t).unwrap();
            assert!(r.converged, "({a},{b},{t}) flagged unconverged");
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn second_kind_dd_seam_is_continuous() {
        // at t = 3 the lattice cases switch from the f64 series to the
        // double-double path; both must agree there
        for &(sigma, beta) in &[(0.5, 0.5), (0.5, 1.0), (1.0 / 3.0, 2.0 / 3.0)] {
            let tol = Tolerance::default();
            let dd_val = wright(-sigma, beta, -3.0).unwrap().value;
            let f64_val = rgamma_series(-sigma, beta, -3.0, true, &tol).eval.value;
            assert_relative_eq!(dd_val, f64_val, max_relative = 1e-11);
        }
    }

    #[test]
    fn second_kind_underflow_snaps_to_zero() {
        // M_{1/2}(20) ~ 1e-44: far below the dd cancellation floor, reported
        // as an exact 0 with the converged flag set
        let r = wright(-0.5, 0.5, -20.0).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
        // much deeper in the tail the compensated terms overflow f64 while
        // cancelling; that must also land on the 0 snap, never on a NaN
        for &t in &[-60.0, -200.0, -1000.0] {
            let r = wright(-0.5, 0.0, t).unwrap();
            assert_eq!(r.value, 0.0, "t = {t}");
            assert!(r.converged);
        }
        let f = mainardi_f(0.5, 60.0).unwrap();
        assert_eq!(f.value, 0.0);
        assert!(f.converged);
    }

    #[test]
    fn second_kind_cancellation_is_flagged() {
        // off-lattice sigma with a large argument: the alternating series
        // loses every significant digit and the flag must report that
        let r = wright(-0.8, 0.2, -5.0).unwrap();
        assert!(!r.converged);
        // pushed further the terms overflow before cancelling
        assert!(matches!(
            wright(-0.8, 0.2, -20.0),
            Err(WrightError::Overflow(_))
        ));
    }

    #[test]
    fn mittag_leffler_table() {
        let cases = [
            (1.0, 1.0, 1.0, std::f64::consts::E),
            (1.0, 1.0, -1.0, 0.3678794411714423215955),
            (0.5, 1.0, -1.0, 0.4275835761558070044108),
            (0.5, 1.5, -2.0, 0.3723021618447471280675),
            (2.0, 1.0, -4.0, -0.4161468365471423869976),
            (1.5, 2.5, 3.0, 1.468203571967010072707),
            (0.8, 0.9, -1.7, 0.1776319782211957140596),
            (1.0, 2.0, 1.0, 1.71828182845904523536),
        ];
        for &(a, b, z, want) in &cases {
            let r = mittag_leffler(a, b, z).unwrap();
            assert!(r.converged);
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn mittag_leffler_trig_identity() {
        // E_{2,1}(-t^2) = cos t
        for &t in &[0.3, 1.0, 2.5, 4.0] {
            assert_relative_eq!(
                mittag_leffler(2.0, 1.0, -t * t).unwrap().value,
                t.cos(),
                max_relative = 1e-11
            );
        }
    }

    #[test]
    fn mainardi_table() {
        let third = 1.0 / 3.0;
        let cases_m = [
            (0.5, 1.0, 0.4393912894677223970469),
            (0.5, 2.0, 0.2075537487102973516701),
            (third, 1.0, 0.3962394797065025871716),
            (third, 2.0, 0.1736639759810554002689),
            (0.25, 0.8, 0.4501723815940157775197),
            (0.9, 0.5, 0.2800417420873658073333),
            (0.5, 4.6, 0.002844508621262683412498),
        ];
        for &(s, t, want) in &cases_m {
            let r = mainardi_m(s, t).unwrap();
            assert!(r.converged, "M({s},{t}) flagged unconverged");
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
        let cases_f = [
            (0.5, 1.0, 0.2196956447338611985234),
            (0.5, 2.0, 0.2075537487102973516701),
            (third, 1.0, 0.132079826568834188392),
            (third, 2.0, 0.1157759839873702604191),
            (0.25, 0.8, 0.09003447631880316050185),
            (0.9, 0.5, 0.1260187839393146164091),
            (0.5, 4.6, 0.006542369828904171343459),
        ];
        for &(s, t, want) in &cases_f {
            let r = mainardi_f(s, t).unwrap();
            assert!(r.converged, "F({s},{t}) flagged unconverged");
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn mainardi_half_is_gaussian() {
        // M_{1/2}(t) = exp(-t^2/4)/sqrt(pi) across the dd dispatch boundary
        for &t in &[0.1f64, 1.0, 2.9, 3.1, 5.0, 8.0] {
            let want = (-t * t / 4.0).exp() / PI.sqrt();
            assert_relative_eq!(mainardi_m(0.5, t).unwrap().value, want, max_relative = 1e-11);
        }
    }

    #[test]
    fn f_equals_sigma_t_m() {
        // F_sigma(t) = sigma t M_sigma(t); t capped per sigma where both
        // sides are computable in f64 (conditioning grows like
        // exp(c t^{1/(1-sigma)}))
        let grid: [(f64, f64); 4] = [(0.2, 5.0), (1.0 / 3.0, 5.0), (0.5, 5.0), (0.8, 2.0)];
        for &(sigma, t_max) in &grid {
            let mut t = 0.1;
            while t <= t_max {
                let f = mainardi_f(sigma, t).unwrap();
                let m = mainardi_m(sigma, t).unwrap();
                assert!(f.converged && m.converged, "unconverged at ({sigma}, {t})");
                assert_relative_eq!(
                    f.value,
                    sigma * t * m.value,
                    max_relative = 1e-10,
                    epsilon = 1e-290
                );
                t += 0.3;
            }
        }
    }

    #[test]
    fn mainardi_at_zero() {
        assert_relative_eq!(
            mainardi_m(0.5, 0.0).unwrap().value,
            1.0 / scalar::gamma(0.5).unwrap(),
            max_relative = 1e-14
        );
        assert_eq!(mainardi_f(0.7, 0.0).unwrap().value, 0.0);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(wright(-1.0, 1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(wright(-1.5, 1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(wright(1.0, 1.0, 1e7), Err(WrightError::Domain(_))));
        assert!(matches!(mittag_leffler(0.0, 1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(mittag_leffler(-0.5, 1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(mainardi_m(0.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(mainardi_m(1.0, 1.0), Err(WrightError::Domain(_))));
        assert!(matches!(mainardi_f(1.5, 1.0), Err(WrightError::Domain(_))));
        assert!(wright(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn wright_at_zero_argument() {
        assert_relative_eq!(wright(1.0, 2.0, 0.0).unwrap().value, 1.0, max_relative = 1e-14);
        assert_relative_eq!(
            wright(-0.5, 0.5, 0.0).unwrap().value,
            1.0 / PI.sqrt(),
            max_relative = 1e-14
        );
        assert_relative_eq!(mittag_leffler(0.7, 2.0, 0.0).unwrap().value, 1.0, max_relative = 1e-14);
    }
}
