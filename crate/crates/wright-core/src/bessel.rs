//! Bessel functions J, Y, I, K of real order, and derivatives with respect
//! to the order. These are the independent reference side of the Wright
//! reduction checks, so they deliberately share no series machinery with
//! the Wright evaluators.
//!
//! Algorithm split:
//! * x < 2: ascending series (J, I directly; Y by reflection, or the
//!   digamma series at integer order where the reflection degenerates)
//! * x >= 2: Schlafli integral representations (DLMF 10.9.6, 10.9.7) for
//!   J and Y, evaluated with adaptive Gauss-Kronrod panels
//! * K: the cosh integral representation (DLMF 10.32.9) at every x, scaled
//!   by e^x so the quadrature works on an O(1) integrand
//!
//! Order derivatives dJ/dnu and dI/dnu come either from closed forms at
//! nu in {0, 1/2, 1} or from one-dimensional integral representations
//! valid for nu > 0.

use crate::error::{Result, WrightError};
use crate::quad::{integrate_with_breaks};
use crate::scalar;

const PI: f64 = std::f64::consts::PI;
const SERIES_X: f64 = 2.0;
const INT_SNAP: f64 = 1e-6;

fn require_finite(v: f64, what: &str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(WrightError::Domain(format!("{what} must be finite, got {v}")))
    }
}

fn near_integer(nu: f64) -> Option<i64> {
    let r = nu.round();
    if (nu - r).abs() <= INT_SNAP {
        Some(r as i64)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// J and Y
// ---------------------------------------------------------------------------

/// Bessel function of the first kind J_nu(x) for x >= 0.
/// Negative non-integer order requires x > 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    require_finite(nu, "order")?;
    require_finite(x, "argument")?;
    if x < 0.0 {
        return Err(WrightError::Domain(format!(
            "bessel_j requires x >= 0, got x = {x}"
        )));
    }
    if x == 0.0 {
        return match near_integer(nu) {
            _ if nu == 0.0 => Ok(1.0),
            Some(_) => Ok(0.0),
            None if nu > 0.0 => Ok(0.0),
            None => Err(WrightError::Domain(format!(
                "bessel_j diverges at x = 0 for negative non-integer order {nu}"
            ))),
        };
    }
    if nu < 0.0 {
        let m = -nu;
        // J_{-m} = J_m cos(m pi) - Y_m sin(m pi); exact at integers
        let s = scalar::sin_pi(m);
        let c = scalar::cos_pi(m);
        if s == 0.0 {
            return Ok(c * bessel_j(m, x)?);
        }
        return Ok(c * bessel_j(m, x)? - s * bessel_y(m, x)?);
    }
    if x < SERIES_X {
        Ok(j_series(nu, x))
    } else {
        schlafli_j(nu, x)
    }
}

/// Bessel function of the second kind Y_nu(x) for x > 0.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    require_finite(nu, "order")?;
    require_finite(x, "argument")?;
    if x <= 0.0 {
        return Err(WrightError::Domain(format!(
            "bessel_y requires x > 0, got x = {x}"
        )));
    }
    if nu < 0.0 {
        let m = -nu;
        // Y_{-m} = sin(m pi) J_m + cos(m pi) Y_m
        let s = scalar::sin_pi(m);
        let c = scalar::cos_pi(m);
        if s == 0.0 {
            return Ok(c * bessel_y(m, x)?);
        }
        return Ok(s * bessel_j(m, x)? + c * bessel_y(m, x)?);
    }
    if x >= SERIES_X {
        return schlafli_y(nu, x);
    }
    match near_integer(nu) {
        Some(n) => y_int_series(n as u32, x),
        None => {
            // Y_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi)
            let s = scalar::sin_pi(nu);
            let c = scalar::cos_pi(nu);
            Ok((j_series(nu, x) * c - j_series(-nu, x)) / s)
        }
    }
}

/// Ascending series for J_nu, 0 < x < 2, any real order (reciprocal gamma
/// absorbs the poles at negative integer nu + k + 1).
fn j_series(nu: f64, x: f64) -> f64 {
    let q = -x * x / 4.0;
    let mut sum = 0.0f64;
    let mut qk = 1.0f64; // (-x^2/4)^k / k!
    for k in 0..200 {
        let term = qk * scalar::rgamma(nu + k as f64 + 1.0);
        sum += term;
        if k > 3 && term.abs() < 1e-18 * sum.abs().max(1e-30) {
            break;
        }
        qk *= q / (k as f64 + 1.0);
    }
    // (x/2)^nu, assembled in log space for large |nu|
    sum * (nu * (x / 2.0).ln()).exp()
}

/// Integer-order Y_n for 0 < x < 2 via the digamma series.
fn y_int_series(n: u32, x: f64) -> Result<f64> {
    let half = x / 2.0;
    let q = half * half; // x^2/4
    let nf = n as f64;
    // finite part: -(x/2)^{-n}/pi sum_{k<n} (n-k-1)!/k! q^k
    let mut finite = 0.0f64;
    if n > 0 {
        let mut term = lfact(n - 1).exp(); // (n-1)!/0! is the k = 0 term
        let mut k = 0u32;
        loop {
            finite += term;
            if k + 1 == n {
                break;
            }
            // (n-k-2)!/(k+1)! = prev / ((n-k-1)(k+1))
            term *= q / ((nf - k as f64 - 1.0) * (k as f64 + 1.0));
            k += 1;
        }
        finite *= -(half.powi(-(n as i32))) / PI;
    }
    // log part
    let jn = j_series(nf, x);
    let log_part = (2.0 / PI) * half.ln() * jn;
    // psi series: -(x/2)^n/pi sum_k (psi(k+1)+psi(n+k+1)) (-q)^k / (k!(n+k)!)
    let mut psi_sum = 0.0f64;
    let mut base = half.powi(n as i32) / (lfact(n).exp()); // (x/2)^n / (0! n!)
    for k in 0..120 {
        let kf = k as f64;
        let term = base
            * (scalar::digamma(kf + 1.0).expect("positive")
                + scalar::digamma(nf + kf + 1.0).expect("positive"));
        psi_sum += term;
        if k > 3 && term.abs() < 1e-18 * psi_sum.abs().max(1e-30) {
            break;
        }
        base *= -q / ((kf + 1.0) * (nf + kf + 1.0));
    }
    let result = finite + log_part - psi_sum / PI;
    if result.is_finite() {
        Ok(result)
    } else {
        Err(WrightError::Overflow(format!(
            "bessel_y({n}, {x}) exceeds f64 range"
        )))
    }
}

fn lfact(n: u32) -> f64 {
    let mut s = 0.0f64;
    for k in 2..=n {
        s += (k as f64).ln();
    }
    s
}

/// Uniform partition of the oscillatory Schlafli arc [0, pi], fine enough
/// that each panel sees at most about one oscillation of the phase.
fn osc_breaks(nu: f64, x: f64) -> Vec<f64> {
    let n = ((x + nu) / 2.0).ceil() as usize + 4;
    (0..=n).map(|i| PI * i as f64 / n as f64).collect()
}

/// J_nu(x) = (1/pi) int_0^pi cos(x sin h - nu h) dh
///         - sin(nu pi)/pi int_0^inf e^{-x sinh t - nu t} dt, for x > 0.
fn schlafli_j(nu: f64, x: f64) -> Result<f64> {
    let osc = integrate_with_breaks(
        &|h: f64| (x * h.sin() - nu * h).cos(),
        &osc_breaks(nu, x),
        5e-15,
        5e-14,
        4000,
    )? / PI;
    let s = scalar::sin_pi(nu);
    if s == 0.0 {
        return Ok(osc);
    }
    let t_end = (50.0 / x).asinh();
    let breaks = [0.0, t_end / 8.0, t_end / 4.0, t_end / 2.0, t_end];
    let tail = integrate_with_breaks(
        &|t: f64| (-x * t.sinh() - nu * t).exp(),
        &breaks,
        5e-15,
        5e-14,
        1000,
    )?;
    Ok(osc - s * tail / PI)
}

/// Y_nu(x) = (1/pi) int_0^pi sin(x sin h - nu h) dh
///         - (1/pi) int_0^inf (e^{nu t} + e^{-nu t} cos(nu pi)) e^{-x sinh t} dt.
fn schlafli_y(nu: f64, x: f64) -> Result<f64> {
    let osc = integrate_with_breaks(
        &|h: f64| (x * h.sin() - nu * h).sin(),
        &osc_breaks(nu, x),
        5e-15,
        5e-14,
        4000,
    )? / PI;
    let c = scalar::cos_pi(nu);
    // peak of nu t - x sinh t sits at cosh t = nu/x when nu > x
    let t_peak = if nu > x { (nu / x).acosh() } else { 0.0 };
    let peak_exponent = nu * t_peak - x * t_peak.sinh();
    if peak_exponent > 700.0 {
        return Err(WrightError::Overflow(format!(
            "bessel_y({nu}, {x}) exceeds f64 range"
        )));
    }
    let mut t_end = t_peak + (50.0f64 / x).asinh().max(1.0);
    while x * t_end.sinh() - nu * t_end < 50.0 {
        t_end += 0.5;
    }
    let mut breaks = vec![0.0];
    if t_peak > 0.0 {
        breaks.push(0.5 * t_peak);
        breaks.push(t_peak);
    }
    let lo = *breaks.last().unwrap();
    for j in 1..=4 {
        breaks.push(lo + (t_end - lo) * j as f64 / 4.0);
    }
    let tail = integrate_with_breaks(
        &|t: f64| ((nu * t).exp() + (-nu * t).exp() * c) * (-x * t.sinh()).exp(),
        &breaks,
        5e-15,
        5e-14,
        2000,
    )?;
    Ok(osc - tail / PI)
}

// ---------------------------------------------------------------------------
// I and K
// ---------------------------------------------------------------------------

/// Modified Bessel function of the first kind I_nu(x) for x >= 0.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    require_finite(nu, "order")?;
    require_finite(x, "argument")?;
    if x < 0.0 {
        return Err(WrightError::Domain(format!(
            "bessel_i requires x >= 0, got x = {x}"
        )));
    }
    if x == 0.0 {
        return match near_integer(nu) {
            _ if nu == 0.0 => Ok(1.0),
            Some(_) => Ok(0.0),
            None if nu > 0.0 => Ok(0.0),
            None => Err(WrightError::Domain(format!(
                "bessel_i diverges at x = 0 for negative non-integer order {nu}"
            ))),
        };
    }
    if nu < 0.0 {
        let m = -nu;
        // I_{-m} = I_m + (2/pi) sin(m pi) K_m
        let s = scalar::sin_pi(m);
        if s == 0.0 {
            return bessel_i(m, x);
        }
        return Ok(bessel_i(m, x)? + (2.0 / PI) * s * bessel_k(m, x)?);
    }
    // ascending series, valid at every x: all terms positive, no cancellation
    let q = x * x / 4.0;
    let mut sum = 0.0f64;
    let mut term = 1.0f64;
    for k in 0..2000 {
        let kf = k as f64;
        sum += term;
        if k > 3 && term < 1e-18 * sum {
            break;
        }
        term *= q / ((kf + 1.0) * (nu + kf + 1.0));
    }
    let (ln_r, _) = scalar::rgamma_ln(nu + 1.0);
    let ln_pref = nu * (x / 2.0).ln() + ln_r;
    let value = sum * ln_pref.exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(WrightError::Overflow(format!(
            "bessel_i({nu}, {x}) exceeds f64 range"
        )))
    }
}

/// Modified Bessel function of the second kind K_nu(x) for x > 0, via
/// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt.
pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    require_finite(nu, "order")?;
    require_finite(x, "argument")?;
    if x <= 0.0 {
        return Err(WrightError::Domain(format!(
            "bessel_k requires x > 0, got x = {x}"
        )));
    }
    let nu = nu.abs(); // K_{-nu} = K_nu
    // scaled integrand g(t) = cosh(nu t) e^{x - x cosh t}; K = e^{-x} int g
    let t_peak = if nu > x { (nu / x).acosh() } else { 0.0 };
    let peak_exponent = nu * t_peak - x * (t_peak.cosh() - 1.0);
    if peak_exponent - x > 700.0 {
        return Err(WrightError::Overflow(format!(
            "bessel_k({nu}, {x}) exceeds f64 range"
        )));
    }
    let mut t_end = t_peak + ((50.0f64 + peak_exponent) / x).asinh().max(1.0);
    while x * (t_end.cosh() - 1.0) - nu * t_end < 50.0 + peak_exponent {
        t_end += 0.5;
    }
    let mut breaks = vec![0.0];
    if t_peak > 0.0 {
        breaks.push(0.5 * t_peak);
        breaks.push(t_peak);
    }
    let lo = *breaks.last().unwrap();
    for j in 1..=4 {
        breaks.push(lo + (t_end - lo) * j as f64 / 4.0);
    }
    let scaled = integrate_with_breaks(
        &|t: f64| {
            let e = x - x * t.cosh();
            // cosh(nu t) e^{-x cosh t + x} without intermediate overflow
            0.5 * ((nu * t + e).exp() + (-nu * t + e).exp())
        },
        &breaks,
        1e-280,
        1e-13,
        2000,
    )?;
    let value = scaled * (-x).exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(WrightError::Overflow(format!(
            "bessel_k({nu}, {x}) exceeds f64 range"
        )))
    }
}

// ---------------------------------------------------------------------------
// order derivatives
// ---------------------------------------------------------------------------

/// dJ_nu/dnu at nu = 0: (pi/2) Y_0(x).
pub fn dj_dnu0(x: f64) -> Result<f64> {
    Ok(PI / 2.0 * bessel_y(0.0, x)?)
}

/// dI_nu/dnu at nu = 0: -K_0(x).
pub fn di_dnu0(x: f64) -> Result<f64> {
    Ok(-bessel_k(0.0, x)?)
}

/// dJ_nu/dnu at nu = 1/2: sqrt(2/(pi x)) [sin x Ci(2x) - cos x Si(2x)].
pub fn dj_dnu_half(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(WrightError::Domain(format!("requires x > 0, got {x}")));
    }
    let a = (2.0 / (PI * x)).sqrt();
    Ok(a * (x.sin() * scalar::ci(2.0 * x)? - x.cos() * scalar::si(2.0 * x)))
}

/// dI_nu/dnu at nu = 1/2:
/// sqrt(2/(pi x)) (1/2) [e^x Ei(-2x) - e^{-x} Ei(2x)].
pub fn di_dnu_half(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(WrightError::Domain(format!("requires x > 0, got {x}")));
    }
    let a = (2.0 / (PI * x)).sqrt();
    Ok(a * 0.5 * (x.exp() * scalar::ei(-2.0 * x)? - (-x).exp() * scalar::ei(2.0 * x)?))
}

/// dJ_nu/dnu at nu = 1: J_0(x)/x + (pi/2) Y_1(x).
pub fn dj_dnu1(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(WrightError::Domain(format!("requires x > 0, got {x}")));
    }
    Ok(bessel_j(0.0, x)? / x + PI / 2.0 * bessel_y(1.0, x)?)
}

/// dI_nu/dnu at nu = 1: K_1(x) - I_0(x)/x.
pub fn di_dnu1(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(WrightError::Domain(format!("requires x > 0, got {x}")));
    }
    Ok(bessel_k(1.0, x)? - bessel_i(0.0, x)? / x)
}

/// Panel layout for the order-derivative integrals: resolves the grazing
/// approach to theta = pi/2 where tan(theta) blows up against the vanishing
/// J or I factor.
fn graded_quarter_circle() -> Vec<f64> {
    let h = PI / 2.0;
    vec![
        0.0,
        0.4,
        0.8,
        1.1,
        1.3,
        1.45,
        h - 0.05,
        h - 0.01,
        h - 1e-3,
        h - 1e-4,
        h - 1e-5,
        h - 1e-6,
        h,
    ]
}

/// dJ_nu/dnu for nu > 0 via
/// pi nu int_0^{pi/2} tan(theta) Y_0(x sin^2 theta) J_nu(x cos^2 theta) d theta.
pub fn dj_dnu_quad(nu: f64, x: f64) -> Result<f64> {
    if nu <= 0.0 || x <= 0.0 {
        return Err(WrightError::Domain(format!(
            "order-derivative integral requires nu > 0 and x > 0, got nu = {nu}, x = {x}"
        )));
    }
    let f = |theta: f64| {
        let s2 = theta.sin().powi(2);
        let c2 = theta.cos().powi(2);
        let y0 = bessel_y(0.0, x * s2).unwrap_or(f64::NAN);
        let j = bessel_j(nu, x * c2).unwrap_or(f64::NAN);
        theta.tan() * y0 * j
    };
    let v = integrate_with_breaks(&f, &graded_quarter_circle(), 1e-11, 1e-10, 3000)?;
    Ok(PI * nu * v)
}

/// dI_nu/dnu for nu > 0 via
/// -2 nu int_0^{pi/2} tan(theta) K_0(x sin^2 theta) I_nu(x cos^2 theta) d theta.
pub fn di_dnu_quad(nu: f64, x: f64) -> Result<f64> {
    if nu <= 0.0 || x <= 0.0 {
        return Err(WrightError::Domain(format!(
            "order-derivative integral requires nu > 0 and x > 0, got nu = {nu}, x = {x}"
        )));
    }
    let f = |theta: f64| {
        let s2 = theta.sin().powi(2);
        let c2 = theta.cos().powi(2);
        let k0 = bessel_k(0.0, x * s2).unwrap_or(f64::NAN);
        let i = bessel_i(nu, x * c2).unwrap_or(f64::NAN);
        theta.tan() * k0 * i
    };
    let v = integrate_with_breaks(&f, &graded_quarter_circle(), 1e-11, 1e-10, 3000)?;
    Ok(-2.0 * nu * v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    // reference values computed with mpmath at 40 digits
    const TABLE: [(f64, f64, f64, f64, f64, f64); 12] = [
        // (nu, x, J, Y, I, K)
        (0.0, 2.0, 0.2238907791412356680518, 0.5103756726497451195966, 2.279585302336067267437, 0.1138938727495334356527),
        (1.0, 2.0, 0.5767248077568733872024, -0.1070324315409375468884, 1.590636854637329063382, 0.1398658818165224272846),
        (0.5, 2.0, 0.5130161365618277516657, 0.234785710406248469174, 2.046236863089055036605, 0.119937771968061447368),
        (0.3333333333333333, 2.0, 0.4429398181485762029765, 0.3431999662603443536788, 2.158782581372863034783, 0.1165449612961652484615),
        (2.5, 1.5, 0.1244463597983876020006, -1.315037204805193677783, 0.1716620221882963234206, 0.9894518929891503096625),
        (0.0, 10.0, -0.2459357644513483351978, 0.05567116728359939142446, 2815.71662846625447147, 0.0000177800623161676518113),
        (1.0, 10.0, 0.04347274616886143666975, 0.2490154242069538839233, 2670.988303701254654341, 0.00001864877345382558459682),
        (3.7, 15.0, -0.1757831527625199536615, 0.1133969063625211834764, 212290.0876561745545053, 1.525021817829845540928e-7),
        (0.25, 0.5, 0.741656570157146062822, -0.756843545694495991562, 0.819675965988729463109, 0.960316324931886022947),
        (5.0, 0.3, 6.304432633771071115795e-7, -101169.6573523119663424, 6.351893642780316243373e-7, 157139.1233712167135022),
        (2.0, 7.3, -0.265594911883436910526, -0.1407449471598107800266, 166.0035478055528282298, 0.0003984559108100623037165),
        (10.5, 4.2, 0.0001375870787976683127459, -240.7249892399510866264, 0.0002963853334016031575173, 149.1081877025793946156),
    ];

    #[test]
    fn frozen_value_table() {
        for &(nu, x, j, y, i, k) in &TABLE {
            assert_relative_eq!(bessel_j(nu, x).unwrap(), j, max_relative = 1e-10, epsilon = 1e-13);
            assert_relative_eq!(bessel_y(nu, x).unwrap(), y, max_relative = 1e-10, epsilon = 1e-13);
            assert_relative_eq!(bessel_i(nu, x).unwrap(), i, max_relative = 1e-10);
            assert_relative_eq!(bessel_k(nu, x).unwrap(), k, max_relative = 1e-10);
        }
    }

    #[test]
    fn wronskian_j_y() {
        // J_{nu+1} Y_nu - J_nu Y_{nu+1} = 2/(pi x), both sides of the
        // series/integral switch at x = 2
        for &nu in &[0.0, 0.3, 0.5, 1.0, 2.5, 5.7] {
            for &x in &[0.5, 1.0, 1.95, 2.05, 3.0, 7.0, 15.0, 25.0] {
                let w = bessel_j(nu + 1.0, x).unwrap() * bessel_y(nu, x).unwrap()
                    - bessel_j(nu, x).unwrap() * bessel_y(nu + 1.0, x).unwrap();
                let want = 2.0 / (PI * x);
                assert_relative_eq!(w, want, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn wronskian_i_k() {
        // I_nu K_{nu+1} + I_{nu+1} K_nu = 1/x
        for &nu in &[0.0, 0.3, 0.5, 1.0, 2.5, 5.7] {
            for &x in &[0.5, 1.0, 2.0, 3.0, 7.0, 15.0] {
                let w = bessel_i(nu, x).unwrap() * bessel_k(nu + 1.0, x).unwrap()
                    + bessel_i(nu + 1.0, x).unwrap() * bessel_k(nu, x).unwrap();
                assert_relative_eq!(w, 1.0 / x, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn negative_order_reflections() {
        // J_{-5/2}(x) = -Y_{5/2}(x) since cos(5 pi/2) = 0
        assert_relative_eq!(
            bessel_j(-2.5, 1.5).unwrap(),
            -bessel_y(2.5, 1.5).unwrap(),
            max_relative = 1e-12
        );
        // integer reflection J_{-n} = (-1)^n J_n
        assert_relative_eq!(
            bessel_j(-3.0, 5.0).unwrap(),
            -bessel_j(3.0, 5.0).unwrap(),
            max_relative = 1e-12
        );
        // K is even in the order
        assert_relative_eq!(
            bessel_k(-0.75, 2.2).unwrap(),
            bessel_k(0.75, 2.2).unwrap(),
            max_relative = 1e-13
        );
        // I_{-1/2}(x) = sqrt(2/(pi x)) cosh x
        let x = 1.7f64;
        assert_relative_eq!(
            bessel_i(-0.5, x).unwrap(),
            (2.0 / (PI * x)).sqrt() * x.cosh(),
            max_relative = 1e-11
        );
    }

    #[test]
    fn half_order_closed_forms() {
        // J_{1/2}(x) = sqrt(2/(pi x)) sin x, Y_{1/2}(x) = -sqrt(2/(pi x)) cos x
        for &x in &[0.3, 1.0, 2.0, 9.4] {
            let a = (2.0 / (PI * x)).sqrt();
            assert_relative_eq!(bessel_j(0.5, x).unwrap(), a * x.sin(), max_relative = 1e-11, epsilon = 1e-13);
            assert_relative_eq!(bessel_y(0.5, x).unwrap(), -a * x.cos(), max_relative = 1e-11, epsilon = 1e-13);
            assert_relative_eq!(
                bessel_k(0.5, x).unwrap(),
                (PI / (2.0 * x)).sqrt() * (-x).exp(),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn at_origin() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(2.0, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j(0.7, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_i(0.0, 0.0).unwrap(), 1.0);
        assert!(bessel_j(-0.5, 0.0).is_err());
        assert!(bessel_y(0.0, 0.0).is_err());
        assert!(bessel_k(1.0, 0.0).is_err());
        assert!(bessel_j(1.0, -1.0).is_err());
    }

    #[test]
    fn order_derivative_closed_forms() {
        // reference values computed with mpmath (central differences in nu
        // at 40-digit precision)
        assert_relative_eq!(dj_dnu0(1.0).unwrap(), 0.1386337152040539996811, max_relative = 1e-10);
        assert_relative_eq!(dj_dnu0(2.0).unwrap(), 0.801696231883694215426, max_relative = 1e-10);
        assert_relative_eq!(di_dnu0(1.0).unwrap(), -0.4210244382407083333356, max_relative = 1e-10);
        assert_relative_eq!(di_dnu0(2.0).unwrap(), -0.1138938727495334356527, max_relative = 1e-10);
        assert_relative_eq!(dj_dnu_half(1.0).unwrap(), -0.4081037813780980139071, max_relative = 1e-10);
        assert_relative_eq!(dj_dnu_half(3.0).unwrap(), 0.6453028000051261173089, max_relative = 1e-10);
        assert_relative_eq!(di_dnu_half(1.0).unwrap(), -0.7801261781690751320698, max_relative = 1e-10);
        assert_relative_eq!(di_dnu_half(3.0).unwrap(), -0.9877471855979123078565, max_relative = 1e-10);
        assert_relative_eq!(dj_dnu1(1.0).unwrap(), -0.4619285435856049377936, max_relative = 1e-10);
        assert_relative_eq!(dj_dnu1(2.0).unwrap(), -0.05618076074181310120179, max_relative = 1e-9);
        assert_relative_eq!(dj_dnu1(4.0).unwrap(), 0.5257727920143800604229, max_relative = 1e-10);
        assert_relative_eq!(di_dnu1(1.0).unwrap(), -0.6641586475547737608607, max_relative = 1e-10);
        assert_relative_eq!(di_dnu1(2.0).unwrap(), -0.999926769351511206434, max_relative = 1e-10);
        assert_relative_eq!(di_dnu1(4.0).unwrap(), -2.812996989146814192619, max_relative = 1e-10);
    }

    #[test]
    fn order_derivative_integrals_match_reference() {
        let cases_j = [
            (0.5, 1.0, -0.4081037813780980139071),
            (0.5, 3.0, 0.6453028000051261173089),
            (1.0, 1.0, -0.4619285435856049377936),
            (1.0, 2.0, -0.05618076074181310120179),
            (1.0, 4.0, 0.5257727920143800604229),
            (0.7, 2.0, 0.1609934014824889659492),
            (2.3, 1.5, -0.2048531688387751099585),
        ];
        for &(nu, x, want) in &cases_j {
            let got = dj_dnu_quad(nu, x).unwrap();
            assert_abs_diff_eq!(got, want, epsilon = 1e-8);
        }
        let cases_i = [
            (0.5, 1.0, -0.7801261781690751320698),
            (0.5, 3.0, -0.9877471855979123078565),
            (1.0, 1.0, -0.6641586475547737608607),
            (1.0, 2.0, -0.999926769351511206434),
            (1.0, 4.0, -2.812996989146814192619),
            (0.7, 2.0, -0.901774268813334118559),
            (2.3, 1.5, -0.3117213229291378599364),
        ];
        for &(nu, x, want) in &cases_i {
            let got = di_dnu_quad(nu, x).unwrap();
            assert_abs_diff_eq!(got, want, epsilon = 1e-8);
        }
    }

    #[test]
    fn order_derivative_integrals_match_closed_forms() {
        for &x in &[0.25, 0.5, 1.0, 2.0, 4.0] {
            assert_abs_diff_eq!(
                dj_dnu_quad(0.5, x).unwrap(),
                dj_dnu_half(x).unwrap(),
                epsilon = 1e-7
            );
            assert_abs_diff_eq!(
                dj_dnu_quad(1.0, x).unwrap(),
                dj_dnu1(x).unwrap(),
                epsilon = 1e-7
            );
            assert_abs_diff_eq!(
                di_dnu_quad(0.5, x).unwrap(),
                di_dnu_half(x).unwrap(),
                epsilon = 1e-7
            );
            assert_abs_diff_eq!(
                di_dnu_quad(1.0, x).unwrap(),
                di_dnu1(x).unwrap(),
                epsilon = 1e-7
            );
        }
    }

    #[test]
    fn order_derivative_finite_difference_consistency() {
        // central difference of J in the order, far from the closed forms
        let (nu, x, h) = (1.7f64, 2.6f64, 1e-5);
        let fd = (bessel_j(nu + h, x).unwrap() - bessel_j(nu - h, x).unwrap()) / (2.0 * h);
        assert_abs_diff_eq!(dj_dnu_quad(nu, x).unwrap(), fd, epsilon = 1e-6);
        let fd_i = (bessel_i(nu + h, x).unwrap() - bessel_i(nu - h, x).unwrap()) / (2.0 * h);
        assert_abs_diff_eq!(di_dnu_quad(nu, x).unwrap(), fd_i, epsilon = 1e-6);
    }
}
