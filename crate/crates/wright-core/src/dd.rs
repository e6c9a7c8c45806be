//! Double-double (~32 significant digits) arithmetic for the severely
//! cancelling series of the second Wright kind at sigma = 1/2 and 1/3.
//!
//! W_{-1/q, beta}(-t) with q beta an integer splits into q residue chains
//! whose term ratios are exact small rationals:
//!
//! ```text
//! T_{k+q} / T_k = (-t)^q (beta - k/q - 1) / ((k+1)(k+2)...(k+q))
//! ```
//!
//! so each chain only needs one reciprocal-gamma seed, reached by the exact
//! ladder 1/Gamma(y-1) = (y-1)/Gamma(y). Poles of Gamma enter as exact zero
//! multipliers and terminate their chain.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

// error-free transforms ------------------------------------------------------

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b| or a == 0
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub(crate) const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub(crate) fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact integer ratio n / d rendered to full dd precision.
    pub(crate) fn from_ratio(n: i64, d: i64) -> Self {
        Dd::from_f64(n as f64).div(Dd::from_f64(d as f64))
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn abs_hi(self) -> f64 {
        self.hi.abs()
    }

    #[cfg(test)]
    pub(crate) fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub(crate) fn neg(self) -> Self {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub(crate) fn add(self, other: Dd) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub(crate) fn sub(self, other: Dd) -> Self {
        self.add(other.neg())
    }

    pub(crate) fn mul(self, other: Dd) -> Self {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub(crate) fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub(crate) fn div(self, other: Dd) -> Self {
        let q1 = self.hi / other.hi;
        // r = self - q1 * other, computed in dd
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        let (hi, lo2) = quick_two_sum(hi, lo + q3);
        Dd { hi, lo: lo2 }
    }

    pub(crate) fn div_f64(self, x: f64) -> Self {
        self.div(Dd::from_f64(x))
    }
}

// seeds: 1/Gamma at the generators of each lattice, to dd precision ----------

const RSQRT_PI: Dd = Dd::new(0.5641895835477563, 7.66772980658294e-18);
const RGAMMA_1_3: Dd = Dd::new(0.3732821739073952, 1.8904017330138024e-17);
const RGAMMA_2_3: Dd = Dd::new(0.7384881116216483, 2.1908256740378185e-17);
const ONE: Dd = Dd::new(1.0, 0.0);

/// 1/Gamma(u/q) in dd for q in {2, 3}, exact zero at the poles of Gamma.
pub(crate) fn rgamma_lattice(u: i64, q: i64) -> Dd {
    debug_assert!(q == 2 || q == 3);
    if u <= 0 && u % q == 0 {
        return Dd::from_f64(0.0);
    }
    // pick the seed with the same residue, at argument u0/q in (0, 1]
    let mut r = u % q;
    if r <= 0 {
        r += q;
    }
    let (mut u0, mut val) = match (q, r) {
        (2, 1) => (1, RSQRT_PI),
        (3, 1) => (1, RGAMMA_1_3),
        (3, 2) => (2, RGAMMA_2_3),
        _ => (q, ONE), // integer sublattice: seed 1/Gamma(1) = 1
    };
    while u0 < u {
        // 1/Gamma(y+1) = (1/Gamma(y)) / y
        val = val.div(Dd::from_ratio(u0, q));
        u0 += q;
    }
    while u0 > u {
        // 1/Gamma(y-1) = (y-1) / Gamma(y)
        val = val.mul(Dd::from_ratio(u0 - q, q));
        u0 -= q;
    }
    val
}

/// Result of the compensated lattice summation. `est_rel_err` estimates the
/// relative error floor left by cancellation: (dd roundoff) * max|term| / |sum|.
#[derive(Clone, Copy, Debug)]
pub(crate) struct DdSeries {
    pub value: f64,
    pub est_rel_err: f64,
    pub terms_used: usize,
    pub last_term_magnitude: f64,
    pub converged: bool,
}

const DD_EPS: f64 = 4.93e-32; // 2^-104
const ABS_FLOOR: f64 = 1e-300;

/// W_{-1/q, m/q}(-t) = sum_k (-t)^k / (k! Gamma((m - k)/q)) with t >= 0,
/// summed in double-double via the q-step parity chains.
pub(crate) fn wright_neg_lattice(
    q: i64,
    m: i64,
    t: f64,
    rel_tol: f64,
    max_terms: usize,
) -> DdSeries {
    debug_assert!(q == 2 || q == 3);
    debug_assert!(t >= 0.0);
    // chain seeds T_{k0} = (-t)^{k0} rgamma((m - k0)/q) / k0!
    let mut chains: Vec<Dd> = Vec::with_capacity(q as usize);
    let mut prefactor = ONE;
    let mut k0fact = 1.0;
    for k0 in 0..q {
        if k0 > 0 {
            prefactor = prefactor.mul_f64(-t);
            k0fact *= k0 as f64;
        }
        chains.push(prefactor.mul(rgamma_lattice(m - k0, q)).div_f64(k0fact));
    }
    // (-t)^q as dd, used by every chain advance
    let mut neg_t_pow = ONE;
    for _ in 0..q {
        neg_t_pow = neg_t_pow.mul_f64(-t);
    }

    let mut sum = Dd::from_f64(0.0);
    let mut max_abs = 0.0f64;
    let mut small_streak = 0u32;
    let mut terms_used = 0usize;
    let mut converged = false;
    let mut last_mag = 0.0f64;
    for k in 0..max_terms as i64 {
        let c = (k % q) as usize;
        let term = chains[c];
        sum = sum.add(term);
        terms_used += 1;
        let mag = term.abs_hi();
        last_mag = mag;
        if mag > max_abs {
            max_abs = mag;
        }
        if mag <= ABS_FLOOR + rel_tol * sum.abs_hi() {
            small_streak += 1;
            if small_streak >= 3 {
                converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
        // advance chain c from index k to k + q:
        // multiplier (-t)^q * ((m - k - q)/q) / ((k+1)...(k+q))
        let mut denom = 1.0f64;
        for j in 1..=q {
            denom *= (k + j) as f64;
        }
        let numer = neg_t_pow.mul(Dd::from_ratio(m - k - q, q));
        chains[c] = chains[c].mul(numer).div_f64(denom);
    }
    let value = sum.to_f64();
    let est_rel_err = if max_abs == 0.0 {
        0.0
    } else if value == 0.0 {
        f64::INFINITY
    } else {
        DD_EPS * max_abs / value.abs()
    };
    DdSeries { value, est_rel_err, terms_used, last_term_magnitude: last_mag, converged }
}

/// Matches (sigma, beta) against the dd-capable lattices: sigma within
/// 1e-12 of 1/q for q in {2, 3} and q*beta within 1e-12 of an integer.
/// Returns (q, m) with beta = m/q.
pub(crate) fn lattice_match(sigma: f64, beta: f64) -> Option<(i64, i64)> {
    for q in [2i64, 3i64] {
        if (sigma - 1.0 / q as f64).abs() <= 1e-12 {
            let qb = q as f64 * beta;
            let m = qb.round();
            if (qb - m).abs() <= 1e-12 && m.abs() < 1e6 {
                return Some((q, m as i64));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar;
    use approx::assert_relative_eq;

    #[test]
    fn dd_addition_keeps_small_residuals() {
        let big = Dd::from_f64(1e16);
        let one = Dd::from_f64(1.0);
        let r = big.add(one).sub(big);
        assert_eq!(r.to_f64(), 1.0);
    }

    #[test]
    fn dd_division_roundtrips() {
        let a = Dd::from_f64(0.1).mul(Dd::from_f64(7.3));
        let b = Dd::from_f64(3.7);
        let r = a.div(b).mul(b).sub(a);
        assert!(r.to_f64().abs() < 1e-30);
    }

    #[test]
    fn dd_third_is_accurate() {
        let third = Dd::from_ratio(1, 3);
        // 3 * (1/3) - 1 == 0 to dd precision
        let r = third.mul_f64(3.0).sub(Dd::from_f64(1.0));
        assert!(r.to_f64().abs() < 1e-31);
    }

    #[test]
    fn rgamma_lattice_matches_f64_kernel() {
        // half-integer lattice
        for u in [-5i64, -3, -1, 1, 3, 7, 15] {
            let want = scalar::rgamma(u as f64 / 2.0);
            let got = rgamma_lattice(u, 2).to_f64();
            assert_relative_eq!(got, want, max_relative = 1e-14);
        }
        // integer lattice via q = 2 (even u) and q = 3 (u multiple of 3)
        assert_relative_eq!(rgamma_lattice(8, 2).to_f64(), 1.0 / 6.0, max_relative = 1e-15);
        assert_relative_eq!(rgamma_lattice(6, 3).to_f64(), 1.0, max_relative = 1e-15);
        // third lattice
        for u in [-4i64, -2, -1, 1, 2, 4, 5, 10] {
            let want = scalar::rgamma(u as f64 / 3.0);
            let got = rgamma_lattice(u, 3).to_f64();
            assert_relative_eq!(got, want, max_relative = 1e-14);
        }
    }

    #[test]
    fn rgamma_lattice_zero_at_poles() {
        for u in [0i64, -2, -4, -10] {
            assert!(rgamma_lattice(u, 2).is_zero());
        }
        for u in [0i64, -3, -6] {
            assert!(rgamma_lattice(u, 3).is_zero());
        }
    }

    // reference values computed with mpmath at 40 digits
    #[test]
    fn lattice_series_matches_reference() {
        let r = wright_neg_lattice(2, 1, 1.0, 1e-28, 3000);
        assert!(r.converged);
        assert_relative_eq!(r.value, 0.4393912894677223970469, max_relative = 1e-14);

        let r = wright_neg_lattice(2, 2, 2.0, 1e-28, 3000);
        assert_relative_eq!(r.value, 0.1572992070502851306588, max_relative = 1e-14);

        let r = wright_neg_lattice(3, 2, 1.0, 1e-28, 3000);
        assert_relative_eq!(r.value, 0.3962394797065025746466, max_relative = 1e-14);

        let r = wright_neg_lattice(2, 0, 3.0, 1e-28, 3000);
        assert_relative_eq!(r.value, 0.08919771691772202864826, max_relative = 1e-14);

        // M_{1/2}(4.6) = W_{-1/2,1/2}(-4.6): heavy cancellation, the reason
        // this module exists
        let r = wright_neg_lattice(2, 1, 4.6, 1e-28, 3000);
        assert!(r.converged);
        assert_relative_eq!(r.value, 0.002844508621262683412498, max_relative = 1e-13);
        assert!(r.est_rel_err < 1e-20);
    }

    #[test]
    fn lattice_series_flags_exhausted_precision() {
        // M_{1/2}(13): true value ~ 4e-19, max term ~ 1e16, even dd cannot
        // resolve it; the error estimate must say so
        let r = wright_neg_lattice(2, 1, 13.0, 1e-28, 3000);
        assert!(r.est_rel_err > 1e-2);
    }

    #[test]
    fn lattice_match_dispatch() {
        assert_eq!(lattice_match(0.5, 0.5), Some((2, 1)));
        assert_eq!(lattice_match(0.5, 0.0), Some((2, 0)));
        assert_eq!(lattice_match(1.0 / 3.0, 2.0 / 3.0), Some((3, 2)));
        assert_eq!(lattice_match(1.0 / 3.0, 1.0 - 1.0 / 3.0), Some((3, 2)));
        assert_eq!(lattice_match(0.5, 2.0), Some((2, 4)));
        assert_eq!(lattice_match(0.25, 0.75), None);
        assert_eq!(lattice_match(0.5, 0.3), None);
        assert_eq!(lattice_match(0.4, 0.5), None);
    }

    #[test]
    fn mainardi_half_matches_gaussian() {
        // M_{1/2}(t) = exp(-t^2/4)/sqrt(pi)
        for &t in &[0.5, 1.0, 2.0, 4.0, 6.0] {
            let r = wright_neg_lattice(2, 1, t, 1e-28, 3000);
            let want = (-t * t / 4.0).exp() / std::f64::consts::PI.sqrt();
            assert_relative_eq!(r.value, want, max_relative = 1e-12);
        }
    }
}
