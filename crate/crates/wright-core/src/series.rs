//! Truncated power-series driver with compensated accumulation.
//!
//! Every series in this crate is summed through [`sum_series`]: terms are
//! accumulated with Kahan compensation (several of the series alternate in
//! sign with large intermediate terms) and the truncation rule requires
//! *three consecutive* sub-threshold terms before declaring convergence,
//! because oscillatory coefficients such as sin(pi sigma k) can vanish at
//! interior k and fake convergence with a single small term.

/// Stopping tolerances for series summation.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    pub max_terms: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        // double-precision floor with headroom
        Tolerance {
            rel: 1e-13,
            abs: 1e-300,
            max_terms: 2000,
        }
    }
}

/// A truncated series value together with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEval {
    pub value: f64,
    pub terms_used: usize,
    pub last_term_magnitude: f64,
    pub converged: bool,
}

/// Everything `SeriesEval` reports plus the largest term magnitude seen,
/// used internally to estimate cancellation error of alternating sums.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesFull {
    pub eval: SeriesEval,
    pub max_abs_term: f64,
}

impl SeriesFull {
    /// Estimated relative rounding error of the compensated sum:
    /// unit roundoff scaled by the cancellation ratio max|term| / |sum|.
    pub fn cancellation_error(&self) -> f64 {
        let v = self.eval.value.abs();
        if v == 0.0 {
            if self.max_abs_term == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            f64::EPSILON * self.max_abs_term / v
        }
    }
}

/// Kahan-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Sum `terms` until three consecutive terms fall below
/// `abs_tol + rel_tol * |partial sum|`, or `max_terms` is exhausted.
pub fn sum_series<I: Iterator<Item = f64>>(terms: I, tol: &Tolerance) -> SeriesEval {
    sum_series_full(terms, tol).eval
}

pub(crate) fn sum_series_full<I: Iterator<Item = f64>>(terms: I, tol: &Tolerance) -> SeriesFull {
    let mut acc = KahanSum::new();
    let mut used = 0usize;
    let mut last_mag = 0.0f64;
    let mut max_mag = 0.0f64;
    let mut streak = 0u32;
    let mut converged = false;

    for term in terms.take(tol.max_terms) {
        used += 1;
        last_mag = term.abs();
        if !term.is_finite() {
            // overflow or invalid coefficient: report honestly as
            // non-converged with a non-finite value
            acc.add(term);
            converged = false;
            break;
        }
        acc.add(term);
        if last_mag > max_mag {
            max_mag = last_mag;
        }
        let thresh = tol.abs + tol.rel * acc.value().abs();
        if last_mag <= thresh {
            streak += 1;
            if streak >= 3 {
                converged = true;
                break;
            }
        } else {
            streak = 0;
        }
    }

    SeriesFull {
        eval: SeriesEval {
            value: acc.value(),
            terms_used: used,
            last_term_magnitude: last_mag,
            converged,
        },
        max_abs_term: max_mag,
    }
}

/// Assemble `sign * exp(ln_mag)` guarding the usual edge cases: underflow
/// becomes an exact 0 term, a zero sign (reciprocal-gamma pole) is an exact
/// 0 regardless of magnitude.
#[inline]
pub(crate) fn exp_signed(ln_mag: f64, sign: f64) -> f64 {
    if sign == 0.0 {
        return 0.0;
    }
    sign * ln_mag.exp()
}
