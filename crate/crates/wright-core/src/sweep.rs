//! Parameter sweeps: evaluate one function along a uniform grid in a single
//! parameter while the rest stay fixed, and render the curve as CSV.
//!
//! A sweep never aborts on a bad point: a point whose evaluation fails is
//! recorded with `result = NaN` and `converged = false`, and the sweep moves
//! on.  Spec-level problems (unknown target, wrong parameter set, bad grid)
//! fail the whole sweep up front instead.

use crate::error::{Result, WrightError};
use crate::ops;

/// One curve definition: what to evaluate, what varies, and where the CSV
/// goes.  `fixed` keeps file order so serialization round-trips.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub target: String,
    pub fixed: Vec<(String, f64)>,
    pub sweep_var: String,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
    pub output: String,
}

/// One row of a sweep curve, in ascending `sweep_value` order.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub sweep_value: f64,
    pub result: f64,
    pub terms_used: usize,
    pub converged: bool,
}

fn spec_err(spec: &SweepSpec, msg: impl std::fmt::Display) -> WrightError {
    WrightError::Manifest(format!("sweep '{}': {msg}", spec.output))
}

/// Check the spec against the operation table: the target must exist and
/// `fixed` plus the swept variable must cover its parameters exactly.
fn validate(spec: &SweepSpec) -> Result<&'static ops::OpInfo> {
    let op = ops::lookup(&spec.target)
        .ok_or_else(|| spec_err(spec, format_args!("unknown target '{}'", spec.target)))?;
    if !op.params.contains(&spec.sweep_var.as_str()) {
        return Err(spec_err(
            spec,
            format_args!("'{}' is not a parameter of {}", spec.sweep_var, op.name),
        ));
    }
    for (k, _) in &spec.fixed {
        if k == &spec.sweep_var {
            return Err(spec_err(
                spec,
                format_args!("'{k}' is both fixed and swept"),
            ));
        }
        if !op.params.contains(&k.as_str()) {
            return Err(spec_err(
                spec,
                format_args!("'{k}' is not a parameter of {}", op.name),
            ));
        }
        if spec.fixed.iter().filter(|(other, _)| other == k).count() > 1 {
            return Err(spec_err(spec, format_args!("duplicate fixed parameter '{k}'")));
        }
    }
    for &p in op.params {
        if p != spec.sweep_var && !spec.fixed.iter().any(|(k, _)| k == p) {
            return Err(spec_err(
                spec,
                format_args!("{} needs '{p}' fixed or swept", op.name),
            ));
        }
    }
    if !(spec.step > 0.0) {
        return Err(spec_err(spec, "step must be positive"));
    }
    if !(spec.start.is_finite() && spec.stop.is_finite()) || spec.stop < spec.start {
        return Err(spec_err(spec, "need finite start <= stop"));
    }
    Ok(op)
}

/// Run the sweep.  Deterministic: the same spec always produces the same
/// rows, byte for byte once rendered.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<CurvePoint>> {
    validate(spec)?;
    // inclusive endpoint with a tolerance so 0.0..5.0 step 0.05 hits 5.0
    let n = ((spec.stop - spec.start) / spec.step + 1e-9).floor() as usize + 1;
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let x = spec.start + i as f64 * spec.step;
        let mut params = spec.fixed.clone();
        params.push((spec.sweep_var.clone(), x));
        let point = match ops::evaluate(&spec.target, &params) {
            Ok(ev) => CurvePoint {
                sweep_value: x,
                result: ev.value,
                terms_used: ev.terms_used,
                converged: ev.converged,
            },
            Err(_) => CurvePoint {
                sweep_value: x,
                result: f64::NAN,
                terms_used: 0,
                converged: false,
            },
        };
        points.push(point);
    }
    Ok(points)
}

/// Render a curve as CSV: fixed header, 17 significant digits, LF endings.
pub fn curve_csv(sweep_var: &str, points: &[CurvePoint]) -> String {
    let mut out = String::from("sweep_var,value,result,terms_used,converged\n");
    for p in points {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{},{}\n",
            sweep_var, p.sweep_value, p.result, p.terms_used, p.converged
        ));
    }
    out
}

/// The stock figure curves: order-derivative profiles of the first-kind
/// function against alpha on [0, 5] step 0.05.
///
/// fig1: dW/dalpha at beta = 1, one curve per t in {0.5, 1, 1.5, 1.75, 2}
/// fig2: dW/dalpha at t = 2, one curve per beta in {0, 0.5, 1, 1.5, 2}
/// fig3: dW/dbeta  at beta = 1, same t family as fig1
/// fig4: dW/dbeta  at t = 2, same beta family as fig2
pub fn figure_sweeps() -> Vec<SweepSpec> {
    const TS: [f64; 5] = [0.5, 1.0, 1.5, 1.75, 2.0];
    const BETAS: [f64; 5] = [0.0, 0.5, 1.0, 1.5, 2.0];
    let curve = |target: &str, fixed: Vec<(String, f64)>, fig: usize, j: usize| SweepSpec {
        target: target.into(),
        fixed,
        sweep_var: "alpha".into(),
        start: 0.0,
        stop: 5.0,
        step: 0.05,
        output: format!("fig{fig}_curve{j}.csv"),
    };
    let mut v = Vec::with_capacity(20);
    for (j, &t) in TS.iter().enumerate() {
        v.push(curve("dW/dalpha", vec![("beta".into(), 1.0), ("t".into(), t)], 1, j + 1));
    }
    for (j, &b) in BETAS.iter().enumerate() {
        v.push(curve("dW/dalpha", vec![("beta".into(), b), ("t".into(), 2.0)], 2, j + 1));
    }
    for (j, &t) in TS.iter().enumerate() {
        v.push(curve("dW/dbeta", vec![("beta".into(), 1.0), ("t".into(), t)], 3, j + 1));
    }
    for (j, &b) in BETAS.iter().enumerate() {
        v.push(curve("dW/dbeta", vec![("beta".into(), b), ("t".into(), 2.0)], 4, j + 1));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig_spec(target: &str, beta: f64, t: f64) -> SweepSpec {
        SweepSpec {
            target: target.into(),
            fixed: vec![("beta".into(), beta), ("t".into(), t)],
            sweep_var: "alpha".into(),
            start: 0.0,
            stop: 5.0,
            step: 0.05,
            output: "test.csv".into(),
        }
    }

    /// indices of strict interior minima (first/last rows excluded)
    fn interior_minima(points: &[CurvePoint]) -> Vec<usize> {
        (1..points.len() - 1)
            .filter(|&i| {
                points[i].result < points[i - 1].result
                    && points[i].result < points[i + 1].result
            })
            .collect()
    }

    #[test]
    fn grid_is_inclusive_and_ascending() {
        let pts = run_sweep(&fig_spec("dW/dalpha", 1.0, 2.0)).unwrap();
        assert_eq!(pts.len(), 101);
        assert_eq!(pts[0].sweep_value, 0.0);
        assert!((pts[100].sweep_value - 5.0).abs() < 1e-12);
        assert!(pts.windows(2).all(|w| w[0].sweep_value < w[1].sweep_value));
    }

    #[test]
    fn order_derivative_profile_has_single_interior_minimum() {
        // the t = 2 alpha-profile dips once below zero in (0, 1)
        let pts = run_sweep(&fig_spec("dW/dalpha", 1.0, 2.0)).unwrap();
        let minima = interior_minima(&pts);
        assert_eq!(minima.len(), 1, "minima at {minima:?}");
        let a_min = pts[minima[0]].sweep_value;
        assert!(a_min > 0.0 && a_min < 1.0, "minimum at alpha = {a_min}");
        assert!(pts[minima[0]].result < 0.0);
    }

    #[test]
    fn beta_profile_tail_stays_under_frozen_bound() {
        // dW/dbeta, beta = 1, t = 0.5: |value| at alpha = 5 frozen at <= 0.58
        let pts = run_sweep(&fig_spec("dW/dbeta", 1.0, 0.5)).unwrap();
        let last = pts.last().unwrap();
        assert!((last.sweep_value - 5.0).abs() < 1e-12);
        assert!(last.result.abs() <= 0.58, "tail = {}", last.result);
        assert!(last.result.abs() > 0.5, "tail = {}", last.result);
    }

    #[test]
    fn degenerate_single_point_sweep_yields_one_row() {
        let spec = SweepSpec {
            start: 1.5,
            stop: 1.5,
            step: 0.05,
            ..fig_spec("dW/dbeta", 1.0, 1.0)
        };
        let pts = run_sweep(&spec).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].sweep_value, 1.5);
        assert!(pts[0].converged);
    }

    #[test]
    fn failed_points_are_recorded_and_sweep_continues() {
        // mainardi-m is only defined for sigma < 1; the sweep crosses that
        let spec = SweepSpec {
            target: "mainardi-m".into(),
            fixed: vec![("t".into(), 1.0)],
            sweep_var: "sigma".into(),
            start: 0.5,
            stop: 1.5,
            step: 0.5,
            output: "m.csv".into(),
        };
        let pts = run_sweep(&spec).unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts[0].converged && pts[0].result.is_finite());
        assert!(!pts[1].converged && pts[1].result.is_nan());
        assert!(!pts[2].converged && pts[2].result.is_nan());
    }

    #[test]
    fn bad_specs_fail_up_front() {
        let unknown = SweepSpec {
            target: "bessel-k".into(),
            ..fig_spec("dW/dalpha", 1.0, 1.0)
        };
        assert!(matches!(run_sweep(&unknown), Err(WrightError::Manifest(_))));

        let missing = SweepSpec {
            fixed: vec![("beta".into(), 1.0)],
            ..fig_spec("dW/dalpha", 1.0, 1.0)
        };
        assert!(matches!(run_sweep(&missing), Err(WrightError::Manifest(_))));

        let both = SweepSpec {
            fixed: vec![("beta".into(), 1.0), ("t".into(), 1.0), ("alpha".into(), 1.0)],
            ..fig_spec("dW/dalpha", 1.0, 1.0)
        };
        assert!(matches!(run_sweep(&both), Err(WrightError::Manifest(_))));

        let backwards = SweepSpec {
            start: 2.0,
            stop: 1.0,
            ..fig_spec("dW/dalpha", 1.0, 1.0)
        };
        assert!(matches!(run_sweep(&backwards), Err(WrightError::Manifest(_))));
    }

    #[test]
    fn csv_rendering_is_deterministic() {
        let spec = fig_spec("dW/dbeta", 1.0, 2.0);
        let a = curve_csv(&spec.sweep_var, &run_sweep(&spec).unwrap());
        let b = curve_csv(&spec.sweep_var, &run_sweep(&spec).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with("sweep_var,value,result,terms_used,converged\n"));
        let second_line = a.lines().nth(1).unwrap();
        assert_eq!(second_line.split(',').count(), 5);
        assert!(second_line.starts_with("alpha,0.0000000000000000e0,"));
        assert!(second_line.ends_with(",true"));
        assert!(!a.contains('\r'));
    }

    #[test]
    fn stock_figures_are_well_formed() {
        let figs = figure_sweeps();
        assert_eq!(figs.len(), 20);
        let mut outputs: Vec<&str> = figs.iter().map(|s| s.output.as_str()).collect();
        outputs.sort_unstable();
        outputs.dedup();
        assert_eq!(outputs.len(), 20, "duplicate output names");
        for spec in &figs {
            super::validate(spec).unwrap();
        }
        assert_eq!(figs[4].output, "fig1_curve5.csv");
        assert_eq!(figs[4].fixed, vec![("beta".into(), 1.0), ("t".into(), 2.0)]);
    }
}
