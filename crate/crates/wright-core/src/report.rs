//! Tabular pass/fail reports for the verification suites.
//!
//! Every check in the `verify` subcommand produces one [`ReportRow`]; the
//! rows are collected into a [`VerificationReport`] that can be printed,
//! merged with other reports, and serialized to CSV.

use crate::error::Result;
use std::fmt::Write as _;

/// One verified identity instance: a left-hand side, a right-hand side,
/// the errors between them, and whether they agreed within tolerance.
#[derive(Debug, Clone)]
pub struct ReportRow {
    /// Check identifier, e.g. `bessel_j_reduction` or `pair_first_kind_ml`.
    pub name: String,
    /// Semicolon-joined parameter assignments, e.g. `alpha=1;beta=1;s=2`.
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
}

impl ReportRow {
    /// Builds a row from the two sides and a tolerance pair.  The check
    /// passes when either the relative or the absolute error is within
    /// bounds; a non-finite side always fails.
    pub fn check(
        name: impl Into<String>,
        params: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol_rel: f64,
        tol_abs: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if rhs != 0.0 {
            abs_err / rhs.abs()
        } else if abs_err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        let pass = lhs.is_finite()
            && rhs.is_finite()
            && (rel_err <= tol_rel || abs_err <= tol_abs);
        ReportRow {
            name: name.into(),
            params: params.into(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            pass,
        }
    }
}

/// Ordered collection of check rows with CSV output.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { rows: Vec::new() }
    }

    /// Convenience wrapper: build a [`ReportRow::check`] row, push it, and
    /// return whether it passed.
    pub fn check(
        &mut self,
        name: impl Into<String>,
        params: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol_rel: f64,
        tol_abs: f64,
    ) -> bool {
        let row = ReportRow::check(name, params, lhs, rhs, tol_rel, tol_abs);
        let pass = row.pass;
        self.rows.push(row);
        pass
    }

    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.rows.extend(other.rows);
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }

    /// CSV with a fixed header; floats at 17 significant digits so reruns
    /// are byte-identical.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,param_tuple,lhs,rhs,abs_err,rel_err,pass\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{}",
                r.name, r.params, r.lhs, r.rhs, r.abs_err, r.rel_err, r.pass
            );
        }
        out
    }

    pub fn write_csv(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_csv())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_passes_on_rel_or_abs() {
        let mut rep = VerificationReport::new();
        assert!(rep.check("a", "x=1", 1.0, 1.0 + 1e-12, 1e-10, 0.0));
        // rel error is huge but abs error is tiny
        assert!(rep.check("b", "x=2", 1e-18, 3e-18, 1e-14, 1e-12));
        assert!(!rep.check("c", "x=3", 1.0, 2.0, 1e-10, 1e-10));
        assert_eq!(rep.failures(), 1);
        assert!(!rep.all_pass());
    }

    #[test]
    fn nan_rows_always_fail() {
        let mut rep = VerificationReport::new();
        assert!(!rep.check("q", "s=1", f64::NAN, 1.0, 1.0, 1.0));
        assert!(!rep.check("q", "s=2", 1.0, f64::INFINITY, 1.0, 1.0));
    }

    #[test]
    fn csv_shape() {
        let mut rep = VerificationReport::new();
        rep.check("id", "alpha=1;s=2", 0.5, 0.5, 1e-10, 0.0);
        let csv = rep.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "name,param_tuple,lhs,rhs,abs_err,rel_err,pass"
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("id,alpha=1;s=2,"));
        assert!(row.ends_with(",true"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn zero_rhs_uses_abs_tolerance() {
        let mut rep = VerificationReport::new();
        assert!(rep.check("z", "t=0", 1e-15, 0.0, 1e-10, 1e-12));
        assert!(!rep.check("z", "t=1", 1e-3, 0.0, 1e-10, 1e-12));
    }
}
