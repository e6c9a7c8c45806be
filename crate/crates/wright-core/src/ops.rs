//! Name-addressable evaluation: every function the CLI `eval` subcommand and
//! the sweep runner can point at, with its parameter list and domain text.
//!
//! Names are matched case-insensitively with `/` and `-` treated as `_`, so
//! `dW/dalpha`, `dw-dalpha`, and `dw_dalpha` all resolve to the same entry.

use crate::error::{Result, WrightError};
use crate::series::SeriesEval;
use crate::{deriv, laplace, wright};

/// One entry of the evaluation table.
pub struct OpInfo {
    /// canonical spelling, as printed by `--help`
    pub name: &'static str,
    /// parameter names, in the order the CLI documents them
    pub params: &'static [&'static str],
    /// human-readable domain of validity
    pub domain: &'static str,
}

pub const OPERATIONS: &[OpInfo] = &[
    OpInfo {
        name: "wright",
        params: &["alpha", "beta", "t"],
        domain: "alpha > -1, any real beta, any real t within overflow range",
    },
    OpInfo {
        name: "mittag-leffler",
        params: &["alpha", "beta", "t"],
        domain: "alpha > 0, any real beta, any real t",
    },
    OpInfo {
        name: "ml-explicit",
        params: &["beta", "t"],
        domain: "beta > 0, any real t; closed form of E_{1,beta+1}(t)",
    },
    OpInfo {
        name: "mainardi-m",
        params: &["sigma", "t"],
        domain: "0 < sigma < 1, t >= 0",
    },
    OpInfo {
        name: "mainardi-f",
        params: &["sigma", "t"],
        domain: "0 < sigma < 1, t >= 0",
    },
    OpInfo {
        name: "dW/dalpha",
        params: &["alpha", "beta", "t"],
        domain: "alpha >= 0, any real beta, any real t",
    },
    OpInfo {
        name: "dW/dbeta",
        params: &["alpha", "beta", "t"],
        domain: "alpha >= 0, any real beta, any real t",
    },
    OpInfo {
        name: "d2W/dalpha2",
        params: &["alpha", "beta", "t"],
        domain: "alpha >= 0, any real beta, any real t",
    },
    OpInfo {
        name: "d2W/dbeta2",
        params: &["alpha", "beta", "t"],
        domain: "alpha >= 0, any real beta, any real t",
    },
    OpInfo {
        name: "dE/dalpha",
        params: &["alpha", "beta", "t"],
        domain: "alpha > 0, any real beta, any real t",
    },
    OpInfo {
        name: "dE/dbeta",
        params: &["alpha", "beta", "t"],
        domain: "alpha > 0, any real beta, any real t",
    },
    OpInfo {
        name: "dF/dsigma",
        params: &["sigma", "t"],
        domain: "0 < sigma < 1, t >= 0",
    },
    OpInfo {
        name: "dM/dsigma",
        params: &["sigma", "t"],
        domain: "0 < sigma < 1, t >= 0",
    },
    OpInfo {
        name: "d2F/dsigma2",
        params: &["sigma", "t"],
        domain: "0 < sigma < 1, t >= 0",
    },
    OpInfo {
        name: "d2M/dsigma2",
        params: &["sigma", "t"],
        domain: "0 < sigma < 1, t >= 0",
    },
];

/// Case/spelling-insensitive key for table lookup.
pub fn normalize(name: &str) -> String {
    name.trim()
        .to_ascii_lowercase()
        .replace(['/', '-'], "_")
}

pub fn lookup(name: &str) -> Option<&'static OpInfo> {
    let key = normalize(name);
    OPERATIONS.iter().find(|op| normalize(op.name) == key)
}

/// Evaluate `name` with named parameters.  `params` must supply exactly the
/// parameters the table entry declares, in any order.
pub fn evaluate(name: &str, params: &[(String, f64)]) -> Result<SeriesEval> {
    let op = lookup(name).ok_or_else(|| {
        WrightError::Domain(format!("unknown function '{name}'"))
    })?;
    for (k, _) in params {
        if !op.params.contains(&k.as_str()) {
            return Err(WrightError::Domain(format!(
                "function '{}' does not take parameter '{k}'",
                op.name
            )));
        }
    }
    let get = |key: &str| -> Result<f64> {
        params
            .iter()
            .find(|(k, _)| k == key)
            .map(|&(_, v)| v)
            .ok_or_else(|| {
                WrightError::Domain(format!(
                    "function '{}' needs parameter '{key}'",
                    op.name
                ))
            })
    };
    match normalize(op.name).as_str() {
        "wright" => wright::wright(get("alpha")?, get("beta")?, get("t")?),
        "mittag_leffler" => wright::mittag_leffler(get("alpha")?, get("beta")?, get("t")?),
        "ml_explicit" => laplace::ml_explicit(get("beta")?, get("t")?),
        "mainardi_m" => wright::mainardi_m(get("sigma")?, get("t")?),
        "mainardi_f" => wright::mainardi_f(get("sigma")?, get("t")?),
        "dw_dalpha" => deriv::dw_dalpha(get("alpha")?, get("beta")?, get("t")?),
        "dw_dbeta" => deriv::dw_dbeta(get("alpha")?, get("beta")?, get("t")?),
        "d2w_dalpha2" => deriv::d2w_dalpha2(get("alpha")?, get("beta")?, get("t")?),
        "d2w_dbeta2" => deriv::d2w_dbeta2(get("alpha")?, get("beta")?, get("t")?),
        "de_dalpha" => deriv::de_dalpha(get("alpha")?, get("beta")?, get("t")?),
        "de_dbeta" => deriv::de_dbeta(get("alpha")?, get("beta")?, get("t")?),
        "df_dsigma" => deriv::df_dsigma(get("sigma")?, get("t")?),
        "dm_dsigma" => deriv::dm_dsigma(get("sigma")?, get("t")?),
        "d2f_dsigma2" => deriv::d2f_dsigma2(get("sigma")?, get("t")?),
        "d2m_dsigma2" => deriv::d2m_dsigma2(get("sigma")?, get("t")?),
        other => Err(WrightError::Domain(format!(
            "function '{other}' has no evaluator"
        ))),
    }
}
