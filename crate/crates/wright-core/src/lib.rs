//! Wright and Mittag-Leffler special functions with parameter derivatives,
//! plus the verification machinery (Bessel reductions, Laplace-transform
//! identities, delta-sequence limits) used to cross-check them.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`] - gamma-family kernels, erf, exponential/sine/cosine integrals
//! * [`series`] - Kahan-compensated power-series summation with a uniform
//!   convergence report ([`series::SeriesEval`])
//! * [`error`]  - the shared [`error::WrightError`] type

pub mod bessel;
pub(crate) mod dd;
pub mod delta;
pub mod deriv;
pub mod error;
pub mod hyper;
pub mod laplace;
pub mod manifest;
pub mod ops;
pub mod quad;
pub mod report;
pub mod scalar;
pub mod series;
pub mod sweep;
pub mod verify;
pub mod wright;

pub use delta::{lamborn_kernel, lamborn_limit, wright_limit_hyp, LambornOrder};
pub use deriv::{
    closed_form_dw_dbeta_bessel, d2f_dsigma2, d2m_dsigma2, d2w_dalpha2, d2w_dbeta2, de_dalpha,
    de_dbeta, df_dsigma, dm_dsigma, dw_dalpha, dw_dbeta,
};
pub use error::{Result, WrightError};
pub use laplace::{
    builtin_pairs, ml_explicit, second_kind_transform_check, verify_pair, TransformPair,
};
pub use manifest::{
    load_pair_manifest, load_sweep_manifest, pairs_to_manifest, parse_pair_manifest,
    parse_sweep_manifest, sweeps_to_manifest,
};
pub use ops::{evaluate, OpInfo, OPERATIONS};
pub use report::{ReportRow, VerificationReport};
pub use sweep::{curve_csv, figure_sweeps, run_sweep, CurvePoint, SweepSpec};
pub use series::{SeriesEval, Tolerance};
pub use verify::{
    check_bessel_closed_forms, check_bessel_reductions, check_beta_recurrence,
    check_derivatives_fd, check_figure_morphology, check_mainardi_structure, check_ml_explicit,
    run_adjudications, run_identities, run_laplace, run_limits,
};
pub use wright::{mainardi_f, mainardi_m, mittag_leffler, wright};
