//! Sparse inverse-covariance estimation via the graphical lasso dual algorithm,
//! together with the diagnostics and repairs its concentration-matrix output needs.
//!
//! The solver in [`glasso`] runs block coordinate ascent on the covariance iterate
//! `W` and assembles the concentration estimate from per-column records captured
//! during the final sweep. That assembly is deliberately faithful to the published
//! algorithm: the resulting `omega_raw` is generally *asymmetric*, because all but
//! the last column invert stale iterates. [`diagnose`] quantifies the defect
//! (relative-error matrix, edge-set differences, KKT and dual-feasibility
//! residuals, the divergence lower bound) and [`repair`] produces symmetric,
//! usable estimators from a fit (direct inversion, triangle mirroring, and the
//! constrained MLE via iterative proportional fitting).
//!
//! The crate is `no_std` + `alloc`; disable the default `std` feature and enable
//! `libm` for freestanding builds. File formats and the command-line front end
//! live in the companion `glasso-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("glasso-core needs either the default `std` feature or the `libm` feature");

extern crate alloc;

pub(crate) mod fmath;

pub mod diagnose;
pub mod eigen;
pub mod glasso;
pub mod graph;
pub mod lasso;
pub mod matrix;
pub mod repair;
pub mod rng;
pub mod sim;

pub use eigen::{condition_number, eig_general, eig_symmetric, op_2_norm_symmetric, Complex, EigenSummary};
pub use glasso::{dual_objective, duality_gap, fit, primal_objective, GlassoConfig, GlassoError, GlassoFit};
pub use graph::{enumerate_maximal_cliques, Graph};
pub use lasso::{soft_threshold, solve_lasso, LassoProblem, LassoSolution};
pub use matrix::{cholesky, invert_spd, op_inf_norm, sup_norm, CholeskyFactor, MatrixError, SquareMatrix};
pub use repair::{repair_inversion, repair_ipf, repair_modified_output, RepairMethod, RepairedEstimate};
pub use sim::{ar1_model, example1_model, sample, sample_covariance, Dataset, Divisor, GaussianModel};
