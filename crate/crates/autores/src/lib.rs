//! Numerical laboratory for autoresonant modes of a slowly forced nonlinear
//! oscillator with combined external and parametric excitation.
//!
//! The slow-flow model is the planar system
//!
//! ```text
//!   rho' = sin(psi) - mu(tau) rho sin(2 psi + nu),
//!   psi' = rho^2 - lambda tau - mu(tau) cos(2 psi + nu) + cos(psi) / rho,
//! ```
//!
//! with `lambda > 0`, `nu in [0, pi)` and a pump profile `mu(tau) ~ tau^{-1/2}`.
//! Solutions with `rho -> infinity` and bounded phase mismatch `psi` are the
//! captured (autoresonant) modes; their limiting phases are the roots of
//! `P(sigma) = delta sin(2 sigma + nu) - sin(sigma)` with `delta = mu0 sqrt(lambda)`.
//!
//! The crate provides:
//!
//! * [`phase`] — the algebra of `P`, the bifurcation function
//!   `gamma = (4 delta^2 - 1)^3 - 27 delta^2 sin^2(nu)`, parameter-plane
//!   classification and root finding with multiplicity detection;
//! * [`series`] — truncated Puiseux-series arithmetic in `z = tau^{-1/q}`
//!   and order-by-order construction of the particular autoresonant
//!   solutions for simple, double and triple roots (`q = 2, 4, 6`);
//! * [`integrate`] — an adaptive Dormand–Prince 5(4) integrator for the slow
//!   system and the original fast oscillator, plus capture classification;
//! * [`stability`] — linearization, eigenvalue asymptotics, the Lyapunov
//!   functions `V1, U2, U3, V2, V3` and empirical stability-rate measurement;
//! * [`averaging`] — the frozen Hamiltonians `h_{-1}` and `h_2^0`, critical
//!   points, action-angle tables, and envelope/phase-growth fits.

pub mod averaging;
pub mod error;
pub mod fitting;
pub mod integrate;
pub mod params;
pub mod phase;
pub mod series;
pub mod stability;

pub use error::Error;
pub use params::{ModelParams, MuProfile};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
