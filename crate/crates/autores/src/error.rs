//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Invalid model parameter or argument.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two returned roots are closer than 10x the root tolerance but neither
    /// qualifies as a multiple root; the parameters sit too close to a
    /// bifurcation curve for the requested tolerances.
    #[error("near-degenerate root pair at sigma ~ {sigma:.6}: separation {separation:.3e} < 10*root_tol but both roots are simple")]
    DegenerateNearBoundary { sigma: f64, separation: f64 },

    /// A series operation would retain zero terms.
    #[error("series order underflow in {0}")]
    OrderUnderflow(&'static str),

    /// `sin`/`cos` of a series requires a strictly positive leading exponent.
    #[error("series has a constant or growing term (leading exponent {0})")]
    ConstantTermPresent(f64),

    /// The order-k linear system of the series construction is singular,
    /// which signals a misclassified root multiplicity.
    #[error("order-{order} system is singular (pivot {pivot:.3e}); root multiplicity misclassified?")]
    UnsolvableOrder { order: usize, pivot: f64 },

    /// No real double-root branch: the multiplicity-2 expansion requires
    /// sin(sigma) > 0.
    #[error("no real branch: multiplicity-2 expansion needs sin(sigma) > 0, got sin(sigma) = {0:.6}")]
    NoRealBranch(f64),

    /// Amplitude fell to the guard value where 1/rho blows up.
    #[error("amplitude underflow: rho = {rho:.3e} <= guard {guard:.3e} at tau = {tau:.6}")]
    AmplitudeUnderflow { tau: f64, rho: f64, guard: f64 },

    /// Adaptive step size collapsed below 1e-12.
    #[error("step size underflow at t = {0:.6}")]
    StepUnderflow(f64),

    /// State outside the ball where a Lyapunov construction is defined.
    #[error("state outside Lyapunov domain: d = {d:.4} > d_star = {d_star:.4}")]
    OutOfDomain { d: f64, d_star: f64 },

    /// Closed-orbit period exceeds 1000x the small-oscillation period; the
    /// requested level is too close to the separatrix.
    #[error("orbit too close to the separatrix: period {period:.3e} > 1000 * T(0+) = {limit:.3e}")]
    SeparatrixProximity { period: f64, limit: f64 },

    /// Fewer than 10 extrema detected; the fit window is too short.
    #[error("insufficient oscillations: {0} extrema detected, need >= 10")]
    InsufficientOscillations(usize),
}
