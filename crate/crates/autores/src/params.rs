//! Model parameters: sweep rate, pump phase and pump profile.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Pump amplitude profile `mu(tau)`.
///
/// The combined excitation balances only when `mu(tau) ~ tau^{-1/2}`, so both
/// variants decay at that rate; they differ in how the `tau -> 0` end is
/// handled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum MuProfile {
    /// `mu(tau) = tau^{-1/2} (mu0 + sum_k mu_k tau^{-k})`; singular at 0,
    /// meaningful for `tau >= 1`.
    AsymptoticSeries { mu_coeffs: Vec<f64> },
    /// `mu(tau) = mu0 (shift + tau)^{-1/2}`; regular on `tau >= 0`.
    Regularized { mu0: f64, shift: f64 },
}

impl MuProfile {
    pub fn series(mu_coeffs: Vec<f64>) -> Self {
        MuProfile::AsymptoticSeries { mu_coeffs }
    }

    pub fn regularized(mu0: f64, shift: f64) -> Self {
        MuProfile::Regularized { mu0, shift }
    }

    fn validate(&self) -> Result<()> {
        match self {
            MuProfile::AsymptoticSeries { mu_coeffs } => {
                if mu_coeffs.is_empty() {
                    return Err(Error::InvalidInput(
                        "asymptotic mu profile needs at least one coefficient".into(),
                    ));
                }
            }
            MuProfile::Regularized { shift, .. } => {
                if !(*shift > 0.0) {
                    return Err(Error::InvalidInput(format!(
                        "regularized mu profile needs shift > 0, got {shift}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Leading coefficient `mu0` (the one entering `delta = mu0 sqrt(lambda)`).
    pub fn mu0(&self) -> f64 {
        match self {
            MuProfile::AsymptoticSeries { mu_coeffs } => mu_coeffs[0],
            MuProfile::Regularized { mu0, .. } => *mu0,
        }
    }

    /// Pointwise value of `mu(tau)`.
    pub fn eval(&self, tau: f64) -> f64 {
        match self {
            MuProfile::AsymptoticSeries { mu_coeffs } => {
                // tau^{-1/2} * (mu0 + mu1/tau + mu2/tau^2 + ...)
                let inv = 1.0 / tau;
                let mut acc = 0.0;
                for &c in mu_coeffs.iter().rev() {
                    acc = acc * inv + c;
                }
                acc / tau.sqrt()
            }
            MuProfile::Regularized { mu0, shift } => mu0 / (shift + tau).sqrt(),
        }
    }

    /// Coefficients `mu_0..mu_{n-1}` of the `tau -> infinity` expansion
    /// `mu(tau) = tau^{-1/2} sum_k mu_k tau^{-k}`.
    ///
    /// For the regularized profile this is the binomial expansion
    /// `mu_k = mu0 * C(-1/2, k) * shift^k`; series construction works on
    /// these coefficients while integration keeps the closed form.
    pub fn asymptotic_coeffs(&self, n: usize) -> Vec<f64> {
        match self {
            MuProfile::AsymptoticSeries { mu_coeffs } => {
                let mut out = mu_coeffs.clone();
                out.resize(n, 0.0);
                out.truncate(n);
                out
            }
            MuProfile::Regularized { mu0, shift } => {
                let mut out = Vec::with_capacity(n);
                let mut binom = 1.0; // C(-1/2, 0)
                for k in 0..n {
                    out.push(mu0 * binom);
                    // C(-1/2, k+1) = C(-1/2, k) * (-1/2 - k) / (k + 1)
                    binom *= (-0.5 - k as f64) / (k as f64 + 1.0) * shift;
                }
                out
            }
        }
    }

    pub fn is_regularized(&self) -> bool {
        matches!(self, MuProfile::Regularized { .. })
    }
}

/// Physical parameters of the slow system: sweep rate `lambda`, pump phase
/// `nu` and the pump profile `mu(tau)`. Everything downstream is a function
/// of these; in particular `delta = mu0 sqrt(lambda)` is always derived,
/// never stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    lambda: f64,
    nu: f64,
    mu: MuProfile,
}

impl ModelParams {
    pub fn new(lambda: f64, nu: f64, mu: MuProfile) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidInput(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        if !(0.0..std::f64::consts::PI).contains(&nu) {
            return Err(Error::InvalidInput(format!(
                "nu must lie in [0, pi), got {nu}"
            )));
        }
        mu.validate()?;
        Ok(ModelParams { lambda, nu, mu })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn mu(&self) -> &MuProfile {
        &self.mu
    }

    /// `delta = mu0 sqrt(lambda)`.
    pub fn delta(&self) -> f64 {
        self.mu.mu0() * self.lambda.sqrt()
    }

    /// Same parameters with the pump replaced by its asymptotic expansion to
    /// `n` coefficients.
    pub fn with_asymptotic_mu(&self, n: usize) -> Self {
        ModelParams {
            lambda: self.lambda,
            nu: self.nu,
            mu: MuProfile::series(self.mu.asymptotic_coeffs(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_is_derived_from_mu0_and_lambda() {
        let p = ModelParams::new(4.0, 0.0, MuProfile::series(vec![0.25])).unwrap();
        assert_eq!(p.delta(), 0.5);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(ModelParams::new(0.0, 0.0, MuProfile::series(vec![1.0])).is_err());
        assert!(ModelParams::new(1.0, -0.1, MuProfile::series(vec![1.0])).is_err());
        assert!(ModelParams::new(1.0, std::f64::consts::PI, MuProfile::series(vec![1.0])).is_err());
        assert!(ModelParams::new(1.0, 0.0, MuProfile::series(vec![])).is_err());
        assert!(ModelParams::new(1.0, 0.0, MuProfile::regularized(1.0, 0.0)).is_err());
    }

    #[test]
    fn regularized_expansion_matches_pointwise_values() {
        let mu = MuProfile::regularized(-0.5, 1.0);
        let coeffs = mu.asymptotic_coeffs(8);
        let series = MuProfile::series(coeffs);
        for &tau in &[50.0, 200.0, 1e4] {
            let exact = mu.eval(tau);
            let approx = series.eval(tau);
            assert!(
                ((exact - approx) / exact).abs() < 1e-10,
                "tau={tau}: {exact} vs {approx}"
            );
        }
    }

    #[test]
    fn asymptotic_eval_is_horner_of_the_coefficients() {
        let mu = MuProfile::series(vec![0.3, -0.1, 0.05]);
        let tau = 7.0;
        let expected = (0.3 + -0.1 / tau + 0.05 / (tau * tau)) / tau.sqrt();
        assert!((mu.eval(tau) - expected).abs() < 1e-15);
    }
}
