//! Closed-form spectra used as exact references: the N-dimensional
//! Gol'dman–Krivchenkov potential λx² + μ/x² and its μ → 0 harmonic
//! oscillator limit.

use crate::error::{Error, Result};
use crate::model::{effective_lambda, QuantumNumbers};

/// Inputs for the Gol'dman–Krivchenkov spectrum. μ = 0 is admitted here
/// (harmonic limit) even though the spiked-oscillator bound machinery
/// requires μ > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GKSpectrumQuery {
    pub lam: f64,
    pub mu: f64,
    pub q: QuantumNumbers,
}

impl GKSpectrumQuery {
    pub fn new(lam: f64, mu: f64, q: QuantumNumbers) -> Result<Self> {
        if !(lam > 0.0) || !lam.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "lambda must be finite and > 0, got {lam}"
            )));
        }
        if !(mu >= 0.0) || !mu.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mu must be finite and >= 0, got {mu}"
            )));
        }
        Ok(Self { lam, mu, q })
    }
}

/// Exact eigenvalues of −Δ + λx² + μ/x² in N dimensions:
/// E = 2√λ (2n + 1 + √(μ + Λ²)) with Λ = l + N/2 − 1.
pub fn gk_energy(query: GKSpectrumQuery) -> Result<f64> {
    let lambda_eff = effective_lambda(query.q).lambda_eff;
    let radicand = query.mu + lambda_eff * lambda_eff;
    if radicand < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "mu + Lambda^2 = {radicand} < 0"
        )));
    }
    let n = query.q.n as f64;
    Ok(2.0 * query.lam.sqrt() * (2.0 * n + 1.0 + radicand.sqrt()))
}

/// Harmonic oscillator eigenvalues in N dimensions: 2√λ(2n + 1 + Λ),
/// i.e. √λ(4n + 2l + N) — the μ = 0 limit of [`gk_energy`].
pub fn harmonic_energy(lam: f64, q: QuantumNumbers) -> Result<f64> {
    gk_energy(GKSpectrumQuery::new(lam, 0.0, q)?)
}
