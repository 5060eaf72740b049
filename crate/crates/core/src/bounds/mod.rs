//! The envelope bound functional ε_nl^(N)(s, t) and its optimizers: the
//! one-variable spiked-harmonic-oscillator form (scalar root equation),
//! the power-pair form (2D minimization), and the general form for
//! arbitrary monotone transformation pairs g(x²) + f(1/x²).

pub mod minimize;
pub mod root;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{
    classify_direction, effective_lambda, BoundDirection, Convexity, QuantumNumbers,
    SpikedOscParams,
};
pub use minimize::{LineSense, MinResult};
pub use root::{
    interior_stationary_point, root_bracket, root_equation, root_equation_deriv, solve_root_t,
    RootSolution,
};

/// Outcome of a bound evaluation.
#[derive(Debug, Clone, Copy)]
pub struct BoundResult {
    /// The bound value.
    pub energy: f64,
    /// Whether `energy` bounds the true eigenvalue from below, above,
    /// equals it, or carries no guarantee.
    pub direction: BoundDirection,
    /// Optimal s (0 when the problem reduces to one variable).
    pub s_hat: f64,
    /// Optimal t.
    pub t_hat: f64,
    /// |h(t̂)| for the root path, gradient norm for the minimizer path.
    pub residual: f64,
    pub iterations: u32,
}

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A pair of smooth monotone transformations: g of u = x² and f of
/// v = 1/x², with their first derivatives and declared convexity signs.
/// Both g' and f' must be positive on the positive axis so the square
/// roots in the bound functional stay real.
#[derive(Clone)]
pub struct TransformPair {
    g: RealFn,
    g_prime: RealFn,
    f: RealFn,
    f_prime: RealFn,
    pub g_convexity: Convexity,
    pub f_convexity: Convexity,
}

impl TransformPair {
    pub fn new(
        g: impl Fn(f64) -> f64 + Send + Sync + 'static,
        g_prime: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f_prime: impl Fn(f64) -> f64 + Send + Sync + 'static,
        g_convexity: Convexity,
        f_convexity: Convexity,
    ) -> Self {
        Self {
            g: Arc::new(g),
            g_prime: Arc::new(g_prime),
            f: Arc::new(f),
            f_prime: Arc::new(f_prime),
            g_convexity,
            f_convexity,
        }
    }

    /// The power pair g(u) = λ u^{β/2}, f(v) = μ v^{α/2}, i.e. the
    /// potential λx^β + μ/x^α.
    pub fn power(p: &SpikedOscParams) -> Result<Self> {
        p.validate()?;
        let (lam, mu, alpha, beta) = (p.lam, p.mu, p.alpha, p.beta);
        Ok(Self::new(
            move |u| lam * u.powf(beta / 2.0),
            move |u| lam * beta / 2.0 * u.powf(beta / 2.0 - 1.0),
            move |v| mu * v.powf(alpha / 2.0),
            move |v| mu * alpha / 2.0 * v.powf(alpha / 2.0 - 1.0),
            Convexity::from_power_exponent(beta),
            Convexity::from_power_exponent(alpha),
        ))
    }

    pub fn g(&self, u: f64) -> f64 {
        (self.g)(u)
    }
    pub fn g_prime(&self, u: f64) -> f64 {
        (self.g_prime)(u)
    }
    pub fn f(&self, v: f64) -> f64 {
        (self.f)(v)
    }
    pub fn f_prime(&self, v: f64) -> f64 {
        (self.f_prime)(v)
    }

    /// V(x) = g(x²) + f(1/x²).
    pub fn potential(&self, x: f64) -> f64 {
        self.g(x * x) + self.f(1.0 / (x * x))
    }
}

/// The general bound functional
/// ε(s,t) = g(s²) − s²g'(s²) + f(1/t²) − (1/t²)f'(1/t²)
///        + 2√(g'(s²)) (2n + 1 + √(f'(1/t²) + Λ²)).
fn general_objective(pair: &TransformPair, n: f64, lambda_eff: f64, s: f64, t: f64) -> f64 {
    let u = s * s;
    let v = 1.0 / (t * t);
    let gp = pair.g_prime(u);
    let fp = pair.f_prime(v);
    let radicand = fp + lambda_eff * lambda_eff;
    if gp < 0.0 || radicand < 0.0 {
        return f64::NAN;
    }
    pair.g(u) - u * gp + pair.f(v) - v * fp
        + 2.0 * gp.sqrt() * (2.0 * n + 1.0 + radicand.sqrt())
}

/// The power-pair bound functional
/// ε(s,t) = λ(1−β/2)s^β + (1−α/2)μ/t^α
///        + √(2λβ s^{β−2}) (2n + 1 + √(μα/(2t^{α−2}) + Λ²)).
fn power_objective(p: &SpikedOscParams, n: f64, lambda_eff: f64, s: f64, t: f64) -> f64 {
    let (lam, mu, alpha, beta) = (p.lam, p.mu, p.alpha, p.beta);
    lam * (1.0 - beta / 2.0) * s.powf(beta)
        + (1.0 - alpha / 2.0) * mu * t.powf(-alpha)
        + (2.0 * lam * beta * s.powf(beta - 2.0)).sqrt()
            * (2.0 * n
                + 1.0
                + (mu * alpha / 2.0 * t.powf(2.0 - alpha) + lambda_eff * lambda_eff).sqrt())
}

/// Spiked-harmonic-oscillator bound (β = 2): with t̂ the positive root of
/// 2λt⁴ − μα t^{2−α} − 2Λ² = 0,
/// ε(t̂) = (1 − α/2) μ/t̂^α + 2λt̂² + 2√λ (2n+1).
/// Lower bound for α > 2, upper bound for α < 2, exact at α = 2.
pub fn sho_bound_energy(p: &SpikedOscParams, q: QuantumNumbers) -> Result<BoundResult> {
    p.validate()?;
    if p.beta != 2.0 {
        return Err(Error::InvalidParameter(format!(
            "sho_bound_energy requires beta = 2, got {}",
            p.beta
        )));
    }
    let lambda_eff = effective_lambda(q).lambda_eff;
    let root = solve_root_t(p, lambda_eff)?;
    let t = root.t_hat;
    let energy = (1.0 - p.alpha / 2.0) * p.mu * t.powf(-p.alpha)
        + 2.0 * p.lam * t * t
        + 2.0 * p.lam.sqrt() * (2.0 * q.n as f64 + 1.0);
    Ok(BoundResult {
        energy,
        direction: classify_direction(Convexity::Zero, Convexity::from_power_exponent(p.alpha)),
        s_hat: 0.0,
        t_hat: t,
        residual: root.residual,
        iterations: root.iterations,
    })
}

/// Power-pair bound: joint minimization of the two-variable functional
/// over s, t > 0. Reduces to [`sho_bound_energy`] at β = 2.
pub fn power_bound_energy(p: &SpikedOscParams, q: QuantumNumbers) -> Result<BoundResult> {
    p.validate()?;
    let lambda_eff = effective_lambda(q).lambda_eff;
    let n = q.n as f64;
    let m = minimize::optimize_positive_2d(
        |s, t| power_objective(p, n, lambda_eff, s, t),
        LineSense::from_convexity(Convexity::from_power_exponent(p.beta)),
        LineSense::from_convexity(Convexity::from_power_exponent(p.alpha)),
    )?;
    Ok(BoundResult {
        energy: m.value,
        direction: classify_direction(
            Convexity::from_power_exponent(p.beta),
            Convexity::from_power_exponent(p.alpha),
        ),
        s_hat: m.s,
        t_hat: m.t,
        residual: m.grad_norm,
        iterations: m.sweeps,
    })
}

/// General bound for a user-supplied transformation pair. A search
/// region where the radicand goes negative signals a violated
/// monotonicity declaration and is reported as an error.
pub fn general_bound_energy(pair: &TransformPair, q: QuantumNumbers) -> Result<BoundResult> {
    let lambda_eff = effective_lambda(q).lambda_eff;
    let n = q.n as f64;
    let m = minimize::optimize_positive_2d(
        |s, t| general_objective(pair, n, lambda_eff, s, t),
        LineSense::from_convexity(pair.g_convexity),
        LineSense::from_convexity(pair.f_convexity),
    )
        .map_err(|e| match e {
            Error::NonFiniteObjective(_) => Error::NonFiniteObjective(
                "negative radicand over the whole search region; check that g and f are monotone increasing".into(),
            ),
            other => other,
        })?;
    Ok(BoundResult {
        energy: m.value,
        direction: classify_direction(pair.g_convexity, pair.f_convexity),
        s_hat: m.s,
        t_hat: m.t,
        residual: m.grad_norm,
        iterations: m.sweeps,
    })
}
