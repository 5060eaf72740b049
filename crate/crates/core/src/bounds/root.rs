//! Scalar root equation behind the spiked-harmonic-oscillator bound:
//! h(t) = 2λt⁴ − μα t^{2−α} − 2Λ² has a unique positive root t̂, found by
//! bracketed bisection followed by safeguarded Newton.

use crate::error::{Error, Result};
use crate::model::SpikedOscParams;

/// Relative residual target: |h(t̂)| ≤ ABS_TOL + REL_TOL · 2λt̂⁴.
const ABS_TOL: f64 = 1e-12;
const REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy)]
pub struct RootSolution {
    pub t_hat: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// h(t) = 2λt⁴ − μα t^{2−α} − 2Λ².
pub fn root_equation(t: f64, lam: f64, mu: f64, alpha: f64, lambda_eff: f64) -> f64 {
    2.0 * lam * t.powi(4) - mu * alpha * t.powf(2.0 - alpha) - 2.0 * lambda_eff * lambda_eff
}

/// h'(t) = 8λt³ − μα(2−α) t^{1−α}.
pub fn root_equation_deriv(t: f64, lam: f64, mu: f64, alpha: f64) -> f64 {
    8.0 * lam * t.powi(3) - mu * alpha * (2.0 - alpha) * t.powf(1.0 - alpha)
}

/// For α < 2, the single interior minimum of h: solving h'(t) = 0 gives
/// t* = (μα(2−α) / 8λ)^{1/(2+α)}.
pub fn interior_stationary_point(lam: f64, mu: f64, alpha: f64) -> f64 {
    (mu * alpha * (2.0 - alpha) / (8.0 * lam)).powf(1.0 / (2.0 + alpha))
}

/// A sign-changing bracket for h: h(lo) < 0 < h(hi). For α < 2 the left
/// edge starts at the interior minimum of h; otherwise the bracket grows
/// geometrically from t = 1.
pub fn root_bracket(lam: f64, mu: f64, alpha: f64, lambda_eff: f64) -> Result<(f64, f64)> {
    let h = |t: f64| root_equation(t, lam, mu, alpha, lambda_eff);
    let fail = |lo: f64, hi: f64| Error::RootNoConvergence {
        lo,
        hi,
        residual: f64::INFINITY,
    };

    let mut lo = if alpha < 2.0 {
        interior_stationary_point(lam, mu, alpha)
    } else {
        1.0
    };
    let mut guard = 0;
    while !(h(lo) < 0.0) {
        lo *= 0.5;
        guard += 1;
        if guard > 2000 || !lo.is_finite() || lo == 0.0 {
            return Err(fail(lo, lo));
        }
    }

    let mut hi = lo.max(1.0) * 2.0;
    guard = 0;
    while !(h(hi) > 0.0) {
        hi *= 2.0;
        guard += 1;
        if guard > 2000 || !hi.is_finite() || !h(hi).is_finite() {
            return Err(fail(lo, hi));
        }
    }
    Ok((lo, hi))
}

/// The unique positive root t̂ of h. Closed forms are used at α = 2
/// (t̂⁴ = (μ + Λ²)/λ) and at Λ = 0 (t̂ = (μα/2λ)^{1/(2+α)}); otherwise
/// bisection narrows the bracket to 1e−3 relative width and Newton
/// finishes, falling back to bisection whenever a step leaves the bracket.
pub fn solve_root_t(p: &SpikedOscParams, lambda_eff: f64) -> Result<RootSolution> {
    p.validate()?;
    let (lam, mu, alpha) = (p.lam, p.mu, p.alpha);
    let h = |t: f64| root_equation(t, lam, mu, alpha, lambda_eff);
    let done = |t: f64, iterations: u32| RootSolution {
        t_hat: t,
        residual: h(t).abs(),
        iterations,
    };

    if alpha == 2.0 {
        let t = ((mu + lambda_eff * lambda_eff) / lam).powf(0.25);
        return Ok(done(t, 0));
    }
    if lambda_eff == 0.0 {
        let t = (mu * alpha / (2.0 * lam)).powf(1.0 / (2.0 + alpha));
        return Ok(done(t, 0));
    }

    let (mut lo, mut hi) = root_bracket(lam, mu, alpha, lambda_eff)?;
    let mut iterations = 0u32;
    while hi - lo > 1e-3 * hi {
        let mid = 0.5 * (lo + hi);
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
        if iterations > 200 {
            break;
        }
    }

    let mut t = 0.5 * (lo + hi);
    for _ in 0..100 {
        iterations += 1;
        let f = h(t);
        if f < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        let scale = (2.0 * lam * t.powi(4)).max(1.0);
        if f.abs() <= ABS_TOL + REL_TOL * scale {
            return Ok(done(t, iterations));
        }
        let df = root_equation_deriv(t, lam, mu, alpha);
        let mut next = t - f / df;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - t).abs() <= f64::EPSILON * t {
            t = next;
            break;
        }
        t = next;
    }

    let residual = h(t).abs();
    if residual <= 1e-10 * (2.0 * lam * t.powi(4)).max(1.0) {
        Ok(RootSolution {
            t_hat: t,
            residual,
            iterations,
        })
    } else {
        Err(Error::RootNoConvergence { lo, hi, residual })
    }
}
