//! Independent numerical reference: two-sided Numerov integration of the
//! reduced radial Schrödinger equation
//! −u'' + [V(x) + (Λ²−1/4)/x²] u = E u
//! with node-count bisection followed by secant refinement on the
//! log-derivative mismatch at the outermost classical turning point.

pub mod export;
pub mod numerov;

use std::sync::Arc;

use crate::bounds::TransformPair;
use crate::error::{Error, Result};
use crate::model::{effective_lambda, QuantumNumbers, SpikedOscParams};
pub use numerov::simpson;

/// Inner start values below this many grid steps from the matching point
/// make the shot meaningless.
const MIN_SHOT_SPAN: usize = 8;
/// Largest h²q/12 tolerated at the inner start; the power-law/tiny start
/// is placed at the first grid index satisfying this.
const MAX_START_TQ: f64 = 0.25;
const TINY_START: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl GridConfig {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Result<Self> {
        if !(x_min > 0.0 && x_min < x_max && x_max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid requires 0 < x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if points < 1000 {
            return Err(Error::InvalidParameter(format!(
                "grid requires at least 1000 points, got {points}"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            points,
        })
    }

    /// Default grid sized for states up to energy `e`: x_min = 1e−3,
    /// x_max = max(10, 3√e), 20001 points.
    pub fn for_energy_scale(e: f64) -> Self {
        let x_max = 10.0_f64.max(3.0 * e.max(1.0).sqrt());
        Self {
            x_min: 1e-3,
            x_max,
            points: 20001,
        }
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points - 1) as f64
    }
}

/// A confined radial problem: the bare potential V, quantum numbers, and
/// the centrifugal reduction.
#[derive(Clone)]
pub struct RadialProblem {
    potential: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    pub q: QuantumNumbers,
    pub lambda_eff: f64,
    pub reduced_coeff: f64,
    /// Leading power of the regular solution at the origin, used to seed
    /// the outward integration when the centrifugal term dominates.
    origin_exponent: Option<f64>,
}

impl RadialProblem {
    pub fn potential(&self, x: f64) -> f64 {
        (self.potential)(x)
    }

    /// W(x) = V(x) + (Λ² − 1/4)/x².
    pub fn effective_potential(&self, x: f64) -> f64 {
        self.potential(x) + self.reduced_coeff / (x * x)
    }
}

/// Reduce −Δ + λx^β + μ/x^α in N dimensions to the half-line equation.
/// For α < 2 the centrifugal term dominates near the origin and the
/// regular solution behaves like x^{Λ+1/2}; at α = 2 the spike folds into
/// the centrifugal coefficient and the exponent becomes √(μ+Λ²)+1/2; for
/// α > 2 u is suppressed faster than any power and a tiny start is used.
pub fn reduce_to_radial(p: &SpikedOscParams, q: QuantumNumbers) -> RadialProblem {
    let eff = effective_lambda(q);
    let origin_exponent = if p.alpha < 2.0 {
        Some(eff.lambda_eff + 0.5)
    } else if p.alpha == 2.0 {
        Some((p.mu + eff.lambda_eff * eff.lambda_eff).sqrt() + 0.5)
    } else {
        None
    };
    let p = *p;
    RadialProblem {
        potential: Arc::new(move |x| p.potential(x)),
        q,
        lambda_eff: eff.lambda_eff,
        reduced_coeff: eff.reduced_coeff,
        origin_exponent,
    }
}

/// Reduce −Δ + g(x²) + f(1/x²) to the half-line equation.
pub fn reduce_pair_to_radial(pair: &TransformPair, q: QuantumNumbers) -> RadialProblem {
    let eff = effective_lambda(q);
    let pair = pair.clone();
    RadialProblem {
        potential: Arc::new(move |x| pair.potential(x)),
        q,
        lambda_eff: eff.lambda_eff,
        reduced_coeff: eff.reduced_coeff,
        origin_exponent: None,
    }
}

/// A converged eigenstate.
#[derive(Debug, Clone)]
pub struct RadialSolution {
    pub energy: f64,
    /// Interior node count; equals the radial quantum number n.
    pub nodes: u32,
    pub q: QuantumNumbers,
    /// Grid abscissas.
    pub xs: Vec<f64>,
    /// Reduced wavefunction samples, normalized so ∫u² dx = 1.
    pub u: Vec<f64>,
    /// Log-derivative mismatch at the matching point at convergence.
    pub match_defect: f64,
}

struct Workspace<'a> {
    w: &'a [f64],
    h: f64,
    x_min: f64,
    origin_exponent: Option<f64>,
}

impl Workspace<'_> {
    fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.h
    }

    /// First grid index where h²(W−E)/12 is small enough for a stable
    /// Numerov start. W decreases away from the origin in the singular
    /// region, so scanning from the right finds the last bad index.
    fn inner_start(&self, e: f64) -> usize {
        let c = self.h * self.h / 12.0;
        (0..self.w.len())
            .rev()
            .find(|&i| c * (self.w[i] - e) > MAX_START_TQ)
            .map(|i| i + 1)
            .unwrap_or(0)
    }

    fn start_values(&self, i0: usize) -> (f64, f64) {
        match self.origin_exponent {
            Some(p) => (self.x(i0).powf(p), self.x(i0 + 1).powf(p)),
            None => (0.0, TINY_START),
        }
    }

    /// Outermost grid index still inside the classically allowed region.
    fn match_index(&self, e: f64, i0: usize) -> Result<usize> {
        let n = self.w.len();
        let m = (0..n).rev().find(|&i| self.w[i] <= e).ok_or_else(|| {
            Error::EigenNoConvergence(format!("no classically allowed region at E = {e}"))
        })?;
        let m = m.min(n - 3);
        if m < i0 + MIN_SHOT_SPAN {
            return Err(Error::EigenNoConvergence(format!(
                "matching point (index {m}) too close to the inner start (index {i0}) at E = {e}"
            )));
        }
        Ok(m)
    }

    fn count_nodes(&self, e: f64) -> usize {
        let i0 = self.inner_start(e);
        let (u0, u1) = self.start_values(i0);
        let q: Vec<f64> = self.w.iter().map(|&w| w - e).collect();
        numerov::shoot_count_nodes(&q, self.h, i0, u0, u1)
    }

    /// Log-derivative mismatch of outward and inward solutions at the
    /// matching point, scaled by 2h.
    fn defect(&self, e: f64) -> f64 {
        match self.integrate_two_sided(e) {
            Ok((uo, ui, m)) => {
                if uo[m] == 0.0 || ui[m] == 0.0 {
                    return f64::NAN;
                }
                ((uo[m + 1] - uo[m - 1]) / uo[m] - (ui[m + 1] - ui[m - 1]) / ui[m])
                    / (2.0 * self.h)
            }
            Err(_) => f64::NAN,
        }
    }

    #[allow(clippy::type_complexity)]
    fn integrate_two_sided(&self, e: f64) -> Result<(Vec<f64>, Vec<f64>, usize)> {
        let n = self.w.len();
        let i0 = self.inner_start(e);
        let m = self.match_index(e, i0)?;
        let q: Vec<f64> = self.w.iter().map(|&w| w - e).collect();

        let mut uo = vec![0.0; n];
        let (u0, u1) = self.start_values(i0);
        uo[i0] = u0;
        uo[i0 + 1] = u1;
        numerov::integrate_forward(&q, self.h, i0, m + 1, &mut uo);

        let mut ui = vec![0.0; n];
        ui[n - 1] = 0.0;
        ui[n - 2] = TINY_START;
        numerov::integrate_backward(&q, self.h, n - 1, m - 1, &mut ui);

        Ok((uo, ui, m))
    }
}

/// Find the eigenvalue with exactly n interior nodes, searching a window
/// seeded at `e_guess` and widened geometrically as needed.
pub fn solve_eigenvalue(
    prob: &RadialProblem,
    grid: &GridConfig,
    e_guess: f64,
) -> Result<RadialSolution> {
    let n = grid.points;
    let h = grid.step();
    let w: Vec<f64> = (0..n)
        .map(|i| prob.effective_potential(grid.x_min + i as f64 * h))
        .collect();
    let ws = Workspace {
        w: &w,
        h,
        x_min: grid.x_min,
        origin_exponent: prob.origin_exponent,
    };
    let target = prob.q.n as usize;

    // Node-count window: count(lo) <= n < count(hi).
    let mut lo = e_guess - 2.0;
    let mut hi = e_guess + 2.0;
    let mut width = 2.0;
    let mut guard = 0;
    while ws.count_nodes(lo) > target {
        lo -= width;
        width *= 2.0;
        guard += 1;
        if guard > 60 {
            return Err(Error::EigenvalueWindow {
                lo,
                hi,
                target: prob.q.n,
            });
        }
    }
    width = 2.0;
    guard = 0;
    while ws.count_nodes(hi) <= target {
        hi += width;
        width *= 2.0;
        guard += 1;
        if guard > 60 {
            return Err(Error::EigenvalueWindow {
                lo,
                hi,
                target: prob.q.n,
            });
        }
    }

    // Bisection on the node count down to a narrow window around the jump.
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        if ws.count_nodes(mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Refine on the matching defect: secant with bisection safeguards.
    let scale = hi.abs().max(1.0);
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (ws.defect(a), ws.defect(b));
    if fa.is_finite() && fb.is_finite() && fa * fb < 0.0 {
        for iter in 0..90 {
            let mut c = b - fb * (b - a) / (fb - fa);
            if !c.is_finite() || c <= a || c >= b || iter % 3 == 2 {
                c = 0.5 * (a + b);
            }
            let fc = ws.defect(c);
            if !fc.is_finite() || fc == 0.0 {
                a = c;
                b = c;
                break;
            }
            if fa * fc < 0.0 {
                b = c;
                fb = fc;
            } else {
                a = c;
                fa = fc;
            }
            if b - a < 1e-13 * scale {
                break;
            }
        }
    } else {
        // Defect endpoints unusable; push the node bisection further.
        while hi - lo > 1e-12 * scale {
            let mid = 0.5 * (lo + hi);
            if ws.count_nodes(mid) <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        a = lo;
        b = hi;
    }
    let energy = 0.5 * (a + b);

    // Assemble the wavefunction from both shots.
    let (uo, ui, m) = ws.integrate_two_sided(energy)?;
    if uo[m] == 0.0 || ui[m] == 0.0 {
        return Err(Error::EigenNoConvergence(format!(
            "wavefunction vanishes at the matching point, E = {energy}"
        )));
    }
    let ratio = uo[m] / ui[m];
    let mut u: Vec<f64> = (0..n)
        .map(|i| if i <= m { uo[i] } else { ui[i] * ratio })
        .collect();

    let peak = u.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
    let floor = 1e-12 * peak;
    let mut nodes = 0u32;
    let mut sign = 0i32;
    for &v in &u[1..n - 1] {
        if v.abs() <= floor {
            continue;
        }
        let s = if v > 0.0 { 1 } else { -1 };
        if sign != 0 && s != sign {
            nodes += 1;
        }
        sign = s;
    }
    if nodes != prob.q.n {
        return Err(Error::EigenNoConvergence(format!(
            "converged state at E = {energy} has {nodes} nodes, wanted {}",
            prob.q.n
        )));
    }

    // Sign convention: first significant lobe positive.
    if let Some(&v) = u.iter().find(|v| v.abs() > floor) {
        if v < 0.0 {
            u.iter_mut().for_each(|x| *x = -*x);
        }
    }
    let sq: Vec<f64> = u.iter().map(|&v| v * v).collect();
    let norm = simpson(&sq, h).sqrt();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::EigenNoConvergence(format!(
            "normalization failed at E = {energy}"
        )));
    }
    u.iter_mut().for_each(|v| *v /= norm);

    Ok(RadialSolution {
        energy,
        nodes,
        q: prob.q,
        xs: (0..n).map(|i| grid.x_min + i as f64 * h).collect(),
        u,
        match_defect: ws.defect(energy),
    })
}

/// Like [`solve_eigenvalue`] but repeats the solve with the grid step
/// halved and rejects the result when the two disagree by more than
/// 10 × `tol`.
pub fn solve_eigenvalue_checked(
    prob: &RadialProblem,
    grid: &GridConfig,
    e_guess: f64,
    tol: f64,
) -> Result<RadialSolution> {
    let coarse = solve_eigenvalue(prob, grid, e_guess)?;
    let fine_grid = GridConfig::new(grid.x_min, grid.x_max, grid.points * 2 - 1)?;
    let fine = solve_eigenvalue(prob, &fine_grid, coarse.energy)?;
    let delta = (fine.energy - coarse.energy).abs();
    if delta > 10.0 * tol {
        return Err(Error::GridTooCoarse { delta, tol });
    }
    Ok(fine)
}

/// Solve a spiked-oscillator problem end to end: the bound formula seeds
/// the energy window, and the default grid is sized from the seed.
pub fn solve_spiked(
    p: &SpikedOscParams,
    q: QuantumNumbers,
    grid: Option<GridConfig>,
) -> Result<RadialSolution> {
    let seed = if p.beta == 2.0 {
        crate::bounds::sho_bound_energy(p, q)?.energy
    } else {
        crate::bounds::power_bound_energy(p, q)?.energy
    };
    let grid = grid.unwrap_or_else(|| GridConfig::for_energy_scale(seed + 4.0));
    let prob = reduce_to_radial(p, q);
    solve_eigenvalue(&prob, &grid, seed)
}
