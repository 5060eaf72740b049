//! Derivative-free search for the stationary point of the two-variable
//! bound functional: a coarse logarithmic grid scan to find the basin,
//! then alternating coordinate steps with golden-section line searches.
//! Both variables are strictly positive, so all searching happens in log
//! coordinates.
//!
//! The tangent construction makes the relevant stationary point a
//! minimum along a coordinate whose transform is concave and a maximum
//! along one whose transform is convex (the functional is unbounded on
//! the far side of a convex coordinate); a linear transform leaves the
//! functional flat in its coordinate.

use crate::error::{Error, Result};
use crate::model::Convexity;

const INV_GOLDEN: f64 = 0.618_033_988_749_894_8;
/// Convergence threshold on the per-sweep move of each log-coordinate.
const SWEEP_TOL: f64 = 1e-10;
const MAX_SWEEPS: u32 = 500;
/// Log-space extent of the seeding grid: [1e-3, 1e3] on each axis.
const GRID_LO: f64 = -3.0 * std::f64::consts::LN_10;
const GRID_HI: f64 = 3.0 * std::f64::consts::LN_10;
const GRID_N: usize = 50;

/// Search direction along one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineSense {
    Min,
    Max,
    Flat,
}

impl LineSense {
    /// Concave transforms are approximated by tangents from above, so the
    /// tightest bound is the line minimum; convex ones from below, so the
    /// line maximum; linear transforms drop out of their coordinate.
    pub fn from_convexity(c: Convexity) -> Self {
        match c {
            Convexity::Positive => LineSense::Max,
            Convexity::Zero => LineSense::Flat,
            Convexity::Negative => LineSense::Min,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MinResult {
    pub s: f64,
    pub t: f64,
    pub value: f64,
    pub sweeps: u32,
    /// Central finite-difference gradient norm at the reported optimum.
    pub grad_norm: f64,
}

/// Golden-section minimum of `f` on `[a, b]`; returns the abscissa.
fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut x1 = b - INV_GOLDEN * (b - a);
    let mut x2 = a + INV_GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_GOLDEN * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_GOLDEN * (b - a);
            f2 = f(x2);
        }
    }
    0.5 * (a + b)
}

/// Expand geometrically from `x0` until the minimum along this line is
/// interior to `[a, b]` (f no smaller at both edges than at `x0`).
fn expand_bracket(f: &dyn Fn(f64) -> f64, x0: f64) -> (f64, f64) {
    let f0 = f(x0);
    let mut step = 0.5;
    let (mut a, mut b) = (x0 - step, x0 + step);
    let mut guard = 0;
    while f(a) < f0 {
        step *= 2.0;
        a = x0 - step;
        guard += 1;
        if guard > 60 {
            break;
        }
    }
    step = 0.5;
    guard = 0;
    while f(b) < f0 {
        step *= 2.0;
        b = x0 + step;
        guard += 1;
        if guard > 60 {
            break;
        }
    }
    (a, b)
}

/// One coordinate step: line-search `f` in the given sense starting from
/// `x0`, moving only on strict improvement.
fn line_step(f: &dyn Fn(f64) -> f64, x0: f64, sense: LineSense) -> f64 {
    match sense {
        LineSense::Flat => x0,
        LineSense::Min => {
            let (a, b) = expand_bracket(f, x0);
            let x = golden_min(f, a, b, 1e-12);
            if f(x) < f(x0) {
                x
            } else {
                x0
            }
        }
        LineSense::Max => {
            let neg = |x: f64| -f(x);
            let (a, b) = expand_bracket(&neg, x0);
            let x = golden_min(&neg, a, b, 1e-12);
            if f(x) > f(x0) {
                x
            } else {
                x0
            }
        }
    }
}

/// Locate the stationary point of `obj(s, t)` over s, t > 0, searching in
/// the per-coordinate senses dictated by the transform convexities.
pub fn optimize_positive_2d<F>(obj: F, s_sense: LineSense, t_sense: LineSense) -> Result<MinResult>
where
    F: Fn(f64, f64) -> f64,
{
    // objective in log coordinates; non-finite values are pushed away
    // from whichever sense is searching.
    let lobj_raw = |ls: f64, lt: f64| obj(ls.exp(), lt.exp());

    // Seed from a coarse grid. Matched senses take the global best; an
    // opposed pair takes the inner extremum first (saddle seeding).
    let mut vals = vec![[0.0f64; GRID_N]; GRID_N];
    let coord = |k: usize| GRID_LO + (GRID_HI - GRID_LO) * k as f64 / (GRID_N - 1) as f64;
    let mut any_finite = false;
    for (i, row) in vals.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = lobj_raw(coord(i), coord(j));
            any_finite |= v.is_finite();
        }
    }
    if !any_finite {
        return Err(Error::NonFiniteObjective(
            "seed grid scan found no finite objective value".into(),
        ));
    }

    let pick = |sense: LineSense, slice: &mut dyn Iterator<Item = (usize, f64)>| -> usize {
        let better = |a: f64, b: f64| match sense {
            LineSense::Max => a > b || !b.is_finite(),
            _ => a < b || !b.is_finite(),
        };
        let mut best = (0usize, f64::NAN);
        for (k, v) in slice {
            if v.is_finite() && (!best.1.is_finite() || better(v, best.1)) {
                best = (k, v);
            }
        }
        best.0
    };

    let (si, tj) = if s_sense != t_sense && s_sense != LineSense::Flat && t_sense != LineSense::Flat
    {
        // saddle: resolve t inside each s-slice, then pick s across slices
        let inner: Vec<usize> = (0..GRID_N)
            .map(|i| pick(t_sense, &mut vals[i].iter().copied().enumerate()))
            .collect();
        let i = pick(
            s_sense,
            &mut (0..GRID_N).map(|i| (i, vals[i][inner[i]])),
        );
        (i, inner[i])
    } else {
        let sense = if s_sense == LineSense::Flat {
            t_sense
        } else {
            s_sense
        };
        let flat: Vec<(usize, f64)> = (0..GRID_N)
            .flat_map(|i| (0..GRID_N).map(move |j| (i * GRID_N + j, 0.0)))
            .map(|(k, _)| (k, vals[k / GRID_N][k % GRID_N]))
            .collect();
        let k = pick(sense, &mut flat.into_iter());
        (k / GRID_N, k % GRID_N)
    };

    let (mut ls, mut lt) = (coord(si), coord(tj));
    let mut sweeps = 0u32;
    let mut converged = s_sense == LineSense::Flat && t_sense == LineSense::Flat;
    while sweeps < MAX_SWEEPS && !converged {
        sweeps += 1;
        let f_s = |x: f64| lobj_raw(x, lt);
        let new_ls = line_step(&f_s, ls, s_sense);
        let f_t = |x: f64| lobj_raw(new_ls, x);
        let new_lt = line_step(&f_t, lt, t_sense);
        let moved = (new_ls - ls).abs().max((new_lt - lt).abs());
        ls = new_ls;
        lt = new_lt;
        if moved < SWEEP_TOL {
            converged = true;
        }
    }

    let (s, t) = (ls.exp(), lt.exp());
    let value = obj(s, t);
    let grad_norm = {
        let hs = 1e-6 * s;
        let ht = 1e-6 * t;
        let ds = (obj(s + hs, t) - obj(s - hs, t)) / (2.0 * hs);
        let dt = (obj(s, t + ht) - obj(s, t - ht)) / (2.0 * ht);
        let ds = if s_sense == LineSense::Flat { 0.0 } else { ds };
        let dt = if t_sense == LineSense::Flat { 0.0 } else { dt };
        (ds * ds + dt * dt).sqrt()
    };
    if !converged {
        return Err(Error::MinimizerNoConvergence { s, t, grad_norm });
    }
    Ok(MinResult {
        s,
        t,
        value,
        sweeps,
        grad_norm,
    })
}
