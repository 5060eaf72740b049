//! Energy bounds for Schrödinger operators `-Δ + g(x²) + f(1/x²)` in N
//! spatial dimensions, together with an independent radial eigensolver
//! used to verify them.
//!
//! The main entry points are:
//!
//! * [`bounds::sho_bound_energy`] — the one-variable bound for the spiked
//!   harmonic oscillator `λx² + μ/x^α`, obtained from a scalar root
//!   equation.
//! * [`bounds::power_bound_energy`] / [`bounds::general_bound_energy`] —
//!   the two-variable envelope bound for power pairs and for arbitrary
//!   monotone transformation pairs.
//! * [`analytic::gk_energy`] — the exact Gol'dman–Krivchenkov spectrum
//!   (`α = 2`), the anchor of everything else.
//! * [`solver::solve_eigenvalue`] — two-sided Numerov integration of the
//!   reduced radial equation, used as the "exact" reference.
//! * [`perturb::perturbation_estimate`] — first-order expansion of `E(α)`
//!   around the solvable point `α = 2`.
//!
//! Units are fixed so that the operator is `-Δ + V` (ℏ = 2m = 1).

pub mod analytic;
pub mod bounds;
pub mod error;
pub mod model;
pub mod perturb;
pub mod solver;

pub use error::{Error, Result};
pub use model::{
    classify_direction, effective_lambda, BoundDirection, Convexity, EffectiveCentrifugal,
    QuantumNumbers, SpikedOscParams,
};
