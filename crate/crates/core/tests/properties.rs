//! Randomized property tests over the analytic layer: scaling laws,
//! monotonicity, root residuals, and agreement between the one-variable
//! and two-variable bound paths.

use proptest::prelude::*;
use spiked_bounds::analytic::{gk_energy, GKSpectrumQuery};
use spiked_bounds::bounds::root::{root_equation, solve_root_t};
use spiked_bounds::bounds::{power_bound_energy, sho_bound_energy};
use spiked_bounds::model::{effective_lambda, QuantumNumbers, SpikedOscParams};

fn quantum() -> impl Strategy<Value = QuantumNumbers> {
    (0u32..4, 0u32..4, 2u32..12).prop_map(|(n, l, dim)| QuantumNumbers::new(n, l, dim).unwrap())
}

proptest! {
    #[test]
    fn effective_lambda_monotone_in_l_and_dim(q in quantum()) {
        let base = effective_lambda(q).lambda_eff;
        let more_l = effective_lambda(QuantumNumbers::new(q.n, q.l + 1, q.dim).unwrap()).lambda_eff;
        let more_dim = effective_lambda(QuantumNumbers::new(q.n, q.l, q.dim + 1).unwrap()).lambda_eff;
        prop_assert!(more_l > base);
        prop_assert!(more_dim > base);
    }

    #[test]
    fn closed_form_energy_scales_as_sqrt_of_coupling(
        q in quantum(),
        mu in 0.0f64..50.0,
        c in 0.01f64..100.0,
    ) {
        let e1 = gk_energy(GKSpectrumQuery::new(1.0, mu, q).unwrap()).unwrap();
        let ec = gk_energy(GKSpectrumQuery::new(c, mu, q).unwrap()).unwrap();
        prop_assert!((ec - c.sqrt() * e1).abs() < 1e-9 * ec.abs().max(1.0));
    }

    #[test]
    fn root_residual_bounded(
        lam in 0.05f64..20.0,
        mu in 0.05f64..20.0,
        alpha in 0.3f64..4.0,
        lambda_eff in 0.0f64..6.0,
    ) {
        let p = SpikedOscParams::new(lam, mu, alpha).unwrap();
        let r = solve_root_t(&p, lambda_eff).unwrap();
        let h = root_equation(r.t_hat, lam, mu, alpha, lambda_eff);
        prop_assert!(h.abs() <= 1e-10 * (2.0 * lam * r.t_hat.powi(4)).max(1.0));
    }

    #[test]
    fn bound_energy_increases_with_quantum_numbers(
        mu in 0.1f64..20.0,
        alpha in 0.5f64..4.0,
        q in quantum(),
    ) {
        let p = SpikedOscParams::new(1.0, mu, alpha).unwrap();
        let e = sho_bound_energy(&p, q).unwrap().energy;
        let up_n = QuantumNumbers::new(q.n + 1, q.l, q.dim).unwrap();
        let up_l = QuantumNumbers::new(q.n, q.l + 1, q.dim).unwrap();
        prop_assert!(sho_bound_energy(&p, up_n).unwrap().energy > e);
        prop_assert!(sho_bound_energy(&p, up_l).unwrap().energy > e);
    }

    #[test]
    fn two_variable_path_matches_one_variable_path(
        mu in 0.1f64..20.0,
        alpha in 0.5f64..4.0,
        q in quantum(),
    ) {
        let p = SpikedOscParams::new(1.0, mu, alpha).unwrap();
        let a = sho_bound_energy(&p, q).unwrap().energy;
        let b = power_bound_energy(&p, q).unwrap().energy;
        prop_assert!((a - b).abs() <= 1e-8 * a.abs().max(1.0), "{a} vs {b}");
    }
}
