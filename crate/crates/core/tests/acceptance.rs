//! End-to-end acceptance checks: published table values, bound-direction
//! guarantees against the independent eigensolver, root-equation
//! properties, perturbation reference values, and CLI golden files.
//! Each test prints a single PASS/FAIL line for its criterion.

use std::process::Command;
use std::time::Instant;

use rayon::prelude::*;
use spiked_bounds::analytic::{gk_energy, harmonic_energy, GKSpectrumQuery};
use spiked_bounds::bounds::root::{root_equation, root_equation_deriv, solve_root_t};
use spiked_bounds::bounds::{power_bound_energy, sho_bound_energy};
use spiked_bounds::model::{QuantumNumbers, SpikedOscParams};
use spiked_bounds::perturb::{de_dalpha_at_2, perturbation_estimate};
use spiked_bounds::solver::solve_spiked;

fn report(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("PASS: {criterion}");
    } else {
        println!("FAIL: {criterion}");
        for f in &failures {
            println!("  {f}");
        }
        panic!("{criterion}: {} failure(s)", failures.len());
    }
}

fn q(n: u32, l: u32, dim: u32) -> QuantumNumbers {
    QuantumNumbers::new(n, l, dim).unwrap()
}

const TABLE1_BOUND: [f64; 9] = [
    8.51190, 8.59021, 8.81947, 9.18461, 9.66548, 10.24120, 10.89289, 11.60478, 12.36429,
];
const TABLE2_BOUND: [f64; 9] = [
    16.45773, 16.82641, 17.31254, 17.89507, 18.55481, 19.27558, 20.04444, 20.85125, 21.68822,
];
const TABLE1_SOLVER: [f64; 9] = [
    8.48538, 8.56436, 8.79544, 9.16309, 9.64670, 10.22505, 10.87908, 11.59298, 12.35418,
];
const TABLE2_SOLVER: [f64; 9] = [
    16.54363, 16.90444, 17.38171, 17.95544, 18.60707, 19.32069, 20.08341, 20.88502, 21.71761,
];

fn bound_column_check(alpha: f64, n: u32, l: u32, reference: &[f64; 9]) -> Vec<String> {
    let p = SpikedOscParams::new(1.0, 10.0, alpha).unwrap();
    let start = Instant::now();
    let computed: Vec<f64> = (2u32..=10)
        .map(|dim| sho_bound_energy(&p, q(n, l, dim)).unwrap().energy)
        .collect();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    for (i, (&got, &want)) in computed.iter().zip(reference).enumerate() {
        if (got - want).abs() > 1e-4 {
            failures.push(format!("N={}: got {got:.6}, reference {want}", i + 2));
        }
    }
    if elapsed.as_secs_f64() >= 0.1 {
        failures.push(format!("runtime {elapsed:?} exceeds 0.1 s"));
    }
    failures
}

#[test]
fn bound_column_upper_case() {
    report(
        "bound column, alpha=1.9 (n,l)=(0,0), nine dimensions within 1e-4, under 0.1 s",
        bound_column_check(1.9, 0, 0, &TABLE1_BOUND),
    );
}

#[test]
fn bound_column_lower_case() {
    report(
        "bound column, alpha=2.1 (n,l)=(2,1), nine dimensions within 1e-4, under 0.1 s",
        bound_column_check(2.1, 2, 1, &TABLE2_BOUND),
    );
}

#[test]
fn solver_columns() {
    let start = Instant::now();
    let cases: Vec<(f64, u32, u32, u32, f64)> = (2u32..=10)
        .map(|dim| (1.9, 0, 0, dim, TABLE1_SOLVER[(dim - 2) as usize]))
        .chain((2u32..=10).map(|dim| (2.1, 2, 1, dim, TABLE2_SOLVER[(dim - 2) as usize])))
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&(alpha, n, l, dim, want)| {
            let p = SpikedOscParams::new(1.0, 10.0, alpha).unwrap();
            match solve_spiked(&p, q(n, l, dim), None) {
                Ok(sol) if (sol.energy - want).abs() <= 5e-4 => None,
                Ok(sol) => Some(format!(
                    "alpha={alpha} N={dim}: got {:.6}, reference {want}",
                    sol.energy
                )),
                Err(e) => Some(format!("alpha={alpha} N={dim}: {e}")),
            }
        })
        .collect();
    let mut failures = failures;
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 30.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 30 s"));
    }
    report(
        "solver columns, eighteen reference eigenvalues within 5e-4, under 30 s",
        failures,
    );
}

#[test]
fn bound_direction_suite() {
    let mut cases = Vec::new();
    for mu in [1.0, 10.0] {
        for n in [0u32, 1, 2] {
            for l in [0u32, 1] {
                for dim in [2u32, 3, 5, 10] {
                    for alpha in [1.5, 1.9, 2.0, 2.1, 3.0] {
                        cases.push((mu, n, l, dim, alpha));
                    }
                }
            }
        }
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&(mu, n, l, dim, alpha)| {
            let p = SpikedOscParams::new(1.0, mu, alpha).unwrap();
            let qq = q(n, l, dim);
            let label = format!("mu={mu} n={n} l={l} N={dim} alpha={alpha}");
            let bound = match sho_bound_energy(&p, qq) {
                Ok(b) => b.energy,
                Err(e) => return Some(format!("{label}: bound failed: {e}")),
            };
            if alpha == 2.0 {
                let exact = gk_energy(GKSpectrumQuery::new(1.0, mu, qq).unwrap()).unwrap();
                return ((bound - exact).abs() > 1e-9)
                    .then(|| format!("{label}: |bound - exact| = {:.2e}", (bound - exact).abs()));
            }
            let solved = match solve_spiked(&p, qq, None) {
                Ok(s) => s.energy,
                Err(e) => return Some(format!("{label}: solver failed: {e}")),
            };
            if alpha < 2.0 && bound < solved - 5e-4 {
                Some(format!("{label}: upper bound {bound:.6} below solver {solved:.6}"))
            } else if alpha > 2.0 && bound > solved + 5e-4 {
                Some(format!("{label}: lower bound {bound:.6} above solver {solved:.6}"))
            } else {
                None
            }
        })
        .collect();
    report(
        "bound direction suite: alpha<2 upper, alpha>2 lower, alpha=2 exact",
        failures,
    );
}

#[test]
fn perturbation_reference_values() {
    let mut failures = Vec::new();
    let checks: Vec<(u32, f64, f64)> = vec![(2, -1.557, 8.4803), (10, -1.498, 12.3479)];
    let results: Vec<_> = checks
        .par_iter()
        .map(|&(dim, dref, eref)| {
            let (d, _) = de_dalpha_at_2(10.0, q(0, 0, dim), None).unwrap();
            let est = perturbation_estimate(10.0, 1.9, q(0, 0, dim), None).unwrap();
            (dim, dref, eref, d, est.estimate)
        })
        .collect();
    for (dim, dref, eref, d, est) in results {
        if (d - dref).abs() > 5e-3 {
            failures.push(format!("N={dim}: E'(2) = {d:.5}, reference {dref}"));
        }
        if (est - eref).abs() > 1e-3 {
            failures.push(format!("N={dim}: estimate {est:.5}, reference {eref}"));
        }
    }
    report(
        "perturbation around alpha=2: derivative and first-order estimates",
        failures,
    );
}

#[test]
fn root_equation_properties() {
    let mut failures = Vec::new();
    for lam in [0.1, 1.0, 10.0] {
        for mu in [0.1, 1.0, 10.0] {
            for alpha in [0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 4.0] {
                for lambda_eff in [0.0, 0.5, 1.0, 5.0] {
                    let label = format!("lam={lam} mu={mu} alpha={alpha} L={lambda_eff}");
                    let h = |t: f64| root_equation(t, lam, mu, alpha, lambda_eff);

                    // exactly one sign change across a dense log grid
                    let npts = 10_000;
                    let mut changes = 0u32;
                    let mut prev = h(1e-4);
                    for i in 1..npts {
                        let t = 10f64.powf(-4.0 + 8.0 * i as f64 / (npts - 1) as f64);
                        let cur = h(t);
                        if prev < 0.0 && cur >= 0.0 || prev >= 0.0 && cur < 0.0 {
                            changes += 1;
                        }
                        prev = cur;
                    }
                    if changes != 1 {
                        failures.push(format!("{label}: {changes} sign changes, expected 1"));
                    }

                    let p = SpikedOscParams::new(lam, mu, alpha).unwrap();
                    match solve_root_t(&p, lambda_eff) {
                        Ok(r) => {
                            let cap = 1e-10 * (2.0 * lam * r.t_hat.powi(4)).max(1.0);
                            if h(r.t_hat).abs() > cap {
                                failures.push(format!(
                                    "{label}: residual {:.2e} over cap {cap:.2e}",
                                    h(r.t_hat).abs()
                                ));
                            }
                        }
                        Err(e) => failures.push(format!("{label}: {e}")),
                    }

                    // the interior stationary point of h really is stationary
                    if alpha < 2.0 {
                        let t_star = spiked_bounds::bounds::root::interior_stationary_point(
                            lam, mu, alpha,
                        );
                        let d1 = root_equation_deriv(t_star, lam, mu, alpha);
                        let d2 = 24.0 * lam * t_star * t_star
                            + mu * alpha * (2.0 - alpha) * (alpha - 1.0) * t_star.powf(-alpha);
                        if d1.abs() > 1e-9 * d2.abs() * t_star {
                            failures.push(format!(
                                "{label}: |h'(t*)| = {:.2e} over 1e-9 |h''| t*",
                                d1.abs()
                            ));
                        }
                    }
                }
            }
        }
    }
    report(
        "root equation: unique sign change, residual cap, stationary point",
        failures,
    );
}

#[test]
fn oracle_identities() {
    let mut failures = Vec::new();

    // closed-form spectrum vs independent eigensolver at alpha = 2
    let mut cases = Vec::new();
    for mu in [1.0, 10.0] {
        for n in [0u32, 1, 2] {
            for l in [0u32, 1] {
                for dim in [2u32, 3, 5, 10] {
                    cases.push((mu, n, l, dim));
                }
            }
        }
    }
    failures.extend(cases.par_iter().filter_map(|&(mu, n, l, dim)| {
        let qq = q(n, l, dim);
        let exact = gk_energy(GKSpectrumQuery::new(1.0, mu, qq).unwrap()).unwrap();
        let p = SpikedOscParams::new(1.0, mu, 2.0).unwrap();
        match solve_spiked(&p, qq, None) {
            Ok(sol) if (sol.energy - exact).abs() <= 2e-5 => None,
            Ok(sol) => Some(format!(
                "solver vs closed form mu={mu} n={n} l={l} N={dim}: diff {:.2e}",
                (sol.energy - exact).abs()
            )),
            Err(e) => Some(format!("mu={mu} n={n} l={l} N={dim}: {e}")),
        }
    }).collect::<Vec<_>>());

    // mu -> 0 limit reduces to the pure oscillator spectrum
    for n in [0u32, 1, 2] {
        for l in [0u32, 1] {
            for dim in [2u32, 3, 5, 10] {
                let qq = q(n, l, dim);
                let gk = gk_energy(GKSpectrumQuery::new(1.0, 0.0, qq).unwrap()).unwrap();
                let harm = harmonic_energy(1.0, qq).unwrap();
                if (gk - harm).abs() > 1e-6 {
                    failures.push(format!(
                        "mu=0 limit n={n} l={l} N={dim}: diff {:.2e}",
                        (gk - harm).abs()
                    ));
                }
            }
        }
    }

    // the two-variable minimizer path collapses to the root path at beta=2
    let mut pairs = Vec::new();
    for mu in [1.0, 10.0] {
        for alpha in [1.5, 1.9, 2.0, 2.1, 3.0] {
            for (n, l, dim) in [(0u32, 0u32, 3u32), (2, 1, 5), (1, 0, 2)] {
                pairs.push((mu, alpha, n, l, dim));
            }
        }
    }
    failures.extend(pairs.par_iter().filter_map(|&(mu, alpha, n, l, dim)| {
        let p = SpikedOscParams::new(1.0, mu, alpha).unwrap();
        let qq = q(n, l, dim);
        let a = sho_bound_energy(&p, qq).unwrap().energy;
        match power_bound_energy(&p, qq) {
            Ok(b) if (a - b.energy).abs() <= 1e-8 => None,
            Ok(b) => Some(format!(
                "beta=2 paths mu={mu} alpha={alpha} n={n} l={l} N={dim}: diff {:.2e}",
                (a - b.energy).abs()
            )),
            Err(e) => Some(format!("mu={mu} alpha={alpha}: {e}")),
        }
    }).collect::<Vec<_>>());

    report(
        "oracle identities: solver vs closed form, mu=0 limit, beta=2 path equality",
        failures,
    );
}

#[test]
fn cli_golden_files() {
    let mut failures = Vec::new();
    let bin = env!("CARGO_BIN_EXE_spiked-bounds");

    for which in ["table1", "table2"] {
        let out = Command::new(bin)
            .args(["table", "--which", which])
            .output()
            .expect("run table command");
        if !out.status.success() {
            failures.push(format!("table --which {which} exited {:?}", out.status));
            continue;
        }
        let golden = std::fs::read(format!(
            "{}/tests/golden/{which}.csv",
            env!("CARGO_MANIFEST_DIR")
        ))
        .expect("read golden file");
        if out.stdout != golden {
            failures.push(format!("table --which {which} differs from golden file"));
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(bin)
        .args(["plot-data", "--which", "fig2", "--out-dir"])
        .arg(dir.path())
        .output()
        .expect("run plot-data command");
    if !out.status.success() {
        failures.push(format!("plot-data --which fig2 exited {:?}", out.status));
    } else {
        for dim in 2u32..=10 {
            let path = dir.path().join(format!("wavefunction_n2_l1_N{dim}.csv"));
            let text = std::fs::read_to_string(&path).expect("read wavefunction file");
            let us: Vec<f64> = text
                .lines()
                .skip(2)
                .map(|line| line.split(',').nth(1).unwrap().parse().unwrap())
                .collect();
            let changes = us.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
            if changes != 2 {
                failures.push(format!("N={dim}: {changes} sign changes, expected 2"));
            }
        }
    }

    report(
        "CLI golden files byte-identical; figure export has two interior nodes",
        failures,
    );
}
