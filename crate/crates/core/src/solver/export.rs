//! Tabular export of converged wavefunctions: CSV with an `x,u` header
//! and JSON lines with a leading metadata object.

use serde_json::json;

use super::RadialSolution;

/// Extra context carried into the export header; the couplings are
/// absent for problems built from a general transformation pair.
#[derive(Debug, Clone, Copy)]
pub struct WavefunctionMeta {
    pub alpha: Option<f64>,
    pub mu: Option<f64>,
    pub lam: Option<f64>,
}

impl WavefunctionMeta {
    pub fn none() -> Self {
        Self {
            alpha: None,
            mu: None,
            lam: None,
        }
    }

    pub fn spiked(lam: f64, mu: f64, alpha: f64) -> Self {
        Self {
            alpha: Some(alpha),
            mu: Some(mu),
            lam: Some(lam),
        }
    }
}

fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV rendering: a `#` comment with the state labels, the `x,u` header,
/// then one row per grid point at 17 significant digits.
pub fn to_csv(sol: &RadialSolution, meta: &WavefunctionMeta) -> String {
    let mut out = String::with_capacity(sol.xs.len() * 48 + 128);
    out.push_str(&format!(
        "# energy={} n={} l={} N={}",
        sig17(sol.energy),
        sol.q.n,
        sol.q.l,
        sol.q.dim
    ));
    if let (Some(a), Some(m), Some(la)) = (meta.alpha, meta.mu, meta.lam) {
        out.push_str(&format!(" alpha={a} mu={m} lambda={la}"));
    }
    out.push('\n');
    out.push_str("x,u\n");
    for (x, u) in sol.xs.iter().zip(&sol.u) {
        out.push_str(&sig17(*x));
        out.push(',');
        out.push_str(&sig17(*u));
        out.push('\n');
    }
    out
}

/// JSON-lines rendering: one metadata object, then one `{x, u}` object
/// per grid point.
pub fn to_jsonl(sol: &RadialSolution, meta: &WavefunctionMeta) -> String {
    let mut out = String::with_capacity(sol.xs.len() * 56 + 192);
    let header = json!({
        "energy": sol.energy,
        "n": sol.q.n,
        "l": sol.q.l,
        "N": sol.q.dim,
        "alpha": meta.alpha,
        "mu": meta.mu,
        "lambda": meta.lam,
    });
    out.push_str(&header.to_string());
    out.push('\n');
    for (x, u) in sol.xs.iter().zip(&sol.u) {
        out.push_str(&json!({ "x": x, "u": u }).to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{QuantumNumbers, SpikedOscParams};
    use crate::solver::solve_spiked;

    fn ground_state() -> RadialSolution {
        let p = SpikedOscParams::new(1.0, 1e-13, 2.0).unwrap();
        let q = QuantumNumbers::new(0, 0, 3).unwrap();
        solve_spiked(&p, q, None).unwrap()
    }

    #[test]
    fn ground_state_shape_and_csv_layout() {
        let sol = ground_state();
        // 3D harmonic ground state: u ∝ x exp(−x²/2), no interior nodes,
        // peak near x = 1.
        assert_eq!(sol.nodes, 0);
        let peak_i = (0..sol.u.len())
            .max_by(|&a, &b| sol.u[a].abs().total_cmp(&sol.u[b].abs()))
            .unwrap();
        assert!((sol.xs[peak_i] - 1.0).abs() < 0.01, "{}", sol.xs[peak_i]);

        let csv = to_csv(&sol, &WavefunctionMeta::spiked(1.0, 1e-13, 2.0));
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("# energy="));
        assert!(header.contains("n=0 l=0 N=3"));
        assert_eq!(lines.next().unwrap(), "x,u");
        assert_eq!(csv.lines().count(), sol.xs.len() + 2);
        // 17 significant digits
        let first = csv.lines().nth(2).unwrap();
        let x: f64 = first.split(',').next().unwrap().parse().unwrap();
        assert_eq!(x, sol.xs[0]);
    }

    #[test]
    fn jsonl_layout() {
        let sol = ground_state();
        let out = to_jsonl(&sol, &WavefunctionMeta::spiked(1.0, 1e-13, 2.0));
        let mut lines = out.lines();
        let meta: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(meta["n"], 0);
        assert_eq!(meta["N"], 3);
        assert!((meta["energy"].as_f64().unwrap() - sol.energy).abs() == 0.0);
        let first: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(first["x"].as_f64().unwrap(), sol.xs[0]);
        assert_eq!(out.lines().count(), sol.xs.len() + 1);
    }
}
