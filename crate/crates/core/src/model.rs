//! Shared domain types: quantum numbers, the N-dimensional centrifugal
//! reduction, spiked-oscillator parameters, and bound-direction
//! classification from convexity signs.

use crate::error::{Error, Result};

/// Quantum numbers of a radial state in N spatial dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    /// Radial quantum number (number of interior nodes).
    pub n: u32,
    /// Angular momentum.
    pub l: u32,
    /// Spatial dimension N, integer >= 2.
    pub dim: u32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, dim: u32) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidParameter(format!(
                "spatial dimension must be >= 2, got {dim}"
            )));
        }
        Ok(Self { n, l, dim })
    }
}

/// The effective centrifugal parameter Λ = l + N/2 − 1 and the
/// coefficient Λ² − 1/4 of 1/x² in the reduced radial equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveCentrifugal {
    pub lambda_eff: f64,
    pub reduced_coeff: f64,
}

/// Λ = l + N/2 − 1. For N=3, l=0 this is exactly 1/2, which kills the
/// centrifugal term and recovers the half-line problem with u(0)=0.
pub fn effective_lambda(q: QuantumNumbers) -> EffectiveCentrifugal {
    let lambda_eff = q.l as f64 + q.dim as f64 / 2.0 - 1.0;
    EffectiveCentrifugal {
        lambda_eff,
        reduced_coeff: lambda_eff * lambda_eff - 0.25,
    }
}

/// Parameters of the potential λx^β + μ/x^α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpikedOscParams {
    /// Confining coupling λ > 0.
    pub lam: f64,
    /// Spike coupling μ > 0.
    pub mu: f64,
    /// Spike exponent α > 0.
    pub alpha: f64,
    /// Confining exponent β > 0 (2 for the spiked harmonic oscillator).
    pub beta: f64,
}

impl SpikedOscParams {
    /// Spiked harmonic oscillator: β fixed to 2.
    pub fn new(lam: f64, mu: f64, alpha: f64) -> Result<Self> {
        Self::with_beta(lam, mu, alpha, 2.0)
    }

    pub fn with_beta(lam: f64, mu: f64, alpha: f64, beta: f64) -> Result<Self> {
        let p = Self {
            lam,
            mu,
            alpha,
            beta,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("lambda", self.lam),
            ("mu", self.mu),
            ("alpha", self.alpha),
            ("beta", self.beta),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and > 0, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// V(x) = λ x^β + μ / x^α.
    pub fn potential(&self, x: f64) -> f64 {
        self.lam * x.powf(self.beta) + self.mu * x.powf(-self.alpha)
    }
}

/// Declared sign of a second derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convexity {
    Negative,
    Zero,
    Positive,
}

impl Convexity {
    /// Convexity of u ↦ c·u^{p/2} (c > 0) as a function of u, i.e. of the
    /// power potential x^p viewed through u = x². Convex iff p > 2,
    /// linear iff p = 2, concave iff p < 2.
    pub fn from_power_exponent(p: f64) -> Self {
        if p > 2.0 {
            Convexity::Positive
        } else if p < 2.0 {
            Convexity::Negative
        } else {
            Convexity::Zero
        }
    }
}

/// Whether a bound value is guaranteed below, above, or equal to the
/// true eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundDirection {
    Lower,
    Upper,
    Exact,
    NoGuarantee,
}

impl std::fmt::Display for BoundDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundDirection::Lower => "lower bound",
            BoundDirection::Upper => "upper bound",
            BoundDirection::Exact => "exact",
            BoundDirection::NoGuarantee => "no guarantee",
        };
        f.write_str(s)
    }
}

/// Bound direction from the declared convexity signs of g and f.
///
/// Both convex gives a lower bound, both concave an upper bound, both
/// linear the exact spectrum. A linear member inherits the direction of
/// the other; opposite strict signs give no guarantee.
pub fn classify_direction(g: Convexity, f: Convexity) -> BoundDirection {
    use Convexity::*;
    match (g, f) {
        (Zero, Zero) => BoundDirection::Exact,
        (Positive | Zero, Positive) | (Positive, Zero) => BoundDirection::Lower,
        (Negative | Zero, Negative) | (Negative, Zero) => BoundDirection::Upper,
        (Positive, Negative) | (Negative, Positive) => BoundDirection::NoGuarantee,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn effective_lambda_examples() {
        let e = effective_lambda(QuantumNumbers::new(0, 0, 3).unwrap());
        assert_eq!(e.lambda_eff, 0.5);
        assert_eq!(e.reduced_coeff, 0.0);

        let e = effective_lambda(QuantumNumbers::new(0, 0, 2).unwrap());
        assert_eq!(e.lambda_eff, 0.0);
        assert_eq!(e.reduced_coeff, -0.25);

        let e = effective_lambda(QuantumNumbers::new(2, 1, 10).unwrap());
        assert_eq!(e.lambda_eff, 5.0);
        assert_eq!(e.reduced_coeff, 24.75);
    }

    #[test]
    fn rejects_low_dimension() {
        assert!(QuantumNumbers::new(0, 0, 1).is_err());
        assert!(QuantumNumbers::new(0, 0, 0).is_err());
        assert!(QuantumNumbers::new(0, 0, 2).is_ok());
    }

    #[test]
    fn effective_lambda_nonnegative_and_monotone() {
        for l in 0..6 {
            for dim in 2..12 {
                let v = effective_lambda(QuantumNumbers::new(0, l, dim).unwrap()).lambda_eff;
                assert!(v >= 0.0);
                let vl = effective_lambda(QuantumNumbers::new(0, l + 1, dim).unwrap()).lambda_eff;
                let vd = effective_lambda(QuantumNumbers::new(0, l, dim + 1).unwrap()).lambda_eff;
                assert!(vl > v);
                assert!(vd > v);
            }
        }
    }

    #[test]
    fn classify_direction_full_table() {
        use BoundDirection::*;
        use Convexity::*;
        let expected = [
            ((Positive, Positive), Lower),
            ((Positive, Zero), Lower),
            ((Positive, Negative), NoGuarantee),
            ((Zero, Positive), Lower),
            ((Zero, Zero), Exact),
            ((Zero, Negative), Upper),
            ((Negative, Positive), NoGuarantee),
            ((Negative, Zero), Upper),
            ((Negative, Negative), Upper),
        ];
        for ((g, f), want) in expected {
            assert_eq!(classify_direction(g, f), want, "({g:?}, {f:?})");
        }
    }

    #[test]
    fn power_convexity_matches_finite_differences() {
        // g(u) = u^{p/2}: check the declared sign of g'' against a central
        // second difference at a few sample points.
        let fd_sign = |p: f64, u: f64| -> Convexity {
            let g = |u: f64| u.powf(p / 2.0);
            let h = 1e-4 * u;
            let d2 = (g(u + h) - 2.0 * g(u) + g(u - h)) / (h * h);
            if d2 > 1e-6 {
                Convexity::Positive
            } else if d2 < -1e-6 {
                Convexity::Negative
            } else {
                Convexity::Zero
            }
        };
        for p in [0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 4.0] {
            for u in [0.3, 1.0, 4.0] {
                assert_eq!(
                    Convexity::from_power_exponent(p),
                    fd_sign(p, u),
                    "p={p}, u={u}"
                );
            }
        }
    }

    #[test]
    fn params_validation() {
        assert!(SpikedOscParams::new(1.0, 10.0, 1.9).is_ok());
        assert!(SpikedOscParams::new(0.0, 10.0, 1.9).is_err());
        assert!(SpikedOscParams::new(1.0, -1.0, 1.9).is_err());
        assert!(SpikedOscParams::new(1.0, 1.0, 0.0).is_err());
        assert!(SpikedOscParams::with_beta(1.0, 1.0, 2.0, 0.0).is_err());
        assert!(SpikedOscParams::new(f64::NAN, 1.0, 2.0).is_err());
    }
}
