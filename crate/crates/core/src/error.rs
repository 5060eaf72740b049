use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("root solve did not converge: bracket [{lo:e}, {hi:e}], residual {residual:e}")]
    RootNoConvergence { lo: f64, hi: f64, residual: f64 },

    #[error("minimizer did not converge: s={s:e}, t={t:e}, gradient norm {grad_norm:e}")]
    MinimizerNoConvergence { s: f64, t: f64, grad_norm: f64 },

    #[error("objective not finite anywhere on the search region: {0}")]
    NonFiniteObjective(String),

    #[error("no eigenvalue with {target} nodes found in window [{lo}, {hi}]")]
    EigenvalueWindow { lo: f64, hi: f64, target: u32 },

    #[error("eigensolver did not converge: {0}")]
    EigenNoConvergence(String),

    #[error("grid too coarse: halving the step moved the eigenvalue by {delta:e} (tolerance {tol:e})")]
    GridTooCoarse { delta: f64, tol: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
