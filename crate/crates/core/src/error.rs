use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at {re} + {im}i")]
    Pole { re: f64, im: f64 },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("series failed to converge after {terms} terms")]
    NonConvergence { terms: usize },
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("no real superpotential: discriminant {discriminant} is negative")]
    Branch { discriminant: f64 },
    #[error("degenerate shape-invariance parameter rho_{index} = 0")]
    Degenerate { index: usize },
    #[error("energy {energy} is not above the continuum threshold")]
    BelowThreshold { energy: f64 },
    #[error("state invariant violated: {0}")]
    Invariant(String),
    #[error("invalid radial grid: {0}")]
    Grid(String),
    #[error("asymptotic match inconsistent: phases {first} and {second} differ by more than {tolerance}")]
    Match {
        first: f64,
        second: f64,
        tolerance: f64,
    },
    #[error("root refinement did not converge in bracket [{lo}, {hi}]")]
    RootNonConvergence { lo: f64, hi: f64 },
}
