use thiserror::Error;

/// Errors surfaced by the library's fallible operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitCountMismatch(usize, usize),
    #[error("dense realization limited to {max} qubits, got {got}")]
    TooManyQubits { got: usize, max: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("no native lowering rule for gate {0}")]
    NoLoweringRule(String),
    #[error("abstract gate {0} encountered where a native circuit is required")]
    AbstractGate(String),
    #[error("degenerate spectrum: lambda_max must exceed lambda_min")]
    DegenerateSpectrum,
    #[error("eta must lie in (0, pi/2), got {0}")]
    EtaOutOfRange(f64),
    #[error("spectrum [{0}, {1}] not contained in [eta, pi - eta]")]
    SpectrumOutOfWindow(f64, f64),
    #[error("signal argument {0} outside [-1, 1]")]
    SignalOutOfDomain(f64),
    #[error("polynomial degree must be even and >= 2, got {0}")]
    BadDegree(usize),
    #[error("phase sequence length does not match an even-degree filter: {0}")]
    ParityMismatch(usize),
    #[error("target polynomial infeasible: band residual {0} exceeds 0.5")]
    InfeasibleTarget(f64),
    #[error("phase solver did not converge: residual {0}")]
    NonConvergence(f64),
    #[error("non-Hermitian observable")]
    NonHermitian,
    #[error("vanishing success probability: {0}")]
    VanishingSuccess(f64),
    #[error("no shots survive post-selection")]
    EmptyAfterPostSelection,
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
