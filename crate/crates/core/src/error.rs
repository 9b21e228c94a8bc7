use thiserror::Error;

/// Errors raised by the numerical engines and the file/CLI layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is not Hermitian (relative defect {defect:.3e})")]
    NonHermitianInput { defect: f64 },
    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")]
    NotPositiveSemidefinite { eigenvalue: f64 },
    #[error("matrix is not symmetric (relative defect {defect:.3e})")]
    NotSymmetric { defect: f64 },
    #[error("could not complete the +/- eigenvalue pairing ({found} of {needed} vectors)")]
    DegeneratePairing { found: usize, needed: usize },
    #[error("matrix is not unitary (defect {defect:.3e})")]
    NonUnitary { defect: f64 },
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("{n} qubits exceeds the dense cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("{n} qubits exceeds the full enumeration cap of {cap}")]
    TooLargeForFullEnumeration { n: usize, cap: usize },
    #[error("state is not real (max imaginary part {max_imag:.3e})")]
    NonRealState { max_imag: f64 },
    #[error("invalid time-reversal operator: {0}")]
    InvalidTimeReversal(String),
    #[error("time-reversal operator is fermionic; the closed form needs a bosonic one")]
    FermionicUnsupported,
    #[error("no sign change of the threshold equation in [{lo:.3e}, {hi:.3e}]")]
    BracketingFailure { lo: f64, hi: f64 },
    #[error("no concurrence jump found in the sweep")]
    NoJumpFound,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable variant name for machine-readable error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Shape(_) => "Shape",
            Error::NonFinite { .. } => "NonFinite",
            Error::NonHermitianInput { .. } => "NonHermitianInput",
            Error::NotPositiveSemidefinite { .. } => "NotPositiveSemidefinite",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::DegeneratePairing { .. } => "DegeneratePairing",
            Error::NonUnitary { .. } => "NonUnitary",
            Error::InvalidDensityMatrix(_) => "InvalidDensityMatrix",
            Error::InvalidChain(_) => "InvalidChain",
            Error::TooLarge { .. } => "TooLarge",
            Error::TooLargeForFullEnumeration { .. } => "TooLargeForFullEnumeration",
            Error::NonRealState { .. } => "NonRealState",
            Error::InvalidTimeReversal(_) => "InvalidTimeReversal",
            Error::FermionicUnsupported => "FermionicUnsupported",
            Error::BracketingFailure { .. } => "BracketingFailure",
            Error::NoJumpFound => "NoJumpFound",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }

    /// Size-cap errors, as opposed to bad input or a failed numerical step.
    pub fn is_size_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::TooLargeForFullEnumeration { .. })
    }

    /// Failures of an algorithm on otherwise valid input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::DegeneratePairing { .. }
                | Error::NonUnitary { .. }
                | Error::BracketingFailure { .. }
                | Error::NoJumpFound
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
