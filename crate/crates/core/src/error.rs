use thiserror::Error;

/// Errors raised by the engine.
///
/// Verification failures (closure residues, Jacobi violations, nonzero
/// brackets) are surfaced as errors rather than silently dropped.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra {family}{rank}: {constraint}")]
    UnsupportedRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("unknown algebra family `{0}` (expected one of A, B, C, D)")]
    UnknownFamily(String),

    #[error("coordinate index {index} out of range for an algebra of dimension {dim}")]
    CoordinateOutOfRange { index: usize, dim: usize },

    #[error("matrix is not in the span of the basis")]
    NotInSpan,

    #[error("singular Killing form")]
    SingularKillingForm,

    #[error("max_degree must be at least 2, got {0}")]
    MaxDegreeTooSmall(usize),

    #[error("monomial {0} fits none of the classification cases")]
    Unclassifiable(String),

    #[error("polynomial is not Cartan-invariant: {{h{cartan}, p}} != 0")]
    NotInvariant { cartan: usize },

    #[error("monomial {monomial} cannot be factored into catalog generators: {reason}")]
    Unfactorable { monomial: String, reason: String },

    #[error("bracket {{{left}, {right}}} leaves nonzero remainder {residue}")]
    ClosureResidue {
        left: String,
        right: String,
        residue: String,
    },

    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    JacobiViolation(String, String, String),

    #[error("root injection is not sum-preserving: {0}")]
    InjectionNotAdditive(String),

    #[error("rank of a random evaluation stayed unstable after {attempts} attempts")]
    UnstableRank { attempts: usize },

    #[error("malformed generator name `{0}`")]
    MalformedName(String),

    #[error("name `{name}` does not denote a generator of {algebra}")]
    NotAGenerator { name: String, algebra: String },

    #[error("Hamiltonian does not commute with {0}")]
    NonCommutingIntegral(String),

    #[error("Hamiltonian must be supported on Cartan coordinates; found {0}")]
    NonCartanHamiltonian(String),

    #[error("malformed rational `{0}`")]
    MalformedRational(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
