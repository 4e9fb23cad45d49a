use std::fmt;

/// Errors surfaced by fallible operations.
///
/// Contract violations (mismatched universes, out-of-range elements) are
/// panics, not `Error` values; everything a user can trigger from input
/// data or size parameters comes through here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A ground set exceeds the hard 64-element representation bound.
    UniverseTooLarge { requested: usize },
    /// An enumeration-backed operation was asked to run above its size cap.
    SizeCap {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    /// A brute-force enumeration would exceed its work budget.
    BudgetExceeded { needed: u128, budget: u64 },
    /// Exact integer arithmetic overflowed 128 bits.
    Overflow,
    /// The counting function of a scheduling problem is a polynomial with
    /// non-integer coefficients, which this crate does not represent.
    NonIntegerCoefficients,
    /// A family of sets fails the basis exchange axiom (or is empty or
    /// not equicardinal).
    InvalidBases(String),
    /// A family of sets fails the circuit axioms checked on pairs.
    InvalidCircuits(String),
    /// The matroid has a loop, so no independent cover of any size exists.
    HasLoop { element: usize },
    /// Malformed matroid or formula text.
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UniverseTooLarge { requested } => {
                write!(f, "ground set of size {requested} exceeds the 64-element bound")
            }
            Error::SizeCap {
                what,
                limit,
                requested,
            } => write!(
                f,
                "{what} is capped at n <= {limit}, got n = {requested} (raise the cap explicitly to proceed)"
            ),
            Error::BudgetExceeded { needed, budget } => write!(
                f,
                "enumeration needs {needed} steps, over the budget of {budget}"
            ),
            Error::Overflow => write!(f, "exact integer arithmetic overflowed 128 bits"),
            Error::NonIntegerCoefficients => write!(
                f,
                "counting function has non-integer coefficients; only block-symmetric \
                 scheduling problems are guaranteed an integer polynomial"
            ),
            Error::InvalidBases(msg) => write!(f, "invalid basis family: {msg}"),
            Error::InvalidCircuits(msg) => write!(f, "invalid circuit family: {msg}"),
            Error::HasLoop { element } => write!(
                f,
                "element {element} is a loop; no independent cover exists"
            ),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
