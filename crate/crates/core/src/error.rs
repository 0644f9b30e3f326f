use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the library.
///
/// The variants fall into three families that front ends usually map to
/// distinct exit codes: malformed input (`Alphabet*`, `Symbol*`, `Length*`,
/// `Script`, `InvalidParams`, `Parse`), parameters outside a formula's domain
/// (`Domain`, `OutOfRegime`, `Infeasible`, `InvalidRadius`), and requests too
/// large to enumerate (`Capacity`).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    InvalidAlphabet(u32),
    AlphabetMismatch { left: u32, right: u32 },
    SymbolOutOfRange { symbol: u32, q: u32 },
    LengthMismatch { expected: usize, found: usize },
    InvalidRadius { radius: usize, len: usize },
    /// A real parameter lies outside the domain of the formula.
    Domain(&'static str),
    /// The formula is defined but its derivation does not cover the point.
    OutOfRegime(&'static str),
    /// An optimisation has an empty feasible set.
    Infeasible(&'static str),
    /// Exhaustive work would exceed `limit` items.
    Capacity { needed: u128, limit: u128 },
    UndefinedMinDistance,
    UnsupportedField(u64),
    Script { position: usize, len: usize },
    NotACodeword,
    InvalidParams(&'static str),
    /// Malformed text form of a word.
    Parse { position: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidAlphabet(q) => write!(f, "alphabet size must be at least 2, got {q}"),
            Error::AlphabetMismatch { left, right } => {
                write!(f, "alphabet mismatch: q={left} vs q={right}")
            }
            Error::SymbolOutOfRange { symbol, q } => {
                write!(f, "symbol {symbol} is outside the alphabet 0..{q}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected length {expected}, found {found}")
            }
            Error::InvalidRadius { radius, len } => {
                write!(f, "radius {radius} is invalid for length {len}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::OutOfRegime(msg) => write!(f, "out of regime: {msg}"),
            Error::Infeasible(msg) => write!(f, "infeasible: {msg}"),
            Error::Capacity { needed, limit } => write!(
                f,
                "capacity exceeded: {needed} items requested, limit is {limit}"
            ),
            Error::UndefinedMinDistance => {
                write!(f, "minimum distance needs at least two codewords")
            }
            Error::UnsupportedField(p) => write!(f, "{p} is not a prime field order"),
            Error::Script { position, len } => {
                write!(f, "edit position {position} is invalid for a word of length {len}")
            }
            Error::NotACodeword => write!(f, "vector is not a codeword of the outer code"),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::Parse { position } => write!(f, "malformed word at character {position}"),
        }
    }
}

impl core::error::Error for Error {}
