//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's domain (e.g. `m > N` in a Gaussian binomial).
    #[error("domain error: {0}")]
    Domain(String),

    /// A group could not be built from its spec (non-associative table,
    /// non-closed generators, size bound exceeded).
    #[error("group construction: {0}")]
    Group(String),

    /// An irreducible label did not resolve against the character table.
    #[error("unknown label: {0}")]
    Label(String),

    /// A class function failed an exactness check (non-integer or negative
    /// inner product), so it is not a genuine character.
    #[error("not a genuine character: {0}")]
    NotACharacter(String),

    /// Objects from different groups were mixed.
    #[error("group mismatch: {0}")]
    Mismatch(String),

    /// Malformed textual input (group spec, cyclotomic encoding, table JSON).
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
