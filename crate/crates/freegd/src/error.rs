use thiserror::Error;

/// Errors produced by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation restricted to the weight-(-1) subspace received an
    /// element of a different (or mixed) weight.
    #[error("weight error: expected homogeneous weight {expected}, found {found}")]
    Weight { expected: i64, found: String },

    /// A word was required to be an associative Lyndon-Shirshov word.
    #[error("not a Lyndon-Shirshov word: {0}")]
    NotLyndonShirshov(String),

    /// Leading-word peeling found a non-LS leading word, so the input was
    /// not a Lie element.
    #[error("not a Lie element: leading word {0} is not Lyndon-Shirshov")]
    NotLieElement(String),

    /// A normal form fed to the basis maps was internally inconsistent.
    #[error("malformed normal form: {0}")]
    Structure(String),

    /// The leading coefficient of a basis expansion was not +1 or -1.
    #[error("sign normalization failed: leading coefficient {0} is not a unit")]
    Sign(String),
}

pub type Result<T> = std::result::Result<T, Error>;
