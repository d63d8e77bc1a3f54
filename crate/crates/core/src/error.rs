use thiserror::Error;

/// Errors raised while constructing or combining finite structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("equality table is not an equivalence: {law} fails at ({x}, {y})")]
    NotEquivalence { law: &'static str, x: usize, y: usize },

    #[error("map table has {got} entries, domain has {expected}")]
    NotTotal { expected: usize, got: usize },

    #[error("map is not extensional: {x} = {x2} in the domain but images {fx} and {fx2} differ")]
    NotExtensional { x: usize, x2: usize, fx: usize, fx2: usize },

    #[error("domain mismatch: {0}")]
    Mismatch(String),

    #[error("not an injection: {x} and {x2} are distinct but have equal images")]
    NotInjective { x: usize, x2: usize },

    #[error("subsets are not disjoint: {one} and {zero} are not apart")]
    NotDisjoint { one: usize, zero: usize },

    #[error("undefined for this argument: {0}")]
    Undefined(String),

    #[error("label table has {got} entries, carrier has {expected}")]
    LabelCount { expected: usize, got: usize },

    #[error("not an Aff morphism: {0}")]
    NotAffMorphism(String),

    #[error("not product-preserving: {0}")]
    NotProductPreserving(String),

    #[error("not strongly extensional: images of {x} and {y} are apart but {x} and {y} are not")]
    NotStronglyExtensional { x: usize, y: usize },

    #[error("invalid structure: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
