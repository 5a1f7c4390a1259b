use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a pitch-class set must contain at least one element")]
    EmptySet,

    #[error("element {element} lies outside the {universe}-element universe")]
    ElementOutOfRange { element: usize, universe: usize },

    #[error("element {0} appears more than once")]
    DuplicateElement(usize),

    #[error("universe size must be positive")]
    ZeroUniverse,

    #[error("mode index {index} out of range for a {size}-note set")]
    ModeIndexOutOfRange { index: usize, size: usize },

    #[error("{0} is not an element of the underlying set")]
    NotAnElement(usize),

    #[error("no compositions of {n} into {k} positive parts")]
    BadCompositionShape { n: usize, k: usize },

    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("{unit} is not a unit modulo {modulus}")]
    NotAUnit { unit: usize, modulus: usize },

    #[error("composition sums to {sigma} but the scale has {scale} notes")]
    SizeMismatch { sigma: usize, scale: usize },

    #[error("multiplier {multiplier} does not carry Z_{source_size} into Z_{target_size}")]
    BadMultiplier {
        multiplier: usize,
        source_size: usize,
        target_size: usize,
    },

    #[error("operation requires a primitive cover (gcd(n, k) = 1)")]
    NotPrimitive,

    #[error("a chord must contain at least one element")]
    EmptyChord,

    #[error("vertex {vertex} out of range for a complex on {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("simplices must contain at least one vertex")]
    EmptySimplex,
}

pub type Result<T> = std::result::Result<T, Error>;
