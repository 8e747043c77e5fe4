//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by matrix parsing, group-presentation handling, surface
/// construction, and representation loading.
#[derive(Debug, Error)]
pub enum Error {
    /// A determinant was requested for a non-square matrix.
    #[error("matrix is {rows}x{cols}, but a square matrix is required")]
    NotSquare { rows: usize, cols: usize },

    /// Malformed matrix text.
    #[error("invalid matrix input: {0}")]
    MatrixParse(String),

    /// The ambient rank passed to a cokernel computation is smaller than the
    /// column count of the relation matrix.
    #[error("ambient rank {ambient} is smaller than the relation matrix width {cols}")]
    AmbientTooSmall { ambient: usize, cols: usize },

    /// Malformed generator name or word syntax.
    #[error("invalid word syntax: {0}")]
    WordParse(String),

    /// Malformed presentation text.
    #[error("invalid presentation: {0}")]
    PresentationParse(String),

    /// The map of generator images does not kill every relator, so it does
    /// not define a homomorphism to the target cyclic group.
    #[error("relator {relator} maps to {image} (mod {modulus}), not 0; the assignment is not a homomorphism")]
    NotAHomomorphism {
        relator: String,
        image: i64,
        modulus: u32,
    },

    /// A coset transversal failed one of its structural requirements.
    #[error("invalid transversal: {0}")]
    TransversalInvalid(String),

    /// No transversal of the requested kind exists for this homomorphism.
    #[error("cannot build a transversal: {0}")]
    TransversalUnavailable(String),

    /// Parameters outside the supported range for a surface.
    #[error("unsupported surface parameters: {0}")]
    SurfaceParams(String),

    /// An edge word failed structural validation before gluing.
    #[error("polygon word cannot be glued: {0}")]
    GluingInvalid(String),

    /// A 1-chain given to a homology-class computation is not a cycle.
    #[error("the edge path is not a cycle: boundary is nonzero at vertex class {0}")]
    NotACycle(usize),

    /// Malformed representation-config text.
    #[error("invalid representation config: {0}")]
    RepConfigParse(String),

    /// The representation config parsed but violates a semantic requirement.
    #[error("representation config rejected: {0}")]
    RepConfigInvalid(String),

    /// A word references a generator the representation has no matrix for.
    #[error("no matrix assigned to generator '{0}'")]
    UnknownGenerator(String),

    /// Generic invalid-input error for CLI-level validation.
    #[error("{0}")]
    Invalid(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
