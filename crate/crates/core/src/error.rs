//! Error type shared across the pipeline stages.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // field construction
    #[error("polynomial has degree zero")]
    ZeroDegree,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("polynomial is not totally real ({real_roots} real roots of degree {degree})")]
    NotTotallyReal { degree: usize, real_roots: usize },
    #[error("field element is zero")]
    ZeroElement,
    #[error("elements belong to different number fields")]
    FieldMismatch,

    // lattice construction
    #[error("ideal basis rows are linearly dependent")]
    SingularBasis,
    #[error("lattice is not stable under multiplication by the field generator")]
    NotAnIdeal,
    #[error("supplied discriminant {supplied} does not match computed {computed}")]
    DiscriminantMismatch { supplied: String, computed: String },
    #[error("element is not a totally positive unit: {0}")]
    NotTotallyPositiveUnit(String),

    // cones and fans
    #[error("cone is not simplicial")]
    NonSimplicial,
    #[error("generator matrix is rank deficient")]
    RankDeficient,
    #[error("matrix is not unimodular with determinant +1")]
    NotUnimodular,
    #[error("cone {0} in the fan is not smooth")]
    NotSmooth(usize),
    #[error("top-dimensional cone {0} cannot be normalized to determinant +1")]
    BadDeterminant(usize),
    #[error("generator {generator:?} of cone {cone} lies outside the closure of the basis cone")]
    GeneratorOutsideClosure { cone: usize, generator: Vec<i64> },

    // Shintani decomposition
    #[error("quadratic decomposition requires a degree-2 field")]
    NotQuadratic,
    #[error("no totally positive fundamental unit found below the search bound")]
    UnitNotFound,
    #[error("cover gap: lattice point {0:?} lies in no unit translate of the fan")]
    CountZero(Vec<i64>),
    #[error("cover overlap: lattice point {0:?} lies in {1} unit translates of the fan")]
    CountMany(Vec<i64>, usize),

    // summation
    #[error("cone is not totally positive")]
    NotTotallyPositive,
    #[error("index weight {weight} is too light for dimension {dim} (need weight > dim)")]
    IndexTooLight { weight: u32, dim: usize },

    // oracle
    #[error("field is not flagged monogenic; the Dedekind zeta oracle needs Z[theta] = O_F")]
    NotMonogenic,

    // input handling
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
