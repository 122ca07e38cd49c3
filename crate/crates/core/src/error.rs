//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by fallible operations.
///
/// Misuse that can only come from a programming bug (e.g. mixing series of
/// different truncations in arithmetic) panics instead; everything that can
/// be triggered by runtime data goes through this enum.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A series with a non-unit constant term cannot be inverted exactly
    /// over the integers.
    #[error("cannot invert series: constant term {0} is not 1 or -1")]
    NonUnitConstant(String),

    /// Determinants are only defined for non-empty square matrices.
    #[error("determinant requires a non-empty square matrix")]
    NonSquareMatrix,

    /// Partition parts must be weakly decreasing.
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    /// The inner partition of a skew shape must fit inside the outer one.
    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    InnerNotContained { outer: String, inner: String },

    /// A cell was addressed outside the partition it refers to.
    #[error("cell ({row},{col}) lies outside the shape")]
    CellOutsideShape { row: usize, col: usize },

    /// A filling's domain did not match the cells of its shape.
    #[error("filling entries do not cover the shape exactly")]
    FillingDomainMismatch,

    /// A filling failed a mode check (RPP / SSYT / SYT).
    #[error("filling is not a valid {0}")]
    NotAValidFilling(&'static str),

    /// A computation exceeded its configured desk-scale cap.
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    /// The operation needed a shape of the form staircase/staircase.
    #[error("expected a skew staircase shape, got {0}")]
    NotSkewStaircase(String),

    /// Word or row data that cannot occur in a well-formed object.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Reverse alternating permutations only exist for odd sizes here.
    #[error("size must be odd, got {0}")]
    EvenSize(usize),

    /// Row lengths do not determine an order for any n.
    #[error("row lengths {0:?} do not satisfy the staircase length condition")]
    NoValidOrder(Vec<usize>),

    /// The two rows admit no cutting position.
    #[error("rows {i} and {j} are not transposable")]
    NotTransposable { i: usize, j: usize },

    /// The array is not a fixed point of the involution.
    #[error("array is not a fixed point: rows {i} and {i_next} are transposable")]
    NotFixedPoint { i: usize, i_next: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
