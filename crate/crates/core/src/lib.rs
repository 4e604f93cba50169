//! Exact symbolic dynamics for musical scales.
//!
//! Scales in `n`-TET are coded as integer compositions of `n`. A shift space
//! produces scales through the distinguished symbol rule, and the crate
//! counts them up to rotation (transversal dimension) and with all their
//! modes (orbital dimension), both by closed-form generating functions and
//! by exhaustive enumeration.

pub mod combinatorics;
pub mod error;
pub mod numtheory;
pub mod oracle;
pub mod scales;
pub mod series;
pub mod shiftspace;
pub mod substitutions;
pub mod verify;

pub use combinatorics::{Composition, PartSet, Wheel};
pub use error::{Error, Result};
pub use scales::{DimReport, Method, ScaleClass};
pub use series::{BivariateSeries, RationalFunction, TruncatedSeries};
pub use shiftspace::{Alphabet, LoopSystem, SftPresentation, VertexShift, Word};

/// The guide in `book/`, compiled here so its snippets run as doctests.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/wheels.md")]
    pub mod wheels {}
    #[doc = include_str!("../../../book/src/vertex_shifts.md")]
    pub mod vertex_shifts {}
    #[doc = include_str!("../../../book/src/scales.md")]
    pub mod scales {}
    #[doc = include_str!("../../../book/src/forbidden_blocks.md")]
    pub mod forbidden_blocks {}
    #[doc = include_str!("../../../book/src/substitutions.md")]
    pub mod substitutions {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    pub mod oracles {}
}
