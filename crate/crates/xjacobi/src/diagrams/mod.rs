//! Spectral diagrams: class parameters, their label diagrams, canonical
//! decoding, text rendering and flip alphabets.

pub mod codec;
pub mod diagram;
pub mod flip;
pub mod label;
pub mod params;

pub use codec::{decode, encode, is_canonical};
pub use diagram::{row_kinds, CellChange, Geometry, Row, RowKind, SpectralDiagram};
pub use flip::{apply_flip, flip_targets, is_flip};
pub use label::{Cell, Label};
pub use params::{classical_nu_ratio, degree_formula, encode_params, DiagramParams, Encoded, ParamError};

/// Errors of the diagram layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("illegal diagram: {0}")]
    IllegalDiagram(String),
    #[error("illegal flip: {0}")]
    IllegalFlip(String),
    #[error("cannot parse diagram: {0}")]
    Parse(String),
}
