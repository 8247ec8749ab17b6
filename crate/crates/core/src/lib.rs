//! Spectra, Estrada index and energy of k-uniform hypergraphs.
//!
//! A hypergraph's adjacency matrix has `a_ij` equal to the number of edges
//! containing both `i` and `j`. On top of an exact model of simple
//! hypergraphs this crate provides a symmetric eigensolver, exact walk
//! counts, BIBD recognition, standard families, numerical checks of
//! spectral and Estrada-index bounds, and verification of Estrada-index
//! orderings and extremal results for unicyclic hypergraphs.

pub mod bibd;
pub mod bounds;
pub mod catalog;
pub mod eigen;
pub mod error;
pub mod extremal;
pub mod families;
pub mod format;
pub mod hypergraph;
pub mod matrix;
pub mod orderings;
pub mod report;
pub mod spectral;
pub mod walks;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use hypergraph::{FamilyLabeling, Hypergraph, Uniformity};
pub use matrix::{DenseSymmetricMatrix, IntMatrix};
pub use spectral::{estrada_index, spectrum, Spectrum};
