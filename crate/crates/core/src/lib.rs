//! Spectral toolkit for studying pointwise products of graph Laplacian
//! eigenvectors.
//!
//! The Laplacian is always the combinatorial `L = D - A`. Its companion, the
//! signless Laplacian `D + A`, measures how far a vertex function is from
//! flipping sign across every edge: eigenvectors of `L` near the top of the
//! spectrum are exactly the vectors with small signless energy.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | [`Graph`], [`VertexFunction`], generators, matrix-free operators |
//! | [`spectra`] | Jacobi eigensolver, [`EigenDecomposition`], energies |
//! | [`product`] | Hadamard products, [`ProductHeatmap`], sign patterns |
//! | [`bounds`] | Checkable forms of the product-energy and delocalization bounds |
//! | [`cycle`] | Closed-form eigenpairs of the cycle `C_n` |
//! | [`io`] | graph6, edge lists, named graphs, DOT, PPM/CSV, JSON reports |

pub mod bounds;
pub mod cycle;
pub mod error;
pub mod graph;
pub mod io;
pub mod product;
pub mod spectra;

pub use bounds::{BoundReport, CheckTolerances, Theorem};
pub use error::{Error, Result};
pub use graph::{Graph, VertexFunction};
pub use product::{ProductHeatmap, SignPattern};
pub use spectra::{EigenDecomposition, Operator};
