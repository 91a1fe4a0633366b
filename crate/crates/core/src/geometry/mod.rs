//! Exact linear algebra and polytope primitives.

mod fixed;
pub mod linalg;
mod matrix;
mod polytope;
mod smith;
mod vector;

pub use fixed::fixed_subspace;
pub use linalg::solve_square_system;
pub use matrix::{IntMatrix, Matrix};
pub use polytope::{HPolytope, HalfSpace};
pub use smith::{smith_normal_form, SmithDecomposition};
pub use vector::Vector;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("halfspace normal is zero")]
    ZeroNormal,
    #[error("polytope needs at least one halfspace")]
    NoHalfspaces,
    #[error("fixed subspace needs at least one generator")]
    NoGenerators,
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("no point satisfies every halfspace")]
    EmptyPolytope,
}

impl GeometryError {
    /// Stable variant name, used for diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            GeometryError::DimensionMismatch { .. } => "DimensionMismatch",
            GeometryError::NotSquare { .. } => "NotSquare",
            GeometryError::ZeroNormal => "ZeroNormal",
            GeometryError::NoHalfspaces => "NoHalfspaces",
            GeometryError::NoGenerators => "NoGenerators",
            GeometryError::Unbounded => "Unbounded",
            GeometryError::EmptyPolytope => "EmptyPolytope",
        }
    }
}
