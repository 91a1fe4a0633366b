//! Toric Fano varieties described by the primitive generators of their rays.
//!
//! The threshold of a Q-factorial toric Fano variety `X`, optionally
//! equivariant with respect to a finite group `G` of lattice automorphisms
//! permuting the rays, is
//!
//! ```text
//! lct(X, G) = 1 / (1 + max { ⟨w, v⟩ : w ∈ Δ^G, v a ray })
//! ```
//!
//! where `Δ = {w : ⟨w, v⟩ ≥ -1 for every ray v}` and `Δ^G` is its
//! `G`-fixed part. Only the rays are needed; the cone structure of the fan is
//! never stored, and simpliciality is assumed rather than checked.

mod engine;
pub mod fanfile;
mod fans;
mod group;
mod rays;

pub use engine::{dual_polytope, toric_lct, ToricLctReport};
pub use fanfile::{FanFile, FanFormatError};
pub use fans::{
    bundle_lct_closed_form, product_fan, projective_space_fan, projectivized_bundle_fan,
    star_subdivide, wps_fan,
};
pub use group::{fan_automorphisms, GroupAction, DEFAULT_GROUP_CAP};
pub use rays::RaySet;

use thiserror::Error;

use crate::geometry::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("ray set is empty")]
    EmptyRaySet,
    #[error("ray {0} is zero")]
    ZeroRay(usize),
    #[error("ray {index} has dimension {found}, expected {expected}")]
    RayDimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("ray ({0}) occurs twice")]
    DuplicateRay(String),
    #[error("dual polytope is unbounded: the rays do not positively span, so the fan is not complete")]
    FanNotComplete,
    #[error("group element {0} does not permute the rays")]
    GroupDoesNotPreserveFan(String),
    #[error("group elements are not closed under products: {0}")]
    GroupNotClosed(String),
    #[error("group element {0} is not a unimodular matrix")]
    NotUnimodular(String),
    #[error("group acts on dimension {found}, rays live in dimension {expected}")]
    GroupDimensionMismatch { expected: usize, found: usize },
    #[error("degenerate subdivision: {0}")]
    DegenerateSubdivision(String),
    #[error("weights {0:?} are not well-formed")]
    NotWellFormed(Vec<u64>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl ToricError {
    pub fn name(&self) -> &'static str {
        match self {
            ToricError::EmptyRaySet => "EmptyRaySet",
            ToricError::ZeroRay(_) => "ZeroRay",
            ToricError::RayDimensionMismatch { .. } => "RayDimensionMismatch",
            ToricError::DuplicateRay(_) => "DuplicateRay",
            ToricError::FanNotComplete => "FanNotComplete",
            ToricError::GroupDoesNotPreserveFan(_) => "GroupDoesNotPreserveFan",
            ToricError::GroupNotClosed(_) => "GroupNotClosed",
            ToricError::NotUnimodular(_) => "NotUnimodular",
            ToricError::GroupDimensionMismatch { .. } => "GroupDimensionMismatch",
            ToricError::DegenerateSubdivision(_) => "DegenerateSubdivision",
            ToricError::NotWellFormed(_) => "NotWellFormed",
            ToricError::InvalidArgument(_) => "InvalidArgument",
            ToricError::Geometry(e) => e.name(),
        }
    }
}
