//! Numerical laboratory for sets of finite perimeter.
//!
//! The crate measures geometric quantities on discrete sets of finite
//! perimeter (exact 2D polygons or 2D/3D voxel indicators): anisotropic
//! perimeters, spherical and cylindrical excess, L² flatness, density
//! ratios, Reifenberg flatness, Lipschitz graph approximations,
//! Caccioppoli ratios and tilt steps. On the variational side it
//! certifies the almost-minimality parameter Λ of a set by local
//! re-optimization over a Cauchy–Crofton cut metric (exact min-cut),
//! and generates tunable almost-minimizers by perimeter + fidelity
//! minimization.

pub mod almostmin;
pub mod anisotropy;
pub mod config;
pub mod excess;
pub mod geom;
pub mod measures;
pub mod regularity;
pub mod report;
pub mod setrep;

pub use anisotropy::Anisotropy;
pub use geom::{Ball, Cylinder, Pt, Region};
pub use setrep::{BoundaryPatch, DiscreteSet, Facet, PolyCurveSet, VoxelSet};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("no boundary inside the query region")]
    NoBoundary,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
