//! Checkers, on finite complexes, for the contraction machinery:
//! strong-contraction constants, the coarsely-Lipschitz projection bound,
//! checkpoint systems, the strong concatenation property, bounded angle of
//! view, the local criterion for assembling checkpoints at a big-angle
//! vertex, and coarse stabilizers.
//!
//! Everything is exhaustive brute force with explicit bounds; witnesses are
//! reported in terms of vertex labels so they can be re-checked with the
//! primitive queries.

mod checkpoints;
#[allow(clippy::module_inception)]
mod contraction;
mod scp;

use serde::Serialize;
use thiserror::Error;

pub use checkpoints::{
    all_pairs, assemble_checkpoints_from_big_angle, check_checkpoint_system, coarse_stabilizer,
    CheckpointReport, CheckpointSystem, PartialBijection,
};
pub use contraction::{
    check_coarse_lipschitz, contraction_constant, BallWitness, ContractionReport,
};
pub use scp::{
    check_scp, cross_check_aov_scp, measure_angle_of_view, AovReport, ScpConstants, ScpOptions,
};

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("angle at the marked vertex is {angle}, not above the threshold {threshold}")]
    AngleTooSmall { angle: String, threshold: u32 },
    #[error("axis is not a geodesic of the complex")]
    AxisNotGeodesic,
    #[error("{0}")]
    Complex(#[from] crate::complex::ComplexError),
    #[error("invalid checkpoint system: {0}")]
    BadSystem(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// A single verifier finding. Vertices are reported by label.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    /// `d(p, q) > max(C, 4 d(x,y))` for some projection choices.
    Lipschitz {
        x: String,
        y: String,
        px: String,
        py: String,
        d_xy: u32,
        d_proj: u32,
        bound: u32,
    },
    /// Some geodesic between the pair misses a separating checkpoint.
    CheckpointMissed {
        x: String,
        y: String,
        checkpoint_index: i64,
        witness_geodesic: Vec<String>,
    },
    /// A big-angle concatenation of two geodesics fails to be a geodesic.
    ScpConcatenation {
        v: String,
        toward1: String,
        toward2: String,
        angle: String,
        w1: String,
        w2: String,
        length_sum: u32,
        distance: u32,
    },
    /// A geodesic between far-projecting points avoids the big-angle vertex.
    ScpAvoidsVertex {
        v: String,
        segment: Vec<String>,
        x: String,
        y: String,
        px: String,
        py: String,
        witness_geodesic: Vec<String>,
    },
}
