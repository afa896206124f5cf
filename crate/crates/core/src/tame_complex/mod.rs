//! Finite portions of the square complex of the tame group: build complexes
//! from element lists, enumerate balls in the word metric, verify the 4x4
//! grid between `[x1]` and its image under `g^2`, explore link orbits of
//! stabilizer elements, and render the common-stabilizer report.

mod grid;
mod link_explore;
mod portion;
mod report;

use thiserror::Error;

pub use grid::{grid_interval, verify_grid, GridReport};
pub use link_explore::{partial_link_exploration, LinkOrbitReport, LinkOrbitRow};
pub use portion::{
    build_from_elements, enumerate_ball, frame_representatives, BallCaps, PortionJson, TamePortion,
};
pub use report::{common_stabilizer_report, stabilizer_report_text, StabilizerReport};

#[derive(Debug, Error)]
pub enum PortionError {
    #[error("budget exceeded for {what} (cap {cap})")]
    Budget { what: String, cap: usize },
    #[error("vertex not found in portion: {0}")]
    MissingVertex(String),
    #[error("{0}")]
    NotInStabilizer(String),
    #[error("{0}")]
    Tame(#[from] crate::tame::TameError),
    #[error("{0}")]
    Complex(#[from] crate::complex::ComplexError),
    #[error("report self-check failed: {0}")]
    ReportCheck(String),
}
