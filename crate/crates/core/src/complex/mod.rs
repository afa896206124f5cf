//! Finite 2-dimensional polygonal complexes with the 1-skeleton metric:
//! validation, breadth-first distances, the DAG of all geodesics between two
//! vertices, combinatorial intervals, links and angles, and closest-point
//! projections.

#[allow(clippy::module_inception)]
mod complex;
pub mod builders;
pub mod dist;
pub mod link;

use thiserror::Error;

pub use builders::{grid_symmetries, VertexBijection};
pub use complex::{ComplexJson, ComplexViolation, PolygonalComplex, ValidationReport, VertexJson};
pub use dist::{
    bfs_from, bfs_from_avoiding, interval, is_geodesic_path, Ext, GeodesicDag, Metric, UNREACHED,
};
pub use link::{corner_angle, path_angle, vertex_angle, AngleTables, LinkGraph};

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("no path between {0} and {1}")]
    NoPath(String, String),
    #[error("edge from {0} to {1} is not incident")]
    EdgeNotIncident(String, String),
    #[error("not a geodesic: {0}")]
    NotGeodesic(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("bad input: {0}")]
    BadInput(String),
}
