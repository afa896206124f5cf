//! The tame automorphism group of the quadric `x1*x4 - x2*x3`: generators
//! (orthogonal maps and elementary twists), elements as generator words with
//! exact expanded maps, orbit vertices of the square complex with decidable
//! equality, and the symbolic square-stabilizer computation.

pub mod element;
pub mod sampling;
pub mod generator;
pub mod stabilizer;
pub mod vertex;

use thiserror::Error;

pub use element::{explicit_g, explicit_g_formula, Letter, TameElement};
pub use sampling::sample_words;
pub use generator::{monomial_orthogonal_group, Generator};
pub use stabilizer::{derive_common_stabilizer_constraints, stabilizer_family, ConstraintSet};
pub use vertex::{
    act_on_vertex, type1_equal, type2_equal, type3_equal, vertices_equal, OrbitVertex,
    Type1Vertex, Type2Vertex, Type3Vertex,
};

#[derive(Debug, Error)]
pub enum TameError {
    #[error("matrix does not preserve the quadratic form: {0}")]
    NotOrthogonal(String),
    #[error("elementary twist may only mention x1 and x3, found {0}")]
    BadVariables(String),
    #[error("degenerate tuple: {0}")]
    DegenerateTuple(String),
    #[error("element does not stabilize the vertex: {0}")]
    NotInStabilizer(String),
    #[error("unexpected constraint shape: {0}")]
    ConstraintShape(String),
}
