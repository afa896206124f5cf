//! Exact, desk-scale tools for the geometry of groups acting on polygonal
//! complexes:
//!
//! * [`algebra`] — sparse multivariate polynomials over exact coefficient
//!   rings, polynomial 4-maps, and rational linear algebra.
//! * [`tame`] — the tame automorphism group of the quadric `x1*x4 - x2*x3`:
//!   generators, explicit elements, orbit vertices with decidable equality,
//!   and the symbolic square-stabilizer computation.
//! * [`complex`] — finite 2-dimensional polygonal complexes with geodesics,
//!   combinatorial intervals, links, and angles.
//! * [`contraction`] — checkers for strong-contraction constants, checkpoint
//!   systems, the strong concatenation property, and bounded angle of view.
//! * [`tame_complex`] — finite portions of the square complex built from tame
//!   elements, grid verification, and the common-stabilizer report.
//!
//! All core math is generic over the scalar type via the
//! [`Scalar`](algebra::Scalar) trait; the concrete instantiations used
//! throughout are exact (rationals and Laurent parameter polynomials), never
//! floating point.

pub mod algebra;
pub mod complex;
pub mod contraction;
pub mod tame;
pub mod tame_complex;

/// Arbitrary-precision rational number (always in lowest terms, positive
/// denominator, zero as `0/1`).
pub type Rat = num_rational::BigRational;

/// Polynomial in `x1..x4` with rational coefficients.
pub type GroundPoly = algebra::Poly<Rat>;

/// Polynomial in `x1..x4` with Laurent-parameter coefficients.
pub type ParamPoly = algebra::Poly<algebra::ParamCoeff>;

/// Polynomial 4-map with rational coefficients.
pub type GroundMap = algebra::PolyMap4<Rat>;

/// Polynomial 4-map with Laurent-parameter coefficients.
pub type ParamMap = algebra::PolyMap4<algebra::ParamCoeff>;
