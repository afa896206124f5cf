//! Exact arithmetic foundation: arbitrary-precision rationals, sparse
//! polynomials in `x1..x4` over the rationals or over a Laurent parameter
//! ring, 4-component polynomial maps and their composition, and small exact
//! linear algebra.

pub mod linalg;
pub mod map4;
pub mod mat;
pub mod monomial;
pub mod param;
pub mod poly;
mod scalar;

pub use map4::{quadratic_form, PolyMap4};
pub use mat::Mat4;
pub use monomial::Monomial;
pub use param::{ParamCoeff, ParamExp, PARAM_NAMES};
pub use poly::Poly;
pub use scalar::Scalar;
