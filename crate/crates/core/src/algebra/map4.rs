use std::fmt;

use super::poly::Poly;
use super::scalar::Scalar;

/// A polynomial self-map of affine 4-space: four component polynomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PolyMap4<C: Scalar> {
    pub components: [Poly<C>; 4],
}

impl<C: Scalar> PolyMap4<C> {
    pub fn new(components: [Poly<C>; 4]) -> Self {
        PolyMap4 { components }
    }

    pub fn identity() -> Self {
        PolyMap4 {
            components: [Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3)],
        }
    }

    pub fn is_identity(&self) -> bool {
        (0..4).all(|i| self.components[i] == Poly::var(i))
    }

    /// Composition `self o inner`: substitute the components of `inner` into
    /// each component of `self`.
    pub fn compose(&self, inner: &PolyMap4<C>) -> PolyMap4<C> {
        let c = &inner.components;
        PolyMap4 {
            components: [
                self.components[0].compose(c),
                self.components[1].compose(c),
                self.components[2].compose(c),
                self.components[3].compose(c),
            ],
        }
    }

    /// Pullback of the quadratic form `x1*x4 - x2*x3` along this map:
    /// `m1*m4 - m2*m3`.
    pub fn quadratic_form_pullback(&self) -> Poly<C> {
        let [m1, m2, m3, m4] = &self.components;
        &(m1 * m4) - &(m2 * m3)
    }

    pub fn max_degree(&self) -> u32 {
        self.components
            .iter()
            .map(|p| p.total_degree())
            .max()
            .unwrap_or(0)
    }
}

/// The quadratic form `q = x1*x4 - x2*x3` itself.
pub fn quadratic_form<C: Scalar>() -> Poly<C> {
    PolyMap4::identity().quadratic_form_pullback()
}

impl<C: Scalar> fmt::Display for PolyMap4<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.components[0], self.components[1], self.components[2], self.components[3]
        )
    }
}
