use std::fmt;

use num_traits::{One, Zero};

use super::map4::PolyMap4;
use super::poly::Poly;
use crate::Rat;

/// A 4x4 matrix over the rationals, row major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Mat4 {
    pub rows: [[Rat; 4]; 4],
}

impl Mat4 {
    pub fn zero() -> Self {
        Mat4 {
            rows: Default::default(),
        }
    }

    pub fn identity() -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            m.rows[i][i] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: [[Rat; 4]; 4]) -> Self {
        Mat4 { rows }
    }

    pub fn from_i64(rows: [[i64; 4]; 4]) -> Self {
        let mut m = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.rows[i][j] = Rat::from_integer(rows[i][j].into());
            }
        }
        m
    }

    pub fn transpose(&self) -> Mat4 {
        let mut t = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                t.rows[j][i] = self.rows[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let mut out = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = Rat::zero();
                for k in 0..4 {
                    s += self.rows[i][k].clone() * other.rows[k][j].clone();
                }
                out.rows[i][j] = s;
            }
        }
        out
    }

    /// Gram matrix of `q = x1*x4 - x2*x3`, so that `q(x) = x^T Q x`.
    pub fn gram_q() -> Mat4 {
        let h = Rat::new(1.into(), 2.into());
        let mut q = Mat4::zero();
        q.rows[0][3] = h.clone();
        q.rows[3][0] = h.clone();
        q.rows[1][2] = -h.clone();
        q.rows[2][1] = -h;
        q
    }

    /// Exact check of `M^T Q M = Q`, i.e. membership in the orthogonal group
    /// of `q`.
    pub fn preserves_q(&self) -> bool {
        let q = Mat4::gram_q();
        self.transpose().mul(&q).mul(self) == q
    }

    /// Inverse of a `q`-orthogonal matrix via `M^{-1} = Q^{-1} M^T Q`.
    ///
    /// Only valid when [`Mat4::preserves_q`] holds. `Q^{-1} = 4Q` because
    /// `Q = P/2` for an involution `P`.
    pub fn orthogonal_inverse(&self) -> Mat4 {
        debug_assert!(self.preserves_q());
        let q = Mat4::gram_q();
        let four = Rat::from_integer(4.into());
        let mut qinv = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                qinv.rows[i][j] = q.rows[i][j].clone() * four.clone();
            }
        }
        qinv.mul(&self.transpose()).mul(&q)
    }

    /// The linear polynomial map whose `i`-th component is
    /// `sum_j rows[i][j] * x_{j+1}`.
    pub fn to_map(&self) -> PolyMap4<Rat> {
        let comp = |i: usize| {
            let mut p = Poly::zero();
            for j in 0..4 {
                if !self.rows[i][j].is_zero() {
                    p = &p + &Poly::var(j).scale(&self.rows[i][j]);
                }
            }
            p
        };
        PolyMap4::new([comp(0), comp(1), comp(2), comp(3)])
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_map())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_orthogonal() {
        assert!(Mat4::identity().preserves_q());
    }

    #[test]
    fn full_swap_is_orthogonal() {
        // (x1,x2,x3,x4) -> (x4,x3,x2,x1)
        let m = Mat4::from_i64([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]);
        assert!(m.preserves_q());
        let inv = m.orthogonal_inverse();
        assert_eq!(m.mul(&inv), Mat4::identity());
    }

    #[test]
    fn shear_is_not_orthogonal() {
        // x4 -> x4 + x1 alone changes q.
        let m = Mat4::from_i64([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]]);
        assert!(!m.preserves_q());
    }

    #[test]
    fn orthogonal_inverse_exact() {
        // (x1, x2 + c x1, x3 + d x1, x4 + c x3 + d x2 + c d x1) with c = 2, d = 3
        let m = Mat4::from_i64([[1, 0, 0, 0], [2, 1, 0, 0], [3, 0, 1, 0], [6, 3, 2, 1]]);
        assert!(m.preserves_q());
        assert_eq!(m.mul(&m.orthogonal_inverse()), Mat4::identity());
    }
}
