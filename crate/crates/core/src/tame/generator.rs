use std::fmt;


use crate::algebra::{Mat4, Monomial, PolyMap4};
use crate::{GroundMap, GroundPoly, Rat};

use super::TameError;

/// A generator of the tame automorphism group of the quadric
/// `q = x1*x4 - x2*x3`: either a linear map preserving `q`, or an elementary
/// map `(x1, x2 + x1*P(x1,x3), x3, x4 + x3*P(x1,x3))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Generator {
    Orthogonal(Mat4),
    Elementary(GroundPoly),
}

impl Generator {
    /// Validate and build an orthogonal generator: `M^T Q M = Q` must hold
    /// exactly.
    pub fn orthogonal(m: Mat4) -> Result<Generator, TameError> {
        if !m.preserves_q() {
            return Err(TameError::NotOrthogonal(m.to_string()));
        }
        Ok(Generator::Orthogonal(m))
    }

    /// Validate and build an elementary generator; `p` may mention only `x1`
    /// and `x3`.
    pub fn elementary(p: GroundPoly) -> Result<Generator, TameError> {
        for (m, _) in p.terms() {
            if m.0[1] != 0 || m.0[3] != 0 {
                return Err(TameError::BadVariables(m.to_string()));
            }
        }
        Ok(Generator::Elementary(p))
    }

    /// Forward and inverse polynomial maps of this generator.
    pub fn maps(&self) -> (GroundMap, GroundMap) {
        match self {
            Generator::Orthogonal(m) => (m.to_map(), m.orthogonal_inverse().to_map()),
            Generator::Elementary(p) => (elementary_map(p), elementary_map(&-p)),
        }
    }
}

fn elementary_map(p: &GroundPoly) -> GroundMap {
    let x = GroundPoly::var;
    PolyMap4::new([
        x(0),
        &x(1) + &(&x(0) * p),
        x(2),
        &x(3) + &(&x(2) * p),
    ])
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Orthogonal(m) => write!(f, "O{}", m.to_map()),
            Generator::Elementary(p) => write!(f, "E[{p}]"),
        }
    }
}

/// All 32 monomial (signed-permutation) matrices preserving `q`, enumerated
/// by brute force and returned in a fixed deterministic order.
pub fn monomial_orthogonal_group() -> Vec<Mat4> {
    let mut out = Vec::new();
    let perms = permutations();
    for perm in &perms {
        for signs in 0..16u32 {
            let mut rows = [[0i64; 4]; 4];
            for i in 0..4 {
                let s = if signs & (1 << i) != 0 { -1 } else { 1 };
                rows[i][perm[i]] = s;
            }
            let m = Mat4::from_i64(rows);
            if m.preserves_q() {
                out.push(m);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let mut items = [0usize, 1, 2, 3];
    heap_permute(&mut items, 4, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 1 {
        out.push(*items);
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// `P = x1^2`, the elementary twist used to build the explicit hyperbolic
/// element.
pub fn p_x1_squared() -> GroundPoly {
    let mut p = GroundPoly::zero();
    p.add_term(Monomial([2, 0, 0, 0]), Rat::from_integer(1.into()));
    p
}

/// The linear map `(x4, x3, x2, x1)` (full coordinate reversal).
pub fn swap_full() -> Mat4 {
    Mat4::from_i64([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
}

/// The linear map `(x1, x3, x2, x4)` (swap of the middle coordinates).
pub fn swap_middle() -> Mat4 {
    Mat4::from_i64([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
}

/// The linear map `(x4, x2, x3, x1)` (swap of the outer coordinates).
pub fn swap_outer() -> Mat4 {
    Mat4::from_i64([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_accepted() {
        assert!(Generator::orthogonal(Mat4::identity()).is_ok());
    }

    #[test]
    fn full_swap_accepted() {
        assert!(Generator::orthogonal(swap_full()).is_ok());
        assert!(Generator::orthogonal(swap_middle()).is_ok());
        assert!(Generator::orthogonal(swap_outer()).is_ok());
    }

    #[test]
    fn shear_rejected() {
        let m = Mat4::from_i64([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]]);
        assert!(matches!(
            Generator::orthogonal(m),
            Err(TameError::NotOrthogonal(_))
        ));
    }

    #[test]
    fn elementary_rejects_x2() {
        let p = GroundPoly::var(1);
        assert!(matches!(
            Generator::elementary(p),
            Err(TameError::BadVariables(_))
        ));
    }

    #[test]
    fn elementary_inverse_composes_to_identity() {
        let g = Generator::elementary(p_x1_squared()).unwrap();
        let (f, i) = g.maps();
        assert!(f.compose(&i).is_identity());
        assert!(i.compose(&f).is_identity());
    }

    #[test]
    fn monomial_group_has_32_elements() {
        let g = monomial_orthogonal_group();
        assert_eq!(g.len(), 32);
        assert!(g.iter().all(|m| m.preserves_q()));
        assert!(g.contains(&Mat4::identity()));
        assert!(g.contains(&swap_full()));
    }
}
