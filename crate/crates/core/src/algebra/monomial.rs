use std::cmp::Ordering;
use std::fmt;

/// A monomial in the four coordinates `x1..x4`, stored as its exponent vector.
///
/// Ordering is graded lexicographic with `x1 > x2 > x3 > x4`: higher total
/// degree first, ties broken by the exponent of `x1`, then `x2`, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0, 0]);

    /// The monomial `x_{i+1}` for `i` in `0..4`.
    pub fn var(i: usize) -> Self {
        let mut e = [0u32; 4];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0, 0]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u32; 4];
        for i in 0..4 {
            e[i] = self.0[i] + other.0[i];
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x1 = Monomial::var(0);
        let x4 = Monomial::var(3);
        let x1sq = x1.mul(&x1);
        assert!(x1 > x4);
        assert!(x1sq > x1);
        // degree dominates: x4^2 > x1
        assert!(x4.mul(&x4) > x1);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial([2, 0, 1, 0]).to_string(), "x1^2*x3");
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(Monomial([0, 1, 0, 0]).to_string(), "x2");
    }
}
