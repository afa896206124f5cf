use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::monomial::Monomial;
use super::scalar::Scalar;
use crate::Rat;

/// Sparse polynomial in `x1..x4` over a coefficient ring `C`.
///
/// Invariant: no zero coefficients are stored, so equality is term-map
/// equality. Terms are kept in a `BTreeMap` keyed by graded-lex order, which
/// makes iteration (and hence printing and hashing) deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Poly<C: Scalar> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    /// The coordinate polynomial `x_{i+1}`, `i` in `0..4`.
    pub fn var(i: usize) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(i), C::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Leading term in graded-lex order, if nonzero.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// The stored coefficient of `m`, or zero.
    pub fn coefficient_of(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut p = Poly::zero();
        for (m, a) in &self.terms {
            p.add_term(*m, a.clone() * c.clone());
        }
        p
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        let mut p = Poly::zero();
        for (mm, a) in &self.terms {
            p.add_term(mm.mul(m), a.clone() * c.clone());
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `subs[i]` for `x_{i+1}`.
    ///
    /// Powers of the substituted polynomials are cached up to the largest
    /// exponent that actually occurs.
    pub fn compose(&self, subs: &[Poly<C>; 4]) -> Poly<C> {
        let mut max_e = [0u32; 4];
        for m in self.terms.keys() {
            for i in 0..4 {
                max_e[i] = max_e[i].max(m.0[i]);
            }
        }
        let mut powers: [Vec<Poly<C>>; 4] = [vec![], vec![], vec![], vec![]];
        for i in 0..4 {
            let mut v = Vec::with_capacity(max_e[i] as usize + 1);
            v.push(Poly::one());
            for k in 1..=max_e[i] {
                let next = &v[k as usize - 1] * &subs[i];
                v.push(next);
            }
            powers[i] = v;
        }
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for i in 0..4 {
                if m.0[i] > 0 {
                    t = &t * &powers[i][m.0[i] as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficient vector over `cols` (in the given column order).
    pub fn coeff_row(&self, cols: &[Monomial]) -> Vec<C> {
        cols.iter().map(|m| self.coefficient_of(m)).collect()
    }

    /// All monomials of `polys`, deduplicated, in descending graded-lex order.
    pub fn monomial_union(polys: &[&Poly<C>]) -> Vec<Monomial> {
        let mut set: Vec<Monomial> = polys
            .iter()
            .flat_map(|p| p.terms.keys().copied())
            .collect();
        set.sort_unstable_by(|a, b| b.cmp(a));
        set.dedup();
        set
    }
}

impl Poly<Rat> {
    /// Evaluate at a rational point.
    pub fn eval(&self, x: &[Rat; 4]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..4 {
                for _ in 0..m.0[i] {
                    t *= x[i].clone();
                }
            }
            acc += t;
        }
        acc
    }

    /// Divide by the graded-lex leading coefficient so it becomes one.
    ///
    /// Panics on the zero polynomial.
    pub fn monic(&self) -> Poly<Rat> {
        let (_, lc) = self.leading().expect("monic of zero polynomial");
        let inv = lc.recip();
        self.scale(&inv)
    }
}

impl<C: Scalar> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Scalar> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.display_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (c.coeff_string(), m.is_one()) {
                (None, true) => write!(f, "1")?,
                (None, false) => write!(f, "{m}")?,
                (Some(s), true) => write!(f, "{s}")?,
                (Some(s), false) => write!(f, "{s}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GroundPoly;

    fn x(i: usize) -> GroundPoly {
        GroundPoly::var(i)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let expect = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(p, expect);
    }

    #[test]
    fn add_zero_is_identity() {
        let p = &(&x(0) * &x(2)) + &GroundPoly::constant(Rat::from_i64(2));
        assert_eq!(&p + &GroundPoly::zero(), p);
    }

    #[test]
    fn coefficient_lookup() {
        // x1^2*x3 + 2*x2
        let p = GroundPoly::from_terms([
            (Monomial([2, 0, 1, 0]), Rat::from_i64(1)),
            (Monomial([0, 1, 0, 0]), Rat::from_i64(2)),
        ]);
        assert_eq!(p.coefficient_of(&Monomial([0, 1, 0, 0])), Rat::from_i64(2));
        assert_eq!(p.coefficient_of(&Monomial([1, 0, 0, 0])), Rat::from_i64(0));
        assert_eq!(
            GroundPoly::zero().coefficient_of(&Monomial::ONE),
            Rat::from_i64(0)
        );
    }

    #[test]
    fn display_canonical() {
        let p = GroundPoly::from_terms([
            (Monomial([2, 0, 1, 0]), Rat::from_i64(1)),
            (Monomial([0, 1, 0, 0]), Rat::from_i64(-2)),
            (Monomial::ONE, Rat::from_i64(1)),
        ]);
        assert_eq!(p.to_string(), "x1^2*x3 - 2*x2 + 1");
    }

    #[test]
    fn compose_substitutes() {
        // (x1^2) with x1 <- x1 + x2
        let p = x(0).pow(2);
        let s = [&x(0) + &x(1), x(1), x(2), x(3)];
        let q = p.compose(&s);
        let expect = (&x(0) + &x(1)).pow(2);
        assert_eq!(q, expect);
    }
}
