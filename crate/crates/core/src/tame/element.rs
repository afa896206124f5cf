use std::fmt;

use crate::algebra::{quadratic_form, Monomial, PolyMap4};
use crate::{GroundMap, GroundPoly, Rat};

use super::generator::{p_x1_squared, swap_middle, swap_outer, Generator};

/// One letter of a generator word: a generator together with an inversion
/// flag.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    fn maps(&self) -> (GroundMap, GroundMap) {
        let (f, i) = self.generator.maps();
        if self.inverse {
            (i, f)
        } else {
            (f, i)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// An element of the tame automorphism group: a generator word together with
/// its expanded forward and inverse polynomial maps.
///
/// Invariants maintained by construction: `forward o inverse` and
/// `inverse o forward` are the identity, and the pullback of
/// `q = x1*x4 - x2*x3` along `forward` is `q`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TameElement {
    pub word: Vec<Letter>,
    pub forward: GroundMap,
    pub inverse: GroundMap,
}

impl TameElement {
    pub fn identity() -> Self {
        TameElement {
            word: vec![],
            forward: PolyMap4::identity(),
            inverse: PolyMap4::identity(),
        }
    }

    /// Compose the letters of `word` in order (the last letter acts first):
    /// `word = [w1, w2, w3]` yields the element `w1 o w2 o w3`.
    pub fn from_word(word: Vec<Letter>) -> Self {
        let mut forward = PolyMap4::identity();
        let mut inverse = PolyMap4::identity();
        for letter in &word {
            let (f, i) = letter.maps();
            forward = forward.compose(&f);
            inverse = i.compose(&inverse);
        }
        let el = TameElement {
            word,
            forward,
            inverse,
        };
        debug_assert!(el.forward.quadratic_form_pullback() == quadratic_form());
        el
    }

    pub fn from_generator(g: Generator) -> Self {
        TameElement::from_word(vec![Letter::new(g)])
    }

    /// Group product `self * other` (apply `other` first).
    pub fn mul(&self, other: &TameElement) -> TameElement {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        TameElement {
            word,
            forward: self.forward.compose(&other.forward),
            inverse: other.inverse.compose(&self.inverse),
        }
    }

    pub fn inverse_element(&self) -> TameElement {
        let word = self
            .word
            .iter()
            .rev()
            .map(|l| Letter {
                generator: l.generator.clone(),
                inverse: !l.inverse,
            })
            .collect();
        TameElement {
            word,
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }

    /// Render the word, or `id` for the empty word.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "id".to_string()
        } else {
            self.word
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" * ")
        }
    }
}

impl fmt::Display for TameElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.forward)
    }
}

/// The explicit hyperbolic element
/// `g = (x4 + x3*x1^2 + x2*x1^2 + x1^5, x2 + x1^3, x3 + x1^3, x1)`,
/// built as the generator word `swap_outer o m2 o m1` where `m1` is the
/// elementary twist by `x1^2` and `m2` its conjugate by the middle swap.
///
/// The expanded forward map is checked against the displayed formula, and the
/// stored inverse against the solved triangular system.
pub fn explicit_g() -> TameElement {
    let m1 = Generator::elementary(p_x1_squared()).expect("x1^2 is a valid twist");
    let s23 = Generator::orthogonal(swap_middle()).expect("middle swap preserves q");
    let so = Generator::orthogonal(swap_outer()).expect("outer swap preserves q");
    let g = TameElement::from_word(vec![
        Letter::new(so),
        Letter::new(s23.clone()),
        Letter::new(m1.clone()),
        Letter::new(s23),
        Letter::new(m1),
    ]);
    debug_assert_eq!(g.forward, explicit_g_formula());
    debug_assert_eq!(g.inverse, explicit_g_inverse_formula());
    g
}

/// The displayed formula for `g`, term by term.
pub fn explicit_g_formula() -> GroundMap {
    let one = || Rat::from_integer(1.into());
    let c1 = GroundPoly::from_terms([
        (Monomial([0, 0, 0, 1]), one()),
        (Monomial([2, 0, 1, 0]), one()),
        (Monomial([2, 1, 0, 0]), one()),
        (Monomial([5, 0, 0, 0]), one()),
    ]);
    let c2 = GroundPoly::from_terms([
        (Monomial([0, 1, 0, 0]), one()),
        (Monomial([3, 0, 0, 0]), one()),
    ]);
    let c3 = GroundPoly::from_terms([
        (Monomial([0, 0, 1, 0]), one()),
        (Monomial([3, 0, 0, 0]), one()),
    ]);
    let c4 = GroundPoly::var(0);
    PolyMap4::new([c1, c2, c3, c4])
}

/// The inverse of `g`: `(x4, x2 - x4^3, x3 - x4^3, x1 - x2*x4^2 - x3*x4^2 + x4^5)`.
pub fn explicit_g_inverse_formula() -> GroundMap {
    let one = || Rat::from_integer(1.into());
    let neg = || -Rat::from_integer(1.into());
    let c1 = GroundPoly::var(3);
    let c2 = GroundPoly::from_terms([
        (Monomial([0, 1, 0, 0]), one()),
        (Monomial([0, 0, 0, 3]), neg()),
    ]);
    let c3 = GroundPoly::from_terms([
        (Monomial([0, 0, 1, 0]), one()),
        (Monomial([0, 0, 0, 3]), neg()),
    ]);
    let c4 = GroundPoly::from_terms([
        (Monomial([1, 0, 0, 0]), one()),
        (Monomial([0, 1, 0, 2]), neg()),
        (Monomial([0, 0, 1, 2]), neg()),
        (Monomial([0, 0, 0, 5]), one()),
    ]);
    PolyMap4::new([c1, c2, c3, c4])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn empty_word_is_identity() {
        let e = TameElement::from_word(vec![]);
        assert!(e.is_identity());
        assert_eq!(e.word_string(), "id");
    }

    #[test]
    fn letter_times_inverse_is_identity() {
        let g = Generator::elementary(p_x1_squared()).unwrap();
        let e = TameElement::from_word(vec![Letter::new(g.clone()), Letter::inv(g)]);
        assert!(e.is_identity());
    }

    #[test]
    fn explicit_g_matches_formula() {
        let g = explicit_g();
        assert_eq!(g.forward, explicit_g_formula());
        assert_eq!(g.inverse, explicit_g_inverse_formula());
    }

    #[test]
    fn explicit_g_inverse_identity() {
        let g = explicit_g();
        assert!(g.forward.compose(&g.inverse).is_identity());
        assert!(g.inverse.compose(&g.forward).is_identity());
    }

    #[test]
    fn explicit_g_preserves_q() {
        let g = explicit_g();
        assert_eq!(g.forward.quadratic_form_pullback(), quadratic_form());
        assert_eq!(g.inverse.quadratic_form_pullback(), quadratic_form());
    }

    #[test]
    fn explicit_g_at_unit_point() {
        let g = explicit_g();
        let one = Rat::from_integer(1.into());
        let pt = [one.clone(), Rat::zero(), Rat::zero(), Rat::zero()];
        let image: Vec<Rat> = g.forward.components.iter().map(|c| c.eval(&pt)).collect();
        assert!(image.iter().all(|v| *v == one));
    }
}
