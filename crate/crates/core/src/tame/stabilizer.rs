//! Symbolic computation of the common stabilizer constraints.
//!
//! The pointwise stabilizer of a square is the parametric family
//! `f(a,b,c,d) = (a*x1, b*(x2 + c*x1), b^-1*(x3 + d*x1),
//! a^-1*(x4 + c*x3 + d*x2 + c*d*x1))` with `a, b` invertible. Conjugating by
//! the explicit hyperbolic element `g` and matching coefficients in
//! `g o f - f' o g` yields polynomial constraints on the parameters whose
//! solution set is finite; the successive isolation of monomials reproduces
//! the relations `a^6 = 1`, `b^6 = 1`, `c = d = 0` together with the mirror
//! relations determining `a', b', c', d'`.

use num_traits::{One, Zero};

use crate::algebra::{Monomial, ParamCoeff, PolyMap4, PARAM_NAMES};
use crate::{ParamMap, ParamPoly, Rat};

use super::element::explicit_g;
use super::TameError;

/// Exponent vector by parameter index; see [`PARAM_NAMES`] for the order.
type Rel = [i64; 8];

/// The parametric square-stabilizer family in the parameters `a, b, c, d`
/// (indices 0..4). With `primed = true`, the same family in `a', b', c', d'`.
///
/// The last component carries the cross term `c*d*x1`; without it the family
/// would not preserve the quadratic form exactly.
pub fn stabilizer_family_in(primed: bool) -> ParamMap {
    let o = if primed { 4 } else { 0 };
    let pc = ParamCoeff::param_pow;
    let x = ParamPoly::var;
    let term = |i: usize, c: ParamCoeff| x(i).scale(&c);

    let a = pc(o, 1);
    let a_inv = pc(o, -1);
    let b = pc(o + 1, 1);
    let b_inv = pc(o + 1, -1);
    let c = pc(o + 2, 1);
    let d = pc(o + 3, 1);

    let c1 = term(0, a);
    let c2 = &term(1, b.clone()) + &term(0, b.clone() * c.clone());
    let c3 = &term(2, b_inv.clone()) + &term(0, b_inv * d.clone());
    let c4 = &(&term(3, a_inv.clone()) + &term(2, a_inv.clone() * c.clone()))
        + &(&term(1, a_inv.clone() * d.clone()) + &term(0, a_inv * c * d));
    PolyMap4::new([c1, c2, c3, c4])
}

/// The family in `a, b, c, d`.
pub fn stabilizer_family() -> ParamMap {
    stabilizer_family_in(false)
}

/// Substitute rational values `(a, b, c, d)` into the family. `None` if `a`
/// or `b` is zero.
pub fn substitute_family(vals: &[Rat; 4]) -> Option<crate::GroundMap> {
    let mut all: [Rat; 8] = Default::default();
    all[..4].clone_from_slice(vals);
    all[4] = Rat::one();
    all[5] = Rat::one();
    let fam = stabilizer_family();
    let mut comps = Vec::with_capacity(4);
    for c in &fam.components {
        let mut p = crate::GroundPoly::zero();
        for (m, coeff) in c.terms() {
            p.add_term(*m, coeff.eval(&all)?);
        }
        comps.push(p);
    }
    Some(crate::GroundMap::new([
        comps[0].clone(),
        comps[1].clone(),
        comps[2].clone(),
        comps[3].clone(),
    ]))
}

/// One coefficient equation extracted from `g o f - f' o g = 0`.
#[derive(Clone, Debug)]
pub struct Constraint {
    /// Component index of the map difference, 0-based.
    pub component: usize,
    /// Isolated monomial in `x1..x4`.
    pub monomial: Monomial,
    /// The parameter polynomial that must vanish.
    pub poly: ParamCoeff,
}

/// The full list of coefficient equations plus the successive-isolation
/// summary.
#[derive(Clone, Debug)]
pub struct ConstraintSet {
    /// All nonzero coefficients of `g o f - f' o g`, ordered by component and
    /// then by descending graded-lex monomial (the isolation order).
    pub constraints: Vec<Constraint>,
    /// The reduced summary `a^6 - 1, b^6 - 1, c, d`.
    pub summary: Vec<ParamCoeff>,
    /// Relations determining the mirror parameters: `a*a' - 1`, `b - b'`,
    /// `c'`, `d'`.
    pub mirrors: Vec<ParamCoeff>,
}

impl ConstraintSet {
    /// Constraints violated by the given parameter values. `None` marks an
    /// evaluation that divides by zero (a zero value for a unit parameter).
    pub fn violated_by(&self, vals: &[Rat; 8]) -> Option<Vec<&Constraint>> {
        let mut out = Vec::new();
        for c in &self.constraints {
            if !c.poly.eval(vals)?.is_zero() {
                out.push(c);
            }
        }
        Some(out)
    }

    /// Parameter values of the identity: `a = b = a' = b' = 1`, rest zero.
    pub fn identity_params() -> [Rat; 8] {
        let mut v: [Rat; 8] = Default::default();
        v[0] = Rat::one();
        v[1] = Rat::one();
        v[4] = Rat::one();
        v[5] = Rat::one();
        v
    }
}

/// Derive the common-stabilizer constraints: form `g o f(a,b,c,d)` and
/// `f'(a',b',c',d') o g` over the Laurent parameter ring, subtract, and
/// collect every nonzero coefficient.
pub fn derive_common_stabilizer_constraints() -> Result<ConstraintSet, TameError> {
    let g = lift_to_params(&explicit_g().forward);
    let f = stabilizer_family_in(false);
    let f_primed = stabilizer_family_in(true);

    let lhs = g.compose(&f);
    let rhs = f_primed.compose(&g);

    let mut constraints = Vec::new();
    for i in 0..4 {
        let diff = &lhs.components[i] - &rhs.components[i];
        let mut terms: Vec<(Monomial, ParamCoeff)> =
            diff.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        for (monomial, poly) in terms {
            constraints.push(Constraint {
                component: i,
                monomial,
                poly,
            });
        }
    }

    let summary = successive_isolation(&constraints)?;
    let mirrors = mirror_relations(&constraints)?;
    Ok(ConstraintSet {
        constraints,
        summary,
        mirrors,
    })
}

fn lift_to_params(map: &crate::GroundMap) -> ParamMap {
    let lift = |p: &crate::GroundPoly| {
        ParamPoly::from_terms(
            p.terms()
                .map(|(m, c)| (*m, ParamCoeff::constant(c.clone()))),
        )
    };
    let c = &map.components;
    PolyMap4::new([lift(&c[0]), lift(&c[1]), lift(&c[2]), lift(&c[3])])
}

fn find<'a>(
    constraints: &'a [Constraint],
    component: usize,
    monomial: Monomial,
) -> Result<&'a Constraint, TameError> {
    constraints
        .iter()
        .find(|c| c.component == component && c.monomial == monomial)
        .ok_or_else(|| {
            TameError::ConstraintShape(format!(
                "missing expected constraint at component {} monomial {}",
                component + 1,
                monomial
            ))
        })
}

/// Interpret a two-term constraint `u*m1 - u*m2` in unit parameters as the
/// multiplicative relation `m1 = m2`, returned as the exponent vector of
/// `m1 / m2`.
fn as_unit_relation(c: &Constraint) -> Result<Rel, TameError> {
    let terms: Vec<_> = c.poly.terms().collect();
    if terms.len() != 2 {
        return Err(TameError::ConstraintShape(format!(
            "expected a two-term unit relation at component {} monomial {}, got {}",
            c.component + 1,
            c.monomial,
            c.poly
        )));
    }
    let (e1, c1) = terms[0];
    let (e2, c2) = terms[1];
    let unit_only = |e: &[i32; 8]| e[2] == 0 && e[3] == 0 && e[6] == 0 && e[7] == 0;
    if !unit_only(e1) || !unit_only(e2) || c1.clone() + c2.clone() != Rat::zero() {
        return Err(TameError::ConstraintShape(format!(
            "not a unit monomial difference: {}",
            c.poly
        )));
    }
    // Orient so the positive-coefficient monomial is the numerator.
    let (num, den) = if c1 > &Rat::zero() { (e1, e2) } else { (e2, e1) };
    let mut rel = [0i64; 8];
    for i in 0..8 {
        rel[i] = num[i] as i64 - den[i] as i64;
    }
    Ok(rel)
}

/// Interpret a single-term constraint `unit * v` as the vanishing of the
/// non-unit parameter `v`.
fn as_vanishing_param(c: &Constraint) -> Result<usize, TameError> {
    let terms: Vec<_> = c.poly.terms().collect();
    if terms.len() == 1 {
        let (e, _) = terms[0];
        let non_unit: Vec<usize> = [2usize, 3, 6, 7]
            .into_iter()
            .filter(|&i| e[i] != 0)
            .collect();
        if let [idx] = non_unit[..] {
            if e[idx] == 1 {
                return Ok(idx);
            }
        }
    }
    Err(TameError::ConstraintShape(format!(
        "expected unit * parameter at component {} monomial {}, got {}",
        c.component + 1,
        c.monomial,
        c.poly
    )))
}

/// Turn a multiplicative relation `prod param^rel = 1` into the polynomial
/// `m+ - m-`, normalizing the sign so the leading exponent is positive.
fn relation_poly(rel: &Rel) -> ParamCoeff {
    let mut rel = *rel;
    if let Some(first) = rel.iter().find(|&&x| x != 0) {
        if *first < 0 {
            for x in rel.iter_mut() {
                *x = -*x;
            }
        }
    }
    let mut pos = [0i32; 8];
    let mut neg = [0i32; 8];
    for i in 0..8 {
        if rel[i] > 0 {
            pos[i] = rel[i] as i32;
        } else {
            neg[i] = (-rel[i]) as i32;
        }
    }
    ParamCoeff::monomial(pos, Rat::one()) - ParamCoeff::monomial(neg, Rat::one())
}

fn sub(a: &Rel, b: &Rel) -> Rel {
    let mut out = [0i64; 8];
    for i in 0..8 {
        out[i] = a[i] - b[i];
    }
    out
}

/// Follow the isolation order of the first component: the `x1^5` coefficient
/// pins `a'`, the `x1^2*x2` and `x1^2*x3` coefficients then force `a^6 = 1`
/// and (raising `b = a^3` to the sixth power) `b^6 = 1`, and the linear
/// monomials force `c = d = 0`.
fn successive_isolation(constraints: &[Constraint]) -> Result<Vec<ParamCoeff>, TameError> {
    let m_x1_5 = Monomial([5, 0, 0, 0]);
    let m_x1x1x2 = Monomial([2, 1, 0, 0]);
    let m_x1x1x3 = Monomial([2, 0, 1, 0]);
    let m_x3 = Monomial([0, 0, 1, 0]);
    let m_x2 = Monomial([0, 1, 0, 0]);

    let r5 = as_unit_relation(find(constraints, 0, m_x1_5)?)?; // a^5 = a'
    let r2 = as_unit_relation(find(constraints, 0, m_x1x1x2)?)?; // a^2 b = a'
    let r3 = as_unit_relation(find(constraints, 0, m_x1x1x3)?)?; // a^2 b^-1 = a'

    // Eliminate a': b = a^3 and b^-1 = a^3.
    let w1 = sub(&r2, &r5);
    let w2 = sub(&r3, &r5);
    let mut a_rel = [0i64; 8];
    for i in 0..8 {
        a_rel[i] = w1[i] + w2[i];
    }
    // a_rel must mention only a.
    if a_rel.iter().enumerate().any(|(i, &x)| i != 0 && x != 0) || a_rel[0] == 0 {
        return Err(TameError::ConstraintShape(format!(
            "isolation did not reduce to a relation in a alone: {a_rel:?}"
        )));
    }
    let a_order = a_rel[0].unsigned_abs() as i64;

    // b relation: raise b = a^3 to the power a_order and reduce the a part.
    let mut b_rel = [0i64; 8];
    for i in 0..8 {
        b_rel[i] = w1[i] * a_order;
    }
    if b_rel[0] % a_order != 0 {
        return Err(TameError::ConstraintShape(format!(
            "cannot reduce a-exponent {} by a^{} = 1",
            b_rel[0], a_order
        )));
    }
    b_rel[0] = 0;
    if b_rel.iter().enumerate().any(|(i, &x)| i != 1 && x != 0) || b_rel[1] == 0 {
        return Err(TameError::ConstraintShape(format!(
            "isolation did not reduce to a relation in b alone: {b_rel:?}"
        )));
    }

    let c_idx = as_vanishing_param(find(constraints, 0, m_x3)?)?;
    let d_idx = as_vanishing_param(find(constraints, 0, m_x2)?)?;
    if c_idx != 2 || d_idx != 3 {
        return Err(TameError::ConstraintShape(format!(
            "linear monomials isolated {} and {} instead of c and d",
            PARAM_NAMES[c_idx], PARAM_NAMES[d_idx]
        )));
    }

    Ok(vec![
        relation_poly(&a_rel),
        relation_poly(&b_rel),
        ParamCoeff::param(2),
        ParamCoeff::param(3),
    ])
}

/// Mirror relations for the primed parameters: `a' = a^-1` from the `x4`
/// coefficient of the first component, `b' = b` from the `x2` coefficient of
/// the second, and `c' = d' = 0` from the `x3` and `x2` coefficients of the
/// fourth.
fn mirror_relations(constraints: &[Constraint]) -> Result<Vec<ParamCoeff>, TameError> {
    let m_x4 = Monomial([0, 0, 0, 1]);
    let m_x3 = Monomial([0, 0, 1, 0]);
    let m_x2 = Monomial([0, 1, 0, 0]);

    let a_mirror = as_unit_relation(find(constraints, 0, m_x4)?)?; // a^-1 = a'
    let b_mirror = as_unit_relation(find(constraints, 1, m_x2)?)?; // b = b'
    let cp = as_vanishing_param(find(constraints, 3, m_x3)?)?;
    let dp = as_vanishing_param(find(constraints, 3, m_x2)?)?;
    if cp != 6 || dp != 7 {
        return Err(TameError::ConstraintShape(format!(
            "mirror linear monomials isolated {} and {} instead of c' and d'",
            PARAM_NAMES[cp], PARAM_NAMES[dp]
        )));
    }
    Ok(vec![
        relation_poly(&a_mirror),
        relation_poly(&b_mirror),
        ParamCoeff::param(6),
        ParamCoeff::param(7),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quadratic_form;
    use crate::GroundMap;
    use crate::algebra::Scalar;

    #[test]
    fn family_at_identity_params() {
        let one = Rat::one();
        let m = substitute_family(&[one.clone(), one, Rat::zero(), Rat::zero()]).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn family_at_c_one() {
        // a=1, b=1, c=1, d=0 -> (x1, x2+x1, x3, x4+x3)
        let one = Rat::one();
        let m = substitute_family(&[one.clone(), one.clone(), one, Rat::zero()]).unwrap();
        let x = crate::GroundPoly::var;
        let expect = GroundMap::new([x(0), &x(1) + &x(0), x(2), &x(3) + &x(2)]);
        assert_eq!(m, expect);
    }

    #[test]
    fn family_pullback_is_q() {
        let fam = stabilizer_family();
        assert_eq!(fam.quadratic_form_pullback(), quadratic_form());
    }

    #[test]
    fn summary_matches_expected_strings() {
        let set = derive_common_stabilizer_constraints().unwrap();
        let strings: Vec<String> = set.summary.iter().map(|p| p.to_string()).collect();
        assert_eq!(strings, vec!["a^6 - 1", "b^6 - 1", "c", "d"]);
        let mirrors: Vec<String> = set.mirrors.iter().map(|p| p.to_string()).collect();
        assert_eq!(mirrors, vec!["a*a' - 1", "b - b'", "c'", "d'"]);
    }

    #[test]
    fn identity_satisfies_all_constraints() {
        let set = derive_common_stabilizer_constraints().unwrap();
        let violated = set
            .violated_by(&ConstraintSet::identity_params())
            .unwrap();
        assert!(violated.is_empty());
    }

    #[test]
    fn a_two_violates() {
        let set = derive_common_stabilizer_constraints().unwrap();
        let mut vals = ConstraintSet::identity_params();
        vals[0] = Rat::from_i64(2);
        let violated = set.violated_by(&vals).unwrap();
        assert!(!violated.is_empty());
        // the x1^5 equation a^5 - a' is among the violations
        assert!(violated
            .iter()
            .any(|c| c.component == 0 && c.monomial == Monomial([5, 0, 0, 0])));
    }
}
