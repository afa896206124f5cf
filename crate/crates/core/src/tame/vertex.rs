use std::fmt;

use num_traits::Zero;

use crate::algebra::linalg::{rref, solve_full_rank};
use crate::algebra::{Mat4, Monomial, Poly};
use crate::{GroundMap, GroundPoly, Rat};

use super::element::TameElement;
use super::TameError;

/// Vertex of the square complex given by the scalar class of one component:
/// the representative is scaled so its graded-lex leading coefficient is one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Type1Vertex {
    representative: GroundPoly,
}

impl Type1Vertex {
    pub fn new(p: &GroundPoly) -> Result<Self, TameError> {
        if p.is_zero() {
            return Err(TameError::DegenerateTuple(
                "zero polynomial has no scalar class".into(),
            ));
        }
        Ok(Type1Vertex {
            representative: p.monic(),
        })
    }

    pub fn representative(&self) -> &GroundPoly {
        &self.representative
    }
}

impl fmt::Display for Type1Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// Vertex given by the 2-dimensional span of two components: the stored basis
/// is the reduced echelon basis of the span with respect to graded-lex
/// coordinates, which is unique.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Type2Vertex {
    basis: [GroundPoly; 2],
}

impl Type2Vertex {
    pub fn new(p1: &GroundPoly, p2: &GroundPoly) -> Result<Self, TameError> {
        let polys = echelon_basis(&[p1, p2]);
        if polys.len() != 2 {
            return Err(TameError::DegenerateTuple(format!(
                "pair does not span a plane: {p1}, {p2}"
            )));
        }
        let mut it = polys.into_iter();
        Ok(Type2Vertex {
            basis: [it.next().unwrap(), it.next().unwrap()],
        })
    }

    pub fn basis(&self) -> &[GroundPoly; 2] {
        &self.basis
    }
}

impl fmt::Display for Type2Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.basis[0], self.basis[1])
    }
}

/// Vertex given by the orbit of a full component tuple under the orthogonal
/// group of `q`. There is no canonical orbit representative; equality is
/// decided by [`type3_equal`], and a hash bucket invariant under the orbit is
/// exposed for deduplication.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Type3Vertex {
    representative: GroundMap,
    /// Reduced echelon basis of the span of the four components; invariant
    /// under post-composition by invertible linear maps.
    span_key: Vec<GroundPoly>,
}

impl Type3Vertex {
    pub fn new(map: &GroundMap) -> Result<Self, TameError> {
        let [c1, c2, c3, c4] = &map.components;
        let span_key = echelon_basis(&[c1, c2, c3, c4]);
        if span_key.len() != 4 {
            return Err(TameError::DegenerateTuple(format!(
                "components are linearly dependent: {map}"
            )));
        }
        Ok(Type3Vertex {
            representative: map.clone(),
            span_key,
        })
    }

    pub fn representative(&self) -> &GroundMap {
        &self.representative
    }

    /// Bucket key for deduplication: maximal component degree plus the
    /// canonical basis of the component span. Both are invariant under the
    /// orbit, so equal vertices always share a bucket.
    pub fn bucket_key(&self) -> (u32, &[GroundPoly]) {
        (self.representative.max_degree(), &self.span_key)
    }
}

impl fmt::Display for Type3Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.representative.components;
        write!(f, "[{} | {} | {} | {}]", c[0], c[1], c[2], c[3])
    }
}

/// Scalar-class equality (proportionality).
pub fn type1_equal(u: &Type1Vertex, v: &Type1Vertex) -> bool {
    u == v
}

/// Span equality via the canonical echelon bases.
pub fn type2_equal(u: &Type2Vertex, v: &Type2Vertex) -> bool {
    u == v
}

/// Orbit equality under the orthogonal group of `q`, by solve-then-verify:
/// the linear system `M * u = v` (matching coefficients componentwise) has at
/// most one solution because the components of `u` are independent; the
/// orbits agree iff the solution exists and satisfies `M^T Q M = Q` exactly.
pub fn type3_equal(u: &Type3Vertex, v: &Type3Vertex) -> Result<bool, TameError> {
    let uc = &u.representative.components;
    let vc = &v.representative.components;
    let all: Vec<&GroundPoly> = uc.iter().chain(vc.iter()).collect();
    let cols = Poly::monomial_union(&all);
    // Rows indexed by monomials, columns by the four components of u.
    let a: Vec<Vec<Rat>> = cols
        .iter()
        .map(|m| uc.iter().map(|p| p.coefficient_of(m)).collect())
        .collect();
    let bs: Vec<Vec<Rat>> = (0..4)
        .map(|i| cols.iter().map(|m| vc[i].coefficient_of(m)).collect())
        .collect();
    let Some(sols) = solve_full_rank(&a, &bs) else {
        // Either u is degenerate (excluded at construction) or no linear map
        // sends u to v.
        return Ok(false);
    };
    let mut rows: [[Rat; 4]; 4] = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            rows[i][j] = sols[i][j].clone();
        }
    }
    Ok(Mat4::from_rows(rows).preserves_q())
}

/// Reduced echelon basis for the span of `polys`, as polynomials.
///
/// Coordinates are the union of all monomials in descending graded-lex order,
/// so the result is a canonical form for the span.
pub fn echelon_basis(polys: &[&GroundPoly]) -> Vec<GroundPoly> {
    let cols = Poly::monomial_union(polys);
    let mut rows: Vec<Vec<Rat>> = polys.iter().map(|p| p.coeff_row(&cols)).collect();
    rref(&mut rows);
    rows.into_iter()
        .map(|row| reconstruct(&cols, &row))
        .collect()
}

fn reconstruct(cols: &[Monomial], row: &[Rat]) -> GroundPoly {
    GroundPoly::from_terms(
        cols.iter()
            .zip(row.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c.clone())),
    )
}

/// One of the three kinds of square-complex vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum OrbitVertex {
    T1(Type1Vertex),
    T2(Type2Vertex),
    T3(Type3Vertex),
}

impl OrbitVertex {
    pub fn kind(&self) -> u8 {
        match self {
            OrbitVertex::T1(_) => 1,
            OrbitVertex::T2(_) => 2,
            OrbitVertex::T3(_) => 3,
        }
    }
}

impl fmt::Display for OrbitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitVertex::T1(v) => write!(f, "1:{v}"),
            OrbitVertex::T2(v) => write!(f, "2:{v}"),
            OrbitVertex::T3(v) => write!(f, "3:{v}"),
        }
    }
}

/// The action of a tame element on a vertex: precompose the defining
/// components with the inverse map, then recanonicalize.
pub fn act_on_vertex(t: &TameElement, v: &OrbitVertex) -> Result<OrbitVertex, TameError> {
    let inv = &t.inverse.components;
    Ok(match v {
        OrbitVertex::T1(v) => OrbitVertex::T1(Type1Vertex::new(&v.representative.compose(inv))?),
        OrbitVertex::T2(v) => OrbitVertex::T2(Type2Vertex::new(
            &v.basis[0].compose(inv),
            &v.basis[1].compose(inv),
        )?),
        OrbitVertex::T3(v) => {
            let c = &v.representative.components;
            OrbitVertex::T3(Type3Vertex::new(&GroundMap::new([
                c[0].compose(inv),
                c[1].compose(inv),
                c[2].compose(inv),
                c[3].compose(inv),
            ]))?)
        }
    })
}

/// Vertex equality dispatching on kind.
pub fn vertices_equal(u: &OrbitVertex, v: &OrbitVertex) -> Result<bool, TameError> {
    Ok(match (u, v) {
        (OrbitVertex::T1(a), OrbitVertex::T1(b)) => type1_equal(a, b),
        (OrbitVertex::T2(a), OrbitVertex::T2(b)) => type2_equal(a, b),
        (OrbitVertex::T3(a), OrbitVertex::T3(b)) => type3_equal(a, b)?,
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PolyMap4;
    use crate::tame::element::explicit_g;

    fn x(i: usize) -> GroundPoly {
        GroundPoly::var(i)
    }

    #[test]
    fn type1_proportional() {
        let u = Type1Vertex::new(&x(0).scale(&Rat::from_integer(3.into()))).unwrap();
        let v = Type1Vertex::new(&x(0)).unwrap();
        assert!(type1_equal(&u, &v));
    }

    #[test]
    fn type2_swap_invariance() {
        let u = Type2Vertex::new(&x(0), &x(1)).unwrap();
        let v = Type2Vertex::new(&x(1), &x(0)).unwrap();
        assert!(type2_equal(&u, &v));
        let w = Type2Vertex::new(&(&x(0) + &x(1)), &x(1)).unwrap();
        assert!(type2_equal(&u, &w));
        let z = Type2Vertex::new(&x(0), &x(2)).unwrap();
        assert!(!type2_equal(&u, &z));
    }

    #[test]
    fn type3_full_swap_equal() {
        let u = Type3Vertex::new(&PolyMap4::identity()).unwrap();
        let v = Type3Vertex::new(&PolyMap4::new([x(3), x(2), x(1), x(0)])).unwrap();
        assert!(type3_equal(&u, &v).unwrap());
    }

    #[test]
    fn type3_shear_not_equal() {
        let u = Type3Vertex::new(&PolyMap4::identity()).unwrap();
        let v = Type3Vertex::new(&PolyMap4::new([x(0), x(1), x(2), &x(3) + &x(0)])).unwrap();
        assert!(!type3_equal(&u, &v).unwrap());
    }

    #[test]
    fn degenerate_tuple_rejected() {
        let m = PolyMap4::new([x(0), x(0), x(2), x(3)]);
        assert!(matches!(
            Type3Vertex::new(&m),
            Err(TameError::DegenerateTuple(_))
        ));
    }

    #[test]
    fn identity_action_fixes_vertices() {
        let id = TameElement::identity();
        let v = OrbitVertex::T1(Type1Vertex::new(&x(0)).unwrap());
        assert_eq!(act_on_vertex(&id, &v).unwrap(), v);
    }

    #[test]
    fn g_sends_x1_to_x4() {
        let g = explicit_g();
        let v = OrbitVertex::T1(Type1Vertex::new(&x(0)).unwrap());
        let gv = act_on_vertex(&g, &v).unwrap();
        assert_eq!(gv, OrbitVertex::T1(Type1Vertex::new(&x(3)).unwrap()));
    }

    #[test]
    fn g_squared_on_x1() {
        let g = explicit_g();
        let g2 = g.mul(&g);
        let v = OrbitVertex::T1(Type1Vertex::new(&x(0)).unwrap());
        let g2v = act_on_vertex(&g2, &v).unwrap();
        // first component of g^-2 is x1 - x2*x4^2 - x3*x4^2 + x4^5
        let expect = GroundPoly::from_terms([
            (Monomial([1, 0, 0, 0]), Rat::from_integer(1.into())),
            (Monomial([0, 1, 0, 2]), Rat::from_integer((-1).into())),
            (Monomial([0, 0, 1, 2]), Rat::from_integer((-1).into())),
            (Monomial([0, 0, 0, 5]), Rat::from_integer(1.into())),
        ]);
        assert_eq!(g2v, OrbitVertex::T1(Type1Vertex::new(&expect).unwrap()));
    }
}
