use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Mat4;
use crate::complex::PolygonalComplex;
use crate::tame::vertex::{type3_equal, OrbitVertex, Type1Vertex, Type2Vertex, Type3Vertex};
use crate::tame::{monomial_orthogonal_group, Generator, Letter, TameElement};
use crate::GroundMap;

use super::PortionError;

/// Enumeration bounds for portion construction.
#[derive(Clone, Copy, Debug)]
pub struct BallCaps {
    pub max_word_length: usize,
    pub vertex_cap: usize,
    pub element_cap: usize,
}

impl Default for BallCaps {
    fn default() -> Self {
        BallCaps {
            max_word_length: 4,
            vertex_cap: 20_000,
            element_cap: 100_000,
        }
    }
}

/// A finite portion of the square complex of the tame group.
///
/// Each generating element `f = (f1, f2, f3, f4)` contributes the square with
/// vertex cycle `[f1], [f1,f2], [f], [f1,f3]`; vertices are merged by orbit
/// equality and edges are induced by the squares.
#[derive(Debug)]
pub struct TamePortion {
    pub complex: PolygonalComplex,
    pub vertex_data: Vec<OrbitVertex>,
    pub elements: Vec<TameElement>,
    /// For each element, the vertex ids of its square in cycle order
    /// `([f1], [f1,f2], [f], [f1,f3])`.
    pub squares: Vec<[usize; 4]>,
    /// Word length used when the portion came from a ball enumeration.
    pub enumeration_bound: Option<usize>,
}

/// Vertex interner: canonical forms for types 1 and 2, invariant buckets with
/// pairwise equality for type 3.
struct Interner {
    t1: BTreeMap<crate::GroundPoly, usize>,
    t2: BTreeMap<[crate::GroundPoly; 2], usize>,
    t3_buckets: BTreeMap<(u32, Vec<crate::GroundPoly>), Vec<usize>>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            t1: BTreeMap::new(),
            t2: BTreeMap::new(),
            t3_buckets: BTreeMap::new(),
        }
    }

    fn intern(
        &mut self,
        v: OrbitVertex,
        complex: &mut PolygonalComplex,
        data: &mut Vec<OrbitVertex>,
    ) -> Result<usize, PortionError> {
        let id = match &v {
            OrbitVertex::T1(t) => {
                if let Some(&id) = self.t1.get(t.representative()) {
                    return Ok(id);
                }
                let id = complex.add_vertex(v.to_string());
                self.t1.insert(t.representative().clone(), id);
                id
            }
            OrbitVertex::T2(t) => {
                if let Some(&id) = self.t2.get(t.basis()) {
                    return Ok(id);
                }
                let id = complex.add_vertex(v.to_string());
                self.t2.insert(t.basis().clone(), id);
                id
            }
            OrbitVertex::T3(t) => {
                let key = {
                    let (deg, span) = t.bucket_key();
                    (deg, span.to_vec())
                };
                let bucket = self.t3_buckets.entry(key).or_default();
                for &cand in bucket.iter() {
                    let OrbitVertex::T3(existing) = &data[cand] else {
                        unreachable!("type-3 bucket holds type-3 vertices");
                    };
                    if type3_equal(existing, t)? {
                        return Ok(cand);
                    }
                }
                let id = complex.add_vertex(v.to_string());
                bucket.push(id);
                id
            }
        };
        data.push(v);
        debug_assert_eq!(data.len(), id + 1);
        Ok(id)
    }
}

/// Build a portion from an explicit element list: one square per element,
/// vertices merged by orbit equality, edges induced.
pub fn build_from_elements(
    elems: &[TameElement],
    caps: &BallCaps,
) -> Result<TamePortion, PortionError> {
    let mut complex = PolygonalComplex::new();
    let mut vertex_data: Vec<OrbitVertex> = Vec::new();
    let mut interner = Interner::new();
    let mut squares = Vec::with_capacity(elems.len());
    let mut square_set: BTreeMap<Vec<usize>, ()> = BTreeMap::new();

    for el in elems {
        let [f1, f2, f3, _f4] = &el.forward.components;
        let t1 = OrbitVertex::T1(Type1Vertex::new(f1)?);
        let t2a = OrbitVertex::T2(Type2Vertex::new(f1, f2)?);
        let t3 = OrbitVertex::T3(Type3Vertex::new(&el.forward)?);
        let t2b = OrbitVertex::T2(Type2Vertex::new(f1, f3)?);
        let a = interner.intern(t1, &mut complex, &mut vertex_data)?;
        let b = interner.intern(t2a, &mut complex, &mut vertex_data)?;
        let c = interner.intern(t3, &mut complex, &mut vertex_data)?;
        let d = interner.intern(t2b, &mut complex, &mut vertex_data)?;
        if complex.vertex_count() > caps.vertex_cap {
            return Err(PortionError::Budget {
                what: "vertices".into(),
                cap: caps.vertex_cap,
            });
        }
        squares.push([a, b, c, d]);
        let mut key = vec![a, b, c, d];
        let min_pos = key
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        key.rotate_left(min_pos);
        if key[1] > key[3] {
            key[1..].reverse();
        }
        if square_set.insert(key, ()).is_none() {
            complex.add_polygon(vec![a, b, c, d]);
        }
    }

    Ok(TamePortion {
        complex,
        vertex_data,
        elements: elems.to_vec(),
        squares,
        enumeration_bound: None,
    })
}

/// Four monomial orthogonal maps whose first rows pick out each coordinate:
/// composing an element with these on the left re-anchors its square at each
/// of its four components.
pub fn frame_representatives() -> Vec<Mat4> {
    let frames = [
        Mat4::identity(),
        // (x2, x1, -x4, -x3)
        Mat4::from_i64([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]),
        // (x3, x1, -x4, -x2)
        Mat4::from_i64([[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, -1, 0, 0]]),
        // (x4, x3, x2, x1)
        Mat4::from_i64([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
    ];
    for f in &frames {
        debug_assert!(f.preserves_q());
    }
    frames.to_vec()
}

/// Expand a generator list into the enumeration alphabet: the given elements
/// and their inverses, every letter of their words (with inverses), and the
/// full monomial subgroup of the orthogonal group.
fn alphabet(gens: &[TameElement]) -> Vec<TameElement> {
    let mut out: BTreeMap<GroundMap, TameElement> = BTreeMap::new();
    let mut push = |el: TameElement| {
        out.entry(el.forward.clone()).or_insert(el);
    };
    for g in gens {
        push(g.clone());
        push(g.inverse_element());
        for letter in &g.word {
            let el = TameElement::from_word(vec![letter.clone()]);
            push(el.inverse_element());
            push(el);
        }
    }
    for m in monomial_orthogonal_group() {
        let gen = Generator::orthogonal(m).expect("enumerated matrices preserve q");
        push(TameElement::from_word(vec![Letter::new(gen)]));
    }
    out.into_values().collect()
}

/// Enumerate the ball of the given radius in the word metric over the
/// expanded alphabet, close the element list under the four frame
/// representatives, and build the portion.
///
/// The alphabet contains, besides the supplied elements and their inverses,
/// the constituent letters of their generator words and the finite monomial
/// subgroup of the orthogonal group: linear moves cost a letter like any
/// other, and the frame closure only re-anchors squares around type-3
/// vertices already reached.
pub fn enumerate_ball(
    gens: &[TameElement],
    max_word_length: usize,
    caps: &BallCaps,
) -> Result<TamePortion, PortionError> {
    if max_word_length > caps.max_word_length {
        return Err(PortionError::Budget {
            what: format!(
                "word length {max_word_length} exceeds the configured bound"
            ),
            cap: caps.max_word_length,
        });
    }
    let letters = alphabet(gens);
    let mut elements: Vec<TameElement> = vec![TameElement::identity()];
    let mut seen: BTreeMap<GroundMap, ()> = BTreeMap::new();
    seen.insert(elements[0].forward.clone(), ());
    let mut frontier: Vec<usize> = vec![0];
    for _level in 0..max_word_length {
        let mut next = Vec::new();
        for &idx in &frontier {
            let base = elements[idx].clone();
            for letter in &letters {
                let product = base.mul(letter);
                if seen.insert(product.forward.clone(), ()).is_none() {
                    next.push(elements.len());
                    elements.push(product);
                    if elements.len() > caps.element_cap {
                        return Err(PortionError::Budget {
                            what: "elements".into(),
                            cap: caps.element_cap,
                        });
                    }
                }
            }
        }
        frontier = next;
    }

    // frame closure: re-anchor each element's square at all four components
    let frames: Vec<TameElement> = frame_representatives()
        .into_iter()
        .map(|m| {
            TameElement::from_word(vec![Letter::new(
                Generator::orthogonal(m).expect("frame preserves q"),
            )])
        })
        .collect();
    let mut closed = elements.clone();
    for el in &elements {
        for frame in &frames[1..] {
            let anchored = frame.mul(el);
            if seen.insert(anchored.forward.clone(), ()).is_none() {
                closed.push(anchored);
                if closed.len() > caps.element_cap {
                    return Err(PortionError::Budget {
                        what: "elements".into(),
                        cap: caps.element_cap,
                    });
                }
            }
        }
    }

    let mut portion = build_from_elements(&closed, caps)?;
    portion.enumeration_bound = Some(max_word_length);
    Ok(portion)
}

impl TamePortion {
    /// Locate a vertex by orbit equality.
    pub fn find_vertex(&self, v: &OrbitVertex) -> Result<Option<usize>, PortionError> {
        for (i, u) in self.vertex_data.iter().enumerate() {
            if crate::tame::vertices_equal(u, v)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Exhaustively confirm that no two distinct stored vertices are equal
    /// under the orbit equality predicates.
    pub fn check_dedup(&self) -> Result<(), String> {
        for i in 0..self.vertex_data.len() {
            for j in (i + 1)..self.vertex_data.len() {
                match crate::tame::vertices_equal(&self.vertex_data[i], &self.vertex_data[j]) {
                    Ok(false) => {}
                    Ok(true) => {
                        return Err(format!(
                            "vertices {} and {} are equal: {} vs {}",
                            i, j, self.vertex_data[i], self.vertex_data[j]
                        ));
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> PortionJson {
        PortionJson {
            vertices: self
                .vertex_data
                .iter()
                .enumerate()
                .map(|(id, v)| PortionVertexJson {
                    id,
                    kind: v.kind(),
                    label: v.to_string(),
                })
                .collect(),
            edges: self.complex.edges().map(|(u, v)| [u, v]).collect(),
            squares: self.complex.polygons().to_vec(),
            elements: self.elements.iter().map(|e| e.word_string()).collect(),
            enumeration_bound: self.enumeration_bound,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PortionVertexJson {
    pub id: usize,
    pub kind: u8,
    pub label: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PortionJson {
    pub vertices: Vec<PortionVertexJson>,
    pub edges: Vec<[usize; 2]>,
    pub squares: Vec<Vec<usize>>,
    pub elements: Vec<String>,
    pub enumeration_bound: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tame::explicit_g;

    #[test]
    fn identity_portion_is_one_square() {
        let p = build_from_elements(&[TameElement::identity()], &BallCaps::default()).unwrap();
        assert_eq!(p.complex.vertex_count(), 4);
        assert_eq!(p.complex.edge_count(), 4);
        assert_eq!(p.complex.polygons().len(), 1);
        let labels: Vec<&str> = (0..4).map(|i| p.complex.label(i)).collect();
        assert!(labels.contains(&"1:[x1]"));
        assert!(labels.contains(&"2:[x1 | x2]"));
        assert!(labels.contains(&"2:[x1 | x3]"));
    }

    #[test]
    fn middle_swap_merges_into_same_square() {
        // identity and the (x2 <-> x3)-swap give the same square with the two
        // span vertices exchanged
        let swap = TameElement::from_word(vec![Letter::new(
            Generator::orthogonal(crate::tame::generator::swap_middle()).unwrap(),
        )]);
        let p = build_from_elements(
            &[TameElement::identity(), swap],
            &BallCaps::default(),
        )
        .unwrap();
        assert_eq!(p.complex.vertex_count(), 4);
        assert_eq!(p.complex.polygons().len(), 1);
    }

    #[test]
    fn identity_and_g_share_nothing() {
        let p = build_from_elements(
            &[TameElement::identity(), explicit_g()],
            &BallCaps::default(),
        )
        .unwrap();
        assert_eq!(p.complex.vertex_count(), 8);
        assert_eq!(p.complex.polygons().len(), 2);
        p.check_dedup().unwrap();
    }

    #[test]
    fn ball_growth_is_monotone() {
        let g = explicit_g();
        let caps = BallCaps::default();
        let p1 = enumerate_ball(&[g.clone()], 1, &caps).unwrap();
        let p2 = enumerate_ball(&[g], 2, &caps).unwrap();
        // every vertex label of the smaller portion appears in the larger one
        for v in 0..p1.complex.vertex_count() {
            let label = p1.complex.label(v);
            assert!(
                p2.complex.vertex_by_label(label).is_some(),
                "missing {label}"
            );
        }
        assert!(p2.complex.polygons().len() >= p1.complex.polygons().len());
    }

    #[test]
    fn empty_generators_still_build_identity_square() {
        let p = enumerate_ball(&[], 1, &BallCaps::default()).unwrap();
        // the monomial subgroup alone: every square is anchored at the
        // identity type-3 vertex
        assert!(p
            .find_vertex(&OrbitVertex::T3(
                Type3Vertex::new(&crate::GroundMap::identity()).unwrap()
            ))
            .unwrap()
            .is_some());
        assert_eq!(
            p.vertex_data.iter().filter(|v| v.kind() == 3).count(),
            1,
            "all monomial elements share the identity type-3 class"
        );
    }

    #[test]
    fn dedup_spot_check_on_small_ball() {
        let p = enumerate_ball(&[explicit_g()], 1, &BallCaps::default()).unwrap();
        p.check_dedup().unwrap();
    }

    #[test]
    fn budget_trips() {
        let caps = BallCaps {
            max_word_length: 4,
            vertex_cap: 3,
            element_cap: 100_000,
        };
        let err = build_from_elements(&[TameElement::identity()], &caps).unwrap_err();
        assert!(matches!(err, PortionError::Budget { .. }));
    }
}
