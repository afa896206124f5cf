use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{GeodesicDag, Metric};
use crate::tame::vertex::{OrbitVertex, Type1Vertex};
use crate::tame::{act_on_vertex, TameElement};
use crate::GroundPoly;

use super::{PortionError, TamePortion};

/// Result of checking that the combinatorial interval between `v` and `g^2 v`
/// is a 4x4 grid of squares with `g v` at the center.
///
/// All statements are relative to the enumerated portion: a larger portion
/// could in principle add geodesics, so the enumeration bound used is part of
/// the report.
#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub base_vertex: String,
    pub gv: String,
    pub g2v: String,
    pub interval_vertices: usize,
    pub interval_edges: usize,
    pub interval_squares: usize,
    pub distance_v_g2v: u32,
    pub distance_v_gv: u32,
    pub distance_gv_g2v: u32,
    pub corner_degrees: (usize, usize),
    pub center_degree: usize,
    /// Number of interval vertices at each distance from `v`.
    pub distance_profile: Vec<usize>,
    pub is_grid_4x4: bool,
    pub enumeration_bound: Option<usize>,
    pub note: String,
}

/// Recover the grid between the base vertex `[x1]` and its image under
/// `g^2` as the combinatorial interval inside the portion, and verify the
/// expected 4x4 shape: 25 vertices, 40 edges, 16 squares, corner-to-corner
/// distance 8, and the `g`-translate of the base vertex at the center.
pub fn verify_grid(portion: &TamePortion, g: &TameElement) -> Result<GridReport, PortionError> {
    let base = OrbitVertex::T1(Type1Vertex::new(&GroundPoly::var(0))?);
    let gv = act_on_vertex(g, &base)?;
    let g2v = act_on_vertex(g, &gv)?;

    let locate = |v: &OrbitVertex, name: &str| -> Result<usize, PortionError> {
        portion
            .find_vertex(v)?
            .ok_or_else(|| PortionError::MissingVertex(format!("{name} = {v}")))
    };
    let v_id = locate(&base, "v")?;
    let gv_id = locate(&gv, "g v")?;
    let g2v_id = locate(&g2v, "g^2 v")?;

    let c = &portion.complex;
    let dag = GeodesicDag::new(c, v_id, g2v_id)?;
    let interval = dag.interval();

    let in_interval = |x: usize| interval.contains(&x);
    let interval_edges: Vec<(usize, usize)> = c
        .edges()
        .filter(|&(a, b)| in_interval(a) && in_interval(b))
        .collect();
    let interval_squares: Vec<&Vec<usize>> = c
        .polygons()
        .iter()
        .filter(|p| p.iter().all(|&x| in_interval(x)))
        .collect();

    let metric = Metric::new(c);
    let degree_within = |x: usize| {
        c.neighbors(x)
            .iter()
            .filter(|&&y| in_interval(y))
            .count()
    };

    let distance_v_g2v = dag.distance;
    let distance_v_gv = metric.df(v_id, gv_id);
    let distance_gv_g2v = metric.df(gv_id, g2v_id);

    let mut distance_profile = vec![0usize; distance_v_g2v as usize + 1];
    for &x in &interval {
        distance_profile[metric.df(v_id, x) as usize] += 1;
    }

    let gv_in_interval = interval.contains(&gv_id);
    let is_grid_4x4 = interval.len() == 25
        && interval_edges.len() == 40
        && interval_squares.len() == 16
        && distance_v_g2v == 8
        && gv_in_interval
        && distance_v_gv == 4
        && distance_gv_g2v == 4
        && degree_within(v_id) == 2
        && degree_within(g2v_id) == 2
        && degree_within(gv_id) == 4
        && distance_profile == vec![1, 2, 3, 4, 5, 4, 3, 2, 1];

    Ok(GridReport {
        base_vertex: c.label(v_id).to_string(),
        gv: c.label(gv_id).to_string(),
        g2v: c.label(g2v_id).to_string(),
        interval_vertices: interval.len(),
        interval_edges: interval_edges.len(),
        interval_squares: interval_squares.len(),
        distance_v_g2v,
        distance_v_gv,
        distance_gv_g2v,
        corner_degrees: (degree_within(v_id), degree_within(g2v_id)),
        center_degree: degree_within(gv_id),
        distance_profile,
        is_grid_4x4,
        enumeration_bound: portion.enumeration_bound,
        note: "interval computed relative to the enumerated portion; base vertex taken as [x1]"
            .into(),
    })
}

/// The interval vertex set between the two grid corners (for inspection).
pub fn grid_interval(
    portion: &TamePortion,
    g: &TameElement,
) -> Result<BTreeSet<usize>, PortionError> {
    let base = OrbitVertex::T1(Type1Vertex::new(&GroundPoly::var(0))?);
    let gv = act_on_vertex(g, &base)?;
    let g2v = act_on_vertex(g, &gv)?;
    let v_id = portion
        .find_vertex(&base)?
        .ok_or_else(|| PortionError::MissingVertex("v".into()))?;
    let g2v_id = portion
        .find_vertex(&g2v)?
        .ok_or_else(|| PortionError::MissingVertex("g^2 v".into()))?;
    Ok(GeodesicDag::new(&portion.complex, v_id, g2v_id)?.interval())
}
