use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{
    bfs_from_avoiding, AngleTables, Ext, GeodesicDag, Metric, PolygonalComplex, UNREACHED,
};

use super::Violation;

/// Constants of the strong concatenation property: angle threshold `A` and
/// projection-distance threshold `R`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScpConstants {
    pub a: Ext,
    pub r: u32,
}

/// Bounds for the exhaustive concatenation check.
#[derive(Clone, Copy, Debug)]
pub struct ScpOptions {
    /// Vertices farther than this from the joint are not used as geodesic
    /// endpoints in condition 1 (`None` = unbounded).
    pub arm_length_bound: Option<u32>,
    /// Maximal length of each half of an enumerated geodesic segment in
    /// condition 2.
    pub half_length_bound: u32,
    /// Hard cap on the number of enumerated segments per complex.
    pub segment_budget: usize,
}

impl Default for ScpOptions {
    fn default() -> Self {
        ScpOptions {
            arm_length_bound: None,
            half_length_bound: 6,
            segment_budget: 500_000,
        }
    }
}

/// Check the strong concatenation property with constants `(A, R)`.
///
/// Condition 1: whenever two geodesics start at a common vertex with first
/// edges at angle `> A`, their concatenation is a geodesic. The angle depends
/// only on the first edges, so the check quantifies over
/// `(v, first edges, endpoints)` without enumerating paths.
///
/// Condition 2: for every geodesic segment through a vertex `v` where it
/// makes an angle `> A`, and every pair `(x, y)` admitting projections onto
/// the segment strictly farther than `R` from `v` on opposite sides, every
/// geodesic from `x` to `y` passes through `v`. Segments are enumerated
/// exhaustively up to the configured half-length bound.
pub fn check_scp(
    c: &PolygonalComplex,
    metric: &Metric,
    angles: &AngleTables,
    k: ScpConstants,
    opts: &ScpOptions,
) -> Vec<Violation> {
    let mut out = condition_one(c, metric, angles, k, opts);
    out.extend(condition_two(c, metric, angles, k, opts));
    out
}

fn condition_one(
    c: &PolygonalComplex,
    metric: &Metric,
    angles: &AngleTables,
    k: ScpConstants,
    opts: &ScpOptions,
) -> Vec<Violation> {
    let n = c.vertex_count();
    let mut violations = Vec::new();
    for v in 0..n {
        let nb = c.neighbors(v);
        for (i, &u1) in nb.iter().enumerate() {
            for &u2 in &nb[i + 1..] {
                if angles.angle(v, u1, u2) <= k.a {
                    continue;
                }
                // endpoints reachable with first edge u1 (resp. u2)
                let arm = |u: usize| -> Vec<usize> {
                    (0..n)
                        .filter(|&w| {
                            metric.dist[v][w] != UNREACHED
                                && metric.dist[u][w] + 1 == metric.dist[v][w]
                                && opts
                                    .arm_length_bound
                                    .map(|b| metric.dist[v][w] <= b)
                                    .unwrap_or(true)
                        })
                        .collect()
                };
                for &w1 in &arm(u1) {
                    for &w2 in &arm(u2) {
                        let sum = metric.dist[v][w1] + metric.dist[v][w2];
                        let d = metric.dist[w1][w2];
                        if d != sum {
                            violations.push(Violation::ScpConcatenation {
                                v: c.label(v).to_string(),
                                toward1: c.label(u1).to_string(),
                                toward2: c.label(u2).to_string(),
                                angle: angles.angle(v, u1, u2).to_string(),
                                w1: c.label(w1).to_string(),
                                w2: c.label(w2).to_string(),
                                length_sum: sum,
                                distance: d,
                            });
                        }
                    }
                }
            }
        }
    }
    violations
}

/// Radial geodesic paths from `v` of length `1..=bound` whose first edge is
/// `(v, u)`: paths with `d(v, path[i]) = i`.
fn radial_paths(
    c: &PolygonalComplex,
    metric: &Metric,
    v: usize,
    u: usize,
    bound: u32,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![v, u]];
    while let Some(path) = stack.pop() {
        out.push(path.clone());
        if (path.len() - 1) as u32 >= bound {
            continue;
        }
        let last = *path.last().unwrap();
        for &w in c.neighbors(last) {
            if metric.dist[v][w] == path.len() as u32 {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    out
}

fn condition_two(
    c: &PolygonalComplex,
    metric: &Metric,
    angles: &AngleTables,
    k: ScpConstants,
    opts: &ScpOptions,
) -> Vec<Violation> {
    let n = c.vertex_count();
    let mut violations = Vec::new();
    let mut segments_used = 0usize;
    for v in 0..n {
        let nb = c.neighbors(v);
        let triggerable = nb
            .iter()
            .enumerate()
            .any(|(i, &u1)| nb[i + 1..].iter().any(|&u2| angles.angle(v, u1, u2) > k.a));
        if !triggerable {
            continue;
        }
        // distances in the complex with v removed: d > d_c iff every geodesic
        // goes through v
        let punctured: Vec<Vec<u32>> = (0..n)
            .map(|s| bfs_from_avoiding(c, s, Some(v)))
            .collect();
        for (i, &u1) in nb.iter().enumerate() {
            for &u2 in nb[i + 1..].iter() {
                if angles.angle(v, u1, u2) <= k.a {
                    continue;
                }
                let left = radial_paths(c, metric, v, u1, opts.half_length_bound);
                let right = radial_paths(c, metric, v, u2, opts.half_length_bound);
                for p1 in &left {
                    for p2 in &right {
                        let w1 = *p1.last().unwrap();
                        let w2 = *p2.last().unwrap();
                        let len1 = (p1.len() - 1) as u32;
                        let len2 = (p2.len() - 1) as u32;
                        if metric.dist[w1][w2] != len1 + len2 {
                            continue; // union is not a geodesic segment
                        }
                        segments_used += 1;
                        if segments_used > opts.segment_budget {
                            return violations;
                        }
                        // segment = reverse(p1) ++ [v] ++ p2, with v at
                        // position len1
                        let mut segment: Vec<usize> =
                            p1.iter().skip(1).rev().copied().collect();
                        segment.push(v);
                        segment.extend(p2.iter().skip(1));
                        check_segment(
                            c, metric, v, len1 as usize, &segment, k.r, &punctured,
                            &mut violations,
                        );
                    }
                }
            }
        }
    }
    violations
}

#[allow(clippy::too_many_arguments)]
fn check_segment(
    c: &PolygonalComplex,
    metric: &Metric,
    v: usize,
    pos_v: usize,
    segment: &[usize],
    r: u32,
    punctured: &[Vec<u32>],
    violations: &mut Vec<Violation>,
) {
    let n = c.vertex_count();
    // far-left / far-right projection choices of every vertex
    let mut far_left: Vec<Option<usize>> = vec![None; n];
    let mut far_right: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        let dmin = segment
            .iter()
            .map(|&s| metric.dist[x][s])
            .min()
            .expect("segment nonempty");
        if dmin == UNREACHED {
            continue;
        }
        for (pos, &s) in segment.iter().enumerate() {
            if metric.dist[x][s] != dmin {
                continue;
            }
            // distance along the geodesic segment equals index difference
            if pos < pos_v && (pos_v - pos) as u32 > r {
                far_left[x].get_or_insert(s);
            }
            if pos > pos_v && (pos - pos_v) as u32 > r {
                far_right[x].get_or_insert(s);
            }
        }
    }
    for x in 0..n {
        let Some(px) = far_left[x] else { continue };
        for y in 0..n {
            let Some(py) = far_right[y] else { continue };
            if metric.dist[x][y] == UNREACHED {
                continue;
            }
            // some geodesic avoids v iff deleting v keeps the distance
            if punctured[x][y] == metric.dist[x][y] {
                let dag = GeodesicDag::new(c, x, y).expect("connected pair");
                let witness = dag
                    .find_avoiding(&BTreeSet::from([v]))
                    .expect("punctured distance promised an avoiding geodesic");
                violations.push(Violation::ScpAvoidsVertex {
                    v: c.label(v).to_string(),
                    segment: segment.iter().map(|&s| c.label(s).to_string()).collect(),
                    x: c.label(x).to_string(),
                    y: c.label(y).to_string(),
                    px: c.label(px).to_string(),
                    py: c.label(py).to_string(),
                    witness_geodesic: witness
                        .into_iter()
                        .map(|v| c.label(v).to_string())
                        .collect(),
                });
            }
        }
    }
}

/// Result of the exhaustive angle-of-view measurement.
#[derive(Clone, Debug, Serialize)]
pub struct AovReport {
    /// Max over ordered triples `(x, y, z)` with `z` off every `x`-`y`
    /// geodesic of the angle at `z` between the geodesic families toward `x`
    /// and `y`.
    pub angle_of_view: Ext,
    pub witness: Option<(String, String, String)>,
    pub triples_tested: usize,
}

/// Measure the angle of view of a connected complex by exhausting all
/// ordered triples with distinct `x`, `y`. Infinite angles propagate into
/// the maximum.
///
/// The angle charged to a triple is the largest first-edge angle over the
/// two geodesic families, i.e. the bound must hold for every pair of
/// geodesics from `z`. The concatenation property needs exactly this
/// worst-case quantity: a minimum over geodesic pairs would be 0 at most
/// off-interval vertices of a grid while big-angle concatenations at the
/// same vertex still fail.
pub fn measure_angle_of_view(
    c: &PolygonalComplex,
    metric: &Metric,
    angles: &AngleTables,
) -> AovReport {
    let n = c.vertex_count();
    let mut best = Ext::Fin(0);
    let mut witness = None;
    let mut triples = 0usize;
    for x in 0..n {
        for y in 0..n {
            if x == y || metric.dist[x][y] == UNREACHED {
                continue;
            }
            let d = metric.dist[x][y];
            for z in 0..n {
                if z == x || z == y {
                    continue;
                }
                if metric.dist[x][z] == UNREACHED
                    || metric.dist[x][z] + metric.dist[z][y] == d
                {
                    continue; // z on some geodesic, or in another component
                }
                triples += 1;
                let mut a = Ext::Fin(0);
                for &u1 in &metric.first_steps(c, z, x) {
                    for &u2 in &metric.first_steps(c, z, y) {
                        a = a.max(angles.angle(z, u1, u2));
                    }
                }
                if a > best {
                    best = a;
                    witness = Some((
                        c.label(x).to_string(),
                        c.label(y).to_string(),
                        c.label(z).to_string(),
                    ));
                }
            }
        }
    }
    AovReport {
        angle_of_view: best,
        witness,
        triples_tested: triples,
    }
}

/// Measure the angle of view `A` and verify the strong concatenation
/// property with constants `(3A, 0)`; returns true when no violation is
/// found. An infinite angle of view makes the property vacuous.
pub fn cross_check_aov_scp(c: &PolygonalComplex, opts: &ScpOptions) -> bool {
    let metric = Metric::new(c);
    let angles = AngleTables::new(c);
    let aov = measure_angle_of_view(c, &metric, &angles);
    let a = match aov.angle_of_view {
        Ext::Fin(a) => Ext::Fin(3 * a),
        Ext::Inf => Ext::Inf,
    };
    check_scp(c, &metric, &angles, ScpConstants { a, r: 0 }, opts).is_empty()
}
