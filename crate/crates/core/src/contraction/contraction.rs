use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{Metric, PolygonalComplex, UNREACHED};

use super::Violation;

/// Witness for the contraction constant: a ball whose pointwise projection
/// has the reported diameter.
#[derive(Clone, Debug, Serialize)]
pub struct BallWitness {
    pub center: String,
    pub radius: u32,
    pub p: String,
    pub q: String,
}

/// Result of measuring the strong-contraction constant of a quasi-line.
#[derive(Clone, Debug, Serialize)]
pub struct ContractionReport {
    /// Max diameter of the projection of any tested ball disjoint from the
    /// line.
    pub constant: u32,
    pub radius_bound: u32,
    pub balls_tested: usize,
    pub witness: Option<BallWitness>,
}

/// Measure the contraction constant of `lambda`: exhaust all balls `B(x, r)`
/// with `r <= radius_bound` that are disjoint from `lambda`, project every
/// ball vertex to `lambda`, and take the largest diameter of the projection
/// union.
pub fn contraction_constant(
    c: &PolygonalComplex,
    metric: &Metric,
    lambda: &BTreeSet<usize>,
    radius_bound: u32,
) -> ContractionReport {
    assert!(!lambda.is_empty(), "quasi-line must be nonempty");
    let n = c.vertex_count();
    let mut best = 0u32;
    let mut witness = None;
    let mut balls_tested = 0usize;
    for x in 0..n {
        // distance from x to the line bounds the disjoint radii
        let d_line = lambda
            .iter()
            .map(|&p| metric.dist[x][p])
            .min()
            .unwrap_or(UNREACHED);
        if d_line == UNREACHED || d_line == 0 {
            continue;
        }
        for r in 0..=radius_bound.min(d_line.saturating_sub(1)) {
            balls_tested += 1;
            let mut proj: BTreeSet<usize> = BTreeSet::new();
            for y in 0..n {
                if metric.dist[x][y] <= r {
                    proj.extend(metric.closest_point_projection(y, lambda));
                }
            }
            for &p in &proj {
                for &q in &proj {
                    let d = metric.dist[p][q];
                    if d != UNREACHED && d > best {
                        best = d;
                        witness = Some(BallWitness {
                            center: c.label(x).to_string(),
                            radius: r,
                            p: c.label(p).to_string(),
                            q: c.label(q).to_string(),
                        });
                    }
                }
            }
        }
    }
    ContractionReport {
        constant: best,
        radius_bound,
        balls_tested,
        witness,
    }
}

/// Check the coarsely-Lipschitz projection bound
/// `d(pi(x), pi(y)) <= max(C, 4 d(x,y))` for all vertex pairs and all
/// projection choices.
pub fn check_coarse_lipschitz(
    c: &PolygonalComplex,
    metric: &Metric,
    lambda: &BTreeSet<usize>,
    constant: u32,
) -> Vec<Violation> {
    assert!(!lambda.is_empty(), "quasi-line must be nonempty");
    let n = c.vertex_count();
    let projections: Vec<Option<BTreeSet<usize>>> = (0..n)
        .map(|x| {
            if lambda.iter().any(|&p| metric.dist[x][p] != UNREACHED) {
                Some(metric.closest_point_projection(x, lambda))
            } else {
                None
            }
        })
        .collect();
    let mut violations = Vec::new();
    for x in 0..n {
        let Some(px) = &projections[x] else { continue };
        for y in x..n {
            if metric.dist[x][y] == UNREACHED {
                continue;
            }
            let Some(py) = &projections[y] else { continue };
            let bound = constant.max(4 * metric.dist[x][y]);
            for &p in px {
                for &q in py {
                    let d = metric.dist[p][q];
                    if d != UNREACHED && d > bound {
                        violations.push(Violation::Lipschitz {
                            x: c.label(x).to_string(),
                            y: c.label(y).to_string(),
                            px: c.label(p).to_string(),
                            py: c.label(q).to_string(),
                            d_xy: metric.dist[x][y],
                            d_proj: d,
                            bound,
                        });
                    }
                }
            }
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::builders;

    fn axis(c: &PolygonalComplex, len: usize) -> BTreeSet<usize> {
        (0..len)
            .map(|i| c.vertex_by_label(&format!("({i},0)")).unwrap())
            .collect()
    }

    #[test]
    fn tree_path_constant_zero() {
        // In a tree, every connected set off a path projects to one vertex.
        let c = builders::binary_tree(5); // 63 vertices
        let m = Metric::new(&c);
        // path from root down the left spine
        let lambda: BTreeSet<usize> = [0usize, 1, 3, 7, 15, 31].into();
        let r = contraction_constant(&c, &m, &lambda, m.diameter());
        assert_eq!(r.constant, 0);
    }

    #[test]
    fn full_vertex_set_vacuous() {
        let c = builders::grid(3, 3);
        let m = Metric::new(&c);
        let lambda: BTreeSet<usize> = (0..c.vertex_count()).collect();
        let r = contraction_constant(&c, &m, &lambda, 5);
        assert_eq!(r.constant, 0);
        assert_eq!(r.balls_tested, 0);
    }

    #[test]
    fn grid_axis_constant_grows() {
        // 9x9 grid (n = 4 in the (2n+1)^2 portion), axis = bottom row. The
        // ball around (4, 4)... here labelled (0-based) center-top: use
        // (4,4) with radius 3: projections cover about 2*3 axis vertices.
        let c = builders::grid(9, 9);
        let m = Metric::new(&c);
        let lambda = axis(&c, 9);
        let r = contraction_constant(&c, &m, &lambda, 3);
        assert!(r.constant >= 6, "constant {} too small", r.constant);
        let w = r.witness.unwrap();
        assert!(w.radius <= 3);
    }

    #[test]
    fn lipschitz_holds_with_measured_constant() {
        let c = builders::grid(7, 7);
        let m = Metric::new(&c);
        let lambda = axis(&c, 7);
        let rep = contraction_constant(&c, &m, &lambda, m.diameter());
        let v = check_coarse_lipschitz(&c, &m, &lambda, rep.constant);
        assert!(v.is_empty(), "violations: {v:?}");
    }

    #[test]
    fn lipschitz_understated_constant_reports() {
        // A straight axis projects 1-Lipschitzly, so understating C cannot
        // produce violations there; use a two-point target whose midline
        // projects onto both points at once.
        let c = builders::grid(9, 9);
        let m = Metric::new(&c);
        let lambda: BTreeSet<usize> = [
            c.vertex_by_label("(0,0)").unwrap(),
            c.vertex_by_label("(8,0)").unwrap(),
        ]
        .into();
        let v = check_coarse_lipschitz(&c, &m, &lambda, 0);
        assert!(!v.is_empty());
        // witnesses re-checkable
        if let Violation::Lipschitz { d_xy, d_proj, bound, .. } = &v[0] {
            assert!(d_proj > bound && *bound == 4 * d_xy);
        } else {
            panic!("wrong violation kind");
        }
        // and the measured constant cures it
        let rep = contraction_constant(&c, &m, &lambda, m.diameter());
        assert!(check_coarse_lipschitz(&c, &m, &lambda, rep.constant).is_empty());
    }

    #[test]
    fn trivial_pair_never_violates() {
        let c = builders::path(30);
        let m = Metric::new(&c);
        let lambda: BTreeSet<usize> = (0..30).collect();
        let v = check_coarse_lipschitz(&c, &m, &lambda, 0);
        assert!(v.is_empty());
    }
}
