use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{Ext, GeodesicDag, Metric, PolygonalComplex, VertexBijection, UNREACHED};

use super::{CheckError, Violation};

/// A system of checkpoints along a quasi-line: an ordered list of finite
/// vertex sets with strictly increasing indices (the index map plays the role
/// of the quasi-isometry to the real line) and an error constant `L`.
#[derive(Clone, Debug)]
pub struct CheckpointSystem {
    pub checkpoints: Vec<BTreeSet<usize>>,
    pub indices: Vec<i64>,
    pub error_constant: u32,
}

impl CheckpointSystem {
    pub fn new(
        checkpoints: Vec<BTreeSet<usize>>,
        indices: Vec<i64>,
        error_constant: u32,
    ) -> Result<Self, CheckError> {
        if checkpoints.len() != indices.len() {
            return Err(CheckError::BadSystem(
                "one index per checkpoint required".into(),
            ));
        }
        if checkpoints.iter().any(|s| s.is_empty()) {
            return Err(CheckError::BadSystem("empty checkpoint".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CheckError::BadSystem(
                "indices must be strictly increasing".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for s in &checkpoints {
            for &v in s {
                if !seen.insert(v) {
                    return Err(CheckError::BadSystem(format!(
                        "checkpoints are not pairwise disjoint at vertex {v}"
                    )));
                }
            }
        }
        Ok(CheckpointSystem {
            checkpoints,
            indices,
            error_constant,
        })
    }

    /// Union of all checkpoints.
    pub fn line(&self) -> BTreeSet<usize> {
        self.checkpoints.iter().flatten().copied().collect()
    }

    fn index_of_vertex(&self) -> BTreeMap<usize, i64> {
        let mut m = BTreeMap::new();
        for (s, &i) in self.checkpoints.iter().zip(&self.indices) {
            for &v in s {
                m.insert(v, i);
            }
        }
        m
    }
}

/// Report of a checkpoint-system check: violations plus the pairs excluded
/// because their geodesics may exit the tested region.
#[derive(Clone, Debug, Serialize)]
pub struct CheckpointReport {
    pub violations: Vec<Violation>,
    pub excluded_pairs: Vec<(String, String)>,
    pub pairs_checked: usize,
}

impl CheckpointReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check a checkpoint system over the given test pairs.
///
/// For each pair `(x, y)` and every checkpoint whose index strictly
/// separates all projection indices of `x` from all projection indices of
/// `y`, and which sits at distance at least `L` from both projection sets,
/// every geodesic from `x` to `y` must meet the checkpoint. Strict index
/// separation is the finite surrogate for separation into different
/// unbounded components of the line.
///
/// `boundary`, when given, excludes (and lists) pairs whose combinatorial
/// interval touches the boundary: such geodesics might leave the finite
/// region, so they are not judged.
pub fn check_checkpoint_system(
    c: &PolygonalComplex,
    metric: &Metric,
    sys: &CheckpointSystem,
    pairs: &[(usize, usize)],
    boundary: Option<&BTreeSet<usize>>,
) -> Result<CheckpointReport, CheckError> {
    let lambda = sys.line();
    if lambda.is_empty() {
        return Err(CheckError::BadSystem("no checkpoints".into()));
    }
    let index_of = sys.index_of_vertex();
    let mut violations = Vec::new();
    let mut excluded = Vec::new();
    let mut pairs_checked = 0usize;

    for &(x, y) in pairs {
        if metric.dist[x][y] == UNREACHED {
            continue;
        }
        let dag = GeodesicDag::new(c, x, y)?;
        if let Some(boundary) = boundary {
            let interval = dag.interval();
            if interval.iter().any(|v| boundary.contains(v)) {
                excluded.push((c.label(x).to_string(), c.label(y).to_string()));
                continue;
            }
        }
        pairs_checked += 1;
        let px = metric.closest_point_projection(x, &lambda);
        let py = metric.closest_point_projection(y, &lambda);
        let ix: Vec<i64> = px.iter().map(|p| index_of[p]).collect();
        let iy: Vec<i64> = py.iter().map(|p| index_of[p]).collect();
        let (lo_x, hi_x) = (*ix.iter().min().unwrap(), *ix.iter().max().unwrap());
        let (lo_y, hi_y) = (*iy.iter().min().unwrap(), *iy.iter().max().unwrap());

        for (s, &i) in sys.checkpoints.iter().zip(&sys.indices) {
            let separates = (i > hi_x && i < lo_y) || (i > hi_y && i < lo_x);
            if !separates {
                continue;
            }
            let far_enough = |proj: &BTreeSet<usize>| {
                proj.iter().all(|&p| {
                    s.iter()
                        .all(|&v| metric.dist[p][v] >= sys.error_constant)
                })
            };
            if !far_enough(&px) || !far_enough(&py) {
                continue;
            }
            if let Some(witness) = dag.find_avoiding(s) {
                violations.push(Violation::CheckpointMissed {
                    x: c.label(x).to_string(),
                    y: c.label(y).to_string(),
                    checkpoint_index: i,
                    witness_geodesic: witness
                        .into_iter()
                        .map(|v| c.label(v).to_string())
                        .collect(),
                });
            }
        }
    }
    Ok(CheckpointReport {
        violations,
        excluded_pairs: excluded,
        pairs_checked,
    })
}

/// A partially defined vertex map used to translate a base checkpoint along
/// an axis (an automorphism restricted to the tested region).
#[derive(Clone, Debug)]
pub struct PartialBijection {
    pub forward: BTreeMap<usize, usize>,
    pub backward: BTreeMap<usize, usize>,
}

impl PartialBijection {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, CheckError> {
        let mut forward = BTreeMap::new();
        let mut backward = BTreeMap::new();
        for (u, v) in pairs {
            if forward.insert(u, v).is_some() || backward.insert(v, u).is_some() {
                return Err(CheckError::BadSystem("map is not injective".into()));
            }
        }
        Ok(PartialBijection { forward, backward })
    }

    /// The shift along an explicit axis path: `axis[i] -> axis[i+1]`.
    pub fn shift_along(axis: &[usize]) -> Result<Self, CheckError> {
        Self::from_pairs(axis.windows(2).map(|w| (w[0], w[1])))
    }
}

/// Build the checkpoint system of the local criterion: checkpoints are the
/// translates `h^i v` inside the region, indexed by `i`, with `S = {v}`.
/// Requires the axis to be a geodesic and the angle of the axis at `v` to
/// exceed `threshold`; then runs the checkpoint check over the pairs.
#[allow(clippy::too_many_arguments)]
pub fn assemble_checkpoints_from_big_angle(
    c: &PolygonalComplex,
    metric: &Metric,
    axis: &[usize],
    h: &PartialBijection,
    v: usize,
    threshold: u32,
    error_constant: u32,
    pairs: &[(usize, usize)],
    boundary: Option<&BTreeSet<usize>>,
) -> Result<(CheckpointSystem, CheckpointReport), CheckError> {
    if !crate::complex::is_geodesic_path(c, metric, axis) {
        return Err(CheckError::AxisNotGeodesic);
    }
    let pos = axis
        .iter()
        .position(|&a| a == v)
        .ok_or_else(|| CheckError::BadSystem("marked vertex is not on the axis".into()))?;
    if pos == 0 || pos + 1 == axis.len() {
        return Err(CheckError::BadSystem(
            "marked vertex must be interior to the axis".into(),
        ));
    }
    let angle = crate::complex::corner_angle(c, v, axis[pos - 1], axis[pos + 1])?;
    if angle <= Ext::Fin(threshold) {
        return Err(CheckError::AngleTooSmall {
            angle: angle.to_string(),
            threshold,
        });
    }

    // orbit of v under h in both directions, staying inside the region
    let mut translates = vec![(0i64, v)];
    let mut cur = v;
    let mut i = 0i64;
    while let Some(&next) = h.forward.get(&cur) {
        i += 1;
        cur = next;
        translates.push((i, cur));
        if i > c.vertex_count() as i64 {
            return Err(CheckError::BadSystem("translation orbit cycles".into()));
        }
    }
    cur = v;
    i = 0;
    while let Some(&prev) = h.backward.get(&cur) {
        i -= 1;
        cur = prev;
        translates.push((i, cur));
        if -i > c.vertex_count() as i64 {
            return Err(CheckError::BadSystem("translation orbit cycles".into()));
        }
    }
    translates.sort();
    let indices: Vec<i64> = translates.iter().map(|&(i, _)| i).collect();
    let checkpoints: Vec<BTreeSet<usize>> =
        translates.iter().map(|&(_, v)| [v].into()).collect();
    let sys = CheckpointSystem::new(checkpoints, indices, error_constant)?;
    let report = check_checkpoint_system(c, metric, &sys, pairs, boundary)?;
    Ok((sys, report))
}

/// The coarse stabilizer of the pair `(x, y)` at radius `r`: those supplied
/// isometries moving both `x` and `y` by at most `r`.
pub fn coarse_stabilizer<'a>(
    c: &PolygonalComplex,
    metric: &Metric,
    isoms: &'a [VertexBijection],
    x: usize,
    y: usize,
    r: u32,
) -> Vec<&'a VertexBijection> {
    isoms
        .iter()
        .filter(|phi| {
            debug_assert!(phi.preserves(c));
            let dx = metric.dist[x][phi.map[x]];
            let dy = metric.dist[y][phi.map[y]];
            dx != UNREACHED && dy != UNREACHED && dx <= r && dy <= r
        })
        .collect()
}

/// All ordered pairs of distinct vertices at distance at least `min_d`.
pub fn all_pairs(c: &PolygonalComplex, metric: &Metric, min_d: u32) -> Vec<(usize, usize)> {
    let n = c.vertex_count();
    let mut out = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            if metric.dist[x][y] != UNREACHED && metric.dist[x][y] >= min_d {
                out.push((x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{builders, grid_symmetries};

    /// Singleton checkpoints at every vertex of a path-shaped axis.
    fn singleton_system(axis: &[usize], l: u32) -> CheckpointSystem {
        CheckpointSystem::new(
            axis.iter().map(|&v| [v].into()).collect(),
            (0..axis.len() as i64).collect(),
            l,
        )
        .unwrap()
    }

    #[test]
    fn path_shift_singletons_clean() {
        let c = builders::path(60);
        let m = Metric::new(&c);
        let axis: Vec<usize> = (0..60).collect();
        let sys = singleton_system(&axis, 0);
        let pairs = all_pairs(&c, &m, 2);
        let rep = check_checkpoint_system(&c, &m, &sys, &pairs, None).unwrap();
        assert!(rep.is_clean());
    }

    #[test]
    fn ladder_rung_checkpoints_clean() {
        let c = builders::ladder(12);
        let m = Metric::new(&c);
        // rungs: column i is {(i,0), (i,1)}
        let rung = |i: usize| -> BTreeSet<usize> {
            [
                c.vertex_by_label(&format!("({i},0)")).unwrap(),
                c.vertex_by_label(&format!("({i},1)")).unwrap(),
            ]
            .into()
        };
        let sys =
            CheckpointSystem::new((0..12).map(rung).collect(), (0..12).collect(), 0).unwrap();
        let pairs = all_pairs(&c, &m, 2);
        let rep = check_checkpoint_system(&c, &m, &sys, &pairs, None).unwrap();
        assert!(rep.is_clean());
    }

    #[test]
    fn grid_singleton_checkpoints_violated() {
        let c = builders::grid(9, 9);
        let m = Metric::new(&c);
        let axis: Vec<usize> = (0..9)
            .map(|i| c.vertex_by_label(&format!("({i},0)")).unwrap())
            .collect();
        let sys = singleton_system(&axis, 0);
        let x = c.vertex_by_label("(1,4)").unwrap();
        let y = c.vertex_by_label("(7,4)").unwrap();
        let rep = check_checkpoint_system(&c, &m, &sys, &[(x, y)], None).unwrap();
        assert!(!rep.is_clean());
        // the witness geodesic is a genuine geodesic of the complex
        if let Violation::CheckpointMissed {
            witness_geodesic, ..
        } = &rep.violations[0]
        {
            let verts: Vec<usize> = witness_geodesic
                .iter()
                .map(|l| c.vertex_by_label(l).unwrap())
                .collect();
            assert!(crate::complex::is_geodesic_path(&c, &m, &verts));
        } else {
            panic!("wrong violation kind");
        }
    }

    #[test]
    fn monotone_in_error_constant() {
        // growing L only removes obligations, hence never adds violations
        let c = builders::grid(7, 7);
        let m = Metric::new(&c);
        let axis: Vec<usize> = (0..7)
            .map(|i| c.vertex_by_label(&format!("({i},0)")).unwrap())
            .collect();
        let pairs = all_pairs(&c, &m, 2);
        let counts: Vec<usize> = (0..4)
            .map(|l| {
                let sys = singleton_system(&axis, l);
                check_checkpoint_system(&c, &m, &sys, &pairs, None)
                    .unwrap()
                    .violations
                    .len()
            })
            .collect();
        for w in counts.windows(2) {
            assert!(w[1] <= w[0], "violations grew with L: {counts:?}");
        }
    }

    #[test]
    fn boundary_exclusion_lists_pairs() {
        let c = builders::grid(5, 5);
        let m = Metric::new(&c);
        let axis: Vec<usize> = (0..5)
            .map(|i| c.vertex_by_label(&format!("({i},0)")).unwrap())
            .collect();
        let sys = singleton_system(&axis, 0);
        let boundary: BTreeSet<usize> = (0..5)
            .map(|i| c.vertex_by_label(&format!("({i},4)")).unwrap())
            .collect();
        let x = c.vertex_by_label("(0,4)").unwrap();
        let y = c.vertex_by_label("(4,4)").unwrap();
        let rep = check_checkpoint_system(&c, &m, &sys, &[(x, y)], Some(&boundary)).unwrap();
        assert_eq!(rep.excluded_pairs.len(), 1);
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn assemble_on_tree_axis() {
        let c = builders::path(30);
        let m = Metric::new(&c);
        let axis: Vec<usize> = (0..30).collect();
        let h = PartialBijection::shift_along(&axis).unwrap();
        let pairs = all_pairs(&c, &m, 2);
        // tree angle at an interior axis vertex is infinite, above any threshold
        let (sys, rep) =
            assemble_checkpoints_from_big_angle(&c, &m, &axis, &h, 15, 1000, 0, &pairs, None)
                .unwrap();
        assert_eq!(sys.checkpoints.len(), 30);
        assert!(rep.is_clean());
    }

    #[test]
    fn assemble_rejects_small_angle() {
        let c = builders::grid(7, 3);
        let m = Metric::new(&c);
        let axis: Vec<usize> = (0..7)
            .map(|i| c.vertex_by_label(&format!("({i},1)")).unwrap())
            .collect();
        let h = PartialBijection::shift_along(&axis).unwrap();
        let err = assemble_checkpoints_from_big_angle(
            &c, &m, &axis, &h, axis[3], 2, 0, &[], None,
        )
        .unwrap_err();
        assert!(matches!(err, CheckError::AngleTooSmall { .. }));
    }

    #[test]
    fn coarse_stabilizer_basics() {
        let c = builders::grid(5, 5);
        let m = Metric::new(&c);
        let sym = grid_symmetries(5);
        let x = c.vertex_by_label("(0,0)").unwrap();
        let y = c.vertex_by_label("(4,0)").unwrap();
        // identity always qualifies
        let at_zero = coarse_stabilizer(&c, &m, &sym, x, y, 0);
        let names: Vec<&str> = at_zero.iter().map(|b| b.name.as_str()).collect();
        assert_eq!(names, vec!["id"]);
        // radius >= diameter returns everything
        let all = coarse_stabilizer(&c, &m, &sym, x, y, m.diameter());
        assert_eq!(all.len(), 8);
    }
}
