use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::complex::PolygonalComplex;
use super::ComplexError;

/// Extended non-negative integer: finite value or infinity, with infinity
/// ordered above every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Ext {
    Fin(u32),
    Inf,
}

impl Ext {
    pub fn finite(self) -> Option<u32> {
        match self {
            Ext::Fin(v) => Some(v),
            Ext::Inf => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Ext::Fin(_))
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(v) => write!(f, "{v}"),
            Ext::Inf => write!(f, "inf"),
        }
    }
}

pub const UNREACHED: u32 = u32::MAX;

/// Breadth-first distances from `src` in the 1-skeleton; `UNREACHED` marks a
/// different component.
pub fn bfs_from(c: &PolygonalComplex, src: usize) -> Vec<u32> {
    bfs_from_avoiding(c, src, None)
}

/// BFS distances with an optional deleted vertex (used for
/// "does every geodesic pass through v" queries).
pub fn bfs_from_avoiding(c: &PolygonalComplex, src: usize, avoid: Option<usize>) -> Vec<u32> {
    let n = c.vertex_count();
    let mut dist = vec![UNREACHED; n];
    if Some(src) == avoid {
        return dist;
    }
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for &w in c.neighbors(v) {
            if Some(w) != avoid && dist[w] == UNREACHED {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs shortest-path table for a complex.
#[derive(Clone, Debug)]
pub struct Metric {
    pub dist: Vec<Vec<u32>>,
}

impl Metric {
    pub fn new(c: &PolygonalComplex) -> Self {
        let dist = (0..c.vertex_count()).map(|v| bfs_from(c, v)).collect();
        Metric { dist }
    }

    pub fn d(&self, u: usize, v: usize) -> Ext {
        match self.dist[u][v] {
            UNREACHED => Ext::Inf,
            d => Ext::Fin(d),
        }
    }

    /// Finite distance or panic; callers must have checked connectivity.
    pub fn df(&self, u: usize, v: usize) -> u32 {
        let d = self.dist[u][v];
        assert_ne!(d, UNREACHED, "vertices in different components");
        d
    }

    pub fn diameter(&self) -> u32 {
        self.dist
            .iter()
            .flat_map(|row| row.iter().copied())
            .filter(|&d| d != UNREACHED)
            .max()
            .unwrap_or(0)
    }

    /// Vertices of `lambda` at minimal distance from `x`.
    pub fn closest_point_projection(&self, x: usize, lambda: &BTreeSet<usize>) -> BTreeSet<usize> {
        let best = lambda
            .iter()
            .map(|&p| self.dist[x][p])
            .min()
            .expect("projection target must be nonempty");
        lambda
            .iter()
            .copied()
            .filter(|&p| self.dist[x][p] == best)
            .collect()
    }

    /// First edges of geodesics from `v` toward `w`: the neighbors `u` of `v`
    /// with `d(u, w) + 1 = d(v, w)`.
    pub fn first_steps(&self, c: &PolygonalComplex, v: usize, w: usize) -> Vec<usize> {
        if v == w || self.dist[v][w] == UNREACHED {
            return vec![];
        }
        c.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.dist[u][w] != UNREACHED && self.dist[u][w] + 1 == self.dist[v][w])
            .collect()
    }
}

/// The DAG of all geodesics between two vertices: for every vertex lying on
/// some geodesic, its successor edges toward the target.
#[derive(Clone, Debug)]
pub struct GeodesicDag {
    pub source: usize,
    pub target: usize,
    pub distance: u32,
    /// `on_geodesic[v]` iff `d(s,v) + d(v,t) = d(s,t)`.
    pub on_geodesic: Vec<bool>,
    /// Distance from the source, for vertices on geodesics.
    pub level: Vec<u32>,
    /// Successors toward the target, for vertices on geodesics.
    pub succ: Vec<Vec<usize>>,
}

impl GeodesicDag {
    pub fn new(c: &PolygonalComplex, source: usize, target: usize) -> Result<Self, ComplexError> {
        let ds = bfs_from(c, source);
        let dt = bfs_from(c, target);
        if ds[target] == UNREACHED {
            return Err(ComplexError::NoPath(
                c.label(source).to_string(),
                c.label(target).to_string(),
            ));
        }
        let n = c.vertex_count();
        let distance = ds[target];
        let mut on_geodesic = vec![false; n];
        for v in 0..n {
            if ds[v] != UNREACHED && dt[v] != UNREACHED && ds[v] + dt[v] == distance {
                on_geodesic[v] = true;
            }
        }
        let mut succ = vec![Vec::new(); n];
        for v in 0..n {
            if !on_geodesic[v] {
                continue;
            }
            for &w in c.neighbors(v) {
                if on_geodesic[w] && ds[w] == ds[v] + 1 {
                    succ[v].push(w);
                }
            }
        }
        Ok(GeodesicDag {
            source,
            target,
            distance,
            on_geodesic,
            level: ds,
            succ,
        })
    }

    /// Vertices lying on at least one geodesic, in index order.
    pub fn interval(&self) -> BTreeSet<usize> {
        self.on_geodesic
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
            .collect()
    }

    /// Number of distinct geodesics (paths of the DAG).
    pub fn count_geodesics(&self) -> u128 {
        self.count_avoiding(&BTreeSet::new())
    }

    /// Number of geodesics avoiding every vertex of `avoid`.
    pub fn count_avoiding(&self, avoid: &BTreeSet<usize>) -> u128 {
        if avoid.contains(&self.source) || avoid.contains(&self.target) {
            return 0;
        }
        let mut memo = vec![None; self.on_geodesic.len()];
        self.count_from(self.source, avoid, &mut memo)
    }

    fn count_from(&self, v: usize, avoid: &BTreeSet<usize>, memo: &mut Vec<Option<u128>>) -> u128 {
        if v == self.target {
            return 1;
        }
        if let Some(m) = memo[v] {
            return m;
        }
        let mut total = 0u128;
        for &w in &self.succ[v] {
            if !avoid.contains(&w) {
                total += self.count_from(w, avoid, memo);
            }
        }
        memo[v] = Some(total);
        total
    }

    /// One geodesic avoiding `avoid`, if any exists (lexicographically first
    /// by successor order).
    pub fn find_avoiding(&self, avoid: &BTreeSet<usize>) -> Option<Vec<usize>> {
        if avoid.contains(&self.source) || avoid.contains(&self.target) {
            return None;
        }
        let mut memo = vec![None; self.on_geodesic.len()];
        if self.count_from(self.source, avoid, &mut memo) == 0 {
            return None;
        }
        let mut path = vec![self.source];
        let mut v = self.source;
        while v != self.target {
            let next = self.succ[v]
                .iter()
                .copied()
                .find(|w| !avoid.contains(w) && self.count_from(*w, avoid, &mut memo) > 0)
                .expect("count said a path exists");
            path.push(next);
            v = next;
        }
        Some(path)
    }
}

/// Convenience wrapper: the combinatorial interval between two vertices.
pub fn interval(
    c: &PolygonalComplex,
    u: usize,
    v: usize,
) -> Result<BTreeSet<usize>, ComplexError> {
    Ok(GeodesicDag::new(c, u, v)?.interval())
}

/// Check that `path` is a geodesic of the 1-skeleton: consecutive vertices
/// adjacent and length equal to the endpoint distance.
pub fn is_geodesic_path(c: &PolygonalComplex, metric: &Metric, path: &[usize]) -> bool {
    if path.is_empty() {
        return false;
    }
    for w in path.windows(2) {
        if !c.has_edge(w[0], w[1]) {
            return false;
        }
    }
    metric.d(path[0], *path.last().unwrap()) == Ext::Fin((path.len() - 1) as u32)
}
