//! Small complexes used throughout the tests and the CLI: paths, stars,
//! trees, square grids, ladders, and the handful of glued examples.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::complex::PolygonalComplex;

/// Path graph on `n` vertices, labelled `p0..p{n-1}`.
pub fn path(n: usize) -> PolygonalComplex {
    let mut c = PolygonalComplex::new();
    for i in 0..n {
        c.add_vertex(format!("p{i}"));
    }
    for i in 1..n {
        c.add_edge(i - 1, i);
    }
    c
}

/// Star with `k` leaves; the center is vertex 0.
pub fn star(k: usize) -> PolygonalComplex {
    let mut c = PolygonalComplex::new();
    c.add_vertex("center");
    for i in 0..k {
        let v = c.add_vertex(format!("leaf{i}"));
        c.add_edge(0, v);
    }
    c
}

/// Complete binary tree with `depth` levels below the root.
pub fn binary_tree(depth: u32) -> PolygonalComplex {
    let n = (1usize << (depth + 1)) - 1;
    let mut c = PolygonalComplex::new();
    for i in 0..n {
        c.add_vertex(format!("b{i}"));
    }
    for i in 1..n {
        c.add_edge(i, (i - 1) / 2);
    }
    c
}

/// Random tree: vertex `i` attaches to a uniformly random earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> PolygonalComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = PolygonalComplex::new();
    c.add_vertex("t0");
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        let v = c.add_vertex(format!("t{i}"));
        c.add_edge(parent, v);
    }
    c
}

/// `w x h` portion of the square lattice: vertices `(i,j)` for `0 <= i < w`,
/// `0 <= j < h`, with all unit squares filled.
pub fn grid(w: usize, h: usize) -> PolygonalComplex {
    let mut c = PolygonalComplex::new();
    let idx = |i: usize, j: usize| j * w + i;
    for j in 0..h {
        for i in 0..w {
            c.add_vertex(format!("({i},{j})"));
        }
    }
    for j in 0..h {
        for i in 0..w {
            if i + 1 < w {
                c.add_edge(idx(i, j), idx(i + 1, j));
            }
            if j + 1 < h {
                c.add_edge(idx(i, j), idx(i, j + 1));
            }
        }
    }
    for j in 0..h.saturating_sub(1) {
        for i in 0..w.saturating_sub(1) {
            c.add_polygon(vec![idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)]);
        }
    }
    c
}

/// Ladder on `n` rungs: the `n x 2` grid.
pub fn ladder(n: usize) -> PolygonalComplex {
    grid(n, 2)
}

/// One filled unit square.
pub fn single_square() -> PolygonalComplex {
    grid(2, 2)
}

/// Two squares glued along one edge.
pub fn glued_squares() -> PolygonalComplex {
    grid(3, 2)
}

/// A single filled triangle.
pub fn triangle() -> PolygonalComplex {
    let mut c = PolygonalComplex::new();
    for l in ["ta", "tb", "tc"] {
        c.add_vertex(l);
    }
    c.add_polygon(vec![0, 1, 2]);
    c
}

/// A vertex bijection of a complex, with a display name.
#[derive(Clone, Debug)]
pub struct VertexBijection {
    pub name: String,
    pub map: Vec<usize>,
}

impl VertexBijection {
    /// Check that the bijection preserves edges and polygons.
    pub fn preserves(&self, c: &PolygonalComplex) -> bool {
        let n = c.vertex_count();
        if self.map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.map {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for (u, v) in c.edges() {
            if !c.has_edge(self.map[u], self.map[v]) {
                return false;
            }
        }
        for poly in c.polygons() {
            let image: Vec<usize> = poly.iter().map(|&v| self.map[v]).collect();
            let canon = canonicalize(image);
            if !c.polygons().iter().any(|p| *p == canon) {
                return false;
            }
        }
        true
    }
}

fn canonicalize(cycle: Vec<usize>) -> Vec<usize> {
    let n = cycle.len();
    if n == 0 {
        return cycle;
    }
    let min_pos = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..n).map(|k| cycle[(min_pos + k) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|k| cycle[(min_pos + n - k % n) % n]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

/// The eight symmetries of the `n x n` grid, as vertex bijections.
pub fn grid_symmetries(n: usize) -> Vec<VertexBijection> {
    let idx = |i: usize, j: usize| j * n + i;
    let last = n - 1;
    let transforms: [(&str, Box<dyn Fn(usize, usize) -> (usize, usize)>); 8] = [
        ("id", Box::new(|i, j| (i, j))),
        ("rot90", Box::new(move |i, j| (last - j, i))),
        ("rot180", Box::new(move |i, j| (last - i, last - j))),
        ("rot270", Box::new(move |i, j| (j, last - i))),
        ("flip_x", Box::new(move |i, j| (i, last - j))),
        ("flip_y", Box::new(move |i, j| (last - i, j))),
        ("flip_diag", Box::new(|i, j| (j, i))),
        ("flip_anti", Box::new(move |i, j| (last - j, last - i))),
    ];
    transforms
        .into_iter()
        .map(|(name, f)| {
            let mut map = vec![0; n * n];
            for j in 0..n {
                for i in 0..n {
                    let (a, b) = f(i, j);
                    map[idx(i, j)] = idx(a, b);
                }
            }
            VertexBijection {
                name: name.to_string(),
                map,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        let c = grid(5, 5);
        assert_eq!(c.vertex_count(), 25);
        assert_eq!(c.edge_count(), 40);
        assert_eq!(c.polygons().len(), 16);
        assert!(c.validate().is_valid());
    }

    #[test]
    fn random_tree_is_tree() {
        let c = random_tree(40, 7);
        assert_eq!(c.edge_count(), 39);
        let r = c.validate();
        assert!(r.connected);
    }

    #[test]
    fn grid_symmetries_preserve() {
        let c = grid(5, 5);
        for s in grid_symmetries(5) {
            assert!(s.preserves(&c), "{} does not preserve the grid", s.name);
        }
    }
}
