use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::ComplexError;

/// A finite 2-dimensional polygonal complex: labelled vertices, unordered
/// edges, and simple polygon cycles of length at least 3.
///
/// The structure tolerates invalid data (so that [`PolygonalComplex::validate`]
/// can report on it); geometry queries assume a valid complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonalComplex {
    labels: Vec<String>,
    label_index: BTreeMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
    polygons: Vec<Vec<usize>>,
    adjacency: Vec<Vec<usize>>,
}

fn norm_edge(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl PolygonalComplex {
    pub fn new() -> Self {
        PolygonalComplex {
            labels: Vec::new(),
            label_index: BTreeMap::new(),
            edges: BTreeSet::new(),
            polygons: Vec::new(),
            adjacency: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        let label = label.into();
        if let Some(&i) = self.label_index.get(&label) {
            return i;
        }
        let i = self.labels.len();
        self.label_index.insert(label.clone(), i);
        self.labels.push(label);
        self.adjacency.push(Vec::new());
        i
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || u >= self.labels.len() || v >= self.labels.len() {
            // kept out of the edge set; validate() reports on the source data
            return;
        }
        if self.edges.insert(norm_edge(u, v)) {
            self.adjacency[u].push(v);
            self.adjacency[v].push(u);
            self.adjacency[u].sort_unstable();
            self.adjacency[v].sort_unstable();
        }
    }

    /// Add a polygon and its boundary edges.
    pub fn add_polygon(&mut self, cycle: Vec<usize>) {
        let n = cycle.len();
        for i in 0..n {
            self.add_edge(cycle[i], cycle[(i + 1) % n]);
        }
        self.push_polygon_raw(canonical_cycle(cycle));
    }

    /// Add a polygon without inducing its boundary edges (used when reading
    /// possibly-invalid data).
    pub fn push_polygon_raw(&mut self, cycle: Vec<usize>) {
        let cycle = canonical_cycle(cycle);
        if !self.polygons.contains(&cycle) {
            self.polygons.push(cycle);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&norm_edge(u, v))
    }

    pub fn polygons(&self) -> &[Vec<usize>] {
        &self.polygons
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Check all structural invariants; returns a report, never fails.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (pi, poly) in self.polygons.iter().enumerate() {
            if poly.len() < 3 {
                violations.push(ComplexViolation {
                    kind: "polygon too short".into(),
                    detail: format!("polygon #{pi} has {} vertices", poly.len()),
                });
                continue;
            }
            let mut seen = BTreeSet::new();
            for &v in poly {
                if v >= self.labels.len() {
                    violations.push(ComplexViolation {
                        kind: "polygon vertex missing".into(),
                        detail: format!("polygon #{pi} references vertex {v}"),
                    });
                }
                if !seen.insert(v) {
                    violations.push(ComplexViolation {
                        kind: "polygon cycle not simple".into(),
                        detail: format!(
                            "polygon #{pi} repeats vertex {}",
                            self.labels.get(v).cloned().unwrap_or_else(|| v.to_string())
                        ),
                    });
                }
            }
            for i in 0..poly.len() {
                let u = poly[i];
                let v = poly[(i + 1) % poly.len()];
                if u < self.labels.len() && v < self.labels.len() && !self.has_edge(u, v) {
                    violations.push(ComplexViolation {
                        kind: "polygon boundary edge absent".into(),
                        detail: format!(
                            "polygon #{pi} needs edge {} -- {}",
                            self.labels[u], self.labels[v]
                        ),
                    });
                }
            }
        }
        let components = self.component_count();
        ValidationReport {
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            polygon_count: self.polygons.len(),
            connected: components <= 1,
            components,
            violations,
        }
    }

    fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Serialize to the interchange JSON form.
    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self
                .labels
                .iter()
                .enumerate()
                .map(|(id, label)| VertexJson {
                    id,
                    label: label.clone(),
                })
                .collect(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            polygons: self.polygons.clone(),
        }
    }

    /// Build from the interchange JSON form. Unknown ids in edges or polygons
    /// are preserved so that `validate` can report them, except where they
    /// cannot be represented (edges to unknown vertices are dropped with an
    /// error instead).
    pub fn from_json(json: &ComplexJson) -> Result<Self, ComplexError> {
        let mut c = PolygonalComplex::new();
        let mut id_map = BTreeMap::new();
        for v in &json.vertices {
            if id_map.contains_key(&v.id) {
                return Err(ComplexError::BadInput(format!("duplicate vertex id {}", v.id)));
            }
            let idx = c.add_vertex(v.label.clone());
            if idx != c.labels.len() - 1 {
                return Err(ComplexError::BadInput(format!(
                    "duplicate vertex label {:?}",
                    v.label
                )));
            }
            id_map.insert(v.id, idx);
        }
        for e in &json.edges {
            let u = *id_map
                .get(&e[0])
                .ok_or_else(|| ComplexError::BadInput(format!("edge references unknown id {}", e[0])))?;
            let v = *id_map
                .get(&e[1])
                .ok_or_else(|| ComplexError::BadInput(format!("edge references unknown id {}", e[1])))?;
            if u == v {
                return Err(ComplexError::BadInput(format!("loop edge at id {}", e[0])));
            }
            c.add_edge(u, v);
        }
        for poly in &json.polygons {
            let mut cycle = Vec::with_capacity(poly.len());
            for id in poly {
                cycle.push(*id_map.get(id).ok_or_else(|| {
                    ComplexError::BadInput(format!("polygon references unknown id {id}"))
                })?);
            }
            // do not induce edges: the data may be deliberately inconsistent
            c.push_polygon_raw(cycle);
        }
        Ok(c)
    }

    /// DOT rendering of the 1-skeleton.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", i, l));
        }
        for (u, v) in &self.edges {
            out.push_str(&format!("  v{u} -- v{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Default for PolygonalComplex {
    fn default() -> Self {
        Self::new()
    }
}

/// Rotate (and if needed reflect) a cycle into a canonical form: smallest
/// vertex first, then the smaller of the two directions.
fn canonical_cycle(cycle: Vec<usize>) -> Vec<usize> {
    if cycle.is_empty() {
        return cycle;
    }
    let n = cycle.len();
    let min_pos = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..n).map(|k| cycle[(min_pos + k) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|k| cycle[(min_pos + n - k % n) % n]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub label: String,
}

/// JSON interchange format:
/// `{"vertices":[{"id":0,"label":"a"}],"edges":[[0,1]],"polygons":[[0,1,2,3]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    pub polygons: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexViolation {
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub polygon_count: usize,
    pub connected: bool,
    pub components: usize,
    pub violations: Vec<ComplexViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::builders;

    #[test]
    fn single_square_valid_connected() {
        let c = builders::single_square();
        let r = c.validate();
        assert!(r.is_valid());
        assert!(r.connected);
        assert_eq!(r.vertex_count, 4);
        assert_eq!(r.edge_count, 4);
    }

    #[test]
    fn missing_boundary_edge_reported() {
        let mut c = PolygonalComplex::new();
        for l in ["a", "b", "c", "d"] {
            c.add_vertex(l);
        }
        c.add_edge(0, 1);
        c.add_edge(1, 2);
        c.add_edge(2, 3);
        // edge 3-0 missing
        c.push_polygon_raw(vec![0, 1, 2, 3]);
        let r = c.validate();
        assert!(r
            .violations
            .iter()
            .any(|v| v.kind == "polygon boundary edge absent"));
    }

    #[test]
    fn two_disjoint_squares_disconnected() {
        let mut c = PolygonalComplex::new();
        let a: Vec<usize> = (0..4).map(|i| c.add_vertex(format!("a{i}"))).collect();
        let b: Vec<usize> = (0..4).map(|i| c.add_vertex(format!("b{i}"))).collect();
        c.add_polygon(a);
        c.add_polygon(b);
        let r = c.validate();
        assert!(r.is_valid());
        assert!(!r.connected);
        assert_eq!(r.components, 2);
    }

    #[test]
    fn json_round_trip() {
        let c = builders::grid(3, 3);
        let j = c.to_json();
        let c2 = PolygonalComplex::from_json(&j).unwrap();
        assert_eq!(c, c2);
    }

    #[test]
    fn canonical_cycle_reflection() {
        assert_eq!(canonical_cycle(vec![2, 1, 0, 3]), vec![0, 1, 2, 3]);
        assert_eq!(canonical_cycle(vec![3, 0, 1, 2]), vec![0, 1, 2, 3]);
    }
}
