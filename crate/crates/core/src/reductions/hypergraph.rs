//! 3-uniform hypergraphs, 2-colorability and Fano-plane linearization.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Lines of the Fano plane on points 0..7. The first line is the one removed
/// during linearization; any 2-coloring of the other six lines makes its
/// three points monochromatic.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [0, 1, 2],
    [0, 3, 4],
    [0, 5, 6],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 6],
    [2, 4, 5],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(vertices: Vec<String>, edges: Vec<[usize; 3]>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        for (i, e) in edges.iter().enumerate() {
            if e.iter().any(|&v| v >= vertices.len()) || e[0] == e[1] || e[1] == e[2] || e[0] == e[2] {
                return Err(Error::BadHyperedge(i));
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Vertices `v0..v{n-1}`.
    pub fn with_n(n: usize, edges: &[[usize; 3]]) -> Result<Self> {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), edges.to_vec())
    }

    /// The Fano plane on `p0..p6`.
    pub fn fano() -> Self {
        Self::new((0..7).map(|i| format!("p{i}")).collect(), FANO_LINES.to_vec())
            .expect("Fano plane is well formed")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    fn shared(&self, i: usize, j: usize) -> Vec<usize> {
        let b = &self.edges[j];
        self.edges[i].iter().copied().filter(|v| b.contains(v)).collect()
    }

    /// First pair of edges (in index order) sharing two or more vertices.
    pub fn first_overlap(&self) -> Option<(usize, usize)> {
        let m = self.edges.len();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .find(|&(i, j)| self.shared(i, j).len() >= 2)
    }

    pub fn is_linear(&self) -> bool {
        self.first_overlap().is_none()
    }

    /// A 2-coloring (true = first color) with no monochromatic edge, if any.
    ///
    /// Backtracking over vertices in index order; vertex 0 is fixed to the
    /// first color since colorings come in complementary pairs.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.num_vertices();
        // edges whose largest vertex is v become checkable once v is colored
        let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            closing[*e.iter().max().expect("three vertices")].push(i);
        }
        let mut color = vec![false; n];
        fn go(h: &Hypergraph3, closing: &[Vec<usize>], color: &mut [bool], v: usize) -> bool {
            if v == color.len() {
                return true;
            }
            let choices: &[bool] = if v == 0 { &[true] } else { &[true, false] };
            for &c in choices {
                color[v] = c;
                let ok = closing[v].iter().all(|&i| {
                    let e = &h.edges[i];
                    !(color[e[0]] == color[e[1]] && color[e[1]] == color[e[2]])
                });
                if ok && go(h, closing, color, v + 1) {
                    return true;
                }
            }
            false
        }
        go(self, &closing, &mut color, 0).then_some(color)
    }

    pub fn is_two_colorable(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Whether `in_first` leaves every edge bichromatic.
    pub fn is_proper_coloring(&self, in_first: &[bool]) -> bool {
        self.edges.iter().all(|e| {
            !(in_first[e[0]] == in_first[e[1]] && in_first[e[1]] == in_first[e[2]])
        })
    }

    /// Number of edges containing each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.num_vertices()];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let vertices: Vec<String> = doc
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("missing array field \"vertices\"".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Malformed(format!("vertex ids must be strings, got {v}")))
            })
            .collect::<Result<_>>()?;
        let raw = doc
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("missing array field \"edges\"".into()))?;
        let mut edges = Vec::with_capacity(raw.len());
        for (i, e) in raw.iter().enumerate() {
            let ids = e
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or(Error::BadHyperedge(i))?;
            let mut edge = [0usize; 3];
            for (slot, id) in edge.iter_mut().zip(ids) {
                let id = id
                    .as_str()
                    .ok_or_else(|| Error::Malformed(format!("hyperedge {i}: vertex ids must be strings")))?;
                *slot = vertices.iter().position(|v| v == id).ok_or_else(|| {
                    Error::Malformed(format!("hyperedge {i} references undeclared vertex {id:?}"))
                })?;
            }
            edges.push(edge);
        }
        Self::new(vertices, edges)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "edges": self.edges.iter()
                .map(|e| e.iter().map(|&v| self.vertices[v].clone()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn fresh_id(taken: &mut HashSet<String>, base: String) -> String {
    let mut id = base.clone();
    let mut k = 1;
    while taken.contains(&id) {
        id = format!("{base}~{k}");
        k += 1;
    }
    taken.insert(id.clone());
    id
}

/// One surgery step: replace the first shared vertex `x1` of the first
/// overlapping pair by points of a fresh Fano plane minus one line.
fn linearize_once(h: &Hypergraph3, round: usize, taken: &mut HashSet<String>) -> Option<Hypergraph3> {
    let (ey, ez) = h.first_overlap()?;
    let x1 = *h.shared(ey, ez).iter().min().expect("overlap is nonempty");

    // keep every vertex except x1, then append the seven Fano points
    let mut remap = vec![usize::MAX; h.num_vertices()];
    let mut vertices = Vec::with_capacity(h.num_vertices() + 6);
    for (v, id) in h.vertices.iter().enumerate() {
        if v != x1 {
            remap[v] = vertices.len();
            vertices.push(id.clone());
        }
    }
    let fano: Vec<usize> = (0..7)
        .map(|p| {
            vertices.push(fresh_id(taken, format!("fano{round}.{p}")));
            vertices.len() - 1
        })
        .collect();

    let mut edges = Vec::with_capacity(h.edges.len() + 6);
    let mut next = 2usize;
    for (i, e) in h.edges.iter().enumerate() {
        let point = if i == ey {
            0
        } else if i == ez {
            1
        } else if e.contains(&x1) {
            let p = next;
            next = (next + 1) % 3;
            p
        } else {
            usize::MAX
        };
        edges.push(e.map(|v| if v == x1 { fano[point] } else { remap[v] }));
    }
    for line in &FANO_LINES[1..] {
        edges.push(line.map(|p| fano[p]));
    }
    Some(Hypergraph3 { vertices, edges })
}

/// Equivalent linear hypergraph: 2-colorable exactly when the input is.
///
/// Returns the input unchanged when it is already linear.
pub fn make_linear(h: &Hypergraph3) -> Hypergraph3 {
    let mut taken: HashSet<String> = h.vertices.iter().cloned().collect();
    let mut current = h.clone();
    let mut round = 0;
    while let Some(next) = linearize_once(&current, round, &mut taken) {
        current = next;
        round += 1;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_is_linear_and_not_two_colorable() {
        let f = Hypergraph3::fano();
        assert!(f.is_linear());
        assert!(!f.is_two_colorable());
        let minus = Hypergraph3::new(f.vertices.clone(), FANO_LINES[1..].to_vec()).unwrap();
        let c = minus.two_coloring().expect("Fano minus a line is 2-colorable");
        assert!(c[0] == c[1] && c[1] == c[2]);
    }

    #[test]
    fn every_coloring_of_fano_minus_line_fixes_the_line() {
        let minus = Hypergraph3::new(
            (0..7).map(|i| i.to_string()).collect(),
            FANO_LINES[1..].to_vec(),
        )
        .unwrap();
        for mask in 0u32..128 {
            let c: Vec<bool> = (0..7).map(|i| mask >> i & 1 == 1).collect();
            if minus.is_proper_coloring(&c) {
                assert!(c[0] == c[1] && c[1] == c[2]);
            }
        }
    }

    #[test]
    fn linear_input_is_unchanged() {
        let h = Hypergraph3::with_n(5, &[[0, 1, 2], [2, 3, 4]]).unwrap();
        assert_eq!(make_linear(&h), h);
    }

    #[test]
    fn overlapping_pair_is_split() {
        let h = Hypergraph3::with_n(4, &[[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(!h.is_linear());
        let out = make_linear(&h);
        assert!(out.is_linear());
        assert_eq!(out.is_two_colorable(), h.is_two_colorable());
        assert!(out.num_vertices() <= 24);
        // the overlapping edges received different Fano points
        assert_ne!(out.edges[0][0], out.edges[1][0]);
    }

    #[test]
    fn rejects_degenerate_edges() {
        assert!(matches!(
            Hypergraph3::with_n(3, &[[0, 0, 1]]),
            Err(Error::BadHyperedge(0))
        ));
    }

    #[test]
    fn json_round_trip() {
        let h = Hypergraph3::from_json_str(r#"{"vertices":["a","b","c"],"edges":[["a","b","c"]]}"#).unwrap();
        assert_eq!(Hypergraph3::from_json_str(&h.to_json().to_string()).unwrap(), h);
    }
}
