//! Plain graph inputs for the reductions and application adapters.
//!
//! JSON shapes:
//! * undirected: `{"vertices": [...], "edges": [["u","v"], ...]}`
//! * colored: edges as `{"u","v","color": 1|2, "w"?: r}` or `["u","v",color,w?]`
//! * weighted digraph: `{"vertices": [...], "arcs": [{"tail","head","w"?: r}]}`
//!   or `["u","v",w?]`; `w` defaults to 1.

use std::collections::{HashMap, HashSet};

use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

fn parse_doc(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

fn string_list(v: &Value, field: &str) -> Result<Vec<String>> {
    let arr = v
        .get(field)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Malformed(format!("missing array field {field:?}")))?;
    arr.iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Malformed(format!("{field:?} entries must be strings, got {x}")))
        })
        .collect()
}

fn index_of(vertices: &[String]) -> Result<HashMap<String, usize>> {
    let mut idx = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if idx.insert(v.clone(), i).is_some() {
            return Err(Error::DuplicateVertex(v.clone()));
        }
    }
    Ok(idx)
}

fn resolve(idx: &HashMap<String, usize>, u: &str, v: &str) -> Result<(usize, usize)> {
    let get = |x: &str| {
        idx.get(x).copied().ok_or_else(|| Error::UnknownVertex {
            tail: u.to_string(),
            head: v.to_string(),
            vertex: x.to_string(),
        })
    };
    let (a, b) = (get(u)?, get(v)?);
    if a == b {
        return Err(Error::SelfLoop(u.to_string()));
    }
    Ok((a, b))
}

fn str_at(v: &Value, i: usize, what: &str) -> Result<String> {
    v.get(i)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| Error::Malformed(format!("{what}: expected a vertex id at position {i} in {v}")))
}

fn str_field(v: &Value, key: &str) -> Result<String> {
    v.get(key)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| Error::Malformed(format!("missing string field {key:?} in {v}")))
}

/// Simple undirected graph; vertex order is declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        index_of(&vertices)?;
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= vertices.len() || v >= vertices.len() {
                return Err(Error::Malformed(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::SelfLoop(vertices[u].clone()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateArc {
                    tail: vertices[u].clone(),
                    head: vertices[v].clone(),
                });
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Builds from `n` vertices named `v0..v{n-1}`.
    pub fn with_n(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), edges.to_vec())
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::with_n(n, &edges).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::with_n(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::with_n(n, &edges).expect("valid path")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// The edge oriented from its lexicographically smaller endpoint id.
    pub fn oriented(&self, e: (usize, usize)) -> (usize, usize) {
        if self.vertices[e.0] <= self.vertices[e.1] {
            e
        } else {
            (e.1, e.0)
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc = parse_doc(text)?;
        let vertices = string_list(&doc, "vertices")?;
        let idx = index_of(&vertices)?;
        let edges = doc
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("missing array field \"edges\"".into()))?
            .iter()
            .map(|e| {
                let (u, v) = if e.is_object() {
                    (str_field(e, "u")?, str_field(e, "v")?)
                } else {
                    (str_at(e, 0, "edge")?, str_at(e, 1, "edge")?)
                };
                resolve(&idx, &u, &v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, edges)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "edges": self.edges.iter()
                .map(|&(u, v)| json!([self.vertices[u], self.vertices[v]]))
                .collect::<Vec<_>>(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    /// 1 or 2.
    pub color: u8,
    pub weight: Rational,
}

/// Undirected graph whose edges carry a color in {1, 2} and a nonnegative weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<ColoredEdge>,
}

impl ColoredGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<ColoredEdge>) -> Result<Self> {
        let plain: Vec<(usize, usize)> = edges.iter().map(|e| (e.u, e.v)).collect();
        UndirectedGraph::new(vertices.clone(), plain)?;
        for e in &edges {
            if e.color != 1 && e.color != 2 {
                return Err(Error::BadColor {
                    u: vertices[e.u].clone(),
                    v: vertices[e.v].clone(),
                    color: i64::from(e.color),
                });
            }
            if e.weight.is_negative() {
                return Err(Error::NegativeWeight {
                    tail: vertices[e.u].clone(),
                    head: vertices[e.v].clone(),
                    weight: rational::format(&e.weight),
                });
            }
        }
        Ok(Self { vertices, edges })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc = parse_doc(text)?;
        let vertices = string_list(&doc, "vertices")?;
        let idx = index_of(&vertices)?;
        let raw = doc
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("missing array field \"edges\"".into()))?;
        let mut edges = Vec::with_capacity(raw.len());
        for e in raw {
            let (u, v, color, w) = if e.is_object() {
                (
                    str_field(e, "u")?,
                    str_field(e, "v")?,
                    e.get("color").cloned(),
                    e.get("w").cloned(),
                )
            } else {
                (
                    str_at(e, 0, "edge")?,
                    str_at(e, 1, "edge")?,
                    e.get(2).cloned(),
                    e.get(3).cloned(),
                )
            };
            let color = color
                .as_ref()
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Malformed(format!("edge {u:?}-{v:?} needs an integer color")))?;
            if color != 1 && color != 2 {
                return Err(Error::BadColor { u, v, color });
            }
            let weight = match w {
                Some(w) => rational::from_json(&w)?,
                None => Rational::one(),
            };
            let (a, b) = resolve(&idx, &u, &v)?;
            edges.push(ColoredEdge {
                u: a,
                v: b,
                color: color as u8,
                weight,
            });
        }
        Self::new(vertices, edges)
    }

    pub fn oriented(&self, e: &ColoredEdge) -> (usize, usize) {
        if self.vertices[e.u] <= self.vertices[e.v] {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedArc {
    pub tail: usize,
    pub head: usize,
    pub weight: Rational,
}

/// Digraph with nonnegative arc weights; opposite arcs allowed, parallel arcs not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    pub vertices: Vec<String>,
    pub arcs: Vec<WeightedArc>,
}

impl WeightedDigraph {
    pub fn new(vertices: Vec<String>, arcs: Vec<WeightedArc>) -> Result<Self> {
        index_of(&vertices)?;
        let mut seen = HashSet::new();
        for a in &arcs {
            if a.tail >= vertices.len() || a.head >= vertices.len() {
                return Err(Error::Malformed(format!("arc ({}, {}) out of range", a.tail, a.head)));
            }
            if a.tail == a.head {
                return Err(Error::SelfLoop(vertices[a.tail].clone()));
            }
            if !seen.insert((a.tail, a.head)) {
                return Err(Error::DuplicateArc {
                    tail: vertices[a.tail].clone(),
                    head: vertices[a.head].clone(),
                });
            }
            if a.weight.is_negative() {
                return Err(Error::NegativeWeight {
                    tail: vertices[a.tail].clone(),
                    head: vertices[a.head].clone(),
                    weight: rational::format(&a.weight),
                });
            }
        }
        Ok(Self { vertices, arcs })
    }

    /// Vertices `v0..v{n-1}`, arcs `(tail, head, weight)`.
    pub fn with_n(n: usize, arcs: &[(usize, usize, Rational)]) -> Result<Self> {
        Self::new(
            (0..n).map(|i| format!("v{i}")).collect(),
            arcs.iter()
                .map(|(t, h, w)| WeightedArc {
                    tail: *t,
                    head: *h,
                    weight: w.clone(),
                })
                .collect(),
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let doc = parse_doc(text)?;
        let vertices = string_list(&doc, "vertices")?;
        let idx = index_of(&vertices)?;
        let raw = doc
            .get("arcs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Malformed("missing array field \"arcs\"".into()))?;
        let mut arcs = Vec::with_capacity(raw.len());
        for a in raw {
            let (t, h, w) = if a.is_object() {
                (str_field(a, "tail")?, str_field(a, "head")?, a.get("w").cloned())
            } else {
                (str_at(a, 0, "arc")?, str_at(a, 1, "arc")?, a.get(2).cloned())
            };
            let weight = match w {
                Some(w) => rational::from_json(&w)?,
                None => Rational::one(),
            };
            let (tail, head) = resolve(&idx, &t, &h)?;
            arcs.push(WeightedArc { tail, head, weight });
        }
        Self::new(vertices, arcs)
    }
}
