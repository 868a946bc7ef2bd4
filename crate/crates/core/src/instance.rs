//! Problem instances: a digraph with per-arc costs and per-arc matrices.

use std::collections::{HashMap, HashSet};
use std::fmt;

use indexmap::IndexMap;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix2x2;
use crate::rational::{self, serde_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    General,
    /// No pair of opposite arcs.
    Oriented,
    /// Every arc has its opposite.
    Symmetric,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::General => "general",
            Kind::Oriented => "oriented",
            Kind::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Arc in index form: `tail`/`head` index `Instance::vertices`, `matrix` indexes the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub cost: Rational,
    pub matrix: usize,
}

/// JSON form of an arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawArc {
    pub tail: String,
    pub head: String,
    #[serde(with = "serde_rational")]
    pub c: Rational,
    pub matrix: String,
}

/// JSON form of an instance, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawInstance {
    pub kind: Kind,
    pub matrices: IndexMap<String, Matrix2x2>,
    pub vertices: Vec<String>,
    pub arcs: Vec<RawArc>,
}

impl RawInstance {
    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

/// A validated instance. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    kind: Kind,
    vertices: Vec<String>,
    family: IndexMap<String, Matrix2x2>,
    arcs: Vec<Arc>,
}

/// Checks every instance invariant and converts to index form.
pub fn validate(raw: &RawInstance) -> Result<Instance> {
    let index = vertex_index(&raw.vertices)?;
    let mut arcs = Vec::with_capacity(raw.arcs.len());
    for a in &raw.arcs {
        let lookup = |v: &String| {
            index.get(v.as_str()).copied().ok_or_else(|| Error::UnknownVertex {
                tail: a.tail.clone(),
                head: a.head.clone(),
                vertex: v.clone(),
            })
        };
        let tail = lookup(&a.tail)?;
        let head = lookup(&a.head)?;
        let matrix = raw
            .matrices
            .get_index_of(&a.matrix)
            .ok_or_else(|| Error::UnknownMatrix {
                tail: a.tail.clone(),
                head: a.head.clone(),
                matrix: a.matrix.clone(),
            })?;
        arcs.push(Arc {
            tail,
            head,
            cost: a.c.clone(),
            matrix,
        });
    }
    Instance::from_parts(raw.kind, raw.vertices.clone(), raw.matrices.clone(), arcs)
}

fn vertex_index(vertices: &[String]) -> Result<HashMap<&str, usize>> {
    let mut index = HashMap::with_capacity(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.as_str(), i).is_some() {
            return Err(Error::DuplicateVertex(v.clone()));
        }
    }
    Ok(index)
}

impl Instance {
    /// Builds an instance from index-form parts, checking every invariant.
    pub fn from_parts(
        kind: Kind,
        vertices: Vec<String>,
        family: IndexMap<String, Matrix2x2>,
        arcs: Vec<Arc>,
    ) -> Result<Self> {
        vertex_index(&vertices)?;
        let n = vertices.len();
        let name = |i: usize| vertices[i].clone();
        let mut seen = HashSet::with_capacity(arcs.len());
        for a in &arcs {
            if a.tail >= n || a.head >= n {
                return Err(Error::Malformed(format!(
                    "arc index ({}, {}) out of range for {n} vertices",
                    a.tail, a.head
                )));
            }
            if a.tail == a.head {
                return Err(Error::SelfLoop(name(a.tail)));
            }
            if a.cost.is_negative() {
                return Err(Error::NegativeCost {
                    tail: name(a.tail),
                    head: name(a.head),
                    cost: rational::format(&a.cost),
                });
            }
            if a.matrix >= family.len() {
                return Err(Error::UnknownMatrix {
                    tail: name(a.tail),
                    head: name(a.head),
                    matrix: format!("#{}", a.matrix),
                });
            }
            if !seen.insert((a.tail, a.head)) {
                return Err(Error::DuplicateArc {
                    tail: name(a.tail),
                    head: name(a.head),
                });
            }
            if kind == Kind::Oriented && seen.contains(&(a.head, a.tail)) {
                return Err(Error::KindViolation {
                    tail: name(a.tail),
                    head: name(a.head),
                    kind: "oriented",
                    reason: "the opposite arc is also present",
                });
            }
        }
        if kind == Kind::Symmetric {
            if let Some(a) = arcs.iter().find(|a| !seen.contains(&(a.head, a.tail))) {
                return Err(Error::KindViolation {
                    tail: name(a.tail),
                    head: name(a.head),
                    kind: "symmetric",
                    reason: "the opposite arc is missing",
                });
            }
        }
        Ok(Self {
            kind,
            vertices,
            family,
            arcs,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        validate(&RawInstance::from_json_str(text)?)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn family(&self) -> &IndexMap<String, Matrix2x2> {
        &self.family
    }

    pub fn matrix_of(&self, arc: &Arc) -> &Matrix2x2 {
        &self.family[arc.matrix]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    /// Arc indices incident to each vertex (an arc appears under both endpoints).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (i, a) in self.arcs.iter().enumerate() {
            inc[a.tail].push(i);
            inc[a.head].push(i);
        }
        inc
    }

    /// Vertices with no incident arc.
    pub fn isolated(&self) -> Vec<bool> {
        let mut iso = vec![true; self.vertices.len()];
        for a in &self.arcs {
            iso[a.tail] = false;
            iso[a.head] = false;
        }
        iso
    }

    /// Same arcs and family, relabelled with a different kind (revalidated).
    pub fn with_kind(&self, kind: Kind) -> Result<Self> {
        Self::from_parts(
            kind,
            self.vertices.clone(),
            self.family.clone(),
            self.arcs.clone(),
        )
    }

    /// Same digraph with the family replaced entry by entry.
    pub fn with_family(&self, family: IndexMap<String, Matrix2x2>) -> Result<Self> {
        Self::from_parts(self.kind, self.vertices.clone(), family, self.arcs.clone())
    }

    pub fn to_raw(&self) -> RawInstance {
        RawInstance {
            kind: self.kind,
            matrices: self.family.clone(),
            vertices: self.vertices.clone(),
            arcs: self
                .arcs
                .iter()
                .map(|a| RawArc {
                    tail: self.vertices[a.tail].clone(),
                    head: self.vertices[a.head].clone(),
                    c: a.cost.clone(),
                    matrix: self.family.get_index(a.matrix).expect("validated").0.clone(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("instance serializes")
    }
}

/// Incremental construction of instances for reductions and adapters.
#[derive(Debug, Clone)]
pub struct InstanceBuilder {
    kind: Kind,
    vertices: Vec<String>,
    names: HashSet<String>,
    family: IndexMap<String, Matrix2x2>,
    arcs: Vec<Arc>,
}

impl InstanceBuilder {
    pub fn new(kind: Kind) -> Self {
        Self {
            kind,
            vertices: Vec::new(),
            names: HashSet::new(),
            family: IndexMap::new(),
            arcs: Vec::new(),
        }
    }

    /// Registers a matrix, returning its family index. Re-registering an id replaces nothing.
    pub fn matrix(&mut self, id: impl Into<String>, m: Matrix2x2) -> usize {
        let (idx, _) = self.family.insert_full(id.into(), m);
        idx
    }

    /// Adds a vertex with exactly this id.
    pub fn vertex(&mut self, id: impl Into<String>) -> Result<usize> {
        let id = id.into();
        if !self.names.insert(id.clone()) {
            return Err(Error::DuplicateVertex(id));
        }
        self.vertices.push(id);
        Ok(self.vertices.len() - 1)
    }

    /// Adds a vertex whose id starts with `base`, suffixed until unused.
    pub fn fresh_vertex(&mut self, base: &str) -> usize {
        let mut id = base.to_string();
        let mut k = 1usize;
        while self.names.contains(&id) {
            id = format!("{base}~{k}");
            k += 1;
        }
        self.vertex(id).expect("id is fresh")
    }

    pub fn arc(&mut self, tail: usize, head: usize, cost: Rational, matrix: usize) {
        self.arcs.push(Arc {
            tail,
            head,
            cost,
            matrix,
        });
    }

    pub fn arcs_mut(&mut self) -> &mut [Arc] {
        &mut self.arcs
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn build(self) -> Result<Instance> {
        Instance::from_parts(self.kind, self.vertices, self.family, self.arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hard_path_json() -> &'static str {
        r#"{"kind":"oriented",
            "matrices":{"M1":[[4,2],[2,6]],"M2":[[7,5],[6,2]]},
            "vertices":["x","y","z"],
            "arcs":[{"tail":"x","head":"y","c":1,"matrix":"M1"},
                    {"tail":"y","head":"z","c":2,"matrix":"M2"}]}"#
    }

    #[test]
    fn hard_path_validates() {
        let inst = Instance::from_json_str(hard_path_json()).unwrap();
        assert_eq!(inst.kind(), Kind::Oriented);
        assert_eq!(inst.arcs().len(), 2);
        assert_eq!(inst.matrix_of(&inst.arcs()[1]), &Matrix2x2::from_ints([[7, 5], [6, 2]]));
    }

    fn raw_with(kind: Kind, arcs: &[(&str, &str, &str)]) -> RawInstance {
        RawInstance {
            kind,
            matrices: [("M".to_string(), Matrix2x2::from_ints([[1, 0], [0, 1]]))]
                .into_iter()
                .collect(),
            vertices: vec!["x".into(), "y".into(), "z".into()],
            arcs: arcs
                .iter()
                .map(|(t, h, c)| RawArc {
                    tail: t.to_string(),
                    head: h.to_string(),
                    c: rational::parse(c).unwrap(),
                    matrix: "M".into(),
                })
                .collect(),
        }
    }

    #[test]
    fn opposite_arcs_in_oriented_instance() {
        let raw = raw_with(Kind::Oriented, &[("x", "y", "1"), ("y", "x", "1")]);
        match validate(&raw) {
            Err(Error::KindViolation { tail, head, .. }) => {
                assert_eq!((tail.as_str(), head.as_str()), ("y", "x"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(validate(&RawInstance {
            kind: Kind::General,
            ..raw
        })
        .is_ok());
    }

    #[test]
    fn negative_cost() {
        let raw = raw_with(Kind::General, &[("x", "y", "-1")]);
        assert!(matches!(validate(&raw), Err(Error::NegativeCost { .. })));
    }

    #[test]
    fn duplicate_and_self_loop() {
        let raw = raw_with(Kind::General, &[("x", "y", "1"), ("x", "y", "2")]);
        assert!(matches!(validate(&raw), Err(Error::DuplicateArc { .. })));
        let raw = raw_with(Kind::General, &[("z", "z", "1")]);
        assert_eq!(validate(&raw), Err(Error::SelfLoop("z".into())));
    }

    #[test]
    fn unknown_matrix_and_vertex() {
        let mut raw = raw_with(Kind::General, &[("x", "y", "1")]);
        raw.arcs[0].matrix = "Q".into();
        assert!(matches!(validate(&raw), Err(Error::UnknownMatrix { matrix, .. }) if matrix == "Q"));
        let raw = raw_with(Kind::General, &[("x", "w", "1")]);
        assert!(matches!(validate(&raw), Err(Error::UnknownVertex { vertex, .. }) if vertex == "w"));
    }

    #[test]
    fn symmetric_needs_both_directions() {
        let raw = raw_with(Kind::Symmetric, &[("x", "y", "1")]);
        assert!(matches!(validate(&raw), Err(Error::KindViolation { .. })));
        let raw = raw_with(Kind::Symmetric, &[("x", "y", "1"), ("y", "x", "0")]);
        assert!(validate(&raw).is_ok());
    }

    #[test]
    fn duplicate_vertex_rejected() {
        let mut raw = raw_with(Kind::General, &[]);
        raw.vertices.push("x".into());
        assert_eq!(validate(&raw), Err(Error::DuplicateVertex("x".into())));
    }

    #[test]
    fn json_roundtrip_is_stable() {
        let inst = Instance::from_json_str(hard_path_json()).unwrap();
        let text = inst.to_json_string();
        let again = Instance::from_json_str(&text).unwrap();
        assert_eq!(inst, again);
        assert_eq!(text, again.to_json_string());
    }

    #[test]
    fn builder_fresh_ids() {
        let mut b = InstanceBuilder::new(Kind::General);
        b.vertex("s").unwrap();
        let s2 = b.fresh_vertex("s");
        let s3 = b.fresh_vertex("s");
        let inst = b.build().unwrap();
        assert_eq!(inst.vertices()[s2], "s~1");
        assert_eq!(inst.vertices()[s3], "s~2");
    }
}
