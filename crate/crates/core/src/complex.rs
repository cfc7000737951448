//! Simplicial complexes of dimension at most two.
//!
//! A complex is loaded from a small JSON document, kept immutable afterwards
//! and checked by [`SimplicialComplex::validate`], which reports closure and
//! purity violations as diagnostics rather than failing.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Characters reserved by the text formats (cell names, edge keys, path specs).
const RESERVED: &[char] = &['.', '>', ',', '*', '^', '(', ')', '[', ']', '"'];

/// Opaque vertex name, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Vertex(String);

impl Vertex {
    pub fn new(name: impl Into<String>) -> Result<Self, ComplexError> {
        let name = name.into();
        if name.is_empty()
            || name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
        {
            return Err(ComplexError::InvalidName(name));
        }
        Ok(Vertex(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Vertex::new(s).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<&str> for Vertex {
    type Error = ComplexError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        Vertex::new(s)
    }
}

/// Unordered 1-simplex, stored with `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self, ComplexError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(ComplexError::DegenerateSimplex(format!("{{{a},{b}}}"))),
        }
    }

    pub fn vertices(&self) -> (&Vertex, &Vertex) {
        (&self.lo, &self.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// Unordered 2-simplex, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle([Vertex; 3]);

impl Triangle {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Result<Self, ComplexError> {
        let mut vs = [a, b, c];
        vs.sort();
        if vs[0] == vs[1] || vs[1] == vs[2] {
            return Err(ComplexError::DegenerateSimplex(format!(
                "{{{},{},{}}}",
                vs[0], vs[1], vs[2]
            )));
        }
        Ok(Triangle(vs))
    }

    pub fn vertices(&self) -> &[Vertex; 3] {
        &self.0
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.contains(v)
    }

    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = &self.0;
        [
            Edge { lo: a.clone(), hi: b.clone() },
            Edge { lo: a.clone(), hi: c.clone() },
            Edge { lo: b.clone(), hi: c.clone() },
        ]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("simplex {0} repeats a vertex")]
    DegenerateSimplex(String),
    #[error("invalid complex: {}", join_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),
}

fn join_diagnostics(d: &[Diagnostic]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// A violated invariant, naming the offending simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    UndeclaredVertex { simplex: String, vertex: Vertex },
    VertexNotInTriangle(Vertex),
    EdgeNotInTriangle(Edge),
    NoTriangles,
}

impl Diagnostic {
    pub fn rule(&self) -> &'static str {
        match self {
            Diagnostic::UndeclaredVertex { .. } => "closure",
            _ => "pure_dim2",
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::UndeclaredVertex { simplex, vertex } => {
                write!(f, "vertex {vertex} of simplex {simplex} is not declared")
            }
            Diagnostic::VertexNotInTriangle(v) => write!(f, "vertex {v} not in any 2-simplex"),
            Diagnostic::EdgeNotInTriangle(e) => write!(f, "edge {e} not in any 2-simplex"),
            Diagnostic::NoTriangles => f.write_str("complex has no 2-simplex"),
        }
    }
}

/// On-disk layout of a complex file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub triangles: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    #[serde(default)]
    pub pure_dim2: bool,
}

/// Vertices, edges and 2-simplices of a polyhedron. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
    triangles: BTreeSet<Triangle>,
    pure_dim2: bool,
}

impl SimplicialComplex {
    /// Builds a complex from raw parts. Triangle faces are added to the edge
    /// set; vertices are taken as declared, so closure may still fail.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = Edge>,
        triangles: impl IntoIterator<Item = Triangle>,
        pure_dim2: bool,
    ) -> Result<Self, ComplexError> {
        let mut vs = BTreeSet::new();
        for v in vertices {
            if !vs.insert(v.clone()) {
                return Err(ComplexError::DuplicateVertex(v.0));
            }
        }
        let triangles: BTreeSet<Triangle> = triangles.into_iter().collect();
        let mut edges: BTreeSet<Edge> = edges.into_iter().collect();
        for t in &triangles {
            edges.extend(t.edges());
        }
        Ok(SimplicialComplex {
            vertices: vs,
            edges,
            triangles,
            pure_dim2,
        })
    }

    /// Convenience constructor: vertices are the union of the triangles.
    pub fn from_triangles(tris: &[[&str; 3]]) -> Result<Self, ComplexError> {
        let mut vertices = BTreeSet::new();
        let mut triangles = Vec::new();
        for [a, b, c] in tris {
            let (a, b, c) = (Vertex::new(*a)?, Vertex::new(*b)?, Vertex::new(*c)?);
            vertices.extend([a.clone(), b.clone(), c.clone()]);
            triangles.push(Triangle::new(a, b, c)?);
        }
        Self::from_parts(vertices, [], triangles, true)
    }

    /// Parses a complex file without checking closure or purity.
    pub fn parse(text: &str) -> Result<Self, ComplexError> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| ComplexError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_file(&file)
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self, ComplexError> {
        let vertices = file
            .vertices
            .iter()
            .map(|v| Vertex::new(v.as_str()))
            .collect::<Result<Vec<_>, _>>()?;
        let edges = file
            .edges
            .iter()
            .flatten()
            .map(|[a, b]| Edge::new(Vertex::new(a.as_str())?, Vertex::new(b.as_str())?))
            .collect::<Result<Vec<_>, _>>()?;
        let triangles = file
            .triangles
            .iter()
            .map(|[a, b, c]| {
                Triangle::new(
                    Vertex::new(a.as_str())?,
                    Vertex::new(b.as_str())?,
                    Vertex::new(c.as_str())?,
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_parts(vertices, edges, triangles, file.pure_dim2)
    }

    pub fn to_file(&self) -> ComplexFile {
        let tri_edges: BTreeSet<Edge> = self.triangles.iter().flat_map(Triangle::edges).collect();
        let extra: Vec<[String; 2]> = self
            .edges
            .iter()
            .filter(|e| !tri_edges.contains(e))
            .map(|e| [e.lo.0.clone(), e.hi.0.clone()])
            .collect();
        ComplexFile {
            vertices: self.vertices.iter().map(|v| v.0.clone()).collect(),
            triangles: self
                .triangles
                .iter()
                .map(|t| t.0.clone().map(|v| v.0))
                .collect(),
            edges: (!extra.is_empty()).then_some(extra),
            pure_dim2: self.pure_dim2,
        }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn triangles(&self) -> &BTreeSet<Triangle> {
        &self.triangles
    }

    pub fn declares_pure_dim2(&self) -> bool {
        self.pure_dim2
    }

    pub fn vertex(&self, name: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.0 == name)
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_edge(&self, a: &Vertex, b: &Vertex) -> bool {
        Edge::new(a.clone(), b.clone()).is_ok_and(|e| self.edges.contains(&e))
    }

    pub fn is_face(&self, a: &Vertex, b: &Vertex, c: &Vertex) -> bool {
        Triangle::new(a.clone(), b.clone(), c.clone()).is_ok_and(|t| self.triangles.contains(&t))
    }

    /// Vertices adjacent to `v` along an edge, in order.
    pub fn neighbours(&self, v: &Vertex) -> Vec<&Vertex> {
        self.edges
            .iter()
            .filter_map(|e| {
                if &e.lo == v {
                    Some(&e.hi)
                } else if &e.hi == v {
                    Some(&e.lo)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Third vertices `c` such that `{a, b, c}` is a 2-simplex.
    pub fn apexes(&self, a: &Vertex, b: &Vertex) -> Vec<&Vertex> {
        self.triangles
            .iter()
            .filter(|t| t.contains(a) && t.contains(b) && a != b)
            .filter_map(|t| t.0.iter().find(|v| *v != a && *v != b))
            .collect()
    }

    /// Closure and (optionally) pure-dimension checks. Empty iff valid.
    pub fn validate(&self, require_pure_dim2: bool) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let mut face_edges = BTreeSet::new();
        for t in &self.triangles {
            for v in &t.0 {
                if !self.vertices.contains(v) {
                    out.push(Diagnostic::UndeclaredVertex {
                        simplex: t.to_string(),
                        vertex: v.clone(),
                    });
                }
            }
            face_edges.extend(t.edges());
        }
        for e in self.edges.iter().filter(|e| !face_edges.contains(*e)) {
            for v in [&e.lo, &e.hi] {
                if !self.vertices.contains(v) {
                    out.push(Diagnostic::UndeclaredVertex {
                        simplex: e.to_string(),
                        vertex: v.clone(),
                    });
                }
            }
        }
        if require_pure_dim2 {
            if self.triangles.is_empty() {
                out.push(Diagnostic::NoTriangles);
            }
            for v in &self.vertices {
                if !self.triangles.iter().any(|t| t.contains(v)) {
                    out.push(Diagnostic::VertexNotInTriangle(v.clone()));
                }
            }
            for e in self.edges.iter().filter(|e| !face_edges.contains(*e)) {
                out.push(Diagnostic::EdgeNotInTriangle(e.clone()));
            }
        }
        out
    }
}

/// Parses and validates a complex file, honouring its `pure_dim2` flag.
pub fn load_complex(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let k = SimplicialComplex::parse(text)?;
    let diagnostics = k.validate(k.pure_dim2);
    if diagnostics.is_empty() {
        Ok(k)
    } else {
        Err(ComplexError::Invalid(diagnostics))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TETRA: &str = r#"{"vertices":["a","b","c","d"],
        "triangles":[["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]],
        "pure_dim2":true}"#;

    #[test]
    fn tetrahedron_counts() {
        let k = load_complex(TETRA).unwrap();
        assert_eq!(k.vertices().len(), 4);
        assert_eq!(k.edges().len(), 6);
        assert_eq!(k.triangles().len(), 4);
        assert!(k.validate(true).is_empty());
    }

    #[test]
    fn single_vertex() {
        let k = load_complex(r#"{"vertices":["a"],"triangles":[]}"#).unwrap();
        assert_eq!(k.edges().len(), 0);
        assert!(k.triangles().is_empty());
    }

    #[test]
    fn faces_are_derived() {
        let k = load_complex(r#"{"vertices":["a","b","c"],"triangles":[["a","b","c"]]}"#).unwrap();
        let names: Vec<String> = k.edges().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["{a,b}", "{a,c}", "{b,c}"]);
    }

    #[test]
    fn isolated_vertex_breaks_purity() {
        let k = SimplicialComplex::parse(
            r#"{"vertices":["a","b","c","x"],"triangles":[["a","b","c"]]}"#,
        )
        .unwrap();
        let d = k.validate(true);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_string(), "vertex x not in any 2-simplex");
        assert!(k.validate(false).is_empty());
    }

    #[test]
    fn undeclared_vertex_is_a_closure_violation() {
        let k = SimplicialComplex::parse(r#"{"vertices":["a","b"],"triangles":[["a","b","c"]]}"#)
            .unwrap();
        let d = k.validate(false);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].rule(), "closure");
        assert!(d[0].to_string().contains("{a,b,c}"));
        assert!(matches!(
            load_complex(r#"{"vertices":["a","b"],"triangles":[["a","b","c"]]}"#),
            Err(ComplexError::Invalid(_))
        ));
    }

    #[test]
    fn dangling_declared_edge() {
        let k = SimplicialComplex::parse(
            r#"{"vertices":["a","b","c"],"triangles":[["a","b","c"]],"edges":[["a","z"]]}"#,
        )
        .unwrap();
        let d = k.validate(true);
        assert_eq!(d.len(), 2, "{d:?}");
    }

    #[test]
    fn load_errors() {
        match load_complex("{\"vertices\": [\"a\",\n 3]}") {
            Err(ComplexError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            load_complex(r#"{"vertices":["a","a"]}"#),
            Err(ComplexError::DuplicateVertex(_))
        ));
        assert!(matches!(
            load_complex(r#"{"vertices":["a"],"colour":"red"}"#),
            Err(ComplexError::Parse { .. })
        ));
        assert!(matches!(
            load_complex(r#"{"vertices":["a","b"],"triangles":[["a","a","b"]]}"#),
            Err(ComplexError::DegenerateSimplex(_))
        ));
        assert!(matches!(
            load_complex(r#"{"vertices":["a b"]}"#),
            Err(ComplexError::InvalidName(_))
        ));
    }

    #[test]
    fn apexes_and_neighbours() {
        let k = load_complex(TETRA).unwrap();
        let a = k.vertex("a").unwrap().clone();
        let b = k.vertex("b").unwrap().clone();
        let ap: Vec<&str> = k.apexes(&a, &b).into_iter().map(Vertex::as_str).collect();
        assert_eq!(ap, ["c", "d"]);
        assert_eq!(k.neighbours(&a).len(), 3);
    }

    #[test]
    fn file_roundtrip() {
        let k = load_complex(TETRA).unwrap();
        let text = serde_json::to_string(&k.to_file()).unwrap();
        assert_eq!(load_complex(&text).unwrap(), k);
    }
}
