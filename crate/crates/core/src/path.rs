//! Edge-paths: the arrows of the simplicial groupoid of a polyhedron.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{SimplicialComplex, Vertex};

/// An ordered vertex pair `(x, y)`; degenerate when `x == y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub from: Vertex,
    pub to: Vertex,
}

impl Step {
    pub fn new(from: Vertex, to: Vertex) -> Self {
        Step { from, to }
    }

    pub fn is_degenerate(&self) -> bool {
        self.from == self.to
    }

    pub fn reversed(&self) -> Step {
        Step::new(self.to.clone(), self.from.clone())
    }

    /// `true` when `other` walks back along this step.
    pub fn is_opposite(&self, other: &Step) -> bool {
        self.from == other.to && self.to == other.from
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("edge-path must contain at least one step")]
    Empty,
    #[error("steps {index} and {} are not composable", .index + 1)]
    NotComposable { index: usize },
    #[error("cannot compose: path ends at {left} but next starts at {right}")]
    EndpointMismatch { left: Vertex, right: Vertex },
    #[error("index {index} out of range for path of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("step {0} is not degenerate")]
    NotDegenerate(usize),
    #[error("cannot drop the only step of a path")]
    TooShort,
    #[error("step ({0},{1}) is not an edge of the complex")]
    NotInComplex(Vertex, Vertex),
}

/// A nonempty composable sequence of steps. The identity at `x` is `((x,x))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Vertex, Vertex)>", into = "Vec<(Vertex, Vertex)>")]
pub struct EdgePath {
    steps: Vec<Step>,
}

impl TryFrom<Vec<(Vertex, Vertex)>> for EdgePath {
    type Error = PathError;

    fn try_from(pairs: Vec<(Vertex, Vertex)>) -> Result<Self, Self::Error> {
        EdgePath::new(pairs.into_iter().map(|(a, b)| Step::new(a, b)).collect())
    }
}

impl From<EdgePath> for Vec<(Vertex, Vertex)> {
    fn from(p: EdgePath) -> Self {
        p.steps.into_iter().map(|s| (s.from, s.to)).collect()
    }
}

impl EdgePath {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        if steps.is_empty() {
            return Err(PathError::Empty);
        }
        if let Some(index) = steps.windows(2).position(|w| w[0].to != w[1].from) {
            return Err(PathError::NotComposable { index });
        }
        Ok(EdgePath { steps })
    }

    pub fn identity(v: Vertex) -> Self {
        EdgePath {
            steps: vec![Step::new(v.clone(), v)],
        }
    }

    /// Path through consecutive vertices; a single vertex gives the identity.
    pub fn through(vertices: &[Vertex]) -> Result<Self, PathError> {
        match vertices {
            [] => Err(PathError::Empty),
            [v] => Ok(Self::identity(v.clone())),
            vs => Ok(EdgePath {
                steps: vs
                    .windows(2)
                    .map(|w| Step::new(w[0].clone(), w[1].clone()))
                    .collect(),
            }),
        }
    }

    /// Parses a vertex sequence such as `a,b,d,a` (or `a>b>d>a`).
    pub fn parse_vertices(text: &str) -> Result<Self, crate::complex::ComplexError> {
        let vs = text
            .split([',', '>'])
            .map(|s| Vertex::new(s.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::through(&vs).expect("split yields at least one item"))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn source(&self) -> &Vertex {
        &self.steps[0].from
    }

    pub fn target(&self) -> &Vertex {
        &self.steps[self.steps.len() - 1].to
    }

    pub fn is_loop(&self) -> bool {
        self.source() == self.target()
    }

    pub fn is_identity(&self) -> bool {
        self.steps.iter().all(Step::is_degenerate)
    }

    /// The `len + 1` vertices visited, in order.
    pub fn vertices(&self) -> Vec<&Vertex> {
        std::iter::once(self.source())
            .chain(self.steps.iter().map(|s| &s.to))
            .collect()
    }

    /// Vertex at junction `k`: the source of step `k`, or the target when `k == len`.
    pub fn junction(&self, k: usize) -> Option<&Vertex> {
        match k.cmp(&self.steps.len()) {
            std::cmp::Ordering::Less => Some(&self.steps[k].from),
            std::cmp::Ordering::Equal => Some(self.target()),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Every step is an edge of `k` or a degenerate step at one of its vertices.
    pub fn check_in(&self, k: &SimplicialComplex) -> Result<(), PathError> {
        for s in &self.steps {
            let ok = if s.is_degenerate() {
                k.contains_vertex(&s.from)
            } else {
                k.is_edge(&s.from, &s.to)
            };
            if !ok {
                return Err(PathError::NotInComplex(s.from.clone(), s.to.clone()));
            }
        }
        Ok(())
    }

    /// Drops degenerate steps unless the whole path is degenerate, in which
    /// case it becomes the single identity step.
    pub fn normalized(&self) -> EdgePath {
        let steps: Vec<Step> = self
            .steps
            .iter()
            .filter(|s| !s.is_degenerate())
            .cloned()
            .collect();
        if steps.is_empty() {
            EdgePath::identity(self.source().clone())
        } else {
            EdgePath { steps }
        }
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> EdgePath {
        debug_assert!(EdgePath::new(steps.clone()).is_ok());
        EdgePath { steps }
    }

    pub(crate) fn replace_range(
        &self,
        start: usize,
        len: usize,
        with: impl IntoIterator<Item = Step>,
    ) -> Result<EdgePath, PathError> {
        let mut steps = self.steps.clone();
        steps.splice(start..start + len, with);
        EdgePath::new(steps)
    }
}

impl fmt::Display for EdgePath {
    /// `(ac,cb)` when every vertex name is a single character, `(a.c,c.b)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let short = self
            .steps
            .iter()
            .all(|s| s.from.as_str().chars().count() == 1 && s.to.as_str().chars().count() == 1);
        let sep = if short { "" } else { "." };
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("{}{sep}{}", s.from, s.to))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Concatenation in the groupoid; degenerate steps are absorbed.
pub fn compose_paths(p: &EdgePath, q: &EdgePath) -> Result<EdgePath, PathError> {
    if p.target() != q.source() {
        return Err(PathError::EndpointMismatch {
            left: p.target().clone(),
            right: q.source().clone(),
        });
    }
    let steps: Vec<Step> = p.steps.iter().chain(&q.steps).cloned().collect();
    Ok(EdgePath { steps }.normalized())
}

pub fn invert_path(p: &EdgePath) -> EdgePath {
    EdgePath {
        steps: p.steps.iter().rev().map(Step::reversed).collect(),
    }
}

/// Normal form under cancellation of neighbouring opposite steps and removal
/// of degenerate steps. Endpoints are preserved.
pub fn reduce_x1(p: &EdgePath) -> EdgePath {
    let mut stack: Vec<Step> = Vec::with_capacity(p.len());
    for s in p.steps.iter().filter(|s| !s.is_degenerate()) {
        if stack.last().is_some_and(|top| top.is_opposite(s)) {
            stack.pop();
        } else {
            stack.push(s.clone());
        }
    }
    if stack.is_empty() {
        EdgePath::identity(p.source().clone())
    } else {
        EdgePath { steps: stack }
    }
}

pub fn x1_homotopic(p: &EdgePath, q: &EdgePath) -> bool {
    p.source() == q.source() && p.target() == q.target() && reduce_x1(p) == reduce_x1(q)
}

/// Inserts a degenerate step at junction `k` (`0 <= k <= len`).
pub fn insert_degenerate(p: &EdgePath, k: usize) -> Result<EdgePath, PathError> {
    let v = p
        .junction(k)
        .ok_or(PathError::IndexOutOfRange { index: k, len: p.len() })?
        .clone();
    let mut steps = p.steps.clone();
    steps.insert(k, Step::new(v.clone(), v));
    Ok(EdgePath { steps })
}

/// Removes the degenerate step at `l`; the path must keep at least one step.
pub fn drop_degenerate(p: &EdgePath, l: usize) -> Result<EdgePath, PathError> {
    let step = p
        .steps
        .get(l)
        .ok_or(PathError::IndexOutOfRange { index: l, len: p.len() })?;
    if !step.is_degenerate() {
        return Err(PathError::NotDegenerate(l));
    }
    if p.len() < 2 {
        return Err(PathError::TooShort);
    }
    let mut steps = p.steps.clone();
    steps.remove(l);
    Ok(EdgePath { steps })
}

#[cfg(test)]
pub(crate) fn v(name: &str) -> Vertex {
    Vertex::new(name).unwrap()
}

#[cfg(test)]
pub(crate) fn path(text: &str) -> EdgePath {
    EdgePath::parse_vertices(text).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn steps(pairs: &[(&str, &str)]) -> EdgePath {
        EdgePath::new(pairs.iter().map(|(a, b)| Step::new(v(a), v(b))).collect()).unwrap()
    }

    #[test]
    fn composition() {
        assert_eq!(compose_paths(&path("a,b"), &path("b,c")).unwrap(), path("a,b,c"));
        assert_eq!(compose_paths(&path("a"), &path("a")).unwrap(), path("a"));
        assert_eq!(compose_paths(&path("a,b"), &path("b")).unwrap(), path("a,b"));
        assert_eq!(
            compose_paths(&path("a,b"), &path("c,d")),
            Err(PathError::EndpointMismatch { left: v("b"), right: v("c") })
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(EdgePath::new(vec![]), Err(PathError::Empty));
        assert_eq!(
            EdgePath::new(vec![Step::new(v("a"), v("b")), Step::new(v("c"), v("d"))]),
            Err(PathError::NotComposable { index: 0 })
        );
    }

    #[test]
    fn inversion() {
        assert_eq!(invert_path(&path("a,b,c")), path("c,b,a"));
        assert_eq!(invert_path(&path("a")), path("a"));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_x1(&path("a,b,a")), path("a"));
        assert_eq!(reduce_x1(&path("a,b,c,b,d")), path("a,b,d"));
        assert_eq!(reduce_x1(&steps(&[("a", "b"), ("b", "b"), ("b", "a"), ("a", "c")])), path("a,c"));
    }

    #[test]
    fn x1_homotopy() {
        let p = path("a,b,c");
        let back = path("c,d,c");
        assert!(x1_homotopic(&p, &compose_paths(&p, &back).unwrap()));
        assert!(!x1_homotopic(&path("a,b"), &path("a,c,b")));
        assert!(!x1_homotopic(&p, &invert_path(&p)));
    }

    #[test]
    fn shift_maps() {
        let p = path("a,b,c");
        let q = insert_degenerate(&p, 1).unwrap();
        assert_eq!(q, steps(&[("a", "b"), ("b", "b"), ("b", "c")]));
        assert_eq!(q.len(), p.len() + 1);
        assert_eq!(drop_degenerate(&q, 1).unwrap(), p);
        assert_eq!(insert_degenerate(&p, 2).unwrap().steps()[2], Step::new(v("c"), v("c")));
        assert_eq!(
            insert_degenerate(&p, 3),
            Err(PathError::IndexOutOfRange { index: 3, len: 2 })
        );
        assert_eq!(drop_degenerate(&p, 0), Err(PathError::NotDegenerate(0)));
        assert_eq!(drop_degenerate(&path("a"), 0), Err(PathError::TooShort));
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(path("a,c,b").to_string(), "(ac,cb)");
        assert_eq!(path("v1,v2").to_string(), "(v1.v2)");
        let json = serde_json::to_string(&path("a,c,b")).unwrap();
        assert_eq!(json, r#"[["a","c"],["c","b"]]"#);
        let back: EdgePath = serde_json::from_str(&json).unwrap();
        assert_eq!(back, path("a,c,b"));
        assert!(serde_json::from_str::<EdgePath>(r#"[["a","c"],["b","d"]]"#).is_err());
        assert!(serde_json::from_str::<EdgePath>("[]").is_err());
    }
}
