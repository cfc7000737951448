//! Oriented triangles: the generating 2-cells between edge-paths.
//!
//! Alpha cells `(acb)` go from the edge `(ab)` to the path `(ac,cb)`; beta
//! cells `(cabc)` go from the degenerate edge `(cc)` to the boundary loop
//! `(ca,ab,bc)`. Starred cells are their reverses; flat and point triangles
//! are identities.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex, Vertex};
use crate::path::{reduce_x1, EdgePath, Step};

/// The alpha cell `(acb) : (ab) -> (ac,cb)`, written `a.c.b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaCell {
    pub source: Vertex,
    pub apex: Vertex,
    pub target: Vertex,
}

impl AlphaCell {
    pub fn new(source: Vertex, apex: Vertex, target: Vertex) -> Self {
        AlphaCell { source, apex, target }
    }

    pub fn name(&self) -> String {
        format!("{}.{}.{}", self.source, self.apex, self.target)
    }

    pub fn base_step(&self) -> Step {
        Step::new(self.source.clone(), self.target.clone())
    }

    pub fn side_steps(&self) -> [Step; 2] {
        [
            Step::new(self.source.clone(), self.apex.clone()),
            Step::new(self.apex.clone(), self.target.clone()),
        ]
    }

    pub fn is_supported(&self, k: &SimplicialComplex) -> bool {
        k.is_face(&self.source, &self.apex, &self.target)
    }
}

impl fmt::Display for AlphaCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The beta cell `(cabc) : (cc) -> (ca,ab,bc)`, written `c.a.b.c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaCell {
    pub base: Vertex,
    pub first: Vertex,
    pub second: Vertex,
}

impl BetaCell {
    pub fn new(base: Vertex, first: Vertex, second: Vertex) -> Self {
        BetaCell { base, first, second }
    }

    pub fn name(&self) -> String {
        format!("{0}.{1}.{2}.{0}", self.base, self.first, self.second)
    }

    pub fn boundary(&self) -> [Step; 3] {
        [
            Step::new(self.base.clone(), self.first.clone()),
            Step::new(self.first.clone(), self.second.clone()),
            Step::new(self.second.clone(), self.base.clone()),
        ]
    }

    /// The alpha cell filling `(a,c) -> (a,b),(b,c)` used when the loop is
    /// built as a cancelling pair followed by an alpha expansion.
    pub fn filling_alpha(&self) -> AlphaCell {
        AlphaCell::new(self.first.clone(), self.second.clone(), self.base.clone())
    }

    /// Whether the loop runs in the lexicographic cyclic order of the face.
    pub fn is_canonical_direction(&self) -> bool {
        let mut vs = [&self.base, &self.first, &self.second];
        let rotations = [
            [&self.base, &self.first, &self.second],
            [&self.first, &self.second, &self.base],
            [&self.second, &self.base, &self.first],
        ];
        vs.sort();
        rotations.contains(&vs)
    }

    pub fn is_supported(&self, k: &SimplicialComplex) -> bool {
        k.is_face(&self.base, &self.first, &self.second)
    }
}

impl fmt::Display for BetaCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellName {
    Alpha(AlphaCell),
    Beta(BetaCell),
}

#[derive(Debug, Error)]
pub enum CellNameError {
    #[error("malformed cell name {0:?}")]
    Malformed(String),
    #[error(transparent)]
    Vertex(#[from] ComplexError),
}

impl CellName {
    /// Parses `a.c.b` or `c.a.b.c`. Undotted names (`acb`, `cabc`) are read
    /// one character per vertex.
    pub fn parse(text: &str) -> Result<CellName, CellNameError> {
        let text = text.trim();
        let parts: Vec<String> = if text.contains('.') {
            text.split('.').map(str::to_owned).collect()
        } else {
            text.chars().map(String::from).collect()
        };
        let vs = parts
            .iter()
            .map(|p| Vertex::new(p.as_str()))
            .collect::<Result<Vec<_>, _>>()?;
        let malformed = || CellNameError::Malformed(text.to_owned());
        match vs.as_slice() {
            [a, c, b] if a != b && a != c && c != b => {
                Ok(CellName::Alpha(AlphaCell::new(a.clone(), c.clone(), b.clone())))
            }
            [c, a, b, c2] if c == c2 && c != a && a != b && b != c => {
                Ok(CellName::Beta(BetaCell::new(c.clone(), a.clone(), b.clone())))
            }
            _ => Err(malformed()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            CellName::Alpha(a) => a.name(),
            CellName::Beta(b) => b.name(),
        }
    }

    pub fn is_supported(&self, k: &SimplicialComplex) -> bool {
        match self {
            CellName::Alpha(a) => a.is_supported(k),
            CellName::Beta(b) => b.is_supported(k),
        }
    }
}

pub fn parse_alpha(text: &str) -> Result<AlphaCell, CellNameError> {
    match CellName::parse(text)? {
        CellName::Alpha(a) => Ok(a),
        CellName::Beta(_) => Err(CellNameError::Malformed(text.to_owned())),
    }
}

pub fn parse_beta(text: &str) -> Result<BetaCell, CellNameError> {
    match CellName::parse(text)? {
        CellName::Beta(b) => Ok(b),
        CellName::Alpha(_) => Err(CellNameError::Malformed(text.to_owned())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    Alpha,
    AlphaStar,
    Beta,
    BetaStar,
    IdentityEdge,
    IdentityVertex,
}

impl CellKind {
    pub const ALL: [CellKind; 6] = [
        CellKind::Alpha,
        CellKind::AlphaStar,
        CellKind::Beta,
        CellKind::BetaStar,
        CellKind::IdentityEdge,
        CellKind::IdentityVertex,
    ];
}

/// A generating 2-cell with its marked vertices and boundary paths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedTriangle {
    pub kind: CellKind,
    /// 0-source and 0-target.
    pub marked: (Vertex, Vertex),
    /// Third vertex of an alpha cell.
    pub apex: Option<Vertex>,
    pub source_path: EdgePath,
    pub target_path: EdgePath,
    /// For beta cells: does the boundary loop follow the lexicographic
    /// cyclic order of the face? Always `true` for the other kinds.
    pub canonical_direction: bool,
}

impl OrientedTriangle {
    pub fn alpha(cell: &AlphaCell) -> Self {
        let [s1, s2] = cell.side_steps();
        OrientedTriangle {
            kind: CellKind::Alpha,
            marked: (cell.source.clone(), cell.target.clone()),
            apex: Some(cell.apex.clone()),
            source_path: EdgePath::from_steps_unchecked(vec![cell.base_step()]),
            target_path: EdgePath::from_steps_unchecked(vec![s1, s2]),
            canonical_direction: true,
        }
    }

    pub fn beta(cell: &BetaCell) -> Self {
        OrientedTriangle {
            kind: CellKind::Beta,
            marked: (cell.base.clone(), cell.base.clone()),
            apex: None,
            source_path: EdgePath::identity(cell.base.clone()),
            target_path: EdgePath::from_steps_unchecked(cell.boundary().to_vec()),
            canonical_direction: cell.is_canonical_direction(),
        }
    }

    pub fn identity_edge(a: Vertex, b: Vertex) -> Self {
        let p = EdgePath::from_steps_unchecked(vec![Step::new(a.clone(), b.clone())]);
        OrientedTriangle {
            kind: CellKind::IdentityEdge,
            marked: (a, b),
            apex: None,
            source_path: p.clone(),
            target_path: p,
            canonical_direction: true,
        }
    }

    pub fn identity_vertex(a: Vertex) -> Self {
        OrientedTriangle {
            kind: CellKind::IdentityVertex,
            marked: (a.clone(), a.clone()),
            apex: None,
            source_path: EdgePath::identity(a.clone()),
            target_path: EdgePath::identity(a),
            canonical_direction: true,
        }
    }

    /// The reversed cell (alpha <-> alpha*, beta <-> beta*).
    pub fn reversed(&self) -> Self {
        let kind = match self.kind {
            CellKind::Alpha => CellKind::AlphaStar,
            CellKind::AlphaStar => CellKind::Alpha,
            CellKind::Beta => CellKind::BetaStar,
            CellKind::BetaStar => CellKind::Beta,
            k => k,
        };
        OrientedTriangle {
            kind,
            source_path: self.target_path.clone(),
            target_path: self.source_path.clone(),
            ..self.clone()
        }
    }

    /// `a.c.b`, `c.a.b.c`, `a.b` or `a`, with `*` for the reversed kinds.
    pub fn name(&self) -> String {
        let (s, t) = &self.marked;
        match self.kind {
            CellKind::Alpha | CellKind::AlphaStar => {
                let apex = self.apex.as_ref().expect("alpha cells carry an apex");
                let star = if self.kind == CellKind::AlphaStar { "*" } else { "" };
                format!("{s}.{apex}.{t}{star}")
            }
            CellKind::Beta | CellKind::BetaStar => {
                let lp = if self.kind == CellKind::Beta { &self.target_path } else { &self.source_path };
                let vs: Vec<&str> = lp.vertices().iter().map(|v| v.as_str()).collect();
                let star = if self.kind == CellKind::BetaStar { "*" } else { "" };
                format!("{}{star}", vs.join("."))
            }
            CellKind::IdentityEdge => format!("{s}.{t}"),
            CellKind::IdentityVertex => s.to_string(),
        }
    }
}

/// Enumerates the oriented triangles of `k`, optionally restricted to one kind.
///
/// Per 2-simplex: six alpha cells (ordered base edge, apex the third vertex),
/// six alpha*, three beta (one per basepoint, loop in the face's canonical
/// cyclic order) and three beta*. Identity cells: one per edge orientation and
/// one per vertex.
pub fn oriented_triangles(k: &SimplicialComplex, kind: Option<CellKind>) -> Vec<OrientedTriangle> {
    let wanted = |c: CellKind| kind.is_none_or(|k| k == c);
    let mut out = Vec::new();
    for t in k.triangles() {
        let [p, q, r] = t.vertices();
        if wanted(CellKind::Alpha) || wanted(CellKind::AlphaStar) {
            for (s, a, e) in [(p, r, q), (q, r, p), (p, q, r), (r, q, p), (q, p, r), (r, p, q)] {
                let cell = OrientedTriangle::alpha(&AlphaCell::new(s.clone(), a.clone(), e.clone()));
                if wanted(CellKind::AlphaStar) {
                    out.push(cell.reversed());
                }
                if wanted(CellKind::Alpha) {
                    out.push(cell);
                }
            }
        }
        if wanted(CellKind::Beta) || wanted(CellKind::BetaStar) {
            for (c, a, b) in [(r, p, q), (p, q, r), (q, r, p)] {
                let cell = OrientedTriangle::beta(&BetaCell::new(c.clone(), a.clone(), b.clone()));
                if wanted(CellKind::BetaStar) {
                    out.push(cell.reversed());
                }
                if wanted(CellKind::Beta) {
                    out.push(cell);
                }
            }
        }
    }
    if wanted(CellKind::IdentityEdge) {
        for e in k.edges() {
            let (a, b) = e.vertices();
            out.push(OrientedTriangle::identity_edge(a.clone(), b.clone()));
            out.push(OrientedTriangle::identity_edge(b.clone(), a.clone()));
        }
    }
    if wanted(CellKind::IdentityVertex) {
        out.extend(k.vertices().iter().cloned().map(OrientedTriangle::identity_vertex));
    }
    out.sort();
    out
}

fn as_alpha(edge: &EdgePath, side: &EdgePath, k: &SimplicialComplex) -> Option<AlphaCell> {
    match (edge.steps(), side.steps()) {
        ([base], [s1, s2]) if !base.is_degenerate() => {
            let cell = AlphaCell::new(base.from.clone(), s1.to.clone(), base.to.clone());
            (s1.from == base.from && s2.to == base.to && cell.is_supported(k)).then_some(cell)
        }
        _ => None,
    }
}

fn as_beta(point: &EdgePath, loop_: &EdgePath, k: &SimplicialComplex) -> Option<BetaCell> {
    match loop_.steps() {
        [s1, s2, s3] if point.is_identity() && point.source() == &s1.from => {
            let cell = BetaCell::new(s1.from.clone(), s2.from.clone(), s3.from.clone());
            (s3.to == s1.from && cell.is_supported(k)).then_some(cell)
        }
        _ => None,
    }
}

/// Identifies the elementary cell between two paths, comparing them after
/// X¹-reduction with endpoints fixed. `None` when no single oriented
/// triangle realizes the pair.
pub fn classify_cell(
    source: &EdgePath,
    target: &EdgePath,
    k: &SimplicialComplex,
) -> Option<OrientedTriangle> {
    if source.source() != target.source() || source.target() != target.target() {
        return None;
    }
    if source.check_in(k).is_err() || target.check_in(k).is_err() {
        return None;
    }
    let (s, t) = (reduce_x1(source), reduce_x1(target));
    if s == t {
        return match s.steps() {
            [step] if step.is_degenerate() => Some(OrientedTriangle::identity_vertex(step.from.clone())),
            [step] => Some(OrientedTriangle::identity_edge(step.from.clone(), step.to.clone())),
            _ => None,
        };
    }
    if let Some(cell) = as_alpha(&s, &t, k) {
        return Some(OrientedTriangle::alpha(&cell));
    }
    if let Some(cell) = as_alpha(&t, &s, k) {
        return Some(OrientedTriangle::alpha(&cell).reversed());
    }
    if let Some(cell) = as_beta(&s, &t, k) {
        return Some(OrientedTriangle::beta(&cell));
    }
    if let Some(cell) = as_beta(&t, &s, k) {
        return Some(OrientedTriangle::beta(&cell).reversed());
    }
    None
}
