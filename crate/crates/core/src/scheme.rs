//! Combinatorial homotopies: sequences of elementary moves between edge-paths.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::{parse_alpha, parse_beta, AlphaCell, BetaCell, CellNameError};
use crate::complex::{SimplicialComplex, Vertex};
use crate::path::{drop_degenerate, insert_degenerate, EdgePath, PathError, Step};

/// One elementary move. Positions index the steps of the path the move is
/// applied to, i.e. the result of all previous moves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HomotopyStep {
    /// `(ab)` at `position` becomes `(ac,cb)`.
    AlphaExpand { cell: AlphaCell, position: usize },
    /// `(ac,cb)` at `position` becomes `(ab)`.
    AlphaMerge { cell: AlphaCell, position: usize },
    /// Degenerate `(cc)` becomes `(ca,ab,bc)`.
    BetaExpand { cell: BetaCell, position: usize },
    BetaMerge { cell: BetaCell, position: usize },
    /// Degenerate `(yy)` becomes `(yz,zy)`.
    X1Insert { vertex: Vertex, position: usize },
    /// `(yz,zy)` becomes `(yy)`.
    X1Cancel { position: usize },
    /// Degenerate step inserted at junction `position`.
    DegInsert { position: usize },
    DegDrop { position: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StepError {
    #[error("cell {0} is not supported by a 2-simplex of the complex")]
    CellNotSupported(String),
    #[error("{vertex} is not adjacent to {at}")]
    NotAdjacent { at: Vertex, vertex: Vertex },
    #[error("path {path} does not match move {mv} at position {position}")]
    Mismatch { mv: &'static str, position: usize, path: String },
    #[error(transparent)]
    Path(#[from] PathError),
}

impl HomotopyStep {
    pub fn move_name(&self) -> &'static str {
        match self {
            HomotopyStep::AlphaExpand { .. } => "alpha_expand",
            HomotopyStep::AlphaMerge { .. } => "alpha_merge",
            HomotopyStep::BetaExpand { .. } => "beta_expand",
            HomotopyStep::BetaMerge { .. } => "beta_merge",
            HomotopyStep::X1Insert { .. } => "x1_insert",
            HomotopyStep::X1Cancel { .. } => "x1_cancel",
            HomotopyStep::DegInsert { .. } => "deg_insert",
            HomotopyStep::DegDrop { .. } => "deg_drop",
        }
    }

    pub fn position(&self) -> usize {
        match self {
            HomotopyStep::AlphaExpand { position, .. }
            | HomotopyStep::AlphaMerge { position, .. }
            | HomotopyStep::BetaExpand { position, .. }
            | HomotopyStep::BetaMerge { position, .. }
            | HomotopyStep::X1Insert { position, .. }
            | HomotopyStep::X1Cancel { position }
            | HomotopyStep::DegInsert { position }
            | HomotopyStep::DegDrop { position } => *position,
        }
    }

    fn with_position(&self, p: usize) -> Self {
        let mut out = self.clone();
        match &mut out {
            HomotopyStep::AlphaExpand { position, .. }
            | HomotopyStep::AlphaMerge { position, .. }
            | HomotopyStep::BetaExpand { position, .. }
            | HomotopyStep::BetaMerge { position, .. }
            | HomotopyStep::X1Insert { position, .. }
            | HomotopyStep::X1Cancel { position }
            | HomotopyStep::DegInsert { position }
            | HomotopyStep::DegDrop { position } => *position = p,
        }
        out
    }

    /// Letters read and written by the move on a section over `path`:
    /// `(start, consumed, produced)`. A dropped degenerate letter is folded
    /// into a neighbour, so that neighbour belongs to the footprint.
    pub fn footprint(&self) -> (usize, usize, usize) {
        match *self {
            HomotopyStep::AlphaExpand { position, .. } => (position, 1, 2),
            HomotopyStep::AlphaMerge { position, .. } => (position, 2, 1),
            HomotopyStep::BetaExpand { position, .. } => (position, 1, 3),
            HomotopyStep::BetaMerge { position, .. } => (position, 3, 1),
            HomotopyStep::X1Insert { position, .. } => (position, 1, 2),
            HomotopyStep::X1Cancel { position } => (position, 2, 1),
            HomotopyStep::DegInsert { position } => (position, 0, 1),
            HomotopyStep::DegDrop { position } => (position.saturating_sub(1), 2, 1),
        }
    }

    fn mismatch(&self, path: &EdgePath) -> StepError {
        StepError::Mismatch {
            mv: self.move_name(),
            position: self.position(),
            path: path.to_string(),
        }
    }

    fn window<'p>(&self, path: &'p EdgePath, len: usize) -> Result<&'p [Step], StepError> {
        let p = self.position();
        path.steps().get(p..p + len).ok_or(StepError::Path(PathError::IndexOutOfRange {
            index: p + len.saturating_sub(1),
            len: path.len(),
        }))
    }

    /// Applies the move to a path, checking support in `k`.
    pub fn apply_path(&self, path: &EdgePath, k: &SimplicialComplex) -> Result<EdgePath, StepError> {
        let pos = self.position();
        match self {
            HomotopyStep::AlphaExpand { cell, .. } => {
                if !cell.is_supported(k) {
                    return Err(StepError::CellNotSupported(cell.name()));
                }
                if self.window(path, 1)?[0] != cell.base_step() {
                    return Err(self.mismatch(path));
                }
                Ok(path.replace_range(pos, 1, cell.side_steps())?)
            }
            HomotopyStep::AlphaMerge { cell, .. } => {
                if !cell.is_supported(k) {
                    return Err(StepError::CellNotSupported(cell.name()));
                }
                if self.window(path, 2)? != cell.side_steps() {
                    return Err(self.mismatch(path));
                }
                Ok(path.replace_range(pos, 2, [cell.base_step()])?)
            }
            HomotopyStep::BetaExpand { cell, .. } => {
                if !cell.is_supported(k) {
                    return Err(StepError::CellNotSupported(cell.name()));
                }
                let w = self.window(path, 1)?;
                if w[0] != Step::new(cell.base.clone(), cell.base.clone()) {
                    return Err(self.mismatch(path));
                }
                Ok(path.replace_range(pos, 1, cell.boundary())?)
            }
            HomotopyStep::BetaMerge { cell, .. } => {
                if !cell.is_supported(k) {
                    return Err(StepError::CellNotSupported(cell.name()));
                }
                if self.window(path, 3)? != cell.boundary() {
                    return Err(self.mismatch(path));
                }
                let c = cell.base.clone();
                Ok(path.replace_range(pos, 3, [Step::new(c.clone(), c)])?)
            }
            HomotopyStep::X1Insert { vertex, .. } => {
                let w = self.window(path, 1)?;
                if !w[0].is_degenerate() {
                    return Err(self.mismatch(path));
                }
                let y = w[0].from.clone();
                if !k.is_edge(&y, vertex) {
                    return Err(StepError::NotAdjacent { at: y, vertex: vertex.clone() });
                }
                Ok(path.replace_range(
                    pos,
                    1,
                    [Step::new(y.clone(), vertex.clone()), Step::new(vertex.clone(), y)],
                )?)
            }
            HomotopyStep::X1Cancel { .. } => {
                let w = self.window(path, 2)?;
                if w[0].is_degenerate() || !w[0].is_opposite(&w[1]) {
                    return Err(self.mismatch(path));
                }
                let y = w[0].from.clone();
                Ok(path.replace_range(pos, 2, [Step::new(y.clone(), y)])?)
            }
            HomotopyStep::DegInsert { .. } => {
                path.check_in(k)?;
                Ok(insert_degenerate(path, pos)?)
            }
            HomotopyStep::DegDrop { .. } => Ok(drop_degenerate(path, pos)?),
        }
    }
}

impl fmt::Display for HomotopyStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pos = self.position();
        match self {
            HomotopyStep::AlphaExpand { cell, .. } | HomotopyStep::AlphaMerge { cell, .. } => {
                write!(f, "{} {} @{pos}", self.move_name(), cell)
            }
            HomotopyStep::BetaExpand { cell, .. } | HomotopyStep::BetaMerge { cell, .. } => {
                write!(f, "{} {} @{pos}", self.move_name(), cell)
            }
            HomotopyStep::X1Insert { vertex, .. } => write!(f, "x1_insert {vertex} @{pos}"),
            _ => write!(f, "{} @{pos}", self.move_name()),
        }
    }
}

/// A start path and the moves applied to it in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepScheme {
    pub start: EdgePath,
    pub steps: Vec<HomotopyStep>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("start path: {0}")]
    Start(PathError),
    #[error("step {index} ({step}): {source}")]
    Step {
        index: usize,
        step: String,
        #[source]
        source: StepError,
    },
    #[error("step {index} moves the endpoints from ({from},{to})")]
    EndpointDrift { index: usize, from: Vertex, to: Vertex },
    #[error("steps {0} and {next} overlap and cannot be exchanged", next = .0 + 1)]
    Overlapping(usize),
    #[error("no step pair at index {0}")]
    NoSuchPair(usize),
}

impl SweepScheme {
    pub fn new(start: EdgePath, steps: Vec<HomotopyStep>) -> Self {
        SweepScheme { start, steps }
    }

    /// Exchanges steps `k` and `k+1` when their footprints are disjoint,
    /// re-indexing positions so that both moves still act on the same letters.
    pub fn swap_adjacent(&self, k: usize) -> Result<SweepScheme, SchemeError> {
        if k + 1 >= self.steps.len() {
            return Err(SchemeError::NoSuchPair(k));
        }
        let (first, second) = (&self.steps[k], &self.steps[k + 1]);
        // A dropped degenerate step folds left except at position 0, so a
        // shift can move its footprint; disjointness must hold both ways.
        let swapped = exchange(first, second)
            .filter(|(a, b)| exchange(a, b).is_some_and(|back| back == (first.clone(), second.clone())))
            .ok_or(SchemeError::Overlapping(k))?;
        let mut steps = self.steps.clone();
        steps[k] = swapped.0;
        steps[k + 1] = swapped.1;
        Ok(SweepScheme { start: self.start.clone(), steps })
    }
}

/// The pair in the other order, if the footprints are disjoint.
fn exchange(first: &HomotopyStep, second: &HomotopyStep) -> Option<(HomotopyStep, HomotopyStep)> {
    let (p, a_in, a_out) = first.footprint();
    let (q, b_in, b_out) = second.footprint();
    if q >= p + a_out {
        // second acts to the right of first's output
        let shifted = q - a_out + a_in;
        Some((second.with_position(second.position() - q + shifted), first.clone()))
    } else if q + b_in <= p {
        let shifted = p + b_out - b_in;
        Some((second.clone(), first.with_position(first.position() - p + shifted)))
    } else {
        None
    }
}

/// Runs the scheme at path level, returning every intermediate path.
pub fn validate_scheme(
    scheme: &SweepScheme,
    k: &SimplicialComplex,
) -> Result<Vec<EdgePath>, SchemeError> {
    scheme.start.check_in(k).map_err(SchemeError::Start)?;
    let (s0, t0) = (scheme.start.source().clone(), scheme.start.target().clone());
    let mut paths = vec![scheme.start.clone()];
    for (index, step) in scheme.steps.iter().enumerate() {
        let next = step
            .apply_path(paths.last().expect("nonempty"), k)
            .map_err(|source| SchemeError::Step {
                index,
                step: step.to_string(),
                source,
            })?;
        if next.source() != &s0 || next.target() != &t0 {
            return Err(SchemeError::EndpointDrift { index, from: s0, to: t0 });
        }
        paths.push(next);
    }
    Ok(paths)
}

/// Every move applicable to `path` in `k`.
pub fn applicable_steps(path: &EdgePath, k: &SimplicialComplex) -> Vec<HomotopyStep> {
    let mut out = Vec::new();
    let steps = path.steps();
    for (i, s) in steps.iter().enumerate() {
        if s.is_degenerate() {
            for z in k.neighbours(&s.from) {
                out.push(HomotopyStep::X1Insert { vertex: z.clone(), position: i });
            }
            for t in k.triangles().iter().filter(|t| t.contains(&s.from)) {
                let others: Vec<&Vertex> = t.vertices().iter().filter(|x| **x != s.from).collect();
                for (a, b) in [(others[0], others[1]), (others[1], others[0])] {
                    out.push(HomotopyStep::BetaExpand {
                        cell: BetaCell::new(s.from.clone(), a.clone(), b.clone()),
                        position: i,
                    });
                }
            }
            if steps.len() >= 2 {
                out.push(HomotopyStep::DegDrop { position: i });
            }
        } else {
            for c in k.apexes(&s.from, &s.to) {
                out.push(HomotopyStep::AlphaExpand {
                    cell: AlphaCell::new(s.from.clone(), c.clone(), s.to.clone()),
                    position: i,
                });
            }
        }
        if let Some(n) = steps.get(i + 1) {
            if !s.is_degenerate() && s.is_opposite(n) {
                out.push(HomotopyStep::X1Cancel { position: i });
            }
            if !s.is_degenerate() && !n.is_degenerate() && s.from != n.to {
                let cell = AlphaCell::new(s.from.clone(), s.to.clone(), n.to.clone());
                if cell.is_supported(k) {
                    out.push(HomotopyStep::AlphaMerge { cell, position: i });
                }
            }
            if let Some(m) = steps.get(i + 2) {
                let cell = BetaCell::new(s.from.clone(), s.to.clone(), n.to.clone());
                if s.from == m.to && cell.is_supported(k) {
                    out.push(HomotopyStep::BetaMerge { cell, position: i });
                }
            }
        }
    }
    for j in 0..=steps.len() {
        out.push(HomotopyStep::DegInsert { position: j });
    }
    out
}

/// Breadth-first search for a scheme from `p` to `q` with at most
/// `depth_bound` moves. `None` is inconclusive beyond the bound.
pub fn search_homotopy(
    p: &EdgePath,
    q: &EdgePath,
    k: &SimplicialComplex,
    depth_bound: usize,
) -> Option<SweepScheme> {
    if p.source() != q.source() || p.target() != q.target() {
        return None;
    }
    let mut parent: HashMap<EdgePath, Option<(EdgePath, HomotopyStep)>> = HashMap::new();
    parent.insert(p.clone(), None);
    let mut queue = VecDeque::from([(p.clone(), 0usize)]);
    while let Some((cur, depth)) = queue.pop_front() {
        if &cur == q {
            let mut steps = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, step))) = parent.get(&node) {
                steps.push(step.clone());
                node = prev.clone();
            }
            steps.reverse();
            return Some(SweepScheme::new(p.clone(), steps));
        }
        if depth == depth_bound {
            continue;
        }
        for step in applicable_steps(&cur, k) {
            if let Ok(next) = step.apply_path(&cur, k) {
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((cur.clone(), step)));
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    None
}

/// One move as stored in a scheme file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct StepRecord {
    #[serde(rename = "move")]
    pub mv: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<String>,
    pub position: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub start: EdgePath,
    #[serde(default)]
    pub steps: Vec<StepRecord>,
}

#[derive(Debug, Error)]
pub enum SchemeFileError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("step {index}: unknown move {mv:?}")]
    UnknownMove { index: usize, mv: String },
    #[error("step {index}: move {mv} needs a {field}")]
    MissingField { index: usize, mv: String, field: &'static str },
    #[error("step {index}: {source}")]
    Cell {
        index: usize,
        #[source]
        source: CellNameError,
    },
}

impl StepRecord {
    pub fn from_step(step: &HomotopyStep) -> Self {
        let (cell, vertex) = match step {
            HomotopyStep::AlphaExpand { cell, .. } | HomotopyStep::AlphaMerge { cell, .. } => (Some(cell.name()), None),
            HomotopyStep::BetaExpand { cell, .. } | HomotopyStep::BetaMerge { cell, .. } => (Some(cell.name()), None),
            HomotopyStep::X1Insert { vertex, .. } => (None, Some(vertex.to_string())),
            _ => (None, None),
        };
        StepRecord {
            mv: step.move_name().to_owned(),
            cell,
            position: step.position(),
            vertex,
        }
    }

    pub fn to_step(&self, index: usize) -> Result<HomotopyStep, SchemeFileError> {
        let position = self.position;
        let missing = |field| SchemeFileError::MissingField { index, mv: self.mv.clone(), field };
        let cell = || self.cell.as_deref().ok_or_else(|| missing("cell"));
        let wrap = |source| SchemeFileError::Cell { index, source };
        Ok(match self.mv.as_str() {
            "alpha_expand" => HomotopyStep::AlphaExpand { cell: parse_alpha(cell()?).map_err(wrap)?, position },
            "alpha_merge" => HomotopyStep::AlphaMerge { cell: parse_alpha(cell()?).map_err(wrap)?, position },
            "beta_expand" => HomotopyStep::BetaExpand { cell: parse_beta(cell()?).map_err(wrap)?, position },
            "beta_merge" => HomotopyStep::BetaMerge { cell: parse_beta(cell()?).map_err(wrap)?, position },
            "x1_insert" => {
                let name = self.vertex.as_deref().ok_or_else(|| missing("vertex"))?;
                let vertex = Vertex::new(name).map_err(|e| wrap(CellNameError::Vertex(e)))?;
                HomotopyStep::X1Insert { vertex, position }
            }
            "x1_cancel" => HomotopyStep::X1Cancel { position },
            "deg_insert" => HomotopyStep::DegInsert { position },
            "deg_drop" => HomotopyStep::DegDrop { position },
            other => return Err(SchemeFileError::UnknownMove { index, mv: other.to_owned() }),
        })
    }
}

impl SweepScheme {
    pub fn parse(text: &str) -> Result<SweepScheme, SchemeFileError> {
        let file: SchemeFile = serde_json::from_str(text).map_err(|e| SchemeFileError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        SweepScheme::from_file(&file)
    }

    pub fn from_file(file: &SchemeFile) -> Result<SweepScheme, SchemeFileError> {
        let steps = file
            .steps
            .iter()
            .enumerate()
            .map(|(i, r)| r.to_step(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SweepScheme::new(file.start.clone(), steps))
    }

    pub fn to_file(&self) -> SchemeFile {
        SchemeFile {
            start: self.start.clone(),
            steps: self.steps.iter().map(StepRecord::from_step).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{path, v};

    fn tetra() -> SimplicialComplex {
        SimplicialComplex::from_triangles(&[["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]])
            .unwrap()
    }

    fn alpha(name: &str) -> AlphaCell {
        parse_alpha(name).unwrap()
    }

    pub(crate) fn scheme_one() -> SweepScheme {
        SweepScheme::new(
            path("a,c,b"),
            vec![
                HomotopyStep::AlphaMerge { cell: alpha("a.c.b"), position: 0 },
                HomotopyStep::AlphaExpand { cell: alpha("a.d.b"), position: 0 },
                HomotopyStep::AlphaExpand { cell: alpha("d.c.b"), position: 1 },
                HomotopyStep::AlphaMerge { cell: alpha("a.d.c"), position: 0 },
            ],
        )
    }

    #[test]
    fn tetrahedron_scheme_paths() {
        let paths = validate_scheme(&scheme_one(), &tetra()).unwrap();
        let shown: Vec<String> = paths.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["(ac,cb)", "(ab)", "(ad,db)", "(ad,dc,cb)", "(ac,cb)"]);
    }

    #[test]
    fn empty_scheme() {
        let s = SweepScheme::new(path("a,b"), vec![]);
        assert_eq!(validate_scheme(&s, &tetra()).unwrap(), vec![path("a,b")]);
    }

    #[test]
    fn unsupported_cell() {
        let s = SweepScheme::new(
            path("a,b"),
            vec![HomotopyStep::AlphaExpand { cell: alpha("a.e.b"), position: 0 }],
        );
        match validate_scheme(&s, &tetra()) {
            Err(SchemeError::Step { index: 0, source: StepError::CellNotSupported(c), .. }) => {
                assert_eq!(c, "a.e.b")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn position_and_shape_errors() {
        let k = tetra();
        let s = SweepScheme::new(
            path("a,b"),
            vec![HomotopyStep::AlphaExpand { cell: alpha("a.c.b"), position: 3 }],
        );
        assert!(matches!(
            validate_scheme(&s, &k),
            Err(SchemeError::Step { source: StepError::Path(PathError::IndexOutOfRange { .. }), .. })
        ));
        let s = SweepScheme::new(
            path("a,d"),
            vec![HomotopyStep::AlphaExpand { cell: alpha("a.c.b"), position: 0 }],
        );
        assert!(matches!(
            validate_scheme(&s, &k),
            Err(SchemeError::Step { source: StepError::Mismatch { .. }, .. })
        ));
    }

    #[test]
    fn x1_and_degenerate_moves() {
        let k = tetra();
        let s = SweepScheme::new(
            path("a,b"),
            vec![
                HomotopyStep::DegInsert { position: 1 },
                HomotopyStep::X1Insert { vertex: v("c"), position: 1 },
                HomotopyStep::X1Cancel { position: 1 },
                HomotopyStep::DegDrop { position: 1 },
            ],
        );
        let paths = validate_scheme(&s, &k).unwrap();
        assert_eq!(paths[2].to_string(), "(ab,bc,cb)");
        assert_eq!(paths[4], path("a,b"));
    }

    #[test]
    fn beta_moves() {
        let k = tetra();
        let cell = parse_beta("c.a.b.c").unwrap();
        let s = SweepScheme::new(
            path("c"),
            vec![
                HomotopyStep::BetaExpand { cell: cell.clone(), position: 0 },
                HomotopyStep::BetaMerge { cell, position: 0 },
            ],
        );
        let paths = validate_scheme(&s, &k).unwrap();
        assert_eq!(paths[1], path("c,a,b,c"));
        assert_eq!(paths[2], path("c"));
    }

    #[test]
    fn search_finds_generating_move() {
        let k = tetra();
        let s = search_homotopy(&path("a,b"), &path("a,c,b"), &k, 1).unwrap();
        assert_eq!(s.steps, vec![HomotopyStep::AlphaExpand { cell: alpha("a.c.b"), position: 0 }]);
        let s = search_homotopy(&path("a,b"), &path("a,b"), &k, 0).unwrap();
        assert!(s.steps.is_empty());
    }

    #[test]
    fn search_two_faces() {
        let k = tetra();
        let s = search_homotopy(&path("a,b,d"), &path("a,c,d"), &k, 4).unwrap();
        assert_eq!(s.steps.len(), 2);
        assert_eq!(validate_scheme(&s, &k).unwrap().last().unwrap(), &path("a,c,d"));
        let single = SimplicialComplex::from_triangles(&[["a", "b", "c"]]).unwrap();
        assert!(search_homotopy(&path("a,b"), &path("a,c,b"), &single, 0).is_none());
    }

    #[test]
    fn swapping_disjoint_moves() {
        let k = SimplicialComplex::from_triangles(&[["a", "b", "x"], ["b", "c", "y"]]).unwrap();
        let s = SweepScheme::new(
            path("a,b,c"),
            vec![
                HomotopyStep::AlphaExpand { cell: alpha("a.x.b"), position: 0 },
                HomotopyStep::AlphaExpand { cell: alpha("b.y.c"), position: 2 },
            ],
        );
        let swapped = s.swap_adjacent(0).unwrap();
        assert_eq!(swapped.steps[0].position(), 1);
        assert_eq!(swapped.steps[1].position(), 0);
        assert_eq!(
            validate_scheme(&s, &k).unwrap().last(),
            validate_scheme(&swapped, &k).unwrap().last()
        );
        assert_eq!(swapped.swap_adjacent(0).unwrap(), s);
        let overlapping = SweepScheme::new(
            path("a,b,c"),
            vec![
                HomotopyStep::AlphaExpand { cell: alpha("a.x.b"), position: 0 },
                HomotopyStep::AlphaMerge { cell: alpha("a.x.b"), position: 0 },
            ],
        );
        assert_eq!(overlapping.swap_adjacent(0), Err(SchemeError::Overlapping(0)));
        // the drop at 0 folds right; moved to 1 it would fold into the new letter
        let fold = SweepScheme::new(
            path("a,a,b"),
            vec![HomotopyStep::DegDrop { position: 0 }, HomotopyStep::DegInsert { position: 0 }],
        );
        assert_eq!(fold.swap_adjacent(0), Err(SchemeError::Overlapping(0)));
    }

    #[test]
    fn scheme_file_roundtrip() {
        let text = r#"{"start":[["a","c"],["c","b"]],
            "steps":[{"move":"alpha_merge","cell":"acb","position":0},
                     {"move":"alpha_expand","cell":"a.d.b","position":0}]}"#;
        let s = SweepScheme::parse(text).unwrap();
        assert_eq!(s.steps[0], HomotopyStep::AlphaMerge { cell: alpha("a.c.b"), position: 0 });
        let again = serde_json::to_string(&s.to_file()).unwrap();
        assert_eq!(SweepScheme::parse(&again).unwrap(), s);
        assert!(matches!(
            SweepScheme::parse(r#"{"start":[["a","b"]],"steps":[{"move":"twist","position":0}]}"#),
            Err(SchemeFileError::UnknownMove { .. })
        ));
        assert!(matches!(
            SweepScheme::parse(r#"{"start":[["a","b"]],"steps":[{"move":"alpha_merge","position":0}]}"#),
            Err(SchemeFileError::MissingField { field: "cell", .. })
        ));
    }
}
