//! Two-dimensional connection data: a value per marked triangle.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::SweepError;
use crate::bundle::{BundleError, Connection1};
use crate::cells::{AlphaCell, BetaCell, CellName, CellNameError};
use crate::complex::{SimplicialComplex, Vertex};
use crate::group::{parse_element, parse_element_extending, Element, GroupDescriptor, GroupError};

/// How two alpha values are tied together by a relation table entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    Equal,
    Inverse,
}

/// `left = right` or `left = right⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellRelation {
    pub left: AlphaCell,
    pub right: AlphaCell,
    pub kind: RelationKind,
}

/// Where a beta value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaSource {
    /// Supplied in the connection, independently of the alpha values.
    Supplied,
    /// The value of the filling alpha cell.
    Derived,
}

/// A connection together with values on oriented triangles. Starred cells
/// are never stored: their value is the inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection2 {
    base: Connection1,
    alpha: BTreeMap<AlphaCell, Element>,
    beta: BTreeMap<BetaCell, Element>,
    relations: Vec<CellRelation>,
}

#[derive(Debug, Error)]
pub enum ConnectionError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("bad edge key {0:?}, expected \"a>b\"")]
    EdgeKey(String),
    #[error("cell {0:?}: starred values are inverses and cannot be given")]
    StarredCell(String),
    #[error("cell {0} is not supported by a 2-simplex of the complex")]
    UnsupportedCell(String),
    #[error("cell {key:?}: {source}")]
    CellName {
        key: String,
        #[source]
        source: CellNameError,
    },
    #[error("value for {key}: {source}")]
    Element {
        key: String,
        #[source]
        source: GroupError,
    },
    #[error("relation {index}: {message}")]
    Relation { index: usize, message: String },
    #[error(transparent)]
    Bundle(#[from] BundleError),
}

/// The connection file: `{"group", "edges", "cells", "cell_relations"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionFile {
    pub group: GroupDescriptor,
    pub edges: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cells: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cell_relations: Vec<(String, String, String)>,
}

impl Connection2 {
    pub fn new(
        base: Connection1,
        alpha: BTreeMap<AlphaCell, Element>,
        beta: BTreeMap<BetaCell, Element>,
        relations: Vec<CellRelation>,
    ) -> Result<Self, ConnectionError> {
        let k = base.complex();
        for cell in alpha.keys().chain(relations.iter().flat_map(|r| [&r.left, &r.right])) {
            if !cell.is_supported(k) {
                return Err(ConnectionError::UnsupportedCell(cell.name()));
            }
        }
        for cell in beta.keys() {
            if !cell.is_supported(k) {
                return Err(ConnectionError::UnsupportedCell(cell.name()));
            }
        }
        for (name, x) in alpha.iter().map(|(c, x)| (c.name(), x)).chain(beta.iter().map(|(c, x)| (c.name(), x))) {
            if !base.group().contains(x) {
                return Err(ConnectionError::Element {
                    key: name,
                    source: GroupError::OutOfRange { value: x.to_string(), group: base.group().to_string() },
                });
            }
        }
        Ok(Connection2 { base, alpha, beta, relations })
    }

    /// Every alpha cell of every face set to the identity.
    pub fn flat(base: Connection1) -> Self {
        let id = base.group().identity();
        let mut alpha = BTreeMap::new();
        for t in base.complex().triangles() {
            let [a, b, c] = t.vertices();
            for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                alpha.insert(AlphaCell::new(x.clone(), y.clone(), z.clone()), id.clone());
            }
        }
        Connection2 { base, alpha, beta: BTreeMap::new(), relations: vec![] }
    }

    pub fn base(&self) -> &Connection1 {
        &self.base
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        self.base.complex()
    }

    pub fn group(&self) -> &GroupDescriptor {
        self.base.group()
    }

    pub fn alpha_values(&self) -> &BTreeMap<AlphaCell, Element> {
        &self.alpha
    }

    pub fn beta_values(&self) -> &BTreeMap<BetaCell, Element> {
        &self.beta
    }

    pub fn relations(&self) -> &[CellRelation] {
        &self.relations
    }

    /// Parses a letter, adding unknown generators to a free group.
    pub fn parse_letter(&mut self, text: &str) -> Result<Element, GroupError> {
        parse_element_extending(text, self.base.group_mut())
    }

    /// `φ` for an alpha cell, following the relation table when the cell has
    /// no value of its own.
    pub fn alpha_value(&self, cell: &AlphaCell) -> Result<Element, SweepError> {
        if let Some(x) = self.alpha.get(cell) {
            return Ok(x.clone());
        }
        let mut seen = BTreeSet::from([cell]);
        let mut queue = VecDeque::from([(cell, false)]);
        while let Some((c, inverted)) = queue.pop_front() {
            for r in &self.relations {
                let other = if &r.left == c {
                    &r.right
                } else if &r.right == c {
                    &r.left
                } else {
                    continue;
                };
                if !seen.insert(other) {
                    continue;
                }
                let inverted = inverted ^ (r.kind == RelationKind::Inverse);
                if let Some(x) = self.alpha.get(other) {
                    return Ok(if inverted { x.inverse() } else { x.clone() });
                }
                queue.push_back((other, inverted));
            }
        }
        Err(SweepError::MissingCell(cell.name()))
    }

    /// The beta value: supplied, or else that of the filling alpha cell.
    pub fn beta_value(&self, cell: &BetaCell) -> Result<(Element, BetaSource), SweepError> {
        match self.beta.get(cell) {
            Some(x) => Ok((x.clone(), BetaSource::Supplied)),
            None => Ok((self.alpha_value(&cell.filling_alpha())?, BetaSource::Derived)),
        }
    }

    /// Warnings about data that the move decomposition would normally derive.
    pub fn flags(&self) -> Vec<String> {
        self.beta
            .keys()
            .map(|b| format!("beta value {} supplied independently of {}", b.name(), b.filling_alpha().name()))
            .collect()
    }

    pub fn from_file(file: &ConnectionFile, complex: Arc<SimplicialComplex>) -> Result<Self, ConnectionError> {
        let group = file.group.clone();
        let element = |key: &str, text: &str| {
            parse_element(text, &group).map_err(|source| ConnectionError::Element { key: key.to_owned(), source })
        };
        let mut edges = Vec::new();
        for (key, text) in &file.edges {
            let (a, b) = key.split_once('>').ok_or_else(|| ConnectionError::EdgeKey(key.clone()))?;
            let vertex = |s: &str| Vertex::new(s.trim()).map_err(|_| ConnectionError::EdgeKey(key.clone()));
            edges.push(((vertex(a)?, vertex(b)?), element(key, text)?));
        }
        let base = Connection1::new(complex, group.clone(), edges)?;
        let mut alpha = BTreeMap::new();
        let mut beta = BTreeMap::new();
        for (key, text) in &file.cells {
            if key.trim_end().ends_with('*') {
                return Err(ConnectionError::StarredCell(key.clone()));
            }
            let name = CellName::parse(key).map_err(|source| ConnectionError::CellName { key: key.clone(), source })?;
            match name {
                CellName::Alpha(a) => alpha.insert(a, element(key, text)?),
                CellName::Beta(b) => beta.insert(b, element(key, text)?),
            };
        }
        let mut relations = Vec::new();
        for (index, (l, r, kind)) in file.cell_relations.iter().enumerate() {
            let bad = |message: String| ConnectionError::Relation { index, message };
            let cell = |s: &str| match CellName::parse(s) {
                Ok(CellName::Alpha(a)) => Ok(a),
                _ => Err(bad(format!("{s:?} is not an alpha cell"))),
            };
            let kind = match kind.as_str() {
                "equal" => RelationKind::Equal,
                "inverse" => RelationKind::Inverse,
                other => return Err(bad(format!("unknown relation {other:?}"))),
            };
            relations.push(CellRelation { left: cell(l)?, right: cell(r)?, kind });
        }
        Connection2::new(base, alpha, beta, relations)
    }

    pub fn parse(text: &str, complex: Arc<SimplicialComplex>) -> Result<Self, ConnectionError> {
        let file: ConnectionFile = serde_json::from_str(text).map_err(|e| ConnectionError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Connection2::from_file(&file, complex)
    }

    pub fn to_file(&self) -> ConnectionFile {
        ConnectionFile {
            group: self.group().clone(),
            edges: self.base.stored().iter().map(|((a, b), x)| (format!("{a}>{b}"), x.to_string())).collect(),
            cells: self
                .alpha
                .iter()
                .map(|(c, x)| (c.name(), x.to_string()))
                .chain(self.beta.iter().map(|(c, x)| (c.name(), x.to_string())))
                .collect(),
            cell_relations: self
                .relations
                .iter()
                .map(|r| {
                    let kind = match r.kind {
                        RelationKind::Equal => "equal",
                        RelationKind::Inverse => "inverse",
                    };
                    (r.left.name(), r.right.name(), kind.to_owned())
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::parse_alpha;

    fn tetra() -> Arc<SimplicialComplex> {
        Arc::new(
            SimplicialComplex::from_triangles(&[["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]])
                .unwrap(),
        )
    }

    const EDGES: &str = r#""a>b": "1", "a>c": "0", "a>d": "2", "b>c": "0", "b>d": "1", "c>d": "0""#;

    fn load(cells: &str) -> Result<Connection2, ConnectionError> {
        let text = format!(r#"{{"group": {{"cyclic": 5}}, "edges": {{{EDGES}}}, {cells}}}"#);
        Connection2::parse(&text, tetra())
    }

    #[test]
    fn loads_cells_and_derives_inverses_through_relations() {
        let c = load(
            r#""cells": {"a.c.d": "2", "acb": "1"},
               "cell_relations": [["a.d.c", "a.c.d", "inverse"], ["d.a.c", "a.d.c", "equal"]]"#,
        )
        .unwrap();
        let value = |n: &str| c.alpha_value(&parse_alpha(n).unwrap()).map(|x| x.to_string());
        assert_eq!(value("a.c.b").unwrap(), "1");
        assert_eq!(value("a.d.c").unwrap(), "3");
        assert_eq!(value("d.a.c").unwrap(), "3");
        assert!(matches!(value("b.c.d"), Err(SweepError::MissingCell(_))));
        assert_eq!(c.base().edge_value(&Vertex::new("b").unwrap(), &Vertex::new("a").unwrap()).unwrap().to_string(), "4");
    }

    #[test]
    fn rejects_bad_cells() {
        assert!(matches!(load(r#""cells": {"a.c.b*": "1"}"#), Err(ConnectionError::StarredCell(_))));
        let k = Arc::new(SimplicialComplex::from_triangles(&[["a", "b", "c"], ["a", "b", "d"]]).unwrap());
        let text = r#"{"group": {"cyclic": 2}, "edges": {"a>b":"1","a>c":"0","b>c":"0","a>d":"0","b>d":"0"},
                       "cells": {"a.c.d": "1"}}"#;
        assert!(matches!(Connection2::parse(text, k), Err(ConnectionError::UnsupportedCell(_))));
        assert!(matches!(load(r#""cells": {"a.b": "1"}"#), Err(ConnectionError::CellName { .. })));
        assert!(matches!(load(r#""cells": {"a.c.b": "7"}"#), Err(ConnectionError::Element { .. })));
        assert!(matches!(load(r#""colour": 1"#), Err(ConnectionError::Parse { .. })));
        assert!(matches!(
            load(r#""cell_relations": [["a.c.b", "a.b.c", "twisted"]]"#),
            Err(ConnectionError::Relation { index: 0, .. })
        ));
    }

    #[test]
    fn beta_values_derived_or_flagged() {
        let c = load(r#""cells": {"a.b.c": "3", "c.b.a.c": "2"}"#).unwrap();
        let (x, src) = c.beta_value(&crate::cells::parse_beta("c.a.b.c").unwrap()).unwrap();
        assert_eq!((x.to_string().as_str(), src), ("3", BetaSource::Derived));
        let (x, src) = c.beta_value(&crate::cells::parse_beta("c.b.a.c").unwrap()).unwrap();
        assert_eq!((x.to_string().as_str(), src), ("2", BetaSource::Supplied));
        assert_eq!(c.flags().len(), 1);
    }

    #[test]
    fn file_round_trip() {
        let c = load(r#""cells": {"a.c.d": "2"}, "cell_relations": [["a.d.c", "a.c.d", "inverse"]]"#).unwrap();
        let text = serde_json::to_string(&c.to_file()).unwrap();
        assert_eq!(Connection2::parse(&text, tetra()).unwrap(), c);
    }
}
