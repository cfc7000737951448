//! Simplicial G-bundles with connection, gauge-fixed: one group element per
//! oriented edge. Holonomy is the left-to-right product along an edge-path.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{SimplicialComplex, Vertex};
use crate::group::{Element, GroupDescriptor, GroupError, Matrix, Representation};
use crate::path::EdgePath;

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("({0},{1}) is not an edge of the complex")]
    NotAnEdge(Vertex, Vertex),
    #[error("edge {{{0},{1}}} has no connection value")]
    MissingEdge(Vertex, Vertex),
    #[error("edge {{{0},{1}}} is given more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("{element} is not an element of {group}")]
    ForeignElement { element: String, group: String },
    #[error("gauge transformation has no value at vertex {0}")]
    MissingVertex(Vertex),
    #[error("path {0} is not a loop")]
    NotALoop(String),
    #[error("connections live on different groups ({0} vs {1})")]
    GroupMismatch(String, String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A connection: `f_ab` per edge, with `f_ba = f_ab⁻¹` and `f_aa = e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection1 {
    complex: Arc<SimplicialComplex>,
    group: GroupDescriptor,
    /// One stored orientation per edge.
    values: BTreeMap<(Vertex, Vertex), Element>,
}

impl Connection1 {
    /// Total on the edge set of `complex`; each edge given in exactly one
    /// orientation.
    pub fn new(
        complex: Arc<SimplicialComplex>,
        group: GroupDescriptor,
        values: impl IntoIterator<Item = ((Vertex, Vertex), Element)>,
    ) -> Result<Self, BundleError> {
        let mut stored: BTreeMap<(Vertex, Vertex), Element> = BTreeMap::new();
        for ((a, b), x) in values {
            if !complex.is_edge(&a, &b) {
                return Err(BundleError::NotAnEdge(a, b));
            }
            if !group.contains(&x) {
                return Err(BundleError::ForeignElement { element: x.to_string(), group: group.to_string() });
            }
            if stored.contains_key(&(b.clone(), a.clone())) || stored.insert((a.clone(), b.clone()), x).is_some() {
                return Err(BundleError::DuplicateEdge(a, b));
            }
        }
        for e in complex.edges() {
            let (a, b) = e.vertices();
            if !stored.contains_key(&(a.clone(), b.clone())) && !stored.contains_key(&(b.clone(), a.clone())) {
                return Err(BundleError::MissingEdge(a.clone(), b.clone()));
            }
        }
        Ok(Connection1 { complex, group, values: stored })
    }

    /// The flat connection with `f_ab = e` everywhere.
    pub fn trivial(complex: Arc<SimplicialComplex>, group: GroupDescriptor) -> Self {
        let id = group.identity();
        let values = complex
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = e.vertices();
                ((a.clone(), b.clone()), id.clone())
            })
            .collect();
        Connection1 { complex, group, values }
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    /// For adding fresh generators to a free group; existing values stay valid.
    pub(crate) fn group_mut(&mut self) -> &mut GroupDescriptor {
        &mut self.group
    }

    /// Stored orientations and their values.
    pub fn stored(&self) -> &BTreeMap<(Vertex, Vertex), Element> {
        &self.values
    }

    /// `f_ab`, derived from the stored orientation.
    pub fn edge_value(&self, a: &Vertex, b: &Vertex) -> Result<Element, BundleError> {
        if a == b {
            if !self.complex.contains_vertex(a) {
                return Err(BundleError::NotAnEdge(a.clone(), b.clone()));
            }
            return Ok(self.group.identity());
        }
        if let Some(x) = self.values.get(&(a.clone(), b.clone())) {
            return Ok(x.clone());
        }
        self.values
            .get(&(b.clone(), a.clone()))
            .map(Element::inverse)
            .ok_or_else(|| BundleError::NotAnEdge(a.clone(), b.clone()))
    }
}

/// A gauge transformation: `n_a` per vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GaugeTransform {
    values: BTreeMap<Vertex, Element>,
}

impl GaugeTransform {
    pub fn new(values: BTreeMap<Vertex, Element>) -> Self {
        GaugeTransform { values }
    }

    pub fn identity<'a>(vertices: impl IntoIterator<Item = &'a Vertex>, group: &GroupDescriptor) -> Self {
        let id = group.identity();
        GaugeTransform {
            values: vertices.into_iter().map(|v| (v.clone(), id.clone())).collect(),
        }
    }

    pub fn get(&self, v: &Vertex) -> Option<&Element> {
        self.values.get(v)
    }

    pub fn values(&self) -> &BTreeMap<Vertex, Element> {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.values().all(Element::is_identity)
    }

    /// Pointwise product `n·m`: transforming by `self` then by `other`.
    pub fn then(&self, other: &GaugeTransform) -> Result<GaugeTransform, BundleError> {
        let mut values = BTreeMap::new();
        for (v, n) in &self.values {
            let m = other.get(v).ok_or_else(|| BundleError::MissingVertex(v.clone()))?;
            values.insert(v.clone(), n.mul(m)?);
        }
        Ok(GaugeTransform { values })
    }
}

/// Ordered product of `f` along the steps of `path`.
pub fn holonomy(f: &Connection1, path: &EdgePath) -> Result<Element, BundleError> {
    let mut acc = f.group.identity();
    for s in path.steps() {
        acc = acc.mul(&f.edge_value(&s.from, &s.to)?)?;
    }
    Ok(acc)
}

/// `g_ab = n_a⁻¹ · f_ab · n_b`, the solution of `f_ab n_b = n_a g_ab`.
pub fn gauge_transform(f: &Connection1, n: &GaugeTransform) -> Result<Connection1, BundleError> {
    let at = |v: &Vertex| n.get(v).ok_or_else(|| BundleError::MissingVertex(v.clone()));
    for v in f.complex.vertices() {
        at(v)?;
    }
    let mut values = BTreeMap::new();
    for ((a, b), x) in &f.values {
        values.insert((a.clone(), b.clone()), at(a)?.inverse().mul(x)?.mul(at(b)?)?);
    }
    Ok(Connection1 { complex: f.complex.clone(), group: f.group.clone(), values })
}

/// A gauge `n` with `gauge_transform(f, n) == g`, found by fixing `n` at a
/// root of each connected component and propagating along a spanning tree.
pub fn find_isomorphism(f: &Connection1, g: &Connection1) -> Result<Option<GaugeTransform>, BundleError> {
    if f.group != g.group {
        return Err(BundleError::GroupMismatch(f.group.to_string(), g.group.to_string()));
    }
    let k = &f.complex;
    let candidates = f.group.elements()?;
    let mut solution: BTreeMap<Vertex, Element> = BTreeMap::new();
    for root in k.vertices() {
        if solution.contains_key(root) {
            continue;
        }
        // spanning tree of the component, in BFS order
        let mut order = vec![(root.clone(), None::<Vertex>)];
        let mut seen = std::collections::BTreeSet::from([root.clone()]);
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(a) = queue.pop_front() {
            for b in k.neighbours(&a) {
                if seen.insert(b.clone()) {
                    order.push((b.clone(), Some(a.clone())));
                    queue.push_back(b.clone());
                }
            }
        }
        let mut found = None;
        'candidates: for n_root in &candidates {
            let mut n: BTreeMap<Vertex, Element> = BTreeMap::new();
            for (v, parent) in &order {
                let value = match parent {
                    None => n_root.clone(),
                    // n_b = f_ab⁻¹ n_a g_ab
                    Some(a) => f.edge_value(a, v)?.inverse().mul(&n[a])?.mul(&g.edge_value(a, v)?)?,
                };
                n.insert(v.clone(), value);
            }
            for e in k.edges().iter().filter(|e| seen.contains(e.vertices().0)) {
                let (a, b) = e.vertices();
                if f.edge_value(a, b)?.mul(&n[b])? != n[a].mul(&g.edge_value(a, b)?)? {
                    continue 'candidates;
                }
            }
            found = Some(n);
            break;
        }
        match found {
            Some(n) => solution.extend(n),
            None => return Ok(None),
        }
    }
    Ok(Some(GaugeTransform { values: solution }))
}

/// Trace of the holonomy of a loop in a representation.
pub fn wilson_loop(f: &Connection1, path: &EdgePath, rho: &Representation) -> Result<f64, BundleError> {
    if !path.is_loop() {
        return Err(BundleError::NotALoop(path.to_string()));
    }
    Ok(rho.represent(&holonomy(f, path)?)?.trace())
}

/// Linear transport along `path` in the associated vector bundle.
pub fn associated_transport(f: &Connection1, path: &EdgePath, rho: &Representation) -> Result<Matrix, BundleError> {
    Ok(rho.represent(&holonomy(f, path)?)?)
}
