//! Sweeping functors: composites of moves, their defects, and comparisons.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{apply_step, Connection2, Section, SectionRecord, SweepError};
use crate::bundle::GaugeTransform;
use crate::cells::AlphaCell;
use crate::complex::Vertex;
use crate::group::{parse_element_extending, Element, GroupDescriptor, GroupError};
use crate::path::EdgePath;
use crate::scheme::{HomotopyStep, SweepScheme};

/// Every section visited by a scheme, start first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepTrace {
    pub scheme: SweepScheme,
    pub sections: Vec<Section>,
}

impl SweepTrace {
    pub fn initial(&self) -> &Section {
        &self.sections[0]
    }

    pub fn final_section(&self) -> &Section {
        self.sections.last().expect("a trace holds at least the start")
    }

    pub fn records(&self) -> Vec<SectionRecord> {
        self.sections.iter().map(SectionRecord::from_section).collect()
    }
}

impl fmt::Display for SweepTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sections {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Applies the moves of `scheme` to `start` in order.
pub fn run_scheme(start: &Section, scheme: &SweepScheme, c: &Connection2) -> Result<SweepTrace, SweepError> {
    if start.path() != &scheme.start {
        return Err(SweepError::PathMismatch {
            expected: scheme.start.to_string(),
            found: start.path().to_string(),
        });
    }
    let mut sections = vec![start.clone()];
    for (index, step) in scheme.steps.iter().enumerate() {
        let next = apply_step(sections.last().expect("nonempty"), step, c).map_err(|e| SweepError::Step {
            index,
            step: step.to_string(),
            source: Box::new(e),
        })?;
        sections.push(next);
    }
    Ok(SweepTrace { scheme: scheme.clone(), sections })
}

/// Letterwise defects `gᵢ = initialᵢ⁻¹ · finalᵢ` after a gauge on the final
/// section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectReport {
    pub path: EdgePath,
    pub defects: Vec<Element>,
    pub gauge_used: GaugeTransform,
}

impl DefectReport {
    pub fn is_trivial(&self) -> bool {
        self.defects.iter().all(Element::is_identity)
    }
}

impl fmt::Display for DefectReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let defects: Vec<String> = self.defects.iter().map(ToString::to_string).collect();
        write!(f, "{} -> ({})", self.path, defects.join(", "))?;
        let gauge: Vec<String> = self.gauge_used.values().iter().map(|(v, n)| format!("{v}={n}")).collect();
        if !gauge.is_empty() {
            write!(f, " [gauge {}]", gauge.join(", "))?;
        }
        Ok(())
    }
}

/// Serialized form of a defect report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefectRecord {
    pub path: EdgePath,
    pub defects: Vec<String>,
    pub gauge_used: BTreeMap<Vertex, String>,
}

impl DefectRecord {
    pub fn from_report(r: &DefectReport) -> Self {
        DefectRecord {
            path: r.path.clone(),
            defects: r.defects.iter().map(ToString::to_string).collect(),
            gauge_used: r.gauge_used.values().iter().map(|(v, n)| (v.clone(), n.to_string())).collect(),
        }
    }

    pub fn to_report(&self, group: &mut GroupDescriptor) -> Result<DefectReport, GroupError> {
        let defects = self
            .defects
            .iter()
            .map(|t| parse_element_extending(t, group))
            .collect::<Result<Vec<_>, _>>()?;
        let mut gauge = BTreeMap::new();
        for (v, t) in &self.gauge_used {
            gauge.insert(v.clone(), parse_element_extending(t, group)?);
        }
        Ok(DefectReport { path: self.path.clone(), defects, gauge_used: GaugeTransform::new(gauge) })
    }
}

fn unit_like(x: &Element) -> Element {
    x.inverse().mul(x).expect("an element multiplies with its inverse")
}

/// Vertices visited strictly between the endpoints, endpoints excluded.
pub fn interior_vertices(path: &EdgePath) -> BTreeSet<Vertex> {
    let vs = path.vertices();
    vs[1..vs.len() - 1]
        .iter()
        .filter(|v| **v != path.source() && **v != path.target())
        .map(|v| (*v).clone())
        .collect()
}

/// Letter over `(p,q)` becomes `n_p⁻¹ · letter · n_q`; vertices without a
/// value are left alone.
pub fn twist(s: &Section, gauge: &GaugeTransform) -> Result<Section, SweepError> {
    let mut letters = Vec::with_capacity(s.letters().len());
    for (step, x) in s.path().steps().iter().zip(s.letters()) {
        let mut y = x.clone();
        if let Some(n) = gauge.get(&step.from) {
            y = n.inverse().mul(&y)?;
        }
        if let Some(n) = gauge.get(&step.to) {
            y = y.mul(n)?;
        }
        letters.push(y);
    }
    Section::new(s.path().clone(), letters)
}

fn same_path(s: &Section, t: &Section) -> Result<(), SweepError> {
    if s.path() != t.path() {
        return Err(SweepError::PathMismatch { expected: s.path().to_string(), found: t.path().to_string() });
    }
    Ok(())
}

/// Defects of `final` against `initial` after twisting `final` by `gauge`.
pub fn defects_in_gauge(initial: &Section, final_: &Section, gauge: &GaugeTransform) -> Result<DefectReport, SweepError> {
    same_path(initial, final_)?;
    let twisted = twist(final_, gauge)?;
    let defects = initial
        .letters()
        .iter()
        .zip(twisted.letters())
        .map(|(a, b)| a.left_divide(b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DefectReport { path: initial.path().clone(), defects, gauge_used: gauge.clone() })
}

/// Defects in the canonical gauge: the identity at every interior vertex.
pub fn two_holonomy(initial: &Section, final_: &Section) -> Result<DefectReport, SweepError> {
    same_path(initial, final_)?;
    let e = unit_like(&initial.letters()[0]);
    let gauge = GaugeTransform::new(interior_vertices(initial.path()).into_iter().map(|v| (v, e.clone())).collect());
    defects_in_gauge(initial, final_, &gauge)
}

/// Propagates `n` along the path from the vertices already fixed:
/// `n_q = L⁻¹ n_p T` forwards, `n_p = L n_q T⁻¹` backwards.
fn propagate(s: &Section, t: &Section, n: &mut BTreeMap<Vertex, Element>) -> Result<(), GroupError> {
    loop {
        let mut changed = false;
        for ((step, l), r) in s.path().steps().iter().zip(s.letters()).zip(t.letters()) {
            match (n.get(&step.from).cloned(), n.contains_key(&step.to)) {
                (Some(np), false) => {
                    n.insert(step.to.clone(), l.inverse().mul(&np)?.mul(r)?);
                    changed = true;
                }
                (None, true) => {
                    let nq = &n[&step.to];
                    n.insert(step.from.clone(), l.mul(nq)?.mul(&r.inverse())?);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

fn twists_to(s: &Section, t: &Section, n: &BTreeMap<Vertex, Element>) -> Result<bool, GroupError> {
    for ((step, l), r) in s.path().steps().iter().zip(s.letters()).zip(t.letters()) {
        if n[&step.from].inverse().mul(l)?.mul(&n[&step.to])? != *r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A gauge supported on `movable` twisting `s` into `t`, or `None`.
///
/// Vertices outside `movable` are pinned to the identity and determine the
/// rest. When every vertex is movable, finite groups try every value at the
/// first vertex; in a free group the first vertex is anchored at the
/// identity, so a `None` there is not conclusive.
pub fn sections_gauge_equivalent(
    s: &Section,
    t: &Section,
    movable: &BTreeSet<Vertex>,
    group: &GroupDescriptor,
) -> Result<Option<GaugeTransform>, SweepError> {
    same_path(s, t)?;
    let e = group.identity();
    let pinned: BTreeMap<Vertex, Element> = s
        .path()
        .vertices()
        .into_iter()
        .filter(|v| !movable.contains(*v))
        .map(|v| (v.clone(), e.clone()))
        .collect();
    let starts: Vec<BTreeMap<Vertex, Element>> = if !pinned.is_empty() {
        vec![pinned]
    } else {
        let anchors = if group.is_finite() { group.elements()? } else { vec![e] };
        let first = s.path().source();
        anchors.into_iter().map(|x| BTreeMap::from([(first.clone(), x)])).collect()
    };
    for mut n in starts {
        propagate(s, t, &mut n)?;
        if twists_to(s, t, &n)? {
            let gauge = n.into_iter().filter(|(v, _)| movable.contains(v)).collect();
            return Ok(Some(GaugeTransform::new(gauge)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    GaugeEquivalent(GaugeTransform),
    Different,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::GaugeEquivalent(_) => "gauge_equivalent",
            Verdict::Different => "different",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeComparison {
    pub verdict: Verdict,
    pub first: SweepTrace,
    pub second: SweepTrace,
    /// `finalᵢ⁻¹ · final'ᵢ` letter by letter.
    pub quotient: Vec<Element>,
}

/// Runs both schemes from `start` and compares the results, first exactly
/// and then up to a gauge at interior vertices.
pub fn compare_schemes(
    first: &SweepScheme,
    second: &SweepScheme,
    start: &Section,
    c: &Connection2,
) -> Result<SchemeComparison, SweepError> {
    if first.start != second.start {
        return Err(SweepError::EndpointMismatch(first.start.to_string(), second.start.to_string()));
    }
    let (t1, t2) = std::thread::scope(|scope| {
        let h = scope.spawn(|| run_scheme(start, second, c));
        let t1 = run_scheme(start, first, c);
        (t1, h.join().expect("scheme runner panicked"))
    });
    let (t1, t2) = (t1?, t2?);
    let (f1, f2) = (t1.final_section(), t2.final_section());
    if f1.path() != f2.path() {
        return Err(SweepError::EndpointMismatch(f1.path().to_string(), f2.path().to_string()));
    }
    let quotient = f1
        .letters()
        .iter()
        .zip(f2.letters())
        .map(|(a, b)| a.left_divide(b))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = if f1 == f2 {
        Verdict::Equal
    } else {
        match sections_gauge_equivalent(f1, f2, &interior_vertices(f1.path()), c.group())? {
            Some(n) => Verdict::GaugeEquivalent(n),
            None => Verdict::Different,
        }
    };
    Ok(SchemeComparison { verdict, first: t1, second: t2, quotient })
}

/// The four moves around `(ab,bd) -> (ac,cb,bd) -> (ac,cd) -> (ab,bc,cd) -> (ab,bd)`.
pub fn curvature_scheme(a: &Vertex, b: &Vertex, c: &Vertex, d: &Vertex) -> Result<SweepScheme, SweepError> {
    let cell = |x: &Vertex, y: &Vertex, z: &Vertex| AlphaCell::new(x.clone(), y.clone(), z.clone());
    let start = EdgePath::through(&[a.clone(), b.clone(), d.clone()]).map_err(crate::scheme::StepError::from)?;
    Ok(SweepScheme::new(
        start,
        vec![
            HomotopyStep::AlphaExpand { cell: cell(a, c, b), position: 0 },
            HomotopyStep::AlphaMerge { cell: cell(c, b, d), position: 1 },
            HomotopyStep::AlphaExpand { cell: cell(a, b, c), position: 0 },
            HomotopyStep::AlphaMerge { cell: cell(b, c, d), position: 1 },
        ],
    ))
}

/// Runs the curvature square on `start` (over `(ab,bd)`) and reports the
/// defects in the canonical gauge.
pub fn curvature_square(
    a: &Vertex,
    b: &Vertex,
    c: &Vertex,
    d: &Vertex,
    start: &Section,
    conn: &Connection2,
) -> Result<DefectReport, SweepError> {
    let scheme = curvature_scheme(a, b, c, d)?;
    let trace = run_scheme(start, &scheme, conn)?;
    two_holonomy(start, trace.final_section())
}

/// Values `φ` with `u·φ = φ·u` for every `u`: what a 2-cell may be when the
/// surrounding 1-cells act trivially. Brute force over all pairs.
pub fn center_obstruction_check(group: &GroupDescriptor) -> Result<Vec<Element>, GroupError> {
    let elements = group.elements()?;
    let mut out = Vec::new();
    for phi in &elements {
        let mut admissible = true;
        for u in &elements {
            if u.mul(phi)? != phi.mul(u)? {
                admissible = false;
                break;
            }
        }
        if admissible {
            out.push(phi.clone());
        }
    }
    Ok(out)
}
