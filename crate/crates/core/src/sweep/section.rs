//! Sections over edge-paths and the elementary moves acting on them.
//!
//! Letter conventions, with `φ` the value of the cell:
//!
//! ```text
//! alpha_expand  w over (ab)            ->  (w, φ) over (ac,cb)
//! alpha_merge   (u, v) over (ac,cb)    ->  u·v·φ⁻¹ over (ab)
//! beta_expand   w over (cc)            ->  (e, w, β) over (ca,ab,bc)
//! beta_merge    (u, v, t)              ->  u·v·t·β⁻¹ over (cc)
//! x1_insert     w over (yy)            ->  (e, w) over (yz,zy)
//! x1_cancel     (u, v) over (yz,zy)    ->  u·v over (yy)
//! deg_insert                           ->  e over the new degenerate step
//! deg_drop      w at l                 ->  folded into the left letter (right at l = 0)
//! ```
//!
//! `β` for `c.a.b.c` is the value of `a.b.c`: the beta move is an inserted
//! cancelling pair `(ca,ac)` followed by expanding `(ac)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Connection2, SweepError};
use crate::cells::{AlphaCell, BetaCell};
use crate::group::{parse_element_extending, Element, GroupDescriptor};
use crate::path::EdgePath;
use crate::scheme::HomotopyStep;

/// A word of group elements over an edge-path, one letter per step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    path: EdgePath,
    letters: Vec<Element>,
}

impl Section {
    pub fn new(path: EdgePath, letters: Vec<Element>) -> Result<Self, SweepError> {
        if path.len() != letters.len() {
            return Err(SweepError::LengthMismatch { letters: letters.len(), steps: path.len() });
        }
        Ok(Section { path, letters })
    }

    /// The section with every letter the identity.
    pub fn trivial(path: EdgePath, group: &GroupDescriptor) -> Self {
        let letters = vec![group.identity(); path.len()];
        Section { path, letters }
    }

    pub fn path(&self) -> &EdgePath {
        &self.path
    }

    pub fn letters(&self) -> &[Element] {
        &self.letters
    }

    pub fn into_parts(self) -> (EdgePath, Vec<Element>) {
        (self.path, self.letters)
    }
}

impl fmt::Display for Section {
    /// `(ad,db) -> (x*y*phi_acb^-1, phi_adb)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "{} -> ({})", self.path, letters.join(", "))
    }
}

/// Serialized form of a section: `{"path": [...], "letters": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionRecord {
    pub path: EdgePath,
    pub letters: Vec<String>,
}

impl SectionRecord {
    pub fn from_section(s: &Section) -> Self {
        SectionRecord {
            path: s.path.clone(),
            letters: s.letters.iter().map(ToString::to_string).collect(),
        }
    }

    /// Unknown generators are added to a free `group`.
    pub fn to_section(&self, group: &mut GroupDescriptor) -> Result<Section, SweepError> {
        let letters = self
            .letters
            .iter()
            .map(|t| parse_element_extending(t, group))
            .collect::<Result<Vec<_>, _>>()?;
        Section::new(self.path.clone(), letters)
    }
}

/// Where the new letter goes when an edge is expanded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExpandConvention {
    /// `w -> (w, φ)`; exact inverse of the merge.
    #[default]
    KeepFirst,
    /// `w -> (e, w·φ)`: identity on the first new edge. Agrees with
    /// `KeepFirst` up to a gauge at the apex.
    IdentityFirst,
}

/// Applies one move, using the default expansion convention.
pub fn apply_step(s: &Section, step: &HomotopyStep, c: &Connection2) -> Result<Section, SweepError> {
    apply_step_with(s, step, c, ExpandConvention::KeepFirst)
}

pub fn apply_step_with(
    s: &Section,
    step: &HomotopyStep,
    c: &Connection2,
    convention: ExpandConvention,
) -> Result<Section, SweepError> {
    let path = step.apply_path(&s.path, c.complex())?;
    let l = &s.letters;
    let p = step.position();
    let id = || c.group().identity();
    let (start, consumed, new) = match step {
        HomotopyStep::AlphaExpand { cell, .. } => {
            let phi = c.alpha_value(cell)?;
            match convention {
                ExpandConvention::KeepFirst => (p, 1, vec![l[p].clone(), phi]),
                ExpandConvention::IdentityFirst => (p, 1, vec![id(), l[p].mul(&phi)?]),
            }
        }
        HomotopyStep::AlphaMerge { cell, .. } => {
            let phi = c.alpha_value(cell)?;
            (p, 2, vec![l[p].mul(&l[p + 1])?.mul(&phi.inverse())?])
        }
        HomotopyStep::BetaExpand { cell, .. } => {
            let (beta, _) = c.beta_value(cell)?;
            (p, 1, vec![id(), l[p].clone(), beta])
        }
        HomotopyStep::BetaMerge { cell, .. } => {
            let (beta, _) = c.beta_value(cell)?;
            (p, 3, vec![l[p].mul(&l[p + 1])?.mul(&l[p + 2])?.mul(&beta.inverse())?])
        }
        HomotopyStep::X1Insert { .. } => (p, 1, vec![id(), l[p].clone()]),
        HomotopyStep::X1Cancel { .. } => (p, 2, vec![l[p].mul(&l[p + 1])?]),
        HomotopyStep::DegInsert { .. } => (p, 0, vec![id()]),
        HomotopyStep::DegDrop { .. } if p == 0 => (0, 2, vec![l[0].mul(&l[1])?]),
        HomotopyStep::DegDrop { .. } => (p - 1, 2, vec![l[p - 1].mul(&l[p])?]),
    };
    let mut letters = l.clone();
    letters.splice(start..start + consumed, new);
    Section::new(path, letters)
}

pub fn alpha_expand(s: &Section, cell: &AlphaCell, position: usize, c: &Connection2) -> Result<Section, SweepError> {
    apply_step(s, &HomotopyStep::AlphaExpand { cell: cell.clone(), position }, c)
}

pub fn alpha_merge(s: &Section, cell: &AlphaCell, position: usize, c: &Connection2) -> Result<Section, SweepError> {
    apply_step(s, &HomotopyStep::AlphaMerge { cell: cell.clone(), position }, c)
}

pub fn beta_expand(s: &Section, cell: &BetaCell, position: usize, c: &Connection2) -> Result<Section, SweepError> {
    apply_step(s, &HomotopyStep::BetaExpand { cell: cell.clone(), position }, c)
}

pub fn beta_merge(s: &Section, cell: &BetaCell, position: usize, c: &Connection2) -> Result<Section, SweepError> {
    apply_step(s, &HomotopyStep::BetaMerge { cell: cell.clone(), position }, c)
}
