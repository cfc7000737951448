//! Sweeping: moving sections across triangles, one elementary move at a
//! time, and measuring what comes back.

mod connection;
mod functor;
mod section;

use thiserror::Error;

use crate::bundle::BundleError;
use crate::group::GroupError;
use crate::scheme::StepError;

pub use connection::{BetaSource, CellRelation, Connection2, ConnectionError, ConnectionFile, RelationKind};
pub use functor::{
    center_obstruction_check, compare_schemes, curvature_scheme, curvature_square, defects_in_gauge,
    interior_vertices, run_scheme, sections_gauge_equivalent, twist, two_holonomy, DefectRecord, DefectReport,
    SchemeComparison, SweepTrace, Verdict,
};
pub use section::{
    alpha_expand, alpha_merge, apply_step, apply_step_with, beta_expand, beta_merge, ExpandConvention, Section,
    SectionRecord,
};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("{letters} letters over a path of {steps} steps")]
    LengthMismatch { letters: usize, steps: usize },
    #[error("no value for cell {0}")]
    MissingCell(String),
    #[error("section over {found} where {expected} was expected")]
    PathMismatch { expected: String, found: String },
    #[error("schemes end on different paths: {0} and {1}")]
    EndpointMismatch(String, String),
    #[error("step {index} ({step}): {source}")]
    Step {
        index: usize,
        step: String,
        #[source]
        source: Box<SweepError>,
    },
    #[error(transparent)]
    Move(#[from] StepError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Bundle(#[from] BundleError),
}
