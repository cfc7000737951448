//! Discrete parallel transport on triangulated surfaces.
//!
//! One-dimensional transport is a connection: a group element per oriented
//! edge, giving holonomies along edge-paths. Two-dimensional transport moves
//! *sections* (words of group elements over an edge-path) across the
//! triangles of a combinatorial homotopy, one elementary move at a time.

pub mod bundle;
pub mod bundled;
pub mod cells;
pub mod complex;
pub mod group;
pub mod path;
pub mod random;
pub mod scheme;
pub mod sweep;

pub use bundle::{associated_transport, find_isomorphism, gauge_transform, holonomy, wilson_loop, Connection1, GaugeTransform};
pub use cells::{classify_cell, oriented_triangles, AlphaCell, BetaCell, CellKind, CellName, OrientedTriangle};
pub use complex::{load_complex, Diagnostic, Edge, SimplicialComplex, Triangle, Vertex};
pub use group::{center, format_element, parse_element, Element, GroupDescriptor, GroupError, Representation};
pub use path::{compose_paths, drop_degenerate, insert_degenerate, invert_path, reduce_x1, x1_homotopic, EdgePath, Step};
pub use scheme::{search_homotopy, validate_scheme, HomotopyStep, SweepScheme};
pub use sweep::{
    alpha_expand, alpha_merge, beta_expand, beta_merge, center_obstruction_check, compare_schemes, curvature_square,
    run_scheme, sections_gauge_equivalent, two_holonomy, Connection2, DefectReport, Section, SweepTrace, Verdict,
};
