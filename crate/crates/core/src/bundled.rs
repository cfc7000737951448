//! The tetrahedron example shipped with the crate: the boundary of a
//! 3-simplex, a symbolic free-group connection and two sweep schemes from
//! `(ac,cb)` back to itself.

use std::sync::Arc;

use crate::complex::{load_complex, SimplicialComplex};
use crate::scheme::SweepScheme;
use crate::sweep::Connection2;

pub const TETRAHEDRON_COMPLEX: &str = include_str!("../examples/tetrahedron/complex.json");
pub const TETRAHEDRON_CONNECTION: &str = include_str!("../examples/tetrahedron/connection.json");
/// Sweeps over `d` through `(ab)`, `(ad,db)`, `(ad,dc,cb)`.
pub const TETRAHEDRON_SCHEME_1: &str = include_str!("../examples/tetrahedron/scheme1.json");
/// Sweeps through `(ab)`, `(ad,db)`, `(ac,cd,db)`.
pub const TETRAHEDRON_SCHEME_2: &str = include_str!("../examples/tetrahedron/scheme2.json");

/// File names and contents, for writing the example to disk.
pub const TETRAHEDRON_FILES: [(&str, &str); 4] = [
    ("complex.json", TETRAHEDRON_COMPLEX),
    ("connection.json", TETRAHEDRON_CONNECTION),
    ("scheme1.json", TETRAHEDRON_SCHEME_1),
    ("scheme2.json", TETRAHEDRON_SCHEME_2),
];

pub fn tetrahedron() -> Arc<SimplicialComplex> {
    Arc::new(load_complex(TETRAHEDRON_COMPLEX).expect("bundled complex is valid"))
}

pub fn tetrahedron_connection() -> Connection2 {
    Connection2::parse(TETRAHEDRON_CONNECTION, tetrahedron()).expect("bundled connection is valid")
}

pub fn tetrahedron_schemes() -> [SweepScheme; 2] {
    [TETRAHEDRON_SCHEME_1, TETRAHEDRON_SCHEME_2].map(|t| SweepScheme::parse(t).expect("bundled scheme is valid"))
}
