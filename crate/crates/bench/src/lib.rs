//! Benchmark fixtures.

use std::sync::Arc;

use transport2d::SimplicialComplex;

/// A disk of `n >= 3` triangles around a hub `h`, rim vertices `r0..r{n-1}`.
pub fn fan(n: usize) -> Arc<SimplicialComplex> {
    let names: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
    let tris: Vec<[&str; 3]> = (0..n).map(|i| ["h", names[i].as_str(), names[(i + 1) % n].as_str()]).collect();
    Arc::new(SimplicialComplex::from_triangles(&tris).expect("fan is a valid complex"))
}
