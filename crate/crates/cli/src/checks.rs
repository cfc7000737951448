//! Seeded randomized checks run by `transport2d check`.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use transport2d::bundled::tetrahedron;
use transport2d::random::{
    random_cells, random_connection, random_gauge, random_loop, random_path, random_path_from, random_scheme,
    random_section,
};
use transport2d::scheme::applicable_steps;
use transport2d::sweep::apply_step;
use transport2d::*;

pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "first_failure": self.first_failure,
        })
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.failures == 0 { "ok" } else { "FAILED" };
        write!(f, "{status} {}: {} cases, {} failures", self.name, self.cases, self.failures)?;
        if let Some(x) = &self.first_failure {
            write!(f, " (first: {x})")?;
        }
        Ok(())
    }
}

type Case = fn(&mut StdRng, &GroupDescriptor) -> Result<(), String>;

fn backends() -> [GroupDescriptor; 3] {
    [
        GroupDescriptor::Free(vec!["x".into(), "y".into()]),
        GroupDescriptor::Symmetric(3),
        GroupDescriptor::Cyclic(12),
    ]
}

fn functoriality(r: &mut StdRng, g: &GroupDescriptor) -> Result<(), String> {
    let k = tetrahedron();
    let f = random_connection(&k, g, r);
    let p = random_path(&k, r.gen_range(1..8), r);
    let q = random_path_from(&k, p.target(), r.gen_range(1..8), r);
    let whole = holonomy(&f, &compose_paths(&p, &q).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let parts = holonomy(&f, &p).and_then(|a| Ok(a.mul(&holonomy(&f, &q)?)?)).map_err(|e| e.to_string())?;
    if whole != parts {
        return Err(format!("{p} then {q}"));
    }
    if holonomy(&f, &reduce_x1(&p)).ok() != holonomy(&f, &p).ok() {
        return Err(format!("reduction of {p}"));
    }
    Ok(())
}

fn gauge_covariance(r: &mut StdRng, g: &GroupDescriptor) -> Result<(), String> {
    let k = tetrahedron();
    let f = random_connection(&k, g, r);
    let n = random_gauge(&k, g, r);
    let lp = random_loop(&k, r.gen_range(1..8), r);
    let h = gauge_transform(&f, &n).map_err(|e| e.to_string())?;
    let na = n.get(lp.source()).expect("total gauge");
    let before = holonomy(&f, &lp).map_err(|e| e.to_string())?;
    let expected = na.inverse().mul(&before).and_then(|x| x.mul(na)).map_err(|e| e.to_string())?;
    if holonomy(&h, &lp).map_err(|e| e.to_string())? != expected {
        return Err(format!("loop {lp}"));
    }
    Ok(())
}

fn move_inverses(r: &mut StdRng, g: &GroupDescriptor) -> Result<(), String> {
    let k = tetrahedron();
    let c = random_cells(random_connection(&k, g, r), r);
    let s = random_section(&random_path(&k, r.gen_range(1..6), r), g, r);
    for step in applicable_steps(s.path(), &k) {
        let undo = match &step {
            HomotopyStep::AlphaExpand { cell, position } => HomotopyStep::AlphaMerge { cell: cell.clone(), position: *position },
            HomotopyStep::BetaExpand { cell, position } => HomotopyStep::BetaMerge { cell: cell.clone(), position: *position },
            _ => continue,
        };
        let there = apply_step(&s, &step, &c).map_err(|e| e.to_string())?;
        if apply_step(&there, &undo, &c).map_err(|e| e.to_string())? != s {
            return Err(format!("{step} on {s}"));
        }
    }
    Ok(())
}

fn locality(r: &mut StdRng, g: &GroupDescriptor) -> Result<(), String> {
    let k = tetrahedron();
    let c = random_cells(random_connection(&k, g, r), r);
    let start = random_path(&k, r.gen_range(2..5), r);
    let scheme = random_scheme(&k, &start, r.gen_range(2..7), r);
    let s0 = random_section(&start, g, r);
    let reference = run_scheme(&s0, &scheme, &c).map_err(|e| e.to_string())?;
    for i in 0..scheme.steps.len().saturating_sub(1) {
        if let Ok(swapped) = scheme.swap_adjacent(i) {
            let other = run_scheme(&s0, &swapped, &c).map_err(|e| e.to_string())?;
            if other.final_section() != reference.final_section() {
                return Err(format!("swap {i} in a scheme from {start}"));
            }
        }
    }
    Ok(())
}

pub fn run(seed: u64, cases: usize) -> Vec<CheckResult> {
    let checks: [(&'static str, Case); 4] = [
        ("holonomy functoriality", functoriality),
        ("gauge covariance", gauge_covariance),
        ("move inverses", move_inverses),
        ("locality", locality),
    ];
    let mut rng = StdRng::seed_from_u64(seed);
    let groups = backends();
    checks
        .iter()
        .map(|(name, case)| {
            let mut result = CheckResult { name, cases, failures: 0, first_failure: None };
            for i in 0..cases {
                let g = &groups[i % groups.len()];
                if let Err(why) = case(&mut rng, g) {
                    result.failures += 1;
                    result.first_failure.get_or_insert(format!("{g}: {why}"));
                }
            }
            result
        })
        .collect()
}
