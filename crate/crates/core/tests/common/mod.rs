//! Test-side oracles, written independently of the library's algorithms.

#![allow(dead_code)]

use std::sync::Arc;

use transport2d::group::FreeWord;
use transport2d::{EdgePath, SimplicialComplex};

pub fn octahedron() -> Arc<SimplicialComplex> {
    Arc::new(
        SimplicialComplex::from_triangles(&[
            ["n", "p0", "p1"],
            ["n", "p1", "p2"],
            ["n", "p2", "p3"],
            ["n", "p3", "p0"],
            ["s", "p0", "p1"],
            ["s", "p1", "p2"],
            ["s", "p2", "p3"],
            ["s", "p3", "p0"],
        ])
        .unwrap(),
    )
}

pub fn pairs(p: &EdgePath) -> Vec<(String, String)> {
    p.steps().iter().map(|s| (s.from.to_string(), s.to.to_string())).collect()
}

/// Rewrites to normal form one redex at a time, always taking the leftmost
/// (or rightmost) one. Redexes: a degenerate step, or a step followed by its
/// reverse.
pub fn x1_rewrite(steps: &[(String, String)], leftmost: bool) -> Vec<(String, String)> {
    let mut w = steps.to_vec();
    loop {
        let n = w.len();
        let idx: Vec<usize> = if leftmost { (0..n).collect() } else { (0..n).rev().collect() };
        let mut done = true;
        for i in idx {
            if w[i].0 == w[i].1 {
                w.remove(i);
                done = false;
                break;
            }
            let pair = if leftmost { i + 1 < n } else { i >= 1 };
            if pair {
                let (a, b) = if leftmost { (i, i + 1) } else { (i - 1, i) };
                if w[a].0 == w[b].1 && w[a].1 == w[b].0 && w[a].0 != w[a].1 {
                    w.drain(a..=b);
                    done = false;
                    break;
                }
            }
        }
        if done {
            return w;
        }
    }
}

/// Normal form of a path as pairs, the identity at `source` when empty.
pub fn x1_oracle(p: &EdgePath, leftmost: bool) -> Vec<(String, String)> {
    let out = x1_rewrite(&pairs(p), leftmost);
    if out.is_empty() {
        let s = p.source().to_string();
        vec![(s.clone(), s)]
    } else {
        out
    }
}

/// A free word as single letters with exponent ±1.
pub fn letters(w: &FreeWord) -> Vec<(String, i8)> {
    let mut out = Vec::new();
    for (g, k) in w.syllables() {
        for _ in 0..k.unsigned_abs() {
            out.push((g.clone(), k.signum() as i8));
        }
    }
    out
}

pub fn free_rewrite(word: &[(String, i8)], leftmost: bool) -> Vec<(String, i8)> {
    let mut w = word.to_vec();
    loop {
        let n = w.len();
        let found = if leftmost {
            (0..n.saturating_sub(1)).find(|&i| w[i].0 == w[i + 1].0 && w[i].1 == -w[i + 1].1)
        } else {
            (0..n.saturating_sub(1)).rev().find(|&i| w[i].0 == w[i + 1].0 && w[i].1 == -w[i + 1].1)
        };
        match found {
            Some(i) => {
                w.drain(i..=i + 1);
            }
            None => return w,
        }
    }
}

/// Diagrammatic composition of one-line permutations: `a` then `b`.
pub fn perm_then(a: &[usize], b: &[usize]) -> Vec<usize> {
    (0..a.len()).map(|i| b[a[i]]).collect()
}
