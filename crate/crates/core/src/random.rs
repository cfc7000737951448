//! Random inputs for property checks and benchmarks. Everything is driven by
//! a caller-supplied RNG, so a seed reproduces the data exactly.

use std::collections::{BTreeMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bundle::{Connection1, GaugeTransform};
use crate::complex::{SimplicialComplex, Vertex};
use crate::group::{Element, FreeWord, GroupDescriptor, Permutation};
use crate::path::{EdgePath, Step};
use crate::scheme::{applicable_steps, HomotopyStep, SweepScheme};
use crate::sweep::{Connection2, Section};

/// Longest random free word, in letters.
const FREE_WORD_LETTERS: usize = 6;

/// A random element; free words have up to a handful of letters.
pub fn random_element<R: Rng + ?Sized>(group: &GroupDescriptor, rng: &mut R) -> Element {
    match group {
        GroupDescriptor::Free(gens) if gens.is_empty() => group.identity(),
        GroupDescriptor::Free(gens) => {
            let n = rng.gen_range(0..=FREE_WORD_LETTERS);
            let letters = (0..n).map(|_| {
                let g = gens.choose(rng).expect("nonempty").clone();
                (g, if rng.gen_bool(0.5) { 1 } else { -1 })
            });
            Element::Free(FreeWord::from_syllables(letters.collect::<Vec<_>>()))
        }
        GroupDescriptor::Cyclic(n) => Element::Cyclic { modulus: *n, value: rng.gen_range(0..*n) },
        GroupDescriptor::Symmetric(n) => {
            let mut image: Vec<usize> = (0..*n).collect();
            image.shuffle(rng);
            Element::Perm(Permutation::from_images(image).expect("a shuffle is a bijection"))
        }
        GroupDescriptor::Dihedral(n) => Element::Dihedral { n: *n, rotation: rng.gen_range(0..*n), reflection: rng.gen() },
        GroupDescriptor::Product(fs) => Element::Product(fs.iter().map(|f| random_element(f, rng)).collect()),
    }
}

/// A random walk of `len` steps from a random vertex, with occasional
/// degenerate steps and immediate backtracks.
pub fn random_path<R: Rng + ?Sized>(k: &SimplicialComplex, len: usize, rng: &mut R) -> EdgePath {
    let vertices: Vec<&Vertex> = k.vertices().iter().collect();
    let start = (*vertices.choose(rng).expect("complex has vertices")).clone();
    random_path_from(k, &start, len, rng)
}

pub fn random_path_from<R: Rng + ?Sized>(k: &SimplicialComplex, start: &Vertex, len: usize, rng: &mut R) -> EdgePath {
    let mut steps: Vec<Step> = Vec::with_capacity(len.max(1));
    let mut at = start.clone();
    for _ in 0..len.max(1) {
        let next = if rng.gen_bool(0.1) {
            at.clone()
        } else if rng.gen_bool(0.2) && steps.last().is_some_and(|s| !s.is_degenerate()) {
            steps.last().expect("checked").from.clone()
        } else {
            match k.neighbours(&at).choose(rng) {
                Some(v) => (*v).clone(),
                None => at.clone(),
            }
        };
        steps.push(Step::new(at.clone(), next.clone()));
        at = next;
    }
    EdgePath::new(steps).expect("a walk is composable")
}

/// A random walk closed up along a shortest way back to its start.
pub fn random_loop<R: Rng + ?Sized>(k: &SimplicialComplex, len: usize, rng: &mut R) -> EdgePath {
    let walk = random_path(k, len, rng);
    let home = walk.source().clone();
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([home.clone()]);
    while let Some(a) = queue.pop_front() {
        for b in k.neighbours(&a) {
            if *b != home && !parent.contains_key(b) {
                parent.insert(b.clone(), a.clone());
                queue.push_back(b.clone());
            }
        }
    }
    let mut steps = walk.steps().to_vec();
    let mut at = walk.target().clone();
    while at != home {
        let p = parent[&at].clone();
        steps.push(Step::new(at, p.clone()));
        at = p;
    }
    EdgePath::new(steps).expect("the way back is composable")
}

pub fn random_connection<R: Rng + ?Sized>(
    k: &std::sync::Arc<SimplicialComplex>,
    group: &GroupDescriptor,
    rng: &mut R,
) -> Connection1 {
    let values: Vec<_> = k
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = e.vertices();
            ((a.clone(), b.clone()), random_element(group, rng))
        })
        .collect();
    Connection1::new(k.clone(), group.clone(), values).expect("total by construction")
}

/// `base` with a random value on every alpha cell.
pub fn random_cells<R: Rng + ?Sized>(base: Connection1, rng: &mut R) -> Connection2 {
    let flat = Connection2::flat(base.clone());
    let alpha = flat
        .alpha_values()
        .keys()
        .map(|c| (c.clone(), random_element(base.group(), rng)))
        .collect();
    Connection2::new(base, alpha, BTreeMap::new(), vec![]).expect("cells come from faces")
}

pub fn random_gauge<R: Rng + ?Sized>(k: &SimplicialComplex, group: &GroupDescriptor, rng: &mut R) -> GaugeTransform {
    GaugeTransform::new(k.vertices().iter().map(|v| (v.clone(), random_element(group, rng))).collect())
}

pub fn random_section<R: Rng + ?Sized>(path: &EdgePath, group: &GroupDescriptor, rng: &mut R) -> Section {
    let letters = (0..path.len()).map(|_| random_element(group, rng)).collect();
    Section::new(path.clone(), letters).expect("one letter per step")
}

/// Up to `len` moves chosen uniformly among those applicable at each stage.
/// Moves that would only grow a degenerate path are skipped in favour of
/// others when possible.
pub fn random_scheme<R: Rng + ?Sized>(k: &SimplicialComplex, start: &EdgePath, len: usize, rng: &mut R) -> SweepScheme {
    let mut path = start.clone();
    let mut steps: Vec<HomotopyStep> = Vec::with_capacity(len);
    for _ in 0..len {
        let options = applicable_steps(&path, k);
        let Some(step) = options.choose(rng) else { break };
        path = step.apply_path(&path, k).expect("applicable moves apply");
        steps.push(step.clone());
    }
    SweepScheme::new(start.clone(), steps)
}
