//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Thresholds are pinned below.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{free_rewrite, letters, x1_oracle};
use transport2d::bundled::{tetrahedron, tetrahedron_connection, tetrahedron_schemes};
use transport2d::random::{
    random_cells, random_connection, random_element, random_gauge, random_loop, random_path, random_path_from,
    random_scheme, random_section,
};
use transport2d::scheme::applicable_steps;
use transport2d::sweep::{apply_step, interior_vertices};
use transport2d::*;

const SEED: u64 = 0x5eed;
const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const COMPARE_BUDGET: Duration = Duration::from_secs(1);
const CENTER_BUDGET: Duration = Duration::from_secs(1);
const HOLONOMY_BUDGET: Duration = Duration::from_secs(30);
const HOLONOMY_CASES: usize = 1000;
const INVERSE_CASES_PER_BACKEND: usize = 1000;
const LOCALITY_SCHEMES: usize = 500;
const CONFLUENCE_CASES: usize = 1000;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t < budget, || format!("took {t:?}, budget {budget:?}"))
}

fn backends() -> Vec<GroupDescriptor> {
    vec![
        GroupDescriptor::Free(vec!["x".into(), "y".into(), "z".into()]),
        GroupDescriptor::Cyclic(7),
        GroupDescriptor::Symmetric(3),
        GroupDescriptor::Symmetric(4),
        GroupDescriptor::Dihedral(4),
        GroupDescriptor::Product(vec![GroupDescriptor::Cyclic(2), GroupDescriptor::Symmetric(3)]),
    ]
}

fn generic_start(c: &mut Connection2) -> Section {
    let letters = vec![c.parse_letter("x").unwrap(), c.parse_letter("y").unwrap()];
    Section::new(EdgePath::parse_vertices("a,c,b").unwrap(), letters).unwrap()
}

fn golden_reproduction() -> Outcome {
    let start = Instant::now();
    let mut c = tetrahedron_connection();
    let s0 = generic_start(&mut c);
    let [one, two] = tetrahedron_schemes();
    let expected_one = [
        "(ac,cb) -> (x, y)",
        "(ab) -> (x*y*phi_acb^-1)",
        "(ad,db) -> (x*y*phi_acb^-1, phi_adb)",
        "(ad,dc,cb) -> (x*y*phi_acb^-1, phi_adb, phi_dcb)",
        "(ac,cb) -> (x*y*phi_acb^-1*phi_adb*phi_adc^-1, phi_dcb)",
    ];
    let expected_two = [
        "(ac,cb) -> (x, y)",
        "(ab) -> (x*y*phi_acb^-1)",
        "(ad,db) -> (x*y*phi_acb^-1, phi_adb)",
        "(ac,cd,db) -> (x*y*phi_acb^-1, phi_acd, phi_adb)",
        "(ac,cb) -> (x*y*phi_acb^-1, phi_acd*phi_adb*phi_cdb^-1)",
    ];
    for (scheme, expected) in [(&one, &expected_one), (&two, &expected_two)] {
        let trace = run_scheme(&s0, scheme, &c).map_err(|e| e.to_string())?;
        let got: Vec<String> = trace.sections.iter().map(ToString::to_string).collect();
        check(got == expected, || format!("got {got:?}"))?;
    }
    // exact normal-form equality, not just matching text
    let mut g = c.group().clone();
    let parse = |t: &str, g: &mut GroupDescriptor| group::parse_element_extending(t, g).unwrap();
    let final_one = run_scheme(&s0, &one, &c).unwrap().final_section().clone();
    let want = [parse("x*y*phi_acb^-1*phi_adb*phi_adc^-1", &mut g), parse("phi_dcb", &mut g)];
    check(final_one.letters() == want, || "scheme 1 final word differs in normal form".into())?;
    within(start, GOLDEN_BUDGET)?;
    Ok(format!("both successions reproduced line by line in {:?}", start.elapsed()))
}

fn scheme_discrepancy() -> Outcome {
    let start = Instant::now();
    let mut c = tetrahedron_connection();
    let s0 = generic_start(&mut c);
    let [one, two] = tetrahedron_schemes();
    let cmp = compare_schemes(&one, &two, &s0, &c).map_err(|e| e.to_string())?;
    check(cmp.verdict == Verdict::Different, || format!("verdict {}", cmp.verdict))?;
    let nontrivial: Vec<&Element> = cmp.quotient.iter().filter(|q| !q.is_identity()).collect();
    check(!nontrivial.is_empty(), || "quotient is trivial".into())?;
    for q in &nontrivial {
        let Element::Free(w) = q else { return Err("quotient outside the free group".into()) };
        let ls = letters(w);
        check(free_rewrite(&ls, true) == ls, || format!("{q} is not reduced"))?;
    }
    within(start, COMPARE_BUDGET)?;
    let shown: Vec<String> = cmp.quotient.iter().map(ToString::to_string).collect();
    Ok(format!("different, quotient ({})", shown.join(", ")))
}

/// Centralizer of everything, by the definition and nothing else.
fn brute_center(g: &GroupDescriptor) -> Vec<Element> {
    let all = g.elements().unwrap();
    all.iter()
        .filter(|z| all.iter().all(|u| z.mul(u).unwrap() == u.mul(z).unwrap()))
        .cloned()
        .collect()
}

fn abelianisation_obstruction() -> Outcome {
    let mut cases: Vec<(GroupDescriptor, usize)> = vec![
        (GroupDescriptor::Symmetric(3), 1),
        (GroupDescriptor::Symmetric(4), 1),
        (GroupDescriptor::Dihedral(4), 2),
    ];
    cases.extend((1..=12).map(|n| (GroupDescriptor::Cyclic(n), n as usize)));
    let mut slowest = Duration::ZERO;
    for (g, size) in &cases {
        let start = Instant::now();
        let obstruction = center_obstruction_check(g).map_err(|e| e.to_string())?;
        let via_generators = center(g).map_err(|e| e.to_string())?;
        within(start, CENTER_BUDGET)?;
        slowest = slowest.max(start.elapsed());
        check(obstruction == via_generators, || format!("{g}: check and center disagree"))?;
        check(obstruction == brute_center(g), || format!("{g}: disagrees with the definition"))?;
        check(obstruction.len() == *size, || format!("{g}: center has {} elements", obstruction.len()))?;
    }
    Ok(format!("{} groups, S3/S4 trivial, D4 order 2, Zn all; slowest {slowest:?}", cases.len()))
}

fn holonomy_functoriality() -> Outcome {
    let start = Instant::now();
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let k = tetrahedron();
    let groups = backends();
    let mut counts = [0usize; 3];
    for i in 0..HOLONOMY_CASES {
        let g = &groups[i % groups.len()];
        let f = random_connection(&k, g, &mut r);
        let p = random_path(&k, r.gen_range(1..9), &mut r);
        let q = random_path_from(&k, p.target(), r.gen_range(1..9), &mut r);
        let whole = holonomy(&f, &compose_paths(&p, &q).unwrap()).unwrap();
        let parts = holonomy(&f, &p).unwrap().mul(&holonomy(&f, &q).unwrap()).unwrap();
        check(whole == parts, || format!("functoriality fails on {p} then {q}"))?;
        counts[0] += 1;
        check(holonomy(&f, &p).unwrap() == holonomy(&f, &reduce_x1(&p)).unwrap(), || {
            format!("reduction changes holonomy of {p}")
        })?;
        counts[1] += 1;
        let n = random_gauge(&k, g, &mut r);
        let lp = random_loop(&k, r.gen_range(1..9), &mut r);
        let na = n.get(lp.source()).unwrap();
        let after = holonomy(&gauge_transform(&f, &n).unwrap(), &lp).unwrap();
        let conj = na.inverse().mul(&holonomy(&f, &lp).unwrap()).unwrap().mul(na).unwrap();
        check(after == conj, || format!("gauge covariance fails on {lp}"))?;
        counts[2] += 1;
    }
    within(start, HOLONOMY_BUDGET)?;
    Ok(format!(
        "{} functoriality, {} reduction, {} gauge cases in {:?}",
        counts[0],
        counts[1],
        counts[2],
        start.elapsed()
    ))
}

fn move_inverses() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 1);
    let k = tetrahedron();
    let mut totals = (0, 0, 0, 0);
    for g in backends() {
        let (mut sections, mut alpha, mut beta, mut gauge) = (0, 0, 0, 0);
        while [sections, alpha, beta, gauge].iter().any(|&n| n < INVERSE_CASES_PER_BACKEND) {
            sections += 1;
            let c = random_cells(random_connection(&k, &g, &mut r), &mut r);
            let s = random_section(&random_path(&k, r.gen_range(1..6), &mut r), &g, &mut r);
            // make sure a beta site exists
            let j = r.gen_range(0..=s.path().len());
            let s = apply_step(&s, &HomotopyStep::DegInsert { position: j }, &c).unwrap();
            for step in applicable_steps(s.path(), &k) {
                let undo = match &step {
                    HomotopyStep::AlphaExpand { cell, position } => {
                        alpha += 1;
                        HomotopyStep::AlphaMerge { cell: cell.clone(), position: *position }
                    }
                    HomotopyStep::BetaExpand { cell, position } => {
                        beta += 1;
                        HomotopyStep::BetaMerge { cell: cell.clone(), position: *position }
                    }
                    _ => continue,
                };
                let back = apply_step(&apply_step(&s, &step, &c).unwrap(), &undo, &c).unwrap();
                check(back == s, || format!("{step} then {undo} changes {s} over {g}"))?;
            }
            for cell in c.alpha_values().keys() {
                let path = EdgePath::new(cell.side_steps().to_vec()).unwrap();
                let uv = random_section(&path, &g, &mut r);
                let round = alpha_expand(&alpha_merge(&uv, cell, 0, &c).unwrap(), cell, 0, &c).unwrap();
                let movable: BTreeSet<Vertex> = interior_vertices(&path);
                let n = sections_gauge_equivalent(&uv, &round, &movable, &g).map_err(|e| e.to_string())?;
                let n = n.ok_or_else(|| format!("expand after merge of {uv} is not a gauge over {g}"))?;
                check(sweep::twist(&uv, &n).unwrap() == round, || "gauge does not re-twist".into())?;
                gauge += 1;
            }
        }
        totals.0 += sections;
        totals.1 += alpha;
        totals.2 += beta;
        totals.3 += gauge;
    }
    Ok(format!(
        "{} backends, {} sections: {} alpha, {} beta round trips exact; {} expand-after-merge gauge solves",
        backends().len(),
        totals.0,
        totals.1,
        totals.2,
        totals.3
    ))
}

fn locality() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 2);
    let k = tetrahedron();
    let groups = backends();
    let mut tested = 0;
    let mut attempts = 0;
    while tested < LOCALITY_SCHEMES {
        attempts += 1;
        check(attempts < 50 * LOCALITY_SCHEMES, || "could not generate swappable schemes".into())?;
        let g = &groups[tested % groups.len()];
        let c = random_cells(random_connection(&k, g, &mut r), &mut r);
        let start = random_path(&k, r.gen_range(2..5), &mut r);
        let scheme = random_scheme(&k, &start, r.gen_range(2..8), &mut r);
        let swappable: Vec<usize> =
            (0..scheme.steps.len().saturating_sub(1)).filter(|&i| scheme.swap_adjacent(i).is_ok()).collect();
        let Some(&i) = swappable.get(r.gen_range(0..swappable.len().max(1))) else { continue };
        let swapped = scheme.swap_adjacent(i).unwrap();
        let s0 = random_section(&start, g, &mut r);
        let a = run_scheme(&s0, &scheme, &c).map_err(|e| e.to_string())?;
        let b = run_scheme(&s0, &swapped, &c).map_err(|e| e.to_string())?;
        check(a.final_section() == b.final_section(), || {
            format!("swapping moves {i} and {} of {:?} changes the result", i + 1, scheme.steps)
        })?;
        tested += 1;
    }
    Ok(format!("{tested} schemes with a swapped disjoint pair, final sections identical"))
}

fn confluence() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 3);
    let k = tetrahedron();
    for _ in 0..CONFLUENCE_CASES {
        let p = random_path(&k, r.gen_range(1..16), &mut r);
        let (left, right) = (x1_oracle(&p, true), x1_oracle(&p, false));
        check(left == right, || format!("{p}: leftmost and rightmost disagree"))?;
        let lib: Vec<(String, String)> =
            reduce_x1(&p).steps().iter().map(|s| (s.from.to_string(), s.to.to_string())).collect();
        check(lib == left, || format!("{p}: library reduction differs"))?;
    }
    let g = GroupDescriptor::Free(vec!["x".into(), "y".into()]);
    for _ in 0..CONFLUENCE_CASES {
        let (a, b) = (random_element(&g, &mut r), random_element(&g, &mut r));
        let (Element::Free(wa), Element::Free(wb)) = (&a, &b) else { unreachable!() };
        let mut joined = letters(wa);
        joined.extend(letters(wb));
        let left = free_rewrite(&joined, true);
        check(left == free_rewrite(&joined, false), || format!("{a} * {b}: orders disagree"))?;
        let Element::Free(ab) = a.mul(&b).unwrap() else { unreachable!() };
        check(letters(&ab) == left, || format!("{a} * {b}: library product differs"))?;
    }
    Ok(format!("{CONFLUENCE_CASES} paths and {CONFLUENCE_CASES} free words"))
}

fn flat_curvature() -> Outcome {
    let k = tetrahedron();
    let g = GroupDescriptor::Free(vec!["x".into(), "y".into()]);
    let c = Connection2::flat(Connection1::trivial(k.clone(), g.clone()));
    let vs: Vec<&Vertex> = k.vertices().iter().collect();
    let mut configs = 0;
    for &a in &vs {
        for &b in &vs {
            for &cc in &vs {
                for &d in &vs {
                    if BTreeSet::from([a, b, cc, d]).len() != 4 {
                        continue;
                    }
                    let path = EdgePath::through(&[a.clone(), b.clone(), d.clone()]).unwrap();
                    let s0 = Section::new(path, vec![parse_element("x", &g).unwrap(), parse_element("y", &g).unwrap()])
                        .unwrap();
                    let report = curvature_square(a, b, cc, d, &s0, &c).map_err(|e| e.to_string())?;
                    check(report.is_trivial(), || format!("{a}{b}{cc}{d}: defects {report}"))?;
                    configs += 1;
                }
            }
        }
    }
    check(configs == 24, || format!("{configs} configurations"))?;
    Ok(format!("{configs} vertex orderings, all defects e"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden tetrahedron successions", golden_reproduction),
        ("scheme discrepancy", scheme_discrepancy),
        ("abelianisation obstruction", abelianisation_obstruction),
        ("holonomy functoriality and gauge covariance", holonomy_functoriality),
        ("move inverses and relations", move_inverses),
        ("locality of disjoint moves", locality),
        ("reduction confluence", confluence),
        ("flat-connection curvature", flat_curvature),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
