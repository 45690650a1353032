//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use niche_core::kernel::{
    clique_number, hamiltonian_cycle, hamiltonian_path, max_matching_size, Graph,
};
use niche_core::niche::verify_relation_laws;
use niche_core::oracle::{brute_force_x, cross_check, graph_classes, random_tournament};
use niche_core::properties::{verify_condensation_shape, verify_niche_properties};
use niche_core::realize::realize_two;
use niche_core::recognize::{Decision, Reason};
use niche_core::report::LawStatus;
use niche_core::structure::expansion_profile;
use niche_core::{niche_graph, realize, recognize};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::{cycle, path, random_components, random_template_expansion, union};

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// The soundness corpus: niche graphs of seeded random tournaments with
/// side sizes cycling through 1..=8.
fn corpus() -> Vec<Graph> {
    (0..10_000u64)
        .into_par_iter()
        .map(|seed| {
            let m = 1 + (seed % 8) as usize;
            let n = 1 + (seed / 8 % 8) as usize;
            niche_graph(&random_tournament(m, n, seed).unwrap())
        })
        .collect()
}

fn exhaustive_completeness() -> Outcome {
    let report = cross_check(6, None).unwrap();
    let classes: usize = report.orders.iter().map(|o| o.classes).sum();
    let orientations: u64 = report.orders.iter().map(|o| o.orientations).sum();
    // Orientations of K_{m,n} over all m + n <= 6 with both sides nonempty.
    let expected: u64 = (2..=6u32)
        .flat_map(|t| (1..t).map(move |m| 1u64 << (m * (t - m))))
        .sum();
    outcome(
        report.mismatches.is_empty() && classes == 208 && orientations == expected,
        format!(
            "classes={classes} orientations={orientations} mismatches={}",
            report.mismatches.len()
        ),
    )
}

fn soundness_fuzz(corpus: &[Graph]) -> Outcome {
    let failures: Vec<String> = (0..corpus.len() as u64)
        .into_par_iter()
        .filter_map(|seed| {
            let m = 1 + (seed % 8) as usize;
            let n = 1 + (seed / 8 % 8) as usize;
            let d = random_tournament(m, n, seed).unwrap();
            let g = &corpus[seed as usize];
            let cert = recognize(g);
            let relation = verify_relation_laws(&d);
            let props = verify_niche_properties(g);
            let skipped = props
                .outcomes
                .iter()
                .any(|o| o.status == LawStatus::Skipped);
            let ok = cert.decision == Decision::Yes
                && cert.check(g).is_ok()
                && relation.all_pass()
                && props.all_pass()
                && !skipped;
            (!ok).then(|| format!("seed={seed}"))
        })
        .collect();
    outcome(
        failures.is_empty(),
        format!(
            "tournaments={} failures={} {}",
            corpus.len(),
            failures.len(),
            failures
                .iter()
                .take(3)
                .cloned()
                .collect::<Vec<_>>()
                .join(" ")
        ),
    )
}

fn table(
    expected: &[(usize, usize)],
    range: std::ops::RangeInclusive<usize>,
    build: fn(usize) -> Graph,
) -> Outcome {
    let mut yes = Vec::new();
    for m in range.clone() {
        for n in range.clone() {
            if recognize(&union(&[build(m), build(n)])).decision == Decision::Yes {
                yes.push((m, n));
            }
        }
    }
    outcome(yes == expected, format!("yes={yes:?}"))
}

fn three_four_components() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let (mut yes, mut no, mut bad) = (0, 0, Vec::new());
    for case in 0..200 {
        let k = rng.random_range(3..=4);
        let g = random_components(&mut rng, k, 12, 0.6);
        let all_complete = g
            .components()
            .iter()
            .all(|c| g.induced_by_index(c).edge_count() == c.len() * (c.len() - 1) / 2);
        let cert = recognize(&g);
        let agrees = (cert.decision == Decision::Yes) == all_complete;
        let round_trip = match realize(&g) {
            Ok(Some(d)) => all_complete && niche_graph(&d) == g,
            Ok(None) => !all_complete,
            Err(_) => false,
        };
        if all_complete {
            yes += 1;
        } else {
            no += 1;
        }
        if !agrees || !round_trip || g.order() > 12 {
            bad.push(case);
        }
    }
    outcome(
        bad.is_empty() && yes > 0 && no > 0,
        format!("yes={yes} no={no} failures={bad:?}"),
    )
}

fn template_construction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let mut bad = Vec::new();
    let mut max_order = 0;
    for case in 0..500 {
        let (g, _) = random_template_expansion(&mut rng, 16);
        max_order = max_order.max(g.order());
        let cert = recognize(&g);
        let plan_ok = cert.reason == Reason::OkTwo
            && realize_two(&g, &cert)
                .is_ok_and(|(d, plan)| plan.check(&g).is_ok() && niche_graph(&d) == g);
        let round_trip = matches!(realize(&g), Ok(Some(d)) if niche_graph(&d) == g);
        if !plan_ok || !round_trip {
            bad.push(case);
        }
    }
    outcome(
        bad.is_empty() && max_order <= 16,
        format!("instances=500 max_order={max_order} failures={bad:?}"),
    )
}

fn x_oracle_agreement() -> Outcome {
    let mut checked = 0;
    let mut none = 0;
    let mut bad = Vec::new();
    for n in 1..=7 {
        for (code, g) in graph_classes(n).unwrap() {
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            let brute = brute_force_x(&g).unwrap();
            let fast: BTreeSet<(usize, usize)> = match expansion_profile(&g).unwrap() {
                Some(p) => p.x_set().into_iter().collect(),
                None => {
                    none += 1;
                    BTreeSet::new()
                }
            };
            if brute != fast {
                bad.push(code.to_hex());
            }
        }
    }
    outcome(
        bad.is_empty() && checked == 1 + 1 + 2 + 6 + 21 + 112 + 853,
        format!(
            "connected={checked} none={none} disagreements={}",
            bad.len()
        ),
    )
}

fn is_path(h: &Graph, seq: &[usize], closed: bool) -> bool {
    let distinct: BTreeSet<usize> = seq.iter().copied().collect();
    distinct.len() == h.order()
        && seq.windows(2).all(|w| h.has_edge(w[0], w[1]))
        && (!closed || h.has_edge(seq[0], seq[seq.len() - 1]))
}

/// Clique number by scanning every vertex subset.
fn brute_clique_number(g: &Graph) -> usize {
    let closed: Vec<u64> = (0..g.order()).map(|i| g.mask(i) | 1 << i).collect();
    (0u64..1 << g.order())
        .filter(|&s| (0..g.order()).all(|i| s >> i & 1 == 0 || closed[i] & s == s))
        .map(u64::count_ones)
        .max()
        .unwrap_or(0) as usize
}

fn bounds(corpus: &[Graph]) -> Outcome {
    let counts: Vec<[usize; 4]> = corpus
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let omega = clique_number(g).unwrap();
            if k < 300 {
                assert_eq!(
                    omega,
                    brute_clique_number(g),
                    "clique number of corpus graph {k}"
                );
            }
            let comps: Vec<Graph> = g
                .components()
                .iter()
                .map(|c| g.induced_by_index(c))
                .collect();
            let clique_ok = comps.iter().all(|h| h.order() <= 2 * omega) && g.order() <= 4 * omega;
            let matching_ok = 2 * max_matching_size(g) + 4 >= g.order();
            let path_ok = comps.iter().all(|h| {
                hamiltonian_path(h)
                    .unwrap()
                    .is_some_and(|p| is_path(h, &p, false))
            });
            let cycle_ok = comps.iter().all(|h| {
                !h.is_two_connected()
                    || hamiltonian_cycle(h)
                        .unwrap()
                        .is_some_and(|c| is_path(h, &c, true))
            });
            [clique_ok, matching_ok, path_ok, cycle_ok].map(|ok| usize::from(!ok))
        })
        .collect();
    let totals = counts.iter().fold([0; 4], |mut acc, c| {
        for i in 0..4 {
            acc[i] += c[i];
        }
        acc
    });
    outcome(
        totals == [0; 4],
        format!(
            "graphs={} clique_violations={} matching_violations={} path_violations={} cycle_violations={}",
            corpus.len(),
            totals[0],
            totals[1],
            totals[2],
            totals[3]
        ),
    )
}

/// Shape check straight from closed neighbourhoods, without the library's
/// condensation: within a component, each class misses at most one other
/// class and at most one class misses none.
fn direct_shape_ok(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        let mut classes: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &v in c {
            let mut closed: Vec<usize> = g.neighbors(v).collect();
            closed.push(v);
            closed.sort_unstable();
            classes.entry(closed).or_insert(v);
        }
        let reps: Vec<usize> = classes.into_values().collect();
        let missed = |i: usize| {
            (0..reps.len())
                .filter(|&j| j != i && !g.has_edge(reps[i], reps[j]))
                .count()
        };
        let misses: Vec<usize> = (0..reps.len()).map(missed).collect();
        misses.iter().all(|&m| m <= 1) && misses.iter().filter(|&&m| m == 0).count() <= 1
    })
}

fn condensation_shapes(corpus: &[Graph]) -> Outcome {
    let violations = corpus
        .par_iter()
        .filter(|g| !(verify_condensation_shape(g) && direct_shape_ok(g)))
        .count();
    outcome(
        violations == 0,
        format!("graphs={} violations={violations}", corpus.len()),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    let p_list = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)];
    let c_list = [(3, 3), (3, 4), (4, 3), (4, 4)];
    let criteria: Vec<Criterion> = vec![
        ("exhaustive_completeness", Box::new(exhaustive_completeness)),
        ("soundness_fuzz", Box::new(|| soundness_fuzz(&corpus))),
        (
            "path_pairs_table",
            Box::new(move || table(&p_list, 1..=5, path)),
        ),
        (
            "cycle_pairs_table",
            Box::new(move || table(&c_list, 3..=6, cycle)),
        ),
        ("three_four_components", Box::new(three_four_components)),
        ("template_construction", Box::new(template_construction)),
        ("x_oracle_agreement", Box::new(x_oracle_agreement)),
        ("bounds", Box::new(|| bounds(&corpus))),
        (
            "condensation_shape",
            Box::new(|| condensation_shapes(&corpus)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        failed += usize::from(!o.pass);
        println!(
            "criterion {} {name}: {} ({}) [{:.2}s]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed [{:.2}s]",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
