//! Brute-force ground truth: every orientation of small complete bipartite
//! graphs, the niche graphs they produce up to isomorphism, and an
//! exhaustive comparison with the recognizer.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{check_size, Error, Result};
use crate::kernel::{
    canonical_code, canonical_code_masks, indexed_ids, CanonicalCode, Graph, CANON_MAX_LIMIT,
};
use crate::recognize::{recognize, Decision};
use crate::structure::{complete_multipartite, expand};
use crate::tournament::{BipartiteTournament, Direction};

pub const ENUMERATE_LIMIT: usize = 24;
pub const CENSUS_LIMIT: usize = 20;
pub const CROSS_CHECK_DEFAULT: usize = 6;
pub const CROSS_CHECK_LIMIT: usize = 7;
pub const BRUTE_X_LIMIT: usize = 10;

/// Orientations per work block of the census.
const BLOCK: u64 = 1 << 12;

/// One orientation of `K_{m,n}`: bit `k` of `index` orients the `k`-th
/// cross pair in row-major `(left, right)` order, `1` meaning left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientationIndex {
    pub m: usize,
    pub n: usize,
    pub index: u64,
}

impl OrientationIndex {
    pub fn new(m: usize, n: usize, index: u64) -> Result<Self> {
        check_size("orientation_index", ENUMERATE_LIMIT, m * n)?;
        if m == 0 || n == 0 {
            return Err(Error::InvalidTournament(
                "both sides must be nonempty".into(),
            ));
        }
        if index >> (m * n) != 0 {
            return Err(Error::InvalidTournament(format!(
                "index {index} out of range for {m}x{n}"
            )));
        }
        Ok(OrientationIndex { m, n, index })
    }

    /// Index of a tournament on any labels, read in sorted side order.
    pub fn of(d: &BipartiteTournament) -> Result<Self> {
        let (m, n) = (d.left().len(), d.right().len());
        check_size("orientation_index", ENUMERATE_LIMIT, m * n)?;
        let mut index = 0;
        for i in 0..m {
            for j in 0..n {
                if d.forward(i, j) {
                    index |= 1 << (i * n + j);
                }
            }
        }
        Ok(OrientationIndex { m, n, index })
    }

    pub fn left_to_right(&self, i: usize, j: usize) -> bool {
        self.index >> (i * self.n + j) & 1 == 1
    }

    /// The tournament on left vertices `u0..` and right vertices `v0..`.
    pub fn tournament(&self) -> BipartiteTournament {
        let forward = (0..self.m * self.n)
            .map(|k| self.index >> k & 1 == 1)
            .collect();
        BipartiteTournament::from_matrix(
            indexed_ids("u", self.m),
            indexed_ids("v", self.n),
            forward,
        )
        .expect("indexed sides are valid")
    }

    /// Niche graph adjacency, left vertices first. Two left vertices are
    /// adjacent unless their out-rows are complementary; likewise columns.
    pub(crate) fn niche_masks(&self) -> Vec<u64> {
        let (m, n) = (self.m, self.n);
        let row_full = (1u64 << n) - 1;
        let col_full = (1u64 << m) - 1;
        let rows: Vec<u64> = (0..m).map(|i| self.index >> (i * n) & row_full).collect();
        let cols: Vec<u64> = (0..n)
            .map(|j| {
                (0..m)
                    .filter(|&i| rows[i] >> j & 1 == 1)
                    .fold(0, |c, i| c | 1 << i)
            })
            .collect();
        let mut adj = vec![0u64; m + n];
        for a in 0..m {
            for b in a + 1..m {
                if rows[a] ^ rows[b] != row_full {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        for c in 0..n {
            for d in c + 1..n {
                if cols[c] ^ cols[d] != col_full {
                    adj[m + c] |= 1 << (m + d);
                    adj[m + d] |= 1 << (m + c);
                }
            }
        }
        adj
    }
}

/// All `2^(m n)` orientations in index order.
pub fn enumerate_orientations(
    m: usize,
    n: usize,
) -> Result<impl Iterator<Item = BipartiteTournament>> {
    OrientationIndex::new(m, n, 0)?;
    Ok((0..1u64 << (m * n)).map(move |index| OrientationIndex { m, n, index }.tournament()))
}

/// Number of orientations realizing each niche graph of `K_{m,n}`, keyed by
/// canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityCensus {
    pub m: usize,
    pub n: usize,
    pub counts: BTreeMap<CanonicalCode, u64>,
}

impl RealizabilityCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Run `f` on a pool of `jobs` workers, or on the global pool for `None`.
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn merge(
    mut a: BTreeMap<CanonicalCode, u64>,
    b: BTreeMap<CanonicalCode, u64>,
) -> BTreeMap<CanonicalCode, u64> {
    for (code, count) in b {
        *a.entry(code).or_insert(0) += count;
    }
    a
}

pub fn census(m: usize, n: usize, jobs: Option<usize>) -> Result<RealizabilityCensus> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidTournament(
            "both sides must be nonempty".into(),
        ));
    }
    check_size("census", CENSUS_LIMIT, m * n)?;
    check_size("census", CANON_MAX_LIMIT, m + n)?;
    let total = 1u64 << (m * n);
    let blocks = total.div_ceil(BLOCK);
    let counts = with_jobs(jobs, || {
        (0..blocks)
            .into_par_iter()
            .map(|b| {
                let mut local = BTreeMap::new();
                for index in b * BLOCK..((b + 1) * BLOCK).min(total) {
                    let masks = OrientationIndex { m, n, index }.niche_masks();
                    *local.entry(canonical_code_masks(&masks)).or_insert(0) += 1;
                }
                local
            })
            .reduce(BTreeMap::new, merge)
    });
    Ok(RealizabilityCensus { m, n, counts })
}

/// Isomorphism classes of graphs on `n` vertices, grown one vertex at a
/// time: every class on `n` vertices arises from one on `n - 1` plus a new
/// vertex joined to some subset. Each class is stored with its canonical
/// representative.
pub fn graph_classes(n: usize) -> Result<BTreeMap<CanonicalCode, Graph>> {
    check_size("graph_classes", CROSS_CHECK_LIMIT, n)?;
    let mut classes: BTreeSet<CanonicalCode> = BTreeSet::from([canonical_code_masks(&[])]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for code in &classes {
            let base = code.to_graph().masks();
            for subset in 0..1u64 << (k - 1) {
                let mut adj = base.clone();
                for (i, row) in adj.iter_mut().enumerate() {
                    *row |= (subset >> i & 1) << (k - 1);
                }
                adj.push(subset);
                next.insert(canonical_code_masks(&adj));
            }
        }
        classes = next;
    }
    Ok(classes
        .into_iter()
        .map(|c| {
            let g = c.to_graph();
            (c, g)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub code: CanonicalCode,
    pub graph: Graph,
    pub recognized: bool,
    pub realizable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSummary {
    pub order: usize,
    pub classes: usize,
    pub realizable: usize,
    pub orientations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub n_max: usize,
    pub orders: Vec<OrderSummary>,
    pub mismatches: Vec<Mismatch>,
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.orders {
            writeln!(
                f,
                "order {}: classes {} realizable {} orientations {}",
                o.order, o.classes, o.realizable, o.orientations
            )?;
        }
        for m in &self.mismatches {
            writeln!(
                f,
                "mismatch {} recognized={} realizable={}",
                m.code, m.recognized, m.realizable
            )?;
        }
        writeln!(f, "mismatches: {}", self.mismatches.len())
    }
}

/// Compare the recognizer with exhaustive realizability on every graph of at
/// most `n_max` vertices, up to isomorphism.
pub fn cross_check(n_max: usize, jobs: Option<usize>) -> Result<CrossCheckReport> {
    check_size("cross_check", CROSS_CHECK_LIMIT, n_max)?;
    let mut orders = Vec::new();
    let mut mismatches = Vec::new();
    for order in 1..=n_max {
        let mut realizable = BTreeSet::new();
        let mut orientations = 0;
        for m in 1..order {
            let c = census(m, order - m, jobs)?;
            orientations += c.total();
            realizable.extend(c.counts.into_keys());
        }
        let classes = graph_classes(order)?;
        let verdicts: Vec<(CanonicalCode, Graph, bool)> = with_jobs(jobs, || {
            classes
                .into_par_iter()
                .map(|(code, g)| {
                    let yes = recognize(&g).decision == Decision::Yes;
                    (code, g, yes)
                })
                .collect()
        });
        orders.push(OrderSummary {
            order,
            classes: verdicts.len(),
            realizable: realizable.len(),
            orientations,
        });
        for (code, graph, recognized) in verdicts {
            let real = realizable.contains(&code);
            if recognized != real {
                mismatches.push(Mismatch {
                    code,
                    graph,
                    recognized,
                    realizable: real,
                });
            }
        }
    }
    Ok(CrossCheckReport {
        n_max,
        orders,
        mismatches,
    })
}

/// Orientation drawn from ChaCha8 seeded with `seed`: one `next_u64` per
/// cross pair in row-major order, a set top bit meaning left to right.
pub fn random_tournament(m: usize, n: usize, seed: u64) -> Result<BipartiteTournament> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    BipartiteTournament::new(indexed_ids("u", m), indexed_ids("v", n), |_, _| {
        if rng.next_u64() >> 63 == 1 {
            Direction::LeftToRight
        } else {
            Direction::RightToLeft
        }
    })
}

/// All `(a, b)` such that the connected graph `g` is isomorphic to an
/// expansion of the complete multipartite graph with `a` parts of size two
/// and `b` of size one, found by trying every template and every clique-size
/// assignment.
pub fn brute_force_x(g: &Graph) -> Result<BTreeSet<(usize, usize)>> {
    check_size("brute_force_x", BRUTE_X_LIMIT, g.order())?;
    let n = g.order();
    let target = canonical_code(g)?;
    let mut found = BTreeSet::new();
    for a in 0..=n / 2 {
        for b in 0..=n - 2 * a {
            let t = 2 * a + b;
            if t == 0 {
                continue;
            }
            let names = indexed_ids("t", t);
            let mut parts: Vec<Vec<_>> = (0..a).map(|p| names[2 * p..2 * p + 2].to_vec()).collect();
            parts.extend(names[2 * a..].iter().map(|v| vec![v.clone()]));
            let h = complete_multipartite(&parts);
            if compositions(n, t).into_iter().any(|sizes| {
                let sizes: BTreeMap<_, _> = names.iter().cloned().zip(sizes).collect();
                let e =
                    expand(&h, &sizes, crate::structure::default_namer).expect("positive sizes");
                canonical_code(&e).is_ok_and(|c| c == target)
            }) {
                found.insert((a, b));
            }
        }
    }
    Ok(found)
}

/// Every way to write `total` as an ordered sum of `parts` positive integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::niche::niche_graph;

    #[test]
    fn orientation_counts() {
        assert_eq!(enumerate_orientations(1, 1).unwrap().count(), 2);
        assert_eq!(enumerate_orientations(2, 2).unwrap().count(), 16);
        assert_eq!(enumerate_orientations(3, 4).unwrap().count(), 4096);
        assert!(matches!(
            enumerate_orientations(5, 5),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn index_round_trip_and_masks() {
        for index in 0..1 << 6 {
            let idx = OrientationIndex::new(2, 3, index).unwrap();
            let d = idx.tournament();
            assert_eq!(OrientationIndex::of(&d).unwrap(), idx);
            assert_eq!(niche_graph(&d).masks(), idx.niche_masks());
        }
        assert!(OrientationIndex::new(2, 2, 16).is_err());
    }

    #[test]
    fn census_examples() {
        let c = census(1, 1, None).unwrap();
        assert_eq!(c.counts.len(), 1);
        let (code, &count) = c.counts.iter().next().unwrap();
        assert_eq!(count, 2);
        assert_eq!(code.to_graph().edge_count(), 0);
        let c = census(2, 2, Some(2)).unwrap();
        assert_eq!(c.total(), 16);
        let empty4 = canonical_code(&Graph::indexed(4, &[])).unwrap();
        assert!(c.counts.contains_key(&empty4));
        assert_eq!(
            census(2, 3, Some(1)).unwrap(),
            census(2, 3, Some(3)).unwrap()
        );
        assert!(census(5, 5, None).is_err());
    }

    #[test]
    fn one_left_vertex_gives_two_cliques_on_the_right() {
        for (code, _) in census(1, 4, None).unwrap().counts {
            let g = code.to_graph();
            // The single left vertex is isolated; the right side splits into
            // its out- and in-neighbourhoods, each a clique.
            let mut sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            assert_eq!(sizes[0], 1);
            assert!(g
                .components()
                .iter()
                .all(|c| g.induced_by_index(c).is_complete()));
        }
    }

    #[test]
    fn graph_class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| graph_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn small_cross_checks_agree() {
        let r = cross_check(3, None).unwrap();
        assert!(r.mismatches.is_empty(), "{r}");
        assert_eq!(r.orders[2].classes, 4);
        // 3K1 and K2 ∪ K1 are the realizable classes on three vertices.
        assert_eq!(r.orders[2].realizable, 2);
        let r = cross_check(5, Some(2)).unwrap();
        assert!(r.to_string().ends_with("mismatches: 0\n"));
    }

    #[test]
    fn random_tournaments_are_reproducible() {
        let a = random_tournament(2, 2, 0).unwrap();
        assert_eq!(a, random_tournament(2, 2, 0).unwrap());
        let distinct: BTreeSet<u64> = (0..200)
            .map(|s| {
                OrientationIndex::of(&random_tournament(4, 4, s).unwrap())
                    .unwrap()
                    .index
            })
            .collect();
        assert!(distinct.len() > 190);
        assert!(random_tournament(0, 3, 1).is_err());
    }

    #[test]
    fn brute_force_x_examples() {
        let k3 = Graph::indexed(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            brute_force_x(&k3).unwrap(),
            BTreeSet::from([(0, 1), (0, 2), (0, 3)])
        );
        let p3 = Graph::indexed(3, &[(0, 1), (1, 2)]);
        assert_eq!(brute_force_x(&p3).unwrap(), BTreeSet::from([(1, 1)]));
        let c4 = Graph::indexed(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(brute_force_x(&c4).unwrap(), BTreeSet::from([(2, 0)]));
        let c5 = Graph::indexed(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(brute_force_x(&c5).unwrap().is_empty());
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    }
}
