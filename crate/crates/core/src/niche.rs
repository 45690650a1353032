//! Niche graphs of bipartite tournaments and the two vertex relations that
//! govern them: equal out-neighbourhoods, and the pairing of same-side
//! vertices whose out-neighbourhood equals the other's in-neighbourhood.

use std::collections::{BTreeMap, BTreeSet};

use crate::kernel::{Graph, Side, VertexId};
use crate::report::{join_ids, LawOutcome, LawReport};
use crate::tournament::BipartiteTournament;

/// Niche graph of `d`: two vertices are adjacent when they share an
/// out-neighbour or an in-neighbour. The result records each vertex's side.
pub fn niche_graph(d: &BipartiteTournament) -> Graph {
    let mut ids: Vec<(VertexId, Side, usize)> = d
        .left()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), Side::Left, i))
        .chain(
            d.right()
                .iter()
                .enumerate()
                .map(|(j, v)| (v.clone(), Side::Right, j)),
        )
        .collect();
    ids.sort();
    let (m, n) = (d.left().len(), d.right().len());
    let mut g = Graph::edgeless(ids.iter().map(|(v, _, _)| v.clone()).collect());
    for a in 0..ids.len() {
        for b in a + 1..ids.len() {
            let (_, sa, pa) = ids[a];
            let (_, sb, pb) = ids[b];
            let share = match (sa, sb) {
                // Common prey or common predator on the right side.
                (Side::Left, Side::Left) => (0..n).any(|j| d.forward(pa, j) == d.forward(pb, j)),
                (Side::Right, Side::Right) => (0..m).any(|i| d.forward(i, pa) == d.forward(i, pb)),
                _ => false,
            };
            if share {
                g.add_edge(a, b);
            }
        }
    }
    g.with_sides(ids.into_iter().map(|(_, s, _)| s).collect())
}

/// Classes of vertices with equal out-neighbourhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivPartition {
    /// Classes in ascending order of their smallest member.
    pub classes: Vec<Vec<VertexId>>,
    pub side_of_class: Vec<Side>,
}

impl EquivPartition {
    pub fn class_of(&self, v: &VertexId) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(v).is_ok())
    }
}

pub fn equiv_partition(d: &BipartiteTournament) -> EquivPartition {
    let mut groups: BTreeMap<(Side, Vec<bool>), Vec<VertexId>> = BTreeMap::new();
    for side in [Side::Left, Side::Right] {
        let members = match side {
            Side::Left => d.left(),
            Side::Right => d.right(),
        };
        for (row, v) in d.out_rows(side).into_iter().zip(members) {
            groups.entry((side, row)).or_default().push(v.clone());
        }
    }
    let mut classes: Vec<(Vec<VertexId>, Side)> = groups
        .into_iter()
        .map(|((side, _), mut members)| {
            members.sort();
            (members, side)
        })
        .collect();
    classes.sort();
    let (classes, side_of_class) = classes.into_iter().unzip();
    EquivPartition {
        classes,
        side_of_class,
    }
}

/// Same-side pairs `{u, v}` with `N+(u) = N-(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RPairing {
    /// Pairs `(u, v)` with `u < v`, ascending.
    pub pairs: Vec<(VertexId, VertexId)>,
    /// Vertices in no pair, ascending.
    pub unpaired: Vec<VertexId>,
}

impl RPairing {
    pub fn related(&self, u: &VertexId, v: &VertexId) -> bool {
        let key = if u < v {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        self.pairs.binary_search(&key).is_ok()
    }

    /// All vertices related to `u`.
    pub fn partners(&self, u: &VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .pairs
            .iter()
            .filter_map(|(a, b)| {
                if a == u {
                    Some(b.clone())
                } else if b == u {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect();
        out.sort();
        out
    }
}

pub fn r_pairing(d: &BipartiteTournament) -> RPairing {
    let mut pairs = Vec::new();
    let mut paired = BTreeSet::new();
    for side in [d.left(), d.right()] {
        let outs: Vec<Vec<VertexId>> = side
            .iter()
            .map(|v| d.out_neighbors(v).expect("own vertex"))
            .collect();
        let ins: Vec<Vec<VertexId>> = side
            .iter()
            .map(|v| d.in_neighbors(v).expect("own vertex"))
            .collect();
        for a in 0..side.len() {
            for b in a + 1..side.len() {
                if outs[a] == ins[b] {
                    pairs.push((side[a].clone(), side[b].clone()));
                    paired.insert(side[a].clone());
                    paired.insert(side[b].clone());
                }
            }
        }
    }
    pairs.sort();
    let mut unpaired: Vec<VertexId> = d
        .left()
        .iter()
        .chain(d.right())
        .filter(|v| !paired.contains(*v))
        .cloned()
        .collect();
    unpaired.sort();
    RPairing { pairs, unpaired }
}

fn closed_neighborhood(g: &Graph, i: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g.neighbors(i).collect();
    out.push(i);
    out.sort_unstable();
    out
}

/// Check the relation laws on the niche graph of `d`, collecting every
/// violation:
///
/// * `no_cross_edges`: no edge joins the two sides;
/// * `nonedge_iff_related`: distinct same-side vertices are non-adjacent
///   exactly when they are R-related;
/// * `related_chain_same_class`: `u R v` and `v R w` with `u != w` force
///   `u` and `w` into one equivalence class, hence adjacent;
/// * `classes_homogeneous_cliques`: equivalent vertices are adjacent and have
///   the same closed neighbourhood.
pub fn verify_relation_laws(d: &BipartiteTournament) -> LawReport {
    let g = niche_graph(d);
    let eq = equiv_partition(d);
    let r = r_pairing(d);
    let idx = |v: &VertexId| g.index_of(v.as_str()).expect("tournament vertex");
    let pair = |a: &VertexId, b: &VertexId| join_ids([a, b]);
    let mut report = LawReport::default();

    let mut cross = Vec::new();
    for u in d.left() {
        for v in d.right() {
            if g.has_edge(idx(u), idx(v)) {
                cross.push(pair(u, v));
            }
        }
    }
    report.push(LawOutcome::from_witnesses("no_cross_edges", cross));

    let mut mismatched = Vec::new();
    for side in [d.left(), d.right()] {
        for (a, u) in side.iter().enumerate() {
            for v in &side[a + 1..] {
                if g.has_edge(idx(u), idx(v)) == r.related(u, v) {
                    mismatched.push(pair(u, v));
                }
            }
        }
    }
    report.push(LawOutcome::from_witnesses(
        "nonedge_iff_related",
        mismatched,
    ));

    let mut chain = Vec::new();
    let all: Vec<&VertexId> = d.left().iter().chain(d.right()).collect();
    for v in &all {
        let partners = r.partners(v);
        for (a, u) in partners.iter().enumerate() {
            for w in &partners[a + 1..] {
                if eq.class_of(u) != eq.class_of(w) || !g.has_edge(idx(u), idx(w)) {
                    chain.push(join_ids([u, *v, w]));
                }
            }
        }
    }
    report.push(LawOutcome::from_witnesses(
        "related_chain_same_class",
        chain,
    ));

    let mut homog = Vec::new();
    for class in &eq.classes {
        for (a, u) in class.iter().enumerate() {
            for v in &class[a + 1..] {
                let (i, j) = (idx(u), idx(v));
                if !g.has_edge(i, j) || closed_neighborhood(&g, i) != closed_neighborhood(&g, j) {
                    homog.push(pair(u, v));
                }
            }
        }
    }
    report.push(LawOutcome::from_witnesses(
        "classes_homogeneous_cliques",
        homog,
    ));
    report
}
