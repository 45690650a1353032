//! Graph builders and seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use niche_core::kernel::{indexed_ids, Graph, VertexId};
use niche_core::recognize::inequalities_hold;
use niche_core::structure::{complete_multipartite, default_namer, expand};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    Graph::indexed(n, &e)
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::indexed(n, &e)
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::indexed(n, &e)
}

/// Disjoint union; vertex `i` of part `c` is named `c{c}_{i}`.
pub fn union(parts: &[Graph]) -> Graph {
    let mut ids = Vec::new();
    let mut edges = Vec::new();
    for (c, g) in parts.iter().enumerate() {
        let name = |i: usize| VertexId::new(format!("c{c}_{i:02}")).unwrap();
        ids.extend((0..g.order()).map(name));
        edges.extend(g.edges().into_iter().map(|(i, j)| (name(i), name(j))));
    }
    Graph::new(ids, edges).unwrap()
}

/// Rename the vertices by a random permutation of `x00, x01, ...`, so that
/// identifier order no longer follows the construction.
pub fn shuffle_labels(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut names = indexed_ids("x", g.order());
    names.shuffle(rng);
    let rename: HashMap<VertexId, VertexId> = g.ids().iter().cloned().zip(names).collect();
    g.relabel(&rename).unwrap()
}

/// Random connected graph on `n` vertices: a random spanning tree plus
/// random extra edges. When `complete` is false and `n >= 3` the result
/// is guaranteed not to be complete.
pub fn random_component(rng: &mut impl Rng, n: usize, complete_graph: bool) -> Graph {
    if complete_graph || n < 3 {
        return complete(n);
    }
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    let density = rng.random_range(0.0..0.9);
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) && !edges.contains(&(i, j)) {
                edges.push((i, j));
            }
        }
    }
    let total = n * (n - 1) / 2;
    if edges.len() == total {
        // A complete graph minus one edge is still connected.
        edges.retain(|&(i, j)| !(i == 0 && j == n - 1));
    }
    Graph::indexed(n, &edges)
}

/// Random graph with `k` components, each complete with probability
/// `p_complete`, at most `max_order` vertices in total.
pub fn random_components(rng: &mut impl Rng, k: usize, max_order: usize, p_complete: f64) -> Graph {
    let mut parts = Vec::new();
    let mut budget = max_order - k;
    for _ in 0..k {
        let extra = rng.random_range(0..=budget.min(4));
        budget -= extra;
        let size = 1 + extra;
        let complete_graph = rng.random_bool(p_complete);
        parts.push(random_component(rng, size, complete_graph));
    }
    union(&parts)
}

/// Template parameters `(a, b)` of a connected complete multipartite graph
/// with parts of size at most two.
fn connected_template(a: usize, b: usize) -> bool {
    a + b >= 2 || (a == 0 && b == 1)
}

/// Random two-component graph that expands a pair of templates satisfying
/// the size inequalities, with at most `max_order` vertices.
pub fn random_template_expansion(
    rng: &mut impl Rng,
    max_order: usize,
) -> (Graph, [(usize, usize); 2]) {
    loop {
        let (a1, b1, a2, b2) = (
            rng.random_range(0..=3),
            rng.random_range(0..=3),
            rng.random_range(0..=3),
            rng.random_range(0..=3),
        );
        let t1 = 2 * a1 + b1;
        let t2 = 2 * a2 + b2;
        if !connected_template(a1, b1)
            || !connected_template(a2, b2)
            || !inequalities_hold(a1, b1, a2, b2)
            || t1 + t2 > max_order
        {
            continue;
        }
        let mut budget = max_order - t1 - t2;
        let mut component = |a: usize, b: usize, tag: &str| {
            let names = indexed_ids(tag, 2 * a + b);
            let mut parts: Vec<Vec<VertexId>> =
                (0..a).map(|p| names[2 * p..2 * p + 2].to_vec()).collect();
            parts.extend(names[2 * a..].iter().map(|v| vec![v.clone()]));
            let h = complete_multipartite(&parts);
            let sizes: BTreeMap<VertexId, usize> = names
                .iter()
                .map(|v| {
                    let extra = rng.random_range(0..=budget.min(2));
                    budget -= extra;
                    (v.clone(), 1 + extra)
                })
                .collect();
            expand(&h, &sizes, default_namer).unwrap()
        };
        let g1 = component(a1, b1, "p");
        let g2 = component(a2, b2, "q");
        let g = union(&[g1, g2]);
        return (shuffle_labels(rng, &g), [(a1, b1), (a2, b2)]);
    }
}
