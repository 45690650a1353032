//! Exact exponential-time searches for desk-scale graphs.

use petgraph::graph::UnGraph;

use super::graph::{bits, Graph};
use crate::error::{check_size, Result};

pub const CLIQUE_LIMIT: usize = 32;
pub const HAMILTON_LIMIT: usize = 22;
pub const HOLE_LIMIT: usize = 16;

/// Clique number by Bron–Kerbosch with pivoting.
pub fn clique_number(g: &Graph) -> Result<usize> {
    check_size("clique_number", CLIQUE_LIMIT, g.order())?;
    let adj = g.masks();
    let all = if adj.is_empty() {
        0
    } else {
        u64::MAX >> (64 - adj.len())
    };
    let mut best = 0;
    expand_clique(&adj, 0, all, 0, &mut best);
    Ok(best)
}

fn expand_clique(adj: &[u64], size: usize, mut cand: u64, mut done: u64, best: &mut usize) {
    if cand == 0 {
        if done == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let pivot = bits(cand | done)
        .max_by_key(|&u| (cand & adj[u]).count_ones())
        .expect("nonempty");
    for v in bits(cand & !adj[pivot]) {
        expand_clique(adj, size + 1, cand & adj[v], done & adj[v], best);
        cand &= !(1 << v);
        done |= 1 << v;
    }
}

/// Size of a maximum matching (exact, Gabow's general-graph algorithm).
pub fn max_matching_size(g: &Graph) -> usize {
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(g.order(), g.edge_count());
    let nodes: Vec<_> = (0..g.order()).map(|_| pg.add_node(())).collect();
    for (i, j) in g.edges() {
        pg.add_edge(nodes[i], nodes[j], ());
    }
    petgraph::algo::maximum_matching(&pg).len()
}

/// Bitmask dynamic program over vertex subsets. `reach[mask]` holds the set
/// of possible endpoints of a path covering exactly `mask`; with `start`
/// fixed, only paths beginning there are tracked.
fn path_table(adj: &[u64], start: Option<usize>) -> Vec<u32> {
    let n = adj.len();
    let mut reach = vec![0u32; 1 << n];
    match start {
        Some(s) => reach[1 << s] = 1 << s,
        None => (0..n).for_each(|v| reach[1 << v] = 1 << v),
    }
    for mask in 1..reach.len() {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for u in 0..n {
            if mask >> u & 1 == 0 && adj[u] as u32 & ends != 0 {
                reach[mask | 1 << u] |= 1 << u;
            }
        }
    }
    reach
}

/// Walk the table back from `end` over the full vertex set; the sequence
/// starts at `end`.
fn trace_back(adj: &[u64], reach: &[u32], mut end: usize) -> Vec<usize> {
    let mut mask = reach.len() - 1;
    let mut order = vec![end];
    while mask.count_ones() > 1 {
        mask &= !(1 << end);
        let prev = (reach[mask] & adj[end] as u32).trailing_zeros() as usize;
        order.push(prev);
        end = prev;
    }
    order
}

pub fn hamiltonian_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    check_size("hamiltonian_path", HAMILTON_LIMIT, g.order())?;
    let n = g.order();
    if n == 0 {
        return Ok(None);
    }
    let adj = g.masks();
    let reach = path_table(&adj, None);
    let ends = reach[(1 << n) - 1];
    Ok((ends != 0).then(|| trace_back(&adj, &reach, ends.trailing_zeros() as usize)))
}

/// A Hamilton cycle as a vertex sequence (closing edge implied). Graphs on
/// fewer than three vertices have none.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    check_size("hamiltonian_cycle", HAMILTON_LIMIT, g.order())?;
    let n = g.order();
    if n < 3 {
        return Ok(None);
    }
    let adj = g.masks();
    let reach = path_table(&adj, Some(0));
    let closing = reach[(1 << n) - 1] & adj[0] as u32;
    Ok((closing != 0).then(|| {
        let mut cycle = trace_back(&adj, &reach, closing.trailing_zeros() as usize);
        cycle.reverse();
        cycle
    }))
}

/// A shortest induced cycle of length at least `min_len` (itself at least 4),
/// or `None`.
pub fn shortest_long_hole(g: &Graph, min_len: usize) -> Result<Option<Vec<usize>>> {
    check_size("shortest_long_hole", HOLE_LIMIT, g.order())?;
    let min_len = min_len.max(4);
    Ok(shortest_hole_where(&g.masks(), |len| len >= min_len))
}

/// A shortest odd hole (induced odd cycle of length at least 5), or `None`.
pub fn shortest_odd_hole(g: &Graph) -> Result<Option<Vec<usize>>> {
    check_size("shortest_odd_hole", HOLE_LIMIT, g.order())?;
    Ok(shortest_hole_where(&g.masks(), |len| {
        len >= 5 && len % 2 == 1
    }))
}

/// Exhaustive search over chordless paths whose smallest vertex is the first
/// one; a path closes into a hole when its new end is adjacent to the start.
fn shortest_hole_where(adj: &[u64], accept: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    struct Search<'a, F> {
        adj: &'a [u64],
        accept: F,
        best: Option<Vec<usize>>,
    }

    impl<F: Fn(usize) -> bool> Search<'_, F> {
        fn bound(&self) -> usize {
            self.best.as_ref().map_or(usize::MAX, Vec::len)
        }

        // `interior` is the union of neighbourhoods of path[1..len-1].
        fn extend(&mut self, path: &mut Vec<usize>, on_path: u64, interior: u64) {
            let start = path[0];
            let last = *path.last().expect("nonempty");
            let above = !((2u64 << start) - 1);
            for x in bits(self.adj[last] & above & !on_path & !interior) {
                if self.adj[x] >> start & 1 == 1 {
                    let len = path.len() + 1;
                    if path.len() >= 3 && (self.accept)(len) && len < self.bound() {
                        let mut cycle = path.clone();
                        cycle.push(x);
                        self.best = Some(cycle);
                    }
                } else if path.len() + 2 < self.bound() {
                    path.push(x);
                    self.extend(path, on_path | 1 << x, interior | self.adj[last]);
                    path.pop();
                }
            }
        }
    }

    let mut search = Search {
        adj,
        accept,
        best: None,
    };
    for s in 0..adj.len() {
        for p in bits(adj[s] & !((2u64 << s) - 1)) {
            let mut path = vec![s, p];
            search.extend(&mut path, 1 << s | 1 << p, 0);
        }
    }
    search.best
}
