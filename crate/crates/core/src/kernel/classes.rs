//! Forbidden-subgraph scans and chordal / interval recognition.

use super::graph::Graph;
use crate::error::{check_size, Result};

pub const AT_LIMIT: usize = 16;

/// Three pairwise non-adjacent vertices, ascending.
pub fn find_independent_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            if let Some(c) = (b + 1..n).find(|&c| !g.has_edge(a, c) && !g.has_edge(b, c)) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

pub fn has_independent_triple(g: &Graph) -> bool {
    find_independent_triple(g).is_some()
}

/// An induced path on four vertices, in path order.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            for a in g.neighbors(b).filter(|&a| a != c && !g.has_edge(a, c)) {
                if let Some(d) = g
                    .neighbors(c)
                    .find(|&d| d != b && d != a && !g.has_edge(d, b) && !g.has_edge(d, a))
                {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

pub fn contains_induced_p4(g: &Graph) -> bool {
    find_induced_p4(g).is_some()
}

/// An induced `K_{1,3}` as `[center, leaf, leaf, leaf]`.
pub fn find_claw(g: &Graph) -> Option<[usize; 4]> {
    for c in 0..g.order() {
        let nbrs: Vec<usize> = g.neighbors(c).collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for (j, &y) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(x, y) {
                    continue;
                }
                if let Some(&z) = nbrs[j + 1..]
                    .iter()
                    .find(|&&z| !g.has_edge(x, z) && !g.has_edge(y, z))
                {
                    return Some([c, x, y, z]);
                }
            }
        }
    }
    None
}

pub fn contains_claw(g: &Graph) -> bool {
    find_claw(g).is_some()
}

/// Chordality via maximum cardinality search and a perfect elimination
/// ordering check.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut position = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| position[v] == usize::MAX)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        position[v] = step;
        order.push(v);
        for u in g.neighbors(v) {
            if position[u] == usize::MAX {
                weight[u] += 1;
            }
        }
    }
    // Visited-earlier neighbours of each vertex must lie in the closed
    // neighbourhood of the latest of them.
    order.iter().all(|&v| {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .filter(|&u| position[u] < position[v])
            .collect();
        match earlier.iter().max_by_key(|&&u| position[u]) {
            None => true,
            Some(&parent) => earlier
                .iter()
                .all(|&u| u == parent || g.has_edge(u, parent)),
        }
    })
}

/// Component label of every vertex in `g - N[z]`; `usize::MAX` for removed vertices.
fn labels_avoiding(g: &Graph, z: usize) -> Vec<usize> {
    let n = g.order();
    let mut label = vec![usize::MAX; n];
    let removed = |v: usize| v == z || g.has_edge(v, z);
    let mut next = 0;
    for s in 0..n {
        if removed(s) || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !removed(v) && label[v] == usize::MAX {
                    label[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    label
}

/// An asteroidal triple, ascending.
pub fn find_asteroidal_triple(g: &Graph) -> Result<Option<[usize; 3]>> {
    check_size("has_asteroidal_triple", AT_LIMIT, g.order())?;
    let n = g.order();
    let labels: Vec<Vec<usize>> = (0..n).map(|z| labels_avoiding(g, z)).collect();
    let joined = |x: usize, y: usize, z: usize| labels[z][x] == labels[z][y];
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if joined(a, b, c) && joined(a, c, b) && joined(b, c, a) {
                    return Ok(Some([a, b, c]));
                }
            }
        }
    }
    Ok(None)
}

pub fn has_asteroidal_triple(g: &Graph) -> Result<bool> {
    Ok(find_asteroidal_triple(g)?.is_some())
}

/// Interval graphs are exactly the chordal graphs without an asteroidal triple.
pub fn is_interval(g: &Graph) -> Result<bool> {
    Ok(is_chordal(g) && !has_asteroidal_triple(g)?)
}
