//! Canonical codes for small graphs.
//!
//! The code is the minimum upper-triangle adjacency bitstring over the
//! labelings reachable by an individualization-refinement search. Refinement
//! and branching are isomorphism-invariant, so equal codes mean isomorphic
//! graphs and vice versa. Branches are skipped for vertices that are twins of
//! an already explored vertex in the same cell, since the transposition of two
//! twins is an automorphism preserving the current partition.

use std::fmt;

use super::graph::Graph;
use crate::error::{check_size, Result};

/// Default hard bound on the number of vertices.
pub const CANON_LIMIT: usize = 10;
/// Largest bound the bit packing supports (120 pair bits fit in a `u128`).
pub const CANON_MAX_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Number of vertices of the encoded graph.
    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative on vertices `0..n`.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut pos = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + pos / 8] >> (7 - pos % 8) & 1 == 1 {
                    edges.push((i, j));
                }
                pos += 1;
            }
        }
        Graph::indexed(n, &edges)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_code_with_limit(g, CANON_LIMIT)
}

pub fn canonical_code_with_limit(g: &Graph, limit: usize) -> Result<CanonicalCode> {
    check_size("canonical_code", limit.min(CANON_MAX_LIMIT), g.order())?;
    Ok(canonical_code_masks(&g.masks()))
}

/// Canonical code of a graph given by adjacency masks (`n <= 16`).
pub(crate) fn canonical_code_masks(adj: &[u64]) -> CanonicalCode {
    let n = adj.len();
    assert!(n <= CANON_MAX_LIMIT);
    let best = if n <= 1 {
        0
    } else {
        let cells = refine(adj, vec![(0..n).collect()]);
        let mut best = None;
        search(adj, cells, &mut best);
        best.expect("search visits at least one leaf")
    };
    let pair_bits = n * n.saturating_sub(1) / 2;
    let nbytes = pair_bits.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + nbytes);
    bytes.push(n as u8);
    // `best` holds the pair bits left-aligned at bit 127.
    let be = best.to_be_bytes();
    bytes.extend_from_slice(&be[..nbytes]);
    CanonicalCode(bytes)
}

/// Upper triangle of the adjacency matrix under `order`, first pair in the
/// most significant bit.
fn leaf_code(adj: &[u64], order: &[usize]) -> u128 {
    let mut code = 0u128;
    let mut pos = 127u32;
    for i in 0..order.len() {
        let row = adj[order[i]];
        for &vj in &order[i + 1..] {
            if row >> vj & 1 == 1 {
                code |= 1 << pos;
            }
            pos -= 1;
        }
    }
    code
}

fn search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = leaf_code(adj, &order);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&t| are_twins(adj, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(adj, refine(adj, next), best);
    }
}

fn are_twins(adj: &[u64], a: usize, b: usize) -> bool {
    let strip = !((1u64 << a) | (1u64 << b));
    adj[a] & strip == adj[b] & strip
}

/// Equitable refinement of an ordered partition. Each cell is split by the
/// number of neighbours its vertices have in every cell; the split pieces
/// keep the order of their signatures.
fn refine(adj: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (adj[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let before = next.len();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if next.len() - before > 1 {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// Exhaustive reference: minimum leaf code over every permutation.
#[cfg(test)]
pub(crate) fn brute_force_code(adj: &[u64]) -> u128 {
    fn rec(adj: &[u64], order: &mut Vec<usize>, used: u64, best: &mut u128) {
        if order.len() == adj.len() {
            *best = (*best).min(leaf_code(adj, order));
            return;
        }
        for v in crate::kernel::graph::bits(!used & ((1u64 << adj.len()) - 1)) {
            order.push(v);
            rec(adj, order, used | 1 << v, best);
            order.pop();
        }
    }
    let mut best = u128::MAX;
    rec(adj, &mut Vec::new(), 0, &mut best);
    if adj.len() <= 1 {
        0
    } else {
        best
    }
}
