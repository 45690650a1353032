//! Planarity for small graphs: block decomposition followed by the
//! Demoucron–Malgrange–Pertuiset path-embedding test on every block.

use std::collections::VecDeque;

use super::graph::{bits, Graph};
use crate::error::{check_size, Result};

pub const PLANAR_LIMIT: usize = 64;

pub fn is_planar(g: &Graph) -> Result<bool> {
    check_size("is_planar", PLANAR_LIMIT, g.order())?;
    let adj = g.masks();
    Ok(blocks(&adj).iter().all(|block| block_is_planar(block)))
}

/// Biconnected components as adjacency masks over the original vertices.
fn blocks(adj: &[u64]) -> Vec<Vec<u64>> {
    struct Dfs<'a> {
        adj: &'a [u64],
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<u64>>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: usize) {
            self.disc[u] = self.timer;
            self.low[u] = self.timer;
            self.timer += 1;
            for v in bits(self.adj[u]) {
                if self.disc[v] == usize::MAX {
                    self.stack.push((u, v));
                    self.visit(v, u);
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = vec![0u64; self.adj.len()];
                        while let Some((a, b)) = self.stack.pop() {
                            block[a] |= 1 << b;
                            block[b] |= 1 << a;
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if v != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }

    let n = adj.len();
    let mut dfs = Dfs {
        adj,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for s in 0..n {
        if dfs.disc[s] == usize::MAX {
            dfs.visit(s, usize::MAX);
        }
    }
    dfs.out
}

fn block_is_planar(block: &[u64]) -> bool {
    let verts: u64 = (0..block.len())
        .filter(|&v| block[v] != 0)
        .fold(0, |m, v| m | 1 << v);
    let nv = verts.count_ones() as usize;
    let ne = block.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2;
    if nv <= 4 || ne <= nv {
        return true;
    }
    if ne > 3 * nv - 6 {
        return false;
    }

    let total_edges = ne;
    let start = verts.trailing_zeros() as usize;
    let first = block[start].trailing_zeros() as usize;
    // A cycle through the edge start-first: a path back avoiding that edge.
    let path = bfs_path(
        block,
        first,
        |v| v == start,
        |a, b| !(a == first && b == start),
    )
    .expect("block with a cycle");
    let mut embedded_v: u64 = path.iter().fold(0, |m, &v| m | 1 << v);
    let mut embedded_e = vec![0u64; block.len()];
    for w in path.windows(2) {
        embedded_e[w[0]] |= 1 << w[1];
        embedded_e[w[1]] |= 1 << w[0];
    }
    embedded_e[start] |= 1 << first;
    embedded_e[first] |= 1 << start;
    let mut embedded_count = path.len();
    let mut faces: Vec<Vec<usize>> = vec![path.clone(), path];

    while embedded_count < total_edges {
        let fragments = fragments(block, verts, embedded_v, &embedded_e);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fm = f.iter().fold(0u64, |m, &v| m | 1 << v);
                    frag.contacts & !fm == 0
                })
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment");
        let path = fragment_path(block, &fragments[fi]);
        for w in path.windows(2) {
            embedded_e[w[0]] |= 1 << w[1];
            embedded_e[w[1]] |= 1 << w[0];
            embedded_count += 1;
        }
        for &v in &path {
            embedded_v |= 1 << v;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

struct Fragment {
    /// Unembedded vertices of the fragment (empty for a single chord edge).
    inner: u64,
    contacts: u64,
    /// The chord, when the fragment is a single edge between embedded vertices.
    chord: Option<(usize, usize)>,
}

fn fragments(block: &[u64], verts: u64, embedded_v: u64, embedded_e: &[u64]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for a in bits(embedded_v) {
        for b in bits(block[a] & embedded_v & !embedded_e[a]) {
            if a < b {
                out.push(Fragment {
                    inner: 0,
                    contacts: 1 << a | 1 << b,
                    chord: Some((a, b)),
                });
            }
        }
    }
    let mut free = verts & !embedded_v;
    while free != 0 {
        let s = free.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = block[v] & free & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        free &= !comp;
        let contacts = bits(comp).fold(0u64, |m, v| m | (block[v] & embedded_v));
        out.push(Fragment {
            inner: comp,
            contacts,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct contact vertices.
fn fragment_path(block: &[u64], frag: &Fragment) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let c1 = frag.contacts.trailing_zeros() as usize;
    let other_contacts = frag.contacts & !(1 << c1);
    let w = (block[c1] & frag.inner).trailing_zeros() as usize;
    let inner_path = bfs_path_within(block, frag.inner, w, |v| block[v] & other_contacts != 0)
        .expect("fragment reaches a second contact");
    let last = *inner_path.last().expect("nonempty");
    let c2 = (block[last] & other_contacts).trailing_zeros() as usize;
    let mut path = vec![c1];
    path.extend(inner_path);
    path.push(c2);
    path
}

fn bfs_path(
    block: &[u64],
    from: usize,
    is_target: impl Fn(usize) -> bool,
    edge_ok: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let n = block.len();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if is_target(u) && u != from {
            let mut path = vec![u];
            let mut x = u;
            while x != from {
                x = prev[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for v in bits(block[u]) {
            if prev[v] == usize::MAX && edge_ok(u, v) {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

fn bfs_path_within(
    block: &[u64],
    allowed: u64,
    from: usize,
    is_target: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    if is_target(from) {
        return Some(vec![from]);
    }
    bfs_path(
        &block.iter().map(|m| m & allowed).collect::<Vec<_>>(),
        from,
        is_target,
        |_, _| true,
    )
}

/// Split a face boundary by a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let c1 = path[0];
    let c2 = *path.last().expect("nonempty");
    let i = face.iter().position(|&v| v == c1).expect("contact on face");
    let j = face.iter().position(|&v| v == c2).expect("contact on face");
    let len = face.len();
    let arc = |from: usize, to: usize| -> Vec<usize> {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(face[k]);
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    let mut f1 = arc(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}
