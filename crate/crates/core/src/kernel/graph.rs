use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Characters that may not appear in a vertex identifier.
pub const RESERVED_CHARS: [char; 3] = ['-', '>', '#'];

/// Name of a vertex: a nonempty token without whitespace or reserved characters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let valid = !name.is_empty()
            && !name
                .chars()
                .any(|c| c.is_whitespace() || RESERVED_CHARS.contains(&c));
        if valid {
            Ok(VertexId(name))
        } else {
            Err(Error::InvalidVertexId(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

/// Bipartition side of a tournament vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// `count` identifiers `prefix0, prefix1, ...`, zero-padded so that string
/// order agrees with numeric order.
pub fn indexed_ids(prefix: &str, count: usize) -> Vec<VertexId> {
    let width = count.saturating_sub(1).to_string().len();
    (0..count)
        .map(|i| VertexId(format!("{prefix}{i:0width$}")))
        .collect()
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Simple undirected graph over named vertices.
///
/// Vertices are stored in ascending [`VertexId`] order and addressed by their
/// position in that order; adjacency is a bit matrix.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    ids: Vec<VertexId>,
    rows: Vec<Vec<u64>>,
    sides: Option<Vec<Side>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.ids == other.ids && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut ids: Vec<VertexId> = vertices.into_iter().collect();
        ids.sort();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].to_string()));
        }
        let mut g = Graph::edgeless(ids);
        for (a, b) in edges {
            let i = g.require(&a)?;
            let j = g.require(&b)?;
            if i == j {
                return Err(Error::SelfLoop(a.to_string()));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// Convenience constructor from string literals.
    pub fn build(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Graph> {
        let vs = vertices
            .iter()
            .map(|v| VertexId::new(*v))
            .collect::<Result<Vec<_>>>()?;
        let es = edges
            .iter()
            .map(|(a, b)| Ok((VertexId::new(*a)?, VertexId::new(*b)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(vs, es)
    }

    /// Graph on `n` vertices named `0..n` (zero-padded) with edges given by index.
    pub fn indexed(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::edgeless(indexed_ids("", n));
        for &(i, j) in edges {
            assert!(i != j && i < n && j < n, "bad edge ({i},{j})");
            g.add_edge(i, j);
        }
        g
    }

    /// Graph from adjacency masks; `ids` must be strictly ascending and `n <= 64`.
    pub fn from_masks(ids: Vec<VertexId>, masks: &[u64]) -> Graph {
        assert_eq!(ids.len(), masks.len());
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        let n = ids.len();
        assert!(n <= 64);
        let mut g = Graph::edgeless(ids);
        for (i, &m) in masks.iter().enumerate() {
            for j in bits(m) {
                if j > i {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub(crate) fn edgeless(ids: Vec<VertexId>) -> Graph {
        let w = words_for(ids.len());
        Graph {
            rows: vec![vec![0; w]; ids.len()],
            ids,
            sides: None,
        }
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        self.rows[i][j / 64] |= 1 << (j % 64);
        self.rows[j][i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn with_sides(mut self, sides: Vec<Side>) -> Graph {
        assert_eq!(sides.len(), self.ids.len());
        self.sides = Some(sides);
        self
    }

    fn require(&self, v: &VertexId) -> Result<usize> {
        self.index_of(v.as_str())
            .ok_or_else(|| Error::InvalidVertex(v.to_string()))
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.iter().map(|w| w.count_ones() as usize).sum::<usize>())
            .sum::<usize>()
            / 2
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &VertexId {
        &self.ids[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.ids.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    /// Side metadata recorded when the graph is a niche graph.
    pub fn sides(&self) -> Option<&[Side]> {
        self.sides.as_deref()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i]
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| bits(word).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.order() {
            out.extend(self.neighbors(i).filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    /// Adjacency row of `i` as a single mask. Requires `order() <= 64`.
    pub fn mask(&self, i: usize) -> u64 {
        debug_assert!(self.order() <= 64);
        self.rows[i][0]
    }

    pub fn masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "mask view needs at most 64 vertices");
        self.rows.iter().map(|r| r[0]).collect()
    }

    /// Connected components as ascending index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components as identifier sets.
    pub fn component_ids(&self) -> Vec<Vec<VertexId>> {
        self.components()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.ids[i].clone()).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| self.degree(i) == n - 1)
    }

    pub fn induced(&self, subset: &[VertexId]) -> Result<Graph> {
        let idx = subset
            .iter()
            .map(|v| self.require(v))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(self.induced_by_index(&idx.into_iter().collect::<Vec<_>>()))
    }

    /// Induced subgraph on vertex positions (any order, no duplicates).
    pub fn induced_by_index(&self, subset: &[usize]) -> Graph {
        let mut idx = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let mut g = Graph::edgeless(idx.iter().map(|&i| self.ids[i].clone()).collect());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        if let Some(sides) = &self.sides {
            g.sides = Some(idx.iter().map(|&i| sides[i]).collect());
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::edgeless(self.ids.clone());
        for i in 0..n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g.sides = self.sides.clone();
        g
    }

    /// Apply a renaming of vertices. The map must be injective over `ids()`.
    pub fn relabel(&self, rename: &HashMap<VertexId, VertexId>) -> Result<Graph> {
        let name = |v: &VertexId| rename.get(v).cloned().unwrap_or_else(|| v.clone());
        let edges = self
            .edges()
            .into_iter()
            .map(|(i, j)| (name(&self.ids[i]), name(&self.ids[j])));
        Graph::new(self.ids.iter().map(name), edges)
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Diameter of the component `c`, which must be exactly a component.
    pub fn component_diameter(&self, c: &[VertexId]) -> Result<usize> {
        let mut idx = c
            .iter()
            .map(|v| self.require(v))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        self.component_diameter_by_index(&idx)
    }

    pub fn component_diameter_by_index(&self, c: &[usize]) -> Result<usize> {
        let mut sorted = c.to_vec();
        sorted.sort_unstable();
        if sorted.is_empty() || !self.components().contains(&sorted) {
            return Err(Error::NotAComponent);
        }
        Ok(sorted
            .iter()
            .map(|&s| {
                let d = self.distances_from(s);
                sorted.iter().map(|&t| d[t]).max().unwrap_or(0)
            })
            .max()
            .unwrap_or(0))
    }

    /// Articulation points of the graph (Hopcroft–Tarjan low-link), ascending.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, neighbor iterator state)
            let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, self.neighbors(root).collect()));
            let mut root_children = 0;
            while let Some((u, parent, pending)) = stack.last_mut() {
                let (u, parent) = (*u, *parent);
                if let Some(v) = pending.pop() {
                    if disc[v] == usize::MAX {
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        let next = self.neighbors(v).collect();
                        stack.push((v, u, next));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                cut[root] = true;
            }
        }
        (0..n).filter(|&i| cut[i]).collect()
    }

    /// Connected, at least three vertices, and no cut vertex. Complete graphs
    /// follow the convention that their connectivity is `n - 1`.
    pub fn is_two_connected(&self) -> bool {
        self.order() >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }
}

/// Iterate set bit positions of a mask.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
