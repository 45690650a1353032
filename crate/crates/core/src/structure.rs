//! Critical cliques, condensation, and expansions of complete multipartite
//! templates whose parts have size at most two.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::kernel::{Graph, VertexId};

/// Partition of the vertices into classes of equal closed neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalCliquePartition {
    /// Ascending members, cliques ordered by smallest member.
    pub cliques: Vec<Vec<VertexId>>,
}

/// Critical cliques as ascending index lists, ordered by smallest member.
pub(crate) fn critical_clique_indices(g: &Graph) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for i in 0..g.order() {
        let mut closed: Vec<usize> = g.neighbors(i).collect();
        closed.push(i);
        closed.sort_unstable();
        groups.entry(closed).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

pub fn critical_cliques(g: &Graph) -> CriticalCliquePartition {
    CriticalCliquePartition {
        cliques: critical_clique_indices(g)
            .into_iter()
            .map(|c| c.into_iter().map(|i| g.id(i).clone()).collect())
            .collect(),
    }
}

/// Quotient of a graph by its critical cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    /// One vertex per critical clique, named by the clique's smallest member.
    pub graph: Graph,
    pub clique_of: BTreeMap<VertexId, Vec<VertexId>>,
}

impl Condensation {
    pub fn sizes(&self) -> BTreeMap<VertexId, usize> {
        self.clique_of
            .iter()
            .map(|(v, c)| (v.clone(), c.len()))
            .collect()
    }

    /// Expand the condensation back, restoring the original vertex names.
    pub fn expand_back(&self) -> Result<Graph> {
        expand(&self.graph, &self.sizes(), |v, k| {
            self.clique_of[v][k].clone()
        })
    }
}

pub fn condensation(g: &Graph) -> Condensation {
    let cliques = critical_clique_indices(g);
    let reps: Vec<usize> = cliques.iter().map(|c| c[0]).collect();
    let graph = g.induced_by_index(&reps);
    let clique_of = cliques
        .iter()
        .map(|c| {
            (
                g.id(c[0]).clone(),
                c.iter().map(|&i| g.id(i).clone()).collect(),
            )
        })
        .collect();
    Condensation { graph, clique_of }
}

/// Names the members of the clique replacing `v`: the first keeps `v`'s
/// name, the `k`-th further one becomes `v.k`.
pub fn default_namer(v: &VertexId, k: usize) -> VertexId {
    if k == 0 {
        v.clone()
    } else {
        VertexId::new(format!("{v}.{k}")).expect("suffix keeps the id valid")
    }
}

/// Replace every vertex `v` of `h` by a clique of `sizes[v]` vertices named
/// `namer(v, 0..sizes[v])`; cliques are joined completely when their
/// template vertices are adjacent.
pub fn expand(
    h: &Graph,
    sizes: &BTreeMap<VertexId, usize>,
    namer: impl Fn(&VertexId, usize) -> VertexId,
) -> Result<Graph> {
    let mut members: Vec<Vec<VertexId>> = Vec::with_capacity(h.order());
    for v in h.ids() {
        let size = sizes.get(v).copied().unwrap_or(0);
        if size == 0 {
            return Err(Error::InvalidVertex(format!(
                "{v} has no positive clique size"
            )));
        }
        members.push((0..size).map(|k| namer(v, k)).collect());
    }
    let mut edges = Vec::new();
    for (i, clique) in members.iter().enumerate() {
        for (a, x) in clique.iter().enumerate() {
            for y in &clique[a + 1..] {
                edges.push((x.clone(), y.clone()));
            }
        }
        for j in h.neighbors(i).filter(|&j| j > i) {
            for x in clique {
                for y in &members[j] {
                    edges.push((x.clone(), y.clone()));
                }
            }
        }
    }
    Graph::new(members.into_iter().flatten(), edges)
}

/// True when `g` is complete multipartite with every part of size at most
/// two, i.e. its complement has maximum degree at most one.
pub fn is_small_part_multipartite(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|i| g.degree(i) + 2 >= n)
}

/// Expansion data of a connected graph whose condensation is complete
/// multipartite with parts of size at most two.
///
/// Parts of size two are rigid: each is a non-adjacent pair of critical
/// cliques. The vertices adjacent to everything form a single critical clique
/// that may be split into any number `b` of size-one parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionProfile {
    pub order: usize,
    pub a: usize,
    pub b_min: usize,
    pub b_max: usize,
    /// Non-adjacent critical-clique pairs, smaller clique first, ordered by
    /// their first clique.
    pub pair_parts: Vec<(Vec<VertexId>, Vec<VertexId>)>,
    pub universal_clique: Vec<VertexId>,
}

impl ExpansionProfile {
    pub fn b_range(&self) -> RangeInclusive<usize> {
        self.b_min..=self.b_max
    }

    /// Every `(a, b)` with the graph an expansion of a template with `a`
    /// parts of size two and `b` of size one.
    pub fn x_set(&self) -> Vec<(usize, usize)> {
        self.b_range().map(|b| (self.a, b)).collect()
    }

    /// Split of the universal clique into `b` cliques of sizes
    /// `(c - b + 1, 1, ..., 1)`.
    pub fn universal_split(&self, b: usize) -> Vec<Vec<VertexId>> {
        assert!(
            self.b_range().contains(&b),
            "b = {b} outside the feasible range"
        );
        if b == 0 {
            return Vec::new();
        }
        let c = self.universal_clique.len();
        let mut out = vec![self.universal_clique[..=c - b].to_vec()];
        out.extend(
            self.universal_clique[c - b + 1..]
                .iter()
                .map(|v| vec![v.clone()]),
        );
        out
    }

    /// The template with `a` pairs and `b` singletons together with the
    /// clique replacing each template vertex.
    pub fn template(&self, b: usize) -> Template {
        let mut parts: Vec<Vec<VertexId>> = Vec::new();
        let mut clique_map = BTreeMap::new();
        for (x, y) in &self.pair_parts {
            parts.push(vec![x[0].clone(), y[0].clone()]);
            clique_map.insert(x[0].clone(), x.clone());
            clique_map.insert(y[0].clone(), y.clone());
        }
        for clique in self.universal_split(b) {
            parts.push(vec![clique[0].clone()]);
            clique_map.insert(clique[0].clone(), clique);
        }
        parts.sort();
        let graph = complete_multipartite(&parts);
        Template {
            graph,
            parts,
            clique_map,
        }
    }
}

/// Complete multipartite graph on the given parts.
pub fn complete_multipartite(parts: &[Vec<VertexId>]) -> Graph {
    let mut edges = Vec::new();
    for (p, part) in parts.iter().enumerate() {
        for other in &parts[p + 1..] {
            for x in part {
                for y in other {
                    edges.push((x.clone(), y.clone()));
                }
            }
        }
    }
    Graph::new(parts.iter().flatten().cloned(), edges).expect("parts are disjoint")
}

/// A complete multipartite template and the cliques that expand it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub graph: Graph,
    /// Partite sets (one or two template vertices each), ascending.
    pub parts: Vec<Vec<VertexId>>,
    pub clique_map: BTreeMap<VertexId, Vec<VertexId>>,
}

impl Template {
    pub fn pair_count(&self) -> usize {
        self.parts.iter().filter(|p| p.len() == 2).count()
    }

    pub fn singleton_count(&self) -> usize {
        self.parts.iter().filter(|p| p.len() == 1).count()
    }

    pub fn sizes(&self) -> BTreeMap<VertexId, usize> {
        self.clique_map
            .iter()
            .map(|(v, c)| (v.clone(), c.len()))
            .collect()
    }

    pub fn expand(&self) -> Result<Graph> {
        expand(&self.graph, &self.sizes(), |v, k| {
            self.clique_map[v][k].clone()
        })
    }
}

/// Expansion profile of a connected graph, or `None` when its condensation
/// is not complete multipartite with parts of size at most two.
pub fn expansion_profile(component: &Graph) -> Result<Option<ExpansionProfile>> {
    if component.is_empty() || !component.is_connected() {
        return Err(Error::Disconnected);
    }
    let cond = condensation(component);
    let h = &cond.graph;
    if !is_small_part_multipartite(h) {
        return Ok(None);
    }
    let clique = |i: usize| cond.clique_of[h.id(i)].clone();
    let mut pair_parts = Vec::new();
    let mut universal: Vec<VertexId> = Vec::new();
    let n = h.order();
    for i in 0..n {
        match (0..n).find(|&j| j != i && !h.has_edge(i, j)) {
            Some(j) if j > i => pair_parts.push((clique(i), clique(j))),
            Some(_) => {}
            None => universal.extend(clique(i)),
        }
    }
    // Universal vertices are pairwise homogeneous, hence one critical clique.
    debug_assert!((0..n).filter(|&i| h.degree(i) + 1 == n).count() <= 1);
    universal.sort();
    let c = universal.len();
    Ok(Some(ExpansionProfile {
        order: component.order(),
        a: pair_parts.len(),
        b_min: c.min(1),
        b_max: c,
        pair_parts,
        universal_clique: universal,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vid(s: &str) -> VertexId {
        s.parse().unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::indexed(n, &edges)
    }

    fn p3() -> Graph {
        Graph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn c4() -> Graph {
        Graph::build(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap()
    }

    #[test]
    fn critical_clique_examples() {
        assert_eq!(critical_cliques(&complete(5)).cliques.len(), 1);
        assert_eq!(critical_cliques(&p3()).cliques.len(), 3);
        // C4 a-b-c-d with a doubled into {a, a2}.
        let g = Graph::build(
            &["a", "a2", "b", "c", "d"],
            &[
                ("a", "a2"),
                ("a", "b"),
                ("a2", "b"),
                ("b", "c"),
                ("c", "d"),
                ("d", "a"),
                ("d", "a2"),
            ],
        )
        .unwrap();
        let mut sizes: Vec<usize> = critical_cliques(&g).cliques.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2]);
    }

    #[test]
    fn condensation_examples() {
        let k4 = condensation(&complete(4));
        assert_eq!(k4.graph.order(), 1);
        assert_eq!(k4.clique_of[&vid("0")].len(), 4);
        assert_eq!(condensation(&c4()).graph, c4());
        assert_eq!(condensation(&p3()).graph, p3());
    }

    #[test]
    fn expand_examples() {
        let k1 = Graph::build(&["a"], &[]).unwrap();
        let g = expand(&k1, &BTreeMap::from([(vid("a"), 3)]), default_namer).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_complete());
        let sizes = BTreeMap::from([(vid("a"), 1), (vid("b"), 1), (vid("c"), 1)]);
        assert_eq!(expand(&p3(), &sizes, default_namer).unwrap(), p3());
        let edge = Graph::build(&["u", "v"], &[("u", "v")]).unwrap();
        let g = expand(
            &edge,
            &BTreeMap::from([(vid("u"), 2), (vid("v"), 3)]),
            default_namer,
        )
        .unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.is_complete());
        assert!(expand(&edge, &BTreeMap::from([(vid("u"), 2)]), default_namer).is_err());
    }

    #[test]
    fn profile_examples() {
        let k = expansion_profile(&complete(4)).unwrap().unwrap();
        assert_eq!((k.a, k.b_min, k.b_max), (0, 1, 4));
        let p = expansion_profile(&p3()).unwrap().unwrap();
        assert_eq!(p.x_set(), vec![(1, 1)]);
        assert_eq!(p.universal_clique, vec![vid("b")]);
        let c = expansion_profile(&c4()).unwrap().unwrap();
        assert_eq!(c.x_set(), vec![(2, 0)]);
        assert!(c.universal_clique.is_empty());
        let c5 = Graph::indexed(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(expansion_profile(&c5).unwrap(), None);
        let two = Graph::indexed(2, &[]);
        assert_eq!(expansion_profile(&two), Err(Error::Disconnected));
    }

    #[test]
    fn universal_split_composition() {
        let k = expansion_profile(&complete(4)).unwrap().unwrap();
        let split = k.universal_split(3);
        let sizes: Vec<usize> = split.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 1, 1]);
        let t = k.template(3);
        assert_eq!((t.pair_count(), t.singleton_count()), (0, 3));
        assert_eq!(t.expand().unwrap(), complete(4));
    }

    #[test]
    fn template_reconstructs_p3_expansion() {
        // P3 with ends doubled: {a, a2} - b - {c, c2}.
        let g = Graph::build(
            &["a", "a2", "b", "c", "c2"],
            &[
                ("a", "a2"),
                ("c", "c2"),
                ("a", "b"),
                ("a2", "b"),
                ("b", "c"),
                ("b", "c2"),
            ],
        )
        .unwrap();
        let p = expansion_profile(&g).unwrap().unwrap();
        assert_eq!(p.x_set(), vec![(1, 1)]);
        assert_eq!(
            p.pair_parts,
            vec![(vec![vid("a"), vid("a2")], vec![vid("c"), vid("c2")])]
        );
        let t = p.template(1);
        assert_eq!(t.parts, vec![vec![vid("a"), vid("c")], vec![vid("b")]]);
        assert_eq!(t.expand().unwrap(), g);
    }

    #[test]
    fn round_trip_through_condensation() {
        let g = Graph::build(
            &["a", "a2", "b", "c", "d", "d2", "d3"],
            &[
                ("a", "a2"),
                ("a", "b"),
                ("a2", "b"),
                ("b", "c"),
                ("c", "d"),
                ("c", "d2"),
                ("c", "d3"),
                ("d", "d2"),
                ("d", "d3"),
                ("d2", "d3"),
            ],
        )
        .unwrap();
        let cond = condensation(&g);
        assert_eq!(cond.graph.order(), 4);
        assert_eq!(cond.expand_back().unwrap(), g);
        assert_eq!(condensation(&cond.graph).graph, cond.graph);
    }
}
