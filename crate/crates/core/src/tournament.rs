use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::kernel::{Side, VertexId};

/// Orientation of a cross pair `(left, right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

/// An orientation of the complete bipartite graph on `left × right`.
///
/// Both sides are kept in ascending identifier order; the orientation is a
/// row-major matrix indexed by (left position, right position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteTournament {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
    /// `true` means the arc runs from the left vertex to the right vertex.
    forward: Vec<bool>,
}

impl BipartiteTournament {
    /// Build a tournament, asking `orient` for every cross pair of positions
    /// in the sorted sides.
    pub fn new(
        left: Vec<VertexId>,
        right: Vec<VertexId>,
        mut orient: impl FnMut(&VertexId, &VertexId) -> Direction,
    ) -> Result<Self> {
        let (left, right) = Self::check_sides(left, right)?;
        let mut forward = Vec::with_capacity(left.len() * right.len());
        for u in &left {
            for v in &right {
                forward.push(orient(u, v) == Direction::LeftToRight);
            }
        }
        Ok(BipartiteTournament {
            left,
            right,
            forward,
        })
    }

    /// Build from a row-major `forward` matrix over already sorted sides.
    pub fn from_matrix(
        left: Vec<VertexId>,
        right: Vec<VertexId>,
        forward: Vec<bool>,
    ) -> Result<Self> {
        if !left.windows(2).all(|w| w[0] < w[1]) || !right.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidTournament(
                "sides must be strictly ascending".into(),
            ));
        }
        if forward.len() != left.len() * right.len() {
            return Err(Error::InvalidTournament(
                "orientation matrix has the wrong size".into(),
            ));
        }
        let (left, right) = Self::check_sides(left, right)?;
        Ok(BipartiteTournament {
            left,
            right,
            forward,
        })
    }

    /// Build from an explicit arc list `(tail, head)`; every cross pair must
    /// be oriented exactly once.
    pub fn from_arcs(
        left: Vec<VertexId>,
        right: Vec<VertexId>,
        arcs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let (left, right) = Self::check_sides(left, right)?;
        let mut seen: BTreeMap<(usize, usize), bool> = BTreeMap::new();
        let pos = |side: &[VertexId], v: &VertexId| side.binary_search(v).ok();
        for (tail, head) in arcs {
            let (key, fwd) = match (
                pos(&left, &tail),
                pos(&right, &head),
                pos(&right, &tail),
                pos(&left, &head),
            ) {
                (Some(i), Some(j), _, _) => ((i, j), true),
                (_, _, Some(j), Some(i)) => ((i, j), false),
                _ => {
                    return Err(Error::InvalidTournament(format!(
                        "arc {tail} -> {head} is not a cross pair"
                    )))
                }
            };
            if seen.insert(key, fwd).is_some() {
                return Err(Error::InvalidTournament(format!(
                    "pair {tail} {head} oriented twice"
                )));
            }
        }
        let mut forward = Vec::with_capacity(left.len() * right.len());
        for i in 0..left.len() {
            for j in 0..right.len() {
                match seen.get(&(i, j)) {
                    Some(&f) => forward.push(f),
                    None => {
                        return Err(Error::InvalidTournament(format!(
                            "missing arc between {} and {}",
                            left[i], right[j]
                        )))
                    }
                }
            }
        }
        Ok(BipartiteTournament {
            left,
            right,
            forward,
        })
    }

    fn check_sides(
        mut left: Vec<VertexId>,
        mut right: Vec<VertexId>,
    ) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
        left.sort();
        right.sort();
        if left.is_empty() || right.is_empty() {
            return Err(Error::InvalidTournament(
                "both sides must be nonempty".into(),
            ));
        }
        for side in [&left, &right] {
            if let Some(w) = side.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertex(w[0].to_string()));
            }
        }
        let l: BTreeSet<_> = left.iter().collect();
        if let Some(v) = right.iter().find(|v| l.contains(v)) {
            return Err(Error::InvalidTournament(format!(
                "vertex {v} is on both sides"
            )));
        }
        Ok((left, right))
    }

    pub fn left(&self) -> &[VertexId] {
        &self.left
    }

    pub fn right(&self) -> &[VertexId] {
        &self.right
    }

    pub fn order(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Orientation of the pair at positions `(i, j)` of the sorted sides.
    pub fn direction(&self, i: usize, j: usize) -> Direction {
        if self.forward[i * self.right.len() + j] {
            Direction::LeftToRight
        } else {
            Direction::RightToLeft
        }
    }

    pub(crate) fn forward(&self, i: usize, j: usize) -> bool {
        self.forward[i * self.right.len() + j]
    }

    pub fn locate(&self, v: &VertexId) -> Option<(Side, usize)> {
        if let Ok(i) = self.left.binary_search(v) {
            Some((Side::Left, i))
        } else {
            self.right.binary_search(v).ok().map(|j| (Side::Right, j))
        }
    }

    pub fn side_of(&self, v: &VertexId) -> Option<Side> {
        self.locate(v).map(|(s, _)| s)
    }

    pub fn has_arc(&self, tail: &VertexId, head: &VertexId) -> bool {
        match (self.locate(tail), self.locate(head)) {
            (Some((Side::Left, i)), Some((Side::Right, j))) => self.forward(i, j),
            (Some((Side::Right, j)), Some((Side::Left, i))) => !self.forward(i, j),
            _ => false,
        }
    }

    /// All arcs `(tail, head)` in row-major pair order.
    pub fn arcs(&self) -> Vec<(&VertexId, &VertexId)> {
        let mut out = Vec::with_capacity(self.forward.len());
        for (i, u) in self.left.iter().enumerate() {
            for (j, v) in self.right.iter().enumerate() {
                out.push(if self.forward(i, j) { (u, v) } else { (v, u) });
            }
        }
        out
    }

    /// Out-neighbours of `v`, or in-neighbours when `out` is false, ascending.
    fn neighborhood(&self, v: &VertexId, out: bool) -> Result<Vec<VertexId>> {
        let (side, p) = self
            .locate(v)
            .ok_or_else(|| Error::InvalidVertex(v.to_string()))?;
        Ok(match side {
            Side::Left => (0..self.right.len())
                .filter(|&j| self.forward(p, j) == out)
                .map(|j| self.right[j].clone())
                .collect(),
            Side::Right => (0..self.left.len())
                .filter(|&i| self.forward(i, p) != out)
                .map(|i| self.left[i].clone())
                .collect(),
        })
    }

    pub fn out_neighbors(&self, v: &VertexId) -> Result<Vec<VertexId>> {
        self.neighborhood(v, true)
    }

    pub fn in_neighbors(&self, v: &VertexId) -> Result<Vec<VertexId>> {
        self.neighborhood(v, false)
    }

    /// Out-neighbourhood of every vertex as a bit row over the opposite side,
    /// indexed by side position.
    pub(crate) fn out_rows(&self, side: Side) -> Vec<Vec<bool>> {
        match side {
            Side::Left => (0..self.left.len())
                .map(|i| (0..self.right.len()).map(|j| self.forward(i, j)).collect())
                .collect(),
            Side::Right => (0..self.right.len())
                .map(|j| (0..self.left.len()).map(|i| !self.forward(i, j)).collect())
                .collect(),
        }
    }
}
