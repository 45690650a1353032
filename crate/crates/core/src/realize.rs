//! Witness tournaments for graphs the recognizer accepts.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::kernel::{Graph, Side, VertexId};
use crate::niche::niche_graph;
use crate::recognize::{recognize, Certificate, Reason};
use crate::structure::Template;
use crate::tournament::{BipartiteTournament, Direction};

/// How the arcs between a representative `u` of the larger template and the
/// representatives `Z2` of the smaller one are laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcLayout {
    /// `u -> Y_u` and `Z2 \ Y_u -> u`.
    OutToChosen,
    /// `Y_u -> u` and `u -> Z2 \ Y_u`.
    InFromChosen,
}

/// Intermediate data of the two-component construction.
///
/// `l1` is the template with at least as many parts as `l2`. The template
/// tournament lives on template vertices and is expanded through
/// `clique_map` into the final witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPlan {
    /// Certificate side of the component expanded from `l1`.
    pub l1_side: Side,
    pub l1: Template,
    pub l2: Template,
    /// One representative per part, ascending.
    pub z1: Vec<VertexId>,
    pub z2: Vec<VertexId>,
    /// Nested prefixes of `z2`; the last one is `z2` itself.
    pub chain: Vec<Vec<VertexId>>,
    /// For each `u` in `z1`, the partition `{Y_u, Z2 \ Y_u}` with `Y_u` the
    /// member containing the smallest element of `z2`.
    pub psi: BTreeMap<VertexId, (Vec<VertexId>, Vec<VertexId>)>,
    pub orientation_choice: BTreeMap<VertexId, ArcLayout>,
    /// Second vertex of each size-two part mapped to its representative.
    pub partner: BTreeMap<VertexId, VertexId>,
    pub template_tournament: BipartiteTournament,
    pub clique_map: BTreeMap<VertexId, Vec<VertexId>>,
}

fn normalized(p: &(Vec<VertexId>, Vec<VertexId>)) -> (Vec<VertexId>, Vec<VertexId>) {
    let (mut a, mut b) = p.clone();
    a.sort();
    b.sort();
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl WitnessPlan {
    /// Check the plan's internal invariants against the input graph.
    pub fn check(&self, input: &Graph) -> std::result::Result<(), String> {
        let z2: BTreeSet<&VertexId> = self.z2.iter().collect();
        let bound = 2u128
            .checked_pow(self.z2.len().saturating_sub(1) as u32)
            .unwrap_or(u128::MAX);
        if self.z2.is_empty() || self.z1.len() as u128 > bound {
            return Err(format!("|Z1| = {} exceeds 2^(|Z2|-1)", self.z1.len()));
        }

        // Psi is defined on Z1, lands in partitions of Z2, and is injective.
        if !self.psi.keys().eq(self.z1.iter()) {
            return Err("psi is not defined exactly on Z1".into());
        }
        let mut image = BTreeSet::new();
        for (u, (y, rest)) in &self.psi {
            let mut all: Vec<&VertexId> = y.iter().chain(rest).collect();
            all.sort();
            if !all.iter().copied().eq(z2.iter().copied()) {
                return Err(format!("psi({u}) is not a partition of Z2"));
            }
            if !image.insert(normalized(&(y.clone(), rest.clone()))) {
                return Err(format!("psi is not injective at {u}"));
            }
        }
        for (i, q) in self.chain.iter().enumerate() {
            if q.len() != i + 1
                || !q.iter().all(|v| z2.contains(v))
                || (i > 0 && !q.starts_with(&self.chain[i - 1]))
            {
                return Err(format!("chain element {} is not a nested prefix", i + 1));
            }
            let rest: Vec<VertexId> = self.z2.iter().filter(|v| !q.contains(v)).cloned().collect();
            if !image.contains(&normalized(&(q.clone(), rest))) {
                return Err(format!(
                    "chain element {} is not in the image of psi",
                    i + 1
                ));
            }
        }
        if self.chain.last().map(Vec::len) != Some(self.z2.len()) {
            return Err("chain does not end at Z2".into());
        }

        // Cliques partition the input's vertices.
        let mut covered: Vec<&VertexId> = self.clique_map.values().flatten().collect();
        covered.sort();
        if !covered.iter().copied().eq(input.ids().iter()) {
            return Err("clique images do not partition the input vertices".into());
        }

        let d = &self.template_tournament;
        let out = |v: &VertexId| -> BTreeSet<VertexId> {
            d.out_neighbors(v).unwrap_or_default().into_iter().collect()
        };
        let inn = |v: &VertexId| -> BTreeSet<VertexId> {
            d.in_neighbors(v).unwrap_or_default().into_iter().collect()
        };

        for u in &self.z1 {
            let hit: Vec<VertexId> = self
                .z2
                .iter()
                .filter(|w| out(u).contains(*w))
                .cloned()
                .collect();
            let miss: Vec<VertexId> = self
                .z2
                .iter()
                .filter(|w| !out(u).contains(*w))
                .cloned()
                .collect();
            let (y, rest) = &self.psi[u];
            let expected = match self.orientation_choice.get(u) {
                Some(ArcLayout::OutToChosen) => (y, rest),
                Some(ArcLayout::InFromChosen) => (rest, y),
                None => return Err(format!("no arc layout recorded for {u}")),
            };
            if (&hit, &miss) != expected {
                return Err(format!("out-neighbourhood of {u} in Z2 disagrees with psi"));
            }
        }

        // Representatives in different parts have different neighbourhood
        // pairs, which keeps them adjacent in the niche graph.
        for z in [&self.z1, &self.z2] {
            for (i, u) in z.iter().enumerate() {
                for v in &z[i + 1..] {
                    let pu =
                        normalized(&(out(u).into_iter().collect(), inn(u).into_iter().collect()));
                    let pv =
                        normalized(&(out(v).into_iter().collect(), inn(v).into_iter().collect()));
                    if pu == pv {
                        return Err(format!(
                            "representatives {u} and {v} share a neighbourhood pair"
                        ));
                    }
                }
            }
        }

        for (z, rep) in &self.partner {
            if out(z) != inn(rep) {
                return Err(format!("partners {z} and {rep} are not related"));
            }
        }
        Ok(())
    }
}

fn mismatch(msg: impl Into<String>) -> Error {
    Error::CertificateMismatch(msg.into())
}

fn validate(g: &Graph, cert: &Certificate, reason: Reason) -> Result<()> {
    cert.check(g).map_err(mismatch)?;
    if cert.reason != reason {
        return Err(mismatch(format!(
            "expected reason {reason}, found {}",
            cert.reason
        )));
    }
    Ok(())
}

/// Witness for three or four complete components.
///
/// With components `S, U \ S` on one side and `V` on the other, the arcs are
/// `S -> V -> U \ S`. With `S, U \ S` and `T, V \ T` they run
/// `S -> T -> U \ S -> V \ T -> S`.
pub fn realize_three_four(g: &Graph, cert: &Certificate) -> Result<BipartiteTournament> {
    validate(g, cert, Reason::OkThreeFour)?;
    let mut comp_of: BTreeMap<&VertexId, usize> = BTreeMap::new();
    for (c, comp) in cert.components.iter().enumerate() {
        comp_of.extend(comp.iter().map(|v| (v, c)));
    }
    let first = |side: Side| {
        cert.side_assignment
            .iter()
            .position(|&s| s == side)
            .expect("both sides used")
    };
    let count = |side: Side| cert.side_assignment.iter().filter(|&&s| s == side).count();
    let (s, t) = (first(Side::Left), first(Side::Right));
    let counts = (count(Side::Left), count(Side::Right));
    BipartiteTournament::new(
        cert.side_vertices(Side::Left),
        cert.side_vertices(Side::Right),
        |u, v| {
            let in_s = comp_of[u] == s;
            let in_t = comp_of[v] == t;
            let forward = match counts {
                (2, 1) => in_s,
                (1, 2) => !in_t,
                _ => in_s == in_t,
            };
            if forward {
                Direction::LeftToRight
            } else {
                Direction::RightToLeft
            }
        },
    )
}

/// Characteristic key of `Y`, a subset of `z2` containing `z2[0]`, with the
/// first element as most significant bit.
fn key_members(z2: &[VertexId], key: u128) -> Vec<VertexId> {
    let k = z2.len();
    (0..k)
        .filter(|&j| key >> (k - 1 - j) & 1 == 1)
        .map(|j| z2[j].clone())
        .collect()
}

/// Witness for two components together with the plan that produced it.
pub fn realize_two(g: &Graph, cert: &Certificate) -> Result<(BipartiteTournament, WitnessPlan)> {
    validate(g, cert, Reason::OkTwo)?;
    let p = cert.params.expect("validated");
    let profile = |i: usize| cert.profiles[i].as_ref().expect("validated");
    let t1 = profile(0).template(p.b1);
    let t2 = profile(1).template(p.b2);
    // The larger template plays the role of L1.
    let swap = p.a1 + p.b1 < p.a2 + p.b2;
    let (l1, l2, l1_idx) = if swap { (t2, t1, 1) } else { (t1, t2, 0) };
    let l1_side = cert.side_assignment[l1_idx];

    let mut partner = BTreeMap::new();
    let reps = |t: &Template, partner: &mut BTreeMap<VertexId, VertexId>| -> Vec<VertexId> {
        let mut z: Vec<VertexId> = t.parts.iter().map(|part| part[0].clone()).collect();
        for part in t.parts.iter().filter(|part| part.len() == 2) {
            partner.insert(part[1].clone(), part[0].clone());
        }
        z.sort();
        z
    };
    let z1 = reps(&l1, &mut partner);
    let z2 = reps(&l2, &mut partner);
    let k = z2.len();

    let chain_keys: Vec<u128> = (1..=k).map(|i| ((1u128 << i) - 1) << (k - i)).collect();
    let chain: Vec<Vec<VertexId>> = (1..=k).map(|i| z2[..i].to_vec()).collect();
    let mut keys: Vec<u128> = chain_keys.iter().copied().take(z1.len()).collect();
    let mut next = 1u128 << (k - 1);
    while keys.len() < z1.len() {
        if !chain_keys.contains(&next) {
            keys.push(next);
        }
        next += 1;
    }
    let mut psi = BTreeMap::new();
    let mut chosen: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for (u, &key) in z1.iter().zip(&keys) {
        let y = key_members(&z2, key);
        let rest: Vec<VertexId> = z2.iter().filter(|v| !y.contains(v)).cloned().collect();
        chosen.insert(u.clone(), y.iter().cloned().collect());
        psi.insert(u.clone(), (y, rest));
    }
    let orientation_choice = z1
        .iter()
        .map(|u| (u.clone(), ArcLayout::OutToChosen))
        .collect();

    // Arc from x in L1 to y in L2. A non-representative copies its partner's
    // arcs in reverse, which makes the partner pair R-related.
    let l1_to_l2 = |x: &VertexId, y: &VertexId| -> bool {
        let (x_rep, flip_x) = partner.get(x).map_or((x, false), |r| (r, true));
        let (y_rep, flip_y) = partner.get(y).map_or((y, false), |r| (r, true));
        chosen[x_rep].contains(y_rep) ^ flip_x ^ flip_y
    };
    let template_ids = |t: &Template| t.graph.ids().to_vec();
    let (left_t, right_t) = if l1_side == Side::Left {
        (&l1, &l2)
    } else {
        (&l2, &l1)
    };
    let dir = |fwd: bool| {
        if fwd {
            Direction::LeftToRight
        } else {
            Direction::RightToLeft
        }
    };
    let template_tournament =
        BipartiteTournament::new(template_ids(left_t), template_ids(right_t), |u, v| {
            dir(if l1_side == Side::Left {
                l1_to_l2(u, v)
            } else {
                !l1_to_l2(v, u)
            })
        })?;

    let mut clique_map = l1.clique_map.clone();
    clique_map.extend(l2.clique_map.clone());
    let mut template_of: BTreeMap<&VertexId, &VertexId> = BTreeMap::new();
    for (t, clique) in &clique_map {
        template_of.extend(clique.iter().map(|v| (v, t)));
    }
    let witness = BipartiteTournament::new(
        cert.side_vertices(Side::Left),
        cert.side_vertices(Side::Right),
        |u, v| dir(template_tournament.has_arc(template_of[u], template_of[v])),
    )?;

    let plan = WitnessPlan {
        l1_side,
        l1,
        l2,
        z1,
        z2,
        chain,
        psi,
        orientation_choice,
        partner,
        template_tournament,
        clique_map,
    };
    plan.check(g)
        .map_err(|e| Error::InternalRoundTripFailure(format!("witness plan: {e}")))?;
    Ok((witness, plan))
}

/// A tournament whose niche graph is `g`, or `None` when no such tournament
/// exists. The witness is verified by recomputing its niche graph.
pub fn realize(g: &Graph) -> Result<Option<BipartiteTournament>> {
    let cert = recognize(g);
    let d = match cert.reason {
        Reason::OkThreeFour => realize_three_four(g, &cert)?,
        Reason::OkTwo => realize_two(g, &cert)?.0,
        _ => return Ok(None),
    };
    if niche_graph(&d) != *g {
        return Err(Error::InternalRoundTripFailure(format!(
            "niche graph of the {}-vertex witness differs",
            d.order()
        )));
    }
    Ok(Some(d))
}
