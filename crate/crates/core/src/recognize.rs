//! Deciding whether a graph is the niche graph of a bipartite tournament.

use std::fmt;
use std::str::FromStr;

use crate::kernel::{Graph, Side, VertexId};
use crate::structure::{expansion_profile, ExpansionProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "YES",
            Decision::No => "NO",
        })
    }
}

impl FromStr for Decision {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "YES" => Ok(Decision::Yes),
            "NO" => Ok(Decision::No),
            _ => Err(format!("unknown decision {s:?}")),
        }
    }
}

/// Why a graph was accepted or rejected. NO reasons are reported in
/// priority order: component count, then condensation shape, then the
/// inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    TooFewComponents,
    TooManyComponents,
    NonCompleteComponent,
    BadCondensationShape,
    InequalityInfeasible,
    OkThreeFour,
    OkTwo,
}

impl Reason {
    pub const ALL: [Reason; 7] = [
        Reason::TooFewComponents,
        Reason::TooManyComponents,
        Reason::NonCompleteComponent,
        Reason::BadCondensationShape,
        Reason::InequalityInfeasible,
        Reason::OkThreeFour,
        Reason::OkTwo,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Reason::TooFewComponents => "TooFewComponents",
            Reason::TooManyComponents => "TooManyComponents",
            Reason::NonCompleteComponent => "NonCompleteComponent",
            Reason::BadCondensationShape => "BadCondensationShape",
            Reason::InequalityInfeasible => "InequalityInfeasible",
            Reason::OkThreeFour => "OK_ThreeFour",
            Reason::OkTwo => "OK_Two",
        }
    }

    pub fn decision(self) -> Decision {
        match self {
            Reason::OkThreeFour | Reason::OkTwo => Decision::Yes,
            _ => Decision::No,
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Reason {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Reason::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown reason {s:?}"))
    }
}

/// Template parameters for a two-component graph: component `i` is an
/// expansion of a complete multipartite graph with `a_i` parts of size two
/// and `b_i` of size one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub decision: Decision,
    pub reason: Reason,
    /// Components with ascending members, ordered by smallest member.
    pub components: Vec<Vec<VertexId>>,
    /// Side of each component; empty for NO.
    pub side_assignment: Vec<Side>,
    pub params: Option<Params>,
    /// Expansion profile of each component.
    pub profiles: Vec<Option<ExpansionProfile>>,
}

impl Certificate {
    /// Vertices assigned to `side`, ascending.
    pub fn side_vertices(&self, side: Side) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .components
            .iter()
            .zip(&self.side_assignment)
            .filter(|(_, &s)| s == side)
            .flat_map(|(c, _)| c.iter().cloned())
            .collect();
        out.sort();
        out
    }

    /// Re-check the certificate against `g` without reusing the recognizer's
    /// decision logic. Returns a description of the first inconsistency.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let mut comps = g.component_ids();
        comps.sort();
        if comps != self.components {
            return Err("components do not match the graph".into());
        }
        if self.reason.decision() != self.decision {
            return Err(format!(
                "reason {} contradicts decision {}",
                self.reason, self.decision
            ));
        }
        let k = comps.len();
        let complete = |c: &[VertexId]| g.induced(c).map(|h| h.is_complete()).unwrap_or(false);
        match self.reason {
            Reason::TooFewComponents if k > 1 => {
                return Err(format!("{k} components is not too few"))
            }
            Reason::TooManyComponents if k < 5 => {
                return Err(format!("{k} components is not too many"))
            }
            Reason::NonCompleteComponent
                if !(k == 3 || k == 4) || comps.iter().all(|c| complete(c)) =>
            {
                return Err("no non-complete component among three or four".into())
            }
            Reason::BadCondensationShape if k != 2 || self.profiles.iter().all(Option::is_some) => {
                return Err("condensation shape is not violated".into())
            }
            Reason::InequalityInfeasible if k != 2 => {
                return Err("inequalities only apply to two components".into())
            }
            _ => {}
        }
        if self.decision == Decision::No {
            if !self.side_assignment.is_empty() || self.params.is_some() {
                return Err("NO certificate carries witness data".into());
            }
            return Ok(());
        }
        if self.side_assignment.len() != k {
            return Err("side assignment does not cover every component".into());
        }
        let left = self
            .side_assignment
            .iter()
            .filter(|&&s| s == Side::Left)
            .count();
        let right = k - left;
        if !(1..=2).contains(&left) || !(1..=2).contains(&right) {
            return Err(format!("sides hold {left} and {right} components"));
        }
        match self.reason {
            Reason::OkThreeFour => {
                if !(k == 3 || k == 4) || !comps.iter().all(|c| complete(c)) {
                    return Err("OK_ThreeFour needs three or four complete components".into());
                }
            }
            Reason::OkTwo => {
                let p = self.params.ok_or("OK_Two without params")?;
                if k != 2 {
                    return Err("OK_Two needs exactly two components".into());
                }
                let s1 = (p.a1 + p.b1) as u32;
                let s2 = (p.a2 + p.b2) as u32;
                let pow = |e: u32| 2u128.checked_pow(e.saturating_sub(1)).unwrap_or(u128::MAX);
                if s1 == 0 || s2 == 0 || s1 as u128 > pow(s2) || s2 as u128 > pow(s1) {
                    return Err("params violate the size inequalities".into());
                }
                for (i, (a, b)) in [(p.a1, p.b1), (p.a2, p.b2)].into_iter().enumerate() {
                    if 2 * a + b > comps[i].len() {
                        return Err(format!("component {} too small for its params", i + 1));
                    }
                    let prof = self.profiles.get(i).and_then(Option::as_ref);
                    match prof {
                        Some(prof) if prof.a == a && prof.b_range().contains(&b) => {}
                        _ => {
                            return Err(format!(
                                "params of component {} do not fit its profile",
                                i + 1
                            ))
                        }
                    }
                }
            }
            _ => unreachable!("YES reasons handled above"),
        }
        Ok(())
    }
}

fn pow2_floor(exp: usize) -> usize {
    if exp >= usize::BITS as usize - 1 {
        usize::MAX
    } else {
        1 << exp
    }
}

/// Both size inequalities `1 <= a1+b1 <= 2^(a2+b2-1)` and
/// `1 <= a2+b2 <= 2^(a1+b1-1)`.
pub fn inequalities_hold(a1: usize, b1: usize, a2: usize, b2: usize) -> bool {
    let (s1, s2) = (a1 + b1, a2 + b2);
    s1 >= 1 && s2 >= 1 && s1 <= pow2_floor(s2 - 1) && s2 <= pow2_floor(s1 - 1)
}

/// Every `(b1, b2)` in the profile ranges satisfying both inequalities,
/// ascending.
pub fn feasible_pairs(p1: &ExpansionProfile, p2: &ExpansionProfile) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for b1 in p1.b_range() {
        for b2 in p2.b_range() {
            if inequalities_hold(p1.a, b1, p2.a, b2) {
                out.push((b1, b2));
            }
        }
    }
    out
}

/// Order in which three or four complete components are split over the sides.
fn three_four_sides(comps: &[Vec<VertexId>]) -> Vec<Side> {
    let mut order: Vec<usize> = (0..comps.len()).collect();
    let four = comps.len() == 4;
    order.sort_by(|&x, &y| {
        let by_size = comps[x].len().cmp(&comps[y].len());
        let by_size = if four { by_size.reverse() } else { by_size };
        by_size.then_with(|| comps[x][0].cmp(&comps[y][0]))
    });
    let mut sides = vec![Side::Right; comps.len()];
    for &c in &order[..2] {
        sides[c] = Side::Left;
    }
    sides
}

pub fn recognize(g: &Graph) -> Certificate {
    let mut comps = g.component_ids();
    comps.sort();
    let profiles: Vec<Option<ExpansionProfile>> = comps
        .iter()
        .map(|c| {
            let h = g.induced(c).expect("component of g");
            expansion_profile(&h).expect("components are connected")
        })
        .collect();
    let no = |reason: Reason, comps: Vec<Vec<VertexId>>, profiles| Certificate {
        decision: Decision::No,
        reason,
        components: comps,
        side_assignment: Vec::new(),
        params: None,
        profiles,
    };
    match comps.len() {
        0 | 1 => no(Reason::TooFewComponents, comps, profiles),
        k if k >= 5 => no(Reason::TooManyComponents, comps, profiles),
        2 => {
            let (Some(p1), Some(p2)) = (&profiles[0], &profiles[1]) else {
                return no(Reason::BadCondensationShape, comps, profiles);
            };
            match feasible_pairs(p1, p2).first() {
                None => no(Reason::InequalityInfeasible, comps, profiles),
                Some(&(b1, b2)) => Certificate {
                    decision: Decision::Yes,
                    reason: Reason::OkTwo,
                    params: Some(Params {
                        a1: p1.a,
                        b1,
                        a2: p2.a,
                        b2,
                    }),
                    components: comps,
                    side_assignment: vec![Side::Left, Side::Right],
                    profiles,
                },
            }
        }
        _ => {
            let all_complete = comps
                .iter()
                .all(|c| g.induced(c).expect("component of g").is_complete());
            if !all_complete {
                return no(Reason::NonCompleteComponent, comps, profiles);
            }
            Certificate {
                decision: Decision::Yes,
                reason: Reason::OkThreeFour,
                side_assignment: three_four_sides(&comps),
                components: comps,
                params: None,
                profiles,
            }
        }
    }
}
