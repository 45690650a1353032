use std::fmt;

use crate::kernel::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for LawStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LawStatus::Pass => "PASS",
            LawStatus::Fail => "FAIL",
            LawStatus::Skipped => "SKIPPED",
        })
    }
}

/// Result of checking one law. Failures carry every witness found; a skipped
/// law carries the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    pub name: &'static str,
    pub status: LawStatus,
    pub witnesses: Vec<String>,
}

impl LawOutcome {
    pub fn pass(name: &'static str) -> Self {
        LawOutcome {
            name,
            status: LawStatus::Pass,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(name: &'static str, witnesses: Vec<String>) -> Self {
        LawOutcome {
            name,
            status: LawStatus::Fail,
            witnesses,
        }
    }

    pub fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        LawOutcome {
            name,
            status: LawStatus::Skipped,
            witnesses: vec![reason.into()],
        }
    }

    /// Pass when no witnesses were collected, fail otherwise.
    pub fn from_witnesses(name: &'static str, witnesses: Vec<String>) -> Self {
        if witnesses.is_empty() {
            LawOutcome::pass(name)
        } else {
            LawOutcome::fail(name, witnesses)
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == LawStatus::Fail
    }
}

impl fmt::Display for LawOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LAW {} {}", self.name, self.status)?;
        for w in &self.witnesses {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn push(&mut self, outcome: LawOutcome) {
        self.outcomes.push(outcome);
    }

    pub fn extend(&mut self, other: LawReport) {
        self.outcomes.extend(other.outcomes);
    }

    /// No law failed (skipped laws do not count as failures).
    pub fn all_pass(&self) -> bool {
        !self.outcomes.iter().any(LawOutcome::is_fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.outcomes.iter().filter(|o| o.is_fail())
    }

    pub fn get(&self, name: &str) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}

/// Comma-joined identifiers, used as a single witness token.
pub fn join_ids<'a>(ids: impl IntoIterator<Item = &'a VertexId>) -> String {
    ids.into_iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn join_indices(g: &Graph, idx: &[usize]) -> String {
    join_ids(idx.iter().map(|&i| g.id(i)))
}
