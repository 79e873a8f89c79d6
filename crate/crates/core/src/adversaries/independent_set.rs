//! Independent Set adversaries for the standard, late-accept and
//! late-reject models.

use super::Adversary;
use crate::ledger::SolutionLedger;
use crate::oracles::forest::forest_max_independent_set;
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot, VertexId};
use crate::Value;

/// Isolated vertices until the algorithm accepts one, then vertices
/// adjacent only to the first accepted vertex.
#[derive(Clone, Debug)]
pub struct IsIsolatedThenPendants {
    n: usize,
    late_accept: bool,
    target: Option<VertexId>,
}

impl IsIsolatedThenPendants {
    pub fn new(n: usize, late_accept: bool) -> Self {
        IsIsolatedThenPendants { n, late_accept, target: None }
    }

    pub fn target(&self) -> Option<VertexId> {
        self.target
    }
}

impl Adversary for IsIsolatedThenPendants {
    fn name(&self) -> String {
        let base = if self.late_accept { "adv.is.la" } else { "adv.is.std" };
        format!("{base}:n={}", self.n)
    }

    fn problem(&self) -> Problem {
        Problem::IndependentSet
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        if self.target.is_none() {
            self.target = ledger.accepted_ids().next();
        }
        let id = graph.n();
        (id < self.n).then(|| ArrivalEvent::vertex(id, self.target))
    }

    /// Everything except the target is independent.
    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        let loses_target = self.target.is_some_and(|t| graph.degree(t) > 0);
        Value::from_integer((graph.n() - usize::from(loses_target)) as i64)
    }
}

/// Each vertex is adjacent to the smallest accepted vertex, or isolated if
/// there is none. The result is a forest, a path against one-vertex
/// algorithms.
#[derive(Clone, Debug)]
pub struct IsPathAdversary {
    n: usize,
}

impl IsPathAdversary {
    pub fn new(n: usize) -> Self {
        IsPathAdversary { n }
    }
}

impl Adversary for IsPathAdversary {
    fn name(&self) -> String {
        format!("adv.is.lr:n={}", self.n)
    }

    fn problem(&self) -> Problem {
        Problem::IndependentSet
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        let id = graph.n();
        (id < self.n).then(|| ArrivalEvent::vertex(id, ledger.accepted_ids().next()))
    }

    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        Value::from_integer(forest_max_independent_set(graph).expect("emitted graph is a forest") as i64)
    }
}
