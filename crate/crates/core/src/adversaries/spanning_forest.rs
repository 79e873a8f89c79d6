//! The heavy-path-then-hub adversary for spanning forests.

use super::Adversary;
use crate::ledger::SolutionLedger;
use crate::oracles::opt_spanning_forest;
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot};
use crate::Value;

/// A path of weight-`w` edges on `n − 1` vertices, then a hub vertex joined
/// to all of them by weight-1 edges. The hub star alone is optimal.
#[derive(Clone, Debug)]
pub struct MsfHub {
    n: usize,
    w: i64,
}

impl MsfHub {
    pub fn new(n: usize, w: i64) -> Self {
        MsfHub { n, w }
    }
}

impl Adversary for MsfHub {
    fn name(&self) -> String {
        format!("adv.msf.hub:n={},w={}", self.n, self.w)
    }

    fn problem(&self) -> Problem {
        Problem::SpanningForest
    }

    fn next_event(&mut self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        let k = graph.m();
        let path = self.n - 2;
        if k < path {
            Some(ArrivalEvent::weighted_edge(k, k + 1, self.w))
        } else if k < path + self.n - 1 {
            Some(ArrivalEvent::weighted_edge(k - path, self.n - 1, 1))
        } else {
            None
        }
    }

    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        opt_spanning_forest(graph).value
    }
}
