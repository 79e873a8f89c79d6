//! Vertex Cover adversaries. Both emit forests, so the bound is the exact
//! minimum cover of the emitted graph.

use std::collections::{BTreeSet, VecDeque};

use super::Adversary;
use crate::ledger::SolutionLedger;
use crate::oracles::forest::forest_min_vertex_cover;
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot, VertexId};
use crate::Value;

fn forest_cover_bound(graph: &GraphSnapshot) -> Value {
    Value::from_integer(forest_min_vertex_cover(graph).expect("emitted graph is a forest") as i64)
}

/// Isolated vertices until the algorithm rejects one, then vertices
/// adjacent only to the first rejected vertex.
#[derive(Clone, Debug)]
pub struct VcStar {
    n: usize,
    late_reject: bool,
    target: Option<VertexId>,
}

impl VcStar {
    pub fn new(n: usize, late_reject: bool) -> Self {
        VcStar { n, late_reject, target: None }
    }
}

impl Adversary for VcStar {
    fn name(&self) -> String {
        let base = if self.late_reject { "adv.vc.lr" } else { "adv.vc.std" };
        format!("{base}:n={}", self.n)
    }

    fn problem(&self) -> Problem {
        Problem::VertexCover
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        if self.target.is_none() {
            self.target = ledger.rejected_ids().next();
        }
        let id = graph.n();
        (id < self.n).then(|| ArrivalEvent::vertex(id, self.target))
    }

    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        forest_cover_bound(graph)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stage {
    First,
    Second(VertexId),
    Judge(VertexId, VertexId),
}

/// Gadgets of an edge `uv`. If the algorithm covers it with one endpoint, a
/// third vertex hangs off the other; if it covers it with neither, the
/// input stops. Any rejected vertex is flooded with pendants, which the
/// algorithm must all accept.
#[derive(Clone, Debug)]
pub struct VcPairs {
    g: usize,
    flood: Option<usize>,
    done: usize,
    stage: Stage,
    stopped: bool,
    flooded: BTreeSet<VertexId>,
    queue: VecDeque<VertexId>,
}

impl VcPairs {
    /// `flood` fixes the flood size; by default it is `2·|S| + 1` at the
    /// moment of the rejection.
    pub fn new(g: usize, flood: Option<usize>) -> Self {
        VcPairs { g, flood, done: 0, stage: Stage::First, stopped: false, flooded: BTreeSet::new(), queue: VecDeque::new() }
    }

    pub fn stopped(&self) -> bool {
        self.stopped
    }
}

impl Adversary for VcPairs {
    fn name(&self) -> String {
        match self.flood {
            Some(f) => format!("adv.vc.pairs:g={},flood={f}", self.g),
            None => format!("adv.vc.pairs:g={}", self.g),
        }
    }

    fn problem(&self) -> Problem {
        Problem::VertexCover
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        if self.stopped {
            return None;
        }
        for r in ledger.rejected_ids() {
            if self.flooded.insert(r) {
                let size = self.flood.unwrap_or(2 * ledger.accepted_count() + 1);
                self.queue.extend(std::iter::repeat_n(r, size));
            }
        }
        let id = graph.n();
        if let Some(anchor) = self.queue.pop_front() {
            return Some(ArrivalEvent::vertex(id, [anchor]));
        }
        loop {
            match self.stage {
                Stage::First => {
                    if self.done == self.g {
                        return None;
                    }
                    self.stage = Stage::Second(id);
                    return Some(ArrivalEvent::vertex(id, []));
                }
                Stage::Second(u) => {
                    self.stage = Stage::Judge(u, id);
                    return Some(ArrivalEvent::vertex(id, [u]));
                }
                Stage::Judge(u, v) => {
                    self.done += 1;
                    self.stage = Stage::First;
                    match (ledger.is_accepted(u), ledger.is_accepted(v)) {
                        (true, true) => {}
                        (true, false) => return Some(ArrivalEvent::vertex(id, [v])),
                        (false, true) => return Some(ArrivalEvent::vertex(id, [u])),
                        (false, false) => {
                            self.stopped = true;
                            return None;
                        }
                    }
                }
            }
        }
    }

    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        forest_cover_bound(graph)
    }
}
