//! Matching adversaries. Every construction emits a forest of small
//! gadgets; the bound is the exact maximum matching of that forest.

use std::collections::VecDeque;

use super::Adversary;
use crate::ledger::SolutionLedger;
use crate::oracles::forest::forest_max_matching;
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, EdgeId, GraphSnapshot, VertexId};
use crate::Value;

fn forest_matching_bound(graph: &GraphSnapshot) -> Value {
    Value::from_integer(forest_max_matching(graph).expect("emitted graph is a forest") as i64)
}

/// An edge from `anchor` to a fresh vertex.
fn pendant(graph: &GraphSnapshot, anchor: VertexId) -> ArrivalEvent {
    ArrivalEvent::edge(anchor, graph.n())
}

fn fresh_edge(graph: &GraphSnapshot) -> (VertexId, VertexId, EdgeId, ArrivalEvent) {
    let (u, v) = (graph.n(), graph.n() + 1);
    (u, v, graph.m(), ArrivalEvent::edge(u, v))
}

/// `m` disjoint edges; each one the algorithm accepts gets a pendant edge
/// at both ends.
#[derive(Clone, Debug)]
pub struct MatchExtend {
    m: usize,
    bases: Vec<(VertexId, VertexId, EdgeId, bool)>,
    queue: VecDeque<VertexId>,
}

impl MatchExtend {
    pub fn new(m: usize) -> Self {
        MatchExtend { m, bases: Vec::new(), queue: VecDeque::new() }
    }
}

impl Adversary for MatchExtend {
    fn name(&self) -> String {
        format!("adv.match.ext:m={}", self.m)
    }

    fn problem(&self) -> Problem {
        Problem::Matching
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        for (u, v, id, extended) in &mut self.bases {
            if !*extended && ledger.is_accepted(*id) {
                *extended = true;
                self.queue.extend([*u, *v]);
            }
        }
        if let Some(anchor) = self.queue.pop_front() {
            return Some(pendant(graph, anchor));
        }
        if self.bases.len() < self.m {
            let (u, v, id, ev) = fresh_edge(graph);
            self.bases.push((u, v, id, false));
            return Some(ev);
        }
        None
    }

    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        forest_matching_bound(graph)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stage {
    Base,
    AfterBase,
    AfterSecond,
}

#[derive(Clone, Copy, Debug)]
struct Gadget {
    u: VertexId,
    v: VertexId,
    uv: EdgeId,
}

/// Per gadget: `uv`; if accepted, `vx`; then `xy` if `uv` was dropped,
/// otherwise `zu`.
#[derive(Clone, Debug)]
pub struct MatchLateReject {
    m: usize,
    gadgets: Vec<Gadget>,
    stage: Stage,
    x: VertexId,
}

impl MatchLateReject {
    pub fn new(m: usize) -> Self {
        MatchLateReject { m, gadgets: Vec::new(), stage: Stage::Base, x: 0 }
    }
}

impl Adversary for MatchLateReject {
    fn name(&self) -> String {
        format!("adv.match.lr:m={}", self.m)
    }

    fn problem(&self) -> Problem {
        Problem::Matching
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        loop {
            match self.stage {
                Stage::Base => {
                    if self.gadgets.len() == self.m {
                        return None;
                    }
                    let (u, v, uv, ev) = fresh_edge(graph);
                    self.gadgets.push(Gadget { u, v, uv });
                    self.stage = Stage::AfterBase;
                    return Some(ev);
                }
                Stage::AfterBase => {
                    let g = *self.gadgets.last().expect("gadget open");
                    if ledger.is_accepted(g.uv) {
                        self.x = graph.n();
                        self.stage = Stage::AfterSecond;
                        return Some(pendant(graph, g.v));
                    }
                    self.stage = Stage::Base;
                }
                Stage::AfterSecond => {
                    let g = *self.gadgets.last().expect("gadget open");
                    self.stage = Stage::Base;
                    let anchor = if ledger.is_rejected(g.uv) { self.x } else { g.u };
                    return Some(pendant(graph, anchor));
                }
            }
        }
    }

    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        forest_matching_bound(graph)
    }
}

/// Per gadget: `uv`; once accepted, `xu` and `vy`; if `uv` is then
/// late-rejected, `x'x` and `yy'`.
#[derive(Clone, Debug)]
pub struct MatchLar {
    m: usize,
    gadgets: Vec<Gadget>,
    stage: Stage,
    pendants: Vec<VertexId>,
    queue: VecDeque<VertexId>,
}

impl MatchLar {
    pub fn new(m: usize) -> Self {
        MatchLar { m, gadgets: Vec::new(), stage: Stage::Base, pendants: Vec::new(), queue: VecDeque::new() }
    }
}

impl Adversary for MatchLar {
    fn name(&self) -> String {
        format!("adv.match.lar:m={}", self.m)
    }

    fn problem(&self) -> Problem {
        Problem::Matching
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        loop {
            if let Some(anchor) = self.queue.pop_front() {
                self.pendants.push(graph.n());
                return Some(pendant(graph, anchor));
            }
            match self.stage {
                Stage::Base => {
                    if self.gadgets.len() == self.m {
                        return None;
                    }
                    let (u, v, uv, ev) = fresh_edge(graph);
                    self.gadgets.push(Gadget { u, v, uv });
                    self.stage = Stage::AfterBase;
                    return Some(ev);
                }
                Stage::AfterBase => {
                    let g = *self.gadgets.last().expect("gadget open");
                    if ledger.is_accepted(g.uv) {
                        self.pendants.clear();
                        self.queue.extend([g.u, g.v]);
                        self.stage = Stage::AfterSecond;
                    } else {
                        self.stage = Stage::Base;
                    }
                }
                Stage::AfterSecond => {
                    let g = *self.gadgets.last().expect("gadget open");
                    if ledger.is_rejected(g.uv) {
                        self.queue.extend(self.pendants.clone());
                    }
                    self.stage = Stage::Base;
                }
            }
        }
    }

    fn opt_bound(&self, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        forest_matching_bound(graph)
    }
}
