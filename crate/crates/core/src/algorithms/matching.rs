//! Matching algorithms, edge arrival.

use std::collections::BTreeSet;

use super::{check_model, decline, edge_of, AlgorithmError, OnlineAlgorithm};
use crate::ledger::{Action, DecisionModel, Item, SolutionLedger};
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, EdgeId, GraphSnapshot, VertexId};

/// A matching with its vertex-to-edge map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingState {
    pub edges: BTreeSet<EdgeId>,
    matched: Vec<Option<EdgeId>>,
}

impl MatchingState {
    /// The accepted edges of `ledger`, which must form a matching.
    pub fn from_ledger(graph: &GraphSnapshot, ledger: &SolutionLedger) -> Self {
        let mut state = MatchingState { edges: BTreeSet::new(), matched: vec![None; graph.n()] };
        for id in ledger.accepted_ids() {
            state.insert(graph, id);
        }
        state
    }

    pub fn from_edges(graph: &GraphSnapshot, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut state = MatchingState { edges: BTreeSet::new(), matched: vec![None; graph.n()] };
        for id in edges {
            state.insert(graph, id);
        }
        state
    }

    pub fn is_free(&self, v: VertexId) -> bool {
        self.matched.get(v).is_none_or(|m| m.is_none())
    }

    pub fn edge_at(&self, v: VertexId) -> Option<EdgeId> {
        self.matched.get(v).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn insert(&mut self, graph: &GraphSnapshot, id: EdgeId) {
        let e = graph.edge(id);
        if self.matched.len() < graph.n() {
            self.matched.resize(graph.n(), None);
        }
        debug_assert!(self.is_free(e.u) && self.is_free(e.v), "edge {id} touches the matching");
        self.matched[e.u] = Some(id);
        self.matched[e.v] = Some(id);
        self.edges.insert(id);
    }

    pub fn remove(&mut self, graph: &GraphSnapshot, id: EdgeId) {
        let e = graph.edge(id);
        self.matched[e.u] = None;
        self.matched[e.v] = None;
        self.edges.remove(&id);
    }

    /// Edges pairwise disjoint and the vertex map agrees with them.
    pub fn is_consistent(&self, graph: &GraphSnapshot) -> bool {
        let mut seen = vec![None; graph.n()];
        for &id in &self.edges {
            let e = graph.edge(id);
            if seen[e.u].is_some() || seen[e.v].is_some() {
                return false;
            }
            seen[e.u] = Some(id);
            seen[e.v] = Some(id);
        }
        (0..graph.n()).all(|v| seen[v] == self.edge_at(v))
    }
}

/// A path `x u v y` with `uv` matched and `x`, `y` free.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentingPath {
    pub x: VertexId,
    pub u: VertexId,
    pub v: VertexId,
    pub y: VertexId,
}

/// The lexicographically smallest `(u, v, x, y)` forming an augmenting path
/// of length 3, over both orientations of each matched edge.
pub fn find_length3_augmenting_path(graph: &GraphSnapshot, m: &MatchingState) -> Option<AugmentingPath> {
    for u in 0..graph.n() {
        let Some(id) = m.edge_at(u) else { continue };
        let v = graph.edge(id).other(u);
        let xs: Vec<VertexId> = graph.neighbors(u).iter().copied().filter(|&x| m.is_free(x)).collect();
        let ys: Vec<VertexId> = graph.neighbors(v).iter().copied().filter(|&y| m.is_free(y)).collect();
        for &x in &xs {
            if let Some(&y) = ys.iter().find(|&&y| y != x) {
                return Some(AugmentingPath { x, u, v, y });
            }
        }
    }
    None
}

/// Whether `graph` has an augmenting path of length 1 or 3 for `m`.
pub fn has_short_augmenting_path(graph: &GraphSnapshot, m: &MatchingState) -> bool {
    graph.edges().iter().any(|e| m.is_free(e.u) && m.is_free(e.v)) || find_length3_augmenting_path(graph, m).is_some()
}

/// Accepts each edge whose endpoints are both free.
#[derive(Clone, Debug)]
pub struct GreedyMatching {
    model: DecisionModel,
}

impl GreedyMatching {
    pub fn new(model: DecisionModel) -> Result<Self, AlgorithmError> {
        check_model("match.greedy", model, &DecisionModel::ALL)?;
        Ok(GreedyMatching { model })
    }
}

impl OnlineAlgorithm for GreedyMatching {
    fn name(&self) -> String {
        "match.greedy".into()
    }

    fn problem(&self) -> Problem {
        Problem::Matching
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let id = edge_of(event, graph)?;
        let m = MatchingState::from_ledger(graph, ledger);
        let e = graph.edge(id);
        Ok(if m.is_free(e.u) && m.is_free(e.v) { vec![Action::AcceptNow] } else { decline(self.model).into_iter().collect() })
    }
}

/// Algorithm 2: greedy, then augment along length-3 paths until none is
/// left.
#[derive(Clone, Debug, Default)]
pub struct Algorithm2;

impl Algorithm2 {
    pub fn new() -> Self {
        Algorithm2
    }
}

impl OnlineAlgorithm for Algorithm2 {
    fn name(&self) -> String {
        "match.alg2".into()
    }

    fn problem(&self) -> Problem {
        Problem::Matching
    }

    fn model(&self) -> DecisionModel {
        DecisionModel::LateAcceptThenReject
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let id = edge_of(event, graph)?;
        let mut m = MatchingState::from_ledger(graph, ledger);
        let e = graph.edge(id);
        if m.is_free(e.u) && m.is_free(e.v) {
            return Ok(vec![Action::AcceptNow]);
        }
        let mut actions = Vec::new();
        while let Some(path) = find_length3_augmenting_path(graph, &m) {
            let xu = graph.edge_id(path.x, path.u).expect("path edge");
            let vy = graph.edge_id(path.v, path.y).expect("path edge");
            let uv = graph.edge_id(path.u, path.v).expect("matched edge");
            let accept = |e: EdgeId| if e == id { Action::AcceptNow } else { Action::LateAccept(Item::Edge(e)) };
            actions.extend([accept(xu), accept(vy), Action::LateReject(Item::Edge(uv))]);
            m.remove(graph, uv);
            m.insert(graph, xu);
            m.insert(graph, vy);
        }
        Ok(actions)
    }
}
