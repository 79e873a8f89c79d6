//! Minimum Spanning Forest algorithms, edge arrival.

use super::{check_model, decline, edge_of, AlgorithmError, OnlineAlgorithm};
use crate::ledger::{Action, DecisionModel, Item, SolutionLedger};
use crate::oracles::spanning_forest::forest_path;
use crate::oracles::UnionFind;
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, EdgeId, GraphSnapshot, VertexId};

/// Accepts exactly the edges that join two components, ignoring weights.
#[derive(Clone, Debug)]
pub struct MsfStandard {
    model: DecisionModel,
    components: UnionFind,
}

impl MsfStandard {
    pub fn new(model: DecisionModel) -> Result<Self, AlgorithmError> {
        check_model("msf.standard", model, &DecisionModel::ALL)?;
        Ok(MsfStandard { model, components: UnionFind::new(0) })
    }
}

impl OnlineAlgorithm for MsfStandard {
    fn name(&self) -> String {
        "msf.standard".into()
    }

    fn problem(&self) -> Problem {
        Problem::SpanningForest
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let id = edge_of(event, graph)?;
        let e = graph.edge(id);
        self.components.grow(graph.n());
        Ok(if self.components.union(e.u, e.v) { vec![Action::AcceptNow] } else { decline(self.model).into_iter().collect() })
    }
}

/// Keeps a spanning forest and applies the red rule to each cycle an
/// arriving edge closes: the heaviest edge on it, by weight and then by
/// edge id, is dropped.
#[derive(Clone, Debug)]
pub struct MsfRedRule {
    model: DecisionModel,
    forest: Vec<Vec<(VertexId, EdgeId)>>,
}

impl MsfRedRule {
    pub fn new(model: DecisionModel) -> Result<Self, AlgorithmError> {
        check_model("msf.redrule", model, &[DecisionModel::LateReject, DecisionModel::LateAcceptThenReject])?;
        Ok(MsfRedRule { model, forest: Vec::new() })
    }

    fn link(&mut self, graph: &GraphSnapshot, id: EdgeId) {
        let e = graph.edge(id);
        self.forest[e.u].push((e.v, id));
        self.forest[e.v].push((e.u, id));
    }

    fn cut(&mut self, graph: &GraphSnapshot, id: EdgeId) {
        let e = graph.edge(id);
        self.forest[e.u].retain(|&(_, f)| f != id);
        self.forest[e.v].retain(|&(_, f)| f != id);
    }
}

impl OnlineAlgorithm for MsfRedRule {
    fn name(&self) -> String {
        "msf.redrule".into()
    }

    fn problem(&self) -> Problem {
        Problem::SpanningForest
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let id = edge_of(event, graph)?;
        let e = graph.edge(id);
        self.forest.resize(graph.n(), Vec::new());
        let Some(path) = forest_path(&self.forest, e.u, e.v) else {
            self.link(graph, id);
            return Ok(vec![Action::AcceptNow]);
        };
        let heaviest = path
            .iter()
            .copied()
            .chain([id])
            .max_by(|&a, &b| graph.edge(a).weight.cmp(&graph.edge(b).weight).then(a.cmp(&b)))
            .expect("cycle is nonempty");
        if heaviest == id {
            return Ok(decline(self.model).into_iter().collect());
        }
        self.cut(graph, heaviest);
        self.link(graph, id);
        Ok(vec![Action::LateReject(Item::Edge(heaviest)), Action::AcceptNow])
    }
}
