//! Vertex Cover algorithms, vertex arrival.

use super::{check_model, decline, vertex_of, AlgorithmError, OnlineAlgorithm};
use crate::ledger::{Action, DecisionModel, Item, SolutionLedger};
use crate::oracles::{opt_vertex_cover, OracleCaps, OracleError};
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot, VertexId};

/// Whether `v` has an edge to a vertex that is not accepted.
fn has_uncovered_edge(v: VertexId, graph: &GraphSnapshot, ledger: &SolutionLedger) -> bool {
    graph.neighbors(v).iter().any(|&u| !ledger.is_accepted(u))
}

/// Accepts a vertex only when one of its edges would otherwise be
/// uncovered.
#[derive(Clone, Debug)]
pub struct VcStandard {
    model: DecisionModel,
}

impl VcStandard {
    pub fn new(model: DecisionModel) -> Result<Self, AlgorithmError> {
        check_model("vc.standard", model, &DecisionModel::ALL)?;
        Ok(VcStandard { model })
    }
}

impl OnlineAlgorithm for VcStandard {
    fn name(&self) -> String {
        "vc.standard".into()
    }

    fn problem(&self) -> Problem {
        Problem::VertexCover
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let v = vertex_of(event)?;
        Ok(if has_uncovered_edge(v, graph, ledger) { vec![Action::AcceptNow] } else { decline(self.model).into_iter().collect() })
    }
}

/// Accepts both endpoints of the first uncovered edge a new vertex closes,
/// so the accepted set is the vertex set of a maximal matching.
#[derive(Clone, Debug)]
pub struct VcMatching {
    model: DecisionModel,
}

impl VcMatching {
    pub fn new(model: DecisionModel) -> Result<Self, AlgorithmError> {
        check_model("vc.matching", model, &[DecisionModel::LateAccept, DecisionModel::LateAcceptThenReject])?;
        Ok(VcMatching { model })
    }
}

impl OnlineAlgorithm for VcMatching {
    fn name(&self) -> String {
        "vc.matching".into()
    }

    fn problem(&self) -> Problem {
        Problem::VertexCover
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let v = vertex_of(event)?;
        Ok(match graph.neighbors(v).iter().find(|&&u| ledger.is_pending(u)) {
            Some(&u) => vec![Action::LateAccept(Item::Vertex(u)), Action::AcceptNow],
            None => Vec::new(),
        })
    }
}

/// Accepts the first `b + 1` vertices, then keeps only an optimal cover of
/// them, then accepts a vertex only when needed for coverage.
#[derive(Clone, Debug)]
pub struct VcReset {
    model: DecisionModel,
    b: usize,
}

impl VcReset {
    pub fn new(model: DecisionModel, b: usize, caps: OracleCaps) -> Result<Self, AlgorithmError> {
        check_model("vc.reset", model, &[DecisionModel::LateReject, DecisionModel::LateAcceptThenReject])?;
        if b + 1 > caps.max_vertices {
            return Err(OracleError::CapExceeded { what: "vertex cover", size: b + 1, cap: caps.max_vertices }.into());
        }
        Ok(VcReset { model, b })
    }
}

impl OnlineAlgorithm for VcReset {
    fn name(&self) -> String {
        format!("vc.reset:b={}", self.b)
    }

    fn problem(&self) -> Problem {
        Problem::VertexCover
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let v = vertex_of(event)?;
        if v < self.b {
            return Ok(vec![Action::AcceptNow]);
        }
        if v == self.b {
            // The reset happens once the first b+1 vertices are all in.
            let cover = opt_vertex_cover(graph, OracleCaps::uniform(self.b + 1))?.witness;
            let mut actions = vec![Action::AcceptNow];
            actions.extend(
                (0..=self.b)
                    .filter(|u| cover.binary_search(u).is_err())
                    .map(|u| Action::LateReject(Item::Vertex(u))),
            );
            return Ok(actions);
        }
        Ok(if has_uncovered_edge(v, graph, ledger) { vec![Action::AcceptNow] } else { decline(self.model).into_iter().collect() })
    }
}
