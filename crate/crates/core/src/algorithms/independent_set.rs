//! Independent Set algorithms, vertex arrival.

use std::collections::BTreeSet;

use super::admissible::{find_admissible_min_conflict, AdmissibleConfig};
use super::sqrt3::sqrt3_mul_le;
use super::{check_model, decline, vertex_of, AlgorithmError, OnlineAlgorithm};
use crate::bits::LocalGraph;
use crate::ledger::{Action, DecisionModel, Item, SolutionLedger};
use crate::oracles::{MisSolver, OracleCaps, OracleError};
use crate::params::ParamError;
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot, VertexId};

fn accepted_neighbors(v: VertexId, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Vec<VertexId> {
    graph.neighbors(v).iter().copied().filter(|&u| ledger.is_accepted(u)).collect()
}

fn accept_or_decline(ok: bool, model: DecisionModel) -> Vec<Action> {
    if ok {
        vec![Action::AcceptNow]
    } else {
        decline(model).into_iter().collect()
    }
}

/// Accepts each vertex that has no accepted neighbour.
#[derive(Clone, Debug)]
pub struct GreedyIs {
    model: DecisionModel,
}

impl GreedyIs {
    pub fn new(model: DecisionModel) -> Result<Self, AlgorithmError> {
        check_model("is.greedy", model, &DecisionModel::ALL)?;
        Ok(GreedyIs { model })
    }
}

impl OnlineAlgorithm for GreedyIs {
    fn name(&self) -> String {
        "is.greedy".into()
    }

    fn problem(&self) -> Problem {
        Problem::IndependentSet
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let v = vertex_of(event)?;
        Ok(accept_or_decline(accepted_neighbors(v, graph, ledger).is_empty(), self.model))
    }
}

/// Greedy, except that a vertex with exactly one accepted neighbour replaces
/// that neighbour.
#[derive(Clone, Debug)]
pub struct SwapIs {
    model: DecisionModel,
}

impl SwapIs {
    pub fn new(model: DecisionModel) -> Result<Self, AlgorithmError> {
        check_model("is.swap", model, &[DecisionModel::LateReject, DecisionModel::LateAcceptThenReject])?;
        Ok(SwapIs { model })
    }
}

impl OnlineAlgorithm for SwapIs {
    fn name(&self) -> String {
        "is.swap".into()
    }

    fn problem(&self) -> Problem {
        Problem::IndependentSet
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let v = vertex_of(event)?;
        Ok(match accepted_neighbors(v, graph, ledger).as_slice() {
            [] => vec![Action::AcceptNow],
            [u] => vec![Action::LateReject(Item::Vertex(*u)), Action::AcceptNow],
            _ => decline(self.model).into_iter().collect(),
        })
    }
}

/// Accepts nothing until the revealed graph has an independent set of size
/// `c`, then late-accepts a maximum one and continues greedily.
#[derive(Clone, Debug)]
pub struct ThresholdIs {
    model: DecisionModel,
    c: usize,
    caps: OracleCaps,
    triggered: bool,
}

impl ThresholdIs {
    pub fn new(model: DecisionModel, c: usize, caps: OracleCaps) -> Result<Self, AlgorithmError> {
        check_model("is.threshold", model, &[DecisionModel::LateAccept, DecisionModel::LateAcceptThenReject])?;
        if c == 0 {
            return Err(ParamError::BadValue { key: "c".into(), value: "0".into(), reason: "must be positive".into() }.into());
        }
        Ok(ThresholdIs { model, c, caps, triggered: false })
    }

    pub fn triggered(&self) -> bool {
        self.triggered
    }
}

impl OnlineAlgorithm for ThresholdIs {
    fn name(&self) -> String {
        format!("is.threshold:c={}", self.c)
    }

    fn problem(&self) -> Problem {
        Problem::IndependentSet
    }

    fn model(&self) -> DecisionModel {
        self.model
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let v = vertex_of(event)?;
        if self.triggered {
            return Ok(accept_or_decline(accepted_neighbors(v, graph, ledger).is_empty(), self.model));
        }
        if graph.n() > self.caps.max_vertices {
            return Err(OracleError::CapExceeded { what: "independent set", size: graph.n(), cap: self.caps.max_vertices }.into());
        }
        let local = LocalGraph::whole(graph);
        let mut solver = MisSolver::new(&local);
        if !solver.reaches(&local.all(), self.c) {
            return Ok(Vec::new());
        }
        self.triggered = true;
        Ok(solver
            .lex_smallest_maximum(&local.all())
            .into_iter()
            .map(|i| local.ids[i])
            .filter(|&u| ledger.is_pending(u))
            .map(|u| if u == v { Action::AcceptNow } else { Action::LateAccept(Item::Vertex(u)) })
            .collect())
    }
}

/// Algorithm 1's split of the accepted set: `A` accepted on arrival, `B`
/// accepted late through an admissible set, and `R` late-rejected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alg1State {
    pub a: BTreeSet<VertexId>,
    pub b: BTreeSet<VertexId>,
    pub r: BTreeSet<VertexId>,
}

impl Alg1State {
    pub fn s(&self) -> BTreeSet<VertexId> {
        self.a.union(&self.b).copied().collect()
    }

    /// Pending vertices among the first `n`.
    pub fn pending(&self, n: usize) -> Vec<VertexId> {
        (0..n).filter(|v| !self.a.contains(v) && !self.b.contains(v) && !self.r.contains(v)).collect()
    }

    /// Checks the termination inequalities against a maximum independent
    /// set `optimum` of the final graph on `n` vertices.
    pub fn lemma_report(&self, n: usize, optimum: &[VertexId]) -> LemmaReport {
        let in_opt = |v: &VertexId| optimum.binary_search(v).is_ok();
        let s = self.s();
        let p = self.pending(n);
        let count = |it: &mut dyn Iterator<Item = &VertexId>, plus: bool| it.filter(|v| in_opt(v) == plus).count() as i64;
        let (b, r) = (self.b.len() as i64, self.r.len() as i64);
        let b_plus = count(&mut self.b.iter(), true);
        let b_minus = b - b_plus;
        let r_plus = count(&mut self.r.iter(), true);
        let r_minus = r - r_plus;
        let s_minus = count(&mut s.iter(), false);
        let p_plus = count(&mut p.iter(), true);
        let x = b_plus + r_plus;
        LemmaReport {
            lemma1: (b + r) * (b + r) >= 3 * r * r,
            lemma2: (p_plus == 0 && s_minus == 0) || !sqrt3_mul_le(s_minus, p_plus),
            lemma3: sqrt3_mul_le(r_plus, b_minus + r_minus),
            lemma4: sqrt3_mul_le(2 * x - 2 * b_plus - b, 3 * b - 2 * x),
            b,
            r,
            b_plus,
            r_plus,
            s_minus,
            p_plus,
        }
    }
}

/// Outcome of the four termination inequalities for one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// `|B| ≥ (√3−1)|R|`
    pub lemma1: bool,
    /// `|P⁺| < √3|S⁻|` unless both are empty
    pub lemma2: bool,
    /// `|B⁻|+|R⁻| ≥ √3|R⁺|`
    pub lemma3: bool,
    /// `|B⁺|+|R⁺| ≤ √3/(√3+1)·|B⁺| + √3/2·|B|`
    pub lemma4: bool,
    pub b: i64,
    pub r: i64,
    pub b_plus: i64,
    pub r_plus: i64,
    pub s_minus: i64,
    pub p_plus: i64,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.lemma1 && self.lemma2 && self.lemma3 && self.lemma4
    }
}

/// Algorithm 1: accept compatible vertices; otherwise swap in admissible
/// sets of minimum conflict for as long as one exists.
#[derive(Clone, Debug, Default)]
pub struct Algorithm1 {
    state: Alg1State,
    config: AdmissibleConfig,
}

impl Algorithm1 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_config(config: AdmissibleConfig) -> Self {
        Algorithm1 { state: Alg1State::default(), config }
    }

    pub fn state(&self) -> &Alg1State {
        &self.state
    }
}

impl OnlineAlgorithm for Algorithm1 {
    fn name(&self) -> String {
        "is.alg1".into()
    }

    fn problem(&self) -> Problem {
        Problem::IndependentSet
    }

    fn model(&self) -> DecisionModel {
        DecisionModel::LateAcceptThenReject
    }

    fn step(&mut self, event: &ArrivalEvent, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Result<Vec<Action>, AlgorithmError> {
        let v = vertex_of(event)?;
        if accepted_neighbors(v, graph, ledger).is_empty() {
            self.state.a.insert(v);
            return Ok(vec![Action::AcceptNow]);
        }
        let mut s: Vec<VertexId> = ledger.accepted_ids().collect();
        let mut p: Vec<VertexId> = ledger.pending_ids().collect();
        let mut actions = Vec::new();
        while let Some(t) = find_admissible_min_conflict(graph, &s, &p, self.config)? {
            for &u in &t.conflict {
                actions.push(Action::LateReject(Item::Vertex(u)));
                self.state.a.remove(&u);
                self.state.b.remove(&u);
                self.state.r.insert(u);
            }
            for &x in &t.vertices {
                actions.push(if x == v { Action::AcceptNow } else { Action::LateAccept(Item::Vertex(x)) });
                self.state.b.insert(x);
            }
            s.retain(|u| t.conflict.binary_search(u).is_err());
            s.extend(&t.vertices);
            s.sort_unstable();
            p.retain(|x| t.vertices.binary_search(x).is_err());
        }
        Ok(actions)
    }
}
