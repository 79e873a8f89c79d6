//! The bag construction against Independent Set in the late accept/reject
//! model.
//!
//! Vertices are presented into bags, each an independent set. A new vertex
//! is adjacent to every earlier vertex outside its bag that the algorithm
//! has not rejected, so the algorithm's accepted vertices always lie in one
//! bag. Whenever the algorithm moves to a different bag, a new bag is
//! opened as a child of it; the bags form a tree rooted at the first bag.
//!
//! Along the path `B_1 … B_m` from the root to the algorithm's bag, `a_j` is
//! the algorithm's holding in `B_j` just before its first late reject there
//! (`a_m` is the current holding). The alternating sums
//! `s_m = a_m + a_{m−2} + …` and `s_{m−1}` count vertices that are pairwise
//! non-adjacent, and so does `s_{m−1}` plus the whole newest bag when that
//! bag hangs below the algorithm's. The largest of these is the certified
//! bound; the construction stops once it exceeds `c` times the holding.

use std::collections::BTreeSet;

use serde_json::json;

use super::Adversary;
use crate::harness::report::{ratio_json, value_json};
use crate::ledger::{MoveKind, SolutionLedger};
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot, VertexId};
use crate::Value;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bag {
    pub parent: Option<usize>,
    pub vertices: Vec<VertexId>,
    /// The algorithm's holding in this bag just before its first late
    /// reject from it.
    pub before_first_reject: Option<Vec<VertexId>>,
}

#[derive(Clone, Debug)]
pub struct BagAdversary {
    c: Value,
    eps: Value,
    n1: usize,
    budget: usize,
    bags: Vec<Bag>,
    bag_of: Vec<usize>,
    newest: usize,
    held: BTreeSet<VertexId>,
    cursor: usize,
    alg_bag: Option<usize>,
    split_holdings: bool,
    witness: Vec<VertexId>,
    sums: (usize, usize),
    best_ratio: Option<Value>,
    reached: bool,
}

impl BagAdversary {
    pub fn new(c: Value, eps: Value, n1: usize, budget: usize) -> Self {
        BagAdversary {
            c,
            eps,
            n1,
            budget,
            bags: vec![Bag::default()],
            bag_of: Vec::new(),
            newest: 0,
            held: BTreeSet::new(),
            cursor: 0,
            alg_bag: None,
            split_holdings: false,
            witness: Vec::new(),
            sums: (0, 0),
            best_ratio: None,
            reached: false,
        }
    }

    pub fn bags(&self) -> &[Bag] {
        &self.bags
    }

    /// The bag holding the algorithm's accepted vertices, if it ever held
    /// any.
    pub fn alg_bag(&self) -> Option<usize> {
        self.alg_bag
    }

    /// Vertices the algorithm holds, as mirrored from the ledger.
    pub fn holdings(&self) -> usize {
        self.held.len()
    }

    /// Whether the algorithm was ever seen holding vertices of two bags.
    pub fn split_holdings(&self) -> bool {
        self.split_holdings
    }

    /// The independent set behind the current bound.
    pub fn witness(&self) -> &[VertexId] {
        &self.witness
    }

    /// `(s_m, s_{m−1})` along the current path.
    pub fn alternating_sums(&self) -> (usize, usize) {
        self.sums
    }

    pub fn best_ratio(&self) -> Option<Value> {
        self.best_ratio
    }

    /// Whether the bound exceeded `c` times the holding.
    pub fn reached(&self) -> bool {
        self.reached
    }

    /// Bag indices from the root down to the algorithm's bag.
    pub fn path(&self) -> Vec<usize> {
        let mut path = Vec::new();
        let mut cur = self.alg_bag;
        while let Some(j) = cur {
            path.push(j);
            cur = self.bags[j].parent;
        }
        path.reverse();
        path
    }

    fn open_bag(&mut self, parent: usize) {
        self.bags.push(Bag { parent: Some(parent), ..Bag::default() });
        self.newest = self.bags.len() - 1;
    }

    fn sync(&mut self, ledger: &SolutionLedger) {
        for mv in &ledger.log()[self.cursor..] {
            let v = mv.item.id();
            match mv.action {
                MoveKind::AcceptNow | MoveKind::LateAccept => {
                    self.held.insert(v);
                }
                MoveKind::LateReject => {
                    let j = self.bag_of[v];
                    if self.bags[j].before_first_reject.is_none() {
                        let inside: Vec<VertexId> = self.held.iter().copied().filter(|&u| self.bag_of[u] == j).collect();
                        self.bags[j].before_first_reject = Some(inside);
                    }
                    self.held.remove(&v);
                }
                MoveKind::RejectNow | MoveKind::Finalize => {}
            }
        }
        self.cursor = ledger.log().len();

        if let Some(&first) = self.held.iter().next() {
            let j = self.bag_of[first];
            if self.held.iter().any(|&u| self.bag_of[u] != j) {
                self.split_holdings = true;
            }
            if self.alg_bag != Some(j) {
                self.alg_bag = Some(j);
                if self.bags.len() > 1 {
                    self.open_bag(j);
                }
            }
        }
        let h = Value::from_integer(self.held.len() as i64);
        if self.bags.len() == 1 && self.bags[0].vertices.len() >= self.n1 && !self.held.is_empty() && self.eps * h >= Value::from_integer(1) {
            self.open_bag(0);
        }
        self.update_bound();
    }

    fn update_bound(&mut self) {
        let path = self.path();
        let m = path.len();
        let mut sides: [Vec<VertexId>; 2] = [Vec::new(), Vec::new()];
        for (i, &j) in path.iter().enumerate() {
            let part: Vec<VertexId> = if i + 1 == m {
                self.held.iter().copied().filter(|&u| self.bag_of[u] == j).collect()
            } else {
                self.bags[j].before_first_reject.clone().unwrap_or_default()
            };
            // Side 0 holds the bags with the same parity as B_m.
            sides[(m - 1 - i) % 2].extend(part);
        }
        self.sums = (sides[0].len(), sides[1].len());
        let newest = &self.bags[self.newest];
        let mut candidates = vec![sides[0].clone(), newest.vertices.clone()];
        if m > 0 && newest.parent == self.alg_bag && self.alg_bag != Some(self.newest) {
            candidates.push(sides[1].iter().chain(&newest.vertices).copied().collect());
        }
        let mut best = candidates.into_iter().max_by_key(Vec::len).expect("candidates");
        best.sort_unstable();
        self.witness = best;
        if !self.held.is_empty() {
            let ratio = Value::new(self.witness.len() as i64, self.held.len() as i64);
            if self.best_ratio.is_none_or(|b| ratio > b) {
                self.best_ratio = Some(ratio);
            }
        }
    }

    /// Checks the witness directly against the graph.
    pub fn witness_is_independent(&self, graph: &GraphSnapshot) -> bool {
        crate::oracles::is_independent(graph, &self.witness)
    }
}

impl Adversary for BagAdversary {
    fn name(&self) -> String {
        format!("adv.is.bags:c={},eps={},n1={},budget={}", self.c, self.eps, self.n1, self.budget)
    }

    fn problem(&self) -> Problem {
        Problem::IndependentSet
    }

    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        self.sync(ledger);
        let h = self.held.len();
        if h >= 1 && Value::from_integer(self.witness.len() as i64) > self.c * Value::from_integer(h as i64) {
            self.reached = true;
            return None;
        }
        let id = graph.n();
        if id >= self.budget {
            return None;
        }
        let newest = self.newest;
        let neighbors: Vec<VertexId> =
            (0..id).filter(|&u| self.bag_of[u] != newest && !ledger.is_rejected(u)).collect();
        self.bag_of.push(newest);
        self.bags[newest].vertices.push(id);
        Some(ArrivalEvent::vertex(id, neighbors))
    }

    fn opt_bound(&self, _graph: &GraphSnapshot, _ledger: &SolutionLedger) -> Value {
        Value::from_integer(self.witness.len() as i64)
    }

    fn summary(&self) -> serde_json::Value {
        let final_ratio = (!self.held.is_empty()).then(|| Value::new(self.witness.len() as i64, self.held.len() as i64));
        json!({
            "bags": self.bags.iter().map(|b| json!({
                "parent": b.parent,
                "size": b.vertices.len(),
                "a": b.before_first_reject.as_ref().map(Vec::len),
            })).collect::<Vec<_>>(),
            "path": self.path(),
            "holdings": self.held.len(),
            "s_m": self.sums.0,
            "s_m_minus_1": self.sums.1,
            "bound": self.witness.len(),
            "best_ratio": ratio_json(self.best_ratio),
            "final_ratio": ratio_json(final_ratio),
            "target": value_json(&self.c),
            "reached": self.reached,
            "split_holdings": self.split_holdings,
        })
    }
}
