//! Exact offline optima for the four problems.
//!
//! The branch-and-bound solvers refuse instances above their caps instead of
//! approximating. Each also has a plain enumeration counterpart for small
//! instances, used to cross-check the solvers themselves.

pub mod forest;
pub mod independent_set;
pub mod matching;
pub mod spanning_forest;

use serde_json::json;
use thiserror::Error;

use crate::bits::LocalGraph;
use crate::ledger::ItemKind;
use crate::problem::Problem;
use crate::stream::GraphSnapshot;
use crate::Value;

pub use independent_set::{is_independent, MisSolver};
pub use matching::MatchingSolver;
pub use spanning_forest::{is_spanning_forest, kruskal, UnionFind};

pub const DEFAULT_VERTEX_CAP: usize = 30;
pub const DEFAULT_EDGE_CAP: usize = 40;
/// Largest instance the enumeration cross-checks accept.
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { max_vertices: DEFAULT_VERTEX_CAP, max_edges: DEFAULT_EDGE_CAP }
    }
}

impl OracleCaps {
    /// Both caps set to `cap`.
    pub fn uniform(cap: usize) -> Self {
        OracleCaps { max_vertices: cap, max_edges: cap }
    }

    /// Defaults, overridden by `LATEOPS_CAP` when it holds a number.
    pub fn from_env() -> Self {
        std::env::var("LATEOPS_CAP")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(OracleCaps::uniform)
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for the {what} oracle: {size} > cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
}

/// An optimum with a feasible witness achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: Value,
    pub witness_kind: ItemKind,
    /// Vertex or edge ids, ascending.
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

impl OracleResult {
    pub fn to_json(&self) -> serde_json::Value {
        let prefix = match self.witness_kind {
            ItemKind::Vertex => "v",
            ItemKind::Edge => "e",
        };
        json!({
            "value": crate::harness::report::value_json(&self.value),
            "witness": self.witness.iter().map(|id| format!("{prefix}{id}")).collect::<Vec<_>>(),
            "nodes_explored": self.nodes_explored,
        })
    }
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<(), OracleError> {
    if size > cap {
        Err(OracleError::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

pub fn opt_independent_set(g: &GraphSnapshot, caps: OracleCaps) -> Result<OracleResult, OracleError> {
    check_cap("independent set", g.n(), caps.max_vertices)?;
    let local = LocalGraph::whole(g);
    let mut solver = MisSolver::new(&local);
    let witness: Vec<usize> = solver.maximum(&local.all()).into_iter().map(|i| local.ids[i]).collect();
    debug_assert!(is_independent(g, &witness));
    Ok(OracleResult {
        value: Value::from_integer(witness.len() as i64),
        witness_kind: ItemKind::Vertex,
        witness,
        nodes_explored: solver.nodes(),
    })
}

/// Minimum vertex cover as the complement of a maximum independent set.
pub fn opt_vertex_cover(g: &GraphSnapshot, caps: OracleCaps) -> Result<OracleResult, OracleError> {
    let is = opt_independent_set(g, caps)?;
    let witness: Vec<usize> = (0..g.n()).filter(|v| is.witness.binary_search(v).is_err()).collect();
    Ok(OracleResult {
        value: Value::from_integer(witness.len() as i64),
        witness_kind: ItemKind::Vertex,
        witness,
        nodes_explored: is.nodes_explored,
    })
}

pub fn opt_matching(g: &GraphSnapshot, caps: OracleCaps) -> Result<OracleResult, OracleError> {
    check_cap("matching", g.m(), caps.max_edges)?;
    let local = LocalGraph::whole(g);
    let mut solver = MatchingSolver::new(&local);
    let mut witness: Vec<usize> = solver
        .maximum()
        .into_iter()
        .map(|(a, b)| g.edge_id(local.ids[a], local.ids[b]).expect("matched pair is an edge"))
        .collect();
    witness.sort_unstable();
    Ok(OracleResult {
        value: Value::from_integer(witness.len() as i64),
        witness_kind: ItemKind::Edge,
        witness,
        nodes_explored: solver.nodes(),
    })
}

pub fn opt_spanning_forest(g: &GraphSnapshot) -> OracleResult {
    let witness = kruskal(g);
    OracleResult {
        value: g.total_weight(witness.iter().copied()),
        witness_kind: ItemKind::Edge,
        nodes_explored: g.m() as u64,
        witness,
    }
}

pub fn opt(problem: Problem, g: &GraphSnapshot, caps: OracleCaps) -> Result<OracleResult, OracleError> {
    match problem {
        Problem::IndependentSet => opt_independent_set(g, caps),
        Problem::Matching => opt_matching(g, caps),
        Problem::VertexCover => opt_vertex_cover(g, caps),
        Problem::SpanningForest => Ok(opt_spanning_forest(g)),
    }
}

/// Maximum independent set by trying every vertex subset.
pub fn opt_independent_set_enumerate(g: &GraphSnapshot) -> Result<OracleResult, OracleError> {
    let n = g.n();
    check_cap("independent set enumeration", n, ENUMERATION_LIMIT)?;
    let masks: Vec<u32> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    let mut best = 0u32;
    for set in 0u32..(1u32 << n) {
        if set.count_ones() <= best.count_ones() {
            continue;
        }
        if (0..n).all(|v| set & (1 << v) == 0 || set & masks[v] == 0) {
            best = set;
        }
    }
    let witness: Vec<usize> = (0..n).filter(|v| best & (1 << v) != 0).collect();
    Ok(OracleResult {
        value: Value::from_integer(witness.len() as i64),
        witness_kind: ItemKind::Vertex,
        witness,
        nodes_explored: 1u64 << n,
    })
}

/// Maximum matching by trying every edge subset.
pub fn opt_matching_enumerate(g: &GraphSnapshot) -> Result<OracleResult, OracleError> {
    let m = g.m();
    check_cap("matching enumeration", m, ENUMERATION_LIMIT)?;
    let mut best = 0u32;
    for set in 0u32..(1u32 << m) {
        if set.count_ones() <= best.count_ones() {
            continue;
        }
        let mut used = vec![false; g.n()];
        let ok = (0..m).filter(|i| set & (1 << i) != 0).all(|i| {
            let e = g.edge(i);
            let fresh = !used[e.u] && !used[e.v];
            used[e.u] = true;
            used[e.v] = true;
            fresh
        });
        if ok {
            best = set;
        }
    }
    let witness: Vec<usize> = (0..m).filter(|i| best & (1 << i) != 0).collect();
    Ok(OracleResult {
        value: Value::from_integer(witness.len() as i64),
        witness_kind: ItemKind::Edge,
        witness,
        nodes_explored: 1u64 << m,
    })
}

/// Whether the edge ids form a matching in `g`.
pub fn is_matching(g: &GraphSnapshot, edges: &[usize]) -> bool {
    let mut used = vec![false; g.n()];
    edges.iter().all(|&id| {
        if id >= g.m() {
            return false;
        }
        let e = g.edge(id);
        let fresh = !used[e.u] && !used[e.v];
        used[e.u] = true;
        used[e.v] = true;
        fresh
    })
}

/// Whether the vertex set touches every edge of `g`.
pub fn is_vertex_cover(g: &GraphSnapshot, vertices: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in vertices {
        if v >= g.n() {
            return false;
        }
        inside[v] = true;
    }
    g.edges().iter().all(|e| inside[e.u] || inside[e.v])
}
