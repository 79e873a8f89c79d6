//! Request streams: arrival events, sequence validation, graph snapshots and
//! the line-oriented event file format.
//!
//! Vertices are identified by their arrival index. In the vertex-arrival
//! model the k-th event reveals vertex `k` together with its edges to earlier
//! vertices; in the edge-arrival model the k-th event reveals edge `k` and up
//! to two new endpoints, which receive the next free ids.
//!
//! ```text
//! # comments run to end of line
//! model vertex
//! v 0
//! v 1 0
//! v 2 1
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Exact edge weight.
pub type Weight = Ratio<i64>;

/// An undirected, weighted edge. `(u, v)` and `(v, u)` denote the same edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        Self::weighted(u, v, Weight::one())
    }

    pub fn weighted(u: VertexId, v: VertexId, weight: Weight) -> Self {
        Edge { u, v, weight }
    }

    /// Endpoints as an ordered pair `(min, max)`.
    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrivalKind {
    Vertex,
    Edge,
}

impl fmt::Display for ArrivalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrivalKind::Vertex => f.write_str("vertex"),
            ArrivalKind::Edge => f.write_str("edge"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrivalEvent {
    /// A new vertex with its edges to previously revealed vertices.
    Vertex { id: VertexId, neighbors: Vec<VertexId> },
    /// A single edge; unseen endpoints are revealed with it.
    Edge(Edge),
}

impl ArrivalEvent {
    pub fn vertex(id: VertexId, neighbors: impl IntoIterator<Item = VertexId>) -> Self {
        ArrivalEvent::Vertex { id, neighbors: neighbors.into_iter().collect() }
    }

    pub fn edge(u: VertexId, v: VertexId) -> Self {
        ArrivalEvent::Edge(Edge::new(u, v))
    }

    pub fn weighted_edge(u: VertexId, v: VertexId, weight: i64) -> Self {
        ArrivalEvent::Edge(Edge::weighted(u, v, Weight::from_integer(weight)))
    }

    pub fn kind(&self) -> ArrivalKind {
        match self {
            ArrivalEvent::Vertex { .. } => ArrivalKind::Vertex,
            ArrivalEvent::Edge(_) => ArrivalKind::Edge,
        }
    }

    /// Canonical form: vertex neighbor lists sorted.
    pub fn canonical(&self) -> Self {
        match self {
            ArrivalEvent::Vertex { id, neighbors } => {
                let mut neighbors = neighbors.clone();
                neighbors.sort_unstable();
                ArrivalEvent::Vertex { id: *id, neighbors }
            }
            ArrivalEvent::Edge(e) => ArrivalEvent::Edge(e.clone()),
        }
    }

    /// One line of the event file format, without trailing newline.
    pub fn to_line(&self) -> String {
        match self.canonical() {
            ArrivalEvent::Vertex { id, neighbors } => {
                let mut line = format!("v {id}");
                for n in neighbors {
                    line.push(' ');
                    line.push_str(&n.to_string());
                }
                line
            }
            ArrivalEvent::Edge(e) => {
                if e.weight.is_one() {
                    format!("e {} {}", e.u, e.v)
                } else {
                    format!("e {} {} {}", e.u, e.v, e.weight)
                }
            }
        }
    }
}

/// An ordered, homogeneous stream of arrival events.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RequestSequence {
    pub kind: ArrivalKind,
    pub events: Vec<ArrivalEvent>,
}

impl RequestSequence {
    pub fn new(kind: ArrivalKind) -> Self {
        RequestSequence { kind, events: Vec::new() }
    }

    pub fn with_events(kind: ArrivalKind, events: Vec<ArrivalEvent>) -> Self {
        RequestSequence { kind, events }
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn canonical(&self) -> Self {
        RequestSequence {
            kind: self.kind,
            events: self.events.iter().map(ArrivalEvent::canonical).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        validate_sequence(self)
    }

    pub fn snapshot(&self) -> Result<GraphSnapshot, StreamError> {
        build_snapshot(self, self.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Rule {
    #[error("edge event in vertex model")]
    EdgeInVertexModel,
    #[error("vertex event in edge model")]
    VertexInEdgeModel,
    #[error("vertex id {found} out of arrival order (expected {expected})")]
    VertexOutOfOrder { expected: VertexId, found: VertexId },
    #[error("neighbor not yet revealed: {0}")]
    NeighborNotRevealed(VertexId),
    #[error("self-loop on {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("endpoint {0} skips an unrevealed vertex id")]
    EndpointSkipsId(VertexId),
    #[error("non-positive weight {0}")]
    NonPositiveWeight(Weight),
}

/// A rule broken by the event at `index`.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("event {index}: {rule}")]
pub struct Violation {
    pub index: usize,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StreamError {
    #[error("prefix length {requested} out of range (sequence has {len} events)")]
    PrefixOutOfRange { requested: usize, len: usize },
    #[error("invalid sequence: {0}")]
    Invalid(Violation),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("weight {0} cannot be written to an event file")]
    Unserializable(Weight),
}

/// The graph presented by a prefix of a request sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSnapshot {
    adjacency: Vec<BTreeSet<VertexId>>,
    edges: Vec<Edge>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl GraphSnapshot {
    pub fn new() -> Self {
        Self::default()
    }

    /// Unweighted graph on `n` vertices from an edge list, in list order.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut g = GraphSnapshot { adjacency: vec![BTreeSet::new(); n], ..Default::default() };
        for (u, v) in edges {
            g.insert_edge(Edge::new(u, v));
        }
        g
    }

    /// Weighted graph on `n` vertices from an edge list, in list order.
    pub fn from_weighted_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = GraphSnapshot { adjacency: vec![BTreeSet::new(); n], ..Default::default() };
        for e in edges {
            g.insert_edge(e);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.index.contains_key(&(u.min(v), u.max(v)))
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Edges in insertion order; the position is the edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Rules the event would break if applied to this snapshot.
    pub fn check(&self, event: &ArrivalEvent, kind: ArrivalKind) -> Vec<Rule> {
        let mut broken = Vec::new();
        match (event, kind) {
            (ArrivalEvent::Edge(_), ArrivalKind::Vertex) => broken.push(Rule::EdgeInVertexModel),
            (ArrivalEvent::Vertex { .. }, ArrivalKind::Edge) => broken.push(Rule::VertexInEdgeModel),
            _ => {}
        }
        match event {
            ArrivalEvent::Vertex { id, neighbors } => {
                let n = self.n();
                if *id != n {
                    broken.push(Rule::VertexOutOfOrder { expected: n, found: *id });
                }
                let mut seen = BTreeSet::new();
                for &u in neighbors {
                    if u == *id {
                        broken.push(Rule::SelfLoop(u));
                    } else if u >= n || u > *id {
                        broken.push(Rule::NeighborNotRevealed(u));
                    } else if !seen.insert(u) {
                        broken.push(Rule::DuplicateEdge(u, *id));
                    }
                }
            }
            ArrivalEvent::Edge(e) => {
                let n = self.n();
                if e.u == e.v {
                    broken.push(Rule::SelfLoop(e.u));
                } else {
                    let (lo, hi) = e.key();
                    // New endpoints must take the next free ids, in order.
                    if hi >= n {
                        let ok = if lo >= n { lo == n && hi == n + 1 } else { hi == n };
                        if !ok {
                            broken.push(Rule::EndpointSkipsId(hi));
                        }
                    }
                    if self.has_edge(lo, hi) {
                        broken.push(Rule::DuplicateEdge(lo, hi));
                    }
                }
                if e.weight <= Weight::zero() {
                    broken.push(Rule::NonPositiveWeight(e.weight));
                }
            }
        }
        broken
    }

    /// Applies one event after checking it against this snapshot.
    pub fn apply(&mut self, event: &ArrivalEvent, kind: ArrivalKind) -> Result<(), Vec<Rule>> {
        let broken = self.check(event, kind);
        if !broken.is_empty() {
            return Err(broken);
        }
        match event {
            ArrivalEvent::Vertex { id, neighbors } => {
                self.adjacency.push(BTreeSet::new());
                let mut sorted = neighbors.clone();
                sorted.sort_unstable();
                for u in sorted {
                    self.insert_edge(Edge::new(u, *id));
                }
            }
            ArrivalEvent::Edge(e) => {
                let hi = e.u.max(e.v);
                while self.adjacency.len() <= hi {
                    self.adjacency.push(BTreeSet::new());
                }
                self.insert_edge(e.clone());
            }
        }
        Ok(())
    }

    fn insert_edge(&mut self, e: Edge) {
        let key = e.key();
        assert!(key.0 != key.1, "self-loop");
        assert!(!self.index.contains_key(&key), "parallel edge {key:?}");
        self.adjacency[e.u].insert(e.v);
        self.adjacency[e.v].insert(e.u);
        self.index.insert(key, self.edges.len());
        self.edges.push(e);
    }

    /// Whether every vertex and edge of `self` is present in `other` (ids preserved).
    pub fn is_subgraph_of(&self, other: &GraphSnapshot) -> bool {
        self.n() <= other.n()
            && self.edges.iter().all(|e| other.edge_id(e.u, e.v).is_some_and(|id| other.edge(id).weight == e.weight))
    }

    pub fn total_weight(&self, edges: impl IntoIterator<Item = EdgeId>) -> Weight {
        edges.into_iter().map(|id| self.edges[id].weight).fold(Weight::zero(), |a, b| a + b)
    }
}

/// Checks every event against the snapshot of its prefix.
///
/// Invalid events are reported and skipped, so later events are checked
/// against the valid part of their prefix.
pub fn validate_sequence(seq: &RequestSequence) -> Result<(), Vec<Violation>> {
    let mut g = GraphSnapshot::new();
    let mut violations = Vec::new();
    for (index, event) in seq.events.iter().enumerate() {
        if let Err(rules) = g.apply(event, seq.kind) {
            violations.extend(rules.into_iter().map(|rule| Violation { index, rule }));
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// The graph revealed by the first `prefix_len` events.
pub fn build_snapshot(seq: &RequestSequence, prefix_len: usize) -> Result<GraphSnapshot, StreamError> {
    if prefix_len > seq.len() {
        return Err(StreamError::PrefixOutOfRange { requested: prefix_len, len: seq.len() });
    }
    let mut g = GraphSnapshot::new();
    for (index, event) in seq.events[..prefix_len].iter().enumerate() {
        g.apply(event, seq.kind)
            .map_err(|mut rules| StreamError::Invalid(Violation { index, rule: rules.remove(0) }))?;
    }
    Ok(g)
}

pub fn serialize_events(seq: &RequestSequence) -> Result<String, StreamError> {
    let mut out = format!("model {}\n", seq.kind);
    for event in &seq.events {
        if let ArrivalEvent::Edge(e) = event {
            if e.weight <= Weight::zero() {
                return Err(StreamError::Unserializable(e.weight));
            }
        }
        out.push_str(&event.to_line());
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_events(text: &str) -> Result<RequestSequence, StreamError> {
    let err = |line: usize, reason: String| StreamError::Parse { line, reason };
    let mut seq: Option<RequestSequence> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap_or_default();
        let Some(seq) = seq.as_mut() else {
            let kind = match (head, tokens.next(), tokens.next()) {
                ("model", Some("vertex"), None) => ArrivalKind::Vertex,
                ("model", Some("edge"), None) => ArrivalKind::Edge,
                _ => return Err(err(line_no, "expected `model vertex` or `model edge`".into())),
            };
            seq = Some(RequestSequence::new(kind));
            continue;
        };
        let event = match head {
            "v" => {
                if seq.kind != ArrivalKind::Vertex {
                    return Err(err(line_no, "vertex event in edge model".into()));
                }
                let id = tokens.next().ok_or_else(|| err(line_no, "missing vertex id".into()))?;
                let id = parse_id(id).map_err(|r| err(line_no, r))?;
                let neighbors = tokens.map(parse_id).collect::<Result<Vec<_>, _>>().map_err(|r| err(line_no, r))?;
                ArrivalEvent::Vertex { id, neighbors }
            }
            "e" => {
                if seq.kind != ArrivalKind::Edge {
                    return Err(err(line_no, "edge event in vertex model".into()));
                }
                let rest: Vec<&str> = tokens.collect();
                if rest.len() < 2 || rest.len() > 3 {
                    return Err(err(line_no, "expected `e <u> <v> [<weight>]`".into()));
                }
                let u = parse_id(rest[0]).map_err(|r| err(line_no, r))?;
                let v = parse_id(rest[1]).map_err(|r| err(line_no, r))?;
                let weight = match rest.get(2) {
                    Some(w) => parse_weight(w).map_err(|r| err(line_no, r))?,
                    None => Weight::one(),
                };
                ArrivalEvent::Edge(Edge::weighted(u, v, weight))
            }
            "model" => return Err(err(line_no, "duplicate model line".into())),
            other => return Err(err(line_no, format!("unknown event `{other}`"))),
        };
        seq.events.push(event);
    }
    seq.ok_or_else(|| err(1, "missing model line".into()))
}

fn parse_id(token: &str) -> Result<VertexId, String> {
    token.parse::<VertexId>().map_err(|_| format!("bad vertex id `{token}`"))
}

fn parse_weight(token: &str) -> Result<Weight, String> {
    if token.contains(['.', 'e', 'E']) {
        return Err(format!("floating-point weight `{token}` (use an integer)"));
    }
    let parsed = match token.split_once('/') {
        Some((p, q)) => match (p.parse::<i64>(), q.parse::<i64>()) {
            (Ok(p), Ok(q)) if q != 0 => Some(Weight::new(p, q)),
            _ => None,
        },
        None => token.parse::<i64>().ok().map(Weight::from_integer),
    };
    match parsed {
        Some(w) if w > Weight::zero() => Ok(w),
        Some(_) => Err(format!("weight `{token}` must be positive")),
        None => Err(format!("bad weight `{token}`")),
    }
}
