//! Seeded instance generators.
//!
//! Generators build a labeled graph; [`vertex_sequence`] and
//! [`edge_sequence`] turn it into a request sequence for either arrival
//! model. All randomness comes from a ChaCha8 stream seeded with the given
//! 64-bit seed, so outputs are reproducible across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::params::{NamedParams, ParamError};
use crate::stream::{ArrivalEvent, ArrivalKind, Edge, EdgeId, GraphSnapshot, RequestSequence, VertexId, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown generator `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("invalid parameter: {0}")]
    Invalid(String),
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::Invalid(format!("edge probability {p} outside [0, 1]")))
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<GraphSnapshot, GeneratorError> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(GraphSnapshot::from_edges(n, edges))
}

pub fn gen_path(n: usize) -> GraphSnapshot {
    GraphSnapshot::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn gen_cycle(n: usize) -> Result<GraphSnapshot, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::Invalid("a cycle needs at least 3 vertices".into()));
    }
    Ok(GraphSnapshot::from_edges(n, (1..n).map(|v| (v - 1, v)).chain([(n - 1, 0)])))
}

/// Random bipartite graph with sides `0..a` and `a..a+b`.
pub fn gen_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<GraphSnapshot, GeneratorError> {
    check_probability(p)?;
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for v in a..a + b {
        for u in 0..a {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(GraphSnapshot::from_edges(a + b, edges))
}

/// The same graph with independent uniform integer weights in `1..=max`.
pub fn gen_weights(g: &GraphSnapshot, max: i64, seed: u64) -> Result<GraphSnapshot, GeneratorError> {
    if max < 1 {
        return Err(GeneratorError::Invalid("maximum weight must be at least 1".into()));
    }
    let mut rng = rng(seed);
    let edges = g.edges().iter().map(|e| Edge::weighted(e.u, e.v, Weight::from_integer(rng.gen_range(1..=max))));
    Ok(GraphSnapshot::from_weighted_edges(g.n(), edges.collect::<Vec<_>>()))
}

/// Vertex-arrival sequence presenting `order[k]` as vertex `k`.
pub fn vertex_sequence(g: &GraphSnapshot, order: &[VertexId]) -> RequestSequence {
    let mut rank = vec![usize::MAX; g.n()];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    let events = order
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let mut nbrs: Vec<VertexId> = g.neighbors(v).iter().map(|&u| rank[u]).filter(|&r| r < k).collect();
            nbrs.sort_unstable();
            ArrivalEvent::vertex(k, nbrs)
        })
        .collect();
    RequestSequence::with_events(ArrivalKind::Vertex, events)
}

/// Edge-arrival sequence presenting the edges in `order`; vertices are
/// renumbered by first appearance and isolated vertices disappear.
pub fn edge_sequence(g: &GraphSnapshot, order: &[EdgeId]) -> RequestSequence {
    let mut label = vec![usize::MAX; g.n()];
    let mut next = 0;
    let mut events = Vec::with_capacity(order.len());
    for &id in order {
        let e = g.edge(id);
        for x in [e.u, e.v] {
            if label[x] == usize::MAX {
                label[x] = next;
                next += 1;
            }
        }
        events.push(ArrivalEvent::Edge(Edge::weighted(label[e.u], label[e.v], e.weight)));
    }
    RequestSequence::with_events(ArrivalKind::Edge, events)
}

/// Presents `g` in its own id order.
pub fn sequence_of(g: &GraphSnapshot, kind: ArrivalKind) -> RequestSequence {
    match kind {
        ArrivalKind::Vertex => vertex_sequence(g, &(0..g.n()).collect::<Vec<_>>()),
        ArrivalKind::Edge => edge_sequence(g, &(0..g.m()).collect::<Vec<_>>()),
    }
}

/// The same instance in a uniformly random arrival order.
pub fn order_shuffle(seq: &RequestSequence, seed: u64) -> Result<RequestSequence, crate::stream::StreamError> {
    let g = seq.snapshot()?;
    let mut rng = rng(seed);
    Ok(match seq.kind {
        ArrivalKind::Vertex => {
            let mut order: Vec<VertexId> = (0..g.n()).collect();
            order.shuffle(&mut rng);
            vertex_sequence(&g, &order)
        }
        ArrivalKind::Edge => {
            let mut order: Vec<EdgeId> = (0..g.m()).collect();
            order.shuffle(&mut rng);
            edge_sequence(&g, &order)
        }
    })
}

/// Builds a sequence from a generator spec such as `gen.gnp:n=10,p=0.3`.
///
/// Every generator accepts `shuffle=1` (random arrival order) and `wmax=K`
/// (uniform integer weights in `1..=K`).
pub fn generate(spec: &str, kind: ArrivalKind, seed: u64) -> Result<RequestSequence, GeneratorError> {
    let p = NamedParams::parse(spec)?;
    let common = ["shuffle", "wmax"];
    let with = |keys: &[&'static str]| -> Vec<&'static str> { keys.iter().chain(&common).copied().collect() };
    let g = match p.name.as_str() {
        "gen.gnp" => {
            p.only(&with(&["n", "p"]))?;
            gen_gnp(p.require("n")?, p.get_or("p", 0.5)?, seed)?
        }
        "gen.path" => {
            p.only(&with(&["n"]))?;
            gen_path(p.require("n")?)
        }
        "gen.cycle" => {
            p.only(&with(&["n"]))?;
            gen_cycle(p.require("n")?)?
        }
        "gen.bipartite" => {
            p.only(&with(&["a", "b", "p"]))?;
            gen_bipartite(p.require("a")?, p.require("b")?, p.get_or("p", 0.5)?, seed)?
        }
        other => return Err(GeneratorError::Unknown(other.to_string())),
    };
    let g = match p.get::<i64>("wmax")? {
        // A separate stream so weights do not shift with the graph draw.
        Some(max) => gen_weights(&g, max, seed ^ 0x5eed_0f_3e16)?,
        None => g,
    };
    let seq = sequence_of(&g, kind);
    if p.get_or::<u8>("shuffle", 0)? != 0 {
        Ok(order_shuffle(&seq, seed.wrapping_add(1)).expect("generated sequences are valid"))
    } else {
        Ok(seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes() {
        let p4 = vertex_sequence(&gen_path(4), &[0, 1, 2, 3]);
        assert_eq!(p4.snapshot().unwrap(), GraphSnapshot::from_edges(4, [(0, 1), (1, 2), (2, 3)]));
        assert_eq!(gen_gnp(10, 0.0, 1).unwrap().m(), 0);
        assert_eq!(gen_gnp(10, 1.0, 1).unwrap().m(), 45);
        assert_eq!(gen_cycle(5).unwrap().m(), 5);
        assert!(gen_cycle(2).is_err());
        assert!(gen_gnp(3, 1.5, 0).is_err());
        let b = gen_bipartite(3, 4, 1.0, 0).unwrap();
        assert_eq!(b.m(), 12);
    }

    #[test]
    fn seeded_and_valid() {
        let a = generate("gen.gnp:n=12,p=0.4,shuffle=1,wmax=9", ArrivalKind::Edge, 7).unwrap();
        let b = generate("gen.gnp:n=12,p=0.4,shuffle=1,wmax=9", ArrivalKind::Edge, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().is_ok());
        let v = generate("gen.bipartite:a=4,b=5,p=0.5,shuffle=1", ArrivalKind::Vertex, 3).unwrap();
        assert!(v.validate().is_ok());
        assert_eq!(v.len(), 9);
        assert!(generate("gen.nope", ArrivalKind::Vertex, 0).is_err());
    }

    #[test]
    fn shuffling_keeps_the_graph_up_to_relabeling() {
        let g = gen_gnp(9, 0.5, 11).unwrap();
        let seq = sequence_of(&g, ArrivalKind::Vertex);
        let shuffled = order_shuffle(&seq, 5).unwrap();
        let h = shuffled.snapshot().unwrap();
        assert_eq!((h.n(), h.m()), (g.n(), g.m()));
        let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
        dg.sort_unstable();
        dh.sort_unstable();
        assert_eq!(dg, dh);
    }
}
