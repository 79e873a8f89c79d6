//! Small-graph sweeps.
//!
//! Up to `exhaustive_max` vertices every request sequence is enumerated,
//! which covers every labeled graph in every arrival order. A vertex
//! sequence on `n` vertices is a choice of back-neighbours for each arrival,
//! so there are `2^(n(n−1)/2)` of them. Edge sequences are enumerated with
//! vertices numbered by first appearance, which identifies orders that
//! differ only by a relabeling. Larger sizes up to `n_max` are sampled.
//!
//! Instances run in parallel; results keep the enumeration order.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;

use super::generators::{gen_gnp, order_shuffle, rng, sequence_of};
use super::report::csv_field;
use super::{evaluate, run_events, CompetitiveRatio, Feed, HarnessError};
use crate::algorithms::{build_algorithm, describe};
use crate::ledger::DecisionModel;
use crate::oracles::OracleCaps;
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, ArrivalKind, RequestSequence};
use crate::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub problem: Problem,
    pub model: Option<DecisionModel>,
    pub algorithm: String,
    pub n_max: usize,
    /// Sizes up to this are enumerated exhaustively.
    pub exhaustive_max: usize,
    /// Sampled (graph, order) pairs for each size above `exhaustive_max`.
    pub samples_per_n: usize,
    /// Arrival orders drawn per sampled graph.
    pub orders_per_graph: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(problem: Problem, algorithm: &str, n_max: usize) -> Self {
        SweepConfig {
            problem,
            model: None,
            algorithm: algorithm.to_string(),
            n_max,
            exhaustive_max: 5,
            samples_per_n: 10_000,
            orders_per_graph: 10,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub index: usize,
    /// Vertex count of the underlying graph.
    pub n: usize,
    pub sequence: RequestSequence,
}

/// All vertex sequences on exactly `n` vertices.
pub fn all_vertex_sequences(n: usize) -> Vec<RequestSequence> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 32, "too many vertex sequences for n = {n}");
    (0u32..1 << pairs)
        .map(|mask| {
            let mut bit = 0;
            let events = (0..n)
                .map(|v| {
                    let nbrs: Vec<usize> = (0..v).filter(|_| (mask >> bit, bit += 1).0 & 1 == 1).collect();
                    ArrivalEvent::vertex(v, nbrs)
                })
                .collect();
            RequestSequence::with_events(ArrivalKind::Vertex, events)
        })
        .collect()
}

/// All nonempty edge sequences whose endpoints are numbered by first
/// appearance and use at most `n_max` vertices.
pub fn all_edge_sequences(n_max: usize) -> Vec<RequestSequence> {
    fn dfs(n_max: usize, used: usize, seq: &mut Vec<(usize, usize)>, present: &mut Vec<Vec<bool>>, out: &mut Vec<RequestSequence>) {
        if !seq.is_empty() {
            let events = seq.iter().map(|&(u, v)| ArrivalEvent::edge(u, v)).collect();
            out.push(RequestSequence::with_events(ArrivalKind::Edge, events));
        }
        // Either both endpoints are known, or the edge introduces vertex
        // `used` (and possibly `used + 1`), numbered next.
        let mut next: Vec<(usize, usize)> = (1..used).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        if used < n_max {
            next.extend((0..used).map(|u| (u, used)));
        }
        if used + 1 < n_max {
            next.push((used, used + 1));
        }
        for (u, v) in next {
            if present[u][v] {
                continue;
            }
            present[u][v] = true;
            seq.push((u, v));
            dfs(n_max, used.max(v + 1), seq, present, out);
            seq.pop();
            present[u][v] = false;
        }
    }
    let mut out = Vec::new();
    let mut present = vec![vec![false; n_max.max(2)]; n_max.max(2)];
    if n_max >= 2 {
        dfs(n_max, 0, &mut Vec::new(), &mut present, &mut out);
    }
    out
}

/// Instances for `config`, in a fixed order.
pub fn instances(config: &SweepConfig) -> Result<Vec<Instance>, HarnessError> {
    let kind = config.problem.arrival_kind();
    let mut seqs: Vec<(usize, RequestSequence)> = Vec::new();
    let exhaustive = config.exhaustive_max.min(config.n_max);
    match kind {
        ArrivalKind::Vertex => {
            for n in 1..=exhaustive {
                seqs.extend(all_vertex_sequences(n).into_iter().map(|s| (n, s)));
            }
        }
        ArrivalKind::Edge => {
            for s in all_edge_sequences(exhaustive) {
                let n = s.snapshot()?.n();
                seqs.push((n, s));
            }
        }
    }
    let orders = config.orders_per_graph.max(1);
    for n in exhaustive + 1..=config.n_max {
        let mut r = rng(config.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut drawn = 0;
        while drawn < config.samples_per_n {
            let p = r.gen_range(0.2..0.8);
            let g = gen_gnp(n, p, r.gen())?;
            if kind == ArrivalKind::Edge && g.m() == 0 {
                continue;
            }
            let base = sequence_of(&g, kind);
            for _ in 0..orders.min(config.samples_per_n - drawn) {
                let seq = order_shuffle(&base, r.gen())?;
                seqs.push((n, seq));
                drawn += 1;
            }
        }
    }
    Ok(seqs.into_iter().enumerate().map(|(index, (n, sequence))| Instance { index, n, sequence }).collect())
}

/// Applies `f` to every instance in parallel, keeping instance order.
pub fn par_map<T: Send>(instances: &[Instance], f: impl Fn(&Instance) -> T + Sync + Send) -> Vec<T> {
    instances.par_iter().map(f).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRecord {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub alg_value: Value,
    pub opt_value: Value,
    pub ratio: CompetitiveRatio,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub records: Vec<SweepRecord>,
    pub max_ratio: CompetitiveRatio,
    /// First instance attaining `max_ratio`.
    pub argmax: Option<Instance>,
    /// Exact ratio → instance count.
    pub histogram: BTreeMap<CompetitiveRatio, usize>,
}

impl SweepSummary {
    pub const CSV_HEADER: &'static str = "index,n,m,alg_value,opt_value,ratio";

    pub fn to_csv(&self) -> String {
        let mut s = format!("{}\n", Self::CSV_HEADER);
        for r in &self.records {
            s.push_str(&format!("{},{},{},{},{},{}\n", r.index, r.n, r.m, r.alg_value, r.opt_value, csv_field(&r.ratio.to_string())));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let c = &self.config;
        serde_json::json!({
            "config": {
                "problem": c.problem.to_string(),
                "model": c.model.map(|m| m.to_string()),
                "algorithm": c.algorithm,
                "n_max": c.n_max,
                "exhaustive_max": c.exhaustive_max,
                "samples_per_n": c.samples_per_n,
                "orders_per_graph": c.orders_per_graph,
                "seed": c.seed,
            },
            "instances": self.records.len(),
            "max_ratio": super::report::ratio_json(self.max_ratio.value()),
            "max_ratio_exact": self.max_ratio.to_string(),
            "argmax": self.argmax.as_ref().map(|i| serde_json::json!({
                "index": i.index,
                "n": i.n,
                "events": i.sequence.events.iter().map(ArrivalEvent::to_line).collect::<Vec<_>>(),
            })),
            "histogram": self.histogram.iter().map(|(r, k)| (r.to_string(), serde_json::json!(k))).collect::<serde_json::Map<_, _>>(),
        })
    }
}

/// Runs one instance and compares with the oracle.
pub fn run_instance(config: &SweepConfig, instance: &Instance, caps: OracleCaps) -> Result<SweepRecord, HarnessError> {
    let mut alg = build_algorithm(&config.algorithm, config.model, caps)?;
    let kind = config.problem.arrival_kind();
    let run = run_events(alg.as_mut(), kind, Feed::Fixed(&instance.sequence.events), None, false, |_, _, _| Ok(()))?;
    let e = evaluate(config.problem, &run, None, caps)?;
    Ok(SweepRecord { index: instance.index, n: run.graph.n(), m: run.graph.m(), alg_value: e.alg_value, opt_value: e.opt_value, ratio: e.ratio })
}

pub fn sweep_small_graphs(config: &SweepConfig) -> Result<SweepSummary, HarnessError> {
    if config.n_max > 7 {
        return Err(HarnessError::Config(format!("sweeps go up to 7 vertices, not {}", config.n_max)));
    }
    let (problem, _) = describe(&config.algorithm)?;
    if problem != config.problem {
        return Err(HarnessError::Config(format!("{} solves {problem}, not {}", config.algorithm, config.problem)));
    }
    let all = instances(config)?;
    let caps = OracleCaps::default();
    let records = par_map(&all, |i| run_instance(config, i, caps)).into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut max_ratio = CompetitiveRatio::Finite(Value::from_integer(1));
    let mut argmax = None;
    let mut histogram = BTreeMap::new();
    for r in &records {
        *histogram.entry(r.ratio).or_insert(0) += 1;
        if argmax.is_none() || r.ratio > max_ratio {
            max_ratio = r.ratio;
            argmax = Some(all[r.index].clone());
        }
    }
    Ok(SweepSummary { config: config.clone(), records, max_ratio, argmax, histogram })
}
