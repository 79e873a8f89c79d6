//! Exact maximum independent set by branch and bound.
//!
//! Vertices of degree 0 and 1 are taken greedily (both rules are safe for a
//! maximum independent set); otherwise the solver branches on a vertex of
//! maximum degree, first including it and deleting its closed neighbourhood,
//! then excluding it.

use crate::bits::{Bits, LocalGraph};

/// Solver over one [`LocalGraph`]; counts search nodes across calls.
pub struct MisSolver<'a> {
    graph: &'a LocalGraph,
    nodes: u64,
}

impl<'a> MisSolver<'a> {
    pub fn new(graph: &'a LocalGraph) -> Self {
        MisSolver { graph, nodes: 0 }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// A maximum independent set within `candidates`, as local indices.
    pub fn maximum(&mut self, candidates: &Bits) -> Vec<usize> {
        let mut best = Vec::new();
        let mut chosen = Vec::new();
        self.branch(candidates.clone(), &mut chosen, &mut best, None);
        best.sort_unstable();
        best
    }

    /// Size of a maximum independent set within `candidates`.
    pub fn maximum_size(&mut self, candidates: &Bits) -> usize {
        self.maximum(candidates).len()
    }

    /// Whether `candidates` contains an independent set of size `target`.
    /// Stops as soon as one is found.
    pub fn reaches(&mut self, candidates: &Bits, target: usize) -> bool {
        if target == 0 {
            return true;
        }
        let mut best = Vec::new();
        let mut chosen = Vec::new();
        self.branch(candidates.clone(), &mut chosen, &mut best, Some(target));
        best.len() >= target
    }

    /// The lexicographically smallest (sorted local indices) maximum
    /// independent set within `candidates`.
    pub fn lex_smallest_maximum(&mut self, candidates: &Bits) -> Vec<usize> {
        let target = self.maximum_size(candidates);
        let mut rest = candidates.clone();
        let mut picked = Vec::with_capacity(target);
        while picked.len() < target {
            let v = rest.first().expect("target is reachable");
            let mut without = rest.clone();
            without.difference_with(&self.graph.adj[v]);
            without.remove(v);
            if self.reaches(&without, target - picked.len() - 1) {
                picked.push(v);
                rest = without;
            } else {
                rest.remove(v);
            }
        }
        picked
    }

    fn branch(&mut self, mut cand: Bits, chosen: &mut Vec<usize>, best: &mut Vec<usize>, stop_at: Option<usize>) {
        self.nodes += 1;
        let depth = chosen.len();
        self.reduce(&mut cand, chosen);
        if chosen.len() + cand.count() > best.len() && !stop_at.is_some_and(|t| best.len() >= t) {
            match self.pick_branch_vertex(&cand) {
                None => {
                    if chosen.len() > best.len() {
                        best.clone_from(chosen);
                    }
                }
                Some(v) => {
                    let mut with = cand.clone();
                    with.difference_with(&self.graph.adj[v]);
                    with.remove(v);
                    chosen.push(v);
                    self.branch(with, chosen, best, stop_at);
                    chosen.pop();
                    if !stop_at.is_some_and(|t| best.len() >= t) {
                        cand.remove(v);
                        self.branch(cand, chosen, best, stop_at);
                    }
                }
            }
        }
        chosen.truncate(depth);
    }

    fn reduce(&self, cand: &mut Bits, chosen: &mut Vec<usize>) {
        loop {
            let mut changed = false;
            let order: Vec<usize> = cand.iter().collect();
            for v in order {
                if !cand.contains(v) {
                    continue;
                }
                let mut nbrs = self.graph.adj[v].clone();
                nbrs.intersect_with(cand);
                match nbrs.count() {
                    0 => {
                        chosen.push(v);
                        cand.remove(v);
                        changed = true;
                    }
                    1 => {
                        chosen.push(v);
                        cand.remove(v);
                        cand.remove(nbrs.first().expect("one neighbour"));
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn pick_branch_vertex(&self, cand: &Bits) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in cand.iter() {
            let d = self.graph.degree_in(v, cand);
            if best.is_none_or(|(bd, _)| d > bd) {
                best = Some((d, v));
            }
        }
        best.map(|(_, v)| v)
    }
}

/// Whether no two of `vertices` are adjacent in `g`.
pub fn is_independent(g: &crate::stream::GraphSnapshot, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}
