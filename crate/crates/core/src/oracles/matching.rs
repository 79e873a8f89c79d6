//! Exact maximum matching by branch and bound over vertices.
//!
//! A vertex with a single free neighbour is matched to it outright (some
//! maximum matching always does so). Otherwise the free vertex of smallest
//! positive degree is either matched to each of its neighbours in turn or
//! left unmatched.

use crate::bits::{Bits, LocalGraph};

pub struct MatchingSolver<'a> {
    graph: &'a LocalGraph,
    nodes: u64,
}

impl<'a> MatchingSolver<'a> {
    pub fn new(graph: &'a LocalGraph) -> Self {
        MatchingSolver { graph, nodes: 0 }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// A maximum matching as pairs of local indices.
    pub fn maximum(&mut self) -> Vec<(usize, usize)> {
        let mut best = Vec::new();
        let mut chosen = Vec::new();
        self.branch(self.graph.all(), &mut chosen, &mut best);
        best
    }

    fn branch(&mut self, mut free: Bits, chosen: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
        self.nodes += 1;
        let depth = chosen.len();
        // Forced moves: isolated vertices drop out, pendant vertices get matched.
        loop {
            let mut changed = false;
            let order: Vec<usize> = free.iter().collect();
            for v in order {
                if !free.contains(v) {
                    continue;
                }
                let mut nbrs = self.graph.adj[v].clone();
                nbrs.intersect_with(&free);
                match nbrs.count() {
                    0 => {
                        free.remove(v);
                        changed = true;
                    }
                    1 => {
                        let u = nbrs.first().expect("one neighbour");
                        chosen.push((v.min(u), v.max(u)));
                        free.remove(v);
                        free.remove(u);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if chosen.len() + free.count() / 2 > best.len() {
            let pick = free.iter().map(|v| (self.graph.degree_in(v, &free), v)).min();
            match pick {
                None => {
                    if chosen.len() > best.len() {
                        best.clone_from(chosen);
                    }
                }
                Some((_, v)) => {
                    let mut nbrs = self.graph.adj[v].clone();
                    nbrs.intersect_with(&free);
                    for u in nbrs.iter() {
                        let mut rest = free.clone();
                        rest.remove(v);
                        rest.remove(u);
                        chosen.push((v.min(u), v.max(u)));
                        self.branch(rest, chosen, best);
                        chosen.pop();
                    }
                    free.remove(v);
                    self.branch(free, chosen, best);
                }
            }
        }
        chosen.truncate(depth);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::GraphSnapshot;

    fn size(edges: &[(usize, usize)], n: usize) -> usize {
        let g = GraphSnapshot::from_edges(n, edges.iter().copied());
        let l = LocalGraph::whole(&g);
        MatchingSolver::new(&l).maximum().len()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(size(&[(0, 1), (1, 2), (2, 3)], 4), 2);
        assert_eq!(size(&[(0, 1), (1, 2), (2, 0)], 3), 1);
        assert_eq!(size(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], 6), 3);
        // K4
        assert_eq!(size(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4), 2);
        // Petersen graph has a perfect matching.
        let petersen = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ];
        assert_eq!(size(&petersen, 10), 5);
    }
}
