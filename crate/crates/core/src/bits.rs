//! Dense bitsets over small local vertex indices, and induced subgraphs
//! built on them for the exact solvers.

use crate::stream::{GraphSnapshot, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits { words: vec![0; len.div_ceil(64).max(1)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection_count(&self, other: &Bits) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn intersect_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

/// An induced subgraph relabelled to `0..len`, with bitset adjacency.
#[derive(Clone, Debug)]
pub struct LocalGraph {
    /// Local index → vertex id in the source snapshot (ascending).
    pub ids: Vec<VertexId>,
    pub adj: Vec<Bits>,
}

impl LocalGraph {
    /// The subgraph of `g` induced by `vertices` (sorted and deduplicated).
    pub fn induced(g: &GraphSnapshot, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let mut ids: Vec<VertexId> = vertices.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        let len = ids.len();
        let mut adj = vec![Bits::new(len); len];
        for (i, &v) in ids.iter().enumerate() {
            // Walk whichever side is shorter.
            if g.degree(v) < len {
                for u in g.neighbors(v) {
                    if let Ok(j) = ids.binary_search(u) {
                        adj[i].insert(j);
                    }
                }
            } else {
                for (j, u) in ids.iter().enumerate() {
                    if g.has_edge(v, *u) {
                        adj[i].insert(j);
                    }
                }
            }
        }
        LocalGraph { ids, adj }
    }

    pub fn whole(g: &GraphSnapshot) -> Self {
        Self::induced(g, 0..g.n())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn all(&self) -> Bits {
        Bits::full(self.len())
    }

    pub fn degree_in(&self, v: usize, within: &Bits) -> usize {
        self.adj[v].intersection_count(within)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_ops() {
        let mut a = Bits::new(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(a.count(), 3);
        assert_eq!(a.first(), Some(0));
        let mut b = Bits::full(130);
        assert!(a.is_subset_of(&b));
        b.difference_with(&a);
        assert_eq!(b.count(), 127);
        assert_eq!(a.intersection_count(&b), 0);
        a.remove(0);
        assert_eq!(a.first(), Some(64));
    }

    #[test]
    fn induced_subgraph() {
        let g = GraphSnapshot::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let l = LocalGraph::induced(&g, [3, 1, 2]);
        assert_eq!(l.ids, vec![1, 2, 3]);
        assert!(l.adj[0].contains(1) && l.adj[1].contains(2) && !l.adj[0].contains(2));
    }
}
