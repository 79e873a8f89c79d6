//! Kruskal's algorithm and the union-find it runs on.

use crate::stream::{EdgeId, GraphSnapshot, VertexId};

/// Disjoint sets with path halving and union by size.
#[derive(Clone, Debug, Default)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Adds singleton sets until there are `n` elements.
    pub fn grow(&mut self, n: usize) {
        while self.parent.len() < n {
            self.parent.push(self.parent.len());
            self.size.push(1);
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Edge ids of a minimum spanning forest, ascending. Ties in weight are
/// broken by edge id.
pub fn kruskal(g: &GraphSnapshot) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.m()).collect();
    order.sort_by(|&a, &b| g.edge(a).weight.cmp(&g.edge(b).weight).then(a.cmp(&b)));
    let mut uf = UnionFind::new(g.n());
    let mut forest: Vec<EdgeId> = order.into_iter().filter(|&id| uf.union(g.edge(id).u, g.edge(id).v)).collect();
    forest.sort_unstable();
    forest
}

pub fn component_count(g: &GraphSnapshot) -> usize {
    let mut uf = UnionFind::new(g.n());
    let merges = g.edges().iter().filter(|e| uf.union(e.u, e.v)).count();
    g.n() - merges
}

/// Whether `edges` form a spanning forest of `g`: acyclic, and as many edges
/// as `n` minus the number of components of `g`.
pub fn is_spanning_forest(g: &GraphSnapshot, edges: &[EdgeId]) -> bool {
    let mut uf = UnionFind::new(g.n());
    for &id in edges {
        if id >= g.m() {
            return false;
        }
        let e = g.edge(id);
        if !uf.union(e.u, e.v) {
            return false;
        }
    }
    edges.len() + component_count(g) == g.n()
}

/// Edge ids along the unique path from `from` to `to` in a forest given as
/// adjacency lists of `(neighbour, edge id)`.
pub fn forest_path(
    forest_adj: &[Vec<(VertexId, EdgeId)>],
    from: VertexId,
    to: VertexId,
) -> Option<Vec<EdgeId>> {
    let n = forest_adj.len();
    let mut via: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(x) = stack.pop() {
        if x == to {
            let mut path = Vec::new();
            let mut cur = to;
            while let Some((prev, id)) = via[cur] {
                path.push(id);
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for &(y, id) in &forest_adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, id));
                stack.push(y);
            }
        }
    }
    None
}
