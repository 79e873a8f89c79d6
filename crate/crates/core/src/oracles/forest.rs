//! Linear-time exact optima on acyclic graphs, by repeatedly resolving a
//! leaf. Several adversaries emit forests and certify their bounds with these.

use std::collections::VecDeque;

use crate::stream::GraphSnapshot;

fn is_acyclic(g: &GraphSnapshot) -> bool {
    super::spanning_forest::component_count(g) + g.m() == g.n()
}

/// Peels leaves. `on_leaf` gets a leaf `v` and its live neighbour `u`
/// (`None` if `v` is isolated) and returns the vertices to delete.
fn peel(g: &GraphSnapshot, mut on_leaf: impl FnMut(usize, Option<usize>) -> Vec<usize>) {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        let u = g.neighbors(v).iter().copied().find(|&u| alive[u]);
        for x in on_leaf(v, u) {
            if !alive[x] {
                continue;
            }
            alive[x] = false;
            for &y in g.neighbors(x) {
                if alive[y] {
                    degree[y] -= 1;
                    if degree[y] <= 1 {
                        queue.push_back(y);
                    }
                }
            }
        }
    }
}

/// Maximum independent set size of a forest; `None` if `g` has a cycle.
pub fn forest_max_independent_set(g: &GraphSnapshot) -> Option<usize> {
    if !is_acyclic(g) {
        return None;
    }
    let mut size = 0;
    peel(g, |v, u| {
        size += 1;
        std::iter::once(v).chain(u).collect()
    });
    Some(size)
}

/// Minimum vertex cover size of a forest; `None` if `g` has a cycle.
pub fn forest_min_vertex_cover(g: &GraphSnapshot) -> Option<usize> {
    forest_max_independent_set(g).map(|mis| g.n() - mis)
}

/// Maximum matching size of a forest; `None` if `g` has a cycle.
pub fn forest_max_matching(g: &GraphSnapshot) -> Option<usize> {
    if !is_acyclic(g) {
        return None;
    }
    let mut size = 0;
    peel(g, |v, u| match u {
        Some(u) => {
            size += 1;
            vec![v, u]
        }
        None => vec![v],
    });
    Some(size)
}
