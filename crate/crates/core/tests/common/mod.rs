//! Brute-force reference computations shared by the integration tests.
//! None of these call into the library's solvers.

#![allow(dead_code)]

use lateops::ledger::{Action, DecisionModel, Item, ItemKind, ItemState};
use lateops::GraphSnapshot;

pub fn adjacency_masks(g: &GraphSnapshot) -> Vec<u64> {
    assert!(g.n() <= 64);
    let mut masks = vec![0u64; g.n()];
    for e in g.edges() {
        masks[e.u] |= 1 << e.v;
        masks[e.v] |= 1 << e.u;
    }
    masks
}

pub fn is_independent_mask(masks: &[u64], set: u64) -> bool {
    (0..masks.len()).all(|v| set >> v & 1 == 0 || masks[v] & set == 0)
}

/// Maximum independent set by subset enumeration; the smallest mask among
/// the largest sets.
pub fn brute_mis(g: &GraphSnapshot) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 22, "brute force MIS needs n <= 22");
    let masks = adjacency_masks(g);
    let mut best = 0u64;
    for set in 0u64..1 << n {
        if set.count_ones() > best.count_ones() && is_independent_mask(&masks, set) {
            best = set;
        }
    }
    (0..n).filter(|v| best >> v & 1 == 1).collect()
}

pub fn brute_min_vertex_cover(g: &GraphSnapshot) -> usize {
    let n = g.n();
    assert!(n <= 22);
    (0u64..1 << n)
        .filter(|set| g.edges().iter().all(|e| set >> e.u & 1 == 1 || set >> e.v & 1 == 1))
        .map(|set| set.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Minimum vertex cover by branching on a maximum-degree vertex: take it,
/// or take all of its neighbours.
pub fn branch_min_vertex_cover(masks: &[u64], alive: u64) -> u32 {
    let mut best_v = None;
    let mut best_d = 0;
    for v in 0..masks.len() {
        if alive >> v & 1 == 1 {
            let d = (masks[v] & alive).count_ones();
            if d > best_d {
                best_d = d;
                best_v = Some(v);
            }
        }
    }
    let Some(v) = best_v else { return 0 };
    let take_v = 1 + branch_min_vertex_cover(masks, alive & !(1 << v));
    let nbrs = masks[v] & alive;
    let take_n = nbrs.count_ones() + branch_min_vertex_cover(masks, alive & !nbrs & !(1 << v));
    take_v.min(take_n)
}

/// Maximum matching size: the lowest free vertex is either left unmatched
/// or matched to a free neighbour.
pub fn brute_max_matching(g: &GraphSnapshot) -> usize {
    fn go(masks: &[u64], free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(masks, rest);
        let mut nb = masks[v] & rest;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            best = best.max(1 + go(masks, rest & !(1 << u)));
        }
        best
    }
    let masks = adjacency_masks(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    go(&masks, all)
}

/// Minimum spanning forest weight for integer weights, by Prim's algorithm
/// started from every unvisited vertex.
pub fn prim_weight(g: &GraphSnapshot) -> i64 {
    let n = g.n();
    let mut w = vec![vec![None::<i64>; n]; n];
    for e in g.edges() {
        assert!(e.weight.is_integer(), "prim_weight expects integer weights");
        let x = e.weight.to_integer();
        let cell = &mut w[e.u][e.v];
        *cell = Some(cell.map_or(x, |y| y.min(x)));
        w[e.v][e.u] = *cell;
    }
    let mut seen = vec![false; n];
    let mut total = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut dist: Vec<Option<i64>> = vec![None; n];
        dist[root] = Some(0);
        loop {
            let next = (0..n).filter(|&v| !seen[v] && dist[v].is_some()).min_by_key(|&v| dist[v].unwrap());
            let Some(v) = next else { break };
            seen[v] = true;
            total += dist[v].unwrap();
            for u in 0..n {
                if let Some(x) = w[v][u] {
                    if !seen[u] && dist[u].is_none_or(|d| x < d) {
                        dist[u] = Some(x);
                    }
                }
            }
        }
    }
    total
}

/// Whether some nonempty independent `T ⊆ pending` has
/// `|T|² ≥ 3·|N(T) ∩ S|²`.
pub fn brute_admissible_exists(g: &GraphSnapshot, s: &[usize], pending: &[usize]) -> bool {
    let masks = adjacency_masks(g);
    let s_mask: u64 = s.iter().map(|&v| 1u64 << v).sum();
    let k = pending.len();
    assert!(k <= 20);
    (1u64..1 << k).any(|sub| {
        let t: u64 = (0..k).filter(|i| sub >> i & 1 == 1).map(|i| 1u64 << pending[i]).sum();
        if !is_independent_mask(&masks, t) {
            return false;
        }
        let nbrs = (0..g.n()).filter(|v| t >> v & 1 == 1).fold(0u64, |acc, v| acc | masks[v]);
        let c = (nbrs & s_mask).count_ones() as u64;
        let size = t.count_ones() as u64;
        size * size >= 3 * c * c
    })
}

/// Whether the matching (edge ids) has an augmenting path of length 1 or 3.
pub fn brute_short_augmenting_path(g: &GraphSnapshot, matching: &[usize]) -> bool {
    let mut mate = vec![None; g.n()];
    for &id in matching {
        let e = g.edge(id);
        mate[e.u] = Some(e.v);
        mate[e.v] = Some(e.u);
    }
    let free = |x: usize| mate[x].is_none();
    if g.edges().iter().any(|e| free(e.u) && free(e.v)) {
        return true;
    }
    matching.iter().any(|&id| {
        let e = g.edge(id);
        [(e.u, e.v), (e.v, e.u)].into_iter().any(|(a, b)| {
            g.neighbors(a).iter().any(|&x| free(x) && g.neighbors(b).iter().any(|&y| free(y) && y != x))
        })
    })
}

/// Independent statement of which moves each model allows, as a state
/// machine over item states.
#[derive(Clone, Debug)]
pub struct ReferenceLedger {
    pub model: DecisionModel,
    pub kind: ItemKind,
    pub states: Vec<ItemState>,
    pub open: bool,
    pub finalized: bool,
}

impl ReferenceLedger {
    pub fn new(model: DecisionModel, kind: ItemKind) -> Self {
        ReferenceLedger { model, kind, states: Vec::new(), open: false, finalized: false }
    }

    fn immediate(&self) -> bool {
        matches!(self.model, DecisionModel::Standard | DecisionModel::LateReject)
    }

    fn late_accept(&self) -> bool {
        matches!(self.model, DecisionModel::LateAccept | DecisionModel::LateAcceptThenReject)
    }

    fn late_reject(&self) -> bool {
        matches!(self.model, DecisionModel::LateReject | DecisionModel::LateAcceptThenReject)
    }

    /// Each method returns whether the move is legal, and applies it if so.
    pub fn begin_step(&mut self) -> bool {
        if self.finalized || self.open {
            return false;
        }
        self.states.push(ItemState::Pending);
        self.open = true;
        true
    }

    pub fn end_step(&mut self) -> bool {
        if self.finalized || !self.open {
            return false;
        }
        if self.immediate() && *self.states.last().unwrap() == ItemState::Pending {
            return false;
        }
        self.open = false;
        true
    }

    fn target(&self, item: Item) -> Option<usize> {
        (item.kind() == self.kind && item.id() < self.states.len()).then_some(item.id())
    }

    pub fn apply(&mut self, action: Action) -> bool {
        if self.finalized || !self.open {
            return false;
        }
        let cur = self.states.len() - 1;
        let (id, from, to) = match action {
            Action::AcceptNow => (cur, ItemState::Pending, ItemState::Accepted),
            Action::RejectNow if self.immediate() => (cur, ItemState::Pending, ItemState::Rejected),
            Action::LateAccept(item) if self.late_accept() => match self.target(item) {
                Some(id) => (id, ItemState::Pending, ItemState::Accepted),
                None => return false,
            },
            Action::LateReject(item) if self.late_reject() => match self.target(item) {
                Some(id) => (id, ItemState::Accepted, ItemState::Rejected),
                None => return false,
            },
            _ => return false,
        };
        if self.states[id] != from {
            return false;
        }
        self.states[id] = to;
        true
    }

    pub fn finalize(&mut self) -> bool {
        if self.finalized || (self.open && !self.end_step()) {
            return false;
        }
        self.finalized = true;
        true
    }
}

/// Maximum matching of a forest by repeatedly matching a leaf to its
/// neighbour. Panics if `g` has a cycle.
pub fn forest_leaf_matching(g: &GraphSnapshot) -> usize {
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    let mut size = 0;
    loop {
        if let Some(leaf) = (0..g.n()).find(|&v| adj[v].len() == 1) {
            let parent = *adj[leaf].iter().next().unwrap();
            size += 1;
            for x in [leaf, parent] {
                for y in std::mem::take(&mut adj[x]) {
                    adj[y].remove(&x);
                }
            }
        } else {
            assert!(adj.iter().all(|a| a.is_empty()), "forest_leaf_matching needs a forest");
            return size;
        }
    }
}
