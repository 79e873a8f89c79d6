//! Admissible sets: independent sets `T` of pending vertices with
//! `|T| ≥ √3·|N(T) ∩ S|`.
//!
//! [`find_admissible_min_conflict`] does not enumerate subsets of `P`.
//! Every conflict set `N(T) ∩ S` is a union of *profiles* `N(p) ∩ S`, so it
//! walks the distinct unions `Q` in order of size and asks the exact MIS
//! solver for the largest independent set among the pending vertices whose
//! profile lies inside `Q`. The first size with a success is the minimum
//! conflict. [`find_admissible_exhaustive`] is the plain subset enumeration
//! it is tested against.

use std::collections::HashSet;

use super::sqrt3::at_least_sqrt3_times;
use super::AlgorithmError;
use crate::bits::{Bits, LocalGraph};
use crate::oracles::MisSolver;
use crate::stream::{GraphSnapshot, VertexId};

pub const DEFAULT_ADMISSIBLE_CAP: usize = 24;

/// Size guards for the search. `max_profiles` bounds the number of distinct
/// profiles (the union walk is exponential in it); `max_kernel` bounds the
/// number of pending vertices that have a pending neighbour (the MIS calls
/// are exponential in it).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibleConfig {
    pub max_profiles: usize,
    pub max_kernel: usize,
}

impl Default for AdmissibleConfig {
    fn default() -> Self {
        Self::uniform(DEFAULT_ADMISSIBLE_CAP)
    }
}

impl AdmissibleConfig {
    pub fn uniform(cap: usize) -> Self {
        AdmissibleConfig { max_profiles: cap, max_kernel: cap }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    /// `T`, ascending.
    pub vertices: Vec<VertexId>,
    /// `N(T) ∩ S`, ascending.
    pub conflict: Vec<VertexId>,
}

impl AdmissibleSet {
    pub fn conflict_size(&self) -> usize {
        self.conflict.len()
    }
}

/// `N(T) ∩ S`, ascending. `s` must be sorted.
pub fn conflict_of(g: &GraphSnapshot, s: &[VertexId], t: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> =
        t.iter().flat_map(|&x| g.neighbors(x).iter().copied()).filter(|u| s.binary_search(u).is_ok()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether `t` is a nonempty admissible set for `s` and `p` (both sorted).
pub fn is_admissible(g: &GraphSnapshot, s: &[VertexId], p: &[VertexId], t: &[VertexId]) -> bool {
    !t.is_empty()
        && t.iter().all(|x| p.binary_search(x).is_ok())
        && crate::oracles::is_independent(g, t)
        && at_least_sqrt3_times(t.len(), conflict_of(g, s, t).len())
}

/// An admissible set of minimum conflict, preferring larger `T`, then the
/// lexicographically smallest sorted `T`. `s` and `p` must be sorted and
/// disjoint. `None` if no nonempty admissible set exists.
pub fn find_admissible_min_conflict(
    g: &GraphSnapshot,
    s: &[VertexId],
    p: &[VertexId],
    config: AdmissibleConfig,
) -> Result<Option<AdmissibleSet>, AlgorithmError> {
    if p.is_empty() {
        return Ok(None);
    }
    let local = LocalGraph::induced(g, p.iter().copied());
    let kernel = (0..local.len()).filter(|&i| !local.adj[i].is_empty()).count();
    if kernel > config.max_kernel {
        return Err(AlgorithmError::SizeGuard { what: "pending kernel", size: kernel, cap: config.max_kernel });
    }

    let profiles: Vec<Bits> = local
        .ids
        .iter()
        .map(|&x| {
            let mut b = Bits::new(s.len());
            for u in g.neighbors(x) {
                if let Ok(i) = s.binary_search(u) {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    let mut distinct: Vec<Bits> = profiles.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() > config.max_profiles {
        return Err(AlgorithmError::SizeGuard {
            what: "distinct pending profiles",
            size: distinct.len(),
            cap: config.max_profiles,
        });
    }

    let mut unions: HashSet<Bits> = HashSet::from([Bits::new(s.len())]);
    for d in &distinct {
        let grown: Vec<Bits> = unions
            .iter()
            .map(|u| {
                let mut w = u.clone();
                w.union_with(d);
                w
            })
            .collect();
        unions.extend(grown);
    }
    let mut unions: Vec<(usize, Bits)> = unions.into_iter().map(|u| (u.count(), u)).collect();
    unions.sort();

    let mut solver = MisSolver::new(&local);
    let mut start = 0;
    while start < unions.len() {
        let k = unions[start].0;
        let end = start + unions[start..].iter().take_while(|(c, _)| *c == k).count();
        let need = (0..).find(|&t| t >= 1 && at_least_sqrt3_times(t, k)).expect("some size suffices");
        let mut winners: Vec<(usize, Bits)> = Vec::new();
        for (_, q) in &unions[start..end] {
            let mut cand = Bits::new(local.len());
            for (i, prof) in profiles.iter().enumerate() {
                if prof.is_subset_of(q) {
                    cand.insert(i);
                }
            }
            if cand.count() >= need && solver.reaches(&cand, need) {
                winners.push((solver.maximum_size(&cand), cand));
            }
        }
        if let Some(best) = winners.iter().map(|w| w.0).max() {
            let t = winners
                .iter()
                .filter(|w| w.0 == best)
                .map(|(_, cand)| solver.lex_smallest_maximum(cand))
                .min()
                .expect("at least one winner");
            let vertices: Vec<VertexId> = t.into_iter().map(|i| local.ids[i]).collect();
            let conflict = conflict_of(g, s, &vertices);
            debug_assert_eq!(conflict.len(), k);
            return Ok(Some(AdmissibleSet { vertices, conflict }));
        }
        start = end;
    }
    Ok(None)
}

/// The same search by enumerating every subset of `p`. For cross-checks
/// only; `p` must have at most 20 vertices.
pub fn find_admissible_exhaustive(g: &GraphSnapshot, s: &[VertexId], p: &[VertexId]) -> Option<AdmissibleSet> {
    assert!(p.len() <= 20, "exhaustive admissible search is limited to 20 pending vertices");
    let mut best: Option<(usize, usize, Vec<VertexId>)> = None;
    for mask in 1u32..(1u32 << p.len()) {
        let t: Vec<VertexId> = (0..p.len()).filter(|i| mask & (1 << i) != 0).map(|i| p[i]).collect();
        if !crate::oracles::is_independent(g, &t) {
            continue;
        }
        let c = conflict_of(g, s, &t).len();
        if !at_least_sqrt3_times(t.len(), c) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bc, bt, bv)) => (c, std::cmp::Reverse(t.len()), &t) < (*bc, std::cmp::Reverse(*bt), bv),
        };
        if better {
            best = Some((c, t.len(), t));
        }
    }
    best.map(|(_, _, vertices)| AdmissibleSet { conflict: conflict_of(g, s, &vertices), vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn search(g: &GraphSnapshot, s: &[usize], p: &[usize]) -> Option<AdmissibleSet> {
        let fast = find_admissible_min_conflict(g, s, p, AdmissibleConfig::default()).unwrap();
        assert_eq!(fast, find_admissible_exhaustive(g, s, p));
        fast
    }

    #[test]
    fn two_leaves_outweigh_one_holder() {
        // u=0 in S; x=1, y=2 pending, both adjacent to u
        let g = GraphSnapshot::from_edges(3, [(0, 1), (0, 2)]);
        let t = search(&g, &[0], &[1, 2]).unwrap();
        assert_eq!(t.vertices, vec![1, 2]);
        assert_eq!(t.conflict, vec![0]);
    }

    #[test]
    fn one_leaf_is_not_enough() {
        let g = GraphSnapshot::from_edges(2, [(0, 1)]);
        assert_eq!(search(&g, &[0], &[1]), None);
    }

    #[test]
    fn free_vertex_is_admissible() {
        let g = GraphSnapshot::from_edges(1, []);
        let t = search(&g, &[], &[0]).unwrap();
        assert_eq!(t.vertices, vec![0]);
        assert!(t.conflict.is_empty());
    }

    #[test]
    fn guards_trip() {
        // 26 pending vertices each seeing a different holder.
        let n = 52;
        let g = GraphSnapshot::from_edges(n, (0..26).map(|i| (i, 26 + i)));
        let s: Vec<usize> = (0..26).collect();
        let p: Vec<usize> = (26..52).collect();
        assert!(matches!(
            find_admissible_min_conflict(&g, &s, &p, AdmissibleConfig::default()),
            Err(AlgorithmError::SizeGuard { .. })
        ));
    }
}
