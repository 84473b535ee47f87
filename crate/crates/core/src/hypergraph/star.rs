use serde::Serialize;

use super::{Hypergraph, Vertex};

/// A partition `(A, B)` of the vertex set in which every edge meets `A` in
/// exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarPartition {
    pub a_side: Vec<Vertex>,
    pub b_side: Vec<Vertex>,
}

/// Exact-cover search: each edge picks one representative for `A`, and two
/// vertices sharing an edge can never both be in `A`. Candidates are tried
/// in ascending order, so hubs with small labels are preferred.
pub(super) fn find_star_partition(h: &Hypergraph) -> Option<StarPartition> {
    let n = h.n();
    let mut nbrs = vec![Vec::new(); n + 1];
    for e in h.edges() {
        for &u in e {
            for &v in e {
                if u != v {
                    nbrs[u as usize].push(v);
                }
            }
        }
    }
    for l in &mut nbrs {
        l.sort_unstable();
        l.dedup();
    }
    // state: 0 = free, 1 = in A, 2 = excluded from A
    let mut state = vec![0u8; n + 1];
    let edges: Vec<&[Vertex]> = h.edges().collect();
    if solve(&edges, &nbrs, &mut state) {
        let a_side: Vec<Vertex> = (1..=n as Vertex).filter(|&v| state[v as usize] == 1).collect();
        let b_side = (1..=n as Vertex).filter(|&v| state[v as usize] != 1).collect();
        Some(StarPartition { a_side, b_side })
    } else {
        None
    }
}

fn solve(edges: &[&[Vertex]], nbrs: &[Vec<Vertex>], state: &mut Vec<u8>) -> bool {
    // Most constrained uncovered edge, colex-first among ties.
    let mut pick: Option<(usize, usize)> = None;
    for (i, e) in edges.iter().enumerate() {
        if e.iter().any(|&v| state[v as usize] == 1) {
            continue;
        }
        let free = e.iter().filter(|&&v| state[v as usize] == 0).count();
        if free == 0 {
            return false;
        }
        if pick.is_none_or(|(_, f)| free < f) {
            pick = Some((i, free));
        }
    }
    let Some((i, _)) = pick else { return true };
    for &v in edges[i] {
        if state[v as usize] != 0 {
            continue;
        }
        let saved = state.clone();
        state[v as usize] = 1;
        for &u in &nbrs[v as usize] {
            state[u as usize] = 2;
        }
        if solve(edges, nbrs, state) {
            return true;
        }
        *state = saved;
    }
    false
}
