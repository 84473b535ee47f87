use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Hypergraph, SetSystem, Vertex};
use crate::util::{binomial, from_mask, k_subsets};

/// Traces `e ∩ S` of all edges, relabeled to `[|S|]` in increasing order.
///
/// An edge disjoint from `S` would contribute the empty trace, which set
/// systems cannot hold; that case is an error.
pub fn restrict(f: &Hypergraph, set: &[Vertex]) -> Result<SetSystem> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&v) = sorted.iter().find(|&&v| v == 0 || v as usize > f.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: f.n() });
    }
    if sorted.len() > 64 {
        return Err(Error::TooLarge(format!("trace set of size {} exceeds 64", sorted.len())));
    }
    let mut pos = vec![0u32; f.n() + 1];
    for (i, &v) in sorted.iter().enumerate() {
        pos[v as usize] = i as u32 + 1;
    }
    let mut masks = Vec::with_capacity(f.edge_count());
    for e in f.edges() {
        let m = e.iter().filter(|&&v| pos[v as usize] > 0).fold(0u64, |m, &v| m | 1 << (pos[v as usize] - 1));
        if m == 0 {
            return Err(Error::InvalidEdge { edge: e.to_vec(), reason: "edge misses the trace set".into() });
        }
        masks.push(m);
    }
    SetSystem::from_masks(sorted.len(), f.r(), masks)
}

/// All `r`-subsets of `[n]` whose trace on `[s]` is a member of `gd`, where
/// `r` is the member size cap of `gd`.
pub fn reconstruct(gd: &SetSystem, n: usize) -> Result<Hypergraph> {
    let (s, r) = (gd.s(), gd.r_cap());
    if n < s {
        return Err(invalid(format!("cannot reconstruct on {n} < s = {s} vertices")));
    }
    if r == 0 {
        return Err(invalid("member size cap must be positive"));
    }
    let outside = n - s;
    let total: u128 = gd.masks().iter().map(|m| binomial(outside as u64, (r - m.count_ones() as usize) as u64)).sum();
    if total > 50_000_000 {
        return Err(Error::TooLarge(format!("reconstruction would have {total} edges")));
    }
    let mut edges: Vec<Vec<Vertex>> = Vec::with_capacity(total as usize);
    for &m in gd.masks() {
        let inside = from_mask(m);
        let need = r - inside.len();
        for extra in k_subsets(outside as u32, need as u32) {
            let mut e = inside.clone();
            e.extend(extra.iter().map(|&v| v + s as u32));
            edges.push(e);
        }
    }
    Hypergraph::new(r, n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::construct::{complete, principal_star};

    #[test]
    fn principal_star_round_trip() {
        let f = principal_star(7, 3).unwrap();
        let g = restrict(&f, &[1]).unwrap();
        assert_eq!(g.members(), vec![vec![1]]);
        assert_eq!(reconstruct(&g, 7).unwrap(), f);
    }

    #[test]
    fn complete_graph_traces_itself() {
        let k5 = complete(5, 3).unwrap();
        let g = restrict(&k5, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(reconstruct(&g, 5).unwrap(), k5);
    }

    #[test]
    fn relabels_trace_set() {
        let f = Hypergraph::new(3, 6, [[1, 4, 6], [2, 4, 5]]).unwrap();
        let g = restrict(&f, &[4, 5, 6]).unwrap();
        // 4 -> 1, 5 -> 2, 6 -> 3
        assert_eq!(g.members(), vec![vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn empty_trace_is_an_error() {
        let f = Hypergraph::new(3, 6, [[1, 2, 3], [1, 4, 5]]).unwrap();
        assert!(restrict(&f, &[4, 5]).is_err());
        assert!(restrict(&f, &[7]).is_err());
    }

    #[test]
    fn reconstruction_counts() {
        let g = SetSystem::new(3, 3, [vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        // each pair extends by one of 4 outside vertices
        assert_eq!(reconstruct(&g, 7).unwrap().edge_count(), 12);
        assert!(reconstruct(&g, 2).is_err());
    }
}
