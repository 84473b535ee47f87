//! Uniform hypergraphs (`r`-graphs) and bounded-size set systems.
//!
//! Vertices are 1-based. Every edge is stored ascending and the edge list is
//! kept in strictly increasing colex order, so two equal hypergraphs have
//! identical internal representations.

pub mod canon;
pub mod construct;
pub mod search;
mod setsystem;
mod star;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::util::{colex_cmp, to_mask};

pub use canon::{CanonConfig, CanonicalKey};
pub use setsystem::SetSystem;
pub use star::StarPartition;

pub type Vertex = u32;

/// An `r`-uniform hypergraph on vertex set `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    // Flat storage, stride `r`.
    edges: Vec<Vertex>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("r", &self.r)
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Hypergraph {
    /// Builds an `r`-graph; edges may be given unsorted and with duplicates.
    pub fn new<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if r == 0 {
            return Err(invalid("uniformity r must be positive"));
        }
        let mut list: Vec<Vec<Vertex>> = Vec::new();
        for e in edges {
            let mut e = e.as_ref().to_vec();
            e.sort_unstable();
            if e.len() != r {
                return Err(Error::InvalidEdge { edge: e, reason: format!("expected {r} vertices") });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge { edge: e, reason: "repeated vertex".into() });
            }
            if let Some(&v) = e.iter().find(|&&v| v == 0 || v as usize > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            list.push(e);
        }
        list.sort_by(|a, b| colex_cmp(a, b));
        list.dedup();
        Ok(Self { r, n, edges: list.concat() })
    }

    /// Edgeless `r`-graph on `[n]`.
    pub fn empty(r: usize, n: usize) -> Self {
        Self { r, n, edges: Vec::new() }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len() / self.r
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i * self.r..(i + 1) * self.r]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[Vertex]> + '_ {
        self.edges.chunks_exact(self.r)
    }

    pub fn contains_edge(&self, e: &[Vertex]) -> bool {
        if e.len() != self.r {
            return false;
        }
        let m = self.edge_count();
        let (mut lo, mut hi) = (0usize, m);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match colex_cmp(self.edge(mid), e) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return true,
            }
        }
        false
    }

    /// Degrees indexed by `v - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &v in &self.edges {
            d[v as usize - 1] += 1;
        }
        d
    }

    /// Vertices that lie in at least one edge.
    pub fn non_isolated(&self) -> Vec<Vertex> {
        self.degrees().iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, _)| i as Vertex + 1).collect()
    }

    /// Edge bitmasks; only available when `n <= 64`.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooLarge(format!("{} vertices exceed the 64-vertex mask width", self.n)));
        }
        Ok(self.edges().map(to_mask).collect())
    }

    fn check_vertex_set(&self, set: &[Vertex]) -> Result<Vec<Vertex>> {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&v) = s.iter().find(|&&v| v == 0 || v as usize > self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(s)
    }

    /// The link of `set`: every `J` disjoint from `set` with `set ∪ J` an edge.
    ///
    /// If `set` is itself an edge the link is `{∅}`; the result is colex-sorted.
    pub fn link(&self, set: &[Vertex]) -> Result<Vec<Vec<Vertex>>> {
        let set = self.check_vertex_set(set)?;
        let mut out: Vec<Vec<Vertex>> = self
            .edges()
            .filter(|e| set.iter().all(|v| e.binary_search(v).is_ok()))
            .map(|e| e.iter().copied().filter(|v| set.binary_search(v).is_err()).collect())
            .collect();
        out.sort_by(|a, b| colex_cmp(a, b));
        Ok(out)
    }

    /// The sub-hypergraph induced by `set`, relabeled to `[|set|]` in order.
    pub fn induced(&self, set: &[Vertex]) -> Result<Hypergraph> {
        let set = self.check_vertex_set(set)?;
        let edges: Vec<Vec<Vertex>> = self
            .edges()
            .filter_map(|e| {
                e.iter().map(|v| set.binary_search(v).ok().map(|i| i as Vertex + 1)).collect::<Option<Vec<_>>>()
            })
            .collect();
        Hypergraph::new(self.r, set.len(), edges)
    }

    pub fn is_intersecting(&self) -> bool {
        let m = self.edge_count();
        (0..m).all(|i| {
            let a = self.edge(i);
            (i + 1..m).all(|j| {
                let b = self.edge(j);
                a.iter().any(|v| b.binary_search(v).is_ok())
            })
        })
    }

    /// Smallest vertex contained in every edge. The edgeless graph is
    /// vacuously principal at vertex 1.
    pub fn common_vertex(&self) -> Option<Vertex> {
        if self.is_empty() {
            return Some(1);
        }
        self.edge(0).iter().copied().find(|v| self.edges().all(|e| e.binary_search(v).is_ok()))
    }

    /// Pairs of non-isolated vertices not contained together in any edge,
    /// in colex order.
    pub fn uncovered_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.n;
        let mut covered = vec![false; n * n];
        for e in self.edges() {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    covered[(u as usize - 1) * n + v as usize - 1] = true;
                }
            }
        }
        let active = self.non_isolated();
        let mut out = Vec::new();
        for (j, &v) in active.iter().enumerate() {
            for &u in &active[..j] {
                if !covered[(u as usize - 1) * n + v as usize - 1] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff every pair of non-isolated vertices lies in a common edge.
    pub fn covers_pairs(&self) -> bool {
        self.uncovered_pairs().is_empty()
    }

    /// Adds, for every uncovered pair, one edge made of the pair and `r - 2`
    /// fresh vertices. Fresh vertices are allocated in blocks following the
    /// colex order of the pairs.
    pub fn extension(&self) -> Result<Hypergraph> {
        if self.r < 2 {
            return Err(invalid("extension needs r >= 2"));
        }
        let pairs = self.uncovered_pairs();
        let block = self.r - 2;
        let n = self.n + block * pairs.len();
        let mut edges: Vec<Vec<Vertex>> = self.edges().map(|e| e.to_vec()).collect();
        for (k, &(u, v)) in pairs.iter().enumerate() {
            let base = (self.n + k * block) as Vertex;
            let mut e = vec![u, v];
            e.extend((1..=block as Vertex).map(|i| base + i));
            edges.push(e);
        }
        Hypergraph::new(self.r, n, edges)
    }

    /// Clones `v` into `k` copies with identical links. `v` itself is kept as
    /// the first copy and the other `k - 1` copies are appended after `n`;
    /// `k = 0` deletes `v` and shifts the higher vertices down.
    pub fn clone_vertex(&self, v: Vertex, k: usize) -> Result<Hypergraph> {
        if v == 0 || v as usize > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if k == 0 {
            let edges: Vec<Vec<Vertex>> = self
                .edges()
                .filter(|e| e.binary_search(&v).is_err())
                .map(|e| e.iter().map(|&u| if u > v { u - 1 } else { u }).collect())
                .collect();
            return Hypergraph::new(self.r, self.n - 1, edges);
        }
        let mut edges: Vec<Vec<Vertex>> = self.edges().map(|e| e.to_vec()).collect();
        for c in 1..k {
            let w = (self.n + c) as Vertex;
            for e in self.edges().filter(|e| e.binary_search(&v).is_ok()) {
                edges.push(e.iter().map(|&u| if u == v { w } else { u }).collect());
            }
        }
        Hypergraph::new(self.r, self.n + k - 1, edges)
    }

    /// Edge-wise union on `[max(n)]`.
    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.r != other.r {
            return Err(invalid("union of hypergraphs with different uniformity"));
        }
        Hypergraph::new(self.r, self.n.max(other.n), self.edges().chain(other.edges()))
    }

    /// Same edges on a larger vertex set.
    pub fn with_vertices(&self, n: usize) -> Result<Hypergraph> {
        if n < self.n {
            return Err(invalid("cannot shrink the vertex set"));
        }
        Ok(Hypergraph { r: self.r, n, edges: self.edges.clone() })
    }

    /// Applies a vertex bijection given as `perm[v - 1] = image of v`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p == 0 || p as usize > self.n || std::mem::replace(&mut seen[p as usize - 1], true) {
                return Err(invalid("relabeling is not a permutation of [n]"));
            }
        }
        Hypergraph::new(
            self.r,
            self.n,
            self.edges().map(|e| e.iter().map(|&v| perm[v as usize - 1]).collect::<Vec<_>>()),
        )
    }

    pub fn canonical_key(&self) -> Result<CanonicalKey> {
        self.canonical_key_with(&CanonConfig::default())
    }

    pub fn canonical_key_with(&self, cfg: &CanonConfig) -> Result<CanonicalKey> {
        canon::canonical_key(self.n, &self.edge_masks()?, cfg)
    }

    pub fn is_isomorphic(&self, other: &Hypergraph) -> Result<bool> {
        Ok(self.r == other.r && self.canonical_key()? == other.canonical_key()?)
    }

    /// Searches for a star partition `(A, B)`; see [`StarPartition`].
    pub fn star_partition(&self) -> Option<StarPartition> {
        star::find_star_partition(self)
    }

    /// True iff `self` is a star whose hub side satisfies
    /// `| |A| - n/r | <= eps * n`.
    pub fn is_balanced(&self, eps: f64) -> bool {
        match self.star_partition() {
            Some(p) => {
                let n = self.n as f64;
                (p.a_side.len() as f64 - n / self.r as f64).abs() <= eps * n
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::construct::*;
    use super::*;

    #[test]
    fn edges_are_canonicalised() {
        let h = Hypergraph::new(3, 5, [vec![3, 2, 1], vec![5, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![&[1, 2, 3][..], &[1, 2, 5][..]]);
        assert!(h.contains_edge(&[1, 2, 5]));
        assert!(!h.contains_edge(&[1, 3, 5]));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Hypergraph::new(3, 4, [vec![1, 2]]), Err(Error::InvalidEdge { .. })));
        assert!(matches!(Hypergraph::new(2, 4, [vec![1, 1]]), Err(Error::InvalidEdge { .. })));
        assert!(matches!(Hypergraph::new(2, 4, [vec![1, 5]]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn link_examples() {
        let single = Hypergraph::new(3, 3, [[1, 2, 3]]).unwrap();
        assert_eq!(single.link(&[1]).unwrap(), vec![vec![2, 3]]);
        assert_eq!(single.link(&[1, 2, 3]).unwrap(), vec![Vec::<u32>::new()]);
        let k4 = complete(4, 3).unwrap();
        assert_eq!(k4.link(&[1, 2]).unwrap(), vec![vec![3], vec![4]]);
        assert!(k4.link(&[7]).is_err());
    }

    #[test]
    fn induced_examples() {
        let k5 = complete(5, 3).unwrap();
        assert_eq!(k5.induced(&[1, 2, 4, 5]).unwrap(), complete(4, 3).unwrap());
        let st = star(1, 3, 3).unwrap();
        assert_eq!(st.induced(&[2, 3, 4]).unwrap().edge_count(), 0);
        let m2 = matching2(3).unwrap();
        assert_eq!(m2.induced(&[1, 2, 3, 4, 5]).unwrap().edge_count(), 1);
    }

    #[test]
    fn intersecting_and_principal() {
        assert!(!matching2(4).unwrap().is_intersecting());
        let k5 = complete(5, 3).unwrap();
        assert!(k5.is_intersecting());
        assert_eq!(k5.common_vertex(), None);
        let s1 = principal_star(9, 4).unwrap();
        assert!(s1.is_intersecting());
        assert_eq!(s1.common_vertex(), Some(1));
        assert_eq!(Hypergraph::empty(3, 4).common_vertex(), Some(1));
        assert!(Hypergraph::empty(3, 4).is_intersecting());
    }

    #[test]
    fn pair_covering() {
        assert!(complete(5, 3).unwrap().covers_pairs());
        let m2 = matching2(3).unwrap();
        assert!(!m2.covers_pairs());
        assert!(m2.uncovered_pairs().contains(&(1, 4)));
        // Star with two hubs: the hub pair is never covered.
        let st = star(2, 5, 3).unwrap();
        assert_eq!(st.uncovered_pairs(), vec![(1, 2)]);
    }

    #[test]
    fn extension_counts() {
        let k33 = matching2(3).unwrap().extension().unwrap();
        assert_eq!((k33.n(), k33.edge_count()), (15, 11));
        let k44 = matching2(4).unwrap().extension().unwrap();
        assert_eq!((k44.n(), k44.edge_count()), (40, 18));
        let k5 = complete(5, 3).unwrap();
        assert_eq!(k5.extension().unwrap(), k5);
        // Extension covers every pair of the original vertex set.
        let restricted = k33.induced(&(1..=6).collect::<Vec<_>>()).unwrap();
        assert_eq!(restricted.edge_count(), 2);
        let all_pairs_covered =
            (1..=6u32).all(|u| (u + 1..=6).all(|v| k33.edges().any(|e| e.contains(&u) && e.contains(&v))));
        assert!(all_pairs_covered);
    }

    #[test]
    fn cloning() {
        let e = Hypergraph::new(3, 3, [[1, 2, 3]]).unwrap();
        let c = e.clone_vertex(1, 2).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![&[1, 2, 3][..], &[2, 3, 4][..]]);
        assert_eq!(c.link(&[4]).unwrap(), e.link(&[1]).unwrap());
        assert_eq!(e.clone_vertex(2, 1).unwrap(), e);
        let k4 = complete(4, 3).unwrap();
        assert_eq!(k4.clone_vertex(2, 0).unwrap(), complete(3, 3).unwrap());
    }

    #[test]
    fn relabel_checks_permutation() {
        let k4 = complete(4, 3).unwrap();
        assert_eq!(k4.relabel(&[4, 3, 2, 1]).unwrap(), k4);
        assert!(k4.relabel(&[1, 1, 2, 3]).is_err());
    }
}
