//! Backtracking search for homomorphisms and subgraph embeddings.
//!
//! Vertices of the pattern are placed in an order that keeps each new vertex
//! attached to already placed ones. After every placement each pattern edge
//! touching the new vertex is checked: the images of its placed vertices must
//! be distinct and contained in some host edge, and a fully placed edge must
//! map onto a host edge.

use std::collections::HashSet;

use serde::Serialize;

use super::{Hypergraph, Vertex};
use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Outcome of a bounded search. Budget exhaustion is never reported as a
/// negative answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchResult {
    /// `map[v - 1]` is the image of pattern vertex `v`.
    Found {
        map: Vec<Vertex>,
        nodes: u64,
    },
    NotFound {
        nodes: u64,
    },
    Inconclusive {
        nodes: u64,
    },
}

impl SearchResult {
    /// `Some(true/false)` when decided, `None` when the budget ran out.
    pub fn decided(&self) -> Option<bool> {
        match self {
            SearchResult::Found { .. } => Some(true),
            SearchResult::NotFound { .. } => Some(false),
            SearchResult::Inconclusive { .. } => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SearchResult::Found { nodes, .. }
            | SearchResult::NotFound { nodes }
            | SearchResult::Inconclusive { nodes } => *nodes,
        }
    }
}

/// Is there a (not necessarily injective) map `V(f) -> V(g)` sending every
/// edge of `f` onto an edge of `g`?
pub fn has_homomorphism(f: &Hypergraph, g: &Hypergraph, budget: u64) -> Result<SearchResult> {
    Matcher::new(f, g, false, budget)?.run()
}

/// Does `g` contain a copy of `f` (an injective edge-preserving map)?
pub fn contains_subgraph(g: &Hypergraph, f: &Hypergraph, budget: u64) -> Result<SearchResult> {
    Matcher::new(f, g, true, budget)?.run()
}

struct Matcher {
    injective: bool,
    budget: u64,
    nodes: u64,
    f_n: usize,
    g_n: usize,
    order: Vec<usize>,
    // pattern edges (0-based vertices)
    f_edges: Vec<Vec<usize>>,
    f_inc: Vec<Vec<usize>>,
    f_deg: Vec<usize>,
    f_nbrs: Vec<Vec<usize>>,
    g_edges: HashSet<u64>,
    g_partial: HashSet<u64>,
    g_deg: Vec<usize>,
    g_nbr: Vec<u64>,
    g_active: u64,
    map: Vec<Option<usize>>,
    used: u64,
    trivial: Option<bool>,
}

impl Matcher {
    fn new(f: &Hypergraph, g: &Hypergraph, injective: bool, budget: u64) -> Result<Self> {
        if g.n() > 64 {
            return Err(Error::TooLarge(format!("host graph has {} > 64 vertices", g.n())));
        }
        let f_n = f.n();
        let f_edges: Vec<Vec<usize>> = f.edges().map(|e| e.iter().map(|&v| v as usize - 1).collect()).collect();
        let mut f_inc = vec![Vec::new(); f_n];
        let mut f_nbrs = vec![Vec::new(); f_n];
        for (i, e) in f_edges.iter().enumerate() {
            for &v in e {
                f_inc[v].push(i);
                f_nbrs[v].extend(e.iter().copied().filter(|&u| u != v));
            }
        }
        for l in &mut f_nbrs {
            l.sort_unstable();
            l.dedup();
        }
        let f_deg: Vec<usize> = f_inc.iter().map(Vec::len).collect();

        let masks = g.edge_masks()?;
        let mut g_partial = HashSet::new();
        for &m in &masks {
            // every nonempty sub-mask
            let mut sub = m;
            while sub != 0 {
                g_partial.insert(sub);
                sub = (sub - 1) & m;
            }
        }
        let mut g_deg = vec![0usize; g.n()];
        let mut g_nbr = vec![0u64; g.n()];
        for &m in &masks {
            let mut rest = m;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                g_deg[b] += 1;
                g_nbr[b] |= m & !(1 << b);
                rest &= rest - 1;
            }
        }
        let g_active = masks.iter().fold(0u64, |a, &m| a | m);

        let mut trivial = None;
        if (!f_edges.is_empty() && (f.r() != g.r() || masks.is_empty())) || (injective && f_n > g.n()) {
            trivial = Some(false);
        } else if f_edges.is_empty() && (f_n == 0 || g.n() > 0) {
            trivial = Some(true);
        }

        let order = placement_order(f_n, &f_deg, &f_nbrs);
        Ok(Self {
            injective,
            budget,
            nodes: 0,
            f_n,
            g_n: g.n(),
            order,
            f_edges,
            f_inc,
            f_deg,
            f_nbrs,
            g_edges: masks.into_iter().collect(),
            g_partial,
            g_deg,
            g_nbr,
            g_active,
            map: vec![None; f_n],
            used: 0,
            trivial,
        })
    }

    fn run(mut self) -> Result<SearchResult> {
        match self.trivial {
            Some(false) => return Ok(SearchResult::NotFound { nodes: 0 }),
            Some(true) if self.f_edges.is_empty() => {
                let map = if self.injective { (1..=self.f_n as Vertex).collect() } else { vec![1; self.f_n] };
                return Ok(SearchResult::Found { map, nodes: 0 });
            }
            _ => {}
        }
        match self.dfs(0) {
            Some(true) => {
                let map = self.map.iter().map(|x| x.expect("complete map") as Vertex + 1).collect();
                Ok(SearchResult::Found { map, nodes: self.nodes })
            }
            Some(false) => Ok(SearchResult::NotFound { nodes: self.nodes }),
            None => Ok(SearchResult::Inconclusive { nodes: self.nodes }),
        }
    }

    /// `None` once the budget is exhausted.
    fn dfs(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let v = self.order[depth];
        let all = if self.g_n == 64 { u64::MAX } else { (1u64 << self.g_n) - 1 };
        let mut cands = if self.f_deg[v] > 0 { self.g_active } else { all };
        for &u in &self.f_nbrs[v] {
            if let Some(x) = self.map[u] {
                cands &= self.g_nbr[x];
            }
        }
        if self.injective {
            cands &= !self.used;
        }
        while cands != 0 {
            let x = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.injective && self.g_deg[x] < self.f_deg[v] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.map[v] = Some(x);
            if self.consistent(v) {
                self.used |= 1 << x;
                let r = self.dfs(depth + 1);
                self.used &= !(1 << x);
                match r {
                    Some(true) => return Some(true),
                    None => {
                        self.map[v] = None;
                        return None;
                    }
                    Some(false) => {}
                }
            }
            self.map[v] = None;
        }
        Some(false)
    }

    fn consistent(&self, v: usize) -> bool {
        for &ei in &self.f_inc[v] {
            let e = &self.f_edges[ei];
            let mut img = 0u64;
            let mut placed = 0usize;
            for &u in e {
                if let Some(x) = self.map[u] {
                    if img >> x & 1 == 1 {
                        return false;
                    }
                    img |= 1 << x;
                    placed += 1;
                }
            }
            let ok = if placed == e.len() { self.g_edges.contains(&img) } else { self.g_partial.contains(&img) };
            if !ok {
                return false;
            }
        }
        true
    }
}

fn placement_order(n: usize, deg: &[usize], nbrs: &[Vec<usize>]) -> Vec<usize> {
    let mut placed = vec![false; n];
    let mut attach = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| (attach[a], deg[a], std::cmp::Reverse(a)).cmp(&(attach[b], deg[b], std::cmp::Reverse(b))))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &u in &nbrs[v] {
            attach[u] += 1;
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::super::construct::*;
    use super::*;

    #[test]
    fn injective_maps_are_homomorphisms() {
        let f = Hypergraph::new(3, 4, [[1, 2, 3], [2, 3, 4]]).unwrap();
        let g = complete(5, 3).unwrap();
        let sub = contains_subgraph(&g, &f, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(sub.decided(), Some(true));
        assert_eq!(has_homomorphism(&f, &g, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(true));
        if let SearchResult::Found { map, .. } = sub {
            for e in f.edges() {
                let img: Vec<u32> = e.iter().map(|&v| map[v as usize - 1]).collect();
                let mut sorted = img.clone();
                sorted.sort_unstable();
                assert!(g.contains_edge(&sorted));
            }
        }
    }

    #[test]
    fn homomorphism_may_collapse() {
        // Two disjoint edges fold onto one edge.
        let m2 = matching2(3).unwrap();
        let e = Hypergraph::new(3, 3, [[1, 2, 3]]).unwrap();
        assert_eq!(has_homomorphism(&m2, &e, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(true));
        assert_eq!(contains_subgraph(&e, &m2, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(false));
    }

    #[test]
    fn intersecting_hosts_block_k_rr() {
        let k33 = k_rr(3).unwrap();
        let k5 = complete(5, 3).unwrap();
        assert_eq!(has_homomorphism(&k33, &k5, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(false));
        let s1 = principal_star(7, 3).unwrap();
        assert_eq!(has_homomorphism(&k33, &s1, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(false));
    }

    #[test]
    fn stars_do_not_contain_k33() {
        let k33 = k_rr(3).unwrap();
        let st = star(2, 12, 3).unwrap();
        assert_eq!(contains_subgraph(&st, &k33, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(false));
        let st = star(3, 13, 3).unwrap();
        assert_eq!(contains_subgraph(&st, &k33, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(false));
    }

    #[test]
    fn t5_blowup_is_k33_free() {
        let k33 = k_rr(3).unwrap();
        let t = balanced_blowup_t5(15).unwrap();
        assert_eq!(contains_subgraph(&t, &k33, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(false));
        // but a complete 3-graph on 15 vertices does contain it
        let k15 = complete(15, 3).unwrap();
        assert_eq!(contains_subgraph(&k15, &k33, DEFAULT_NODE_BUDGET).unwrap().decided(), Some(true));
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let k33 = k_rr(3).unwrap();
        let t = balanced_blowup_t5(15).unwrap();
        let res = contains_subgraph(&t, &k33, 10).unwrap();
        assert!(matches!(res, SearchResult::Inconclusive { .. }));
        assert_eq!(res.decided(), None);
    }
}
