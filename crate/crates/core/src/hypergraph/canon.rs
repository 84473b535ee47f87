//! Canonical forms of small set systems.
//!
//! The key is the colex-minimal sorted edge encoding over all labelings that
//! the search tree reaches. The tree is an individualization-refinement tree:
//! vertex colors are refined by the multiset of colors they see through their
//! edges (degrees first), a vertex of the first non-trivial cell is
//! individualized, and the process repeats until every vertex has its own
//! color. Children equivalent under an automorphism that fixes the current
//! prefix are skipped. Isolated vertices are dropped before labeling.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::util::mix64;

#[derive(Debug, Clone, Copy)]
pub struct CanonConfig {
    /// Largest number of non-isolated vertices accepted.
    pub max_vertices: usize,
    /// Search-tree node budget.
    pub node_budget: u64,
}

impl Default for CanonConfig {
    fn default() -> Self {
        Self { max_vertices: 14, node_budget: 2_000_000 }
    }
}

/// Isomorphism-invariant encoding of an edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    vertices: usize,
    edges: Vec<u64>,
}

impl CanonicalKey {
    /// Number of non-isolated vertices.
    pub fn vertices(&self) -> usize {
        self.vertices
    }

    /// Canonically relabeled edge masks in colex order.
    pub fn edges(&self) -> &[u64] {
        &self.edges
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.vertices)?;
        for (i, m) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{m:x}")?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn canonical_key(n: usize, masks: &[u64], cfg: &CanonConfig) -> Result<CanonicalKey> {
    canonical_form(n, masks, cfg).map(|(k, _)| k)
}

/// Canonical key plus the labeling that produced it: `labels[v - 1]` is the
/// canonical position (1-based) of original vertex `v`, or 0 if isolated.
pub fn canonical_form(n: usize, masks: &[u64], cfg: &CanonConfig) -> Result<(CanonicalKey, Vec<u32>)> {
    let used = masks.iter().fold(0u64, |a, &m| a | m);
    let verts: Vec<usize> = (0..64).filter(|&b| used >> b & 1 == 1).collect();
    if verts.iter().any(|&b| b >= n) {
        return Err(Error::VertexOutOfRange { vertex: *verts.last().unwrap() as u32 + 1, n });
    }
    let k = verts.len();
    if k > cfg.max_vertices {
        return Err(Error::TooLarge(format!(
            "{k} non-isolated vertices exceed the canonical-form bound of {}",
            cfg.max_vertices
        )));
    }
    let edges: Vec<Vec<usize>> = masks
        .iter()
        .map(|&m| verts.iter().enumerate().filter(|(_, &b)| m >> b & 1 == 1).map(|(i, _)| i).collect())
        .collect();
    let mut inc = vec![Vec::new(); k];
    for (ei, e) in edges.iter().enumerate() {
        for &v in e {
            inc[v].push(ei);
        }
    }
    let mut search =
        Search { k, edges: &edges, inc: &inc, best: None, autos: Vec::new(), nodes: 0, budget: cfg.node_budget };
    let mut prefix = Vec::new();
    search.visit(vec![0; k], &mut prefix)?;
    let (enc, pos) = search.best.unwrap_or_default();
    let mut labels = vec![0u32; n];
    for (i, &b) in verts.iter().enumerate() {
        labels[b] = pos[i] as u32 + 1;
    }
    Ok((CanonicalKey { vertices: k, edges: enc }, labels))
}

struct Search<'a> {
    k: usize,
    edges: &'a [Vec<usize>],
    inc: &'a [Vec<usize>],
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let k = self.k;
        let mut classes = count_classes(&colors);
        loop {
            if classes == k {
                return colors;
            }
            let edge_hash: Vec<u64> = self
                .edges
                .iter()
                .map(|e| e.iter().fold(0u64, |h, &u| h.wrapping_add(mix64(colors[u] as u64 + 1))))
                .collect();
            let mut keyed: Vec<(u32, u64, usize)> = (0..k)
                .map(|v| {
                    let own = mix64(colors[v] as u64 + 1);
                    let sig =
                        self.inc[v].iter().fold(0u64, |h, &ei| h.wrapping_add(mix64(edge_hash[ei].wrapping_sub(own))));
                    (colors[v], sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut next = vec![0u32; k];
            let mut c = 0u32;
            for i in 0..k {
                if i > 0 && (keyed[i].0, keyed[i].1) != (keyed[i - 1].0, keyed[i - 1].1) {
                    c += 1;
                }
                next[keyed[i].2] = c;
            }
            let new_classes = c as usize + 1;
            colors = next;
            if new_classes == classes {
                return colors;
            }
            classes = new_classes;
        }
    }

    fn visit(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget });
        }
        let colors = self.refine(colors);
        let k = self.k;
        // Smallest color shared by several vertices.
        let mut counts = vec![0usize; k.max(1)];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = counts.iter().position(|&c| c > 1) else {
            self.leaf(&colors);
            return Ok(());
        };
        let cands: Vec<usize> = (0..k).filter(|&v| colors[v] as usize == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &w in &cands {
            if !tried.is_empty() && self.equivalent(w, &tried, prefix) {
                continue;
            }
            let child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(v, &c)| if c as usize > target || (c as usize == target && v != w) { c + 1 } else { c })
                .collect();
            prefix.push(w);
            self.visit(child, prefix)?;
            prefix.pop();
            tried.push(w);
        }
        Ok(())
    }

    fn leaf(&mut self, pos: &[u32]) {
        let mut enc: Vec<u64> = self.edges.iter().map(|e| e.iter().fold(0u64, |m, &v| m | 1u64 << pos[v])).collect();
        enc.sort_unstable();
        let pos: Vec<usize> = pos.iter().map(|&p| p as usize).collect();
        match &self.best {
            None => self.best = Some((enc, pos)),
            Some((b, _)) if enc < *b => self.best = Some((enc, pos)),
            Some((b, bpos)) if enc == *b => {
                let mut inv = vec![0usize; self.k];
                for (v, &p) in bpos.iter().enumerate() {
                    inv[p] = v;
                }
                let perm: Vec<usize> = pos.iter().map(|&p| inv[p]).collect();
                if perm.iter().enumerate().any(|(i, &p)| i != p) {
                    self.autos.push(perm);
                }
            }
            Some(_) => {}
        }
    }

    /// Is `w` in the orbit of an already explored sibling under the known
    /// automorphisms fixing `prefix` pointwise?
    fn equivalent(&self, w: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.k).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&v| a[v] == v) {
                any = true;
                for (v, &img) in a.iter().enumerate() {
                    let (x, y) = (find(&mut parent, v), find(&mut parent, img));
                    if x != y {
                        parent[x] = y;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        tried.iter().any(|&t| find(&mut parent, t) == rw)
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::construct::*;
    use crate::hypergraph::{Hypergraph, SetSystem};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reversal_preserves_key() {
        let h = Hypergraph::new(3, 6, [[1, 2, 3], [3, 4, 5], [1, 5, 6], [2, 4, 6]]).unwrap();
        let rev: Vec<u32> = (1..=6).rev().collect();
        assert_eq!(h.canonical_key().unwrap(), h.relabel(&rev).unwrap().canonical_key().unwrap());
    }

    #[test]
    fn two_edge_three_graphs_are_distinguished() {
        let share_two = Hypergraph::new(3, 4, [[1, 2, 3], [1, 2, 4]]).unwrap();
        let share_one = Hypergraph::new(3, 5, [[1, 2, 3], [1, 4, 5]]).unwrap();
        assert_ne!(share_two.canonical_key().unwrap(), share_one.canonical_key().unwrap());
        let k5 = complete(5, 3).unwrap();
        let padded = star(1, 4, 3).unwrap().with_vertices(9).unwrap();
        assert!(!k5.is_isomorphic(&padded).unwrap());
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        let a = Hypergraph::new(3, 3, [[1, 2, 3]]).unwrap();
        let b = Hypergraph::new(3, 7, [[2, 5, 7]]).unwrap();
        assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        // Large automorphism groups rely on orbit pruning.
        let k = complete(12, 3).unwrap();
        assert_eq!(k.canonical_key().unwrap().vertices(), 12);
        let t = balanced_blowup_t5(10).unwrap();
        assert_eq!(t.canonical_key().unwrap().edges().len(), 80);
        let fano = SetSystem::new(7, 3, [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]])
            .unwrap();
        assert_eq!(fano.canonical_key().unwrap().edges().len(), 7);
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let k = complete(15, 2).unwrap();
        assert!(matches!(k.canonical_key(), Err(Error::TooLarge(_))));
        let cfg = CanonConfig { max_vertices: 20, ..CanonConfig::default() };
        assert!(k.canonical_key_with(&cfg).is_ok());
    }

    #[test]
    fn random_relabelings_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let base = [
            Hypergraph::new(3, 7, [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 6, 7], [1, 6, 7]]).unwrap(),
            star(2, 5, 3).unwrap(),
            matching2(3).unwrap().extension().unwrap().induced(&(1..=12).collect::<Vec<_>>()).unwrap(),
        ];
        for h in &base {
            let key = h.canonical_key().unwrap();
            for _ in 0..300 {
                let mut perm: Vec<u32> = (1..=h.n() as u32).collect();
                perm.shuffle(&mut rng);
                assert_eq!(h.relabel(&perm).unwrap().canonical_key().unwrap(), key);
            }
        }
    }

    #[test]
    fn labeling_reproduces_key() {
        let g = SetSystem::new(5, 3, [vec![1, 2], vec![2, 3, 5], vec![1, 3], vec![2, 4]]).unwrap();
        let (key, labels) = canonical_form(5, g.masks(), &CanonConfig::default()).unwrap();
        let mut perm = labels.clone();
        // vertex 5 is used, every label is a proper position here
        assert!(perm.iter().all(|&l| l > 0));
        perm.truncate(5);
        let relabeled = g.relabel(&perm).unwrap();
        assert_eq!(relabeled.masks(), key.edges());
    }
}
