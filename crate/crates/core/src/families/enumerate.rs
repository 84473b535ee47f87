//! Isomorph-free enumeration of intersecting set systems on small ground sets.
//!
//! Members are drawn from the subsets of `[s]` with sizes in
//! `[min_size, r]`. Two candidates are adjacent when they intersect, so
//! intersecting families are the cliques of this graph and maximal families
//! are its maximal cliques (Bron–Kerbosch with pivoting). For each `s` only
//! systems whose members cover all of `[s]` are reported, so every system is
//! seen on the smallest ground set that carries it. Classes are deduplicated
//! by canonical key; the first labeled representative found is kept.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hypergraph::{CanonConfig, CanonicalKey, SetSystem};
use crate::wiss::is_left_compressed;

/// Default backtracking node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct EnumConfig {
    pub r: usize,
    /// Largest ground set searched; defaults to `2r - 1`.
    pub max_ground: usize,
    pub min_ground: usize,
    /// Only families to which no further member can be added.
    pub maximal_only: bool,
    /// Only families closed under every shift `j -> i`, `i < j`.
    pub left_compressed_only: bool,
    /// Members must have exactly `r` elements instead of at most `r`.
    pub uniform: bool,
    /// Backtracking nodes before giving up.
    pub node_budget: u64,
    #[serde(skip)]
    pub canon: CanonConfig,
}

impl EnumConfig {
    pub fn new(r: usize) -> Self {
        Self {
            r,
            max_ground: (2 * r).saturating_sub(1),
            min_ground: 1,
            maximal_only: true,
            left_compressed_only: false,
            uniform: false,
            node_budget: DEFAULT_NODE_BUDGET,
            canon: CanonConfig::default(),
        }
    }

    pub fn max_ground(mut self, s: usize) -> Self {
        self.max_ground = s;
        self
    }

    pub fn maximal_only(mut self, yes: bool) -> Self {
        self.maximal_only = yes;
        self
    }

    pub fn left_compressed_only(mut self, yes: bool) -> Self {
        self.left_compressed_only = yes;
        self
    }

    pub fn uniform(mut self, yes: bool) -> Self {
        self.uniform = yes;
        self
    }

    pub fn node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(2..=6).contains(&self.r) {
            return Err(invalid(format!("exhaustive enumeration needs 2 <= r <= 6, got {}", self.r)));
        }
        if self.max_ground > 13 {
            return Err(invalid(format!("max_ground {} exceeds 13", self.max_ground)));
        }
        if self.min_ground == 0 {
            return Err(invalid("min_ground must be at least 1"));
        }
        Ok(())
    }
}

/// Counters from one enumeration run.
#[derive(Debug, Clone, Default, Serialize)]
pub struct EnumStats {
    pub nodes: u64,
    /// Labeled systems that passed the support and filter checks.
    pub labeled: u64,
    pub classes: u64,
    /// False when the node budget ran out; the output is then partial.
    pub complete: bool,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub families: Vec<SetSystem>,
    pub stats: EnumStats,
}

/// Collects every class. See [`for_each_intersecting`].
pub fn enumerate_intersecting(cfg: &EnumConfig) -> Result<Enumeration> {
    let mut families = Vec::new();
    let stats = for_each_intersecting(cfg, |g, _| families.push(g))?;
    Ok(Enumeration { families, stats })
}

/// Streams one representative per isomorphism class, ordered by ground set
/// size and then by discovery order.
pub fn for_each_intersecting<F>(cfg: &EnumConfig, mut emit: F) -> Result<EnumStats>
where
    F: FnMut(SetSystem, &CanonicalKey),
{
    cfg.validate()?;
    let mut stats = EnumStats { complete: true, ..Default::default() };
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let min_size = if cfg.uniform { cfg.r } else { 1 };
    for s in cfg.min_ground.max(1)..=cfg.max_ground {
        let cands: Vec<u64> =
            (1u64..1 << s).filter(|m| (min_size..=cfg.r).contains(&(m.count_ones() as usize))).collect();
        if cands.is_empty() {
            continue;
        }
        let full = (1u64 << s) - 1;
        let graph = IntersectGraph::new(&cands);
        let mut found = |clique: &[usize], stats: &mut EnumStats| -> Result<()> {
            let masks: Vec<u64> = clique.iter().map(|&i| cands[i]).collect();
            if masks.iter().fold(0, |a, &m| a | m) != full {
                return Ok(());
            }
            let g = SetSystem::from_masks(s, cfg.r, masks)?;
            if cfg.left_compressed_only && !is_left_compressed(&g) {
                return Ok(());
            }
            stats.labeled += 1;
            let key = g.canonical_key_with(&cfg.canon)?;
            if !seen.contains(&key) {
                stats.classes += 1;
                emit(g, &key);
                seen.insert(key);
            }
            Ok(())
        };
        let mut walker = Walker { graph: &graph, budget: cfg.node_budget, stats: &mut stats, clique: Vec::new() };
        let all = graph.full();
        let done = if cfg.maximal_only {
            walker.maximal(all, graph.empty(), &mut found)?
        } else {
            walker.all(all, &mut found)?
        };
        if !done {
            stats.complete = false;
            break;
        }
    }
    Ok(stats)
}

type Bits = Vec<u64>;

struct IntersectGraph {
    n: usize,
    words: usize,
    nbr: Vec<Bits>,
}

impl IntersectGraph {
    fn new(cands: &[u64]) -> Self {
        let n = cands.len();
        let words = n.div_ceil(64);
        let mut nbr = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && cands[i] & cands[j] != 0 {
                    nbr[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        Self { n, words, nbr }
    }

    fn empty(&self) -> Bits {
        vec![0; self.words]
    }

    fn full(&self) -> Bits {
        let mut b = self.empty();
        for i in 0..self.n {
            b[i / 64] |= 1 << (i % 64);
        }
        b
    }
}

fn and(a: &[u64], b: &[u64]) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&w| w == 0)
}

fn count_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn members(a: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in a.iter().enumerate() {
        let mut rest = word;
        while rest != 0 {
            out.push(w * 64 + rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
    }
    out
}

struct Walker<'a> {
    graph: &'a IntersectGraph,
    budget: u64,
    stats: &'a mut EnumStats,
    clique: Vec<usize>,
}

impl Walker<'_> {
    fn tick(&mut self) -> bool {
        self.stats.nodes += 1;
        self.stats.nodes <= self.budget
    }

    /// Bron–Kerbosch with Tomita pivoting. Returns `Ok(false)` when the
    /// budget runs out.
    fn maximal<F>(&mut self, mut p: Bits, mut x: Bits, found: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize], &mut EnumStats) -> Result<()>,
    {
        if !self.tick() {
            return Ok(false);
        }
        if is_zero(&p) {
            if is_zero(&x) && !self.clique.is_empty() {
                found(&self.clique, self.stats)?;
            }
            return Ok(true);
        }
        let g = self.graph;
        let pivot = members(&p)
            .into_iter()
            .chain(members(&x))
            .max_by_key(|&u| (count_and(&p, &g.nbr[u]), std::cmp::Reverse(u)))
            .expect("nonempty P");
        let branch: Vec<usize> =
            members(&p).into_iter().filter(|&v| g.nbr[pivot][v / 64] >> (v % 64) & 1 == 0).collect();
        for v in branch {
            self.clique.push(v);
            let ok = self.maximal(and(&p, &g.nbr[v]), and(&x, &g.nbr[v]), found)?;
            self.clique.pop();
            if !ok {
                return Ok(false);
            }
            p[v / 64] &= !(1 << (v % 64));
            x[v / 64] |= 1 << (v % 64);
        }
        Ok(true)
    }

    /// Every clique, each reached once by adding vertices in increasing order.
    fn all<F>(&mut self, p: Bits, found: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize], &mut EnumStats) -> Result<()>,
    {
        if !self.tick() {
            return Ok(false);
        }
        if !self.clique.is_empty() {
            found(&self.clique, self.stats)?;
        }
        let g = self.graph;
        for v in members(&p) {
            let mut next = and(&p, &g.nbr[v]);
            // only later vertices
            for (w, word) in next.iter_mut().enumerate() {
                let lo = w * 64;
                if v + 1 >= lo + 64 {
                    *word = 0;
                } else if v + 1 > lo {
                    *word &= !((1u64 << (v + 1 - lo)) - 1);
                }
            }
            self.clique.push(v);
            let ok = self.all(next, found)?;
            self.clique.pop();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
