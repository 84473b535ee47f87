//! Seeded random instances: intersecting systems, rational distributions and
//! small hypergraphs.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph, SetSystem, Vertex};
use crate::util::{from_mask, k_subsets};
use crate::wiss::{ProbDist, Wiss};

/// The generator used throughout: ChaCha8 on `seed`, stream `stream`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut g = ChaCha8Rng::seed_from_u64(seed);
    g.set_stream(stream);
    g
}

/// Intersecting system on `[s]` with members of size `1..=r`, built by adding
/// shuffled candidates that meet every member so far. Roughly `size` of the
/// candidates are tried, so larger `size` gives denser systems.
pub fn intersecting_system<R: Rng + ?Sized>(s: usize, r: usize, size: usize, rng: &mut R) -> Result<SetSystem> {
    if s == 0 || s > 20 || r == 0 {
        return Err(invalid(format!("need 1 <= s <= 20 and r >= 1, got s = {s}, r = {r}")));
    }
    let mut cand: Vec<u64> = (1u64..1 << s).filter(|m| m.count_ones() as usize <= r).collect();
    cand.shuffle(rng);
    // singletons make the system trivially principal; keep them rare
    cand.sort_by_key(|m| m.count_ones() == 1);
    let mut chosen: Vec<u64> = Vec::new();
    for m in cand.into_iter().take(size.max(1)) {
        if chosen.iter().all(|&c| c & m != 0) {
            chosen.push(m);
        }
    }
    SetSystem::from_masks(s, r, chosen)
}

/// Nonincreasing rational weights on `[s]` plus a leftover mass, all with
/// denominator `den`. Every weight is positive; `p(∞) >= p(s)` when
/// `inf_at_least_last` is set.
pub fn rational_dist<R: Rng + ?Sized>(s: usize, den: u64, inf_at_least_last: bool, rng: &mut R) -> Result<ProbDist> {
    if den < 2 * (s as u64 + 1) {
        return Err(invalid(format!("denominator {den} too small for {s} weights")));
    }
    loop {
        // s + 1 positive parts summing to den
        let mut cuts: Vec<u64> = Vec::with_capacity(s);
        while cuts.len() < s {
            let c = rng.random_range(1..den);
            if !cuts.contains(&c) {
                cuts.push(c);
            }
        }
        cuts.sort_unstable();
        let mut parts: Vec<u64> = Vec::with_capacity(s + 1);
        let mut prev = 0;
        for &c in cuts.iter().chain(std::iter::once(&den)) {
            parts.push(c - prev);
            prev = c;
        }
        let inf = parts.pop().expect("s + 1 parts");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if inf_at_least_last && parts.last().is_some_and(|&l| l > inf) {
            continue;
        }
        let p = parts.into_iter().map(|a| BigRational::new(BigInt::from(a), BigInt::from(den))).collect();
        return ProbDist::exact(p);
    }
}

/// A random weighted system with exact weights.
pub fn wiss<R: Rng + ?Sized>(r: usize, s: usize, rng: &mut R) -> Result<Wiss> {
    let size = rng.random_range(1..=4 * s);
    let g = intersecting_system(s, r, size, rng)?;
    let p = rational_dist(s, 1000, false, rng)?;
    Wiss::new(g, r, p)
}

/// Intersecting `r`-graph on `[n]` from up to `tries` shuffled `r`-subsets.
pub fn intersecting_graph<R: Rng + ?Sized>(n: usize, r: usize, tries: usize, rng: &mut R) -> Result<Hypergraph> {
    if r == 0 || r > n || n > 20 {
        return Err(invalid(format!("need 1 <= r <= n <= 20, got n = {n}, r = {r}")));
    }
    let mut cand = k_subsets(n as u32, r as u32);
    cand.shuffle(rng);
    let mut masks: Vec<u64> = Vec::new();
    for e in cand.into_iter().take(tries.max(1)) {
        let m = crate::util::to_mask(&e);
        if masks.iter().all(|&c| c & m != 0) {
            masks.push(m);
        }
    }
    Hypergraph::new(r, n, masks.into_iter().map(from_mask))
}

/// Each `r`-subset of `[n]` independently with probability `density`; never
/// empty.
pub fn hypergraph<R: Rng + ?Sized>(n: usize, r: usize, density: f64, rng: &mut R) -> Result<Hypergraph> {
    if r == 0 || r > n || n > 20 {
        return Err(invalid(format!("need 1 <= r <= n <= 20, got n = {n}, r = {r}")));
    }
    let all = k_subsets(n as u32, r as u32);
    let mut edges: Vec<Vec<Vertex>> = all.iter().filter(|_| rng.random_bool(density)).cloned().collect();
    if edges.is_empty() {
        edges.push(all[rng.random_range(0..all.len())].clone());
    }
    Hypergraph::new(r, n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn systems_intersect() {
        let mut g = rng(1, 0);
        for _ in 0..200 {
            let s = g.random_range(1..=9);
            let r = g.random_range(1..=5);
            let sys = intersecting_system(s, r, 30, &mut g).unwrap();
            assert!(sys.is_intersecting());
            assert!(!sys.is_empty());
        }
    }

    #[test]
    fn distributions_are_valid() {
        let mut g = rng(2, 0);
        for s in 1..=9 {
            let d = rational_dist(s, 1000, true, &mut g).unwrap();
            let p = d.exact_p().unwrap();
            let inf = d.exact_inf().unwrap();
            assert!(p.iter().all(|x| *x > BigRational::zero()));
            assert!(inf >= &p[s - 1]);
            assert_eq!(p.iter().sum::<BigRational>() + inf, BigRational::one());
        }
    }

    #[test]
    fn same_seed_same_instance() {
        let a = wiss(4, 7, &mut rng(9, 3)).unwrap();
        let b = wiss(4, 7, &mut rng(9, 3)).unwrap();
        assert_eq!(a, b);
        let h = intersecting_graph(8, 4, 70, &mut rng(5, 0)).unwrap();
        assert!(h.is_intersecting());
    }
}
