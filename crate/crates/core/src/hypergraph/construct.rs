//! Named constructions: matchings, cliques, stars, blowups and `K_{r,r}`.

use num_bigint::BigUint;

use super::{Hypergraph, Vertex};
use crate::error::{invalid, Result};
use crate::util::{binomial_big, k_subsets};

/// Two vertex-disjoint edges `{1..r}` and `{r+1..2r}`.
pub fn matching2(r: usize) -> Result<Hypergraph> {
    if r == 0 {
        return Err(invalid("r must be positive"));
    }
    let r32 = r as Vertex;
    Hypergraph::new(r, 2 * r, [(1..=r32).collect::<Vec<_>>(), (r32 + 1..=2 * r32).collect()])
}

/// All `r`-subsets of `[t]`.
pub fn complete(t: usize, r: usize) -> Result<Hypergraph> {
    if r == 0 || t < r {
        return Err(invalid(format!("complete graph needs t >= r >= 1, got t={t}, r={r}")));
    }
    Hypergraph::new(r, t, k_subsets(t as u32, r as u32))
}

/// The extension of two disjoint edges.
pub fn k_rr(r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(invalid("K_{r,r} needs r >= 2"));
    }
    matching2(r)?.extension()
}

/// The maximal star with hub side `A = [a]` and `B = {a+1, .., a+b}`: every
/// edge takes one vertex of `A` and `r - 1` of `B`.
pub fn star(a: usize, b: usize, r: usize) -> Result<Hypergraph> {
    if a == 0 || r < 2 || b < r - 1 {
        return Err(invalid(format!("star needs a >= 1, r >= 2, b >= r - 1 (a={a}, b={b}, r={r})")));
    }
    let tails = k_subsets(b as u32, r as u32 - 1);
    let mut edges = Vec::with_capacity(a * tails.len());
    for hub in 1..=a as Vertex {
        for t in &tails {
            let mut e = vec![hub];
            e.extend(t.iter().map(|&v| v + a as Vertex));
            edges.push(e);
        }
    }
    Hypergraph::new(r, a + b, edges)
}

/// All `r`-subsets of `[n]` containing vertex 1.
pub fn principal_star(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(invalid(format!("principal star needs n >= r >= 2 (n={n}, r={r})")));
    }
    star(1, n - 1, r)
}

/// Part index (0..5) of each vertex of the balanced 5-partition of `[n]`:
/// contiguous blocks, the first `n mod 5` blocks one larger.
pub fn t5_parts(n: usize) -> Vec<usize> {
    let (q, rem) = (n / 5, n % 5);
    (0..5).flat_map(|p| std::iter::repeat_n(p, q + usize::from(p < rem))).collect()
}

/// Balanced blowup of `K_5^(3)`: triples meeting three distinct parts.
pub fn balanced_blowup_t5(n: usize) -> Result<Hypergraph> {
    if n < 5 {
        return Err(invalid("T_5^3(n) needs n >= 5"));
    }
    let part = t5_parts(n);
    let edges = k_subsets(n as u32, 3).into_iter().filter(|e| {
        let (a, b, c) = (part[e[0] as usize - 1], part[e[1] as usize - 1], part[e[2] as usize - 1]);
        a != b && b != c && a != c
    });
    Hypergraph::new(3, n, edges)
}

/// The hub-side size `a` maximizing `a * C(n - a, r - 1)` over
/// `1 <= a <= n - r + 1` (smallest on ties) and that edge count.
pub fn best_star(n: usize, r: usize) -> Result<(usize, BigUint)> {
    if r < 2 || n < r {
        return Err(invalid(format!("best_star needs n >= r >= 2 (n={n}, r={r})")));
    }
    let mut best = (0usize, BigUint::default());
    for a in 1..=n - r + 1 {
        let m = BigUint::from(a) * binomial_big((n - a) as u64, r as u64 - 1);
        if a == 1 || m > best.1 {
            best = (a, m);
        }
    }
    Ok(best)
}
