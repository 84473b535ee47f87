use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{ProbDist, Wiss};
use crate::error::{invalid, Result};

const CHUNK: u64 = 1 << 16;

/// Result of a sampling estimate of `w_p(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    /// Binomial standard error `sqrt(q (1 - q) / N)`.
    pub stderr: f64,
    pub samples: u64,
    pub hits: u64,
}

struct Sampler {
    cdf: Vec<f64>,
}

impl Sampler {
    fn new(p: &ProbDist) -> Self {
        let mut cdf = Vec::with_capacity(p.s() + 1);
        let mut acc = 0.0;
        for &v in p.p().iter().chain(std::iter::once(&p.p_inf())) {
            acc += v;
            cdf.push(acc);
        }
        Self { cdf }
    }

    /// Index in `0..s` for a point of `[s]`, `s` for infinity.
    fn draw(&self, rng: &mut ChaCha8Rng) -> usize {
        let u: f64 = rng.random::<f64>() * self.cdf[self.cdf.len() - 1];
        self.cdf.partition_point(|&c| c <= u).min(self.cdf.len() - 1)
    }
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Draws `r` independent elements of `[s] ∪ {∞}`; `None` stands for `∞`.
pub fn sample_multiset(r: usize, p: &ProbDist, seed: u64) -> Vec<Option<u32>> {
    let sampler = Sampler::new(p);
    let mut rng = chunk_rng(seed, 0);
    (0..r)
        .map(|_| {
            let k = sampler.draw(&mut rng);
            (k < p.s()).then_some(k as u32 + 1)
        })
        .collect()
}

/// Fraction of samples whose restriction to `[s]` is a member of `G`.
///
/// A sample hitting some point of `[s]` twice restricts to a multiset, which is
/// never a member. Samples are drawn in fixed chunks, each from its own
/// stream of the seeded generator, so the estimate does not depend on how
/// chunks are scheduled.
pub fn monte_carlo_weight(w: &Wiss, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples == 0 {
        return Err(invalid("need at least one sample"));
    }
    let s = w.s();
    let r = w.r();
    let sampler = Sampler::new(w.dist());
    let masks = w.system().masks();
    let table: Option<Vec<bool>> = (s <= 20).then(|| {
        let mut t = vec![false; 1 << s];
        for &m in masks {
            t[m as usize] = true;
        }
        t
    });
    let member = |m: u64| match &table {
        Some(t) => t[m as usize],
        None => masks.binary_search(&m).is_ok(),
    };
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let n = CHUNK.min(samples - c * CHUNK);
            let mut hits = 0u64;
            for _ in 0..n {
                let mut mask = 0u64;
                let mut repeated = false;
                for _ in 0..r {
                    let k = sampler.draw(&mut rng);
                    if k < s {
                        let bit = 1u64 << k;
                        repeated |= mask & bit != 0;
                        mask |= bit;
                    }
                }
                if !repeated && mask != 0 && member(mask) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let q = hits as f64 / samples as f64;
    Ok(McEstimate { estimate: q, stderr: (q * (1.0 - q) / samples as f64).sqrt(), samples, hits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::SetSystem;

    #[test]
    fn single_point_estimate() {
        let g = SetSystem::new(1, 3, [[1]]).unwrap();
        let w = Wiss::new(g, 3, ProbDist::new(vec![0.3]).unwrap()).unwrap();
        let est = monte_carlo_weight(&w, 1_000_000, 7).unwrap();
        assert!((est.estimate - 0.441).abs() <= 4.0 * est.stderr, "{est:?}");
        assert_eq!(est, monte_carlo_weight(&w, 1_000_000, 7).unwrap());
    }

    #[test]
    fn no_mass_on_ground_set_never_hits() {
        let g = SetSystem::new(2, 3, [vec![1], vec![1, 2]]).unwrap();
        let w = Wiss::new(g, 3, ProbDist::degenerate(2)).unwrap();
        let est = monte_carlo_weight(&w, 10_000, 1).unwrap();
        assert_eq!(est.hits, 0);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn multisets_have_r_elements() {
        let p = ProbDist::new(vec![0.5, 0.3]).unwrap();
        let m = sample_multiset(5, &p, 3);
        assert_eq!(m.len(), 5);
        assert!(m.iter().all(|x| x.is_none_or(|v| (1..=2).contains(&v))));
        assert_eq!(m, sample_multiset(5, &p, 3));
    }

    #[test]
    fn rejects_zero_samples() {
        let g = SetSystem::new(1, 2, [[1]]).unwrap();
        let w = Wiss::new(g, 2, ProbDist::new(vec![0.5]).unwrap()).unwrap();
        assert!(monte_carlo_weight(&w, 0, 1).is_err());
    }
}
