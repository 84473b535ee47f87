use serde::Serialize;

use super::{weight_masks, ProbDist};
use crate::ascent::{best_of, dirichlet_start, AscentConfig, Ordered, Poly};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::SetSystem;
use crate::util::falling;

#[derive(Debug, Clone, Serialize)]
pub struct WeightOptConfig {
    /// Random Dirichlet starts, on top of a handful of structured ones.
    pub restarts: usize,
    pub seed: u64,
    pub max_iters: usize,
    pub tol: f64,
    /// Keep the labeling fixed and search only nonincreasing `p`. When false
    /// the search runs over all of the simplex and the result is relabeled so
    /// that `p` is nonincreasing.
    pub ordered: bool,
}

impl Default for WeightOptConfig {
    fn default() -> Self {
        Self { restarts: 500, seed: 0, max_iters: 5000, tol: 1e-15, ordered: true }
    }
}

/// Best distribution found for a family. `value` is attained at `p`, so it
/// is a certified lower bound on the maximum weight.
#[derive(Debug, Clone, Serialize)]
pub struct WeightOptimum {
    /// The family in the labeling that makes `p` nonincreasing.
    pub system: SetSystem,
    /// `perm[i - 1]` is the new label of point `i`.
    pub perm: Vec<u32>,
    pub p: ProbDist,
    pub value: f64,
    pub converged: bool,
    pub starts: usize,
}

fn weight_poly(g: &SetSystem, r: usize) -> Poly {
    let s = g.s();
    let mut poly = Poly::new(s + 1, r);
    let mut vars = Vec::with_capacity(r);
    for &m in g.masks() {
        vars.clear();
        let mut rest = m;
        while rest != 0 {
            vars.push(rest.trailing_zeros());
            rest &= rest - 1;
        }
        let k = vars.len();
        vars.resize(r, s as u32);
        poly.push(falling(r as u64, k as u64) as f64, &vars);
    }
    poly
}

/// Maximizes `w_p(G)` over distributions `p` on `[s] ∪ {∞}`.
pub fn optimize_weight(g: &SetSystem, r: usize, cfg: &WeightOptConfig) -> Result<WeightOptimum> {
    if g.is_empty() {
        return Err(invalid("cannot optimize the weight of an empty family"));
    }
    if g.masks().iter().any(|m| m.count_ones() as usize > r) {
        return Err(invalid(format!("family has members with more than r = {r} elements")));
    }
    if !g.is_intersecting() {
        return Err(Error::NotIntersecting);
    }
    let s = g.s();
    let g = g.with_r_cap(r)?;
    let poly = weight_poly(&g, r);
    let mut starts = structured_starts(&g, r);
    starts.extend((0..cfg.restarts).map(|i| dirichlet_start(s + 1, cfg.seed, i as u64)));
    let acfg = AscentConfig { max_iters: cfg.max_iters, tol: cfg.tol, ..AscentConfig::default() };

    let (x, converged) = if cfg.ordered {
        let obj = Ordered { poly: &poly, m: s };
        let ustarts: Vec<Vec<f64>> = starts
            .iter()
            .map(|y| {
                let mut x = y.clone();
                x[..s].sort_by(|a, b| b.total_cmp(a));
                obj.to_u(&x)
            })
            .collect();
        let (_, best) = best_of(&obj, &ustarts, &acfg).expect("at least one start");
        (obj.to_x(&best.point), best.converged)
    } else {
        let (_, best) = best_of(&poly, &starts, &acfg).expect("at least one start");
        (best.point, best.converged)
    };

    // Relabel so that p is nonincreasing (identity when ordered).
    let mut order: Vec<usize> = (0..s).collect();
    order.sort_by(|&a, &b| x[b].total_cmp(&x[a]).then(a.cmp(&b)));
    let mut perm = vec![0u32; s];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new as u32 + 1;
    }
    let system = g.relabel(&perm)?;
    let p: Vec<f64> = order.iter().map(|&i| x[i]).collect();
    let p = ProbDist::new(p)?;
    let value = weight_masks(system.masks(), r, &p);
    Ok(WeightOptimum { system, perm, p, value, converged, starts: starts.len() })
}

fn structured_starts(g: &SetSystem, r: usize) -> Vec<Vec<f64>> {
    let s = g.s();
    let mut out = vec![vec![1.0 / (s + 1) as f64; s + 1]];
    let rf = r as f64;
    for i in 0..s {
        let mut y = vec![0.0; s + 1];
        y[i] = 1.0 / rf;
        y[s] = 1.0 - 1.0 / rf;
        out.push(y);
    }
    for &m in g.masks() {
        let k = m.count_ones() as f64;
        let mut y = vec![0.0; s + 1];
        for (i, v) in y.iter_mut().enumerate().take(s) {
            if m >> i & 1 == 1 {
                *v = 1.0 / rf.max(k);
            }
        }
        y[s] = (1.0 - k / rf).max(0.0);
        // keep every coordinate slightly positive so the growth transform
        // can still move mass there
        y.iter_mut().for_each(|v| *v = 0.98 * *v + 0.02 / (s + 1) as f64);
        out.push(y);
    }
    out
}
