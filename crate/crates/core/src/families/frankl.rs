//! The families `F(r, t, i)`: all subsets of `[t + 2i]` with between `t + i`
//! and `r` elements. Any two members share at least `t` points.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Hypergraph, SetSystem};
use crate::wiss::{optimize_weight, reconstruct, WeightOptConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FranklParams {
    pub r: usize,
    pub t: usize,
    pub i: usize,
}

impl FranklParams {
    pub fn new(r: usize, t: usize, i: usize) -> Result<Self> {
        if t < 1 || r < t + i {
            return Err(invalid(format!("need t >= 1 and r >= t + i, got r = {r}, t = {t}, i = {i}")));
        }
        if t + 2 * i > 63 {
            return Err(Error::TooLarge(format!("ground set [{}] is too large", t + 2 * i)));
        }
        Ok(Self { r, t, i })
    }

    /// `t + 2i`.
    pub fn ground(&self) -> usize {
        self.t + 2 * self.i
    }
}

/// All subsets of `[t + 2i]` of size in `[t + i, min(r, t + 2i)]`.
pub fn frankl_family(params: &FranklParams) -> Result<SetSystem> {
    let s = params.ground();
    let lo = params.t + params.i;
    let hi = params.r.min(s);
    let masks: Vec<u64> = (1u64..1 << s).filter(|m| (lo..=hi).contains(&(m.count_ones() as usize))).collect();
    let g = SetSystem::from_masks(s, params.r, masks)?;
    debug_assert!(g.is_t_intersecting(params.t as u32));
    Ok(g)
}

/// All `r`-subsets of `[n]` whose trace on `[t + 2i]` lies in `F(r, t, i)`.
pub fn g_family(params: &FranklParams, n: usize) -> Result<Hypergraph> {
    if n < params.ground() {
        return Err(invalid(format!("need n >= {}, got {n}", params.ground())));
    }
    reconstruct(&frankl_family(params)?, n)
}

#[derive(Debug, Clone, Serialize)]
pub struct FrontierRow {
    pub i: usize,
    pub members: usize,
    /// Best weight found; a lower bound on the maximum.
    pub value: f64,
    pub p: Vec<f64>,
    pub p_inf: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Frontier {
    pub r: usize,
    pub t: usize,
    pub rows: Vec<FrontierRow>,
    pub best_i: usize,
    pub best_value: f64,
    /// Values are attained weights, hence lower bounds.
    pub lower_bounds: bool,
}

/// Best weight of `F(r, t, i)` for each `i ∈ [0, r - t]`.
pub fn conjecture_frontier(r: usize, t: usize, cfg: &WeightOptConfig) -> Result<Frontier> {
    if t < 1 || r < t {
        return Err(invalid(format!("need r >= t >= 1, got r = {r}, t = {t}")));
    }
    if r > 8 {
        return Err(Error::TooLarge(format!("frontier limited to r <= 8, got {r}")));
    }
    let mut rows = Vec::new();
    for i in 0..=r - t {
        let g = frankl_family(&FranklParams::new(r, t, i)?)?;
        let best = optimize_weight(&g, r, cfg)?;
        rows.push(FrontierRow {
            i,
            members: g.len(),
            value: best.value,
            p: best.p.p().to_vec(),
            p_inf: best.p.p_inf(),
            converged: best.converged,
        });
    }
    let top = rows.iter().max_by(|a, b| a.value.total_cmp(&b.value).then(b.i.cmp(&a.i))).expect("i = 0 row");
    Ok(Frontier { r, t, best_i: top.i, best_value: top.value, lower_bounds: true, rows })
}
