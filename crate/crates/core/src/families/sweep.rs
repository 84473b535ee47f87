//! Audit of the best weight of every intersecting class against the
//! non-principal bound `L_r - c_r`.

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{EnumConfig, EnumStats};
use crate::certify::constants;
use crate::error::{invalid, Result};
use crate::hypergraph::SetSystem;
use crate::lagrangian::{maximize_with_starts, LagrangianConfig};
use crate::util::{factorial, k_subsets, rat_from_f64, ser_rat};
use crate::wiss::{optimize_weight, reconstruct, WeightOptConfig};

#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub r: usize,
    /// Largest ground set; defaults to `2r - 1`.
    pub max_ground: usize,
    pub node_budget: u64,
    pub weight: WeightOptConfig,
    /// Also maximize the Lagrangian of the reconstruction on `s + 2r`
    /// vertices, started from the best weight distribution.
    pub lagrangian: bool,
    pub lagrangian_iters: usize,
}

impl SweepConfig {
    pub fn new(r: usize) -> Self {
        Self {
            r,
            max_ground: (2 * r).saturating_sub(1),
            node_budget: super::enumerate::DEFAULT_NODE_BUDGET,
            weight: WeightOptConfig { restarts: 24, ordered: false, ..WeightOptConfig::default() },
            lagrangian: true,
            lagrangian_iters: 1000,
        }
    }
}

/// One row of the audit.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub key: String,
    pub s: usize,
    pub members: Vec<Vec<u32>>,
    pub principal: bool,
    /// Best of the two lower bounds below.
    pub value: f64,
    /// Best weight found over distributions on `[s] ∪ {∞}`.
    pub weight: f64,
    /// `r! λ` of the reconstruction, when computed.
    pub lagrangian: Option<f64>,
    /// Distribution attaining `weight`, in the labeling of `members`.
    pub witness_p: Vec<f64>,
    pub witness_p_inf: f64,
    /// `L_r - value`.
    pub gap: f64,
    /// Non-principal: `value <= L_r - c_r`. Principal: `value <= L_r + 1e-12`.
    pub within_bound: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub r: usize,
    pub max_ground: usize,
    pub classes: usize,
    pub principal_classes: usize,
    pub nonprincipal_classes: usize,
    #[serde(rename = "L_r", serialize_with = "ser_rat")]
    pub l_r: BigRational,
    /// `L_r - c_r`.
    #[serde(serialize_with = "ser_rat")]
    pub bound: BigRational,
    pub max_nonprincipal: Option<f64>,
    pub max_nonprincipal_key: Option<String>,
    pub max_principal: Option<f64>,
    /// Key of the class with the largest value overall.
    pub top_key: Option<String>,
    /// The top class is isomorphic to all `r`-subsets of `[2r-1]`.
    pub top_is_clique: bool,
    /// Every non-principal value is at most `bound` and every principal value
    /// at most `L_r`.
    pub all_within_bound: bool,
    /// The best non-principal value is below the best principal value.
    pub principal_dominates: bool,
    pub enumeration: EnumStats,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sweep {
    pub summary: SweepSummary,
    pub records: Vec<SweepRecord>,
}

fn audit(g: SetSystem, key: String, cfg: &SweepConfig, l_r: &BigRational, bound: &BigRational) -> Result<SweepRecord> {
    let r = cfg.r;
    let s = g.s();
    let best = optimize_weight(&g, r, &cfg.weight)?;
    // back to the labeling of g
    let witness_p: Vec<f64> = best.perm.iter().map(|&new| best.p.p()[new as usize - 1]).collect();
    let witness_p_inf = best.p.p_inf();
    let lagrangian = if cfg.lagrangian {
        let n = s + 2 * r;
        let h = reconstruct(&g, n)?;
        let mut warm = witness_p.clone();
        warm.extend(std::iter::repeat_n(witness_p_inf / (n - s) as f64, n - s));
        let lcfg = LagrangianConfig {
            restarts: 0,
            structured_starts: 2,
            max_iters: cfg.lagrangian_iters,
            seed: cfg.weight.seed,
            ..LagrangianConfig::default()
        };
        let res = maximize_with_starts(&h, &lcfg, &[warm]);
        Some(res.value * factorial(r as u64) as f64)
    } else {
        None
    };
    let value = lagrangian.map_or(best.value, |l| l.max(best.value));
    let principal = g.common_vertex().is_some();
    let v = rat_from_f64(value);
    // principal optima sit exactly on L_r, so allow for rounding there
    let within_bound = if principal { v <= l_r + rat_from_f64(1e-12) } else { &v <= bound };
    Ok(SweepRecord {
        key,
        s,
        members: g.members(),
        principal,
        value,
        weight: best.value,
        lagrangian,
        witness_p,
        witness_p_inf,
        gap: crate::util::rat_f64(l_r) - value,
        within_bound,
    })
}

/// Enumerates the maximal intersecting classes on ground sets up to
/// `max_ground` and records, for each, the best weight found. For `r >= 4`
/// every non-principal value should stay below `L_r - c_r`; for `r = 3` the
/// top class is expected to be all 3-subsets of `[5]`.
///
/// All values are lower bounds on the true maxima, so a bound violation is a
/// genuine counterexample while compliance is evidence only.
pub fn nonprincipal_gap_sweep(cfg: &SweepConfig) -> Result<Sweep> {
    let r = cfg.r;
    if r < 3 {
        return Err(invalid(format!("the sweep needs r >= 3, got {r}")));
    }
    let k = constants(r)?;
    let bound = &k.l_r - &k.c_r;
    let ecfg = EnumConfig::new(r).max_ground(cfg.max_ground).node_budget(cfg.node_budget);
    let mut classes = Vec::new();
    let stats = super::for_each_intersecting(&ecfg, |g, key| classes.push((g, key.to_string())))?;
    let records: Vec<SweepRecord> =
        classes.into_par_iter().map(|(g, key)| audit(g, key, cfg, &k.l_r, &bound)).collect::<Result<_>>()?;

    let best_of = |principal: bool| {
        records.iter().filter(|x| x.principal == principal).max_by(|a, b| a.value.total_cmp(&b.value))
    };
    let np = best_of(false);
    let pr = best_of(true);
    let top = records.iter().max_by(|a, b| a.value.total_cmp(&b.value));
    let clique_key = if 2 * r - 1 <= cfg.max_ground {
        let sys = SetSystem::new(2 * r - 1, r, k_subsets(2 * r as u32 - 1, r as u32))?;
        Some(sys.canonical_key()?.to_string())
    } else {
        None
    };
    let summary = SweepSummary {
        r,
        max_ground: cfg.max_ground,
        classes: records.len(),
        principal_classes: records.iter().filter(|x| x.principal).count(),
        nonprincipal_classes: records.iter().filter(|x| !x.principal).count(),
        l_r: k.l_r.clone(),
        bound,
        max_nonprincipal: np.map(|x| x.value),
        max_nonprincipal_key: np.map(|x| x.key.clone()),
        max_principal: pr.map(|x| x.value),
        top_key: top.map(|x| x.key.clone()),
        top_is_clique: top.zip(clique_key.as_ref()).is_some_and(|(t, c)| &t.key == c),
        all_within_bound: records.iter().all(|x| x.within_bound),
        principal_dominates: match (np, pr) {
            (Some(a), Some(b)) => a.value < b.value,
            _ => true,
        },
        enumeration: stats,
    };
    Ok(Sweep { summary, records })
}
