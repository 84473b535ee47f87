//! Lagrangians of uniform hypergraphs:
//! `λ(F) = max_p sum_{e in F} prod_{v in e} p(v)` over probability vectors.

mod orbit;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::ascent::{best_of, dirichlet_start, kkt_residual, AscentConfig, Poly};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::util::{binomial_big, ser_opt_rat, Kahan};

pub use orbit::orbit_exact;

/// A probability vector over `[n]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SimplexPoint {
    weights: Vec<f64>,
}

impl SimplexPoint {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidDistribution("weights must be nonnegative".into()));
        }
        let mut acc = Kahan::default();
        weights.iter().for_each(|&w| acc.add(w));
        if (acc.value() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!("weights sum to {}", acc.value())));
        }
        Ok(Self { weights })
    }

    pub fn uniform(n: usize) -> Self {
        Self { weights: vec![1.0 / n.max(1) as f64; n] }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

impl AsRef<[f64]> for SimplexPoint {
    fn as_ref(&self) -> &[f64] {
        &self.weights
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Ascent,
    OrbitExact,
}

#[derive(Debug, Clone, Serialize)]
pub struct LagrangianResult {
    /// Objective at `point`.
    pub value: f64,
    pub point: SimplexPoint,
    /// Vertices with weight above the support tolerance.
    pub support: Vec<Vertex>,
    pub restarts_used: usize,
    /// KKT conditions hold at `point` to relative accuracy `1e-6`.
    pub converged: bool,
    /// Always a valid lower bound on λ: an evaluation at a feasible point.
    pub lower_bound: f64,
    pub method: Method,
    /// For orbit-exact results, an exact enclosure of the maximum over
    /// orbit-symmetric points.
    #[serde(serialize_with = "ser_opt_rat", skip_serializing_if = "Option::is_none")]
    pub certified_lower: Option<BigRational>,
    #[serde(serialize_with = "ser_opt_rat", skip_serializing_if = "Option::is_none")]
    pub certified_upper: Option<BigRational>,
}

fn check_dim(f: &Hypergraph, p: &[f64]) -> Result<()> {
    if p.len() != f.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), got: p.len() });
    }
    Ok(())
}

/// `sum_{e in F} prod_{v in e} p(v)`, compensated summation.
pub fn evaluate(f: &Hypergraph, p: &[f64]) -> Result<f64> {
    check_dim(f, p)?;
    let mut acc = Kahan::default();
    for e in f.edges() {
        acc.add(e.iter().map(|&v| p[v as usize - 1]).product::<f64>());
    }
    Ok(acc.value())
}

/// Partial derivatives: component `v` is the link polynomial of `v` at `p`.
pub fn gradient(f: &Hypergraph, p: &[f64]) -> Result<Vec<f64>> {
    check_dim(f, p)?;
    let poly = edge_poly(f);
    let mut g = vec![0.0; f.n()];
    poly.grad(p, &mut g);
    Ok(g)
}

pub(crate) fn edge_poly(f: &Hypergraph) -> Poly {
    let mut poly = Poly::new(f.n(), f.r());
    let mut vars = Vec::with_capacity(f.r());
    for e in f.edges() {
        vars.clear();
        vars.extend(e.iter().map(|&v| v - 1));
        poly.push(1.0, &vars);
    }
    poly
}

#[derive(Debug, Clone, Serialize)]
pub struct LagrangianConfig {
    /// Random Dirichlet starts, added to the structured ones.
    pub restarts: usize,
    pub seed: u64,
    pub max_iters: usize,
    pub tol: f64,
    pub support_tol: f64,
    /// Cap on the structured starts built from edges and pair-covering sets.
    pub structured_starts: usize,
}

impl Default for LagrangianConfig {
    fn default() -> Self {
        Self { restarts: 200, seed: 0, max_iters: 5000, tol: 1e-15, support_tol: 1e-8, structured_starts: 64 }
    }
}

/// Multistart ascent. The result is the best point found; its value is a
/// lower bound on λ, and equals λ when the global maximum was reached.
pub fn maximize(f: &Hypergraph, cfg: &LagrangianConfig) -> LagrangianResult {
    maximize_with_starts(f, cfg, &[])
}

/// Like [`maximize`], with extra caller-supplied starting points tried first.
pub fn maximize_with_starts(f: &Hypergraph, cfg: &LagrangianConfig, extra: &[Vec<f64>]) -> LagrangianResult {
    let n = f.n();
    if f.is_empty() || n == 0 {
        let point = SimplexPoint::uniform(n);
        return LagrangianResult {
            value: 0.0,
            support: (1..=n as Vertex).collect(),
            point,
            restarts_used: 0,
            converged: true,
            lower_bound: 0.0,
            method: Method::Ascent,
            certified_lower: None,
            certified_upper: None,
        };
    }
    let poly = edge_poly(f);
    let mut starts: Vec<Vec<f64>> = extra.iter().filter(|s| s.len() == n).cloned().collect();
    starts.extend(structured_starts(f, cfg.structured_starts));
    starts.extend((0..cfg.restarts).map(|i| dirichlet_start(n, cfg.seed, i as u64)));
    let acfg = AscentConfig {
        max_iters: cfg.max_iters,
        tol: cfg.tol,
        support_tol: cfg.support_tol,
        ..AscentConfig::default()
    };
    let (_, best) = best_of(&poly, &starts, &acfg).expect("at least one start");
    let mut g = vec![0.0; n];
    poly.grad(&best.point, &mut g);
    let converged = kkt_residual(&best.point, &g, cfg.support_tol) <= 1e-6;
    let value = evaluate(f, &best.point).expect("dimension");
    LagrangianResult {
        value,
        support: support_of(&best.point, cfg.support_tol),
        point: SimplexPoint { weights: best.point },
        restarts_used: starts.len(),
        converged,
        lower_bound: value,
        method: Method::Ascent,
        certified_lower: None,
        certified_upper: None,
    }
}

pub(crate) fn support_of(p: &[f64], tol: f64) -> Vec<Vertex> {
    p.iter().enumerate().filter(|(_, &w)| w > tol).map(|(i, _)| i as Vertex + 1).collect()
}

fn uniform_on(n: usize, set: &[Vertex]) -> Vec<f64> {
    let mut x = vec![0.0; n];
    for &v in set {
        x[v as usize - 1] = 1.0 / set.len() as f64;
    }
    x
}

/// Uniform on the non-isolated vertices, on single edges, and on vertex sets
/// grown greedily from an edge while every pair stays covered by an edge
/// inside the set (optima live on such sets).
fn structured_starts(f: &Hypergraph, cap: usize) -> Vec<Vec<f64>> {
    let n = f.n();
    let mut out = vec![uniform_on(n, &f.non_isolated())];
    let m = f.edge_count();
    let picks = m.min(cap / 2);
    let mut covered = vec![vec![false; n + 1]; n + 1];
    for e in f.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                covered[a as usize][b as usize] = true;
                covered[b as usize][a as usize] = true;
            }
        }
    }
    for k in 0..picks {
        let e = f.edge(k * m / picks.max(1));
        out.push(uniform_on(n, e));
        let mut set = e.to_vec();
        for v in 1..=n as Vertex {
            if !set.contains(&v) && set.iter().all(|&u| covered[u as usize][v as usize]) {
                set.push(v);
            }
        }
        if set.len() > e.len() {
            out.push(uniform_on(n, &set));
        }
    }
    out
}

/// `λ(K_t^(r)) = C(t, r) / t^r`, attained at the uniform point.
pub fn clique_lagrangian(t: usize, r: usize) -> Result<BigRational> {
    if r < 1 || t < r {
        return Err(invalid(format!("clique Lagrangian needs t >= r >= 1, got t = {t}, r = {r}")));
    }
    let num = BigInt::from(binomial_big(t as u64, r as u64));
    let den = num_traits::pow(BigInt::from(t), r);
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::hypergraph::construct::{complete, matching2, principal_star};

    fn quick() -> LagrangianConfig {
        LagrangianConfig { restarts: 20, seed: 1, ..Default::default() }
    }

    #[test]
    fn evaluate_examples() {
        let k5 = complete(5, 3).unwrap();
        assert!((evaluate(&k5, &[0.2; 5]).unwrap() - 0.08).abs() < 1e-15);
        assert_eq!(evaluate(&k5, &[1.0, 0.0, 0.0, 0.0, 0.0]).unwrap(), 0.0);
        let e = Hypergraph::new(3, 5, [[1, 2, 3]]).unwrap();
        let third = 1.0 / 3.0;
        assert!((evaluate(&e, &[third, third, third, 0.0, 0.0]).unwrap() - 1.0 / 27.0).abs() < 1e-15);
        assert!(matches!(evaluate(&e, &[1.0]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn gradient_examples() {
        let e = Hypergraph::new(3, 4, [[1, 2, 3]]).unwrap();
        let third = 1.0 / 3.0;
        let g = gradient(&e, &[third, third, third, 0.0]).unwrap();
        for gi in &g[..3] {
            assert!((gi - 1.0 / 9.0).abs() < 1e-15);
        }
        assert_eq!(g[3], 0.0);
        let k4 = complete(4, 3).unwrap();
        for gi in gradient(&k4, &[0.25; 4]).unwrap() {
            assert!((gi - 0.1875).abs() < 1e-15);
        }
    }

    #[test]
    fn clique_values() {
        assert_eq!(clique_lagrangian(5, 3).unwrap(), rat(10, 125));
        assert_eq!(clique_lagrangian(7, 4).unwrap(), rat(35, 2401));
        assert_eq!(clique_lagrangian(4, 4).unwrap(), rat(1, 256));
        assert!(clique_lagrangian(3, 4).is_err());
    }

    #[test]
    fn maximize_clique_and_matching() {
        let r = maximize(&complete(5, 3).unwrap(), &quick());
        assert!((r.value - 0.08).abs() < 1e-9);
        assert!(r.converged);
        assert_eq!(r.support, vec![1, 2, 3, 4, 5]);
        let m = maximize(&matching2(3).unwrap(), &quick());
        assert!((m.value - 1.0 / 27.0).abs() < 1e-9);
        assert_eq!(m.support.len(), 3);
    }

    #[test]
    fn principal_star_value() {
        let s = principal_star(40, 4).unwrap();
        let cfg = LagrangianConfig { restarts: 4, structured_starts: 4, ..quick() };
        let r = maximize(&s, &cfg);
        assert!(r.value >= 0.0162 && r.value <= 0.017578125, "{}", r.value);
    }

    #[test]
    fn empty_graph_is_zero() {
        let r = maximize(&Hypergraph::empty(3, 4), &quick());
        assert_eq!(r.value, 0.0);
        assert_eq!(r.point.weights(), &[0.25; 4]);
    }

    #[test]
    fn reproducible_bits() {
        let k5 = complete(5, 3).unwrap();
        let a = maximize(&k5, &quick());
        let b = maximize(&k5, &quick());
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.point, b.point);
    }

    #[test]
    fn simplex_point_validation() {
        assert!(SimplexPoint::new(vec![0.5, 0.5]).is_ok());
        assert!(SimplexPoint::new(vec![0.5, 0.6]).is_err());
        assert!(SimplexPoint::new(vec![1.5, -0.5]).is_err());
    }
}
