//! Weighted intersecting set systems.
//!
//! A system is a triple `(G, s, p)`: an intersecting family `G` of subsets of
//! `[s]` with at most `r` elements, and a probability distribution `p` on
//! `[s] ∪ {∞}` that is nonincreasing on `[s]`. The weight of a member `e` is
//! the probability that an `r`-element multiset drawn from `p`, restricted to
//! `[s]`, is exactly `e`:
//!
//! `w_p(e) = r!/(r-|e|)! * p(∞)^(r-|e|) * prod_{i in e} p(i)`.

mod compress;
mod generating;
mod montecarlo;
mod optimize;
mod reduce;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::SetSystem;
use crate::util::{falling, from_mask, rat_f64, rat_from_f64, ser_opt_rat, ser_rat, ser_rats, Kahan};

pub use compress::{compress, compress_to_fixpoint, is_left_compressed};
pub use generating::{reconstruct, restrict};
pub use montecarlo::{monte_carlo_weight, sample_multiset, McEstimate};
pub use optimize::{optimize_weight, WeightOptConfig, WeightOptimum};
pub use reduce::{case1_split, contribution_check, drop_last, Case1Split, Contribution};

const SUM_TOL: f64 = 1e-12;

/// Probability weights on `[s] ∪ {∞}`, nonincreasing on `[s]`.
///
/// Float weights are always present. Distributions built from rationals also
/// keep the exact values, which the exact weight functions then use.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbDist {
    p: Vec<f64>,
    p_inf: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<ExactDist>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct ExactDist {
    #[serde(serialize_with = "ser_rats")]
    p: Vec<BigRational>,
    #[serde(serialize_with = "ser_rat")]
    p_inf: BigRational,
}

fn check_order<T: PartialOrd>(p: &[T]) -> Result<()> {
    if let Some(i) = (1..p.len()).find(|&i| p[i] > p[i - 1]) {
        return Err(Error::InvalidDistribution(format!("weights increase at position {}", i + 1)));
    }
    Ok(())
}

impl ProbDist {
    /// `p(∞)` is the leftover mass `1 - sum p`.
    pub fn new(p: Vec<f64>) -> Result<Self> {
        let mut acc = Kahan::default();
        for &v in &p {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidDistribution(format!("weight {v} is not a nonnegative number")));
            }
            acc.add(v);
        }
        check_order(&p)?;
        let p_inf = 1.0 - acc.value();
        if p_inf < -SUM_TOL {
            return Err(Error::InvalidDistribution(format!("weights sum to {} > 1", acc.value())));
        }
        Ok(Self { p, p_inf: p_inf.max(0.0), exact: None })
    }

    pub fn with_inf(p: Vec<f64>, p_inf: f64) -> Result<Self> {
        if !p_inf.is_finite() || p_inf < 0.0 {
            return Err(Error::InvalidDistribution(format!("p(inf) = {p_inf} is negative")));
        }
        let mut d = Self::new(p)?;
        if (d.p_inf - p_inf).abs() > SUM_TOL {
            return Err(Error::InvalidDistribution("weights do not sum to 1".into()));
        }
        d.p_inf = p_inf;
        Ok(d)
    }

    /// Exact distribution; `p(∞)` is the exact leftover mass.
    pub fn exact(p: Vec<BigRational>) -> Result<Self> {
        if p.iter().any(|v| v.is_negative()) {
            return Err(Error::InvalidDistribution("negative weight".into()));
        }
        check_order(&p)?;
        let total: BigRational = p.iter().sum();
        let p_inf = BigRational::one() - total;
        if p_inf.is_negative() {
            return Err(Error::InvalidDistribution("weights sum to more than 1".into()));
        }
        Ok(Self::from_exact(p, p_inf))
    }

    fn from_exact(p: Vec<BigRational>, p_inf: BigRational) -> Self {
        Self { p: p.iter().map(rat_f64).collect(), p_inf: rat_f64(&p_inf), exact: Some(ExactDist { p, p_inf }) }
    }

    /// All mass on `∞`.
    pub fn degenerate(s: usize) -> Self {
        Self::from_exact(vec![BigRational::zero(); s], BigRational::one())
    }

    pub fn s(&self) -> usize {
        self.p.len()
    }

    pub fn p(&self) -> &[f64] {
        &self.p
    }

    pub fn p_inf(&self) -> f64 {
        self.p_inf
    }

    /// `p(i)` for `i` in `[s]`.
    pub fn prob(&self, i: u32) -> f64 {
        self.p[i as usize - 1]
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn exact_p(&self) -> Option<&[BigRational]> {
        self.exact.as_ref().map(|e| e.p.as_slice())
    }

    pub fn exact_inf(&self) -> Option<&BigRational> {
        self.exact.as_ref().map(|e| &e.p_inf)
    }

    /// The exact form, converting float weights by their binary values and
    /// taking `p(∞)` as the exact leftover.
    pub fn to_exact(&self) -> ProbDist {
        if self.exact.is_some() {
            return self.clone();
        }
        let p: Vec<BigRational> = self.p.iter().map(|&v| rat_from_f64(v)).collect();
        let total: BigRational = p.iter().sum();
        let p_inf = (BigRational::one() - total).max(BigRational::zero());
        Self::from_exact(p, p_inf)
    }

    /// `(p̄, ∞)`: the distribution on `[s-1] ∪ {∞}` that moves `p(s)` onto
    /// `∞`.
    pub fn fold_last(&self) -> Result<ProbDist> {
        if self.s() == 0 {
            return Err(Error::InvalidParameter("cannot fold an empty ground set".into()));
        }
        let s = self.s();
        if let Some(e) = &self.exact {
            let p = e.p[..s - 1].to_vec();
            let p_inf = &e.p_inf + &e.p[s - 1];
            return Ok(Self::from_exact(p, p_inf));
        }
        Ok(Self { p: self.p[..s - 1].to_vec(), p_inf: self.p_inf + self.p[s - 1], exact: None })
    }
}

/// Which arithmetic produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NumericMode {
    Float,
    Rational,
}

/// A weighted intersecting set system.
#[derive(Debug, Clone, PartialEq)]
pub struct Wiss {
    g: SetSystem,
    r: usize,
    p: ProbDist,
}

impl Wiss {
    pub fn new(g: SetSystem, r: usize, p: ProbDist) -> Result<Self> {
        if g.s() != p.s() {
            return Err(Error::DimensionMismatch { expected: g.s(), got: p.s() });
        }
        if let Some(&m) = g.masks().iter().find(|m| m.count_ones() as usize > r) {
            return Err(Error::InvalidEdge { edge: from_mask(m), reason: format!("more than r = {r} elements") });
        }
        if !g.is_intersecting() {
            return Err(Error::NotIntersecting);
        }
        let g = if g.r_cap() == r { g } else { g.with_r_cap(r)? };
        Ok(Self { g, r, p })
    }

    pub fn system(&self) -> &SetSystem {
        &self.g
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.g.s()
    }

    pub fn dist(&self) -> &ProbDist {
        &self.p
    }

    pub fn weight(&self) -> f64 {
        weight_masks(self.g.masks(), self.r, &self.p)
    }

    pub fn weight_exact(&self) -> BigRational {
        let p = self.p.to_exact();
        self.g.masks().iter().map(|&m| weight_mask_exact(m, self.r, &p)).sum()
    }
}

fn check_member(e: &[u32], r: usize, s: usize) -> Result<u64> {
    if e.len() > r {
        return Err(Error::InvalidEdge { edge: e.to_vec(), reason: format!("more than r = {r} elements") });
    }
    if let Some(&v) = e.iter().find(|&&v| v == 0 || v as usize > s) {
        return Err(Error::VertexOutOfRange { vertex: v, n: s });
    }
    let m = crate::util::to_mask(e);
    if m.count_ones() as usize != e.len() {
        return Err(Error::InvalidEdge { edge: e.to_vec(), reason: "repeated element".into() });
    }
    Ok(m)
}

pub(crate) fn weight_mask(m: u64, r: usize, p: &ProbDist) -> f64 {
    let k = m.count_ones() as usize;
    let mut w = falling(r as u64, k as u64) as f64 * p.p_inf.powi((r - k) as i32);
    let mut rest = m;
    while rest != 0 {
        w *= p.p[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    w
}

pub(crate) fn weight_mask_exact(m: u64, r: usize, p: &ProbDist) -> BigRational {
    let e = p.exact.as_ref().expect("exact distribution");
    let k = m.count_ones() as usize;
    let mut w =
        BigRational::from_integer(BigInt::from(falling(r as u64, k as u64))) * num_traits::pow(e.p_inf.clone(), r - k);
    let mut rest = m;
    while rest != 0 {
        w *= &e.p[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    w
}

pub(crate) fn weight_masks(masks: &[u64], r: usize, p: &ProbDist) -> f64 {
    let mut acc = Kahan::default();
    for &m in masks {
        acc.add(weight_mask(m, r, p));
    }
    acc.value()
}

/// `w_p(e)` in floating point.
pub fn weight_edge(e: &[u32], r: usize, p: &ProbDist) -> Result<f64> {
    let m = check_member(e, r, p.s())?;
    Ok(weight_mask(m, r, p))
}

/// `w_p(e)` in exact arithmetic (float weights are taken at their binary
/// values).
pub fn weight_edge_exact(e: &[u32], r: usize, p: &ProbDist) -> Result<BigRational> {
    let m = check_member(e, r, p.s())?;
    Ok(weight_mask_exact(m, r, &p.to_exact()))
}

/// `w_p(G)` for any family of at most `r`-element subsets of `[s]`.
pub fn weight_of(g: &SetSystem, r: usize, p: &ProbDist) -> Result<f64> {
    check_family(g, r, p)?;
    Ok(weight_masks(g.masks(), r, p))
}

pub fn weight_of_exact(g: &SetSystem, r: usize, p: &ProbDist) -> Result<BigRational> {
    check_family(g, r, p)?;
    let p = p.to_exact();
    Ok(g.masks().iter().map(|&m| weight_mask_exact(m, r, &p)).sum())
}

fn check_family(g: &SetSystem, r: usize, p: &ProbDist) -> Result<()> {
    if g.s() != p.s() {
        return Err(Error::DimensionMismatch { expected: g.s(), got: p.s() });
    }
    if let Some(&m) = g.masks().iter().find(|m| m.count_ones() as usize > r) {
        return Err(Error::InvalidEdge { edge: from_mask(m), reason: format!("more than r = {r} elements") });
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeWeight {
    pub edge: Vec<u32>,
    pub weight: f64,
    #[serde(serialize_with = "ser_opt_rat", skip_serializing_if = "Option::is_none")]
    pub exact: Option<BigRational>,
}

/// Per-member weights and their total.
#[derive(Debug, Clone, Serialize)]
pub struct WeightReport {
    pub mode: NumericMode,
    pub total: f64,
    #[serde(serialize_with = "ser_opt_rat", skip_serializing_if = "Option::is_none")]
    pub total_exact: Option<BigRational>,
    pub per_edge: Vec<EdgeWeight>,
}

/// Weights of every member. Exact distributions give an exact report.
pub fn weight_system(w: &Wiss) -> WeightReport {
    let exact = w.p.is_exact();
    let mut per_edge = Vec::with_capacity(w.g.len());
    let mut acc = Kahan::default();
    let mut total_exact = exact.then(BigRational::zero);
    for &m in w.g.masks() {
        let ex = exact.then(|| weight_mask_exact(m, w.r, &w.p));
        let weight = match &ex {
            Some(q) => rat_f64(q),
            None => weight_mask(m, w.r, &w.p),
        };
        acc.add(weight);
        if let (Some(t), Some(q)) = (total_exact.as_mut(), ex.as_ref()) {
            *t += q;
        }
        per_edge.push(EdgeWeight { edge: from_mask(m), weight, exact: ex });
    }
    let total = match &total_exact {
        Some(t) => rat_f64(t),
        None => acc.value(),
    };
    WeightReport { mode: if exact { NumericMode::Rational } else { NumericMode::Float }, total, total_exact, per_edge }
}

/// `sum_{e in G} sum_{i in e} i`, the secondary order used to compare
/// systems of equal weight.
pub fn label_sum(g: &SetSystem) -> u64 {
    g.masks().iter().map(|&m| from_mask(m).iter().map(|&v| v as u64).sum::<u64>()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn single_point_weight() {
        let p = ProbDist::new(vec![0.3]).unwrap();
        assert!((weight_edge(&[1], 3, &p).unwrap() - 0.441).abs() < 1e-15);
        let pe = ProbDist::exact(vec![q(3, 10)]).unwrap();
        assert_eq!(weight_edge_exact(&[1], 3, &pe).unwrap(), q(441, 1000));
    }

    #[test]
    fn pair_weight() {
        let p = ProbDist::exact(vec![q(3, 10), q(1, 5)]).unwrap();
        assert_eq!(weight_edge_exact(&[1, 2], 3, &p).unwrap(), q(18, 100));
        assert!((weight_edge(&[1, 2], 3, &p).unwrap() - 0.18).abs() < 1e-15);
    }

    #[test]
    fn full_edges_have_no_infinity_factor() {
        let p = ProbDist::exact(vec![q(1, 3), q(1, 3), q(1, 3)]).unwrap();
        assert_eq!(weight_edge_exact(&[1, 2, 3], 3, &p).unwrap(), q(6, 27));
    }

    #[test]
    fn rejects_bad_members_and_distributions() {
        let p = ProbDist::new(vec![0.5, 0.2]).unwrap();
        assert!(weight_edge(&[1, 2, 3], 3, &p).is_err());
        assert!(weight_edge(&[1, 2], 1, &p).is_err());
        assert!(ProbDist::new(vec![0.2, 0.5]).is_err());
        assert!(ProbDist::new(vec![0.7, 0.6]).is_err());
        assert!(ProbDist::new(vec![-0.1]).is_err());
        assert!(ProbDist::exact(vec![q(1, 2), q(2, 3)]).is_err());
    }

    #[test]
    fn principal_star_report() {
        let g = SetSystem::new(1, 4, [[1]]).unwrap();
        let w = Wiss::new(g, 4, ProbDist::exact(vec![q(1, 4)]).unwrap()).unwrap();
        let rep = weight_system(&w);
        assert_eq!(rep.mode, NumericMode::Rational);
        assert_eq!(rep.total_exact, Some(q(27, 64)));
        assert_eq!(rep.total, 0.421875);
    }

    #[test]
    fn report_totals_match_members() {
        let g = SetSystem::new(4, 3, [vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 4]]).unwrap();
        let p = ProbDist::new(vec![0.3, 0.2, 0.2, 0.1]).unwrap();
        let w = Wiss::new(g, 3, p).unwrap();
        let rep = weight_system(&w);
        let sum: f64 = rep.per_edge.iter().map(|e| e.weight).sum();
        assert!((sum - rep.total).abs() < 1e-12);
        assert!(rep.total <= 1.0);
        assert!((rep.total - w.weight()).abs() < 1e-15);
        assert!((rat_f64(&w.weight_exact()) - w.weight()).abs() < 1e-15);
    }

    #[test]
    fn wiss_requires_intersecting() {
        let g = SetSystem::new(2, 2, [[1], [2]]).unwrap();
        let p = ProbDist::new(vec![0.5, 0.5]).unwrap();
        assert!(matches!(Wiss::new(g, 2, p), Err(Error::NotIntersecting)));
    }

    #[test]
    fn folding_moves_last_weight_to_infinity() {
        let p = ProbDist::exact(vec![q(1, 2), q(1, 4)]).unwrap();
        let f = p.fold_last().unwrap();
        assert_eq!(f.exact_p().unwrap(), &[q(1, 2)]);
        assert_eq!(f.exact_inf().unwrap(), &q(1, 2));
    }

    #[test]
    fn label_sums() {
        let g = SetSystem::new(3, 2, [vec![1, 2], vec![3]]).unwrap();
        assert_eq!(label_sum(&g), 6);
    }
}
