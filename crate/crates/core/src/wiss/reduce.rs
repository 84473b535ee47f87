//! Deleting the last ground element of a weighted system.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{check_member, weight_mask_exact, ProbDist, Wiss};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::SetSystem;
use crate::util::{from_mask, rat_f64, ser_rat};

/// Removes `s` from every member and moves `p(s)` onto `∞`.
///
/// Fails with [`Error::NotIntersectingAfterDeletion`] when two members meet
/// only in `s` (or a member is `{s}`).
pub fn drop_last(w: &Wiss) -> Result<Wiss> {
    let s = w.s();
    if s < 2 {
        return Err(invalid("dropping the last element needs s >= 2"));
    }
    let bit = 1u64 << (s - 1);
    let masks: Vec<u64> = w.system().masks().iter().map(|&m| m & !bit).collect();
    if masks.contains(&0) {
        return Err(Error::NotIntersectingAfterDeletion);
    }
    let g = SetSystem::from_masks(s - 1, w.r(), masks)?;
    if !g.is_intersecting() {
        return Err(Error::NotIntersectingAfterDeletion);
    }
    Wiss::new(g, w.r(), w.dist().fold_last()?)
}

/// Both sides of `w_p̄(e - s) >= 2 w_p(e)` in exact arithmetic.
#[derive(Debug, Clone, Serialize)]
pub struct Contribution {
    #[serde(serialize_with = "ser_rat")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub rhs: BigRational,
    pub holds: bool,
}

/// Compares the weight a member containing `s` gains when `s` is folded into
/// `∞` against twice its own weight. Requires `s ∈ e` and
/// `p(∞) >= p(s) > 0`; outside that range the inequality can fail and the
/// call is rejected with [`Error::InvalidDistribution`].
pub fn contribution_check(e: &[u32], r: usize, p: &ProbDist) -> Result<Contribution> {
    let s = p.s();
    let m = check_member(e, r, s)?;
    if s == 0 || m >> (s - 1) & 1 == 0 {
        return Err(invalid(format!("member {e:?} does not contain s = {s}")));
    }
    let p = p.to_exact();
    let ps = &p.exact_p().expect("exact")[s - 1];
    let inf = p.exact_inf().expect("exact");
    if !ps.is_positive() || inf < ps {
        return Err(Error::InvalidDistribution("contribution bound needs p(inf) >= p(s) > 0".into()));
    }
    let folded = p.fold_last()?;
    let lhs = weight_mask_exact(m & !(1 << (s - 1)), r, &folded);
    let rhs = weight_mask_exact(m, r, &p) * BigRational::from_integer(2.into());
    Ok(Contribution { holds: lhs >= rhs, lhs, rhs })
}

/// Members of `G` sorted by whether some other member meets them only in `s`.
#[derive(Debug, Clone, Serialize)]
pub struct Case1Split {
    /// Members with no such partner.
    pub g0: Vec<Vec<u32>>,
    pub h1: Vec<Vec<u32>>,
    pub h2: Vec<Vec<u32>>,
    /// Pairs `e, f` with `e ∩ f = {s}`.
    pub pairs: Vec<(Vec<u32>, Vec<u32>)>,
    /// Every pair covers `[s]`.
    pub pairs_cover_ground: bool,
    /// `(G0 - s) ∪ (H1 - s)` and `(G0 - s) ∪ (H2 - s)` are intersecting.
    pub halves_intersecting: bool,
    /// `G0 - s` shares no set with `H1 - s` or `H2 - s`.
    pub traces_disjoint: bool,
    /// Every member has at most one partner.
    pub partners_unique: bool,
}

impl Contribution {
    /// `lhs / rhs`, infinite when the member has zero weight.
    pub fn ratio(&self) -> f64 {
        if self.rhs.is_zero() {
            f64::INFINITY
        } else {
            rat_f64(&(&self.lhs / &self.rhs))
        }
    }
}

impl Case1Split {
    pub fn holds(&self) -> bool {
        self.pairs_cover_ground && self.halves_intersecting && self.traces_disjoint
    }
}

/// Splits the members that meet some other member only in `s` into two
/// sides so that partners always land on opposite sides.
pub fn case1_split(w: &Wiss) -> Result<Case1Split> {
    let s = w.s();
    if s < 3 {
        return Err(invalid("the split needs s >= 3"));
    }
    let bit = 1u64 << (s - 1);
    let full = (1u64 << s) - 1;
    let masks = w.system().masks();
    let n = masks.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if masks[a] & masks[b] == bit {
                adj[a].push(b);
                adj[b].push(a);
                pairs.push((a, b));
            }
        }
    }
    let mut side = vec![0u8; n];
    for start in 0..n {
        if adj[start].is_empty() || side[start] != 0 {
            continue;
        }
        side[start] = 1;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if side[u] == 0 {
                    side[u] = 3 - side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return Err(invalid("members meeting only in s cannot be split into two sides"));
                }
            }
        }
    }
    let pick = |k: u8| -> Vec<u64> { (0..n).filter(|&i| side[i] == k).map(|i| masks[i]).collect() };
    let (g0, h1, h2) = (pick(0), pick(1), pick(2));
    let strip = |v: &[u64]| -> Vec<u64> { v.iter().map(|&m| m & !bit).collect() };
    let intersecting = |v: &[u64]| v.iter().all(|&a| a != 0 && v.iter().all(|&b| a & b != 0));
    let half = |h: &[u64]| {
        let mut v = strip(&g0);
        v.extend(strip(h));
        intersecting(&v)
    };
    let g0s = strip(&g0);
    let disjoint = |h: &[u64]| strip(h).iter().all(|m| !g0s.contains(m));
    let as_lists = |v: &[u64]| v.iter().map(|&m| from_mask(m)).collect::<Vec<_>>();
    Ok(Case1Split {
        pairs_cover_ground: pairs.iter().all(|&(a, b)| masks[a] | masks[b] == full),
        halves_intersecting: half(&h1) && half(&h2),
        traces_disjoint: disjoint(&h1) && disjoint(&h2),
        partners_unique: adj.iter().all(|a| a.len() <= 1),
        pairs: pairs.iter().map(|&(a, b)| (from_mask(masks[a]), from_mask(masks[b]))).collect(),
        g0: as_lists(&g0),
        h1: as_lists(&h1),
        h2: as_lists(&h2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn dropping_keeps_weight() {
        let g = SetSystem::new(2, 3, [vec![1], vec![1, 2]]).unwrap();
        let w = Wiss::new(g, 3, ProbDist::exact(vec![q(1, 3), q(1, 4)]).unwrap()).unwrap();
        let d = drop_last(&w).unwrap();
        assert_eq!(d.system().members(), vec![vec![1]]);
        assert!(d.weight_exact() >= w.weight_exact());
    }

    #[test]
    fn zero_last_weight_is_neutral() {
        let g = SetSystem::new(3, 3, [vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        let g2 = SetSystem::new(2, 3, [vec![1, 2]]).unwrap();
        let w = Wiss::new(g, 3, ProbDist::exact(vec![q(1, 3), q(1, 3), q(0, 1)]).unwrap()).unwrap();
        // {1,3} and {2,3} still meet only in 3 -> cannot drop
        assert!(matches!(drop_last(&w), Err(Error::NotIntersectingAfterDeletion)));
        let w2 = Wiss::new(g2.clone(), 3, ProbDist::exact(vec![q(1, 3), q(0, 1)]).unwrap()).unwrap();
        let folded =
            Wiss::new(SetSystem::new(1, 3, [[1]]).unwrap(), 3, ProbDist::exact(vec![q(1, 3)]).unwrap()).unwrap();
        // member {1,2} becomes {1} under a zero-weight 2
        assert_eq!(drop_last(&w2).unwrap().weight_exact(), folded.weight_exact());
    }

    #[test]
    fn contribution_at_full_size_is_tight() {
        // |e| = r and p(inf) = p(s): the ratio is exactly 2
        let p = ProbDist::exact(vec![q(1, 4), q(1, 4), q(1, 4)]).unwrap();
        let c = contribution_check(&[1, 2, 3], 3, &p).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, c.rhs);
        assert_eq!(c.ratio(), 1.0);
    }

    #[test]
    fn contribution_grows_as_last_weight_vanishes() {
        let small = ProbDist::exact(vec![q(1, 3), q(1, 1000)]).unwrap();
        let c = contribution_check(&[1, 2], 4, &small).unwrap();
        assert!(c.ratio() > 50.0);
    }

    #[test]
    fn contribution_precondition() {
        let p = ProbDist::exact(vec![q(1, 2), q(2, 5)]).unwrap();
        assert!(matches!(contribution_check(&[1, 2], 3, &p), Err(Error::InvalidDistribution(_))));
        assert!(contribution_check(&[1], 3, &p).is_err());
    }

    #[test]
    fn split_without_partners() {
        let g = SetSystem::new(3, 3, [vec![1, 2], vec![1, 3], vec![1, 2, 3]]).unwrap();
        let w = Wiss::new(g, 3, ProbDist::new(vec![0.3, 0.2, 0.1]).unwrap()).unwrap();
        let split = case1_split(&w).unwrap();
        assert_eq!(split.g0.len(), 3);
        assert!(split.h1.is_empty() && split.h2.is_empty());
        assert!(split.holds());
    }

    #[test]
    fn partners_land_on_opposite_sides() {
        // s = 4: {1,4} and {2,3,4} meet only in 4
        let g = SetSystem::new(4, 3, [vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3, 4], vec![1, 2, 3]]).unwrap();
        let w = Wiss::new(g, 3, ProbDist::new(vec![0.3, 0.2, 0.2, 0.1]).unwrap()).unwrap();
        let split = case1_split(&w).unwrap();
        assert_eq!(split.pairs, vec![(vec![1, 4], vec![2, 3, 4])]);
        assert_eq!(split.h1, vec![vec![1, 4]]);
        assert_eq!(split.h2, vec![vec![2, 3, 4]]);
        assert!(split.holds());
        assert!(split.partners_unique);
    }
}
