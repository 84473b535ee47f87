//! Exact maximization over points that are constant on each part of a
//! vertex partition with at most three parts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{evaluate, support_of, LagrangianResult, Method, SimplexPoint};
use crate::error::{Error, Result};
use crate::exact::{int, maximize_bivariate, maximize_univariate, BiPoly, RatPoly};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::util::rat_f64;

const BOX_BUDGET: u64 = 200_000;

fn tolerance() -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 12))
}

/// Counts edges by how many vertices they have in each part, and checks that
/// every vertex of a part sees the same number of edges of each type.
fn edge_types(f: &Hypergraph, orbits: &[Vec<Vertex>]) -> Result<BTreeMap<Vec<u32>, u64>> {
    let n = f.n();
    if orbits.is_empty() || orbits.len() > 3 {
        return Err(Error::InvalidOrbits(format!("need 1 to 3 parts, got {}", orbits.len())));
    }
    let mut part = vec![usize::MAX; n + 1];
    for (j, o) in orbits.iter().enumerate() {
        if o.is_empty() {
            return Err(Error::InvalidOrbits("empty part".into()));
        }
        for &v in o {
            if v == 0 || v as usize > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if part[v as usize] != usize::MAX {
                return Err(Error::InvalidOrbits(format!("vertex {v} is in two parts")));
            }
            part[v as usize] = j;
        }
    }
    if let Some(v) = (1..=n).find(|&v| part[v] == usize::MAX) {
        return Err(Error::InvalidOrbits(format!("vertex {v} is in no part")));
    }
    let k = orbits.len();
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    // per vertex: type -> number of edges of that type through it
    let mut seen: Vec<BTreeMap<Vec<u32>, u64>> = vec![BTreeMap::new(); n + 1];
    for e in f.edges() {
        let mut t = vec![0u32; k];
        for &v in e {
            t[part[v as usize]] += 1;
        }
        for &v in e {
            *seen[v as usize].entry(t.clone()).or_default() += 1;
        }
        *counts.entry(t).or_default() += 1;
    }
    for (j, o) in orbits.iter().enumerate() {
        let first = &seen[o[0] as usize];
        if let Some(&v) = o.iter().find(|&&v| seen[v as usize] != *first) {
            return Err(Error::InvalidOrbits(format!(
                "vertices {} and {v} of part {} lie in different edge types",
                o[0],
                j + 1
            )));
        }
    }
    Ok(counts)
}

/// Maximizes the Lagrangian over points that give every vertex of a part the
/// same weight, in exact arithmetic. The partition must cover `[n]` and be
/// equitable: within a part, all vertices lie in the same number of edges of
/// each type, where the type of an edge records how many of its vertices fall
/// in each part. The certified enclosure has width at most `1e-12`.
///
/// When the partition comes from automorphisms the orbit-symmetric maximum is
/// the Lagrangian for clique-like families; in general it is a lower bound.
pub fn orbit_exact(f: &Hypergraph, orbits: &[Vec<Vertex>]) -> Result<LagrangianResult> {
    let counts = edge_types(f, orbits)?;
    let sizes: Vec<BigRational> = orbits.iter().map(|o| int(o.len() as i64)).collect();
    let tol = tolerance();
    // y_j is the total weight of part j
    let (lower, upper, y): (BigRational, BigRational, Vec<BigRational>) = match orbits.len() {
        1 => {
            let mut v = BigRational::zero();
            for (t, &c) in &counts {
                v += int(c as i64) * num_traits::pow(sizes[0].recip(), t[0] as usize);
            }
            (v.clone(), v, vec![BigRational::one()])
        }
        2 => {
            let a = RatPoly::x();
            let b = RatPoly::from_ints(&[1, -1]);
            let mut poly = RatPoly::zero();
            for (t, &c) in &counts {
                let term = a
                    .scale(&sizes[0].recip())
                    .pow(t[0] as usize)
                    .mul(&b.scale(&sizes[1].recip()).pow(t[1] as usize))
                    .scale(&int(c as i64));
                poly = poly.add(&term);
            }
            let m = maximize_univariate(&poly, &BigRational::zero(), &BigRational::one(), &tol);
            // report the better endpoint of the argmax interval
            let arg = if poly.eval(&m.arg_lo) >= poly.eval(&m.arg_hi) { m.arg_lo } else { m.arg_hi };
            let one_minus = BigRational::one() - &arg;
            (m.lower, m.upper, vec![arg, one_minus])
        }
        _ => {
            let a = BiPoly::a();
            let one_minus_a = BiPoly::constant(BigRational::one()).add(&a.scale(&-BigRational::one()));
            let b = BiPoly::b();
            let one_minus_b = BiPoly::constant(BigRational::one()).add(&b.scale(&-BigRational::one()));
            let ys = [a, one_minus_a.mul(&b), one_minus_a.mul(&one_minus_b)];
            let mut poly = BiPoly::zero();
            for (t, &c) in &counts {
                let mut term = BiPoly::constant(int(c as i64));
                for j in 0..3 {
                    term = term.mul(&ys[j].scale(&sizes[j].recip()).pow(t[j] as usize));
                }
                poly = poly.add(&term);
            }
            let m = maximize_bivariate(&poly, &tol, BOX_BUDGET)?;
            let (a, b) = m.arg;
            let y1 = a.clone();
            let y2 = (BigRational::one() - &a) * &b;
            let y3 = (BigRational::one() - &a) * (BigRational::one() - &b);
            (m.lower, m.upper, vec![y1, y2, y3])
        }
    };
    let mut x = vec![0.0; f.n()];
    for (j, o) in orbits.iter().enumerate() {
        let w = rat_f64(&(&y[j] / &sizes[j]));
        for &v in o {
            x[v as usize - 1] = w;
        }
    }
    let value = evaluate(f, &x)?;
    Ok(LagrangianResult {
        value,
        support: support_of(&x, 1e-8),
        point: SimplexPoint { weights: x },
        restarts_used: 0,
        converged: true,
        lower_bound: value,
        method: Method::OrbitExact,
        certified_lower: Some(lower),
        certified_upper: Some(upper),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::hypergraph::construct::{complete, matching2, principal_star};
    use crate::lagrangian::clique_lagrangian;

    fn width(r: &LagrangianResult) -> BigRational {
        r.certified_upper.clone().unwrap() - r.certified_lower.clone().unwrap()
    }

    #[test]
    fn clique_single_part() {
        let k = complete(7, 4).unwrap();
        let res = orbit_exact(&k, &[(1..=7).collect()]).unwrap();
        assert_eq!(res.certified_lower, Some(clique_lagrangian(7, 4).unwrap()));
        assert_eq!(res.certified_upper, Some(rat(35, 2401)));
        assert_eq!(res.method, Method::OrbitExact);
    }

    #[test]
    fn two_disjoint_edges() {
        let m = matching2(3).unwrap();
        let res = orbit_exact(&m, &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(width(&res) <= tolerance());
        assert!(res.certified_lower.clone().unwrap() <= rat(1, 27));
        assert!(res.certified_upper.clone().unwrap() >= rat(1, 27));
        assert!((res.value - 1.0 / 27.0).abs() < 1e-12);
    }

    #[test]
    fn principal_star_tends_to_limit() {
        // hub weight x, leaves uniform: x (1-x)^3 (38 * 37) / (39^2 * 6)
        let s = principal_star(40, 4).unwrap();
        let res = orbit_exact(&s, &[vec![1], (2..=40).collect()]).unwrap();
        assert!(width(&res) <= tolerance());
        let lim = 27.0 / 256.0 / 6.0;
        assert!(res.value < lim && res.value > 0.0162, "{}", res.value);
        assert!((res.point.weights()[0] - 0.25).abs() < 1e-6);
    }

    #[test]
    fn three_parts() {
        // any partition of a clique is equitable
        let k = complete(5, 3).unwrap();
        let res = orbit_exact(&k, &[vec![1], vec![2], vec![3, 4, 5]]).unwrap();
        assert!(width(&res) <= tolerance());
        assert!(res.certified_upper.clone().unwrap() >= rat(2, 25));
        assert!(res.certified_lower.clone().unwrap() <= rat(2, 25));
    }

    #[test]
    fn rejects_bad_partitions() {
        let k = complete(5, 3).unwrap();
        assert!(matches!(orbit_exact(&k, &[vec![1, 2], vec![3]]), Err(Error::InvalidOrbits(_))));
        assert!(matches!(orbit_exact(&k, &[vec![1, 2], vec![2, 3, 4, 5]]), Err(Error::InvalidOrbits(_))));
        let star = principal_star(6, 3).unwrap();
        // hub and a leaf in the same part
        assert!(matches!(orbit_exact(&star, &[vec![1, 2], vec![3, 4, 5, 6]]), Err(Error::InvalidOrbits(_))));
        let parts: Vec<Vec<u32>> = (1..=5).map(|v| vec![v]).collect();
        assert!(orbit_exact(&k, &parts).is_err());
    }
}
