//! Small combinatorial helpers shared across modules.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Colex comparison of two ascending vertex lists.
///
/// `a < b` iff the largest element of the symmetric difference lies in `b`.
/// Works for lists of different lengths.
pub fn colex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    while i > 0 && j > 0 {
        match a[i - 1].cmp(&b[j - 1]) {
            Ordering::Equal => {
                i -= 1;
                j -= 1;
            }
            other => return other,
        }
    }
    i.cmp(&j)
}

/// Bitmask of an ascending vertex list; vertex `v` occupies bit `v - 1`.
pub fn to_mask(set: &[u32]) -> u64 {
    set.iter().fold(0u64, |m, &v| m | (1u64 << (v - 1)))
}

/// Ascending vertex list of a bitmask.
pub fn from_mask(mut mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let b = mask.trailing_zeros();
        out.push(b + 1);
        mask &= mask - 1;
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// n (n-1) ... (n-k+1), zero when k > n.
pub fn falling(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128)
}

pub fn factorial(n: u64) -> u128 {
    (1..=n).fold(1u128, |acc, i| acc * i as u128)
}

/// All `k`-subsets of `[n]` in colex order.
pub fn k_subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    // Colex successor on ascending lists.
    let mut cur: Vec<u32> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let mut i = 0usize;
        while i < k as usize {
            let limit = if i + 1 < k as usize { cur[i + 1] } else { n + 1 };
            if cur[i] + 1 < limit {
                cur[i] += 1;
                for (j, slot) in cur.iter_mut().enumerate().take(i) {
                    *slot = j as u32 + 1;
                }
                break;
            }
            i += 1;
        }
        if i == k as usize {
            return out;
        }
    }
}

/// Kahan-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// `a/b` string form used in reports.
pub fn rat_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rat_f64(q: &BigRational) -> f64 {
    // Scale so both parts fit comfortably in f64 before dividing.
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            let bits = q.denom().bits().max(q.numer().bits()) as i64 - 900;
            let shift = bits.max(0) as usize;
            let a = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let b = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            a / b
        }
    }
}

/// Deterministic 64-bit mixer (splitmix64 finalizer).
pub(crate) fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Parses `a/b`, an integer, or a plain decimal such as `0.25` exactly.
pub fn parse_rat(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((a, b)) = t.split_once('/') {
        let a: BigInt = a.trim().parse().ok()?;
        let b: BigInt = b.trim().parse().ok()?;
        if b.is_zero() {
            return None;
        }
        return Some(BigRational::new(a, b));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let q = BigRational::new(digits, scale);
    Some(if neg { -q } else { q })
}

pub(crate) fn ser_rat<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(q))
}

pub(crate) fn ser_opt_rat<S: serde::Serializer>(q: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_some(&rat_string(q)),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_rats<S: serde::Serializer>(qs: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(qs.len()))?;
    for q in qs {
        seq.serialize_element(&rat_string(q))?;
    }
    seq.end()
}

/// Exact rational value of a float.
pub fn rat_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_exactly() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(parse_rat("3/12"), Some(q(1, 4)));
        assert_eq!(parse_rat("0.25"), Some(q(1, 4)));
        assert_eq!(parse_rat("-1.5"), Some(q(-3, 2)));
        assert_eq!(parse_rat("7"), Some(q(7, 1)));
        assert_eq!(parse_rat(".5"), Some(q(1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(parse_rat("1e3"), None);
    }

    #[test]
    fn colex_orders_by_largest_difference() {
        assert_eq!(colex_cmp(&[1, 3], &[2, 3]), Ordering::Less);
        assert_eq!(colex_cmp(&[1, 2, 4], &[1, 3, 4]), Ordering::Less);
        assert_eq!(colex_cmp(&[3], &[1, 2]), Ordering::Greater);
        assert_eq!(colex_cmp(&[1], &[1, 2]), Ordering::Less);
        assert_eq!(colex_cmp(&[2, 5], &[2, 5]), Ordering::Equal);
    }

    #[test]
    fn colex_matches_mask_order() {
        let sets = [vec![1], vec![2], vec![1, 2], vec![3], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
        for a in &sets {
            for b in &sets {
                assert_eq!(colex_cmp(a, b), to_mask(a).cmp(&to_mask(b)));
            }
        }
    }

    #[test]
    fn subsets_are_colex_sorted_and_counted() {
        let s = k_subsets(6, 3);
        assert_eq!(s.len(), 20);
        assert!(s.windows(2).all(|w| colex_cmp(&w[0], &w[1]) == Ordering::Less));
        assert_eq!(k_subsets(4, 0), vec![Vec::<u32>::new()]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(falling(9, 5), 15120);
        assert_eq!(falling(3, 4), 0);
        assert_eq!(factorial(5), 120);
        assert_eq!(binomial_big(999, 3), BigUint::from(binomial(999, 3)));
    }
}
