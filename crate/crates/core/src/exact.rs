//! Exact polynomial tools: univariate rational polynomials with Sturm root
//! isolation, and bivariate polynomials maximized over the unit square by
//! branch and bound with rational interval bounds.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::util::rat_f64;

/// `a/b` in lowest terms.
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

pub fn int(a: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(a))
}

/// Univariate polynomial, coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coef: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coef: Vec<BigRational>) -> Self {
        while coef.last().is_some_and(|c| c.is_zero()) {
            coef.pop();
        }
        Self { coef }
    }

    pub fn from_ints(coef: &[i64]) -> Self {
        Self::new(coef.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coef: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coef.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coef
    }

    fn lead(&self) -> &BigRational {
        self.coef.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coef.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coef.iter().rev().fold(0.0, |acc, c| acc * x + rat_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coef.iter().enumerate().skip(1).map(|(k, c)| c * int(k as i64)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coef.len().max(other.coef.len());
        let z = BigRational::zero();
        Self::new((0..n).map(|k| self.coef.get(k).unwrap_or(&z) + other.coef.get(k).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coef.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coef.len() + other.coef.len() - 1];
        for (i, a) in self.coef.iter().enumerate() {
            for (j, b) in other.coef.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(BigRational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Quotient and remainder of polynomial division.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.coef.clone();
        let dl = d.lead().clone();
        let dd = d.degree();
        if self.coef.len() < d.coef.len() {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.coef.len() - d.coef.len() + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, b) in d.coef.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let l = a.lead().clone();
        a.scale(&l.recip())
    }

    /// The polynomial with the same roots, each simple.
    pub fn square_free(&self) -> Self {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain[chain.len() - 1].is_zero() {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            chain.push(r.scale(&-BigRational::one()));
        }
        chain.pop();
        chain
    }

    fn sign_changes(chain: &[Self], x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Disjoint intervals `[a, b]` inside `[lo, hi]`, each holding exactly one
    /// distinct real root, with `b - a <= width`. Roots are returned in
    /// increasing order; a root found exactly is reported as `[x, x]`.
    pub fn isolate_roots(
        &self,
        lo: &BigRational,
        hi: &BigRational,
        width: &BigRational,
    ) -> Vec<(BigRational, BigRational)> {
        if self.is_zero() || self.degree() == 0 {
            return Vec::new();
        }
        let p = self.square_free();
        let chain = p.sturm_chain();
        let mut out = Vec::new();
        // endpoint roots are handled separately: Sturm counts roots in (a, b]
        if p.eval(lo).is_zero() {
            out.push((lo.clone(), lo.clone()));
        }
        let mut stack = vec![(lo.clone(), hi.clone())];
        let mut found = Vec::new();
        while let Some((a, b)) = stack.pop() {
            let count = Self::sign_changes(&chain, &a) - Self::sign_changes(&chain, &b);
            if count == 0 {
                continue;
            }
            if count == 1 && &b - &a <= *width {
                if p.eval(&b).is_zero() {
                    found.push((b.clone(), b));
                } else {
                    found.push((a, b));
                }
                continue;
            }
            let mid = (&a + &b) / int(2);
            if count == 1 && p.eval(&mid).is_zero() {
                found.push((mid.clone(), mid));
                continue;
            }
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
        found.sort_by(|x, y| x.0.cmp(&y.0));
        out.extend(found);
        out.dedup();
        out
    }
}

/// Certified maximum of `f` on `[lo, hi]`: the exact maximum lies in
/// `[lower, upper]` and is attained within `[arg_lo, arg_hi]`.
#[derive(Debug, Clone)]
pub struct UnivariateMax {
    pub lower: BigRational,
    pub upper: BigRational,
    pub arg_lo: BigRational,
    pub arg_hi: BigRational,
}

/// Upper bound on `|f'|` over `[a, b]` by coefficient magnitudes.
fn derivative_bound(f: &RatPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let m = a.abs().max(b.abs());
    let d = f.derivative();
    let mut acc = BigRational::zero();
    for c in d.coef.iter().rev() {
        acc = acc * &m + c.abs();
    }
    acc
}

/// Maximizes a univariate polynomial on `[lo, hi]` from its critical points,
/// with enclosure width at most `tol`.
pub fn maximize_univariate(f: &RatPoly, lo: &BigRational, hi: &BigRational, tol: &BigRational) -> UnivariateMax {
    let mut cands: Vec<UnivariateMax> = [lo, hi]
        .into_iter()
        .map(|x| {
            let v = f.eval(x);
            UnivariateMax { lower: v.clone(), upper: v, arg_lo: x.clone(), arg_hi: x.clone() }
        })
        .collect();
    let d = f.derivative().square_free();
    let coarse = (hi - lo) / int(1024);
    for (mut a, mut b) in d.isolate_roots(lo, hi, &coarse) {
        // d has exactly one simple root in (a, b], and d(b) != 0 unless a == b
        let db_sign = d.eval(&b).signum();
        loop {
            if a == b {
                let v = f.eval(&a);
                cands.push(UnivariateMax { lower: v.clone(), upper: v, arg_lo: a.clone(), arg_hi: b.clone() });
                break;
            }
            let mid = (&a + &b) / int(2);
            let fm = f.eval(&mid);
            let lower = fm.clone().max(f.eval(&a)).max(f.eval(&b));
            let upper = &fm + derivative_bound(f, &a, &b) * (&b - &a) / int(2);
            if &upper - &lower <= *tol {
                cands.push(UnivariateMax { lower, upper, arg_lo: a, arg_hi: b });
                break;
            }
            let dm = d.eval(&mid);
            if dm.is_zero() {
                a = mid.clone();
                b = mid;
            } else if dm.signum() == db_sign {
                b = mid;
            } else {
                a = mid;
            }
        }
    }
    let best = cands.iter().max_by(|x, y| x.lower.cmp(&y.lower)).expect("endpoints").clone();
    let upper = cands.iter().map(|c| c.upper.clone()).max().expect("endpoints");
    UnivariateMax { upper, ..best }
}

/// Rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Interval {
    pub(crate) lo: BigRational,
    pub(crate) hi: BigRational,
}

/// Bivariate polynomial in `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn a() -> Self {
        let mut p = Self::zero();
        p.add_term(1, 0, BigRational::one());
        p
    }

    pub fn b() -> Self {
        let mut p = Self::zero();
        p.add_term(0, 1, BigRational::one());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        let e = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &other.terms {
                out.add_term(i + k, j + l, c * d);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::constant(BigRational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * num_traits::pow(a.clone(), i as usize) * num_traits::pow(b.clone(), j as usize);
        }
        acc
    }

    pub fn d_a(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * int(i as i64));
            }
        }
        out
    }

    pub fn d_b(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * int(j as i64));
            }
        }
        out
    }

    /// Enclosure of the range over a box inside the nonnegative quadrant:
    /// each monomial is monotone there, so its range is spanned by the
    /// corner values.
    pub(crate) fn range(&self, a: &Interval, b: &Interval) -> Interval {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            let small = c * num_traits::pow(a.lo.clone(), i as usize) * num_traits::pow(b.lo.clone(), j as usize);
            let big = c * num_traits::pow(a.hi.clone(), i as usize) * num_traits::pow(b.hi.clone(), j as usize);
            if c.is_positive() {
                lo += small;
                hi += big;
            } else {
                lo += big;
                hi += small;
            }
        }
        Interval { lo, hi }
    }
}

/// Certified maximum of a bivariate polynomial over `[0, 1]^2`.
#[derive(Debug, Clone)]
pub struct BivariateMax {
    pub lower: BigRational,
    pub upper: BigRational,
    /// Point where `lower` is attained.
    pub arg: (BigRational, BigRational),
    pub boxes: u64,
}

struct Cell {
    key: f64,
    upper: BigRational,
    a: Interval,
    b: Interval,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.total_cmp(&other.key).then_with(|| other.a.lo.cmp(&self.a.lo)).then_with(|| other.b.lo.cmp(&self.b.lo))
    }
}

/// Best-first branch and bound over the unit square. Upper bounds use the
/// smaller of the monomial enclosure and the mean value form
/// `f(c) + sum_i max|∂_i f| * halfwidth_i`; lower bounds are exact values at
/// box centers. Stops once the enclosure is narrower than `tol`.
pub fn maximize_bivariate(f: &BiPoly, tol: &BigRational, budget: u64) -> Result<BivariateMax> {
    let fa = f.d_a();
    let fb = f.d_b();
    let two = int(2);
    let mut best_val = f.eval(&BigRational::zero(), &BigRational::zero());
    let mut best_arg = (BigRational::zero(), BigRational::zero());
    let bound = |a: &Interval, b: &Interval| -> (BigRational, BigRational, BigRational, BigRational) {
        let ca = (&a.lo + &a.hi) / &two;
        let cb = (&b.lo + &b.hi) / &two;
        let fc = f.eval(&ca, &cb);
        let ga = fa.range(a, b);
        let gb = fb.range(a, b);
        let mv = &fc
            + ga.lo.abs().max(ga.hi.abs()) * (&a.hi - &a.lo) / &two
            + gb.lo.abs().max(gb.hi.abs()) * (&b.hi - &b.lo) / &two;
        let upper = mv.min(f.range(a, b).hi);
        (upper, fc, ca, cb)
    };
    let unit = Interval { lo: BigRational::zero(), hi: BigRational::one() };
    for (x, y) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let v = f.eval(&int(x), &int(y));
        if v > best_val {
            best_val = v;
            best_arg = (int(x), int(y));
        }
    }
    let (u, fc, ca, cb) = bound(&unit, &unit);
    if fc > best_val {
        best_val = fc;
        best_arg = (ca, cb);
    }
    let mut heap = BinaryHeap::new();
    heap.push(Cell { key: rat_f64(&u), upper: u, a: unit.clone(), b: unit });
    let mut boxes = 1u64;
    // largest upper bound among discarded boxes
    let mut pruned = best_val.clone();
    loop {
        let Some(top) = heap.pop() else {
            let upper = pruned.max(best_val.clone());
            return Ok(BivariateMax { upper, lower: best_val, arg: best_arg, boxes });
        };
        if &top.upper - &best_val <= *tol {
            let upper = top.upper.max(pruned).max(best_val.clone());
            return Ok(BivariateMax { lower: best_val, upper, arg: best_arg, boxes });
        }
        if boxes >= budget {
            return Err(Error::BudgetExhausted { budget });
        }
        let ma = (&top.a.lo + &top.a.hi) / &two;
        let mb = (&top.b.lo + &top.b.hi) / &two;
        let halves_a = [Interval { lo: top.a.lo.clone(), hi: ma.clone() }, Interval { lo: ma, hi: top.a.hi.clone() }];
        let halves_b = [Interval { lo: top.b.lo.clone(), hi: mb.clone() }, Interval { lo: mb, hi: top.b.hi.clone() }];
        for a in &halves_a {
            for b in &halves_b {
                boxes += 1;
                let (u, fc, ca, cb) = bound(a, b);
                if fc > best_val {
                    best_val = fc;
                    best_arg = (ca, cb);
                }
                if &u - &best_val > *tol {
                    heap.push(Cell { key: rat_f64(&u), upper: u, a: a.clone(), b: b.clone() });
                } else if u > pruned {
                    pruned = u;
                }
            }
        }
    }
}
