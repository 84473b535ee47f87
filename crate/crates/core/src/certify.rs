//! Exact checks of the closed-form constants and finite case computations
//! behind the non-principal weight bound.
//!
//! Every bound side is a [`BigRational`]; floating point is only used to
//! locate maxima, which are then compared against the exact bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exact::{int, maximize_univariate, rat, RatPoly};
use crate::hypergraph::SetSystem;
use crate::util::{factorial, falling, rat_f64, rat_from_f64, rat_string, ser_rat};
use crate::wiss::{ProbDist, Wiss};

/// The induction constant `c`.
pub fn base_constant() -> BigRational {
    rat(1, 500)
}

/// Exact constants for a given `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constants {
    pub r: usize,
    /// `(1 - 1/r)^(r-1)`, the supremum of weights of principal systems.
    #[serde(rename = "L_r", serialize_with = "ser_rat")]
    pub l_r: BigRational,
    /// `L_r / r!`, the limiting Lagrangian of a principal star.
    #[serde(serialize_with = "ser_rat")]
    pub e_r: BigRational,
    /// `L_r / (r-1)!`.
    #[serde(serialize_with = "ser_rat")]
    pub d_r: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub c: BigRational,
    /// `c * 2^(2 - 2r)`.
    #[serde(serialize_with = "ser_rat")]
    pub c_r: BigRational,
}

pub fn constants(r: usize) -> Result<Constants> {
    if r < 2 {
        return Err(invalid(format!("constants need r >= 2, got {r}")));
    }
    let l_r = num_traits::pow(rat(r as i64 - 1, r as i64), r - 1);
    let e_r = &l_r / BigRational::from_integer(BigInt::from(factorial(r as u64)));
    let d_r = &l_r / BigRational::from_integer(BigInt::from(factorial(r as u64 - 1)));
    let c = base_constant();
    let c_r = &c / BigRational::from_integer(BigInt::one() << (2 * r - 2));
    Ok(Constants { r, l_r, e_r, d_r, c, c_r })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArithMode {
    /// Every quantity is an exact rational.
    Exact,
    /// The extremum is located numerically; the bound is exact.
    Numeric,
}

/// One named assertion inside a report.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), holds, detail: detail.into() }
    }

    fn le(name: impl Into<String>, lhs: &BigRational, rhs: &BigRational) -> Self {
        Self::new(name, lhs <= rhs, format!("{} <= {}", rat_string(lhs), rat_string(rhs)))
    }
}

/// A tabulated value with its bound.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub label: String,
    #[serde(serialize_with = "ser_rat")]
    pub value: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub bound: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub margin: BigRational,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: String,
    /// What was swept.
    pub inputs: String,
    /// Largest value found (or computed exactly).
    pub extremum: f64,
    pub argmax: Vec<f64>,
    #[serde(serialize_with = "ser_rat")]
    pub bound: BigRational,
    /// `bound - extremum`; for tables, the smallest row margin.
    #[serde(serialize_with = "ser_rat")]
    pub margin: BigRational,
    pub mode: ArithMode,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<Row>,
    pub passed: bool,
}

impl CaseReport {
    fn finish(mut self) -> Self {
        self.passed =
            !self.margin.is_negative() && self.checks.iter().all(|c| c.holds) && self.rows.iter().all(|r| r.holds);
        self
    }
}

/// `r(r-1) x y z^(r-2) + r y z^(r-1)` with `z = 1 - x - y`.
fn two_point_weight(r: usize, x: f64, y: f64) -> f64 {
    let z = (1.0 - x - y).max(0.0);
    let rf = r as f64;
    rf * y * z.powi(r as i32 - 2) * ((rf - 1.0) * x + z)
}

fn in_slice(x: f64, y: f64) -> bool {
    y >= 0.0 && x >= y && x + y <= 1.0
}

/// Damped Newton steps with a finite-difference Hessian, kept inside
/// `{x >= y >= 0, x + y <= 1}`; a step is taken only if it improves.
fn polish_two_point(r: usize, mut x: f64, mut y: f64, steps: usize) -> (f64, f64, f64) {
    let f = |x: f64, y: f64| two_point_weight(r, x, y);
    let mut best = f(x, y);
    let h = 1e-5;
    for _ in 0..steps {
        let gx = (f(x + h, y) - f(x - h, y)) / (2.0 * h);
        let gy = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
        let hxx = (f(x + h, y) - 2.0 * best + f(x - h, y)) / (h * h);
        let hyy = (f(x, y + h) - 2.0 * best + f(x, y - h)) / (h * h);
        let hxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h);
        let det = hxx * hyy - hxy * hxy;
        let (mut dx, mut dy) = if hxx < 0.0 && det > 0.0 {
            ((-hyy * gx + hxy * gy) / det, (hxy * gx - hxx * gy) / det)
        } else {
            (gx * 1e-3, gy * 1e-3)
        };
        let mut moved = false;
        for _ in 0..40 {
            let (nx, ny) = (x + dx, y + dy);
            if in_slice(nx, ny) && f(nx, ny) > best {
                x = nx;
                y = ny;
                best = f(x, y);
                moved = true;
                break;
            }
            dx *= 0.5;
            dy *= 0.5;
        }
        if !moved {
            break;
        }
    }
    (best, x, y)
}

/// Two-point systems: bounds the weight `r(r-1)xy z^(r-2) + r y z^(r-1)` over
/// `x >= y >= 0`, `x + y <= 1` by a grid of about `grid` points plus Newton
/// polishing, and checks in exact arithmetic that the AM-GM bound
/// `L_r ((r-2)/(r-1))^(r-2) + L_r/2` lies at least `L_r/18` below `L_r` and
/// that `L_r/18 >= c`.
pub fn case2_check(r: usize, grid: usize) -> Result<CaseReport> {
    if r < 3 {
        return Err(invalid(format!("two-point check needs r >= 3, got {r}")));
    }
    let k = constants(r)?;
    let bound = &k.l_r * (num_traits::pow(rat(r as i64 - 2, r as i64 - 1), r - 2) + rat(1, 2));
    let chain = &k.l_r - &k.l_r / int(18);
    // the slice has area 1/4 of the unit square
    let n = ((4.0 * grid as f64).sqrt().ceil() as usize).max(2);
    let (mut gbest, mut gx, mut gy) = (f64::NEG_INFINITY, 0.0, 0.0);
    for i in 0..=n {
        let x = i as f64 / n as f64;
        for j in 0..=i.min(n - i) {
            let y = j as f64 / n as f64;
            let v = two_point_weight(r, x, y);
            if v > gbest {
                (gbest, gx, gy) = (v, x, y);
            }
        }
    }
    let (best, x, y) = polish_two_point(r, gx, gy, 20);
    let best_q = rat_from_f64(best);
    let tol = rat(1, 1_000_000_000);
    let checks = vec![
        Check::le("numeric maximum <= AM-GM bound + 1e-9", &best_q, &(&bound + &tol)),
        Check::le("AM-GM bound <= L_r - L_r/18", &bound, &chain),
        Check::le("c <= L_r/18", &k.c, &(&k.l_r / int(18))),
    ];
    Ok(CaseReport {
        case: "two-point".into(),
        inputs: format!("r = {r}, {n}x{n} grid on x >= y >= 0, x + y <= 1, 20 Newton steps"),
        extremum: best,
        argmax: vec![x, y],
        margin: &bound - &best_q,
        bound,
        mode: ArithMode::Numeric,
        checks,
        rows: vec![],
        passed: false,
    }
    .finish())
}

/// Probability that an `r`-sample from the uniform distribution on
/// `[s] ∪ {∞}` has no repeated element of `[s]`:
/// `(s+1)^(-r) sum_i C(r,i) s!/(s-i)!`.
pub fn case3_prc(r: usize, s: usize) -> Result<BigRational> {
    if s < 1 {
        return Err(invalid("s must be at least 1"));
    }
    let mut num = BigInt::zero();
    for i in 0..=r {
        num += BigInt::from(crate::util::binomial(r as u64, i as u64)) * BigInt::from(falling(s as u64, i as u64));
    }
    Ok(BigRational::new(num, num_traits::pow(BigInt::from(s + 1), r)))
}

/// All rows `r ∈ {5, 6}`, `r <= s <= 2r - 1` against `L_r - 1/25`.
pub fn case3_table() -> Result<CaseReport> {
    let mut rows = Vec::new();
    for r in [5usize, 6] {
        let bound = constants(r)?.l_r - rat(1, 25);
        for s in r..2 * r {
            let value = case3_prc(r, s)?;
            rows.push(Row {
                label: format!("r={r} s={s}"),
                margin: &bound - &value,
                holds: value <= bound,
                value,
                bound: bound.clone(),
            });
        }
    }
    let worst = rows.iter().min_by(|a, b| a.margin.cmp(&b.margin)).expect("rows");
    let top = rows.iter().max_by(|a, b| a.value.cmp(&b.value)).expect("rows");
    let checks = vec![Check::new(
        "row count",
        rows.len() == 11,
        format!("{} rows: {{5,6}} x [r, 2r-1] has 5 + 6 pairs", rows.len()),
    )];
    Ok(CaseReport {
        case: "no-repeat-table".into(),
        inputs: "r in {5, 6}, r <= s <= 2r - 1, uniform p on [s] and infinity".into(),
        extremum: rat_f64(&top.value),
        argmax: vec![],
        bound: worst.bound.clone(),
        margin: worst.margin.clone(),
        mode: ArithMode::Exact,
        checks,
        passed: false,
        rows,
    }
    .finish())
}

/// `1/r + ((3r+1)/(4r))^r`.
pub fn large_r_bound(r: usize) -> BigRational {
    rat(1, r as i64) + num_traits::pow(rat(3 * r as i64 + 1, 4 * r as i64), r)
}

/// The bound used when the last point is heavy and `r >= 5`: for `s + 1 < r`
/// the weight is at most `1/(s+1) <= 1/3`; otherwise, for `r >= 7`, at most
/// `1/r + ((3r+1)/(4r))^r <= 1/3`. Returns whether the applicable bound is
/// at most `1/3`. Pairs with `r ∈ {5, 6}`, `s + 1 >= r` are covered by
/// [`case3_table`] instead and return `false` here.
pub fn case3_smalls_bound(r: usize, s: usize) -> Result<bool> {
    if r < 5 || s < 2 {
        return Err(invalid(format!("needs r >= 5 and s >= 2, got r = {r}, s = {s}")));
    }
    if s + 1 < r {
        return Ok(rat(1, s as i64 + 1) <= rat(1, 3));
    }
    Ok(r >= 7 && large_r_bound(r) < rat(1, 3))
}

/// Exact checks of the large-`r` chain: `f(7) < 1/3`, `f` strictly
/// decreasing on `[7, 50]`, and `1/e - 1/3 >= c` (with a rational lower
/// bound on `1/e`).
pub fn case3_large_r() -> CaseReport {
    let third = rat(1, 3);
    let f7 = large_r_bound(7);
    let decreasing = (7..50).all(|r| large_r_bound(r + 1) < large_r_bound(r));
    // partial sums of sum_k (-1)^k / k! alternate around 1/e; stopping after
    // an odd term gives a lower bound
    let mut inv_e_lower = BigRational::zero();
    for k in 0..=21u64 {
        let term = BigRational::new(BigInt::one(), BigInt::from(factorial(k)));
        if k % 2 == 0 {
            inv_e_lower += term;
        } else {
            inv_e_lower -= term;
        }
    }
    let gap = &inv_e_lower - &third;
    let checks = vec![
        Check::new("f(7) < 1/3", f7 < third, format!("f(7) = {:.12}", rat_f64(&f7))),
        Check::new("f decreasing on [7, 50]", decreasing, "exact comparisons of consecutive values"),
        Check::le("c <= 1/e - 1/3", &base_constant(), &gap),
        Check::le("1/3 <= 1/e", &third, &inv_e_lower),
    ];
    CaseReport {
        case: "large-r".into(),
        inputs: "f(r) = 1/r + ((3r+1)/(4r))^r for r in [7, 50]".into(),
        extremum: rat_f64(&f7),
        argmax: vec![7.0],
        margin: &third - &f7,
        bound: third,
        mode: ArithMode::Exact,
        checks,
        rows: vec![],
        passed: false,
    }
    .finish()
}

/// `72x^2(1-4x)^2 + 96x^3(1-4x) + 24x^4`.
pub fn quartic() -> RatPoly {
    let x = RatPoly::x();
    let one_minus = RatPoly::from_ints(&[1, -4]);
    x.pow(2)
        .mul(&one_minus.pow(2))
        .scale(&int(72))
        .add(&x.pow(3).mul(&one_minus).scale(&int(96)))
        .add(&x.pow(4).scale(&int(24)))
}

/// Maximum of [`quartic`] on `[0, 1/4]`: certified to lie in `(0.40, 0.41)`
/// and attained at the root `(5 - √3)/22` of `22x^2 - 10x + 1`, which divides
/// the derivative exactly.
pub fn case4_quartic() -> CaseReport {
    let q = quartic();
    let quarter = rat(1, 4);
    let m = maximize_univariate(&q, &BigRational::zero(), &quarter, &rat(1, 1_000_000_000_000_000));
    let closed = (5.0 - 3f64.sqrt()) / 22.0;
    let arg = rat_f64(&((&m.arg_lo + &m.arg_hi) / int(2)));
    let dq = q.derivative();
    let (_, rem) = dq.div_rem(&RatPoly::from_ints(&[1, -10, 22]));
    // the closed form lies in [0, 1/4]: 22x^2 - 10x + 1 changes sign there
    let quad = RatPoly::from_ints(&[1, -10, 22]);
    let brackets = quad.eval(&rat(148, 1000)).is_positive() != quad.eval(&rat(149, 1000)).is_positive();
    let l4 = constants(4).expect("r = 4").l_r;
    let limit = rat(41, 100);
    let checks = vec![
        Check::new("maximum > 0.40", m.lower > rat(40, 100), format!("lower = {}", rat_f64(&m.lower))),
        Check::new("maximum < 0.41", m.upper < limit, format!("upper = {}", rat_f64(&m.upper))),
        Check::new(
            "argmax matches (5 - sqrt 3)/22",
            (arg - closed).abs() <= 1e-9
                && m.arg_lo <= rat_from_f64(closed + 1e-9)
                && rat_from_f64(closed - 1e-9) <= m.arg_hi,
            format!("argmax in [{}, {}], closed form {closed}", rat_f64(&m.arg_lo), rat_f64(&m.arg_hi)),
        ),
        Check::new("22x^2 - 10x + 1 divides the derivative", rem.is_zero() && brackets, "exact polynomial division"),
        Check::new(
            "derivative vanishes at the argmax",
            dq.eval_f64(closed).abs() <= 1e-12,
            format!("q'({closed}) = {:e}", dq.eval_f64(closed)),
        ),
        Check::new("q(1/4) = 24/256", q.eval(&quarter) == rat(24, 256), "endpoint value"),
        Check::le("0.41 <= L_4 - 0.01", &limit, &(&l4 - rat(1, 100))),
    ];
    CaseReport {
        case: "quartic".into(),
        inputs: "x in [0, 1/4], exact root isolation of the derivative".into(),
        extremum: rat_f64(&m.upper),
        argmax: vec![arg],
        margin: &limit - &m.upper,
        bound: limit,
        mode: ArithMode::Exact,
        checks,
        rows: vec![],
        passed: false,
    }
    .finish()
}

/// `12(s-1) x y^2 (1-x-y) >= (s-1)!/(s-5)! y^4`.
pub fn pair_term_dominates(s: u64, x: &BigRational, y: &BigRational) -> bool {
    let lhs = int(12 * (s as i64 - 1)) * x * y * y * (BigRational::one() - x - y);
    let rhs = BigRational::from_integer(BigInt::from(falling(s - 1, 4))) * num_traits::pow(y.clone(), 4);
    lhs >= rhs
}

/// `4x(1-x-(s-1)y)^3 + 4(s-1)xy^3 >= (8/36) x ((1-x)/2)^3`.
pub fn cubic_terms_bound(s: u64, x: &BigRational, y: &BigRational) -> bool {
    let one = BigRational::one();
    let sm1 = int(s as i64 - 1);
    let a = &one - x - &sm1 * y;
    let lhs = int(4) * x * num_traits::pow(a, 3) + int(4) * &sm1 * x * num_traits::pow(y.clone(), 3);
    let rhs = rat(8, 36) * x * num_traits::pow((&one - x) / int(2), 3);
    lhs >= rhs
}

/// Random `(s, x, y)` with `3 <= s <= 7`, `x >= y >= 0` and
/// `1 - x - y >= (s-2) y`, as dyadic rationals.
fn sample_side_conditions(rng: &mut ChaCha8Rng) -> (u64, BigRational, BigRational) {
    let s = rng.random_range(3..=7u64);
    let den: BigInt = BigInt::one() << 30;
    let unit = |rng: &mut ChaCha8Rng| BigRational::new(BigInt::from(rng.random_range(0..=1u64 << 30)), den.clone());
    // y <= 1/s, then y <= x <= 1 - (s-1) y
    let y = unit(rng) / int(s as i64);
    let hi = BigRational::one() - int(s as i64 - 1) * &y;
    let x = &y + (&hi - &y) * unit(rng);
    (s, x, y)
}

/// The tail of the `r = 4` analysis: `(4 - 1/36) max_x x(1-x)^3` equals
/// `L_4 - L_4/144` exactly and exceeds neither that nor `L_4 - c_4`, and the
/// two auxiliary inequalities hold on `samples` random points.
pub fn case4_tail_bound(samples: usize, seed: u64) -> CaseReport {
    let k = constants(4).expect("r = 4");
    let peak = rat(143, 36) * rat(27, 256);
    let target = &k.l_r - &k.l_r / int(144);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut fail12, mut fail13) = (0usize, 0usize);
    for _ in 0..samples {
        let (s, x, y) = sample_side_conditions(&mut rng);
        fail12 += usize::from(!pair_term_dominates(s, &x, &y));
        fail13 += usize::from(!cubic_terms_bound(s, &x, &y));
    }
    // x(1-x)^3 peaks at 1/4: its derivative (1-x)^2 (1-4x) vanishes there
    let g = RatPoly::x().mul(&RatPoly::from_ints(&[1, -1]).pow(3));
    let gmax = maximize_univariate(&g, &BigRational::zero(), &BigRational::one(), &rat(1, 1_000_000_000_000));
    let checks = vec![
        Check::new(
            "max x(1-x)^3 = 27/256",
            gmax.upper == rat(27, 256) && gmax.lower == rat(27, 256),
            rat_string(&gmax.upper),
        ),
        Check::new("(143/36)(27/256) = L_4 - L_4/144", peak == target, rat_string(&peak)),
        Check::le("L_4 - L_4/144 <= L_4 - c_4", &target, &(&k.l_r - &k.c_r)),
        Check::new("pair-term inequality", fail12 == 0, format!("{fail12} violations in {samples} samples")),
        Check::new("cubic-term inequality", fail13 == 0, format!("{fail13} violations in {samples} samples")),
    ];
    CaseReport {
        case: "r4-tail".into(),
        inputs: format!("{samples} random (s, x, y), s in [3, 7], x >= y, 1 - x - y >= (s-2) y; seed {seed}"),
        extremum: rat_f64(&peak),
        argmax: vec![0.25],
        margin: &(&k.l_r - &k.c_r) - &peak,
        bound: &k.l_r - &k.c_r,
        mode: ArithMode::Exact,
        checks,
        rows: vec![],
        passed: false,
    }
    .finish()
}

/// Principal systems: `r x (1-x)^(r-1)` peaks at `x = 1/r` with value `L_r`
/// (checked exactly, and on a rational grid of `grid + 1` points), and the
/// weight of `{{1}}` with `p(1) = 1/r`, `p(∞) = 1 - 1/r` is exactly `L_r`.
pub fn principal_bound(r: usize, grid: usize) -> Result<CaseReport> {
    let k = constants(r)?;
    let g = RatPoly::x().mul(&RatPoly::from_ints(&[1, -1]).pow(r - 1)).scale(&int(r as i64));
    let at = rat(1, r as i64);
    let peak = g.eval(&at);
    let grid = grid.max(1);
    let grid_max = (0..=grid).map(|i| g.eval(&rat(i as i64, grid as i64))).max().expect("grid");
    let dg = g.derivative();
    let w = Wiss::new(SetSystem::new(1, r, [[1u32]])?, r, ProbDist::exact(vec![at.clone()])?)?;
    let weight = w.weight_exact();
    let checks = vec![
        Check::new("derivative vanishes at 1/r", dg.eval(&at).is_zero(), "exact"),
        Check::new("value at 1/r is L_r", peak == k.l_r, rat_string(&peak)),
        Check::le("grid maximum <= L_r", &grid_max, &k.l_r),
        Check::new("weight of {{1}} at p(1) = 1/r is L_r", weight == k.l_r, rat_string(&weight)),
    ];
    Ok(CaseReport {
        case: "principal".into(),
        inputs: format!("r = {r}, x = i/{grid}"),
        extremum: rat_f64(&peak),
        argmax: vec![rat_f64(&at)],
        margin: &k.l_r - &peak,
        bound: k.l_r,
        mode: ArithMode::Exact,
        checks,
        rows: vec![],
        passed: false,
    }
    .finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_closed_forms() {
        let k = constants(4).unwrap();
        assert_eq!(k.l_r, rat(27, 64));
        assert_eq!(k.c_r, rat(1, 32000));
        assert_eq!(constants(3).unwrap().l_r, rat(4, 9));
        for r in 2..=12 {
            let k = constants(r).unwrap();
            assert_eq!(k.d_r, &k.e_r * int(r as i64));
            assert!(rat_f64(&k.l_r) >= (-1f64).exp());
        }
        assert!(constants(1).is_err());
    }

    #[test]
    fn no_repeat_probabilities() {
        assert_eq!(case3_prc(5, 9).unwrap(), rat(36046, 100000));
        // s < r: terms with i > s vanish
        let p = case3_prc(5, 4).unwrap();
        assert!(p > BigRational::zero() && p <= BigRational::one());
        let table = case3_table().unwrap();
        assert_eq!(table.rows.len(), 11);
        assert!(table.passed);
    }

    #[test]
    fn large_r_chain() {
        let rep = case3_large_r();
        assert!(rep.passed, "{:?}", rep.checks);
        assert!(large_r_bound(8) < large_r_bound(7));
        assert!(case3_smalls_bound(7, 9).unwrap());
        assert!(case3_smalls_bound(9, 3).unwrap());
        assert!(!case3_smalls_bound(5, 6).unwrap());
    }

    #[test]
    fn quartic_report() {
        let rep = case4_quartic();
        assert!(rep.passed, "{:?}", rep.checks);
        assert!((rep.argmax[0] - 0.148543145).abs() < 1e-8);
        assert!(rep.extremum > 0.4010 && rep.extremum < 0.4011);
    }

    #[test]
    fn tail_report() {
        let rep = case4_tail_bound(200, 3);
        assert!(rep.passed, "{:?}", rep.checks);
        assert_eq!(rat(143, 36) * rat(27, 256), constants(4).unwrap().l_r * rat(143, 144));
    }

    #[test]
    fn two_point_bound() {
        let rep = case2_check(4, 40_000).unwrap();
        assert!(rep.passed, "{:?}", rep.checks);
        assert_eq!(rep.bound, rat(51, 128));
        // at r = 3 the AM-GM bound equals L_3 and the chain's last step fails
        let rep3 = case2_check(3, 10_000).unwrap();
        assert_eq!(rep3.bound, rat(4, 9));
        assert!(!rep3.checks[1].holds);
        assert!(rep3.checks[0].holds);
    }

    #[test]
    fn principal_reports() {
        for r in 2..=8 {
            let rep = principal_bound(r, 100).unwrap();
            assert!(rep.passed, "r = {r}: {:?}", rep.checks);
            assert!(rep.margin.is_zero());
        }
    }
}
