//! Maximization of homogeneous polynomials with nonnegative coefficients over
//! the probability simplex.
//!
//! The main loop is the Baum–Eagon growth transform
//! `x_i <- x_i * g_i / sum_j x_j g_j`, which never leaves the simplex and never
//! decreases the objective. It cannot revive coordinates that reached zero,
//! so it is followed by projected gradient steps with an adaptive step size.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

use crate::util::Kahan;

/// Sum of `coef * prod x[v]` over terms; every term has the same degree and
/// may repeat variables.
#[derive(Debug, Clone)]
pub(crate) struct Poly {
    nvars: usize,
    degree: usize,
    coef: Vec<f64>,
    vars: Vec<u32>,
}

impl Poly {
    pub(crate) fn new(nvars: usize, degree: usize) -> Self {
        Self { nvars, degree, coef: Vec::new(), vars: Vec::new() }
    }

    pub(crate) fn push(&mut self, coef: f64, vars: &[u32]) {
        debug_assert_eq!(vars.len(), self.degree);
        debug_assert!(vars.iter().all(|&v| (v as usize) < self.nvars));
        self.coef.push(coef);
        self.vars.extend_from_slice(vars);
    }

    fn terms(&self) -> impl Iterator<Item = (f64, &[u32])> {
        self.coef.iter().copied().zip(self.vars.chunks_exact(self.degree.max(1)))
    }

    pub(crate) fn eval(&self, x: &[f64]) -> f64 {
        if self.degree == 0 {
            return self.coef.iter().sum();
        }
        let mut acc = Kahan::default();
        for (c, vs) in self.terms() {
            acc.add(c * vs.iter().map(|&v| x[v as usize]).product::<f64>());
        }
        acc.value()
    }

    /// Writes the gradient into `g` and returns the value.
    pub(crate) fn grad(&self, x: &[f64], g: &mut [f64]) -> f64 {
        g.iter_mut().for_each(|v| *v = 0.0);
        if self.degree == 0 {
            return self.coef.iter().sum();
        }
        let d = self.degree;
        let mut pre = vec![1.0; d + 1];
        let mut acc = Kahan::default();
        for (c, vs) in self.terms() {
            for k in 0..d {
                pre[k + 1] = pre[k] * x[vs[k] as usize];
            }
            acc.add(c * pre[d]);
            let mut suf = 1.0;
            for k in (0..d).rev() {
                g[vs[k] as usize] += c * pre[k] * suf;
                suf *= x[vs[k] as usize];
            }
        }
        acc.value()
    }
}

/// Something that can be maximized over a simplex.
pub(crate) trait Objective: Sync {
    fn dim(&self) -> usize;
    /// Writes the gradient into `g`, returns the value.
    fn value_grad(&self, y: &[f64], g: &mut [f64]) -> f64;
    fn value(&self, y: &[f64]) -> f64;
}

impl Objective for Poly {
    fn dim(&self) -> usize {
        self.nvars
    }

    fn value_grad(&self, y: &[f64], g: &mut [f64]) -> f64 {
        self.grad(y, g)
    }

    fn value(&self, y: &[f64]) -> f64 {
        self.eval(y)
    }
}

/// A polynomial in `x_1 >= x_2 >= ... >= x_m >= 0` plus one free coordinate
/// `x_{m+1}`, rewritten on a plain simplex through `u_k = k (x_k - x_{k+1})`.
/// Then `x_i = sum_{k >= i} u_k / k` and `sum_i x_i = sum_k u_k`, so
/// nonincreasing points of the simplex correspond to points of the simplex in
/// `(u_1, ..., u_m, x_{m+1})`. The substitution keeps coefficients
/// nonnegative, so the growth transform still applies.
pub(crate) struct Ordered<'a> {
    pub(crate) poly: &'a Poly,
    /// Number of ordered coordinates `m`; the poly has `m + 1` variables.
    pub(crate) m: usize,
}

impl Ordered<'_> {
    pub(crate) fn to_x(&self, u: &[f64]) -> Vec<f64> {
        let mut x = vec![0.0; self.m + 1];
        let mut tail = 0.0;
        for k in (0..self.m).rev() {
            tail += u[k] / (k + 1) as f64;
            x[k] = tail;
        }
        x[self.m] = u[self.m];
        x
    }

    /// Inverse of [`Ordered::to_x`]; `x` must be nonincreasing on its first
    /// `m` coordinates.
    pub(crate) fn to_u(&self, x: &[f64]) -> Vec<f64> {
        let mut u = vec![0.0; self.m + 1];
        for k in 0..self.m {
            let next = if k + 1 < self.m { x[k + 1] } else { 0.0 };
            u[k] = ((k + 1) as f64 * (x[k] - next)).max(0.0);
        }
        u[self.m] = x[self.m];
        u
    }
}

impl Objective for Ordered<'_> {
    fn dim(&self) -> usize {
        self.m + 1
    }

    fn value_grad(&self, u: &[f64], g: &mut [f64]) -> f64 {
        let x = self.to_x(u);
        let mut gx = vec![0.0; self.m + 1];
        let v = self.poly.grad(&x, &mut gx);
        let mut prefix = 0.0;
        for k in 0..self.m {
            prefix += gx[k];
            g[k] = prefix / (k + 1) as f64;
        }
        g[self.m] = gx[self.m];
        v
    }

    fn value(&self, u: &[f64]) -> f64 {
        self.poly.eval(&self.to_x(u))
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct AscentConfig {
    pub(crate) max_iters: usize,
    /// Relative improvement below which a phase counts as stalled.
    pub(crate) tol: f64,
    pub(crate) polish_iters: usize,
    /// Coordinates above this count as in the support for the KKT test.
    pub(crate) support_tol: f64,
}

impl Default for AscentConfig {
    fn default() -> Self {
        Self { max_iters: 5000, tol: 1e-15, polish_iters: 500, support_tol: 1e-8 }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Ascent {
    pub(crate) point: Vec<f64>,
    pub(crate) value: f64,
    pub(crate) converged: bool,
}

/// Sorting-based Euclidean projection onto the probability simplex.
pub(crate) fn project_simplex(y: &[f64]) -> Vec<f64> {
    let mut sorted = y.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (k, &v) in sorted.iter().enumerate() {
        cum += v;
        let t = (cum - 1.0) / (k + 1) as f64;
        if v - t > 0.0 {
            theta = t;
        }
    }
    y.iter().map(|&v| (v - theta).max(0.0)).collect()
}

fn normalize(x: &mut [f64]) {
    let s: f64 = x.iter().sum();
    if s > 0.0 {
        x.iter_mut().for_each(|v| *v /= s);
    }
}

/// Relative KKT residual on the simplex: on the support every partial equals
/// the weighted mean `sum x_i g_i`, off the support no partial exceeds it.
pub(crate) fn kkt_residual(x: &[f64], g: &[f64], support_tol: f64) -> f64 {
    let mean: f64 = x.iter().zip(g).map(|(a, b)| a * b).sum();
    let mut res: f64 = 0.0;
    for (&xi, &gi) in x.iter().zip(g) {
        let dev = if xi > support_tol { (gi - mean).abs() } else { (gi - mean).max(0.0) };
        res = res.max(dev);
    }
    res / mean.abs().max(1e-300)
}

pub(crate) fn ascend<O: Objective + ?Sized>(obj: &O, start: &[f64], cfg: &AscentConfig) -> Ascent {
    let n = obj.dim();
    let mut x = start.to_vec();
    normalize(&mut x);
    let mut g = vec![0.0; n];
    let mut value = obj.value_grad(&x, &mut g);

    let mut stall = 0;
    for _ in 0..cfg.max_iters {
        let denom: f64 = x.iter().zip(&g).map(|(a, b)| a * b).sum();
        if denom <= 0.0 {
            break;
        }
        let mut next: Vec<f64> = x.iter().zip(&g).map(|(a, b)| a * b / denom).collect();
        normalize(&mut next);
        let mut gn = vec![0.0; n];
        let vn = obj.value_grad(&next, &mut gn);
        if vn < value {
            break;
        }
        let gain = vn - value;
        x = next;
        g = gn;
        value = vn;
        if gain <= cfg.tol * value.abs().max(1e-300) {
            stall += 1;
            if stall >= 5 {
                break;
            }
        } else {
            stall = 0;
        }
    }

    // Projected gradient polish; also handles starts where the growth
    // transform has no signal.
    let mut step = 1e-2;
    let mut stall = 0;
    for _ in 0..cfg.polish_iters {
        let trial: Vec<f64> = x.iter().zip(&g).map(|(a, b)| a + step * b).collect();
        let next = project_simplex(&trial);
        let mut gn = vec![0.0; n];
        let vn = obj.value_grad(&next, &mut gn);
        if vn > value {
            let gain = vn - value;
            x = next;
            g = gn;
            value = vn;
            step *= 2.0;
            if gain <= cfg.tol * value.abs().max(1e-300) {
                stall += 1;
            } else {
                stall = 0;
            }
        } else {
            step *= 0.25;
            stall += 1;
        }
        if stall >= 30 || step < 1e-18 {
            break;
        }
    }

    let converged = value > 0.0 && kkt_residual(&x, &g, cfg.support_tol) <= 1e-6;
    Ascent { value: obj.value(&x), point: x, converged }
}

/// Deterministic Dirichlet(1, ..., 1) start number `index` under `seed`.
pub(crate) fn dirichlet_start(dim: usize, seed: u64, index: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut x: Vec<f64> = (0..dim).map(|_| Exp1.sample(&mut rng)).collect();
    normalize(&mut x);
    x
}

/// Runs [`ascend`] from each start and keeps the best result; ties go to the
/// earliest start so the outcome does not depend on scheduling.
pub(crate) fn best_of<O: Objective + ?Sized>(
    obj: &O,
    starts: &[Vec<f64>],
    cfg: &AscentConfig,
) -> Option<(usize, Ascent)> {
    use rayon::prelude::*;
    starts.par_iter().enumerate().map(|(i, s)| (i, ascend(obj, s, cfg))).reduce_with(|a, b| {
        if b.1.value > a.1.value || (b.1.value == a.1.value && b.0 < a.0) {
            b
        } else {
            a
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clique(t: u32) -> Poly {
        let mut p = Poly::new(t as usize, 3);
        for a in 0..t {
            for b in a + 1..t {
                for c in b + 1..t {
                    p.push(1.0, &[a, b, c]);
                }
            }
        }
        p
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let mut p = Poly::new(3, 3);
        p.push(2.0, &[0, 0, 1]);
        p.push(1.0, &[1, 2, 2]);
        let x = [0.2, 0.5, 0.3];
        let mut g = vec![0.0; 3];
        p.grad(&x, &mut g);
        for i in 0..3 {
            let h = 1e-6;
            let mut a = x;
            let mut b = x;
            a[i] += h;
            b[i] -= h;
            let fd = (p.eval(&a) - p.eval(&b)) / (2.0 * h);
            assert!((fd - g[i]).abs() < 1e-8);
        }
    }

    #[test]
    fn clique_optimum_is_uniform() {
        let p = clique(5);
        let a = ascend(&p, &dirichlet_start(5, 3, 0), &AscentConfig::default());
        assert!((a.value - 0.08).abs() < 1e-12);
        assert!(a.converged);
    }

    #[test]
    fn polish_revives_zero_coordinates() {
        let p = clique(5);
        let a = ascend(&p, &[0.4, 0.3, 0.3, 0.0, 0.0], &AscentConfig::default());
        assert!((a.value - 0.08).abs() < 1e-10, "{}", a.value);
    }

    #[test]
    fn projection_lands_on_simplex() {
        let y = project_simplex(&[0.9, 0.8, -0.3, 0.1]);
        assert!((y.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!(y.iter().all(|&v| v >= 0.0));
        assert_eq!(project_simplex(&[0.25; 4]), vec![0.25; 4]);
    }

    #[test]
    fn ordered_coordinates_round_trip() {
        let p = Poly::new(4, 1);
        let o = Ordered { poly: &p, m: 3 };
        let x = [0.4, 0.2, 0.2, 0.2];
        let u = o.to_u(&x);
        assert!((u.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        for (a, b) in o.to_x(&u).iter().zip(x) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn ordered_gradient_is_chain_rule() {
        // 4 x1 x3^3 style term: r = 4, member {1} with three copies of x_inf
        let mut p = Poly::new(3, 4);
        p.push(4.0, &[0, 2, 2, 2]);
        p.push(12.0, &[0, 1, 2, 2]);
        let o = Ordered { poly: &p, m: 2 };
        let u = [0.3, 0.2, 0.5];
        let mut g = vec![0.0; 3];
        o.value_grad(&u, &mut g);
        for i in 0..3 {
            let h = 1e-6;
            let mut a = u;
            let mut b = u;
            a[i] += h;
            b[i] -= h;
            let fd = (o.value(&a) - o.value(&b)) / (2.0 * h);
            assert!((fd - g[i]).abs() < 1e-8);
        }
    }

    #[test]
    fn starts_are_reproducible() {
        assert_eq!(dirichlet_start(6, 9, 4), dirichlet_start(6, 9, 4));
        assert_ne!(dirichlet_start(6, 9, 4), dirichlet_start(6, 9, 5));
    }
}
