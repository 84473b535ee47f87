use lagrangia::hypergraph::{Hypergraph, SetSystem};
use lagrangia::io;
use lagrangia::lagrangian::{evaluate, gradient, maximize, LagrangianConfig};
use lagrangia::random;
use lagrangia::wiss::{compress, compress_to_fixpoint, contribution_check, is_left_compressed, weight_of_exact, Wiss};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn graph(seed: u64) -> Hypergraph {
    let mut g = random::rng(seed, 1);
    let r = g.random_range(2..=4);
    let n = g.random_range(r..=8);
    random::hypergraph(n, r, g.random_range(0.1..0.9), &mut g).unwrap()
}

fn point(n: usize, seed: u64) -> Vec<f64> {
    let mut g = random::rng(seed, 2);
    let raw: Vec<f64> = (0..n).map(|_| g.random_range(0.01..1.0)).collect();
    let t: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / t).collect()
}

fn wiss(seed: u64) -> Wiss {
    let mut g = random::rng(seed, 3);
    let r = g.random_range(1..=5);
    let s = g.random_range(2..=9);
    random::wiss(r, s, &mut g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gradient_matches_finite_differences(seed in any::<u64>()) {
        let f = graph(seed);
        let p = point(f.n(), seed);
        let grad = gradient(&f, &p).unwrap();
        let h = 1e-6;
        for i in 0..f.n() {
            let mut up = p.clone();
            let mut dn = p.clone();
            up[i] += h;
            dn[i] -= h;
            // the polynomial extends off the simplex, so plain differences work
            let fd = (evaluate(&f, &up).unwrap() - evaluate(&f, &dn).unwrap()) / (2.0 * h);
            prop_assert!((fd - grad[i]).abs() < 1e-7, "i={} fd={} grad={}", i, fd, grad[i]);
        }
    }

    #[test]
    fn euler_identity(seed in any::<u64>()) {
        let f = graph(seed);
        let p = point(f.n(), seed);
        let grad = gradient(&f, &p).unwrap();
        let lhs: f64 = p.iter().zip(&grad).map(|(a, b)| a * b).sum();
        let rhs = f.r() as f64 * evaluate(&f, &p).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn lagrangian_between_edge_and_clique_bounds(seed in any::<u64>()) {
        let f = graph(seed);
        let cfg = LagrangianConfig { restarts: 8, seed, ..Default::default() };
        let res = maximize(&f, &cfg);
        let (n, r) = (f.n() as f64, f.r() as i32);
        // one edge alone gives r^-r; the uniform point gives e / n^r
        let floor = (1.0 / (f.r() as f64).powi(r)).max(f.edge_count() as f64 / n.powi(r));
        let clique: f64 = (0..f.r()).map(|k| (n - k as f64) / n).product::<f64>() / (1..=f.r()).map(|k| k as f64).product::<f64>();
        prop_assert!(res.value >= floor - 1e-12);
        prop_assert!(res.value <= clique + 1e-12);
        prop_assert!((evaluate(&f, res.point.weights()).unwrap() - res.value).abs() < 1e-12);
    }

    #[test]
    fn relabeling_preserves_value_and_key(seed in any::<u64>()) {
        let f = graph(seed);
        let mut g = random::rng(seed, 4);
        let mut perm: Vec<u32> = (1..=f.n() as u32).collect();
        perm.shuffle(&mut g);
        let h = f.relabel(&perm).unwrap();
        prop_assert_eq!(f.canonical_key().unwrap(), h.canonical_key().unwrap());
        let p = point(f.n(), seed);
        let mut q = vec![0.0; f.n()];
        for (v, &img) in perm.iter().enumerate() {
            q[img as usize - 1] = p[v];
        }
        prop_assert!((evaluate(&f, &p).unwrap() - evaluate(&h, &q).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn cloning_preserves_split_value(seed in any::<u64>(), k in 1usize..=3) {
        let f = graph(seed);
        let mut g = random::rng(seed, 5);
        let v = g.random_range(1..=f.n() as u32);
        let c = f.clone_vertex(v, k).unwrap();
        let p = point(f.n(), seed);
        let mut q = p.clone();
        let share = p[v as usize - 1] / k as f64;
        q[v as usize - 1] = share;
        q.extend(std::iter::repeat_n(share, k - 1));
        prop_assert!((evaluate(&f, &p).unwrap() - evaluate(&c, &q).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn compression_never_loses_weight(seed in any::<u64>()) {
        let w = wiss(seed);
        let s = w.s() as u32;
        let mut g = random::rng(seed, 6);
        let i = g.random_range(1..s);
        let j = g.random_range(i + 1..=s);
        let c = compress(w.system(), i, j).unwrap();
        prop_assert_eq!(c.len(), w.system().len());
        prop_assert!(c.is_intersecting());
        prop_assert!(weight_of_exact(&c, w.r(), w.dist()).unwrap() >= w.weight_exact());
    }

    #[test]
    fn fixpoint_is_left_compressed(seed in any::<u64>()) {
        let w = wiss(seed);
        let c = compress_to_fixpoint(w.system());
        prop_assert!(is_left_compressed(&c));
        prop_assert!(c.is_intersecting());
        prop_assert_eq!(compress_to_fixpoint(&c), c.clone());
        prop_assert!(weight_of_exact(&c, w.r(), w.dist()).unwrap() >= w.weight_exact());
    }

    #[test]
    fn contribution_bound_holds(seed in any::<u64>()) {
        let mut g = random::rng(seed, 7);
        let r = g.random_range(2..=5);
        let s = g.random_range(2..=9usize);
        let p = random::rational_dist(s, 997 + s as u64, true, &mut g).unwrap();
        let mut e: Vec<u32> = (1..s as u32).filter(|_| g.random_bool(0.4)).take(r - 1).collect();
        e.push(s as u32);
        let c = contribution_check(&e, r, &p).unwrap();
        prop_assert!(c.holds, "{:?} {} < {}", e, c.lhs, c.rhs);
    }

    #[test]
    fn weights_of_all_sets_sum_to_at_most_one(seed in any::<u64>()) {
        let w = wiss(seed);
        let (s, r) = (w.s(), w.r());
        let all: Vec<u64> = (1u64..1 << s).filter(|m| m.count_ones() as usize <= r).collect();
        let everything = SetSystem::from_masks(s, r, all).unwrap();
        let total = weight_of_exact(&everything, r, w.dist()).unwrap();
        prop_assert!(total <= BigRational::one());
        prop_assert!(total > BigRational::zero());
    }

    #[test]
    fn text_formats_round_trip(seed in any::<u64>()) {
        let f = graph(seed);
        prop_assert_eq!(io::parse_hypergraph(&io::write_hypergraph(&f)).unwrap(), f);
        let w = wiss(seed);
        let text = io::write_wiss(&w);
        prop_assert_eq!(io::parse_wiss(&text).unwrap(), w.clone());
        let line = io::system_line(w.system());
        prop_assert_eq!(&io::parse_system_line(&line, w.r()).unwrap(), w.system());
    }
}
