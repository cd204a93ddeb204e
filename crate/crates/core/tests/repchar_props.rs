use krchar::repchar::{brauer_klimyk, ext_power, sym_power};
use krchar::{ModuleSpec, RepEngine, RootSystem, Weight, WeightChar};
use proptest::prelude::*;

fn engine(s: &str) -> RepEngine {
    RepEngine::new(RootSystem::new(s.parse().unwrap()).unwrap())
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

/// `Σ_{i=0}^k (-1)^i ch Λ^i V · ch S^{k-i} V = 0` for `k ≥ 1`.
#[test]
fn newton_identity_up_to_four() {
    for (t, v) in [("A2", vec![1, 1]), ("B2", vec![1, 0]), ("C3", vec![1, 0, 0]), ("D4", vec![0, 1, 0, 0])] {
        let e = engine(t);
        let ch = e.freudenthal(&Weight(v)).unwrap();
        for k in 1..=4u32 {
            let mut total = WeightChar::new();
            for i in 0..=k {
                let term = ext_power(&ch, i).unwrap().mul(&sym_power(&ch, k - i).unwrap());
                total.add_assign_scaled(&term, if i % 2 == 0 { 1 } else { -1 });
            }
            assert!(total.is_empty(), "{t} k={k}");
        }
    }
}

#[test]
fn power_dimensions_are_binomial() {
    let e = engine("D5");
    let ch = e.freudenthal(&Weight(vec![0, 1, 0, 0, 0])).unwrap();
    let n = ch.dimension();
    for k in 0..=4 {
        assert_eq!(ext_power(&ch, k).unwrap().dimension(), binom(n, k as i64));
        assert_eq!(sym_power(&ch, k).unwrap().dimension(), binom(n + k as i64 - 1, k as i64));
    }
}

#[test]
fn coefficients_symmetric_under_permuting_degrees() {
    let e = engine("D4");
    let rs = e.root_system().clone();
    let ms = ModuleSpec::adjoint(&rs, 3);
    let lambda = Weight(vec![0, 2, 0, 0]);
    let mus = rs.dominant_weights_below(&lambda.add(&rs.highest_root().weight.scale(3)));
    for k in [[2u32, 1, 0], [1, 1, 1], [3, 0, 0]] {
        let perms = [
            [k[0], k[1], k[2]],
            [k[1], k[0], k[2]],
            [k[2], k[1], k[0]],
            [k[1], k[2], k[0]],
        ];
        for mu in &mus {
            let c0 = e.c_coefficient(&ms, &lambda, mu, &perms[0]).unwrap();
            let s0 = e.sym_coefficient(&ms, &lambda, mu, &perms[0]).unwrap();
            for p in &perms[1..] {
                assert_eq!(e.c_coefficient(&ms, &lambda, mu, p).unwrap(), c0);
                assert_eq!(e.sym_coefficient(&ms, &lambda, mu, p).unwrap(), s0);
            }
        }
    }
}

/// Mixed components: the coefficient of a product equals the one read off
/// the explicit product character.
#[test]
fn mixed_components_match_explicit_products() {
    let e = engine("B2");
    let rs = e.root_system().clone();
    let v1 = Weight(vec![1, 0]);
    let v2 = Weight(vec![0, 1]);
    let ms = ModuleSpec::new(&rs, vec![vec![v1.clone()], vec![v2.clone()]]).unwrap();
    let lambda = Weight(vec![1, 1]);
    let ch1 = e.freudenthal(&v1).unwrap();
    let ch2 = e.freudenthal(&v2).unwrap();
    for (a, b) in [(1u32, 1u32), (2, 1), (1, 2), (2, 2)] {
        let product = ext_power(&ch1, a).unwrap().mul(&ext_power(&ch2, b).unwrap());
        let want = brauer_klimyk(&rs, &product, &lambda);
        for (mu, m) in want.iter() {
            assert_eq!(e.c_coefficient(&ms, &lambda, mu, &[a, b]).unwrap(), *m, "k=({a},{b}) μ={mu}");
        }
    }
}

fn rank2() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A2", "B2", "C2"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_product_commutes(t in rank2(), a in prop::collection::vec(0i32..=3, 2), b in prop::collection::vec(0i32..=3, 2)) {
        let e = engine(t);
        let (l, n) = (Weight(a), Weight(b));
        prop_assert_eq!(e.tensor_decompose(&l, &n).unwrap(), e.tensor_decompose(&n, &l).unwrap());
    }

    #[test]
    fn iso_decompose_round_trips(t in rank2(), a in prop::collection::vec(0i32..=3, 2), b in prop::collection::vec(0i32..=2, 2)) {
        let e = engine(t);
        let (l, n) = (Weight(a), Weight(b));
        let product = e.freudenthal(&l).unwrap().mul(&e.freudenthal(&n).unwrap());
        let iso = e.iso_decompose(&product).unwrap();
        prop_assert_eq!(&iso, &*e.tensor_decompose(&l, &n).unwrap());
        let mut rebuilt = WeightChar::new();
        for (w, m) in iso.iter() {
            rebuilt.add_assign_scaled(&e.freudenthal(w).unwrap(), *m);
        }
        prop_assert_eq!(rebuilt, product);
    }
}
