use std::collections::{BTreeSet, HashMap};

use krchar::{RepEngine, RootSystem, Weight, WeightChar};
use proptest::prelude::*;

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap()).unwrap()
}

/// Positive roots of `D_n` as `ε_i ± ε_j`, converted to simple-root
/// coordinates through `2ε_k = 2α_k + … + 2α_{n-2} + α_{n-1} + α_n` and
/// `2ε_n = α_n - α_{n-1}`.
fn d_roots_from_epsilons(n: usize) -> BTreeSet<Vec<i32>> {
    let eps2 = |k: usize| -> Vec<i32> {
        let mut v = vec![0; n];
        if k == n - 1 {
            v[n - 2] = -1;
            v[n - 1] = 1;
        } else {
            for c in v.iter_mut().take(n - 2).skip(k) {
                *c = 2;
            }
            v[n - 2] = 1;
            v[n - 1] = 1;
        }
        v
    };
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (eps2(i), eps2(j));
            out.insert(a.iter().zip(&b).map(|(x, y)| (x - y) / 2).collect());
            out.insert(a.iter().zip(&b).map(|(x, y)| (x + y) / 2).collect());
        }
    }
    out
}

#[test]
fn d_type_roots_match_epsilon_realization() {
    for n in [4, 5, 6] {
        let r = rs(&format!("D{n}"));
        let got: BTreeSet<Vec<i32>> = r.positive_roots().iter().map(|x| x.simple.clone()).collect();
        assert_eq!(got, d_roots_from_epsilons(n), "D{n}");
    }
}

#[test]
fn root_counts_all_families() {
    for fam in ["A", "B", "C", "D"] {
        for n in 1..=8 {
            let Ok(t) = format!("{fam}{n}").parse::<krchar::LieType>() else { continue };
            let r = RootSystem::new(t).unwrap();
            assert_eq!(r.positive_roots().len(), t.positive_root_count(), "{t}");
            for root in r.positive_roots() {
                let coords: Vec<i64> = root.simple.iter().map(|&x| x as i64).collect();
                assert_eq!(r.weight_of_simple(&coords), root.weight);
            }
        }
    }
}

/// Dominant weights of `V(λ)` found by brute force over a box, using
/// nonvanishing of the Freudenthal multiplicity.
#[test]
fn dominant_weights_below_matches_brute_force() {
    for (t, lambdas) in [
        ("A2", vec![vec![2, 1], vec![3, 0]]),
        ("B2", vec![vec![1, 2], vec![2, 0]]),
        ("C3", vec![vec![1, 0, 1], vec![0, 2, 0]]),
        ("D4", vec![vec![0, 2, 0, 0], vec![1, 0, 1, 1]]),
    ] {
        let e = RepEngine::new(rs(t));
        let r = e.root_system();
        for l in lambdas {
            let lambda = Weight(l);
            let ch = e.freudenthal(&lambda).unwrap();
            let bound = 2 * lambda.coords().iter().sum::<i32>() + 2;
            let n = r.rank();
            let mut brute = BTreeSet::new();
            let mut idx = vec![0i32; n];
            loop {
                let w = Weight(idx.clone());
                if ch.get(&w) > 0 {
                    brute.insert(w);
                }
                let mut k = 0;
                while k < n && idx[k] == bound {
                    idx[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                idx[k] += 1;
            }
            let got: BTreeSet<Weight> = r.dominant_weights_below(&lambda).into_iter().collect();
            assert_eq!(got, brute, "{t} {lambda}");
        }
    }
}

/// Weyl group as signed orbit of the regular weight ρ.
fn signed_weyl_orbit(r: &RootSystem, base: &Weight) -> Vec<(Weight, i64)> {
    let rho = r.rho();
    let mut seen: HashMap<Weight, (i64, Vec<usize>)> = HashMap::new();
    seen.insert(rho.clone(), (1, vec![]));
    let mut frontier = vec![rho];
    while let Some(w) = frontier.pop() {
        let (sign, word) = seen[&w].clone();
        for i in 0..r.rank() {
            let mut v = w.clone();
            r.reflect(&mut v, i);
            if !seen.contains_key(&v) {
                let mut word2 = word.clone();
                word2.push(i);
                seen.insert(v.clone(), (-sign, word2));
                frontier.push(v);
            }
        }
    }
    seen.values()
        .map(|(sign, word)| {
            let mut v = base.clone();
            for &i in word {
                r.reflect(&mut v, i);
            }
            (v, *sign)
        })
        .collect()
}

#[test]
fn freudenthal_satisfies_weyl_character_formula() {
    for (t, lambdas) in [
        ("A2", vec![vec![2, 1], vec![0, 3]]),
        ("B2", vec![vec![1, 1], vec![0, 3]]),
        ("C2", vec![vec![2, 1]]),
        ("A3", vec![vec![1, 1, 1]]),
        ("B3", vec![vec![0, 1, 1]]),
        ("C3", vec![vec![1, 0, 1]]),
    ] {
        let e = RepEngine::new(rs(t));
        let r = e.root_system();
        let rho = r.rho();
        let denom = WeightChar::from_entries(signed_weyl_orbit(r, &rho));
        for l in lambdas {
            let lambda = Weight(l);
            let numer = WeightChar::from_entries(signed_weyl_orbit(r, &lambda.add(&rho)));
            assert_eq!(e.freudenthal(&lambda).unwrap().mul(&denom), numer, "{t} {lambda}");
        }
    }
}

fn small_type() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominant_conjugate_is_dominant_and_in_orbit(t in small_type(), seed in prop::collection::vec(-4i32..=4, 4)) {
        let r = rs(t);
        let xi = Weight(seed[..r.rank()].to_vec());
        let c = r.dominant_conjugate(&xi);
        prop_assert!(c.dominant.is_dominant());
        prop_assert!(r.orbit(&c.dominant).contains(&xi));
        prop_assert_eq!(r.scaled_inner(&xi, &xi), r.scaled_inner(&c.dominant, &c.dominant));
    }

    #[test]
    fn characters_are_weyl_invariant_with_weyl_dimension(t in small_type(), seed in prop::collection::vec(0i32..=2, 4)) {
        let e = RepEngine::new(rs(t));
        let lambda = Weight(seed[..e.root_system().rank()].to_vec());
        let ch = e.freudenthal(&lambda).unwrap();
        prop_assert!(ch.is_weyl_invariant(e.root_system()));
        prop_assert!(ch.is_genuine());
        prop_assert_eq!(ch.dimension() as u64, e.root_system().weyl_dim(&lambda).unwrap());
    }
}
