use std::collections::{HashSet, VecDeque};

use krchar::poset::{covers, d_psi, gamma_psi, leq_psi, psi_i, psi_of_mu};
use krchar::{KrEngine, LambdaPoint, ModuleSpec, MultiDegree, RepEngine, RootSystem, Weight, WeightChar};
use std::sync::Arc;

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap()).unwrap()
}

fn adjoint(r: &RootSystem) -> WeightChar {
    WeightChar::from_entries(r.adjoint_weights())
}

fn w(c: &[i32]) -> Weight {
    Weight(c.to_vec())
}

#[test]
fn psi_i_agrees_with_minimizing_sets_everywhere() {
    for t in ["A3", "B3", "B4", "C3", "C4", "D4", "D5", "D6"] {
        let r = rs(t);
        let v = adjoint(&r);
        for node in 1..=r.rank() {
            let psi = psi_i(&r, node).unwrap();
            if psi.is_empty() {
                continue;
            }
            let from_mu = psi_of_mu(&r, &v, &Weight::fundamental(r.rank(), node, 1)).unwrap();
            assert_eq!(psi.elements(), from_mu.elements(), "{t} node {node}");
            let checked = psi.checked(&r, &v).unwrap();
            assert!(checked.is_valid(), "{t} node {node}");
        }
    }
}

#[test]
fn d_type_psi_sizes() {
    // m_{β,i} = 2 occurs only for i in 2..=n-2 in type D_n
    for n in [4, 5, 6, 7] {
        let r = rs(&format!("D{n}"));
        assert!(psi_i(&r, 1).unwrap().is_empty());
        assert!(psi_i(&r, n - 1).unwrap().is_empty());
        assert!(psi_i(&r, n).unwrap().is_empty());
        for i in 2..=n - 2 {
            let count = r.positive_roots().iter().filter(|b| b.simple[i - 1] == 2).count();
            assert_eq!(psi_i(&r, i).unwrap().len(), count);
            assert!(count > 0);
        }
    }
}

fn all_gammas() -> Vec<(RootSystem, krchar::GammaSet)> {
    let mut out = Vec::new();
    for (t, n, nodes) in [("D4", 4, vec![1, 2]), ("D5", 5, vec![1, 2, 3])] {
        let r = rs(t);
        let v = adjoint(&r);
        for &i in &nodes {
            let psi = psi_i(&r, i).unwrap().checked(&r, &v).unwrap();
            for m in 1..=3 {
                for ell in 1..=3 {
                    let base = LambdaPoint::new(Weight::fundamental(n, i, m), MultiDegree::zero(ell));
                    out.push((r.clone(), gamma_psi(&r, &psi, &base, false).unwrap()));
                }
            }
        }
        let psi3 = psi_i(&r, if n == 5 { 3 } else { 2 }).unwrap().checked(&r, &v).unwrap();
        let mixed = if n == 5 { w(&[1, 0, 1, 0, 0]) } else { w(&[1, 1, 0, 0]) };
        out.push((r.clone(), gamma_psi(&r, &psi3, &LambdaPoint::new(mixed, MultiDegree::zero(2)), false).unwrap()));
    }
    out
}

#[test]
fn gamma_sets_are_well_formed() {
    for (r, g) in all_gammas() {
        let base = g.base().clone();
        assert_eq!(g.points()[0], base);
        let keys: Vec<(u32, Weight, MultiDegree)> =
            g.points().iter().map(|p| (g.d_of(&p.weight).unwrap(), p.weight.clone(), p.degree.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted, "enumeration order");
        for p in g.points() {
            assert!(p.weight.is_dominant());
            let gap = p.degree.sub(&base.degree);
            assert!(gap.is_nonnegative());
            assert_eq!(gap.deg() as u32, g.d_of(&p.weight).unwrap());
            assert!(leq_psi(&r, g.psi(), &base, p));
        }
        // every degree of the right total degree is present for each weight
        for (mu, d) in g.distances() {
            let fiber = g.points().iter().filter(|p| &p.weight == mu).count();
            let ell = g.ell() as u64;
            let expected = (1..=*d as u64).fold(1u64, |acc, i| acc * (ell - 1 + i) / i);
            assert_eq!(fiber as u64, expected, "{mu}");
        }
    }
}

#[test]
fn leq_psi_is_a_partial_order_and_gamma_is_convex() {
    for (r, g) in all_gammas() {
        let psi = g.psi();
        let pts = g.points();
        for a in pts {
            assert!(leq_psi(&r, psi, a, a));
            for b in pts {
                if a != b && leq_psi(&r, psi, a, b) {
                    assert!(!leq_psi(&r, psi, b, a), "antisymmetry");
                }
            }
        }
        // convexity: a point between two members (for ≼_Ψ) is itself a member
        let ell = g.ell();
        let base = g.base();
        let top_deg = g.distances().values().max().copied().unwrap_or(0);
        for mu in r.dominant_weights_below(&base.weight) {
            for d in 0..=top_deg {
                for deg in krchar::poset::compositions(ell, d) {
                    let q = LambdaPoint::new(mu.clone(), base.degree.add(&deg));
                    if g.contains(&q) {
                        continue;
                    }
                    let between = pts.iter().any(|b| leq_psi(&r, psi, base, &q) && leq_psi(&r, psi, &q, b));
                    assert!(!between, "{q} lies between points of Γ");
                }
            }
        }
    }
}

#[test]
fn gamma_translates_with_the_base_degree() {
    let r = rs("D5");
    let psi = psi_i(&r, 3).unwrap().checked(&r, &adjoint(&r)).unwrap();
    let lambda = w(&[0, 0, 2, 0, 0]);
    let g0 = gamma_psi(&r, &psi, &LambdaPoint::new(lambda.clone(), MultiDegree::zero(2)), false).unwrap();
    let shift = MultiDegree(vec![3, 1]);
    let g1 = gamma_psi(&r, &psi, &LambdaPoint::new(lambda, shift.clone()), false).unwrap();
    let moved: Vec<LambdaPoint> =
        g0.points().iter().map(|p| LambdaPoint::new(p.weight.clone(), p.degree.add(&shift))).collect();
    assert_eq!(g1.points(), moved.as_slice());
}

#[test]
fn d_psi_examples_and_translation() {
    let r = rs("D4");
    let psi = psi_i(&r, 2).unwrap();
    for m in 0..=4 {
        for k in 0..=m {
            assert_eq!(d_psi(&r, &psi, &Weight::fundamental(4, 2, m), &Weight::fundamental(4, 2, m - k)), Some(k as u32));
        }
    }
    // translating both weights by a dominant weight leaves d_Ψ unchanged
    let shift = w(&[1, 0, 1, 1]);
    let a = Weight::fundamental(4, 2, 2);
    let b = Weight::zero(4);
    assert_eq!(d_psi(&r, &psi, &a.add(&shift), &b.add(&shift)), d_psi(&r, &psi, &a, &b));
}

/// `≼_Ψ` refines `≼`: whenever `a ≼_Ψ b` there is a chain of covers from a to b.
#[test]
fn leq_psi_refines_cover_order() {
    let rep = Arc::new(RepEngine::new(rs("D5")));
    let r = rep.root_system().clone();
    for ell in [1, 2] {
        let ms = ModuleSpec::adjoint(&r, ell);
        let kr = KrEngine::new(rep.clone(), ms.clone()).unwrap();
        let g = kr.gamma_for(&w(&[0, 0, 2, 0, 0]), &MultiDegree::zero(ell)).unwrap();
        let candidates: Vec<LambdaPoint> = {
            let mut v = Vec::new();
            for mu in r.dominant_weights_below(&g.base().weight) {
                for d in 0..=3 {
                    for deg in krchar::poset::compositions(ell, d) {
                        v.push(LambdaPoint::new(mu.clone(), deg));
                    }
                }
            }
            v
        };
        for target in g.points() {
            let mut seen = HashSet::from([g.base().clone()]);
            let mut queue = VecDeque::from([g.base().clone()]);
            let mut found = false;
            while let Some(p) = queue.pop_front() {
                if &p == target {
                    found = true;
                    break;
                }
                for q in &candidates {
                    if !seen.contains(q) && covers(rep.as_ref(), &ms, &p, q).unwrap() {
                        seen.insert(q.clone());
                        queue.push_back(q.clone());
                    }
                }
            }
            assert!(found, "no cover chain to {target}");
        }
    }
}
