//! Named verification suites with one pass/fail line per check.

use std::sync::Arc;

use krchar::poset::gamma_psi;
use krchar::{multiplicity_ell_profile, GradedChar, KrEngine, LambdaPoint, MultiDegree, PsiMode, RepEngine, Weight};
use serde::Serialize;

use crate::job::Suite;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

type Check = Result<(), String>;

fn fw(n: usize, i: usize, m: i32) -> Weight {
    Weight::fundamental(n, i, m)
}

fn degree_vectors(ell: usize, d: i32) -> Vec<MultiDegree> {
    krchar::poset::compositions(ell, d as u32)
}

fn unit_sum(ell: usize, idx: &[usize]) -> MultiDegree {
    let mut r = vec![0; ell];
    for &i in idx {
        r[i] += 1;
    }
    MultiDegree(r)
}

fn first_difference(got: &GradedChar, want: &GradedChar) -> String {
    let mut keys: Vec<(Weight, MultiDegree)> =
        got.iter().chain(want.iter()).map(|(w, r, _)| (w.clone(), r.clone())).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .find(|(w, r)| got.get(w, r) != want.get(w, r))
        .map(|(w, r)| format!("V{w} t^{r}: got {}, expected {}", got.get(&w, &r), want.get(&w, &r)))
        .unwrap_or_default()
}

fn two_omega_three(ell: usize) -> GradedChar {
    let n = 5;
    let mut g = GradedChar::new(ell);
    g.add_term(fw(n, 3, 2), MultiDegree::zero(ell), 1);
    for j in 0..ell {
        g.add_term(fw(n, 3, 1).add(&fw(n, 1, 1)), unit_sum(ell, &[j]), 1);
        for k in j + 1..ell {
            g.add_term(fw(n, 2, 1), unit_sum(ell, &[j, k]), 1);
            for l in k + 1..ell {
                g.add_term(Weight::zero(n), unit_sum(ell, &[j, k, l]), 1);
            }
        }
    }
    for r in degree_vectors(ell, 2) {
        g.add_term(fw(n, 1, 2), r, 1);
    }
    g
}

pub struct Runner<'a> {
    engine_for: &'a dyn Fn(&str) -> Arc<RepEngine>,
    results: Vec<CheckResult>,
}

impl<'a> Runner<'a> {
    pub fn new(engine_for: &'a dyn Fn(&str) -> Arc<RepEngine>) -> Self {
        Runner { engine_for, results: Vec::new() }
    }

    fn record(&mut self, name: String, outcome: Check) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, None),
            Err(d) => (false, Some(d)),
        };
        self.results.push(CheckResult { name, passed, detail });
    }

    fn kr(&self, algebra: &str, ell: usize) -> Result<KrEngine, String> {
        KrEngine::adjoint((self.engine_for)(algebra), ell).map_err(|e| e.to_string())
    }

    pub fn run(mut self, suite: Suite) -> Vec<CheckResult> {
        if matches!(suite, Suite::Paper | Suite::All) {
            self.paper();
        }
        if matches!(suite, Suite::Identities | Suite::All) {
            self.identities();
        }
        self.results
    }

    fn paper(&mut self) {
        for ell in 1..=3 {
            let outcome = self.kr("D5", ell).and_then(|kr| {
                let got = kr.gch_n(&fw(5, 3, 2), PsiMode::FixedPsi).map_err(|e| e.to_string())?;
                let want = two_omega_three(ell);
                if got == want {
                    Ok(())
                } else {
                    Err(first_difference(&got, &want))
                }
            });
            self.record(format!("gch N(2ω3) in D5 at ℓ={ell} matches the displayed formula"), outcome);
        }

        let d5 = (self.engine_for)("D5");
        let profile = |mu: Weight| {
            multiplicity_ell_profile(&d5, &fw(5, 3, 2), &mu, 3, PsiMode::FixedPsi).map_err(|e| e.to_string())
        };
        let outcome = profile(fw(5, 2, 1)).and_then(|p| {
            let shape: Vec<bool> = p.iter().map(|&c| c != 0).collect();
            if shape == [false, true, true] { Ok(()) } else { Err(format!("profile {p:?}")) }
        });
        self.record("V(ω2) occurs in N(2ω3) iff ℓ ≥ 2".into(), outcome);
        let outcome = profile(Weight::zero(5)).and_then(|p| {
            let shape: Vec<bool> = p.iter().map(|&c| c != 0).collect();
            if shape == [false, false, true] { Ok(()) } else { Err(format!("profile {p:?}")) }
        });
        self.record("V(0) occurs in N(2ω3) iff ℓ ≥ 3".into(), outcome);

        let outcome = self.kr("D5", 3).and_then(|kr| {
            let base = LambdaPoint::new(fw(5, 3, 2), MultiDegree::zero(3));
            let table: [(Weight, [i32; 3], u64); 10] = [
                (fw(5, 3, 2), [0, 0, 0], 1),
                (fw(5, 3, 1).add(&fw(5, 1, 1)), [1, 0, 0], 1),
                (fw(5, 2, 1), [1, 1, 0], 1),
                (fw(5, 2, 1), [2, 0, 0], 1),
                (fw(5, 1, 2), [0, 1, 1], 1),
                (fw(5, 1, 2), [0, 2, 0], 0),
                (Weight::zero(5), [1, 1, 1], 1),
                (Weight::zero(5), [3, 0, 0], 1),
                (Weight::zero(5), [2, 1, 0], 1),
                (Weight::zero(5), [0, 1, 2], 1),
            ];
            for (mu, r, want) in table {
                let j = r.iter().sum::<i32>() as u32;
                let got = kr.ext_dim(&base, &LambdaPoint::new(mu.clone(), MultiDegree(r.to_vec())), j).map_err(|e| e.to_string())?;
                if got != want {
                    return Err(format!("c at V{mu}, r={r:?}: got {got}, expected {want}"));
                }
            }
            Ok(())
        });
        self.record("coefficients c^{2ω3,0}_{μ,r} in D5".into(), outcome);

        for (alg, n) in [("D4", 4), ("D5", 5)] {
            let outcome = (|| {
                for ell in 1..=3 {
                    let kr = self.kr(alg, ell)?;
                    for m in 0..=4 {
                        let mut want = GradedChar::new(ell);
                        for d in 0..=m {
                            for r in degree_vectors(ell, d) {
                                want.add_term(fw(n, 2, m - d), r, 1);
                            }
                        }
                        let got = kr.gch_n(&fw(n, 2, m), PsiMode::FixedPsi).map_err(|e| e.to_string())?;
                        if got != want {
                            return Err(format!("m={m} ℓ={ell}: {}", first_difference(&got, &want)));
                        }
                    }
                }
                Ok(())
            })();
            self.record(format!("gch N(mω2) closed formula in {alg}, m ≤ 4, ℓ ≤ 3"), outcome);
        }

        let outcome = self.kr("D5", 1).and_then(|kr| {
            for m in 0..=3 {
                let mut want = GradedChar::new(1);
                for r in 0..=m {
                    want.add_term(fw(5, 3, m - r).add(&fw(5, 1, r)), MultiDegree(vec![r]), 1);
                }
                let got = kr.gch_n(&fw(5, 3, m), PsiMode::FixedPsi).map_err(|e| e.to_string())?;
                if got != want {
                    return Err(format!("m={m}: {}", first_difference(&got, &want)));
                }
            }
            Ok(())
        });
        self.record("gch N(mω3) closed formula in D5 at ℓ=1, m ≤ 3".into(), outcome);

        for (alg, n, nodes) in [("D4", 4, [1, 3, 4]), ("D5", 5, [1, 4, 5])] {
            let outcome = (|| {
                for ell in 1..=3 {
                    let kr = self.kr(alg, ell)?;
                    for i in nodes {
                        for m in 0..=4 {
                            let lambda = fw(n, i, m);
                            let got = kr.gch_n(&lambda, PsiMode::FixedPsi).map_err(|e| e.to_string())?;
                            if got != GradedChar::single(lambda.clone(), MultiDegree::zero(ell)) {
                                return Err(format!("{m}ω{i} at ℓ={ell}"));
                            }
                        }
                    }
                }
                Ok(())
            })();
            self.record(format!("N(mω_i) ≅ V(mω_i) in {alg} for i = 1 and spin nodes"), outcome);
        }
    }

    fn identities(&mut self) {
        for (alg, n, nodes) in [("D4", 4, vec![1, 2]), ("D5", 5, vec![1, 2, 3])] {
            for i in nodes {
                for m in 1..=3 {
                    for ell in 1..=3 {
                        let lambda = fw(n, i, m);
                        let label = format!("{alg} λ={lambda} ℓ={ell}");
                        let kr = match self.kr(alg, ell) {
                            Ok(kr) => kr,
                            Err(e) => {
                                self.record(format!("{label}: setup"), Err(e));
                                continue;
                            }
                        };
                        let gamma = match kr.gamma_for(&lambda, &MultiDegree::zero(ell)) {
                            Ok(g) => g,
                            Err(e) => {
                                self.record(format!("{label}: Γ"), Err(e.to_string()));
                                continue;
                            }
                        };
                        let outcome = kr.verify_ae_identity(&gamma).map_err(|e| e.to_string()).and_then(|o| match o {
                            krchar::Outcome::Pass => Ok(()),
                            krchar::Outcome::Fail(d) => Err(d),
                        });
                        self.record(format!("{label}: A(t)E(-t) = Id"), outcome);

                        let outcome = (|| {
                            for p in gamma.points() {
                                let sub = gamma_psi(kr.root_system(), gamma.psi(), p, false).map_err(|e| e.to_string())?;
                                let d = kr.gch_p_direct(p, &sub).map_err(|e| e.to_string())?;
                                let r = kr.gch_p_recursive(p, &sub, PsiMode::FixedPsi).map_err(|e| e.to_string())?;
                                if d != r {
                                    return Err(format!("base {p}: {}", first_difference(&r, &d)));
                                }
                            }
                            Ok(())
                        })();
                        self.record(format!("{label}: direct = recursive"), outcome);

                        let outcome = kr
                            .verify_alternating_sum(gamma.base(), &gamma)
                            .map_err(|e| e.to_string())
                            .and_then(|o| match o {
                                krchar::Outcome::Pass => Ok(()),
                                krchar::Outcome::Fail(d) => Err(d),
                            });
                        self.record(format!("{label}: alternating sum"), outcome);

                        let outcome = (|| {
                            let a = kr.gch_n(&lambda, PsiMode::FixedPsi).map_err(|e| e.to_string())?;
                            let b = kr.gch_n(&lambda, PsiMode::PerWeightPsi).map_err(|e| e.to_string())?;
                            if a != b {
                                return Err(first_difference(&b, &a));
                            }
                            if !a.is_genuine() {
                                return Err("negative multiplicity".into());
                            }
                            Ok(())
                        })();
                        self.record(format!("{label}: fixed-psi = per-weight-psi"), outcome);
                    }
                }
            }
        }
    }
}
