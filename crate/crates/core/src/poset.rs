//! The poset `Λ = P⁺ × Z^ℓ`: Ψ-sets, the orders `≼` and `≼_Ψ`, the
//! distance `d_Ψ`, and enumeration of the convex sets `Γ_Ψ(λ, r)`.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::character::WeightChar;
use crate::lp::{find_feasible, int, Constraint};
use crate::repchar::{ModuleSpec, RepEngine, RepError};
use crate::rootsys::{RootCoords, RootSysError, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{0} is not the negative of a positive root")]
    NotNegativeRoot(Weight),
    #[error("{0} is not a weight of V")]
    NotAWeight(Weight),
    #[error("the minimizing set for {0} is not contained in -R+")]
    NotInNegativeRoots(Weight),
    #[error("Ψ(μ) requires a nonzero dominant μ, got {0}")]
    BadMu(Weight),
    #[error("Ψ has not passed the face and finiteness checks")]
    UncheckedPsi,
    #[error("multidegree has length {got}, expected {ell}")]
    DegreeLength { got: usize, ell: usize },
}

/// A multidegree `r ∈ Z^ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(pub Vec<i32>);

impl MultiDegree {
    pub fn zero(ell: usize) -> Self {
        MultiDegree(vec![0; ell])
    }

    /// `e_j` with 1-based `j`.
    pub fn unit(ell: usize, j: usize) -> Self {
        let mut r = vec![0; ell];
        r[j - 1] = 1;
        MultiDegree(r)
    }

    pub fn ell(&self) -> usize {
        self.0.len()
    }

    /// `deg(r) = Σ r_i`.
    pub fn deg(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn as_u32(&self) -> Option<Vec<u32>> {
        self.0.iter().map(|&x| u32::try_from(x).ok()).collect()
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All `r ∈ Z₊^ℓ` with `deg(r) = d`, in lexicographic order.
pub fn compositions(ell: usize, d: u32) -> Vec<MultiDegree> {
    fn go(ell: usize, d: i32, prefix: &mut Vec<i32>, out: &mut Vec<MultiDegree>) {
        if prefix.len() + 1 == ell {
            prefix.push(d);
            out.push(MultiDegree(prefix.clone()));
            prefix.pop();
            return;
        }
        for x in 0..=d {
            prefix.push(x);
            go(ell, d - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if ell > 0 {
        go(ell, d as i32, &mut Vec::with_capacity(ell), &mut out);
    }
    out
}

/// A point `(λ, r)` of `Λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaPoint {
    pub weight: Weight,
    pub degree: MultiDegree,
}

impl LambdaPoint {
    pub fn new(weight: Weight, degree: MultiDegree) -> Self {
        LambdaPoint { weight, degree }
    }
}

impl fmt::Display for LambdaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.weight, self.degree)
    }
}

/// A subset of `-R⁺`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PsiSet {
    elements: Vec<Weight>,
    /// Simple-root coordinates of `-ν` for each element `ν`.
    lifted: Vec<Vec<i64>>,
    polytope_checked: bool,
    extra_checked: bool,
}

impl PsiSet {
    pub fn new(rs: &RootSystem, mut elements: Vec<Weight>) -> Result<Self, PosetError> {
        elements.sort();
        elements.dedup();
        let mut lifted = Vec::with_capacity(elements.len());
        for e in &elements {
            rs.check_rank(e)?;
            let idx = rs.positive_root_index(&e.neg()).ok_or_else(|| PosetError::NotNegativeRoot(e.clone()))?;
            lifted.push(rs.positive_roots()[idx].simple.iter().map(|&x| x as i64).collect());
        }
        Ok(PsiSet { elements, lifted, polytope_checked: false, extra_checked: false })
    }

    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn polytope_checked(&self) -> bool {
        self.polytope_checked
    }

    pub fn extra_checked(&self) -> bool {
        self.extra_checked
    }

    /// Runs both condition checks against `wt(V)` and records the outcome.
    pub fn checked(mut self, rs: &RootSystem, v: &WeightChar) -> Result<Self, PosetError> {
        self.polytope_checked = check_polytope_condition(&self.elements, v)?;
        self.extra_checked = check_psi_extra(rs, &self.elements, v);
        Ok(self)
    }

    pub fn is_valid(&self) -> bool {
        self.polytope_checked && self.extra_checked
    }
}

/// `Ψ_i = {-β : β ∈ R⁺, m_{β,i} = 2}` for a 1-based node `i`.
pub fn psi_i(rs: &RootSystem, node: usize) -> Result<PsiSet, PosetError> {
    rs.check_node(node)?;
    let elements: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.simple[node - 1] == 2)
        .map(|r| r.weight.neg())
        .collect();
    let psi = PsiSet::new(rs, elements)?;
    #[cfg(debug_assertions)]
    if !psi.is_empty() {
        let mu = Weight::fundamental(rs.rank(), node, 1);
        let adjoint = WeightChar::from_entries(rs.adjoint_weights());
        debug_assert_eq!(psi_of_mu(rs, &adjoint, &mu).ok().as_ref().map(|p| p.elements()), Some(psi.elements()));
    }
    Ok(psi)
}

/// The weights of `V` on which `(·, μ)` is minimal. For the adjoint module
/// this is `Ψ(μ) ⊆ -R⁺`; any other outcome is rejected.
pub fn psi_of_mu(rs: &RootSystem, v: &WeightChar, mu: &Weight) -> Result<PsiSet, PosetError> {
    rs.check_rank(mu)?;
    if !mu.is_dominant() || mu.is_zero() {
        return Err(PosetError::BadMu(mu.clone()));
    }
    let min = v.iter().map(|(w, _)| rs.scaled_inner(w, mu)).min().ok_or_else(|| PosetError::BadMu(mu.clone()))?;
    let elements: Vec<Weight> = v.iter().filter(|(w, _)| rs.scaled_inner(w, mu) == min).map(|(w, _)| w.clone()).collect();
    PsiSet::new(rs, elements).map_err(|_| PosetError::NotInNegativeRoots(mu.clone()))
}

/// `i_λ = max{1, i : λ(h_i) ≠ 0, i not a spin node}` (1-based).
pub fn i_lambda(rs: &RootSystem, lambda: &Weight) -> usize {
    let t = rs.lie_type();
    lambda
        .coords()
        .iter()
        .enumerate()
        .filter(|(i, &c)| c != 0 && !t.is_spin_node(i + 1))
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(1)
}

pub fn psi_lambda(rs: &RootSystem, lambda: &Weight) -> Result<PsiSet, PosetError> {
    psi_i(rs, i_lambda(rs, lambda))
}

/// Whether `Ψ` is exactly the set of weights of `V` on some proper face of
/// the weight polytope: there is a functional `φ` and constant `c` with
/// `φ(ν) = c` on `Ψ` and `φ(μ) > c` on the remaining weights.
pub fn check_polytope_condition(psi: &[Weight], v: &WeightChar) -> Result<bool, PosetError> {
    for p in psi {
        if v.get(p) <= 0 {
            return Err(PosetError::NotAWeight(p.clone()));
        }
    }
    if psi.is_empty() {
        return Ok(true);
    }
    let psi_set: HashSet<&Weight> = psi.iter().collect();
    let mut others: Vec<&Weight> = v.iter().map(|(w, _)| w).filter(|w| !psi_set.contains(w)).collect();
    if others.is_empty() {
        // the whole polytope is not a proper face
        return Ok(false);
    }
    others.sort();
    let n = psi[0].rank();
    // variables: φ_1..φ_n, c
    let row = |w: &Weight| -> Vec<_> {
        let mut r: Vec<_> = w.coords().iter().map(|&x| int(x as i64)).collect();
        r.push(int(-1));
        r
    };
    let mut cs: Vec<Constraint> = psi.iter().map(|w| Constraint::eq(row(w), int(0))).collect();
    // strictness is homogeneous in (φ, c), so "> 0" may be written ">= 1"
    cs.extend(others.into_iter().map(|w| Constraint::geq(row(w), int(1))));
    Ok(find_feasible(n + 1, &cs).is_some())
}

/// The three conditions `Ψ ∩ P⁺ = ∅`, finiteness of `(wt(V) + Z₊Ψ) ∩ P⁺`, and
/// `ξ + α_i ∉ Ψ` for dominant weights `ξ` of `V`.
///
/// Finiteness is certified when every element lies in `-Q⁺ \ {0}`, which
/// covers every subset of `-R⁺`; other inputs are reported as failing.
pub fn check_psi_extra(rs: &RootSystem, psi: &[Weight], v: &WeightChar) -> bool {
    if psi.iter().any(|p| p.is_dominant()) {
        return false;
    }
    let finite = psi.iter().all(|p| match rs.root_coords(&p.neg()) {
        RootCoords::Integral(c) => c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0),
        RootCoords::NotInLattice(_) => false,
    });
    if !finite {
        return false;
    }
    let psi_set: HashSet<&Weight> = psi.iter().collect();
    for (xi, _) in v.iter().filter(|(w, _)| w.is_dominant()) {
        for i in 0..rs.rank() {
            if psi_set.contains(&xi.add(&rs.simple_root(i))) {
                return false;
            }
        }
    }
    true
}

/// `d_Ψ`: the least number of elements of `Ψ` (with repetition) summing to
/// `μ - λ`, or `None` when `λ ≰_Ψ μ`.
pub fn d_psi(rs: &RootSystem, psi: &PsiSet, lambda: &Weight, mu: &Weight) -> Option<u32> {
    let target = match rs.root_coords(&lambda.sub(mu)) {
        RootCoords::Integral(c) if c.iter().all(|&x| x >= 0) => c,
        _ => return None,
    };
    if target.iter().all(|&x| x == 0) {
        return Some(0);
    }
    // elements of Ψ are negative roots, so partial sums grow monotonically
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let start = vec![0i64; target.len()];
    seen.insert(start.clone());
    let mut queue = VecDeque::from([(start, 0u32)]);
    while let Some((sum, depth)) = queue.pop_front() {
        for step in &psi.lifted {
            let next: Vec<i64> = sum.iter().zip(step).map(|(a, b)| a + b).collect();
            if next.iter().zip(&target).any(|(a, t)| a > t) {
                continue;
            }
            if next == target {
                return Some(depth + 1);
            }
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    None
}

/// `b` covers `a`: `s - r ∈ Z₊^ℓ \ {0}` and `μ - λ` is a weight of `a[s - r]`,
/// which is `V_j` for `s - r = e_j` and zero in higher degree.
pub fn covers(engine: &RepEngine, ms: &ModuleSpec, a: &LambdaPoint, b: &LambdaPoint) -> Result<bool, PosetError> {
    let diff = b.degree.sub(&a.degree);
    if diff.ell() != ms.ell() {
        return Err(PosetError::DegreeLength { got: diff.ell(), ell: ms.ell() });
    }
    if !diff.is_nonnegative() || diff.deg() != 1 {
        return Ok(false);
    }
    let j = diff.0.iter().position(|&x| x == 1).expect("degree one");
    let shift = b.weight.sub(&a.weight);
    for w in &ms.components()[j] {
        if engine.freudenthal(w)?.get(&shift) > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `(λ, r) ≼_Ψ (μ, s)`.
pub fn leq_psi(rs: &RootSystem, psi: &PsiSet, a: &LambdaPoint, b: &LambdaPoint) -> bool {
    let diff = b.degree.sub(&a.degree);
    if !diff.is_nonnegative() {
        return false;
    }
    d_psi(rs, psi, &a.weight, &b.weight) == Some(diff.deg() as u32)
}

/// `Γ_Ψ(λ, r)` enumerated along a fixed linear extension of `≼_Ψ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    base: LambdaPoint,
    psi: PsiSet,
    points: Vec<LambdaPoint>,
    d_of: BTreeMap<Weight, u32>,
    index: std::collections::HashMap<LambdaPoint, usize>,
}

impl GammaSet {
    pub fn base(&self) -> &LambdaPoint {
        &self.base
    }

    pub fn psi(&self) -> &PsiSet {
        &self.psi
    }

    pub fn points(&self) -> &[LambdaPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ell(&self) -> usize {
        self.base.degree.ell()
    }

    /// `d_Ψ(λ, μ)` from the base weight, for weights occurring in the set.
    pub fn d_of(&self, mu: &Weight) -> Option<u32> {
        self.d_of.get(mu).copied()
    }

    pub fn distances(&self) -> &BTreeMap<Weight, u32> {
        &self.d_of
    }

    pub fn index_of(&self, p: &LambdaPoint) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &LambdaPoint) -> bool {
        self.index.contains_key(p)
    }

    /// Distinct weights in enumeration order.
    pub fn weights(&self) -> Vec<Weight> {
        let mut seen = HashSet::new();
        self.points.iter().filter(|p| seen.insert(p.weight.clone())).map(|p| p.weight.clone()).collect()
    }
}

/// Enumerates `Γ_Ψ(λ, r)`. The candidate weights are the dominant `μ` with
/// `λ - μ ∈ Q⁺`; each reachable one contributes every degree `r + k` with
/// `deg(k) = d_Ψ(λ, μ)`. Order: `(d, weight, degree)` lexicographically.
pub fn gamma_psi(rs: &RootSystem, psi: &PsiSet, base: &LambdaPoint, allow_unchecked: bool) -> Result<GammaSet, PosetError> {
    if !allow_unchecked && !psi.is_valid() {
        return Err(PosetError::UncheckedPsi);
    }
    rs.check_dominant(&base.weight)?;
    let ell = base.degree.ell();
    let mut keyed: Vec<(u32, LambdaPoint)> = Vec::new();
    let mut d_of = BTreeMap::new();
    for mu in rs.dominant_weights_below(&base.weight) {
        let Some(d) = d_psi(rs, psi, &base.weight, &mu) else { continue };
        d_of.insert(mu.clone(), d);
        for k in compositions(ell, d) {
            keyed.push((d, LambdaPoint::new(mu.clone(), base.degree.add(&k))));
        }
    }
    keyed.sort();
    let points: Vec<LambdaPoint> = keyed.into_iter().map(|(_, p)| p).collect();
    let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    Ok(GammaSet { base: base.clone(), psi: psi.clone(), points, d_of, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn w(c: &[i32]) -> Weight {
        Weight(c.to_vec())
    }

    fn adjoint(r: &RootSystem) -> WeightChar {
        WeightChar::from_entries(r.adjoint_weights())
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(compositions(1, 4), vec![MultiDegree(vec![4])]);
        assert_eq!(compositions(2, 0), vec![MultiDegree(vec![0, 0])]);
        assert_eq!(compositions(2, 1), vec![MultiDegree(vec![0, 1]), MultiDegree(vec![1, 0])]);
    }

    #[test]
    fn psi_i_examples() {
        let d4 = rs("D4");
        assert!(psi_i(&d4, 1).unwrap().is_empty());
        let p2 = psi_i(&d4, 2).unwrap();
        assert_eq!(p2.elements(), &[d4.highest_root().weight.neg()]);
        let d5 = rs("D5");
        assert_eq!(psi_i(&d5, 3).unwrap().len(), 3);
        assert!(psi_i(&d5, 4).unwrap().is_empty());
        assert!(matches!(psi_i(&d5, 6), Err(PosetError::RootSys(RootSysError::NodeOutOfRange { .. }))));
    }

    #[test]
    fn psi_of_mu_examples() {
        let a1 = rs("A1");
        assert_eq!(psi_of_mu(&a1, &adjoint(&a1), &w(&[1])).unwrap().elements(), &[w(&[-2])]);
        let d4 = rs("D4");
        assert_eq!(psi_of_mu(&d4, &adjoint(&d4), &w(&[0, 1, 0, 0])).unwrap(), psi_i(&d4, 2).unwrap());
        assert!(matches!(psi_of_mu(&d4, &adjoint(&d4), &Weight::zero(4)), Err(PosetError::BadMu(_))));
    }

    #[test]
    fn i_lambda_examples() {
        let d5 = rs("D5");
        assert_eq!(i_lambda(&d5, &Weight::zero(5)), 1);
        assert_eq!(i_lambda(&d5, &w(&[0, 0, 2, 0, 0])), 3);
        assert_eq!(i_lambda(&d5, &w(&[1, 0, 1, 0, 0])), 3);
        let d4 = rs("D4");
        assert_eq!(i_lambda(&d4, &w(&[0, 0, 0, 1])), 1);
        assert!(psi_lambda(&d4, &w(&[0, 0, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn polytope_condition_examples() {
        let a1 = rs("A1");
        let v = adjoint(&a1);
        assert!(check_polytope_condition(&[], &v).unwrap());
        assert!(!check_polytope_condition(&[w(&[-2]), w(&[0])], &v).unwrap());
        assert!(check_polytope_condition(&[w(&[-2])], &v).unwrap());
        assert!(matches!(check_polytope_condition(&[w(&[4])], &v), Err(PosetError::NotAWeight(_))));
        let d4 = rs("D4");
        assert!(check_polytope_condition(psi_i(&d4, 2).unwrap().elements(), &adjoint(&d4)).unwrap());
        // a short root of B2 is the midpoint of an edge joining two long roots
        let b2 = rs("B2");
        let minus_a2 = b2.simple_root(1).neg();
        assert!(!check_polytope_condition(&[minus_a2.clone()], &adjoint(&b2)).unwrap());
        let long = b2.positive_roots().iter().find(|r| r.simple == vec![1, 2]).unwrap().weight.clone();
        let edge = vec![minus_a2, long.neg(), b2.simple_root(0)];
        assert!(check_polytope_condition(&edge, &adjoint(&b2)).unwrap());
    }

    #[test]
    fn psi_extra_examples() {
        let d5 = rs("D5");
        let v = adjoint(&d5);
        assert!(check_psi_extra(&d5, &[], &v));
        assert!(check_psi_extra(&d5, psi_i(&d5, 3).unwrap().elements(), &v));
        assert!(!check_psi_extra(&d5, &[d5.highest_root().weight.clone()], &v));
    }

    #[test]
    fn d_psi_examples() {
        let d4 = rs("D4");
        let p2 = psi_i(&d4, 2).unwrap();
        let m = 3;
        for r in 0..=m {
            assert_eq!(
                d_psi(&d4, &p2, &Weight::fundamental(4, 2, m), &Weight::fundamental(4, 2, m - r)),
                Some(r as u32)
            );
        }
        assert_eq!(d_psi(&d4, &p2, &w(&[0, 1, 0, 0]), &w(&[1, 0, 0, 0])), None);
        let d5 = rs("D5");
        let p3 = psi_i(&d5, 3).unwrap();
        assert_eq!(d_psi(&d5, &p3, &w(&[0, 0, 2, 0, 0]), &w(&[0, 1, 0, 0, 0])), Some(2));
    }

    #[test]
    fn leq_psi_examples() {
        let d4 = rs("D4");
        let p2 = psi_i(&d4, 2).unwrap();
        let a = LambdaPoint::new(w(&[0, 2, 0, 0]), MultiDegree::zero(2));
        assert!(leq_psi(&d4, &p2, &a, &a));
        assert!(leq_psi(&d4, &p2, &a, &LambdaPoint::new(w(&[0, 1, 0, 0]), MultiDegree(vec![0, 1]))));
        assert!(!leq_psi(&d4, &p2, &a, &LambdaPoint::new(w(&[0, 1, 0, 0]), MultiDegree(vec![2, 0]))));
    }

    #[test]
    fn covers_examples() {
        let d5 = rs("D5");
        let ms = ModuleSpec::adjoint(&d5, 2);
        let e = RepEngine::new(d5);
        let a = LambdaPoint::new(w(&[0, 0, 2, 0, 0]), MultiDegree::zero(2));
        assert!(!covers(&e, &ms, &a, &a).unwrap());
        assert!(covers(&e, &ms, &a, &LambdaPoint::new(w(&[1, 0, 1, 0, 0]), MultiDegree(vec![1, 0]))).unwrap());
        assert!(!covers(&e, &ms, &a, &LambdaPoint::new(w(&[0, 1, 0, 0, 0]), MultiDegree(vec![1, 1]))).unwrap());
    }

    #[test]
    fn gamma_requires_checked_psi() {
        let d4 = rs("D4");
        let p2 = psi_i(&d4, 2).unwrap();
        let base = LambdaPoint::new(w(&[0, 1, 0, 0]), MultiDegree::zero(1));
        assert_eq!(gamma_psi(&d4, &p2, &base, false), Err(PosetError::UncheckedPsi));
        let p2 = p2.checked(&d4, &adjoint(&d4)).unwrap();
        assert_eq!(gamma_psi(&d4, &p2, &base, false).unwrap().len(), 2);
    }

    #[test]
    fn gamma_of_empty_psi_is_singleton() {
        let d5 = rs("D5");
        let p = psi_i(&d5, 1).unwrap().checked(&d5, &adjoint(&d5)).unwrap();
        let base = LambdaPoint::new(w(&[3, 0, 0, 0, 0]), MultiDegree::zero(3));
        let g = gamma_psi(&d5, &p, &base, false).unwrap();
        assert_eq!(g.points(), &[base]);
    }

    #[test]
    fn gamma_d5_two_omega_three() {
        let d5 = rs("D5");
        let p3 = psi_i(&d5, 3).unwrap().checked(&d5, &adjoint(&d5)).unwrap();
        let base = LambdaPoint::new(w(&[0, 0, 2, 0, 0]), MultiDegree::zero(1));
        let g = gamma_psi(&d5, &p3, &base, false).unwrap();
        let expected = [
            (w(&[0, 0, 2, 0, 0]), 0),
            (w(&[1, 0, 1, 0, 0]), 1),
            (w(&[0, 1, 0, 0, 0]), 2),
            (w(&[2, 0, 0, 0, 0]), 2),
            (Weight::zero(5), 3),
        ];
        assert_eq!(g.len(), 5);
        for (mu, d) in expected {
            assert_eq!(g.d_of(&mu), Some(d), "{mu}");
        }
        assert_eq!(g.points()[0], base);
    }
}
