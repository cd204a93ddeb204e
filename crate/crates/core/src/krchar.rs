//! Graded characters of the truncated projectives `P(λ,r)^Γ` and of the
//! generalized Kirillov-Reshetikhin modules `N(λ,r)`, the matrices `A(t)` and
//! `E(t)`, and the identities tying them together.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::character::WeightChar;
use crate::memo::Memo;
use crate::poset::{gamma_psi, psi_i, GammaSet, LambdaPoint, MultiDegree, PosetError, PsiSet};
use crate::repchar::{ModuleSpec, RepEngine, RepError};
use crate::rootsys::{RootSysError, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KrError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error("base point {0} is not in Γ")]
    BaseNotInGamma(LambdaPoint),
    #[error("Γ has ℓ = {got}, module spec has ℓ = {ell}")]
    EllMismatch { got: usize, ell: usize },
    #[error("unknown mode {0:?} (expected fixed-psi or per-weight-psi)")]
    BadMode(String),
}

/// How inner terms of the recursion choose their Ψ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PsiMode {
    /// The Ψ of the outermost Γ is used throughout.
    #[default]
    FixedPsi,
    /// Each inner weight `μ` uses `Ψ_{i_μ}`.
    PerWeightPsi,
}

impl fmt::Display for PsiMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PsiMode::FixedPsi => "fixed-psi",
            PsiMode::PerWeightPsi => "per-weight-psi",
        })
    }
}

impl FromStr for PsiMode {
    type Err = KrError;

    fn from_str(s: &str) -> Result<Self, KrError> {
        match s {
            "fixed-psi" | "fixed" => Ok(PsiMode::FixedPsi),
            "per-weight-psi" | "per-weight" => Ok(PsiMode::PerWeightPsi),
            _ => Err(KrError::BadMode(s.to_string())),
        }
    }
}

/// `Σ [V : V(λ,r)] ch V(λ) t^r`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedChar {
    ell: usize,
    entries: BTreeMap<(Weight, MultiDegree), i64>,
}

impl GradedChar {
    pub fn new(ell: usize) -> Self {
        GradedChar { ell, entries: BTreeMap::new() }
    }

    pub fn single(weight: Weight, degree: MultiDegree) -> Self {
        let mut g = GradedChar::new(degree.ell());
        g.add_term(weight, degree, 1);
        g
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn add_term(&mut self, weight: Weight, degree: MultiDegree, m: i64) {
        assert_eq!(degree.ell(), self.ell, "multidegree length");
        if m == 0 {
            return;
        }
        let key = (weight, degree);
        let e = self.entries.entry(key.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.remove(&key);
        }
    }

    pub fn get(&self, weight: &Weight, degree: &MultiDegree) -> i64 {
        self.entries.get(&(weight.clone(), degree.clone())).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &MultiDegree, i64)> {
        self.entries.iter().map(|((w, r), m)| (w, r, *m))
    }

    /// Entries ordered by total degree, then weight, then multidegree.
    pub fn sorted_entries(&self) -> Vec<(Weight, MultiDegree, i64)> {
        let mut v: Vec<_> = self.iter().map(|(w, r, m)| (w.clone(), r.clone(), m)).collect();
        v.sort_by(|a, b| (a.1.deg(), &a.0, &a.1).cmp(&(b.1.deg(), &b.0, &b.1)));
        v
    }

    pub fn is_genuine(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    /// Multiplies by `t^r`.
    pub fn shifted(&self, r: &MultiDegree) -> GradedChar {
        GradedChar {
            ell: self.ell,
            entries: self.entries.iter().map(|((w, s), m)| ((w.clone(), s.add(r)), *m)).collect(),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &GradedChar, k: i64) {
        for ((w, r), m) in &other.entries {
            self.add_term(w.clone(), r.clone(), k * m);
        }
    }

    /// Sum of the multiplicities at weight `μ` over all degrees.
    pub fn total_at(&self, mu: &Weight) -> i64 {
        self.iter().filter(|(w, _, _)| *w == mu).map(|(_, _, m)| m).sum()
    }
}

/// A Laurent polynomial in `t_1, …, t_ℓ` with integer coefficients.
pub type LaurentPoly = BTreeMap<MultiDegree, i64>;

fn poly_add(p: &mut LaurentPoly, r: MultiDegree, c: i64) {
    if c == 0 {
        return;
    }
    let e = p.entry(r.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        p.remove(&r);
    }
}

fn poly_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::new();
    for (ra, ca) in a {
        for (rb, cb) in b {
            poly_add(&mut out, ra.add(rb), ca * cb);
        }
    }
    out
}

/// `t ↦ -t`.
fn poly_negate_t(p: &LaurentPoly) -> LaurentPoly {
    p.iter().map(|(r, c)| (r.clone(), if r.deg() % 2 == 0 { *c } else { -c })).collect()
}

fn fmt_poly(p: &LaurentPoly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter().map(|(r, c)| format!("{c}·t^{r}")).collect::<Vec<_>>().join(" + ")
}

/// A square matrix of Laurent polynomials indexed by the points of a Γ:
/// row `(μ,s)`, column `(λ,r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    points: Vec<LambdaPoint>,
    entries: Vec<Vec<LaurentPoly>>,
}

impl MonomialMatrix {
    pub fn points(&self) -> &[LambdaPoint] {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row][col]
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.size()).all(|i| (i + 1..self.size()).all(|j| self.entries[i][j].is_empty()))
    }

    pub fn has_unit_diagonal(&self) -> bool {
        let ell = self.points.first().map_or(0, |p| p.degree.ell());
        let one: LaurentPoly = [(MultiDegree::zero(ell), 1)].into_iter().collect();
        (0..self.size()).all(|i| self.entries[i][i] == one)
    }

    pub fn mul(&self, other: &MonomialMatrix) -> MonomialMatrix {
        let n = self.size();
        let mut entries = vec![vec![LaurentPoly::new(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for (k, out) in row.iter_mut().enumerate() {
                for j in 0..n {
                    if self.entries[i][j].is_empty() || other.entries[j][k].is_empty() {
                        continue;
                    }
                    for (r, c) in poly_mul(&self.entries[i][j], &other.entries[j][k]) {
                        poly_add(out, r, c);
                    }
                }
            }
        }
        MonomialMatrix { points: self.points.clone(), entries }
    }

    pub fn negate_t(&self) -> MonomialMatrix {
        MonomialMatrix {
            points: self.points.clone(),
            entries: self.entries.iter().map(|row| row.iter().map(poly_negate_t).collect()).collect(),
        }
    }

    /// The first entry differing from the identity, if any.
    pub fn identity_mismatch(&self) -> Option<(usize, usize)> {
        let ell = self.points.first().map_or(0, |p| p.degree.ell());
        let one: LaurentPoly = [(MultiDegree::zero(ell), 1)].into_iter().collect();
        for i in 0..self.size() {
            for j in 0..self.size() {
                let ok = if i == j { self.entries[i][j] == one } else { self.entries[i][j].is_empty() };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Result of a verification: pass, or a description of the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

/// Collapses every multidegree to its total degree.
pub fn specialize_degree(g: &GradedChar) -> GradedChar {
    let mut out = GradedChar::new(1);
    for (w, r, m) in g.iter() {
        out.add_term(w.clone(), MultiDegree(vec![r.deg()]), m);
    }
    out
}

fn sign(deg: i32) -> i64 {
    if deg % 2 == 0 {
        1
    } else {
        -1
    }
}

type RecKey = (PsiMode, Vec<Weight>, Weight);

/// Computations for a fixed root system and degree-one data `V_1, …, V_ℓ`.
pub struct KrEngine {
    rep: Arc<RepEngine>,
    ms: ModuleSpec,
    v_char: WeightChar,
    psi_by_node: Memo<usize, PsiSet>,
    recursive: Memo<RecKey, GradedChar>,
}

impl KrEngine {
    pub fn new(rep: Arc<RepEngine>, ms: ModuleSpec) -> Result<Self, KrError> {
        let mut v_char = WeightChar::new();
        for c in ms.components() {
            for w in c {
                v_char.add_assign_scaled(&*rep.freudenthal(w)?, 1);
            }
        }
        Ok(KrEngine { rep, ms, v_char, psi_by_node: Memo::default(), recursive: Memo::default() })
    }

    /// Every `V_j` adjoint, the setting of the Kirillov-Reshetikhin modules.
    pub fn adjoint(rep: Arc<RepEngine>, ell: usize) -> Result<Self, KrError> {
        let ms = ModuleSpec::adjoint(rep.root_system(), ell);
        KrEngine::new(rep, ms)
    }

    pub fn rep(&self) -> &Arc<RepEngine> {
        &self.rep
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rep.root_system()
    }

    pub fn module_spec(&self) -> &ModuleSpec {
        &self.ms
    }

    pub fn ell(&self) -> usize {
        self.ms.ell()
    }

    /// The weights of a single `V_j` when all agree, otherwise of `⊕ V_j`.
    fn v_weights(&self) -> &WeightChar {
        &self.v_char
    }

    /// `Ψ_i` with both condition checks run against the weights of `V`.
    pub fn checked_psi(&self, node: usize) -> Result<Arc<PsiSet>, KrError> {
        if let Some(p) = self.psi_by_node.get(&node) {
            return Ok(p);
        }
        let p = psi_i(self.root_system(), node)?.checked(self.root_system(), self.v_weights())?;
        Ok(self.psi_by_node.insert(node, p))
    }

    pub fn psi_for(&self, lambda: &Weight) -> Result<Arc<PsiSet>, KrError> {
        self.checked_psi(crate::poset::i_lambda(self.root_system(), lambda))
    }

    /// `Γ_{Ψ_λ}(λ, r)`.
    pub fn gamma_for(&self, lambda: &Weight, r: &MultiDegree) -> Result<GammaSet, KrError> {
        self.check_ell(r.ell())?;
        let psi = self.psi_for(lambda)?;
        Ok(gamma_psi(self.root_system(), &psi, &LambdaPoint::new(lambda.clone(), r.clone()), false)?)
    }

    fn check_ell(&self, ell: usize) -> Result<(), KrError> {
        if ell != self.ell() {
            return Err(KrError::EllMismatch { got: ell, ell: self.ell() });
        }
        Ok(())
    }

    fn degree_gap(a: &LambdaPoint, b: &LambdaPoint) -> Option<Vec<u32>> {
        b.degree.sub(&a.degree).as_u32()
    }

    /// `dim Ext^j(V(λ,r), V(μ,s))`.
    pub fn ext_dim(&self, a: &LambdaPoint, b: &LambdaPoint, j: u32) -> Result<u64, KrError> {
        self.check_ell(a.degree.ell())?;
        self.check_ell(b.degree.ell())?;
        let Some(k) = Self::degree_gap(a, b) else { return Ok(0) };
        if k.iter().sum::<u32>() != j {
            return Ok(0);
        }
        Ok(self.rep.c_coefficient(&self.ms, &a.weight, &b.weight, &k)? as u64)
    }

    /// `[P(λ,r) : V(μ,s)]`.
    pub fn projective_mult(&self, a: &LambdaPoint, b: &LambdaPoint) -> Result<i64, KrError> {
        let Some(k) = Self::degree_gap(a, b) else { return Ok(0) };
        Ok(self.rep.sym_coefficient(&self.ms, &a.weight, &b.weight, &k)?)
    }

    fn build_matrix<F>(&self, gamma: &GammaSet, mut f: F) -> Result<MonomialMatrix, KrError>
    where
        F: FnMut(&LambdaPoint, &LambdaPoint) -> Result<i64, KrError>,
    {
        self.check_ell(gamma.ell())?;
        let points = gamma.points().to_vec();
        let n = points.len();
        let mut entries = vec![vec![LaurentPoly::new(); n]; n];
        for (i, row) in points.iter().enumerate() {
            for (j, col) in points.iter().enumerate() {
                let gap = row.degree.sub(&col.degree);
                if !gap.is_nonnegative() {
                    continue;
                }
                let c = f(col, row)?;
                poly_add(&mut entries[i][j], gap, c);
            }
        }
        Ok(MonomialMatrix { points, entries })
    }

    /// `E(t)`: entry `((μ,s),(λ,r)) = dim Ext^{deg(s-r)}(V(λ,r), V(μ,s)) t^{s-r}`.
    pub fn matrix_e(&self, gamma: &GammaSet) -> Result<MonomialMatrix, KrError> {
        self.build_matrix(gamma, |a, b| {
            let j = b.degree.sub(&a.degree).deg() as u32;
            Ok(self.ext_dim(a, b, j)? as i64)
        })
    }

    /// `A(t)`: entry `((μ,s),(λ,r)) = [P(λ,r) : V(μ,s)] t^{s-r}`.
    pub fn matrix_a(&self, gamma: &GammaSet) -> Result<MonomialMatrix, KrError> {
        self.build_matrix(gamma, |a, b| self.projective_mult(a, b))
    }

    /// `A(t) E(-t) = Id`.
    pub fn verify_ae_identity(&self, gamma: &GammaSet) -> Result<Outcome, KrError> {
        let a = self.matrix_a(gamma)?;
        let e = self.matrix_e(gamma)?;
        if !a.is_lower_triangular() || !e.is_lower_triangular() {
            return Ok(Outcome::Fail("A or E is not lower triangular".into()));
        }
        let prod = a.mul(&e.negate_t());
        Ok(match prod.identity_mismatch() {
            None => Outcome::Pass,
            Some((i, j)) => Outcome::Fail(format!(
                "entry ({}, {}) of A(t)E(-t) is {}",
                prod.points[i],
                prod.points[j],
                fmt_poly(prod.entry(i, j))
            )),
        })
    }

    fn check_base(base: &LambdaPoint, gamma: &GammaSet) -> Result<(), KrError> {
        if !gamma.contains(base) {
            return Err(KrError::BaseNotInGamma(base.clone()));
        }
        Ok(())
    }

    /// `gch P(λ,r)^Γ` from symmetric-power multiplicities restricted to Γ.
    pub fn gch_p_direct(&self, base: &LambdaPoint, gamma: &GammaSet) -> Result<GradedChar, KrError> {
        self.check_ell(gamma.ell())?;
        Self::check_base(base, gamma)?;
        let mut out = GradedChar::new(gamma.ell());
        for p in gamma.points() {
            let m = self.projective_mult(base, p)?;
            out.add_term(p.weight.clone(), p.degree.clone(), m);
        }
        Ok(out)
    }

    /// `gch P(λ,r)^Γ` by solving the alternating-sum identity for its leading
    /// term, with inner terms expressed as translates `gch P(μ,0)^{Γ_Ψ(μ,0)} t^s`.
    pub fn gch_p_recursive(&self, base: &LambdaPoint, gamma: &GammaSet, mode: PsiMode) -> Result<GradedChar, KrError> {
        self.check_ell(gamma.ell())?;
        Self::check_base(base, gamma)?;
        let inner = self.recursive_at_zero(gamma.psi(), &base.weight, mode)?;
        Ok(inner.shifted(&base.degree))
    }

    fn recursive_at_zero(&self, psi: &PsiSet, lambda: &Weight, mode: PsiMode) -> Result<Arc<GradedChar>, KrError> {
        let key = (mode, psi.elements().to_vec(), lambda.clone());
        if let Some(g) = self.recursive.get(&key) {
            return Ok(g);
        }
        let ell = self.ell();
        let zero = MultiDegree::zero(ell);
        let base = LambdaPoint::new(lambda.clone(), zero.clone());
        let gamma = gamma_psi(self.root_system(), psi, &base, true)?;
        let mut out = GradedChar::single(lambda.clone(), zero);
        for p in gamma.points().iter().filter(|p| p.degree.deg() > 0) {
            let k = p.degree.as_u32().expect("Γ degrees are nonnegative");
            let c = self.rep.c_coefficient(&self.ms, lambda, &p.weight, &k)?;
            if c == 0 {
                continue;
            }
            let inner = match mode {
                PsiMode::FixedPsi => self.recursive_at_zero(psi, &p.weight, mode)?,
                PsiMode::PerWeightPsi => {
                    let inner_psi = self.psi_for(&p.weight)?;
                    if !inner_psi.is_valid() {
                        return Err(PosetError::UncheckedPsi.into());
                    }
                    self.recursive_at_zero(&inner_psi, &p.weight, mode)?
                }
            };
            out.add_assign_scaled(&inner.shifted(&p.degree), -sign(p.degree.deg()) * c);
        }
        Ok(self.recursive.insert(key, out))
    }

    /// `gch N(λ, 0)` as `gch P(λ,0)^Γ` with `Γ = Γ_{Ψ_λ}(λ, 0)`. The fixed mode
    /// reads it off the symmetric powers directly; the per-weight mode runs
    /// the recursion with `Ψ_μ` for each inner weight.
    pub fn gch_n(&self, lambda: &Weight, mode: PsiMode) -> Result<GradedChar, KrError> {
        self.root_system().check_dominant(lambda)?;
        let zero = MultiDegree::zero(self.ell());
        let gamma = self.gamma_for(lambda, &zero)?;
        let base = gamma.base().clone();
        match mode {
            PsiMode::FixedPsi => self.gch_p_direct(&base, &gamma),
            PsiMode::PerWeightPsi => self.gch_p_recursive(&base, &gamma, mode),
        }
    }

    /// Replaces each isotypical term by the weights of `V(μ)` at degree `r`.
    pub fn expand_to_weights(&self, g: &GradedChar) -> Result<HashMap<(Weight, MultiDegree), i64>, KrError> {
        let mut out: HashMap<(Weight, MultiDegree), i64> = HashMap::new();
        for (mu, r, m) in g.iter() {
            for (w, wm) in self.rep.freudenthal(mu)?.iter() {
                *out.entry((w.clone(), r.clone())).or_insert(0) += m * wm;
            }
        }
        out.retain(|_, m| *m != 0);
        Ok(out)
    }

    /// `ch V(λ) (-t)^n = Σ_{(μ,s)∈Γ} (-1)^{deg s} c^{λ,n}_{μ,s} gch P(μ,s)^Γ`,
    /// compared weight by weight.
    pub fn verify_alternating_sum(&self, base: &LambdaPoint, gamma: &GammaSet) -> Result<Outcome, KrError> {
        self.check_ell(gamma.ell())?;
        Self::check_base(base, gamma)?;
        let mut lhs: HashMap<(Weight, MultiDegree), i64> = HashMap::new();
        for (w, m) in self.rep.freudenthal(&base.weight)?.iter() {
            lhs.insert((w.clone(), base.degree.clone()), sign(base.degree.deg()) * m);
        }
        let mut rhs: HashMap<(Weight, MultiDegree), i64> = HashMap::new();
        for p in gamma.points() {
            let Some(k) = Self::degree_gap(base, p) else { continue };
            let c = self.rep.c_coefficient(&self.ms, &base.weight, &p.weight, &k)?;
            if c == 0 {
                continue;
            }
            let term = self.expand_to_weights(&self.gch_p_direct(p, gamma)?)?;
            let coeff = sign(p.degree.deg()) * c;
            for (key, m) in term {
                *rhs.entry(key).or_insert(0) += coeff * m;
            }
        }
        rhs.retain(|_, m| *m != 0);
        if lhs == rhs {
            return Ok(Outcome::Pass);
        }
        let mut keys: Vec<_> = lhs.keys().chain(rhs.keys()).cloned().collect();
        keys.sort();
        let bad = keys
            .into_iter()
            .find(|k| lhs.get(k) != rhs.get(k))
            .expect("maps differ");
        Ok(Outcome::Fail(format!(
            "weight {} at degree {}: expected {}, got {}",
            bad.0,
            bad.1,
            lhs.get(&bad).copied().unwrap_or(0),
            rhs.get(&bad).copied().unwrap_or(0)
        )))
    }
}

/// `c_ℓ(λ, μ)`: the total multiplicity of `V(μ)` in `gch N(λ, 0)` for
/// `ℓ = 1, …, ℓ_max`, adjoint degree-one data.
pub fn multiplicity_ell_profile(
    rep: &Arc<RepEngine>,
    lambda: &Weight,
    mu: &Weight,
    ell_max: usize,
    mode: PsiMode,
) -> Result<Vec<i64>, KrError> {
    rep.root_system().check_dominant(lambda)?;
    rep.root_system().check_dominant(mu)?;
    (1..=ell_max)
        .map(|ell| Ok(KrEngine::adjoint(rep.clone(), ell)?.gch_n(lambda, mode)?.total_at(mu)))
        .collect()
}
