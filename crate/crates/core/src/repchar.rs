//! Exact character arithmetic for finite-dimensional modules.
//!
//! [`RepEngine`] owns a [`RootSystem`] together with the memo tables for
//! Freudenthal characters, power characters and tensor decompositions. All
//! decompositions go through the Brauer-Klimyk (Racah-Speiser) rule: for a
//! Weyl-invariant character `χ` and dominant `λ`,
//! `χ · ch V(λ) = Σ_w χ(w) ε(σ) ch V(σ(λ + w + ρ) - ρ)`, singular terms dropped.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

use crate::character::{IsoChar, WeightChar};
use crate::memo::{Memo, DEFAULT_CAPACITY};
use crate::rootsys::{RootSysError, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error("character has negative multiplicity {mult} at weight {weight}")]
    NegativeMultiplicity { weight: Weight, mult: i64 },
    #[error("character is not Weyl-invariant (maximal weight {0} is not dominant)")]
    NotWeylInvariant(Weight),
    #[error("degree vector has length {got}, module spec has {ell} components")]
    DegreeLength { got: usize, ell: usize },
    #[error("cannot parse factor descriptor {0:?}")]
    BadFactor(String),
}

/// The graded pieces `V_1, …, V_ℓ` of the degree-one part, each given by the
/// highest weights of its simple summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    components: Vec<Vec<Weight>>,
}

impl ModuleSpec {
    pub fn new(rs: &RootSystem, components: Vec<Vec<Weight>>) -> Result<Self, RepError> {
        if components.is_empty() {
            return Err(RepError::DegreeLength { got: 0, ell: 0 });
        }
        for c in &components {
            for w in c {
                rs.check_dominant(w)?;
            }
        }
        let components = components
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        Ok(ModuleSpec { components })
    }

    /// Every `V_j` is the adjoint module.
    pub fn adjoint(rs: &RootSystem, ell: usize) -> Self {
        assert!(ell >= 1, "ell must be positive");
        let theta = rs.highest_root().weight.clone();
        ModuleSpec { components: vec![vec![theta]; ell] }
    }

    pub fn ell(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<Weight>] {
        &self.components
    }

    pub fn all_equal(&self) -> bool {
        self.components.windows(2).all(|p| p[0] == p[1])
    }

    fn factor(&self, kind: PowerKind, k: &[u32]) -> Result<Factor, RepError> {
        if k.len() != self.ell() {
            return Err(RepError::DegreeLength { got: k.len(), ell: self.ell() });
        }
        let mut parts: Vec<(Vec<Weight>, u32)> = self
            .components
            .iter()
            .zip(k)
            .filter(|(_, &k)| k > 0)
            .map(|(c, &k)| (c.clone(), k))
            .collect();
        // ⊗ is commutative, so sorting the parts is always a valid canonical form
        parts.sort();
        Ok(Factor::Power { kind, parts })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PowerKind {
    Ext,
    Sym,
}

/// The second tensor factor of a cached decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Irrep(Weight),
    /// `⊗_parts Power^{k}(⊕ V(w))`.
    Power { kind: PowerKind, parts: Vec<(Vec<Weight>, u32)> },
}

fn fmt_coords(w: &Weight) -> String {
    w.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_coords(s: &str) -> Option<Weight> {
    s.split(',').map(|t| t.trim().parse::<i32>().ok()).collect::<Option<Vec<_>>>().map(Weight)
}

impl fmt::Display for Factor {
    /// `0,1,0,0` for an irreducible factor, `E(0,1,0,0^2)*(1,0,0,0/0,0,0,1^1)`
    /// for a product of exterior (`E`) or symmetric (`S`) powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Irrep(w) => write!(f, "{}", fmt_coords(w)),
            Factor::Power { kind, parts } => {
                write!(f, "{}", if *kind == PowerKind::Ext { "E" } else { "S" })?;
                if parts.is_empty() {
                    return write!(f, "()");
                }
                let body: Vec<String> = parts
                    .iter()
                    .map(|(ws, k)| {
                        let ws: Vec<String> = ws.iter().map(fmt_coords).collect();
                        format!("({}^{})", ws.join("/"), k)
                    })
                    .collect();
                write!(f, "{}", body.join("*"))
            }
        }
    }
}

impl FromStr for Factor {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, RepError> {
        let bad = || RepError::BadFactor(s.to_string());
        let kind = match s.chars().next() {
            Some('E') => PowerKind::Ext,
            Some('S') => PowerKind::Sym,
            _ => return parse_coords(s).map(Factor::Irrep).ok_or_else(bad),
        };
        let body = &s[1..];
        if body == "()" {
            return Ok(Factor::Power { kind, parts: vec![] });
        }
        let mut parts = Vec::new();
        for part in body.split('*') {
            let inner = part.strip_prefix('(').and_then(|p| p.strip_suffix(')')).ok_or_else(bad)?;
            let (ws, k) = inner.rsplit_once('^').ok_or_else(bad)?;
            let k: u32 = k.parse().map_err(|_| bad())?;
            let ws = ws.split('/').map(parse_coords).collect::<Option<Vec<_>>>().ok_or_else(bad)?;
            parts.push((ws, k));
        }
        Ok(Factor::Power { kind, parts })
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn check_nonnegative(ch: &WeightChar) -> Result<(), RepError> {
    if let Some((w, m)) = ch.iter().find(|(_, m)| **m < 0) {
        return Err(RepError::NegativeMultiplicity { weight: w.clone(), mult: *m });
    }
    Ok(())
}

/// Coefficient of `x^k` in `Π_w f_{mult(w)}(x e^w)` where `f_m(y) = Σ_i coeff(m, i) y^i`.
fn power_dp(ch: &WeightChar, k: u32, coeff: impl Fn(i64, i64) -> i64) -> WeightChar {
    let k = k as usize;
    let rank = ch.iter().next().map(|(w, _)| w.rank()).unwrap_or(0);
    let mut layers: Vec<HashMap<Weight, i64>> = vec![HashMap::new(); k + 1];
    layers[0].insert(Weight::zero(rank), 1);
    for (w, m) in ch.sorted() {
        let mut next: Vec<HashMap<Weight, i64>> = layers.clone();
        for i in 1..=k {
            let c = coeff(m, i as i64);
            if c == 0 {
                continue;
            }
            let shift = w.scale(i as i32);
            for j in 0..=(k - i) {
                for (v, mv) in &layers[j] {
                    *next[j + i].entry(v.add(&shift)).or_insert(0) += c * mv;
                }
            }
        }
        layers = next;
    }
    WeightChar::from_entries(layers.swap_remove(k))
}

/// Character of `Λ^k` of a module with character `ch`.
pub fn ext_power(ch: &WeightChar, k: u32) -> Result<WeightChar, RepError> {
    check_nonnegative(ch)?;
    Ok(power_dp(ch, k, binomial))
}

/// Character of `Sym^k` of a module with character `ch`.
pub fn sym_power(ch: &WeightChar, k: u32) -> Result<WeightChar, RepError> {
    check_nonnegative(ch)?;
    Ok(power_dp(ch, k, |m, i| binomial(m + i - 1, i)))
}

/// Dominant-weight multiplicities of `V(λ)` by Freudenthal's recursion.
pub fn freudenthal_dominant(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Weight, i64)>, RepError> {
    rs.check_dominant(lambda)?;
    let rho = rs.rho();
    let top = lambda.add(&rho);
    let top_norm = rs.scaled_inner(&top, &top);
    let scale = rs.form_scale();
    let doms = rs.dominant_weights_below(lambda);
    let mut mult: HashMap<Weight, i64> = HashMap::with_capacity(doms.len());
    let mut out = Vec::with_capacity(doms.len());
    for mu in doms {
        if &mu == lambda {
            mult.insert(mu.clone(), 1);
            out.push((mu, 1));
            continue;
        }
        let shifted = mu.add(&rho);
        let denom = top_norm - rs.scaled_inner(&shifted, &shifted);
        let mut sum: i64 = 0;
        for root in rs.positive_roots() {
            let mut nu = mu.add(&root.weight);
            while let Some(&m) = mult.get(&rs.dominant_conjugate(&nu).dominant) {
                sum += m * rs.pair_with_root(&nu, &root.simple);
                nu = nu.add(&root.weight);
            }
        }
        let num = 2 * sum * scale;
        assert!(denom > 0 && num % denom == 0, "Freudenthal recursion must be integral");
        let m = num / denom;
        mult.insert(mu.clone(), m);
        out.push((mu, m));
    }
    Ok(out)
}

/// Full character of `V(λ)`.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<WeightChar, RepError> {
    let doms = freudenthal_dominant(rs, lambda)?;
    let mut ch = WeightChar::new();
    for (mu, m) in doms {
        for w in rs.orbit(&mu) {
            ch.add_term(w, m);
        }
    }
    Ok(ch)
}

/// Brauer-Klimyk: decomposes `χ ⊗ V(λ)` for a Weyl-invariant `χ`.
pub fn brauer_klimyk(rs: &RootSystem, ch: &WeightChar, lambda: &Weight) -> IsoChar {
    let shift = lambda.add(&rs.rho());
    let rho = rs.rho();
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (w, m) in ch.iter() {
        let c = rs.dominant_conjugate(&w.add(&shift));
        if c.singular {
            continue;
        }
        *acc.entry(c.dominant.sub(&rho)).or_insert(0) += c.parity as i64 * m;
    }
    IsoChar::from_entries(acc)
}

/// Memoizing front end for character computations over one root system.
#[derive(Debug)]
pub struct RepEngine {
    rs: RootSystem,
    freudenthal: Memo<Weight, WeightChar>,
    factor_chars: Memo<Factor, WeightChar>,
    decompositions: Memo<(Weight, Factor), IsoChar>,
    decomposition_count: AtomicU64,
}

impl RepEngine {
    pub fn new(rs: RootSystem) -> Self {
        Self::with_capacity(rs, DEFAULT_CAPACITY)
    }

    pub fn with_capacity(rs: RootSystem, capacity: usize) -> Self {
        RepEngine {
            rs,
            freudenthal: Memo::new(capacity),
            factor_chars: Memo::new(capacity),
            decompositions: Memo::new(capacity),
            decomposition_count: AtomicU64::new(0),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Number of decompositions computed from scratch (memo misses).
    pub fn decompositions_computed(&self) -> u64 {
        self.decomposition_count.load(Ordering::Relaxed)
    }

    pub fn freudenthal(&self, lambda: &Weight) -> Result<Arc<WeightChar>, RepError> {
        if let Some(c) = self.freudenthal.get(lambda) {
            return Ok(c);
        }
        let c = freudenthal(&self.rs, lambda)?;
        Ok(self.freudenthal.insert(lambda.clone(), c))
    }

    fn component_char(&self, ws: &[Weight]) -> Result<WeightChar, RepError> {
        let mut ch = WeightChar::new();
        for w in ws {
            ch.add_assign_scaled(&*self.freudenthal(w)?, 1);
        }
        Ok(ch)
    }

    /// Character of a factor, memoized (single powers are memoized separately
    /// so that products reuse them).
    pub fn factor_char(&self, factor: &Factor) -> Result<Arc<WeightChar>, RepError> {
        if let Some(c) = self.factor_chars.get(factor) {
            return Ok(c);
        }
        let ch = match factor {
            Factor::Irrep(w) => (*self.freudenthal(w)?).clone(),
            Factor::Power { kind, parts } if parts.len() == 1 => {
                let (ws, k) = &parts[0];
                let base = self.component_char(ws)?;
                match kind {
                    PowerKind::Ext => ext_power(&base, *k)?,
                    PowerKind::Sym => sym_power(&base, *k)?,
                }
            }
            Factor::Power { kind, parts } => {
                let mut ch = WeightChar::one(self.rs.rank());
                for part in parts {
                    let single = Factor::Power { kind: *kind, parts: vec![part.clone()] };
                    ch = ch.mul(&*self.factor_char(&single)?);
                }
                ch
            }
        };
        Ok(self.factor_chars.insert(factor.clone(), ch))
    }

    /// Decomposition of `factor ⊗ V(λ)`, memoized.
    pub fn decompose(&self, lambda: &Weight, factor: &Factor) -> Result<Arc<IsoChar>, RepError> {
        self.rs.check_dominant(lambda)?;
        let key = (lambda.clone(), factor.clone());
        if let Some(d) = self.decompositions.get(&key) {
            return Ok(d);
        }
        let iso = match factor {
            Factor::Irrep(nu) => {
                self.rs.check_dominant(nu)?;
                // iterate over the weights of the smaller factor, ties toward ν
                let (big, small) = if self.rs.weyl_dim(nu)? <= self.rs.weyl_dim(lambda)? {
                    (lambda, nu)
                } else {
                    (nu, lambda)
                };
                brauer_klimyk(&self.rs, &*self.freudenthal(small)?, big)
            }
            Factor::Power { .. } => brauer_klimyk(&self.rs, &*self.factor_char(factor)?, lambda),
        };
        self.decomposition_count.fetch_add(1, Ordering::Relaxed);
        Ok(self.decompositions.insert(key, iso))
    }

    pub fn tensor_decompose(&self, lambda: &Weight, nu: &Weight) -> Result<Arc<IsoChar>, RepError> {
        self.decompose(lambda, &Factor::Irrep(nu.clone()))
    }

    /// Isotypical decomposition of a Weyl-invariant character by peeling off
    /// maximal weights.
    pub fn iso_decompose(&self, ch: &WeightChar) -> Result<IsoChar, RepError> {
        let rho = self.rs.rho();
        let height = |w: &Weight| self.rs.scaled_inner(w, &rho);
        let mut rest = ch.clone();
        let mut out = IsoChar::new();
        while !rest.is_empty() {
            let (top, m) = rest
                .iter()
                .max_by(|a, b| height(a.0).cmp(&height(b.0)).then_with(|| a.0.cmp(b.0)))
                .map(|(w, m)| (w.clone(), *m))
                .expect("nonempty");
            if !top.is_dominant() {
                return Err(RepError::NotWeylInvariant(top));
            }
            rest.add_assign_scaled(&*self.freudenthal(&top)?, -m);
            out.add_term(top, m);
        }
        Ok(out)
    }

    /// Multiplicity of `V(μ)` in `(⊗_i Λ^{k_i} V_i) ⊗ V(λ)`.
    pub fn c_coefficient(&self, ms: &ModuleSpec, lambda: &Weight, mu: &Weight, k: &[u32]) -> Result<i64, RepError> {
        self.power_coefficient(PowerKind::Ext, ms, lambda, mu, k)
    }

    /// Multiplicity of `V(μ)` in `(⊗_i Sym^{k_i} V_i) ⊗ V(λ)`.
    pub fn sym_coefficient(&self, ms: &ModuleSpec, lambda: &Weight, mu: &Weight, k: &[u32]) -> Result<i64, RepError> {
        self.power_coefficient(PowerKind::Sym, ms, lambda, mu, k)
    }

    fn power_coefficient(
        &self,
        kind: PowerKind,
        ms: &ModuleSpec,
        lambda: &Weight,
        mu: &Weight,
        k: &[u32],
    ) -> Result<i64, RepError> {
        self.rs.check_dominant(mu)?;
        let factor = ms.factor(kind, k)?;
        Ok(self.decompose(lambda, &factor)?.get(mu))
    }

    /// Every memoized decomposition, for persistence.
    pub fn export_decompositions(&self) -> Vec<(Weight, Factor, Arc<IsoChar>)> {
        let mut v: Vec<_> = self.decompositions.snapshot().into_iter().map(|((l, f), d)| (l, f, d)).collect();
        v.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        v
    }

    /// Seeds the decomposition memo with a previously computed result.
    pub fn import_decomposition(&self, lambda: Weight, factor: Factor, iso: IsoChar) {
        self.decompositions.insert((lambda, factor), iso);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(s: &str) -> RepEngine {
        RepEngine::new(RootSystem::new(s.parse().unwrap()).unwrap())
    }

    fn w(c: &[i32]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn freudenthal_small_cases() {
        let e = engine("A1");
        assert_eq!(e.freudenthal(&w(&[0])).unwrap().sorted(), vec![(w(&[0]), 1)]);
        assert_eq!(e.freudenthal(&w(&[2])).unwrap().sorted(), vec![(w(&[-2]), 1), (w(&[0]), 1), (w(&[2]), 1)]);
        assert!(matches!(
            e.freudenthal(&w(&[-1])),
            Err(RepError::RootSys(RootSysError::NotDominant(_)))
        ));
    }

    #[test]
    fn d4_adjoint_character() {
        let e = engine("D4");
        let ch = e.freudenthal(&w(&[0, 1, 0, 0])).unwrap();
        assert_eq!(ch.get(&Weight::zero(4)), 4);
        assert_eq!(ch.dimension(), 28);
        for r in e.root_system().positive_roots() {
            assert_eq!(ch.get(&r.weight), 1);
            assert_eq!(ch.get(&r.weight.neg()), 1);
        }
    }

    #[test]
    fn tensor_small_cases() {
        let e = engine("A1");
        assert_eq!(*e.tensor_decompose(&w(&[3]), &w(&[0])).unwrap(), IsoChar::single(w(&[3])));
        let d = e.tensor_decompose(&w(&[1]), &w(&[1])).unwrap();
        assert_eq!(*d, IsoChar::from_entries([(w(&[2]), 1), (w(&[0]), 1)]));
    }

    #[test]
    fn powers_low_degree() {
        let e = engine("A1");
        let adj = e.freudenthal(&w(&[2])).unwrap();
        assert_eq!(ext_power(&adj, 0).unwrap(), WeightChar::one(1));
        assert_eq!(sym_power(&adj, 0).unwrap(), WeightChar::one(1));
        assert_eq!(ext_power(&adj, 1).unwrap(), *adj);
        assert_eq!(sym_power(&adj, 1).unwrap(), *adj);
        assert_eq!(sym_power(&adj, 2).unwrap().dimension(), 6);
        assert_eq!(ext_power(&adj, 3).unwrap(), WeightChar::one(1));
        assert_eq!(ext_power(&adj, 4).unwrap(), WeightChar::new());
        let neg = WeightChar::from_entries([(w(&[0]), -1)]);
        assert!(matches!(ext_power(&neg, 1), Err(RepError::NegativeMultiplicity { .. })));
    }

    #[test]
    fn iso_decompose_round_trip_and_error() {
        let e = engine("B2");
        let lam = w(&[1, 2]);
        let ch = e.freudenthal(&lam).unwrap();
        assert_eq!(e.iso_decompose(&ch).unwrap(), IsoChar::single(lam));
        let lopsided = WeightChar::from_entries([(w(&[1, 0]), 1)]);
        assert!(e.iso_decompose(&lopsided).is_err());
    }

    #[test]
    fn factor_descriptor_round_trip() {
        let f = Factor::Power {
            kind: PowerKind::Ext,
            parts: vec![(vec![w(&[0, 1, 0, 0])], 2), (vec![w(&[1, 0, 0, 0]), w(&[0, 0, 0, 1])], 1)],
        };
        let s = f.to_string();
        assert_eq!(s, "E(0,1,0,0^2)*(1,0,0,0/0,0,0,1^1)");
        assert_eq!(s.parse::<Factor>().unwrap(), f);
        assert_eq!("-1,2".parse::<Factor>().unwrap(), Factor::Irrep(w(&[-1, 2])));
        assert_eq!("S()".parse::<Factor>().unwrap(), Factor::Power { kind: PowerKind::Sym, parts: vec![] });
        assert!("E(1,0".parse::<Factor>().is_err());
    }

    #[test]
    fn coefficients_basic() {
        let e = engine("A1");
        let rs = e.root_system().clone();
        let ms = ModuleSpec::adjoint(&rs, 1);
        assert_eq!(e.c_coefficient(&ms, &w(&[3]), &w(&[3]), &[0]).unwrap(), 1);
        assert_eq!(e.sym_coefficient(&ms, &w(&[0]), &w(&[2]), &[1]).unwrap(), 1);
        assert!(e.sym_coefficient(&ms, &w(&[0]), &w(&[2]), &[1, 0]).is_err());
    }

    #[test]
    fn memo_counts_misses_only() {
        let e = engine("A2");
        e.tensor_decompose(&w(&[1, 0]), &w(&[0, 1])).unwrap();
        e.tensor_decompose(&w(&[1, 0]), &w(&[0, 1])).unwrap();
        assert_eq!(e.decompositions_computed(), 1);
    }
}
