//! Root-system data for the classical families and the Weyl-chamber
//! algorithms everything else is built on.
//!
//! Weights are always stored in fundamental-weight coordinates. Roots carry
//! both their simple-root coordinates and their weight coordinates. Node
//! numbering follows Bourbaki: the chains `A_n`, `B_n`, `C_n` run `1..=n`
//! (with the double bond between `n-1` and `n` for `B`/`C`), and `D_n` forks
//! at node `n-2` into the two spin nodes `n-1` and `n`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error("type {family}{rank} is not a valid classical type (minimum rank for {family} is {min})")]
    InvalidRank { family: Family, rank: usize, min: usize },
    #[error("cannot parse Lie type {0:?}; expected a family letter A-D followed by a rank, e.g. \"D5\"")]
    BadTypeString(String),
    #[error("weight {weight} has length {got}, expected rank {rank}")]
    RankMismatch { weight: Weight, got: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("dimension of V({0}) does not fit in 64 bits")]
    DimensionOverflow(Weight),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let min = family.min_rank();
        if rank < min {
            return Err(RootSysError::InvalidRank { family, rank, min });
        }
        Ok(LieType { family, rank })
    }

    /// Nodes carrying spin representations (1-based).
    pub fn spin_nodes(&self) -> Vec<usize> {
        match self.family {
            Family::A | Family::C => vec![],
            Family::B => vec![self.rank],
            Family::D => vec![self.rank - 1, self.rank],
        }
    }

    pub fn is_spin_node(&self, node: usize) -> bool {
        self.spin_nodes().contains(&node)
    }

    /// Number of positive roots of the classical type.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(RootSysError::BadTypeString(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootSysError::BadTypeString(s.to_string()))?;
        LieType::new(family, rank)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn new(coords: Vec<i32>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `m * ω_i` with a 1-based node `i`.
    pub fn fundamental(rank: usize, node: usize, m: i32) -> Self {
        let mut w = vec![0; rank];
        w[node - 1] = m;
        Weight(w)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A positive root in both coordinate systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coefficients on the simple roots.
    pub simple: Vec<i32>,
    /// Fundamental-weight coordinates.
    pub weight: Weight,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.simple.iter().sum()
    }
}

/// Result of expressing a weight in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCoords {
    Integral(Vec<i64>),
    /// The weight is not in the root lattice.
    NotInLattice(Vec<Rational>),
}

impl RootCoords {
    pub fn integral(&self) -> Option<&[i64]> {
        match self {
            RootCoords::Integral(c) => Some(c),
            RootCoords::NotInLattice(_) => None,
        }
    }
}

/// Output of [`RootSystem::dominant_conjugate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugate {
    pub dominant: Weight,
    /// `(-1)^length` of the reflecting word. Meaningless when `singular`.
    pub parity: i8,
    /// The weight is fixed by some reflection (lies on a wall).
    pub singular: bool,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    /// `cartan[i][j] = <α_i^∨, α_j>`; column `j` holds the weight coordinates of `α_j`.
    cartan: Vec<Vec<i32>>,
    cartan_inv: Vec<Vec<Rational>>,
    /// `(α_i, α_i) / 2`, with short roots of squared length 2.
    half_norms: Vec<i64>,
    positive_roots: Vec<Root>,
    highest_root: usize,
    /// `(ω_i, ω_j)`.
    symmetric_form: Vec<Vec<Rational>>,
    /// `form_scale * (ω_i, ω_j)`, integral.
    scaled_form: Vec<Vec<i64>>,
    form_scale: i64,
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i32>> {
    let n = t.rank;
    let mut a = vec![vec![0i32; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    match t.family {
        Family::A | Family::B | Family::C => {
            for i in 0..n.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            if t.family == Family::B {
                a[n - 1][n - 2] = -2;
            } else if t.family == Family::C {
                a[n - 2][n - 1] = -2;
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
    }
    a
}

fn half_norms(t: LieType) -> Vec<i64> {
    let n = t.rank;
    match t.family {
        Family::A | Family::D => vec![1; n],
        Family::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
        Family::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
    }
}

fn invert(a: &[Vec<i32>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&x| Rational::from_integer(x as i64)).collect();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl RootSystem {
    pub fn new(t: LieType) -> Result<Self, RootSysError> {
        let t = LieType::new(t.family, t.rank)?;
        let n = t.rank;
        let cartan = cartan_matrix(t);
        let cartan_inv = invert(&cartan);
        let half_norms = half_norms(t);

        let weight_of = |simple: &[i32]| -> Weight {
            Weight((0..n).map(|i| (0..n).map(|j| cartan[i][j] * simple[j]).sum()).collect())
        };

        // Grow the positive roots height by height using root strings:
        // β + α_i is a root iff q - <β, α_i^∨> > 0, q = how far β - kα_i stays a root.
        let mut roots: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut known: HashSet<Vec<i32>> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                let w = weight_of(beta);
                for i in 0..n {
                    let mut q = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let p = q - w.0[i];
                    if p > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            frontier = next;
        }
        roots.sort_by_key(|r| (r.iter().sum::<i32>(), std::cmp::Reverse(r.clone())));
        let positive_roots: Vec<Root> = roots
            .into_iter()
            .map(|simple| Root { weight: weight_of(&simple), simple })
            .collect();
        let highest_root = positive_roots.len() - 1;

        let symmetric_form: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| cartan_inv[j][i] * Rational::from_integer(half_norms[j])).collect())
            .collect();
        let form_scale = symmetric_form.iter().flatten().fold(1i64, |acc, r| lcm(acc, *r.denom()));
        let scaled_form = symmetric_form
            .iter()
            .map(|row| row.iter().map(|r| (r * Rational::from_integer(form_scale)).to_integer()).collect())
            .collect();

        Ok(RootSystem {
            lie_type: t,
            cartan,
            cartan_inv,
            half_norms,
            positive_roots,
            highest_root,
            symmetric_form,
            scaled_form,
            form_scale,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root]
    }

    pub fn symmetric_form(&self) -> &[Vec<Rational>] {
        &self.symmetric_form
    }

    /// `(α_i, α_i) / 2` for 0-based `i`.
    pub fn half_norm(&self, i: usize) -> i64 {
        self.half_norms[i]
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Weight coordinates of the simple root `α_i` (0-based `i`).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn check_rank(&self, w: &Weight) -> Result<(), RootSysError> {
        if w.rank() != self.rank() {
            return Err(RootSysError::RankMismatch { weight: w.clone(), got: w.rank(), rank: self.rank() });
        }
        Ok(())
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<(), RootSysError> {
        self.check_rank(w)?;
        if !w.is_dominant() {
            return Err(RootSysError::NotDominant(w.clone()));
        }
        Ok(())
    }

    pub fn check_node(&self, node: usize) -> Result<(), RootSysError> {
        if node == 0 || node > self.rank() {
            return Err(RootSysError::NodeOutOfRange { node, rank: self.rank() });
        }
        Ok(())
    }

    /// `(ξ, β)` for a weight `ξ` and a root lattice element given by simple-root coordinates.
    pub fn pair_with_root(&self, xi: &Weight, simple: &[i32]) -> i64 {
        xi.0.iter()
            .zip(simple)
            .zip(&self.half_norms)
            .map(|((&x, &c), &d)| x as i64 * c as i64 * d)
            .sum()
    }

    /// `(ξ, η)` exactly.
    pub fn inner(&self, xi: &Weight, eta: &Weight) -> Rational {
        Rational::new(self.scaled_inner(xi, eta), self.form_scale)
    }

    /// `form_scale() * (ξ, η)`, always an integer.
    pub fn scaled_inner(&self, xi: &Weight, eta: &Weight) -> i64 {
        let mut s = 0i64;
        for (i, &x) in xi.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let row = &self.scaled_form[i];
            for (j, &y) in eta.0.iter().enumerate() {
                s += x as i64 * y as i64 * row[j];
            }
        }
        s
    }

    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    /// Applies the simple reflection `s_i` (0-based) to `w` in place.
    pub fn reflect(&self, w: &mut Weight, i: usize) {
        let c = w.0[i];
        if c == 0 {
            return;
        }
        for (k, row) in self.cartan.iter().enumerate() {
            w.0[k] -= c * row[i];
        }
    }

    /// Moves `ξ` into the dominant chamber by simple reflections.
    pub fn dominant_conjugate(&self, xi: &Weight) -> Conjugate {
        let mut w = xi.clone();
        let mut parity = 1i8;
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            self.reflect(&mut w, i);
            parity = -parity;
        }
        let singular = w.0.contains(&0);
        Conjugate { dominant: w, parity, singular }
    }

    /// Weyl dimension formula, exact.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64, RootSysError> {
        self.check_dominant(lambda)?;
        let rho = self.rho();
        let shifted = lambda.add(&rho);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for r in &self.positive_roots {
            num *= BigInt::from(self.pair_with_root(&shifted, &r.simple));
            den *= BigInt::from(self.pair_with_root(&rho, &r.simple));
        }
        let q = BigRational::new(num, den);
        assert!(q.is_integer(), "Weyl dimension must be integral");
        q.to_integer().to_u64().ok_or_else(|| RootSysError::DimensionOverflow(lambda.clone()))
    }

    /// Solves `cartan · c = ξ` for the simple-root coordinates `c`.
    pub fn root_coords(&self, xi: &Weight) -> RootCoords {
        let c: Vec<Rational> = self
            .cartan_inv
            .iter()
            .map(|row| row.iter().zip(&xi.0).map(|(a, &x)| a * Rational::from_integer(x as i64)).sum())
            .collect();
        if c.iter().all(|r| r.is_integer()) {
            RootCoords::Integral(c.iter().map(|r| r.to_integer()).collect())
        } else {
            RootCoords::NotInLattice(c)
        }
    }

    /// Weight coordinates of a root-lattice element given in simple-root coordinates.
    pub fn weight_of_simple(&self, simple: &[i64]) -> Weight {
        Weight(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(simple).map(|(&a, &c)| (a as i64 * c) as i32).sum())
                .collect(),
        )
    }

    /// True iff `hi - lo` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, hi: &Weight, lo: &Weight) -> bool {
        match self.root_coords(&hi.sub(lo)) {
            RootCoords::Integral(c) => c.iter().all(|&x| x >= 0),
            RootCoords::NotInLattice(_) => false,
        }
    }

    /// Index of the positive root whose weight is `w`, if any.
    pub fn positive_root_index(&self, w: &Weight) -> Option<usize> {
        self.positive_roots.iter().position(|r| &r.weight == w)
    }

    /// All dominant `μ` with `λ - μ ∈ Q⁺`, i.e. the dominant weights of `V(λ)`.
    ///
    /// Uses the fact that the dominant weights below `λ` are connected to `λ`
    /// by subtracting one positive root at a time without leaving the chamber.
    /// Sorted by increasing depth below `λ`, then lexicographically.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        seen.insert(lambda.clone());
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(mu) = queue.pop_front() {
            for r in &self.positive_roots {
                let nu = mu.sub(&r.weight);
                if nu.is_dominant() && seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        let mut out: Vec<(i64, Weight)> = seen
            .into_iter()
            .map(|mu| {
                let depth = self
                    .root_coords(&lambda.sub(&mu))
                    .integral()
                    .map(|c| c.iter().sum())
                    .expect("differences of weights in one chain lie in Q");
                (depth, mu)
            })
            .collect();
        out.sort();
        out.into_iter().map(|(_, w)| w).collect()
    }

    /// The Weyl orbit of a dominant weight.
    pub fn orbit(&self, dominant: &Weight) -> Vec<Weight> {
        let mut seen: HashSet<Weight> = HashSet::new();
        seen.insert(dominant.clone());
        let mut stack = vec![dominant.clone()];
        let mut out = vec![dominant.clone()];
        while let Some(w) = stack.pop() {
            for i in 0..self.rank() {
                if w.0[i] > 0 {
                    let mut v = w.clone();
                    self.reflect(&mut v, i);
                    if seen.insert(v.clone()) {
                        stack.push(v.clone());
                        out.push(v);
                    }
                }
            }
        }
        out
    }

    /// All roots (positive and negative) with the zero weight repeated `rank` times:
    /// the weight multiset of the adjoint representation.
    pub fn adjoint_weights(&self) -> HashMap<Weight, i64> {
        let mut m = HashMap::new();
        for r in &self.positive_roots {
            m.insert(r.weight.clone(), 1);
            m.insert(r.weight.neg(), 1);
        }
        m.insert(Weight::zero(self.rank()), self.rank() as i64);
        m
    }
}
