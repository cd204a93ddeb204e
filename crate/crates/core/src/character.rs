//! Virtual characters: weight-multiplicity maps and isotypical decompositions.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use crate::rootsys::{RootSystem, Weight};

/// `Σ mult(μ) e^μ`, possibly virtual. Zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightChar {
    entries: HashMap<Weight, i64>,
}

impl WeightChar {
    pub fn new() -> Self {
        Self::default()
    }

    /// `e^0`, the character of the trivial module.
    pub fn one(rank: usize) -> Self {
        let mut c = Self::new();
        c.add_term(Weight::zero(rank), 1);
        c
    }

    pub fn from_entries<I: IntoIterator<Item = (Weight, i64)>>(entries: I) -> Self {
        let mut c = Self::new();
        for (w, m) in entries {
            c.add_term(w, m);
        }
        c
    }

    pub fn add_term(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.entries.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.entries.iter()
    }

    /// Entries sorted by weight.
    pub fn sorted(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<_> = self.entries.iter().map(|(w, m)| (w.clone(), *m)).collect();
        v.sort();
        v
    }

    /// Sum of multiplicities (the dimension, for a genuine character).
    pub fn dimension(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    pub fn add_assign_scaled(&mut self, other: &WeightChar, k: i64) {
        if k == 0 {
            return;
        }
        for (w, m) in &other.entries {
            let e = self.entries.entry(w.clone()).or_insert(0);
            *e += k * m;
        }
        self.entries.retain(|_, m| *m != 0);
    }

    pub fn scaled(&self, k: i64) -> WeightChar {
        let mut c = WeightChar::new();
        c.add_assign_scaled(self, k);
        c
    }

    /// Multiplies by `e^w`.
    pub fn shifted(&self, w: &Weight) -> WeightChar {
        WeightChar { entries: self.entries.iter().map(|(v, m)| (v.add(w), *m)).collect() }
    }

    /// Pointwise product of characters (the character of the tensor product).
    pub fn mul(&self, other: &WeightChar) -> WeightChar {
        let mut out: HashMap<Weight, i64> = HashMap::with_capacity(self.len() * 2);
        for (a, ma) in &self.entries {
            for (b, mb) in &other.entries {
                *out.entry(a.add(b)).or_insert(0) += ma * mb;
            }
        }
        out.retain(|_, m| *m != 0);
        WeightChar { entries: out }
    }

    /// Multiplicities are constant on Weyl orbits.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        self.entries.iter().all(|(w, m)| {
            (0..rs.rank()).all(|i| {
                let mut v = w.clone();
                rs.reflect(&mut v, i);
                self.get(&v) == *m
            })
        })
    }
}

impl std::ops::Add for &WeightChar {
    type Output = WeightChar;
    fn add(self, rhs: &WeightChar) -> WeightChar {
        let mut c = self.clone();
        c.add_assign_scaled(rhs, 1);
        c
    }
}

impl std::ops::Sub for &WeightChar {
    type Output = WeightChar;
    fn sub(self, rhs: &WeightChar) -> WeightChar {
        let mut c = self.clone();
        c.add_assign_scaled(rhs, -1);
        c
    }
}

/// `Σ mult(λ) [V(λ)]` over dominant `λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IsoChar {
    entries: BTreeMap<Weight, i64>,
}

impl IsoChar {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(lambda: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(lambda, 1);
        c
    }

    pub fn from_entries<I: IntoIterator<Item = (Weight, i64)>>(entries: I) -> Self {
        let mut c = Self::new();
        for (w, m) in entries {
            c.add_term(w, m);
        }
        c
    }

    pub fn add_term(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.entries.entry(w.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.remove(&w);
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_genuine(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    /// `Σ mult(λ) dim V(λ)`.
    pub fn dimension(&self, rs: &RootSystem) -> i64 {
        self.entries
            .iter()
            .map(|(w, m)| m * rs.weyl_dim(w).expect("IsoChar keys are dominant") as i64)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i32]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn zero_entries_are_dropped() {
        let mut c = WeightChar::new();
        c.add_term(w(&[1]), 2);
        c.add_term(w(&[1]), -2);
        assert!(c.is_empty());
        let d = &WeightChar::from_entries([(w(&[1]), 1)]) - &WeightChar::from_entries([(w(&[1]), 1)]);
        assert!(d.is_empty());
    }

    #[test]
    fn product_of_a1_doublets() {
        let v = WeightChar::from_entries([(w(&[1]), 1), (w(&[-1]), 1)]);
        let p = v.mul(&v);
        assert_eq!(p.sorted(), vec![(w(&[-2]), 1), (w(&[0]), 2), (w(&[2]), 1)]);
        assert_eq!(p.dimension(), 4);
    }
}
