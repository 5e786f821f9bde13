//! Sparse linear combinations over ℤ or ℤ/n.
//!
//! A [`FreeModuleElement`] maps basis keys to nonzero coefficients. Every
//! constructor and arithmetic operation leaves the element in canonical form:
//! no zero coefficients, and residues in `1..n` when the torsion is `n ≥ 1`.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::error::AlgebraError;

/// Coefficient ring selector: `0` is ℤ, `n ≥ 1` is ℤ/n.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Torsion(pub u64);

impl Torsion {
    pub const INTEGERS: Torsion = Torsion(0);

    pub fn modulus(self) -> Option<u64> {
        (self.0 != 0).then_some(self.0)
    }

    /// Canonical representative of `c`, or `None` when it vanishes.
    pub fn reduce(self, c: i64) -> Option<i64> {
        let c = match self.0 {
            0 => c,
            n => {
                let n = i128::from(n);
                i64::try_from((i128::from(c)).rem_euclid(n)).expect("residue fits in i64")
            }
        };
        (c != 0).then_some(c)
    }
}

impl fmt::Display for Torsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).unwrap_or_else(|| panic!("coefficient overflow: {a} * {b} exceeds 64-bit range"))
}

pub(crate) fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).unwrap_or_else(|| panic!("coefficient overflow: {a} + {b} exceeds 64-bit range"))
}

/// An element of the free module on `K` with coefficients in ℤ or ℤ/n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModuleElement<K: Ord> {
    terms: BTreeMap<K, i64>,
    torsion: Torsion,
}

impl<K: Ord + Clone> FreeModuleElement<K> {
    pub fn zero(torsion: Torsion) -> Self {
        Self { terms: BTreeMap::new(), torsion }
    }

    /// Builds an element, summing repeated keys and reducing coefficients.
    pub fn from_pairs<I>(pairs: I, torsion: Torsion) -> Self
    where
        I: IntoIterator<Item = (K, i64)>,
    {
        let mut acc = Accumulator::new(torsion);
        for (k, c) in pairs {
            acc.add_term(k, c);
        }
        acc.finish()
    }

    pub fn basis(key: K, torsion: Torsion) -> Self {
        Self::from_pairs([(key, 1)], torsion)
    }

    pub fn torsion(&self) -> Torsion {
        self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    /// Terms in ascending key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, i64> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, i64> {
        self.terms.keys()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.torsion != other.torsion {
            return Err(AlgebraError::TorsionMismatch(self.torsion.0, other.torsion.0));
        }
        let mut acc = Accumulator::from_element(self.clone());
        acc.extend(other.iter().map(|(k, c)| (k.clone(), *c)));
        Ok(acc.finish())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_pairs(self.terms.iter().map(|(k, v)| (k.clone(), checked_mul(*v, c))), self.torsion)
    }

    /// Reinterprets the coefficients in another ring, re-reducing them.
    pub fn set_torsion(&self, torsion: Torsion) -> Self {
        Self::from_pairs(self.terms.iter().map(|(k, v)| (k.clone(), *v)), torsion)
    }

    /// Applies a signed basis map `key ↦ Σ ±key'` linearly.
    pub fn map_terms<L, F, I>(&self, mut f: F) -> FreeModuleElement<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> I,
        I: IntoIterator<Item = (L, i64)>,
    {
        let mut acc = Accumulator::new(self.torsion);
        for (k, c) in &self.terms {
            for (l, s) in f(k) {
                acc.add_term(l, checked_mul(s, *c));
            }
        }
        acc.finish()
    }

    pub fn into_terms(self) -> BTreeMap<K, i64> {
        self.terms
    }
}

impl<K: Ord + Clone> std::ops::Add for FreeModuleElement<K> {
    type Output = Self;

    /// Panics on a torsion mismatch; use [`FreeModuleElement::try_add`] to handle it.
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("adding elements over different coefficient rings")
    }
}

impl<K: Ord + Clone> std::ops::Sub for FreeModuleElement<K> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("subtracting elements over different coefficient rings")
    }
}

impl<K: Ord + Clone> std::ops::Neg for FreeModuleElement<K> {
    type Output = Self;

    fn neg(self) -> Self {
        self.negate()
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FreeModuleElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FreeModuleElement").field("torsion", &self.torsion.0).field("terms", &self.terms).finish()
    }
}

impl<'a, K: Ord> IntoIterator for &'a FreeModuleElement<K> {
    type Item = (&'a K, &'a i64);
    type IntoIter = btree_map::Iter<'a, K, i64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Mutable sum of terms, reduced on every insertion.
#[derive(Clone, Debug)]
pub struct Accumulator<K: Ord> {
    terms: BTreeMap<K, i64>,
    torsion: Torsion,
}

impl<K: Ord + Clone> Accumulator<K> {
    pub fn new(torsion: Torsion) -> Self {
        Self { terms: BTreeMap::new(), torsion }
    }

    pub fn from_element(e: FreeModuleElement<K>) -> Self {
        Self { terms: e.terms, torsion: e.torsion }
    }

    pub fn add_term(&mut self, key: K, c: i64) {
        let Some(c) = self.torsion.reduce(c) else { return };
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => match self.torsion.reduce(checked_add(*o.get(), c)) {
                Some(s) => *o.get_mut() = s,
                None => {
                    o.remove();
                }
            },
        }
    }

    /// Folds another accumulator into this one.
    pub fn merge(&mut self, other: Self) {
        debug_assert_eq!(self.torsion, other.torsion);
        if self.terms.len() < other.terms.len() {
            let mine = std::mem::replace(&mut self.terms, other.terms);
            self.extend(mine);
        } else {
            self.extend(other.terms);
        }
    }

    pub fn finish(self) -> FreeModuleElement<K> {
        FreeModuleElement { terms: self.terms, torsion: self.torsion }
    }
}

impl<K: Ord + Clone> Extend<(K, i64)> for Accumulator<K> {
    fn extend<I: IntoIterator<Item = (K, i64)>>(&mut self, iter: I) {
        for (k, c) in iter {
            self.add_term(k, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = FreeModuleElement<Vec<usize>>;

    #[test]
    fn make_element_cancels_and_reduces() {
        let z = E::from_pairs([(vec![1, 2, 1], 2), (vec![1, 2, 1], -2)], Torsion(0));
        assert!(z.is_zero());
        let a = E::from_pairs([(vec![1, 2], 5)], Torsion(3));
        assert_eq!(a.coefficient(&vec![1, 2]), 2);
        let b = E::from_pairs([(vec![1, 2], -1)], Torsion(3));
        assert_eq!(b.coefficient(&vec![1, 2]), 2);
    }

    #[test]
    fn add_and_scale() {
        let k = vec![1];
        let x = E::from_pairs([(k.clone(), 1)], Torsion(0));
        assert_eq!(x.clone() + E::zero(Torsion(0)), x);
        assert!((x.clone() + x.negate()).is_zero());
        let two = E::from_pairs([(k.clone(), 2)], Torsion(3));
        assert_eq!((two.clone() + two.clone()).coefficient(&k), 1);
        assert_eq!(two.scale(2).coefficient(&k), 1);
        assert!(two.scale(0).is_zero());
        assert_eq!(two.scale(1), two);
    }

    #[test]
    fn torsion_mismatch_is_an_error() {
        let a = E::basis(vec![1], Torsion(2));
        let b = E::basis(vec![1], Torsion(3));
        assert_eq!(a.try_add(&b), Err(AlgebraError::TorsionMismatch(2, 3)));
    }

    #[test]
    fn set_torsion_rereduces() {
        let k = vec![0];
        assert_eq!(E::from_pairs([(k.clone(), -1)], Torsion(0)).set_torsion(Torsion(2)).coefficient(&k), 1);
        assert!(E::from_pairs([(k.clone(), 3)], Torsion(0)).set_torsion(Torsion(3)).is_zero());
        assert_eq!(E::from_pairs([(k.clone(), 4)], Torsion(0)).set_torsion(Torsion(0)).coefficient(&k), 4);
    }

    #[test]
    fn torsion_one_kills_everything() {
        assert!(E::from_pairs([(vec![1], 7), (vec![2], -3)], Torsion(1)).is_zero());
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_is_reported() {
        E::from_pairs([(vec![1], i64::MAX)], Torsion(0)).scale(2);
    }
}
