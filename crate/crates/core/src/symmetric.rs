//! Permutations and the group ring R[S_r] with its operadic structure.

use std::fmt;

use crate::error::AlgebraError;
use crate::free_module::{checked_mul, Accumulator, FreeModuleElement, Torsion};

/// A bijection of `{1, …, r}` stored as its value sequence `(σ(1), …, σ(r))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, AlgebraError> {
        let r = values.len();
        let mut seen = vec![false; r + 1];
        for &v in &values {
            if v == 0 || v > r || std::mem::replace(&mut seen[v], true) {
                return Err(AlgebraError::InvalidPermutation(values));
            }
        }
        Ok(Self(values))
    }

    pub fn identity(r: usize) -> Self {
        Self((1..=r).collect())
    }

    /// The cycle `ρ = (2, 3, …, r, 1)`.
    pub fn cyclic_generator(r: usize) -> Self {
        Self((2..=r).chain((r >= 1).then_some(1)).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `σ(k)` for `1 ≤ k ≤ r`.
    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    /// `(σ ∘ τ)(k) = σ(τ(k))`.
    pub fn compose(&self, tau: &Permutation) -> Result<Permutation, AlgebraError> {
        if self.arity() != tau.arity() {
            return Err(AlgebraError::ArityMismatch(self.arity(), tau.arity()));
        }
        Ok(Self(tau.0.iter().map(|&t| self.0[t - 1]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.arity()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Self(inv)
    }

    /// Parity of the inversion count as `±1`.
    pub fn sign(&self) -> i64 {
        sequence_sign(&self.0)
    }

    /// Operadic composition `self ∘_i other`: the occurrence of the value `i`
    /// is replaced by the block of `other`, shifted up by `i − 1`, and values
    /// of `self` greater than `i` move up by `arity(other) − 1`.
    pub fn compose_at(&self, other: &Permutation, i: usize) -> Result<Permutation, AlgebraError> {
        if i == 0 || i > self.arity() {
            return Err(AlgebraError::PositionOutOfRange { position: i, arity: self.arity() });
        }
        Ok(Self(substitute(&self.0, &other.0, i)))
    }
}

/// Sign of the permutation sorting `seq` (entries assumed distinct).
pub(crate) fn sequence_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for (a, x) in seq.iter().enumerate() {
        inversions += seq[a + 1..].iter().filter(|y| x > y).count();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Replaces every occurrence of `i` in `x` with the shifted block of `y`.
/// Shared by permutations (one occurrence) and degree-0 substitutions.
pub(crate) fn substitute(x: &[usize], y: &[usize], i: usize) -> Vec<usize> {
    let s = y.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    for &a in x {
        if a == i {
            out.extend(y.iter().map(|b| b + i - 1));
        } else if a > i {
            out.push(a + s - 1);
        } else {
            out.push(a);
        }
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (k, v) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    if items.len() == 1 {
        f.write_str(",")?;
    }
    f.write_str(")")
}

/// An element of R[S_r] for a fixed arity `r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymmetricRingElement {
    module: FreeModuleElement<Permutation>,
    arity: usize,
}

impl SymmetricRingElement {
    pub fn zero(arity: usize, torsion: Torsion) -> Self {
        Self { module: FreeModuleElement::zero(torsion), arity }
    }

    pub fn from_pairs<I>(pairs: I, torsion: Torsion) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Permutation, i64)>,
    {
        let pairs: Vec<_> = pairs.into_iter().collect();
        let arity = pairs.first().map_or(0, |(p, _)| p.arity());
        if let Some((p, _)) = pairs.iter().find(|(p, _)| p.arity() != arity) {
            return Err(AlgebraError::ArityMismatch(arity, p.arity()));
        }
        Ok(Self { module: FreeModuleElement::from_pairs(pairs, torsion), arity })
    }

    pub fn from_module(module: FreeModuleElement<Permutation>, arity: usize) -> Result<Self, AlgebraError> {
        if let Some(p) = module.keys().find(|p| p.arity() != arity) {
            return Err(AlgebraError::ArityMismatch(arity, p.arity()));
        }
        Ok(Self { module, arity })
    }

    pub fn basis(p: Permutation, torsion: Torsion) -> Self {
        let arity = p.arity();
        Self { module: FreeModuleElement::basis(p, torsion), arity }
    }

    pub fn identity(arity: usize, torsion: Torsion) -> Self {
        Self::basis(Permutation::identity(arity), torsion)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn torsion(&self) -> Torsion {
        self.module.torsion()
    }

    pub fn module(&self) -> &FreeModuleElement<Permutation> {
        &self.module
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.torsion() != other.torsion() {
            return Err(AlgebraError::TorsionMismatch(self.torsion().0, other.torsion().0));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.arity != other.arity {
            return Err(AlgebraError::ArityMismatch(self.arity, other.arity));
        }
        Ok(Self { module: self.module.try_add(&other.module)?, arity: self.arity })
    }

    pub fn scale(&self, c: i64) -> Self {
        Self { module: self.module.scale(c), arity: self.arity }
    }

    /// Group-ring product, the bilinear extension of `σ·τ = σ ∘ τ`.
    pub fn product(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        if self.arity != other.arity {
            return Err(AlgebraError::ArityMismatch(self.arity, other.arity));
        }
        let mut acc = Accumulator::new(self.torsion());
        for (s, a) in &self.module {
            for (t, b) in &other.module {
                acc.add_term(s.compose(t)?, checked_mul(*a, *b));
            }
        }
        Ok(Self { module: acc.finish(), arity: self.arity })
    }

    /// Bilinear extension of [`Permutation::compose_at`].
    pub fn compose(&self, other: &Self, i: usize) -> Result<Self, AlgebraError> {
        self.check(other)?;
        if i == 0 || i > self.arity {
            return Err(AlgebraError::PositionOutOfRange { position: i, arity: self.arity });
        }
        let mut acc = Accumulator::new(self.torsion());
        for (s, a) in &self.module {
            for (t, b) in &other.module {
                acc.add_term(s.compose_at(t, i)?, checked_mul(*a, *b));
            }
        }
        Ok(Self { module: acc.finish(), arity: self.arity + other.arity - 1 })
    }

    /// `T = ρ − 1`.
    pub fn transfer(arity: usize, torsion: Torsion) -> Self {
        let pairs = [(Permutation::cyclic_generator(arity), 1), (Permutation::identity(arity), -1)];
        Self { module: FreeModuleElement::from_pairs(pairs, torsion), arity }
    }

    /// `N = 1 + ρ + ⋯ + ρ^{r−1}`.
    pub fn norm(arity: usize, torsion: Torsion) -> Self {
        let rho = Permutation::cyclic_generator(arity);
        let mut power = Permutation::identity(arity);
        let mut pairs = Vec::with_capacity(arity);
        for _ in 0..arity {
            let next = rho.compose(&power).expect("equal arity");
            pairs.push((std::mem::replace(&mut power, next), 1));
        }
        Self { module: FreeModuleElement::from_pairs(pairs, torsion), arity }
    }
}

impl fmt::Display for SymmetricRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_combination(f, self.module.iter().map(|(k, c)| (k, *c)))
    }
}

impl fmt::Debug for SymmetricRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
