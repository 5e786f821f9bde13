//! The surjection operad.
//!
//! A basis element of arity `r` and degree `d` is a sequence of length `d + r`
//! that hits every value in `1..=r` and never repeats a value in adjacent
//! positions. An entry is a *caesura* when its value occurs again later in the
//! sequence; there are exactly `d` of them.
//!
//! Both sign conventions are supported. Under Berger–Fresse the caesuras are
//! ordered by position, under McClure–Smith by value and then position. The
//! two are conjugate: [`Surjection::convention_sign`] is the sign of the
//! permutation between the two orderings, and multiplying by it is an
//! isomorphism of operads between the two models.

use std::fmt;

use crate::error::AlgebraError;
use crate::free_module::{checked_mul, Accumulator, FreeModuleElement, Torsion};
use crate::parallel::{sum_terms, Strategy};
use crate::symmetric::{sequence_sign, write_tuple, Permutation, SymmetricRingElement};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    BergerFresse,
    McClureSmith,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::BergerFresse => "berger-fresse",
            Convention::McClureSmith => "mcclure-smith",
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "berger-fresse" | "bf" => Ok(Convention::BergerFresse),
            "mcclure-smith" | "ms" => Ok(Convention::McClureSmith),
            _ => Err(AlgebraError::InvalidRequest(format!("unknown convention {s:?}"))),
        }
    }
}

/// A finite sequence of positive integers, read as a function `{1..n} → {1..r}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection(Vec<usize>);

impl Surjection {
    pub fn new(values: Vec<usize>) -> Result<Self, AlgebraError> {
        if values.is_empty() || values.contains(&0) {
            return Err(AlgebraError::InvalidBasis(format!(
                "surjection values must be a nonempty sequence of positive integers, got {values:?}"
            )));
        }
        Ok(Self(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - self.arity()
    }

    pub fn is_degenerate(&self) -> bool {
        is_degenerate(&self.0)
    }

    /// Positions whose value occurs again further right.
    pub fn caesuras(&self) -> Vec<usize> {
        caesuras(&self.0)
    }

    /// Coefficient relating the two conventions on this basis element.
    pub fn convention_sign(&self) -> i64 {
        convention_sign(&self.0)
    }

    /// Complexity: the largest number of alternations, minus one, among the
    /// restrictions of the sequence to pairs of values.
    pub fn complexity(&self) -> usize {
        let r = self.arity();
        let mut best = 0;
        for a in 1..=r {
            for b in a + 1..=r {
                let mut changes = 0usize;
                let mut last = None;
                for &v in self.0.iter().filter(|&&v| v == a || v == b) {
                    if last.is_some_and(|l| l != v) {
                        changes += 1;
                    }
                    last = Some(v);
                }
                best = best.max(changes.saturating_sub(1));
            }
        }
        best
    }
}

pub(crate) fn is_degenerate(u: &[usize]) -> bool {
    let r = u.iter().copied().max().unwrap_or(0);
    let mut seen = vec![false; r + 1];
    for &v in u {
        seen[v] = true;
    }
    seen[1..].iter().any(|s| !s) || u.windows(2).any(|w| w[0] == w[1])
}

fn caesuras(u: &[usize]) -> Vec<usize> {
    (0..u.len()).filter(|&i| u[i + 1..].contains(&u[i])).collect()
}

fn convention_sign(u: &[usize]) -> i64 {
    let c = caesuras(u);
    let mut by_value = c.clone();
    by_value.sort_by_key(|&i| (u[i], i));
    let ranks: Vec<usize> = by_value.iter().map(|p| c.binary_search(p).expect("caesura")).collect();
    sequence_sign(&ranks)
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A homogeneous linear combination of nondegenerate surjections.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurjectionElement {
    module: FreeModuleElement<Surjection>,
    convention: Convention,
}

impl SurjectionElement {
    pub fn zero(torsion: Torsion, convention: Convention) -> Self {
        Self { module: FreeModuleElement::zero(torsion), convention }
    }

    /// Builds an element; degenerate keys are dropped and the remaining keys
    /// must share one arity and one degree.
    pub fn new<I>(pairs: I, torsion: Torsion, convention: Convention) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Surjection, i64)>,
    {
        let module = FreeModuleElement::from_pairs(pairs.into_iter().filter(|(k, _)| !k.is_degenerate()), torsion);
        Self::from_module(module, convention)
    }

    pub fn from_module(module: FreeModuleElement<Surjection>, convention: Convention) -> Result<Self, AlgebraError> {
        let mut keys = module.keys();
        if let Some(first) = keys.next() {
            if first.is_degenerate() {
                return Err(AlgebraError::InvalidBasis(format!("{first} is degenerate")));
            }
            for k in keys {
                if k.is_degenerate() {
                    return Err(AlgebraError::InvalidBasis(format!("{k} is degenerate")));
                }
                if (k.arity(), k.degree()) != (first.arity(), first.degree()) {
                    return Err(AlgebraError::NotHomogeneous(format!("{first} and {k}")));
                }
            }
        }
        Ok(Self { module, convention })
    }

    /// A single basis element with coefficient one.
    pub fn basis(values: Vec<usize>, torsion: Torsion, convention: Convention) -> Result<Self, AlgebraError> {
        Self::new([(Surjection::new(values)?, 1)], torsion, convention)
    }

    fn from_parts(module: FreeModuleElement<Surjection>, convention: Convention) -> Self {
        Self { module, convention }
    }

    pub fn module(&self) -> &FreeModuleElement<Surjection> {
        &self.module
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn torsion(&self) -> Torsion {
        self.module.torsion()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    pub fn arity(&self) -> Option<usize> {
        self.module.keys().next().map(Surjection::arity)
    }

    pub fn degree(&self) -> Option<usize> {
        self.module.keys().next().map(Surjection::degree)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.convention != other.convention {
            return Err(AlgebraError::ConventionMismatch);
        }
        Self::from_module(self.module.try_add(&other.module)?, self.convention)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_parts(self.module.scale(c), self.convention)
    }

    pub fn set_torsion(&self, torsion: Torsion) -> Self {
        Self::from_parts(self.module.set_torsion(torsion), self.convention)
    }

    /// The same element expressed in another sign convention.
    pub fn with_convention(&self, convention: Convention) -> Self {
        if convention == self.convention {
            return self.clone();
        }
        let module = self.module.map_terms(|k| [(k.clone(), k.convention_sign())]);
        Self::from_parts(module, convention)
    }

    /// Relabels the tag without touching coefficients.
    pub fn retag(&self, convention: Convention) -> Self {
        Self::from_parts(self.module.clone(), convention)
    }

    pub fn boundary(&self) -> Self {
        let module = match self.convention {
            Convention::BergerFresse => self.module.map_terms(|k| berger_fresse_boundary(&k.0)),
            Convention::McClureSmith => self.module.map_terms(|k| mcclure_smith_boundary(&k.0)),
        };
        Self::from_parts(module, self.convention)
    }

    pub fn compose(&self, other: &Self, i: usize) -> Result<Self, AlgebraError> {
        self.compose_with(other, i, Strategy::default())
    }

    /// Partial composition `self ∘_i other`.
    pub fn compose_with(&self, other: &Self, i: usize, strategy: Strategy) -> Result<Self, AlgebraError> {
        if self.convention != other.convention {
            return Err(AlgebraError::ConventionMismatch);
        }
        if self.torsion() != other.torsion() {
            return Err(AlgebraError::TorsionMismatch(self.torsion().0, other.torsion().0));
        }
        if let Some(r) = self.arity() {
            if i == 0 || i > r {
                return Err(AlgebraError::PositionOutOfRange { position: i, arity: r });
            }
        }
        if self.convention == Convention::McClureSmith {
            let lhs = self.with_convention(Convention::BergerFresse);
            let rhs = other.with_convention(Convention::BergerFresse);
            return Ok(lhs.compose_with(&rhs, i, strategy)?.with_convention(Convention::McClureSmith));
        }
        let pairs: Vec<_> = self
            .module
            .iter()
            .flat_map(|(x, a)| other.module.iter().map(move |(y, b)| (x, y, checked_mul(*a, *b))))
            .collect();
        let module = sum_terms(&pairs, self.torsion(), strategy, |(x, y, c), acc| {
            compose_basis(&x.0, &y.0, i, *c, acc);
        });
        Ok(Self::from_parts(module, self.convention))
    }

    /// Left action of the group ring by relabeling values.
    pub fn act_by(&self, pi: &SymmetricRingElement) -> Result<Self, AlgebraError> {
        if self.torsion() != pi.torsion() {
            return Err(AlgebraError::TorsionMismatch(self.torsion().0, pi.torsion().0));
        }
        if let Some(r) = self.arity() {
            if r != pi.arity() {
                return Err(AlgebraError::ArityMismatch(pi.arity(), r));
            }
        }
        let mut acc = Accumulator::new(self.torsion());
        for (p, a) in pi.module() {
            for (u, b) in &self.module {
                let (v, s) = relabel(p, u, self.convention);
                acc.add_term(v, s * checked_mul(*a, *b));
            }
        }
        Ok(Self::from_parts(acc.finish(), self.convention))
    }

    pub fn act_by_permutation(&self, p: &Permutation) -> Result<Self, AlgebraError> {
        self.act_by(&SymmetricRingElement::basis(p.clone(), self.torsion()))
    }

    /// Maximum complexity over the basis keys, `0` for the zero element.
    pub fn complexity(&self) -> usize {
        self.module.keys().map(Surjection::complexity).max().unwrap_or(0)
    }
}

fn relabel(p: &Permutation, u: &Surjection, convention: Convention) -> (Surjection, i64) {
    let v = Surjection(u.0.iter().map(|&a| p.apply(a)).collect());
    let sign = match convention {
        Convention::BergerFresse => 1,
        Convention::McClureSmith => u.convention_sign() * v.convention_sign(),
    };
    (v, sign)
}

fn berger_fresse_boundary(u: &[usize]) -> Vec<(Surjection, i64)> {
    let mut signs = vec![0i64; u.len()];
    let mut alternating = 1;
    for idx in 0..u.len() {
        let v = u[idx];
        if u[idx + 1..].contains(&v) {
            signs[idx] = alternating;
            alternating = -alternating;
        } else if let Some(prev) = u[..idx].iter().rposition(|&w| w == v) {
            signs[idx] = -signs[prev];
        }
    }
    faces(u, |idx| signs[idx])
}

fn mcclure_smith_boundary(u: &[usize]) -> Vec<(Surjection, i64)> {
    let r = u.iter().copied().max().unwrap_or(0);
    let mut signs = vec![0i64; u.len()];
    let mut sign = 1;
    for value in 1..=r {
        for idx in (0..u.len()).filter(|&idx| u[idx] == value) {
            signs[idx] = sign;
            sign = -sign;
        }
        sign = -sign;
    }
    faces(u, |idx| signs[idx])
}

fn faces(u: &[usize], sign: impl Fn(usize) -> i64) -> Vec<(Surjection, i64)> {
    let mut out = Vec::new();
    for idx in 0..u.len() {
        let mut face = u.to_vec();
        let v = face.remove(idx);
        if face.contains(&v) && !is_degenerate(&face) {
            out.push((Surjection(face), sign(idx)));
        }
    }
    out
}

/// Advances a nondecreasing sequence with entries in `0..=max`.
pub(crate) fn next_nondecreasing(seq: &mut [usize], max: usize) -> bool {
    for k in (0..seq.len()).rev() {
        if seq[k] < max {
            seq[k] += 1;
            let v = seq[k];
            for s in &mut seq[k + 1..] {
                *s = v;
            }
            return true;
        }
    }
    false
}

/// Berger–Fresse composition of basis elements, summed into `acc`.
///
/// Each result entry is labeled by the caesura it inherits: an entry of `x`,
/// or an entry of `y`. The end of every block but the last stands for the
/// occurrence of `i` it replaced. The sign orders the resulting caesuras
/// as all of those of `x` followed by all of those of `y`.
fn compose_basis(x: &[usize], y: &[usize], i: usize, coeff: i64, acc: &mut Accumulator<Surjection>) {
    let w = x.iter().filter(|&&a| a == i).count();
    if w == 0 {
        return;
    }
    let s = y.iter().copied().max().unwrap_or(0);
    let len = x.len() + y.len() - 1;
    let mut cuts = vec![0usize; w - 1];
    loop {
        let mut seq = Vec::with_capacity(len);
        let mut labels = Vec::with_capacity(len);
        let mut block = 0;
        for (p, &a) in x.iter().enumerate() {
            if a == i {
                let start = if block == 0 { 0 } else { cuts[block - 1] };
                let end = if block == w - 1 { y.len() - 1 } else { cuts[block] };
                for (q, &b) in y.iter().enumerate().take(end + 1).skip(start) {
                    seq.push(b + i - 1);
                    labels.push(if q == end && block < w - 1 { p } else { x.len() + q });
                }
                block += 1;
            } else {
                seq.push(if a > i { a + s - 1 } else { a });
                labels.push(p);
            }
        }
        if !is_degenerate(&seq) {
            let caesura_labels: Vec<usize> = caesuras(&seq).into_iter().map(|c| labels[c]).collect();
            acc.add_term(Surjection(seq), sequence_sign(&caesura_labels) * coeff);
        }
        if !next_nondecreasing(&mut cuts, y.len() - 1) {
            break;
        }
    }
}

impl fmt::Display for SurjectionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_combination(f, self.module.iter().map(|(k, c)| (k, *c)))
    }
}

impl fmt::Debug for SurjectionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}, torsion {}]", self.convention.name(), self.torsion())
    }
}
