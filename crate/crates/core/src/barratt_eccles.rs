//! The Barratt–Eccles operad: normalized chains on the simplicial sets
//! `E(S_r)` of tuples of permutations.

use std::fmt;

use crate::error::AlgebraError;
use crate::free_module::{checked_mul, Accumulator, FreeModuleElement, Torsion};
use crate::parallel::{sum_terms, Strategy};
use crate::surjection::{self, Convention, Surjection, SurjectionElement};
use crate::symmetric::{Permutation, SymmetricRingElement};

/// A simplex `(σ₀, …, σ_n)` of `E(S_r)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Permutation>);

impl Simplex {
    pub fn new(vertices: Vec<Permutation>) -> Result<Self, AlgebraError> {
        let Some(first) = vertices.first() else {
            return Err(AlgebraError::InvalidBasis("a simplex needs at least one permutation".into()));
        };
        if let Some(p) = vertices.iter().find(|p| p.arity() != first.arity()) {
            return Err(AlgebraError::ArityMismatch(first.arity(), p.arity()));
        }
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0[0].arity()
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    /// Number of changes in the relative order of `a` and `b` along the simplex,
    /// maximized over pairs of values.
    pub fn complexity(&self) -> usize {
        let r = self.arity();
        let positions: Vec<Vec<usize>> = self
            .0
            .iter()
            .map(|p| {
                let mut pos = vec![0; r + 1];
                for (k, &v) in p.values().iter().enumerate() {
                    pos[v] = k;
                }
                pos
            })
            .collect();
        let mut best = 0;
        for a in 1..=r {
            for b in a + 1..=r {
                let changes = positions.windows(2).filter(|w| (w[0][a] < w[0][b]) != (w[1][a] < w[1][b])).count();
                best = best.max(changes);
            }
        }
        best
    }

    fn face(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        if self.0.len() == 1 {
            f.write_str(",")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One term of the Eilenberg–Zilber map: two equal-length tuples and a sign.
pub type ShuffleTerm = (Vec<Permutation>, Vec<Permutation>, i64);

/// Eilenberg–Zilber map on a pair of simplices.
///
/// Sums over lattice paths from `(0, 0)` to `(n, m)`; each path samples both
/// simplices along its vertices. The sign is the parity of the number of
/// (second-step, first-step) pairs in path order, i.e. the area under the path.
pub fn eilenberg_zilber(a: &Simplex, b: &Simplex) -> Vec<ShuffleTerm> {
    let (n, m) = (a.degree(), b.degree());
    let mut out = Vec::new();
    // steps[k] == true means "advance in a"
    let mut steps: Vec<bool> = (0..n + m).map(|k| k >= m).collect();
    loop {
        let (mut i, mut j, mut area, mut b_steps) = (0, 0, 0usize, 0usize);
        let mut left = vec![a.0[0].clone()];
        let mut right = vec![b.0[0].clone()];
        for &adv_a in &steps {
            if adv_a {
                i += 1;
                area += b_steps;
            } else {
                j += 1;
                b_steps += 1;
            }
            left.push(a.0[i].clone());
            right.push(b.0[j].clone());
        }
        out.push((left, right, if area % 2 == 0 { 1 } else { -1 }));
        if !next_combination(&mut steps) {
            break;
        }
    }
    out
}

/// Next arrangement of a boolean sequence in lexicographic order (false < true).
fn next_combination(seq: &mut [bool]) -> bool {
    // next_permutation on a multiset of bools
    let Some(k) = (0..seq.len().saturating_sub(1)).rev().find(|&k| !seq[k] && seq[k + 1]) else {
        return false;
    };
    let l = (k + 1..seq.len()).rev().find(|&l| seq[l]).expect("a later true exists");
    seq.swap(k, l);
    seq[k + 1..].reverse();
    true
}

/// A homogeneous element of `ℰ(r)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BarrattEcclesElement {
    module: FreeModuleElement<Simplex>,
}

/// Elements of `ℰ(r) ⊗ ℰ(r)`, the target of the diagonal.
pub type BarrattEcclesTensor = FreeModuleElement<(Simplex, Simplex)>;

impl BarrattEcclesElement {
    pub fn zero(torsion: Torsion) -> Self {
        Self { module: FreeModuleElement::zero(torsion) }
    }

    pub fn new<I>(pairs: I, torsion: Torsion) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Simplex, i64)>,
    {
        let module = FreeModuleElement::from_pairs(pairs.into_iter().filter(|(k, _)| !k.is_degenerate()), torsion);
        Self::from_module(module)
    }

    pub fn from_module(module: FreeModuleElement<Simplex>) -> Result<Self, AlgebraError> {
        let mut keys = module.keys();
        if let Some(first) = keys.next() {
            for k in std::iter::once(first).chain(keys) {
                if k.is_degenerate() {
                    return Err(AlgebraError::InvalidBasis(format!("{k} is degenerate")));
                }
                if (k.arity(), k.degree()) != (first.arity(), first.degree()) {
                    return Err(AlgebraError::NotHomogeneous(format!("{first} and {k}")));
                }
            }
        }
        Ok(Self { module })
    }

    pub fn basis(simplex: Simplex, torsion: Torsion) -> Self {
        Self::new([(simplex, 1)], torsion).expect("single key is homogeneous")
    }

    /// The degree-0 element `(id_r)`.
    pub fn identity(arity: usize, torsion: Torsion) -> Self {
        Self::basis(Simplex(vec![Permutation::identity(arity)]), torsion)
    }

    fn from_parts(module: FreeModuleElement<Simplex>) -> Self {
        Self { module }
    }

    pub fn module(&self) -> &FreeModuleElement<Simplex> {
        &self.module
    }

    pub fn torsion(&self) -> Torsion {
        self.module.torsion()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    pub fn arity(&self) -> Option<usize> {
        self.module.keys().next().map(Simplex::arity)
    }

    pub fn degree(&self) -> Option<usize> {
        self.module.keys().next().map(Simplex::degree)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        Self::from_module(self.module.try_add(&other.module)?)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_parts(self.module.scale(c))
    }

    pub fn boundary(&self) -> Self {
        Self::from_parts(self.module.map_terms(|k| {
            let n = k.degree();
            (0..=n)
                .filter(|_| n > 0)
                .map(|i| (k.face(i), if i % 2 == 0 { 1 } else { -1 }))
                .filter(|(f, _)| !f.is_degenerate())
                .collect::<Vec<_>>()
        }))
    }

    pub fn compose(&self, other: &Self, i: usize) -> Result<Self, AlgebraError> {
        self.compose_with(other, i, Strategy::default())
    }

    /// Partial composition: Eilenberg–Zilber followed by coordinatewise
    /// composition of permutations at slot `i`.
    pub fn compose_with(&self, other: &Self, i: usize, strategy: Strategy) -> Result<Self, AlgebraError> {
        if self.torsion() != other.torsion() {
            return Err(AlgebraError::TorsionMismatch(self.torsion().0, other.torsion().0));
        }
        if let Some(r) = self.arity() {
            if i == 0 || i > r {
                return Err(AlgebraError::PositionOutOfRange { position: i, arity: r });
            }
        }
        let pairs: Vec<_> = self
            .module
            .iter()
            .flat_map(|(x, a)| other.module.iter().map(move |(y, b)| (x, y, checked_mul(*a, *b))))
            .collect();
        let module = sum_terms(&pairs, self.torsion(), strategy, |(x, y, c), acc| {
            for (left, right, sign) in eilenberg_zilber(x, y) {
                let vertices: Vec<Permutation> =
                    left.iter().zip(&right).map(|(p, q)| p.compose_at(q, i).expect("position checked")).collect();
                let simplex = Simplex(vertices);
                if !simplex.is_degenerate() {
                    acc.add_term(simplex, sign * c);
                }
            }
        });
        Ok(Self::from_parts(module))
    }

    /// Left action of the group ring, coordinatewise left multiplication.
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
            for (k, b) in &self.module {
                let vertices = k.0.iter().map(|s| p.compose(s)).collect::<Result<Vec<_>, _>>()?;
                acc.add_term(Simplex(vertices), checked_mul(*a, *b));
            }
        }
        Ok(Self::from_parts(acc.finish()))
    }

    /// Alexander–Whitney diagonal `Σ_{i=0}^{n} (σ₀…σ_i) ⊗ (σ_i…σ_n)`.
    pub fn diagonal(&self) -> BarrattEcclesTensor {
        self.module.map_terms(|k| {
            (0..=k.degree()).map(|i| ((Simplex(k.0[..=i].to_vec()), Simplex(k.0[i..].to_vec())), 1)).collect::<Vec<_>>()
        })
    }

    pub fn complexity(&self) -> usize {
        self.module.keys().map(Simplex::complexity).max().unwrap_or(0)
    }

    pub fn table_reduction(&self) -> SurjectionElement {
        self.table_reduction_with(Strategy::default())
    }

    /// Table reduction to the surjection operad, in the Berger–Fresse
    /// convention.
    ///
    /// For each composition `a₀ + ⋯ + a_n = n + r` the row `k` reads the
    /// first `a_k` values of `σ_k` not yet used; all but its last entry are
    /// then marked used. The rows concatenate to a surjection.
    pub fn table_reduction_with(&self, strategy: Strategy) -> SurjectionElement {
        let terms: Vec<_> = self.module.iter().collect();
        let module = sum_terms(&terms, self.torsion(), strategy, |(k, c), acc| {
            table_rows(k, **c, acc);
        });
        SurjectionElement::from_module(module, Convention::BergerFresse).expect("table reduction is homogeneous")
    }
}

fn table_rows(k: &Simplex, coeff: i64, acc: &mut Accumulator<Surjection>) {
    let (n, r) = (k.degree(), k.arity());
    // parts[j] - 1 for j < n; last part is forced
    let mut extra = vec![0usize; n];
    loop {
        let total: usize = extra.iter().sum();
        if total < r {
            let mut used = vec![false; r + 1];
            let mut seq = Vec::with_capacity(n + r);
            let mut feasible = true;
            for (row, perm) in k.0.iter().enumerate() {
                let take = if row < n { extra[row] + 1 } else { r - total };
                let start = seq.len();
                seq.extend(perm.values().iter().copied().filter(|&v| !used[v]).take(take));
                if seq.len() - start < take {
                    feasible = false;
                    break;
                }
                for &v in &seq[start..seq.len() - 1] {
                    used[v] = true;
                }
            }
            if feasible && !surjection::is_degenerate(&seq) {
                acc.add_term(Surjection::from_vec_unchecked(seq), coeff);
            }
        }
        if !next_bounded(&mut extra, r - 1) {
            break;
        }
    }
}

/// Odometer over sequences with entries in `0..=max`.
fn next_bounded(seq: &mut [usize], max: usize) -> bool {
    for s in seq.iter_mut().rev() {
        if *s < max {
            *s += 1;
            return true;
        }
        *s = 0;
    }
    false
}

impl fmt::Display for BarrattEcclesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::render::write_combination(f, self.module.iter().map(|(k, c)| (k, *c)))
    }
}

impl fmt::Debug for BarrattEcclesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [torsion {}]", self.torsion())
    }
}

/// Renders a diagonal term as `(left,right)`.
pub struct TensorTerm<'a>(pub &'a (Simplex, Simplex));

impl fmt::Display for TensorTerm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0 .0, self.0 .1)
    }
}

/// Text rendering of a diagonal with terms written `(left,right)`.
pub fn render_tensor(x: &BarrattEcclesTensor) -> String {
    let terms: Vec<(TensorTerm<'_>, i64)> = x.iter().map(|(k, c)| (TensorTerm(k), *c)).collect();
    let mut out = String::new();
    crate::render::write_combination(&mut out, terms.iter().map(|(k, c)| (k, *c))).expect("writing to a String");
    out
}
