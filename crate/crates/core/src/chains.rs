//! Tensor powers of normalized chains on standard simplices and cubes, and
//! the action of surjections on them.
//!
//! A simplicial factor is a vertex tuple; a cubical factor is a word over
//! `{0, 1, 2}` where `0` and `1` are the endpoints of the interval and `2` the
//! interval itself. Both actions are computed in the McClure–Smith
//! convention; elements in the other convention are converted first.
//!
//! Simplicial action: a surjection `u` of length `ℓ` cuts `[v₀, …, v_n]` into
//! `ℓ` consecutive closed intervals, and factor `k` is the concatenation of
//! the intervals labeled `k`. Cubical action: the `ℓ`-fold Serre diagonal
//! assigns each interval coordinate to one piece, then the pieces labeled
//! `k` are joined, each join turning one coordinate with `0` on the left and
//! `1` on the right into `2`.

use std::fmt;

use crate::error::AlgebraError;
use crate::free_module::{checked_mul, Accumulator, FreeModuleElement, Torsion};
use crate::parallel::{sum_terms, Strategy};
use crate::surjection::{next_nondecreasing, Convention, Surjection, SurjectionElement};
use crate::symmetric::write_tuple;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialCell(Vec<Vec<usize>>);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubicalCell(Vec<Vec<u8>>);

impl SimplicialCell {
    pub fn new(factors: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        if factors.is_empty() || factors.iter().any(Vec::is_empty) {
            return Err(AlgebraError::InvalidBasis("simplicial factors must be nonempty vertex tuples".into()));
        }
        Ok(Self(factors))
    }

    pub fn factors(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|f| f.len() - 1).sum()
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.0.iter().map(|f| f.len() - 1).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.iter().any(|f| f.windows(2).any(|w| w[0] == w[1]))
    }

    pub fn latex(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|f| format!("[{}]", f.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        parts.join(" \\otimes ")
    }
}

impl CubicalCell {
    pub fn new(factors: Vec<Vec<u8>>) -> Result<Self, AlgebraError> {
        let Some(first) = factors.first() else {
            return Err(AlgebraError::InvalidBasis("a cubical cell needs at least one factor".into()));
        };
        if factors.iter().any(|f| f.len() != first.len()) {
            return Err(AlgebraError::InvalidBasis("cubical factors must have equal length".into()));
        }
        if factors.iter().flatten().any(|&d| d > 2) {
            return Err(AlgebraError::InvalidBasis("cubical digits must be 0, 1 or 2".into()));
        }
        Ok(Self(factors))
    }

    pub fn factors(&self) -> &[Vec<u8>] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|f| cube_dim(f)).sum()
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.0.iter().map(|f| cube_dim(f)).collect()
    }

    pub fn latex(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|f| {
                f.iter()
                    .map(|d| match d {
                        0 => "[0]",
                        1 => "[1]",
                        _ => "[01]",
                    })
                    .collect::<String>()
            })
            .collect();
        parts.join(" \\otimes ")
    }
}

fn cube_dim(f: &[u8]) -> usize {
    f.iter().filter(|&&d| d == 2).count()
}

fn write_factors<T: fmt::Display>(f: &mut fmt::Formatter<'_>, factors: &[Vec<T>]) -> fmt::Result {
    f.write_str("(")?;
    for (k, v) in factors.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write_tuple(f, v)?;
    }
    if factors.len() == 1 {
        f.write_str(",")?;
    }
    f.write_str(")")
}

impl fmt::Display for SimplicialCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factors(f, &self.0)
    }
}

impl fmt::Display for CubicalCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factors(f, &self.0)
    }
}

impl fmt::Debug for SimplicialCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Debug for CubicalCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! tensor_element {
    ($name:ident, $cell:ident) => {
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            module: FreeModuleElement<$cell>,
        }

        impl $name {
            pub fn zero(torsion: Torsion) -> Self {
                Self { module: FreeModuleElement::zero(torsion) }
            }

            pub fn from_module(module: FreeModuleElement<$cell>) -> Result<Self, AlgebraError> {
                let mut keys = module.keys();
                if let Some(first) = keys.next() {
                    if let Some(k) = keys.find(|k| k.arity() != first.arity()) {
                        return Err(AlgebraError::NotHomogeneous(format!("{first} and {k}")));
                    }
                }
                Ok(Self { module })
            }

            pub fn module(&self) -> &FreeModuleElement<$cell> {
                &self.module
            }

            pub fn torsion(&self) -> Torsion {
                self.module.torsion()
            }

            pub fn is_zero(&self) -> bool {
                self.module.is_zero()
            }

            pub fn arity(&self) -> Option<usize> {
                self.module.keys().next().map($cell::arity)
            }

            pub fn scale(&self, c: i64) -> Self {
                Self { module: self.module.scale(c) }
            }

            pub fn set_torsion(&self, torsion: Torsion) -> Self {
                Self { module: self.module.set_torsion(torsion) }
            }

            pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
                Self::from_module(self.module.try_add(&other.module)?)
            }

            /// Keeps the terms whose factor dimensions satisfy `keep`.
            pub fn filter_dimensions(&self, keep: impl Fn(&[usize]) -> bool) -> Self {
                let module = FreeModuleElement::from_pairs(
                    self.module.iter().filter(|(k, _)| keep(&k.dimensions())).map(|(k, c)| (k.clone(), *c)),
                    self.torsion(),
                );
                Self { module }
            }

            /// LaTeX rendering: `[0,1] \otimes [1,2]` for simplices,
            /// `[0][01] \otimes [1][1]` for cubes.
            pub fn latex(&self) -> String {
                let mut out = String::new();
                let terms: Vec<(LatexCell<'_, $cell>, i64)> =
                    self.module.iter().map(|(k, c)| (LatexCell(k), *c)).collect();
                crate::render::write_combination(&mut out, terms.iter().map(|(k, c)| (k, *c)))
                    .expect("writing to a String");
                out
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                crate::render::write_combination(f, self.module.iter().map(|(k, c)| (k, *c)))
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{self} [torsion {}]", self.torsion())
            }
        }

        impl fmt::Display for LatexCell<'_, $cell> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.latex())
            }
        }
    };
}

struct LatexCell<'a, C>(&'a C);

tensor_element!(SimplicialElement, SimplicialCell);
tensor_element!(CubicalElement, CubicalCell);

impl SimplicialElement {
    /// Drops degenerate keys and checks homogeneity.
    pub fn new<I>(pairs: I, torsion: Torsion) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (SimplicialCell, i64)>,
    {
        Self::from_module(FreeModuleElement::from_pairs(pairs.into_iter().filter(|(k, _)| !k.is_degenerate()), torsion))
    }

    /// The top simplex `[0, …, n]` as an arity-one element.
    pub fn standard(n: usize, torsion: Torsion) -> Self {
        Self { module: FreeModuleElement::basis(SimplicialCell(vec![(0..=n).collect()]), torsion) }
    }

    /// Alternating vertex deletions in each factor, with Koszul signs.
    pub fn boundary(&self) -> Self {
        let module = self.module.map_terms(|k| {
            let mut out = Vec::new();
            let mut before = 0;
            for (fi, f) in k.0.iter().enumerate() {
                if f.len() > 1 {
                    for j in 0..f.len() {
                        let mut factors = k.0.clone();
                        factors[fi].remove(j);
                        let cell = SimplicialCell(factors);
                        if !cell.is_degenerate() {
                            out.push((cell, parity_sign(before + j)));
                        }
                    }
                }
                before += f.len() - 1;
            }
            out
        });
        Self { module }
    }

    /// Applies an arity-one map to every term: the basis map `f` is given the
    /// single factor of each key.
    pub fn act_by(&self, x: &SurjectionElement) -> Result<Self, AlgebraError> {
        let mut acc = Accumulator::new(self.torsion());
        for (k, c) in &self.module {
            if k.arity() != 1 {
                return Err(AlgebraError::ArityMismatch(1, k.arity()));
            }
            for (cell, v) in &act_on_simplex(x, &k.0[0], Strategy::default())?.module {
                acc.add_term(cell.clone(), checked_mul(*c, *v));
            }
        }
        Self::from_module(acc.finish())
    }
}

impl CubicalElement {
    pub fn new<I>(pairs: I, torsion: Torsion) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (CubicalCell, i64)>,
    {
        Self::from_module(FreeModuleElement::from_pairs(pairs, torsion))
    }

    /// The top cube `[01]^n` as an arity-one element.
    pub fn standard(n: usize, torsion: Torsion) -> Self {
        Self { module: FreeModuleElement::basis(CubicalCell(vec![vec![2; n]]), torsion) }
    }

    /// `∂[01] = [1] − [0]` in each interval coordinate, with Koszul signs.
    pub fn boundary(&self) -> Self {
        let module = self.module.map_terms(|k| {
            let mut out = Vec::new();
            let mut before = 0;
            for (fi, f) in k.0.iter().enumerate() {
                for j in (0..f.len()).filter(|&j| f[j] == 2) {
                    for (digit, s) in [(1u8, 1i64), (0, -1)] {
                        let mut factors = k.0.clone();
                        factors[fi][j] = digit;
                        out.push((CubicalCell(factors), s * parity_sign(before)));
                    }
                    before += 1;
                }
            }
            out
        });
        Self { module }
    }

    pub fn act_by(&self, x: &SurjectionElement) -> Result<Self, AlgebraError> {
        let mut acc = Accumulator::new(self.torsion());
        for (k, c) in &self.module {
            if k.arity() != 1 {
                return Err(AlgebraError::ArityMismatch(1, k.arity()));
            }
            for (cell, v) in &act_on_cube(x, &k.0[0], Strategy::default())?.module {
                acc.add_term(cell.clone(), checked_mul(*c, *v));
            }
        }
        Self::from_module(acc.finish())
    }
}

fn parity_sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign exponent of the McClure–Smith action for a surjection `u` whose
/// pieces carry degrees `degs`: regroup the pieces by value, then join
/// consecutive pieces of each value.
fn grouping_exponent(u: &[usize], degs: &[usize]) -> usize {
    let mut e = 0;
    for a in 0..u.len() {
        for b in a + 1..u.len() {
            if u[a] > u[b] {
                e += degs[a] * degs[b];
            }
        }
    }
    let r = u.iter().copied().max().unwrap_or(0);
    let mut before = 0;
    for value in 1..=r {
        let mut within = 0;
        let mut count = 0usize;
        for j in (0..u.len()).filter(|&j| u[j] == value) {
            if count > 0 {
                e += within;
            }
            within += degs[j];
            count += 1;
        }
        e += count.saturating_sub(1) * before;
        before += within;
    }
    e
}

fn action_inputs(x: &SurjectionElement) -> Vec<(Surjection, i64)> {
    x.with_convention(Convention::McClureSmith).module().iter().map(|(u, c)| (u.clone(), *c)).collect()
}

pub fn act_simplicial(x: &SurjectionElement, n: usize) -> SimplicialElement {
    act_simplicial_with(x, n, Strategy::default())
}

pub fn act_simplicial_with(x: &SurjectionElement, n: usize, strategy: Strategy) -> SimplicialElement {
    let vertices: Vec<usize> = (0..=n).collect();
    act_on_simplex(x, &vertices, strategy).expect("standard simplex is a valid face")
}

/// Action of `x` on the simplex spanned by `vertices`.
pub fn act_on_simplex(
    x: &SurjectionElement,
    vertices: &[usize],
    strategy: Strategy,
) -> Result<SimplicialElement, AlgebraError> {
    if vertices.is_empty() {
        return Err(AlgebraError::InvalidBasis("empty vertex tuple".into()));
    }
    let inputs = action_inputs(x);
    let n = vertices.len() - 1;
    // split the work on the first cut point
    let items: Vec<(usize, usize)> = (0..inputs.len())
        .flat_map(|b| {
            let firsts = if inputs[b].0.values().len() > 1 { n + 1 } else { 1 };
            (0..firsts).map(move |t| (b, t))
        })
        .collect();
    let module = sum_terms(&items, x.torsion(), strategy, |&(b, first), acc| {
        let (u, c) = &inputs[b];
        simplicial_cuts(u.values(), vertices, first, *c, acc);
    });
    Ok(SimplicialElement { module })
}

fn simplicial_cuts(u: &[usize], vertices: &[usize], first: usize, coeff: i64, acc: &mut Accumulator<SimplicialCell>) {
    let n = vertices.len() - 1;
    let len = u.len();
    let r = u.iter().copied().max().unwrap_or(0);
    if len == 1 {
        acc.add_term(SimplicialCell(vec![vertices.to_vec()]), coeff);
        return;
    }
    // interior cut points t_1 ≤ … ≤ t_{ℓ-1}, the first one fixed
    let mut rest = vec![first; len - 2];
    let mut degs = vec![0usize; len];
    loop {
        let cut = |j: usize| -> usize {
            match j {
                0 => 0,
                1 => first,
                j if j == len => n,
                j => rest[j - 2],
            }
        };
        let mut factors: Vec<Vec<usize>> = vec![Vec::new(); r];
        let mut ok = true;
        for j in 0..len {
            let (lo, hi) = (cut(j), cut(j + 1));
            degs[j] = hi - lo;
            let f = &mut factors[u[j] - 1];
            if f.last() == Some(&vertices[lo]) {
                ok = false;
                break;
            }
            f.extend_from_slice(&vertices[lo..=hi]);
        }
        if ok {
            acc.add_term(SimplicialCell(factors), parity_sign(grouping_exponent(u, &degs)) * coeff);
        }
        if !next_nondecreasing_from(&mut rest, first, n) {
            break;
        }
    }
}

/// Like [`next_nondecreasing`] but with entries bounded below by `min`.
fn next_nondecreasing_from(seq: &mut [usize], min: usize, max: usize) -> bool {
    for s in seq.iter_mut() {
        *s -= min;
    }
    let more = next_nondecreasing(seq, max - min);
    for s in seq.iter_mut() {
        *s += min;
    }
    more
}

pub fn act_cubical(x: &SurjectionElement, n: usize) -> CubicalElement {
    act_cubical_with(x, n, Strategy::default())
}

pub fn act_cubical_with(x: &SurjectionElement, n: usize, strategy: Strategy) -> CubicalElement {
    act_on_cube(x, &vec![2; n], strategy).expect("standard cube is a valid face")
}

/// Action of `x` on the face of a cube given by a word over `{0, 1, 2}`.
pub fn act_on_cube(x: &SurjectionElement, word: &[u8], strategy: Strategy) -> Result<CubicalElement, AlgebraError> {
    if word.iter().any(|&d| d > 2) {
        return Err(AlgebraError::InvalidBasis("cubical digits must be 0, 1 or 2".into()));
    }
    let inputs = action_inputs(x);
    let intervals: Vec<usize> = (0..word.len()).filter(|&j| word[j] == 2).collect();
    let items: Vec<(usize, usize)> = (0..inputs.len())
        .flat_map(|b| {
            let firsts = if intervals.is_empty() { 1 } else { inputs[b].0.values().len() };
            (0..firsts).map(move |p| (b, p))
        })
        .collect();
    let module = sum_terms(&items, x.torsion(), strategy, |&(b, first), acc| {
        let (u, c) = &inputs[b];
        cubical_pieces(u.values(), word, &intervals, first, *c, acc);
    });
    Ok(CubicalElement { module })
}

fn cubical_pieces(
    u: &[usize],
    word: &[u8],
    intervals: &[usize],
    first: usize,
    coeff: i64,
    acc: &mut Accumulator<CubicalCell>,
) {
    let len = u.len();
    let r = u.iter().copied().max().unwrap_or(0);
    // owner[a]: the piece receiving the full interval at coordinate intervals[a]
    let mut owner = vec![0usize; intervals.len()];
    if let Some(o) = owner.first_mut() {
        *o = first;
    }
    let groups: Vec<Vec<usize>> = (1..=r).map(|v| (0..len).filter(|&j| u[j] == v).collect()).collect();
    loop {
        let mut pieces: Vec<Vec<u8>> = vec![word.to_vec(); len];
        let mut degs = vec![0usize; len];
        let mut shuffle = 0;
        for (a, (&coord, &p)) in intervals.iter().zip(&owner).enumerate() {
            shuffle += owner[a + 1..].iter().filter(|&&q| q < p).count();
            degs[p] += 1;
            for (q, piece) in pieces.iter_mut().enumerate() {
                piece[coord] = match q.cmp(&p) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => 2,
                    std::cmp::Ordering::Greater => 1,
                };
            }
        }
        let sign = parity_sign(shuffle + grouping_exponent(u, &degs)) * coeff;
        let mut factors: Vec<Vec<Vec<u8>>> = Vec::with_capacity(r);
        for group in &groups {
            let mut joined = vec![pieces[group[0]].clone()];
            for &j in &group[1..] {
                joined = joined.iter().flat_map(|left| join_cubes(left, &pieces[j], intervals)).collect();
                if joined.is_empty() {
                    break;
                }
            }
            if joined.is_empty() {
                factors.clear();
                break;
            }
            factors.push(joined);
        }
        if factors.len() == r {
            emit_products(&factors, sign, acc);
        }
        if !next_owner(&mut owner, len) {
            break;
        }
    }
}

/// All joins `left ∗ right`: one interval coordinate with `0` on the left
/// and `1` on the right becomes `2`; before it the right side must be a
/// vertex and the left value is kept, after it the reverse.
fn join_cubes(left: &[u8], right: &[u8], intervals: &[usize]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for &i in intervals {
        if left[i] != 0 || right[i] != 1 {
            continue;
        }
        if right[..i].contains(&2) || left[i + 1..].contains(&2) {
            continue;
        }
        let mut w = left[..i].to_vec();
        w.push(2);
        w.extend_from_slice(&right[i + 1..]);
        out.push(w);
    }
    out
}

fn emit_products(factors: &[Vec<Vec<u8>>], sign: i64, acc: &mut Accumulator<CubicalCell>) {
    let mut idx = vec![0usize; factors.len()];
    loop {
        let cell = CubicalCell(factors.iter().zip(&idx).map(|(f, &k)| f[k].clone()).collect());
        acc.add_term(cell, sign);
        let mut k = factors.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < factors[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Odometer over all owner assignments after the first coordinate.
fn next_owner(owner: &mut [usize], pieces: usize) -> bool {
    for o in owner.iter_mut().skip(1).rev() {
        if *o + 1 < pieces {
            *o += 1;
            return true;
        }
        *o = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surj(values: &[usize], convention: Convention) -> SurjectionElement {
        SurjectionElement::basis(values.to_vec(), Torsion(0), convention).unwrap()
    }

    fn simp(pairs: &[(&[&[usize]], i64)]) -> SimplicialElement {
        SimplicialElement::new(
            pairs.iter().map(|(fs, c)| (SimplicialCell::new(fs.iter().map(|f| f.to_vec()).collect()).unwrap(), *c)),
            Torsion(0),
        )
        .unwrap()
    }

    fn cube(pairs: &[(&[&[u8]], i64)]) -> CubicalElement {
        CubicalElement::new(
            pairs.iter().map(|(fs, c)| (CubicalCell::new(fs.iter().map(|f| f.to_vec()).collect()).unwrap(), *c)),
            Torsion(0),
        )
        .unwrap()
    }

    #[test]
    fn standard_cells() {
        assert_eq!(SimplicialElement::standard(2, Torsion(0)), simp(&[(&[&[0, 1, 2]], 1)]));
        assert_eq!(CubicalElement::standard(2, Torsion(0)), cube(&[(&[&[2, 2]], 1)]));
        assert_eq!(CubicalElement::standard(0, Torsion(0)).to_string(), "((),)");
    }

    #[test]
    fn boundaries() {
        let d = SimplicialElement::standard(2, Torsion(0)).boundary();
        assert_eq!(d, simp(&[(&[&[1, 2]], 1), (&[&[0, 2]], -1), (&[&[0, 1]], 1)]));
        let d = CubicalElement::standard(1, Torsion(0)).boundary();
        assert_eq!(d, cube(&[(&[&[1]], 1), (&[&[0]], -1)]));
        let t = simp(&[(&[&[0, 1], &[1, 2]], 1)]).boundary();
        let expected =
            simp(&[(&[&[1], &[1, 2]], 1), (&[&[0], &[1, 2]], -1), (&[&[0, 1], &[2]], -1), (&[&[0, 1], &[1]], 1)]);
        assert_eq!(t, expected);
        assert!(SimplicialElement::standard(3, Torsion(0)).boundary().boundary().is_zero());
        assert!(CubicalElement::standard(3, Torsion(0)).boundary().boundary().is_zero());
    }

    #[test]
    fn printed_simplicial_action() {
        let x = surj(&[1, 2, 1], Convention::McClureSmith);
        let expected = simp(&[(&[&[0, 1, 2], &[0, 1]], -1), (&[&[0, 2], &[0, 1, 2]], 1), (&[&[0, 1, 2], &[1, 2]], -1)]);
        assert_eq!(act_simplicial(&x, 2), expected);
    }

    #[test]
    fn printed_cubical_action() {
        let x = surj(&[1, 2, 1], Convention::McClureSmith);
        let expected = cube(&[
            (&[&[2, 2], &[1, 2]], -1),
            (&[&[2, 1], &[2, 2]], 1),
            (&[&[0, 2], &[2, 2]], 1),
            (&[&[2, 2], &[2, 0]], -1),
        ]);
        assert_eq!(act_cubical(&x, 2), expected);
    }

    #[test]
    fn identity_and_coproducts() {
        let id = surj(&[1], Convention::McClureSmith);
        for n in 0..4 {
            assert_eq!(act_simplicial(&id, n), SimplicialElement::standard(n, Torsion(0)));
            assert_eq!(act_cubical(&id, n), CubicalElement::standard(n, Torsion(0)));
        }
        let aw = surj(&[1, 2], Convention::McClureSmith);
        let expected = simp(&[(&[&[0], &[0, 1, 2]], 1), (&[&[0, 1], &[1, 2]], 1), (&[&[0, 1, 2], &[2]], 1)]);
        assert_eq!(act_simplicial(&aw, 2), expected);
        assert_eq!(act_cubical(&aw, 1), cube(&[(&[&[0], &[2]], 1), (&[&[2], &[1]], 1)]));
    }

    #[test]
    fn latex_rendering() {
        let x = simp(&[(&[&[0, 1], &[1, 2, 3], &[2, 3]], 1)]);
        assert_eq!(x.latex(), "[0,1] \\otimes [1,2,3] \\otimes [2,3]");
        let y = cube(&[(&[&[0, 1], &[2, 1], &[2, 2]], 1)]);
        assert_eq!(y.latex(), "[0][1] \\otimes [01][1] \\otimes [01][01]");
        assert_eq!(SimplicialElement::zero(Torsion(0)).latex(), "0");
        assert_eq!(SimplicialElement::zero(Torsion(0)).to_string(), "0");
    }

    #[test]
    fn rejects_bad_cells() {
        assert!(CubicalCell::new(vec![vec![0, 3]]).is_err());
        assert!(CubicalCell::new(vec![vec![0], vec![0, 1]]).is_err());
        assert!(SimplicialCell::new(vec![vec![]]).is_err());
    }
}
