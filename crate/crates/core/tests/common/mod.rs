//! Seeded random elements shared by the integration suites.
#![allow(dead_code)]

use einfty::{
    BarrattEcclesElement, Convention, CubicalCell, CubicalElement, Permutation, Simplex, SimplicialCell,
    SimplicialElement, Surjection, SurjectionElement, SymmetricRingElement, Torsion,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub const TORSIONS: [u64; 4] = [0, 2, 3, 5];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn torsion(rng: &mut ChaCha8Rng) -> Torsion {
    Torsion(*TORSIONS.choose(rng).unwrap())
}

fn coefficient(rng: &mut ChaCha8Rng) -> i64 {
    let c = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        c
    } else {
        -c
    }
}

/// A nondegenerate surjection of arity `r` and degree `d`; arity one forces
/// degree zero.
pub fn surjection(rng: &mut ChaCha8Rng, r: usize, d: usize) -> Surjection {
    let d = if r == 1 { 0 } else { d };
    loop {
        let mut values = Vec::with_capacity(r + d);
        for _ in 0..r + d {
            let v = loop {
                let v = rng.gen_range(1..=r);
                if values.last() != Some(&v) {
                    break v;
                }
            };
            values.push(v);
        }
        if let Ok(s) = Surjection::new(values) {
            if s.arity() == r {
                return s;
            }
        }
    }
}

pub fn surjection_element(rng: &mut ChaCha8Rng, r: usize, d: usize, t: Torsion, c: Convention) -> SurjectionElement {
    loop {
        let terms = rng.gen_range(1..=3);
        let pairs: Vec<_> = (0..terms).map(|_| (surjection(rng, r, d), coefficient(rng))).collect();
        let e = SurjectionElement::new(pairs, t, c).unwrap();
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn permutation(rng: &mut ChaCha8Rng, r: usize) -> Permutation {
    let mut values: Vec<usize> = (1..=r).collect();
    values.shuffle(rng);
    Permutation::new(values).unwrap()
}

pub fn ring_element(rng: &mut ChaCha8Rng, r: usize, t: Torsion) -> SymmetricRingElement {
    loop {
        let terms = rng.gen_range(1..=3);
        let pairs: Vec<_> = (0..terms).map(|_| (permutation(rng, r), coefficient(rng))).collect();
        let e = SymmetricRingElement::from_pairs(pairs, t).unwrap();
        if !e.is_zero() {
            return e;
        }
    }
}

/// A nondegenerate simplex of arity `r` and degree `n`; arity one forces
/// degree zero.
pub fn simplex(rng: &mut ChaCha8Rng, r: usize, n: usize) -> Simplex {
    let n = if r == 1 { 0 } else { n };
    let mut vertices: Vec<Permutation> = Vec::with_capacity(n + 1);
    while vertices.len() <= n {
        let p = permutation(rng, r);
        if vertices.last() != Some(&p) {
            vertices.push(p);
        }
    }
    Simplex::new(vertices).unwrap()
}

pub fn be_element(rng: &mut ChaCha8Rng, r: usize, n: usize, t: Torsion) -> BarrattEcclesElement {
    loop {
        let terms = rng.gen_range(1..=3);
        let pairs: Vec<_> = (0..terms).map(|_| (simplex(rng, r, n), coefficient(rng))).collect();
        let e = BarrattEcclesElement::new(pairs, t).unwrap();
        if !e.is_zero() {
            return e;
        }
    }
}

/// A tensor of strictly increasing vertex tuples with the given dimensions.
pub fn simplicial_element(rng: &mut ChaCha8Rng, dims: &[usize], t: Torsion) -> SimplicialElement {
    let terms = rng.gen_range(1..=3);
    let pairs: Vec<_> = (0..terms)
        .map(|_| {
            let factors = dims
                .iter()
                .map(|&k| {
                    let mut pool: Vec<usize> = (0..=k + 3).collect();
                    pool.shuffle(rng);
                    let mut f = pool[..=k].to_vec();
                    f.sort_unstable();
                    f
                })
                .collect();
            (SimplicialCell::new(factors).unwrap(), coefficient(rng))
        })
        .collect();
    SimplicialElement::new(pairs, t).unwrap()
}

pub fn cubical_element(rng: &mut ChaCha8Rng, arity: usize, len: usize, t: Torsion) -> CubicalElement {
    let terms = rng.gen_range(1..=3);
    let pairs: Vec<_> = (0..terms)
        .map(|_| {
            let factors = (0..arity).map(|_| (0..len).map(|_| rng.gen_range(0..=2u8)).collect()).collect();
            (CubicalCell::new(factors).unwrap(), coefficient(rng))
        })
        .collect();
    CubicalElement::new(pairs, t).unwrap()
}
