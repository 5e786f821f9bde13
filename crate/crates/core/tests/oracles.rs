//! Brute-force reference computations checked against the kernel.

mod common;

use std::collections::BTreeMap;

use common::*;
use einfty::{
    act_cubical, act_simplicial, eilenberg_zilber, nu, BarrattEcclesElement, Convention, CubicalCell, CubicalElement,
    Permutation, Simplex, SimplicialCell, SimplicialElement, Surjection, SurjectionElement, Torsion,
};
use rand::Rng;

fn perms(vs: &[&[usize]]) -> Vec<Permutation> {
    vs.iter().map(|v| Permutation::new(v.to_vec()).unwrap()).collect()
}

/// Table reduction enumerated over all candidate surjections rather than over
/// row lengths.
fn table_reduction_oracle(k: &Simplex) -> BTreeMap<Vec<usize>, i64> {
    let (n, r) = (k.degree(), k.arity());
    let len = n + r;
    let mut out = BTreeMap::new();
    let mut u = vec![1usize; len];
    loop {
        let candidate = Surjection::new(u.clone()).ok().filter(|s| s.arity() == r && !s.is_degenerate());
        if candidate.is_some() && fits_table(&u, k, n) {
            *out.entry(u.clone()).or_insert(0) += 1;
        }
        let mut j = len;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            u[j] += 1;
            if u[j] <= r {
                break;
            }
            u[j] = 1;
        }
    }
}

/// Whether `u` splits into `n + 1` consecutive rows, row `k` listing the
/// leading values of `σ_k` among those still occurring from the row on, with
/// every entry but the last never occurring again.
fn fits_table(u: &[usize], k: &Simplex, n: usize) -> bool {
    // choose the last position of each of the first n rows
    fn rec(u: &[usize], k: &Simplex, row: usize, start: usize, n: usize) -> bool {
        let last_row = row == n;
        let ends: Vec<usize> = if last_row { vec![u.len() - 1] } else { (start..u.len() - 1).collect() };
        for end in ends {
            let alive: Vec<usize> =
                k.vertices()[row].values().iter().copied().filter(|&v| u[start..].contains(&v)).collect();
            let slice = &u[start..=end];
            if slice.len() <= alive.len() && slice == &alive[..slice.len()] {
                let finished_ok = slice[..slice.len() - 1].iter().all(|v| !u[end + 1..].contains(v));
                if finished_ok && (last_row || rec(u, k, row + 1, end + 1, n)) {
                    return true;
                }
            }
        }
        false
    }
    rec(u, k, 0, 0, n)
}

#[test]
fn table_reduction_matches_brute_force() {
    let mut g = rng(11);
    for _ in 0..150 {
        let r = g.gen_range(1..=4);
        let n = g.gen_range(0..=3);
        let k = simplex(&mut g, r, n);
        let expected = table_reduction_oracle(&k);
        let got = BarrattEcclesElement::basis(k.clone(), Torsion(0)).table_reduction();
        let got: BTreeMap<Vec<usize>, i64> = got.module().iter().map(|(s, c)| (s.values().to_vec(), *c)).collect();
        assert_eq!(got, expected, "{k}");
    }
}

#[test]
fn hand_enumerated_table_reductions() {
    let tr = |vs: &[&[usize]]| {
        BarrattEcclesElement::basis(Simplex::new(perms(vs)).unwrap(), Torsion(0)).table_reduction().to_string()
    };
    assert_eq!(tr(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]]), "(1,2,3,1,2)");
    assert_eq!(tr(&[&[1, 2, 3], &[3, 1, 2], &[1, 2, 3]]), "(1,2,3,2,3) + (1,3,1,2,3)");
    assert_eq!(tr(&[&[1, 2, 3, 4]]), "(1,2,3,4)");
}

fn shuffle_sign(mask: &[bool]) -> i64 {
    // sign of the permutation listing the `false` steps first, then the `true` steps
    let order: Vec<usize> = (0..mask.len()).filter(|&j| !mask[j]).chain((0..mask.len()).filter(|&j| mask[j])).collect();
    let inversions = (0..order.len())
        .flat_map(|a| (a + 1..order.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| order[a] > order[b])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn eilenberg_zilber_matches_shuffle_permutations() {
    let mut g = rng(12);
    for _ in 0..60 {
        let r = g.gen_range(2..=3);
        let (p, q) = (g.gen_range(0..=3), g.gen_range(0..=3));
        let a = simplex(&mut g, r, p);
        let b = simplex(&mut g, r, q);
        let (p, q) = (a.degree(), b.degree());
        let mut expected: BTreeMap<(Vec<Permutation>, Vec<Permutation>), i64> = BTreeMap::new();
        for bits in 0u32..1 << (p + q) {
            let mask: Vec<bool> = (0..p + q).map(|j| bits >> j & 1 == 1).collect();
            if mask.iter().filter(|&&m| m).count() != q {
                continue;
            }
            // false steps advance the first simplex, true steps the second
            let (mut i, mut j) = (0, 0);
            let mut left = vec![a.vertices()[0].clone()];
            let mut right = vec![b.vertices()[0].clone()];
            for &m in &mask {
                if m {
                    j += 1
                } else {
                    i += 1
                }
                left.push(a.vertices()[i].clone());
                right.push(b.vertices()[j].clone());
            }
            *expected.entry((left, right)).or_insert(0) += shuffle_sign(&mask);
        }
        let mut got = BTreeMap::new();
        for (l, r, s) in eilenberg_zilber(&a, &b) {
            *got.entry((l, r)).or_insert(0) += s;
        }
        assert_eq!(got, expected);
    }
}

fn changes(k: &Simplex) -> usize {
    let r = k.arity();
    let mut best = 0;
    for a in 1..=r {
        for b in a + 1..=r {
            let before: Vec<bool> = k
                .vertices()
                .iter()
                .map(|p| {
                    let inv = p.inverse();
                    inv.apply(a) < inv.apply(b)
                })
                .collect();
            best = best.max(before.windows(2).filter(|w| w[0] != w[1]).count());
        }
    }
    best
}

fn alternations(u: &[usize]) -> usize {
    let r = u.iter().copied().max().unwrap_or(0);
    let mut best = 0;
    for a in 1..=r {
        for b in a + 1..=r {
            let mut restricted: Vec<usize> = u.iter().copied().filter(|&v| v == a || v == b).collect();
            restricted.dedup();
            best = best.max(restricted.len().saturating_sub(2));
        }
    }
    best
}

#[test]
fn complexities_match_pairwise_counts() {
    let mut g = rng(13);
    for _ in 0..200 {
        let r = g.gen_range(1..=4);
        let n = g.gen_range(0..=4);
        let k = simplex(&mut g, r, n);
        assert_eq!(k.complexity(), changes(&k), "{k}");
        let u = surjection(&mut g, r, n);
        assert_eq!(u.complexity(), alternations(u.values()), "{u}");
    }
    let k = Simplex::new(perms(&[&[1, 2], &[2, 1], &[1, 2]])).unwrap();
    assert_eq!(k.complexity(), 2);
    assert_eq!(Simplex::new(perms(&[&[1, 2], &[2, 1]])).unwrap().complexity(), 1);
    assert_eq!(Simplex::new(perms(&[&[1, 2, 3]])).unwrap().complexity(), 0);
}

fn nu_oracle(p: u64, q: i64) -> i64 {
    let m = (p - 1) / 2;
    let fact: u64 = (1..=m).product::<u64>() % p;
    let power = (0..q.unsigned_abs()).fold(1u64, |acc, _| acc * fact % p);
    let value = if q >= 0 { power } else { (1..p).find(|x| x * power % p == 1).unwrap() };
    let exponent = q * (q - 1) / 2 * m as i64;
    if exponent.rem_euclid(2) == 0 {
        value as i64
    } else {
        ((p - value) % p) as i64
    }
}

#[test]
fn nu_matches_direct_search() {
    for p in [3u64, 5, 7, 11, 13] {
        for q in -8..=8 {
            assert_eq!(nu(p, q).unwrap(), nu_oracle(p, q), "p={p} q={q}");
        }
    }
    assert_eq!(nu(5, -2).unwrap(), 4);
}

#[test]
fn coproducts() {
    let t = Torsion(0);
    let aw = SurjectionElement::basis(vec![1, 2], t, Convention::McClureSmith).unwrap();
    for n in 0..5 {
        let expected = SimplicialElement::new(
            (0..=n).map(|i| (SimplicialCell::new(vec![(0..=i).collect(), (i..=n).collect()]).unwrap(), 1)),
            t,
        )
        .unwrap();
        assert_eq!(act_simplicial(&aw, n), expected);
    }
    let interval = CubicalElement::new(
        [
            (CubicalCell::new(vec![vec![0], vec![2]]).unwrap(), 1),
            (CubicalCell::new(vec![vec![2], vec![1]]).unwrap(), 1),
        ],
        t,
    )
    .unwrap();
    assert_eq!(act_cubical(&aw, 1), interval);
}

#[test]
fn iterated_coproduct_in_degree_zero() {
    // (1,2,3) on Δ^12 restricted to three 4-dimensional factors is a single term
    let x = SurjectionElement::basis(vec![1, 2, 3], Torsion(3), Convention::McClureSmith).unwrap();
    let filtered = act_simplicial(&x, 12).filter_dimensions(|d| d.iter().all(|&k| k == 4));
    assert_eq!(filtered.to_string(), "((0,1,2,3,4),(4,5,6,7,8),(8,9,10,11,12))");
}
