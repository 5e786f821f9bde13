//! Steenrod–Adem structures and chain-level Steenrod operations.
//!
//! The minimal resolution `W(r)` of the ground ring over the cyclic group
//! `C_r` has one generator `e_i` in each degree `i ≥ 0`, with `∂e_{2k+1} =
//! T e_{2k}` and `∂e_{2k+2} = N e_{2k+1}` where `T = ρ − 1` and `N = 1 + ρ +
//! ⋯ + ρ^{r−1}`. [`psi_be`] sends `e_i` to a Barratt–Eccles element through
//! the contracting homotopy `h(σ₀, …, σ_n) = (id, σ₀, …, σ_n)`, and
//! [`psi_surj`] is its table reduction.
//!
//! [`steenrod_chain`] produces the chain whose pairing with `x^{⊗p}` for a
//! cocycle `x` of degree `q` gives `P_s(x)` (or `βP_s(x)`) evaluated on the
//! top cell of a standard simplex or cube.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::barratt_eccles::{BarrattEcclesElement, Simplex};
use crate::chains::{act_cubical, act_simplicial, CubicalElement, SimplicialElement};
use crate::error::AlgebraError;
use crate::free_module::Torsion;
use crate::surjection::{Convention, SurjectionElement};
use crate::symmetric::{Permutation, SymmetricRingElement};

type Cache = RwLock<HashMap<usize, Vec<BarrattEcclesElement>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `ψ_r(e_i)` in the Barratt–Eccles operad, over the integers.
///
/// # Panics
///
/// Panics if `r == 0`.
pub fn psi_be(r: usize, i: usize) -> BarrattEcclesElement {
    assert!(r >= 1, "arity must be positive");
    if let Some(known) = cache().read().expect("psi cache poisoned").get(&r).and_then(|v| v.get(i)) {
        return known.clone();
    }
    let mut guard = cache().write().expect("psi cache poisoned");
    let series = guard.entry(r).or_insert_with(|| vec![BarrattEcclesElement::identity(r, Torsion::INTEGERS)]);
    let transfer = SymmetricRingElement::transfer(r, Torsion::INTEGERS);
    let norm = SymmetricRingElement::norm(r, Torsion::INTEGERS);
    while series.len() <= i {
        let k = series.len();
        let last = series.last().expect("series starts at e_0");
        let g = if k % 2 == 1 { &transfer } else { &norm };
        let image = last.act_by(g).expect("arity and torsion agree");
        series.push(contract(&image));
    }
    series[i].clone()
}

fn contract(x: &BarrattEcclesElement) -> BarrattEcclesElement {
    let r = x.arity().unwrap_or(1);
    let id = Permutation::identity(r);
    let module = x.module().map_terms(|k| {
        let mut vertices = Vec::with_capacity(k.vertices().len() + 1);
        vertices.push(id.clone());
        vertices.extend_from_slice(k.vertices());
        Simplex::new(vertices).ok().filter(|s| !s.is_degenerate()).map(|s| (s, 1))
    });
    BarrattEcclesElement::from_module(module).expect("contraction preserves arity")
}

/// `ψ_r(e_i)` in the surjection operad, Berger–Fresse convention.
pub fn psi_surj(r: usize, i: usize) -> SurjectionElement {
    psi_be(r, i).table_reduction()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainContext {
    Simplicial,
    Cubical,
}

impl ChainContext {
    pub fn name(self) -> &'static str {
        match self {
            ChainContext::Simplicial => "simplicial",
            ChainContext::Cubical => "cubical",
        }
    }
}

impl std::str::FromStr for ChainContext {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simplicial" => Ok(ChainContext::Simplicial),
            "cubical" => Ok(ChainContext::Cubical),
            other => Err(AlgebraError::InvalidRequest(format!("unknown context `{other}`"))),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Index `d` of the operation `D_d` representing `P_s` (or `βP_s`) on a
/// class of degree `q`.
pub fn steenrod_index(p: u64, s: i64, q: i64, bockstein: bool) -> Result<i64, AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::InvalidRequest(format!("{p} is not prime")));
    }
    if p == 2 {
        if bockstein {
            return Err(AlgebraError::InvalidRequest("the Bockstein variant needs an odd prime".into()));
        }
        return Ok(s - q);
    }
    let d = (2 * s - q) * (p as i64 - 1);
    Ok(if bockstein { d - 1 } else { d })
}

/// `ν(q) = (−1)^{q(q−1)m/2} (m!)^q mod p` with `m = (p − 1)/2`, as a residue
/// in `0..p`.
pub fn nu(p: u64, q: i64) -> Result<i64, AlgebraError> {
    if p == 2 || !is_prime(p) {
        return Err(AlgebraError::InvalidRequest(format!("ν needs an odd prime, got {p}")));
    }
    let m = (p - 1) / 2;
    let factorial = (1..=m).fold(1u64, |acc, k| acc * k % p);
    let base = if q < 0 { pow_mod(factorial, p - 2, p) } else { factorial };
    let value = pow_mod(base, q.unsigned_abs(), p);
    let exponent = (q as i128) * (q as i128 - 1) / 2 * m as i128;
    let signed = if exponent % 2 == 0 { value } else { (p - value) % p };
    Ok(signed as i64)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut out = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            out = out * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SteenrodRequest {
    pub prime: u64,
    pub s: i64,
    pub q: i64,
    pub bockstein: bool,
    pub context: ChainContext,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChainElement {
    Simplicial(SimplicialElement),
    Cubical(CubicalElement),
}

impl ChainElement {
    pub fn latex(&self) -> String {
        match self {
            ChainElement::Simplicial(e) => e.latex(),
            ChainElement::Cubical(e) => e.latex(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ChainElement::Simplicial(e) => e.is_zero(),
            ChainElement::Cubical(e) => e.is_zero(),
        }
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainElement::Simplicial(e) => write!(f, "{e}"),
            ChainElement::Cubical(e) => write!(f, "{e}"),
        }
    }
}

/// The chain `c · ψ_p(e_d)([0, …, m])` (or on `[01]^m`) restricted to terms
/// whose factors all have dimension `−q`, with coefficients mod `p`. Here
/// `m = −pq − d` and `c` is `(−1)^s ν(q)` at odd primes and 1 at `p = 2`.
pub fn steenrod_chain(req: &SteenrodRequest) -> Result<ChainElement, AlgebraError> {
    if req.q > 0 {
        return Err(AlgebraError::InvalidRequest(format!("the cochain degree q = {} must be non-positive", req.q)));
    }
    let p = req.prime;
    let d = steenrod_index(p, req.s, req.q, req.bockstein)?;
    let torsion = Torsion(p);
    let zero = match req.context {
        ChainContext::Simplicial => ChainElement::Simplicial(SimplicialElement::zero(torsion)),
        ChainContext::Cubical => ChainElement::Cubical(CubicalElement::zero(torsion)),
    };
    let m = -(p as i64) * req.q - d;
    if d < 0 || m < 0 {
        return Ok(zero);
    }
    let c = if p == 2 {
        1
    } else {
        let sign = if req.s % 2 == 0 { 1 } else { -1 };
        sign * nu(p, req.q)?
    };
    let psi = psi_surj(p as usize, d as usize).with_convention(Convention::McClureSmith);
    let dim = (-req.q) as usize;
    let keep = |dims: &[usize]| dims.iter().all(|&k| k == dim);
    Ok(match req.context {
        ChainContext::Simplicial => ChainElement::Simplicial(
            act_simplicial(&psi, m as usize).filter_dimensions(keep).scale(c).set_torsion(torsion),
        ),
        ChainContext::Cubical => {
            ChainElement::Cubical(act_cubical(&psi, m as usize).filter_dimensions(keep).scale(c).set_torsion(torsion))
        }
    })
}
