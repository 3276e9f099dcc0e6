//! Exact split-octonion arithmetic.
//!
//! Built by three Cayley-Dickson doublings with unit parameter, starting from
//! the rationals: rationals, split complexes, split quaternions, split
//! octonions. The resulting 8-dimensional algebra is a composition algebra
//! over the rationals whose norm form `N` is isotropic, so it has nonzero
//! null vectors; over the complex numbers it is the unique octonion algebra.
//! Everything is `BigRational`, no tolerances anywhere.

use std::fmt;

use num_traits::Zero;

use crate::ratmat::{self, Rat};

/// An octonion in the Cayley-Dickson basis, 8 exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion(pub [Rat; 8]);

impl Octonion {
    pub fn zero() -> Octonion {
        Octonion(std::array::from_fn(|_| Rat::zero()))
    }

    pub fn one() -> Octonion {
        let mut o = Octonion::zero();
        o.0[0] = ratmat::rat(1);
        o
    }

    pub fn from_i64(coords: [i64; 8]) -> Octonion {
        Octonion(std::array::from_fn(|k| ratmat::rat(coords[k])))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

// Cayley-Dickson doubling with parameter +1 (split at every stage):
// (a, b)(c, d) = (ac + conj(d) b, d a + b conj(c)).
fn cd_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len();
    if n == 1 {
        return vec![&a[0] * &b[0]];
    }
    let h = n / 2;
    let (a1, a2) = a.split_at(h);
    let (c1, c2) = b.split_at(h);
    let mut out = cd_mul(a1, c1);
    let t = cd_mul(&cd_conj(c2), a2);
    for k in 0..h {
        out[k] = &out[k] + &t[k];
    }
    let mut lo = cd_mul(c2, a1);
    let t = cd_mul(a2, &cd_conj(c1));
    for k in 0..h {
        lo[k] = &lo[k] + &t[k];
    }
    out.extend(lo);
    out
}

fn cd_conj(a: &[Rat]) -> Vec<Rat> {
    let n = a.len();
    if n == 1 {
        return vec![a[0].clone()];
    }
    let h = n / 2;
    let mut out = cd_conj(&a[..h]);
    out.extend(a[h..].iter().map(|c| -c));
    out
}

pub fn oct_mul(a: &Octonion, b: &Octonion) -> Octonion {
    let v = cd_mul(&a.0, &b.0);
    Octonion(std::array::from_fn(|k| v[k].clone()))
}

pub fn oct_conj(a: &Octonion) -> Octonion {
    let v = cd_conj(&a.0);
    Octonion(std::array::from_fn(|k| v[k].clone()))
}

/// The norm form: `N(a) = a conj(a)`, a scalar. For the split parameters
/// this is `x0^2 - x1^2 - x2^2 + x3^2 - x4^2 + x5^2 + x6^2 - x7^2`-style
/// signature (4,4); the defining property is `N(ab) = N(a) N(b)`.
pub fn oct_norm(a: &Octonion) -> Rat {
    let p = oct_mul(a, &oct_conj(a));
    debug_assert!(p.0[1..].iter().all(|c| c.is_zero()), "a conj(a) is scalar");
    p.0[0].clone()
}

/// Matrix of left multiplication `x -> a x` in the standard basis.
pub fn left_mul_matrix(a: &Octonion) -> Vec<Vec<Rat>> {
    let mut cols = Vec::with_capacity(8);
    for k in 0..8 {
        let mut e = Octonion::zero();
        e.0[k] = ratmat::rat(1);
        cols.push(oct_mul(a, &e));
    }
    (0..8)
        .map(|row| (0..8).map(|col| cols[col].0[row].clone()).collect())
        .collect()
}

/// Rank of left multiplication by `a` (4 for nonzero null `a`, 8 otherwise).
pub fn left_mul_rank(a: &Octonion) -> usize {
    ratmat::rank(&left_mul_matrix(a))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Undefined;

impl fmt::Display for Undefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quadric point undefined: all components vanish")
    }
}

impl std::error::Error for Undefined {}

/// The point `[N(z1) : z1 conj(z2) : N(z2)]` of the 8-dimensional quadric
/// `t u = N(z)` inside the 10-dimensional space `C + O + C`.
pub fn quadric_point(z1: &Octonion, z2: &Octonion) -> Result<[Rat; 10], Undefined> {
    let t = oct_norm(z1);
    let mid = oct_mul(z1, &oct_conj(z2));
    let u = oct_norm(z2);
    if t.is_zero() && u.is_zero() && mid.is_zero() {
        return Err(Undefined);
    }
    let mut out: [Rat; 10] = std::array::from_fn(|_| Rat::zero());
    out[0] = t;
    for k in 0..8 {
        out[k + 1] = mid.0[k].clone();
    }
    out[9] = u;
    Ok(out)
}
