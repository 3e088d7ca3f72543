//! Cyclotomic polynomials and the reduction kernels behind the canonical form.
//!
//! Kernels are generic over [`Scalar`] so the hot path can run in checked
//! `i128` and fall back to `BigInt` when a coefficient overflows.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{divisors, euler_phi, factorize, mod_inverse};

pub(crate) struct CycloPoly {
    pub degree: usize,
    /// Non-leading nonzero terms `(power, coefficient)`.
    pub terms: Vec<(usize, i64)>,
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CycloPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycloPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of `Phi_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<i64> {
    let p = phi_poly(m);
    let mut out = vec![0i64; p.degree + 1];
    out[p.degree] = 1;
    for &(j, c) in &p.terms {
        out[j] = c;
    }
    out
}

pub(crate) fn phi_poly(m: u64) -> Arc<CycloPoly> {
    assert!(m >= 1);
    if let Some(p) = cache().read().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i128; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let den = phi_poly(d);
        num = div_monic(&num, &den);
    }
    let degree = num.len() - 1;
    debug_assert_eq!(degree as u64, euler_phi(m));
    let terms = num[..degree]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| {
            (
                j,
                i64::try_from(c).expect("cyclotomic coefficient fits i64"),
            )
        })
        .collect();
    let poly = Arc::new(CycloPoly { degree, terms });
    cache().write().unwrap().insert(m, poly.clone());
    poly
}

fn div_monic(num: &[i128], den: &CycloPoly) -> Vec<i128> {
    let n = num.len() - 1;
    let d = den.degree;
    let mut rem = num.to_vec();
    let mut quo = vec![0i128; n - d + 1];
    for i in (d..=n).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quo[i - d] = c;
        rem[i] = 0;
        for &(j, p) in &den.terms {
            rem[i - d + j] -= c * p as i128;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact division");
    quo
}

pub(crate) trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    /// `self += c * k`, `None` on overflow.
    fn add_mul(&mut self, c: &Self, k: i64) -> Option<()>;
    fn add_assign(&mut self, c: &Self) -> Option<()>;
    fn mul(&self, o: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn add_mul(&mut self, c: &Self, k: i64) -> Option<()> {
        *self = self.checked_add(c.checked_mul(k as i128)?)?;
        Some(())
    }
    fn add_assign(&mut self, c: &Self) -> Option<()> {
        *self = self.checked_add(*c)?;
        Some(())
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_mul(&mut self, c: &Self, k: i64) -> Option<()> {
        *self += c * k;
        Some(())
    }
    fn add_assign(&mut self, c: &Self) -> Option<()> {
        *self += c;
        Some(())
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
}

pub(crate) fn to_small(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(|c| c.to_i128()).collect()
}

pub(crate) fn to_big(v: Vec<i128>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

/// Reduces a polynomial in `zeta_m` (any length, exponents read mod `m`)
/// to power-basis coordinates of length `phi(m)`.
pub(crate) fn reduce<T: Scalar>(m: u64, v: Vec<T>) -> Option<Vec<T>> {
    let m_us = m as usize;
    let mut v = fold(m_us, v)?;
    let phi = phi_poly(m);
    let deg = phi.degree;
    for i in (deg..m_us).rev() {
        if v[i].is_nil() {
            continue;
        }
        let c = std::mem::replace(&mut v[i], T::nil());
        for &(j, p) in &phi.terms {
            v[i - deg + j].add_mul(&c, -p)?;
        }
    }
    v.truncate(deg);
    Some(v)
}

fn fold<T: Scalar>(m: usize, mut v: Vec<T>) -> Option<Vec<T>> {
    if v.len() > m {
        let tail = v.split_off(m);
        for (i, c) in tail.into_iter().enumerate() {
            v[i % m].add_assign(&c)?;
        }
    }
    v.resize(m, T::nil());
    Some(v)
}

/// Tries to rewrite reduced coordinates at conductor `m` as coordinates at
/// `m / p`. Outer `None` is overflow, inner `None` means not in the subfield.
fn strip_prime<T: Scalar>(m: u64, p: u64, c: &[T]) -> Option<Option<Vec<T>>> {
    let pu = p as usize;
    if (m / p).is_multiple_of(p) {
        if c.iter()
            .enumerate()
            .any(|(i, x)| i % pu != 0 && !x.is_nil())
        {
            return Some(None);
        }
        return Some(Some(c.iter().step_by(pu).cloned().collect()));
    }
    let d = m / p;
    let du = d as usize;
    let p_inv = mod_inverse(p % d, d).expect("coprime");
    let d_inv = mod_inverse(d % p, p).expect("coprime");
    // zeta_m^i = zeta_d^a zeta_p^b with a = i p^-1 mod d, b = i d^-1 mod p.
    let mut w: Vec<Vec<T>> = vec![vec![T::nil(); du]; pu];
    for (i, x) in c.iter().enumerate() {
        if x.is_nil() {
            continue;
        }
        let i = i as u64;
        let a = (i % d * p_inv % d) as usize;
        let b = (i % p * d_inv % p) as usize;
        w[b][a].add_assign(x)?;
    }
    let top = w.pop().expect("p >= 2");
    for row in w.iter_mut() {
        for (x, t) in row.iter_mut().zip(&top) {
            x.add_mul(t, -1)?;
        }
    }
    let mut rows = w.into_iter();
    let base = reduce(d, rows.next().expect("p >= 2"))?;
    for row in rows {
        if !reduce(d, row)?.iter().all(T::is_nil) {
            return Some(None);
        }
    }
    Some(Some(base))
}

/// Canonical form of a polynomial in `zeta_m`: the minimal conductor and
/// reduced coordinates there.
pub(crate) fn canonicalize<T: Scalar>(m: u64, v: Vec<T>) -> Option<(u64, Vec<T>)> {
    let mut c = reduce(m, v)?;
    if c.iter().all(T::is_nil) {
        return Some((1, vec![T::nil()]));
    }
    let mut m = m;
    'outer: loop {
        for (p, _) in factorize(m) {
            if let Some(next) = strip_prime(m, p, &c)? {
                m /= p;
                c = next;
                continue 'outer;
            }
        }
        break;
    }
    Some((m, c))
}
