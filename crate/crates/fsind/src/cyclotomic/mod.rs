//! Exact arithmetic in cyclotomic integers.
//!
//! Every [`CyclotomicInteger`] is stored in canonical form: the smallest
//! conductor `M` whose field contains it, and its integer coordinates in the
//! power basis `1, z, ..., z^(phi(M)-1)` of `Z[zeta_M]`. Two values are equal
//! exactly when their canonical forms are, so `==` and hashing are structural.

mod gauss;
mod poly;
mod root;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

pub use gauss::{
    divisible_by_n_over_sqrt_p, gauss_sum_closed, gauss_sum_direct, jacobi_symbol, sqrt_int,
};
pub use poly::cyclotomic_polynomial;
pub use root::{root, RootOfUnity};

use crate::arith::lcm;
use crate::error::{invalid, Result};
use poly::{canonicalize, to_big, to_small, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicInteger {
    conductor: u64,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInteger {
    pub fn zero() -> Self {
        CyclotomicInteger {
            conductor: 1,
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        CyclotomicInteger {
            conductor: 1,
            coeffs: vec![n.into()],
        }
    }

    /// `zeta_m^k`.
    pub fn root_of_unity(m: u64, k: i64) -> Self {
        assert!(m >= 1, "root of unity of order 0");
        let mut v = vec![0i128; m as usize];
        v[k.rem_euclid(m as i64) as usize] = 1;
        Self::from_small(m, v)
    }

    /// `sum_k counts[k] * zeta_m^k`; indices are read modulo `m`.
    pub fn from_exponent_counts(m: u64, counts: &[i64]) -> Self {
        assert!(m >= 1, "conductor 0");
        Self::from_small(m, counts.iter().map(|&c| c as i128).collect())
    }

    /// `sum_k coeffs[k] * zeta_m^k` with arbitrary integer coefficients.
    pub fn from_coefficients(m: u64, coeffs: Vec<BigInt>) -> Self {
        assert!(m >= 1, "conductor 0");
        match to_small(&coeffs) {
            Some(v) => Self::from_small(m, v),
            None => Self::from_big(m, coeffs),
        }
    }

    fn from_small(m: u64, v: Vec<i128>) -> Self {
        match canonicalize(m, v.clone()) {
            Some((c, coeffs)) => CyclotomicInteger {
                conductor: c,
                coeffs: to_big(coeffs),
            },
            None => Self::from_big(m, to_big(v)),
        }
    }

    fn from_big(m: u64, v: Vec<BigInt>) -> Self {
        let (conductor, coeffs) = canonicalize(m, v).expect("BigInt arithmetic cannot overflow");
        CyclotomicInteger { conductor, coeffs }
    }

    /// Minimal conductor; never congruent to 2 mod 4.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates at the minimal conductor.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<&BigInt> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    pub fn to_complex(&self) -> Complex64 {
        let m = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let t = std::f64::consts::TAU * k as f64 / m;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), t)
            })
            .sum()
    }

    /// Re-expresses the value at a multiple `l` of its conductor, unreduced.
    fn embed_small(&self, l: u64) -> Option<Vec<(usize, i128)>> {
        let step = (l / self.conductor) as usize;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c.to_i128().map(|c| (k * step, c)))
            .collect()
    }

    fn embed_big(&self, l: u64) -> Vec<(usize, BigInt)> {
        let step = (l / self.conductor) as usize;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k * step, c.clone()))
            .collect()
    }

    fn combine(&self, other: &Self, op: Op) -> Self {
        let l = lcm(self.conductor, other.conductor);
        if let (Some(a), Some(b)) = (self.embed_small(l), other.embed_small(l)) {
            if let Some((c, v)) = combine_impl(l, &a, &b, op) {
                return CyclotomicInteger {
                    conductor: c,
                    coeffs: to_big(v),
                };
            }
        }
        let (a, b) = (self.embed_big(l), other.embed_big(l));
        let (conductor, coeffs) = combine_impl(l, &a, &b, op).expect("BigInt cannot overflow");
        CyclotomicInteger { conductor, coeffs }
    }

    /// Applies the Galois automorphism `zeta -> zeta^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let m = self.conductor;
        let k = k.rem_euclid(m as i64) as usize;
        let mut v = vec![BigInt::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * k % m as usize] += c;
        }
        Self::from_coefficients(m, v)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        CyclotomicInteger {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * n).collect(),
        }
    }

    pub fn mul_root(&self, z: RootOfUnity) -> Self {
        self * &z.to_cyclotomic()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Whether `self / n` is again a cyclotomic integer. `Z[zeta_M]` is the
    /// full ring of integers of its field, so this is coordinatewise.
    pub fn is_divisible_by_integer(&self, n: &BigInt) -> bool {
        if n.is_zero() {
            return self.is_zero();
        }
        self.coeffs.iter().all(|c| c.is_multiple_of(n))
    }

    pub fn div_exact_integer(&self, n: &BigInt) -> Result<Self> {
        if n.is_zero() || !self.is_divisible_by_integer(n) {
            return Err(invalid(format!("{self} is not divisible by {n}")));
        }
        Ok(CyclotomicInteger {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c / n).collect(),
        })
    }

    /// Complex approximation with rounding noise below 1e-9 snapped to zero,
    /// so that renderings stay byte-stable.
    pub fn approx(&self) -> (f64, f64) {
        let z = self.to_complex();
        let snap = |x: f64| if x.abs() < 1e-9 { 0.0 } else { x };
        (snap(z.re), snap(z.im))
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
}

fn combine_impl<T: Scalar>(
    l: u64,
    a: &[(usize, T)],
    b: &[(usize, T)],
    op: Op,
) -> Option<(u64, Vec<T>)> {
    let lu = l as usize;
    let mut v = vec![T::nil(); lu];
    match op {
        Op::Add | Op::Sub => {
            for (k, c) in a {
                v[*k].add_assign(c)?;
            }
            let sign = if matches!(op, Op::Sub) { -1 } else { 1 };
            for (k, c) in b {
                v[*k].add_mul(c, sign)?;
            }
        }
        Op::Mul => {
            for (i, x) in a {
                for (j, y) in b {
                    v[(i + j) % lu].add_assign(&x.mul(y)?)?;
                }
            }
        }
    }
    canonicalize(l, v)
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&CyclotomicInteger> for &CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $method(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
                self.combine(rhs, $op)
            }
        }
        impl $tr<CyclotomicInteger> for CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $method(self, rhs: CyclotomicInteger) -> CyclotomicInteger {
                self.combine(&rhs, $op)
            }
        }
        impl $tr<&CyclotomicInteger> for CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $method(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
                self.combine(rhs, $op)
            }
        }
        impl $tr<CyclotomicInteger> for &CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $method(self, rhs: CyclotomicInteger) -> CyclotomicInteger {
                self.combine(&rhs, $op)
            }
        }
    };
}

binop!(Add, add, Op::Add);
binop!(Sub, sub, Op::Sub);
binop!(Mul, mul, Op::Mul);

impl Neg for CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(mut self) -> CyclotomicInteger {
        self.coeffs.iter_mut().for_each(|c| *c = -&*c);
        self
    }
}

impl Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(self) -> CyclotomicInteger {
        -self.clone()
    }
}

impl Sum for CyclotomicInteger {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl From<i64> for CyclotomicInteger {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<RootOfUnity> for CyclotomicInteger {
    fn from(z: RootOfUnity) -> Self {
        z.to_cyclotomic()
    }
}

/// Integers print plainly; otherwise a signed sum of `c*z{M}^k` terms with
/// ascending powers and zero terms omitted.
impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = format!("{}*z{}^{}", c.abs(), self.conductor, k);
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{term}")?,
                (true, true) => write!(f, "-{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Serializes as `{"conductor": M, "coeffs": [...], "approx": {"re", "im"}}`.
/// Coefficients outside the `i64` range are written as decimal strings.
impl Serialize for CyclotomicInteger {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Approx {
            re: f64,
            im: f64,
        }
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        let coeffs: Vec<Coeff> = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .map_or_else(|| Coeff::Big(c.to_string()), Coeff::Small)
            })
            .collect();
        let (re, im) = self.approx();
        let mut st = s.serialize_struct("CyclotomicInteger", 3)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("approx", &Approx { re, im })?;
        st.end()
    }
}

impl Default for CyclotomicInteger {
    fn default() -> Self {
        Self::zero()
    }
}

impl One for CyclotomicInteger {
    fn one() -> Self {
        CyclotomicInteger::one()
    }
}
