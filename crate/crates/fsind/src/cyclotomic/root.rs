use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::Serialize;

use super::CyclotomicInteger;
use crate::arith::gcd;

/// `exp(2 pi i * exponent / order)` kept in lowest terms, so `order` is the
/// multiplicative order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

/// `zeta_m^k`.
pub fn root(m: u64, k: i64) -> RootOfUnity {
    RootOfUnity::new(m, k)
}

impl RootOfUnity {
    pub fn new(m: u64, k: i64) -> Self {
        assert!(m >= 1, "root of unity of order 0");
        let e = k.rem_euclid(m as i64) as u64;
        let g = gcd(e, m);
        RootOfUnity {
            order: m / g,
            exponent: e / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn order(self) -> u64 {
        self.order
    }

    pub fn exponent(self) -> u64 {
        self.exponent
    }

    pub fn is_one(self) -> bool {
        self.order == 1
    }

    /// Exponent of `self` written over the denominator `m`; `m` must be a
    /// multiple of the order.
    pub fn exponent_over(self, m: u64) -> u64 {
        assert!(
            m.is_multiple_of(self.order),
            "{m} is not a multiple of {}",
            self.order
        );
        self.exponent * (m / self.order)
    }

    pub fn pow(self, k: i64) -> Self {
        let m = self.order as i128;
        let e = (self.exponent as i128 * k as i128).rem_euclid(m);
        RootOfUnity::new(self.order, e as i64)
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    pub fn to_cyclotomic(self) -> CyclotomicInteger {
        CyclotomicInteger::root_of_unity(self.order, self.exponent as i64)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(
            1.0,
            std::f64::consts::TAU * self.exponent as f64 / self.order as f64,
        )
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, o: RootOfUnity) -> RootOfUnity {
        let m = crate::arith::lcm(self.order, o.order);
        let e = self.exponent_over(m) + o.exponent_over(m);
        RootOfUnity::new(m, (e % m) as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root({}, {})", self.order, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        assert_eq!(root(12, 8), root(3, 2));
        assert_eq!(root(12, 8).order(), 3);
        assert_eq!(root(5, -1).exponent(), 4);
        assert!(root(7, 14).is_one());
        assert_eq!(root(4, 1) * root(4, 1), root(2, 1));
        assert_eq!(root(6, 1) * root(3, 1), root(2, 1));
        assert_eq!(root(9, 2).pow(-3), root(3, 1));
    }
}
