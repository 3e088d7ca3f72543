//! Quadratic Gauss sums `S(a, m) = sum_{i mod m} zeta_m^(a i^2)` and square
//! roots of integers inside cyclotomic fields.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::CyclotomicInteger;
use crate::arith::{factorize, gcd, is_prime};
use crate::error::{invalid, Result};

/// Jacobi symbol `(a | n)` for odd positive `n`.
pub fn jacobi_symbol(a: i64, n: u64) -> Result<i32> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(invalid(format!(
            "Jacobi symbol needs odd positive modulus, got {n}"
        )));
    }
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}

/// Direct evaluation of the defining sum.
pub fn gauss_sum_direct(a: i64, m: u64) -> Result<CyclotomicInteger> {
    if m == 0 {
        return Err(invalid("Gauss sum modulus must be positive"));
    }
    let a = a.rem_euclid(m as i64) as u128;
    let mut counts = vec![0i64; m as usize];
    for i in 0..m as u128 {
        counts[(a * i * i % m as u128) as usize] += 1;
    }
    Ok(CyclotomicInteger::from_exponent_counts(m, &counts))
}

/// Closed form: reduce `a` mod `m`, pull out `gcd(a, m)`, then use the
/// classical evaluation in the coprime case.
pub fn gauss_sum_closed(a: i64, m: u64) -> Result<CyclotomicInteger> {
    if m == 0 {
        return Err(invalid("Gauss sum modulus must be positive"));
    }
    let a = a.rem_euclid(m as i64) as u64;
    let d = gcd(a, m);
    let (a, m) = (a / d, m / d);
    let scale = BigInt::from(d);
    let i = CyclotomicInteger::root_of_unity(4, 1);
    let one = CyclotomicInteger::one();
    let core = if m == 1 {
        one
    } else if m % 2 == 1 {
        let eps = if m % 4 == 1 { one } else { i };
        let chi = jacobi_symbol(a as i64, m)?;
        (&sqrt_int(m)? * &eps).scale(&BigInt::from(chi))
    } else if m % 4 == 0 {
        let eps = if a % 4 == 1 { &one + &i } else { &one - &i };
        let chi = jacobi_symbol(m as i64, a)?;
        (&sqrt_int(m)? * &eps).scale(&BigInt::from(chi))
    } else {
        CyclotomicInteger::zero()
    };
    Ok(core.scale(&scale))
}

fn sqrt_prime(p: u64) -> CyclotomicInteger {
    static CACHE: OnceLock<Mutex<HashMap<u64, CyclotomicInteger>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&p) {
        return v.clone();
    }
    let v = if p == 2 {
        CyclotomicInteger::root_of_unity(8, 1) + CyclotomicInteger::root_of_unity(8, -1)
    } else {
        let s = gauss_sum_direct(1, p).expect("p > 0");
        if p % 4 == 1 {
            s
        } else {
            &s * &CyclotomicInteger::root_of_unity(4, -1)
        }
    };
    cache.lock().unwrap().insert(p, v.clone());
    v
}

/// The positive square root of `m` as a cyclotomic integer.
pub fn sqrt_int(m: u64) -> Result<CyclotomicInteger> {
    if m == 0 {
        return Ok(CyclotomicInteger::zero());
    }
    let mut out = CyclotomicInteger::one();
    let mut square_part = BigInt::from(1);
    for (p, e) in factorize(m) {
        square_part *= BigInt::from(p).pow(e / 2);
        if e % 2 == 1 {
            out = &out * &sqrt_prime(p);
        }
    }
    Ok(out.scale(&square_part))
}

/// Whether `x` is divisible by `n / sqrt(p)` in the cyclotomic integers,
/// i.e. whether `x * sqrt(p) / n` is integral. Needs `p` prime dividing `n`.
pub fn divisible_by_n_over_sqrt_p(x: &CyclotomicInteger, n: u64, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    if n == 0 || !n.is_multiple_of(p) {
        return Err(invalid(format!("{p} does not divide {n}")));
    }
    Ok((x * &sqrt_prime(p)).is_divisible_by_integer(&BigInt::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn legendre_oracle(a: i64, p: u64) -> i32 {
        let a = a.rem_euclid(p as i64) as u64;
        if a == 0 {
            0
        } else if (1..p).any(|x| x * x % p == a) {
            1
        } else {
            -1
        }
    }

    #[test]
    fn jacobi_matches_legendre_products() {
        assert_eq!(jacobi_symbol(2, 15).unwrap(), 1);
        assert!(jacobi_symbol(3, 10).is_err());
        for n in (1..80u64).step_by(2) {
            for a in -20..40i64 {
                let want: i32 = factorize(n)
                    .iter()
                    .map(|&(p, e)| legendre_oracle(a, p).pow(e))
                    .product();
                assert_eq!(jacobi_symbol(a, n).unwrap(), want, "({a}|{n})");
            }
        }
    }

    #[test]
    fn small_gauss_sums() {
        let i = CyclotomicInteger::root_of_unity(4, 1);
        assert_eq!(
            gauss_sum_direct(1, 4).unwrap(),
            (CyclotomicInteger::one() + &i).scale(&BigInt::from(2))
        );
        let b = CyclotomicInteger::root_of_unity(3, 1);
        assert_eq!(
            gauss_sum_direct(1, 3).unwrap(),
            CyclotomicInteger::one() + b.scale(&BigInt::from(2))
        );
        assert_eq!(
            gauss_sum_closed(1, 4).unwrap(),
            gauss_sum_direct(1, 4).unwrap()
        );
        assert_eq!(
            gauss_sum_closed(0, 7).unwrap(),
            CyclotomicInteger::from_int(7)
        );
        assert_eq!(
            gauss_sum_closed(5, 10).unwrap(),
            gauss_sum_direct(5, 10).unwrap()
        );
    }

    #[test]
    fn square_roots_square() {
        for m in 1..60u64 {
            let r = sqrt_int(m).unwrap();
            assert_eq!(&r * &r, CyclotomicInteger::from_int(m as i64), "m={m}");
            assert!(r.to_complex().re > 0.0);
        }
    }

    #[test]
    fn sqrt_p_divisibility() {
        let s5 = sqrt_int(5).unwrap();
        assert!(divisible_by_n_over_sqrt_p(&s5, 5, 5).unwrap());
        assert!(!s5.is_divisible_by_integer(&BigInt::from(5)));
        assert!(divisible_by_n_over_sqrt_p(&s5, 10, 4).is_err());
        assert!(divisible_by_n_over_sqrt_p(&s5, 6, 5).is_err());
    }
}
