//! Indicator engines: the brute-force sum over `Gamma[n]`, closed forms for
//! the built-in families, and the Frobenius divisibility analysis.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binomial, divisors, gcd, is_prime, valuation};
use crate::cocycle::ThreeCocycle;
use crate::cyclotomic::{divisible_by_n_over_sqrt_p, sqrt_int, CyclotomicInteger};
use crate::error::{invalid, Error, Result};
use crate::extension::{family_hn3, omega_from_extension, GTCategory};
use crate::group::FiniteGroup;

/// `nu_n = sum over g with g^n = 1 of prod_{k=1}^{n-1} omega(g, g^k, g)`.
///
/// Exponents are tallied modulo the cocycle's modulus in machine integers and
/// converted to a cyclotomic integer once at the end.
pub fn nu_brute(omega: &ThreeCocycle, n: usize) -> CyclotomicInteger {
    assert!(n >= 1, "n must be positive");
    let group = omega.group();
    let m = omega.modulus();
    let torsion = group.torsion(n);
    let counts = torsion
        .par_iter()
        .fold(
            || vec![0i64; m as usize],
            |mut acc, &g| {
                // g^k has period ord(g), and omega(g, 1, g) = 1, so the
                // product over k < n is the one over k < ord(g), n/ord(g) times.
                let o = group.element_order(g);
                let e = omega.omega_tilde_exponent(o, g).expect("g^ord(g) = 1");
                acc[((e as u128 * (n / o) as u128) % m as u128) as usize] += 1;
                acc
            },
        )
        .reduce(
            || vec![0i64; m as usize],
            |mut a, b| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                a
            },
        );
    CyclotomicInteger::from_exponent_counts(m, &counts)
}

pub fn nu(cat: &GTCategory, n: usize) -> CyclotomicInteger {
    nu_brute(cat.omega(), n)
}

/// `|{g : g^n = 1}|`.
pub fn nu_group_algebra(g: &FiniteGroup, n: usize) -> CyclotomicInteger {
    CyclotomicInteger::from_int(g.torsion(n).len() as i64)
}

fn b2(n: u64) -> u32 {
    valuation(2, n)
}

fn b3(n: u64) -> u32 {
    valuation(3, n)
}

fn root_order(m: u64, e: i64) -> u64 {
    m / gcd(e.rem_euclid(m as i64) as u64, m)
}

/// Closed form for `H_{2N^2}(xi)`, `xi = zeta_N^xi_exp`.
pub fn nu_h2n2_closed(big_n: u64, xi_exp: i64, n: u64) -> Result<CyclotomicInteger> {
    if big_n < 1 || n < 1 {
        return Err(invalid("h2n2 closed form needs N, n >= 1"));
    }
    let d = gcd(big_n, n);
    let ord_xi = root_order(big_n, xi_exp);
    let special =
        n % 2 == 1 || (b2(big_n) == b2(ord_xi) && b2(n) == b2(big_n) + 1 && b2(big_n) >= 1);
    let v = if special {
        d * d
    } else {
        d * d + big_n * gcd(big_n, n / 2)
    };
    Ok(CyclotomicInteger::from_int(v as i64))
}

/// Closed form for the display cocycle of `H_{N^3}(xi, zeta)`.
pub fn nu_hn3_closed(big_n: u64, xi_exp: i64, zeta_exp: i64, n: u64) -> Result<CyclotomicInteger> {
    if big_n < 3 || big_n.is_multiple_of(2) {
        return Err(invalid(format!(
            "hN3 closed form needs odd N >= 3, got {big_n}"
        )));
    }
    if n < 1 {
        return Err(invalid("n must be positive"));
    }
    let nn = big_n as u128;
    let d = gcd(big_n, n) as u128;
    let e1 = (nn * n as u128 / (d * d)) % nn;
    let e2 = binomial(n, 3) % nn * ((nn.pow(4) / d.pow(4)) % nn) % nn;
    let xe = xi_exp.rem_euclid(big_n as i64) as u128;
    let ze = zeta_exp.rem_euclid(big_n as i64) as u128;
    let ord_alpha = root_order(big_n, (xe * e1 % nn) as i64) as u128;
    let (ord_xi, ord_zeta) = (root_order(big_n, xi_exp), root_order(big_n, zeta_exp));
    let d3 = BigInt::from(d.pow(3));
    let special = b3(n) >= 1 && b3(n) == b3(big_n) && b3(n) == b3(ord_zeta) && b3(ord_xi) <= 1;
    if !special {
        let v = CyclotomicInteger::from_int(d3);
        return v.div_exact_integer(&BigInt::from(ord_alpha));
    }
    let beta = CyclotomicInteger::root_of_unity(big_n, (ze * e2 % nn) as i64);
    let core = if b3(ord_xi) == 0 {
        CyclotomicInteger::from_int(5) + beta.scale(&BigInt::from(4))
    } else {
        (CyclotomicInteger::from_int(5) - beta.scale(&BigInt::from(2))).scale(&BigInt::from(3))
    };
    core.scale(&d3)
        .div_exact_integer(&BigInt::from(9 * ord_alpha))
}

fn iv(b: bool) -> i64 {
    b as i64
}

fn pm(base: i64, e: bool) -> i64 {
    if e {
        base
    } else {
        1
    }
}

/// Closed form for the cyclic Suzuki family.
pub fn nu_suzuki_cyclic_closed(big_n: u64, l: u64, alpha: i64, beta: i64, n: u64) -> Result<i64> {
    if big_n < 1 || l < 2 || n < 1 || alpha.abs() != 1 || beta.abs() != 1 {
        return Err(invalid("Suzuki closed form parameters out of range"));
    }
    if big_n.is_multiple_of(2) && alpha == 1 {
        return Err(invalid("(N even, alpha = +1) is not in the cyclic family"));
    }
    let (gn, gl) = (gcd(big_n, n) as i64, gcd(l, n) as i64);
    let (bn, bbig, bl) = (b2(n) as i64, b2(big_n) as i64, b2(l) as i64);
    let mut v = gn * gl;
    if bn > bbig {
        v += 2 * l as i64 * gn;
    }
    if bn > bbig && bn > bl {
        let eps = pm(-alpha, bn == 1) * pm(-1, bn == bbig + 1) * pm(beta, bn == bl + 1);
        v += eps * gn * gl;
    }
    Ok(v)
}

/// Closed form for the non-cyclic Suzuki family (`N` even).
pub fn nu_suzuki_noncyclic_closed(big_n: u64, l: u64, beta: i64, n: u64) -> Result<i64> {
    if big_n < 2 || big_n % 2 == 1 || l < 2 || n < 1 || beta.abs() != 1 {
        return Err(invalid(
            "non-cyclic Suzuki closed form needs even N, L >= 2, beta = +-1",
        ));
    }
    let (gn, gl) = (gcd(big_n, n) as i64, gcd(l, n) as i64);
    let (bn, bbig, bl) = (b2(n) as i64, b2(big_n) as i64, b2(l) as i64);
    let li = l as i64;
    let mut v = gn * gl + iv(bn >= 1) * li * gn + iv(bn > bbig) * li * gn;
    if bn > bbig && bn > bl {
        v += pm(-1, bn == 1) * pm(beta, bn - 1 == bl) * gn * gl;
    }
    Ok(v)
}

/// `nu_n(Z(C)) = |nu_n(C)|^2`.
pub fn nu_center(value: &CyclotomicInteger) -> CyclotomicInteger {
    value * &value.conj()
}

/// `nu_n(C ⊠ D) = nu_n(C) nu_n(D)`.
pub fn nu_product(a: &CyclotomicInteger, b: &CyclotomicInteger) -> CyclotomicInteger {
    a * b
}

/// `nu_2` of a Tambara-Yamagami category: `|A[2]| + sign * sqrt(|A|)`.
pub fn nu2_tambara_yamagami(a: &FiniteGroup, sign: i64) -> Result<CyclotomicInteger> {
    if !a.is_abelian() {
        return Err(invalid("Tambara-Yamagami data needs an abelian group"));
    }
    if sign.abs() != 1 {
        return Err(invalid("sign must be +1 or -1"));
    }
    let root = sqrt_int(a.order() as u64)?;
    Ok(CyclotomicInteger::from_int(a.torsion(2).len() as i64) + root.scale(&BigInt::from(sign)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    ClosedForm(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorReport {
    pub label: String,
    pub n: u64,
    pub value: CyclotomicInteger,
    pub method: Method,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Brute-force indicators with timing.
pub fn report_brute(cat: &GTCategory, ns: &[u64]) -> Vec<IndicatorReport> {
    ns.iter()
        .map(|&n| {
            let t = Instant::now();
            let value = nu(cat, n as usize);
            IndicatorReport {
                label: cat.label().to_string(),
                n,
                value,
                method: Method::Brute,
                elapsed: t.elapsed(),
            }
        })
        .collect()
}

/// What the prime-gcd refinement says about one divisor `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GcdCase {
    /// `gcd(n, c(omega))` is 1 or 2: divisibility by `n` is expected.
    Small { gcd: u64 },
    /// An odd prime `p`: divisibility by `n / sqrt(p)` is expected.
    OddPrime {
        p: u64,
        divisible_by_n_over_sqrt_p: bool,
    },
    /// Composite: no prediction.
    Inapplicable { gcd: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusEntry {
    pub n: u64,
    pub value: CyclotomicInteger,
    pub divisible_by_n: bool,
    pub gcd_case: GcdCase,
}

impl FrobeniusEntry {
    /// Whether the prediction from `gcd(n, c(omega))` holds.
    pub fn refined_bound_holds(&self) -> bool {
        match self.gcd_case {
            GcdCase::Small { .. } => self.divisible_by_n,
            GcdCase::OddPrime {
                divisible_by_n_over_sqrt_p,
                ..
            } => divisible_by_n_over_sqrt_p,
            GcdCase::Inapplicable { .. } => true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub label: String,
    pub dimension: u64,
    pub c_omega: u64,
    pub entries: Vec<FrobeniusEntry>,
    /// `n | nu_n` for every divisor `n` of the dimension.
    pub verdict: bool,
}

impl FrobeniusReport {
    pub fn refined_bound_holds(&self) -> bool {
        self.entries.iter().all(FrobeniusEntry::refined_bound_holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FrobeniusEntry> {
        self.entries.iter().filter(|e| !e.divisible_by_n)
    }
}

/// Tests `n | nu_n` for every divisor `n` of `|Gamma|`.
pub fn frobenius_check(cat: &GTCategory) -> FrobeniusReport {
    let dim = cat.group().order() as u64;
    let c = cat.omega().c_omega();
    let entries: Vec<FrobeniusEntry> = divisors(dim)
        .into_iter()
        .map(|n| {
            let value = nu(cat, n as usize);
            let divisible_by_n = value.is_divisible_by_integer(&BigInt::from(n));
            let g = gcd(n, c);
            let gcd_case = if g <= 2 {
                GcdCase::Small { gcd: g }
            } else if is_prime(g) {
                GcdCase::OddPrime {
                    p: g,
                    divisible_by_n_over_sqrt_p: divisible_by_n_over_sqrt_p(&value, n, g)
                        .expect("g is a prime dividing n"),
                }
            } else {
                GcdCase::Inapplicable { gcd: g }
            };
            FrobeniusEntry {
                n,
                value,
                divisible_by_n,
                gcd_case,
            }
        })
        .collect();
    let verdict = entries.iter().all(|e| e.divisible_by_n);
    FrobeniusReport {
        label: cat.label().to_string(),
        dimension: dim,
        c_omega: c,
        entries,
        verdict,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table27Row {
    pub label: String,
    pub xi_exp: i64,
    pub zeta_exp: i64,
    /// `(n, nu_n)` for `n = 1, 3, 9, 27`.
    pub values: Vec<(u64, CyclotomicInteger)>,
}

/// Indicators of the regular representations of the six `H_27(xi, zeta)`,
/// `xi in {1, beta}`, `zeta in {1, beta, beta^2}`, `beta = zeta_3`.
///
/// `Rep(H_27(xi, zeta))` is `Vec` on the bicrossed product with the inverse of
/// the family cocycle, so each value is the conjugate of the family closed
/// form; both routes are evaluated and must agree.
pub fn table27() -> Result<Vec<Table27Row>> {
    let mut rows = Vec::new();
    for ze in 0..3i64 {
        for xe in 0..2i64 {
            let cat = omega_from_extension(&family_hn3(3, xe, ze)?)?;
            let inv = cat.omega().inverse();
            let mut values = Vec::new();
            for n in [1u64, 3, 9, 27] {
                let brute = nu_brute(&inv, n as usize);
                let closed = nu_hn3_closed(3, xe, ze, n)?.conj();
                if brute != closed {
                    return Err(Error::Mismatch(format!(
                        "H_27 row ({xe},{ze}) n={n}: brute {brute} vs closed {closed}"
                    )));
                }
                values.push((n, brute));
            }
            rows.push(Table27Row {
                label: format!("H_27({},{})", beta_power(xe), beta_power(ze)),
                xi_exp: xe,
                zeta_exp: ze,
                values,
            });
        }
    }
    Ok(rows)
}

fn beta_power(e: i64) -> &'static str {
    match e.rem_euclid(3) {
        0 => "1",
        1 => "β",
        _ => "β²",
    }
}

/// Renders an element of `Z[beta]`, `beta = zeta_3`, as `g(a+bβ)` or
/// `g(a+bβ²)` with `b >= 0`. Returns `None` outside `Z[beta]`.
pub fn format_beta(v: &CyclotomicInteger) -> Option<String> {
    let (a, b) = match v.conductor() {
        1 => return Some(v.coeffs()[0].to_string()),
        3 => (v.coeffs()[0].clone(), v.coeffs()[1].clone()),
        _ => return None,
    };
    // a + bβ = (a - b) - bβ².
    let (a, b, sym) = if b >= BigInt::from(0) {
        (a, b, "β")
    } else {
        (&a - &b, -b, "β²")
    };
    let g = num_integer::Integer::gcd(&a, &b);
    let (a, b) = (&a / &g, &b / &g);
    let inner = if b == BigInt::from(1) {
        format!("{a}+{sym}")
    } else {
        format!("{a}+{b}{sym}")
    };
    Some(if g == BigInt::from(1) {
        inner
    } else {
        format!("{g}({inner})")
    })
}
