//! Independent floating-point oracle for the dimension-27 table: builds
//! `H_27(xi, zeta)` from its presentation (basis `e_ij x^a`), takes the
//! normalized integral `Lambda = (1/3) e_00 (1 + x + x^2)`, forms its
//! Sweedler powers and traces them on the regular representation.

use num_complex::Complex64;

use fsind::indicator::table27;

const N: usize = 3;
const D: usize = N * N * N;

fn idx(i: usize, j: usize, a: usize) -> usize {
    (i * N + j) * N + a
}

fn unit(k: u64) -> Complex64 {
    Complex64::from_polar(
        1.0,
        2.0 * std::f64::consts::PI * (k % N as u64) as f64 / N as f64,
    )
}

struct Hopf {
    /// `basis[p] * basis[q] = coef * basis[r]`, or zero.
    mul: Vec<Option<(Complex64, usize)>>,
    /// `Delta(basis[p])` as a dense `D x D` tensor.
    delta: Vec<Vec<Complex64>>,
}

impl Hopf {
    fn new(xi: u64, zeta: u64) -> Self {
        let mut mul = vec![None; D * D];
        for (i, j, a) in triples() {
            for (k, l, b) in triples() {
                // x^a e_kl = e_{k - a l, l} x^a.
                if j != l || i != (k + N * N - a * l % N) % N {
                    continue;
                }
                let (c, s) = if a + b >= N {
                    (unit(xi * j as u64), a + b - N)
                } else {
                    (Complex64::new(1.0, 0.0), a + b)
                };
                mul[idx(i, j, a) * D + idx(k, l, b)] = Some((c, idx(i, j, s)));
            }
        }
        let mut h = Hopf {
            mul,
            delta: Vec::new(),
        };
        let mut delta_x = vec![Complex64::new(0.0, 0.0); D * D];
        for (p, q, _) in triples().filter(|t| t.2 == 0) {
            for (r, s, _) in triples().filter(|t| t.2 == 0) {
                delta_x[idx(p, q, 1) * D + idx(r, s, 1)] += unit(zeta * (q * r) as u64);
            }
        }
        let mut one_one = vec![Complex64::new(0.0, 0.0); D * D];
        for (i, j, _) in triples().filter(|t| t.2 == 0) {
            for (k, l, _) in triples().filter(|t| t.2 == 0) {
                one_one[idx(i, j, 0) * D + idx(k, l, 0)] = Complex64::new(1.0, 0.0);
            }
        }
        let mut x_powers = vec![one_one];
        for a in 1..N {
            let next = h.tensor_mul(&x_powers[a - 1], &delta_x);
            x_powers.push(next);
        }
        let mut delta = vec![Vec::new(); D];
        for (i, j, a) in triples() {
            let mut de = vec![Complex64::new(0.0, 0.0); D * D];
            for p in 0..N {
                for q in 0..N {
                    de[idx((i + N - p) % N, (j + N - q) % N, 0) * D + idx(p, q, 0)] =
                        Complex64::new(1.0, 0.0);
                }
            }
            delta[idx(i, j, a)] = h.tensor_mul(&de, &x_powers[a]);
        }
        h.delta = delta;
        h
    }

    fn mul_vec(&self, u: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); D];
        for (p, &cu) in u.iter().enumerate().filter(|(_, c)| c.norm() > 0.0) {
            for (q, &cv) in v.iter().enumerate().filter(|(_, c)| c.norm() > 0.0) {
                if let Some((c, r)) = self.mul[p * D + q] {
                    out[r] += cu * cv * c;
                }
            }
        }
        out
    }

    fn tensor_mul(&self, s: &[Complex64], t: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); D * D];
        for (st, &cs) in s.iter().enumerate().filter(|(_, c)| c.norm() > 1e-12) {
            for (tt, &ct) in t.iter().enumerate().filter(|(_, c)| c.norm() > 1e-12) {
                let (Some((c1, r1)), Some((c2, r2))) = (
                    self.mul[(st / D) * D + tt / D],
                    self.mul[(st % D) * D + tt % D],
                ) else {
                    continue;
                };
                out[r1 * D + r2] += cs * ct * c1 * c2;
            }
        }
        out
    }

    /// Trace of left multiplication by `h` on `H`.
    fn regular_trace(&self, h: &[Complex64]) -> Complex64 {
        let mut tr = Complex64::new(0.0, 0.0);
        for k in 0..D {
            let mut e = vec![Complex64::new(0.0, 0.0); D];
            e[k] = Complex64::new(1.0, 0.0);
            tr += self.mul_vec(h, &e)[k];
        }
        tr
    }

    /// `nu_n = trace(Lambda^[n])` for `n = 1..=max`, with
    /// `P_1 = id` and `P_n(b) = sum b_1 P_{n-1}(b_2)` on basis elements.
    fn indicators(&self, max: usize) -> Vec<Complex64> {
        let third = Complex64::new(1.0 / 3.0, 0.0);
        let lambda: Vec<Complex64> = (0..D)
            .map(|k| {
                if k / N == 0 {
                    third
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        let basis = |k: usize| {
            let mut e = vec![Complex64::new(0.0, 0.0); D];
            e[k] = Complex64::new(1.0, 0.0);
            e
        };
        let mut p: Vec<Vec<Complex64>> = (0..D).map(basis).collect();
        let mut out = Vec::new();
        for n in 1..=max {
            if n > 1 {
                p = (0..D)
                    .map(|k| {
                        let mut acc = vec![Complex64::new(0.0, 0.0); D];
                        for (t, &c) in self.delta[k]
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| c.norm() > 1e-12)
                        {
                            let term = self.mul_vec(&basis(t / D), &p[t % D]);
                            for (a, v) in acc.iter_mut().zip(term) {
                                *a += c * v;
                            }
                        }
                        acc
                    })
                    .collect();
            }
            let mut power = vec![Complex64::new(0.0, 0.0); D];
            for (k, &c) in lambda.iter().enumerate().filter(|(_, c)| c.norm() > 0.0) {
                for (a, v) in power.iter_mut().zip(&p[k]) {
                    *a += c * v;
                }
            }
            out.push(self.regular_trace(&power));
        }
        out
    }
}

fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..N).flat_map(|i| (0..N).flat_map(move |j| (0..N).map(move |a| (i, j, a))))
}

#[test]
fn integral_is_normalized_and_two_sided() {
    let h = Hopf::new(1, 1);
    let lambda: Vec<Complex64> = (0..D)
        .map(|k| {
            if k / N == 0 {
                Complex64::new(1.0 / 3.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    for k in 0..D {
        let mut e = vec![Complex64::new(0.0, 0.0); D];
        e[k] = Complex64::new(1.0, 0.0);
        // counit: e_ij -> delta_{ij,00}, x -> 1.
        let eps = if k / N == 0 { 1.0 } else { 0.0 };
        for (side, prod) in [
            ("left", h.mul_vec(&e, &lambda)),
            ("right", h.mul_vec(&lambda, &e)),
        ] {
            for (a, b) in prod.iter().zip(&lambda) {
                assert!(
                    (a - b * eps).norm() < 1e-12,
                    "{side} integral fails at basis {k}"
                );
            }
        }
    }
}

#[test]
fn hopf_oracle_reproduces_table27() {
    let rows = table27().unwrap();
    for row in rows {
        let h = Hopf::new(row.xi_exp as u64, row.zeta_exp as u64);
        let oracle = h.indicators(27);
        for (n, v) in &row.values {
            let (re, im) = v.approx();
            let o = oracle[*n as usize - 1];
            assert!(
                (o.re - re).abs() < 1e-8 && (o.im - im).abs() < 1e-8,
                "{} nu_{n}: oracle {o} vs exact {v}",
                row.label
            );
        }
        assert!((oracle[0].re - 1.0).abs() < 1e-9);
    }
}
