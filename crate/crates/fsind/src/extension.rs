//! Matched pairs of groups, bicrossed products and the 3-cocycle attached to
//! an abelian extension `C^G #_{sigma,tau} CF`.
//!
//! The bicrossed product `F ⋈ G` multiplies pairs by
//! `(x, g)(y, h) = (x (g ▷ y), (g ◁ y) h)` and stores `(x, g)` at index
//! `x * |G| + g`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{binomial, lcm};
use crate::cocycle::{ThreeCocycle, VerifyMode};
use crate::error::{invalid, Error, Result};
use crate::group::{FiniteGroup, GroupElement};

#[derive(Clone)]
pub struct MatchedPair {
    f: Arc<FiniteGroup>,
    g: Arc<FiniteGroup>,
    /// `g ◁ x` at `g * |F| + x`.
    right: Arc<Vec<u32>>,
    /// `g ▷ x` at `g * |F| + x`.
    left: Arc<Vec<u32>>,
}

impl fmt::Debug for MatchedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatchedPair({} ⋈ {})", self.f.label(), self.g.label())
    }
}

impl MatchedPair {
    /// `right(g, x) = g ◁ x` in `G`, `left(g, x) = g ▷ x` in `F`.
    pub fn new<R, L>(f: FiniteGroup, g: FiniteGroup, right: R, left: L) -> Result<Self>
    where
        R: Fn(GroupElement, GroupElement) -> GroupElement,
        L: Fn(GroupElement, GroupElement) -> GroupElement,
    {
        let (nf, ng) = (f.order(), g.order());
        let mut rt = Vec::with_capacity(nf * ng);
        let mut lt = Vec::with_capacity(nf * ng);
        for a in g.elements() {
            for x in f.elements() {
                let (r, l) = (right(a, x), left(a, x));
                if r.0 >= ng || l.0 >= nf {
                    return Err(Error::InvalidMatchedPair(format!(
                        "action out of range at ({a}, {x})"
                    )));
                }
                rt.push(r.0 as u32);
                lt.push(l.0 as u32);
            }
        }
        let pair = MatchedPair {
            f: Arc::new(f),
            g: Arc::new(g),
            right: Arc::new(rt),
            left: Arc::new(lt),
        };
        pair.check_units()?;
        Ok(pair)
    }

    /// Both actions trivial; the bicrossed product is `F x G`.
    pub fn trivial(f: FiniteGroup, g: FiniteGroup) -> Result<Self> {
        Self::new(f, g, |a, _| a, |_, x| x)
    }

    fn check_units(&self) -> Result<()> {
        let (e_f, e_g) = (self.f.identity(), self.g.identity());
        for x in self.f.elements() {
            if self.left(e_g, x) != x || self.right(e_g, x) != e_g {
                return Err(Error::InvalidMatchedPair(format!(
                    "identity of G acts badly on {x}"
                )));
            }
        }
        for a in self.g.elements() {
            if self.right(a, e_f) != a || self.left(a, e_f) != e_f {
                return Err(Error::InvalidMatchedPair(format!(
                    "{a} acts badly on the identity of F"
                )));
            }
        }
        Ok(())
    }

    pub fn f(&self) -> &Arc<FiniteGroup> {
        &self.f
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    /// `g ◁ x`.
    #[inline]
    pub fn right(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        GroupElement(self.right[g.0 * self.f.order() + x.0] as usize)
    }

    /// `g ▷ x`.
    #[inline]
    pub fn left(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        GroupElement(self.left[g.0 * self.f.order() + x.0] as usize)
    }

    /// Index of `(x, g)` in the bicrossed product.
    pub fn join(&self, x: GroupElement, g: GroupElement) -> GroupElement {
        GroupElement(x.0 * self.g.order() + g.0)
    }

    pub fn split(&self, e: GroupElement) -> (GroupElement, GroupElement) {
        let ng = self.g.order();
        (GroupElement(e.0 / ng), GroupElement(e.0 % ng))
    }

    fn product(
        &self,
        a: (GroupElement, GroupElement),
        b: (GroupElement, GroupElement),
    ) -> (GroupElement, GroupElement) {
        let ((x, g), (y, h)) = (a, b);
        (
            self.f.mul(x, self.left(g, y)),
            self.g.mul(self.right(g, y), h),
        )
    }
}

/// `F ⋈ G`; fails when the actions do not give an associative product.
pub fn bicrossed_product(pair: &MatchedPair) -> Result<FiniteGroup> {
    let p = pair.clone();
    let identity = pair.join(pair.f.identity(), pair.g.identity()).0;
    let label = format!("{}⋈{}", pair.f.label(), pair.g.label());
    FiniteGroup::from_fn(
        pair.f.order() * pair.g.order(),
        identity,
        move |a, b| {
            let (x, g) = p.product(p.split(GroupElement(a)), p.split(GroupElement(b)));
            p.join(x, g).0
        },
        label,
    )
    .map_err(|e| Error::InvalidMatchedPair(format!("bicrossed product is not a group: {e}")))
}

/// `(x_n, g_n) = (x, g)^n` in `F ⋈ G`, from `x_{k+1} = x (g ▷ x_k)` and
/// `g_{k+1} = (g ◁ x_k) g_k`.
pub fn power_iteration(
    pair: &MatchedPair,
    x: GroupElement,
    g: GroupElement,
    n: usize,
) -> (GroupElement, GroupElement) {
    let (mut xn, mut gn) = (pair.f.identity(), pair.g.identity());
    for _ in 0..n {
        let next_x = pair.f.mul(x, pair.left(g, xn));
        let next_g = pair.g.mul(pair.right(g, xn), gn);
        xn = next_x;
        gn = next_g;
    }
    (xn, gn)
}

type SigmaFn = Arc<dyn Fn(GroupElement, GroupElement, GroupElement) -> u64 + Send + Sync>;

/// A matched pair with normalized maps `sigma: G x F x F -> mu_M` and
/// `tau: G x G x F -> mu_M`, given as exponents over `modulus`.
#[derive(Clone)]
pub struct ExtensionData {
    pair: MatchedPair,
    modulus: u64,
    sigma: SigmaFn,
    tau: SigmaFn,
    label: String,
}

impl fmt::Debug for ExtensionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtensionData")
            .field("label", &self.label)
            .field("pair", &self.pair)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl ExtensionData {
    /// `sigma(g, x, y)` and `tau(g, h, x)` return exponents of `zeta_modulus`.
    pub fn new<S, T>(
        pair: MatchedPair,
        modulus: u64,
        sigma: S,
        tau: T,
        label: impl Into<String>,
    ) -> Result<Self>
    where
        S: Fn(GroupElement, GroupElement, GroupElement) -> u64 + Send + Sync + 'static,
        T: Fn(GroupElement, GroupElement, GroupElement) -> u64 + Send + Sync + 'static,
    {
        if modulus == 0 {
            return Err(invalid("modulus must be positive"));
        }
        let data = ExtensionData {
            pair,
            modulus,
            sigma: Arc::new(sigma),
            tau: Arc::new(tau),
            label: label.into(),
        };
        data.check_normalized()?;
        Ok(data)
    }

    /// Trivial `sigma` and `tau`.
    pub fn trivial(pair: MatchedPair, label: impl Into<String>) -> Self {
        ExtensionData {
            pair,
            modulus: 1,
            sigma: Arc::new(|_, _, _| 0),
            tau: Arc::new(|_, _, _| 0),
            label: label.into(),
        }
    }

    fn check_normalized(&self) -> Result<()> {
        let (f, g) = (&self.pair.f, &self.pair.g);
        let (ef, eg) = (f.identity(), g.identity());
        let m = self.modulus;
        for a in g.elements() {
            for x in f.elements() {
                for s in [(eg, a, x), (a, eg, x)] {
                    if !(self.tau)(s.0, s.1, s.2).is_multiple_of(m) {
                        return Err(invalid(format!(
                            "tau not normalized at ({}, {}; {})",
                            s.0, s.1, s.2
                        )));
                    }
                }
                for s in [(a, ef, x), (a, x, ef)] {
                    if !(self.sigma)(s.0, s.1, s.2).is_multiple_of(m) {
                        return Err(invalid(format!(
                            "sigma not normalized at ({}; {}, {})",
                            s.0, s.1, s.2
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn sigma(&self, g: GroupElement, x: GroupElement, y: GroupElement) -> u64 {
        (self.sigma)(g, x, y) % self.modulus
    }

    pub fn tau(&self, g: GroupElement, h: GroupElement, x: GroupElement) -> u64 {
        (self.tau)(g, h, x) % self.modulus
    }
}

/// `(Gamma, omega)` for a group-theoretical category; the indicators only
/// depend on this pair.
#[derive(Clone, Debug)]
pub struct GTCategory {
    omega: ThreeCocycle,
    label: String,
}

impl GTCategory {
    pub fn new(omega: ThreeCocycle, label: impl Into<String>) -> Self {
        GTCategory {
            omega,
            label: label.into(),
        }
    }

    /// `Vec_omega(Gamma)` after checking the cocycle.
    pub fn pointed(omega: ThreeCocycle, mode: VerifyMode) -> Result<Self> {
        omega.verify(mode)?;
        let label = omega.label().to_string();
        Ok(GTCategory { omega, label })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.omega.group()
    }

    pub fn omega(&self) -> &ThreeCocycle {
        &self.omega
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// `omega(X, Y, Z) = sigma(X_G; Y_F, Y_G ▷ Z_F) tau(X_G ◁ Y_F, Y_G; Z_F)` on
/// `F ⋈ G`, verified to be a normalized 3-cocycle.
pub fn omega_from_extension(data: &ExtensionData) -> Result<GTCategory> {
    omega_from_extension_with(data, VerifyMode::Auto)
}

pub fn omega_from_extension_with(data: &ExtensionData, mode: VerifyMode) -> Result<GTCategory> {
    let group = Arc::new(bicrossed_product(&data.pair)?.with_label(data.label.clone()));
    let d = data.clone();
    let omega = ThreeCocycle::from_fn(
        group,
        data.modulus,
        move |a, b, c| {
            let p = &d.pair;
            let (_, ag) = p.split(a);
            let (bf, bg) = p.split(b);
            let (cf, _) = p.split(c);
            d.sigma(ag, bf, p.left(bg, cf)) + d.tau(p.right(ag, bf), bg, cf)
        },
        data.label.clone(),
    );
    omega.verify(mode)?;
    Ok(GTCategory::new(omega, data.label.clone()))
}

/// Random matched-pair axiom check used in tests and by the pair-file loader.
pub fn check_matched_pair_axioms(pair: &MatchedPair, samples: usize, seed: u64) -> Result<()> {
    let (f, g) = (&pair.f, &pair.g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (a, b) = (
            GroupElement(rng.gen_range(0..g.order())),
            GroupElement(rng.gen_range(0..g.order())),
        );
        let (x, y) = (
            GroupElement(rng.gen_range(0..f.order())),
            GroupElement(rng.gen_range(0..f.order())),
        );
        let ok = pair.left(a, f.mul(x, y))
            == f.mul(pair.left(a, x), pair.left(pair.right(a, x), y))
            && pair.right(g.mul(a, b), x)
                == g.mul(pair.right(a, pair.left(b, x)), pair.right(b, x));
        if !ok {
            return Err(Error::InvalidMatchedPair(format!(
                "axioms fail at g={a}, h={b}, x={x}, y={y}"
            )));
        }
    }
    Ok(())
}

/// `F = Z_2` acting on `G = Z_N x Z_N` by swapping coordinates, with
/// `sigma((i,j); a, b) = xi^(ij)` if `a = b = 1` and
/// `tau((i,j),(k,l); a) = xi^(jk)` if `a = 1`, `xi = zeta_N^xi_exp`.
pub fn family_h2n2(n: usize, xi_exp: i64) -> Result<ExtensionData> {
    if n < 1 {
        return Err(invalid("h2n2 needs N >= 1"));
    }
    let zn = FiniteGroup::cyclic(n)?;
    let g = FiniteGroup::direct_product(&zn, &zn)?;
    let f = FiniteGroup::cyclic(2)?;
    let pair = MatchedPair::new(
        f,
        g,
        move |ij, a| {
            if a.0 == 1 {
                GroupElement((ij.0 % n) * n + ij.0 / n)
            } else {
                ij
            }
        },
        |_, a| a,
    )?;
    let m = n as u64;
    let xe = xi_exp.rem_euclid(n as i64) as u64;
    ExtensionData::new(
        pair,
        m,
        move |ij, a, b| {
            if a.0 == 1 && b.0 == 1 {
                let (i, j) = ((ij.0 / n) as u64, (ij.0 % n) as u64);
                xe * i * j
            } else {
                0
            }
        },
        move |ij, kl, a| {
            if a.0 == 1 {
                let (j, k) = ((ij.0 % n) as u64, (kl.0 / n) as u64);
                xe * j * k
            } else {
                0
            }
        },
        format!("H_{}({})", 2 * n * n, root_label(n as u64, xe)),
    )
}

/// `F = Z_N` acting on `G = Z_N x Z_N` by `(i, j) ◁ a = (i + a j, j)`,
/// `sigma = 1`, and
/// `tau((i,j),(k,l); a) = (lambda_{j+l} / (lambda_j lambda_l))^a zeta^(a jk + C(a,2) jl)`
/// with `lambda = zeta_{N^2}^(-xi_exp)`.
pub fn family_hn3(n: usize, xi_exp: i64, zeta_exp: i64) -> Result<ExtensionData> {
    family_hn3_with_lambda(n, xi_exp, zeta_exp, 0)
}

/// As [`family_hn3`] with `lambda = zeta_{N^2}^(-xi_exp + N t)`, any of the
/// `N` roots of `xi^-1`.
pub fn family_hn3_with_lambda(
    n: usize,
    xi_exp: i64,
    zeta_exp: i64,
    t: i64,
) -> Result<ExtensionData> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid(format!("hN3 needs odd N >= 3, got {n}")));
    }
    let zn = FiniteGroup::cyclic(n)?;
    let g = FiniteGroup::direct_product(&zn, &zn)?;
    let f = FiniteGroup::cyclic(n)?;
    let pair = MatchedPair::new(
        f,
        g,
        move |ij, a| {
            let (i, j) = (ij.0 / n, ij.0 % n);
            GroupElement(((i + a.0 * j) % n) * n + j)
        },
        |_, a| a,
    )?;
    let nn = n as i64;
    let m = (n * n) as u64;
    let lam = (-xi_exp + nn * t).rem_euclid(nn * nn) as u64;
    let ze = zeta_exp.rem_euclid(nn) as u64;
    let xe = xi_exp.rem_euclid(nn) as u64;
    let nu = n as u64;
    ExtensionData::new(
        pair,
        m,
        |_, _, _| 0,
        move |ij, kl, a| {
            let (j, k, l) = ((ij.0 % n) as u64, (kl.0 / n) as u64, (kl.0 % n) as u64);
            let a = a.0 as u64;
            // lambda_{j+l} / (lambda_j lambda_l) with representatives in 0..N.
            let diff = ((j + l) % nu + m - j - l) % m;
            let lam_part = lam * diff % m * a % m;
            let zeta_part = ze * ((a * j * k + binomial(a, 2) as u64 * j * l) % nu) % nu * nu;
            lam_part + zeta_part
        },
        format!(
            "H_{}({},{})",
            n * n * n,
            root_label(nu, xe),
            root_label(nu, ze)
        ),
    )
}

fn root_label(m: u64, e: u64) -> String {
    format!("z{m}^{e}")
}

fn dihedral_bar(l: usize, x: usize) -> usize {
    if x == 0 {
        0
    } else {
        2 * l - x
    }
}

fn suzuki_check(l: usize, beta: i64) -> Result<()> {
    if l < 2 {
        return Err(invalid(format!("Suzuki families need L >= 2, got {l}")));
    }
    if beta != 1 && beta != -1 {
        return Err(invalid(format!("beta must be +1 or -1, got {beta}")));
    }
    Ok(())
}

/// `Gamma_{NL}`: `Z_{2N} = <b>` acting on `D_{2L}` by `b ▷ x = x̄`
/// (`l(x̄) = 2L - l(x)`), with `sigma` from the `alpha, beta` data and `tau = 1`.
/// Needs `(N, alpha) != (even, +1)` and `L >= 2`.
pub fn family_suzuki_cyclic(n: usize, l: usize, alpha: i64, beta: i64) -> Result<GTCategory> {
    family_suzuki_cyclic_with_eta(n, l, alpha, beta, 0)
}

/// As [`family_suzuki_cyclic`] with `eta = zeta_{4L}^([beta = -1] + 2t)`.
pub fn family_suzuki_cyclic_with_eta(
    n: usize,
    l: usize,
    alpha: i64,
    beta: i64,
    t: i64,
) -> Result<GTCategory> {
    suzuki_check(l, beta)?;
    if alpha != 1 && alpha != -1 {
        return Err(invalid(format!("alpha must be +1 or -1, got {alpha}")));
    }
    if n < 1 {
        return Err(invalid("Suzuki families need N >= 1"));
    }
    if n.is_multiple_of(2) && alpha == 1 {
        return Err(invalid(
            "(N even, alpha = +1) belongs to the non-cyclic family",
        ));
    }
    let g = FiniteGroup::cyclic(2 * n)?;
    let f = FiniteGroup::dihedral(2 * l)?;
    let pair = MatchedPair::new(
        f,
        g,
        |b, _| b,
        move |b, x| {
            GroupElement(if b.0 % 2 == 1 {
                dihedral_bar(l, x.0)
            } else {
                x.0
            })
        },
    )?;
    let (l4, n2) = ((4 * l) as u64, (2 * n) as u64);
    let m = lcm(l4, n2);
    let eta = ((beta == -1) as i64 + 2 * t).rem_euclid(l4 as i64) as u64;
    // -alpha zeta_{2N} = zeta_{2N}^(1 + N [alpha = 1]).
    let base = 1 + n as u64 * (alpha == 1) as u64;
    let data = ExtensionData::new(
        pair,
        m,
        move |b, x, y| {
            if x.0 % 2 == 0 {
                return 0;
            }
            let i = b.0 as u64;
            let (ly, lodd) = (y.0 as u64, y.0 % 2 == 1);
            let mut e = 0;
            if i % 2 == 1 {
                e += eta * 2 * ly * (m / l4);
            }
            if lodd {
                e += base * i % n2 * (m / n2);
            }
            e
        },
        |_, _, _| 0,
        format!("Gamma_{n},{l}(alpha={alpha},beta={beta})"),
    )?;
    omega_from_extension(&data)
}

/// `Gamma'_{NL}`: `Z_N x Z_2 = <a> x <b>` acting on `D_{2L}` with `a` trivial
/// and `b ▷ x = x̄`; `N` even, `alpha = +1`.
pub fn family_suzuki_noncyclic(n: usize, l: usize, beta: i64) -> Result<GTCategory> {
    family_suzuki_noncyclic_with_eta(n, l, beta, 0)
}

pub fn family_suzuki_noncyclic_with_eta(
    n: usize,
    l: usize,
    beta: i64,
    t: i64,
) -> Result<GTCategory> {
    suzuki_check(l, beta)?;
    if n == 0 || n % 2 == 1 {
        return Err(invalid(format!(
            "the non-cyclic Suzuki family needs even N, got {n}"
        )));
    }
    let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(n)?, &FiniteGroup::cyclic(2)?)?;
    let f = FiniteGroup::dihedral(2 * l)?;
    let pair = MatchedPair::new(
        f,
        g,
        |ab, _| ab,
        move |ab, x| {
            GroupElement(if ab.0 % 2 == 1 {
                dihedral_bar(l, x.0)
            } else {
                x.0
            })
        },
    )?;
    let (l4, n2) = ((4 * l) as u64, (2 * n) as u64);
    let m = lcm(l4, n2);
    let eta = ((beta == -1) as i64 + 2 * t).rem_euclid(l4 as i64) as u64;
    let data = ExtensionData::new(
        pair,
        m,
        move |ab, x, y| {
            if x.0 % 2 == 0 {
                return 0;
            }
            let (i, j) = ((ab.0 / 2) as u64, (ab.0 % 2) as u64);
            let (ly, lodd) = (y.0 as u64, y.0 % 2 == 1);
            let mut e = 0;
            if j == 1 {
                e += eta * 2 * ly * (m / l4);
            }
            if lodd {
                // (-1)^j zeta_N^i = zeta_{2N}^(N j + 2 i)
                e += (n as u64 * j + 2 * i) * (m / n2);
            }
            e
        },
        |_, _, _| 0,
        format!("Gamma'_{n},{l}(beta={beta})"),
    )?;
    omega_from_extension(&data)
}

/// Bismash product `C^G # CF`: trivial `sigma`, `tau`, so trivial `omega`.
pub fn family_bismash(pair: &MatchedPair) -> Result<GTCategory> {
    let label = format!("bismash {}⋈{}", pair.f.label(), pair.g.label());
    omega_from_extension(&ExtensionData::trivial(pair.clone(), label))
}
