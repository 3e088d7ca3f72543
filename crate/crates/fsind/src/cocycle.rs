//! Normalized 3-cocycles `omega: Gamma^3 -> C^x` with values in a fixed
//! group of roots of unity `mu_M`.
//!
//! A cocycle stores exponents modulo its `modulus` `M`; the value at
//! `(g, h, k)` is `zeta_M^e`. Small groups get a dense table, larger ones keep
//! the generating function.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::lcm;
use crate::cyclotomic::RootOfUnity;
use crate::error::{invalid, Error, Result};
use crate::group::{FiniteGroup, GroupElement};

/// Groups with `|Gamma|^3` at most this many entries get a dense table.
pub const DENSE_LIMIT: usize = 1 << 21;

type ExpFn = Arc<dyn Fn(usize, usize, usize) -> u64 + Send + Sync>;

#[derive(Clone)]
enum Values {
    Dense(Arc<Vec<u32>>),
    Func(ExpFn),
}

#[derive(Clone)]
pub struct ThreeCocycle {
    group: Arc<FiniteGroup>,
    modulus: u64,
    values: Values,
    label: String,
}

impl fmt::Debug for ThreeCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ThreeCocycle")
            .field("label", &self.label)
            .field("group", &self.group.label())
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// How much of the cocycle identity to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every quadruple.
    Full,
    /// The given number of seeded random quadruples.
    Sampled(u64),
    /// Full for `|Gamma| <= 40`, otherwise `10^6` samples.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub quadruples_checked: u64,
    pub exhaustive: bool,
}

/// `omega~_n(g)`: zero unless `g^n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaTilde {
    Zero,
    Root(RootOfUnity),
}

impl ThreeCocycle {
    /// Wraps an exponent function; no checks are made (see [`ThreeCocycle::verify`]).
    pub fn from_fn<F>(group: Arc<FiniteGroup>, modulus: u64, f: F, label: impl Into<String>) -> Self
    where
        F: Fn(GroupElement, GroupElement, GroupElement) -> u64 + Send + Sync + 'static,
    {
        assert!(modulus >= 1, "modulus must be positive");
        let n = group.order();
        let values = if n.saturating_mul(n).saturating_mul(n) <= DENSE_LIMIT {
            let mut t = Vec::with_capacity(n * n * n);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        t.push(
                            (f(GroupElement(a), GroupElement(b), GroupElement(c)) % modulus) as u32,
                        );
                    }
                }
            }
            Values::Dense(Arc::new(t))
        } else {
            Values::Func(Arc::new(move |a, b, c| {
                f(GroupElement(a), GroupElement(b), GroupElement(c)) % modulus
            }))
        };
        ThreeCocycle {
            group,
            modulus,
            values,
            label: label.into(),
        }
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let label = format!("trivial on {}", group.label());
        ThreeCocycle::from_fn(group, 1, |_, _, _| 0, label)
    }

    /// `psi_n^r` on `Z_n`: `(j, k, l) -> zeta_n^(r j [k + l >= n])` with
    /// representatives in `0..n`.
    pub fn psi(n: usize, r: i64) -> Result<Self> {
        Self::psi_on(Arc::new(FiniteGroup::cyclic(n)?), r)
    }

    /// `psi^r` on a group that must be the standard cyclic group `Z_n`.
    pub fn psi_on(group: Arc<FiniteGroup>, r: i64) -> Result<Self> {
        let n = group.order();
        let standard = (0..n).all(|a| (0..n).all(|b| group.raw_mul(a, b) == (a + b) % n));
        if !standard {
            return Err(invalid(
                "psi needs the cyclic group Z_n with index arithmetic",
            ));
        }
        let m = n as u64;
        let r = r.rem_euclid(n as i64) as u64;
        Ok(ThreeCocycle::from_fn(
            group,
            m,
            move |j, k, l| {
                let carry = (k.0 + l.0 >= n) as u64;
                r * j.0 as u64 * carry % m
            },
            format!("psi_{n}^{r}"),
        ))
    }

    /// Parses `order M` followed by lines `g h k e`; unlisted triples are 0.
    pub fn parse(group: Arc<FiniteGroup>, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty cocycle file".into()))?;
        let modulus: u64 = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .filter(|&m| m >= 1)
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let n = group.order();
        let mut entries: HashMap<(usize, usize, usize), u64> = HashMap::new();
        for line in lines {
            let t: Vec<&str> = line.split_whitespace().collect();
            let nums: Vec<i64> = t
                .iter()
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Parse(format!("bad number {s:?}")))
                })
                .collect::<Result<_>>()?;
            let [g, h, k, e] = nums[..] else {
                return Err(Error::Parse(format!("expected `g h k e`, got {line:?}")));
            };
            let idx = |v: i64| {
                usize::try_from(v)
                    .ok()
                    .filter(|&v| v < n)
                    .ok_or_else(|| Error::Parse(format!("element {v} out of range")))
            };
            let key = (idx(g)?, idx(h)?, idx(k)?);
            let e = e.rem_euclid(modulus as i64) as u64;
            if entries.insert(key, e).is_some() {
                return Err(Error::Parse(format!("duplicate entry {key:?}")));
            }
        }
        Ok(ThreeCocycle::from_fn(
            group,
            modulus,
            move |a, b, c| entries.get(&(a.0, b.0, c.0)).copied().unwrap_or(0),
            "file",
        ))
    }

    pub fn from_file(group: Arc<FiniteGroup>, path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let c = Self::parse(group, &text)?;
        Ok(c.with_label(path.display().to_string()))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Common order `M` of the values.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub(crate) fn raw_exponent(&self, a: usize, b: usize, c: usize) -> u64 {
        match &self.values {
            Values::Dense(t) => {
                let n = self.group.order();
                t[(a * n + b) * n + c] as u64
            }
            Values::Func(f) => f(a, b, c),
        }
    }

    /// `e` with `omega(g, h, k) = zeta_M^e`, `0 <= e < M`.
    pub fn exponent(&self, g: GroupElement, h: GroupElement, k: GroupElement) -> u64 {
        self.raw_exponent(g.0, h.0, k.0)
    }

    pub fn value(&self, g: GroupElement, h: GroupElement, k: GroupElement) -> RootOfUnity {
        RootOfUnity::new(self.modulus, self.exponent(g, h, k) as i64)
    }

    /// The pointwise inverse (complex conjugate) cocycle.
    pub fn inverse(&self) -> Self {
        let me = self.clone();
        let m = self.modulus;
        ThreeCocycle::from_fn(
            self.group.clone(),
            m,
            move |a, b, c| (m - me.exponent(a, b, c)) % m,
            format!("inverse of {}", self.label),
        )
    }

    /// Checks normalization exhaustively and the cocycle identity
    /// `omega(h,k,l) omega(g,hk,l) omega(g,h,k) = omega(gh,k,l) omega(g,h,kl)`.
    pub fn verify(&self, mode: VerifyMode) -> Result<VerifyReport> {
        let g = &self.group;
        let n = g.order();
        let e = g.identity().0;
        for a in 0..n {
            for b in 0..n {
                for (x, y, z) in [(e, a, b), (a, e, b), (a, b, e)] {
                    if self.raw_exponent(x, y, z) != 0 {
                        return Err(Error::NotNormalized(x, y, z));
                    }
                }
            }
        }
        let m = self.modulus;
        let check = |a: usize, b: usize, c: usize, d: usize| -> Result<()> {
            let lhs = self.raw_exponent(b, c, d)
                + self.raw_exponent(a, g.raw_mul(b, c), d)
                + self.raw_exponent(a, b, c);
            let rhs =
                self.raw_exponent(g.raw_mul(a, b), c, d) + self.raw_exponent(a, b, g.raw_mul(c, d));
            if lhs % m != rhs % m {
                return Err(Error::CocycleViolation(a, b, c, d));
            }
            Ok(())
        };
        let full = match mode {
            VerifyMode::Full => true,
            VerifyMode::Sampled(_) => false,
            VerifyMode::Auto => n <= 40,
        };
        if full {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            check(a, b, c, d)?;
                        }
                    }
                }
            }
            Ok(VerifyReport {
                quadruples_checked: (n as u64).pow(4),
                exhaustive: true,
            })
        } else {
            let samples = match mode {
                VerifyMode::Sampled(s) => s,
                _ => 1_000_000,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(0xc0c7_c1e5);
            for _ in 0..samples {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
            Ok(VerifyReport {
                quadruples_checked: samples,
                exhaustive: false,
            })
        }
    }

    /// Exponent of `omega~_n(g) = prod_{k=1}^{n-1} omega(g, g^k, g)` over the
    /// modulus, or `None` when `g^n != 1`.
    pub fn omega_tilde_exponent(&self, n: usize, g: GroupElement) -> Option<u64> {
        assert!(n >= 1, "n must be positive");
        let grp = &self.group;
        let mut acc = 0u64;
        let mut pw = g.0;
        for _ in 1..n {
            acc += self.raw_exponent(g.0, pw, g.0);
            pw = grp.raw_mul(pw, g.0);
        }
        (pw == grp.identity().0).then_some(acc % self.modulus)
    }

    pub fn omega_tilde(&self, n: usize, g: GroupElement) -> OmegaTilde {
        match self.omega_tilde_exponent(n, g) {
            Some(e) => OmegaTilde::Root(RootOfUnity::new(self.modulus, e as i64)),
            None => OmegaTilde::Zero,
        }
    }

    /// Order of the class of `omega` restricted to `<g>`, computed as the
    /// multiplicative order of `omega~_{ord g}(g)`.
    pub fn cohomological_order_cyclic(&self, g: GroupElement) -> u64 {
        let o = self.group.element_order(g);
        let e = self.omega_tilde_exponent(o, g).expect("g^ord(g) = 1");
        RootOfUnity::new(self.modulus, e as i64).order()
    }

    /// `c(omega)`: lcm of the cohomological orders over all cyclic subgroups.
    /// One element per conjugacy class suffices.
    pub fn c_omega(&self) -> u64 {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|class| self.cohomological_order_cyclic(class[0]))
            .fold(1, lcm)
    }

    /// Restriction to a subgroup given by its elements. The subgroup is
    /// relabelled in ascending order of the parent indices.
    pub fn restrict(&self, subset: &[GroupElement]) -> Result<ThreeCocycle> {
        let parent = &self.group;
        let mut elems: Vec<GroupElement> = subset
            .iter()
            .copied()
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        elems.sort();
        if !parent.is_subgroup(&elems) {
            return Err(Error::NotASubgroup);
        }
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, g)| (g.0, i)).collect();
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for a in &elems {
            for b in &elems {
                table.push(pos[&parent.mul(*a, *b).0]);
            }
        }
        let sub = FiniteGroup::from_table(k, table, format!("subgroup of {}", parent.label()))?;
        let me = self.clone();
        let map: Vec<GroupElement> = elems.clone();
        Ok(ThreeCocycle::from_fn(
            Arc::new(sub),
            self.modulus,
            move |a, b, c| me.exponent(map[a.0], map[b.0], map[c.0]),
            format!("{} restricted", self.label),
        ))
    }

    /// Whether the cocycle is identically 1 (not merely cohomologous to 1).
    pub fn is_identically_trivial(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.raw_exponent(a, b, c) == 0)))
    }

    /// `omega_A x omega_B` on `A x B` (elements `(a, b)` at `a * |B| + b`).
    pub fn product(a: &ThreeCocycle, b: &ThreeCocycle) -> Result<ThreeCocycle> {
        let group = Arc::new(FiniteGroup::direct_product(&a.group, &b.group)?);
        let m = lcm(a.modulus, b.modulus);
        let (sa, sb) = (m / a.modulus, m / b.modulus);
        let nb = b.group.order();
        let (ca, cb) = (a.clone(), b.clone());
        Ok(ThreeCocycle::from_fn(
            group,
            m,
            move |x, y, z| {
                let ea = ca.raw_exponent(x.0 / nb, y.0 / nb, z.0 / nb);
                let eb = cb.raw_exponent(x.0 % nb, y.0 % nb, z.0 % nb);
                ea * sa + eb * sb
            },
            format!("({}) x ({})", a.label, b.label),
        ))
    }
}
