//! Finite groups given by multiplication tables or multiplication functions.
//!
//! Elements are the indices `0..order`. Groups of order at most
//! [`TABLE_LIMIT`] keep a full multiplication table; larger groups keep the
//! supplied multiplication function and compute derived data on demand.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};

/// Largest order for which a multiplication table is materialized.
pub const TABLE_LIMIT: usize = 4096;

/// An element of a [`FiniteGroup`], identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub usize);

impl GroupElement {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How thoroughly the group axioms are checked on construction.
#[derive(Clone, Copy, Debug)]
pub struct AxiomCheck {
    /// Orders up to this bound get an exhaustive associativity check.
    pub full_bound: usize,
    /// Number of random triples tested above `full_bound`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for AxiomCheck {
    fn default() -> Self {
        AxiomCheck {
            full_bound: 256,
            samples: 100_000,
            seed: 0x0005_eed0_f9e0_u64,
        }
    }
}

impl AxiomCheck {
    /// Always check every triple.
    pub fn exhaustive() -> Self {
        AxiomCheck {
            full_bound: usize::MAX,
            ..Self::default()
        }
    }
}

type MulFn = Arc<dyn Fn(usize, usize) -> usize + Send + Sync>;

#[derive(Clone)]
enum Law {
    Table(Arc<Vec<u32>>),
    Func(MulFn),
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    law: Law,
    /// Inverses and element orders, filled on first use.
    derived: Arc<OnceLock<Derived>>,
    label: String,
}

struct Derived {
    inverse: Vec<u32>,
    order: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table, `table[a * order + b] = a * b`.
    pub fn from_table(order: usize, table: Vec<usize>, label: impl Into<String>) -> Result<Self> {
        Self::from_table_with(order, table, label, AxiomCheck::default())
    }

    pub fn from_table_with(
        order: usize,
        table: Vec<usize>,
        label: impl Into<String>,
        check: AxiomCheck,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("empty set".into()));
        }
        if table.len() != order * order {
            return Err(Error::NotAGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::NotAGroup(format!("entry {bad} out of range")));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        // Latin square rows give cancellation, hence inverses in the finite case.
        let mut seen = vec![false; order];
        for a in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                let v = table[a * order + b];
                if seen[v] {
                    return Err(Error::NotAGroup(format!("row {a} repeats {v}")));
                }
                seen[v] = true;
            }
        }
        let table: Vec<u32> = table.into_iter().map(|v| v as u32).collect();
        let g = FiniteGroup {
            order,
            identity,
            law: Law::Table(Arc::new(table)),
            derived: Arc::new(OnceLock::new()),
            label: label.into(),
        };
        g.check_associativity(check)?;
        Ok(g)
    }

    /// Builds a group from a multiplication function on `0..order` with the
    /// given identity. Orders up to [`TABLE_LIMIT`] are tabulated.
    pub fn from_fn<F>(
        order: usize,
        identity: usize,
        mul: F,
        label: impl Into<String>,
    ) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize + Send + Sync + 'static,
    {
        Self::from_fn_with(order, identity, mul, label, AxiomCheck::default())
    }

    pub fn from_fn_with<F>(
        order: usize,
        identity: usize,
        mul: F,
        label: impl Into<String>,
        check: AxiomCheck,
    ) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize + Send + Sync + 'static,
    {
        if order <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    table.push(mul(a, b));
                }
            }
            let g = Self::from_table_with(order, table, label, check)?;
            if g.identity != identity {
                return Err(Error::NotAGroup(format!("{identity} is not the identity")));
            }
            return Ok(g);
        }
        if identity >= order {
            return Err(Error::NotAGroup("identity out of range".into()));
        }
        for x in 0..order {
            let (l, r) = (mul(identity, x), mul(x, identity));
            if l != x || r != x {
                return Err(Error::NotAGroup(format!("{identity} is not the identity")));
            }
        }
        let g = FiniteGroup {
            order,
            identity,
            law: Law::Func(Arc::new(mul)),
            derived: Arc::new(OnceLock::new()),
            label: label.into(),
        };
        g.check_associativity(check)?;
        Ok(g)
    }

    fn check_associativity(&self, check: AxiomCheck) -> Result<()> {
        let n = self.order;
        let assoc = |a: usize, b: usize, c: usize| -> Result<()> {
            let (x, y) = (
                self.raw_mul(self.raw_mul(a, b), c),
                self.raw_mul(a, self.raw_mul(b, c)),
            );
            if x >= n || y >= n {
                return Err(Error::NotAGroup("product out of range".into()));
            }
            if x != y {
                return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
            }
            Ok(())
        };
        if n <= check.full_bound {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(check.seed);
            for _ in 0..check.samples {
                assoc(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }

    /// The cyclic group `Z_n` written additively.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cyclic group of order 0"));
        }
        Self::from_fn(n, 0, move |a, b| (a + b) % n, format!("Z{n}"))
    }

    /// The dihedral group of the given (even) order; `r^i s^j` has index `2i + j`.
    pub fn dihedral(order: usize) -> Result<Self> {
        if order < 2 || !order.is_multiple_of(2) {
            return Err(invalid(format!(
                "dihedral order must be even and >= 2, got {order}"
            )));
        }
        let l = order / 2;
        Self::from_fn(
            order,
            0,
            move |x, y| {
                let (i, j) = (x / 2, x % 2);
                let (k, m) = (y / 2, y % 2);
                let rot = if j == 0 { (i + k) % l } else { (i + l - k) % l };
                2 * rot + ((j + m) % 2)
            },
            format!("D{order}"),
        )
    }

    /// `A x B` with `(a, b)` at index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let (ga, gb) = (a.clone(), b.clone());
        let nb = b.order;
        let id = a.identity * nb + b.identity;
        Self::from_fn(
            a.order * nb,
            id,
            move |x, y| ga.raw_mul(x / nb, y / nb) * nb + gb.raw_mul(x % nb, y % nb),
            format!("{}x{}", a.label, b.label),
        )
    }

    /// Parses the table format: a line `order N` followed by `N` rows of indices.
    /// Element 0 must be the identity.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty table file".into()))?;
        let order: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        let mut table = Vec::with_capacity(order * order);
        for r in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in row {r}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != order {
                return Err(Error::Parse(format!("row {r} has {} entries", row.len())));
            }
            table.extend(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing rows after table".into()));
        }
        let g = Self::from_table(order, table, format!("table{order}"))?;
        if g.identity != 0 {
            return Err(Error::NotAGroup("element 0 is not the identity".into()));
        }
        Ok(g)
    }

    pub fn from_table_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let g = Self::parse_table(&text)?;
        Ok(g.with_label(
            path.file_stem()
                .map_or("table".into(), |s| s.to_string_lossy().into_owned()),
        ))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn has_table(&self) -> bool {
        matches!(self.law, Law::Table(_))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(GroupElement)
    }

    #[inline]
    pub(crate) fn raw_mul(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Table(t) => t[a * self.order + b] as usize,
            Law::Func(f) => f(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.raw_mul(a.0, b.0))
    }

    fn derived(&self) -> &Derived {
        self.derived.get_or_init(|| {
            let n = self.order;
            let mut inverse = vec![0u32; n];
            let mut order = vec![0u32; n];
            for g in 0..n {
                let mut cur = g;
                let mut k = 1usize;
                while cur != self.identity {
                    cur = self.raw_mul(cur, g);
                    k += 1;
                    assert!(k <= n, "element {g} has no finite order");
                }
                order[g] = k as u32;
                inverse[g] = self.pow_raw(g, k - 1) as u32;
            }
            Derived { inverse, order }
        })
    }

    fn pow_raw(&self, g: usize, mut k: usize) -> usize {
        let mut acc = self.identity;
        let mut base = g;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, g: GroupElement) -> GroupElement {
        GroupElement(self.derived().inverse[g.0] as usize)
    }

    /// `g^k` for any integer `k`.
    pub fn power(&self, g: GroupElement, k: i64) -> GroupElement {
        if k >= 0 {
            GroupElement(self.pow_raw(g.0, k as usize))
        } else {
            let o = self.element_order(g) as i64;
            GroupElement(self.pow_raw(g.0, k.rem_euclid(o) as usize))
        }
    }

    pub fn element_order(&self, g: GroupElement) -> usize {
        self.derived().order[g.0] as usize
    }

    /// `{g : g^n = 1}`.
    pub fn torsion(&self, n: usize) -> Vec<GroupElement> {
        let orders = &self.derived().order;
        (0..self.order)
            .filter(|&g| n.is_multiple_of(orders[g] as usize))
            .map(GroupElement)
            .collect()
    }

    pub fn conjugate(&self, x: GroupElement, g: GroupElement) -> GroupElement {
        self.mul(self.mul(x, g), self.inv(x))
    }

    /// Conjugacy classes, each sorted, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GroupElement>> {
        let n = self.order;
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut class: Vec<GroupElement> = Vec::new();
            for x in self.elements() {
                let c = self.conjugate(x, GroupElement(g));
                if !assigned[c.0] {
                    assigned[c.0] = true;
                    class.push(c);
                }
            }
            class.sort();
            classes.push(class);
        }
        classes
    }

    pub fn centralizer(&self, g: GroupElement) -> Vec<GroupElement> {
        self.elements()
            .filter(|&x| self.mul(x, g) == self.mul(g, x))
            .collect()
    }

    pub fn exponent(&self) -> usize {
        self.derived()
            .order
            .iter()
            .fold(1usize, |acc, &o| acc.lcm(&(o as usize)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.raw_mul(a, b) == self.raw_mul(b, a)))
    }

    /// The cyclic subgroup `<g>`, listed as `1, g, g^2, ...`.
    pub fn cyclic_subgroup(&self, g: GroupElement) -> Vec<GroupElement> {
        let mut out = vec![self.identity()];
        let mut cur = g;
        while cur != self.identity() {
            out.push(cur);
            cur = self.mul(cur, g);
        }
        out
    }

    pub fn is_subgroup(&self, set: &[GroupElement]) -> bool {
        let members: HashSet<GroupElement> = set.iter().copied().collect();
        members.contains(&self.identity())
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| members.contains(&self.mul(a, b))))
    }

    pub fn is_normal_subgroup(&self, set: &[GroupElement]) -> bool {
        let members: HashSet<GroupElement> = set.iter().copied().collect();
        self.is_subgroup(set)
            && self
                .elements()
                .all(|x| set.iter().all(|&h| members.contains(&self.conjugate(x, h))))
    }

    /// Exponent of `G/H` for a normal subgroup `H`: least `e` with `x^e` in `H` for all `x`.
    pub fn quotient_exponent(&self, normal: &[GroupElement]) -> Result<usize> {
        if !self.is_normal_subgroup(normal) {
            return Err(Error::NotASubgroup);
        }
        let members: HashSet<GroupElement> = normal.iter().copied().collect();
        let mut e = 1usize;
        for x in self.elements() {
            let mut k = 1usize;
            let mut cur = x;
            while !members.contains(&cur) {
                cur = self.mul(cur, x);
                k += 1;
            }
            e = e.lcm(&k);
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_torsion(g: &FiniteGroup, n: usize) -> usize {
        g.elements()
            .filter(|&x| {
                let mut cur = g.identity();
                for _ in 0..n {
                    cur = g.mul(cur, x);
                }
                cur == g.identity()
            })
            .count()
    }

    #[test]
    fn cyclic_basics() {
        let z = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(z.exponent(), 12);
        assert_eq!(z.element_order(GroupElement(8)), 3);
        assert_eq!(z.inv(GroupElement(5)), GroupElement(7));
        assert_eq!(z.power(GroupElement(5), -1), GroupElement(7));
        assert_eq!(z.torsion(4).len(), 4);
        assert!(z.is_abelian());
    }

    #[test]
    fn dihedral_eight() {
        let d = FiniteGroup::dihedral(8).unwrap();
        assert_eq!(d.torsion(2).len(), 6);
        assert_eq!(d.conjugacy_classes().len(), 5);
        assert_eq!(d.exponent(), 4);
        assert!(!d.is_abelian());
        // s r s = r^-1
        let (r, s) = (GroupElement(2), GroupElement(1));
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
    }

    #[test]
    fn torsion_matches_brute_force() {
        let d = FiniteGroup::dihedral(12).unwrap();
        let z = FiniteGroup::cyclic(6).unwrap();
        let p = FiniteGroup::direct_product(&d, &z).unwrap();
        for n in 1..=13 {
            assert_eq!(p.torsion(n).len(), brute_torsion(&p, n), "n={n}");
        }
    }

    #[test]
    fn rejects_non_associative() {
        // x*y = x - y mod 3 has identity on the right only.
        assert!(FiniteGroup::from_table(3, vec![0, 2, 1, 1, 0, 2, 2, 1, 0], "bad").is_err());
        // A Latin square of order 5 with an involution cannot be associative.
        let t = vec![
            0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0,
        ];
        assert!(matches!(
            FiniteGroup::from_table(5, t, "loop"),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn table_file_round() {
        let g = FiniteGroup::parse_table("order 2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.order(), 2);
        assert!(FiniteGroup::parse_table("order 2\n1 0\n0 1\n").is_err());
        assert!(FiniteGroup::parse_table("order 2\n0 1\n").is_err());
    }

    #[test]
    fn large_group_uses_function() {
        let z = FiniteGroup::cyclic(5000).unwrap();
        assert!(!z.has_table());
        assert_eq!(z.mul(GroupElement(4999), GroupElement(3)), GroupElement(2));
        assert_eq!(z.element_order(GroupElement(1000)), 5);
    }

    #[test]
    fn quotient_exponent_of_rotations() {
        let d = FiniteGroup::dihedral(10).unwrap();
        let rot: Vec<_> = (0..5).map(|i| GroupElement(2 * i)).collect();
        assert_eq!(d.quotient_exponent(&rot).unwrap(), 2);
        assert!(d
            .quotient_exponent(&[GroupElement(0), GroupElement(1)])
            .is_err());
    }
}
