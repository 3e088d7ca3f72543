//! Parameter grids, category catalogs and the property suites shared by the
//! acceptance harness and the standalone property tests. Each suite returns
//! `Ok(summary)` or `Err(first failure)`.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use fsind::arith::{divisors, gcd};
use fsind::cocycle::OmegaTilde;
use fsind::cyclotomic::gauss_sum_closed;
use fsind::extension::{
    family_bismash, family_h2n2, family_hn3, family_hn3_with_lambda, family_suzuki_cyclic,
    family_suzuki_cyclic_with_eta, family_suzuki_noncyclic, family_suzuki_noncyclic_with_eta,
    omega_from_extension,
};
use fsind::indicator::{
    frobenius_check, nu, nu_brute, nu_center, nu_group_algebra, nu_h2n2_closed, nu_hn3_closed,
    nu_suzuki_cyclic_closed, nu_suzuki_noncyclic_closed,
};
use fsind::{
    CyclotomicInteger, FiniteGroup, GTCategory, GroupElement, MatchedPair, ThreeCocycle, VerifyMode,
};

pub type Check = Result<String, String>;

pub const H2N2_NS: std::ops::RangeInclusive<usize> = 2..=6;
pub const HN3_NS: [usize; 2] = [3, 5];

pub fn suzuki_cyclic_grid() -> Vec<(usize, usize, i64, i64)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for l in 2..=4 {
            for alpha in [1, -1] {
                for beta in [1, -1] {
                    if !(n % 2 == 0 && alpha == 1) {
                        out.push((n, l, alpha, beta));
                    }
                }
            }
        }
    }
    out
}

pub fn suzuki_noncyclic_grid() -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for n in [2, 4] {
        for l in [2, 3] {
            for beta in [1, -1] {
                out.push((n, l, beta));
            }
        }
    }
    out
}

/// `Z_2` inverting `Z_5`; the bicrossed product is `D_10`.
pub fn d10_pair() -> MatchedPair {
    MatchedPair::new(
        FiniteGroup::cyclic(5).unwrap(),
        FiniteGroup::cyclic(2).unwrap(),
        |g, _| g,
        |g, x| GroupElement(if g.0 == 1 { (5 - x.0) % 5 } else { x.0 }),
    )
    .unwrap()
}

/// `Z_3` rotating the coordinates of `Z_2^3`, a bismash product of order 24
/// whose actions are both visible in the group law.
pub fn rotation_pair() -> MatchedPair {
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let z22 = FiniteGroup::direct_product(&z2, &z2).unwrap();
    let z222 = FiniteGroup::direct_product(&z22, &z2).unwrap();
    let rot = |v: usize| ((v & 1) << 2) | (v >> 1);
    MatchedPair::new(
        z222,
        FiniteGroup::cyclic(3).unwrap(),
        |g, _| g,
        move |g, x| {
            let mut v = x.0;
            for _ in 0..g.0 {
                v = rot(v);
            }
            GroupElement(v)
        },
    )
    .unwrap()
}

pub struct Entry {
    pub cat: GTCategory,
    /// `(F, G)` index sets inside `Gamma` when the category comes from a pair.
    pub halves: Option<(Vec<GroupElement>, Vec<GroupElement>)>,
}

fn halves(pair: &MatchedPair) -> (Vec<GroupElement>, Vec<GroupElement>) {
    let f = pair
        .f()
        .elements()
        .map(|x| pair.join(x, pair.g().identity()))
        .collect();
    let g = pair
        .g()
        .elements()
        .map(|g| pair.join(pair.f().identity(), g))
        .collect();
    (f, g)
}

/// Every extension family of the sweep grids plus bismash examples.
pub fn families() -> &'static [Entry] {
    static CELL: OnceLock<Vec<Entry>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for n in H2N2_NS {
            for xe in 0..n as i64 {
                let data = family_h2n2(n, xe).unwrap();
                out.push(Entry {
                    halves: Some(halves(data.pair())),
                    cat: omega_from_extension(&data).unwrap(),
                });
            }
        }
        for n in HN3_NS {
            for xe in 0..n as i64 {
                for ze in 0..n as i64 {
                    let data = family_hn3(n, xe, ze).unwrap();
                    out.push(Entry {
                        halves: Some(halves(data.pair())),
                        cat: omega_from_extension(&data).unwrap(),
                    });
                }
            }
        }
        for (n, l, a, b) in suzuki_cyclic_grid() {
            out.push(Entry {
                cat: family_suzuki_cyclic(n, l, a, b).unwrap(),
                halves: None,
            });
        }
        for (n, l, b) in suzuki_noncyclic_grid() {
            out.push(Entry {
                cat: family_suzuki_noncyclic(n, l, b).unwrap(),
                halves: None,
            });
        }
        for pair in bismash_pairs() {
            out.push(Entry {
                halves: Some(halves(&pair)),
                cat: family_bismash(&pair).unwrap(),
            });
        }
        out
    })
}

pub fn bismash_pairs() -> Vec<MatchedPair> {
    let mut pairs = vec![d10_pair(), rotation_pair()];
    for n in 1..=6 {
        pairs.push(family_h2n2(n, 0).unwrap().pair().clone());
    }
    pairs
}

/// `(Z_N, psi_N^r)` for `N <= 12` and all `r`.
pub fn psi_grid() -> Vec<(usize, i64, ThreeCocycle)> {
    let mut out = Vec::new();
    for n in 1..=12 {
        for r in 0..n as i64 {
            out.push((n, r, ThreeCocycle::psi(n, r).unwrap()));
        }
    }
    out
}

/// Pointed categories: `psi` on cyclic groups, products of those, and
/// trivial cocycles on a few non-abelian groups.
pub fn pointed() -> &'static [GTCategory] {
    static CELL: OnceLock<Vec<GTCategory>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out: Vec<GTCategory> = psi_grid()
            .into_iter()
            .map(|(_, _, w)| GTCategory::new(w.clone(), w.label().to_string()))
            .collect();
        for (a, b) in [
            ((2, 1), (4, 1)),
            ((3, 1), (3, 2)),
            ((4, 1), (6, 5)),
            ((2, 1), (2, 1)),
        ] {
            let w = ThreeCocycle::product(
                &ThreeCocycle::psi(a.0, a.1).unwrap(),
                &ThreeCocycle::psi(b.0, b.1).unwrap(),
            )
            .unwrap();
            out.push(GTCategory::new(w, "product"));
        }
        for g in [
            FiniteGroup::dihedral(8).unwrap(),
            FiniteGroup::dihedral(12).unwrap(),
            q8(),
        ] {
            out.push(GTCategory::new(
                ThreeCocycle::trivial(Arc::new(g)),
                "trivial",
            ));
        }
        out
    })
}

pub fn q8() -> FiniteGroup {
    FiniteGroup::from_table_file(concat!(env!("CARGO_MANIFEST_DIR"), "/data/q8.txt")).unwrap()
}

pub fn all_categories() -> impl Iterator<Item = &'static GTCategory> {
    families().iter().map(|e| &e.cat).chain(pointed().iter())
}

fn order_divs(cat: &GTCategory) -> Vec<usize> {
    divisors(cat.group().order() as u64)
        .into_iter()
        .map(|d| d as usize)
        .collect()
}

/// Closed forms against brute force over every grid point and every `n | |Gamma|`.
pub fn closed_vs_brute() -> Check {
    let mut evals = 0usize;
    let mut compare = |label: String,
                       cat: &GTCategory,
                       closed: &dyn Fn(u64) -> CyclotomicInteger|
     -> Result<(), String> {
        for n in order_divs(cat) {
            let (c, b) = (closed(n as u64), nu(cat, n));
            evals += 1;
            if c != b {
                return Err(format!("{label} n={n}: closed {c} vs brute {b}"));
            }
        }
        Ok(())
    };
    for n in H2N2_NS {
        for xe in 0..n as i64 {
            let cat = omega_from_extension(&family_h2n2(n, xe).unwrap()).unwrap();
            compare(format!("h2n2 N={n} xi^{xe}"), &cat, &|k| {
                nu_h2n2_closed(n as u64, xe, k).unwrap()
            })?;
        }
    }
    for n in HN3_NS {
        for xe in 0..n as i64 {
            for ze in 0..n as i64 {
                let cat = omega_from_extension(&family_hn3(n, xe, ze).unwrap()).unwrap();
                compare(format!("hn3 N={n} ({xe},{ze})"), &cat, &|k| {
                    nu_hn3_closed(n as u64, xe, ze, k).unwrap()
                })?;
            }
        }
    }
    for (n, l, a, b) in suzuki_cyclic_grid() {
        let cat = family_suzuki_cyclic(n, l, a, b).unwrap();
        compare(cat.label().to_string(), &cat, &|k| {
            CyclotomicInteger::from_int(
                nu_suzuki_cyclic_closed(n as u64, l as u64, a, b, k).unwrap(),
            )
        })?;
    }
    for (n, l, b) in suzuki_noncyclic_grid() {
        let cat = family_suzuki_noncyclic(n, l, b).unwrap();
        compare(cat.label().to_string(), &cat, &|k| {
            CyclotomicInteger::from_int(
                nu_suzuki_noncyclic_closed(n as u64, l as u64, b, k).unwrap(),
            )
        })?;
    }
    Ok(format!("{evals} indicator pairs equal"))
}

fn tilde_eq(w: &ThreeCocycle, n: usize, a: GroupElement, b: GroupElement) -> bool {
    match (w.omega_tilde(n, a), w.omega_tilde(n, b)) {
        (OmegaTilde::Zero, OmegaTilde::Zero) => true,
        (OmegaTilde::Root(x), OmegaTilde::Root(y)) => x == y,
        _ => false,
    }
}

/// `omega~_n` is constant on conjugacy classes, for all `n | exp(Gamma)`.
pub fn class_function_suite() -> Check {
    let mut cats = 0;
    for cat in all_categories().filter(|c| c.group().order() <= 200) {
        let (g, w) = (cat.group(), cat.omega());
        let exps = divisors(g.exponent() as u64);
        for x in g.elements() {
            for h in g.elements() {
                let c = g.conjugate(x, h);
                for &n in &exps {
                    if !tilde_eq(w, n as usize, h, c) {
                        return Err(format!(
                            "{}: omega~_{n} differs on {} and its conjugate {}",
                            cat.label(),
                            h.0,
                            c.0
                        ));
                    }
                }
            }
        }
        cats += 1;
    }
    Ok(format!("{cats} categories"))
}

/// For `psi_N^r`, `N <= 12`: the order of `omega~_n(i)` divides
/// `gcd(N, n, e)` with `e = N / gcd(N, r)`, `omega~_n(a i) = omega~_n(i)^(a^2)`,
/// and `c(psi_N^r) = e`.
pub fn psi_scaling_suite() -> Check {
    let mut checks = 0usize;
    for (big, r, w) in psi_grid() {
        let e = big as u64 / gcd(big as u64, r as u64);
        if w.c_omega() != e {
            return Err(format!(
                "c(psi_{big}^{r}) = {} but expected {e}",
                w.c_omega()
            ));
        }
        for n in 1..=2 * big {
            for i in 0..big {
                if n * i % big != 0 {
                    continue;
                }
                let OmegaTilde::Root(t) = w.omega_tilde(n, GroupElement(i)) else {
                    return Err(format!(
                        "psi_{big}^{r}: omega~_{n}({i}) vanished on torsion"
                    ));
                };
                let bound = gcd(big as u64, gcd(n as u64, e));
                if !bound.is_multiple_of(t.order()) {
                    return Err(format!(
                        "psi_{big}^{r}: order of omega~_{n}({i}) = {} does not divide {bound}",
                        t.order()
                    ));
                }
                for a in 0..big {
                    let lhs = w.omega_tilde(n, GroupElement(a * i % big));
                    let rhs = t.pow((a * a) as i64);
                    if lhs != OmegaTilde::Root(rhs) {
                        return Err(format!(
                            "psi_{big}^{r}: omega~_{n}({a}*{i}) != omega~_{n}({i})^{a}^2"
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} scaling identities"))
}

/// `nu_n(Z_N, psi_N^r) = S(n r / d, d)`, `d = gcd(N, n)`, for `N <= 12`, `n <= 2N`.
pub fn psi_gauss_sum_suite() -> Check {
    let mut checks = 0;
    for (big, r, w) in psi_grid() {
        for n in 1..=2 * big {
            let d = gcd(big as u64, n as u64);
            let expect =
                gauss_sum_closed((n as u64 / d) as i64 * r, d).map_err(|e| e.to_string())?;
            let got = nu_brute(&w, n);
            if got != expect {
                return Err(format!(
                    "psi_{big}^{r} n={n}: {got} vs S({}, {d}) = {expect}",
                    n as i64 / d as i64 * r
                ));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} Gauss-sum identities"))
}

/// `nu_2` is a rational integer, hence fixed by complex conjugation, on
/// every family and pointed category.
pub fn nu2_suite() -> Check {
    let mut cats = 0;
    for cat in all_categories() {
        let v = nu(cat, 2);
        if v.as_integer().is_none() || v.conj() != v {
            return Err(format!("{}: nu_2 = {v}", cat.label()));
        }
        cats += 1;
    }
    Ok(format!("{cats} categories"))
}

/// Indicators do not depend on the choice of `lambda` (hN3) or `eta` (Suzuki).
pub fn choice_independence_suite() -> Check {
    let mut compared = 0;
    let same =
        |a: &GTCategory, b: &GTCategory| order_divs(a).into_iter().all(|n| nu(a, n) == nu(b, n));
    for (n, xes) in [(3usize, vec![0i64, 1, 2]), (5, vec![1, 3])] {
        for &xe in &xes {
            for ze in 0..n as i64 {
                let base = omega_from_extension(&family_hn3(n, xe, ze).unwrap()).unwrap();
                for t in 1..n as i64 {
                    let other =
                        omega_from_extension(&family_hn3_with_lambda(n, xe, ze, t).unwrap())
                            .unwrap();
                    if !same(&base, &other) {
                        return Err(format!(
                            "hn3 N={n} ({xe},{ze}) changes with lambda choice t={t}"
                        ));
                    }
                    compared += 1;
                }
            }
        }
    }
    for (n, l, a, b) in suzuki_cyclic_grid().into_iter().filter(|p| p.0 * p.1 <= 6) {
        let base = family_suzuki_cyclic(n, l, a, b).unwrap();
        for t in 1..2 * l as i64 {
            let other = family_suzuki_cyclic_with_eta(n, l, a, b, t).unwrap();
            if !same(&base, &other) {
                return Err(format!("{} changes with eta choice t={t}", base.label()));
            }
            compared += 1;
        }
    }
    for (n, l, b) in suzuki_noncyclic_grid().into_iter().filter(|p| p.0 == 2) {
        let base = family_suzuki_noncyclic(n, l, b).unwrap();
        for t in 1..2 * l as i64 {
            let other = family_suzuki_noncyclic_with_eta(n, l, b, t).unwrap();
            if !same(&base, &other) {
                return Err(format!("{} changes with eta choice t={t}", base.label()));
            }
            compared += 1;
        }
    }
    Ok(format!("{compared} alternative choices"))
}

/// `|nu_n|^2` of `(Z_N, psi_N^r)` equals brute force on `Z_N x Z_N` with
/// `psi_N^r` times its inverse, `N <= 6`, `n <= 2N`.
pub fn center_suite() -> Check {
    let mut checks = 0;
    for n_big in 1..=6 {
        for r in 0..n_big as i64 {
            let w = ThreeCocycle::psi(n_big, r).unwrap();
            let doubled = ThreeCocycle::product(&w, &w.inverse()).map_err(|e| e.to_string())?;
            for n in 1..=2 * n_big {
                let (lhs, rhs) = (nu_center(&nu_brute(&w, n)), nu_brute(&doubled, n));
                if lhs != rhs {
                    return Err(format!("psi_{n_big}^{r} n={n}: |nu|^2 = {lhs} vs {rhs}"));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} products"))
}

/// The Frobenius verdict passes on every extension family and bismash example.
pub fn frobenius_positive_suite() -> Check {
    for e in families() {
        let rep = frobenius_check(&e.cat);
        if !rep.verdict {
            let bad: Vec<u64> = rep.failures().map(|f| f.n).collect();
            return Err(format!("{} fails at n = {bad:?}", rep.label));
        }
    }
    Ok(format!("{} categories", families().len()))
}

/// If `n | nu_n` can fail only through a prime `p = gcd(n, c(omega))`, the
/// weaker `n / sqrt(p)` divisibility still holds.
pub fn refined_divisibility_suite() -> Check {
    let mut cats: Vec<GTCategory> = families().iter().map(|e| e.cat.clone()).collect();
    for p in [3usize, 5, 7] {
        for r in 0..p as i64 {
            cats.push(GTCategory::new(
                ThreeCocycle::psi(p, r).unwrap(),
                format!("psi_{p}^{r}"),
            ));
        }
    }
    for cat in &cats {
        if !frobenius_check(cat).refined_bound_holds() {
            return Err(format!("{}: refined divisibility fails", cat.label()));
        }
    }
    Ok(format!("{} categories", cats.len()))
}

/// `nu_1 = 1`, trivial cocycles give `|Gamma[n]|`, and `nu_n` is an integer
/// whenever `gcd(n, c(omega)) <= 2`.
pub fn basic_invariants_suite() -> Check {
    for cat in all_categories() {
        if nu(cat, 1) != CyclotomicInteger::one() {
            return Err(format!("{}: nu_1 != 1", cat.label()));
        }
        let c = cat.omega().c_omega();
        let trivial = cat.omega().is_identically_trivial();
        for n in order_divs(cat) {
            let v = nu(cat, n);
            if gcd(n as u64, c) <= 2 && v.as_integer().is_none() {
                return Err(format!(
                    "{}: nu_{n} = {v} not an integer though gcd(n, c) <= 2",
                    cat.label()
                ));
            }
            if trivial && v != nu_group_algebra(cat.group(), n) {
                return Err(format!(
                    "{}: trivial cocycle but nu_{n} != |Gamma[{n}]|",
                    cat.label()
                ));
            }
        }
    }
    Ok("all categories".into())
}

fn generated(g: &FiniteGroup, gens: &[GroupElement]) -> Vec<GroupElement> {
    let mut set: BTreeSet<usize> = BTreeSet::from([g.identity().0]);
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y.0) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().map(GroupElement).collect()
}

/// Whenever a normal subgroup `H` carries the trivial restriction of `omega`,
/// `c(omega)` divides `exp(Gamma / H)`. Candidates: both halves of a pair and
/// every subgroup generated by at most two elements.
pub fn normal_subgroup_suite() -> Check {
    let mut hits = 0;
    for e in families().iter().filter(|e| e.cat.group().order() <= 72) {
        let g = e.cat.group();
        let mut cands: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
        if let Some((f, gg)) = &e.halves {
            cands.insert(f.clone());
            cands.insert(gg.clone());
        }
        for a in g.elements() {
            for b in g.elements().filter(|b| b.0 >= a.0) {
                cands.insert(generated(g, &[a, b]));
            }
        }
        let c = e.cat.omega().c_omega();
        for h in cands {
            if !g.is_normal_subgroup(&h)
                || !e
                    .cat
                    .omega()
                    .restrict(&h)
                    .map_err(|x| x.to_string())?
                    .is_identically_trivial()
            {
                continue;
            }
            let q = g.quotient_exponent(&h).map_err(|x| x.to_string())? as u64;
            if !q.is_multiple_of(c) {
                return Err(format!(
                    "{}: c(omega) = {c} does not divide exp(Gamma/H) = {q} (|H| = {})",
                    e.cat.label(),
                    h.len()
                ));
            }
            hits += 1;
        }
    }
    Ok(format!("{hits} normal subgroups with trivial restriction"))
}

/// `omega~` of a product cocycle is the product of the factors' values.
pub fn product_tilde_suite() -> Check {
    let h8 = omega_from_extension(&family_h2n2(2, 1).unwrap()).unwrap();
    let pairs = [
        (
            ThreeCocycle::psi(3, 1).unwrap(),
            ThreeCocycle::psi(4, 1).unwrap(),
        ),
        (h8.omega().clone(), ThreeCocycle::psi(3, 2).unwrap()),
        (
            ThreeCocycle::psi(6, 5).unwrap(),
            ThreeCocycle::trivial(Arc::new(FiniteGroup::dihedral(6).unwrap())),
        ),
    ];
    let mut checks = 0;
    for (a, b) in &pairs {
        let p = ThreeCocycle::product(a, b).map_err(|e| e.to_string())?;
        let nb = b.group().order();
        for n in 1..=24 {
            for x in a.group().elements() {
                for y in b.group().elements() {
                    let lhs = p.omega_tilde(n, GroupElement(x.0 * nb + y.0));
                    let rhs = match (a.omega_tilde(n, x), b.omega_tilde(n, y)) {
                        (OmegaTilde::Root(s), OmegaTilde::Root(t)) => OmegaTilde::Root(s * t),
                        _ => OmegaTilde::Zero,
                    };
                    if lhs != rhs {
                        return Err(format!(
                            "{} x {}: omega~_{n} not multiplicative at ({}, {})",
                            a.label(),
                            b.label(),
                            x.0,
                            y.0
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} points"))
}

/// Ensures the cocycle of every catalog category passes its verification.
pub fn cocycle_validity_suite() -> Check {
    for cat in all_categories() {
        cat.omega()
            .verify(VerifyMode::Auto)
            .map_err(|e| format!("{}: {e}", cat.label()))?;
    }
    Ok("all catalog cocycles verified".into())
}
