//! Finite groups as multiplication tables, and the conjugation quandle.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rack::{Morphism, Rack};
use crate::square::ExtSquare;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &FiniteGroup) -> bool {
        self.mul == other.mul && self.n == other.n
    }
}

impl Eq for FiniteGroup {}

/// A subgroup as a sorted list of element indices.
pub type Subgroup = Vec<usize>;

impl FiniteGroup {
    /// Validates a multiplication table exhaustively.
    pub fn new(table: &[Vec<usize>]) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup {
                axiom: "identity",
                detail: "the empty table has no identity".into(),
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {x} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::Shape(format!("entry {v} out of range in row {x}")));
                }
            }
            mul.extend_from_slice(row);
        }
        let m = |x: usize, y: usize| mul[x * n + y];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(Error::NotAGroup {
                            axiom: "associativity",
                            detail: format!("({x}·{y})·{z} ≠ {x}·({y}·{z})"),
                        });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::NotAGroup {
                axiom: "identity",
                detail: "no two-sided identity".into(),
            })?;
        let mut inv = vec![0; n];
        for (x, slot) in inv.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&y| m(x, y) == identity && m(y, x) == identity)
                .ok_or_else(|| Error::NotAGroup {
                    axiom: "inverse",
                    detail: format!("{x} has no inverse"),
                })?;
        }
        Ok(FiniteGroup {
            n,
            mul,
            identity,
            inv,
            labels: None,
        })
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> FiniteGroup {
        let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        FiniteGroup::new(&table).expect("built-in group tables are valid")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> FiniteGroup {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn whole(&self) -> Subgroup {
        (0..self.n).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        vec![self.identity]
    }
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn(n, |x, y| (x + y) % n).with_labels((0..n).map(|x| x.to_string()).collect())
}

/// Permutations of `1..=n` in lexicographic order of one-line notation,
/// composed as functions: `(στ)(i) = σ(τ(i))`. Labels are cycle notation.
pub fn sym_group(n: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::new(&table).unwrap().with_labels(labels)
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// `Q8` with elements `1, −1, i, −i, j, −j, k, −k`.
pub fn quaternion_group() -> FiniteGroup {
    // unit part: 0 = 1, 1 = i, 2 = j, 3 = k; returns (sign flip, unit)
    fn units(u: usize, v: usize) -> (bool, usize) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let g = FiniteGroup::from_fn(8, |x, y| {
        let (flip, u) = units(x / 2, y / 2);
        let neg = (x % 2 == 1) ^ (y % 2 == 1) ^ flip;
        2 * u + neg as usize
    });
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    g.with_labels(labels.iter().map(|s| s.to_string()).collect())
}

/// The symmetry group of the `n`-gon, of order `2n`; index `e·n + k` is
/// `r^k s^e`.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    let g = FiniteGroup::from_fn(2 * n, |x, y| {
        let (a, e) = (x % n, x / n);
        let (b, f) = (y % n, y / n);
        let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
        ((e + f) % 2) * n + k
    });
    let labels = (0..2 * n)
        .map(|x| {
            let s = if x >= n { "s" } else { "" };
            format!("r{}{s}", x % n)
        })
        .collect();
    g.with_labels(labels)
}

/// Index `x·|H| + y` is `(x, y)`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.size();
    let p = FiniteGroup::from_fn(g.size() * m, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    });
    let labels = (0..g.size() * m)
        .map(|x| format!("({},{})", g.label(x / m), h.label(x % m)))
        .collect();
    p.with_labels(labels)
}

/// `Conj(G)`: `x ◁ a = a⁻¹ x a`.
pub fn conj_functor(g: &FiniteGroup) -> Rack {
    let n = g.size();
    let op = (0..n)
        .flat_map(|x| (0..n).map(move |a| (x, a)))
        .map(|(x, a)| g.mul(g.mul(g.inv(a), x), a))
        .collect();
    let r = Rack::from_flat(n, op).expect("conjugation satisfies the rack axioms");
    match g.labels() {
        Some(l) => r.with_labels(l.to_vec()),
        None => r,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    dom: FiniteGroup,
    cod: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(dom: FiniteGroup, cod: FiniteGroup, map: Vec<usize>) -> Result<GroupHom> {
        if map.len() != dom.size() {
            return Err(Error::Shape(format!(
                "map has length {}, domain has {} elements",
                map.len(),
                dom.size()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::Index {
                index: v,
                size: cod.size(),
            });
        }
        for x in 0..dom.size() {
            for y in 0..dom.size() {
                if map[dom.mul(x, y)] != cod.mul(map[x], map[y]) {
                    return Err(Error::NotAGroup {
                        axiom: "homomorphism",
                        detail: format!("f({x}·{y}) ≠ f({x})·f({y})"),
                    });
                }
            }
        }
        Ok(GroupHom { dom, cod, map })
    }

    pub fn identity(g: &FiniteGroup) -> GroupHom {
        GroupHom {
            dom: g.clone(),
            cod: g.clone(),
            map: g.whole(),
        }
    }

    pub fn dom(&self) -> &FiniteGroup {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteGroup {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn then(&self, g: &GroupHom) -> Result<GroupHom> {
        if self.cod != g.dom {
            return Err(Error::DomainMismatch);
        }
        Ok(GroupHom {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            map: self.map.iter().map(|&y| g.map[y]).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let hit: BTreeSet<usize> = self.map.iter().copied().collect();
        hit.len() == self.cod.size()
    }

    fn require_surjective(&self) -> Result<()> {
        match (0..self.cod.size()).find(|y| !self.map.contains(y)) {
            Some(missing) => Err(Error::NotSurjective { missing }),
            None => Ok(()),
        }
    }

    /// `Conj(f)`.
    pub fn conj(&self) -> Morphism {
        Morphism::new(
            conj_functor(&self.dom),
            conj_functor(&self.cod),
            self.map.clone(),
        )
        .expect("group homomorphisms preserve conjugation")
    }
}

pub fn kernel(f: &GroupHom) -> Subgroup {
    let e = f.cod.identity();
    (0..f.dom.size()).filter(|&x| f.map[x] == e).collect()
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    (0..g.size())
        .filter(|&z| (0..g.size()).all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect()
}

pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut set: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

pub fn normal_closure(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let conjugates: Vec<usize> = gens
        .iter()
        .flat_map(|&s| (0..g.size()).map(move |h| (s, h)))
        .map(|(s, h)| g.mul(g.mul(g.inv(h), s), h))
        .collect();
    subgroup_generated(g, &conjugates)
}

pub fn is_normal(g: &FiniteGroup, n: &[usize]) -> bool {
    n.iter()
        .all(|&x| (0..g.size()).all(|h| n.binary_search(&g.mul(g.mul(g.inv(h), x), h)).is_ok()))
}

/// `[H, K]`: generated by `h k h⁻¹ k⁻¹`.
pub fn group_commutator(g: &FiniteGroup, h: &[usize], k: &[usize]) -> Subgroup {
    let mut gens = Vec::new();
    for &x in h {
        for &y in k {
            gens.push(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
        }
    }
    subgroup_generated(g, &gens)
}

pub fn intersect(h: &[usize], k: &[usize]) -> Subgroup {
    h.iter()
        .copied()
        .filter(|x| k.binary_search(x).is_ok())
        .collect()
}

fn is_subset(h: &[usize], k: &[usize]) -> bool {
    h.iter().all(|x| k.binary_search(x).is_ok())
}

/// `G / N` with cosets ordered by least member, and the projection.
pub fn quotient_group(g: &FiniteGroup, n: &[usize]) -> Result<(FiniteGroup, GroupHom)> {
    if !is_normal(g, n) {
        return Err(Error::NotAGroup {
            axiom: "normality",
            detail: "quotient by a subgroup that is not normal".into(),
        });
    }
    let mut coset = vec![usize::MAX; g.size()];
    let mut reps = Vec::new();
    for x in 0..g.size() {
        if coset[x] == usize::MAX {
            for &k in n {
                coset[g.mul(x, k)] = reps.len();
            }
            reps.push(x);
        }
    }
    let m = reps.len();
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|&x| reps.iter().map(|&y| coset[g.mul(x, y)]).collect())
        .collect();
    let mut q = FiniteGroup::new(&table)?;
    if g.labels().is_some() {
        q = q.with_labels(reps.iter().map(|&x| format!("[{}]", g.label(x))).collect());
    }
    debug_assert_eq!(q.size(), m);
    let proj = GroupHom {
        dom: g.clone(),
        cod: q.clone(),
        map: coset,
    };
    Ok((q, proj))
}

/// Every normal subgroup, by increasing order then lexicographically. Built as joins of normal closures of
/// single elements.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    found.insert(g.trivial_subgroup());
    let principal: BTreeSet<Subgroup> = (0..g.size()).map(|x| normal_closure(g, &[x])).collect();
    let mut frontier: Vec<Subgroup> = vec![g.trivial_subgroup()];
    while let Some(n) = frontier.pop() {
        for p in &principal {
            let joined: Vec<usize> = n.iter().chain(p).copied().collect();
            let j = subgroup_generated(g, &joined);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by_key(|s| s.len());
    out
}

/// `Ker f ≤ Z(G)`.
pub fn is_central_extension_grp(f: &GroupHom) -> Result<bool> {
    f.require_surjective()?;
    Ok(is_subset(&kernel(f), &center(&f.dom)))
}

/// The central reflection `G / [Ker f, G] → H`, with the unit.
pub fn centralize_grp(f: &GroupHom) -> Result<(GroupHom, GroupHom)> {
    f.require_surjective()?;
    let g = &f.dom;
    let n = group_commutator(g, &kernel(f), &g.whole());
    let (q, unit) = quotient_group(g, &n)?;
    let map = (0..q.size())
        .map(|c| f.apply((0..g.size()).find(|&x| unit.apply(x) == c).unwrap()))
        .collect();
    let ab = GroupHom::new(q, f.cod.clone(), map)?;
    Ok((ab, unit))
}

/// A commuting square of group homomorphisms, laid out like [`ExtSquare`].
#[derive(Clone, Debug)]
pub struct GroupSquare {
    pub f_a: GroupHom,
    pub f_b: GroupHom,
    pub alpha_top: GroupHom,
    pub alpha_bot: GroupHom,
}

impl GroupSquare {
    pub fn new(
        f_a: GroupHom,
        f_b: GroupHom,
        alpha_top: GroupHom,
        alpha_bot: GroupHom,
    ) -> Result<GroupSquare> {
        let l = f_a.then(&alpha_bot)?;
        let r = alpha_top.then(&f_b)?;
        if l.map != r.map || l.cod != r.cod {
            return Err(Error::NonCommuting("group square".into()));
        }
        Ok(GroupSquare {
            f_a,
            f_b,
            alpha_top,
            alpha_bot,
        })
    }

    /// `G → G/K1` down, `G → G/K2` across, both over `G / K1K2`.
    pub fn of_quotients(g: &FiniteGroup, k1: &[usize], k2: &[usize]) -> Result<GroupSquare> {
        let joined: Vec<usize> = k1.iter().chain(k2).copied().collect();
        let k12 = subgroup_generated(g, &joined);
        let (_, f_a) = quotient_group(g, k1)?;
        let (_, top) = quotient_group(g, k2)?;
        let (_, full) = quotient_group(g, &k12)?;
        let induced = |p: &GroupHom| -> Result<GroupHom> {
            let mut map = vec![usize::MAX; p.cod.size()];
            for x in 0..g.size() {
                map[p.apply(x)] = full.apply(x);
            }
            GroupHom::new(p.cod.clone(), full.cod.clone(), map)
        };
        let bot = induced(&f_a)?;
        let f_b = induced(&top)?;
        GroupSquare::new(f_a, f_b, top, bot)
    }

    pub fn is_double_extension(&self) -> bool {
        self.f_a.is_surjective()
            && self.f_b.is_surjective()
            && self.alpha_top.is_surjective()
            && self.alpha_bot.is_surjective()
            && self.comparison_is_surjective()
    }

    fn comparison_is_surjective(&self) -> bool {
        let mut hit = BTreeSet::new();
        for x in 0..self.f_a.dom.size() {
            hit.insert((self.f_a.apply(x), self.alpha_top.apply(x)));
        }
        let mut pairs = 0;
        for a in 0..self.alpha_bot.dom.size() {
            for b in 0..self.f_b.dom.size() {
                if self.alpha_bot.apply(a) == self.f_b.apply(b) {
                    pairs += 1;
                }
            }
        }
        hit.len() == pairs
    }

    fn require_double_extension(&self) -> Result<()> {
        if self.is_double_extension() {
            Ok(())
        } else {
            Err(Error::NotDoubleExtension("group square".into()))
        }
    }

    /// The kernel of the comparison map, `Ker f_A ∩ Ker α⊤`, is central.
    pub fn comparison_is_central(&self) -> Result<bool> {
        self.require_double_extension()?;
        let k = intersect(&kernel(&self.f_a), &kernel(&self.alpha_top));
        Ok(is_subset(&k, &center(&self.f_a.dom)))
    }

    pub fn conj(&self) -> ExtSquare {
        ExtSquare::new(
            self.f_a.conj(),
            self.f_b.conj(),
            self.alpha_top.conj(),
            self.alpha_bot.conj(),
        )
        .expect("Conj preserves commuting squares")
    }
}

/// `[Ker f_A, Ker α⊤] = 1` and `[Ker f_A ∩ Ker α⊤, G] = 1`.
pub fn is_double_central_extension_grp(sq: &GroupSquare) -> Result<bool> {
    sq.require_double_extension()?;
    let g = &sq.f_a.dom;
    let (ka, kt) = (kernel(&sq.f_a), kernel(&sq.alpha_top));
    let e = g.trivial_subgroup();
    Ok(group_commutator(g, &ka, &kt) == e
        && group_commutator(g, &intersect(&ka, &kt), &g.whole()) == e)
}

pub fn conj_square(sq: &GroupSquare) -> Result<ExtSquare> {
    sq.require_double_extension()?;
    Ok(sq.conj())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &FiniteGroup, l: &str) -> usize {
        g.find_label(l).unwrap()
    }

    #[test]
    fn validation() {
        assert!(FiniteGroup::new(&[vec![0, 1], vec![1, 0]]).is_ok());
        assert!(matches!(
            FiniteGroup::new(&[vec![0, 0], vec![1, 1]]),
            Err(Error::NotAGroup { .. })
        ));
        assert!(matches!(
            FiniteGroup::new(&[vec![0, 1], vec![1, 1]]),
            Err(Error::NotAGroup {
                axiom: "inverse",
                ..
            })
        ));
        assert_eq!(cyclic_group(1).size(), 1);
    }

    #[test]
    fn symmetric_group_order_and_labels() {
        let s3 = sym_group(3);
        assert_eq!(s3.size(), 6);
        let labels: Vec<&str> = s3.labels().unwrap().iter().map(|s| s.as_str()).collect();
        assert_eq!(labels, ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        assert_eq!(sym_group(4).size(), 24);
        // (12)(23) applies (23) first
        assert_eq!(s3.mul(el(&s3, "(12)"), el(&s3, "(23)")), el(&s3, "(123)"));
    }

    #[test]
    fn conjugation() {
        let s3 = sym_group(3);
        let q = conj_functor(&s3);
        assert!(q.is_quandle());
        assert_eq!(q.op(el(&s3, "(12)"), el(&s3, "(13)")), el(&s3, "(23)"));
        assert_eq!(conj_functor(&cyclic_group(5)), Rack::trivial(5));
        let (a, b) = (sym_group(3), cyclic_group(2));
        assert_eq!(
            conj_functor(&direct_product(&a, &b)),
            Rack::product(&conj_functor(&a), &conj_functor(&b))
        );
    }

    #[test]
    fn subgroups() {
        let q8 = quaternion_group();
        assert_eq!(center(&q8), vec![0, 1]);
        let s3 = sym_group(3);
        let a3 = vec![el(&s3, "e"), el(&s3, "(123)"), el(&s3, "(132)")];
        let mut a3s = a3.clone();
        a3s.sort();
        assert_eq!(group_commutator(&s3, &s3.whole(), &a3s), a3s);
        assert_eq!(
            group_commutator(&s3, &s3.trivial_subgroup(), &s3.whole()),
            vec![0]
        );
        assert_eq!(normal_subgroups(&s3).len(), 3);
        assert_eq!(normal_subgroups(&q8).len(), 6);
    }

    /// Every subset closed under products, inverses and conjugation.
    fn brute_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
        let n = g.size();
        let mut out: Vec<Subgroup> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|&x| mask >> x & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.binary_search(&g.identity()).is_ok())
            .filter(|s| {
                s.iter().all(|&x| {
                    s.binary_search(&g.inv(x)).is_ok()
                        && s.iter().all(|&y| s.binary_search(&g.mul(x, y)).is_ok())
                })
            })
            .filter(|s| is_normal(g, s))
            .collect();
        out.sort();
        out.sort_by_key(|s| s.len());
        out
    }

    #[test]
    fn normal_subgroups_match_subset_search() {
        let z2 = cyclic_group(2);
        for g in [
            sym_group(3),
            quaternion_group(),
            dihedral_group(4),
            dihedral_group(3),
            cyclic_group(8),
            cyclic_group(6),
            direct_product(&z2, &z2),
            direct_product(&cyclic_group(4), &z2),
        ] {
            assert_eq!(normal_subgroups(&g), brute_normal_subgroups(&g));
        }
    }

    #[test]
    fn central_extensions() {
        let q8 = quaternion_group();
        let (_, f) = quotient_group(&q8, &[0, 1]).unwrap();
        assert!(is_central_extension_grp(&f).unwrap());
        let s3 = sym_group(3);
        let a3 = normal_closure(&s3, &[el(&s3, "(123)")]);
        let (_, q) = quotient_group(&s3, &a3).unwrap();
        assert!(!is_central_extension_grp(&q).unwrap());
        let (ab, unit) = centralize_grp(&q).unwrap();
        assert_eq!(ab.dom().size(), 2);
        assert!(ab.map().iter().enumerate().all(|(i, &j)| i == j));
        assert_eq!(unit.cod().size(), 2);
        assert!(is_central_extension_grp(&GroupHom::identity(&s3)).unwrap());
        let (_, z) = quotient_group(&cyclic_group(4), &[0, 2]).unwrap();
        let (ab, _) = centralize_grp(&z).unwrap();
        assert_eq!(ab.dom().size(), 4);
    }

    #[test]
    fn quaternion_square_gap() {
        let q8 = quaternion_group();
        let i = normal_closure(&q8, &[el(&q8, "i")]);
        let j = normal_closure(&q8, &[el(&q8, "j")]);
        assert_eq!(i.len(), 4);
        let sq = GroupSquare::of_quotients(&q8, &i, &j).unwrap();
        assert!(sq.is_double_extension());
        assert!(!is_double_central_extension_grp(&sq).unwrap());
        assert!(sq.comparison_is_central().unwrap());
        assert_eq!(group_commutator(&q8, &i, &j), vec![0, 1]);
    }
}
