//! Congruences on finite racks, stored as canonical partitions.
//!
//! Each element maps to the least member of its class, so two congruences on
//! the same carrier are equal exactly when their class arrays are.

use std::fmt;

use crate::error::{Error, Result};
use crate::rack::{Morphism, Rack};

#[derive(Clone)]
pub struct Congruence {
    carrier: Rack,
    /// Least member of the class of each element.
    rep: Vec<usize>,
    /// Position of each element's class in `classes`.
    block: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Congruence {
    /// Canonicalizes an arbitrary labelling of blocks. The caller guarantees
    /// compatibility.
    fn from_labels(carrier: &Rack, labels: &[usize]) -> Congruence {
        let n = carrier.size();
        let mut first = std::collections::HashMap::new();
        let mut block = vec![0; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let b = *first.entry(labels[x]).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[b].push(x);
            block[x] = b;
        }
        let rep = (0..n).map(|x| classes[block[x]][0]).collect();
        Congruence {
            carrier: carrier.clone(),
            rep,
            block,
            classes,
        }
    }

    pub fn diagonal(a: &Rack) -> Congruence {
        let ids: Vec<usize> = (0..a.size()).collect();
        Congruence::from_labels(a, &ids)
    }

    pub fn full(a: &Rack) -> Congruence {
        Congruence::from_labels(a, &vec![0; a.size()])
    }

    /// Smallest congruence containing `pairs`.
    pub fn generated(a: &Rack, pairs: &[(usize, usize)]) -> Result<Congruence> {
        let mut c = Closure::new(a);
        for &(u, v) in pairs {
            c.add_checked(u, v)?;
        }
        Ok(c.finish())
    }

    /// Builds a congruence from explicit classes, checking that they form a
    /// compatible partition.
    pub fn from_classes(a: &Rack, classes: &[Vec<usize>]) -> Result<Congruence> {
        let n = a.size();
        let mut labels = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n {
                    return Err(Error::Index { index: x, size: n });
                }
                if labels[x] != usize::MAX {
                    return Err(Error::Shape(format!("{x} appears in two classes")));
                }
                labels[x] = i;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Shape(format!("{x} is in no class")));
        }
        let c = Congruence::from_labels(a, &labels);
        if let Some((u, v)) = c.compatibility_failure() {
            return Err(Error::Shape(format!(
                "partition is not compatible: {u} and {v} are forced together"
            )));
        }
        Ok(c)
    }

    /// `a ≡ b` iff `f(a) = f(b)`.
    pub fn kernel_pair(f: &Morphism) -> Congruence {
        Congruence::from_labels(f.dom(), f.map())
    }

    pub fn carrier(&self) -> &Rack {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.rep.len()
    }

    /// Least member of the class of `x`.
    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.rep[x]
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rep[x] == self.rep[y]
    }

    /// Sorted members of the class of `x`.
    pub fn class_of(&self, x: usize) -> &[usize] {
        &self.classes[self.block[x]]
    }

    /// Classes sorted by least member, members ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class of `x` in [`Congruence::classes`].
    pub fn block(&self, x: usize) -> usize {
        self.block[x]
    }

    pub fn is_diagonal(&self) -> bool {
        self.classes.len() == self.size()
    }

    pub fn is_full(&self) -> bool {
        self.classes.len() <= 1
    }

    /// Least pair `(x, y)` with `x < y` related here, if any.
    pub fn first_nontrivial_pair(&self) -> Option<(usize, usize)> {
        self.classes
            .iter()
            .find(|c| c.len() > 1)
            .map(|c| (c[0], c[1]))
    }

    /// Refinement: every pair related by `self` is related by `other`.
    pub fn le(&self, other: &Congruence) -> bool {
        self.same_carrier(other).is_ok()
            && (0..self.size()).all(|x| other.rep[x] == other.rep[self.rep[x]])
    }

    fn same_carrier(&self, other: &Congruence) -> Result<()> {
        if self.carrier == other.carrier {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    pub fn meet(&self, other: &Congruence) -> Result<Congruence> {
        self.same_carrier(other)?;
        let n = self.size();
        let labels: Vec<usize> = (0..n).map(|x| self.rep[x] * n + other.rep[x]).collect();
        Ok(Congruence::from_labels(&self.carrier, &labels))
    }

    pub fn join(&self, other: &Congruence) -> Result<Congruence> {
        self.same_carrier(other)?;
        let mut c = Closure::new(&self.carrier);
        for x in 0..self.size() {
            c.add(x, self.rep[x]);
            c.add(x, other.rep[x]);
        }
        Ok(c.finish())
    }

    /// Quotient rack with classes indexed by increasing least member, and the
    /// projection onto it.
    pub fn quotient(&self) -> (Rack, Morphism) {
        let k = self.num_classes();
        let a = &self.carrier;
        let mut op = Vec::with_capacity(k * k);
        for cx in &self.classes {
            for cy in &self.classes {
                op.push(self.block[a.op(cx[0], cy[0])]);
            }
        }
        let mut q = Rack::from_flat_trusted(k, op);
        if let Some(labels) = a.labels() {
            q = q.with_labels(
                self.classes
                    .iter()
                    .map(|c| format!("[{}]", labels[c[0]]))
                    .collect(),
            );
        }
        let proj = Morphism::trusted(a.clone(), q.clone(), self.block.clone());
        (q, proj)
    }

    /// The unique `g` with `g ∘ projection = f`, where the projection is the
    /// one returned by [`Congruence::quotient`].
    pub fn factor_through(&self, f: &Morphism) -> Result<Morphism> {
        if f.dom() != &self.carrier {
            return Err(Error::DomainMismatch);
        }
        for x in 0..self.size() {
            if f.apply(x) != f.apply(self.rep[x]) {
                return Err(Error::NotFactorable(self.rep[x], x));
            }
        }
        let (q, _) = self.quotient();
        let map = self.classes.iter().map(|c| f.apply(c[0])).collect();
        Ok(Morphism::trusted(q, f.cod().clone(), map))
    }

    /// A pair `(u, v)` that compatibility would force together but that lies
    /// in different classes.
    pub fn compatibility_failure(&self) -> Option<(usize, usize)> {
        let a = &self.carrier;
        for class in &self.classes {
            let u = class[0];
            for &v in &class[1..] {
                for c in 0..self.size() {
                    for (p, q) in [
                        (a.op(u, c), a.op(v, c)),
                        (a.op(c, u), a.op(c, v)),
                        (a.inv(u, c), a.inv(v, c)),
                        (a.inv(c, u), a.inv(c, v)),
                    ] {
                        if !self.related(p, q) {
                            return Some((p.min(q), p.max(q)));
                        }
                    }
                }
            }
        }
        None
    }

    /// Relational composition `R ∘ S = S ∘ R`.
    pub fn permutes_with(&self, other: &Congruence) -> bool {
        let n = self.size();
        let compose = |r: &Congruence, s: &Congruence| {
            let mut m = vec![false; n * n];
            for x in 0..n {
                for &y in r.class_of(x) {
                    for &z in s.class_of(y) {
                        m[x * n + z] = true;
                    }
                }
            }
            m
        };
        compose(self, other) == compose(other, self)
    }

    /// All pairs, for serialization and tests.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in &self.classes {
            for &x in c {
                for &y in c {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl PartialEq for Congruence {
    fn eq(&self, other: &Congruence) -> bool {
        self.rep == other.rep && self.carrier == other.carrier
    }
}

impl Eq for Congruence {}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence{:?}", self.classes)
    }
}

/// Union-find with path halving; representatives are arbitrary until
/// [`Congruence`] canonicalizes them.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }
}

/// Incremental congruence closure. Pairs may be streamed in; each merge
/// enqueues its translates under `◁ c`, `c ◁`, `◁⁻¹ c` and `c ◁⁻¹`.
pub struct Closure {
    rack: Rack,
    uf: UnionFind,
    queue: Vec<(usize, usize)>,
}

impl Closure {
    pub fn new(rack: &Rack) -> Closure {
        Closure {
            rack: rack.clone(),
            uf: UnionFind::new(rack.size()),
            queue: Vec::new(),
        }
    }

    pub fn add_checked(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.rack.size();
        for x in [u, v] {
            if x >= n {
                return Err(Error::Index { index: x, size: n });
            }
        }
        self.add(u, v);
        Ok(())
    }

    #[inline]
    pub fn add(&mut self, u: usize, v: usize) {
        if self.uf.find(u) == self.uf.find(v) {
            return;
        }
        self.queue.push((u, v));
        while let Some((u, v)) = self.queue.pop() {
            if !self.uf.union(u, v) {
                continue;
            }
            let a = &self.rack;
            for c in 0..a.size() {
                for (p, q) in [
                    (a.op(u, c), a.op(v, c)),
                    (a.op(c, u), a.op(c, v)),
                    (a.inv(u, c), a.inv(v, c)),
                    (a.inv(c, u), a.inv(c, v)),
                ] {
                    if self.uf.find(p) != self.uf.find(q) {
                        self.queue.push((p, q));
                    }
                }
            }
        }
    }

    #[inline]
    pub fn related(&mut self, u: usize, v: usize) -> bool {
        self.uf.find(u) == self.uf.find(v)
    }

    pub fn finish(mut self) -> Congruence {
        let labels: Vec<usize> = (0..self.rack.size()).map(|x| self.uf.find(x)).collect();
        Congruence::from_labels(&self.rack, &labels)
    }
}

/// A 2×2 matrix with rows `(a, b)`, `(d, c)` and columns `(a, d)`, `(b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadruple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Quadruple {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Quadruple {
        Quadruple { a, b, c, d }
    }

    pub fn degenerate(x: usize) -> Quadruple {
        Quadruple::new(x, x, x, x)
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Membership in `R □ S`.
    pub fn lies_in(&self, r: &Congruence, s: &Congruence) -> bool {
        r.related(self.a, self.b)
            && r.related(self.d, self.c)
            && s.related(self.a, self.d)
            && s.related(self.b, self.c)
    }
}

/// Visits `R □ S` in lexicographic `(a, b, c, d)` order without materializing it.
pub fn for_each_quadruple(
    r: &Congruence,
    s: &Congruence,
    mut f: impl FnMut(Quadruple),
) -> Result<()> {
    r.same_carrier(s)?;
    for a in 0..r.size() {
        for &b in r.class_of(a) {
            for &c in s.class_of(b) {
                for &d in r.class_of(c) {
                    if s.related(a, d) {
                        f(Quadruple::new(a, b, c, d));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `R □ S` as a list in lexicographic order.
pub fn double_parallelistic(r: &Congruence, s: &Congruence) -> Result<Vec<Quadruple>> {
    let mut out = Vec::new();
    for_each_quadruple(r, s, |q| out.push(q))?;
    Ok(out)
}

/// The kernel pair of `f` as a rack, with its two projections.
pub fn kernel_pair_subrack(f: &Morphism) -> (Rack, Morphism, Morphism) {
    let p = crate::square::pullback(f, f).expect("a map shares its own codomain");
    (p.object, p.left, p.right)
}

/// Every congruence of `a`. Exponential; meant for small carriers in tests.
pub fn all_congruences(a: &Rack) -> Vec<Congruence> {
    congruences_below(&Congruence::full(a))
}

/// Every congruence contained in `bound`.
pub fn congruences_below(bound: &Congruence) -> Vec<Congruence> {
    let a = bound.carrier().clone();
    let n = a.size();
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    // block_owner[b] = bound-class of the elements in block b
    let mut block_owner: Vec<usize> = Vec::new();
    fn go(
        x: usize,
        a: &Rack,
        bound: &Congruence,
        labels: &mut Vec<usize>,
        block_owner: &mut Vec<usize>,
        out: &mut Vec<Congruence>,
    ) {
        if x == a.size() {
            let c = Congruence::from_labels(a, labels);
            if c.compatibility_failure().is_none() {
                out.push(c);
            }
            return;
        }
        let owner = bound.rep(x);
        for b in 0..block_owner.len() {
            if block_owner[b] == owner {
                labels[x] = b;
                go(x + 1, a, bound, labels, block_owner, out);
            }
        }
        labels[x] = block_owner.len();
        block_owner.push(owner);
        go(x + 1, a, bound, labels, block_owner, out);
        block_owner.pop();
    }
    go(0, &a, bound, &mut labels, &mut block_owner, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: the least compatible partition containing `pairs`,
    /// found by scanning every partition of the carrier.
    fn oracle_closure(a: &Rack, pairs: &[(usize, usize)]) -> Congruence {
        let mut best: Option<Congruence> = None;
        for c in all_congruences(a) {
            if pairs.iter().all(|&(u, v)| c.related(u, v))
                && best
                    .as_ref()
                    .is_none_or(|b| c.num_classes() > b.num_classes())
            {
                best = Some(c);
            }
        }
        best.unwrap()
    }

    fn small_racks() -> Vec<Rack> {
        let mut v = Vec::new();
        for n in 1..=5 {
            v.push(Rack::trivial(n));
            v.push(Rack::dihedral(n));
            v.push(Rack::cyclic(n));
        }
        v.push(Rack::product(&Rack::dihedral(3), &Rack::cyclic(1)));
        v.push(Rack::product(&Rack::trivial(2), &Rack::cyclic(2)));
        v
    }

    #[test]
    fn closure_examples() {
        let d3 = Rack::dihedral(3);
        assert!(Congruence::generated(&d3, &[]).unwrap().is_diagonal());
        assert!(Congruence::generated(&d3, &[(0, 1)]).unwrap().is_full());
        let t4 = Rack::trivial(4);
        let c = Congruence::generated(&t4, &[(0, 1)]).unwrap();
        assert_eq!(c.classes(), &[vec![0, 1], vec![2], vec![3]]);
        assert!(matches!(
            Congruence::generated(&t4, &[(0, 4)]),
            Err(Error::Index { index: 4, size: 4 })
        ));
    }

    #[test]
    fn closure_matches_exhaustive_oracle() {
        for a in small_racks() {
            let n = a.size();
            let all_pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let mut gens: Vec<Vec<(usize, usize)>> = vec![vec![]];
            for (i, &p) in all_pairs.iter().enumerate() {
                gens.push(vec![p]);
                for &q in &all_pairs[i + 1..] {
                    gens.push(vec![p, q]);
                }
            }
            for g in gens {
                assert_eq!(
                    Congruence::generated(&a, &g).unwrap(),
                    oracle_closure(&a, &g),
                    "{a:?} {g:?}"
                );
            }
        }
    }

    #[test]
    fn kernel_pairs_and_lattice() {
        let d6 = Rack::dihedral(6);
        let mod3 = Morphism::new(
            d6.clone(),
            Rack::dihedral(3),
            (0..6).map(|x| x % 3).collect(),
        )
        .unwrap();
        let mod2 = Morphism::new(
            d6.clone(),
            Rack::dihedral(2),
            (0..6).map(|x| x % 2).collect(),
        )
        .unwrap();
        let e3 = Congruence::kernel_pair(&mod3);
        assert_eq!(e3.classes(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);
        let e2 = Congruence::kernel_pair(&mod2);
        assert!(e3.meet(&e2).unwrap().is_diagonal());
        assert!(e3.join(&e2).unwrap().is_full());
        assert!(Congruence::kernel_pair(&Morphism::identity(&d6)).is_diagonal());
        let d4 = Rack::dihedral(4);
        assert!(Congruence::kernel_pair(&Morphism::terminal(&d4)).is_full());
        let full = Congruence::full(&d6);
        assert_eq!(full.meet(&e3).unwrap(), e3);
        assert_eq!(Congruence::diagonal(&d6).join(&e3).unwrap(), e3);
        assert_eq!(
            e3.meet(&Congruence::diagonal(&d4)),
            Err(Error::CarrierMismatch)
        );
    }

    #[test]
    fn quotients_and_factoring() {
        let d6 = Rack::dihedral(6);
        let mod3 = Morphism::new(
            d6.clone(),
            Rack::dihedral(3),
            (0..6).map(|x| x % 3).collect(),
        )
        .unwrap();
        let e3 = Congruence::kernel_pair(&mod3);
        let (q, proj) = e3.quotient();
        assert_eq!(q, Rack::dihedral(3));
        assert_eq!(Congruence::kernel_pair(&proj), e3);
        let (q, proj) = Congruence::diagonal(&d6).quotient();
        assert_eq!(q, d6);
        assert_eq!(proj, Morphism::identity(&d6));
        assert_eq!(Congruence::full(&d6).quotient().0.size(), 1);

        let g = e3.factor_through(&mod3).unwrap();
        assert!(g.is_injective() && g.is_extension());
        assert_eq!(
            Congruence::diagonal(&d6)
                .factor_through(&mod3)
                .unwrap()
                .map(),
            mod3.map()
        );
        let mod2 = Morphism::new(
            d6.clone(),
            Rack::dihedral(2),
            (0..6).map(|x| x % 2).collect(),
        )
        .unwrap();
        assert_eq!(e3.factor_through(&mod2), Err(Error::NotFactorable(0, 3)));
    }

    #[test]
    fn parallelistic_examples() {
        let d5 = Rack::dihedral(5);
        let diag = Congruence::diagonal(&d5);
        let q = double_parallelistic(&diag, &diag).unwrap();
        assert_eq!(q, (0..5).map(Quadruple::degenerate).collect::<Vec<_>>());

        let t2 = Rack::trivial(2);
        let q = double_parallelistic(&Congruence::diagonal(&t2), &Congruence::full(&t2)).unwrap();
        assert_eq!(
            q,
            vec![
                Quadruple::new(0, 0, 0, 0),
                Quadruple::new(0, 0, 1, 1),
                Quadruple::new(1, 1, 0, 0),
                Quadruple::new(1, 1, 1, 1),
            ]
        );

        let d36 = Rack::dihedral(36);
        let modulo = |k: usize| {
            Congruence::kernel_pair(
                &Morphism::new(
                    d36.clone(),
                    Rack::dihedral(k),
                    (0..36).map(|x| x % k).collect(),
                )
                .unwrap(),
            )
        };
        let (r, s) = (modulo(6), modulo(3));
        assert_eq!(r.num_classes(), 6);
        assert_eq!(s.num_classes(), 3);
        let q = double_parallelistic(&r, &s).unwrap();
        assert!(q.contains(&Quadruple::new(0, 0, 0, 6)));
        // sorted and complete against a direct filter
        assert!(q.windows(2).all(|w| w[0] < w[1]));
        let brute = (0..36usize.pow(4))
            .map(|i| Quadruple::new(i / 46656, i / 1296 % 36, i / 36 % 36, i % 36))
            .filter(|q| q.lies_in(&r, &s))
            .count();
        assert_eq!(q.len(), brute);
    }

    #[test]
    fn kernel_pair_objects() {
        let d2 = Rack::dihedral(2);
        let (obj, p1, p2) = kernel_pair_subrack(&Morphism::terminal(&d2));
        assert_eq!(obj.size(), 4);
        assert_eq!(p1.map(), &[0, 0, 1, 1]);
        assert_eq!(p2.map(), &[0, 1, 0, 1]);
        let d3 = Rack::dihedral(3);
        let (obj, _, _) = kernel_pair_subrack(&Morphism::identity(&d3));
        assert_eq!(obj, d3);
    }

    #[test]
    fn from_classes_validates() {
        let d6 = Rack::dihedral(6);
        let c = Congruence::from_classes(&d6, &[vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        assert_eq!(c.num_classes(), 2);
        assert!(Congruence::from_classes(&d6, &[vec![0, 1], vec![2, 3, 4, 5]]).is_err());
        assert!(Congruence::from_classes(&d6, &[vec![0, 1, 2, 3, 4]]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // congruences of D3: diagonal and full
        assert_eq!(all_congruences(&Rack::dihedral(3)).len(), 2);
        // every partition of a trivial quandle is compatible: Bell(4)
        assert_eq!(all_congruences(&Rack::trivial(4)).len(), 15);
        let d6 = Rack::dihedral(6);
        let parity = Congruence::from_classes(&d6, &[vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        for c in congruences_below(&parity) {
            assert!(c.le(&parity));
        }
    }

    #[test]
    fn first_pair() {
        let t4 = Rack::trivial(4);
        let c = Congruence::generated(&t4, &[(2, 3)]).unwrap();
        assert_eq!(c.first_nontrivial_pair(), Some((2, 3)));
        assert_eq!(Congruence::diagonal(&t4).first_nontrivial_pair(), None);
    }
}
