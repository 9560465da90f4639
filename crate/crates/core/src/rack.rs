//! Finite racks and quandles stored as dense operation tables, plus the
//! morphisms between them.
//!
//! Elements are the indices `0..n`. `op(x, y)` is `x ◁ y` and `inv(x, y)` is
//! `x ◁⁻¹ y`; both tables are materialized at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Axiom, Error, Result};

#[derive(Clone)]
pub struct Rack(Arc<Inner>);

struct Inner {
    n: usize,
    op: Vec<usize>,
    inv: Vec<usize>,
    quandle: bool,
    name: Option<String>,
    labels: Option<Vec<String>>,
}

/// Direction of a single step `x ◁ a` or `x ◁⁻¹ a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl Rack {
    /// Validates a square table and builds the rack (R1 and R2 are checked).
    pub fn new(table: &[Vec<usize>]) -> Result<Rack> {
        let n = table.len();
        let mut op = Vec::with_capacity(n * n);
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {x} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Shape(format!(
                        "entry op[{x}][{y}] = {v} out of range for size {n}"
                    )));
                }
            }
            op.extend_from_slice(row);
        }
        Rack::from_flat(n, op)
    }

    /// Like [`Rack::new`] but takes the row-major table directly.
    pub fn from_flat(n: usize, op: Vec<usize>) -> Result<Rack> {
        if op.len() != n * n {
            return Err(Error::Shape(format!(
                "table has {} entries, expected {}",
                op.len(),
                n * n
            )));
        }
        if let Some(&v) = op.iter().find(|&&v| v >= n) {
            return Err(Error::Shape(format!("entry {v} out of range for size {n}")));
        }
        let inv = invert_columns(n, &op)?;
        for x in 0..n {
            for a in 0..n {
                let xa = op[x * n + a];
                for b in 0..n {
                    let lhs = op[xa * n + b];
                    let rhs = op[op[x * n + b] * n + op[a * n + b]];
                    if lhs != rhs {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::R2,
                            witness: (x, a, b),
                        });
                    }
                }
            }
        }
        Ok(Rack::assemble(n, op, inv))
    }

    /// Builds a rack from a table known to satisfy the axioms (quotients,
    /// products, pullbacks). Only R1 is re-derived.
    pub(crate) fn from_flat_trusted(n: usize, op: Vec<usize>) -> Rack {
        let inv = invert_columns(n, &op).expect("trusted table must satisfy R1");
        Rack::assemble(n, op, inv)
    }

    fn assemble(n: usize, op: Vec<usize>, inv: Vec<usize>) -> Rack {
        let quandle = (0..n).all(|a| op[a * n + a] == a);
        Rack(Arc::new(Inner {
            n,
            op,
            inv,
            quandle,
            name: None,
            labels: None,
        }))
    }

    pub fn trivial(n: usize) -> Rack {
        let op = (0..n).flat_map(|x| std::iter::repeat_n(x, n)).collect();
        Rack::from_flat_trusted(n, op).named(format!("T{n}"))
    }

    /// `D_n` with `x ◁ y = 2y − x mod n`.
    pub fn dihedral(n: usize) -> Rack {
        let mut op = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                op.push((2 * y + n - x) % n);
            }
        }
        Rack::from_flat_trusted(n, op).named(format!("D{n}"))
    }

    /// The cyclic rack `x ◁ y = x + 1 mod n`; not a quandle once `n ≥ 2`.
    pub fn cyclic(n: usize) -> Rack {
        let mut op = Vec::with_capacity(n * n);
        for x in 0..n {
            for _ in 0..n {
                op.push((x + 1) % n);
            }
        }
        Rack::from_flat_trusted(n, op).named(format!("C{n}"))
    }

    /// Componentwise product; element `(a, b)` has index `a * |B| + b`.
    pub fn product(a: &Rack, b: &Rack) -> Rack {
        let (na, nb) = (a.size(), b.size());
        let n = na * nb;
        let mut op = Vec::with_capacity(n * n);
        for x in 0..n {
            let (x1, x2) = (x / nb, x % nb);
            for y in 0..n {
                let (y1, y2) = (y / nb, y % nb);
                op.push(a.op(x1, y1) * nb + b.op(x2, y2));
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
            .collect();
        Rack::from_flat_trusted(n, op).with_labels(labels)
    }

    /// Restriction to a subset closed under `◁` and `◁⁻¹`, reindexed densely
    /// in increasing order. Returns the subrack and the inclusion indices.
    pub fn subrack(&self, subset: &[usize]) -> Result<(Rack, Vec<usize>)> {
        let n = self.size();
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut pos = vec![usize::MAX; n];
        for (i, &m) in members.iter().enumerate() {
            if m >= n {
                return Err(Error::Index { index: m, size: n });
            }
            pos[m] = i;
        }
        let k = members.len();
        let mut op = Vec::with_capacity(k * k);
        for &x in &members {
            for &y in &members {
                for v in [self.op(x, y), self.inv(x, y)] {
                    if pos[v] == usize::MAX {
                        return Err(Error::NotClosed(v));
                    }
                }
                op.push(pos[self.op(x, y)]);
            }
        }
        let mut sub = Rack::from_flat_trusted(k, op);
        if let Some(labels) = self.labels() {
            sub = sub.with_labels(members.iter().map(|&m| labels[m].clone()).collect());
        }
        Ok((sub, members))
    }

    pub fn size(&self) -> usize {
        self.0.n
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.0.op[x * self.0.n + y]
    }

    #[inline]
    pub fn inv(&self, x: usize, y: usize) -> usize {
        self.0.inv[x * self.0.n + y]
    }

    /// `x ◁ a` or `x ◁⁻¹ a` depending on `sign`.
    #[inline]
    pub fn act(&self, x: usize, a: usize, sign: Sign) -> usize {
        match sign {
            Sign::Pos => self.op(x, a),
            Sign::Neg => self.inv(x, a),
        }
    }

    pub fn is_quandle(&self) -> bool {
        self.0.quandle
    }

    /// `◁⁻¹ = ◁`.
    pub fn is_involutive(&self) -> bool {
        self.0.op == self.0.inv
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    /// Display label of an element; the index itself when unlabelled.
    pub fn label(&self, x: usize) -> String {
        match &self.0.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Index of the element carrying `label`.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels()?.iter().position(|l| l == label)
    }

    pub fn named(self, name: impl Into<String>) -> Rack {
        let mut inner = self.clone_inner();
        inner.name = Some(name.into());
        Rack(Arc::new(inner))
    }

    /// Panics if the label count differs from the size.
    pub fn with_labels(self, labels: Vec<String>) -> Rack {
        assert_eq!(labels.len(), self.size(), "one label per element");
        let mut inner = self.clone_inner();
        inner.labels = Some(labels);
        Rack(Arc::new(inner))
    }

    fn clone_inner(&self) -> Inner {
        Inner {
            n: self.0.n,
            op: self.0.op.clone(),
            inv: self.0.inv.clone(),
            quandle: self.0.quandle,
            name: self.0.name.clone(),
            labels: self.0.labels.clone(),
        }
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n)
            .map(|x| self.0.op[x * n..(x + 1) * n].to_vec())
            .collect()
    }

    /// Same carrier object, without comparing tables.
    pub fn ptr_eq(&self, other: &Rack) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

fn invert_columns(n: usize, op: &[usize]) -> Result<Vec<usize>> {
    let mut inv = vec![usize::MAX; n * n];
    for y in 0..n {
        for x in 0..n {
            let v = op[x * n + y];
            let slot = &mut inv[v * n + y];
            if *slot != usize::MAX {
                // two rows hit v in column y
                return Err(Error::AxiomViolation {
                    axiom: Axiom::R1,
                    witness: (*slot, x, y),
                });
            }
            *slot = x;
        }
    }
    Ok(inv)
}

impl PartialEq for Rack {
    fn eq(&self, other: &Rack) -> bool {
        self.ptr_eq(other) || (self.0.n == other.0.n && self.0.op == other.0.op)
    }
}

impl Eq for Rack {}

impl fmt::Debug for Rack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rack")
            .field("name", &self.0.name)
            .field("size", &self.0.n)
            .field("op", &self.table())
            .finish()
    }
}

/// An operation-preserving map between racks.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    dom: Rack,
    cod: Rack,
    map: Vec<usize>,
}

impl Morphism {
    pub fn new(dom: Rack, cod: Rack, map: Vec<usize>) -> Result<Morphism> {
        if map.len() != dom.size() {
            return Err(Error::Shape(format!(
                "map has length {}, domain has size {}",
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
            for a in 0..dom.size() {
                if map[dom.op(x, a)] != cod.op(map[x], map[a]) {
                    return Err(Error::NotHomomorphism { x, a });
                }
            }
        }
        Ok(Morphism { dom, cod, map })
    }

    pub(crate) fn trusted(dom: Rack, cod: Rack, map: Vec<usize>) -> Morphism {
        debug_assert_eq!(map.len(), dom.size());
        Morphism { dom, cod, map }
    }

    pub fn identity(a: &Rack) -> Morphism {
        Morphism::trusted(a.clone(), a.clone(), (0..a.size()).collect())
    }

    /// The unique map onto the one-element quandle.
    pub fn terminal(a: &Rack) -> Morphism {
        Morphism::trusted(a.clone(), Rack::trivial(1), vec![0; a.size()])
    }

    pub fn dom(&self) -> &Rack {
        &self.dom
    }

    pub fn cod(&self) -> &Rack {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        if self.cod != g.dom {
            return Err(Error::DomainMismatch);
        }
        let map = self.map.iter().map(|&x| g.map[x]).collect();
        Ok(Morphism::trusted(self.dom.clone(), g.cod.clone(), map))
    }

    /// First codomain element that is not hit, if any.
    pub fn first_missing(&self) -> Option<usize> {
        let mut hit = vec![false; self.cod.size()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.iter().position(|&h| !h)
    }

    /// Surjectivity.
    pub fn is_extension(&self) -> bool {
        self.first_missing().is_none()
    }

    pub fn require_extension(&self) -> Result<()> {
        match self.first_missing() {
            None => Ok(()),
            Some(missing) => Err(Error::NotSurjective { missing }),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.map
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism({} -> {}, {:?})",
            self.dom.size(),
            self.cod.size(),
            self.map
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_axioms(t: &[Vec<usize>]) -> bool {
        let n = t.len();
        let r1 = (0..n).all(|y| {
            let mut col: Vec<usize> = (0..n).map(|x| t[x][y]).collect();
            col.sort_unstable();
            col == (0..n).collect::<Vec<_>>()
        });
        let r2 =
            (0..n).all(|x| (0..n).all(|a| (0..n).all(|b| t[t[x][a]][b] == t[t[x][b]][t[a][b]])));
        r1 && r2
    }

    #[test]
    fn dihedral_three_table() {
        let t = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(brute_axioms(&t));
        let r = Rack::new(&t).unwrap();
        assert!(r.is_quandle());
        assert_eq!(r, Rack::dihedral(3));
    }

    #[test]
    fn trivial_two() {
        let r = Rack::new(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(r.is_quandle());
        assert_eq!(r, Rack::trivial(2));
    }

    #[test]
    fn cyclic_three_is_rack_not_quandle() {
        let t: Vec<Vec<usize>> = (0..3).map(|x| vec![(x + 1) % 3; 3]).collect();
        assert!(brute_axioms(&t));
        let r = Rack::new(&t).unwrap();
        assert!(!r.is_quandle());
        assert_eq!(r.op(0, 0), 1);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(
            Rack::new(&[vec![0, 0], vec![1]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            Rack::new(&[vec![0, 2], vec![1, 1]]),
            Err(Error::Shape(_))
        ));
        // column 0 is constant
        assert!(matches!(
            Rack::new(&[vec![0, 0], vec![0, 1]]),
            Err(Error::AxiomViolation {
                axiom: Axiom::R1,
                ..
            })
        ));
        // x ◁ y = x + y mod 3 is bijective in x but not self-distributive
        let t: Vec<Vec<usize>> = (0..3)
            .map(|x| (0..3).map(|y| (x + y) % 3).collect())
            .collect();
        assert!(!brute_axioms(&t));
        assert!(matches!(
            Rack::new(&t),
            Err(Error::AxiomViolation {
                axiom: Axiom::R2,
                ..
            })
        ));
    }

    #[test]
    fn dihedral_family_validates_and_is_involutive() {
        for n in 0..=64 {
            let d = Rack::dihedral(n);
            let again = Rack::new(&d.table()).unwrap();
            assert_eq!(again, d);
            assert!(d.is_involutive());
            assert!(d.is_quandle());
        }
        assert_eq!(Rack::dihedral(1).size(), 1);
        assert_eq!(Rack::dihedral(4).op(0, 1), 2);
    }

    #[test]
    fn cyclic_family() {
        for n in 1..=12 {
            let c = Rack::cyclic(n);
            Rack::new(&c.table()).unwrap();
            assert_eq!(c.is_quandle(), n == 1);
        }
    }

    #[test]
    fn empty_rack() {
        let e = Rack::new(&[]).unwrap();
        assert_eq!(e.size(), 0);
        assert!(e.is_quandle());
        let m = Morphism::new(e.clone(), Rack::dihedral(3), vec![]).unwrap();
        assert!(!m.is_extension());
        assert!(Morphism::new(Rack::trivial(1), e, vec![0]).is_err());
    }

    #[test]
    fn product_and_subrack() {
        let p = Rack::product(&Rack::dihedral(3), &Rack::trivial(2));
        Rack::new(&p.table()).unwrap();
        assert_eq!(p.size(), 6);
        // D3 × {0}
        let (s, members) = p.subrack(&[0, 2, 4]).unwrap();
        assert_eq!(members, vec![0, 2, 4]);
        assert_eq!(s, Rack::dihedral(3));
        assert!(matches!(
            Rack::dihedral(3).subrack(&[0, 1]),
            Err(Error::NotClosed(2))
        ));
    }

    #[test]
    fn morphisms() {
        let d6 = Rack::dihedral(6);
        let d3 = Rack::dihedral(3);
        let m = Morphism::new(d6.clone(), d3.clone(), (0..6).map(|x| x % 3).collect()).unwrap();
        assert!(m.is_extension());
        assert!(Morphism::identity(&d6).is_extension());
        let err = Morphism::new(d3.clone(), Rack::trivial(3), vec![0, 1, 2]).unwrap_err();
        assert_eq!(err, Error::NotHomomorphism { x: 0, a: 1 });
        let point = Morphism::new(Rack::trivial(1), d3.clone(), vec![0]).unwrap();
        assert!(!point.is_extension());
        let composite = m.then(&Morphism::terminal(&d3)).unwrap();
        assert_eq!(composite.map(), &[0; 6]);
    }
}
