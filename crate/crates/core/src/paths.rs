//! Primitive paths acting on a rack, membranes and volumes built from them,
//! and a bounded search over horns used to cross-check the commutator.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::congruence::{double_parallelistic, Congruence, Quadruple};
use crate::error::{Error, Result};
use crate::rack::{Morphism, Rack, Sign};
use crate::square::ExtSquare;

/// A formal word `a1^δ1 ⋯ an^δn`, acting on the right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimitivePath {
    pub steps: Vec<(usize, Sign)>,
}

impl PrimitivePath {
    pub fn new(steps: Vec<(usize, Sign)>) -> PrimitivePath {
        PrimitivePath { steps }
    }

    pub fn concat(&self, other: &PrimitivePath) -> PrimitivePath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        PrimitivePath { steps }
    }

    /// The image path under `f`.
    pub fn map(&self, f: &Morphism) -> PrimitivePath {
        PrimitivePath {
            steps: self.steps.iter().map(|&(a, s)| (f.apply(a), s)).collect(),
        }
    }
}

/// `x ◁^δ1 a1 ⋯ ◁^δn an`.
pub fn act(a: &Rack, x: usize, p: &PrimitivePath) -> Result<usize> {
    let n = a.size();
    if x >= n {
        return Err(Error::Index { index: x, size: n });
    }
    p.steps.iter().try_fold(x, |y, &(e, s)| {
        if e >= n {
            Err(Error::Index { index: e, size: n })
        } else {
            Ok(a.act(y, e, s))
        }
    })
}

/// A trail in `Eq(f)`: a head pair and signed steps by pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membrane {
    pub head: (usize, usize),
    pub steps: Vec<((usize, usize), Sign)>,
}

impl Membrane {
    pub fn is_horn(&self) -> bool {
        self.head.0 == self.head.1
    }

    fn check(&self, f: &Morphism) -> Result<()> {
        let n = f.dom().size();
        let pairs = std::iter::once(self.head).chain(self.steps.iter().map(|s| s.0));
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::NotAMembrane(format!("({u}, {v}) is out of range")));
            }
            if f.apply(u) != f.apply(v) {
                return Err(Error::NotAMembrane(format!(
                    "({u}, {v}) is not in the kernel pair"
                )));
            }
        }
        Ok(())
    }
}

pub fn membrane_endpoints(f: &Morphism, m: &Membrane) -> Result<(usize, usize)> {
    m.check(f)?;
    let a = f.dom();
    Ok(m.steps.iter().fold(m.head, |(x, y), &((p, q), s)| {
        (a.act(x, p, s), a.act(y, q, s))
    }))
}

/// A horn whose endpoints coincide.
pub fn is_disk(f: &Morphism, m: &Membrane) -> Result<bool> {
    let (x, y) = membrane_endpoints(f, m)?;
    Ok(m.is_horn() && x == y)
}

/// Every nonempty truncation closes.
pub fn retracts(f: &Morphism, m: &Membrane) -> Result<bool> {
    m.check(f)?;
    if !m.is_horn() {
        return Ok(false);
    }
    let a = f.dom();
    let (mut x, mut y) = m.head;
    for &((p, q), s) in &m.steps {
        x = a.act(x, p, s);
        y = a.act(y, q, s);
        if x != y {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A trail in `Eq(f_A) □ Eq(α⊤)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Volume {
    pub head: Quadruple,
    pub steps: Vec<(Quadruple, Sign)>,
}

impl Volume {
    pub fn horn(x: usize) -> Volume {
        Volume {
            head: Quadruple::degenerate(x),
            steps: Vec::new(),
        }
    }

    pub fn is_horn(&self) -> bool {
        let h = self.head;
        h.a == h.b && h.b == h.c && h.c == h.d
    }

    fn membrane(&self, pick: impl Fn(&Quadruple) -> (usize, usize)) -> Membrane {
        Membrane {
            head: pick(&self.head),
            steps: self.steps.iter().map(|(q, s)| (pick(q), *s)).collect(),
        }
    }
}

/// Endpoints of a volume and its four membranes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeEnds {
    pub ends: Quadruple,
    /// The `(a,b)`, `(d,c)`, `(a,d)` and `(b,c)` membranes.
    pub membranes: [Membrane; 4],
}

pub fn volume_endpoints(alpha: &ExtSquare, v: &Volume) -> Result<VolumeEnds> {
    let r = Congruence::kernel_pair(alpha.f_a());
    let s = Congruence::kernel_pair(alpha.alpha_top());
    let a = alpha.top_left();
    let n = a.size();
    for q in std::iter::once(&v.head).chain(v.steps.iter().map(|s| &s.0)) {
        if q.as_array().iter().any(|&e| e >= n) {
            return Err(Error::NotAVolume(format!("{q:?} is out of range")));
        }
        if !q.lies_in(&r, &s) {
            return Err(Error::NotAVolume(format!(
                "{q:?} is not a double parallelistic quadruple"
            )));
        }
    }
    let ends = v.steps.iter().fold(v.head, |e, &(q, sg)| {
        Quadruple::new(
            a.act(e.a, q.a, sg),
            a.act(e.b, q.b, sg),
            a.act(e.c, q.c, sg),
            a.act(e.d, q.d, sg),
        )
    });
    Ok(VolumeEnds {
        ends,
        membranes: [
            v.membrane(|q| (q.a, q.b)),
            v.membrane(|q| (q.d, q.c)),
            v.membrane(|q| (q.a, q.d)),
            v.membrane(|q| (q.b, q.c)),
        ],
    })
}

/// Result of a bounded horn search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Symmetric, sorted, deduplicated.
    pub pairs: Vec<(usize, usize)>,
    pub bound: usize,
    /// No horn longer than the reported bound reaches a new endpoint state.
    pub stabilized: bool,
}

impl OracleResult {
    pub fn closure(&self, a: &Rack) -> Congruence {
        Congruence::generated(a, &self.pairs).expect("oracle pairs are in range")
    }
}

/// Distinct signed steps by quadruples: two steps acting identically on
/// every coordinate are kept once, the first in (quadruple, +, −) order.
fn distinct_steps(a: &Rack, quads: &[Quadruple]) -> Vec<(Quadruple, Sign)> {
    let n = a.size();
    let mut column_id: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut id = |y: usize, s: Sign| {
        let col: Vec<usize> = (0..n).map(|x| a.act(x, y, s)).collect();
        let next = column_id.len();
        *column_id.entry(col).or_insert(next)
    };
    let mut ids = HashMap::new();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &q in quads {
        for s in [Sign::Pos, Sign::Neg] {
            let key: [usize; 4] = q
                .as_array()
                .map(|y| *ids.entry((y, s)).or_insert_with(|| id(y, s)));
            if seen.insert(key) {
                out.push((q, s));
            }
        }
    }
    out
}

/// Breadth-first search over horn endpoint states up to `limit` steps.
struct HornSearch {
    states: Vec<Quadruple>,
    /// `(parent state, step)` for every state but the heads.
    parent: Vec<Option<(usize, (Quadruple, Sign))>>,
    depth_reached: usize,
    stabilized: bool,
}

impl HornSearch {
    fn run(
        alpha: &ExtSquare,
        limit: Option<usize>,
        stop: impl Fn(Quadruple) -> bool,
    ) -> Result<HornSearch> {
        alpha.require_double_extension()?;
        let a = alpha.top_left();
        let quads = double_parallelistic(
            &Congruence::kernel_pair(alpha.f_a()),
            &Congruence::kernel_pair(alpha.alpha_top()),
        )?;
        let steps = distinct_steps(a, &quads);
        let mut index: HashMap<Quadruple, usize> = HashMap::new();
        let mut search = HornSearch {
            states: Vec::new(),
            parent: Vec::new(),
            depth_reached: 0,
            stabilized: false,
        };
        let mut frontier = VecDeque::new();
        for x in 0..a.size() {
            let q = Quadruple::degenerate(x);
            index.insert(q, search.states.len());
            frontier.push_back(search.states.len());
            search.states.push(q);
            search.parent.push(None);
            if stop(q) {
                return Ok(search);
            }
        }
        let mut depth = 0;
        while !frontier.is_empty() {
            if limit.is_some_and(|l| depth >= l) {
                return Ok(search);
            }
            depth += 1;
            let mut next = VecDeque::new();
            for &i in &frontier {
                let e = search.states[i];
                for &(q, sg) in &steps {
                    let t = Quadruple::new(
                        a.act(e.a, q.a, sg),
                        a.act(e.b, q.b, sg),
                        a.act(e.c, q.c, sg),
                        a.act(e.d, q.d, sg),
                    );
                    if index.contains_key(&t) {
                        continue;
                    }
                    index.insert(t, search.states.len());
                    next.push_back(search.states.len());
                    search.states.push(t);
                    search.parent.push(Some((i, (q, sg))));
                    search.depth_reached = depth;
                    if stop(t) {
                        return Ok(search);
                    }
                }
            }
            frontier = next;
        }
        search.stabilized = true;
        Ok(search)
    }

    fn volume(&self, mut i: usize) -> Volume {
        let mut steps = Vec::new();
        while let Some((p, step)) = self.parent[i] {
            steps.push(step);
            i = p;
        }
        steps.reverse();
        Volume {
            head: self.states[i],
            steps,
        }
    }
}

/// Pairs that one membrane of a horn joins while the opposite one closes.
fn x_pairs(states: &[Quadruple]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for e in states {
        if e.c == e.d {
            pairs.push((e.a, e.b));
        }
        if e.a == e.b {
            pairs.push((e.d, e.c));
        }
        if e.a == e.d {
            pairs.push((e.b, e.c));
        }
        if e.b == e.c {
            pairs.push((e.a, e.d));
        }
    }
    symmetric_sorted(pairs)
}

fn symmetric_sorted(mut pairs: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let flipped: Vec<_> = pairs.iter().map(|&(x, y)| (y, x)).collect();
    pairs.extend(flipped);
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// `X_α` restricted to horns of length at most `bound`.
pub fn x_alpha_bounded(alpha: &ExtSquare, bound: usize) -> Result<OracleResult> {
    let s = HornSearch::run(alpha, Some(bound), |_| false)?;
    Ok(OracleResult {
        pairs: x_pairs(&s.states),
        bound,
        stabilized: s.stabilized,
    })
}

/// Runs the horn search until no new endpoint state appears; `bound` is the
/// length of the longest horn needed.
pub fn x_alpha_stabilized(alpha: &ExtSquare) -> Result<OracleResult> {
    let s = HornSearch::run(alpha, None, |_| false)?;
    Ok(OracleResult {
        pairs: x_pairs(&s.states),
        bound: s.depth_reached,
        stabilized: true,
    })
}

/// The shortest horn (first in search order) whose `(a, b)` side closes
/// while its `(d, c)` side does not, or the reverse.
pub fn find_nonrigid_horn(alpha: &ExtSquare, bound: usize) -> Result<Option<Volume>> {
    let nonrigid = |e: Quadruple| (e.a == e.b) != (e.d == e.c);
    let s = HornSearch::run(alpha, Some(bound), nonrigid)?;
    Ok(s.states
        .iter()
        .position(|&e| nonrigid(e))
        .map(|i| s.volume(i)))
}

/// Pairs `(x, x · g_a g_b⁻¹ g_c g_d⁻¹)` over symmetric quadruples of paths
/// built from at most `bound` steps in `Eq(f) □ Eq(h)`.
pub fn symmetric_pairs_bounded(
    f: &Morphism,
    h: &Morphism,
    bound: usize,
) -> Result<Vec<(usize, usize)>> {
    if f.dom() != h.dom() {
        return Err(Error::DomainMismatch);
    }
    let a = f.dom();
    let n = a.size();
    let quads = double_parallelistic(&Congruence::kernel_pair(f), &Congruence::kernel_pair(h))?;
    let steps = distinct_steps(a, &quads);
    let id: Vec<usize> = (0..n).collect();
    // each state holds the actions of g_a, g_b, g_c, g_d as permutations
    let start = [id.clone(), id.clone(), id.clone(), id];
    let mut seen: HashSet<[Vec<usize>; 4]> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
    for _ in 0..bound {
        let mut next = Vec::new();
        for st in &frontier {
            for &(q, sg) in &steps {
                let t: [Vec<usize>; 4] = [0, 1, 2, 3].map(|k| {
                    let y = q.as_array()[k];
                    st[k].iter().map(|&z| a.act(z, y, sg)).collect()
                });
                if seen.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        for [pa, pb, pc, pd] in &next {
            let (ib, id) = (invert(pb), invert(pd));
            for x in 0..n {
                pairs.push((x, id[pc[ib[pa[x]]]]));
            }
        }
        frontier = next;
    }
    Ok(symmetric_sorted(pairs))
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        q[j] = i;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutator::c2;

    fn modulo(n: usize, k: usize) -> Morphism {
        Morphism::new(
            Rack::dihedral(n),
            Rack::dihedral(k),
            (0..n).map(|x| x % k).collect(),
        )
        .unwrap()
    }

    #[test]
    fn acting() {
        let d4 = Rack::dihedral(4);
        assert_eq!(act(&d4, 3, &PrimitivePath::default()).unwrap(), 3);
        assert_eq!(
            act(&d4, 0, &PrimitivePath::new(vec![(1, Sign::Pos)])).unwrap(),
            2
        );
        assert!(matches!(
            act(&d4, 0, &PrimitivePath::new(vec![(4, Sign::Pos)])),
            Err(Error::Index { index: 4, size: 4 })
        ));
        let c5 = Rack::cyclic(5);
        let p = PrimitivePath::new(vec![(0, Sign::Pos), (3, Sign::Neg), (1, Sign::Neg)]);
        assert_eq!(act(&c5, 2, &p).unwrap(), 1);
    }

    #[test]
    fn membranes() {
        let f9 = modulo(9, 3);
        let horn = Membrane {
            head: (0, 0),
            steps: vec![((0, 3), Sign::Pos)],
        };
        assert_eq!(membrane_endpoints(&f9, &horn).unwrap(), (0, 6));
        assert!(!is_disk(&f9, &horn).unwrap());
        let f6 = modulo(6, 3);
        assert_eq!(membrane_endpoints(&f6, &horn).unwrap(), (0, 0));
        assert!(is_disk(&f6, &horn).unwrap());
        assert!(retracts(&f6, &horn).unwrap());
        let empty = Membrane {
            head: (2, 2),
            steps: vec![],
        };
        assert!(is_disk(&f6, &empty).unwrap() && retracts(&f6, &empty).unwrap());
        let bad = Membrane {
            head: (0, 1),
            steps: vec![],
        };
        assert!(matches!(
            membrane_endpoints(&f6, &bad),
            Err(Error::NotAMembrane(_))
        ));
        // closes at the end but not after the first step
        let two = Membrane {
            head: (0, 0),
            steps: vec![((0, 3), Sign::Pos), ((0, 3), Sign::Pos)],
        };
        assert!(is_disk(&f9, &two).unwrap());
        assert!(!retracts(&f9, &two).unwrap());
    }

    fn square(n: usize, f: usize, t: usize, b: usize) -> ExtSquare {
        ExtSquare::new(modulo(n, f), modulo(t, b), modulo(n, t), modulo(f, b)).unwrap()
    }

    #[test]
    fn volumes() {
        let sq = square(36, 6, 3, 3);
        let v = Volume {
            head: Quadruple::degenerate(0),
            steps: vec![(Quadruple::new(0, 0, 0, 6), Sign::Pos)],
        };
        let e = volume_endpoints(&sq, &v).unwrap();
        assert_eq!(e.ends, Quadruple::new(0, 0, 0, 12));
        assert_eq!(e.membranes[0].head, (0, 0));
        assert_eq!(
            volume_endpoints(&sq, &Volume::horn(5)).unwrap().ends,
            Quadruple::degenerate(5)
        );
        let bad = Volume {
            head: Quadruple::new(0, 1, 1, 0),
            steps: vec![],
        };
        assert!(matches!(
            volume_endpoints(&sq, &bad),
            Err(Error::NotAVolume(_))
        ));
    }

    #[test]
    fn oracle_on_dihedral() {
        let sq = square(36, 6, 3, 3);
        let zero = x_alpha_bounded(&sq, 0).unwrap();
        assert_eq!(zero.pairs, (0..36).map(|x| (x, x)).collect::<Vec<_>>());
        let r = x_alpha_bounded(&sq, 4).unwrap();
        assert!(r.pairs.contains(&(12, 0)));
        assert!(r.closure(sq.top_left()).le(&c2(&sq).unwrap()));
        let h = find_nonrigid_horn(&sq, 4).unwrap().unwrap();
        assert_eq!(h.steps.len(), 1);
        let s = x_alpha_stabilized(&sq).unwrap();
        assert_eq!(s.closure(sq.top_left()), c2(&sq).unwrap());
    }

    #[test]
    fn oracle_on_coverings() {
        // D12 → D6 → D3 style squares where the commutator vanishes
        let sq = square(12, 6, 4, 2);
        assert!(c2(&sq).unwrap().is_diagonal());
        let s = x_alpha_stabilized(&sq).unwrap();
        assert!(s.pairs.iter().all(|&(x, y)| x == y));
        assert!(find_nonrigid_horn(&sq, 6).unwrap().is_none());
    }

    #[test]
    fn symmetric_pairs() {
        let d9 = modulo(9, 3);
        let full = Morphism::terminal(d9.dom());
        assert_eq!(
            symmetric_pairs_bounded(&d9, &full, 0).unwrap(),
            (0..9).map(|x| (x, x)).collect::<Vec<_>>()
        );
        let one = symmetric_pairs_bounded(&d9, &full, 1).unwrap();
        let two = symmetric_pairs_bounded(&d9, &full, 2).unwrap();
        assert!(one.iter().all(|p| two.contains(p)));
        let c = crate::commutator::c1(&d9).unwrap();
        assert!(Congruence::generated(d9.dom(), &two).unwrap().le(&c));
    }
}
