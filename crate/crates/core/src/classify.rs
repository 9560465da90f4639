//! Covering predicates in dimensions 0, 1 and 2, each with a witness search.
//!
//! Witnesses are the least counterexample in the stated lexicographic order,
//! so reports are stable across runs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commutator::{c1, c2, connectedness, word, Variant};
use crate::congruence::{for_each_quadruple, kernel_pair_subrack, Congruence, Quadruple};
use crate::error::{Error, Result};
use crate::rack::{Morphism, Rack};
use crate::square::{kernel_pair_ext, ExtSquare};

pub fn is_trivial_quandle(a: &Rack) -> bool {
    (0..a.size()).all(|x| (0..a.size()).all(|y| a.op(x, y) == x))
}

/// `x ◁ a ≠ x ◁ b` although `f(a) = f(b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoveringWitness {
    pub x: usize,
    pub a: usize,
    pub b: usize,
}

impl CoveringWitness {
    pub fn render(&self, a: &Rack) -> String {
        let (l, r) = (a.op(self.x, self.a), a.op(self.x, self.b));
        format!(
            "{x} ◁ {p} = {l} ≠ {r} = {x} ◁ {q}",
            x = a.label(self.x),
            p = a.label(self.a),
            q = a.label(self.b),
            l = a.label(l),
            r = a.label(r),
        )
    }

    fn to_json(self, a: &Rack) -> Value {
        json!({"xab": [self.x, self.a, self.b], "text": self.render(a)})
    }
}

/// Least `(x, a, b)` violating the covering condition.
pub fn covering_witness(f: &Morphism) -> Result<Option<CoveringWitness>> {
    f.require_extension()?;
    let a = f.dom();
    let eq = Congruence::kernel_pair(f);
    for x in 0..a.size() {
        for p in 0..a.size() {
            for &q in eq.class_of(p) {
                if a.op(x, p) != a.op(x, q) {
                    return Ok(Some(CoveringWitness { x, a: p, b: q }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_covering(f: &Morphism) -> Result<bool> {
    Ok(covering_witness(f)?.is_none())
}

/// Least pair in `Eq(f) ∧ Co(dom f)` off the diagonal.
pub fn trivial_covering_witness(f: &Morphism) -> Result<Option<(usize, usize)>> {
    f.require_extension()?;
    let m = Congruence::kernel_pair(f).meet(&connectedness(f.dom()))?;
    Ok(m.first_nontrivial_pair())
}

pub fn is_trivial_covering(f: &Morphism) -> Result<bool> {
    Ok(trivial_covering_witness(f)?.is_none())
}

/// A projection of the kernel pair of `f` that is not a trivial covering,
/// with the offending pair of elements of `Eq(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalWitness {
    pub projection: u8,
    pub pair: ((usize, usize), (usize, usize)),
}

pub fn normal_covering_witness(f: &Morphism) -> Result<Option<NormalWitness>> {
    f.require_extension()?;
    let (_, p1, p2) = kernel_pair_subrack(f);
    let mut found = Vec::new();
    for (i, p) in [(1u8, &p1), (2, &p2)] {
        if let Some((u, v)) = trivial_covering_witness(p)? {
            let el = |z: usize| (p1.apply(z), p2.apply(z));
            found.push(NormalWitness {
                projection: i,
                pair: (el(u), el(v)),
            });
        }
    }
    if found.len() == 1 {
        return Err(Error::Inconsistent(
            "one kernel pair projection is a trivial covering and the other is not".into(),
        ));
    }
    Ok(found.into_iter().next())
}

pub fn is_normal_covering(f: &Morphism) -> Result<bool> {
    Ok(normal_covering_witness(f)?.is_none())
}

/// `x ◁ a ◁⁻¹ b ◁ c ◁⁻¹ d = value ≠ x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleCoveringWitness {
    pub x: usize,
    pub q: Quadruple,
    pub value: usize,
}

impl DoubleCoveringWitness {
    pub fn render(&self, a: &Rack) -> String {
        let l = |z| a.label(z);
        format!(
            "{} ◁ {} ◁⁻¹ {} ◁ {} ◁⁻¹ {} = {} ≠ {}",
            l(self.x),
            l(self.q.a),
            l(self.q.b),
            l(self.q.c),
            l(self.q.d),
            l(self.value),
            l(self.x)
        )
    }

    fn to_json(self, a: &Rack) -> Value {
        let [qa, qb, qc, qd] = self.q.as_array();
        json!({
            "xabcd": [self.x, qa, qb, qc, qd],
            "value": self.value,
            "text": self.render(a),
        })
    }
}

/// Least `(x, a, b, c, d)` with `(a,b,c,d) ∈ Eq(f_A) □ Eq(α⊤)` moving `x`.
/// The answer is cross-checked against `c2(α) = Δ`.
pub fn double_covering_witness(alpha: &ExtSquare) -> Result<Option<DoubleCoveringWitness>> {
    alpha.require_double_extension()?;
    let a = alpha.top_left();
    let n = a.size();
    let mut best: Option<DoubleCoveringWitness> = None;
    for_each_quadruple(
        &Congruence::kernel_pair(alpha.f_a()),
        &Congruence::kernel_pair(alpha.alpha_top()),
        |q| {
            // quadruples arrive in increasing order, so only a smaller x wins
            let limit = best.map_or(n, |w| w.x);
            for x in 0..limit {
                let y = word(a, x, q, Variant::I);
                if y != x {
                    best = Some(DoubleCoveringWitness { x, q, value: y });
                    break;
                }
            }
        },
    )?;
    if best.is_none() != c2(alpha)?.is_diagonal() {
        return Err(Error::Inconsistent(
            "quadruple sweep and commutator disagree on double covering".into(),
        ));
    }
    Ok(best)
}

pub fn is_double_covering(alpha: &ExtSquare) -> Result<bool> {
    Ok(double_covering_witness(alpha)?.is_none())
}

/// Why `Eq(α⊤) ∧ Ci(f_A) ≠ Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialWitness {
    /// `f_A(a) = f_A(b)`, `x ◁ a ≠ x ◁ b` and `α⊤(x ◁ a) = α⊤(x ◁ b)`.
    Direct(CoveringWitness),
    /// Some other pair of the meet.
    Pair(usize, usize),
}

impl TrivialWitness {
    fn to_json(self, a: &Rack) -> Value {
        match self {
            TrivialWitness::Direct(w) => w.to_json(a),
            TrivialWitness::Pair(u, v) => json!({"pair": [u, v]}),
        }
    }
}

pub fn trivial_double_covering_witness(alpha: &ExtSquare) -> Result<Option<TrivialWitness>> {
    alpha.require_double_extension()?;
    let meet = Congruence::kernel_pair(alpha.alpha_top()).meet(&c1(alpha.f_a())?)?;
    let Some((u, v)) = meet.first_nontrivial_pair() else {
        return Ok(None);
    };
    let a = alpha.top_left();
    let eq = Congruence::kernel_pair(alpha.f_a());
    let top = alpha.alpha_top();
    for x in 0..a.size() {
        for p in 0..a.size() {
            for &q in eq.class_of(p) {
                let (l, r) = (a.op(x, p), a.op(x, q));
                if l != r && top.apply(l) == top.apply(r) {
                    return Ok(Some(TrivialWitness::Direct(CoveringWitness {
                        x,
                        a: p,
                        b: q,
                    })));
                }
            }
        }
    }
    Ok(Some(TrivialWitness::Pair(u, v)))
}

pub fn is_trivial_double_covering(alpha: &ExtSquare) -> Result<bool> {
    Ok(trivial_double_covering_witness(alpha)?.is_none())
}

/// Why a kernel pair projection of `α` is not a trivial double covering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalDoubleWitness {
    /// A length-one horn with head `(x_a, x_d) ∈ Eq(α⊤)` whose `(a, b)` side
    /// closes and whose `(d, c)` side does not.
    Horn { head: (usize, usize), q: Quadruple },
    /// A pair of elements of `Eq(α⊤)` in the meet, when no short horn exists.
    Pair((usize, usize), (usize, usize)),
}

impl NormalDoubleWitness {
    pub fn render(&self, a: &Rack) -> String {
        match *self {
            NormalDoubleWitness::Horn { head: (xa, xd), q } => {
                let l = |z| a.label(z);
                format!(
                    "{xd} ◁ {c} ≠ {xd} ◁ {d} even though {xa} ◁ {qa} = {xa} ◁ {qb}",
                    xd = l(xd),
                    xa = l(xa),
                    c = l(q.c),
                    d = l(q.d),
                    qa = l(q.a),
                    qb = l(q.b),
                )
            }
            NormalDoubleWitness::Pair(u, v) => format!(
                "({}, {}) and ({}, {}) are identified",
                a.label(u.0),
                a.label(u.1),
                a.label(v.0),
                a.label(v.1)
            ),
        }
    }

    fn to_json(self, a: &Rack) -> Value {
        match self {
            NormalDoubleWitness::Horn { head, q } => json!({
                "head": [head.0, head.1],
                "quadruple": q.as_array(),
                "text": self.render(a),
            }),
            NormalDoubleWitness::Pair(u, v) => json!({
                "pair": [[u.0, u.1], [v.0, v.1]],
                "text": self.render(a),
            }),
        }
    }
}

/// Both kernel pair projections are tested; they must agree.
pub fn normal_double_covering_witness(alpha: &ExtSquare) -> Result<Option<NormalDoubleWitness>> {
    alpha.require_double_extension()?;
    let kp = kernel_pair_ext(alpha)?;
    let t1 = trivial_double_covering_witness(&kp.proj1)?;
    let t2 = trivial_double_covering_witness(&kp.proj2)?;
    if t1.is_some() != t2.is_some() {
        return Err(Error::Inconsistent(
            "kernel pair projections disagree on triviality".into(),
        ));
    }
    let Some(t1) = t1 else {
        return Ok(None);
    };
    if let Some(w) = short_nonrigid_horn(alpha, true).or_else(|| short_nonrigid_horn(alpha, false))
    {
        return Ok(Some(w));
    }
    let obj = kp.proj1.top_left();
    let el = |z: usize| (kp.proj1.alpha_top().apply(z), kp.proj2.alpha_top().apply(z));
    let (u, v) = match t1 {
        TrivialWitness::Direct(w) => (obj.op(w.x, w.a), obj.op(w.x, w.b)),
        TrivialWitness::Pair(u, v) => (u, v),
    };
    Ok(Some(NormalDoubleWitness::Pair(el(u), el(v))))
}

/// Heads in lexicographic order, then `(a, d)`, then `(b, c)`. With `proper`
/// set, only quadruples whose columns are both non-degenerate are tried.
fn short_nonrigid_horn(alpha: &ExtSquare, proper: bool) -> Option<NormalDoubleWitness> {
    let a = alpha.top_left();
    let r = Congruence::kernel_pair(alpha.f_a());
    let s = Congruence::kernel_pair(alpha.alpha_top());
    for xa in 0..a.size() {
        for &xd in s.class_of(xa) {
            for qa in 0..a.size() {
                for &qd in s.class_of(qa) {
                    if proper && qa == qd {
                        continue;
                    }
                    for &qb in r.class_of(qa) {
                        if a.op(xa, qa) != a.op(xa, qb) {
                            continue;
                        }
                        for &qc in r.class_of(qd) {
                            if (proper && qb == qc) || !s.related(qb, qc) {
                                continue;
                            }
                            if a.op(xd, qd) != a.op(xd, qc) {
                                return Some(NormalDoubleWitness::Horn {
                                    head: (xa, xd),
                                    q: Quadruple::new(qa, qb, qc, qd),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_normal_double_covering(alpha: &ExtSquare) -> Result<bool> {
    Ok(normal_double_covering_witness(alpha)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub subject: String,
    pub flags: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Value>,
}

impl ClassificationReport {
    fn new(subject: &str) -> ClassificationReport {
        ClassificationReport {
            subject: subject.into(),
            flags: BTreeMap::new(),
            witnesses: BTreeMap::new(),
        }
    }

    fn record(&mut self, key: &str, witness: Option<Value>) -> bool {
        let ok = witness.is_none();
        self.flags.insert(key.into(), ok);
        if let Some(w) = witness {
            self.witnesses.insert(key.into(), w);
        }
        ok
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        self.flags.get(key).copied()
    }

    fn implies(&self, from: &str, to: &str) -> Result<()> {
        if self.flag(from) == Some(true) && self.flag(to) == Some(false) {
            return Err(Error::Inconsistent(format!(
                "{from} holds but {to} does not"
            )));
        }
        Ok(())
    }
}

pub fn classify(f: &Morphism) -> Result<ClassificationReport> {
    f.require_extension()?;
    let a = f.dom();
    let mut rep = ClassificationReport::new("morphism");
    rep.record("covering", covering_witness(f)?.map(|w| w.to_json(a)));
    rep.record(
        "trivial_covering",
        trivial_covering_witness(f)?.map(|(u, v)| json!({"pair": [u, v]})),
    );
    rep.record(
        "normal_covering",
        normal_covering_witness(f)?.map(|w| {
            let ((u0, u1), (v0, v1)) = w.pair;
            json!({"projection": w.projection, "pair": [[u0, u1], [v0, v1]]})
        }),
    );
    rep.implies("trivial_covering", "normal_covering")?;
    rep.implies("normal_covering", "covering")?;
    Ok(rep)
}

pub fn classify_square(alpha: &ExtSquare) -> Result<ClassificationReport> {
    let mut rep = ClassificationReport::new("square");
    let why = alpha.double_extension_failure();
    if !rep.record("double_extension", why.map(|w| json!({"reason": w}))) {
        return Ok(rep);
    }
    let a = alpha.top_left();
    rep.record(
        "double_covering",
        double_covering_witness(alpha)?.map(|w| w.to_json(a)),
    );
    rep.record(
        "trivial_double_covering",
        trivial_double_covering_witness(alpha)?.map(|w| w.to_json(a)),
    );
    rep.record(
        "normal_double_covering",
        normal_double_covering_witness(alpha)?.map(|w| w.to_json(a)),
    );
    let p = alpha.comparison_map();
    rep.record(
        "comparison_covering",
        covering_witness(&p)?.map(|w| w.to_json(p.dom())),
    );
    rep.implies("trivial_double_covering", "normal_double_covering")?;
    rep.implies("normal_double_covering", "double_covering")?;
    rep.implies("double_covering", "comparison_covering")?;
    Ok(rep)
}
