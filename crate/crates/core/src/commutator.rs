//! The commutator `[R, S]` of two congruences and the centralizing
//! congruences built from it in dimensions 0, 1 and 2.

use crate::congruence::{for_each_quadruple, Closure, Congruence, Quadruple, UnionFind};
use crate::error::{Error, Result};
use crate::rack::{Morphism, Rack};
use crate::square::ExtSquare;

/// Which of the four equivalent generating words to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// `x ◁ a ◁⁻¹ b ◁ c ◁⁻¹ d`
    #[default]
    I,
    /// `x ◁⁻¹ a ◁ d ◁⁻¹ c ◁ b`
    II,
    /// `x ◁⁻¹ a ◁ b ◁⁻¹ c ◁ d`
    III,
    /// `x ◁ a ◁⁻¹ d ◁ c ◁⁻¹ b`
    IV,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::I, Variant::II, Variant::III, Variant::IV];
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Variant, String> {
        match s {
            "i" => Ok(Variant::I),
            "ii" => Ok(Variant::II),
            "iii" => Ok(Variant::III),
            "iv" => Ok(Variant::IV),
            _ => Err(format!("unknown variant {s:?}, expected i, ii, iii or iv")),
        }
    }
}

/// The generating word of `variant` evaluated at `x`, left to right.
#[inline]
pub fn word(a: &Rack, x: usize, q: Quadruple, variant: Variant) -> usize {
    match variant {
        Variant::I => a.inv(a.op(a.inv(a.op(x, q.a), q.b), q.c), q.d),
        Variant::II => a.op(a.inv(a.op(a.inv(x, q.a), q.d), q.c), q.b),
        Variant::III => a.op(a.inv(a.op(a.inv(x, q.a), q.b), q.c), q.d),
        Variant::IV => a.inv(a.op(a.inv(a.op(x, q.a), q.d), q.c), q.b),
    }
}

/// `[R, S]`: generated by `(word(x), x)` over `x ∈ A` and `(a,b,c,d) ∈ R □ S`.
/// Quadruples are streamed into the closure.
pub fn commutator(r: &Congruence, s: &Congruence, variant: Variant) -> Result<Congruence> {
    let a = r.carrier().clone();
    let n = a.size();
    let mut closure = Closure::new(&a);
    for_each_quadruple(r, s, |q| {
        for x in 0..n {
            closure.add(word(&a, x, q, variant), x);
        }
    })?;
    Ok(closure.finish())
}

/// `Co(A)`: the orbits of the symmetries `x ↦ x ◁ a`.
pub fn connectedness(a: &Rack) -> Congruence {
    let n = a.size();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in 0..n {
            uf.union(x, a.op(x, y));
        }
    }
    let mut closure = Closure::new(a);
    for x in 0..n {
        let r = uf.find(x);
        closure.add(x, r);
    }
    let co = closure.finish();
    debug_assert!(co.compatibility_failure().is_none());
    co
}

/// `π0(A) = A / Co(A)` with its unit.
pub fn pi0(a: &Rack) -> (Rack, Morphism) {
    connectedness(a).quotient()
}

/// `Ci(f)`: generated by `(x ◁ a ◁⁻¹ b, x)` for `f(a) = f(b)`.
pub fn c1(f: &Morphism) -> Result<Congruence> {
    f.require_extension()?;
    let a = f.dom().clone();
    let eq = Congruence::kernel_pair(f);
    let n = a.size();
    let mut closure = Closure::new(&a);
    for p in 0..n {
        for &q in eq.class_of(p) {
            if p == q {
                continue;
            }
            for x in 0..n {
                closure.add(a.inv(a.op(x, p), q), x);
            }
        }
    }
    Ok(closure.finish())
}

/// The covering reflection of `f`: returns `(g, unit)` with
/// `g : A / Ci(f) → B` and `unit : A → A / Ci(f)`.
pub fn centralize1(f: &Morphism) -> Result<(Morphism, Morphism)> {
    let ci = c1(f)?;
    let (_, unit) = ci.quotient();
    let g = ci.factor_through(f)?;
    Ok((g, unit))
}

/// `[Eq(f_A), Eq(α⊤)]`.
pub fn c2(alpha: &ExtSquare) -> Result<Congruence> {
    alpha.require_double_extension()?;
    commutator(
        &Congruence::kernel_pair(alpha.f_a()),
        &Congruence::kernel_pair(alpha.alpha_top()),
        Variant::I,
    )
}

/// The double covering reflection of `α`: the square with top-left object
/// `A⊤ / c2(α)`, and the projection onto it.
pub fn centralize2(alpha: &ExtSquare) -> Result<(ExtSquare, Morphism)> {
    let theta = c2(alpha)?;
    let (_, unit) = theta.quotient();
    let sq = alpha.quotient_top(&theta).map_err(|e| {
        Error::Inconsistent(format!("c2 does not lie below both kernel pairs: {e}"))
    })?;
    Ok((sq, unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::all_congruences;

    fn modulo(n: usize, k: usize) -> Morphism {
        Morphism::new(
            Rack::dihedral(n),
            Rack::dihedral(k),
            (0..n).map(|x| x % k).collect(),
        )
        .unwrap()
    }

    /// Literal reading of the definition: collect every generator pair,
    /// then take the least compatible partition containing them by search.
    fn oracle_commutator(r: &Congruence, s: &Congruence) -> Congruence {
        let a = r.carrier();
        let n = a.size();
        let mut gens = Vec::new();
        for q in 0..n.pow(4) {
            let q = Quadruple::new(q / n.pow(3), q / n / n % n, q / n % n, q % n);
            if q.lies_in(r, s) {
                for x in 0..n {
                    let y = a.inv(a.op(a.inv(a.op(x, q.a), q.b), q.c), q.d);
                    gens.push((x, y));
                }
            }
        }
        all_congruences(a)
            .into_iter()
            .filter(|c| gens.iter().all(|&(x, y)| c.related(x, y)))
            .max_by_key(|c| c.num_classes())
            .unwrap()
    }

    #[test]
    fn commutator_matches_definition_on_small_racks() {
        let racks = [
            Rack::dihedral(4),
            Rack::dihedral(5),
            Rack::cyclic(3),
            Rack::product(&Rack::dihedral(3), &Rack::trivial(2)),
        ];
        for a in racks {
            let congs = all_congruences(&a);
            for r in &congs {
                for s in &congs {
                    let expected = oracle_commutator(r, s);
                    for v in Variant::ALL {
                        assert_eq!(commutator(r, s, v).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn commutator_examples() {
        let d5 = Rack::dihedral(5);
        let diag = Congruence::diagonal(&d5);
        for s in all_congruences(&d5) {
            assert!(commutator(&diag, &s, Variant::I).unwrap().is_diagonal());
        }

        let d36 = Rack::dihedral(36);
        let r = Congruence::kernel_pair(&modulo(36, 6));
        let s = Congruence::kernel_pair(&modulo(36, 3));
        let c = commutator(&r, &s, Variant::I).unwrap();
        assert!(c.related(12, 0));
        assert_eq!(word(&d36, 0, Quadruple::new(0, 0, 0, 6), Variant::I), 12);
        assert_eq!(c, Congruence::kernel_pair(&modulo(36, 12)));

        let c4 = Rack::cyclic(4);
        let full = Congruence::full(&c4);
        assert!(commutator(&full, &full, Variant::I).unwrap().is_diagonal());
    }

    #[test]
    fn connectedness_examples() {
        assert!(connectedness(&Rack::trivial(4)).is_diagonal());
        assert!(connectedness(&Rack::dihedral(3)).is_full());
        assert_eq!(
            connectedness(&Rack::dihedral(6)).classes(),
            &[vec![0, 2, 4], vec![1, 3, 5]]
        );
        assert_eq!(pi0(&Rack::dihedral(3)).0.size(), 1);
        assert_eq!(pi0(&Rack::trivial(4)).0, Rack::trivial(4));
        assert_eq!(pi0(&Rack::dihedral(6)).0.size(), 2);
        assert!(connectedness(&Rack::cyclic(4)).is_full());
    }

    #[test]
    fn c1_examples() {
        let d6 = Rack::dihedral(6);
        assert!(c1(&Morphism::identity(&d6)).unwrap().is_diagonal());
        // D4 → D2 is already a covering
        let (g, unit) = centralize1(&modulo(4, 2)).unwrap();
        assert!(unit.is_injective());
        assert_eq!(g.dom().size(), 4);
        let point = Morphism::new(Rack::trivial(1), d6, vec![0]).unwrap();
        assert!(matches!(
            c1(&point),
            Err(Error::NotSurjective { missing: 1 })
        ));
    }

    #[test]
    fn c1_is_commutator_with_full() {
        for (n, k) in [(6, 3), (9, 3), (8, 4), (12, 2), (12, 6)] {
            let f = modulo(n, k);
            let full = Congruence::full(f.dom());
            assert_eq!(
                c1(&f).unwrap(),
                commutator(&Congruence::kernel_pair(&f), &full, Variant::I).unwrap()
            );
        }
    }
}
