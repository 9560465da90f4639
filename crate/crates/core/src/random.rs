//! Seeded random racks, congruences and double extensions for property
//! tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::congruence::Congruence;
use crate::rack::{Morphism, Rack};
use crate::square::ExtSquare;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// A random rack on `n ≤ 5` elements, found by depth-first search over
/// right translations `σ_y` in random order. Gives up after `budget` nodes.
pub fn random_rack<R: Rng>(rng: &mut R, n: usize, quandle: bool, budget: usize) -> Option<Rack> {
    assert!(n <= 5, "search is exponential in n");
    let perms = permutations(n);
    let mut cols: Vec<Option<usize>> = vec![None; n];
    let mut nodes = 0;
    if !search(rng, &perms, &mut cols, 0, quandle, &mut nodes, budget) {
        return None;
    }
    let op = (0..n)
        .flat_map(|x| {
            let perms = &perms;
            let cols = &cols;
            (0..n).map(move |y| perms[cols[y].unwrap()][x])
        })
        .collect();
    Some(Rack::from_flat(n, op).expect("search only accepts racks"))
}

/// `σ_b σ_a = σ_{σ_b(a)} σ_b` wherever all three are chosen.
fn consistent(perms: &[Vec<usize>], cols: &[Option<usize>]) -> bool {
    let n = cols.len();
    for a in 0..n {
        let Some(pa) = cols[a] else { continue };
        for b in 0..n {
            let Some(pb) = cols[b] else { continue };
            let (sa, sb) = (&perms[pa], &perms[pb]);
            let Some(pc) = cols[sb[a]] else { continue };
            let sc = &perms[pc];
            if (0..n).any(|x| sb[sa[x]] != sc[sb[x]]) {
                return false;
            }
        }
    }
    true
}

fn search<R: Rng>(
    rng: &mut R,
    perms: &[Vec<usize>],
    cols: &mut Vec<Option<usize>>,
    y: usize,
    quandle: bool,
    nodes: &mut usize,
    budget: usize,
) -> bool {
    if y == cols.len() {
        return true;
    }
    let mut order: Vec<usize> = (0..perms.len()).collect();
    order.shuffle(rng);
    for p in order {
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        if quandle && perms[p][y] != y {
            continue;
        }
        cols[y] = Some(p);
        if consistent(perms, cols) && search(rng, perms, cols, y + 1, quandle, nodes, budget) {
            return true;
        }
    }
    cols[y] = None;
    false
}

/// Racks with nontrivial congruence lattices: products and named racks of
/// moderate size.
pub fn seed_racks() -> Vec<Rack> {
    vec![
        Rack::dihedral(6),
        Rack::dihedral(8),
        Rack::dihedral(9),
        Rack::dihedral(12),
        Rack::cyclic(4),
        Rack::product(&Rack::dihedral(3), &Rack::trivial(2)),
        Rack::product(&Rack::dihedral(4), &Rack::dihedral(2)),
        Rack::product(&Rack::cyclic(2), &Rack::dihedral(3)),
        crate::group::conj_functor(&crate::group::sym_group(3)),
        crate::group::conj_functor(&crate::group::quaternion_group()),
        crate::corpus::q_family().q,
        crate::corpus::toy().q,
        crate::corpus::q_diamond().object,
        Rack::product(&Rack::dihedral(3), &Rack::dihedral(3)),
    ]
}

/// Generated by `k` random pairs.
pub fn random_congruence<R: Rng>(rng: &mut R, a: &Rack, k: usize) -> Congruence {
    let n = a.size();
    if n == 0 {
        return Congruence::diagonal(a);
    }
    let pairs: Vec<(usize, usize)> = (0..k)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    Congruence::generated(a, &pairs).expect("pairs are in range")
}

/// `X/θ → X/θ_f` down and `X/θ → X/θ_α` across, over `X/(θ_f ∨ θ_α)`.
/// Requires `θ ≤ θ_f ∧ θ_α`. The result is a double extension exactly
/// when `θ_f` and `θ_α` permute.
pub fn quotient_square(
    theta: &Congruence,
    theta_f: &Congruence,
    theta_alpha: &Congruence,
) -> ExtSquare {
    let join = theta_f.join(theta_alpha).expect("same carrier");
    let (_, pf) = theta_f.quotient();
    let (_, pa) = theta_alpha.quotient();
    let (_, pj) = join.quotient();
    let f_a = theta.factor_through(&pf).expect("θ ≤ θ_f");
    let alpha_top = theta.factor_through(&pa).expect("θ ≤ θ_α");
    let f_b = theta_alpha.factor_through(&pj).expect("θ_α ≤ join");
    let alpha_bot = theta_f.factor_through(&pj).expect("θ_f ≤ join");
    ExtSquare::new(f_a, f_b, alpha_top, alpha_bot).expect("quotient squares commute")
}

/// `X → X/θ2 → X/θ3` for `θ2 ≤ θ3`.
pub fn quotient_between(theta2: &Congruence, theta3: &Congruence) -> Morphism {
    let (_, p3) = theta3.quotient();
    theta2.factor_through(&p3).expect("θ2 ≤ θ3")
}

/// A random double extension built as a quotient square of `a`, if one
/// is found in `tries` attempts.
pub fn random_double_extension<R: Rng>(
    rng: &mut R,
    a: &Rack,
    tries: usize,
) -> Option<(ExtSquare, Congruence, Congruence)> {
    for _ in 0..tries {
        let (kf, ka) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let tf = random_congruence(rng, a, kf);
        let ta = random_congruence(rng, a, ka);
        if !tf.permutes_with(&ta) {
            continue;
        }
        let meet = tf.meet(&ta).expect("same carrier");
        let theta = if rng.gen_bool(0.5) {
            Congruence::diagonal(a)
        } else {
            let pairs = meet.pairs();
            let (u, v) = pairs[rng.gen_range(0..pairs.len())];
            Congruence::generated(a, &[(u, v)]).expect("in range")
        };
        if !theta.le(&meet) {
            continue;
        }
        let sq = quotient_square(&theta, &tf, &ta);
        if sq.is_double_extension() {
            return Some((sq, tf, ta));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_racks_are_valid() {
        let mut r = rng(7);
        let mut found = 0;
        for n in 0..=5 {
            for q in [false, true] {
                if let Some(a) = random_rack(&mut r, n, q, 20_000) {
                    assert_eq!(a.size(), n);
                    assert!(!q || a.is_quandle());
                    found += 1;
                }
            }
        }
        assert!(found >= 10);
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = random_rack(&mut rng(3), 4, false, 20_000).unwrap();
        let b = random_rack(&mut rng(3), 4, false, 20_000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_squares() {
        let d = Rack::dihedral(12);
        let t4 = Congruence::kernel_pair(&crate::corpus::modulo(12, 4));
        let t3 = Congruence::kernel_pair(&crate::corpus::modulo(12, 3));
        let sq = quotient_square(&Congruence::diagonal(&d), &t4, &t3);
        assert!(sq.is_double_extension());
        assert_eq!(sq.f_b().cod().size(), 1);
        let mut r = rng(1);
        let (sq, _, _) = random_double_extension(&mut r, &Rack::dihedral(12), 50).unwrap();
        assert!(sq.is_double_extension());
    }
}
