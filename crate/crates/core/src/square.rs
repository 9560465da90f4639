//! Commuting squares of extensions, their comparison maps, and cubes.
//!
//! A square `α : f_A → f_B` is drawn
//!
//! ```text
//!   A⊤ --alpha_top--> B⊤
//!   |                 |
//!  f_A               f_B
//!   v                 v
//!   A⊥ --alpha_bot--> B⊥
//! ```
//!
//! and its comparison map is `A⊤ → A⊥ ×_{B⊥} B⊤, x ↦ (f_A x, α⊤ x)`.

use crate::commutator::{c1, centralize1, connectedness};
use crate::congruence::{for_each_quadruple, Congruence, Quadruple};
use crate::error::{Error, Result};
use crate::rack::{Morphism, Rack};

/// A pullback object with its two projections. Elements are the pairs
/// `(x, y)` with `f(x) = g(y)` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Rack,
    pub left: Morphism,
    pub right: Morphism,
    width: usize,
    index: Vec<usize>,
}

impl Pullback {
    /// Index of the pair `(x, y)`, if it lies in the pullback.
    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        match self.index[x * self.width + y] {
            usize::MAX => None,
            i => Some(i),
        }
    }

    /// The map `X → P` induced by `u : X → dom f` and `v : X → dom g`.
    pub fn induced(&self, u: &Morphism, v: &Morphism) -> Result<Morphism> {
        if u.dom() != v.dom() {
            return Err(Error::DomainMismatch);
        }
        if u.cod() != self.left.cod() || v.cod() != self.right.cod() {
            return Err(Error::CodomainMismatch);
        }
        let mut map = Vec::with_capacity(u.dom().size());
        for x in 0..u.dom().size() {
            match self.index_of(u.apply(x), v.apply(x)) {
                Some(i) => map.push(i),
                None => {
                    return Err(Error::NonCommuting(format!(
                        "element {x} does not land in the pullback"
                    )))
                }
            }
        }
        Ok(Morphism::trusted(u.dom().clone(), self.object.clone(), map))
    }
}

pub fn pullback(f: &Morphism, g: &Morphism) -> Result<Pullback> {
    if f.cod() != g.cod() {
        return Err(Error::CodomainMismatch);
    }
    let (x_rack, y_rack) = (f.dom(), g.dom());
    let width = y_rack.size();
    let mut index = vec![usize::MAX; x_rack.size() * width];
    let mut elems = Vec::new();
    for x in 0..x_rack.size() {
        for y in 0..width {
            if f.apply(x) == g.apply(y) {
                index[x * width + y] = elems.len();
                elems.push((x, y));
            }
        }
    }
    let k = elems.len();
    let mut op = Vec::with_capacity(k * k);
    for &(x1, y1) in &elems {
        for &(x2, y2) in &elems {
            op.push(index[x_rack.op(x1, x2) * width + y_rack.op(y1, y2)]);
        }
    }
    let labels = elems
        .iter()
        .map(|&(x, y)| format!("({},{})", x_rack.label(x), y_rack.label(y)))
        .collect();
    let object = Rack::from_flat_trusted(k, op).with_labels(labels);
    let left = Morphism::trusted(
        object.clone(),
        x_rack.clone(),
        elems.iter().map(|e| e.0).collect(),
    );
    let right = Morphism::trusted(
        object.clone(),
        y_rack.clone(),
        elems.iter().map(|e| e.1).collect(),
    );
    Ok(Pullback {
        object,
        left,
        right,
        width,
        index,
    })
}

/// The pushout of two quotients of the same rack, realized as the quotient
/// by the join of their kernel pairs. Returns the object and the two legs.
pub fn pushout_of_quotients(q1: &Morphism, q2: &Morphism) -> Result<(Rack, Morphism, Morphism)> {
    q1.require_extension()?;
    q2.require_extension()?;
    if q1.dom() != q2.dom() {
        return Err(Error::DomainMismatch);
    }
    let join = Congruence::kernel_pair(q1).join(&Congruence::kernel_pair(q2))?;
    let (object, proj) = join.quotient();
    let leg = |q: &Morphism| {
        let mut map = vec![0; q.cod().size()];
        for x in 0..q.dom().size() {
            map[q.apply(x)] = proj.apply(x);
        }
        Morphism::trusted(q.cod().clone(), object.clone(), map)
    };
    let (l1, l2) = (leg(q1), leg(q2));
    Ok((object, l1, l2))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtSquare {
    f_a: Morphism,
    f_b: Morphism,
    alpha_top: Morphism,
    alpha_bot: Morphism,
}

impl ExtSquare {
    /// Checks that the four maps fit together and that the square commutes.
    /// Surjectivity is not required here.
    pub fn new(
        f_a: Morphism,
        f_b: Morphism,
        alpha_top: Morphism,
        alpha_bot: Morphism,
    ) -> Result<ExtSquare> {
        if f_a.dom() != alpha_top.dom() {
            return Err(Error::DomainMismatch);
        }
        if f_a.cod() != alpha_bot.dom() || alpha_top.cod() != f_b.dom() {
            return Err(Error::NonCommuting("objects do not match".into()));
        }
        if f_b.cod() != alpha_bot.cod() {
            return Err(Error::CodomainMismatch);
        }
        for x in 0..f_a.dom().size() {
            if f_b.apply(alpha_top.apply(x)) != alpha_bot.apply(f_a.apply(x)) {
                return Err(Error::NonCommuting(format!("at element {x}")));
            }
        }
        Ok(ExtSquare {
            f_a,
            f_b,
            alpha_top,
            alpha_bot,
        })
    }

    /// The square `f → f` with identities across.
    pub fn identity(f: &Morphism) -> ExtSquare {
        ExtSquare {
            f_a: f.clone(),
            f_b: f.clone(),
            alpha_top: Morphism::identity(f.dom()),
            alpha_bot: Morphism::identity(f.cod()),
        }
    }

    pub fn f_a(&self) -> &Morphism {
        &self.f_a
    }

    pub fn f_b(&self) -> &Morphism {
        &self.f_b
    }

    pub fn alpha_top(&self) -> &Morphism {
        &self.alpha_top
    }

    pub fn alpha_bot(&self) -> &Morphism {
        &self.alpha_bot
    }

    /// `A⊤`.
    pub fn top_left(&self) -> &Rack {
        self.f_a.dom()
    }

    /// Exchanges the roles of `(α⊤, α⊥)` and `(f_A, f_B)`.
    pub fn transpose(&self) -> ExtSquare {
        ExtSquare {
            f_a: self.alpha_top.clone(),
            f_b: self.alpha_bot.clone(),
            alpha_top: self.f_a.clone(),
            alpha_bot: self.f_b.clone(),
        }
    }

    /// `A⊥ ×_{B⊥} B⊤` and the comparison map into it.
    pub fn comparison(&self) -> (Pullback, Morphism) {
        let p = pullback(&self.alpha_bot, &self.f_b).expect("square shares B⊥");
        let map = p
            .induced(&self.f_a, &self.alpha_top)
            .expect("a commuting square lands in its pullback");
        (p, map)
    }

    pub fn comparison_map(&self) -> Morphism {
        self.comparison().1
    }

    /// Why this square is not a double extension, if it is not.
    pub fn double_extension_failure(&self) -> Option<String> {
        for (name, m) in [
            ("f_A", &self.f_a),
            ("f_B", &self.f_b),
            ("alpha_top", &self.alpha_top),
            ("alpha_bot", &self.alpha_bot),
        ] {
            if let Some(x) = m.first_missing() {
                return Some(format!("{name} misses {x}"));
            }
        }
        self.comparison_map()
            .first_missing()
            .map(|x| format!("comparison map misses {x}"))
    }

    pub fn is_double_extension(&self) -> bool {
        self.double_extension_failure().is_none()
    }

    pub fn require_double_extension(&self) -> Result<()> {
        match self.double_extension_failure() {
            None => Ok(()),
            Some(why) => Err(Error::NotDoubleExtension(why)),
        }
    }

    /// Comparison map is a bijection.
    pub fn is_pullback(&self) -> bool {
        let p = self.comparison_map();
        p.is_injective() && p.is_extension()
    }

    /// `next ∘ self`, for `self : f_A → f_B` and `next : f_B → f_C`.
    pub fn then(&self, next: &ExtSquare) -> Result<ExtSquare> {
        if self.f_b != next.f_a {
            return Err(Error::CodomainMismatch);
        }
        Ok(ExtSquare {
            f_a: self.f_a.clone(),
            f_b: next.f_b.clone(),
            alpha_top: self.alpha_top.then(&next.alpha_top)?,
            alpha_bot: self.alpha_bot.then(&next.alpha_bot)?,
        })
    }

    /// The square obtained by dividing `A⊤` by `θ ≤ Eq(f_A) ∧ Eq(α⊤)`.
    pub fn quotient_top(&self, theta: &Congruence) -> Result<ExtSquare> {
        ExtSquare::new(
            theta.factor_through(&self.f_a)?,
            self.f_b.clone(),
            theta.factor_through(&self.alpha_top)?,
            self.alpha_bot.clone(),
        )
    }
}

/// A morphism `(σ, β) : γ → α` of squares, with `γ : f_C → f_D`,
/// `α : f_A → f_B`, `σ : f_C → f_A` and `β : f_D → f_B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cube {
    pub gamma: ExtSquare,
    pub alpha: ExtSquare,
    pub sigma: ExtSquare,
    pub beta: ExtSquare,
}

impl Cube {
    pub fn new(
        gamma: ExtSquare,
        alpha: ExtSquare,
        sigma: ExtSquare,
        beta: ExtSquare,
    ) -> Result<Cube> {
        let c = Cube {
            gamma,
            alpha,
            sigma,
            beta,
        };
        c.check()?;
        Ok(c)
    }

    pub fn identity(alpha: &ExtSquare) -> Cube {
        Cube {
            gamma: alpha.clone(),
            alpha: alpha.clone(),
            sigma: ExtSquare::identity(alpha.f_a()),
            beta: ExtSquare::identity(alpha.f_b()),
        }
    }

    /// All faces fit and commute.
    pub fn check(&self) -> Result<()> {
        let fits = self.sigma.f_a == self.gamma.f_a
            && self.sigma.f_b == self.alpha.f_a
            && self.beta.f_a == self.gamma.f_b
            && self.beta.f_b == self.alpha.f_b;
        if !fits {
            return Err(Error::NonCommuting("cube faces do not share edges".into()));
        }
        if self.sigma.then(&self.alpha)? != self.gamma.then(&self.beta)? {
            return Err(Error::NonCommuting("α∘σ ≠ β∘γ".into()));
        }
        Ok(())
    }

    /// The square `π : f_C → f_P` into the componentwise pullback of `α` and `β`.
    pub fn comparison_square(&self) -> Result<ExtSquare> {
        self.check()?;
        let f_p = arrow_pullback(&self.alpha, &self.beta)?;
        let top = f_p
            .top
            .induced(self.sigma.alpha_top(), self.gamma.alpha_top())?;
        let bot = f_p
            .bot
            .induced(self.sigma.alpha_bot(), self.gamma.alpha_bot())?;
        ExtSquare::new(self.gamma.f_a.clone(), f_p.f_p, top, bot)
    }

    pub fn is_3fold_extension(&self) -> Result<bool> {
        let pi = self.comparison_square()?;
        Ok(self.gamma.is_double_extension()
            && self.alpha.is_double_extension()
            && self.sigma.is_double_extension()
            && self.beta.is_double_extension()
            && pi.is_double_extension())
    }
}

/// Pullback of `α : f_A → f_B` and `β : f_D → f_B` in the arrow category.
struct ArrowPullback {
    top: Pullback,
    bot: Pullback,
    f_p: Morphism,
}

fn arrow_pullback(alpha: &ExtSquare, beta: &ExtSquare) -> Result<ArrowPullback> {
    if alpha.f_b != beta.f_b {
        return Err(Error::CodomainMismatch);
    }
    let top = pullback(&alpha.alpha_top, &beta.alpha_top)?;
    let bot = pullback(&alpha.alpha_bot, &beta.alpha_bot)?;
    let via_a = top.left.then(&alpha.f_a)?;
    let via_d = top.right.then(&beta.f_a)?;
    let f_p = bot.induced(&via_a, &via_d)?;
    Ok(ArrowPullback { top, bot, f_p })
}

/// Pulls `α` back along `β` (both over the same `f_B`). The cube has
/// `gamma : f_P → f_D` (the pullback of `α`) and `sigma : f_P → f_A`.
pub fn pullback_square(alpha: &ExtSquare, beta: &ExtSquare) -> Result<Cube> {
    alpha.require_double_extension()?;
    let ap = arrow_pullback(alpha, beta)?;
    let gamma = ExtSquare::new(
        ap.f_p.clone(),
        beta.f_a.clone(),
        ap.top.right.clone(),
        ap.bot.right.clone(),
    )?;
    let sigma = ExtSquare::new(
        ap.f_p.clone(),
        alpha.f_a.clone(),
        ap.top.left.clone(),
        ap.bot.left.clone(),
    )?;
    Ok(Cube {
        gamma,
        alpha: alpha.clone(),
        sigma,
        beta: beta.clone(),
    })
}

/// The kernel pair of a double extension, computed componentwise.
#[derive(Clone, Debug)]
pub struct KernelPairExt {
    /// `(π1, p1) : f̄ → f_A`.
    pub proj1: ExtSquare,
    /// `(π2, p2) : f̄ → f_A`.
    pub proj2: ExtSquare,
    /// `f̄ : Eq(α⊤) → Eq(α⊥)`.
    pub f_bar: Morphism,
}

pub fn kernel_pair_ext(alpha: &ExtSquare) -> Result<KernelPairExt> {
    let cube = pullback_square(alpha, alpha)?;
    Ok(KernelPairExt {
        f_bar: cube.sigma.f_a.clone(),
        proj1: cube.sigma,
        proj2: cube.gamma,
    })
}

/// The unit of `π0` at `f`, as a square from `f` to `π0(f)`.
pub fn reflection_square1(f: &Morphism) -> Result<ExtSquare> {
    f.require_extension()?;
    let (_, eta_a) = connectedness(f.dom()).quotient();
    let (_, eta_b) = connectedness(f.cod()).quotient();
    let pi0_f = connectedness(f.dom()).factor_through(&f.then(&eta_b)?)?;
    ExtSquare::new(f.clone(), pi0_f, eta_a, eta_b)
}

/// The cube from `α` to its image under the dimension-one centralization:
/// `sigma` and `beta` are the units at `f_A` and `f_B`.
pub fn reflection_cube2(alpha: &ExtSquare) -> Result<Cube> {
    alpha.require_double_extension()?;
    let (fi_a, unit_a) = centralize1(&alpha.f_a)?;
    let (fi_b, unit_b) = centralize1(&alpha.f_b)?;
    let sigma = ExtSquare::new(
        alpha.f_a.clone(),
        fi_a.clone(),
        unit_a,
        Morphism::identity(alpha.f_a.cod()),
    )?;
    let beta = ExtSquare::new(
        alpha.f_b.clone(),
        fi_b.clone(),
        unit_b.clone(),
        Morphism::identity(alpha.f_b.cod()),
    )?;
    let fi_top = c1(&alpha.f_a)?.factor_through(&alpha.alpha_top.then(&unit_b)?)?;
    let fi_alpha = ExtSquare::new(fi_a, fi_b, fi_top, alpha.alpha_bot.clone())?;
    Cube::new(alpha.clone(), fi_alpha, sigma, beta)
}

/// `σ⊤` applied componentwise to `Eq(f_C) □ Eq(γ⊤)`, landing in
/// `Eq(f_A) □ Eq(α⊤)`.
#[derive(Clone, Debug)]
pub struct ParallelisticMap {
    pub source: Vec<Quadruple>,
    pub target: Vec<Quadruple>,
    /// `image[i]` is the position in `target` of the image of `source[i]`.
    pub image: Vec<usize>,
}

impl ParallelisticMap {
    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &i in &self.image {
            hit[i] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

pub fn induced_parallelistic_map(cube: &Cube) -> Result<ParallelisticMap> {
    if !cube.is_3fold_extension()? {
        return Err(Error::NotThreeFold("cube is not a 3-fold extension".into()));
    }
    let map = parallelistic_image(cube)?;
    if !map.is_surjective() {
        return Err(Error::Inconsistent(
            "induced map on double parallelistic relations is not surjective".into(),
        ));
    }
    Ok(map)
}

/// The elementwise map without the 3-fold precondition.
pub fn parallelistic_image(cube: &Cube) -> Result<ParallelisticMap> {
    let mut source = Vec::new();
    for_each_quadruple(
        &Congruence::kernel_pair(cube.gamma.f_a()),
        &Congruence::kernel_pair(cube.gamma.alpha_top()),
        |q| source.push(q),
    )?;
    let mut target = Vec::new();
    for_each_quadruple(
        &Congruence::kernel_pair(cube.alpha.f_a()),
        &Congruence::kernel_pair(cube.alpha.alpha_top()),
        |q| target.push(q),
    )?;
    let s = cube.sigma.alpha_top();
    let mut image = Vec::with_capacity(source.len());
    for q in &source {
        let t = Quadruple::new(s.apply(q.a), s.apply(q.b), s.apply(q.c), s.apply(q.d));
        let i = target
            .binary_search(&t)
            .map_err(|_| Error::Inconsistent(format!("{t:?} is not a target quadruple")))?;
        image.push(i);
    }
    Ok(ParallelisticMap {
        source,
        target,
        image,
    })
}
