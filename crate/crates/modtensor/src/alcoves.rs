//! Alcove geometry for the affine Weyl group acting on weights through the
//! p-dilated dot action `t_g w . x = w(x + rho) - rho + p g`.
//!
//! An alcove is recorded by its level vector `n`: the open region where
//! `p n_alpha < <x + rho, coroot(alpha)> < p (n_alpha + 1)` for every positive
//! root. The upper closure replaces the right inequality by `<=`; every weight
//! lies in exactly one upper closure. `C_0` is the alcove with all levels 0.

use crate::rootdata::{
    apply_matrix, det2, mul_matrix, Rat, RatPoint, RootDatum, RootSystem, Weight, IDENTITY, RHO,
};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlcoveError {
    #[error("level vector {levels:?} bounds an empty region")]
    EmptyRegion { levels: Vec<i64> },
    #[error("{op} is only defined for {wanted}, not {got}")]
    UnsupportedSystem { op: &'static str, wanted: &'static str, got: &'static str },
}

/// The affine hyperplane `H_{alpha, r} = { x : <x + rho, coroot(alpha)> = p r }`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineHyperplane {
    pub root: usize,
    pub level: i64,
}

/// An alcove, identified by its level vector (one level per positive root).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alcove {
    levels: Vec<i64>,
}

impl Alcove {
    /// Builds an alcove after checking that the level vector actually bounds a
    /// nonempty open region (most integer vectors do not).
    pub fn new(datum: &RootDatum, p: i64, levels: Vec<i64>) -> Result<Alcove, AlcoveError> {
        if region_interior(datum, p, &levels).is_none() {
            return Err(AlcoveError::EmptyRegion { levels });
        }
        Ok(Alcove { levels })
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    /// Number of hyperplanes separating this alcove from `C_0`; for the
    /// alcove `w . C_0` with `w` a minimal coset representative this is the
    /// Coxeter length of `w`.
    pub fn separation_from_origin(&self) -> usize {
        self.levels.iter().map(|n| n.unsigned_abs() as usize).sum()
    }
}

/// The fundamental alcove `C_0` (all levels zero).
pub fn fundamental_alcove(datum: &RootDatum) -> Alcove {
    Alcove { levels: vec![0; datum.num_positive_roots()] }
}

/// `<x + rho, coroot(idx)>`.
pub fn pair_rho(datum: &RootDatum, x: Weight, idx: usize) -> i64 {
    datum.pair(x + RHO, idx)
}

/// Reflection of `x` in `H_{alpha, r}` under the dot action:
/// `x - (<x + rho, coroot> - p r) alpha`.
pub fn dot_reflect(datum: &RootDatum, p: i64, h: AffineHyperplane, x: Weight) -> Weight {
    let excess = pair_rho(datum, x, h.root) - p * h.level;
    x - datum.root(h.root).weight.scaled(excess)
}

/// The unique alcove whose upper closure contains `x`.
pub fn upper_closure_alcove(datum: &RootDatum, p: i64, x: Weight) -> Alcove {
    let levels = (0..datum.num_positive_roots())
        .map(|i| {
            let v = pair_rho(datum, x, i);
            // ceil(v / p) - 1
            (v + p - 1).div_euclid(p) - 1
        })
        .collect();
    Alcove { levels }
}

/// A weight is p-regular iff it lies in some open alcove, iff no pairing
/// `<x + rho, coroot>` is divisible by p.
pub fn is_p_regular(datum: &RootDatum, p: i64, x: Weight) -> bool {
    (0..datum.num_positive_roots()).all(|i| pair_rho(datum, x, i).rem_euclid(p) != 0)
}

/// The open alcove containing `x`, when `x` is p-regular.
pub fn alcove_of(datum: &RootDatum, p: i64, x: Weight) -> Option<Alcove> {
    is_p_regular(datum, p, x).then(|| upper_closure_alcove(datum, p, x))
}

pub fn in_open(datum: &RootDatum, p: i64, alcove: &Alcove, x: Weight) -> bool {
    (0..datum.num_positive_roots()).all(|i| {
        let v = pair_rho(datum, x, i);
        p * alcove.levels[i] < v && v < p * (alcove.levels[i] + 1)
    })
}

pub fn in_upper_closure(datum: &RootDatum, p: i64, alcove: &Alcove, x: Weight) -> bool {
    (0..datum.num_positive_roots()).all(|i| {
        let v = pair_rho(datum, x, i);
        p * alcove.levels[i] < v && v <= p * (alcove.levels[i] + 1)
    })
}

pub fn in_closure(datum: &RootDatum, p: i64, alcove: &Alcove, x: Weight) -> bool {
    (0..datum.num_positive_roots()).all(|i| {
        let v = pair_rho(datum, x, i);
        p * alcove.levels[i] <= v && v <= p * (alcove.levels[i] + 1)
    })
}

/// An exact interior point of the (nonempty) region bounded by `levels`:
/// the barycenter of the region's vertices. Returns `None` when the region
/// has empty interior.
fn region_interior(datum: &RootDatum, p: i64, levels: &[i64]) -> Option<RatPoint> {
    let n = datum.num_positive_roots();
    // Boundary lines <x + rho, coroot(i)> = p m for m in {n_i, n_i + 1}.
    let mut lines: Vec<(usize, i64)> = Vec::with_capacity(2 * n);
    for i in 0..n {
        lines.push((i, levels[i]));
        lines.push((i, levels[i] + 1));
    }
    let satisfies = |pt: RatPoint, strict: bool| {
        (0..n).all(|i| {
            let v = datum.pair_rat(RatPoint { a: pt.a.add(Rat::int(1)), b: pt.b.add(Rat::int(1)) }, i);
            let lo = Rat::int(p * levels[i]);
            let hi = Rat::int(p * (levels[i] + 1));
            if strict {
                lo < v && v < hi
            } else {
                lo <= v && v <= hi
            }
        })
    };
    let mut vertices: Vec<RatPoint> = Vec::new();
    for (k, &(i, mi)) in lines.iter().enumerate() {
        for &(j, mj) in &lines[k + 1..] {
            if i == j {
                continue;
            }
            // Solve pa_i x.a + pb_i x.b = p mi - pa_i - pb_i (and same for j).
            let (ai, bi) = pairing_coeffs(datum, i);
            let (aj, bj) = pairing_coeffs(datum, j);
            let det = ai * bj - aj * bi;
            if det == 0 {
                continue;
            }
            let ri = p * mi - ai - bi;
            let rj = p * mj - aj - bj;
            let x = Rat::new((ri * bj - rj * bi) as i128, det as i128);
            let y = Rat::new((ai * rj - aj * ri) as i128, det as i128);
            let pt = RatPoint { a: x, b: y };
            if satisfies(pt, false) && !vertices.contains(&pt) {
                vertices.push(pt);
            }
        }
    }
    if vertices.len() < 3 {
        return None;
    }
    let count = vertices.len() as i64;
    let sum_a = vertices.iter().fold(Rat::int(0), |acc, v| acc.add(v.a));
    let sum_b = vertices.iter().fold(Rat::int(0), |acc, v| acc.add(v.b));
    let bary = RatPoint { a: sum_a.div(Rat::int(count)), b: sum_b.div(Rat::int(count)) };
    satisfies(bary, true).then_some(bary)
}

fn pairing_coeffs(datum: &RootDatum, idx: usize) -> (i64, i64) {
    (datum.pair(Weight::new(1, 0), idx), datum.pair(Weight::new(0, 1), idx))
}

/// Interior point of a valid alcove.
pub fn interior_point(datum: &RootDatum, p: i64, alcove: &Alcove) -> RatPoint {
    region_interior(datum, p, &alcove.levels).expect("alcove has nonempty interior")
}

/// A codimension-one face of an alcove: the hyperplane, whether it sits in
/// the upper or lower closure, and the adjacent alcove behind it.
#[derive(Clone, Debug)]
pub struct Wall {
    pub hyperplane: AffineHyperplane,
    pub upper: bool,
    pub image: Alcove,
}

/// The walls of an alcove. A bounding hyperplane is a wall iff it is the
/// unique hyperplane separating the alcove from its reflection image.
pub fn walls(datum: &RootDatum, p: i64, alcove: &Alcove) -> Vec<Wall> {
    let q = interior_point(datum, p, alcove);
    let mut out = Vec::new();
    for i in 0..datum.num_positive_roots() {
        for m in [alcove.levels[i], alcove.levels[i] + 1] {
            let h = AffineHyperplane { root: i, level: m };
            let image = reflect_alcove_point(datum, p, q, h);
            let separations: usize = image
                .levels
                .iter()
                .zip(&alcove.levels)
                .map(|(x, y)| (x - y).unsigned_abs() as usize)
                .sum();
            if separations == 1 {
                out.push(Wall { hyperplane: h, upper: m == alcove.levels[i] + 1, image });
            }
        }
    }
    debug_assert_eq!(out.len(), 3, "rank-2 alcoves are triangles");
    out
}

/// Levels of the alcove containing the reflection of the interior point `q`
/// in `h` (the image alcove of the reflection).
fn reflect_alcove_point(datum: &RootDatum, p: i64, q: RatPoint, h: AffineHyperplane) -> Alcove {
    let q_rho = RatPoint { a: q.a.add(Rat::int(1)), b: q.b.add(Rat::int(1)) };
    let excess = datum.pair_rat(q_rho, h.root).sub(Rat::int(p * h.level));
    let alpha = datum.root(h.root).weight;
    let img = RatPoint {
        a: q.a.sub(excess.mul_int(alpha.a)),
        b: q.b.sub(excess.mul_int(alpha.b)),
    };
    let img_rho = RatPoint { a: img.a.add(Rat::int(1)), b: img.b.add(Rat::int(1)) };
    let levels = (0..datum.num_positive_roots())
        .map(|i| {
            let v = datum.pair_rat(img_rho, i);
            let scaled = v.div(Rat::int(p));
            debug_assert!(!scaled.is_integer(), "interior point landed on a hyperplane");
            scaled.floor() as i64
        })
        .collect();
    Alcove { levels }
}

/// Result of folding a weight into the closure of an alcove.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fold {
    pub rep: Weight,
    /// Parity of the number of reflections used, as a sign.
    pub sign: i64,
    /// Number of reflections used; for a p-regular weight folded to `C_0`
    /// this is the affine length of the minimal coset representative.
    pub reflections: usize,
}

/// Folds `x` into the closure of `alcove` by reflecting through its walls,
/// always taking the first separating wall in `(root, level)` order. Each
/// reflection crosses exactly one fewer separating hyperplane, so the number
/// of steps equals the number of hyperplanes separating `x` from the alcove.
pub fn fold_to_closure(datum: &RootDatum, p: i64, alcove: &Alcove, x: Weight) -> Fold {
    let ws = walls(datum, p, alcove);
    let mut cur = x;
    let mut count = 0usize;
    'outer: loop {
        for w in &ws {
            let v = pair_rho(datum, cur, w.hyperplane.root);
            let bound = p * w.hyperplane.level;
            let separated = if w.upper { v > bound } else { v < bound };
            if separated {
                cur = dot_reflect(datum, p, w.hyperplane, cur);
                count += 1;
                continue 'outer;
            }
        }
        break;
    }
    debug_assert!(in_closure(datum, p, alcove, cur));
    Fold { rep: cur, sign: if count % 2 == 0 { 1 } else { -1 }, reflections: count }
}

/// Folds into the closure of the fundamental alcove `C_0`.
pub fn dominant_fold(datum: &RootDatum, p: i64, x: Weight) -> Fold {
    fold_to_closure(datum, p, &fundamental_alcove(datum), x)
}

/// Is `mu` reflection-small with respect to `lambda`? Literal form: for every
/// wall `s` of the alcove whose upper closure holds `lambda` such that
/// `lambda <= s . lambda` in dominance, the whole shifted orbit
/// `lambda + w(mu)` must satisfy `lambda + w(mu) <= s . (lambda + w(mu))`.
pub fn reflection_small(datum: &RootDatum, p: i64, lambda: Weight, mu: Weight) -> bool {
    assert!(lambda.is_dominant() && mu.is_dominant(), "reflection smallness needs dominant weights");
    let c = upper_closure_alcove(datum, p, lambda);
    let orbit = datum.finite_orbit(mu);
    for w in walls(datum, p, &c) {
        let s_lambda = dot_reflect(datum, p, w.hyperplane, lambda);
        if !datum.leq(lambda, s_lambda) {
            continue;
        }
        for &(eta, _) in &orbit {
            let nu = lambda + eta;
            let s_nu = dot_reflect(datum, p, w.hyperplane, nu);
            if !datum.leq(nu, s_nu) {
                return false;
            }
        }
    }
    true
}

/// Closed-form evaluation of reflection smallness for the alcoves whose upper
/// closures cover the restricted region; `None` elsewhere. Must agree with
/// [`reflection_small`] wherever defined.
pub fn reflection_small_closed_form(
    datum: &RootDatum,
    p: i64,
    lambda: Weight,
    mu: Weight,
) -> Option<bool> {
    let c = upper_closure_alcove(datum, p, lambda);
    let (a, b) = (lambda.a, lambda.b);
    let (a1, b1) = (mu.a, mu.b);
    match (datum.system(), c.levels()) {
        (RootSystem::A2, [0, 0, 0]) => Some(a + b + a1 + b1 <= p - 2),
        (RootSystem::A2, [0, 0, 1]) => Some(a + a1 + b1 <= p - 1 && b + a1 + b1 <= p - 1),
        (RootSystem::B2, [0, 0, 0, 0]) => Some(2 * a + b + 2 * a1 + b1 <= p - 3),
        (RootSystem::B2, [0, 0, 1, 0]) => Some(a + b + a1 + b1 <= p - 2),
        (RootSystem::B2, [0, 0, 1, 1]) => {
            Some(2 * a + b + 2 * a1 + b1 <= 2 * p - 3 && b + 2 * a1 + b1 <= p - 1)
        }
        (RootSystem::B2, [0, 0, 2, 1]) => {
            Some(a + a1 + b1 <= p - 1 && b + 2 * a1 + b1 <= p - 1)
        }
        _ => None,
    }
}

/// Affine transformation `x -> M(x + rho) - rho + c` with `c` in `p` times
/// the root lattice; closed under composition, covers the dot action of the
/// affine Weyl group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineMap {
    pub matrix: [[i64; 2]; 2],
    pub translation: Weight,
}

impl AffineMap {
    pub fn identity() -> AffineMap {
        AffineMap { matrix: IDENTITY, translation: Weight::ZERO }
    }

    pub fn reflection(datum: &RootDatum, p: i64, h: AffineHyperplane) -> AffineMap {
        let r = datum.root(h.root);
        let e1 = datum.reflect(Weight::new(1, 0), h.root);
        let e2 = datum.reflect(Weight::new(0, 1), h.root);
        AffineMap {
            matrix: [[e1.a, e2.a], [e1.b, e2.b]],
            translation: r.weight.scaled(p * h.level),
        }
    }

    pub fn apply(&self, x: Weight) -> Weight {
        apply_matrix(&self.matrix, x + RHO) - RHO + self.translation
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            matrix: mul_matrix(&self.matrix, &other.matrix),
            translation: apply_matrix(&self.matrix, other.translation) + self.translation,
        }
    }

    /// Determinant of the linear part; equals `(-1)^length` for any
    /// expression of the map as a product of reflections.
    pub fn sign(&self) -> i64 {
        det2(&self.matrix)
    }
}

/// The finite stabilizer group attached to an alcove: generated by the
/// reflections in the walls of its lower closure (exactly the wall
/// reflections `s` with `s . C` below `C` in the up-ordering).
pub fn wc_elements(datum: &RootDatum, p: i64, alcove: &Alcove) -> Vec<AffineMap> {
    let gens: Vec<AffineMap> = walls(datum, p, alcove)
        .into_iter()
        .filter(|w| !w.upper)
        .map(|w| AffineMap::reflection(datum, p, w.hyperplane))
        .collect();
    let mut elements = vec![AffineMap::identity()];
    let mut seen: std::collections::HashSet<AffineMap> = elements.iter().copied().collect();
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in &gens {
                let prod = e.compose(g);
                if seen.insert(prod) {
                    elements.push(prod);
                    next.push(prod);
                }
            }
        }
        frontier = next;
        assert!(elements.len() <= 2 * datum.weyl_order(), "alcove stabilizer failed to close");
    }
    elements
}

/// The order-2 diagram symmetry of the fundamental alcove for B2:
/// `omega . (a, b) = (a, p - 2a - b - 4)`.
pub fn omega_dot_b2(datum: &RootDatum, p: i64, x: Weight) -> Result<Weight, AlcoveError> {
    if datum.system() != RootSystem::B2 {
        return Err(AlcoveError::UnsupportedSystem {
            op: "omega_dot_b2",
            wanted: "b2",
            got: datum.system().name(),
        });
    }
    Ok(Weight::new(x.a, p - 2 * x.a - x.b - 4))
}

/// Generator type of a facet: which simple affine reflection the facet is
/// conjugate to under the simply transitive action on alcoves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenType {
    /// The affine reflection `s_0` (in the level-1 wall of `C_0`).
    S0,
    /// The finite reflection `t = s_{a1}`.
    T,
    /// The finite reflection `u = s_{a2}`.
    U,
}

/// Assigns to each wall of each alcove its generator type, by transporting the
/// types of `C_0`'s walls along galleries. If `A = x . C_0` then the type-g
/// facet of `A` is `x` applied to the type-g facet of `C_0`, and the alcove
/// across it is `x s_g . C_0`.
pub struct FacetTyper<'d> {
    datum: &'d RootDatum,
    p: i64,
    memo: HashMap<Vec<i64>, Vec<(AffineHyperplane, GenType)>>,
}

impl<'d> FacetTyper<'d> {
    pub fn new(datum: &'d RootDatum, p: i64) -> Self {
        FacetTyper { datum, p, memo: HashMap::new() }
    }

    pub fn types(&mut self, alcove: &Alcove) -> Vec<(AffineHyperplane, GenType)> {
        if let Some(t) = self.memo.get(alcove.levels()) {
            return t.clone();
        }
        let ws = walls(self.datum, self.p, alcove);
        let result: Vec<(AffineHyperplane, GenType)> = if alcove.levels().iter().all(|&n| n == 0) {
            ws.iter()
                .map(|w| {
                    let ty = if w.upper {
                        GenType::S0
                    } else if w.hyperplane.root == 0 {
                        GenType::T
                    } else {
                        GenType::U
                    };
                    (w.hyperplane, ty)
                })
                .collect()
        } else {
            let toward = ws
                .iter()
                .find(|w| w.image.separation_from_origin() < alcove.separation_from_origin())
                .expect("some wall leads toward C_0");
            let r = AffineMap::reflection(self.datum, self.p, toward.hyperplane);
            let inner = self.types(&toward.image);
            ws.iter()
                .map(|w| {
                    let mapped = map_hyperplane(self.datum, self.p, &r, w.hyperplane);
                    let ty = inner
                        .iter()
                        .find(|(h, _)| *h == mapped)
                        .map(|(_, t)| *t)
                        .expect("reflected wall is a wall of the adjacent alcove");
                    (w.hyperplane, ty)
                })
                .collect()
        };
        self.memo.insert(alcove.levels().to_vec(), result.clone());
        result
    }

    /// The hyperplane of the type-`g` facet of `alcove`.
    pub fn facet(&mut self, alcove: &Alcove, g: GenType) -> AffineHyperplane {
        self.types(alcove)
            .into_iter()
            .find(|&(_, t)| t == g)
            .map(|(h, _)| h)
            .expect("each alcove has one facet of each type")
    }
}

/// Image of the hyperplane `h` under an affine Weyl map: again an affine
/// hyperplane `H_{gamma, k}` of the arrangement.
pub fn map_hyperplane(
    datum: &RootDatum,
    p: i64,
    map: &AffineMap,
    h: AffineHyperplane,
) -> AffineHyperplane {
    let beta = datum.root(h.root).weight;
    let image = apply_matrix(&map.matrix, beta);
    let (idx, eps) = datum
        .positive_roots()
        .iter()
        .enumerate()
        .find_map(|(i, r)| {
            if r.weight == image {
                Some((i, 1i64))
            } else if r.weight == -image {
                Some((i, -1i64))
            } else {
                None
            }
        })
        .expect("Weyl image of a root is a root");
    let shift = datum.pair(map.translation, idx);
    debug_assert_eq!(shift.rem_euclid(p), 0);
    AffineHyperplane { root: idx, level: eps * h.level + shift / p }
}
