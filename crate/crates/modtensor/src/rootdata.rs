//! Root data for the rank-2 systems A2 and B2.
//!
//! Weights are stored in fundamental-weight coordinates: `(a, b)` means
//! `a*w1 + b*w2`. All arithmetic is exact; rational values only appear in
//! [`root_coordinates`](RootDatum::root_coordinates) and in alcove-interior
//! computations.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Which of the two supported root systems a datum describes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RootSystem {
    A2,
    B2,
}

impl RootSystem {
    pub fn name(self) -> &'static str {
        match self {
            RootSystem::A2 => "a2",
            RootSystem::B2 => "b2",
        }
    }

    pub fn parse(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a2" => Ok(RootSystem::A2),
            "b2" => Ok(RootSystem::B2),
            other => Err(format!("unknown root system `{other}` (expected a2 or b2)")),
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

/// Weights are totally ordered by `(a + b, a)`. This refines the dominance
/// order of both A2 and B2 (every positive root has coordinate sum >= 0, and
/// the B2 root with sum 0 strictly lowers the first coordinate), so the
/// maximum of a character's support is always a highest weight.
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a + self.b, self.a).cmp(&(other.a + other.b, other.a))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub fn is_zero(self) -> bool {
        self == Weight::ZERO
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    /// Swaps the two coordinates. For A2 this is the diagram automorphism
    /// (equivalently `-w0`), which carries each classification row to its
    /// starred variant.
    pub fn swap(self) -> Self {
        Weight { a: self.b, b: self.a }
    }

    pub fn scaled(self, k: i64) -> Self {
        Weight { a: self.a * k, b: self.b * k }
    }

    /// Parses `"a,b"` with optional surrounding whitespace. Never panics.
    pub fn parse_arg(s: &str) -> Result<Weight, String> {
        let mut parts = s.split(',');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(format!("expected `a,b`, got `{s}`"));
        };
        let a: i64 = a.trim().parse().map_err(|e| format!("bad first coordinate in `{s}`: {e}"))?;
        let b: i64 = b.trim().parse().map_err(|e| format!("bad second coordinate in `{s}`: {e}"))?;
        Ok(Weight { a, b })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { a: -self.a, b: -self.b }
    }
}

/// The half-sum of positive roots, `w1 + w2`, for both systems.
pub const RHO: Weight = Weight { a: 1, b: 1 };

/// Exact rational number with reduced representation and positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rat {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rat { num: sign * num / g, den: sign * den / g }
    }

    pub fn int(n: i64) -> Rat {
        Rat { num: n as i128, den: 1 }
    }

    pub fn num(self) -> i128 {
        self.num
    }

    pub fn den(self) -> i128 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    /// The floor as an integer; exact for all magnitudes in use.
    pub fn floor(self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn add(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    pub fn sub(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    pub fn mul(self, o: Rat) -> Rat {
        Rat::new(self.num * o.num, self.den * o.den)
    }

    pub fn div(self, o: Rat) -> Rat {
        assert!(o.num != 0, "division by zero");
        Rat::new(self.num * o.den, self.den * o.num)
    }

    pub fn mul_int(self, k: i64) -> Rat {
        Rat::new(self.num * k as i128, self.den)
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rational point in weight coordinates (used for alcove interiors).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RatPoint {
    pub a: Rat,
    pub b: Rat,
}

/// One positive root: its expression as a weight, and the linear functional
/// `x -> <x, coroot>` as coefficients on `(x.a, x.b)`.
#[derive(Clone, Debug)]
pub struct Root {
    pub weight: Weight,
    pairing: (i64, i64),
    pub simple: bool,
    pub name: &'static str,
}

/// Finite Weyl group element: an integral 2x2 matrix acting on weight
/// coordinates, with its Coxeter length and a reduced word in `t = s_{a1}`,
/// `u = s_{a2}`.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub matrix: [[i64; 2]; 2],
    pub length: usize,
    pub word: String,
}

impl WeylElement {
    pub fn apply(&self, x: Weight) -> Weight {
        apply_matrix(&self.matrix, x)
    }

    pub fn det(&self) -> i64 {
        det2(&self.matrix)
    }
}

pub fn apply_matrix(m: &[[i64; 2]; 2], x: Weight) -> Weight {
    Weight { a: m[0][0] * x.a + m[0][1] * x.b, b: m[1][0] * x.a + m[1][1] * x.b }
}

pub fn mul_matrix(l: &[[i64; 2]; 2], r: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = l[i][0] * r[0][j] + l[i][1] * r[1][j];
        }
    }
    out
}

pub fn det2(m: &[[i64; 2]; 2]) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub const IDENTITY: [[i64; 2]; 2] = [[1, 0], [0, 1]];

/// Root datum of a rank-2 simply connected group, with the finite Weyl group
/// enumerated at construction.
pub struct RootDatum {
    system: RootSystem,
    roots: Vec<Root>,
    gram: [[i64; 2]; 2],
    weyl: Vec<WeylElement>,
    w0: usize,
}

impl RootDatum {
    pub fn new(system: RootSystem) -> RootDatum {
        let (roots, gram): (Vec<Root>, [[i64; 2]; 2]) = match system {
            RootSystem::A2 => (
                vec![
                    Root { weight: Weight::new(2, -1), pairing: (1, 0), simple: true, name: "a1" },
                    Root { weight: Weight::new(-1, 2), pairing: (0, 1), simple: true, name: "a2" },
                    Root { weight: Weight::new(1, 1), pairing: (1, 1), simple: false, name: "a1+a2" },
                ],
                // Invariant form scaled by 3 to stay integral.
                [[2, 1], [1, 2]],
            ),
            RootSystem::B2 => (
                vec![
                    Root { weight: Weight::new(2, -2), pairing: (1, 0), simple: true, name: "a1" },
                    Root { weight: Weight::new(-1, 2), pairing: (0, 1), simple: true, name: "a2" },
                    Root { weight: Weight::new(1, 0), pairing: (2, 1), simple: false, name: "a1+a2" },
                    Root { weight: Weight::new(0, 2), pairing: (1, 1), simple: false, name: "a1+2a2" },
                ],
                // Short roots have squared length 2; this form is already integral.
                [[2, 1], [1, 1]],
            ),
        };
        let weyl = enumerate_weyl(&roots);
        let w0 = weyl
            .iter()
            .enumerate()
            .max_by_key(|(_, w)| w.length)
            .map(|(i, _)| i)
            .expect("nonempty Weyl group");
        RootDatum { system, roots, gram, weyl, w0 }
    }

    pub fn a2() -> RootDatum {
        RootDatum::new(RootSystem::A2)
    }

    pub fn b2() -> RootDatum {
        RootDatum::new(RootSystem::B2)
    }

    pub fn system(&self) -> RootSystem {
        self.system
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    /// Index of the root whose affine level-1 reflection is `s_0`: the highest
    /// short root (B2) respectively the highest root (A2, where they coincide).
    pub fn s0_root(&self) -> usize {
        match self.system {
            RootSystem::A2 => 2,
            RootSystem::B2 => 2,
        }
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> usize {
        match self.system {
            RootSystem::A2 => 2,
            RootSystem::B2 => 3,
        }
    }

    /// `<x, coroot(idx)>`.
    pub fn pair(&self, x: Weight, idx: usize) -> i64 {
        let (pa, pb) = self.roots[idx].pairing;
        pa * x.a + pb * x.b
    }

    pub fn pair_rat(&self, x: RatPoint, idx: usize) -> Rat {
        let (pa, pb) = self.roots[idx].pairing;
        x.a.mul_int(pa).add(x.b.mul_int(pb))
    }

    /// The reflection `s_alpha(x) = x - <x, coroot> alpha`.
    pub fn reflect(&self, x: Weight, idx: usize) -> Weight {
        let n = self.pair(x, idx);
        x - self.roots[idx].weight.scaled(n)
    }

    pub fn weyl_elements(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn w0(&self) -> &WeylElement {
        &self.weyl[self.w0]
    }

    /// Orbit of `x` under the finite Weyl group, sorted, each point tagged
    /// with the index (into [`weyl_elements`](Self::weyl_elements)) of a
    /// shortest element reaching it.
    pub fn finite_orbit(&self, x: Weight) -> Vec<(Weight, usize)> {
        let mut seen: BTreeMap<Weight, usize> = BTreeMap::new();
        for (i, w) in self.weyl.iter().enumerate() {
            seen.entry(w.apply(x)).or_insert(i);
        }
        seen.into_iter().collect()
    }

    /// The dominant representative of the orbit of `x`, with a Weyl element
    /// `w` such that `w(x)` is that representative.
    pub fn dominant_orbit_rep(&self, x: Weight) -> (Weight, usize) {
        for (i, w) in self.weyl.iter().enumerate() {
            let y = w.apply(x);
            if y.is_dominant() {
                return (y, i);
            }
        }
        unreachable!("every orbit meets the dominant chamber");
    }

    /// Coefficients `(c, d)` with `delta = c a1 + d a2`, as exact rationals.
    pub fn root_coordinates(&self, delta: Weight) -> (Rat, Rat) {
        let a1 = self.roots[0].weight;
        let a2 = self.roots[1].weight;
        let det = a1.a * a2.b - a2.a * a1.b;
        let c = Rat::new((delta.a * a2.b - a2.a * delta.b) as i128, det as i128);
        let d = Rat::new((a1.a * delta.b - delta.a * a1.b) as i128, det as i128);
        (c, d)
    }

    /// Dominance order: `x <= y` iff `y - x` is a non-negative integral
    /// combination of simple roots.
    pub fn leq(&self, x: Weight, y: Weight) -> bool {
        let (c, d) = self.root_coordinates(y - x);
        c.is_integer() && d.is_integer() && c.num() >= 0 && d.num() >= 0
    }

    pub fn lt(&self, x: Weight, y: Weight) -> bool {
        x != y && self.leq(x, y)
    }

    /// Scaled invariant bilinear form (the scale is constant per system, so
    /// ratios of form values are unaffected).
    pub fn ip(&self, x: Weight, y: Weight) -> i64 {
        let gy_a = self.gram[0][0] * y.a + self.gram[0][1] * y.b;
        let gy_b = self.gram[1][0] * y.a + self.gram[1][1] * y.b;
        x.a * gy_a + x.b * gy_b
    }

    /// Dimension of the Weyl module of highest weight `lambda`.
    pub fn weyl_dimension(&self, lambda: Weight) -> i64 {
        assert!(lambda.is_dominant(), "weyl_dimension needs a dominant weight, got {lambda}");
        let (a, b) = (lambda.a, lambda.b);
        match self.system {
            RootSystem::A2 => (a + 1) * (b + 1) * (a + b + 2) / 2,
            RootSystem::B2 => (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6,
        }
    }

    /// The minuscule fundamental weights: both for A2, only `w2` for B2.
    pub fn minuscule_fundamentals(&self) -> Vec<Weight> {
        match self.system {
            RootSystem::A2 => vec![Weight::new(1, 0), Weight::new(0, 1)],
            RootSystem::B2 => vec![Weight::new(0, 1)],
        }
    }

    /// `-w0(x)`: the highest weight of the dual of a simple module `L(x)`.
    pub fn dual_weight(&self, x: Weight) -> Weight {
        -self.w0().apply(x)
    }
}

fn enumerate_weyl(roots: &[Root]) -> Vec<WeylElement> {
    let gens: Vec<([[i64; 2]; 2], &'static str)> = [0usize, 1]
        .iter()
        .map(|&i| {
            let r = &roots[i];
            let e1 = Weight::new(1, 0) - r.weight.scaled(r.pairing.0);
            let e2 = Weight::new(0, 1) - r.weight.scaled(r.pairing.1);
            ([[e1.a, e2.a], [e1.b, e2.b]], if i == 0 { "t" } else { "u" })
        })
        .collect();
    let mut elements = vec![WeylElement { matrix: IDENTITY, length: 0, word: "e".to_string() }];
    let mut seen = std::collections::HashSet::new();
    seen.insert(IDENTITY);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let (base_matrix, base_len, base_word) =
                (elements[idx].matrix, elements[idx].length, elements[idx].word.clone());
            for (gm, gname) in &gens {
                let m = mul_matrix(&base_matrix, gm);
                if seen.insert(m) {
                    let word = if base_len == 0 { gname.to_string() } else { format!("{base_word}{gname}") };
                    elements.push(WeylElement { matrix: m, length: base_len + 1, word });
                    next.push(elements.len() - 1);
                }
            }
        }
        frontier = next;
    }
    elements
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both() -> [RootDatum; 2] {
        [RootDatum::a2(), RootDatum::b2()]
    }

    #[test]
    fn weyl_group_sizes_and_longest_element() {
        let a2 = RootDatum::a2();
        assert_eq!(a2.weyl_order(), 6);
        assert_eq!(a2.w0().length, 3);
        // -w0 is the coordinate swap for A2.
        assert_eq!(a2.dual_weight(Weight::new(3, 1)), Weight::new(1, 3));

        let b2 = RootDatum::b2();
        assert_eq!(b2.weyl_order(), 8);
        assert_eq!(b2.w0().length, 4);
        // w0 = -1 for B2.
        assert_eq!(b2.dual_weight(Weight::new(3, 1)), Weight::new(3, 1));
    }

    #[test]
    fn pairings_on_fundamental_weights() {
        let a2 = RootDatum::a2();
        let x = Weight::new(5, 7);
        assert_eq!(a2.pair(x, 0), 5);
        assert_eq!(a2.pair(x, 1), 7);
        assert_eq!(a2.pair(x, 2), 12);

        let b2 = RootDatum::b2();
        assert_eq!(b2.pair(x, 0), 5);
        assert_eq!(b2.pair(x, 1), 7);
        assert_eq!(b2.pair(x, 2), 17); // 2a + b on the short-root coroot
        assert_eq!(b2.pair(x, 3), 12); // a + b on the long-root coroot
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = RootDatum::a2();
        assert_eq!(a2.reflect(Weight::new(1, 0), 0), Weight::new(-1, 1));
        assert_eq!(a2.reflect(Weight::new(1, 0), 1), Weight::new(1, 0));
        let b2 = RootDatum::b2();
        assert_eq!(b2.reflect(Weight::new(1, 0), 0), Weight::new(-1, 2));
        assert_eq!(b2.reflect(Weight::new(0, 1), 1), Weight::new(1, -1));
    }

    #[test]
    fn reflections_are_involutive() {
        for datum in both() {
            for a in -4..=4 {
                for b in -4..=4 {
                    let x = Weight::new(a, b);
                    for i in 0..datum.num_positive_roots() {
                        assert_eq!(datum.reflect(datum.reflect(x, i), i), x);
                    }
                }
            }
        }
    }

    #[test]
    fn length_parity_matches_determinant() {
        for datum in both() {
            for w in datum.weyl_elements() {
                let expected = if w.length % 2 == 0 { 1 } else { -1 };
                assert_eq!(w.det(), expected, "element {}", w.word);
            }
        }
    }

    #[test]
    fn w0_negates_the_positive_system() {
        for datum in both() {
            let mut neg: Vec<Weight> =
                datum.positive_roots().iter().map(|r| -r.weight).collect();
            let mut image: Vec<Weight> =
                datum.positive_roots().iter().map(|r| datum.w0().apply(r.weight)).collect();
            neg.sort();
            image.sort();
            assert_eq!(neg, image);
        }
    }

    #[test]
    fn orbit_size_times_stabilizer_is_group_order() {
        for datum in both() {
            for a in -3..=3 {
                for b in -3..=3 {
                    let x = Weight::new(a, b);
                    let orbit = datum.finite_orbit(x);
                    let stab = datum.weyl_elements().iter().filter(|w| w.apply(x) == x).count();
                    assert_eq!(orbit.len() * stab, datum.weyl_order(), "x = {x}");
                }
            }
        }
    }

    #[test]
    fn orbit_shapes_match_closed_forms() {
        let a2 = RootDatum::a2();
        let x = Weight::new(2, 1);
        let pts: Vec<Weight> = a2.finite_orbit(x).into_iter().map(|(w, _)| w).collect();
        // A2 orbits are not stable under negation (w0 is -swap): the lower
        // half is minus the swapped upper half.
        let mut expected = vec![
            Weight::new(2, 1),
            Weight::new(3, -1),
            Weight::new(-2, 3),
            Weight::new(-1, -2),
            Weight::new(1, -3),
            Weight::new(-3, 2),
        ];
        expected.sort();
        assert_eq!(pts, expected);

        let b2 = RootDatum::b2();
        let pts: Vec<Weight> = b2.finite_orbit(x).into_iter().map(|(w, _)| w).collect();
        let mut expected = vec![
            Weight::new(2, 1),
            Weight::new(3, -1),
            Weight::new(-2, 5),
            Weight::new(-3, 5),
            Weight::new(-2, -1),
            Weight::new(-3, 1),
            Weight::new(2, -5),
            Weight::new(3, -5),
        ];
        expected.sort();
        assert_eq!(pts, expected);
    }

    #[test]
    fn root_coordinates_solve_exactly() {
        for datum in both() {
            for a in -5..=5 {
                for b in -5..=5 {
                    let delta = Weight::new(a, b);
                    let (c, d) = datum.root_coordinates(delta);
                    let a1 = datum.root(0).weight;
                    let a2 = datum.root(1).weight;
                    // c*a1 + d*a2 == delta, checked over a common denominator.
                    let den = (c.den() * d.den()) as i64;
                    let ca = c.num() as i64 * d.den() as i64;
                    let da = d.num() as i64 * c.den() as i64;
                    assert_eq!(ca * a1.a + da * a2.a, delta.a * den);
                    assert_eq!(ca * a1.b + da * a2.b, delta.b * den);
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let b2 = RootDatum::b2();
        // a_hs = a1 + a2 = w1 and a_h = a1 + 2 a2 = 2 w2 are both >= 0.
        assert!(b2.leq(Weight::ZERO, Weight::new(1, 0)));
        assert!(b2.leq(Weight::ZERO, Weight::new(0, 2)));
        // w2 - 0 = (a1 + a2)/... is not integral in the root lattice.
        assert!(!b2.leq(Weight::ZERO, Weight::new(0, 1)));
        let a2 = RootDatum::a2();
        assert!(a2.leq(Weight::new(0, 0), Weight::new(1, 1)));
        assert!(!a2.leq(Weight::new(0, 0), Weight::new(1, 0)));
        assert!(a2.leq(Weight::new(1, 0), Weight::new(0, 2)));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for datum in both() {
            let box_range = -4..=4i64;
            let pts: Vec<Weight> = box_range
                .clone()
                .flat_map(|a| box_range.clone().map(move |b| Weight::new(a, b)))
                .collect();
            for &x in &pts {
                assert!(datum.leq(x, x));
                for &y in &pts {
                    if datum.leq(x, y) && datum.leq(y, x) {
                        assert_eq!(x, y);
                    }
                    for &z in &pts {
                        if datum.leq(x, y) && datum.leq(y, z) {
                            assert!(datum.leq(x, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let a2 = RootDatum::a2();
        assert_eq!(a2.weyl_dimension(Weight::new(1, 0)), 3);
        assert_eq!(a2.weyl_dimension(Weight::new(1, 1)), 8);
        assert_eq!(a2.weyl_dimension(Weight::new(2, 0)), 6);
        let b2 = RootDatum::b2();
        assert_eq!(b2.weyl_dimension(Weight::new(0, 1)), 4);
        assert_eq!(b2.weyl_dimension(Weight::new(1, 0)), 5);
        assert_eq!(b2.weyl_dimension(Weight::new(1, 1)), 16);
        assert_eq!(b2.weyl_dimension(Weight::new(2, 0)), 14);
        assert_eq!(b2.weyl_dimension(Weight::new(0, 2)), 10);
    }

    #[test]
    fn minuscule_orbits_fill_the_module() {
        for datum in both() {
            for w in datum.minuscule_fundamentals() {
                let orbit = datum.finite_orbit(w);
                assert_eq!(orbit.len() as i64, datum.weyl_dimension(w));
            }
        }
    }

    #[test]
    fn weight_order_refines_dominance() {
        for datum in both() {
            for a in -4..=4 {
                for b in -4..=4 {
                    let x = Weight::new(a, b);
                    for c in -4..=4 {
                        for d in -4..=4 {
                            let y = Weight::new(c, d);
                            if datum.lt(x, y) {
                                assert!(x < y, "{x} < {y} in dominance but not in Ord");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_parsing() {
        assert_eq!(Weight::parse_arg("3,1"), Ok(Weight::new(3, 1)));
        assert_eq!(Weight::parse_arg(" -2 , 5 "), Ok(Weight::new(-2, 5)));
        assert!(Weight::parse_arg("3").is_err());
        assert!(Weight::parse_arg("3,1,2").is_err());
        assert!(Weight::parse_arg("x,y").is_err());
        assert!(Weight::parse_arg("99999999999999999999999,0").is_err());
    }
}
