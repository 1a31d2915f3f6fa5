//! Characters of simple modules in characteristic p.
//!
//! Composition factors of p-restricted Weyl modules are produced by a rule
//! table keyed on the alcove/wall position of the highest weight (with a
//! small-prime override for B2 at p = 2); simple characters follow by
//! triangular inversion, and extend to all dominant weights by Steinberg's
//! tensor product theorem. A [`ModularContext`] owns the full restricted
//! table for one (system, p) and memoizes Steinberg products.

use crate::alcoves::{
    dominant_fold, dot_reflect, fundamental_alcove, is_p_regular, upper_closure_alcove, walls,
    AffineHyperplane,
};
use crate::characters::{weyl_character, FormalCharacter};
use crate::rootdata::{RootDatum, RootSystem, Weight, RHO};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplesError {
    #[error("weight {weight} is not p-restricted for p = {p}")]
    NonRestricted { weight: Weight, p: i64 },
    #[error("no tilting character rule covers {weight} at p = {p}")]
    TiltingNotDiagrammed { weight: Weight, p: i64 },
    #[error("restricted character table is invalid: {reason}")]
    BadTable { reason: String },
}

pub fn is_restricted(p: i64, lambda: Weight) -> bool {
    (0..p).contains(&lambda.a) && (0..p).contains(&lambda.b)
}

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Composition factors `(weight, multiplicity)` of the Weyl module of
/// p-restricted highest weight `lambda`, leading factor first.
///
/// Rules: a p-singular restricted Weyl module is simple, except for B2
/// weights in the upper closure of the third alcove that lie on its second
/// upper wall (those have one extra factor), and except for B2 at p = 2
/// where the five-dimensional Weyl module loses a trivial factor. A
/// p-regular restricted Weyl module has one extra factor, obtained by
/// reflecting into the next lower alcove, unless it sits in the lowest one.
pub fn weyl_factors_restricted(
    datum: &RootDatum,
    p: i64,
    lambda: Weight,
) -> Result<Vec<(Weight, i64)>, SimplesError> {
    if !is_restricted(p, lambda) {
        return Err(SimplesError::NonRestricted { weight: lambda, p });
    }
    let simple = Ok(vec![(lambda, 1)]);
    let two = |nu: Weight| Ok(vec![(lambda, 1), (nu, 1)]);
    match datum.system() {
        RootSystem::A2 => {
            if !is_p_regular(datum, p, lambda) {
                return simple;
            }
            match upper_closure_alcove(datum, p, lambda).levels() {
                [0, 0, 0] => simple,
                [0, 0, 1] => {
                    two(dot_reflect(datum, p, AffineHyperplane { root: 2, level: 1 }, lambda))
                }
                other => unreachable!("regular restricted A2 weight in alcove {other:?}"),
            }
        }
        RootSystem::B2 => {
            if p == 2 {
                return if lambda == Weight::new(1, 0) { two(Weight::ZERO) } else { simple };
            }
            if is_p_regular(datum, p, lambda) {
                let refl = |root: usize, level: i64| {
                    let nu = dot_reflect(datum, p, AffineHyperplane { root, level }, lambda);
                    debug_assert!(nu.is_dominant());
                    two(nu)
                };
                match upper_closure_alcove(datum, p, lambda).levels() {
                    [0, 0, 0, 0] => simple,
                    [0, 0, 1, 0] => refl(2, 1),
                    [0, 0, 1, 1] => refl(3, 1),
                    [0, 0, 2, 1] => refl(2, 2),
                    other => unreachable!("regular restricted B2 weight in alcove {other:?}"),
                }
            } else if upper_closure_alcove(datum, p, lambda).levels() == [0, 0, 2, 1]
                && lambda.a != p - 1
            {
                // The second upper wall of the third alcove: lambda = stu.nu
                // with nu on the level-1 short wall of C_0-bar and stabilizer
                // {e, s}; the extra factor is st.nu.
                assert_eq!(lambda.b, p - 1);
                let nu = dominant_fold(datum, p, lambda).rep;
                assert_eq!(datum.pair(nu + RHO, 2), p);
                for idx in [0usize, 1, 3] {
                    let v = datum.pair(nu + RHO, idx);
                    assert!(0 < v && v < p, "stabilizer of {nu} must be exactly {{e, s}}");
                }
                let t_nu = dot_reflect(datum, p, AffineHyperplane { root: 0, level: 0 }, nu);
                let st_nu = dot_reflect(datum, p, AffineHyperplane { root: 2, level: 1 }, t_nu);
                assert!(st_nu.is_dominant());
                // Round trip: s t u . nu recovers lambda.
                let u_nu = dot_reflect(datum, p, AffineHyperplane { root: 1, level: 0 }, nu);
                let tu_nu = dot_reflect(datum, p, AffineHyperplane { root: 0, level: 0 }, u_nu);
                let stu_nu = dot_reflect(datum, p, AffineHyperplane { root: 2, level: 1 }, tu_nu);
                assert_eq!(stu_nu, lambda);
                two(st_nu)
            } else {
                simple
            }
        }
    }
}

/// Base-p digits of a dominant weight, least significant first; every digit
/// is p-restricted and `sum p^i digit_i` reconstructs the weight.
pub fn base_p_expand(p: i64, lambda: Weight) -> Vec<Weight> {
    assert!(lambda.is_dominant());
    let (mut a, mut b) = (lambda.a, lambda.b);
    let mut digits = Vec::new();
    loop {
        digits.push(Weight::new(a % p, b % p));
        a /= p;
        b /= p;
        if a == 0 && b == 0 {
            break;
        }
    }
    digits
}

/// Frobenius twist on characters: every weight is scaled by `p^r`.
pub fn frobenius_twist(ch: &FormalCharacter, r: u32, p: i64) -> FormalCharacter {
    ch.scaled_weights(p.pow(r))
}

/// Simple characters for one (root system, prime): the complete p-restricted
/// table, built eagerly, plus a memo of Steinberg products for dominant
/// weights beyond the restricted box. Shared freely across threads; racing
/// memo writers compute identical values.
pub struct ModularContext {
    datum: RootDatum,
    p: i64,
    restricted: BTreeMap<Weight, Arc<FormalCharacter>>,
    extended: Mutex<HashMap<Weight, Arc<FormalCharacter>>>,
}

impl ModularContext {
    pub fn new(system: RootSystem, p: i64) -> ModularContext {
        assert!(is_prime(p), "characteristic must be prime, got {p}");
        let datum = RootDatum::new(system);
        let mut restricted: BTreeMap<Weight, Arc<FormalCharacter>> = BTreeMap::new();
        let mut order: Vec<Weight> = (0..p)
            .flat_map(|a| (0..p).map(move |b| Weight::new(a, b)))
            .collect();
        order.sort();
        for lambda in order {
            let factors = weyl_factors_restricted(&datum, p, lambda)
                .expect("restricted box enumerates restricted weights");
            let mut ch = weyl_character(&datum, lambda);
            for &(nu, mult) in &factors[1..] {
                let prior = restricted
                    .get(&nu)
                    .expect("composition factors are strictly smaller, hence already built");
                ch.add_scaled(prior, -mult);
            }
            debug_assert!(ch.iter().all(|(_, m)| m > 0), "simple characters are effective");
            debug_assert_eq!(ch.max_entry(), Some((lambda, 1)));
            restricted.insert(lambda, Arc::new(ch));
        }
        ModularContext { datum, p, restricted, extended: Mutex::new(HashMap::new()) }
    }

    /// Rebuilds a context from an externally stored restricted table,
    /// validating its shape (exact restricted key set, leading coefficient 1,
    /// Weyl invariance, effectivity).
    pub fn with_restricted_table(
        system: RootSystem,
        p: i64,
        table: BTreeMap<Weight, FormalCharacter>,
    ) -> Result<ModularContext, SimplesError> {
        let datum = RootDatum::new(system);
        let bad = |reason: String| Err(SimplesError::BadTable { reason });
        if !is_prime(p) {
            return bad(format!("characteristic {p} is not prime"));
        }
        if table.len() != (p * p) as usize {
            return bad(format!("expected {} entries, found {}", p * p, table.len()));
        }
        for (&lambda, ch) in &table {
            if !is_restricted(p, lambda) {
                return bad(format!("key {lambda} is not p-restricted"));
            }
            if ch.max_entry() != Some((lambda, 1)) {
                return bad(format!("character of {lambda} does not lead with coefficient 1"));
            }
            if ch.iter().any(|(_, m)| m <= 0) {
                return bad(format!("character of {lambda} has a non-positive multiplicity"));
            }
            if !ch.is_weyl_invariant(&datum) {
                return bad(format!("character of {lambda} is not Weyl-invariant"));
            }
        }
        let restricted = table.into_iter().map(|(w, ch)| (w, Arc::new(ch))).collect();
        Ok(ModularContext { datum, p, restricted, extended: Mutex::new(HashMap::new()) })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn restricted_weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.restricted.keys().copied()
    }

    pub fn restricted_table(&self) -> impl Iterator<Item = (Weight, &FormalCharacter)> + '_ {
        self.restricted.iter().map(|(&w, ch)| (w, ch.as_ref()))
    }

    /// Character of the simple module of any dominant highest weight, via
    /// the base-p factorization into twisted restricted simples.
    pub fn simple_character(&self, lambda: Weight) -> Arc<FormalCharacter> {
        assert!(lambda.is_dominant(), "simple_character needs a dominant weight, got {lambda}");
        if let Some(ch) = self.restricted.get(&lambda) {
            return Arc::clone(ch);
        }
        if let Some(ch) = self.extended.lock().unwrap().get(&lambda) {
            return Arc::clone(ch);
        }
        let digits = base_p_expand(self.p, lambda);
        let mut ch = FormalCharacter::singleton(Weight::ZERO);
        for (i, &digit) in digits.iter().enumerate() {
            if digit.is_zero() {
                continue;
            }
            let twisted = frobenius_twist(&self.restricted[&digit], i as u32, self.p);
            ch = ch.product(&twisted);
        }
        let ch = Arc::new(ch);
        self.extended.lock().unwrap().insert(lambda, Arc::clone(&ch));
        ch
    }

    pub fn simple_dimension(&self, lambda: Weight) -> i64 {
        self.simple_character(lambda).dimension()
    }

    /// Composition factors of the Weyl module (restricted weights only).
    pub fn weyl_factors(&self, lambda: Weight) -> Result<Vec<(Weight, i64)>, SimplesError> {
        weyl_factors_restricted(&self.datum, self.p, lambda)
    }

    /// Character of the indecomposable tilting module, where its composition
    /// series is on record: weights whose Weyl module is simple (there
    /// `T = Delta = L`), and p-regular weights in the alcoves directly above
    /// `C_0` (the uniserial and diamond cases). Other weights are rejected.
    pub fn tilting_character(&self, lambda: Weight) -> Result<FormalCharacter, SimplesError> {
        assert!(lambda.is_dominant());
        let not_diagrammed = SimplesError::TiltingNotDiagrammed { weight: lambda, p: self.p };
        if is_restricted(self.p, lambda) {
            let factors = weyl_factors_restricted(&self.datum, self.p, lambda)?;
            if factors.len() == 1 {
                return Ok(weyl_character(&self.datum, lambda));
            }
        }
        if !is_p_regular(&self.datum, self.p, lambda) {
            return Err(not_diagrammed);
        }
        let levels = upper_closure_alcove(&self.datum, self.p, lambda);
        let diagrammed: &[&[i64]] = match self.datum.system() {
            RootSystem::A2 => &[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]],
            RootSystem::B2 => &[&[0, 0, 1, 0], &[0, 0, 1, 1], &[0, 0, 2, 1]],
        };
        if !diagrammed.contains(&levels.levels()) {
            return Err(not_diagrammed);
        }
        // Gallery from the alcove down to C_0, reflecting through the unique
        // wall that decreases the separation at each step.
        let mut chain = vec![lambda];
        let mut cur = lambda;
        let c0 = fundamental_alcove(&self.datum);
        loop {
            let alcove = upper_closure_alcove(&self.datum, self.p, cur);
            if alcove == c0 {
                break;
            }
            let toward: Vec<_> = walls(&self.datum, self.p, &alcove)
                .into_iter()
                .filter(|w| w.image.separation_from_origin() < alcove.separation_from_origin())
                .collect();
            assert_eq!(toward.len(), 1, "gallery wall must be unique here");
            cur = dot_reflect(&self.datum, self.p, toward[0].hyperplane, cur);
            assert!(cur.is_dominant());
            chain.push(cur);
        }
        // chain = [x_k, ..., x_1, x_0] with x_0 in C_0. The tilting factors:
        // length 1: [x_0, x_1, x_0]; length 2 and 3: the diamond with socle
        // and head x_{k-1}, plus x_k and x_{k-2} in the middle layer.
        let k = chain.len() - 1;
        let mut total = FormalCharacter::new();
        total.add_scaled(&self.simple_character(chain[0]), 1);
        total.add_scaled(&self.simple_character(chain[1]), 2);
        if k >= 2 {
            total.add_scaled(&self.simple_character(chain[2]), 1);
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{chi_character, peel, peel_to_chi};

    fn factors(datum: &RootDatum, p: i64, w: (i64, i64)) -> Vec<(i64, i64)> {
        weyl_factors_restricted(datum, p, Weight::new(w.0, w.1))
            .unwrap()
            .into_iter()
            .map(|(nu, m)| {
                assert_eq!(m, 1);
                (nu.a, nu.b)
            })
            .collect()
    }

    #[test]
    fn a2_factor_rules() {
        let a2 = RootDatum::a2();
        // Singular restricted Weyl modules are simple.
        assert_eq!(factors(&a2, 5, (3, 0)), vec![(3, 0)]);
        assert_eq!(factors(&a2, 5, (4, 4)), vec![(4, 4)]);
        assert_eq!(factors(&a2, 2, (1, 1)), vec![(1, 1)]);
        // Lowest alcove: simple.
        assert_eq!(factors(&a2, 5, (1, 1)), vec![(1, 1)]);
        // Second alcove: one reflection down.
        assert_eq!(factors(&a2, 5, (2, 2)), vec![(2, 2), (1, 1)]);
        assert_eq!(factors(&a2, 3, (1, 1)), vec![(1, 1), (0, 0)]);
        assert_eq!(factors(&a2, 7, (4, 3)), vec![(4, 3), (2, 1)]);
    }

    #[test]
    fn b2_factor_rules() {
        let b2 = RootDatum::b2();
        // p = 2 override.
        assert_eq!(factors(&b2, 2, (1, 0)), vec![(1, 0), (0, 0)]);
        assert_eq!(factors(&b2, 2, (0, 1)), vec![(0, 1)]);
        assert_eq!(factors(&b2, 2, (1, 1)), vec![(1, 1)]);
        // p = 3: exactly one non-simple restricted Weyl module.
        assert_eq!(factors(&b2, 3, (1, 2)), vec![(1, 2), (0, 2)]);
        for a in 0..3 {
            for b in 0..3 {
                if (a, b) != (1, 2) {
                    assert_eq!(factors(&b2, 3, (a, b)), vec![(a, b)]);
                }
            }
        }
        // p = 5, regular chain.
        assert_eq!(factors(&b2, 5, (0, 1)), vec![(0, 1)]);
        assert_eq!(factors(&b2, 5, (1, 1)), vec![(1, 1), (0, 1)]);
        assert_eq!(factors(&b2, 5, (2, 0)), vec![(2, 0), (0, 0)]);
        assert_eq!(factors(&b2, 5, (2, 2)), vec![(2, 2), (2, 0)]);
        assert_eq!(factors(&b2, 5, (3, 2)), vec![(3, 2), (2, 2)]);
        assert_eq!(factors(&b2, 5, (3, 1)), vec![(3, 1)]); // wall between alcoves 2 and 3
        assert_eq!(factors(&b2, 5, (4, 2)), vec![(4, 2)]); // wall toward the fourth alcove
        // p = 5, singular second-upper-wall family.
        assert_eq!(factors(&b2, 5, (3, 4)), vec![(3, 4), (0, 4)]);
        assert_eq!(factors(&b2, 5, (2, 4)), vec![(2, 4), (1, 4)]);
        assert_eq!(factors(&b2, 5, (4, 4)), vec![(4, 4)]); // Steinberg vertex
        assert_eq!(factors(&b2, 5, (1, 4)), vec![(1, 4)]); // below the family
        assert_eq!(factors(&b2, 7, (4, 6)), vec![(4, 6), (1, 6)]);
    }

    #[test]
    fn rejects_non_restricted() {
        let a2 = RootDatum::a2();
        assert!(matches!(
            weyl_factors_restricted(&a2, 5, Weight::new(5, 0)),
            Err(SimplesError::NonRestricted { .. })
        ));
    }

    #[test]
    fn base_p_digits() {
        assert_eq!(base_p_expand(5, Weight::new(6, 0)), vec![Weight::new(1, 0), Weight::new(1, 0)]);
        assert_eq!(base_p_expand(3, Weight::new(2, 2)), vec![Weight::new(2, 2)]);
        assert_eq!(
            base_p_expand(2, Weight::new(5, 3)),
            vec![Weight::new(1, 1), Weight::new(0, 1), Weight::new(1, 0)]
        );
        assert_eq!(base_p_expand(5, Weight::ZERO), vec![Weight::ZERO]);
    }

    #[test]
    fn known_simple_dimensions() {
        let ctx = ModularContext::new(RootSystem::B2, 2);
        assert_eq!(ctx.simple_dimension(Weight::new(1, 0)), 4);
        assert_eq!(ctx.simple_dimension(Weight::new(0, 1)), 4);
        assert_eq!(ctx.simple_dimension(Weight::new(1, 1)), 16);
        // ch L(w1) = chi(w1) - chi(0) at p = 2.
        let mut expected = weyl_character(ctx.datum(), Weight::new(1, 0));
        expected.add_scaled(&weyl_character(ctx.datum(), Weight::ZERO), -1);
        assert_eq!(ctx.simple_character(Weight::new(1, 0)).as_ref(), &expected);

        let ctx = ModularContext::new(RootSystem::A2, 3);
        assert_eq!(ctx.simple_dimension(Weight::new(1, 1)), 7);
        assert_eq!(ctx.simple_dimension(Weight::new(2, 2)), 27); // Steinberg, p^3

        let ctx = ModularContext::new(RootSystem::B2, 5);
        assert_eq!(ctx.simple_dimension(Weight::new(4, 4)), 625); // Steinberg, p^4
        assert_eq!(ctx.simple_dimension(Weight::new(2, 0)), 13);
    }

    #[test]
    fn diamond_shaped_simple_supports() {
        // ch L((p-1)/2 w1) for B2 is the sum of e^{c w1 + d a2} over the
        // diamond |c| + |d| <= (p-1)/2 (all multiplicities 1).
        for p in [3i64, 5, 7] {
            let ctx = ModularContext::new(RootSystem::B2, p);
            let k = (p - 1) / 2;
            let ch = ctx.simple_character(Weight::new(k, 0));
            let mut expected = FormalCharacter::new();
            let a2root = ctx.datum().root(1).weight;
            for c in -k..=k {
                for d in -(k - c.abs())..=(k - c.abs()) {
                    expected.add_weight(Weight::new(c, 0) + a2root.scaled(d), 1);
                }
            }
            assert_eq!(ch.as_ref(), &expected, "p = {p}");
        }
    }

    #[test]
    fn steinberg_products() {
        let ctx = ModularContext::new(RootSystem::A2, 5);
        // L(6, 0) = L(1, 0) (x) L(1, 0)^[1].
        assert_eq!(ctx.simple_dimension(Weight::new(6, 0)), 9);
        let ch = ctx.simple_character(Weight::new(6, 0));
        assert_eq!(ch.coeff(Weight::new(6, 0)), 1);
        assert_eq!(ch.coeff(Weight::new(4, 1)), 1); // (-1,1) + 5*(1,0)
        // Digits reconstruct.
        for w in [(7, 3), (24, 0), (5, 5), (12, 17)] {
            let lambda = Weight::new(w.0, w.1);
            let digits = base_p_expand(5, lambda);
            let rebuilt = digits
                .iter()
                .enumerate()
                .fold(Weight::ZERO, |acc, (i, d)| acc + d.scaled(5i64.pow(i as u32)));
            assert_eq!(rebuilt, lambda);
            let dim_product: i64 =
                digits.iter().map(|&d| ctx.simple_dimension(d)).product();
            assert_eq!(ctx.simple_dimension(lambda), dim_product);
        }
    }

    #[test]
    fn weyl_characters_peel_back_to_the_factor_lists() {
        for system in [RootSystem::A2, RootSystem::B2] {
            for p in [2i64, 3, 5, 7] {
                let ctx = ModularContext::new(system, p);
                for lambda in ctx.restricted_weights().collect::<Vec<_>>() {
                    let ch = weyl_character(ctx.datum(), lambda);
                    let peeled = peel(&ch, |w| ctx.simple_character(w).as_ref().clone()).unwrap();
                    let expected: BTreeMap<Weight, i64> =
                        ctx.weyl_factors(lambda).unwrap().into_iter().collect();
                    assert_eq!(peeled, expected, "{system:?} p={p} lambda={lambda}");
                }
            }
        }
    }

    #[test]
    fn simple_characters_are_effective_and_symmetric() {
        for system in [RootSystem::A2, RootSystem::B2] {
            for p in [2i64, 3, 5, 7] {
                let ctx = ModularContext::new(system, p);
                for (lambda, ch) in ctx.restricted_table() {
                    assert!(ch.iter().all(|(_, m)| m > 0), "{system:?} p={p} {lambda}");
                    assert!(ch.is_weyl_invariant(ctx.datum()));
                    assert_eq!(ch.max_entry(), Some((lambda, 1)));
                }
            }
        }
    }

    #[test]
    fn one_dimensional_weight_space_criterion_a2() {
        // All weight multiplicities of L(a, b) are <= 1 iff a = 0 or b = 0
        // or a + b = p - 1.
        for p in [3i64, 5, 7] {
            let ctx = ModularContext::new(RootSystem::A2, p);
            for lambda in ctx.restricted_weights().collect::<Vec<_>>() {
                let flat = ctx.simple_character(lambda).iter().all(|(_, m)| m <= 1);
                let expected = lambda.a == 0 || lambda.b == 0 || lambda.a + lambda.b == p - 1;
                assert_eq!(flat, expected, "p={p} lambda={lambda}");
            }
        }
    }

    #[test]
    fn one_dimensional_weight_spaces_b2() {
        for p in [3i64, 5, 7] {
            let ctx = ModularContext::new(RootSystem::B2, p);
            let k = (p - 1) / 2;
            for lambda in [Weight::new(k, 0), Weight::new(k - 1, 1)] {
                assert!(ctx.simple_character(lambda).iter().all(|(_, m)| m <= 1), "p={p} {lambda}");
            }
        }
    }

    #[test]
    fn tilting_characters() {
        // T = Delta = L on weights with simple Weyl module.
        let ctx = ModularContext::new(RootSystem::A2, 5);
        assert_eq!(
            ctx.tilting_character(Weight::new(1, 1)).unwrap(),
            weyl_character(ctx.datum(), Weight::new(1, 1))
        );
        assert_eq!(
            ctx.tilting_character(Weight::new(4, 0)).unwrap(),
            weyl_character(ctx.datum(), Weight::new(4, 0))
        );
        // Uniserial T(s.lambda) = [L(lambda), L(s.lambda), L(lambda)].
        let mut expected = FormalCharacter::new();
        expected.add_scaled(&ctx.simple_character(Weight::new(2, 2)), 1);
        expected.add_scaled(&ctx.simple_character(Weight::new(1, 1)), 2);
        assert_eq!(ctx.tilting_character(Weight::new(2, 2)).unwrap(), expected);
        // In the chi basis this is chi(2,2) + chi(1,1).
        let peeled = peel_to_chi(ctx.datum(), &ctx.tilting_character(Weight::new(2, 2)).unwrap())
            .unwrap();
        assert_eq!(peeled, BTreeMap::from([(Weight::new(2, 2), 1), (Weight::new(1, 1), 1)]));

        // A2 diamond above the first upper wall: T(su.0) = (5, 2) at p = 5,
        // with factors {s.0 = (3,3) x2, su.0 x1, 0 x1}; equivalently
        // chi(5,2) + chi(3,3).
        let t = ctx.tilting_character(Weight::new(5, 2)).unwrap();
        let mut expected = weyl_character(ctx.datum(), Weight::new(5, 2));
        expected.add_scaled(&weyl_character(ctx.datum(), Weight::new(3, 3)), 1);
        assert_eq!(t, expected);
        let mut by_simples = FormalCharacter::new();
        by_simples.add_scaled(&ctx.simple_character(Weight::new(5, 2)), 1);
        by_simples.add_scaled(&ctx.simple_character(Weight::new(3, 3)), 2);
        by_simples.add_scaled(&ctx.simple_character(Weight::ZERO), 1);
        assert_eq!(t, by_simples);

        // B2 diamond in the second alcove: T(st.0) at p = 5.
        let ctx = ModularContext::new(RootSystem::B2, 5);
        let mut expected = FormalCharacter::new();
        expected.add_scaled(&ctx.simple_character(Weight::new(2, 2)), 1);
        expected.add_scaled(&ctx.simple_character(Weight::new(2, 0)), 2);
        expected.add_scaled(&ctx.simple_character(Weight::new(0, 0)), 1);
        assert_eq!(ctx.tilting_character(Weight::new(2, 2)).unwrap(), expected);

        // B2 diamond in the third alcove: T(stu.0) = {stu, st x2, s} . 0.
        let stu = Weight::new(3, 2);
        let mut expected = FormalCharacter::new();
        expected.add_scaled(&ctx.simple_character(stu), 1);
        expected.add_scaled(&ctx.simple_character(Weight::new(2, 2)), 2);
        expected.add_scaled(&ctx.simple_character(Weight::new(2, 0)), 1);
        assert_eq!(ctx.tilting_character(stu).unwrap(), expected);

        // Partiality: the undiagrammed singular non-simple loci are rejected.
        let ctx = ModularContext::new(RootSystem::B2, 3);
        assert!(matches!(
            ctx.tilting_character(Weight::new(1, 2)),
            Err(SimplesError::TiltingNotDiagrammed { .. })
        ));
        let ctx = ModularContext::new(RootSystem::B2, 2);
        assert!(matches!(
            ctx.tilting_character(Weight::new(1, 0)),
            Err(SimplesError::TiltingNotDiagrammed { .. })
        ));
        let ctx = ModularContext::new(RootSystem::B2, 5);
        assert!(matches!(
            ctx.tilting_character(Weight::new(3, 4)),
            Err(SimplesError::TiltingNotDiagrammed { .. })
        ));
    }

    #[test]
    fn table_validation() {
        let good: BTreeMap<Weight, FormalCharacter> = ModularContext::new(RootSystem::A2, 3)
            .restricted_table()
            .map(|(w, ch)| (w, ch.clone()))
            .collect();
        assert!(ModularContext::with_restricted_table(RootSystem::A2, 3, good.clone()).is_ok());

        let mut missing = good.clone();
        missing.remove(&Weight::new(2, 2));
        assert!(matches!(
            ModularContext::with_restricted_table(RootSystem::A2, 3, missing),
            Err(SimplesError::BadTable { .. })
        ));

        let mut tampered = good.clone();
        let mut ch = tampered[&Weight::new(1, 1)].clone();
        ch.add_weight(Weight::new(1, 0), 1); // breaks Weyl invariance
        tampered.insert(Weight::new(1, 1), ch);
        assert!(matches!(
            ModularContext::with_restricted_table(RootSystem::A2, 3, tampered),
            Err(SimplesError::BadTable { .. })
        ));

        assert!(matches!(
            ModularContext::with_restricted_table(RootSystem::A2, 4, good),
            Err(SimplesError::BadTable { .. })
        ));
    }

    #[test]
    fn steinberg_chi_form_p2() {
        // ch L(w1) at p = 2 in the chi basis: chi(w1) - chi(0).
        let ctx = ModularContext::new(RootSystem::B2, 2);
        let peeled = peel_to_chi(ctx.datum(), ctx.simple_character(Weight::new(1, 0)).as_ref())
            .unwrap();
        assert_eq!(peeled, BTreeMap::from([(Weight::new(1, 0), 1), (Weight::new(0, 0), -1)]));
        // chi_character of a singular label vanishes; sanity for the helper.
        assert!(chi_character(ctx.datum(), Weight::new(-1, 0)).is_zero());
    }
}
