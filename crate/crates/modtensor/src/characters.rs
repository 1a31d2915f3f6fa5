//! Formal characters with exact integer multiplicities, and the two bases
//! used throughout: Weyl characters `chi(mu)` and simple characters.
//!
//! A [`FormalCharacter`] is a finitely supported function `X -> Z`, stored
//! sparsely. Weyl characters are computed by Freudenthal's recursion, entirely
//! in integer arithmetic.

use crate::rootdata::{RootDatum, Weight, RHO};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("character is not Weyl-invariant: maximal weight {weight} is not dominant")]
    NotInvariant { weight: Weight },
}

/// Expansion in the basis of Weyl characters `chi(mu)`, `mu` dominant.
pub type ChiExpansion = BTreeMap<Weight, i64>;

/// Expansion in the basis of simple characters, `mu` dominant; the output
/// form of a tensor product decomposition.
pub type SimpleExpansion = BTreeMap<Weight, i64>;

/// A finitely supported `Z`-linear combination of weights `e^mu`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalCharacter(BTreeMap<Weight, i64>);

impl FormalCharacter {
    pub fn new() -> FormalCharacter {
        FormalCharacter(BTreeMap::new())
    }

    pub fn singleton(w: Weight) -> FormalCharacter {
        FormalCharacter(BTreeMap::from([(w, 1)]))
    }

    pub fn coeff(&self, w: Weight) -> i64 {
        self.0.get(&w).copied().unwrap_or(0)
    }

    pub fn add_weight(&mut self, w: Weight, mult: i64) {
        let entry = self.0.entry(w).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.0.remove(&w);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.0.iter().map(|(&w, &m)| (w, m))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    /// Sum of all multiplicities (the dimension, for a module's character).
    pub fn dimension(&self) -> i64 {
        self.0.values().sum()
    }

    /// The entry at the maximal weight in the total order on weights
    /// (a linear extension of dominance, so for a character of a module this
    /// is a highest weight).
    pub fn max_entry(&self) -> Option<(Weight, i64)> {
        self.0.last_key_value().map(|(&w, &m)| (w, m))
    }

    pub fn add_scaled(&mut self, other: &FormalCharacter, k: i64) {
        if k == 0 {
            return;
        }
        for (w, m) in other.iter() {
            self.add_weight(w, k * m);
        }
    }

    /// Product of characters (convolution of multiplicity functions),
    /// accumulated in a dense grid over the bounding box of the sum-support.
    pub fn product(&self, other: &FormalCharacter) -> FormalCharacter {
        if self.0.is_empty() || other.0.is_empty() {
            return FormalCharacter::new();
        }
        let (lo1, hi1) = self.coord_bounds();
        let (lo2, hi2) = other.coord_bounds();
        let a_off = lo1.0 + lo2.0;
        let b_off = lo1.1 + lo2.1;
        let na = (hi1.0 + hi2.0 - a_off + 1) as usize;
        let nb = (hi1.1 + hi2.1 - b_off + 1) as usize;
        let mut grid = vec![0i64; na * nb];
        let right: Vec<(i64, i64, i64)> = other.iter().map(|(w, m)| (w.a, w.b, m)).collect();
        for (w1, m1) in self.iter() {
            let base_a = w1.a - a_off;
            let base_b = w1.b - b_off;
            for &(a2, b2, m2) in &right {
                let idx = (base_a + a2) as usize * nb + (base_b + b2) as usize;
                grid[idx] += m1 * m2;
            }
        }
        let mut out = BTreeMap::new();
        for (idx, &m) in grid.iter().enumerate() {
            if m != 0 {
                let a = (idx / nb) as i64 + a_off;
                let b = (idx % nb) as i64 + b_off;
                out.insert(Weight::new(a, b), m);
            }
        }
        FormalCharacter(out)
    }

    /// Applies `w -> k w` to every weight (the effect of a Frobenius twist on
    /// a character, for `k` a power of p).
    pub fn scaled_weights(&self, k: i64) -> FormalCharacter {
        FormalCharacter(self.iter().map(|(w, m)| (w.scaled(k), m)).collect())
    }

    pub fn is_weyl_invariant(&self, datum: &RootDatum) -> bool {
        self.iter().all(|(w, m)| {
            (0..2).all(|i| self.coeff(datum.reflect(w, i)) == m)
        })
    }

    /// Sorted `[a, b, multiplicity]` triples; the canonical interchange form.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.iter().map(|(w, m)| [w.a, w.b, m]).collect()
    }

    /// Rebuilds a character from triples, accumulating duplicates and
    /// dropping zeros; total on arbitrary input.
    pub fn from_triples(triples: &[[i64; 3]]) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for t in triples {
            out.add_weight(Weight::new(t[0], t[1]), t[2]);
        }
        out
    }
}

impl FromIterator<(Weight, i64)> for FormalCharacter {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut out = FormalCharacter::new();
        for (w, m) in iter {
            out.add_weight(w, m);
        }
        out
    }
}

impl FormalCharacter {
    fn coord_bounds(&self) -> ((i64, i64), (i64, i64)) {
        let mut lo = (i64::MAX, i64::MAX);
        let mut hi = (i64::MIN, i64::MIN);
        for (w, _) in self.iter() {
            lo.0 = lo.0.min(w.a);
            lo.1 = lo.1.min(w.b);
            hi.0 = hi.0.max(w.a);
            hi.1 = hi.1.max(w.b);
        }
        (lo, hi)
    }
}

/// Character of the Weyl module of highest weight `lambda`, by Freudenthal's
/// multiplicity recursion. All divisions are exact.
pub fn weyl_character(datum: &RootDatum, lambda: Weight) -> FormalCharacter {
    assert!(lambda.is_dominant(), "weyl_character needs a dominant weight, got {lambda}");
    let (a, b) = (lambda.a, lambda.b);
    // Root coordinates of the positive roots (integral).
    let root_coords: Vec<(i64, i64)> = (0..datum.num_positive_roots())
        .map(|i| {
            let (c, d) = datum.root_coordinates(datum.root(i).weight);
            (c.num() as i64, d.num() as i64)
        })
        .collect();
    // Dominant weights lambda - c a1 - d a2, in increasing depth c + d.
    let (c_max, d_max) = match datum.system() {
        crate::rootdata::RootSystem::A2 => ((2 * a + b) / 3, (a + 2 * b) / 3),
        crate::rootdata::RootSystem::B2 => ((2 * a + b) / 2, a + b),
    };
    let a1 = datum.root(0).weight;
    let a2 = datum.root(1).weight;
    let mut cands: Vec<(i64, i64, Weight)> = Vec::new();
    for c in 0..=c_max {
        for d in 0..=d_max {
            let mu = lambda - a1.scaled(c) - a2.scaled(d);
            if mu.is_dominant() {
                cands.push((c, d, mu));
            }
        }
    }
    cands.sort_by_key(|&(c, d, _)| (c + d, c));
    let lam_norm = datum.ip(lambda + RHO, lambda + RHO);
    let mut mults: HashMap<Weight, i64> = HashMap::new();
    for &(c, d, mu) in &cands {
        if (c, d) == (0, 0) {
            mults.insert(lambda, 1);
            continue;
        }
        let mut numer = 0i64;
        for (i, &(e, f)) in root_coords.iter().enumerate() {
            let alpha = datum.root(i).weight;
            let k_max = {
                let ka = if e > 0 { c / e } else { i64::MAX };
                let kb = if f > 0 { d / f } else { i64::MAX };
                ka.min(kb)
            };
            for k in 1..=k_max {
                let nu = mu + alpha.scaled(k);
                let (rep, _) = datum.dominant_orbit_rep(nu);
                let m = mults.get(&rep).copied().unwrap_or(0);
                if m != 0 {
                    numer += m * datum.ip(nu, alpha);
                }
            }
        }
        let denom = lam_norm - datum.ip(mu + RHO, mu + RHO);
        assert!(denom > 0, "Freudenthal denominator must be positive below lambda");
        assert_eq!((2 * numer) % denom, 0, "Freudenthal division must be exact");
        let m = 2 * numer / denom;
        debug_assert!(m >= 1, "dominant weights under lambda in its root lattice coset occur");
        mults.insert(mu, m);
    }
    let mut out = FormalCharacter::new();
    for (mu, m) in mults {
        for (pt, _) in datum.finite_orbit(mu) {
            out.add_weight(pt, m);
        }
    }
    out
}

/// Multiplicity of the weight `nu` in the Weyl module of highest weight `mu`.
pub fn weyl_weight_multiplicity(datum: &RootDatum, mu: Weight, nu: Weight) -> i64 {
    weyl_character(datum, mu).coeff(nu)
}

/// Normalizes `chi(mu)` for arbitrary `mu`: `None` when `mu + rho` is fixed
/// by a reflection (so `chi(mu) = 0`), otherwise the dominant weight `nu`
/// and sign `s` with `chi(mu) = s * chi(nu)`.
pub fn chi_normalize(datum: &RootDatum, mu: Weight) -> Option<(Weight, i64)> {
    let (rep, widx) = datum.dominant_orbit_rep(mu + RHO);
    if rep.a == 0 || rep.b == 0 {
        return None;
    }
    Some((rep - RHO, datum.weyl_elements()[widx].det()))
}

/// `chi(mu)` as a formal character (zero when `mu + rho` is singular).
pub fn chi_character(datum: &RootDatum, mu: Weight) -> FormalCharacter {
    match chi_normalize(datum, mu) {
        None => FormalCharacter::new(),
        Some((nu, sign)) => {
            let mut ch = weyl_character(datum, nu);
            if sign < 0 {
                ch = FormalCharacter(ch.iter().map(|(w, m)| (w, -m)).collect());
            }
            ch
        }
    }
}

/// Expands `ch * chi(lambda)` in the `chi` basis:
/// `sum_nu m_nu chi(lambda + nu)`, normalized to dominant labels.
pub fn multiply_by_chi(datum: &RootDatum, ch: &FormalCharacter, lambda: Weight) -> ChiExpansion {
    let mut out: ChiExpansion = BTreeMap::new();
    for (nu, m) in ch.iter() {
        if let Some((rep, sign)) = chi_normalize(datum, lambda + nu) {
            let entry = out.entry(rep).or_insert(0);
            *entry += sign * m;
            if *entry == 0 {
                out.remove(&rep);
            }
        }
    }
    out
}

/// Evaluates a `chi`-basis expansion back to a formal character.
pub fn expand_chi(datum: &RootDatum, expansion: &ChiExpansion) -> FormalCharacter {
    let mut out = FormalCharacter::new();
    for (&mu, &c) in expansion {
        assert!(mu.is_dominant());
        out.add_scaled(&weyl_character(datum, mu), c);
    }
    out
}

/// Sum of `c * dim` over a `chi`-basis expansion.
pub fn chi_expansion_dimension(datum: &RootDatum, expansion: &ChiExpansion) -> i64 {
    expansion.iter().map(|(&mu, &c)| c * datum.weyl_dimension(mu)).sum()
}

/// Greedy expansion of a Weyl-invariant character over a triangular basis:
/// `basis(w)` must be a character with maximal entry `(w, 1)`. Peels the
/// maximal weight repeatedly; fails on non-invariant input (detected when a
/// maximal weight is not dominant).
pub fn peel<F>(ch: &FormalCharacter, mut basis: F) -> Result<BTreeMap<Weight, i64>, CharacterError>
where
    F: FnMut(Weight) -> FormalCharacter,
{
    let mut rem = ch.clone();
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    while let Some((w, c)) = rem.max_entry() {
        if !w.is_dominant() {
            return Err(CharacterError::NotInvariant { weight: w });
        }
        let basis_ch = basis(w);
        debug_assert_eq!(basis_ch.max_entry(), Some((w, 1)), "basis must be triangular");
        out.insert(w, c);
        rem.add_scaled(&basis_ch, -c);
    }
    Ok(out)
}

/// Expands an invariant character in the Weyl character basis.
pub fn peel_to_chi(datum: &RootDatum, ch: &FormalCharacter) -> Result<ChiExpansion, CharacterError> {
    peel(ch, |w| weyl_character(datum, w))
}

/// Weight multiplicity reduction: `dim V(mu)_nu = dim V(mu~)_nu~` where, for
/// `mu - nu = c a1 + d a2`, `mu~ = (min(mu_1, c), min(mu_2, d))` and
/// `nu~ = nu - (mu - mu~)`. Returns `None` when `nu` is not under `mu` in the
/// root lattice (multiplicity zero).
pub fn weight_multiplicity_reduction(
    datum: &RootDatum,
    mu: Weight,
    nu: Weight,
) -> Option<(Weight, Weight)> {
    assert!(mu.is_dominant());
    let (c, d) = datum.root_coordinates(mu - nu);
    if !c.is_integer() || !d.is_integer() || c.num() < 0 || d.num() < 0 {
        return None;
    }
    let mu_t = Weight::new(mu.a.min(c.num() as i64), mu.b.min(d.num() as i64));
    let nu_t = nu - (mu - mu_t);
    Some((mu_t, nu_t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_character_dimensions() {
        for datum in [RootDatum::a2(), RootDatum::b2()] {
            for a in 0..=8 {
                for b in 0..=8 {
                    let lambda = Weight::new(a, b);
                    let ch = weyl_character(&datum, lambda);
                    assert_eq!(
                        ch.dimension(),
                        datum.weyl_dimension(lambda),
                        "{:?} lambda={lambda}",
                        datum.system()
                    );
                    assert!(ch.is_weyl_invariant(&datum));
                    assert_eq!(ch.max_entry(), Some((lambda, 1)));
                }
            }
        }
    }

    #[test]
    fn small_characters_by_hand() {
        let a2 = RootDatum::a2();
        let std3 = weyl_character(&a2, Weight::new(1, 0));
        assert_eq!(std3.to_triples(), vec![[0, -1, 1], [-1, 1, 1], [1, 0, 1]]);
        let adjoint = weyl_character(&a2, Weight::new(1, 1));
        assert_eq!(adjoint.dimension(), 8);
        assert_eq!(adjoint.coeff(Weight::ZERO), 2);
        assert_eq!(adjoint.coeff(Weight::new(2, -1)), 1);

        let b2 = RootDatum::b2();
        let spin4 = weyl_character(&b2, Weight::new(0, 1));
        assert_eq!(spin4.dimension(), 4);
        for w in [(0, 1), (1, -1), (-1, 1), (0, -1)] {
            assert_eq!(spin4.coeff(Weight::new(w.0, w.1)), 1);
        }
        let nat5 = weyl_character(&b2, Weight::new(1, 0));
        assert_eq!(nat5.dimension(), 5);
        assert_eq!(nat5.coeff(Weight::ZERO), 1);
        for w in [(1, 0), (-1, 2), (1, -2), (-1, 0)] {
            assert_eq!(nat5.coeff(Weight::new(w.0, w.1)), 1);
        }
    }

    #[test]
    fn frozen_weight_multiplicities() {
        let b2 = RootDatum::b2();
        assert_eq!(weyl_weight_multiplicity(&b2, Weight::new(1, 1), Weight::new(0, 1)), 2);
        assert_eq!(weyl_weight_multiplicity(&b2, Weight::new(0, 2), Weight::ZERO), 2);
        assert_eq!(weyl_weight_multiplicity(&b2, Weight::new(2, 0), Weight::ZERO), 2);
        assert_eq!(weyl_weight_multiplicity(&b2, Weight::new(2, 0), Weight::new(0, 2)), 1);
        assert_eq!(weyl_weight_multiplicity(&b2, Weight::new(1, 2), Weight::new(1, 0)), 3);
    }

    #[test]
    fn chi_normalization() {
        let a2 = RootDatum::a2();
        // chi is fixed on dominant weights.
        assert_eq!(chi_normalize(&a2, Weight::new(3, 2)), Some((Weight::new(3, 2), 1)));
        // chi(-w1 + a w2) = 0 for every a.
        for a in 0..6 {
            assert_eq!(chi_normalize(&a2, Weight::new(-1, a)), None);
        }
        // chi(-2 w1 + a w2) = -chi((a - 1) w2) for a >= 1; zero at a = 0.
        assert_eq!(chi_normalize(&a2, Weight::new(-2, 0)), None);
        for a in 1..6 {
            assert_eq!(chi_normalize(&a2, Weight::new(-2, a)), Some((Weight::new(0, a - 1), -1)));
        }
        let b2 = RootDatum::b2();
        assert_eq!(chi_normalize(&b2, Weight::new(-2, 1)), None);
        // Formal dimension consistency: a signed chi has the signed Weyl dimension.
        for a in -5..=5 {
            for b in -5..=5 {
                let mu = Weight::new(a, b);
                let ch = chi_character(&b2, mu);
                match chi_normalize(&b2, mu) {
                    None => assert!(ch.is_zero()),
                    Some((nu, sign)) => {
                        assert_eq!(ch.dimension(), sign * b2.weyl_dimension(nu));
                    }
                }
            }
        }
    }

    #[test]
    fn chi_multiplication_matches_character_product() {
        for datum in [RootDatum::a2(), RootDatum::b2()] {
            for (la, lb, ma, mb) in [(1, 0, 0, 1), (1, 1, 1, 0), (2, 1, 1, 1), (0, 2, 2, 0), (2, 2, 1, 2)]
            {
                let lambda = Weight::new(la, lb);
                let mu = Weight::new(ma, mb);
                let ch_mu = weyl_character(&datum, mu);
                let expansion = multiply_by_chi(&datum, &ch_mu, lambda);
                let lhs = weyl_character(&datum, lambda).product(&ch_mu);
                let rhs = expand_chi(&datum, &expansion);
                assert_eq!(lhs, rhs, "{:?} {lambda} {mu}", datum.system());
                assert_eq!(
                    lhs.dimension(),
                    chi_expansion_dimension(&datum, &expansion),
                    "{:?} {lambda} {mu}",
                    datum.system()
                );
            }
        }
    }

    #[test]
    fn product_is_commutative_and_counts_dimensions() {
        let b2 = RootDatum::b2();
        let x = weyl_character(&b2, Weight::new(2, 1));
        let y = weyl_character(&b2, Weight::new(0, 3));
        let xy = x.product(&y);
        assert_eq!(xy, y.product(&x));
        assert_eq!(xy.dimension(), x.dimension() * y.dimension());
        assert!(xy.is_weyl_invariant(&b2));
    }

    #[test]
    fn peel_round_trip() {
        for datum in [RootDatum::a2(), RootDatum::b2()] {
            let expansion: ChiExpansion = BTreeMap::from([
                (Weight::new(0, 0), 2),
                (Weight::new(1, 1), -1),
                (Weight::new(3, 0), 1),
                (Weight::new(0, 2), 3),
            ]);
            let ch = expand_chi(&datum, &expansion);
            let back = peel_to_chi(&datum, &ch).unwrap();
            assert_eq!(back, expansion);
        }
    }

    #[test]
    fn peel_rejects_non_invariant_input() {
        let a2 = RootDatum::a2();
        let mut ch = FormalCharacter::singleton(Weight::new(1, 0));
        ch.add_weight(Weight::new(-1, 1), 1);
        // Missing the third orbit weight (0, -1).
        let err = peel_to_chi(&a2, &ch).unwrap_err();
        assert!(matches!(err, CharacterError::NotInvariant { .. }));
    }

    #[test]
    fn weight_reduction_agrees_with_freudenthal() {
        for datum in [RootDatum::a2(), RootDatum::b2()] {
            for a in 0..=4 {
                for b in 0..=4 {
                    let mu = Weight::new(a, b);
                    let ch = weyl_character(&datum, mu);
                    for (nu, m) in ch.iter() {
                        let (mu_t, nu_t) =
                            weight_multiplicity_reduction(&datum, mu, nu).expect("nu under mu");
                        assert_eq!(
                            weyl_weight_multiplicity(&datum, mu_t, nu_t),
                            m,
                            "{:?} mu={mu} nu={nu}",
                            datum.system()
                        );
                    }
                }
            }
        }
        // Frozen example: mu = (2,1), nu = (1,1) reduces to ((1,1), (0,1)).
        let b2 = RootDatum::b2();
        let (mu_t, nu_t) =
            weight_multiplicity_reduction(&b2, Weight::new(2, 1), Weight::new(1, 1)).unwrap();
        assert_eq!((mu_t, nu_t), (Weight::new(1, 1), Weight::new(0, 1)));
        assert_eq!(weyl_weight_multiplicity(&b2, mu_t, nu_t), 2);
        // Not in the root lattice coset: multiplicity zero.
        assert_eq!(weight_multiplicity_reduction(&b2, Weight::new(1, 0), Weight::new(0, 1)), None);
    }

    #[test]
    fn triples_round_trip() {
        let b2 = RootDatum::b2();
        let ch = weyl_character(&b2, Weight::new(2, 2));
        let triples = ch.to_triples();
        assert_eq!(FormalCharacter::from_triples(&triples), ch);
        // Accumulation and zero-dropping on messy input.
        let messy = FormalCharacter::from_triples(&[[0, 0, 2], [0, 0, -2], [1, 2, 3]]);
        assert_eq!(messy.to_triples(), vec![[1, 2, 3]]);
    }
}
