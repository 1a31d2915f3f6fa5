//! Tensor products of simple modules: the decomposition oracle, the
//! reflection-small closed-form multiplicities, characteristic-zero and
//! fusion (Verlinde) multiplicities, minuscule decompositions, and the
//! character-level necessary conditions for complete reducibility.

use crate::alcoves::{
    alcove_of, dominant_fold, fundamental_alcove, in_open, in_upper_closure, is_p_regular,
    reflection_small, upper_closure_alcove, wc_elements,
};
use crate::characters::{multiply_by_chi, weyl_character, FormalCharacter, SimpleExpansion};
use crate::rootdata::{RootDatum, RootSystem, Weight};
use crate::simples::{is_restricted, ModularContext};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TensorError {
    #[error("{mu} is not reflection-small with respect to {lambda} at p = {p}")]
    NotReflectionSmall { lambda: Weight, mu: Weight, p: i64 },
    #[error("{weight} is not minuscule")]
    NotMinuscule { weight: Weight },
    #[error("{weight} is p-singular at p = {p}")]
    SingularWeight { weight: Weight, p: i64 },
    #[error("{weight} is not interior to the lowest alcove at p = {p}")]
    OutsideFundamentalAlcove { weight: Weight, p: i64 },
}

/// Greedy peel of an effective Weyl-invariant character into simple
/// characters. The coefficient at the current maximal weight is already the
/// final multiplicity (later steps only touch strictly smaller weights), so
/// with `stop_at_two` the loop can abort as soon as some multiplicity
/// reaches 2, which is the multiplicity-freeness early exit.
fn peel_simples(
    ctx: &ModularContext,
    mut rem: FormalCharacter,
    stop_at_two: bool,
) -> Option<SimpleExpansion> {
    let mut out = SimpleExpansion::new();
    while let Some((w, c)) = rem.max_entry() {
        assert!(w.is_dominant() && c > 0, "peel invariant broken at {w} (coefficient {c})");
        if stop_at_two && c >= 2 {
            return None;
        }
        rem.add_scaled(&ctx.simple_character(w), -c);
        out.insert(w, c);
    }
    Some(out)
}

/// Composition multiplicities `[L(lambda) (x) L(mu) : L(nu)]` over all nu.
pub fn tensor_simple_decomposition(
    ctx: &ModularContext,
    lambda: Weight,
    mu: Weight,
) -> SimpleExpansion {
    let ch = ctx.simple_character(lambda).product(&ctx.simple_character(mu));
    peel_simples(ctx, ch, false).expect("unlimited peel always completes")
}

/// True iff every multiplicity in `L(lambda) (x) L(mu)` is at most 1.
pub fn is_multiplicity_free_oracle(ctx: &ModularContext, lambda: Weight, mu: Weight) -> bool {
    let ch = ctx.simple_character(lambda).product(&ctx.simple_character(mu));
    peel_simples(ctx, ch, true).is_some()
}

/// Closed-form multiplicities for a reflection-small pair: with C the alcove
/// whose upper closure holds lambda, the multiplicity of L(nu) for dominant
/// nu in that upper closure is `sum over u in W_C of sign(u) * dim
/// L(mu)_{u.nu - lambda}`, and all factors lie in the upper closure.
pub fn reflection_small_multiplicities(
    ctx: &ModularContext,
    lambda: Weight,
    mu: Weight,
) -> Result<SimpleExpansion, TensorError> {
    let (datum, p) = (ctx.datum(), ctx.p());
    if !reflection_small(datum, p, lambda, mu) {
        return Err(TensorError::NotReflectionSmall { lambda, mu, p });
    }
    let alcove = upper_closure_alcove(datum, p, lambda);
    let elems = wc_elements(datum, p, &alcove);
    let ch_mu = ctx.simple_character(mu);
    let mut out = SimpleExpansion::new();
    for (delta, _) in ch_mu.iter() {
        let nu = lambda + delta;
        if !nu.is_dominant() || !in_upper_closure(datum, p, &alcove, nu) {
            continue;
        }
        let c: i64 = elems.iter().map(|u| u.sign() * ch_mu.coeff(u.apply(nu) - lambda)).sum();
        assert!(c >= 0, "alternating sum at {nu} must be non-negative");
        if c > 0 {
            out.insert(nu, c);
        }
    }
    Ok(out)
}

/// Characteristic-zero tensor multiplicities (Brauer/Klimyk): the chi
/// expansion of `chi(lambda) * chi(mu)`, which matches the decomposition of
/// the tensor product of the irreducible complex representations.
pub fn klimyk_char0(datum: &RootDatum, lambda: Weight, mu: Weight) -> SimpleExpansion {
    let expansion = multiply_by_chi(datum, &weyl_character(datum, lambda), mu);
    expansion
        .into_iter()
        .inspect(|&(nu, c)| assert!(c > 0, "classical multiplicity at {nu} must be positive"))
        .collect()
}

fn require_interior(datum: &RootDatum, p: i64, w: Weight) -> Result<(), TensorError> {
    if in_open(datum, p, &fundamental_alcove(datum), w) {
        Ok(())
    } else {
        Err(TensorError::OutsideFundamentalAlcove { weight: w, p })
    }
}

/// Fusion multiplicities for lowest-alcove weights, by signed folding of the
/// characteristic-zero multiplicities into the closed lowest alcove: terms
/// folding onto a wall cancel and are dropped, interior terms accumulate
/// with the sign of the folding.
pub fn verlinde_table(
    datum: &RootDatum,
    p: i64,
    lambda: Weight,
    mu: Weight,
) -> Result<SimpleExpansion, TensorError> {
    require_interior(datum, p, lambda)?;
    require_interior(datum, p, mu)?;
    let mut acc: SimpleExpansion = SimpleExpansion::new();
    for (eta, c) in multiply_by_chi(datum, &weyl_character(datum, lambda), mu) {
        let fold = dominant_fold(datum, p, eta);
        if !is_p_regular(datum, p, fold.rep) {
            continue;
        }
        debug_assert!(in_open(datum, p, &fundamental_alcove(datum), fold.rep));
        *acc.entry(fold.rep).or_insert(0) += c * fold.sign;
    }
    acc.retain(|nu, c| {
        assert!(*c >= 0, "fusion multiplicity at {nu} must be non-negative");
        *c > 0
    });
    Ok(acc)
}

pub fn verlinde_coefficient(
    datum: &RootDatum,
    p: i64,
    lambda: Weight,
    mu: Weight,
    nu: Weight,
) -> Result<i64, TensorError> {
    require_interior(datum, p, nu)?;
    Ok(verlinde_table(datum, p, lambda, mu)?.get(&nu).copied().unwrap_or(0))
}

/// Dominant weights whose Weyl module has a single Weyl orbit of weights.
pub fn minuscule_weights(datum: &RootDatum) -> Vec<Weight> {
    match datum.system() {
        RootSystem::A2 => vec![Weight::new(1, 0), Weight::new(0, 1)],
        RootSystem::B2 => vec![Weight::new(0, 1)],
    }
}

/// Decomposition of `L(lambda) (x) L(pi)` for p-regular lambda and minuscule
/// pi: one summand `L(lambda + pi')` for every orbit weight pi' of pi such
/// that lambda + pi' stays in the upper closure of the alcove of lambda.
pub fn minuscule_decompose(
    ctx: &ModularContext,
    lambda: Weight,
    pi: Weight,
) -> Result<SimpleExpansion, TensorError> {
    let (datum, p) = (ctx.datum(), ctx.p());
    if !minuscule_weights(datum).contains(&pi) {
        return Err(TensorError::NotMinuscule { weight: pi });
    }
    let alcove = match alcove_of(datum, p, lambda) {
        Some(a) => a,
        None => return Err(TensorError::SingularWeight { weight: lambda, p }),
    };
    Ok(datum
        .finite_orbit(pi)
        .into_iter()
        .map(|(orbit_weight, _)| lambda + orbit_weight)
        .filter(|&nu| in_upper_closure(datum, p, &alcove, nu))
        .map(|nu| (nu, 1))
        .collect())
}

/// Character-level necessary conditions for complete reducibility of
/// `L(lambda) (x) L(mu)` with both weights p-restricted. A `false` in any
/// field certifies that the tensor product is not completely reducible; all
/// `true` proves nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrReport {
    /// Levi truncation inequalities on the highest weights.
    pub levi: bool,
    /// No p-regular composition factor when lambda or mu is p-singular.
    pub singular: bool,
    /// Good-filtration-dimension inequality: for p-regular lambda, mu, every
    /// p-regular factor nu satisfies len(nu) <= len(lambda) + len(mu), where
    /// len is the gallery distance of the weight's alcove from the lowest.
    pub gfd: bool,
}

impl CrReport {
    pub fn all_pass(&self) -> bool {
        self.levi && self.singular && self.gfd
    }
}

pub fn cr_necessary_conditions(ctx: &ModularContext, lambda: Weight, mu: Weight) -> CrReport {
    let (datum, p) = (ctx.datum(), ctx.p());
    assert!(is_restricted(p, lambda) && is_restricted(p, mu));
    let (a, b, a2, b2) = (lambda.a, lambda.b, mu.a, mu.b);
    let levi = match datum.system() {
        RootSystem::A2 => a + a2 + b.min(b2) <= p - 1 && b + b2 + a.min(a2) <= p - 1,
        RootSystem::B2 => a + a2 + b.min(b2) <= p - 1 && b + b2 + 2 * a.min(a2) <= p - 1,
    };
    let factors = tensor_simple_decomposition(ctx, lambda, mu);
    let regular = |w: Weight| is_p_regular(datum, p, w);
    let singular = if !regular(lambda) || !regular(mu) {
        !factors.keys().any(|&nu| regular(nu))
    } else {
        true
    };
    let gfd = if regular(lambda) && regular(mu) {
        let len = |w: Weight| dominant_fold(datum, p, w).reflections;
        let budget = len(lambda) + len(mu);
        factors.keys().all(|&nu| !regular(nu) || len(nu) <= budget)
    } else {
        true
    };
    CrReport { levi, singular, gfd }
}

/// Weight-space bound that holds whenever the tensor product is completely
/// reducible: every multiplicity `[L(lambda) (x) L(mu) : L(nu)]` is at most
/// `dim L(mu)_{nu - lambda}`.
pub fn weight_space_bound_check(ctx: &ModularContext, lambda: Weight, mu: Weight) -> bool {
    let ch_mu = ctx.simple_character(mu);
    tensor_simple_decomposition(ctx, lambda, mu)
        .iter()
        .all(|(&nu, &c)| c <= ch_mu.coeff(nu - lambda))
}
