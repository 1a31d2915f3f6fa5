//! Closed-form classification of complete reducibility and multiplicity
//! freeness for tensor products of two simple modules.
//!
//! Each classification is an ordered table of row predicates over a pair of
//! nonzero p-restricted dominant weights. The classified property holds for a
//! pair exactly when some row matches it, up to interchanging the two
//! weights; accordingly every row is evaluated on both orderings, and a match
//! that needed the reversed ordering is recorded with `swapped = true`. The
//! first matching row is the canonical answer, but all matching rows are
//! retained for auditing.
//!
//! [`verdict`] extends the restricted classification to arbitrary dominant
//! weights through the base-p expansion: a tensor product is completely
//! reducible (multiplicity free) exactly when every digit pair is.
//!
//! A pair whose tensor product the decomposition oracle finds multiplicity
//! free but which matches no row is a soundness violation of the encoded
//! tables; the exhaustive sweeps report it as a failure, and rows are never
//! widened to absorb such a pair.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::alcoves::{alcove_of, reflection_small};
use crate::rootdata::{RootDatum, RootSystem, Weight};
use crate::simples::{base_p_expand, is_prime, is_restricted};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("zero weights are outside the classification tables; zero-weight pairs are trivially completely reducible and multiplicity free")]
    ZeroWeight,
    #[error("weight {weight} is not p-restricted for p = {p}")]
    NonRestricted { weight: Weight, p: i64 },
}

/// Which classification table a matched row belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableId {
    #[serde(rename = "a2-cr")]
    A2Cr,
    #[serde(rename = "a2-mf")]
    A2Mf,
    #[serde(rename = "b2-cr")]
    B2Cr,
    #[serde(rename = "b2-mf")]
    B2Mf,
    #[serde(rename = "b2-char0-mf")]
    B2Char0Mf,
}

impl TableId {
    pub fn as_str(self) -> &'static str {
        match self {
            TableId::A2Cr => "a2-cr",
            TableId::A2Mf => "a2-mf",
            TableId::B2Cr => "b2-cr",
            TableId::B2Mf => "b2-mf",
            TableId::B2Char0Mf => "b2-char0-mf",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One matched classification row: the table, the row label, and whether the
/// match required interchanging the two weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowMatch {
    pub table: TableId,
    pub row: &'static str,
    pub swapped: bool,
}

impl fmt::Display for RowMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.table, self.row)?;
        if self.swapped {
            f.write_str("(s)")?;
        }
        Ok(())
    }
}

/// Joint classification of a pair of dominant weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub cr: bool,
    pub mf: bool,
    pub rows: Vec<RowMatch>,
}

fn check_restricted_pair(p: i64, lambda: Weight, mu: Weight) -> Result<(), ClassifyError> {
    for w in [lambda, mu] {
        if w.is_zero() {
            return Err(ClassifyError::ZeroWeight);
        }
        if !is_restricted(p, w) {
            return Err(ClassifyError::NonRestricted { weight: w, p });
        }
    }
    Ok(())
}

fn in_alcove(datum: &RootDatum, p: i64, w: Weight, levels: &[i64]) -> bool {
    alcove_of(datum, p, w).is_some_and(|c| c.levels() == levels)
}

/// Rows 1 through 3* shared by the two A2 tables. Starred rows apply the
/// unstarred condition to the dual pair, with duality acting on fundamental
/// coordinates as the swap (a, b) -> (b, a).
fn a2_rows_one_to_three(
    datum: &RootDatum,
    p: i64,
    l: Weight,
    m: Weight,
) -> Vec<(&'static str, bool)> {
    let d = |w: Weight| datum.dual_weight(w);
    let row1 = |l: Weight, m: Weight| l.b == 0 && m.b == 0 && l.a + m.a == p - 1;
    let row2 = |l: Weight, m: Weight| l == Weight::new(p - 1, 0) && m == Weight::new(0, 1);
    let row3 = |l: Weight, m: Weight| {
        in_alcove(datum, p, l, &[0, 0, 1])
            && m == Weight::new(0, l.b + 1)
            && l.a + l.b == p - 1
            && l.b < l.a
    };
    vec![
        ("1", row1(l, m)),
        ("1*", row1(d(l), d(m))),
        ("2", row2(l, m)),
        ("2*", row2(d(l), d(m))),
        ("3", row3(l, m)),
        ("3*", row3(d(l), d(m))),
    ]
}

fn a2_cr_conditions(datum: &RootDatum, p: i64, l: Weight, m: Weight) -> Vec<(&'static str, bool)> {
    let mut rows = a2_rows_one_to_three(datum, p, l, m);
    let low = in_alcove(datum, p, l, &[0, 0, 0]) || in_alcove(datum, p, l, &[0, 0, 1]);
    rows.push(("4", low && reflection_small(datum, p, l, m)));
    rows
}

fn a2_mf_conditions(datum: &RootDatum, p: i64, l: Weight, m: Weight) -> Vec<(&'static str, bool)> {
    let d = |w: Weight| datum.dual_weight(w);
    let row4a = |l: Weight, m: Weight| {
        (in_alcove(datum, p, l, &[0, 0, 0]) || in_alcove(datum, p, l, &[0, 0, 1]))
            && m.b == 0
            && reflection_small(datum, p, l, m)
    };
    let row4b = |l: Weight, m: Weight| {
        in_alcove(datum, p, l, &[0, 0, 1])
            && l.a + l.b == p - 1
            && reflection_small(datum, p, l, m)
    };
    let mut rows = a2_rows_one_to_three(datum, p, l, m);
    rows.push(("4a", row4a(l, m)));
    rows.push(("4a*", row4a(d(l), d(m))));
    rows.push(("4b", row4b(l, m)));
    rows
}

/// Rows 1 through 7 shared by the two B2 tables; pure weight arithmetic.
fn b2_rows_one_to_seven(p: i64, l: Weight, m: Weight) -> Vec<(&'static str, bool)> {
    let row1 = p >= 3 && {
        let w1 = Weight::new((p - 1) / 2, 0);
        let w2 = Weight::new((p - 3) / 2, 1);
        (l == w1 || l == w2) && (m == w1 || m == w2)
    };
    vec![
        ("1", row1),
        ("2", l == Weight::new(p - 1, 0) && m == Weight::new(0, 1)),
        // Row 3 fails at p = 3: V(1,2) has socle L(0,2) there, so the
        // product L(0,2) (x) L(1,0) contains L(0,2) twice.
        ("3", p != 3 && l == Weight::new(0, p - 1) && m == Weight::new(1, 0)),
        ("4", p != 3 && l == Weight::new(p - 2, 1) && m == Weight::new(1, 0)),
        ("5", p >= 3 && l == Weight::new(0, p - 2) && m == Weight::new(0, 1)),
        ("6", p >= 3 && l == Weight::new(p - 2, 0) && m == Weight::new(0, 1)),
        ("7", p >= 5 && l == Weight::new(0, p - 3) && m == Weight::new(1, 0)),
    ]
}

fn b2_cr_conditions(datum: &RootDatum, p: i64, l: Weight, m: Weight) -> Vec<(&'static str, bool)> {
    let low = alcove_of(datum, p, l).is_some_and(|c| {
        matches!(
            c.levels(),
            [0, 0, 0, 0] | [0, 0, 1, 0] | [0, 0, 1, 1] | [0, 0, 2, 1]
        )
    });
    let mut rows = b2_rows_one_to_seven(p, l, m);
    rows.push(("8", low && reflection_small(datum, p, l, m)));
    rows
}

fn b2_mf_conditions(datum: &RootDatum, p: i64, l: Weight, m: Weight) -> Vec<(&'static str, bool)> {
    let c0 = in_alcove(datum, p, l, &[0, 0, 0, 0]);
    let c1 = in_alcove(datum, p, l, &[0, 0, 1, 0]);
    let c2 = in_alcove(datum, p, l, &[0, 0, 1, 1]);
    let c3 = in_alcove(datum, p, l, &[0, 0, 2, 1]);
    let rs = reflection_small(datum, p, l, m);
    let small_b = m.b == 0 || m.b == 1;
    let fundamental = m == Weight::new(1, 0) || m == Weight::new(0, 1);
    let mut rows = b2_rows_one_to_seven(p, l, m);
    rows.extend([
        ("8a", c0 && rs && b2_char0_mf(l, m)),
        ("8b", (c1 || c2 || c3) && fundamental && rs),
        ("8c", c1 && l.b == 1 && m.b == 0 && rs),
        ("8cw", c1 && 2 * l.a + l.b == p - 1 && m.b == 0 && rs),
        ("8d", c1 && l.b == 0 && small_b && rs),
        ("8dw", c1 && 2 * l.a + l.b == p - 2 && small_b && rs),
        ("8e", c1 && l.b == 0 && m.a == 0 && rs),
        ("8ew", c1 && 2 * l.a + l.b == p - 2 && m.a == 0 && rs),
        ("8f", p >= 3 && l == Weight::new((p - 1) / 2, 0) && rs),
        ("8fw", p >= 3 && l == Weight::new((p - 3) / 2, 1) && rs),
        ("8g", c2 && l.a + l.b == p - 1 && m.b == 0 && rs),
        ("8h", c2 && l.a + l.b == p - 1 && m.a == 0 && rs),
        ("8i", c3 && 2 * l.a + l.b == 2 * p - 2 && m.a == 0 && rs),
        ("8j", c3 && 2 * l.a + l.b == 2 * p - 2 && small_b && rs),
        ("8k", c3 && 2 * l.a + l.b == 2 * p - 1 && m.b == 0 && rs),
    ]);
    rows
}

/// Rows of the characteristic-zero multiplicity-freeness table for B2; the
/// classified property does not depend on p.
fn b2_char0_conditions(l: Weight, m: Weight) -> Vec<(&'static str, bool)> {
    vec![
        ("1a", m == Weight::new(1, 0)),
        ("1b", m == Weight::new(0, 1)),
        ("2a", l.b == 0 && m.b == 0),
        ("2b", l.a == 0 && m.a == 0),
        ("3", l.b == 0 && m.a == 0),
        ("4", l.b == 1 && m.b == 0),
    ]
}

fn b2_char0_mf(l: Weight, m: Weight) -> bool {
    b2_char0_conditions(l, m).iter().any(|&(_, hit)| hit)
        || b2_char0_conditions(m, l).iter().any(|&(_, hit)| hit)
}

/// Merges the row evaluations of the two orderings of a pair, walking rows in
/// table order and preferring the unswapped ordering within each row.
fn collect_matches(
    table: TableId,
    forward: Vec<(&'static str, bool)>,
    backward: Vec<(&'static str, bool)>,
) -> Vec<RowMatch> {
    debug_assert_eq!(forward.len(), backward.len());
    forward
        .into_iter()
        .zip(backward)
        .filter_map(|((row, fwd), (brow, bwd))| {
            debug_assert_eq!(row, brow);
            if fwd {
                Some(RowMatch { table, row, swapped: false })
            } else if bwd {
                Some(RowMatch { table, row, swapped: true })
            } else {
                None
            }
        })
        .collect()
}

fn restricted_matches(
    datum: &RootDatum,
    p: i64,
    table: TableId,
    lambda: Weight,
    mu: Weight,
) -> Result<Vec<RowMatch>, ClassifyError> {
    check_restricted_pair(p, lambda, mu)?;
    let build = |l, m| match table {
        TableId::A2Cr => a2_cr_conditions(datum, p, l, m),
        TableId::A2Mf => a2_mf_conditions(datum, p, l, m),
        TableId::B2Cr => b2_cr_conditions(datum, p, l, m),
        TableId::B2Mf => b2_mf_conditions(datum, p, l, m),
        TableId::B2Char0Mf => unreachable!("the characteristic-zero table is not p-restricted"),
    };
    Ok(collect_matches(table, build(lambda, mu), build(mu, lambda)))
}

/// All complete-reducibility rows matching a nonzero p-restricted pair, in
/// table order.
pub fn cr_matches(
    datum: &RootDatum,
    p: i64,
    lambda: Weight,
    mu: Weight,
) -> Result<Vec<RowMatch>, ClassifyError> {
    let table = match datum.system() {
        RootSystem::A2 => TableId::A2Cr,
        RootSystem::B2 => TableId::B2Cr,
    };
    restricted_matches(datum, p, table, lambda, mu)
}

/// All multiplicity-freeness rows matching a nonzero p-restricted pair, in
/// table order.
pub fn mf_matches(
    datum: &RootDatum,
    p: i64,
    lambda: Weight,
    mu: Weight,
) -> Result<Vec<RowMatch>, ClassifyError> {
    let table = match datum.system() {
        RootSystem::A2 => TableId::A2Mf,
        RootSystem::B2 => TableId::B2Mf,
    };
    restricted_matches(datum, p, table, lambda, mu)
}

/// First complete-reducibility row matching the pair for SL3, if any.
pub fn a2_cr_row(p: i64, lambda: Weight, mu: Weight) -> Result<Option<RowMatch>, ClassifyError> {
    Ok(cr_matches(&RootDatum::a2(), p, lambda, mu)?.into_iter().next())
}

/// First multiplicity-freeness row matching the pair for SL3, if any.
pub fn a2_mf_row(p: i64, lambda: Weight, mu: Weight) -> Result<Option<RowMatch>, ClassifyError> {
    Ok(mf_matches(&RootDatum::a2(), p, lambda, mu)?.into_iter().next())
}

/// First complete-reducibility row matching the pair for Sp4, if any.
pub fn b2_cr_row(p: i64, lambda: Weight, mu: Weight) -> Result<Option<RowMatch>, ClassifyError> {
    Ok(cr_matches(&RootDatum::b2(), p, lambda, mu)?.into_iter().next())
}

/// First multiplicity-freeness row matching the pair for Sp4, if any.
pub fn b2_mf_row(p: i64, lambda: Weight, mu: Weight) -> Result<Option<RowMatch>, ClassifyError> {
    Ok(mf_matches(&RootDatum::b2(), p, lambda, mu)?.into_iter().next())
}

/// First row of the characteristic-zero B2 multiplicity-freeness table
/// matching a pair of nonzero dominant weights, if any.
pub fn stembridge_b2_char0_mf(
    lambda: Weight,
    mu: Weight,
) -> Result<Option<RowMatch>, ClassifyError> {
    assert!(
        lambda.is_dominant() && mu.is_dominant(),
        "the characteristic-zero table takes dominant weights"
    );
    if lambda.is_zero() || mu.is_zero() {
        return Err(ClassifyError::ZeroWeight);
    }
    Ok(collect_matches(
        TableId::B2Char0Mf,
        b2_char0_conditions(lambda, mu),
        b2_char0_conditions(mu, lambda),
    )
    .into_iter()
    .next())
}

/// Classifies an arbitrary pair of dominant weights by classifying each digit
/// pair of the base-p expansions. A digit pair with a zero member is
/// trivially completely reducible and multiplicity free and contributes no
/// rows.
pub fn verdict(datum: &RootDatum, p: i64, lambda: Weight, mu: Weight) -> Verdict {
    assert!(is_prime(p), "verdicts need a prime characteristic");
    assert!(lambda.is_dominant() && mu.is_dominant(), "verdicts take dominant weights");
    let mut digits_l = base_p_expand(p, lambda);
    let mut digits_m = base_p_expand(p, mu);
    let len = digits_l.len().max(digits_m.len());
    digits_l.resize(len, Weight::ZERO);
    digits_m.resize(len, Weight::ZERO);

    let mut cr = true;
    let mut mf = true;
    let mut rows = Vec::new();
    for (&dl, &dm) in digits_l.iter().zip(&digits_m) {
        if dl.is_zero() || dm.is_zero() {
            continue;
        }
        let cr_rows = cr_matches(datum, p, dl, dm).expect("digits are restricted and nonzero");
        let mf_rows = mf_matches(datum, p, dl, dm).expect("digits are restricted and nonzero");
        debug_assert!(
            mf_rows.is_empty() || !cr_rows.is_empty(),
            "a multiplicity-freeness row matched without a complete-reducibility row"
        );
        cr &= !cr_rows.is_empty();
        mf &= !mf_rows.is_empty();
        rows.extend(cr_rows);
        rows.extend(mf_rows);
    }
    Verdict { cr, mf, rows }
}
