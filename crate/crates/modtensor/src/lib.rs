//! Exact tensor-product decompositions of simple modules for the simply
//! connected algebraic groups of types A2 (SL3) and B2 (Sp4) over a field of
//! prime characteristic p.
//!
//! The crate computes characters of Weyl, simple, and (partially) tilting
//! modules by exact integer arithmetic, decomposes tensor products of simple
//! modules into simple characters, and checks the resulting complete
//! reducibility and multiplicity-freeness verdicts against closed-form
//! classification tables, exhaustively over all p-restricted highest weights.
//!
//! Module map:
//! - [`rootdata`]: weights, roots, pairings, the finite Weyl group, dominance.
//! - [`alcoves`]: affine Weyl group geometry for the p-dilated dot action.
//! - [`characters`]: formal characters, Weyl characters, basis conversions.
//! - [`simples`]: simple and tilting characters via Weyl-module structure.
//! - [`tensor`]: tensor decompositions, fusion (Verlinde) data, bounds.
//! - [`classify`]: classification tables and the per-pair verdict.
//! - [`cache`]: the persistent simple-character store used by the CLI.

pub mod alcoves;
pub mod cache;
pub mod characters;
pub mod classify;
pub mod rootdata;
pub mod simples;
pub mod tensor;
