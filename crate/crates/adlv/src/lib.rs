//! Exact-arithmetic root-system combinatorics behind non-emptiness criteria
//! for affine Deligne-Lusztig varieties.
//!
//! The crate computes, over arbitrary-precision rationals:
//!
//! - irreducible root systems of every finite type (including non-reduced BC)
//!   with their pairings, reflections and Weyl orbits ([`rootdata`], [`orbits`]);
//! - quotient lattices `P(R)/Q(R)` and `P(R)/Q(R_J)` in Smith normal form,
//!   dominance orders, and minuscule-dominant coset lifts ([`lattices`]);
//! - the numbers game with cutoff (Peterson's minuscule Weyl elements) and
//!   fractional-part lifts ([`game`]);
//! - the two sides of the orbit-hull projection identity
//!   `φ_J(P_μ) = {y : same class as μ, pr_J(y) ∈ pr_J(Conv(Wμ))}`, with
//!   machine-checkable witness certificates ([`engine`]);
//! - diagram folding to non-simply-laced types and the transfer lemmas that
//!   carry the identity across a folding ([`folding`]);
//! - coinvariant lattices, cofolded root systems, dominance cover chains and
//!   the quasi-split non-emptiness criterion ([`quasisplit`]).
//!
//! Everything is pure and immutable after construction; independent queries
//! can run concurrently without coordination.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `adlv` binary exposes the same operations as CLI subcommands.

pub mod error;
pub mod num;
pub mod snf;
pub mod rootdata;
pub mod lattices;
pub mod lp;
pub mod orbits;
pub mod game;
pub mod engine;
pub mod folding;
pub mod quasisplit;
pub mod report;
pub mod cli;

pub use error::{Error, Result};
pub use rootdata::{Family, RootDatum, WeightVec};
