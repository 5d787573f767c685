//! Exact arithmetic for a tower of curves built from torsion of an elliptic
//! fibration: projectivised modules over Z/l^n, tame monodromy orbits,
//! Hurwitz genus bookkeeping, and supersingular Legendre curves over F_p^2.
//!
//! The pipeline runs in five stages, one module each:
//!
//! * [`residue`] — the coefficient rings Z/l^n for an odd prime l, with
//!   exact unit arithmetic and level reduction.
//! * [`projective`] — the projectivisation P((Z/l^n)^b): canonical
//!   representatives, duplicate-free enumeration, and the closed-form
//!   cardinality `(1 + l + ... + l^(b-1)) * l^((b-1)(n-1))`.
//! * [`monodromy`] — invertible matrices acting on those points; full orbit
//!   decompositions and the closed-form orbit type of the Legendre generator
//!   `[1 2; 0 1]` at even levels.
//! * [`tower`] — the Hurwitz genus of each covering in the tower, the
//!   rational-point floor, and the exact limit of points/genus, compared
//!   against the ceiling sqrt(q) - 1.
//! * [`legendre`] and [`field`] — the curves y^2 = x(x-1)(x-a) over F_p^2
//!   that realise the fibres: point counts, Weil data, scalar-Frobenius
//!   certificates, the Hasse polynomial, and a full census per prime.
//!
//! [`cache`] persists point counts between runs, and [`report`] renders
//! everything deterministically for the command-line front end.
//!
//! Every computation is exact (integers, residues, and rationals — never
//! floats), every enumeration is budgeted, and the headline results are
//! cross-checked internally: a violated invariant is an
//! [`Error::CrossCheck`], never a silently wrong answer.
//!
//! # Runnable examples
//!
//! Each major capability has one example under `examples/`:
//!
//! * `projective_spaces` — cardinalities, canonical points, and the
//!   level-reduction fibres.
//! * `orbit_decomposition` — orbits of the Legendre generator and of custom
//!   matrices, against the closed form.
//! * `tower_genus` — degree, genus, and points/genus ratios up the tower,
//!   with the exact limit.
//! * `hasse_locus` — the Hasse polynomial, its separability, and the
//!   supersingular locus it cuts out.
//! * `legendre_census` — every supersingular curve over a chosen F_p^2,
//!   certified and tabulated.
//! * `optimal_tower_replay` — the reference story end to end: one curve's
//!   certificate chain, its split fibre model, and the tower it feeds.
//!
//! Run one with `cargo run --example <name>`.

pub mod cache;
pub mod error;
pub mod field;
pub mod legendre;
pub mod monodromy;
mod primes;
pub mod projective;
pub mod report;
pub mod residue;
pub mod tower;

pub use error::{Error, Result};
