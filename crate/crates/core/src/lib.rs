//! Exact computation of rational stable wedge decompositions of equivariant
//! complex projective spaces `CP(V)` and Grassmannians `Gr_n(V)` for finite
//! groups, together with a verifier that compares fixed-point Poincaré
//! polynomials computed two independent ways.
//!
//! The pipeline is:
//!
//! 1. [`groups`] builds a concrete finite group (multiplication table,
//!    conjugacy classes, subgroup lattice up to conjugacy).
//! 2. [`reps`] computes its exact character table over cyclotomic numbers
//!    ([`exactnum`]) and all restriction/decomposition data for subgroups.
//! 3. [`splitting`] produces the symbolic wedge decomposition of `CP(V)` or
//!    `Gr_n(V)` for an ordered sequence of irreducible summands: representation
//!    spheres in the abelian case, Thom summands over lower Grassmannians in
//!    general.
//! 4. [`fixedpoints`] evaluates the `H`-fixed-point Poincaré polynomial of
//!    each summand and of the space itself, for every subgroup class `H`.
//! 5. [`verify`] checks the two computations agree coefficientwise and emits
//!    machine-readable reports.
//!
//! All arithmetic is exact: arbitrary-precision rationals, cyclotomic numbers
//! in `Q[x]/(Phi_N)`, and nonnegative integer polynomial coefficients. There
//! is no floating point anywhere in the crate.

pub mod error;
pub mod exactnum;
pub mod fixedpoints;
pub mod groups;
mod modp;
pub mod reps;
pub mod splitting;
pub mod verify;

pub use error::{Error, Result};
