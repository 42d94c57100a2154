//! Exact and high-precision machinery for theta lifts on orthogonal groups.
//!
//! The crate provides:
//!
//! - [`arith`]: big rationals, cyclotomic fields, truncated q-expansions,
//!   Gaussian-rational Laurent series in a formal `pi`, Bernoulli numbers,
//!   number fields, and arbitrary-precision real/complex evaluation.
//! - [`lattice`]: even lattices, discriminant forms, signatures, Witt index
//!   bookkeeping, and exact vector enumeration in cosets.
//! - [`weilrep`]: exact matrices of the Weil representation attached to a
//!   discriminant form, for arbitrary elements of `SL2(Z)`.
//! - [`thetaseries`]: vector-valued theta q-expansions for definite lattices
//!   and high-precision Siegel theta values for indefinite ones.
//! - [`modforms`]: level-one Eisenstein series, the Miller basis, Hecke
//!   operators, and eigenforms with exact number-field coefficients.
//! - [`lfunctions`]: zeta values, the standard L-function of an eigenform by
//!   two independent routes, and the norm-ratio report with its
//!   injectivity verdict.
//! - [`borcherds`]: weakly holomorphic input forms, product weight/divisor
//!   data, and truncated automorphic product expansions.
//! - [`fock`]: exact symbolic Fock-model calculus for the special Schwartz
//!   forms, with a registry of machine-checked polynomial identities.

pub mod arith;
pub mod borcherds;
pub mod error;
pub mod fock;
pub mod lattice;
pub mod lfunctions;
pub mod modforms;
pub mod thetaseries;
pub mod weilrep;

pub use error::{Error, Result};
