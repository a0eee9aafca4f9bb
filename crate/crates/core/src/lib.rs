//! Combinatorics and linear algebra for Grassmannian cluster categories.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`tableaux`]: rectangular semistandard Young tableaux, their monoid
//!   structure up to trivial columns, Bender–Knuth moves and promotion, and the
//!   dictionary between dominant monomials and tableaux.
//! * [`cluster`]: quivers, exchange matrices, Grassmannian initial seeds and
//!   mutation of tableau-labelled seeds.
//! * [`gvec`]: g-vectors of tableaux with respect to a seed and the two-term
//!   (cone) presentation they induce.
//! * [`cmcat`]: rank-one Cohen–Macaulay modules as k-subsets, rims, the
//!   Auslander–Reiten translate on two-interval subsets, and profiles.
//! * [`qpa`]: finite-dimensional Jacobian algebras of quivers with potential.
//! * [`einv`]: E-invariants of two-term projective complexes and their
//!   generic values.
//! * [`hl`]: Hernandez–Leclerc quivers and the Kirillov–Reshetikhin subsets.
//! * [`braid`]: the braid group action on consecutively generic vector tuples.
//!
//! Everything is exact: integers, arbitrary-precision rationals, or a prime
//! field. There is no floating point anywhere.
#![no_std]
#![warn(missing_docs)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod braid;
pub mod cluster;
pub mod cmcat;
pub mod einv;
mod error;
pub mod gvec;
pub mod hl;
pub mod linalg;
pub mod qpa;
pub mod tableaux;

pub use error::{Error, Result};
