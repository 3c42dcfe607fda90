//! Exact symbolic computation for finite-dimensional pointed Hopf algebras.
//!
//! The crate builds Taft algebras, the algebras `E(n)`, monomial Hopf
//! algebras of type I and finite group algebras from structure constants over
//! a cyclotomic field, and computes with the objects attached to them:
//! two-cocycles and twisted comodule algebras, the localized symmetric
//! algebra `S(t_H)_Θ`, the universal comodule algebra map `μ_α`, generic
//! cocycles and presentations of the generic base algebra `B_H`.
//!
//! Everything here is exact; there is no floating point. The crate is
//! `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod cocycle;
pub mod error;
pub mod generic_base;
pub mod group;
pub mod hopf;
pub mod identities;
pub mod lattice;
pub mod linalg;
pub mod parse;
pub mod report;
pub mod tring;

pub use arith::{make_field, Field, FieldSpec, Scalar};
pub use error::{Error, Result};
pub use hopf::HopfAlgebra;
pub use report::Report;
