//! Exact-arithmetic toolkit for ladder representations of the type-A graded
//! affine Hecke algebra `H_n` (parameter `k = 1`).
//!
//! Everything here is pure computation over the rationals: no floating point,
//! no IO. The companion `hlad` crate layers file formats and a CLI on top.
//!
//! Layout:
//! - [`linalg`]: rationals, dense matrices, sparse homogeneous systems,
//!   polynomials in `ε_1..ε_n`, joint eigenspace decomposition.
//! - [`hecke`]: permutations, symbolic algebra elements, star operations,
//!   matrix modules and their relation checker.
//! - [`segments`], [`tableaux`]: Zelevinsky data and skew tableaux.
//! - [`cherednik`], [`standard`]: the calibrated ladder module and induced
//!   standard modules, formal characters, the determinantal identity.
//! - [`forms`]: invariant symmetric forms and unitarity.
//! - [`nilpairs`]: commuting nilpotent pairs from skew shapes.
//! - [`arakawa_suzuki`]: tensor-space Hecke action and `n⁻`-coinvariants.
//! - [`panel`]: deterministic enumerators used by the verification suites.
#![no_std]

extern crate alloc;

pub mod arakawa_suzuki;
pub mod cherednik;
mod error;
pub mod forms;
pub mod hecke;
pub mod linalg;
pub mod nilpairs;
pub mod panel;
pub mod segments;
pub mod standard;
pub mod tableaux;

pub use error::{Error, Result};
pub use hecke::{AlgebraElement, HeckeAlgebra, ModuleRep, Perm};
pub use linalg::{Matrix, MultiPoly, Rational, Weight};
pub use segments::{Multisegment, Segment, SkewDiagram};

