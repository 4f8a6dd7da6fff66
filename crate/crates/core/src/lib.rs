//! Exact q-characters and decomposition numbers for quantum affine `sl_2`.
//!
//! All spectral parameters live on one `q^2`-coset: the integer `k` stands
//! for `a q^{2k}` with `a` a fixed generic base. Characters are sparse
//! Laurent polynomials in `Y_k` with checked integer coefficients.
//!
//! * [`polyring`]: Laurent polynomials, `t`-polynomials, Gaussian binomials
//!   and the `A^{-1}` order on monomials.
//! * [`qstrings`]: q-strings, Drinfeld data and string decompositions.
//! * [`quiver`]: equioriented `A_n` combinatorics and strata of varieties of
//!   complexes.
//! * [`characters`]: KR, simple and standard q-characters.
//! * [`decomp`]: decomposition numbers of standard modules and IC stalks.
//! * [`verify`]: the sweep drivers behind `qchar sweep-verify`.

pub mod characters;
pub mod cli;
pub mod decomp;
mod error;
pub mod io;
pub mod polyring;
pub mod qstrings;
pub mod quiver;
pub mod verify;

pub use error::{Error, Result};
