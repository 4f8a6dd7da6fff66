//! Exact arithmetic for q-characters (Laurent polynomials in the spectral
//! variables `Y_k`) and for univariate `t`-polynomials.

mod laurent;
mod monomial;
mod tpoly;

pub use laurent::LaurentPoly;
pub use monomial::{a_inverse_factorization, a_leq, HalfPos, Monomial, Spectral};
pub use tpoly::{binomial, gauss_binom_t, TPoly};
