//! Exact arithmetic: rationals, Laurent polynomials in `x`, polynomials in `t`
//! over `Q[x, 1/x]`, rational generating functions, series reconstruction and
//! exact matrix utilities.

pub mod bivar;
pub mod expr;
pub mod json;
pub mod laurent;
pub mod matrix;
pub mod pade;
pub mod recurrence;
pub mod univariate;

pub use bivar::{BivarPoly, RationalGF};
pub use expr::{parse_bivar, parse_gf, parse_poly};
pub use laurent::{int, rat, Coeff, IntPoly, Laurent, LaurentPoly};
pub use matrix::{matrix_charpoly, primitivity_check, PrimitivityReport};
pub use pade::{reconstruct_rational_gf, DEFAULT_GUARD};
pub use recurrence::{extend_series, recurrence_from_denominator};

/// Exact rational number.
pub type Rational = num_rational::BigRational;
