//! Exact arithmetic: sparse Laurent polynomials over big integers, monomial
//! substitution, exact division and permutation-expansion determinants.

mod matrix;
mod monomial;
mod poly;
mod text;

pub use matrix::{determinant, determinant_bounded, PolyMatrix, DEFAULT_MAX_ORDER};
pub use monomial::{Monomial, Var};
pub use poly::LaurentPoly;

/// `x_i` as a polynomial.
pub fn x(i: usize) -> LaurentPoly {
    LaurentPoly::var(Var::x(i))
}

/// `x_i^e` as a polynomial.
pub fn x_pow(i: usize, e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::x(i), e)
}

/// `t_i^e` as a polynomial.
pub fn t_pow(i: usize, e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::t(i), e)
}

/// `q^e` as a polynomial.
pub fn q_pow(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Q, e)
}

/// `1 - q^e`.
pub fn one_minus_q_pow(e: i32) -> LaurentPoly {
    &LaurentPoly::one() - &q_pow(e)
}
