//! Exact verification of the symmetric plane partition generating function
//! and the determinant identities behind it.
//!
//! * [`exactalg`]: Laurent polynomials, substitution, exact division, determinants.
//! * [`combinat`]: partitions, plane partitions, tableaux and the fold bijection.
//! * [`schur`]: Schur polynomials, box sums, Weyl denominator, product formulas.
//! * [`identity`]: the lemma, its ratio `F`, the expansion identities and the
//!   vanishing determinant.
//! * [`verify`]: named checks over an `(m, n)` grid and their reports.

pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod identity;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{LaurentPoly, Monomial, PolyMatrix, Var};
