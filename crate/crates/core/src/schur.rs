//! Schur polynomials by tableaux and by bialternants, both sides of the box
//! sum theorem, the type B Weyl denominator, and the closed-form products.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{for_each_ssyt, partitions_in_box, Partition};
use crate::error::Result;
use crate::exactalg::{
    determinant, one_minus_q_pow, x, x_pow, LaurentPoly, Monomial, PolyMatrix, Var,
};

/// Box dimensions: parts at most `m`, at most `n` parts / `n` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoxParams {
    pub m: u32,
    pub n: usize,
}

impl BoxParams {
    pub fn new(m: u32, n: usize) -> BoxParams {
        BoxParams { m, n }
    }

    fn is_degenerate(&self) -> bool {
        self.m == 0 || self.n == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SchurBackend {
    #[default]
    Tableaux,
    Bialternant,
}

/// `s_lambda(x_1..x_n)` as the sum of tableau monomials.
pub fn schur_via_tableaux(shape: &Partition, n: usize) -> LaurentPoly {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for_each_ssyt(shape, n as u32, |t| {
        *counts.entry(t.monomial()).or_default() += 1
    });
    LaurentPoly::from_terms(counts.into_iter().map(|(m, c)| (m, c.into())))
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> LaurentPoly {
    LaurentPoly::product((1..=n).flat_map(|i| (i + 1..=n).map(move |j| &x(i) - &x(j))))
}

/// `det(x_i^{lambda_j + n - j}) / prod_{i<j} (x_i - x_j)`.
pub fn schur_via_bialternant(shape: &Partition, n: usize) -> Result<LaurentPoly> {
    if shape.len() > n {
        return Ok(LaurentPoly::zero());
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let num = determinant(&alternant(shape, n))?;
    num.exact_div(&vandermonde(n))
}

/// The matrix `(x_i^{lambda_j + n - j})`.
pub fn alternant(shape: &Partition, n: usize) -> PolyMatrix {
    let lambda = shape.padded(n);
    PolyMatrix::from_fn(n, |i, j| x_pow(i, (lambda[j - 1] as usize + n - j) as i32))
}

pub fn schur(shape: &Partition, n: usize, backend: SchurBackend) -> Result<LaurentPoly> {
    match backend {
        SchurBackend::Tableaux => Ok(schur_via_tableaux(shape, n)),
        SchurBackend::Bialternant => schur_via_bialternant(shape, n),
    }
}

/// `sum_{lambda in m^n} s_lambda(x_1..x_n)`. The terms are computed in
/// parallel and added.
pub fn schur_box_sum(p: BoxParams, backend: SchurBackend) -> Result<LaurentPoly> {
    if p.is_degenerate() {
        return Ok(LaurentPoly::one());
    }
    let terms: Vec<LaurentPoly> = partitions_in_box(p.m, p.n)
        .par_iter()
        .map(|lambda| schur(lambda, p.n, backend))
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().sum())
}

/// `(x_i^{j-1} - x_i^{top - j})` for `i, j = 1..n`.
fn binomial_matrix(n: usize, top: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |i, j| {
        &x_pow(i, j as i32 - 1) - &x_pow(i, (top - j) as i32)
    })
}

/// `det(x_i^{j-1} - x_i^{m+2n-j}) / det(x_i^{j-1} - x_i^{2n-j})`.
pub fn box_det_ratio(p: BoxParams) -> Result<LaurentPoly> {
    if p.is_degenerate() {
        return Ok(LaurentPoly::one());
    }
    let n = p.n;
    let num = determinant(&binomial_matrix(n, p.m as usize + 2 * n))?;
    let den = weyl_denominator(n, WeylForm::Determinant)?;
    num.exact_div(&den)
}

/// The numerator determinant `det(x_i^{j-1} - x_i^{m+2n-j})`.
pub fn box_numerator_det(p: BoxParams) -> Result<LaurentPoly> {
    determinant(&binomial_matrix(p.n, p.m as usize + 2 * p.n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylForm {
    Determinant,
    Product,
}

/// Type B Weyl denominator in `x_1..x_n`.
///
/// Determinant form: `det(x_i^{j-1} - x_i^{2n-j})`.
/// Product form: `prod (1 - x_i) * prod_{i<j} (x_i - x_j)(x_i x_j - 1)`.
pub fn weyl_denominator(n: usize, form: WeylForm) -> Result<LaurentPoly> {
    let vars: Vec<Var> = (1..=n).map(Var::x).collect();
    weyl_denominator_in(&vars, form)
}

/// Weyl denominator in an arbitrary ordered list of variables.
pub fn weyl_denominator_in(vars: &[Var], form: WeylForm) -> Result<LaurentPoly> {
    let n = vars.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let v = |i: usize, e: i32| LaurentPoly::var_pow(vars[i - 1], e);
    match form {
        WeylForm::Determinant => determinant(&PolyMatrix::from_fn(n, |i, j| {
            &v(i, j as i32 - 1) - &v(i, (2 * n - j) as i32)
        })),
        WeylForm::Product => {
            let one = LaurentPoly::one();
            let linear = LaurentPoly::product((1..=n).map(|i| &one - &v(i, 1)));
            let pairs = LaurentPoly::product((1..=n).flat_map(|i| {
                let one = one.clone();
                (i + 1..=n).map(move |j| (&v(i, 1) - &v(j, 1)) * (&(&v(i, 1) * &v(j, 1)) - &one))
            }));
            Ok(&linear * &pairs)
        }
    }
}

/// One labelled sub-check of [`dn_checks`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DnCheck {
    pub label: String,
    pub pass: bool,
}

/// Structure of `D_n(x_1..x_n) = det(x_j^{i-1} - x_j^{2n-i})` as a polynomial
/// in `x_1`.
#[derive(Clone, Debug)]
pub struct DnReport {
    pub n: usize,
    pub checks: Vec<DnCheck>,
    /// Coefficient of `x_1^{2n-1}` in `D_n`.
    pub leading: LaurentPoly,
    /// `-x_2 ... x_n * D_{n-1}(x_2..x_n)`.
    pub expected_leading: LaurentPoly,
}

impl DnReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks that `D_n` vanishes at `x_1 = 1`, `x_1 = x_j` and `x_1 = x_j^{-1}`
/// for `j = 2..n`, has degree `2n - 1` in `x_1`, and has leading coefficient
/// `-x_2 ... x_n D_{n-1}(x_2..x_n)`.
pub fn dn_checks(n: usize) -> Result<DnReport> {
    assert!(n >= 1, "D_n needs at least one variable");
    let x1 = Var::x(1);
    let dn = determinant(&PolyMatrix::from_fn(n, |i, j| {
        &x_pow(j, i as i32 - 1) - &x_pow(j, (2 * n - i) as i32)
    }))?;
    let mut checks = Vec::new();
    let mut root = |label: String, target: Monomial| {
        let pass = dn.substitute_one(x1, target).is_zero();
        checks.push(DnCheck { label, pass });
    };
    root("x1 := 1".into(), Monomial::one());
    for j in 2..=n {
        root(format!("x1 := x{j}"), Monomial::var(Var::x(j)));
        root(format!("x1 := x{j}^-1"), Monomial::var_pow(Var::x(j), -1));
    }
    let top = (2 * n - 1) as i32;
    checks.push(DnCheck {
        label: format!("deg_x1 = {top}"),
        pass: dn.degree_in(x1) == Some(top),
    });
    let leading = dn.coefficient_in(x1, top);
    let rest: Vec<Var> = (2..=n).map(Var::x).collect();
    let prod_rest = LaurentPoly::monomial(Monomial::from_pairs(rest.iter().map(|&v| (v, 1))));
    let expected_leading = -(&prod_rest * &weyl_denominator_in(&rest, WeylForm::Determinant)?);
    checks.push(DnCheck {
        label: "leading coefficient".into(),
        pass: leading == expected_leading,
    });
    Ok(DnReport {
        n,
        checks,
        leading,
        expected_leading,
    })
}

/// Substitutes `x_i := q^{exponents[i-1]}`.
pub fn principal_specialization(p: &LaurentPoly, exponents: &[i32]) -> LaurentPoly {
    let map: HashMap<Var, Monomial> = exponents
        .iter()
        .enumerate()
        .map(|(k, &e)| (Var::x(k + 1), Monomial::var_pow(Var::Q, e)))
        .collect();
    p.substitute(&map)
}

/// `(2n-1, 2n-3, ..., 1)`.
pub fn odd_exponents(n: usize) -> Vec<i32> {
    (1..=n).map(|i| (2 * (n - i) + 1) as i32).collect()
}

/// `(n, n-1, ..., 1)`.
pub fn descending_exponents(n: usize) -> Vec<i32> {
    (1..=n).rev().map(|i| i as i32).collect()
}

/// Symmetric plane partitions in an `n x n x m` box:
/// `prod_i (1 - q^{m+2i-1})/(1 - q^{2i-1}) * prod_{i<j} (1 - q^{2(m+i+j-1)})/(1 - q^{2(i+j-1)})`,
/// evaluated as one exact division of the full products.
pub fn macmahon_product(p: BoxParams) -> Result<LaurentPoly> {
    if p.is_degenerate() {
        return Ok(LaurentPoly::one());
    }
    let (m, n) = (p.m as i32, p.n as i32);
    let pairs = || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
    let num = &LaurentPoly::product((1..=n).map(|i| one_minus_q_pow(m + 2 * i - 1)))
        * &LaurentPoly::product(pairs().map(|(i, j)| one_minus_q_pow(2 * (m + i + j - 1))));
    let den = &LaurentPoly::product((1..=n).map(|i| one_minus_q_pow(2 * i - 1)))
        * &LaurentPoly::product(pairs().map(|(i, j)| one_minus_q_pow(2 * (i + j - 1))));
    num.exact_div(&den)
}

/// `prod_{1<=i<=j<=n} (1 - q^{m+i+j-1}) / (1 - q^{i+j-1})` as one exact division.
pub fn gordon_product(p: BoxParams) -> Result<LaurentPoly> {
    if p.is_degenerate() {
        return Ok(LaurentPoly::one());
    }
    let (m, n) = (p.m as i32, p.n as i32);
    let pairs = || (1..=n).flat_map(move |i| (i..=n).map(move |j| (i, j)));
    let num = LaurentPoly::product(pairs().map(|(i, j)| one_minus_q_pow(m + i + j - 1)));
    let den = LaurentPoly::product(pairs().map(|(i, j)| one_minus_q_pow(i + j - 1)));
    num.exact_div(&den)
}
