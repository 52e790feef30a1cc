#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use symplane::{LaurentPoly, Monomial, Var};

/// Value of `p` with `x_i := point[i - 1]` and `q := q_value`.
pub fn eval(p: &LaurentPoly, point: &[BigRational], q_value: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for (m, c) in p.terms() {
        let mut v = BigRational::from_integer(c.clone());
        for (var, e) in m.iter() {
            let base = match var {
                Var::Q => q_value.clone(),
                Var::X(i) => point[i as usize - 1].clone(),
                Var::T(_) => panic!("t variables are not evaluated"),
            };
            v *= pow(&base, e);
        }
        total += v;
    }
    total
}

pub fn pow(base: &BigRational, e: i32) -> BigRational {
    let mut r = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        r *= base;
    }
    if e < 0 {
        r.recip()
    } else {
        r
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Determinant by Gaussian elimination over the rationals.
pub fn numeric_det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let factor = &a[r][col] / &p;
            if factor.is_zero() {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &factor * src;
            }
        }
    }
    det
}

/// Sample points with distinct coordinates above 1, so no denominator in the
/// identities (`x_i - x_j`, `1 - x_i`, `x_i x_j - 1`) vanishes.
pub fn sample_points(n: usize, count: usize) -> Vec<Vec<BigRational>> {
    (0..count)
        .map(|s| {
            (0..n)
                .map(|i| rat((2 * i + 3 + s) as i64, 1 + (s % 2) as i64))
                .collect()
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn var_strategy() -> impl Strategy<Value = Var> {
    prop_oneof![
        Just(Var::Q),
        (1usize..=2).prop_map(Var::x),
        (1usize..=2).prop_map(Var::t),
    ]
}

pub fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var_strategy(), -3i32..=3), 0..4).prop_map(Monomial::from_pairs)
}

/// Up to 5 variables and 20 terms with small coefficients.
pub fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial_strategy(), -20i64..=20), 0..=20).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    })
}

pub fn nonzero_poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

/// Small polynomials for determinant entries.
pub fn entry_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((monomial_strategy(), -5i64..=5), 0..=3).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    })
}

pub fn matrix3_strategy() -> impl Strategy<Value = Vec<Vec<LaurentPoly>>> {
    prop::collection::vec(prop::collection::vec(entry_strategy(), 3), 3)
}

/// A substitution of `x_1, x_2, q` by single-variable powers or 1.
pub fn assignment_strategy() -> impl Strategy<Value = Vec<(Var, Monomial)>> {
    let target = prop_oneof![
        Just(Monomial::one()),
        (var_strategy(), -2i32..=2).prop_map(|(v, e)| Monomial::var_pow(v, e)),
    ];
    prop::collection::vec((var_strategy(), target), 0..=3)
}
