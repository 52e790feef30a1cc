use std::collections::HashMap;

use num_bigint::BigInt;

use super::lemma::x_product;
use super::perm::{Permutation, SignedSubset};
use crate::combinat::partitions_in_box;
use crate::error::{Error, Result};
use crate::exactalg::{
    determinant, x, x_pow, LaurentPoly, Monomial, PolyMatrix, Var, DEFAULT_MAX_ORDER,
};
use crate::schur::{alternant, box_numerator_det, BoxParams};

fn check_order(n: usize) -> Result<()> {
    if n > DEFAULT_MAX_ORDER {
        Err(Error::OrderTooLarge {
            order: n,
            bound: DEFAULT_MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// `prod_i (1 - x_i) * prod_{i<j} (x_i x_j - 1)`.
fn cleared_denominator(n: usize) -> LaurentPoly {
    let one = LaurentPoly::one();
    let linear = LaurentPoly::product((1..=n).map(|i| &one - &x(i)));
    let pairs = LaurentPoly::product(
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| &(&x(i) * &x(j)) - &one),
    );
    &linear * &pairs
}

/// The theorem with denominators cleared.
///
/// Left: `det(x_i^{j-1} - x_i^{m+2n-j})`.
/// Right: `sum_lambda det(x_i^{lambda_j+n-j}) prod (1 - x_i) prod_{i<j} (x_i x_j - 1)`.
pub fn eq4_sides(p: BoxParams) -> Result<(LaurentPoly, LaurentPoly)> {
    check_order(p.n)?;
    if p.n == 0 {
        return Ok((LaurentPoly::one(), LaurentPoly::one()));
    }
    let lhs = box_numerator_det(p)?;
    let mut alternants = LaurentPoly::zero();
    for lambda in partitions_in_box(p.m, p.n) {
        alternants += &determinant(&alternant(&lambda, p.n))?;
    }
    Ok((lhs, &alternants * &cleared_denominator(p.n)))
}

/// The cleared theorem with both determinants expanded term by term.
///
/// Left: `sum_{sigma,S} (-1)^{inv+|S|} prod_{i in S} x_i^{m+2n-sigma(i)} prod_{i not in S} x_i^{sigma(i)-1}`.
/// Right: `sum_{lambda,sigma} (-1)^{inv} prod_i x_i^{lambda_{sigma(i)}+n-sigma(i)}`
/// times `prod (1 - x_i) prod_{i<j} (x_i x_j - 1)`.
pub fn eq5_sides(p: BoxParams) -> Result<(LaurentPoly, LaurentPoly)> {
    check_order(p.n)?;
    let (m, n) = (p.m as i32, p.n);
    let top = m + 2 * n as i32;
    let perms: Vec<Permutation> = Permutation::all(n).collect();

    let mut lhs = LaurentPoly::zero();
    for sigma in &perms {
        for s in SignedSubset::all(n) {
            let mono = Monomial::from_pairs((1..=n).map(|i| {
                let si = sigma.apply(i) as i32;
                let e = if s.contains(i) { top - si } else { si - 1 };
                (Var::x(i), e)
            }));
            lhs.add_term(mono, BigInt::from(sigma.sign() * s.sign()));
        }
    }

    let mut alternants = LaurentPoly::zero();
    for lambda in partitions_in_box(p.m, n) {
        let parts = lambda.padded(n);
        for sigma in &perms {
            let mono = Monomial::from_pairs((1..=n).map(|i| {
                let si = sigma.apply(i);
                (Var::x(i), (parts[si - 1] as usize + n - si) as i32)
            }));
            alternants.add_term(mono, BigInt::from(sigma.sign()));
        }
    }
    Ok((lhs, &alternants * &cleared_denominator(n)))
}

/// The reduced identity in `x_1..x_n, t_1..t_n`, after `x_i^{m+1} = t_i x_i^{2-2n}`.
///
/// Left: `sum_{sigma,S} (-1)^{inv+|S|} prod_{i in S} t_i x_i^{1-sigma(i)} prod_{i not in S} x_i^{sigma(i)-1}`.
///
/// Right: `sum_k (-1)^{n+k} (1 - x_k) prod_{i != k} (x_i x_k - 1)
/// sum_{sigma',S} (-1)^{inv+|S|} prod_{i in S} t_i x_i^{-sigma'(i)} prod_{i in Sbar} x_i^{sigma'(i)}
/// (1 - prod_{i not in S} t_i x_i^{2-2n}) / (1 - prod_{i not in S} x_i)`,
/// with `sigma'` a bijection `{1..n}\{k} -> {1..n-1}`, `S` a subset of
/// `{1..n}\{k}`, `Sbar` its complement there, and the products in the
/// fraction taken over the complement of `S` in `{1..n}` (so including `k`).
///
/// The fraction depends on `S` only, so the `k`-terms sharing an `S` are
/// summed first. That partial sum must be divisible by `1 - prod_{i not in S} x_i`;
/// the quotient is computed with [`LaurentPoly::exact_div`] and then
/// multiplied by the fraction's numerator, so no rational function is formed.
pub fn eq6_sides(n: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    check_order(n)?;
    let one = LaurentPoly::one();
    let shrink = 2 - 2 * n as i32;

    let mut lhs = LaurentPoly::zero();
    for sigma in Permutation::all(n) {
        for s in SignedSubset::all(n) {
            let mono = Monomial::from_pairs((1..=n).flat_map(|i| {
                let si = sigma.apply(i) as i32;
                if s.contains(i) {
                    [(Var::x(i), 1 - si), (Var::t(i), 1)]
                } else {
                    [(Var::x(i), si - 1), (Var::t(i), 0)]
                }
            }));
            lhs.add_term(mono, BigInt::from(sigma.sign() * s.sign()));
        }
    }

    let inner_perms: Vec<Permutation> = Permutation::all(n.saturating_sub(1)).collect();
    let mut rhs = LaurentPoly::zero();
    for s in SignedSubset::all(n).filter(|s| s.is_proper()) {
        let mut partial = LaurentPoly::zero();
        for k in s.complement() {
            let domain: Vec<usize> = (1..=n).filter(|&i| i != k).collect();
            let mut inner = LaurentPoly::zero();
            for pi in &inner_perms {
                let mono = Monomial::from_pairs(domain.iter().enumerate().flat_map(|(a, &i)| {
                    let si = pi.images()[a] as i32;
                    if s.contains(i) {
                        [(Var::x(i), -si), (Var::t(i), 1)]
                    } else {
                        [(Var::x(i), si), (Var::t(i), 0)]
                    }
                }));
                inner.add_term(mono, BigInt::from(pi.sign() * s.sign()));
            }
            let mut prefactor = &one - &x(k);
            for &i in &domain {
                prefactor = &prefactor * &(&(&x(i) * &x(k)) - &one);
            }
            if (n + k) % 2 == 1 {
                prefactor = -prefactor;
            }
            partial += &(&prefactor * &inner);
        }
        let outside: Vec<usize> = s.complement().collect();
        let geometric_den = &one - &LaurentPoly::monomial(x_product(outside.iter().copied()));
        let telescope_num = &one
            - &LaurentPoly::monomial(Monomial::from_pairs(
                outside
                    .iter()
                    .flat_map(|&i| [(Var::t(i), 1), (Var::x(i), shrink)]),
            ));
        let quotient = partial.exact_div(&geometric_den)?;
        rhs += &(&telescope_num * &quotient);
    }
    Ok((lhs, rhs))
}

/// `t_i := x_i^{m+2n-1}`, undoing the reduction for a concrete `m`.
pub fn t_substitution(p: BoxParams) -> HashMap<Var, Monomial> {
    let e = p.m as i32 + 2 * p.n as i32 - 1;
    (1..=p.n)
        .map(|i| (Var::t(i), Monomial::var_pow(Var::x(i), e)))
        .collect()
}

/// Both sides of [`eq6_sides`] with `t_i := x_i^{m+2n-1}` applied.
pub fn eq6_specialized(p: BoxParams) -> Result<(LaurentPoly, LaurentPoly)> {
    let (l, r) = eq6_sides(p.n)?;
    let map = t_substitution(p);
    Ok((l.substitute(&map), r.substitute(&map)))
}

/// `det(x_i^{j+1-2n} - x_i^{1-j})`, which vanishes identically.
pub fn vanishing_det(n: usize) -> Result<LaurentPoly> {
    let n_i = n as i32;
    determinant(&PolyMatrix::from_fn(n, |i, j| {
        let j = j as i32;
        &x_pow(i, j + 1 - 2 * n_i) - &x_pow(i, 1 - j)
    }))
}
