use std::collections::HashMap;

use crate::error::Result;
use crate::exactalg::{x, x_pow, LaurentPoly, Monomial, Var};

/// `prod_{i<j} (x_j - x_i)` over the given indices (ascending).
pub(crate) fn ascending_vandermonde(indices: &[usize]) -> LaurentPoly {
    LaurentPoly::product(
        indices
            .iter()
            .enumerate()
            .flat_map(|(a, &i)| indices[a + 1..].iter().map(move |&j| &x(j) - &x(i))),
    )
}

pub(crate) fn x_product(indices: impl IntoIterator<Item = usize>) -> Monomial {
    Monomial::from_pairs(indices.into_iter().map(|i| (Var::x(i), 1)))
}

/// Both sides of the lemma in `x_1..x_n`.
///
/// Left: `x_1...x_n sum_k (-1)^{k-1} (1 - x_k) x_k^{-1} prod_{i != k} (1 - x_i x_k)
/// prod_{i<j; i,j != k} (x_j - x_i)`.
/// Right: `(1 - x_1...x_n) prod_{i<j} (x_j - x_i)`.
pub fn lemma_sides(n: usize) -> (LaurentPoly, LaurentPoly) {
    let one = LaurentPoly::one();
    let all = x_product(1..=n);
    let mut sum = LaurentPoly::zero();
    for k in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&i| i != k).collect();
        let mut term = (&one - &x(k)) * x_pow(k, -1);
        term = &term * &LaurentPoly::product(others.iter().map(|&i| &one - &(&x(i) * &x(k))));
        term = &term * &ascending_vandermonde(&others);
        if k % 2 == 1 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    let lhs = sum.mul_monomial(&all);
    let indices: Vec<usize> = (1..=n).collect();
    let rhs = (&one - &LaurentPoly::monomial(all)) * ascending_vandermonde(&indices);
    (lhs, rhs)
}

/// `F(x_1..x_n)`: the lemma's left side divided by `prod_{i<j} (x_j - x_i)`.
/// `F` for zero variables is the empty sum, 0.
pub fn f_function(n: usize) -> Result<LaurentPoly> {
    let (lhs, _) = lemma_sides(n);
    let indices: Vec<usize> = (1..=n).collect();
    lhs.exact_div(&ascending_vandermonde(&indices))
}

/// Boundary values of `F`: `F(0, x_2..) = 1` and `F(1, x_2..) = F(x_2..)`.
#[derive(Clone, Debug)]
pub struct FBoundary {
    pub at_zero: LaurentPoly,
    pub at_one: LaurentPoly,
    /// `F` in `n - 1` variables, renamed to `x_2..x_n`.
    pub shifted_smaller: LaurentPoly,
}

impl FBoundary {
    pub fn pass(&self) -> bool {
        self.at_zero.is_one() && self.at_one == self.shifted_smaller
    }
}

pub fn f_boundary(n: usize) -> Result<FBoundary> {
    assert!(n >= 1);
    let f = f_function(n)?;
    let at_zero = f.set_zero(Var::x(1))?;
    let at_one = f.substitute_one(Var::x(1), Monomial::one());
    let shift: HashMap<Var, Monomial> = (1..n)
        .map(|i| (Var::x(i), Monomial::var(Var::x(i + 1))))
        .collect();
    let shifted_smaller = f_function(n - 1)?.substitute(&shift);
    Ok(FBoundary {
        at_zero,
        at_one,
        shifted_smaller,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn lemma_one_and_two() {
        let (l, r) = lemma_sides(1);
        assert_eq!(l, poly("1 - x1"));
        assert_eq!(r, poly("1 - x1"));
        let want = poly("1 - x1*x2") * poly("x2 - x1");
        let (l, r) = lemma_sides(2);
        assert_eq!(l, want);
        assert_eq!(r, want);
    }

    #[test]
    fn lemma_three() {
        let (l, r) = lemma_sides(3);
        assert_eq!(l, r);
    }

    #[test]
    fn f_small() {
        assert!(f_function(0).unwrap().is_zero());
        assert_eq!(f_function(1).unwrap(), poly("1 - x1"));
        assert_eq!(f_function(2).unwrap(), poly("1 - x1*x2"));
        let b = f_boundary(3).unwrap();
        assert!(b.at_zero.is_one());
        assert_eq!(b.at_one, poly("1 - x2*x3"));
        assert!(b.pass());
        assert!(f_boundary(1).unwrap().pass());
    }
}
