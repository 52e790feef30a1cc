use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Largest order expanded by [`determinant`]; the expansion has `n!` terms.
pub const DEFAULT_MAX_ORDER: usize = 8;

/// Square matrix of Laurent polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    order: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    /// Builds an `order x order` matrix from `f(i, j)` with 1-based indices.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> PolyMatrix {
        assert!(order >= 1, "matrix order must be positive");
        let mut entries = Vec::with_capacity(order * order);
        for i in 1..=order {
            for j in 1..=order {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<PolyMatrix> {
        let order = rows.len();
        if order == 0 || rows.iter().any(|r| r.len() != order) {
            return Err(Error::MalformedInput(
                "matrix must be square with order >= 1".into(),
            ));
        }
        Ok(PolyMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[(i - 1) * self.order + (j - 1)]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.order;
        for j in 0..n {
            self.entries.swap((a - 1) * n + j, (b - 1) * n + j);
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[(i - 1) * self.order..i * self.order]
    }

    pub fn set_row(&mut self, i: usize, row: Vec<LaurentPoly>) {
        assert_eq!(row.len(), self.order);
        let n = self.order;
        for (j, p) in row.into_iter().enumerate() {
            self.entries[(i - 1) * n + j] = p;
        }
    }
}

/// Determinant by signed permutation expansion, bounded by [`DEFAULT_MAX_ORDER`].
pub fn determinant(m: &PolyMatrix) -> Result<LaurentPoly> {
    determinant_bounded(m, DEFAULT_MAX_ORDER)
}

/// `sum over sigma of (-1)^inv(sigma) * prod_i M[i][sigma(i)]`.
///
/// Permutations are visited depth-first in lexicographic order; partial
/// products are shared between permutations with a common prefix and branches
/// through a zero entry are skipped. The sign is tracked as the inversion
/// count accumulated while choosing each column.
pub fn determinant_bounded(m: &PolyMatrix, max_order: usize) -> Result<LaurentPoly> {
    let n = m.order();
    if n > max_order {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: max_order,
        });
    }
    let mut used = vec![false; n];
    let mut acc = LaurentPoly::zero();
    expand(m, 0, &mut used, 0, &LaurentPoly::one(), &mut acc);
    Ok(acc)
}

fn expand(
    m: &PolyMatrix,
    row: usize,
    used: &mut [bool],
    inversions: usize,
    prefix: &LaurentPoly,
    acc: &mut LaurentPoly,
) {
    let n = m.order();
    if row == n {
        if inversions.is_multiple_of(2) {
            *acc += prefix;
        } else {
            *acc -= prefix;
        }
        return;
    }
    for col in 0..n {
        if used[col] {
            continue;
        }
        let entry = m.get(row + 1, col + 1);
        if entry.is_zero() {
            continue;
        }
        // columns already used that are larger than `col` form inversions with it
        let new_inv = used[col + 1..].iter().filter(|&&u| u).count();
        used[col] = true;
        let next = prefix * entry;
        expand(m, row + 1, used, inversions + new_inv, &next, acc);
        used[col] = false;
    }
}
