use super::partition::Partition;
use crate::exactalg::{Monomial, Var};

/// A semistandard filling of a Young diagram with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Rows weakly increase, columns strictly increase, row lengths match the
    /// shape and entries lie in `1..=n`.
    pub fn is_semistandard(&self, n: u32) -> bool {
        if self.rows.len() != self.shape.len() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.part(r + 1) as usize {
                return false;
            }
            if row.iter().any(|&e| e < 1 || e > n) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0
                && row
                    .iter()
                    .zip(&self.rows[r - 1])
                    .any(|(&below, &above)| below <= above)
            {
                return false;
            }
        }
        true
    }

    /// `prod x_entry` over all cells.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(self.rows.iter().flatten().map(|&e| (Var::x(e as usize), 1)))
    }
}

/// Visits every semistandard tableau of `shape` with entries in `1..=n`.
pub fn for_each_ssyt(shape: &Partition, n: u32, mut visit: impl FnMut(&Tableau)) {
    if shape.len() > n as usize {
        return;
    }
    let mut t = Tableau {
        shape: shape.clone(),
        rows: shape.parts().iter().map(|&p| vec![0; p as usize]).collect(),
    };
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    ssyt_rec(&cells, 0, n, &mut t, &mut visit);
}

fn ssyt_rec(
    cells: &[(usize, usize)],
    k: usize,
    n: u32,
    t: &mut Tableau,
    visit: &mut impl FnMut(&Tableau),
) {
    let Some(&(r, c)) = cells.get(k) else {
        visit(t);
        return;
    };
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(t.rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(t.rows[r - 1][c] + 1);
    }
    // leave room for the strictly increasing cells below in this column
    let below = t
        .rows
        .iter()
        .skip(r + 1)
        .filter(|row| row.len() > c)
        .count() as u32;
    let hi = n.saturating_sub(below);
    for e in lo..=hi {
        t.rows[r][c] = e;
        ssyt_rec(cells, k + 1, n, t, visit);
    }
}

pub fn ssyt(shape: &Partition, n: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, n, |t| out.push(t.clone()));
    out
}
