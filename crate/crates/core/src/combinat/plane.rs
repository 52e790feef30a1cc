use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::Weighted;
use crate::error::{Error, Result};

/// A plane partition in an `n x n` base, given by its column heights.
///
/// `heights[i][j]` (0-based storage, 1-based in docs) is the number of lattice
/// points stacked over `(i, j)`. Serializes as the bare JSON matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlanePartition {
    pub heights: Vec<Vec<u32>>,
}

impl PlanePartition {
    /// Validating constructor: square and weakly decreasing along rows and columns.
    pub fn new(heights: Vec<Vec<u32>>) -> Result<PlanePartition> {
        let pp = PlanePartition { heights };
        pp.validate()?;
        Ok(pp)
    }

    pub fn empty(n: usize) -> PlanePartition {
        PlanePartition {
            heights: vec![vec![0; n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.heights.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.heights.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedInput("height matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let h = self.heights[i][j];
                if (i > 0 && h > self.heights[i - 1][j]) || (j > 0 && h > self.heights[i][j - 1]) {
                    return Err(Error::MalformedInput(format!(
                        "heights increase at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..i).all(|j| self.heights[i][j] == self.heights[j][i]))
    }

    pub fn max_height(&self) -> u32 {
        self.heights
            .first()
            .and_then(|r| r.first())
            .copied()
            .unwrap_or(0)
    }

    pub fn is_bounded(&self, m: u32) -> bool {
        self.heights.iter().flatten().all(|&h| h <= m)
    }

    /// Number of lattice points.
    pub fn weight(&self) -> u64 {
        self.heights.iter().flatten().map(|&h| h as u64).sum()
    }

    /// The horizontal slice at level `l >= 1`: row `i` has one cell per `j`
    /// with `heights[i][j] >= l`.
    pub fn slice(&self, level: u32) -> Partition {
        let parts = self
            .heights
            .iter()
            .map(|row| row.iter().filter(|&&h| h >= level).count() as u32)
            .collect();
        Partition::new(parts).expect("rows of a valid plane partition decrease")
    }
}

impl Weighted for PlanePartition {
    fn weight(&self) -> u64 {
        PlanePartition::weight(self)
    }
}

/// A column-strict plane partition whose nonempty columns have odd height.
///
/// `heights[i][j]` is the height of the column at x-position `i + 1` and
/// y-position `j + 1`, for `i < n` and `j < m`. Heights are odd and at most
/// `2n - 1`, weakly decreasing in `j`, and strictly decreasing in `i` among the
/// nonempty columns (which form a prefix in `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnStrictPP {
    pub n: usize,
    pub m: usize,
    pub heights: Vec<Vec<u32>>,
}

impl ColumnStrictPP {
    pub fn new(n: usize, m: usize, heights: Vec<Vec<u32>>) -> Result<ColumnStrictPP> {
        let cs = ColumnStrictPP { n, m, heights };
        cs.validate()?;
        Ok(cs)
    }

    pub fn empty(n: usize, m: usize) -> ColumnStrictPP {
        ColumnStrictPP {
            n,
            m,
            heights: vec![vec![0; m]; n],
        }
    }

    pub fn height(&self, i: usize, j: usize) -> u32 {
        self.heights[i - 1][j - 1]
    }

    pub fn weight(&self) -> u64 {
        self.heights.iter().flatten().map(|&h| h as u64).sum()
    }

    /// Nonzero heights at y-position `j` (1-based), in x order.
    pub fn hooks_at(&self, j: usize) -> Vec<u32> {
        self.heights
            .iter()
            .map(|row| row[j - 1])
            .take_while(|&h| h > 0)
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedInput(msg));
        if self.heights.len() != self.n || self.heights.iter().any(|r| r.len() != self.m) {
            return bad(format!("expected a {} x {} height matrix", self.n, self.m));
        }
        let cap = (2 * self.n as u32).saturating_sub(1);
        for i in 0..self.n {
            for j in 0..self.m {
                let h = self.heights[i][j];
                if h == 0 {
                    continue;
                }
                let at = format!("({}, {})", i + 1, j + 1);
                if h.is_multiple_of(2) {
                    return bad(format!("even column height {h} at {at}"));
                }
                if h > cap {
                    return bad(format!("column height {h} exceeds {cap} at {at}"));
                }
                if j > 0 && h > self.heights[i][j - 1] {
                    return bad(format!("heights increase along y at {at}"));
                }
                if i > 0 && self.heights[i - 1][j] <= h {
                    return bad(format!("heights not strictly decreasing along x at {at}"));
                }
            }
        }
        Ok(())
    }

    /// JSON object `{"i,j": height}` over the nonempty columns, 1-based.
    pub fn to_json_map(&self) -> BTreeMap<String, u32> {
        let mut map = BTreeMap::new();
        for (i, row) in self.heights.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                if h > 0 {
                    map.insert(format!("{},{}", i + 1, j + 1), h);
                }
            }
        }
        map
    }

    pub fn from_json_map(
        n: usize,
        m: usize,
        map: &BTreeMap<String, u32>,
    ) -> Result<ColumnStrictPP> {
        let mut heights = vec![vec![0; m]; n];
        for (key, &h) in map {
            let parsed = key.split_once(',').and_then(|(a, b)| {
                Some((
                    a.trim().parse::<usize>().ok()?,
                    b.trim().parse::<usize>().ok()?,
                ))
            });
            match parsed {
                Some((i, j)) if (1..=n).contains(&i) && (1..=m).contains(&j) => {
                    heights[i - 1][j - 1] = h
                }
                _ => return Err(Error::MalformedInput(format!("bad position key `{key}`"))),
            }
        }
        ColumnStrictPP::new(n, m, heights)
    }
}

impl Weighted for ColumnStrictPP {
    fn weight(&self) -> u64 {
        ColumnStrictPP::weight(self)
    }
}

/// Visits every symmetric plane partition with base `n x n` and heights at
/// most `m`, each exactly once.
///
/// Only the upper triangle is chosen freely; each cell is bounded by its left
/// and upper neighbours, which covers the lower triangle by symmetry.
pub fn for_each_symmetric_plane_partition(
    n: usize,
    m: u32,
    mut visit: impl FnMut(&PlanePartition),
) {
    let mut pp = PlanePartition::empty(n);
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    symmetric_rec(&cells, 0, m, &mut pp, &mut visit);
}

fn symmetric_rec(
    cells: &[(usize, usize)],
    k: usize,
    m: u32,
    pp: &mut PlanePartition,
    visit: &mut impl FnMut(&PlanePartition),
) {
    let Some(&(i, j)) = cells.get(k) else {
        visit(pp);
        return;
    };
    let mut cap = m;
    if j > 0 {
        cap = cap.min(pp.heights[i][j - 1]);
    }
    if i > 0 {
        cap = cap.min(pp.heights[i - 1][j]);
    }
    for h in 0..=cap {
        pp.heights[i][j] = h;
        pp.heights[j][i] = h;
        symmetric_rec(cells, k + 1, m, pp, visit);
    }
    pp.heights[i][j] = 0;
    pp.heights[j][i] = 0;
}

pub fn symmetric_plane_partitions(n: usize, m: u32) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    for_each_symmetric_plane_partition(n, m, |pp| out.push(pp.clone()));
    out
}

/// Visits every column-strict plane partition with odd column heights at most
/// `2n - 1` and y-positions `1..=m`.
///
/// Generated level by level in y: each level is a strictly decreasing odd
/// sequence bounded entrywise by the level before it.
pub fn for_each_column_strict_odd(n: usize, m: usize, mut visit: impl FnMut(&ColumnStrictPP)) {
    let mut cs = ColumnStrictPP::empty(n, m);
    column_rec(0, 0, &mut cs, &mut visit);
}

fn column_rec(
    j: usize,
    i: usize,
    cs: &mut ColumnStrictPP,
    visit: &mut impl FnMut(&ColumnStrictPP),
) {
    if j == cs.m {
        visit(cs);
        return;
    }
    // leave (i, j) and everything after it in this level empty
    column_rec(j + 1, 0, cs, visit);
    if i == cs.n {
        return;
    }
    let mut cap = 2 * cs.n as u32 - 1;
    if j > 0 {
        cap = cap.min(cs.heights[i][j - 1]);
    }
    if i > 0 {
        cap = cap.min(cs.heights[i - 1][j].saturating_sub(2));
    }
    let mut h = 1;
    while h <= cap {
        cs.heights[i][j] = h;
        column_rec(j, i + 1, cs, visit);
        h += 2;
    }
    cs.heights[i][j] = 0;
}

pub fn column_strict_odd_pps(n: usize, m: usize) -> Vec<ColumnStrictPP> {
    let mut out = Vec::new();
    for_each_column_strict_odd(n, m, |cs| out.push(cs.clone()));
    out
}

/// Symmetric plane partition to column-strict odd plane partition.
///
/// Level `l` of `sp` is a self-conjugate diagram; its principal hook lengths
/// `2 (lambda_d - d) + 1`, `d = 1..durfee`, become the column heights at
/// `(d, l)`. Weight is preserved because a self-conjugate diagram is the
/// disjoint union of its principal hooks.
pub fn fold(sp: &PlanePartition, m: u32) -> Result<ColumnStrictPP> {
    sp.validate()?;
    if !sp.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !sp.is_bounded(m) {
        return Err(Error::MalformedInput(format!(
            "heights exceed the bound {m}"
        )));
    }
    let n = sp.n();
    let mut cs = ColumnStrictPP::empty(n, m as usize);
    for level in 1..=m {
        let slice = sp.slice(level);
        for d in 1..=slice.durfee_size() {
            cs.heights[d - 1][level as usize - 1] = 2 * (slice.part(d) - d as u32) + 1;
        }
    }
    Ok(cs)
}

/// Inverse of [`fold`].
///
/// At each level the hooks `h_1 > h_2 > ...` give the first rows of a
/// self-conjugate diagram, `lambda_d = d + (h_d - 1) / 2`; the remaining rows
/// follow from self-conjugacy. Heights are then the number of levels whose
/// diagram contains each cell.
pub fn unfold(cs: &ColumnStrictPP) -> Result<PlanePartition> {
    cs.validate()?;
    let n = cs.n;
    let mut pp = PlanePartition::empty(n);
    for j in 1..=cs.m {
        let hooks = cs.hooks_at(j);
        let mut rows: Vec<usize> = hooks
            .iter()
            .enumerate()
            .map(|(k, &h)| k + 1 + (h as usize - 1) / 2)
            .collect();
        let durfee = rows.len();
        for i in durfee + 1..=n {
            let len = rows[..durfee].iter().filter(|&&r| r >= i).count();
            if len == 0 {
                break;
            }
            rows.push(len);
        }
        for (i, &len) in rows.iter().enumerate() {
            if len > n {
                return Err(Error::MalformedInput(format!(
                    "level {j} does not fit in the base"
                )));
            }
            for cell in &mut pp.heights[i][..len] {
                *cell += 1;
            }
        }
    }
    pp.validate()?;
    Ok(pp)
}
