use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Partition {
        Partition::default()
    }

    /// Validating constructor. Trailing zeros are accepted and stripped.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedInput(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::MalformedInput(
                "zero part before a positive part".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `lambda_i` with 1-based index; zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn fits_in_box(&self, m: u32, n: usize) -> bool {
        self.len() <= n && self.parts.first().is_none_or(|&p| p <= m)
    }

    /// The parts padded with zeros to length `n` (which must be `>= len`).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.len(), "cannot pad {self} to {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Size of the largest square `d x d` inside the diagram.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions with at most `n` parts, each at most `m`.
///
/// There are `binomial(m + n, n)` of them. Order: by first part, then
/// recursively by the remaining parts, smallest first.
pub fn partitions_in_box(m: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    box_rec(m, n, &mut buf, &mut out);
    out
}

fn box_rec(bound: u32, remaining: usize, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: buf.clone() });
    if remaining == 0 {
        return;
    }
    for p in 1..=bound {
        buf.push(p);
        box_rec(p, remaining - 1, buf, out);
        buf.pop();
    }
}
