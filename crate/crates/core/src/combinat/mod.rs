//! Partitions in a box, symmetric and column-strict plane partitions,
//! semistandard tableaux, the fold bijection, and brute-force generating
//! functions.

mod partition;
mod plane;
mod tableau;

use std::collections::BTreeMap;

use num_bigint::BigInt;

pub use partition::{partitions_in_box, Partition};
pub use plane::{
    column_strict_odd_pps, fold, for_each_column_strict_odd, for_each_symmetric_plane_partition,
    symmetric_plane_partitions, unfold, ColumnStrictPP, PlanePartition,
};
pub use tableau::{for_each_ssyt, ssyt, Tableau};

use crate::exactalg::{LaurentPoly, Monomial, Var};

/// Objects counted by a generating function.
pub trait Weighted {
    fn weight(&self) -> u64;
}

impl Weighted for Partition {
    fn weight(&self) -> u64 {
        self.size()
    }
}

impl<T: Weighted> Weighted for &T {
    fn weight(&self) -> u64 {
        (**self).weight()
    }
}

/// `sum q^weight` over the objects; the empty stream gives 0.
pub fn generating_function<I>(objects: I) -> LaurentPoly
where
    I: IntoIterator,
    I::Item: Weighted,
{
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for o in objects {
        *counts.entry(o.weight()).or_default() += 1;
    }
    weights_to_poly(counts)
}

/// Generating function from a weight histogram.
pub fn weights_to_poly(counts: BTreeMap<u64, u64>) -> LaurentPoly {
    LaurentPoly::from_terms(counts.into_iter().map(|(w, c)| {
        let e = i32::try_from(w).expect("weight fits in an exponent");
        (Monomial::var_pow(Var::Q, e), BigInt::from(c))
    }))
}

/// Generating function of the symmetric plane partitions in an `n x n x m`
/// box, streamed without materializing the objects.
pub fn symmetric_pp_generating_function(n: usize, m: u32) -> LaurentPoly {
    let mut counts = BTreeMap::new();
    for_each_symmetric_plane_partition(n, m, |pp| *counts.entry(pp.weight()).or_default() += 1);
    weights_to_poly(counts)
}

pub fn column_strict_generating_function(n: usize, m: usize) -> LaurentPoly {
    let mut counts = BTreeMap::new();
    for_each_column_strict_odd(n, m, |cs| *counts.entry(cs.weight()).or_default() += 1);
    weights_to_poly(counts)
}
