//! Symbolic verifiers for the lemma, the ratio `F`, the cleared and expanded
//! forms of the box-sum theorem, the reduced identity in `t`, and the
//! vanishing determinant.

mod expansions;
mod lemma;
mod perm;

use std::time::Duration;

use serde::ser::{Serialize, SerializeMap, Serializer};

pub use expansions::{
    eq4_sides, eq5_sides, eq6_sides, eq6_specialized, t_substitution, vanishing_det,
};
pub use lemma::{f_boundary, f_function, lemma_sides, FBoundary};
pub use perm::{Permutation, SignedSubset};

use crate::exactalg::LaurentPoly;

/// Outcome of one named check at one parameter point.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub identity: String,
    /// `None` for checks that depend on `n` only.
    pub m: Option<u32>,
    pub n: usize,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub pass: bool,
    pub elapsed: Duration,
    /// Labels of failed structural sub-checks, if any.
    pub failures: Vec<String>,
}

impl CheckResult {
    /// `pass` is set from the canonical equality of the two sides.
    pub fn from_sides(
        identity: impl Into<String>,
        m: Option<u32>,
        n: usize,
        lhs: LaurentPoly,
        rhs: LaurentPoly,
        elapsed: Duration,
    ) -> CheckResult {
        let pass = lhs == rhs;
        CheckResult {
            identity: identity.into(),
            m,
            n,
            lhs,
            rhs,
            pass,
            elapsed,
            failures: Vec::new(),
        }
    }

    /// Adds a failed structural sub-check; this also fails the result.
    pub fn fail_with(&mut self, label: impl Into<String>) {
        self.failures.push(label.into());
        self.pass = false;
    }

    pub fn elapsed_ms(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1e3
    }
}

/// `{"identity", "m", "n", "pass", "elapsed_ms"}`; failed results also carry
/// `lhs`, `rhs` (canonical text) and `failures`.
impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("identity", &self.identity)?;
        map.serialize_entry("m", &self.m)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("pass", &self.pass)?;
        map.serialize_entry("elapsed_ms", &self.elapsed_ms())?;
        if !self.pass {
            map.serialize_entry("lhs", &self.lhs.to_string())?;
            map.serialize_entry("rhs", &self.rhs.to_string())?;
            if !self.failures.is_empty() {
                map.serialize_entry("failures", &self.failures)?;
            }
        }
        map.end()
    }
}
