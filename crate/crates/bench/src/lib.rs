//! Criterion benchmarks for the determinant expansion, both sides of the
//! box-sum theorem, the lemma and the reduced identity, and enumeration.
//! Run with `cargo bench -p symplane-bench`.
