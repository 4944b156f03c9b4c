//! Criterion benchmarks for `affine-eulerian`; see `benches/eulerian.rs`.
