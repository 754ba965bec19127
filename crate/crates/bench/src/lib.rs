//! Criterion benchmarks for `mahonian-core`; see `benches/`.
