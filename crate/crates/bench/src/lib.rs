//! Criterion benchmarks for `minorbound-core`; see `benches/`.
