//! Criterion benchmarks for `tilt-core`; see `benches/`.
