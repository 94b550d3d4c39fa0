//! Criterion benchmarks for the tensor engine live in `benches/`.
