//! Criterion benchmarks for the `cfcolor` algorithms; see `benches/`.
