//! Criterion benchmarks for gwalk-core live under `benches/`.
