//! Criterion benchmarks for `hatlab-core`; see `benches/hatlab.rs`.
