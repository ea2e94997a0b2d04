//! Benchmark host crate; see `benches/contraction.rs`.
