//! Benchmark crate; see `benches/sweeps.rs`.
