//! Criterion benchmarks for the `evenzeta` evaluation routes. See `benches/routes.rs`.
