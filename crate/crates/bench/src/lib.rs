//! Benchmarks for the quotient library live in `benches/`.
