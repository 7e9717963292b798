//! Benchmark-only crate: see `benches/engine.rs`. Nothing is exported; the
//! package exists so the measurement harness has its own dependency set.
