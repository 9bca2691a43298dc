//! Benchmark-only crate; the measurements live in `benches/pipelines.rs`.
