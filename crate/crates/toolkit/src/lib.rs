//! Tooling around the `mwis-core` solvers: a plain-text graph file format,
//! a seeded random instance generator, and a benchmark harness that compares
//! the eight algorithms on accuracy and runtime.

pub mod bench;
pub mod format;
pub mod generate;

pub use bench::{run_benchmark, weight_error_rate, BenchError, BenchRecord, records_to_csv};
pub use format::{parse_graph, serialize_graph, FormatError};
pub use generate::{generate_graph, standard_suite, GeneratorError, GeneratorSpec, SUITE_SIZES};
