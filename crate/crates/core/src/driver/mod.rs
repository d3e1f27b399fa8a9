// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Front end: Hamiltonian files, the compile pipeline and benchmarks.

mod bench;
pub mod hamfile;
mod pipeline;

pub use bench::{
    fit_power_law, run_bench, BenchFits, BenchRow, BenchTable, FitResult, CSV_HEADER, DEFAULT_SIZES,
};
pub use hamfile::{format_hamiltonian, parse_hamiltonian_file};
pub use pipeline::{
    compile_hamiltonian, hamiltonian_digest, prepare_hamiltonian, verify_compiled,
    verify_threshold, CompileOutcome, PipelineOptions, SpotCheck, VerifyReport,
};
