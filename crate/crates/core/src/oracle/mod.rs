// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense truncated-Fock realizations used to check the compiler.

mod distance;
pub mod dump;
mod layout;
mod realize;
mod scan;

pub use distance::{
    ancilla_leakage, ancilla_zero_indices, distance_on_ancilla_zero, distance_on_low_fock,
    matrix_distance, restrict, unitary_distance,
};
pub use layout::{RegisterLayout, DIM_CAP};
pub use realize::{
    apply_evolution, apply_gate, exact_evolution, hermitian_expm, local_gate_matrix,
    realize_circuit, realize_gate, realize_plan, realize_poly, CMatrix, DenseOperator,
};
pub use scan::trotter_error_scan;
