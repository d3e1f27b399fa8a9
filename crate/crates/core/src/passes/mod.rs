// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Rewrites from Hamiltonian exponentials to native-generator exponentials.

mod bch;
mod density;
mod driver;
mod node;
mod pauli;
mod trotter;

pub use bch::{
    bch_expand, multilinear_modes, quadrature_bch, quadrature_decomposition, trotter_split,
};
pub use density::{bit_count, density_factorize, pi_vector, split_density};
pub use driver::{compile_to_native, rank, CompileConfig, Compiled};
pub use node::{total_budget, AncillaRecord, BudgetEntry, CompilationPlan, PlanStep, UnitaryNode};
pub use pauli::{pauli_factorize, pauli_shape};
pub use trotter::{commutator_bound, hermitian_groups, trotterize};
