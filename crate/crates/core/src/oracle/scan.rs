// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;

use super::distance::distance_on_ancilla_zero;
use super::layout::RegisterLayout;
use super::realize::{exact_evolution, realize_circuit};
use crate::error::Result;
use crate::passes::{compile_to_native, trotterize, CompileConfig};
use crate::symbolic::OperatorPoly;

/// Compiles `exp(-i t h)` with each step count in `steps` and reports the
/// oracle distance to the exact evolution, in input order.
pub fn trotter_error_scan(
    h: &OperatorPoly,
    t: f64,
    steps: &[usize],
    order: u32,
    cutoff: usize,
) -> Result<Vec<(usize, f64)>> {
    let system = RegisterLayout::from_registry(&h.registry, cutoff)?;
    let exact = exact_evolution(h, t, &system)?;
    let config = CompileConfig {
        cutoff: Some(cutoff),
        ..CompileConfig::default()
    };
    steps
        .par_iter()
        .map(|&n| {
            let plan = trotterize(h, t, n, order, Some(cutoff))?;
            let compiled = compile_to_native(&plan, &config)?;
            let layout = RegisterLayout::from_registry(&compiled.circuit.registry, cutoff)?;
            let u = realize_circuit(&compiled.circuit, &layout)?;
            let d = distance_on_ancilla_zero(&u, &compiled.circuit.registry.ancillas, &exact)?;
            Ok((n, d))
        })
        .collect()
}
