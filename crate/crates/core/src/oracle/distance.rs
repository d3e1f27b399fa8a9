// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use num_complex::Complex64;

use super::realize::{CMatrix, DenseOperator};
use crate::error::{Error, Result};

/// `min_φ ‖U - e^{iφ} V‖_F / √dim`, attained at `φ = arg tr(V^ U)`.
pub fn unitary_distance(u: &DenseOperator, v: &DenseOperator) -> Result<f64> {
    if u.layout != v.layout {
        return Err(Error::LayoutMismatch);
    }
    Ok(matrix_distance(&u.matrix, &v.matrix))
}

pub fn matrix_distance(u: &CMatrix, v: &CMatrix) -> f64 {
    let overlap: Complex64 = v.conjugate().component_mul(u).sum();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    (u - v * phase).norm() / (u.nrows() as f64).sqrt()
}

/// Block of `m` with rows and columns restricted to `indices`.
pub fn restrict(m: &CMatrix, indices: &[usize]) -> CMatrix {
    CMatrix::from_fn(indices.len(), indices.len(), |r, c| {
        m[(indices[r], indices[c])]
    })
}

/// Basis indices with every listed ancilla in `|0>`.
pub fn ancilla_zero_indices(op: &DenseOperator, ancillas: &BTreeSet<usize>) -> Vec<usize> {
    op.layout
        .indices_where(|m, d| !ancillas.contains(&m) || d == 0)
}

/// How far inputs with ancillas in `|0>` leak out of that subspace:
/// Frobenius norm of the leaking block over √(subspace dim).
pub fn ancilla_leakage(op: &DenseOperator, ancillas: &BTreeSet<usize>) -> f64 {
    let keep = ancilla_zero_indices(op, ancillas);
    let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
    let mut sq = 0.0;
    for &c in &keep {
        for r in 0..op.dim() {
            if !keep_set.contains(&r) {
                sq += op.matrix[(r, c)].norm_sqr();
            }
        }
    }
    (sq / keep.len().max(1) as f64).sqrt()
}

/// Distance between the ancilla-`|0>` block of `circuit` and `reference`,
/// which must live on the system sites only. Ancillas must come last in the
/// circuit layout so both blocks share one basis order.
pub fn distance_on_ancilla_zero(
    circuit: &DenseOperator,
    ancillas: &BTreeSet<usize>,
    reference: &DenseOperator,
) -> Result<f64> {
    let keep = ancilla_zero_indices(circuit, ancillas);
    if keep.len() != reference.dim() {
        return Err(Error::LayoutMismatch);
    }
    let system: Vec<(usize, usize)> = circuit
        .layout
        .sites()
        .iter()
        .copied()
        .filter(|(m, _)| !ancillas.contains(m))
        .collect();
    if system != reference.layout.sites() {
        return Err(Error::LayoutMismatch);
    }
    Ok(matrix_distance(
        &restrict(&circuit.matrix, &keep),
        &reference.matrix,
    ))
}

/// Distance on the subspace where each listed boson mode holds at most
/// `max_quanta`, for truncation-sensitive comparisons.
pub fn distance_on_low_fock(
    u: &DenseOperator,
    v: &DenseOperator,
    bosons: &BTreeSet<usize>,
    max_quanta: usize,
) -> Result<f64> {
    if u.layout != v.layout {
        return Err(Error::LayoutMismatch);
    }
    let keep = u
        .layout
        .indices_where(|m, d| !bosons.contains(&m) || d <= max_quanta);
    Ok(matrix_distance(
        &restrict(&u.matrix, &keep),
        &restrict(&v.matrix, &keep),
    ))
}
