// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! `exp(-iτ n_i O) = ∏_k SQR(π⃗_k) exp(-i 2^{k-1} τ O) exp(i 2^{k-1} τ Z_a O) SQR(-π⃗_k)`.
//!
//! Writing `n_i = Σ_k 2^k b_k` in binary, `SQR(±π⃗_k)` flips the ancilla
//! exactly when bit `k` of the Fock index is set, so on the flipped ancilla
//! `b_k = (1 - Z_a)/2`. The rule is exact on any truncation whose levels fit
//! in `K = ⌈log₂(n_max + 1)⌉` bits.

use std::f64::consts::PI;

use super::node::{CompilationPlan, UnitaryNode};
use crate::error::{Error, Result};
use crate::isa::GateInstr;
use crate::symbolic::{OpKind, OperatorPoly, PrimitiveOp, SiteClass, Term};

/// Bits needed for Fock indices `0..=n_max`.
pub fn bit_count(n_max: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n_max + 1 {
        k += 1;
    }
    k.max(1)
}

/// `π` at every Fock index whose bit `k` is set.
pub fn pi_vector(k: usize, n_max: usize) -> Vec<f64> {
    (0..=n_max)
        .map(|m| if (m >> k) & 1 == 1 { PI } else { 0.0 })
        .collect()
}

/// Boson mode `i` with `G = n_i O`: every term holds exactly one `n_i` and
/// nothing else on `i`. Returns `(i, O)` for the lowest such mode.
pub fn split_density(g: &OperatorPoly) -> Option<(usize, OperatorPoly)> {
    if g.is_empty() {
        return None;
    }
    let candidates = g
        .terms
        .first()?
        .factors
        .iter()
        .filter(|f| f.kind == OpKind::BosonNumber)
        .map(|f| f.mode);
    for i in candidates {
        let ok = g.terms.iter().all(|t| {
            let on_i: Vec<&PrimitiveOp> = t.factors.iter().filter(|f| f.mode == i).collect();
            on_i.len() == 1 && on_i[0].kind == OpKind::BosonNumber
        });
        if ok {
            let rest = g
                .terms
                .iter()
                .map(|t| {
                    Term::new(
                        t.coeff,
                        t.factors.iter().copied().filter(|f| f.mode != i).collect(),
                    )
                })
                .collect();
            return Some((i, OperatorPoly::with_registry(rest, g.registry.clone())));
        }
    }
    None
}

/// Lowers `node` with `ancilla` (in `|0>` on entry and exit).
pub fn density_factorize(
    node: &UnitaryNode,
    ancilla: usize,
    cutoff: Option<usize>,
) -> Result<CompilationPlan> {
    if node.generator.is_empty() {
        return Ok(CompilationPlan::new(node.generator.registry.clone()));
    }
    let (i, o) = split_density(&node.generator).ok_or_else(|| {
        Error::Precondition(format!("{} is not a density product n_i O", node.generator))
    })?;
    let n_max = cutoff.ok_or(Error::MissingCutoff(
        "size the density-factorization vectors",
    ))?;
    let mut registry = node.generator.registry.clone();
    registry.add_ancilla(ancilla)?;
    let mut plan = CompilationPlan::new(registry.clone());
    if o.is_empty() || node.angle == 0.0 {
        return Ok(plan);
    }
    if o.support().contains(&ancilla) || registry.class_of(i) != Some(SiteClass::Boson) {
        return Err(Error::Precondition(
            "density factor overlaps the ancilla".into(),
        ));
    }
    let z_o = OperatorPoly::with_registry(
        o.terms
            .iter()
            .map(|t| {
                let mut f = vec![PrimitiveOp::z(ancilla)];
                f.extend_from_slice(&t.factors);
                Term::new(t.coeff, f)
            })
            .collect(),
        registry.clone(),
    )
    .normal_order();
    let o = OperatorPoly::with_registry(o.terms, registry).normal_order();
    let zeros = vec![0.0; n_max + 1];
    for k in 0..bit_count(n_max) {
        let pi = pi_vector(k, n_max);
        let half = 2f64.powi(k as i32 - 1) * node.angle;
        let tag = |what: &str| format!("density(n{i}, bit {k}{what})");
        plan.push_gate(GateInstr::sqr(
            ancilla,
            i,
            pi.iter().map(|x| -x).collect(),
            zeros.clone(),
        ));
        plan.push_node(node.child(z_o.clone(), -half, tag(", Z")));
        plan.push_node(node.child(o.clone(), half, tag("")));
        plan.push_gate(GateInstr::sqr(ancilla, i, pi, zeros.clone()));
    }
    Ok(plan)
}
