// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! `exp(-iτ Z_q O) = CΠ exp(-iτ O') CΠ^` for `O = Θ a_j^ + Θ^ a_j`, with
//! `O' = iΘ a_j^ - iΘ^ a_j`. It follows from `CΠ a_j CΠ^ = i Z_q a_j`.
//! An `X` or `Y` condition is first rotated onto `Z`.

use std::f64::consts::FRAC_PI_4;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::node::{CompilationPlan, UnitaryNode};
use crate::error::{Error, Result};
use crate::isa::GateInstr;
use crate::symbolic::{OpKind, OperatorPoly, Term};

/// Qubit `q` and Pauli `P` with every term holding `P_q`.
fn conditioning_qubit(g: &OperatorPoly) -> Option<(usize, OpKind)> {
    let first = g.terms.first()?;
    first
        .factors
        .iter()
        .filter(|f| f.kind.is_pauli())
        .map(|f| (f.mode, f.kind))
        .find(|&(q, kind)| {
            g.terms.iter().all(|t| {
                let on_q: Vec<_> = t.factors.iter().filter(|f| f.mode == q).collect();
                on_q.len() == 1 && on_q[0].kind == kind
            })
        })
}

/// Lowest boson mode carrying exactly one ladder factor in every term.
fn linear_mode(o: &OperatorPoly) -> Option<usize> {
    let first = o.terms.first()?;
    first
        .factors
        .iter()
        .filter(|f| matches!(f.kind, OpKind::BosonLower | OpKind::BosonRaise))
        .map(|f| f.mode)
        .find(|&j| {
            o.terms.iter().all(|t| {
                let on_j: Vec<_> = t.factors.iter().filter(|f| f.mode == j).collect();
                on_j.len() == 1 && matches!(on_j[0].kind, OpKind::BosonLower | OpKind::BosonRaise)
            })
        })
}

/// `(q, P, j)` if the generator has the `P_q (Θ a_j^ + Θ^ a_j)` shape.
pub fn pauli_shape(g: &OperatorPoly) -> Option<(usize, OpKind, usize)> {
    let (q, kind) = conditioning_qubit(g)?;
    let o = strip_mode(g, q);
    let j = linear_mode(&o)?;
    Some((q, kind, j))
}

fn strip_mode(g: &OperatorPoly, q: usize) -> OperatorPoly {
    OperatorPoly::with_registry(
        g.terms
            .iter()
            .map(|t| {
                Term::new(
                    t.coeff,
                    t.factors.iter().copied().filter(|f| f.mode != q).collect(),
                )
            })
            .collect(),
        g.registry.clone(),
    )
}

pub fn pauli_factorize(node: &UnitaryNode) -> Result<CompilationPlan> {
    let mut plan = CompilationPlan::new(node.generator.registry.clone());
    if node.generator.is_empty() || node.angle == 0.0 {
        return Ok(plan);
    }
    let (q, kind, j) = pauli_shape(&node.generator).ok_or_else(|| {
        Error::Precondition(format!(
            "{} is not a Pauli-conditioned linear ladder term",
            node.generator
        ))
    })?;
    let o = strip_mode(&node.generator, q);
    let i = Complex64::new(0.0, 1.0);
    let middle = OperatorPoly::with_registry(
        o.terms
            .iter()
            .map(|t| {
                let raise = t
                    .factors
                    .iter()
                    .any(|f| f.mode == j && f.kind == OpKind::BosonRaise);
                t.scaled(if raise { i } else { -i })
            })
            .collect(),
        o.registry.clone(),
    )
    .normal_order();
    let (basis_in, basis_out) = match kind {
        OpKind::PauliX => (
            Some(GateInstr::ry(q, -FRAC_PI_4)),
            Some(GateInstr::ry(q, FRAC_PI_4)),
        ),
        OpKind::PauliY => (
            Some(GateInstr::rx(q, FRAC_PI_4)),
            Some(GateInstr::rx(q, -FRAC_PI_4)),
        ),
        _ => (None, None),
    };
    if let Some(g) = basis_in {
        plan.push_gate(g);
    }
    plan.push_gate(GateInstr::cr(q, j, -PI));
    plan.push_node(node.child(middle, node.angle, format!("pauli(q{q}, b{j})")));
    plan.push_gate(GateInstr::cpi(q, j));
    if let Some(g) = basis_out {
        plan.push_gate(g);
    }
    Ok(plan)
}
