// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Group-commutator synthesis of operator products.
//!
//! With `A = -iθ X_k O_I` and `B = -iθ Y_k O_J` on disjoint supports,
//! `e^A e^B e^{-A} e^{-B} = exp([A, B] + O(θ³))` and
//! `[A, B] = -2iθ² Z_k O_I O_J`. On an ancilla prepared in `|0>` this is
//! `exp(-2iθ² O_I O_J)` up to third order.

use std::collections::BTreeSet;

use num_complex::Complex64;

use super::node::{BudgetEntry, CompilationPlan, UnitaryNode};
use super::trotter::commutator_bound;
use crate::error::{Error, Result};
use crate::symbolic::{OpKind, OperatorPoly, PrimitiveOp, Term};

fn conditioned(axis: PrimitiveOp, o: &OperatorPoly) -> Result<OperatorPoly> {
    let mut registry = o.registry.clone();
    registry.add_ancilla(axis.mode)?;
    Ok(OperatorPoly::with_registry(
        o.terms
            .iter()
            .map(|t| {
                let mut f = vec![axis];
                f.extend_from_slice(&t.factors);
                Term::new(t.coeff, f)
            })
            .collect(),
        registry,
    )
    .normal_order())
}

/// `exp(-iτ O_I O_J)` from four ancilla-conditioned exponentials.
///
/// `θ = √(|τ|/2)` and the sign of `τ` is folded into `O_J`. Execution order
/// is `CU^Y_J(-θ), CU^X_I(-θ), CU^Y_J(θ), CU^X_I(θ)` with
/// `CU^A_I(θ) = exp(-iθ A_k O_I)`.
pub fn bch_expand(
    parent: &UnitaryNode,
    o_i: &OperatorPoly,
    o_j: &OperatorPoly,
    tau: f64,
    ancilla: usize,
    cutoff: Option<usize>,
) -> Result<CompilationPlan> {
    let registry = o_i.registry.union(&o_j.registry)?;
    let mut plan = CompilationPlan::new(registry);
    plan.registry.add_ancilla(ancilla)?;
    if tau == 0.0 || o_i.is_empty() || o_j.is_empty() {
        return Ok(plan);
    }
    let (si, sj) = (o_i.support(), o_j.support());
    if !si.is_disjoint(&sj) {
        return Err(Error::Precondition("BCH factors share a mode".into()));
    }
    if si.contains(&ancilla) || sj.contains(&ancilla) {
        return Err(Error::Precondition("BCH factor touches the ancilla".into()));
    }
    let theta = (tau.abs() / 2.0).sqrt();
    let o_j = o_j.scale(tau.signum());
    let cu_x = conditioned(PrimitiveOp::x(ancilla), o_i)?;
    let cu_y = conditioned(PrimitiveOp::y(ancilla), &o_j)?;
    plan.push_node(parent.child(cu_y.clone(), -theta, "bch(Y, -θ)"));
    plan.push_node(parent.child(cu_x.clone(), -theta, "bch(X, -θ)"));
    plan.push_node(parent.child(cu_y, theta, "bch(Y, θ)"));
    plan.push_node(parent.child(cu_x, theta, "bch(X, θ)"));
    let magnitude = cutoff.map(|c| {
        let (a, b) = (o_i.norm_bound(c), o_j.norm_bound(c));
        2.0 * theta.powi(3) * a * b * (a + b)
    });
    plan.budget.push(BudgetEntry {
        source: format!("bch(θ = {theta})"),
        order: 3,
        magnitude,
    });
    Ok(plan)
}

/// `exp(-iθ Σ G_a) ≈ ∏_a exp(-iθ G_a)`, first part applied first.
pub fn trotter_split(
    parent: &UnitaryNode,
    parts: Vec<OperatorPoly>,
    angle: f64,
    cutoff: Option<usize>,
) -> Result<CompilationPlan> {
    let mut plan = CompilationPlan::new(parent.generator.registry.clone());
    let parts: Vec<OperatorPoly> = parts.into_iter().filter(|p| !p.is_empty()).collect();
    if parts.len() > 1 {
        let magnitude = match cutoff {
            Some(c) => {
                let mut s = 0.0;
                for a in 0..parts.len() {
                    for b in a + 1..parts.len() {
                        s += commutator_bound(&parts[a], &parts[b], c)?;
                    }
                }
                Some(angle * angle / 2.0 * s)
            }
            None => None,
        };
        plan.budget.push(BudgetEntry {
            source: format!("trotter-split({} parts)", parts.len()),
            order: 2,
            magnitude,
        });
    }
    let n = parts.len();
    for (k, p) in parts.into_iter().enumerate() {
        plan.push_node(parent.child(p, angle, format!("split({k}/{n})")));
    }
    Ok(plan)
}

/// Modes of a multilinear ladder generator: every term is a product of
/// exactly one ladder operator on each mode of the set, and nothing else.
pub fn multilinear_modes(g: &OperatorPoly) -> Option<BTreeSet<usize>> {
    let first = g.terms.first()?;
    let modes: BTreeSet<usize> = first.factors.iter().map(|f| f.mode).collect();
    if modes.len() < 2 {
        return None;
    }
    let ok = g.terms.iter().all(|t| {
        t.factors.len() == modes.len()
            && t.factors.iter().all(|f| {
                modes.contains(&f.mode) && matches!(f.kind, OpKind::BosonLower | OpKind::BosonRaise)
            })
            && t.factors.iter().map(|f| f.mode).collect::<BTreeSet<_>>() == modes
    });
    ok.then_some(modes)
}

/// Real expansion `G = Σ r_s ∏_m q_{m,s}` over quadrature strings, with
/// `a = (x + ip)/√2` and `a^ = (x - ip)/√2`.
pub fn quadrature_decomposition(g: &OperatorPoly) -> Result<Vec<(f64, Vec<PrimitiveOp>)>> {
    let modes: Vec<usize> = multilinear_modes(g)
        .ok_or_else(|| Error::Precondition(format!("{g} is not multilinear in ladder operators")))?
        .into_iter()
        .collect();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::new();
    for mask in 0..(1usize << modes.len()) {
        // bit set: p on that mode, otherwise x
        let mut r = Complex64::new(0.0, 0.0);
        for t in &g.terms {
            let mut c = t.coeff;
            for (k, &m) in modes.iter().enumerate() {
                let raise = t
                    .factors
                    .iter()
                    .any(|f| f.mode == m && f.kind == OpKind::BosonRaise);
                let p = (mask >> k) & 1 == 1;
                c *= match (p, raise) {
                    (false, _) => Complex64::new(s, 0.0),
                    (true, false) => Complex64::new(0.0, s),
                    (true, true) => Complex64::new(0.0, -s),
                };
            }
            r += c;
        }
        if r.norm() < crate::symbolic::COLLECT_EPS {
            continue;
        }
        if r.im.abs() > 1e-9 * r.norm().max(1.0) {
            return Err(Error::NonHermitian);
        }
        let string = modes
            .iter()
            .enumerate()
            .map(|(k, &m)| {
                if (mask >> k) & 1 == 1 {
                    PrimitiveOp::quad_p(m)
                } else {
                    PrimitiveOp::quad_x(m)
                }
            })
            .collect();
        out.push((r.re, string));
    }
    Ok(out)
}

/// Splits a multilinear ladder node into quadrature strings and synthesizes
/// each with [`bch_expand`], using `O_I` = the first quadrature.
pub fn quadrature_bch(
    node: &UnitaryNode,
    ancilla: usize,
    cutoff: Option<usize>,
) -> Result<CompilationPlan> {
    let strings = quadrature_decomposition(&node.generator)?;
    let registry = &node.generator.registry;
    let parts: Vec<OperatorPoly> = strings
        .iter()
        .map(|(r, s)| OperatorPoly::with_registry(vec![Term::new(*r, s.clone())], registry.clone()))
        .collect();
    let split = trotter_split(node, parts, node.angle, cutoff)?;
    let mut plan = CompilationPlan::new(registry.clone());
    plan.registry.add_ancilla(ancilla)?;
    plan.budget = split.budget;
    for (step, (r, s)) in split.steps.iter().zip(&strings) {
        let super::node::PlanStep::Node(part) = step else {
            unreachable!("trotter_split emits nodes only")
        };
        let o_i = OperatorPoly::with_registry(vec![Term::new(1.0, vec![s[0]])], registry.clone());
        let o_j =
            OperatorPoly::with_registry(vec![Term::new(*r, s[1..].to_vec())], registry.clone());
        let sub = bch_expand(part, &o_i, &o_j, node.angle, ancilla, cutoff)?;
        plan.steps.extend(sub.steps);
        plan.budget.extend(sub.budget);
    }
    Ok(plan)
}
