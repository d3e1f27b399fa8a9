// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet};

use indexmap::IndexMap;
use num_complex::Complex64;

use super::node::{BudgetEntry, CompilationPlan, UnitaryNode};
use crate::error::{Error, Result};
use crate::symbolic::{OperatorPoly, PrimitiveOp, Term, COLLECT_EPS};

/// Splits a Hermitian poly into Hermitian groups: a self-adjoint monomial on
/// its own, otherwise a monomial fused with its conjugate partner. The
/// identity component is dropped as a global phase.
pub fn hermitian_groups(h: &OperatorPoly) -> Result<Vec<OperatorPoly>> {
    if !h.is_hermitian() {
        return Err(Error::NonHermitian);
    }
    let (_, ordered) = h.normal_order().split_identity();
    let registry = ordered.registry.clone();
    let mut remaining: IndexMap<Vec<PrimitiveOp>, Complex64> = ordered
        .terms
        .into_iter()
        .map(|t| (t.factors, t.coeff))
        .collect();
    let mut groups = Vec::new();
    let mut cursor = 0;
    while cursor < remaining.len() {
        let (factors, coeff) = {
            let (f, c) = remaining.get_index(cursor).expect("cursor is in range");
            (f.clone(), *c)
        };
        if coeff.norm() < COLLECT_EPS {
            cursor += 1;
            continue;
        }
        let first = Term::new(coeff, factors.clone());
        let local = registry.restricted(&first.modes());
        let mono = OperatorPoly::with_registry(vec![Term::new(1.0, factors.clone())], local);
        let adj = mono.adjoint().normal_order();
        let self_adjoint = adj.terms.len() == 1
            && adj.terms[0].factors == factors
            && (adj.terms[0].coeff - 1.0).norm() < COLLECT_EPS;
        let group = if self_adjoint {
            if coeff.im.abs() > 1e-9 * coeff.norm().max(1.0) {
                return Err(Error::UnpairableTerm(first.to_string()));
            }
            mono.scale(coeff.re)
        } else {
            let t = mono.scale(coeff);
            t.add(&t.adjoint())?.normal_order().split_identity().1
        };
        for t in &group.terms {
            match remaining.get_mut(&t.factors) {
                Some(c) => *c -= t.coeff,
                None => return Err(Error::UnpairableTerm(first.to_string())),
            }
        }
        if remaining[&factors].norm() >= COLLECT_EPS * coeff.norm().max(1.0) {
            return Err(Error::UnpairableTerm(first.to_string()));
        }
        if !group.is_empty() {
            groups.push(group);
        }
        cursor += 1;
    }
    if let Some((f, c)) = remaining.iter().find(|(_, c)| c.norm() >= 1e-9) {
        return Err(Error::UnpairableTerm(Term::new(*c, f.clone()).to_string()));
    }
    Ok(groups)
}

/// Norm bound of `[a, b]` at `cutoff`, zero for disjoint supports.
pub fn commutator_bound(a: &OperatorPoly, b: &OperatorPoly, cutoff: usize) -> Result<f64> {
    if a.support().is_disjoint(&b.support()) {
        return Ok(0.0);
    }
    Ok(a.commutator(b)?.norm_bound(cutoff))
}

/// Index pairs `(j, k)`, `j < k`, of groups sharing a mode.
fn overlapping_pairs(groups: &[OperatorPoly]) -> BTreeSet<(usize, usize)> {
    let mut by_mode: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (g, p) in groups.iter().enumerate() {
        for m in p.support() {
            by_mode.entry(m).or_default().push(g);
        }
    }
    let mut pairs = BTreeSet::new();
    for list in by_mode.values() {
        for (x, &j) in list.iter().enumerate() {
            for &k in &list[x + 1..] {
                pairs.insert((j, k));
            }
        }
    }
    pairs
}

fn first_order_bound(groups: &[OperatorPoly], t: f64, n: usize, cutoff: usize) -> Result<f64> {
    let mut s = 0.0;
    for (j, k) in overlapping_pairs(groups) {
        s += commutator_bound(&groups[j], &groups[k], cutoff)?;
    }
    Ok(t * t / (2.0 * n as f64) * s)
}

fn second_order_bound(groups: &[OperatorPoly], t: f64, n: usize, cutoff: usize) -> Result<f64> {
    let delta = t / n as f64;
    let mut neighbours: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, k) in overlapping_pairs(groups) {
        neighbours.entry(j).or_default().push(k);
    }
    let mut s = 0.0;
    for j in 0..groups.len() {
        let mut later = OperatorPoly::with_registry(Vec::new(), groups[j].registry.clone());
        for &k in neighbours.get(&j).into_iter().flatten() {
            later.terms.extend(groups[k].terms.iter().cloned());
        }
        if later.is_empty() {
            continue;
        }
        let c = later.commutator(&groups[j])?;
        s += later.commutator(&c)?.norm_bound(cutoff) / 12.0
            + groups[j].commutator(&c)?.norm_bound(cutoff) / 24.0;
    }
    Ok(n as f64 * delta.powi(3) * s)
}

/// Product formula for `exp(-i t h)` with `n` steps.
///
/// Order 1 repeats `exp(-i τ G_1) … exp(-i τ G_m)` with `τ = t/n`; order 2
/// uses the symmetric sequence with half steps on all but the last group.
/// With a cutoff the budget carries a commutator norm bound.
pub fn trotterize(
    h: &OperatorPoly,
    t: f64,
    n: usize,
    order: u32,
    cutoff: Option<usize>,
) -> Result<CompilationPlan> {
    if !(order == 1 || order == 2) {
        return Err(Error::Config(format!(
            "unsupported product-formula order {order}"
        )));
    }
    let groups = hermitian_groups(h)?;
    let mut plan = CompilationPlan::new(h.registry.clone());
    if n == 0 {
        return Ok(plan);
    }
    let tau = t / n as f64;
    let m = groups.len();
    for step in 0..n {
        let node = |g: usize, angle: f64| {
            let mut u = UnitaryNode::new(groups[g].clone(), angle);
            u.provenance
                .push(format!("trotter[step {step}, group {g}]"));
            u
        };
        if order == 1 || m == 1 {
            for g in 0..m {
                plan.push_node(node(g, tau));
            }
        } else {
            for g in 0..m - 1 {
                plan.push_node(node(g, tau / 2.0));
            }
            plan.push_node(node(m - 1, tau));
            for g in (0..m - 1).rev() {
                plan.push_node(node(g, tau / 2.0));
            }
        }
    }
    if m > 1 {
        let magnitude = match cutoff {
            Some(c) if order == 1 => Some(first_order_bound(&groups, t, n, c)?),
            Some(c) => Some(second_order_bound(&groups, t, n, c)?),
            None => None,
        };
        plan.budget.push(BudgetEntry {
            source: format!("trotter(order {order}, steps {n})"),
            order: order + 1,
            magnitude,
        });
    }
    Ok(plan)
}
