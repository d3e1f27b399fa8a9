// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Lowering of a plan to native gates.
//!
//! Each node is tried against, in order: native matching, the SNAP route for
//! single-mode number polynomials, density factorization, Pauli
//! factorization and quadrature BCH. Rule outputs are lowered depth-first, so
//! ancillas are released in LIFO order. Every child must have strictly
//! smaller [`rank`] than its parent, which bounds the recursion.

use super::bch::{multilinear_modes, quadrature_bch};
use super::density::{density_factorize, split_density};
use super::node::{BudgetEntry, CompilationPlan, PlanStep, UnitaryNode};
use super::pauli::{pauli_factorize, pauli_shape};
use crate::error::{Error, Result};
use crate::isa::{
    match_native, number_polynomial, snap_synthesis, Circuit, GateInstr, NativeMatch,
};
use crate::symbolic::{AncillaAllocator, OpKind, OperatorPoly, Term};

#[derive(Debug, Clone)]
pub struct CompileConfig {
    /// Boson cutoff `n_max`; needed by SNAP, SQR and density factorization.
    pub cutoff: Option<usize>,
    /// Ancilla pool size; defaults to one per boson mode (at least one).
    pub ancilla_capacity: Option<usize>,
    pub max_depth: usize,
}

impl Default for CompileConfig {
    fn default() -> Self {
        Self {
            cutoff: None,
            ancilla_capacity: None,
            max_depth: 50,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Compiled {
    pub circuit: Circuit,
    /// Plan budget plus entries added by rules during lowering.
    pub budget: Vec<BudgetEntry>,
    /// Deepest rule nesting reached.
    pub depth: usize,
}

impl Compiled {
    pub fn total_budget(&self) -> Option<f64> {
        crate::passes::total_budget(&self.budget)
    }
}

fn term_score(t: &Term) -> usize {
    let numbers = t
        .factors
        .iter()
        .filter(|f| f.kind == OpKind::BosonNumber)
        .count();
    let mut ladder_modes: Vec<usize> = t
        .factors
        .iter()
        .filter(|f| f.kind.is_ladder() || f.kind.is_quadrature())
        .map(|f| f.mode)
        .collect();
    ladder_modes.dedup();
    if numbers == 0 && ladder_modes.is_empty() {
        return 0;
    }
    let paulis = t.factors.iter().filter(|f| f.kind.is_pauli()).count();
    4 * numbers + 2 * ladder_modes.len() + paulis
}

/// `(highest term score, term count)`, compared lexicographically. The score
/// weighs number operators above ladder modes above conditioning Paulis.
pub fn rank(g: &OperatorPoly) -> (usize, usize) {
    let (_, g) = g.split_identity();
    (g.terms.iter().map(term_score).max().unwrap_or(0), g.len())
}

struct Lowering<'a> {
    config: &'a CompileConfig,
    alloc: AncillaAllocator,
    gates: Vec<GateInstr>,
    budget: Vec<BudgetEntry>,
    depth: usize,
}

impl Lowering<'_> {
    fn irreducible(node: &UnitaryNode, why: &str) -> Error {
        Error::Irreducible {
            generator: node.generator.to_string(),
            angle: node.angle,
            trace: format!("{} ({why})", node.trace()),
        }
    }

    fn lower_plan(
        &mut self,
        parent: Option<&UnitaryNode>,
        plan: CompilationPlan,
        depth: usize,
    ) -> Result<()> {
        self.budget.extend(plan.budget);
        for step in plan.steps {
            match step {
                PlanStep::Gate(g) => self.gates.push(g),
                PlanStep::Node(child) => {
                    if let Some(p) = parent {
                        if rank(&child.generator.normal_order()) >= rank(&p.generator) {
                            return Err(Self::irreducible(&child, "rank did not decrease"));
                        }
                    }
                    self.lower(&child, depth + 1)?;
                }
            }
        }
        Ok(())
    }

    fn with_ancilla(
        &mut self,
        node: &UnitaryNode,
        depth: usize,
        rule: impl FnOnce(&UnitaryNode, usize) -> Result<CompilationPlan>,
    ) -> Result<()> {
        let anc = self.alloc.allocate()?;
        let plan = rule(node, anc)?;
        self.lower_plan(Some(node), plan, depth)?;
        self.alloc.release(anc);
        Ok(())
    }

    fn lower(&mut self, node: &UnitaryNode, depth: usize) -> Result<()> {
        if depth > self.config.max_depth {
            return Err(Self::irreducible(node, "depth limit reached"));
        }
        self.depth = self.depth.max(depth);
        let cutoff = self.config.cutoff;
        let node = UnitaryNode {
            generator: node.generator.normal_order(),
            angle: node.angle,
            provenance: node.provenance.clone(),
        };
        let g = &node.generator;
        match match_native(g, node.angle, cutoff) {
            NativeMatch::Drop => return Ok(()),
            NativeMatch::Gate(gate) => {
                self.gates.push(gate);
                return Ok(());
            }
            NativeMatch::Sequence(gates) => {
                self.gates.extend(gates);
                return Ok(());
            }
            NativeMatch::NoMatch => {}
        }
        let (_, body) = g.split_identity();
        if let Some((j, coeffs)) = number_polynomial(&body, None) {
            let anc = self.alloc.allocate()?;
            if let Some(gate) = snap_synthesis(j, anc, &coeffs, node.angle, cutoff)? {
                self.gates.push(gate);
            }
            self.alloc.release(anc);
            return Ok(());
        }
        if split_density(&body).is_some() {
            let node = UnitaryNode {
                generator: body,
                ..node
            };
            return self.with_ancilla(&node, depth, |n, a| density_factorize(n, a, cutoff));
        }
        if pauli_shape(&body).is_some() {
            let node = UnitaryNode {
                generator: body,
                ..node
            };
            let plan = pauli_factorize(&node)?;
            return self.lower_plan(Some(&node), plan, depth);
        }
        if multilinear_modes(&body).is_some() {
            let node = UnitaryNode {
                generator: body,
                ..node
            };
            return self.with_ancilla(&node, depth, |n, a| quadrature_bch(n, a, cutoff));
        }
        Err(Self::irreducible(&node, "no rule applies"))
    }
}

/// Lowers every node of `plan` to native gates.
pub fn compile_to_native(plan: &CompilationPlan, config: &CompileConfig) -> Result<Compiled> {
    let capacity = config
        .ancilla_capacity
        .unwrap_or_else(|| plan.registry.bosons.len().max(1));
    let mut low = Lowering {
        config,
        alloc: AncillaAllocator::new(plan.registry.next_free_index(), capacity),
        gates: Vec::new(),
        budget: Vec::new(),
        depth: 0,
    };
    low.lower_plan(None, plan.clone(), 0)?;
    let mut registry = plan.registry.clone();
    for &a in low.alloc.issued() {
        registry.add_ancilla(a)?;
    }
    let mut circuit = Circuit::new(registry);
    circuit.gates = low.gates;
    Ok(Compiled {
        circuit,
        budget: low.budget,
        depth: low.depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isa::Opcode;
    use crate::symbolic::PrimitiveOp as P;

    fn node(terms: Vec<Term>, angle: f64) -> CompilationPlan {
        let g = OperatorPoly::from_terms(terms).unwrap().normal_order();
        let mut plan = CompilationPlan::new(g.registry.clone());
        plan.push_node(UnitaryNode::new(g, angle));
        plan
    }

    fn config(cutoff: usize) -> CompileConfig {
        CompileConfig {
            cutoff: Some(cutoff),
            ..CompileConfig::default()
        }
    }

    #[test]
    fn empty_plan_gives_empty_circuit() {
        let c = compile_to_native(&CompilationPlan::default(), &CompileConfig::default()).unwrap();
        assert!(c.circuit.gates.is_empty());
    }

    #[test]
    fn density_product_uses_sqr_sandwiches() {
        let plan = node(vec![Term::new(1.0, vec![P::number(0), P::number(1)])], 0.3);
        for (cutoff, k) in [(3, 2), (4, 3), (7, 3), (8, 4)] {
            let c = compile_to_native(&plan, &config(cutoff)).unwrap();
            let ops: Vec<Opcode> = c.circuit.gates.iter().map(|g| g.opcode).collect();
            assert_eq!(ops.len(), 4 * k, "{ops:?}");
            assert_eq!(
                &ops[..4],
                &[Opcode::SQR, Opcode::CR, Opcode::R, Opcode::SQR]
            );
            assert_eq!(c.circuit.registry.ancillas.len(), 1);
        }
    }

    #[test]
    fn squeezing_is_irreducible() {
        let plan = node(
            vec![
                Term::new(1.0, vec![P::lower(0), P::lower(0)]),
                Term::new(1.0, vec![P::raise(0), P::raise(0)]),
            ],
            0.3,
        );
        let err = compile_to_native(&plan, &config(4)).unwrap_err();
        assert!(matches!(err, Error::Irreducible { .. }), "{err}");
    }

    #[test]
    fn two_mode_product_goes_through_bch() {
        let plan = node(
            vec![
                Term::new(1.0, vec![P::lower(0), P::lower(1)]),
                Term::new(1.0, vec![P::raise(0), P::raise(1)]),
            ],
            0.1,
        );
        let c = compile_to_native(&plan, &config(4)).unwrap();
        assert!(c.budget.iter().any(|b| b.order == 3));
        assert!(c.circuit.gates.iter().any(|g| g.opcode == Opcode::D));
        assert!(c.circuit.validate().is_ok());
    }
}
