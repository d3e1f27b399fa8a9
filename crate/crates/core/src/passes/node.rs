// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::isa::GateInstr;
use crate::numfmt::format_real;
use crate::symbolic::{ModeRegistry, OperatorPoly};

/// `exp(-i angle G)` with Hermitian `G`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitaryNode {
    pub generator: OperatorPoly,
    pub angle: f64,
    /// Rules that produced this node, outermost first.
    pub provenance: Vec<String>,
}

impl UnitaryNode {
    pub fn new(generator: OperatorPoly, angle: f64) -> Self {
        Self {
            generator,
            angle,
            provenance: Vec::new(),
        }
    }

    /// Child node whose trace extends this one's by `tag`.
    pub fn child(&self, generator: OperatorPoly, angle: f64, tag: impl Into<String>) -> Self {
        let mut provenance = self.provenance.clone();
        provenance.push(tag.into());
        Self {
            generator,
            angle,
            provenance,
        }
    }

    pub fn trace(&self) -> String {
        if self.provenance.is_empty() {
            "<input>".to_string()
        } else {
            self.provenance.join(" > ")
        }
    }
}

impl fmt::Display for UnitaryNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exp(-i {} ({}))",
            format_real(self.angle),
            self.generator
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PlanStep {
    Node(UnitaryNode),
    Gate(GateInstr),
}

/// An approximation introduced by a rule, with its error order in the
/// rule's small parameter and, when a cutoff is known, a norm bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BudgetEntry {
    pub source: String,
    pub order: u32,
    pub magnitude: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AncillaRecord {
    pub index: usize,
    pub rule: String,
}

/// Steps in execution order: the first step acts first on the state.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CompilationPlan {
    pub steps: Vec<PlanStep>,
    pub registry: ModeRegistry,
    pub ancillas: Vec<AncillaRecord>,
    pub budget: Vec<BudgetEntry>,
}

impl CompilationPlan {
    pub fn new(registry: ModeRegistry) -> Self {
        Self {
            registry,
            ..Self::default()
        }
    }

    pub fn push_node(&mut self, node: UnitaryNode) {
        self.steps.push(PlanStep::Node(node));
    }

    pub fn push_gate(&mut self, gate: GateInstr) {
        self.steps.push(PlanStep::Gate(gate));
    }

    pub fn nodes(&self) -> impl Iterator<Item = &UnitaryNode> {
        self.steps.iter().filter_map(|s| match s {
            PlanStep::Node(n) => Some(n),
            PlanStep::Gate(_) => None,
        })
    }

    /// Sum of the known budget magnitudes; `None` if any entry is unbounded.
    pub fn total_budget(&self) -> Option<f64> {
        total_budget(&self.budget)
    }
}

/// Sum of the magnitudes, `None` if any entry lacks one.
pub fn total_budget(entries: &[BudgetEntry]) -> Option<f64> {
    entries
        .iter()
        .try_fold(0.0, |acc, b| b.magnitude.map(|m| acc + m))
}
