// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::gate::{Circuit, GateCategory, Opcode};

/// Gate multiset of a circuit, ignoring parameter payloads.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GateCountReport {
    pub by_opcode: BTreeMap<Opcode, usize>,
    pub by_category: BTreeMap<GateCategory, usize>,
    pub total: usize,
}

impl GateCountReport {
    pub fn opcode(&self, op: Opcode) -> usize {
        self.by_opcode.get(&op).copied().unwrap_or(0)
    }

    pub fn category(&self, cat: GateCategory) -> usize {
        self.by_category.get(&cat).copied().unwrap_or(0)
    }
}

pub fn gate_count_report(c: &Circuit) -> GateCountReport {
    let mut r = GateCountReport::default();
    for g in &c.gates {
        *r.by_opcode.entry(g.opcode).or_default() += 1;
        *r.by_category.entry(g.category()).or_default() += 1;
        r.total += 1;
    }
    r
}

impl fmt::Display for GateCountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gates: {}", self.total)?;
        for (cat, name) in [
            (GateCategory::Bosonic, "bosonic"),
            (GateCategory::Qubit, "qubit"),
            (GateCategory::Hybrid, "hybrid"),
        ] {
            writeln!(f, "  {name}: {}", self.category(cat))?;
        }
        for (op, n) in &self.by_opcode {
            writeln!(f, "  {op}: {n}")?;
        }
        Ok(())
    }
}
