// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use sha2::{Digest, Sha256};

use super::hamfile::format_hamiltonian;
use crate::error::{Error, Result};
use crate::fermion::jw_map_poly;
use crate::isa::{gate_count_report, Circuit, GateCountReport};
use crate::oracle::{
    ancilla_leakage, apply_evolution, distance_on_ancilla_zero, exact_evolution, realize_circuit,
    DenseOperator, RegisterLayout,
};
use crate::passes::{
    compile_to_native, hermitian_groups, trotterize, BudgetEntry, CompilationPlan, CompileConfig,
    UnitaryNode,
};
use crate::symbolic::{expand_quadratures, validate_hermitian, OperatorPoly, OrderingMode};

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub dt: f64,
    pub steps: usize,
    pub order: u32,
    pub cutoff: Option<usize>,
    pub ordering: OrderingMode,
    pub ancilla_capacity: Option<usize>,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            dt: 0.05,
            steps: 1,
            order: 1,
            cutoff: None,
            ordering: OrderingMode::Canonical,
            ancilla_capacity: None,
        }
    }
}

impl PipelineOptions {
    pub fn total_time(&self) -> f64 {
        self.dt * self.steps as f64
    }

    fn compile_config(&self) -> CompileConfig {
        CompileConfig {
            cutoff: self.cutoff,
            ancilla_capacity: self.ancilla_capacity,
            ..CompileConfig::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct CompileOutcome {
    pub circuit: Circuit,
    pub report: GateCountReport,
    pub budget: Vec<BudgetEntry>,
    /// The qubit-boson Hamiltonian handed to the product formula.
    pub mapped: OperatorPoly,
    pub warnings: Vec<String>,
}

impl CompileOutcome {
    pub fn total_budget(&self) -> Option<f64> {
        crate::passes::total_budget(&self.budget)
    }
}

/// Hex SHA-256 of the canonical text form of `h`.
pub fn hamiltonian_digest(h: &OperatorPoly) -> String {
    Sha256::digest(format_hamiltonian(h).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Quadrature expansion, Jordan–Wigner mapping and normal ordering.
pub fn prepare_hamiltonian(h: &OperatorPoly, ordering: OrderingMode) -> Result<OperatorPoly> {
    if !validate_hermitian(h) {
        return Err(Error::NonHermitian);
    }
    let expanded = expand_quadratures(h);
    Ok(jw_map_poly(&expanded)?.normal_order_with(ordering))
}

/// Compiles `exp(-i dt·steps h)` to a native circuit.
pub fn compile_hamiltonian(h: &OperatorPoly, opts: &PipelineOptions) -> Result<CompileOutcome> {
    if !(opts.dt.is_finite()) {
        return Err(Error::Config("dt must be finite".into()));
    }
    let mapped = prepare_hamiltonian(h, opts.ordering)?;
    let mut warnings = Vec::new();
    if opts.steps == 0 {
        warnings.push("steps = 0: the circuit is empty".to_string());
    }
    let plan = trotterize(
        &mapped,
        opts.total_time(),
        opts.steps,
        opts.order,
        opts.cutoff,
    )?;
    let compiled = compile_to_native(&plan, &opts.compile_config())?;
    let mut circuit = compiled.circuit;
    let md = &mut circuit.metadata;
    md.set("dt", crate::numfmt::format_real(opts.dt));
    md.set("steps", opts.steps);
    md.set("order", opts.order);
    md.set(
        "cutoff",
        opts.cutoff.map_or("none".to_string(), |c| c.to_string()),
    );
    if opts.ordering == OrderingMode::Literal {
        md.set("ordering", "literal");
    }
    md.set("hamiltonian-sha256", hamiltonian_digest(h));
    md.set("version", env!("CARGO_PKG_VERSION"));
    let report = gate_count_report(&circuit);
    Ok(CompileOutcome {
        circuit,
        report,
        budget: compiled.budget,
        mapped,
        warnings,
    })
}

#[derive(Debug, Clone)]
pub struct SpotCheck {
    pub label: String,
    pub distance: f64,
    pub budget: f64,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub distance: f64,
    pub budget: f64,
    pub threshold: f64,
    pub leakage: f64,
    pub dim: usize,
    pub spot_checks: Vec<SpotCheck>,
    pub passed: bool,
}

/// Acceptance threshold for a recorded error budget.
pub fn verify_threshold(budget: f64) -> f64 {
    (10.0 * budget).max(1e-9)
}

const MAX_SPOT_CHECKS: usize = 16;

fn circuit_distance(
    circuit: &Circuit,
    reference: &DenseOperator,
    cutoff: usize,
) -> Result<(f64, f64)> {
    let layout = RegisterLayout::from_registry(&circuit.registry, cutoff)?;
    let u = realize_circuit(circuit, &layout)?;
    let ancillas = &circuit.registry.ancillas;
    Ok((
        distance_on_ancilla_zero(&u, ancillas, reference)?,
        ancilla_leakage(&u, ancillas),
    ))
}

/// Compares the compiled circuit with the exact evolution of the original
/// Hamiltonian, and each Hermitian group's single-step lowering with its own
/// exponential.
pub fn verify_compiled(
    h: &OperatorPoly,
    out: &CompileOutcome,
    opts: &PipelineOptions,
) -> Result<VerifyReport> {
    let cutoff = opts
        .cutoff
        .ok_or(Error::MissingCutoff("verify against the oracle"))?;
    let system = RegisterLayout::from_registry(&expand_quadratures(h).registry, cutoff)?;
    RegisterLayout::from_registry(&out.circuit.registry, cutoff)?;
    let reference = exact_evolution(h, opts.total_time(), &system)?;
    let (distance, leakage) = circuit_distance(&out.circuit, &reference, cutoff)?;
    let budget = out.total_budget().unwrap_or(0.0);
    let threshold = verify_threshold(budget);

    let mut spot_checks = Vec::new();
    let mapped_layout = RegisterLayout::from_registry(&out.mapped.registry, cutoff)?;
    for g in hermitian_groups(&out.mapped)?
        .into_iter()
        .take(MAX_SPOT_CHECKS)
    {
        let mut plan = CompilationPlan::new(out.mapped.registry.clone());
        plan.push_node(UnitaryNode::new(g.clone(), opts.dt));
        let compiled = compile_to_native(&plan, &opts.compile_config())?;
        let mut expected = DenseOperator::identity(&mapped_layout);
        apply_evolution(&mut expected.matrix, &g, opts.dt, &mapped_layout)?;
        let (d, _) = circuit_distance(&compiled.circuit, &expected, cutoff)?;
        let b = compiled.total_budget().unwrap_or(0.0);
        spot_checks.push(SpotCheck {
            label: g.to_string(),
            distance: d,
            budget: b,
            passed: d <= verify_threshold(b),
        });
    }
    let passed = distance <= threshold && spot_checks.iter().all(|s| s.passed);
    Ok(VerifyReport {
        distance,
        budget,
        threshold,
        leakage,
        dim: out.circuit.registry.all_modes().len(),
        spot_checks,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isa::Opcode;
    use crate::models::{bose_hubbard, hubbard_holstein};

    fn opts(cutoff: usize, steps: usize) -> PipelineOptions {
        PipelineOptions {
            cutoff: Some(cutoff),
            steps,
            ..PipelineOptions::default()
        }
    }

    #[test]
    fn bose_hubbard_gate_counts_per_step() {
        for n in 1..5 {
            let out = compile_hamiltonian(&bose_hubbard(n, 1.0, 0.6, 0.3), &opts(3, 2)).unwrap();
            let r = &out.report;
            assert_eq!(r.opcode(Opcode::BS), 2 * (n - 1));
            assert_eq!(r.opcode(Opcode::SNAP), 2 * n);
            assert_eq!(r.opcode(Opcode::R), 2 * n);
            assert_eq!(r.total, 2 * (3 * n - 1));
        }
    }

    #[test]
    fn zero_steps_warns() {
        let out = compile_hamiltonian(&bose_hubbard(2, 1.0, 1.0, 0.5), &opts(3, 0)).unwrap();
        assert!(out.circuit.gates.is_empty());
        assert_eq!(out.warnings.len(), 1);
    }

    #[test]
    fn small_models_verify() {
        // weak hopping keeps the first-order error small
        let h = bose_hubbard(2, 0.1, 1.0, 0.5);
        let o = PipelineOptions {
            cutoff: Some(3),
            steps: 10,
            ..PipelineOptions::default()
        };
        let out = compile_hamiltonian(&h, &o).unwrap();
        let v = verify_compiled(&h, &out, &o).unwrap();
        assert!(v.passed, "{v:?}");
        assert!(v.distance < 3e-3, "{}", v.distance);

        let h = hubbard_holstein(1, 1.0, 1.0, 0.6, 1.0);
        let o = PipelineOptions {
            cutoff: Some(4),
            steps: 2,
            ..PipelineOptions::default()
        };
        let out = compile_hamiltonian(&h, &o).unwrap();
        let v = verify_compiled(&h, &out, &o).unwrap();
        assert!(v.passed, "{v:?}");
    }
}
