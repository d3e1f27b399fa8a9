// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;

use bosonc::driver::{
    compile_hamiltonian, format_hamiltonian, parse_hamiltonian_file, PipelineOptions,
};
use bosonc::fermion::jw_map_poly;
use bosonc::isa::{GateCategory, Opcode};
use bosonc::models::{bose_hubbard, hubbard_holstein, ModelKind, ModelSpec};
use bosonc::symbolic::{validate_hermitian, OpKind, OperatorPoly, Term};

fn sorted_terms(p: &OperatorPoly) -> Vec<String> {
    let mut v: Vec<String> = p.terms.iter().map(Term::to_string).collect();
    v.sort();
    v
}

#[test]
fn term_counts_are_affine() {
    assert_eq!(bose_hubbard(1, 1.0, 1.0, 0.5).collect().len(), 2);
    for n in 1..=8 {
        let bh = bose_hubbard(n, 0.3, 1.2, -0.4);
        assert_eq!(bh.len(), 2 * (n - 1) + 3 * n);
        assert!(validate_hermitian(&bh));
        let hh = hubbard_holstein(n, 1.0, 0.5, 0.6, 1.3);
        assert_eq!(hh.len(), 4 * (n - 1) + 6 * n);
        assert!(validate_hermitian(&hh));
        assert_eq!(
            (hh.registry.fermions.len(), hh.registry.bosons.len()),
            (2 * n, n)
        );
    }
    let hh = hubbard_holstein(1, 1.0, 1.0, 0.6, 1.0);
    let hybrid = hh
        .terms
        .iter()
        .filter(|t| t.factors.iter().any(|f| f.kind.is_ladder()) && t.factors.len() == 3)
        .count();
    // g couples each spin density to b and b^
    assert_eq!(hybrid, 4);
}

#[test]
fn jw_strings_stay_short() {
    let q = jw_map_poly(&hubbard_holstein(6, 1.0, 1.0, 0.6, 1.0)).unwrap();
    for t in &q.terms {
        assert!(t
            .factors
            .iter()
            .all(|f| !matches!(f.kind, OpKind::FermionLower | OpKind::FermionRaise)));
        let paulis: Vec<usize> = t
            .factors
            .iter()
            .filter(|f| f.kind.is_pauli())
            .map(|f| f.mode)
            .collect();
        if let (Some(lo), Some(hi)) = (paulis.iter().min(), paulis.iter().max()) {
            assert!(hi - lo <= 2, "{t}");
        }
    }
}

#[test]
fn model_parameters() {
    let mut spec = ModelSpec::new(ModelKind::BoseHubbard, 3);
    spec.set_from_str("U=1,2,3").unwrap();
    spec.set_from_str("t=0.5,0.25").unwrap();
    let h = spec.build().unwrap();
    assert_eq!(h.len(), 2 * 2 + 3 * 3);
    assert!(spec.set_from_str("U=1,2").is_ok());
    assert!(spec.build().is_err());
    assert!(spec.set_from_str("U").is_err());
    let mut ring = ModelSpec::new(ModelKind::HubbardHolstein, 3);
    ring.periodic = true;
    assert_eq!(ring.bonds().len(), 3);
    assert_eq!(ring.build().unwrap().len(), 4 * 3 + 6 * 3);
    assert_eq!(
        "hh".parse::<ModelKind>().unwrap(),
        ModelKind::HubbardHolstein
    );
}

/// The Hubbard-Holstein Hamiltonian written out by hand in the file grammar.
fn holstein_file(n: usize, t: f64, g: f64, u: f64, omega: f64) -> String {
    let f = |i: usize, s: usize| 2 * i + s;
    let b = |i: usize| 2 * n + i;
    let mut s = String::from("# Hubbard-Holstein chain\n");
    for i in 0..n.saturating_sub(1) {
        for sp in 0..2 {
            writeln!(s, "{t} * c{}^ c{}", f(i, sp), f(i + 1, sp)).unwrap();
            writeln!(s, "{t} * c{}^ c{}", f(i + 1, sp), f(i, sp)).unwrap();
        }
    }
    for i in 0..n {
        writeln!(s, "{omega} * b{}^ b{}   # phonon", b(i), b(i)).unwrap();
        writeln!(s, "{u} * c{0}^ c{0} c{1}^ c{1}", f(i, 0), f(i, 1)).unwrap();
        for sp in 0..2 {
            writeln!(s, "{g} * c{0}^ c{0} b{1}^", f(i, sp), b(i)).unwrap();
            writeln!(s, "{g} * c{0}^ c{0} b{1}", f(i, sp), b(i)).unwrap();
        }
    }
    s
}

#[test]
fn hand_written_file_matches_constructor() {
    for n in [1, 3] {
        let parsed = parse_hamiltonian_file(&holstein_file(n, 1.0, 1.0, 0.6, 1.0)).unwrap();
        let built = hubbard_holstein(n, 1.0, 1.0, 0.6, 1.0);
        assert_eq!(sorted_terms(&parsed), sorted_terms(&built));
        assert_eq!(parsed.registry, built.registry);
        let again = parse_hamiltonian_file(&format_hamiltonian(&built)).unwrap();
        assert_eq!(again, built);
    }
    let bh = bose_hubbard(4, 0.7, 1.1, 0.2);
    assert_eq!(
        parse_hamiltonian_file(&format_hamiltonian(&bh)).unwrap(),
        bh
    );
}

#[test]
fn example_configuration_compiles() {
    let h = hubbard_holstein(3, 1.0, 1.0, 0.6, 1.0);
    let opts = PipelineOptions {
        cutoff: Some(4),
        steps: 2,
        ..PipelineOptions::default()
    };
    let out = compile_hamiltonian(&h, &opts).unwrap();
    assert!(out.circuit.validate().is_ok());
    assert!(out.report.category(GateCategory::Hybrid) > 0);
    assert!(out.report.opcode(Opcode::BS) == 0);
    assert_eq!(out.circuit.registry.bosons.len(), 3);
    assert_eq!(
        out.circuit.registry.qubits.len() - out.circuit.registry.ancillas.len(),
        6
    );
}

#[test]
fn bose_hubbard_step_counts() {
    for n in [1, 2, 5, 9] {
        let opts = PipelineOptions {
            cutoff: Some(3),
            ..PipelineOptions::default()
        };
        let out = compile_hamiltonian(&bose_hubbard(n, 1.0, 1.0, 0.5), &opts).unwrap();
        assert_eq!(out.report.opcode(Opcode::BS), n - 1);
        assert_eq!(out.report.opcode(Opcode::SNAP), n);
        assert_eq!(out.report.opcode(Opcode::R), n);
        assert_eq!(out.report.total, 3 * n - 1);
    }
}
