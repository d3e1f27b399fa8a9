// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{dense, max_abs, Sites};
use num_complex::Complex64;
use proptest::prelude::*;

use bosonc::fermion::{
    check_anticommutation, jw_map_poly, jw_map_primitive, map_poly, BravyiKitaev, JordanWigner,
};
use bosonc::symbolic::{validate_hermitian, OperatorPoly, PrimitiveOp as P, Term};

fn fermion_sites(n: usize) -> Sites {
    let mut s = Sites::new((0..n).map(|m| (m, 2)).collect());
    s.fermions = (0..n).collect();
    s
}

fn jw(op: P, order: &[usize]) -> OperatorPoly {
    OperatorPoly::from_terms(jw_map_primitive(&op, order).unwrap()).unwrap()
}

#[test]
fn anticommutators_vanish_symbolically_and_numerically() {
    for n in 1..=6 {
        let order: Vec<usize> = (0..n).collect();
        let s = Sites::new(order.iter().map(|&m| (m, 2)).collect());
        for i in 0..n {
            for j in 0..n {
                assert!(
                    check_anticommutation(i, j, &order).unwrap().is_empty(),
                    "{{c{i}, c{j}^}}"
                );
                let (ci, cj) = (
                    dense(&jw(P::fermion_lower(i), &order), &s),
                    dense(&jw(P::fermion_lower(j), &order), &s),
                );
                let anti = &ci * &cj + &cj * &ci;
                assert!(max_abs(&anti) < 1e-12);
                let cjd = cj.adjoint();
                let mut mixed = &ci * &cjd + &cjd * &ci;
                if i == j {
                    mixed -= common::M::identity(s.dim(), s.dim());
                }
                assert!(max_abs(&mixed) < 1e-12, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn jw_matches_raw_fermions_on_hopping() {
    let h = OperatorPoly::from_terms(vec![
        Term::new(-1.0, vec![P::fermion_raise(0), P::fermion_lower(2)]),
        Term::new(-1.0, vec![P::fermion_raise(2), P::fermion_lower(0)]),
        Term::new(
            0.6,
            vec![
                P::fermion_raise(1),
                P::fermion_lower(1),
                P::fermion_raise(2),
                P::fermion_lower(2),
            ],
        ),
    ])
    .unwrap();
    let q = jw_map_poly(&h).unwrap();
    assert!(q.registry.fermions.is_empty());
    for t in &q.terms {
        assert!(t.factors.iter().all(|f| f.kind.is_pauli()));
    }
    let raw = fermion_sites(3);
    let qubits = Sites::new(raw.sites.clone());
    assert!(max_abs(&(dense(&h, &raw) - dense(&q, &qubits))) < 1e-12);
}

#[test]
fn custom_site_order_and_placeholders() {
    let jw = JordanWigner::new(vec![2, 0, 1]).unwrap();
    let t = jw_map_primitive(&P::fermion_lower(1), jw.site_order()).unwrap();
    assert_eq!(t[0].factors, vec![P::z(0), P::z(2), P::x(1)]);
    assert!(JordanWigner::new(vec![0, 0]).is_err());
    let p = OperatorPoly::from_term(Term::new(
        1.0,
        vec![P::fermion_raise(0), P::fermion_lower(0)],
    ))
    .unwrap();
    assert!(map_poly(&p, &BravyiKitaev).is_err());
    let n = jw_map_poly(&p).unwrap();
    let want = OperatorPoly::from_terms(vec![Term::identity(0.5), Term::new(-0.5, vec![P::z(0)])])
        .unwrap();
    assert!(n.approx_eq(&want.normal_order(), 1e-15), "{n}");
}

fn fermion_op(n: usize) -> impl Strategy<Value = P> {
    (0..n, any::<bool>()).prop_map(|(m, up)| {
        if up {
            P::fermion_raise(m)
        } else {
            P::fermion_lower(m)
        }
    })
}

fn coeff() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| Complex64::new(a, b))
}

/// Random fermion polynomial on four sites, optionally made Hermitian.
fn fermion_poly() -> impl Strategy<Value = OperatorPoly> {
    prop::collection::vec((coeff(), prop::collection::vec(fermion_op(4), 1..5)), 1..4).prop_map(
        |ts| {
            OperatorPoly::from_terms(ts.into_iter().map(|(c, f)| Term::new(c, f)).collect())
                .unwrap()
        },
    )
}

fn hermitize(p: &OperatorPoly) -> OperatorPoly {
    p.add(&p.adjoint()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jw_preserves_the_operator(p in fermion_poly()) {
        let q = jw_map_poly(&p).unwrap();
        let mut raw = fermion_sites(4);
        // keep only the modes the registry knows, in ascending order
        raw.sites.retain(|s| p.registry.fermions.contains(&s.0));
        raw.fermions.retain(|m| p.registry.fermions.contains(m));
        let qubits = Sites::new(raw.sites.clone());
        let d = max_abs(&(dense(&p, &raw) - dense(&q, &qubits)));
        prop_assert!(d < 1e-12, "{d}");
    }

    #[test]
    fn jw_preserves_hermiticity(p in fermion_poly()) {
        let h = hermitize(&p);
        prop_assert!(validate_hermitian(&h));
        let q = jw_map_poly(&h).unwrap();
        prop_assert!(validate_hermitian(&q));
        for t in &q.terms {
            prop_assert!(t.coeff.im.abs() < 1e-12, "{}", t);
        }
    }
}
