// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{c, dense, expm, max_abs, Sites, I};
use num_complex::Complex64;
use proptest::prelude::*;

use bosonc::driver::prepare_hamiltonian;
use bosonc::isa::GateInstr;
use bosonc::models::bose_hubbard;
use bosonc::oracle::dump::{read_matrix, write_matrix};
use bosonc::oracle::{
    exact_evolution, realize_gate, realize_poly, trotter_error_scan, unitary_distance, CMatrix,
    DenseOperator, RegisterLayout, DIM_CAP,
};
use bosonc::symbolic::{OperatorPoly, OrderingMode, PrimitiveOp as P, Term};
use bosonc::Error;

fn poly(terms: Vec<Term>) -> OperatorPoly {
    OperatorPoly::from_terms(terms).unwrap()
}

fn layout(sites: &Sites) -> RegisterLayout {
    RegisterLayout::new(sites.sites.clone()).unwrap()
}

fn op(m: CMatrix) -> DenseOperator {
    let l = RegisterLayout::new(vec![(0, m.nrows())]).unwrap();
    DenseOperator {
        matrix: m,
        layout: l,
    }
}

#[test]
fn primitive_matrices() {
    let s = Sites::new(vec![(0, 4)]);
    let n = realize_poly(&poly(vec![Term::new(1.0, vec![P::number(0)])]), &layout(&s)).unwrap();
    let want = CMatrix::from_diagonal(&nalgebra::DVector::from_fn(4, |k, _| c(k as f64)));
    assert_eq!(n.matrix, want);

    // [a, a^] on a truncated mode: identity except the last diagonal entry
    let comm = poly(vec![
        Term::new(1.0, vec![P::lower(0), P::raise(0)]),
        Term::new(-1.0, vec![P::raise(0), P::lower(0)]),
    ]);
    let m = realize_poly(&comm, &layout(&s)).unwrap().matrix;
    for k in 0..4 {
        let want = if k == 3 { -3.0 } else { 1.0 };
        assert!((m[(k, k)] - c(want)).norm() < 1e-15);
    }

    let s = Sites::new(vec![(0, 2), (1, 2)]);
    let zx = poly(vec![Term::new(1.0, vec![P::z(0), P::x(1)])]);
    let m = realize_poly(&zx, &layout(&s)).unwrap().matrix;
    let z = CMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]);
    let x = CMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
    assert_eq!(m, z.kronecker(&x));
    assert_eq!(m, dense(&zx, &s));
}

#[test]
fn missing_modes_and_cap() {
    let s = Sites::new(vec![(0, 3)]);
    assert!(realize_poly(&poly(vec![Term::new(1.0, vec![P::x(1)])]), &layout(&s)).is_err());
    let big = RegisterLayout::new(vec![(0, 65), (1, 65)]);
    assert!(matches!(big, Err(Error::DimensionCap { cap: DIM_CAP, .. })));
}

#[test]
fn evolution_examples() {
    let s = Sites::new(vec![(0, 5)]);
    let n0 = poly(vec![Term::new(1.0, vec![P::number(0)])]);
    let id = exact_evolution(&n0, 0.0, &layout(&s)).unwrap();
    assert!(max_abs(&(id.matrix - CMatrix::identity(5, 5))) < 1e-14);
    let theta = 0.7;
    let u = exact_evolution(&n0, theta, &layout(&s)).unwrap();
    let r = realize_gate(&GateInstr::r(0, theta), &layout(&s)).unwrap();
    assert!(max_abs(&(&u.matrix - &r.matrix)) < 1e-14);
    for k in 0..5 {
        assert!((u.matrix[(k, k)] - Complex64::from_polar(1.0, -theta * k as f64)).norm() < 1e-14);
    }
    assert!(exact_evolution(
        &poly(vec![Term::new(1.0, vec![P::lower(0)])]),
        0.1,
        &layout(&s)
    )
    .is_err());
}

fn hermitian_two_site() -> impl Strategy<Value = OperatorPoly> {
    let factor = (0usize..6).prop_map(|k| match k {
        0 => P::lower(0),
        1 => P::raise(0),
        2 => P::number(0),
        3 => P::x(1),
        4 => P::y(1),
        _ => P::z(1),
    });
    prop::collection::vec(
        (
            (-1.0f64..1.0, -1.0f64..1.0),
            prop::collection::vec(factor, 0..4),
        ),
        1..5,
    )
    .prop_map(|ts| {
        let p = poly(
            ts.into_iter()
                .map(|((a, b), f)| Term::new(Complex64::new(a, b), f))
                .collect(),
        );
        p.add(&p.adjoint()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evolution_is_unitary_and_matches_series(h in hermitian_two_site(), t in -2.0f64..2.0) {
        let s = Sites::new(vec![(0, 4), (1, 2)]);
        let u = exact_evolution(&h, t, &layout(&s)).unwrap();
        prop_assert!(u.unitarity_defect() < 1e-12);
        prop_assert!(max_abs(&(&u.matrix - expm(&dense(&h, &s), t))) < 1e-10);
    }
}

#[test]
fn gate_definitions() {
    let s = Sites::new(vec![(0, 2), (1, 4)]);
    let l = layout(&s);
    let d0 = realize_gate(&GateInstr::d(1, 0.0, 0.0), &l).unwrap();
    assert!(max_abs(&(d0.matrix - CMatrix::identity(8, 8))) < 1e-14);

    // SQR acts as R^φn(θn) = exp(-iθ/2 (cos φ X + sin φ Y)) in Fock block n
    let th = vec![0.3, 1.1, -0.7, 2.0];
    let ph = vec![0.0, 0.5, 1.5, -2.0];
    let sqr = realize_gate(&GateInstr::sqr(0, 1, th.clone(), ph.clone()), &l)
        .unwrap()
        .matrix;
    for n in 0..4 {
        let axis = poly(vec![
            Term::new(ph[n].cos(), vec![P::x(0)]),
            Term::new(ph[n].sin(), vec![P::y(0)]),
        ]);
        let qs = Sites::new(vec![(0, 2)]);
        let r = expm(&dense(&axis, &qs), th[n] / 2.0);
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!((sqr[(4 * a + n, 4 * b + n)] - r[(a, b)]).norm() < 1e-14);
        }
    }

    let cr = |t| realize_gate(&GateInstr::cr(0, 1, t), &l).unwrap().matrix;
    assert!(max_abs(&(cr(0.4) * cr(0.4) - cr(0.8))) < 1e-14);
    let cpi = realize_gate(&GateInstr::cpi(0, 1), &l).unwrap().matrix;
    assert!(max_abs(&(cpi - cr(std::f64::consts::PI))) < 1e-15);

    // SNAP: exp(-i Z Σ θ_n |n><n|)
    let snap = realize_gate(&GateInstr::snap(0, 1, th.clone()), &l)
        .unwrap()
        .matrix;
    for n in 0..4 {
        assert!((snap[(n, n)] - Complex64::from_polar(1.0, -th[n])).norm() < 1e-15);
        assert!((snap[(4 + n, 4 + n)] - Complex64::from_polar(1.0, th[n])).norm() < 1e-15);
    }
    assert!(realize_gate(&GateInstr::snap(0, 1, vec![0.0; 3]), &l).is_err());
}

#[test]
fn distance_examples() {
    let u = CMatrix::from_fn(3, 3, |r, k| {
        Complex64::new((r + 2 * k) as f64, (r * k) as f64 - 1.0)
    });
    assert!(unitary_distance(&op(u.clone()), &op(u.clone())).unwrap() < 1e-15);
    let phased = &u * Complex64::from_polar(1.0, std::f64::consts::PI / 7.0);
    assert!(unitary_distance(&op(phased), &op(u)).unwrap() < 1e-14);
    let flipped = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
        c(1.0),
        c(1.0),
        c(1.0),
        c(-1.0),
    ]));
    let d = unitary_distance(&op(CMatrix::identity(4, 4)), &op(flipped)).unwrap();
    assert!((d - 1.0).abs() < 1e-12, "{d}");
    let other = RegisterLayout::new(vec![(1, 4)]).unwrap();
    let v = DenseOperator {
        matrix: CMatrix::identity(4, 4),
        layout: other,
    };
    assert!(unitary_distance(&op(CMatrix::identity(4, 4)), &v).is_err());
}

#[test]
fn scans() {
    let commuting = poly(vec![
        Term::new(0.7, vec![P::number(0)]),
        Term::new(0.3, vec![P::number(0), P::number(1)]),
        Term::new(-0.2, vec![P::number(1)]),
    ])
    .normal_order();
    for (_, d) in trotter_error_scan(&commuting, 0.5, &[1, 2, 4], 1, 3).unwrap() {
        assert!(d < 1e-10, "{d}");
    }

    let h = prepare_hamiltonian(&bose_hubbard(2, 1.0, 1.0, 0.5), OrderingMode::Canonical).unwrap();
    for (order, lo, hi) in [(1, 1.7, 2.3), (2, 3.4, 4.6)] {
        let scan = trotter_error_scan(&h, 0.1, &[4, 8, 16], order, 4).unwrap();
        assert_eq!(scan.iter().map(|s| s.0).collect::<Vec<_>>(), [4, 8, 16]);
        for w in scan.windows(2) {
            let r = w[0].1 / w[1].1;
            assert!((lo..=hi).contains(&r), "order {order}: {scan:?}");
        }
    }
}

#[test]
fn dump_round_trip() {
    let m = CMatrix::from_fn(3, 3, |r, k| Complex64::new(r as f64 * 0.5, k as f64) * I);
    let mut buf = Vec::new();
    write_matrix(&mut buf, &m).unwrap();
    assert_eq!(&buf[..8], &3u64.to_le_bytes());
    assert_eq!(read_matrix(&mut buf.as_slice()).unwrap(), m);
}
