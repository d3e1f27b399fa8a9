// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Quadratures in terms of ladder operators:
//! `x = (a + a^)/√2` and `p = (a - a^)/(i√2)`.

use num_complex::Complex64;

use super::op::{OpKind, PrimitiveOp};
use super::poly::OperatorPoly;
use super::term::Term;

/// Expands every quadrature factor of `term`, keeping factor order.
pub fn expand_term(term: &Term) -> Vec<Term> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut partial = vec![Term::identity(term.coeff)];
    for f in &term.factors {
        let options: Vec<(Complex64, PrimitiveOp)> = match f.kind {
            OpKind::QuadX => vec![
                (Complex64::new(s, 0.0), PrimitiveOp::lower(f.mode)),
                (Complex64::new(s, 0.0), PrimitiveOp::raise(f.mode)),
            ],
            // 1/(i√2) = -i/√2
            OpKind::QuadP => vec![
                (Complex64::new(0.0, -s), PrimitiveOp::lower(f.mode)),
                (Complex64::new(0.0, s), PrimitiveOp::raise(f.mode)),
            ],
            _ => vec![(Complex64::new(1.0, 0.0), *f)],
        };
        partial = partial
            .iter()
            .flat_map(|t| {
                options.iter().map(move |(c, op)| {
                    let mut factors = t.factors.clone();
                    factors.push(*op);
                    Term::new(t.coeff * c, factors)
                })
            })
            .collect();
    }
    partial
}

/// Replaces all quadrature primitives by ladder combinations (uncollected).
pub fn expand_quadratures(p: &OperatorPoly) -> OperatorPoly {
    OperatorPoly::with_registry(
        p.terms.iter().flat_map(expand_term).collect(),
        p.registry.clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_and_p() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let x = expand_term(&Term::new(1.0, vec![PrimitiveOp::quad_x(0)]));
        assert_eq!(x.len(), 2);
        assert_eq!(x[0], Term::new(s, vec![PrimitiveOp::lower(0)]));
        assert_eq!(x[1], Term::new(s, vec![PrimitiveOp::raise(0)]));
        let p = expand_term(&Term::new(1.0, vec![PrimitiveOp::quad_p(0)]));
        assert_eq!(
            p[0],
            Term::new(Complex64::new(0.0, -s), vec![PrimitiveOp::lower(0)])
        );
        assert_eq!(
            p[1],
            Term::new(Complex64::new(0.0, s), vec![PrimitiveOp::raise(0)])
        );
    }

    #[test]
    fn x_squared_normal_orders() {
        let p = OperatorPoly::from_terms(vec![Term::new(
            1.0,
            vec![PrimitiveOp::quad_x(0), PrimitiveOp::quad_x(0)],
        )])
        .unwrap();
        let got = p.normal_order();
        let want = OperatorPoly::from_terms(vec![
            Term::new(0.5, vec![PrimitiveOp::lower(0), PrimitiveOp::lower(0)]),
            Term::new(0.5, vec![PrimitiveOp::raise(0), PrimitiveOp::raise(0)]),
            Term::new(1.0, vec![PrimitiveOp::number(0)]),
            Term::identity(0.5),
        ])
        .unwrap();
        assert!(got.approx_eq(&want, 1e-12));
    }
}
