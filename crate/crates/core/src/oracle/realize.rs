// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::layout::RegisterLayout;
use crate::error::{Error, Result};
use crate::isa::{Circuit, GateInstr, Opcode};
use crate::passes::{CompilationPlan, PlanStep};
use crate::symbolic::{expand_term, OpKind, OperatorPoly, PrimitiveOp};

pub type CMatrix = DMatrix<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    pub matrix: CMatrix,
    pub layout: RegisterLayout,
}

impl DenseOperator {
    pub fn identity(layout: &RegisterLayout) -> Self {
        Self {
            matrix: CMatrix::identity(layout.dim(), layout.dim()),
            layout: layout.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.layout.dim()
    }

    /// `other · self`: applies `other` after `self`.
    pub fn then(&self, other: &DenseOperator) -> Result<DenseOperator> {
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch);
        }
        Ok(Self {
            matrix: &other.matrix * &self.matrix,
            layout: self.layout.clone(),
        })
    }

    /// Largest entry of `U^ U - 1`.
    pub fn unitarity_defect(&self) -> f64 {
        let d = self.matrix.adjoint() * &self.matrix - CMatrix::identity(self.dim(), self.dim());
        d.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Action of one primitive on a digit: `(amplitude, new digit)` or `None`.
fn act(kind: OpKind, digit: usize, local_dim: usize) -> Option<(Complex64, usize)> {
    let d = digit;
    match kind {
        OpKind::BosonLower => (d > 0).then(|| (Complex64::new((d as f64).sqrt(), 0.0), d - 1)),
        OpKind::BosonRaise => {
            (d + 1 < local_dim).then(|| (Complex64::new(((d + 1) as f64).sqrt(), 0.0), d + 1))
        }
        OpKind::BosonNumber => (d > 0).then(|| (Complex64::new(d as f64, 0.0), d)),
        OpKind::PauliX => Some((ONE, 1 - d)),
        // Y|0> = i|1>, Y|1> = -i|0>
        OpKind::PauliY => Some((if d == 0 { I } else { -I }, 1 - d)),
        OpKind::PauliZ => Some((if d == 0 { ONE } else { -ONE }, d)),
        OpKind::FermionLower => (d == 1).then_some((ONE, 0)),
        OpKind::FermionRaise => (d == 0).then_some((ONE, 1)),
        OpKind::QuadX | OpKind::QuadP => unreachable!("quadratures are expanded first"),
    }
}

/// Dense matrix of `p` on `layout`.
///
/// Boson ladders are truncated at the layout's local dimension. Raw fermion
/// operators pick up `(-1)` per occupied fermion site listed earlier in the
/// layout, with qubit `|1>` meaning occupied.
pub fn realize_poly(p: &OperatorPoly, layout: &RegisterLayout) -> Result<DenseOperator> {
    let fermion_positions: BTreeSet<usize> = p
        .registry
        .fermions
        .iter()
        .filter_map(|&m| layout.position(m).ok())
        .collect();
    let mut m = CMatrix::zeros(layout.dim(), layout.dim());
    for term in &p.terms {
        for t in expand_term(term) {
            let factors: Vec<(PrimitiveOp, usize)> = t
                .factors
                .iter()
                .map(|f| Ok((*f, layout.position(f.mode)?)))
                .collect::<Result<_>>()?;
            for col in 0..layout.dim() {
                let mut idx = col;
                let mut amp = t.coeff;
                for &(f, pos) in factors.iter().rev() {
                    let digit = layout.digit(idx, pos);
                    let Some((a, nd)) = act(f.kind, digit, layout.sites()[pos].1) else {
                        amp = ZERO;
                        break;
                    };
                    amp *= a;
                    if f.class() == crate::symbolic::SiteClass::Fermion {
                        let occupied_before = fermion_positions
                            .range(..pos)
                            .filter(|&&q| layout.digit(idx, q) == 1)
                            .count();
                        if occupied_before % 2 == 1 {
                            amp = -amp;
                        }
                    }
                    idx = idx - digit * layout.stride(pos) + nd * layout.stride(pos);
                }
                if amp != ZERO {
                    m[(idx, col)] += amp;
                }
            }
        }
    }
    Ok(DenseOperator {
        matrix: m,
        layout: layout.clone(),
    })
}

/// `exp(-i t H)` for a Hermitian matrix via its eigendecomposition.
pub fn hermitian_expm(h: &CMatrix, t: f64) -> CMatrix {
    let sym = (h + h.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    let v = &eig.eigenvectors;
    let phases =
        CMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from_polar(1.0, -l * t)));
    v * phases * v.adjoint()
}

/// `exp(-i t p)` on `layout`.
pub fn exact_evolution(p: &OperatorPoly, t: f64, layout: &RegisterLayout) -> Result<DenseOperator> {
    if !p.is_hermitian() {
        return Err(Error::NonHermitian);
    }
    let h = realize_poly(p, layout)?;
    Ok(DenseOperator {
        matrix: hermitian_expm(&h.matrix, t),
        layout: layout.clone(),
    })
}

/// Precomputed index sets for applying an operator on a few sites.
struct LocalFrame {
    bases: Vec<usize>,
    offsets: Vec<usize>,
}

impl LocalFrame {
    fn new(layout: &RegisterLayout, positions: &[usize]) -> Self {
        let dims: Vec<usize> = positions.iter().map(|&p| layout.sites()[p].1).collect();
        let local_dim: usize = dims.iter().product();
        let offsets = (0..local_dim)
            .map(|l| {
                let mut rem = l;
                let mut off = 0;
                for k in (0..positions.len()).rev() {
                    off += (rem % dims[k]) * layout.stride(positions[k]);
                    rem /= dims[k];
                }
                off
            })
            .collect();
        let bases = (0..layout.dim())
            .filter(|&i| positions.iter().all(|&p| layout.digit(i, p) == 0))
            .collect();
        Self { bases, offsets }
    }

    /// `u <- local · u` where `local` acts on the frame's sites.
    fn apply(&self, u: &mut CMatrix, local: &CMatrix) {
        let n = self.offsets.len();
        let mut v = vec![ZERO; n];
        let mut w = vec![ZERO; n];
        for c in 0..u.ncols() {
            for &b in &self.bases {
                for (k, &o) in self.offsets.iter().enumerate() {
                    v[k] = u[(b + o, c)];
                }
                for (r, wr) in w.iter_mut().enumerate() {
                    let mut s = ZERO;
                    for (k, vk) in v.iter().enumerate() {
                        let a = local[(r, k)];
                        if a != ZERO {
                            s += a * vk;
                        }
                    }
                    *wr = s;
                }
                for (k, &o) in self.offsets.iter().enumerate() {
                    u[(b + o, c)] = w[k];
                }
            }
        }
    }
}

fn ladder(dim: usize) -> CMatrix {
    CMatrix::from_fn(dim, dim, |r, c| {
        if r + 1 == c {
            Complex64::new((c as f64).sqrt(), 0.0)
        } else {
            ZERO
        }
    })
}

fn pauli(kind: OpKind) -> CMatrix {
    let z = ZERO;
    let data = match kind {
        OpKind::PauliX => [z, ONE, ONE, z],
        OpKind::PauliY => [z, -I, I, z],
        _ => [ONE, z, z, -ONE],
    };
    CMatrix::from_row_slice(2, 2, &data)
}

fn check_vector(g: &GateInstr, v: &[f64], dim: usize) -> Result<()> {
    if v.len() != dim {
        return Err(Error::MalformedGate {
            opcode: g.opcode.name().to_string(),
            reason: format!(
                "vector length {} does not match mode dimension {dim}",
                v.len()
            ),
        });
    }
    Ok(())
}

/// Matrix of `g` on its operand sites, first operand most significant.
pub fn local_gate_matrix(g: &GateInstr, dims: &[usize]) -> Result<CMatrix> {
    g.validate()?;
    let m = match g.opcode {
        Opcode::R => {
            let th = g.scalar(0);
            CMatrix::from_diagonal(&nalgebra::DVector::from_fn(dims[0], |n, _| {
                Complex64::from_polar(1.0, -th * n as f64)
            }))
        }
        Opcode::D => {
            let alpha = Complex64::new(g.scalar(0), g.scalar(1));
            let a = ladder(dims[0]);
            // exp(G) with G anti-Hermitian equals exp(-i (iG)).
            let gen = (a.adjoint() * alpha - &a * alpha.conj()) * I;
            hermitian_expm(&gen, 1.0)
        }
        Opcode::BS => {
            let (phi, th) = (g.scalar(0), g.scalar(1));
            let ai = ladder(dims[0]).kronecker(&CMatrix::identity(dims[1], dims[1]));
            let aj = CMatrix::identity(dims[0], dims[0]).kronecker(&ladder(dims[1]));
            let e = Complex64::from_polar(1.0, phi);
            let h = ai.adjoint() * &aj * e + &ai * aj.adjoint() * e.conj();
            hermitian_expm(&h, th)
        }
        Opcode::RZ | Opcode::RY | Opcode::RX => {
            let kind = match g.opcode {
                Opcode::RZ => OpKind::PauliZ,
                Opcode::RY => OpKind::PauliY,
                _ => OpKind::PauliX,
            };
            let th = g.scalar(0);
            CMatrix::identity(2, 2) * Complex64::new(th.cos(), 0.0)
                - pauli(kind) * Complex64::new(0.0, th.sin())
        }
        Opcode::CNOT => {
            let mut m = CMatrix::zeros(4, 4);
            for (r, c) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
                m[(r, c)] = ONE;
            }
            m
        }
        Opcode::CR | Opcode::CPI => {
            let th = if g.opcode == Opcode::CR {
                g.scalar(0)
            } else {
                std::f64::consts::PI
            };
            let d = dims[1];
            CMatrix::from_diagonal(&nalgebra::DVector::from_fn(2 * d, |idx, _| {
                let z = if idx / d == 0 { 1.0 } else { -1.0 };
                Complex64::from_polar(1.0, -th / 2.0 * z * (idx % d) as f64)
            }))
        }
        Opcode::SNAP => {
            let th = g.vector(0);
            let d = dims[1];
            check_vector(g, th, d)?;
            CMatrix::from_diagonal(&nalgebra::DVector::from_fn(2 * d, |idx, _| {
                let z = if idx / d == 0 { 1.0 } else { -1.0 };
                Complex64::from_polar(1.0, -z * th[idx % d])
            }))
        }
        Opcode::SQR => {
            let (th, ph) = (g.vector(0), g.vector(1));
            let d = dims[1];
            check_vector(g, th, d)?;
            let mut m = CMatrix::zeros(2 * d, 2 * d);
            for n in 0..d {
                // R^φ(θ) = cos(θ/2) - i sin(θ/2)(cos φ X + sin φ Y)
                let (c, s) = ((th[n] / 2.0).cos(), (th[n] / 2.0).sin());
                let off = Complex64::new(0.0, -s) * Complex64::from_polar(1.0, -ph[n]);
                let off_t = Complex64::new(0.0, -s) * Complex64::from_polar(1.0, ph[n]);
                m[(n, n)] = Complex64::new(c, 0.0);
                m[(d + n, d + n)] = Complex64::new(c, 0.0);
                m[(n, d + n)] = off;
                m[(d + n, n)] = off_t;
            }
            m
        }
    };
    Ok(m)
}

/// Multiplies `u` on the left by gate `g`.
pub fn apply_gate(u: &mut CMatrix, g: &GateInstr, layout: &RegisterLayout) -> Result<()> {
    let positions: Vec<usize> = g
        .operands
        .iter()
        .map(|&m| layout.position(m))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = positions.iter().map(|&p| layout.sites()[p].1).collect();
    let local = local_gate_matrix(g, &dims)?;
    LocalFrame::new(layout, &positions).apply(u, &local);
    Ok(())
}

pub fn realize_gate(g: &GateInstr, layout: &RegisterLayout) -> Result<DenseOperator> {
    let mut op = DenseOperator::identity(layout);
    apply_gate(&mut op.matrix, g, layout)?;
    Ok(op)
}

/// Product of the circuit's gates, first gate rightmost.
pub fn realize_circuit(c: &Circuit, layout: &RegisterLayout) -> Result<DenseOperator> {
    let mut op = DenseOperator::identity(layout);
    for g in &c.gates {
        apply_gate(&mut op.matrix, g, layout)?;
    }
    Ok(op)
}

/// Multiplies `u` on the left by `exp(-i angle G)`, built on the support of
/// `G` only. Falls back to the full register for raw fermion generators.
pub fn apply_evolution(
    u: &mut CMatrix,
    generator: &OperatorPoly,
    angle: f64,
    layout: &RegisterLayout,
) -> Result<()> {
    if !generator.registry.fermions.is_empty() {
        let h = realize_poly(generator, layout)?;
        *u = hermitian_expm(&h.matrix, angle) * &*u;
        return Ok(());
    }
    let mut positions: Vec<usize> = generator
        .support()
        .into_iter()
        .map(|m| layout.position(m))
        .collect::<Result<_>>()?;
    positions.sort_unstable();
    if positions.is_empty() {
        // Pure identity generator: a global phase.
        let (c, _) = generator.split_identity();
        *u *= Complex64::from_polar(1.0, -angle * c.re);
        return Ok(());
    }
    let sub = RegisterLayout::new(positions.iter().map(|&p| layout.sites()[p]).collect())?;
    let h = realize_poly(generator, &sub)?;
    LocalFrame::new(layout, &positions).apply(u, &hermitian_expm(&h.matrix, angle));
    Ok(())
}

/// Product of a plan's steps, first step rightmost.
pub fn realize_plan(plan: &CompilationPlan, layout: &RegisterLayout) -> Result<DenseOperator> {
    let mut op = DenseOperator::identity(layout);
    for step in &plan.steps {
        match step {
            PlanStep::Gate(g) => apply_gate(&mut op.matrix, g, layout)?,
            PlanStep::Node(n) => apply_evolution(&mut op.matrix, &n.generator, n.angle, layout)?,
        }
    }
    Ok(op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{PrimitiveOp as P, Term};

    fn poly(terms: Vec<Term>) -> OperatorPoly {
        OperatorPoly::from_terms(terms).unwrap()
    }

    fn close(a: &CMatrix, b: &CMatrix, tol: f64) -> bool {
        (a - b).iter().all(|z| z.norm() < tol)
    }

    #[test]
    fn number_operator() {
        let l = RegisterLayout::new(vec![(0, 4)]).unwrap();
        let n = realize_poly(&poly(vec![Term::new(1.0, vec![P::number(0)])]), &l).unwrap();
        let want = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(
            [0.0, 1.0, 2.0, 3.0]
                .map(|x| Complex64::new(x, 0.0))
                .to_vec(),
        ));
        assert_eq!(n.matrix, want);
    }

    #[test]
    fn truncated_commutator() {
        let d = 5;
        let l = RegisterLayout::new(vec![(0, d + 1)]).unwrap();
        let c = poly(vec![
            Term::new(1.0, vec![P::lower(0), P::raise(0)]),
            Term::new(-1.0, vec![P::raise(0), P::lower(0)]),
        ]);
        let m = realize_poly(&c, &l).unwrap().matrix;
        for k in 0..=d {
            let want = if k == d { -(d as f64) } else { 1.0 };
            assert!((m[(k, k)] - Complex64::new(want, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn z_x_kronecker() {
        let l = RegisterLayout::new(vec![(0, 2), (1, 2)]).unwrap();
        let m = realize_poly(&poly(vec![Term::new(1.0, vec![P::z(0), P::x(1)])]), &l)
            .unwrap()
            .matrix;
        let want = pauli(OpKind::PauliZ).kronecker(&pauli(OpKind::PauliX));
        assert_eq!(m, want);
    }

    #[test]
    fn evolution_of_number_matches_r() {
        let l = RegisterLayout::new(vec![(0, 5)]).unwrap();
        let u = exact_evolution(&poly(vec![Term::new(1.0, vec![P::number(0)])]), 0.37, &l).unwrap();
        let r = realize_gate(&GateInstr::r(0, 0.37), &l).unwrap();
        assert!(close(&u.matrix, &r.matrix, 1e-12));
        let id = exact_evolution(&poly(vec![Term::new(1.0, vec![P::number(0)])]), 0.0, &l).unwrap();
        assert!(close(&id.matrix, &CMatrix::identity(5, 5), 1e-14));
    }

    #[test]
    fn cr_squares_to_double_angle() {
        let l = RegisterLayout::new(vec![(0, 2), (1, 4)]).unwrap();
        let a = realize_gate(&GateInstr::cr(0, 1, 0.4), &l).unwrap();
        let b = realize_gate(&GateInstr::cr(0, 1, 0.8), &l).unwrap();
        assert!(close(&(&a.matrix * &a.matrix), &b.matrix, 1e-14));
    }

    #[test]
    fn zero_displacement_is_identity() {
        let l = RegisterLayout::new(vec![(0, 6)]).unwrap();
        let d = realize_gate(&GateInstr::d(0, 0.0, 0.0), &l).unwrap();
        assert!(close(&d.matrix, &CMatrix::identity(6, 6), 1e-14));
    }

    #[test]
    fn sqr_blocks_are_rotations() {
        let l = RegisterLayout::new(vec![(0, 2), (1, 3)]).unwrap();
        let th = vec![0.3, 1.1, -0.7];
        let ph = vec![0.0, 0.5, 2.0];
        let s = realize_gate(&GateInstr::sqr(0, 1, th.clone(), ph.clone()), &l).unwrap();
        for n in 0..3 {
            let axis = pauli(OpKind::PauliX) * Complex64::new(ph[n].cos(), 0.0)
                + pauli(OpKind::PauliY) * Complex64::new(ph[n].sin(), 0.0);
            let r = hermitian_expm(&axis, th[n] / 2.0);
            for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                assert!((s.matrix[(a * 3 + n, b * 3 + n)] - r[(a, b)]).norm() < 1e-13);
            }
        }
        assert!(realize_gate(&GateInstr::sqr(0, 1, vec![0.0; 2], vec![0.0; 2]), &l).is_err());
    }

    #[test]
    fn local_and_full_evolution_agree() {
        let l = RegisterLayout::new(vec![(0, 3), (1, 2), (2, 3)]).unwrap();
        let g = poly(vec![
            Term::new(0.3, vec![P::z(1), P::lower(2)]),
            Term::new(0.3, vec![P::z(1), P::raise(2)]),
        ]);
        let mut u = CMatrix::identity(l.dim(), l.dim());
        apply_evolution(&mut u, &g, 0.9, &l).unwrap();
        let full = exact_evolution(&g, 0.9, &l).unwrap();
        assert!(close(&u, &full.matrix, 1e-12));
    }
}
