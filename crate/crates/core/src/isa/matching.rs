// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Recognition of native generators.
//!
//! Generators arrive normal-ordered and collected, so each native form has
//! one canonical shape: `c n_i` is `R`, `c Z_q n_j` is `CR`, a `c a_i^ a_j`
//! pair with its conjugate is `BS`, and so on. The identity component is a
//! global phase and is ignored.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;

use super::gate::GateInstr;
use crate::error::{Error, Result};
use crate::symbolic::{OpKind, OperatorPoly, PrimitiveOp, Term};

#[derive(Debug, Clone, PartialEq)]
pub enum NativeMatch {
    /// Identity up to a global phase.
    Drop,
    Gate(GateInstr),
    /// Native multi-gate synthesis (Pauli strings).
    Sequence(Vec<GateInstr>),
    NoMatch,
}

const PHASE_TOL: f64 = 1e-12;

fn real_coeff(t: &Term) -> Option<f64> {
    (t.coeff.im.abs() <= 1e-12 * t.coeff.norm().max(1.0)).then_some(t.coeff.re)
}

/// Mode `j` and the coefficients of `p(n) = Σ c_r n^r` when every term is
/// `c_r n_j^r`, times the Pauli `cond` if given.
pub(crate) fn number_polynomial(
    g: &OperatorPoly,
    cond: Option<PrimitiveOp>,
) -> Option<(usize, Vec<f64>)> {
    let mut mode = None;
    let mut coeffs: Vec<f64> = Vec::new();
    for t in &g.terms {
        let c = real_coeff(t)?;
        let paulis: Vec<PrimitiveOp> = t
            .factors
            .iter()
            .copied()
            .filter(|f| f.kind.is_pauli())
            .collect();
        if paulis != cond.into_iter().collect::<Vec<_>>() {
            return None;
        }
        let mut power = 0;
        for op in t.factors.iter().filter(|f| !f.kind.is_pauli()) {
            if op.kind != OpKind::BosonNumber || *mode.get_or_insert(op.mode) != op.mode {
                return None;
            }
            power += 1;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0.0);
        }
        coeffs[power] += c;
    }
    Some((mode?, coeffs))
}

pub(crate) fn eval_poly(coeffs: &[f64], m: usize) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * m as f64 + c)
}

/// `SNAP_{q,j}` implementing `exp(-i angle Z_q p(n_j))`, with
/// `θ_m = angle · p(m)` for `m = 0..=n_max`. `None` when `p` vanishes.
pub fn snap_synthesis(
    mode: usize,
    companion: usize,
    coeffs: &[f64],
    angle: f64,
    cutoff: Option<usize>,
) -> Result<Option<GateInstr>> {
    let n_max = cutoff.ok_or(Error::MissingCutoff("size SNAP phase vectors"))?;
    let theta: Vec<f64> = (0..=n_max).map(|m| angle * eval_poly(coeffs, m)).collect();
    if theta.iter().all(|&x| x == 0.0) {
        return Ok(None);
    }
    Ok(Some(GateInstr::snap(companion, mode, theta)))
}

/// `exp(-iθ P_1 … P_k)` by rotating each factor onto `Z`, a CNOT ladder onto
/// the last qubit, `RZ(θ)` and the mirror image.
pub fn pauli_rotation_synthesis(string: &Term, theta: f64) -> Result<Vec<GateInstr>> {
    let mut factors = string.factors.clone();
    if factors.is_empty() || factors.iter().any(|f| !f.kind.is_pauli()) {
        return Err(Error::Precondition(format!(
            "{string} is not a Pauli string"
        )));
    }
    factors.sort_by_key(|f| f.mode);
    let mut before = Vec::new();
    let mut after = Vec::new();
    for f in &factors {
        match f.kind {
            OpKind::PauliX => {
                before.push(GateInstr::ry(f.mode, -FRAC_PI_4));
                after.push(GateInstr::ry(f.mode, FRAC_PI_4));
            }
            OpKind::PauliY => {
                before.push(GateInstr::rx(f.mode, FRAC_PI_4));
                after.push(GateInstr::rx(f.mode, -FRAC_PI_4));
            }
            _ => {}
        }
    }
    let ladder: Vec<GateInstr> = factors
        .windows(2)
        .map(|w| GateInstr::cnot(w[0].mode, w[1].mode))
        .collect();
    let mut out = before;
    out.extend(ladder.iter().cloned());
    out.push(GateInstr::rz(factors.last().unwrap().mode, theta));
    out.extend(ladder.into_iter().rev());
    out.extend(after);
    Ok(out)
}

fn single(kinds: &[OpKind], t: &Term) -> bool {
    t.factors.len() == kinds.len() && t.factors.iter().zip(kinds).all(|(f, k)| f.kind == *k)
}

/// Matches `exp(-i angle G)` against the native gate set.
pub fn match_native(generator: &OperatorPoly, angle: f64, cutoff: Option<usize>) -> NativeMatch {
    let (_, g) = generator.split_identity();
    if g.is_empty() || angle == 0.0 {
        return NativeMatch::Drop;
    }
    if g.len() == 1 {
        let t = &g.terms[0];
        let Some(c) = real_coeff(t) else {
            return NativeMatch::NoMatch;
        };
        let f = &t.factors;
        if single(&[OpKind::BosonNumber], t) {
            return NativeMatch::Gate(GateInstr::r(f[0].mode, angle * c));
        }
        if single(&[OpKind::BosonNumber, OpKind::PauliZ], t) {
            let theta = 2.0 * angle * c;
            return NativeMatch::Gate(if (theta - std::f64::consts::PI).abs() < PHASE_TOL {
                GateInstr::cpi(f[1].mode, f[0].mode)
            } else {
                GateInstr::cr(f[1].mode, f[0].mode, theta)
            });
        }
        if f.iter().all(|p| p.kind.is_pauli()) {
            if f.len() == 1 {
                let theta = angle * c;
                return NativeMatch::Gate(match f[0].kind {
                    OpKind::PauliX => GateInstr::rx(f[0].mode, theta),
                    OpKind::PauliY => GateInstr::ry(f[0].mode, theta),
                    _ => GateInstr::rz(f[0].mode, theta),
                });
            }
            return match pauli_rotation_synthesis(t, angle * c) {
                Ok(gates) => NativeMatch::Sequence(gates),
                Err(_) => NativeMatch::NoMatch,
            };
        }
    }
    if g.len() == 2 {
        if let Some(m) = match_pair(&g, angle) {
            return NativeMatch::Gate(m);
        }
    }
    // Vector-parameterized forms: P_q p(n_j).
    if let Some(first) = g.terms[0]
        .factors
        .iter()
        .copied()
        .find(|f| f.kind.is_pauli())
    {
        if let Some((j, coeffs)) = number_polynomial(&g, Some(first)) {
            let Some(n_max) = cutoff else {
                return NativeMatch::NoMatch;
            };
            let q = first.mode;
            let p: Vec<f64> = (0..=n_max).map(|m| eval_poly(&coeffs, m)).collect();
            return NativeMatch::Gate(match first.kind {
                OpKind::PauliZ => GateInstr::snap(q, j, p.iter().map(|x| angle * x).collect()),
                kind => {
                    let phi = if kind == OpKind::PauliX {
                        0.0
                    } else {
                        FRAC_PI_2
                    };
                    GateInstr::sqr(
                        q,
                        j,
                        p.iter().map(|x| 2.0 * angle * x).collect(),
                        vec![phi; n_max + 1],
                    )
                }
            });
        }
    }
    NativeMatch::NoMatch
}

/// `BS` from `c a_i^ a_j + c* a_i a_j^` (`i < j`), `D` from `c a^ + c* a`.
fn match_pair(g: &OperatorPoly, angle: f64) -> Option<GateInstr> {
    let (t0, t1) = (&g.terms[0], &g.terms[1]);
    if (t0.coeff - t1.coeff.conj()).norm() > 1e-12 * t0.coeff.norm().max(1.0) {
        return None;
    }
    let (c, fa, fb) = (t0.coeff, &t0.factors, &t1.factors);
    if fa.len() == 1 && fb.len() == 1 && fa[0].mode == fb[0].mode {
        let (c, m) = match (fa[0].kind, fb[0].kind) {
            (OpKind::BosonRaise, OpKind::BosonLower) => (c, fa[0].mode),
            (OpKind::BosonLower, OpKind::BosonRaise) => (c.conj(), fa[0].mode),
            _ => return None,
        };
        let alpha = Complex64::new(0.0, -angle) * c;
        return Some(GateInstr::d(m, alpha.re, alpha.im));
    }
    if fa.len() == 2 && fb.len() == 2 {
        let (i, j) = (fa[0].mode, fa[1].mode);
        if i == j || fb[0].mode != i || fb[1].mode != j {
            return None;
        }
        use OpKind::{BosonLower as L, BosonRaise as U};
        let c = match ([fa[0].kind, fa[1].kind], [fb[0].kind, fb[1].kind]) {
            ([U, L], [L, U]) => c,
            ([L, U], [U, L]) => c.conj(),
            _ => return None,
        };
        return Some(GateInstr::bs(i, j, c.arg(), angle * c.norm()));
    }
    None
}
