// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Independent reference realizations for integration tests.
//!
//! Everything here is built from basis enumeration and a Taylor-series
//! exponential, sharing no code with the library's oracle.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;

use bosonc::symbolic::{OpKind, OperatorPoly, PrimitiveOp, SiteClass, Term};

pub type M = DMatrix<Complex64>;

pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Sites `(mode, local dim)`, first listed most significant.
#[derive(Debug, Clone)]
pub struct Sites {
    pub sites: Vec<(usize, usize)>,
    /// Modes treated as raw fermions, in string order.
    pub fermions: Vec<usize>,
}

impl Sites {
    pub fn new(sites: Vec<(usize, usize)>) -> Self {
        Self {
            sites,
            fermions: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.sites.iter().map(|s| s.1).product()
    }

    pub fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut d = vec![0; self.sites.len()];
        for k in (0..self.sites.len()).rev() {
            d[k] = idx % self.sites[k].1;
            idx /= self.sites[k].1;
        }
        d
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.sites)
            .fold(0, |acc, (d, s)| acc * s.1 + d)
    }

    fn pos(&self, mode: usize) -> usize {
        self.sites
            .iter()
            .position(|s| s.0 == mode)
            .unwrap_or_else(|| panic!("mode {mode} not in test layout"))
    }
}

/// Full-register matrix of one primitive.
pub fn primitive(op: PrimitiveOp, s: &Sites) -> M {
    let dim = s.dim();
    let p = s.pos(op.mode);
    let d = s.sites[p].1;
    let sq = std::f64::consts::FRAC_1_SQRT_2;
    if op.kind.is_quadrature() {
        let lower = primitive(PrimitiveOp::lower(op.mode), s);
        let raise = primitive(PrimitiveOp::raise(op.mode), s);
        return match op.kind {
            OpKind::QuadX => (lower + raise) * c(sq),
            _ => (lower - raise) * (Complex64::new(0.0, -sq)),
        };
    }
    let mut m = M::zeros(dim, dim);
    for col in 0..dim {
        let digits = s.digits(col);
        let v = digits[p];
        let (amp, nv) = match op.kind {
            OpKind::BosonLower if v > 0 => (c((v as f64).sqrt()), v - 1),
            OpKind::BosonRaise if v + 1 < d => (c(((v + 1) as f64).sqrt()), v + 1),
            OpKind::BosonNumber => (c(v as f64), v),
            OpKind::PauliX => (c(1.0), 1 - v),
            OpKind::PauliY => (if v == 0 { I } else { -I }, 1 - v),
            OpKind::PauliZ => (c(if v == 0 { 1.0 } else { -1.0 }), v),
            OpKind::FermionLower if v == 1 => (c(1.0), 0),
            OpKind::FermionRaise if v == 0 => (c(1.0), 1),
            _ => continue,
        };
        let mut amp = amp;
        if op.class() == SiteClass::Fermion {
            let before = s.fermions.iter().take_while(|&&f| f != op.mode);
            let occupied = before.filter(|&&f| digits[s.pos(f)] == 1).count();
            if occupied % 2 == 1 {
                amp = -amp;
            }
        }
        let mut nd = digits.clone();
        nd[p] = nv;
        m[(s.index(&nd), col)] += amp;
    }
    m
}

pub fn term_matrix(t: &Term, s: &Sites) -> M {
    let mut m = M::identity(s.dim(), s.dim()) * t.coeff;
    for f in &t.factors {
        m *= primitive(*f, s);
    }
    m
}

pub fn dense(p: &OperatorPoly, s: &Sites) -> M {
    p.terms
        .iter()
        .fold(M::zeros(s.dim(), s.dim()), |acc, t| acc + term_matrix(t, s))
}

/// `exp(-i t H)` by scaling and squaring a Taylor series.
pub fn expm(h: &M, t: f64) -> M {
    let a = h * Complex64::new(0.0, -t);
    let norm: f64 = a.iter().map(|z| z.norm()).sum::<f64>().max(1e-300);
    let squarings = (norm.log2().ceil().max(0.0) as u32) + 2;
    let scaled = &a * c(0.5f64.powi(squarings as i32));
    let n = h.nrows();
    let mut sum = M::identity(n, n);
    let mut term = M::identity(n, n);
    for k in 1..40 {
        term = &term * &scaled * c(1.0 / k as f64);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Phase-aligned normalized Frobenius distance.
pub fn dist(u: &M, v: &M) -> f64 {
    let overlap: Complex64 = (v.adjoint() * u).trace();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        c(1.0)
    };
    (u - v * phase).norm() / (u.nrows() as f64).sqrt()
}

pub fn max_abs(m: &M) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Rows and columns restricted to `idx`.
pub fn block(m: &M, idx: &[usize]) -> M {
    M::from_fn(idx.len(), idx.len(), |r, k| m[(idx[r], idx[k])])
}
