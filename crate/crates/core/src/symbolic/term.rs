// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::op::PrimitiveOp;
use super::registry::ModeRegistry;
use crate::error::Result;
use crate::numfmt::format_complex;

/// A complex coefficient times an ordered product of primitive operators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: Complex64,
    pub factors: Vec<PrimitiveOp>,
}

impl Term {
    pub fn new(coeff: impl Into<Complex64>, factors: Vec<PrimitiveOp>) -> Self {
        Self {
            coeff: coeff.into(),
            factors,
        }
    }

    pub fn identity(coeff: impl Into<Complex64>) -> Self {
        Self::new(coeff, Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Free-algebra product: coefficients multiply, factor lists concatenate.
    pub fn multiply(&self, other: &Term) -> Term {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        Term {
            coeff: self.coeff * other.coeff,
            factors,
        }
    }

    pub fn scaled(&self, c: impl Into<Complex64>) -> Term {
        Term {
            coeff: self.coeff * c.into(),
            factors: self.factors.clone(),
        }
    }

    pub fn adjoint(&self) -> Term {
        Term {
            coeff: self.coeff.conj(),
            factors: self
                .factors
                .iter()
                .rev()
                .map(PrimitiveOp::adjoint)
                .collect(),
        }
    }

    pub fn modes(&self) -> BTreeSet<usize> {
        self.factors.iter().map(|f| f.mode).collect()
    }

    /// Number of distinct sites touched.
    pub fn weight(&self) -> usize {
        self.modes().len()
    }
}

/// Product of two terms after checking both against `registry`.
pub fn multiply_terms(a: &Term, b: &Term, registry: &ModeRegistry) -> Result<Term> {
    for f in a.factors.iter().chain(&b.factors) {
        registry.check_op(f)?;
    }
    Ok(a.multiply(b))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_complex(self.coeff))?;
        if !self.factors.is_empty() {
            write!(f, " *")?;
            for op in &self.factors {
                write!(f, " {op}")?;
            }
        }
        Ok(())
    }
}
