// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexMap;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::op::{OpKind, PrimitiveOp};
use super::ordering::{normal_order_term, OrderingMode};
use super::registry::ModeRegistry;
use super::term::Term;
use crate::error::Result;

/// Coefficients below this magnitude are dropped by [`OperatorPoly::collect`].
pub const COLLECT_EPS: f64 = 1e-12;

/// A sum of terms together with the registry its modes belong to.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct OperatorPoly {
    pub terms: Vec<Term>,
    pub registry: ModeRegistry,
}

impl OperatorPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a poly, inferring the registry from the factor kinds.
    pub fn from_terms(terms: Vec<Term>) -> Result<Self> {
        let mut registry = ModeRegistry::new();
        for t in &terms {
            for f in &t.factors {
                registry.register_op(f)?;
            }
        }
        Ok(Self { terms, registry })
    }

    pub fn from_term(term: Term) -> Result<Self> {
        Self::from_terms(vec![term])
    }

    /// Builds a poly over an existing registry without checking the terms.
    pub fn with_registry(terms: Vec<Term>, registry: ModeRegistry) -> Self {
        Self { terms, registry }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn push(&mut self, term: Term) -> Result<()> {
        for f in &term.factors {
            self.registry.register_op(f)?;
        }
        self.terms.push(term);
        Ok(())
    }

    pub fn add(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        let registry = self.registry.union(&other.registry)?;
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Ok(Self { terms, registry })
    }

    pub fn sub(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        self.add(&other.scale(-1.0))
    }

    /// Free-algebra product; call [`normal_order`](Self::normal_order) to simplify.
    pub fn mul(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        let registry = self.registry.union(&other.registry)?;
        let terms = self
            .terms
            .iter()
            .flat_map(|a| other.terms.iter().map(move |b| a.multiply(b)))
            .collect();
        Ok(Self { terms, registry })
    }

    pub fn scale(&self, c: impl Into<Complex64>) -> OperatorPoly {
        let c = c.into();
        Self {
            terms: self.terms.iter().map(|t| t.scaled(c)).collect(),
            registry: self.registry.clone(),
        }
    }

    pub fn adjoint(&self) -> OperatorPoly {
        Self {
            terms: self.terms.iter().map(Term::adjoint).collect(),
            registry: self.registry.clone(),
        }
    }

    /// Merges terms with identical factor lists, keeping first-occurrence order.
    pub fn collect(&self) -> OperatorPoly {
        let mut acc: IndexMap<&[PrimitiveOp], Complex64> = IndexMap::new();
        for t in &self.terms {
            *acc.entry(t.factors.as_slice())
                .or_insert(Complex64::new(0.0, 0.0)) += t.coeff;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| c.norm() >= COLLECT_EPS)
            .map(|(f, c)| Term::new(c, f.to_vec()))
            .collect();
        Self {
            terms,
            registry: self.registry.clone(),
        }
    }

    pub fn normal_order(&self) -> OperatorPoly {
        self.normal_order_with(OrderingMode::Canonical)
    }

    pub fn normal_order_with(&self, mode: OrderingMode) -> OperatorPoly {
        let terms = self
            .terms
            .iter()
            .flat_map(|t| normal_order_term(t, mode))
            .collect();
        Self {
            terms,
            registry: self.registry.clone(),
        }
        .collect()
    }

    pub fn is_hermitian(&self) -> bool {
        match self.sub(&self.adjoint()) {
            Ok(d) => d.normal_order().is_empty(),
            Err(_) => false,
        }
    }

    /// Normal-ordered `[self, other]`.
    pub fn commutator(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        Ok(self.mul(other)?.sub(&other.mul(self)?)?.normal_order())
    }

    /// Triangle-inequality bound on the operator norm on a register where
    /// every boson mode is truncated at `cutoff` quanta.
    pub fn norm_bound(&self, cutoff: usize) -> f64 {
        let c = cutoff as f64;
        self.terms
            .iter()
            .map(|t| {
                t.coeff.norm()
                    * t.factors
                        .iter()
                        .map(|f| match f.kind {
                            OpKind::BosonLower | OpKind::BosonRaise => c.sqrt(),
                            OpKind::BosonNumber => c,
                            OpKind::QuadX | OpKind::QuadP => (2.0 * c).sqrt(),
                            _ => 1.0,
                        })
                        .product::<f64>()
            })
            .sum()
    }

    /// Every mode touched by some term.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.iter().flat_map(|t| t.modes()).collect()
    }

    /// Splits off the identity component: `(c, rest)` with `self = c + rest`.
    pub fn split_identity(&self) -> (Complex64, OperatorPoly) {
        let mut c = Complex64::new(0.0, 0.0);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.is_identity() {
                c += t.coeff;
            } else {
                terms.push(t.clone());
            }
        }
        (
            c,
            Self {
                terms,
                registry: self.registry.clone(),
            },
        )
    }

    /// Equality as collected multisets, with coefficients compared to `tol`.
    pub fn approx_eq(&self, other: &OperatorPoly, tol: f64) -> bool {
        let collect = |p: &OperatorPoly| {
            let mut m: IndexMap<Vec<PrimitiveOp>, Complex64> = IndexMap::new();
            for t in &p.terms {
                *m.entry(t.factors.clone())
                    .or_insert(Complex64::new(0.0, 0.0)) += t.coeff;
            }
            m
        };
        let a = collect(self);
        let b = collect(other);
        let zero = Complex64::new(0.0, 0.0);
        a.iter()
            .all(|(k, c)| (c - b.get(k).copied().unwrap_or(zero)).norm() <= tol)
            && b.iter()
                .all(|(k, c)| (c - a.get(k).copied().unwrap_or(zero)).norm() <= tol)
    }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

pub fn normal_order(p: &OperatorPoly) -> OperatorPoly {
    p.normal_order()
}

pub fn collect(p: &OperatorPoly) -> OperatorPoly {
    p.collect()
}

/// True iff `p - p^` normal-orders to zero.
pub fn validate_hermitian(p: &OperatorPoly) -> bool {
    p.is_hermitian()
}
