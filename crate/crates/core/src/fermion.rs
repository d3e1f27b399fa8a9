// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Fermion-to-qubit mappings.
//!
//! Convention: qubit `|0>` is the empty orbital and `|1>` the occupied one, so
//! `Z|0> = |0>`, `c^ = (X - iY)/2 = |1><0|` and `c = (X + iY)/2 = |0><1|`.
//! Under Jordan-Wigner the fermion at position `j` of the site order becomes
//! the qubit with the same index, dressed with `Z` on every earlier site.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::symbolic::{OpKind, OperatorPoly, PrimitiveOp, SiteClass, Term};

pub trait FermionMapping {
    fn name(&self) -> &'static str;

    /// Qubit polynomial representing one fermion raising or lowering operator.
    fn map_primitive(&self, op: &PrimitiveOp) -> Result<Vec<Term>>;

    /// Image of a whole term, unordered. The default multiplies the images of
    /// the factors.
    fn map_term(&self, t: &Term) -> Result<Vec<Term>> {
        let mut partial = vec![Term::identity(t.coeff)];
        for f in &t.factors {
            let image = if f.class() == SiteClass::Fermion {
                self.map_primitive(f)?
            } else {
                vec![Term::new(1.0, vec![*f])]
            };
            partial = partial
                .iter()
                .flat_map(|a| image.iter().map(move |b| a.multiply(b)))
                .collect();
        }
        Ok(partial)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanWigner {
    site_order: Vec<usize>,
}

impl JordanWigner {
    /// String direction given by `site_order`, which must not repeat a mode.
    pub fn new(site_order: Vec<usize>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &m in &site_order {
            if !seen.insert(m) {
                return Err(Error::BadSiteOrder(format!("mode {m} listed twice")));
            }
        }
        Ok(Self { site_order })
    }

    /// Ascending order over the fermion modes of `p`'s registry.
    pub fn for_poly(p: &OperatorPoly) -> Self {
        Self {
            site_order: p.registry.fermions.iter().copied().collect(),
        }
    }

    pub fn site_order(&self) -> &[usize] {
        &self.site_order
    }
}

impl FermionMapping for JordanWigner {
    fn name(&self) -> &'static str {
        "jordan-wigner"
    }

    fn map_primitive(&self, op: &PrimitiveOp) -> Result<Vec<Term>> {
        jw_map_primitive(op, &self.site_order)
    }

    /// Strings are only materialized on the term's own fermion sites. Every
    /// other site `k` is touched by nothing but `Z`s, which commute out and
    /// leave `Z_k` to the parity of factors sitting after `k`.
    fn map_term(&self, t: &Term) -> Result<Vec<Term>> {
        let position = |m: usize| {
            self.site_order
                .iter()
                .position(|&s| s == m)
                .ok_or(Error::UnknownMode(m))
        };
        let mut positions = Vec::new();
        for f in t.factors.iter().filter(|f| f.class() == SiteClass::Fermion) {
            positions.push(position(f.mode)?);
        }
        if positions.is_empty() {
            return Ok(vec![t.clone()]);
        }
        let own: std::collections::BTreeSet<usize> = positions.iter().copied().collect();
        let top = *own.last().expect("positions is non-empty");
        let parity_string: Vec<PrimitiveOp> = (0..top)
            .filter(|k| !own.contains(k))
            .filter(|&k| positions.iter().filter(|&&p| p > k).count() % 2 == 1)
            .map(|k| PrimitiveOp::z(self.site_order[k]))
            .collect();
        let mut partial = vec![Term::new(t.coeff, parity_string)];
        for f in &t.factors {
            let image = if f.class() == SiteClass::Fermion {
                let p = position(f.mode)?;
                let string: Vec<PrimitiveOp> = own
                    .range(..p)
                    .map(|&k| PrimitiveOp::z(self.site_order[k]))
                    .collect();
                jw_map_primitive(f, &self.site_order[p..=p])?
                    .into_iter()
                    .map(|local| {
                        let mut fs = string.clone();
                        fs.extend(local.factors);
                        Term::new(local.coeff, fs)
                    })
                    .collect()
            } else {
                vec![Term::new(1.0, vec![*f])]
            };
            partial = partial
                .iter()
                .flat_map(|a| image.iter().map(move |b| a.multiply(b)))
                .collect();
        }
        Ok(partial)
    }
}

/// Placeholder for the Bravyi-Kitaev mapping.
#[derive(Debug, Clone, Copy, Default)]
pub struct BravyiKitaev;

impl FermionMapping for BravyiKitaev {
    fn name(&self) -> &'static str {
        "bravyi-kitaev"
    }

    fn map_primitive(&self, _op: &PrimitiveOp) -> Result<Vec<Term>> {
        Err(Error::UnimplementedMapping("bravyi-kitaev"))
    }
}

/// Placeholder for the parity mapping.
#[derive(Debug, Clone, Copy, Default)]
pub struct Parity;

impl FermionMapping for Parity {
    fn name(&self) -> &'static str {
        "parity"
    }

    fn map_primitive(&self, _op: &PrimitiveOp) -> Result<Vec<Term>> {
        Err(Error::UnimplementedMapping("parity"))
    }
}

/// `(∏_{k before j} Z_k) σ^±_j` in the Pauli basis: one `X_j` and one `Y_j` term.
pub fn jw_map_primitive(op: &PrimitiveOp, site_order: &[usize]) -> Result<Vec<Term>> {
    let pos = site_order
        .iter()
        .position(|&m| m == op.mode)
        .ok_or(Error::UnknownMode(op.mode))?;
    let y_coeff = match op.kind {
        OpKind::FermionRaise => Complex64::new(0.0, -0.5),
        OpKind::FermionLower => Complex64::new(0.0, 0.5),
        _ => {
            return Err(Error::Precondition(format!(
                "{op} is not a fermion ladder operator"
            )))
        }
    };
    let mut string: Vec<PrimitiveOp> = site_order[..pos]
        .iter()
        .map(|&k| PrimitiveOp::z(k))
        .collect();
    string.sort();
    let with = |p: PrimitiveOp| {
        let mut f = string.clone();
        f.push(p);
        f
    };
    Ok(vec![
        Term::new(0.5, with(PrimitiveOp::x(op.mode))),
        Term::new(y_coeff, with(PrimitiveOp::y(op.mode))),
    ])
}

/// Replaces every fermion factor through `mapping`, then normal-orders.
///
/// Fermion indices become qubit indices; the output registry has no fermions.
pub fn map_poly(p: &OperatorPoly, mapping: &dyn FermionMapping) -> Result<OperatorPoly> {
    let mut registry = p.registry.clone();
    let fermions = std::mem::take(&mut registry.fermions);
    for m in fermions {
        registry.register(m, SiteClass::Qubit)?;
    }
    let mut terms = Vec::new();
    for t in &p.terms {
        terms.extend(mapping.map_term(t)?);
    }
    for t in &terms {
        for f in &t.factors {
            registry.register_op(f)?;
        }
    }
    Ok(OperatorPoly::with_registry(terms, registry).normal_order())
}

/// Jordan-Wigner image of `p` with ascending site order.
pub fn jw_map_poly(p: &OperatorPoly) -> Result<OperatorPoly> {
    map_poly(p, &JordanWigner::for_poly(p))
}

/// `{jw(c_i), jw(c_j^)} - δ_ij`, which must vanish.
pub fn check_anticommutation(i: usize, j: usize, site_order: &[usize]) -> Result<OperatorPoly> {
    let ci = OperatorPoly::from_terms(jw_map_primitive(
        &PrimitiveOp::fermion_lower(i),
        site_order,
    )?)?;
    let cj = OperatorPoly::from_terms(jw_map_primitive(
        &PrimitiveOp::fermion_raise(j),
        site_order,
    )?)?;
    let mut anti = ci.mul(&cj)?.add(&cj.mul(&ci)?)?;
    if i == j {
        anti.push(Term::identity(-1.0))?;
    }
    Ok(anti.normal_order())
}
