// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Benchmark Hamiltonians on a 1D nearest-neighbour chain.
//!
//! Site layout for Hubbard–Holstein: fermion `(i, σ)` is index `2i + σ`
//! (σ = 0 up, 1 down), boson `i` is `2 N_s + i`. Bose–Hubbard boson `i` is
//! index `i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symbolic::{OperatorPoly, PrimitiveOp as P, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelKind {
    BoseHubbard,
    HubbardHolstein,
}

impl ModelKind {
    pub const ALL: [ModelKind; 2] = [ModelKind::BoseHubbard, ModelKind::HubbardHolstein];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::BoseHubbard => "bose_hubbard",
            ModelKind::HubbardHolstein => "hubbard_holstein",
        }
    }

    /// Parameter names with their defaults.
    pub fn defaults(self) -> &'static [(&'static str, f64)] {
        match self {
            ModelKind::BoseHubbard => &[("t", 1.0), ("U", 1.0), ("mu", 0.5)],
            ModelKind::HubbardHolstein => &[("t", 1.0), ("g", 1.0), ("U", 0.6), ("omega", 1.0)],
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bose_hubbard" | "bh" => Ok(ModelKind::BoseHubbard),
            "hubbard_holstein" | "hh" => Ok(ModelKind::HubbardHolstein),
            _ => Err(Error::Config(format!("unknown model {s:?}"))),
        }
    }
}

fn canonical_param(name: &str) -> &str {
    match name {
        "μ" => "mu",
        "ω" => "omega",
        other => other,
    }
}

/// A named model with its size, boundary and parameters.
///
/// Each parameter holds one value (uniform) or one value per site. The
/// hopping `t` may instead hold one value per bond.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    pub kind: ModelKind,
    pub sites: usize,
    pub periodic: bool,
    pub params: BTreeMap<String, Vec<f64>>,
}

impl ModelSpec {
    pub fn new(kind: ModelKind, sites: usize) -> Self {
        let params = kind
            .defaults()
            .iter()
            .map(|&(k, v)| (k.to_string(), vec![v]))
            .collect();
        Self {
            kind,
            sites,
            periodic: false,
            params,
        }
    }

    pub fn set(&mut self, name: &str, values: Vec<f64>) -> Result<()> {
        let name = canonical_param(name);
        if !self.params.contains_key(name) {
            return Err(Error::Config(format!(
                "{} has no parameter {name:?}",
                self.kind
            )));
        }
        if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config(format!(
                "parameter {name} needs finite values"
            )));
        }
        self.params.insert(name.to_string(), values);
        Ok(())
    }

    /// Applies `name=v` or `name=v0,v1,...`.
    pub fn set_from_str(&mut self, assignment: &str) -> Result<()> {
        let (name, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("expected name=value, got {assignment:?}")))?;
        let values = value
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Config(format!("bad value {v:?} for {name}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.set(name.trim(), values)
    }

    /// Nearest-neighbour bonds; the wrap-around bond needs at least 3 sites.
    pub fn bonds(&self) -> Vec<(usize, usize)> {
        let n = self.sites;
        let mut b: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        if self.periodic && n >= 3 {
            b.push((n - 1, 0));
        }
        b
    }

    fn site_values(&self, name: &str) -> Result<Vec<f64>> {
        let v = &self.params[name];
        match v.len() {
            1 => Ok(vec![v[0]; self.sites]),
            n if n == self.sites => Ok(v.clone()),
            n => Err(Error::Config(format!(
                "{name} has {n} values for {} sites",
                self.sites
            ))),
        }
    }

    fn bond_values(&self) -> Result<Vec<f64>> {
        let v = &self.params["t"];
        let bonds = self.bonds().len();
        match v.len() {
            1 => Ok(vec![v[0]; bonds]),
            n if n == bonds => Ok(v.clone()),
            n => Err(Error::Config(format!("t has {n} values for {bonds} bonds"))),
        }
    }

    pub fn build(&self) -> Result<OperatorPoly> {
        if self.sites == 0 {
            return Err(Error::Config("a model needs at least one site".into()));
        }
        let t = self.bond_values()?;
        let bonds = self.bonds();
        match self.kind {
            ModelKind::BoseHubbard => build_bose_hubbard(
                self.sites,
                &bonds,
                &t,
                &self.site_values("U")?,
                &self.site_values("mu")?,
            ),
            ModelKind::HubbardHolstein => build_hubbard_holstein(
                self.sites,
                &bonds,
                &t,
                &self.site_values("g")?,
                &self.site_values("U")?,
                &self.site_values("omega")?,
            ),
        }
    }
}

fn build_bose_hubbard(
    n: usize,
    bonds: &[(usize, usize)],
    t: &[f64],
    u: &[f64],
    mu: &[f64],
) -> Result<OperatorPoly> {
    let mut terms = Vec::new();
    for (&(i, j), &tb) in bonds.iter().zip(t) {
        terms.push(Term::new(tb, vec![P::raise(i), P::lower(j)]));
        terms.push(Term::new(tb, vec![P::raise(j), P::lower(i)]));
    }
    for (i, &ui) in u.iter().enumerate().take(n) {
        terms.push(Term::new(ui / 2.0, vec![P::number(i), P::number(i)]));
        terms.push(Term::new(-ui / 2.0, vec![P::number(i)]));
    }
    for (i, &m) in mu.iter().enumerate().take(n) {
        terms.push(Term::new(-m, vec![P::number(i)]));
    }
    OperatorPoly::from_terms(terms)
}

pub fn fermion_index(site: usize, spin: usize) -> usize {
    2 * site + spin
}

pub fn holstein_boson_index(sites: usize, site: usize) -> usize {
    2 * sites + site
}

fn build_hubbard_holstein(
    n: usize,
    bonds: &[(usize, usize)],
    t: &[f64],
    g: &[f64],
    u: &[f64],
    omega: &[f64],
) -> Result<OperatorPoly> {
    let f = fermion_index;
    let b = |i| holstein_boson_index(n, i);
    let mut terms = Vec::new();
    for (&(i, j), &tb) in bonds.iter().zip(t) {
        for s in 0..2 {
            terms.push(Term::new(
                tb,
                vec![P::fermion_raise(f(i, s)), P::fermion_lower(f(j, s))],
            ));
            terms.push(Term::new(
                tb,
                vec![P::fermion_raise(f(j, s)), P::fermion_lower(f(i, s))],
            ));
        }
    }
    for (i, &w) in omega.iter().enumerate().take(n) {
        terms.push(Term::new(w, vec![P::raise(b(i)), P::lower(b(i))]));
    }
    for (i, &ui) in u.iter().enumerate().take(n) {
        terms.push(Term::new(
            ui,
            vec![
                P::fermion_raise(f(i, 0)),
                P::fermion_lower(f(i, 0)),
                P::fermion_raise(f(i, 1)),
                P::fermion_lower(f(i, 1)),
            ],
        ));
    }
    for (i, &gi) in g.iter().enumerate().take(n) {
        for s in 0..2 {
            let density = [P::fermion_raise(f(i, s)), P::fermion_lower(f(i, s))];
            terms.push(Term::new(gi, [&density[..], &[P::raise(b(i))]].concat()));
            terms.push(Term::new(gi, [&density[..], &[P::lower(b(i))]].concat()));
        }
    }
    OperatorPoly::from_terms(terms)
}

/// `Σ_bonds t(b_i^ b_j + b_j^ b_i) + U/2 Σ n_i(n_i - 1) - μ Σ n_i`, open chain.
pub fn bose_hubbard(sites: usize, t: f64, u: f64, mu: f64) -> OperatorPoly {
    let mut spec = ModelSpec::new(ModelKind::BoseHubbard, sites.max(1));
    spec.params = [("t", t), ("U", u), ("mu", mu)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), vec![v]))
        .collect();
    spec.build()
        .expect("uniform open-chain parameters are always consistent")
}

/// `t Σ_{<ij>,σ} (c_iσ^ c_jσ + h.c.) + ω Σ b_i^ b_i + U Σ n_i↑ n_i↓
/// + g Σ_{i,σ} c_iσ^ c_iσ (b_i^ + b_i)`, open chain.
pub fn hubbard_holstein(sites: usize, t: f64, g: f64, u: f64, omega: f64) -> OperatorPoly {
    let mut spec = ModelSpec::new(ModelKind::HubbardHolstein, sites.max(1));
    spec.params = [("t", t), ("g", g), ("U", u), ("omega", omega)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), vec![v]))
        .collect();
    spec.build()
        .expect("uniform open-chain parameters are always consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::jw_map_poly;
    use crate::symbolic::validate_hermitian;

    #[test]
    fn bose_hubbard_term_counts() {
        // raw: 2 per bond, 2 onsite monomials and 1 chemical-potential monomial per site
        for n in 1..6 {
            let h = bose_hubbard(n, 1.0, 0.6, 0.3);
            assert_eq!(h.len(), 2 * (n - 1) + 3 * n);
            assert_eq!(h.collect().len(), 2 * (n - 1) + 2 * n);
            assert!(validate_hermitian(&h));
        }
        assert!(bose_hubbard(1, 1.0, 1.0, 1.0)
            .terms
            .iter()
            .all(|t| t.modes().len() == 1));
    }

    #[test]
    fn hubbard_holstein_term_counts() {
        // hopping 4 per bond; ω, U per site; g: 2 spins × (b + b^) per site
        for n in 1..5 {
            let h = hubbard_holstein(n, 1.0, 1.0, 0.6, 1.0);
            assert_eq!(h.len(), 4 * (n - 1) + 6 * n);
            assert_eq!(h.registry.fermions.len(), 2 * n);
            assert_eq!(h.registry.bosons.len(), n);
            assert!(validate_hermitian(&h));
        }
    }

    #[test]
    fn jw_image_has_short_strings() {
        let h = jw_map_poly(&hubbard_holstein(3, 1.0, 1.0, 0.6, 1.0)).unwrap();
        assert!(h.registry.fermions.is_empty());
        for t in &h.terms {
            let paulis = t.factors.iter().filter(|f| f.kind.is_pauli()).count();
            assert!(paulis <= 3, "{t}");
        }
    }

    #[test]
    fn periodic_needs_three_sites() {
        let mut s = ModelSpec::new(ModelKind::BoseHubbard, 2);
        s.periodic = true;
        assert_eq!(s.bonds().len(), 1);
        s.sites = 4;
        assert_eq!(s.bonds(), vec![(0, 1), (1, 2), (2, 3), (3, 0)]);
    }

    #[test]
    fn per_site_values() {
        let mut s = ModelSpec::new(ModelKind::BoseHubbard, 3);
        s.set_from_str("U=0.1,0.2,0.3").unwrap();
        s.set_from_str("μ=0").unwrap();
        let h = s.build().unwrap();
        assert!((h.terms[4].coeff.re - 0.05).abs() < 1e-15);
        s.set_from_str("U=1,2").unwrap();
        assert!(s.build().is_err());
        assert!(s.set_from_str("g=1").is_err());
        assert!(s.set_from_str("t=x").is_err());
    }
}
