// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Normal ordering of operator products.
//!
//! A normal-ordered term is laid out as `[number][Pauli][ladder]`, each group
//! sorted by ascending site index. Factors on different sites commute (up to
//! the fermionic sign, which is tracked), so ordering reduces to rewriting the
//! word of operators acting on each individual site:
//!
//! * boson mode: any word in `a`, `a^`, `n` becomes a sum of `n^r a^k` or
//!   `n^r (a^)^k`, using `[a, a^] = 1`;
//! * qubit: any Pauli word becomes a phase times at most one Pauli;
//! * raw fermion site: any word becomes a combination of `1`, `c`, `c^` and
//!   `c^ c`, using `{c, c^} = 1` and `c^2 = 0`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::op::{OpKind, PrimitiveOp, SiteClass};
use super::quadrature::expand_term;
use super::term::Term;

/// How ladder words on a single boson mode are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderingMode {
    /// Rewrite every mode word to `n^r` times a pure raising or lowering power.
    #[default]
    Canonical,
    /// Regroup factors without rewriting ladder words. Adjacent `a^ a` pairs
    /// are read as number operators and Pauli words are still reduced.
    Literal,
}

#[derive(Debug, Clone, Default)]
struct Groups {
    number: Vec<PrimitiveOp>,
    pauli: Vec<PrimitiveOp>,
    ladder: Vec<PrimitiveOp>,
}

impl Groups {
    fn append(&self, other: &Groups) -> Groups {
        let mut out = self.clone();
        out.number.extend_from_slice(&other.number);
        out.pauli.extend_from_slice(&other.pauli);
        out.ladder.extend_from_slice(&other.ladder);
        out
    }

    fn into_factors(self) -> Vec<PrimitiveOp> {
        let mut f = self.number;
        f.extend(self.pauli);
        f.extend(self.ladder);
        f
    }
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Normal-orders a single term into a sum of ordered terms (not collected).
pub fn normal_order_term(term: &Term, mode: OrderingMode) -> Vec<Term> {
    if term.factors.iter().any(|f| f.kind.is_quadrature()) {
        return expand_term(term)
            .iter()
            .flat_map(|t| order_one(t, mode))
            .collect();
    }
    order_one(term, mode)
}

/// Sign of the permutation that stably sorts the fermion factors by mode.
fn fermion_sign(factors: &[PrimitiveOp]) -> f64 {
    let modes: Vec<usize> = factors
        .iter()
        .filter(|f| f.class() == SiteClass::Fermion)
        .map(|f| f.mode)
        .collect();
    let mut inversions = 0usize;
    for i in 0..modes.len() {
        for j in i + 1..modes.len() {
            if modes[i] > modes[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn order_one(term: &Term, mode: OrderingMode) -> Vec<Term> {
    if term.coeff == ZERO {
        return Vec::new();
    }
    let sign = fermion_sign(&term.factors);

    // Keyed by (mode, class) so appending in iteration order keeps every
    // group sorted by site index.
    let mut sites: BTreeMap<(usize, SiteClass), Vec<OpKind>> = BTreeMap::new();
    for f in &term.factors {
        sites.entry((f.mode, f.class())).or_default().push(f.kind);
    }

    let mut partial: Vec<(Complex64, Groups)> = vec![(term.coeff * sign, Groups::default())];
    for (&(site, class), word) in &sites {
        let local = match (class, mode) {
            (SiteClass::Boson, OrderingMode::Canonical) => boson_canonical(site, word),
            (SiteClass::Boson, OrderingMode::Literal) => boson_literal(site, word),
            (SiteClass::Qubit, _) => pauli_reduce(site, word),
            (SiteClass::Fermion, OrderingMode::Canonical) => fermion_canonical(site, word),
            (SiteClass::Fermion, OrderingMode::Literal) => vec![(
                ONE,
                Groups {
                    ladder: word.iter().map(|&k| PrimitiveOp::new(k, site)).collect(),
                    ..Groups::default()
                },
            )],
        };
        if local.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(partial.len() * local.len());
        for (c, groups) in &partial {
            for (lc, lgroups) in &local {
                next.push((c * lc, groups.append(lgroups)));
            }
        }
        partial = next;
    }

    partial
        .into_iter()
        .filter(|(c, _)| *c != ZERO)
        .map(|(c, g)| Term::new(c, g.into_factors()))
        .collect()
}

/// Boson word → Σ c · n^r · L where L = (a^)^k for k > 0, a^|k| for k < 0.
fn boson_canonical(site: usize, word: &[OpKind]) -> Vec<(Complex64, Groups)> {
    let mut acc: BTreeMap<(u32, i64), f64> = BTreeMap::new();
    acc.insert((0, 0), 1.0);
    for &kind in word {
        let mut next: BTreeMap<(u32, i64), f64> = BTreeMap::new();
        let mut add = |key: (u32, i64), c: f64| {
            if c != 0.0 {
                *next.entry(key).or_insert(0.0) += c;
            }
        };
        for (&(r, k), &c) in &acc {
            let m = k.unsigned_abs() as f64;
            match kind {
                OpKind::BosonRaise => {
                    if k >= 0 {
                        add((r, k + 1), c);
                    } else {
                        // a^m a^ = (n + m) a^(m-1)
                        add((r + 1, k + 1), c);
                        add((r, k + 1), c * m);
                    }
                }
                OpKind::BosonLower => {
                    if k <= 0 {
                        add((r, k - 1), c);
                    } else {
                        // (a^)^m a = (n - m + 1) (a^)^(m-1)
                        add((r + 1, k - 1), c);
                        add((r, k - 1), -c * (m - 1.0));
                    }
                }
                OpKind::BosonNumber => {
                    // (a^)^m n = (n - m)(a^)^m ;  a^m n = (n + m) a^m
                    add((r + 1, k), c);
                    let shift = if k > 0 { -m } else { m };
                    add((r, k), c * shift);
                }
                _ => unreachable!("non-boson kind {kind:?} in boson word"),
            }
        }
        next.retain(|_, c| *c != 0.0);
        acc = next;
    }
    acc.into_iter()
        .map(|((r, k), c)| {
            let number = vec![PrimitiveOp::number(site); r as usize];
            let ladder_op = if k > 0 {
                PrimitiveOp::raise(site)
            } else {
                PrimitiveOp::lower(site)
            };
            let ladder = vec![ladder_op; k.unsigned_abs() as usize];
            (
                Complex64::new(c, 0.0),
                Groups {
                    number,
                    ladder,
                    ..Groups::default()
                },
            )
        })
        .collect()
}

fn boson_literal(site: usize, word: &[OpKind]) -> Vec<(Complex64, Groups)> {
    let mut merged: Vec<OpKind> = Vec::with_capacity(word.len());
    for &k in word {
        if k == OpKind::BosonLower && merged.last() == Some(&OpKind::BosonRaise) {
            *merged.last_mut().unwrap() = OpKind::BosonNumber;
        } else {
            merged.push(k);
        }
    }
    let lead = merged
        .iter()
        .take_while(|&&k| k == OpKind::BosonNumber)
        .count();
    vec![(
        ONE,
        Groups {
            number: vec![PrimitiveOp::number(site); lead],
            ladder: merged[lead..]
                .iter()
                .map(|&k| PrimitiveOp::new(k, site))
                .collect(),
            ..Groups::default()
        },
    )]
}

/// Product of two single-qubit Paulis as (phase, result); `None` is identity.
fn pauli_product(a: Option<OpKind>, b: OpKind) -> (Complex64, Option<OpKind>) {
    use OpKind::{PauliX as X, PauliY as Y, PauliZ as Z};
    let i = Complex64::new(0.0, 1.0);
    match (a, b) {
        (None, p) => (ONE, Some(p)),
        (Some(p), q) if p == q => (ONE, None),
        (Some(X), Y) => (i, Some(Z)),
        (Some(Y), Z) => (i, Some(X)),
        (Some(Z), X) => (i, Some(Y)),
        (Some(Y), X) => (-i, Some(Z)),
        (Some(Z), Y) => (-i, Some(X)),
        (Some(X), Z) => (-i, Some(Y)),
        (a, b) => unreachable!("non-Pauli kinds {a:?}, {b:?}"),
    }
}

fn pauli_reduce(site: usize, word: &[OpKind]) -> Vec<(Complex64, Groups)> {
    let mut phase = ONE;
    let mut acc = None;
    for &k in word {
        let (p, r) = pauli_product(acc, k);
        phase *= p;
        acc = r;
    }
    vec![(
        phase,
        Groups {
            pauli: acc.map(|k| PrimitiveOp::new(k, site)).into_iter().collect(),
            ..Groups::default()
        },
    )]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum FermionBasis {
    Identity,
    Raise,
    Lower,
    Number,
}

fn fermion_canonical(site: usize, word: &[OpKind]) -> Vec<(Complex64, Groups)> {
    use FermionBasis::*;
    let mut acc: BTreeMap<FermionBasis, f64> = BTreeMap::new();
    acc.insert(Identity, 1.0);
    for &kind in word {
        let mut next: BTreeMap<FermionBasis, f64> = BTreeMap::new();
        let mut add = |b: FermionBasis, c: f64| *next.entry(b).or_insert(0.0) += c;
        let raise = kind == OpKind::FermionRaise;
        for (&b, &c) in &acc {
            match (b, raise) {
                (Identity, true) => add(Raise, c),
                (Identity, false) => add(Lower, c),
                (Raise, true) => {}
                (Raise, false) => add(Number, c),
                (Lower, true) => {
                    // c c^ = 1 - c^ c
                    add(Identity, c);
                    add(Number, -c);
                }
                (Lower, false) => {}
                (Number, true) => add(Raise, c),
                (Number, false) => {}
            }
        }
        next.retain(|_, c| *c != 0.0);
        acc = next;
    }
    acc.into_iter()
        .map(|(b, c)| {
            let ladder = match b {
                Identity => vec![],
                Raise => vec![PrimitiveOp::fermion_raise(site)],
                Lower => vec![PrimitiveOp::fermion_lower(site)],
                Number => vec![
                    PrimitiveOp::fermion_raise(site),
                    PrimitiveOp::fermion_lower(site),
                ],
            };
            (
                Complex64::new(c, 0.0),
                Groups {
                    ladder,
                    ..Groups::default()
                },
            )
        })
        .collect()
}
