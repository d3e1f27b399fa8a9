// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Hamiltonian text files.
//!
//! One term per line, `<coeff> * <factor> <factor> ...`, where the
//! coefficient is a real (`0.5`), an imaginary (`-0.5i`) or a parenthesized
//! complex number (`(1-0.5i)`). Factors are `c3`/`c3^` (fermion),
//! `b3`/`b3^` (boson), `n3` (boson number), `X3`/`Y3`/`Z3` (Pauli) and
//! `x3`/`p3` (quadratures). `#` starts a comment. A bare coefficient is an
//! identity term.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::symbolic::{ModeRegistry, OpKind, OperatorPoly, PrimitiveOp, Term};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_real(s: &str) -> Option<f64> {
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

fn parse_coeff(s: &str) -> Option<Complex64> {
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let body = inner.strip_suffix('i')?;
        // split at the last sign that is not a leading sign or an exponent sign
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))?;
        let re = parse_real(&body[..split])?;
        let im = parse_real(&body[split..])?;
        return Some(Complex64::new(re, im));
    }
    if let Some(im) = s.strip_suffix('i') {
        return parse_real(im).map(|x| Complex64::new(0.0, x));
    }
    parse_real(s).map(|x| Complex64::new(x, 0.0))
}

fn parse_factor(tok: &str) -> Option<PrimitiveOp> {
    let mut chars = tok.chars();
    let head = chars.next()?;
    let rest = chars.as_str();
    let (digits, dagger) = match rest.strip_suffix('^') {
        Some(d) => (d, true),
        None => (rest, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mode: usize = digits.parse().ok()?;
    let kind = match (head, dagger) {
        ('c', false) => OpKind::FermionLower,
        ('c', true) => OpKind::FermionRaise,
        ('b', false) => OpKind::BosonLower,
        ('b', true) => OpKind::BosonRaise,
        ('n', false) => OpKind::BosonNumber,
        ('X', false) => OpKind::PauliX,
        ('Y', false) => OpKind::PauliY,
        ('Z', false) => OpKind::PauliZ,
        ('x', false) => OpKind::QuadX,
        ('p', false) => OpKind::QuadP,
        _ => return None,
    };
    Some(PrimitiveOp::new(kind, mode))
}

/// Tokens of `s` with 1-based columns.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((s[..b].chars().count() + 1, &s[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((s[..b].chars().count() + 1, &s[b..]));
    }
    out
}

pub fn parse_hamiltonian_file(text: &str) -> Result<OperatorPoly> {
    let mut registry = ModeRegistry::new();
    let mut terms = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        let Some(&(col, coeff_tok)) = toks.first() else {
            continue;
        };
        let coeff = parse_coeff(coeff_tok).ok_or_else(|| {
            err(
                line,
                col,
                format!("expected a coefficient, found {coeff_tok:?}"),
            )
        })?;
        let mut factors = Vec::new();
        match toks.get(1) {
            None => {}
            Some(&(_, "*")) => {
                if toks.len() == 2 {
                    return Err(err(line, toks[1].0 + 1, "expected a factor after '*'"));
                }
                for &(c, tok) in &toks[2..] {
                    let op = parse_factor(tok)
                        .ok_or_else(|| err(line, c, format!("unknown factor {tok:?}")))?;
                    registry
                        .register_op(&op)
                        .map_err(|e| err(line, c, e.to_string()))?;
                    factors.push(op);
                }
            }
            Some(&(c, tok)) => return Err(err(line, c, format!("expected '*', found {tok:?}"))),
        }
        terms.push(Term::new(coeff, factors));
    }
    Ok(OperatorPoly::with_registry(terms, registry))
}

/// Inverse of [`parse_hamiltonian_file`], one term per line.
pub fn format_hamiltonian(p: &OperatorPoly) -> String {
    p.terms.iter().map(|t| format!("{t}\n")).collect()
}
