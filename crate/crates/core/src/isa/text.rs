// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Line-per-gate circuit text.
//!
//! ```text
//! # format: 1
//! # bosons: 0 1
//! # qubits:
//! # ancillas: 2
//! # dt: 0.05
//! BS 0 1 | 0 0.1
//! SNAP 2 0 | [0 0 0.06 0.18]
//! CNOT 3 4
//! ```
//!
//! Header lines are `# key: value`. The first four keys describe the
//! registry; any other key is metadata, emitted in sorted order. Reals use
//! the shortest decimal that parses back to the same `f64`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::gate::{Circuit, GateInstr, Opcode, Param};
use crate::error::{Error, Result};
use crate::numfmt::format_real;

pub const TEXT_FORMAT_VERSION: u32 = 1;

const REGISTRY_KEYS: [&str; 4] = ["bosons", "qubits", "fermions", "ancillas"];

fn index_list(set: &BTreeSet<usize>) -> String {
    set.iter().map(|m| format!(" {m}")).collect()
}

fn param_text(p: &Param) -> String {
    match p {
        Param::Scalar(x) => format_real(*x),
        Param::Vector(v) => {
            let items: Vec<String> = v.iter().map(|x| format_real(*x)).collect();
            format!("[{}]", items.join(" "))
        }
    }
}

/// One gate line without the trailing newline.
pub fn gate_line(g: &GateInstr) -> String {
    let mut s = g.opcode.name().to_string();
    for m in &g.operands {
        let _ = write!(s, " {m}");
    }
    if !g.params.is_empty() {
        let params: Vec<String> = g.params.iter().map(param_text).collect();
        let _ = write!(s, " | {}", params.join(" "));
    }
    s
}

pub fn emit_text(c: &Circuit) -> String {
    let mut out = format!("# format: {TEXT_FORMAT_VERSION}\n");
    let r = &c.registry;
    let _ = writeln!(out, "# bosons:{}", index_list(&r.bosons));
    let _ = writeln!(out, "# qubits:{}", index_list(&r.qubits));
    if !r.fermions.is_empty() {
        let _ = writeln!(out, "# fermions:{}", index_list(&r.fermions));
    }
    let _ = writeln!(out, "# ancillas:{}", index_list(&r.ancillas));
    for (k, v) in &c.metadata.entries {
        let _ = writeln!(out, "# {k}: {v}");
    }
    for g in &c.gates {
        out.push_str(&gate_line(g));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((offset + b + 1, &s[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((offset + b + 1, &s[b..]));
    }
    out
}

fn parse_real(tok: &str, line: usize, col: usize) -> Result<f64> {
    tok.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| parse_err(line, col, format!("expected a real number, found {tok:?}")))
}

fn parse_params(s: &str, offset: usize, line: usize) -> Result<Vec<Param>> {
    let mut params = Vec::new();
    let mut vector: Option<Vec<f64>> = None;
    for (col, tok) in tokens(s, offset) {
        let mut t = tok;
        let mut c = col;
        if let Some(rest) = t.strip_prefix('[') {
            if vector.is_some() {
                return Err(parse_err(line, c, "nested '['"));
            }
            vector = Some(Vec::new());
            t = rest;
            c += 1;
        }
        let closes = t.ends_with(']');
        if closes {
            t = &t[..t.len() - 1];
        }
        if !t.is_empty() {
            let x = parse_real(t, line, c)?;
            match vector.as_mut() {
                Some(v) => v.push(x),
                None => params.push(Param::Scalar(x)),
            }
        }
        if closes {
            let v = vector
                .take()
                .ok_or_else(|| parse_err(line, c + t.len(), "unmatched ']'"))?;
            params.push(Param::Vector(v));
        }
    }
    if vector.is_some() {
        return Err(parse_err(line, offset + s.len() + 1, "unterminated '['"));
    }
    Ok(params)
}

fn parse_gate(text: &str, line: usize) -> Result<GateInstr> {
    let (head, params) = match text.find('|') {
        Some(bar) => (&text[..bar], Some((bar + 1, &text[bar + 1..]))),
        None => (text, None),
    };
    let toks = tokens(head, 0);
    let (col, name) = toks[0];
    let opcode: Opcode = name.parse().map_err(|e: String| parse_err(line, col, e))?;
    let operands = toks[1..]
        .iter()
        .map(|&(c, t)| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, c, format!("expected a site index, found {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let params = match params {
        Some((off, s)) => parse_params(s, off, line)?,
        None => Vec::new(),
    };
    GateInstr::new(opcode, operands, params).map_err(|e| parse_err(line, col, e.to_string()))
}

pub fn parse_text(text: &str) -> Result<Circuit> {
    let mut c = Circuit::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(header) = trimmed.strip_prefix('#') {
            let Some((key, value)) = header.split_once(':') else {
                continue;
            };
            let (key, value) = (key.trim(), value.trim());
            if key == "format" {
                if value != TEXT_FORMAT_VERSION.to_string() {
                    return Err(parse_err(
                        line,
                        1,
                        format!("unsupported format version {value:?}"),
                    ));
                }
            } else if REGISTRY_KEYS.contains(&key) {
                let col = raw.find(':').unwrap_or(0) + 2;
                for (c0, t) in tokens(value, col) {
                    let m = t.parse::<usize>().map_err(|_| {
                        parse_err(line, c0, format!("expected a site index, found {t:?}"))
                    })?;
                    let r = &mut c.registry;
                    let res = match key {
                        "bosons" => r.register(m, crate::symbolic::SiteClass::Boson),
                        "qubits" => r.register(m, crate::symbolic::SiteClass::Qubit),
                        "fermions" => r.register(m, crate::symbolic::SiteClass::Fermion),
                        _ => r.add_ancilla(m),
                    };
                    res.map_err(|e| parse_err(line, c0, e.to_string()))?;
                }
            } else {
                c.metadata.set(key, value);
            }
            continue;
        }
        let indent = raw.len() - raw.trim_start().len();
        let g = parse_gate(trimmed, line).map_err(|e| match e {
            Error::Parse {
                line,
                column,
                message,
            } => Error::Parse {
                line,
                column: column + indent,
                message,
            },
            e => e,
        })?;
        c.gates.push(g);
    }
    Ok(c)
}
