// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! JSON form of a circuit, field-for-field with the text format.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::gate::{Circuit, CircuitMetadata, GateInstr, Opcode, Param};
use crate::error::{Error, Result};
use crate::symbolic::{ModeRegistry, SiteClass};

pub const JSON_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct JsonRegistry {
    bosons: BTreeSet<usize>,
    qubits: BTreeSet<usize>,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    fermions: BTreeSet<usize>,
    ancillas: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct JsonGate {
    op: Opcode,
    operands: Vec<usize>,
    params: Vec<Param>,
}

#[derive(Serialize, Deserialize)]
struct JsonCircuit {
    version: u32,
    registry: JsonRegistry,
    gates: Vec<JsonGate>,
    metadata: BTreeMap<String, String>,
}

pub fn to_json(c: &Circuit) -> String {
    let r = &c.registry;
    let doc = JsonCircuit {
        version: JSON_FORMAT_VERSION,
        registry: JsonRegistry {
            bosons: r.bosons.clone(),
            qubits: r.qubits.clone(),
            fermions: r.fermions.clone(),
            ancillas: r.ancillas.clone(),
        },
        gates: c
            .gates
            .iter()
            .map(|g| JsonGate {
                op: g.opcode,
                operands: g.operands.clone(),
                params: g.params.clone(),
            })
            .collect(),
        metadata: c.metadata.entries.clone(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("circuit documents always serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<Circuit> {
    let doc: JsonCircuit = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if doc.version != JSON_FORMAT_VERSION {
        return Err(Error::Config(format!(
            "unsupported circuit JSON version {}",
            doc.version
        )));
    }
    let mut registry = ModeRegistry::new();
    for &m in &doc.registry.bosons {
        registry.register(m, SiteClass::Boson)?;
    }
    for &m in &doc.registry.qubits {
        registry.register(m, SiteClass::Qubit)?;
    }
    for &m in &doc.registry.fermions {
        registry.register(m, SiteClass::Fermion)?;
    }
    for &m in &doc.registry.ancillas {
        registry.add_ancilla(m)?;
    }
    let gates = doc
        .gates
        .into_iter()
        .map(|g| GateInstr::new(g.op, g.operands, g.params))
        .collect::<Result<Vec<_>>>()?;
    Ok(Circuit {
        gates,
        registry,
        metadata: CircuitMetadata {
            entries: doc.metadata,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_shape() {
        let mut r = ModeRegistry::new();
        r.register(0, SiteClass::Boson).unwrap();
        r.add_ancilla(1).unwrap();
        let mut c = Circuit::new(r);
        c.metadata.set("model", "bose_hubbard");
        c.gates = vec![GateInstr::snap(1, 0, vec![0.0, 0.5]), GateInstr::r(0, 0.1)];
        let s = to_json(&c);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["gates"][0]["op"], "SNAP");
        assert_eq!(v["gates"][0]["params"][0][1], 0.5);
        assert_eq!(v["registry"]["ancillas"][0], 1);
        assert!(v["registry"].get("fermions").is_none());
        assert_eq!(from_json(&s).unwrap(), c);
    }

    #[test]
    fn bad_gate_is_rejected() {
        let s = r#"{"version":1,"registry":{"bosons":[0],"qubits":[],"ancillas":[]},
            "gates":[{"op":"BS","operands":[0],"params":[]}],"metadata":{}}"#;
        assert!(from_json(s).is_err());
        assert!(from_json("{").is_err());
    }
}
