// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbolic::{ModeRegistry, SiteClass};

/// Native instruction set.
///
/// | opcode | operands | params | operation |
/// |---|---|---|---|
/// | `R` | mode i | θ | `exp(-iθ n_i)` |
/// | `D` | mode i | Re α, Im α | `exp(α a_i^ - α* a_i)` |
/// | `BS` | modes i, j | φ, θ | `exp(-iθ(e^{iφ} a_i^ a_j + e^{-iφ} a_i a_j^))` |
/// | `RZ` `RY` `RX` | qubit | θ | `exp(-iθ P)` |
/// | `CNOT` | control, target | | |
/// | `CR` | qubit q, mode j | θ | `exp(-iθ/2 Z_q n_j)` |
/// | `CPI` | qubit q, mode j | | `CR(π)` |
/// | `SNAP` | qubit q, mode j | θ⃗ | `exp(-i Z_q Σ θ_n |n><n|)` |
/// | `SQR` | qubit q, mode j | θ⃗, φ⃗ | `Σ R^{φ_n}(θ_n) ⊗ |n><n|` |
///
/// with `R^φ(θ) = exp(-iθ/2 (cos φ X + sin φ Y))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Opcode {
    R,
    D,
    BS,
    RZ,
    RY,
    RX,
    CNOT,
    CR,
    CPI,
    SNAP,
    SQR,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GateCategory {
    Bosonic,
    Qubit,
    Hybrid,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ParamShape {
    Scalar,
    Vector,
}

impl Opcode {
    pub const ALL: [Opcode; 11] = [
        Opcode::R,
        Opcode::D,
        Opcode::BS,
        Opcode::RZ,
        Opcode::RY,
        Opcode::RX,
        Opcode::CNOT,
        Opcode::CR,
        Opcode::CPI,
        Opcode::SNAP,
        Opcode::SQR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Opcode::R => "R",
            Opcode::D => "D",
            Opcode::BS => "BS",
            Opcode::RZ => "RZ",
            Opcode::RY => "RY",
            Opcode::RX => "RX",
            Opcode::CNOT => "CNOT",
            Opcode::CR => "CR",
            Opcode::CPI => "CPI",
            Opcode::SNAP => "SNAP",
            Opcode::SQR => "SQR",
        }
    }

    pub fn category(self) -> GateCategory {
        match self {
            Opcode::R | Opcode::D | Opcode::BS => GateCategory::Bosonic,
            Opcode::RZ | Opcode::RY | Opcode::RX | Opcode::CNOT => GateCategory::Qubit,
            Opcode::CR | Opcode::CPI | Opcode::SNAP | Opcode::SQR => GateCategory::Hybrid,
        }
    }

    /// Register class of each operand.
    pub fn operand_classes(self) -> &'static [SiteClass] {
        use SiteClass::{Boson, Qubit};
        match self {
            Opcode::R | Opcode::D => &[Boson],
            Opcode::BS => &[Boson, Boson],
            Opcode::RZ | Opcode::RY | Opcode::RX => &[Qubit],
            Opcode::CNOT => &[Qubit, Qubit],
            Opcode::CR | Opcode::CPI | Opcode::SNAP | Opcode::SQR => &[Qubit, Boson],
        }
    }

    fn param_shapes(self) -> &'static [ParamShape] {
        use ParamShape::{Scalar, Vector};
        match self {
            Opcode::R | Opcode::RZ | Opcode::RY | Opcode::RX | Opcode::CR => &[Scalar],
            Opcode::D | Opcode::BS => &[Scalar, Scalar],
            Opcode::CNOT | Opcode::CPI => &[],
            Opcode::SNAP => &[Vector],
            Opcode::SQR => &[Vector, Vector],
        }
    }
}

impl fmt::Display for Opcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Opcode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Opcode::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown opcode {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Scalar(f64),
    Vector(Vec<f64>),
}

impl Param {
    pub fn as_scalar(&self) -> Option<f64> {
        match self {
            Param::Scalar(x) => Some(*x),
            Param::Vector(_) => None,
        }
    }

    pub fn as_vector(&self) -> Option<&[f64]> {
        match self {
            Param::Vector(v) => Some(v),
            Param::Scalar(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateInstr {
    pub opcode: Opcode,
    pub operands: Vec<usize>,
    pub params: Vec<Param>,
}

impl GateInstr {
    /// Builds a gate after checking operand and parameter arity.
    pub fn new(opcode: Opcode, operands: Vec<usize>, params: Vec<Param>) -> Result<Self> {
        let g = Self {
            opcode,
            operands,
            params,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Error::MalformedGate {
            opcode: self.opcode.name().to_string(),
            reason,
        };
        let want = self.opcode.operand_classes().len();
        if self.operands.len() != want {
            return Err(bad(format!(
                "expected {want} operands, got {}",
                self.operands.len()
            )));
        }
        if want == 2 && self.operands[0] == self.operands[1] {
            return Err(bad("operands must be distinct".into()));
        }
        let shapes = self.opcode.param_shapes();
        if self.params.len() != shapes.len() {
            return Err(bad(format!(
                "expected {} params, got {}",
                shapes.len(),
                self.params.len()
            )));
        }
        for (p, s) in self.params.iter().zip(shapes) {
            let ok = match (p, s) {
                (Param::Scalar(x), ParamShape::Scalar) => x.is_finite(),
                (Param::Vector(v), ParamShape::Vector) => {
                    !v.is_empty() && v.iter().all(|x| x.is_finite())
                }
                _ => false,
            };
            if !ok {
                return Err(bad(format!("bad parameter {p:?}")));
            }
        }
        if self.opcode == Opcode::SQR {
            let a = self.params[0].as_vector().map_or(0, <[f64]>::len);
            let b = self.params[1].as_vector().map_or(0, <[f64]>::len);
            if a != b {
                return Err(bad(format!("vector lengths differ ({a} vs {b})")));
            }
        }
        Ok(())
    }

    pub fn scalar(&self, k: usize) -> f64 {
        self.params[k]
            .as_scalar()
            .expect("validated scalar parameter")
    }

    pub fn vector(&self, k: usize) -> &[f64] {
        self.params[k]
            .as_vector()
            .expect("validated vector parameter")
    }

    pub fn category(&self) -> GateCategory {
        self.opcode.category()
    }

    pub fn r(mode: usize, theta: f64) -> Self {
        Self::unchecked(Opcode::R, vec![mode], vec![Param::Scalar(theta)])
    }

    pub fn d(mode: usize, re: f64, im: f64) -> Self {
        Self::unchecked(
            Opcode::D,
            vec![mode],
            vec![Param::Scalar(re), Param::Scalar(im)],
        )
    }

    pub fn bs(i: usize, j: usize, phi: f64, theta: f64) -> Self {
        Self::unchecked(
            Opcode::BS,
            vec![i, j],
            vec![Param::Scalar(phi), Param::Scalar(theta)],
        )
    }

    pub fn rz(q: usize, theta: f64) -> Self {
        Self::unchecked(Opcode::RZ, vec![q], vec![Param::Scalar(theta)])
    }

    pub fn ry(q: usize, theta: f64) -> Self {
        Self::unchecked(Opcode::RY, vec![q], vec![Param::Scalar(theta)])
    }

    pub fn rx(q: usize, theta: f64) -> Self {
        Self::unchecked(Opcode::RX, vec![q], vec![Param::Scalar(theta)])
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Self::unchecked(Opcode::CNOT, vec![control, target], vec![])
    }

    pub fn cr(q: usize, mode: usize, theta: f64) -> Self {
        Self::unchecked(Opcode::CR, vec![q, mode], vec![Param::Scalar(theta)])
    }

    pub fn cpi(q: usize, mode: usize) -> Self {
        Self::unchecked(Opcode::CPI, vec![q, mode], vec![])
    }

    pub fn snap(q: usize, mode: usize, theta: Vec<f64>) -> Self {
        Self::unchecked(Opcode::SNAP, vec![q, mode], vec![Param::Vector(theta)])
    }

    pub fn sqr(q: usize, mode: usize, theta: Vec<f64>, phi: Vec<f64>) -> Self {
        Self::unchecked(
            Opcode::SQR,
            vec![q, mode],
            vec![Param::Vector(theta), Param::Vector(phi)],
        )
    }

    fn unchecked(opcode: Opcode, operands: Vec<usize>, params: Vec<Param>) -> Self {
        let g = Self {
            opcode,
            operands,
            params,
        };
        debug_assert!(g.validate().is_ok(), "{g:?}");
        g
    }
}

/// Run-level facts recorded alongside a circuit.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CircuitMetadata {
    pub entries: BTreeMap<String, String>,
}

impl CircuitMetadata {
    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }
}

/// Gates in execution order (first gate acts first on the state).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    pub gates: Vec<GateInstr>,
    pub registry: ModeRegistry,
    pub metadata: CircuitMetadata,
}

impl Circuit {
    pub fn new(registry: ModeRegistry) -> Self {
        Self {
            gates: Vec::new(),
            registry,
            metadata: CircuitMetadata::default(),
        }
    }

    /// Checks every gate's arity and that operands sit in registers of the
    /// right class.
    pub fn validate(&self) -> Result<()> {
        for g in &self.gates {
            g.validate()?;
            for (&m, &class) in g.operands.iter().zip(g.opcode.operand_classes()) {
                if self.registry.class_of(m) != Some(class) {
                    return Err(Error::MalformedGate {
                        opcode: g.opcode.name().to_string(),
                        reason: format!("operand {m} is not a registered {class:?} site"),
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_is_checked() {
        assert!(GateInstr::new(Opcode::BS, vec![0], vec![]).is_err());
        assert!(GateInstr::new(Opcode::CNOT, vec![1, 1], vec![]).is_err());
        assert!(GateInstr::new(
            Opcode::SQR,
            vec![0, 1],
            vec![Param::Vector(vec![0.0; 3]), Param::Vector(vec![0.0; 4])]
        )
        .is_err());
        assert!(GateInstr::new(Opcode::R, vec![0], vec![Param::Vector(vec![1.0])]).is_err());
        assert!(GateInstr::new(Opcode::CPI, vec![0, 1], vec![]).is_ok());
    }

    #[test]
    fn operands_must_match_registry() {
        let mut reg = ModeRegistry::new();
        reg.register(0, SiteClass::Boson).unwrap();
        reg.add_ancilla(1).unwrap();
        let mut c = Circuit::new(reg);
        c.gates.push(GateInstr::cr(1, 0, 0.5));
        assert!(c.validate().is_ok());
        c.gates.push(GateInstr::cr(0, 1, 0.5));
        assert!(c.validate().is_err());
    }
}
