// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Fundamental operators: an action paired with the site it acts on.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Which physical register a site belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SiteClass {
    Boson,
    Qubit,
    Fermion,
}

/// The action of a primitive operator.
///
/// `QuadX` and `QuadP` are parser sugar for the position and momentum
/// quadratures; `expand_quadratures` rewrites them into ladder operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OpKind {
    BosonLower,
    BosonRaise,
    BosonNumber,
    FermionLower,
    FermionRaise,
    PauliX,
    PauliY,
    PauliZ,
    QuadX,
    QuadP,
}

impl OpKind {
    pub fn class(self) -> SiteClass {
        match self {
            OpKind::BosonLower
            | OpKind::BosonRaise
            | OpKind::BosonNumber
            | OpKind::QuadX
            | OpKind::QuadP => SiteClass::Boson,
            OpKind::FermionLower | OpKind::FermionRaise => SiteClass::Fermion,
            OpKind::PauliX | OpKind::PauliY | OpKind::PauliZ => SiteClass::Qubit,
        }
    }

    pub fn adjoint(self) -> OpKind {
        match self {
            OpKind::BosonLower => OpKind::BosonRaise,
            OpKind::BosonRaise => OpKind::BosonLower,
            OpKind::FermionLower => OpKind::FermionRaise,
            OpKind::FermionRaise => OpKind::FermionLower,
            other => other,
        }
    }

    pub fn is_pauli(self) -> bool {
        matches!(self, OpKind::PauliX | OpKind::PauliY | OpKind::PauliZ)
    }

    pub fn is_ladder(self) -> bool {
        matches!(
            self,
            OpKind::BosonLower | OpKind::BosonRaise | OpKind::FermionLower | OpKind::FermionRaise
        )
    }

    pub fn is_quadrature(self) -> bool {
        matches!(self, OpKind::QuadX | OpKind::QuadP)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimitiveOp {
    pub kind: OpKind,
    pub mode: usize,
}

impl PrimitiveOp {
    pub const fn new(kind: OpKind, mode: usize) -> Self {
        Self { kind, mode }
    }

    pub const fn lower(mode: usize) -> Self {
        Self::new(OpKind::BosonLower, mode)
    }

    pub const fn raise(mode: usize) -> Self {
        Self::new(OpKind::BosonRaise, mode)
    }

    pub const fn number(mode: usize) -> Self {
        Self::new(OpKind::BosonNumber, mode)
    }

    pub const fn fermion_lower(mode: usize) -> Self {
        Self::new(OpKind::FermionLower, mode)
    }

    pub const fn fermion_raise(mode: usize) -> Self {
        Self::new(OpKind::FermionRaise, mode)
    }

    pub const fn x(mode: usize) -> Self {
        Self::new(OpKind::PauliX, mode)
    }

    pub const fn y(mode: usize) -> Self {
        Self::new(OpKind::PauliY, mode)
    }

    pub const fn z(mode: usize) -> Self {
        Self::new(OpKind::PauliZ, mode)
    }

    pub const fn quad_x(mode: usize) -> Self {
        Self::new(OpKind::QuadX, mode)
    }

    pub const fn quad_p(mode: usize) -> Self {
        Self::new(OpKind::QuadP, mode)
    }

    pub fn class(&self) -> SiteClass {
        self.kind.class()
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.kind.adjoint(), self.mode)
    }
}

impl fmt::Display for PrimitiveOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.mode;
        match self.kind {
            OpKind::BosonLower => write!(f, "b{m}"),
            OpKind::BosonRaise => write!(f, "b{m}^"),
            OpKind::BosonNumber => write!(f, "n{m}"),
            OpKind::FermionLower => write!(f, "c{m}"),
            OpKind::FermionRaise => write!(f, "c{m}^"),
            OpKind::PauliX => write!(f, "X{m}"),
            OpKind::PauliY => write!(f, "Y{m}"),
            OpKind::PauliZ => write!(f, "Z{m}"),
            OpKind::QuadX => write!(f, "x{m}"),
            OpKind::QuadP => write!(f, "p{m}"),
        }
    }
}
