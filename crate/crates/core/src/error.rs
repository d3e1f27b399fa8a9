// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::symbolic::SiteClass;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mode {mode} used as {used:?} but already registered as {registered:?}")]
    ModeKindMismatch {
        mode: usize,
        used: SiteClass,
        registered: SiteClass,
    },

    #[error("operator is not Hermitian")]
    NonHermitian,

    #[error("term {0} has no Hermitian-conjugate partner")]
    UnpairableTerm(String),

    #[error("fermion mode {0} is not covered by the mapping's site order")]
    UnknownMode(usize),

    #[error("bad fermion site order: {0}")]
    BadSiteOrder(String),

    #[error("{0} mapping is not implemented")]
    UnimplementedMapping(&'static str),

    #[error("rule precondition failed: {0}")]
    Precondition(String),

    #[error("a boson cutoff is required to {0}")]
    MissingCutoff(&'static str),

    #[error("irreducible node exp(-i {angle} ({generator})); trace: {trace}")]
    Irreducible {
        generator: String,
        angle: f64,
        trace: String,
    },

    #[error("ancilla pool exhausted (capacity {0})")]
    AncillaExhausted(usize),

    #[error("oracle dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("mode {0} is missing from the register layout")]
    MissingFromLayout(usize),

    #[error("register layouts differ")]
    LayoutMismatch,

    #[error("malformed {opcode} gate: {reason}")]
    MalformedGate { opcode: String, reason: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
