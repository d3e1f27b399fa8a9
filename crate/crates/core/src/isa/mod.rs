// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Native gate set, generator matching and circuit serialization.

mod gate;
mod json;
mod matching;
mod report;
mod text;

pub use gate::{Circuit, CircuitMetadata, GateCategory, GateInstr, Opcode, Param};
pub use json::{from_json, to_json, JSON_FORMAT_VERSION};
pub(crate) use matching::number_polynomial;
pub use matching::{match_native, pauli_rotation_synthesis, snap_synthesis, NativeMatch};
pub use report::{gate_count_report, GateCountReport};
pub use text::{emit_text, gate_line, parse_text, TEXT_FORMAT_VERSION};
