// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

pub mod driver;
pub mod error;
pub mod fermion;
pub mod isa;
pub mod models;
pub mod numfmt;
pub mod oracle;
pub mod passes;
pub mod symbolic;

pub use error::{Error, Result};
