// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Operator IR: primitive operators, terms, polynomials and normal ordering.

mod op;
mod ordering;
mod poly;
mod quadrature;
mod registry;
mod term;

pub use op::{OpKind, PrimitiveOp, SiteClass};
pub use ordering::{normal_order_term, OrderingMode};
pub use poly::{collect, normal_order, validate_hermitian, OperatorPoly, COLLECT_EPS};
pub use quadrature::{expand_quadratures, expand_term};
pub use registry::{AncillaAllocator, ModeRegistry};
pub use term::{multiply_terms, Term};
