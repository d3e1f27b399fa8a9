// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::op::{PrimitiveOp, SiteClass};
use crate::error::{Error, Result};

/// Assignment of site indices to registers.
///
/// Indices live in one namespace: a boson mode, a qubit, a fermion site and
/// an ancilla never share an index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeRegistry {
    pub bosons: BTreeSet<usize>,
    pub qubits: BTreeSet<usize>,
    pub fermions: BTreeSet<usize>,
    pub ancillas: BTreeSet<usize>,
}

impl ModeRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Class a mode is registered under, treating ancillas as qubits.
    pub fn class_of(&self, mode: usize) -> Option<SiteClass> {
        if self.bosons.contains(&mode) {
            Some(SiteClass::Boson)
        } else if self.qubits.contains(&mode) || self.ancillas.contains(&mode) {
            Some(SiteClass::Qubit)
        } else if self.fermions.contains(&mode) {
            Some(SiteClass::Fermion)
        } else {
            None
        }
    }

    pub fn register(&mut self, mode: usize, class: SiteClass) -> Result<()> {
        match self.class_of(mode) {
            Some(registered) if registered != class => Err(Error::ModeKindMismatch {
                mode,
                used: class,
                registered,
            }),
            Some(_) => Ok(()),
            None => {
                match class {
                    SiteClass::Boson => self.bosons.insert(mode),
                    SiteClass::Qubit => self.qubits.insert(mode),
                    SiteClass::Fermion => self.fermions.insert(mode),
                };
                Ok(())
            }
        }
    }

    pub fn register_op(&mut self, op: &PrimitiveOp) -> Result<()> {
        self.register(op.mode, op.class())
    }

    pub fn check_op(&self, op: &PrimitiveOp) -> Result<()> {
        match self.class_of(op.mode) {
            Some(registered) if registered != op.class() => Err(Error::ModeKindMismatch {
                mode: op.mode,
                used: op.class(),
                registered,
            }),
            _ => Ok(()),
        }
    }

    pub fn add_ancilla(&mut self, mode: usize) -> Result<()> {
        if let Some(registered) = self.class_of(mode) {
            if !self.ancillas.contains(&mode) {
                return Err(Error::ModeKindMismatch {
                    mode,
                    used: SiteClass::Qubit,
                    registered,
                });
            }
        }
        self.ancillas.insert(mode);
        Ok(())
    }

    pub fn merge(&mut self, other: &ModeRegistry) -> Result<()> {
        for &m in &other.bosons {
            self.register(m, SiteClass::Boson)?;
        }
        for &m in &other.qubits {
            self.register(m, SiteClass::Qubit)?;
        }
        for &m in &other.fermions {
            self.register(m, SiteClass::Fermion)?;
        }
        for &m in &other.ancillas {
            self.add_ancilla(m)?;
        }
        Ok(())
    }

    pub fn union(&self, other: &ModeRegistry) -> Result<ModeRegistry> {
        let mut out = self.clone();
        out.merge(other)?;
        Ok(out)
    }

    /// Every registered index, ascending.
    pub fn all_modes(&self) -> BTreeSet<usize> {
        self.bosons
            .iter()
            .chain(&self.qubits)
            .chain(&self.fermions)
            .chain(&self.ancillas)
            .copied()
            .collect()
    }

    /// The registrations of `modes` only.
    pub fn restricted(&self, modes: &BTreeSet<usize>) -> ModeRegistry {
        let keep = |set: &BTreeSet<usize>| set.intersection(modes).copied().collect();
        ModeRegistry {
            bosons: keep(&self.bosons),
            qubits: keep(&self.qubits),
            fermions: keep(&self.fermions),
            ancillas: keep(&self.ancillas),
        }
    }

    /// Smallest index strictly above every registered index.
    pub fn next_free_index(&self) -> usize {
        self.all_modes().last().map_or(0, |m| m + 1)
    }
}

/// Hands out ancilla qubits above the system registers.
///
/// Fresh indices are issued in increasing order; released ancillas must be
/// returned in LIFO order and are reused before a new index is issued.
#[derive(Debug, Clone)]
pub struct AncillaAllocator {
    next: usize,
    capacity: usize,
    free: Vec<usize>,
    live: Vec<usize>,
    issued: BTreeSet<usize>,
}

impl AncillaAllocator {
    pub fn new(first_index: usize, capacity: usize) -> Self {
        Self {
            next: first_index,
            capacity,
            free: Vec::new(),
            live: Vec::new(),
            issued: BTreeSet::new(),
        }
    }

    pub fn allocate(&mut self) -> Result<usize> {
        let idx = if let Some(idx) = self.free.pop() {
            idx
        } else {
            if self.issued.len() >= self.capacity {
                return Err(Error::AncillaExhausted(self.capacity));
            }
            let idx = self.next;
            self.next += 1;
            self.issued.insert(idx);
            idx
        };
        self.live.push(idx);
        Ok(idx)
    }

    /// Releases `idx`, which must be the most recently allocated live ancilla.
    pub fn release(&mut self, idx: usize) {
        let top = self.live.pop();
        assert_eq!(top, Some(idx), "ancillas must be released in LIFO order");
        self.free.push(idx);
    }

    pub fn live(&self) -> &[usize] {
        &self.live
    }

    /// Every index handed out so far.
    pub fn issued(&self) -> &BTreeSet<usize> {
        &self.issued
    }
}
