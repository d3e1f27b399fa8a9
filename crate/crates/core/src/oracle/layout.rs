// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};
use crate::symbolic::{ModeRegistry, SiteClass};

/// Largest total dimension the oracle will build.
pub const DIM_CAP: usize = 4096;

/// Ordered tensor factors: the first entry is the most significant digit of
/// a basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterLayout {
    sites: Vec<(usize, usize)>,
    strides: Vec<usize>,
    dim: usize,
}

impl RegisterLayout {
    /// `sites` lists `(mode, local dimension)` pairs.
    pub fn new(sites: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut dim: usize = 1;
        for &(m, d) in &sites {
            if !seen.insert(m) {
                return Err(Error::Config(format!("mode {m} listed twice in layout")));
            }
            if d == 0 {
                return Err(Error::Config(format!("mode {m} has zero dimension")));
            }
            dim = dim.saturating_mul(d);
        }
        if dim > DIM_CAP {
            return Err(Error::DimensionCap { dim, cap: DIM_CAP });
        }
        let mut strides = vec![1; sites.len()];
        for k in (0..sites.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * sites[k + 1].1;
        }
        Ok(Self {
            sites,
            strides,
            dim,
        })
    }

    /// System sites ascending by index, then ancillas ascending. Boson modes
    /// get `cutoff + 1` levels, every other site two.
    pub fn from_registry(registry: &ModeRegistry, cutoff: usize) -> Result<Self> {
        let mut sites = Vec::new();
        for m in registry.all_modes() {
            if registry.ancillas.contains(&m) {
                continue;
            }
            let d = if registry.class_of(m) == Some(SiteClass::Boson) {
                cutoff + 1
            } else {
                2
            };
            sites.push((m, d));
        }
        sites.extend(registry.ancillas.iter().map(|&a| (a, 2)));
        Self::new(sites)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sites(&self) -> &[(usize, usize)] {
        &self.sites
    }

    pub fn position(&self, mode: usize) -> Result<usize> {
        self.sites
            .iter()
            .position(|&(m, _)| m == mode)
            .ok_or(Error::MissingFromLayout(mode))
    }

    pub fn local_dim(&self, mode: usize) -> Result<usize> {
        Ok(self.sites[self.position(mode)?].1)
    }

    pub fn stride(&self, pos: usize) -> usize {
        self.strides[pos]
    }

    /// Digit of site `pos` in basis index `index`.
    pub fn digit(&self, index: usize, pos: usize) -> usize {
        (index / self.strides[pos]) % self.sites[pos].1
    }

    /// Basis indices whose digits all satisfy `keep(mode, digit)`, ascending.
    pub fn indices_where(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<usize> {
        (0..self.dim)
            .filter(|&i| {
                self.sites
                    .iter()
                    .enumerate()
                    .all(|(p, &(m, _))| keep(m, self.digit(i, p)))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_site_is_most_significant() {
        let l = RegisterLayout::new(vec![(3, 2), (0, 4)]).unwrap();
        assert_eq!(l.dim(), 8);
        assert_eq!(l.digit(5, 0), 1);
        assert_eq!(l.digit(5, 1), 1);
        assert_eq!(l.digit(6, 1), 2);
        assert!(matches!(
            RegisterLayout::new(vec![(0, 64), (1, 65)]),
            Err(Error::DimensionCap { .. })
        ));
    }

    #[test]
    fn ancillas_go_last() {
        let mut reg = ModeRegistry::new();
        reg.register(2, SiteClass::Boson).unwrap();
        reg.register(0, SiteClass::Qubit).unwrap();
        reg.add_ancilla(1).unwrap();
        let l = RegisterLayout::from_registry(&reg, 3).unwrap();
        assert_eq!(l.sites(), &[(0, 2), (2, 4), (1, 2)]);
    }
}
