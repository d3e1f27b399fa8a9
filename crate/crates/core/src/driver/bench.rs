// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Scaling benchmarks and the power-law fit `y = A N^B + C`.

use std::fmt::Write as _;
use std::time::Instant;

use nalgebra::{Matrix3, Vector3};
use rayon::prelude::*;

use super::pipeline::{prepare_hamiltonian, PipelineOptions};
use crate::error::Result;
use crate::isa::{gate_count_report, GateCategory};
use crate::models::{ModelKind, ModelSpec};
use crate::passes::{compile_to_native, trotterize, CompileConfig};
use crate::symbolic::OperatorPoly;

pub const CSV_HEADER: &str = "model,N_s,gates_bosonic,gates_qubit,gates_hybrid,compile_ms";

pub const DEFAULT_SIZES: [usize; 7] = [2, 4, 8, 16, 32, 64, 100];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Root-mean-square residual of the fit.
    pub residual: f64,
}

fn rms(xs: &[f64], ys: &[f64], a: f64, b: f64, c: f64) -> f64 {
    let ss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (a * x.powf(b) + c - y).powi(2))
        .sum();
    (ss / xs.len() as f64).sqrt()
}

/// Least-squares `A, C` for a fixed exponent.
fn linear_part(xs: &[f64], ys: &[f64], b: f64) -> (f64, f64) {
    let n = xs.len() as f64;
    let u: Vec<f64> = xs.iter().map(|x| x.powf(b)).collect();
    let su: f64 = u.iter().sum();
    let sy: f64 = ys.iter().sum();
    let suu: f64 = u.iter().map(|v| v * v).sum();
    let suy: f64 = u.iter().zip(ys).map(|(v, y)| v * y).sum();
    let det = n * suu - su * su;
    if det.abs() < 1e-300 {
        return (0.0, sy / n);
    }
    let a = (n * suy - su * sy) / det;
    (a, (sy - a * su) / n)
}

/// Fits `y = A x^B + C`. Needs at least three distinct positive `x`.
///
/// The exponent is seeded from a grid over `[0, 5]` with `A, C` solved
/// linearly at each point, then refined by damped Gauss-Newton steps on all
/// three parameters.
pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> Option<FitResult> {
    let mut distinct: Vec<f64> = xs.to_vec();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if xs.len() != ys.len() || distinct.len() < 3 || xs.iter().any(|&x| x <= 0.0) {
        return None;
    }
    let mut best = (f64::INFINITY, 0.0, 0.0, 0.0);
    for k in 0..=500 {
        let b = k as f64 * 0.01;
        let (a, c) = linear_part(xs, ys, b);
        let r = rms(xs, ys, a, b, c);
        if r < best.0 {
            best = (r, a, b, c);
        }
    }
    let (mut r, mut a, mut b, mut c) = best;
    let mut lambda = 1e-3;
    for _ in 0..200 {
        let mut jtj = Matrix3::<f64>::zeros();
        let mut jtr = Vector3::<f64>::zeros();
        for (&x, &y) in xs.iter().zip(ys) {
            let xb = x.powf(b);
            let j = Vector3::new(xb, a * xb * x.ln(), 1.0);
            let res = a * xb + c - y;
            jtj += j * j.transpose();
            jtr += j * res;
        }
        let mut damped = jtj;
        for d in 0..3 {
            damped[(d, d)] += lambda * jtj[(d, d)].max(1e-12);
        }
        let Some(step) = damped.lu().solve(&(-jtr)) else {
            break;
        };
        let (na, nb, nc) = (a + step[0], b + step[1], c + step[2]);
        let nr = rms(xs, ys, na, nb, nc);
        if nr.is_finite() && nr < r {
            let gain = r - nr;
            (a, b, c, r) = (na, nb, nc, nr);
            lambda = (lambda / 3.0).max(1e-12);
            if gain <= 1e-15 * r.max(1e-300) {
                break;
            }
        } else {
            lambda *= 4.0;
            if lambda > 1e12 {
                break;
            }
        }
    }
    Some(FitResult {
        a,
        b,
        c,
        residual: r,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub sites: usize,
    pub gates_bosonic: usize,
    pub gates_qubit: usize,
    pub gates_hybrid: usize,
    /// Median wall time of one Trotter step's transform and codegen.
    pub compile_ms: f64,
}

impl BenchRow {
    pub fn gates_total(&self) -> usize {
        self.gates_bosonic + self.gates_qubit + self.gates_hybrid
    }

    /// Per-step time multiplied by the number of sites.
    pub fn total_ms(&self) -> f64 {
        self.compile_ms * self.sites as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchFits {
    pub gates_bosonic: Option<FitResult>,
    pub gates_qubit: Option<FitResult>,
    pub gates_hybrid: Option<FitResult>,
    pub gates_total: Option<FitResult>,
    pub compile_ms: Option<FitResult>,
    pub total_ms: Option<FitResult>,
}

#[derive(Debug, Clone)]
pub struct BenchTable {
    pub model: ModelKind,
    pub rows: Vec<BenchRow>,
    pub fits: BenchFits,
}

/// Transform and codegen of one prepared Hamiltonian, returning the circuit
/// gate counts. Parsing and model construction are done by the caller.
fn compile_once(h: &OperatorPoly, opts: &PipelineOptions) -> Result<[usize; 3]> {
    let mapped = prepare_hamiltonian(h, opts.ordering)?;
    let plan = trotterize(
        &mapped,
        opts.total_time(),
        opts.steps,
        opts.order,
        opts.cutoff,
    )?;
    let config = CompileConfig {
        cutoff: opts.cutoff,
        ancilla_capacity: opts.ancilla_capacity,
        ..CompileConfig::default()
    };
    let compiled = compile_to_native(&plan, &config)?;
    let r = gate_count_report(&compiled.circuit);
    Ok([
        r.category(GateCategory::Bosonic),
        r.category(GateCategory::Qubit),
        r.category(GateCategory::Hybrid),
    ])
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

/// Compiles one Trotter step of `model` at each size. Gate counts are
/// gathered concurrently; timing runs are sequential.
pub fn run_bench(
    model: &ModelSpec,
    sizes: &[usize],
    repetitions: usize,
    opts: &PipelineOptions,
) -> Result<BenchTable> {
    let opts = PipelineOptions {
        steps: 1,
        ..opts.clone()
    };
    let hamiltonians: Vec<(usize, OperatorPoly)> = sizes
        .iter()
        .map(|&n| {
            let mut spec = model.clone();
            spec.sites = n;
            spec.build().map(|h| (n, h))
        })
        .collect::<Result<_>>()?;
    let counts: Vec<[usize; 3]> = hamiltonians
        .par_iter()
        .map(|(_, h)| compile_once(h, &opts))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for ((n, h), c) in hamiltonians.iter().zip(counts) {
        let mut times = Vec::new();
        for _ in 0..repetitions.max(1) {
            let start = Instant::now();
            compile_once(h, &opts)?;
            times.push(start.elapsed().as_secs_f64() * 1e3);
        }
        rows.push(BenchRow {
            sites: *n,
            gates_bosonic: c[0],
            gates_qubit: c[1],
            gates_hybrid: c[2],
            compile_ms: median(times),
        });
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.sites as f64).collect();
    let fit = |f: &dyn Fn(&BenchRow) -> f64| {
        let ys: Vec<f64> = rows.iter().map(f).collect();
        fit_power_law(&xs, &ys)
    };
    let fits = BenchFits {
        gates_bosonic: fit(&|r| r.gates_bosonic as f64),
        gates_qubit: fit(&|r| r.gates_qubit as f64),
        gates_hybrid: fit(&|r| r.gates_hybrid as f64),
        gates_total: fit(&|r| r.gates_total() as f64),
        compile_ms: fit(&|r| r.compile_ms),
        total_ms: fit(&|r| r.total_ms()),
    };
    Ok(BenchTable {
        model: model.kind,
        rows,
        fits,
    })
}

impl BenchTable {
    pub fn to_csv(&self) -> String {
        let mut s = format!("{CSV_HEADER}\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{:.6}",
                self.model, r.sites, r.gates_bosonic, r.gates_qubit, r.gates_hybrid, r.compile_ms
            );
        }
        s
    }

    /// One line per fitted column, or a note that the fit was skipped.
    pub fn summary(&self) -> String {
        let f = &self.fits;
        let mut s = String::new();
        for (name, fit) in [
            ("gates_bosonic", f.gates_bosonic),
            ("gates_qubit", f.gates_qubit),
            ("gates_hybrid", f.gates_hybrid),
            ("gates_total", f.gates_total),
            ("compile_ms", f.compile_ms),
            ("total_ms", f.total_ms),
        ] {
            let _ = match fit {
                Some(r) => writeln!(
                    s,
                    "{} {name}: A={:.6e} B={:.4} C={:.6e} residual={:.3e}",
                    self.model, r.a, r.b, r.c, r.residual
                ),
                None => writeln!(s, "{} {name}: fit skipped (fewer than 3 sizes)", self.model),
            };
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exact_power_law() {
        let xs = [2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 100.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 0.5 * x.powf(2.09) + 3.0).collect();
        let f = fit_power_law(&xs, &ys).unwrap();
        assert!((f.b - 2.09).abs() < 1e-6, "{f:?}");
        assert!(
            (f.a - 0.5).abs() < 1e-5 && (f.c - 3.0).abs() < 1e-3,
            "{f:?}"
        );
        assert!(f.residual < 1e-6);
    }

    #[test]
    fn affine_counts_fit_exponent_one() {
        let xs = [2.0, 4.0, 8.0, 16.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 1.0).collect();
        let f = fit_power_law(&xs, &ys).unwrap();
        assert!((f.b - 1.0).abs() < 1e-6, "{f:?}");
    }

    #[test]
    fn underdetermined_fit_is_skipped() {
        assert!(fit_power_law(&[4.0], &[1.0]).is_none());
        assert!(fit_power_law(&[2.0, 2.0, 4.0], &[1.0, 1.0, 2.0]).is_none());
    }

    #[test]
    fn single_size_bench_emits_raw_row() {
        let spec = ModelSpec::new(ModelKind::BoseHubbard, 1);
        let opts = PipelineOptions {
            cutoff: Some(4),
            ..PipelineOptions::default()
        };
        let t = run_bench(&spec, &[3], 1, &opts).unwrap();
        assert_eq!(t.rows.len(), 1);
        // 2 BS + 3 R bosonic, 3 SNAP hybrid
        assert_eq!(t.rows[0].gates_bosonic, 5);
        assert_eq!(t.rows[0].gates_hybrid, 3);
        assert!(t.fits.gates_total.is_none());
        let csv = t.to_csv();
        assert!(csv.starts_with(CSV_HEADER));
        assert!(csv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("bose_hubbard,3,5,0,3,"));
    }
}
