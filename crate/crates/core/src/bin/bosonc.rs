// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bosonc::driver::{
    compile_hamiltonian, parse_hamiltonian_file, run_bench, verify_compiled, CompileOutcome,
    PipelineOptions, DEFAULT_SIZES,
};
use bosonc::isa::{emit_text, to_json};
use bosonc::models::{ModelKind, ModelSpec};
use bosonc::oracle::{dump::write_matrix, realize_circuit, RegisterLayout};
use bosonc::symbolic::{OperatorPoly, OrderingMode};
use bosonc::Error;

#[derive(Parser)]
#[command(
    name = "bosonc",
    version,
    about = "Compile fermion-boson-qubit Hamiltonians to qubit-boson circuits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a Trotterized time evolution to native gates.
    Compile(CompileArgs),
    /// Compile, then compare against exact evolution on a truncated register.
    Verify(VerifyArgs),
    /// Time compilation over a range of system sizes and fit power laws.
    Bench(BenchArgs),
    /// List the built-in models and their default parameters.
    Models,
}

#[derive(Args)]
struct SourceArgs {
    /// Built-in model name.
    #[arg(long, conflicts_with = "input")]
    model: Option<String>,
    /// Number of lattice sites for --model.
    #[arg(long, default_value_t = 2)]
    sites: usize,
    /// Model parameter, `name=value` or `name=v0,v1,...` per site.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Add the wrap-around bond (chains of 3 or more sites).
    #[arg(long)]
    periodic: bool,
    /// Hamiltonian file.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct PipelineArgs {
    #[arg(long, default_value_t = 0.05)]
    dt: f64,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
    order: u32,
    /// Boson cutoff n_max.
    #[arg(long)]
    cutoff: Option<usize>,
    /// Keep ladder products in their written order when normal ordering.
    #[arg(long)]
    no_ladder_canonicalize: bool,
    /// Ancilla pool size (default: one per boson mode).
    #[arg(long)]
    ancillas: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct CompileArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputFormat,
    /// Output file (default: stdout).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Also run oracle verification.
    #[arg(long)]
    verify: bool,
    /// Write the realized circuit matrix to this file.
    #[arg(long, value_name = "FILE")]
    dump_matrix: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long, value_name = "FILE")]
    dump_matrix: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    model: String,
    /// Comma-separated site counts.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SIZES)]
    sizes: Vec<usize>,
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[arg(long)]
    periodic: bool,
    #[arg(long, default_value_t = 3)]
    repetitions: usize,
    #[arg(long, default_value_t = 4)]
    cutoff: usize,
    #[arg(long, default_value_t = 0.05)]
    dt: f64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
    order: u32,
    /// CSV output file (default: stdout).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Compile(Error),
    Io(String),
    VerifyFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compile(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Compile(Error::NonHermitian) => 2,
            Failure::Compile(Error::Irreducible { .. }) => 3,
            Failure::Compile(Error::DimensionCap { .. }) => 4,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn load_source(src: &SourceArgs) -> CliResult<(OperatorPoly, String)> {
    match (&src.model, &src.input) {
        (Some(name), None) => {
            let kind: ModelKind = name.parse()?;
            let mut spec = ModelSpec::new(kind, src.sites);
            spec.periodic = src.periodic;
            for p in &src.params {
                spec.set_from_str(p)?;
            }
            Ok((spec.build()?, kind.name().to_string()))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let label = path
                .file_name()
                .map_or_else(|| "input".to_string(), |f| f.to_string_lossy().into_owned());
            Ok((parse_hamiltonian_file(&text)?, label))
        }
        _ => Err(Error::Config("give exactly one of --model or --input".into()).into()),
    }
}

fn options(p: &PipelineArgs) -> PipelineOptions {
    PipelineOptions {
        dt: p.dt,
        steps: p.steps,
        order: p.order,
        cutoff: p.cutoff,
        ordering: if p.no_ladder_canonicalize {
            OrderingMode::Literal
        } else {
            OrderingMode::Canonical
        },
        ancilla_capacity: p.ancillas,
    }
}

fn compile_source(
    src: &SourceArgs,
    p: &PipelineArgs,
) -> CliResult<(OperatorPoly, CompileOutcome, PipelineOptions)> {
    let (h, label) = load_source(src)?;
    let opts = options(p);
    let mut out = compile_hamiltonian(&h, &opts)?;
    out.circuit.metadata.set("model", &label);
    if src.model.is_some() {
        out.circuit.metadata.set("sites", src.sites);
        if src.periodic {
            out.circuit.metadata.set("boundary", "periodic");
        }
        for p in &src.params {
            if let Some((k, v)) = p.split_once('=') {
                out.circuit
                    .metadata
                    .set(&format!("param.{}", k.trim()), v.trim());
            }
        }
    }
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    Ok((h, out, opts))
}

fn write_output(path: Option<&Path>, body: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn dump_matrix(out: &CompileOutcome, opts: &PipelineOptions, path: &Path) -> CliResult<()> {
    let cutoff = opts
        .cutoff
        .ok_or(Error::MissingCutoff("dump the circuit matrix"))?;
    let layout = RegisterLayout::from_registry(&out.circuit.registry, cutoff)?;
    let u = realize_circuit(&out.circuit, &layout)?;
    let mut f = io::BufWriter::new(fs::File::create(path)?);
    write_matrix(&mut f, &u.matrix)?;
    f.flush()?;
    Ok(())
}

fn run_verify(h: &OperatorPoly, out: &CompileOutcome, opts: &PipelineOptions) -> CliResult<()> {
    let v = verify_compiled(h, out, opts)?;
    eprintln!(
        "distance {:.6e}  budget {:.6e}  threshold {:.6e}  leakage {:.3e}",
        v.distance, v.budget, v.threshold, v.leakage
    );
    for s in &v.spot_checks {
        eprintln!(
            "  {} distance {:.3e} budget {:.3e}  {}",
            if s.passed { "ok  " } else { "FAIL" },
            s.distance,
            s.budget,
            s.label
        );
    }
    if v.passed {
        eprintln!("verify: pass");
        Ok(())
    } else {
        eprintln!("verify: FAIL");
        Err(Failure::VerifyFailed)
    }
}

fn cmd_compile(a: &CompileArgs) -> CliResult<()> {
    let (h, out, opts) = compile_source(&a.source, &a.pipeline)?;
    let body = match a.output {
        OutputFormat::Text => emit_text(&out.circuit),
        OutputFormat::Json => to_json(&out.circuit),
    };
    write_output(a.out.as_deref(), &body)?;
    eprint!("{}", out.report);
    if let Some(path) = &a.dump_matrix {
        dump_matrix(&out, &opts, path)?;
    }
    if a.verify {
        run_verify(&h, &out, &opts)?;
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> CliResult<()> {
    let (h, out, opts) = compile_source(&a.source, &a.pipeline)?;
    eprint!("{}", out.report);
    if let Some(path) = &a.dump_matrix {
        dump_matrix(&out, &opts, path)?;
    }
    run_verify(&h, &out, &opts)
}

fn cmd_bench(a: &BenchArgs) -> CliResult<()> {
    let kind: ModelKind = a.model.parse()?;
    let mut spec = ModelSpec::new(kind, 1);
    spec.periodic = a.periodic;
    for p in &a.params {
        spec.set_from_str(p)?;
    }
    let opts = PipelineOptions {
        dt: a.dt,
        order: a.order,
        cutoff: Some(a.cutoff),
        ..PipelineOptions::default()
    };
    let table = run_bench(&spec, &a.sizes, a.repetitions, &opts)?;
    write_output(a.out.as_deref(), &table.to_csv())?;
    eprint!("{}", table.summary());
    Ok(())
}

fn cmd_models() {
    for kind in ModelKind::ALL {
        let params: Vec<String> = kind
            .defaults()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        println!("{}  {}", kind.name(), params.join(" "));
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("BOSONC_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compile(a) => cmd_compile(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Models => {
            cmd_models();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Compile(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::VerifyFailed => {}
            }
            ExitCode::from(f.exit_code())
        }
    }
}
