use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use gzariski::cache::LatticeCache;
use gzariski::checks::{run_checks, select, Check, Env, Sampling};
use gzariski::corpus::builtin_corpus;
use gzariski::error::Error;
use gzariski::ideal::IdealLattice;
use gzariski::instance::{read_instance, InstanceDesc};
use gzariski::limits::Limits;
use gzariski::report::{emit, Format, InstanceReport, Report};
use gzariski::spectrum::{SpectrumKind, SpectrumSpace, VarietySemantics};
use gzariski::topology::FiniteTopology;

#[derive(Parser)]
#[command(
    name = "gzariski",
    version,
    about = "Graded quasi-primary spectra of finite graded modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an instance and check every ring and module axiom.
    Validate { file: PathBuf },
    /// List the points of a spectrum.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value = "qp-module")]
        kind: SpectrumKind,
        #[arg(long)]
        semantics: Option<VarietySemantics>,
    },
    /// Closed sets and topological profile of a spectrum.
    Topology {
        file: PathBuf,
        #[arg(long, default_value = "qp-module")]
        space: SpectrumKind,
        #[arg(long)]
        semantics: Option<VarietySemantics>,
    },
    /// Run the check catalog.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
    file: Option<PathBuf>,
    /// Run every built-in instance.
    #[arg(long)]
    corpus: bool,
    /// Comma-separated ids; a prefix such as T3.15 selects all its parts.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Spectrum { file, kind, semantics } => spectrum(&file, kind, semantics, false),
        Command::Topology { file, space, semantics } => spectrum(&file, space, semantics, true),
        Command::Verify(args) => verify(args),
    };
    match run {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(file: &Path) -> Result<(InstanceDesc, Limits), String> {
    let mut desc = read_instance(file).map_err(|e| e.to_string())?;
    if desc.name.is_none() {
        desc.name = file.file_stem().map(|s| s.to_string_lossy().into_owned());
    }
    let limits = desc.limits(Limits::default());
    Ok((desc, limits))
}

fn validate(file: &Path) -> Result<ExitCode, String> {
    let (desc, limits) = load(file)?;
    let ctx = desc.context(&limits).map_err(|e| e.to_string())?;
    println!("{}: ok", desc.display_name());
    println!("  group order {}", ctx.ring.group().order());
    println!("  |R| = {}, graded ideals {}", ctx.ring.size(), ctx.ideals.len());
    println!(
        "  |M| = {}, graded submodules {}",
        ctx.module.size(),
        ctx.submodules.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn spectrum(
    file: &Path,
    kind: SpectrumKind,
    semantics: Option<VarietySemantics>,
    topology: bool,
) -> Result<ExitCode, String> {
    let (desc, limits) = load(file)?;
    let semantics = semantics.unwrap_or(desc.semantics());
    let space = if kind.is_module() {
        let ctx = desc.context(&limits).map_err(|e| e.to_string())?;
        SpectrumSpace::of_module(&ctx.module, &ctx.ideals, &ctx.submodules, kind)
    } else {
        let ring = desc.build_ring(&limits).map_err(|e| e.to_string())?;
        let ideals = IdealLattice::build(&ring, limits.max_lattice).map_err(|e| e.to_string())?;
        SpectrumSpace::of_ring(&ring, &ideals, kind, semantics)
    }
    .map_err(|e| e.to_string())?;

    let sem = if kind == SpectrumKind::QpRing {
        format!(" semantics={semantics}")
    } else {
        String::new()
    };
    println!("{} {}{} points={}", desc.display_name(), kind, sem, space.len());
    for (i, label) in space.labels.iter().enumerate() {
        println!("  {i}: {label}");
    }
    if topology {
        let top = FiniteTopology::build(&space);
        let p = top.profile();
        println!("closed sets ({}):", top.closed_sets().len());
        for c in top.closed_sets() {
            println!("  {}", space.subset_label(c));
        }
        println!("T0 {}", p.is_t0);
        println!("T1 {}", p.is_t1);
        println!("connected {}", p.is_connected);
        println!("irreducible {}", p.is_irreducible_space);
        println!("quasi-compact {}", p.is_quasi_compact);
        println!("spectral {}", p.is_spectral);
        println!("longest chain {}", p.longest_chain);
        println!("components:");
        for c in &p.irreducible_components {
            let g = top.generic_point(c);
            let gp = g.point.map_or("none".to_string(), |q| space.labels[q].clone());
            println!("  {} generic {}", space.subset_label(c), gp);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_instance(
    desc: &InstanceDesc,
    checks: &[&'static Check],
    cache: Option<&LatticeCache>,
    sampling: Sampling,
) -> Result<InstanceReport, Error> {
    let start = Instant::now();
    let limits = desc.limits(Limits::default());
    let ctx = match cache {
        Some(c) => c.context(desc, &limits)?.0,
        None => desc.context(&limits)?,
    };
    let env = Env::new(&ctx, desc.semantics(), sampling)?;
    let results = run_checks(&env, checks);
    Ok(InstanceReport {
        instance: desc.display_name().to_string(),
        semantics: desc.semantics(),
        require_primeful: desc.require_primeful(),
        results,
        elapsed: start.elapsed(),
    })
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let descs = match &args.file {
        Some(f) => vec![load(f)?.0],
        None => builtin_corpus(),
    };
    let checks = select(&args.checks).map_err(|id| format!("unknown check id `{id}`"))?;
    let cache = args.cache_dir.map(LatticeCache::new);
    let sampling = Sampling::default();

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build().map_err(|e| e.to_string())?;
    let reports: Vec<Result<InstanceReport, Error>> = pool.install(|| {
        descs
            .par_iter()
            .map(|d| run_instance(d, &checks, cache.as_ref(), sampling))
            .collect()
    });
    let mut instances = Vec::with_capacity(reports.len());
    for (d, r) in descs.iter().zip(reports) {
        instances.push(r.map_err(|e| format!("{}: {e}", d.display_name()))?);
    }
    let report = Report { sampling, instances };
    let text = emit(&report, args.format);
    match &args.out {
        Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(if report.any_failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
