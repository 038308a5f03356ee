use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lindef_core::corpus;
use lindef_core::lindefect::LinearityDefect;
use lindef_core::report::{analyze, emit, AnalyzeOptions, CheckStatus, Format, RingReport};
use lindef_core::resolution::ResolveOptions;
use lindef_core::ringspec::{parse_module_spec, parse_ring_spec, RingSpec};

#[derive(Parser)]
#[command(name = "lindef", version, about = "Linearity defect and related invariants of local algebras over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(clap::Args)]
struct Common {
    /// Ring spec file.
    spec: PathBuf,
    /// Homological depth (default: the spec's `depth`, else 8).
    #[arg(long)]
    depth: Option<usize>,
    /// Abort a resolution step whose matrix would exceed this many entries.
    #[arg(long, default_value_t = ResolveOptions::default().max_entries)]
    max_entries: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for a ring.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Also analyze m^n and R/m^n.
        #[arg(long)]
        powers: bool,
        /// Module spec file (repeatable).
        #[arg(long = "module")]
        modules: Vec<PathBuf>,
        /// Write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Format written to stdout.
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// List the built-in rings, write their spec files, or analyze them all.
    Corpus {
        #[arg(long)]
        run: bool,
        /// Directory to write `<name>.ring` files into.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// ν tables of the residue field.
    Nu {
        #[command(flatten)]
        common: Common,
    },
    /// Linearity defect of the residue field.
    Ld {
        #[command(flatten)]
        common: Common,
    },
    /// Koszul check of the associated graded ring.
    Koszul {
        #[command(flatten)]
        common: Common,
    },
}

fn read_spec(path: &Path) -> Result<RingSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_ring_spec(&text).map_err(|e| anyhow!("{}:{e}", path.display()))
}

fn options(common: &Common) -> AnalyzeOptions {
    AnalyzeOptions {
        depth: common.depth,
        resolve: ResolveOptions { max_entries: common.max_entries },
        ..Default::default()
    }
}

fn run_common(common: &Common) -> Result<RingReport> {
    let spec = read_spec(&common.spec)?;
    Ok(analyze(&spec, &options(common))?)
}

fn exit_for(report: &RingReport) -> ExitCode {
    if report.checks.iter().any(|c| matches!(c.status, CheckStatus::Fail | CheckStatus::Advisory)) {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { common, powers, modules, json, format, timing } => {
            let spec = read_spec(&common.spec)?;
            let mut opts = options(&common);
            opts.powers = powers;
            opts.timing = timing;
            for path in &modules {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let m =
                    parse_module_spec(&text, &spec.vars, spec.fp()).map_err(|e| anyhow!("{}:{e}", path.display()))?;
                let label = path.file_stem().map_or_else(|| "M".to_string(), |s| s.to_string_lossy().into_owned());
                opts.modules.push((label, m));
            }
            let report = analyze(&spec, &opts)?;
            if let Some(out) = json {
                fs::write(&out, emit(&report, Format::Json)).with_context(|| format!("writing {}", out.display()))?;
            }
            let format = match format {
                OutputFormat::Table => Format::Table,
                OutputFormat::Json => Format::Json,
            };
            print!("{}", emit(&report, format));
            Ok(exit_for(&report))
        }
        Command::Corpus { run, out, depth } => {
            let entries = corpus::entries();
            if let Some(dir) = &out {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                for e in &entries {
                    let path = dir.join(format!("{}.ring", e.name));
                    fs::write(&path, e.spec_text(101)).with_context(|| format!("writing {}", path.display()))?;
                }
            }
            let mut code = ExitCode::SUCCESS;
            for e in &entries {
                if !run {
                    println!("{:<4} ({}) {}", e.name, e.relations.join(", "), e.description);
                    continue;
                }
                let spec = parse_ring_spec(&e.spec_text(101)).map_err(|err| anyhow!("{}: {err}", e.name))?;
                let report =
                    analyze(&spec, &AnalyzeOptions { depth: Some(depth), powers: true, ..Default::default() })?;
                let mismatches = e.mismatches(&report);
                let flagged: Vec<_> = report
                    .checks
                    .iter()
                    .filter(|c| matches!(c.status, CheckStatus::Fail | CheckStatus::Advisory))
                    .map(|c| c.name.as_str())
                    .collect();
                let ok = mismatches.is_empty() && flagged.is_empty();
                println!(
                    "{:<4} {}  ld(k) {}",
                    e.name,
                    if ok { "ok" } else { "MISMATCH" },
                    report.ld("k").map_or("-".into(), |l| l.to_string())
                );
                for m in &mismatches {
                    println!("     {m}");
                }
                for c in &flagged {
                    println!("     check {c}");
                }
                if !ok {
                    code = ExitCode::from(2);
                }
            }
            Ok(code)
        }
        Command::Nu { common } => {
            let report = run_common(&common)?;
            let nu = report.nu.get("k").ok_or_else(|| anyhow!("depth must be at least 2 for ν tables"))?;
            println!("ν^n_i(k): row i, column n, 0 = vanishes, • = nonzero");
            print!("  i");
            for n in 1..=nu.max_n() {
                print!("  {n}");
            }
            println!();
            for i in 1..=nu.max_i() {
                print!("{i:>3}");
                for n in 1..=nu.max_n() {
                    print!("  {}", if nu.vanishes(i, n) { "0" } else { "•" });
                }
                println!();
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ld { common } => {
            let report = run_common(&common)?;
            let ld = report.ld("k").ok_or_else(|| anyhow!("depth must be at least 2 for ld"))?;
            match ld {
                LinearityDefect::Exact(d) => println!("ld(k) = {d}"),
                LinearityDefect::AtLeast(d) => println!("ld(k) >= {d}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Koszul { common } => {
            let report = run_common(&common)?;
            let k = report.verdicts.koszul_up_to;
            println!("koszul: {} (up to homological degree {})", if k.holds { "yes" } else { "no" }, k.depth);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
