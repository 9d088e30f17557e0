mod checks;
mod convex;
mod io;
mod topology;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kkmforge::acceptance::{run_all, run_criterion, AcceptanceConfig, CRITERIA};
use kkmforge::checks::{CheckReport, FactorParams};
use kkmforge::sections::rp1_gluing_demo;
use serde::Serialize;

use crate::checks::CoverSource;
use crate::io::{emit, read_json, render, CmdResult, Failure, Outcome};

/// Certified checks for covering theorems, characteristic classes and convexity results.
#[derive(Parser, Debug)]
#[command(name = "kkmforge", version)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Seed for sampled probes and generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Edgewise subdivision parameter for built-in covers.
    #[arg(long, global = true, default_value_t = 8)]
    resolution: usize,
    /// Number of random probe families added to the vertex families.
    #[arg(long, global = true, default_value_t = 20)]
    probes: usize,
    /// Threshold for floating-point renders.
    #[arg(long, global = true, default_value_t = 1e-9)]
    epsilon: f64,
    /// Output file, written atomically; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Re-validate a previously emitted report instead of computing one.
    #[arg(long, global = true)]
    verify: Option<PathBuf>,
}

/// Settings shared by every subcommand and recorded in reports.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub resolution: usize,
    pub probes: usize,
    pub epsilon: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mod-2 Betti numbers and cocycle representatives of a complex file.
    Cohomology {
        complex: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Cup powers of Hopf classes on one projective space or a product of two.
    Euler {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<usize>,
    },
    /// Covering checks with exact intersection certificates.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Certified witnesses for convexity theorems.
    Convex {
        #[arg(value_enum)]
        kind: ConvexKind,
        input: PathBuf,
        /// Number of parts minus one, for point-set Tverberg inputs.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Section gluing demonstrations.
    Sections {
        #[command(subcommand)]
        kind: SectionsKind,
    },
    /// Runs the acceptance suite and prints one line per criterion.
    Acceptance {
        /// Triangulation of RP² replacing the generated one.
        #[arg(long)]
        rp2: Option<PathBuf>,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    Kkm {
        #[command(flatten)]
        source: CoverSource,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    Lebesgue {
        #[command(flatten)]
        source: CoverSource,
        /// Per-factor `d:n`, in factor order.
        #[arg(long = "factor", value_parser = checks::parse_factor, required = true)]
        factors: Vec<FactorParams>,
    },
    Skkm {
        #[command(flatten)]
        source: CoverSource,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    Cupvanish {
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConvexKind {
    Centerpoint,
    Helly,
    Barany,
    Tverberg,
    Gentverberg,
}

impl ConvexKind {
    fn name(self) -> &'static str {
        match self {
            ConvexKind::Centerpoint => "centerpoint",
            ConvexKind::Helly => "helly",
            ConvexKind::Barany => "barany",
            ConvexKind::Tverberg => "tverberg",
            ConvexKind::Gentverberg => "gentverberg",
        }
    }
}

#[derive(Subcommand, Debug)]
enum SectionsKind {
    /// Glued sections of H ⊕ H over RP¹ as CSV.
    Demo {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    seed: u64,
    resolution: usize,
    result: &'a serde_json::Value,
}

fn configure_threads() {
    if let Some(n) = std::env::var("KKMFORGE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Fails only when a pool already exists, in which case the existing one is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let cfg = RunConfig {
        seed: cli.run.seed,
        resolution: cli.run.resolution,
        probes: cli.run.probes,
        epsilon: cli.run.epsilon,
    };
    let out = cli.run.out.as_deref();
    match &cli.command {
        Command::Sections { kind: SectionsKind::Demo { samples } } => return sections_demo(*samples, &cfg, out),
        Command::Acceptance { rp2, only } => return acceptance(rp2.as_deref(), *only, &cfg, out),
        _ => {}
    }
    let name = command_name(&cli.command);
    let result = match &cli.run.verify {
        Some(report) => verify(&cli.command, report, &cfg),
        None => run(&cli.command, &cfg),
    };
    let (code, body) = match result {
        Ok(o) => (o.code, o.body),
        Err(Failure::Rejected(body)) => (1, body),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = render(
        &serde_json::to_value(Envelope { command: &name, seed: cfg.seed, resolution: cfg.resolution, result: &body })
            .expect("envelope serializes"),
    );
    if let Err(e) = emit(out, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Cohomology { .. } => "cohomology".into(),
        Command::Euler { .. } => "euler".into(),
        Command::Check { kind } => format!(
            "check {}",
            match kind {
                CheckKind::Kkm { .. } => "kkm",
                CheckKind::Lebesgue { .. } => "lebesgue",
                CheckKind::Skkm { .. } => "skkm",
                CheckKind::Cupvanish { .. } => "cupvanish",
            }
        ),
        Command::Convex { kind, .. } => format!("convex {}", kind.name()),
        Command::Sections { .. } => "sections demo".into(),
        Command::Acceptance { .. } => "acceptance".into(),
    }
}

fn run(cmd: &Command, cfg: &RunConfig) -> CmdResult {
    match cmd {
        Command::Cohomology { complex, degree } => topology::cohomology(complex, *degree),
        Command::Euler { dims, exponents } => topology::euler(dims, exponents),
        Command::Check { kind } => match kind {
            CheckKind::Kkm { source, d, n } => checks::kkm(&source.load(cfg)?, *d, *n, cfg),
            CheckKind::Lebesgue { source, factors } => checks::lebesgue(&source.load(cfg)?, factors, cfg),
            CheckKind::Skkm { source, d, n, r } => checks::skkm(&source.load(cfg)?, *d, *n, *r, cfg),
            CheckKind::Cupvanish { input } => topology::cupvanish(input),
        },
        Command::Convex { kind, input, r } => match kind {
            ConvexKind::Centerpoint => convex::centerpoint_cmd(input),
            ConvexKind::Helly => convex::helly_cmd(input),
            ConvexKind::Barany => convex::barany_cmd(input),
            ConvexKind::Tverberg => convex::tverberg_cmd(input, *r),
            ConvexKind::Gentverberg => convex::gentverberg_cmd(input),
        },
        Command::Sections { .. } | Command::Acceptance { .. } => unreachable!("handled before dispatch"),
    }
}

fn verify(cmd: &Command, report_path: &Path, cfg: &RunConfig) -> CmdResult {
    let report: serde_json::Value = read_json(report_path)?;
    let verification = match cmd {
        Command::Check { kind: CheckKind::Cupvanish { input } } => {
            let stored = serde_json::from_value(report["result"].clone()).map_err(|e| Failure::Input(format!("report: {e}")))?;
            let valid = topology::verify_cupvanish(input, &stored)?;
            convex::Verification { valid, detail: "cup-vanishing certificate".into() }
        }
        Command::Check { kind } => {
            let source = match kind {
                CheckKind::Kkm { source, .. } | CheckKind::Lebesgue { source, .. } | CheckKind::Skkm { source, .. } => source,
                CheckKind::Cupvanish { .. } => unreachable!("matched above"),
            };
            let stored: CheckReport =
                serde_json::from_value(report["result"].clone()).map_err(|e| Failure::Input(format!("report: {e}")))?;
            match checks::verify(&source.load(cfg)?, &stored)? {
                Ok(()) => convex::Verification { valid: true, detail: format!("verdict {:?}", stored.verdict) },
                Err(e) => convex::Verification { valid: false, detail: e },
            }
        }
        Command::Convex { kind, input, r } => convex::verify(kind.name(), input, &report, *r)?,
        _ => return Err(Failure::Input("this command has no certificates to verify".into())),
    };
    Outcome::new(if verification.valid { 0 } else { 1 }, verification)
}

fn sections_demo(samples: usize, cfg: &RunConfig, out: Option<&Path>) -> ExitCode {
    let rows = match rp1_gluing_demo(samples) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut csv = String::from("angle,t0,t1,norm_s1,norm_s2,nonvanishing\n");
    let mut all = true;
    for s in &rows {
        let ok = s.norms.iter().any(|&x| x > cfg.epsilon);
        all &= ok;
        csv.push_str(&format!("{:.9},{},{},{:.9},{:.9},{}\n", s.angle, s.t0, s.t1, s.norms[0], s.norms[1], ok));
    }
    if let Err(e) = emit(out, &csv) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(if all { 0 } else { 1 })
}

fn acceptance(rp2: Option<&Path>, only: Option<usize>, cfg: &RunConfig, out: Option<&Path>) -> ExitCode {
    let rp2 = match rp2.map(topology::load_complex).transpose() {
        Ok(k) => k,
        Err(e) => {
            if let Failure::Input(msg) = e {
                eprintln!("error: {msg}");
            }
            return ExitCode::from(2);
        }
    };
    let acfg = AcceptanceConfig { seed: cfg.seed, rp2 };
    let results = match only {
        Some(id) if (1..=CRITERIA.len()).contains(&id) => vec![run_criterion(id, &acfg)],
        Some(id) => {
            eprintln!("error: no criterion {id}");
            return ExitCode::from(2);
        }
        None => run_all(&acfg),
    };
    for r in &results {
        println!("{}", r.line());
    }
    if let Some(path) = out {
        let text = render(&serde_json::to_value(&results).expect("results serialize"));
        if let Err(e) = io::write_atomic(path, &text) {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(if results.iter().all(|r| r.passed) { 0 } else { 1 })
}
