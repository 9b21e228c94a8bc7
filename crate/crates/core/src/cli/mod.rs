//! The `nconc` command line.
//!
//! Exit codes: 0 ok, 2 usage, 3 bad input, 4 size cap, 5 numerical failure.
//! Failures also print a one-line JSON error record on stderr.

pub mod config;
pub mod grid;
pub mod io;
pub mod manifest;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use self::config::Config;
use self::grid::{parse_sizes, CustomGrid, Figure, GridSpec};
use self::manifest::{digest_file, versions, RunManifest};
use crate::concurrence::{ensemble_concurrence, minimizing_ensemble, mixed_concurrence, TimeReversalOp};
use crate::error::{Error, Result};
use crate::experiments::{self, sweeps, Engine, SweepRecord};
use crate::freefermion::{hcrit, xx_lowest_levels};
use crate::random::{random_density_matrix, seeded};
use crate::spin::ops::{collective_sz, expectation};
use crate::spin::{self, Boundary, ChainSpec, DensityMatrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_SIZE_CAP: i32 = 4;
pub const EXIT_NUMERICAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "nconc", version, about = "n-concurrence of XX/XY spin chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// INI-style key = value file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write a run manifest here (for `replay`: the manifest to check).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    Dense,
    Analytic,
    Auto,
}

#[derive(Args, Clone, Debug, Default)]
struct ChainArgs {
    #[arg(long)]
    n: Option<usize>,
    /// Coupling J; with --gamma gives jx = J(1+γ), jy = J(1−γ).
    #[arg(long)]
    j: Option<f64>,
    #[arg(long)]
    jx: Option<f64>,
    #[arg(long)]
    jy: Option<f64>,
    #[arg(long)]
    jz: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<f64>,
    #[arg(long)]
    boundary: Option<Boundary>,
    #[arg(long, value_enum)]
    engine: Option<EngineChoice>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ground energy, degeneracy, concurrence and magnetization.
    Ground(ChainArgs),
    /// Partition function and concurrence of the thermal state.
    Thermal {
        #[command(flatten)]
        chain: ChainArgs,
        /// Temperature t = k_B T / J.
        #[arg(long)]
        t: Option<f64>,
    },
    /// Field at which the ground state leaves the S_z = 0 sector.
    Critical(ChainArgs),
    /// Threshold temperature above which the thermal concurrence vanishes.
    Threshold(ChainArgs),
    /// Grid sweep written as CSV.
    Sweep {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long)]
        t: Option<f64>,
        /// fig1 | fig2 | fig3 | table1 | axis=start:stop:step;axis=v1,v2
        #[arg(long)]
        grid: Option<String>,
        /// Also write a gnuplot script for the CSV.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Minimizing ensemble of a density matrix.
    Ensemble {
        /// Density-matrix file ("<dim> <n>" header, then "re im" lines).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Use a seeded random density matrix of this dimension instead.
        #[arg(long)]
        random_dim: Option<usize>,
        #[arg(long)]
        rank: Option<usize>,
        /// Sites flipped by the time reversal (default: all).
        #[arg(long)]
        sites: Option<String>,
    },
    /// Cross-check the analytic engine against dense diagonalization.
    Validate {
        /// Sizes, e.g. 4..8 or 4,6.
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long)]
        j: Option<f64>,
    },
    /// Re-run the command in a manifest and compare output digests.
    Replay,
}

struct Ctx<'a> {
    cfg: Config,
    json: bool,
    out_path: Option<PathBuf>,
    seed: Option<u64>,
    workers: Option<usize>,
    manifest: Option<PathBuf>,
    argv: Vec<String>,
    start: Instant,
    stdout: &'a mut dyn Write,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = write!(stderr, "{e}");
                let record = json!({"error": "Usage", "message": e.kind().to_string(), "exit_code": code});
                let _ = writeln!(stderr, "{record}");
            }
            return code;
        }
    };
    match dispatch(cli, argv, stdout) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            let record = json!({"error": e.kind(), "message": e.to_string(), "exit_code": code});
            let _ = writeln!(stderr, "{record}");
            code
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_size_cap() {
        EXIT_SIZE_CAP
    } else if e.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_INPUT
    }
}

fn dispatch(cli: Cli, argv: Vec<String>, stdout: &mut dyn Write) -> Result<i32> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let mut ctx = Ctx {
        json: cli.json || cfg.get("json")?.unwrap_or(false),
        out_path: cfg.pick(cli.out, "out")?,
        seed: cfg.pick(cli.seed, "seed")?,
        workers: cfg.pick(cli.workers, "workers")?,
        manifest: cli.manifest,
        cfg,
        argv,
        start: Instant::now(),
        stdout,
    };
    if ctx.workers == Some(0) {
        return Err(Error::Parse("--workers must be at least 1".into()));
    }
    match cli.command {
        Command::Ground(a) => cmd_ground(&mut ctx, &a),
        Command::Thermal { chain, t } => cmd_thermal(&mut ctx, &chain, t),
        Command::Critical(a) => cmd_critical(&mut ctx, &a),
        Command::Threshold(a) => cmd_threshold(&mut ctx, &a),
        Command::Sweep { chain, t, grid, plot } => cmd_sweep(&mut ctx, &chain, t, grid, plot),
        Command::Ensemble {
            input,
            random_dim,
            rank,
            sites,
        } => cmd_ensemble(&mut ctx, input, random_dim, rank, sites),
        Command::Validate { sizes, j } => cmd_validate(&mut ctx, sizes, j),
        Command::Replay => cmd_replay(&mut ctx),
    }
}

impl Ctx<'_> {
    fn emit(&mut self, fields: Vec<(&str, Value)>) -> Result<()> {
        if self.json {
            let map: Map<String, Value> = fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            writeln!(self.stdout, "{}", Value::Object(map))?;
        } else {
            for (k, v) in fields {
                match v {
                    Value::String(s) => writeln!(self.stdout, "{k} = {s}")?,
                    other => writeln!(self.stdout, "{k} = {other}")?,
                }
            }
        }
        Ok(())
    }

    fn chain(&self, a: &ChainArgs, default_n: Option<usize>) -> Result<ChainSpec> {
        let c = &self.cfg;
        let n = c
            .pick(a.n, "n")?
            .or(default_n)
            .ok_or_else(|| Error::Parse("--n is required".into()))?;
        let j = c.pick(a.j, "j")?.unwrap_or(1.0);
        let gamma = c.pick(a.gamma, "gamma")?.unwrap_or(0.0);
        let jx = c.pick(a.jx, "jx")?.unwrap_or(j * (1.0 + gamma));
        let jy = c.pick(a.jy, "jy")?.unwrap_or(j * (1.0 - gamma));
        let jz = c.pick(a.jz, "jz")?.unwrap_or(0.0);
        let h = c.pick(a.h, "h")?.unwrap_or(0.0);
        let boundary = c.pick(a.boundary, "boundary")?.unwrap_or(Boundary::Periodic);
        let spec = ChainSpec::xyz(n, jx, jy, jz, h, boundary);
        spec.validate()?;
        Ok(spec)
    }

    fn engine_choice(&self, a: &ChainArgs) -> Result<EngineChoice> {
        match a.engine {
            Some(e) => Ok(e),
            None => match self.cfg.get::<String>("engine")? {
                None => Ok(EngineChoice::Auto),
                Some(s) => EngineChoice::from_str(&s, true)
                    .map_err(|_| Error::Parse(format!("config key 'engine': unknown engine '{s}'"))),
            },
        }
    }

    fn write_output(&mut self, text: &str) -> Result<Option<PathBuf>> {
        match &self.out_path {
            Some(p) => {
                std::fs::write(p, text)?;
                Ok(Some(p.clone()))
            }
            None => {
                self.stdout.write_all(text.as_bytes())?;
                Ok(None)
            }
        }
    }

    fn write_manifest(&self, outputs: &[PathBuf]) -> Result<()> {
        let Some(path) = &self.manifest else {
            return Ok(());
        };
        let mut config = self.cfg.entries().clone();
        if let Some(w) = self.workers {
            config.insert("workers".into(), w.to_string());
        }
        let m = RunManifest {
            command_line: self.argv.clone(),
            config,
            seed: self.seed,
            versions: versions(),
            outputs: outputs.iter().map(|p| digest_file(p)).collect::<Result<_>>()?,
            wall_time_s: self.start.elapsed().as_secs_f64(),
        };
        m.write(path)
    }

    fn in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(f()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| Error::Parse(format!("worker pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// The analytic engine covers the XX chain (`jx = jy`, `jz = 0`) with an even number of sites.
fn analytic_supported(spec: &ChainSpec) -> Result<()> {
    spec.validate_analytic()?;
    if spec.jx != spec.jy {
        return Err(Error::InvalidChain(
            "the analytic engine covers the XX chain only (jx = jy)".into(),
        ));
    }
    Ok(())
}

fn resolve_engine(choice: EngineChoice, spec: &ChainSpec) -> Result<Engine> {
    match choice {
        EngineChoice::Dense => Ok(Engine::Dense),
        EngineChoice::Analytic => analytic_supported(spec).map(|_| Engine::Analytic),
        EngineChoice::Auto => Ok(if analytic_supported(spec).is_ok() {
            Engine::Analytic
        } else {
            Engine::Dense
        }),
    }
}

fn ground_record(spec: &ChainSpec, engine: Engine) -> Result<SweepRecord> {
    match engine {
        Engine::Dense => experiments::dense_ground_point(spec),
        Engine::Analytic => experiments::analytic_ground_point(spec.n, spec.j(), spec.h, spec.boundary),
    }
}

fn thermal_record(spec: &ChainSpec, t: f64, engine: Engine) -> Result<SweepRecord> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Parse(format!("temperature must be positive, got {t}")));
    }
    match engine {
        Engine::Dense => experiments::dense_thermal_point(spec, t),
        Engine::Analytic => experiments::analytic_thermal_point(spec.n, spec.j(), spec.h, t, spec.boundary),
    }
}

fn point_record(spec: &ChainSpec, t: f64, engine: Engine) -> Result<SweepRecord> {
    if t == 0.0 {
        ground_record(spec, engine)
    } else {
        thermal_record(spec, t, engine)
    }
}

fn record_fields(r: &SweepRecord) -> Vec<(&'static str, Value)> {
    vec![
        ("n", json!(r.n)),
        ("boundary", json!(r.boundary.to_string())),
        ("engine", json!(r.engine.to_string())),
        ("h", json!(r.h)),
        ("energy0", json!(r.energy0)),
        ("degenerate", json!(r.degenerate)),
        ("concurrence", json!(r.concurrence)),
    ]
}

fn cmd_ground(ctx: &mut Ctx, a: &ChainArgs) -> Result<i32> {
    let spec = ctx.chain(a, None)?;
    let engine = resolve_engine(ctx.engine_choice(a)?, &spec)?;
    let rec = ground_record(&spec, engine)?;
    let sz = match engine {
        Engine::Dense => {
            let g = spin::ground(&spec)?;
            json!(expectation(&g.state, &collective_sz(spec.n)))
        }
        Engine::Analytic => {
            let levels = xx_lowest_levels(spec.n, spec.j(), spec.h, spec.boundary)?;
            json!(levels.ground().and_then(|l| l.sz))
        }
    };
    let mut fields = record_fields(&rec);
    fields.push(("s_z", sz));
    ctx.emit(fields)?;
    Ok(EXIT_OK)
}

fn cmd_thermal(ctx: &mut Ctx, a: &ChainArgs, t: Option<f64>) -> Result<i32> {
    let spec = ctx.chain(a, None)?;
    let engine = resolve_engine(ctx.engine_choice(a)?, &spec)?;
    let t = ctx
        .cfg
        .pick(t, "t")?
        .ok_or_else(|| Error::Parse("--t is required".into()))?;
    let rec = thermal_record(&spec, t, engine)?;
    let mut fields = record_fields(&rec);
    fields.insert(4, ("t", json!(rec.t)));
    fields.push(("log_z", json!(rec.log_z)));
    ctx.emit(fields)?;
    Ok(EXIT_OK)
}

fn cmd_critical(ctx: &mut Ctx, a: &ChainArgs) -> Result<i32> {
    let spec = ctx.chain(a, None)?;
    let engine = resolve_engine(ctx.engine_choice(a)?, &spec)?;
    if engine == Engine::Dense && spec.jx != spec.jy {
        return Err(Error::InvalidChain("the critical field is defined for the XX chain".into()));
    }
    let h = match engine {
        Engine::Analytic => hcrit(spec.n, spec.j(), spec.boundary),
        Engine::Dense => experiments::dense_critical_field(spec.n, spec.j(), spec.boundary, 1e-7)?,
    };
    ctx.emit(vec![
        ("n", json!(spec.n)),
        ("boundary", json!(spec.boundary.to_string())),
        ("engine", json!(engine.to_string())),
        ("h_crit", json!(h)),
    ])?;
    Ok(EXIT_OK)
}

fn cmd_threshold(ctx: &mut Ctx, a: &ChainArgs) -> Result<i32> {
    let spec = ctx.chain(a, None)?;
    analytic_supported(&spec)?;
    let row = sweeps::threshold_row(spec.n, spec.j(), spec.boundary)?;
    ctx.emit(vec![
        ("n", json!(row.n)),
        ("boundary", json!(row.boundary.to_string())),
        ("t_exact", json!(row.exact)),
        ("t_asymptotic", json!(row.asymptotic)),
        ("ratio", json!(row.ratio)),
    ])?;
    Ok(EXIT_OK)
}

fn custom_points(base: &ChainSpec, t0: f64, g: &CustomGrid) -> Vec<(ChainSpec, f64)> {
    let ns = g.n.clone().unwrap_or_else(|| vec![base.n]);
    let ts = g.t.clone().unwrap_or_else(|| vec![t0]);
    let hs = g.h.clone().unwrap_or_else(|| vec![base.h]);
    let j = base.j();
    let mut pts = Vec::new();
    for &n in &ns {
        let couplings: Vec<(f64, f64)> = match &g.gamma {
            Some(gs) => gs.iter().map(|&gm| (j * (1.0 + gm), j * (1.0 - gm))).collect(),
            None => vec![(base.jx, base.jy)],
        };
        for &(jx, jy) in &couplings {
            for &t in &ts {
                for &h in &hs {
                    pts.push((ChainSpec::xyz(n, jx, jy, base.jz, h, base.boundary), t));
                }
            }
        }
    }
    pts
}

fn cmd_sweep(ctx: &mut Ctx, a: &ChainArgs, t: Option<f64>, grid: Option<String>, plot: Option<PathBuf>) -> Result<i32> {
    let grid: GridSpec = ctx
        .cfg
        .pick(grid, "grid")?
        .ok_or_else(|| Error::Parse("--grid is required".into()))?
        .parse()?;
    let plot = ctx.cfg.pick(plot, "plot")?;
    if plot.is_some() && ctx.out_path.is_none() {
        return Err(Error::Parse("--plot needs --out".into()));
    }
    let n_flag = ctx.cfg.pick(a.n, "n")?;
    let figure = match &grid {
        GridSpec::Figure(f) => Some(*f),
        GridSpec::Custom(_) => None,
    };
    let csv = match grid {
        GridSpec::Figure(Figure::Fig1) => {
            let spec = ctx.chain(a, Some(4))?;
            let recs = ctx.in_pool(|| {
                experiments::fig1_surface(spec.n, spec.j(), &sweeps::default_fig1_gammas(), &sweeps::default_fig1_fields())
            })??;
            io::records_csv(&recs)
        }
        GridSpec::Figure(Figure::Fig2) => {
            let spec = ctx.chain(a, Some(100))?;
            analytic_supported(&spec)?;
            let recs = ctx.in_pool(|| {
                experiments::fig2_curves(spec.n, spec.j(), &sweeps::default_fig2_temperatures(), &sweeps::default_fig2_fields())
            })??;
            io::records_csv(&recs)
        }
        GridSpec::Figure(Figure::Fig3) => {
            let spec = ctx.chain(a, Some(4))?;
            let sizes = n_flag.map_or_else(sweeps::default_fig3_sizes, |n| vec![n]);
            for &n in &sizes {
                analytic_supported(&ChainSpec::xx(n, spec.j(), 0.0, Boundary::Periodic))?;
            }
            let recs = ctx.in_pool(|| {
                experiments::fig3_curves(&sizes, spec.j(), &sweeps::default_fig3_log_temperatures())
            })??;
            io::records_csv(&recs)
        }
        GridSpec::Figure(Figure::Table1) => {
            let spec = ctx.chain(a, Some(10))?;
            let sizes = n_flag.map_or_else(sweeps::default_table1_sizes, |n| vec![n]);
            for &n in &sizes {
                analytic_supported(&ChainSpec::xx(n, spec.j(), 0.0, Boundary::Periodic))?;
            }
            let rows = ctx.in_pool(|| experiments::table1_ratios(&sizes, spec.j()))??;
            io::thresholds_csv(&rows)
        }
        GridSpec::Custom(g) => {
            let default_n = g.n.as_ref().map(|ns| ns[0]);
            let base = ctx.chain(a, default_n)?;
            let t0 = ctx.cfg.pick(t, "t")?.unwrap_or(0.0);
            let choice = ctx.engine_choice(a)?;
            let pts = custom_points(&base, t0, &g);
            let recs: Vec<SweepRecord> = ctx.in_pool(|| {
                pts.par_iter()
                    .map(|(spec, t)| point_record(spec, *t, resolve_engine(choice, spec)?))
                    .collect::<Result<Vec<_>>>()
            })??;
            io::records_csv(&recs)
        }
    };
    let mut outputs: Vec<PathBuf> = ctx.write_output(&csv)?.into_iter().collect();
    if let (Some(p), Some(csv_path)) = (plot, outputs.first().cloned()) {
        std::fs::write(&p, io::gnuplot_script(&csv_path.display().to_string(), figure))?;
        outputs.push(p);
    }
    ctx.write_manifest(&outputs)?;
    Ok(EXIT_OK)
}

fn parse_sites(s: &str, n: usize) -> Result<Vec<usize>> {
    let sites: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad site '{t}'"))))
        .collect::<Result<_>>()?;
    if let Some(&bad) = sites.iter().find(|&&k| k >= n) {
        return Err(Error::Parse(format!("site {bad} out of range for {n} qubits")));
    }
    Ok(sites)
}

fn cmd_ensemble(
    ctx: &mut Ctx,
    input: Option<PathBuf>,
    random_dim: Option<usize>,
    rank: Option<usize>,
    sites: Option<String>,
) -> Result<i32> {
    let input: Option<PathBuf> = ctx.cfg.pick(input, "input")?;
    let random_dim: Option<usize> = ctx.cfg.pick(random_dim, "random-dim")?;
    let rho = match (input, random_dim) {
        (Some(p), None) => io::read_density_matrix(&std::fs::read_to_string(&p)?)?,
        (None, Some(dim)) => {
            if dim < 2 || !dim.is_power_of_two() {
                return Err(Error::Parse(format!("--random-dim must be a power of two >= 2, got {dim}")));
            }
            let rank = ctx.cfg.pick(rank, "rank")?.unwrap_or(dim);
            if rank == 0 || rank > dim {
                return Err(Error::Parse(format!("--rank must be in 1..={dim}")));
            }
            let mut rng = seeded(ctx.seed.unwrap_or(0));
            DensityMatrix::new(random_density_matrix(&mut rng, dim, rank))?
        }
        _ => return Err(Error::Parse("give exactly one of --input and --random-dim".into())),
    };
    let n = rho.n().ok_or_else(|| Error::Parse("dimension is not a power of two".into()))?;
    let theta = match ctx.cfg.pick(sites, "sites")? {
        Some(s) => TimeReversalOp::spin_flip_on(n, &parse_sites(&s, n)?),
        None => TimeReversalOp::spin_flip(n),
    };
    let mc = mixed_concurrence(&rho, &theta)?;
    let ens = minimizing_ensemble(&rho, &theta)?;
    let achieved = ensemble_concurrence(&ens, &theta)?;
    let recon = ens.reconstruction_error(&rho);
    let outputs: Vec<PathBuf> = match &ctx.out_path {
        Some(p) => {
            std::fs::write(p, io::write_ensemble(&ens))?;
            vec![p.clone()]
        }
        None => vec![],
    };
    ctx.emit(vec![
        ("dim", json!(rho.dim())),
        ("len", json!(ens.len())),
        ("closed_form", json!(mc.value)),
        ("ensemble_concurrence", json!(achieved)),
        ("reconstruction_error", json!(recon)),
        ("tau_spectrum", json!(mc.tau_spectrum)),
    ])?;
    ctx.write_manifest(&outputs)?;
    Ok(EXIT_OK)
}

fn cmd_validate(ctx: &mut Ctx, sizes: Option<String>, j: Option<f64>) -> Result<i32> {
    let sizes = parse_sizes(&ctx.cfg.pick(sizes, "sizes")?.unwrap_or_else(|| "4..8".into()))?;
    let j = ctx.cfg.pick(j, "j")?.unwrap_or(1.0);
    let report = ctx.in_pool(|| experiments::validate(&sizes, j))??;
    if ctx.json {
        let v = serde_json::to_value(&report).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(ctx.stdout, "{v}")?;
    } else {
        for c in &report.checks {
            writeln!(
                ctx.stdout,
                "{} {:<28} n={:<3} err={:.3e} tol={:.1e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.n,
                c.error,
                c.tolerance
            )?;
        }
        for s in &report.skipped {
            writeln!(ctx.stdout, "SKIP {s}")?;
        }
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        writeln!(ctx.stdout, "{} checks, {} failed", report.checks.len(), failed)?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_NUMERICAL })
}

fn cmd_replay(ctx: &mut Ctx) -> Result<i32> {
    let path = ctx
        .manifest
        .clone()
        .ok_or_else(|| Error::Parse("replay needs --manifest".into()))?;
    let m = RunManifest::load(&path)?;
    let mut args = vec!["nconc".to_string()];
    args.extend(m.replay_args());
    let mut sink = Vec::new();
    let mut err = Vec::new();
    let code = run(args, &mut sink, &mut err);
    if code != EXIT_OK {
        return Err(Error::Parse(format!(
            "replayed command failed with exit code {code}: {}",
            String::from_utf8_lossy(&err).trim()
        )));
    }
    let mut all_match = true;
    for o in &m.outputs {
        let now = digest_file(Path::new(&o.path))?;
        let ok = now.sha256 == o.sha256;
        all_match &= ok;
        writeln!(ctx.stdout, "{} {}", if ok { "MATCH" } else { "MISMATCH" }, o.path)?;
    }
    Ok(if all_match { EXIT_OK } else { EXIT_NUMERICAL })
}
