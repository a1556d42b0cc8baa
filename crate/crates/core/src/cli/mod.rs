//! The `kuramoto` command-line driver.
//!
//! [`run_from_args`] parses, validates and dispatches; it never exits the
//! process, so every command is testable in-process. Exit codes:
//! `0` success, `1` invalid input, `2` certificate failure,
//! `3` numerical failure or regime violation.
//!
//! JSON artifacts carry `schema_version`, the command name, the fully
//! resolved configuration and a `result` object. Without `--output` the
//! artifact goes to `$KURAMOTO_OUTPUT_DIR/<command>.<ext>` when that variable
//! is set, and to stdout otherwise.

mod json;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use json::to_json_string;

use crate::certificate::{
    evaluate_certificate, optimize_parameters, sweep_certificate, verify_hardened, CertificateError,
    CertificateParams, HardenedConfig, OptimizeOptions, SweepConfig,
};
use crate::dynamics::{
    classify, integrate, multistart_search, refine_equilibrium, ClassifyOptions, CensusOptions, DynamicsError,
    IntegrateOptions, RefineOptions,
};
use crate::graph::{read_edge_list, write_edge_list, GeneratorSpec, Graph, GraphError};
use crate::landscape::{LandscapeError, PhaseState};

pub const SCHEMA_VERSION: u32 = 1;
pub const OUTPUT_DIR_ENV: &str = "KURAMOTO_OUTPUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CERTIFICATE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Json,
    Csv,
    /// Plain edge list (`gen-graph` only).
    Edges,
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "kuramoto", version, about = "Kuramoto landscape analysis and synchronization certificate")]
pub struct RunConfig {
    /// Artifact path; overrides the output directory variable.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Worker threads for sweeps and censuses.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    #[serde(flatten)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// `complete:n`, `circulant:n,k` or `random:n,mu,seed`.
    #[arg(long)]
    pub graph: Option<GeneratorSpec>,
    /// Edge-list file.
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
}

/// Initial or probed phase state.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(into = "String")]
pub enum InitSpec {
    Random,
    Constant,
    Twisted(i64),
    File(PathBuf),
}

impl fmt::Display for InitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitSpec::Random => f.write_str("random"),
            InitSpec::Constant => f.write_str("constant"),
            InitSpec::Twisted(q) => write!(f, "twisted:{q}"),
            InitSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl From<InitSpec> for String {
    fn from(s: InitSpec) -> Self {
        s.to_string()
    }
}

impl FromStr for InitSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            None if s == "random" => Ok(InitSpec::Random),
            None if s == "constant" => Ok(InitSpec::Constant),
            Some(("twisted", q)) => q
                .trim()
                .parse()
                .map(InitSpec::Twisted)
                .map_err(|e| format!("bad winding number {q:?}: {e}")),
            Some(("file", p)) if !p.is_empty() => Ok(InitSpec::File(PathBuf::from(p))),
            _ => Err(format!("expected random, constant, twisted:q or file:PATH, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DynamicsArgs {
    #[arg(long, default_value_t = 0.05)]
    pub dt: f64,
    #[arg(long, default_value_t = 200.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub residual_tol: f64,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", content = "config", rename_all = "kebab-case")]
pub enum Command {
    /// Build a graph and write it as an edge list (or JSON summary).
    GenGraph {
        #[command(flatten)]
        graph: GraphSource,
    },
    /// Integrate the gradient flow from an initial state.
    Simulate {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value = "random")]
        init: InitSpec,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        dynamics: DynamicsArgs,
        /// Record a sample every this many steps (0: none).
        #[arg(long, default_value_t = 0)]
        sample_every: usize,
        /// Write the sampled trajectory as CSV here.
        #[arg(long)]
        trajectory: Option<PathBuf>,
    },
    /// Classify an equilibrium by its Hessian spectrum.
    Classify {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        init: InitSpec,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Newton-refine the state before classifying.
        #[arg(long)]
        refine: bool,
        #[arg(long, default_value_t = 1e-8)]
        equilibrium_tol: f64,
        /// Cone half-width for the decomposition; 0 disables it.
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_6)]
        cone_phi: f64,
    },
    /// Multistart census of the equilibria reached by the flow.
    Census {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.05)]
        dt: f64,
        #[arg(long, default_value_t = 500.0)]
        t_max: f64,
        /// Residual at which integration hands over to Newton.
        #[arg(long, default_value_t = 1e-3)]
        residual_tol: f64,
    },
    /// Evaluate the three conditions at one parameter point.
    VerifyCertificate {
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        #[arg(long, default_value_t = 0.88)]
        delta: f64,
    },
    /// Check the conditions over an (α, μ) grid.
    Sweep {
        #[arg(long, default_value_t = 0.0)]
        alpha_min: f64,
        #[arg(long, default_value_t = 0.0537)]
        alpha_max: f64,
        #[arg(long, default_value_t = 0.788897)]
        mu_min: f64,
        #[arg(long, default_value_t = 0.794)]
        mu_max: f64,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        #[arg(long, default_value_t = 0.88)]
        delta: f64,
        /// Points per axis; sets both --alpha-steps and --mu-steps.
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, default_value_t = 500)]
        alpha_steps: usize,
        #[arg(long, default_value_t = 500)]
        mu_steps: usize,
        /// Also prove the conditions on boxes with interval arithmetic.
        #[arg(long)]
        hardened: bool,
        /// Cells per axis in hardened mode.
        #[arg(long, default_value_t = 50)]
        cells: usize,
        #[arg(long, default_value_t = 16)]
        max_depth: usize,
    },
    /// Optimize (ε, δ) and locate the smallest certifiable μ.
    Optimize {
        #[arg(long, default_value_t = 0.7889)]
        mu: f64,
        #[arg(long, default_value_t = 0.0537)]
        alpha_max: f64,
        #[arg(long, default_value_t = 40)]
        eps_steps: usize,
        #[arg(long, default_value_t = 40)]
        delta_steps: usize,
        #[arg(long, default_value_t = 33)]
        alpha_samples: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::GenGraph { .. } => "gen-graph",
            Command::Simulate { .. } => "simulate",
            Command::Classify { .. } => "classify",
            Command::Census { .. } => "census",
            Command::VerifyCertificate { .. } => "verify-certificate",
            Command::Sweep { .. } => "sweep",
            Command::Optimize { .. } => "optimize",
        }
    }

    fn default_format(&self) -> OutputFormat {
        match self {
            Command::GenGraph { .. } => OutputFormat::Edges,
            _ => OutputFormat::Json,
        }
    }

    fn supports(&self, f: OutputFormat) -> bool {
        match f {
            OutputFormat::Json => true,
            OutputFormat::Edges => matches!(self, Command::GenGraph { .. }),
            OutputFormat::Csv => matches!(self, Command::Simulate { .. } | Command::Census { .. } | Command::Sweep { .. }),
        }
    }
}

/// What a run produced. `artifact` is the text written to `destination`
/// (or stdout when `destination` is `None`).
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub artifact: Option<String>,
    pub destination: Option<PathBuf>,
    pub diagnostic: Option<String>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }

    fn numerical(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_NUMERICAL,
            message: message.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::invalid(format!("graph: {e}"))
    }
}

impl From<LandscapeError> for Failure {
    fn from(e: LandscapeError) -> Self {
        match e {
            LandscapeError::UndefinedOrientation => Failure::numerical(e.to_string()),
            _ => Failure::invalid(format!("state: {e}")),
        }
    }
}

impl From<DynamicsError> for Failure {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::Landscape(l) => l.into(),
            DynamicsError::InvalidParameter { .. } => Failure::invalid(e.to_string()),
            _ => Failure::numerical(e.to_string()),
        }
    }
}

impl From<CertificateError> for Failure {
    fn from(e: CertificateError) -> Self {
        match e {
            CertificateError::InvalidParameter { .. } => Failure::invalid(e.to_string()),
            CertificateError::RegimeViolation(_) => Failure::numerical(e.to_string()),
            CertificateError::Infeasible(_) => Failure {
                code: EXIT_CERTIFICATE,
                message: e.to_string(),
            },
        }
    }
}

struct Produced {
    code: i32,
    body: String,
    diagnostic: Option<String>,
}

#[derive(Serialize)]
struct Envelope<'a, R: Serialize> {
    schema_version: u32,
    #[serde(flatten)]
    config: &'a RunConfig,
    result: R,
}

fn envelope<R: Serialize>(cfg: &RunConfig, result: R) -> String {
    to_json_string(&Envelope {
        schema_version: SCHEMA_VERSION,
        config: cfg,
        result,
    })
}

fn load_graph(src: &GraphSource) -> Result<Graph, Failure> {
    match (&src.graph, &src.graph_file) {
        (Some(spec), None) => Ok(spec.build()?),
        (None, Some(path)) => {
            let text = read_file(path, "graph-file")?;
            read_edge_list(&text).map_err(|e| Failure::invalid(format!("graph-file {}: {e}", path.display())))
        }
        _ => Err(Failure::invalid("graph: give exactly one of --graph or --graph-file")),
    }
}

fn read_file(path: &Path, field: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{field}: cannot read {}: {e}", path.display())))
}

fn initial_state(init: &InitSpec, n: usize, seed: u64) -> Result<PhaseState, Failure> {
    match init {
        InitSpec::Random => Ok(PhaseState::random(n, &mut ChaCha8Rng::seed_from_u64(seed))),
        InitSpec::Constant => Ok(PhaseState::constant(n, 0.0)),
        InitSpec::Twisted(q) => Ok(PhaseState::twisted(n, *q)),
        InitSpec::File(path) => {
            let s = PhaseState::from_json(&read_file(path, "init")?)?;
            if s.len() != n {
                return Err(Failure::invalid(format!(
                    "init: state has {} angles but the graph has {n} vertices",
                    s.len()
                )));
            }
            Ok(s)
        }
    }
}

fn check_positive(name: &str, v: f64) -> Result<(), Failure> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Failure::invalid(format!("{name}: must be positive and finite, got {v}")))
    }
}

#[derive(Serialize)]
struct GraphSummary {
    n: usize,
    edges: usize,
    min_degree: usize,
    max_degree: usize,
    min_degree_fraction: f64,
    connected: bool,
    algorithm: Option<&'static str>,
    edge_list: Vec<(usize, usize)>,
}

fn dispatch(cfg: &RunConfig, format: OutputFormat) -> Result<Produced, Failure> {
    let ok = |body| Produced {
        code: EXIT_OK,
        body,
        diagnostic: None,
    };
    match &cfg.command {
        Command::GenGraph { graph } => {
            let g = load_graph(graph)?;
            if format == OutputFormat::Edges {
                return Ok(ok(write_edge_list(&g)));
            }
            let summary = GraphSummary {
                n: g.n(),
                edges: g.edge_count(),
                min_degree: g.min_degree(),
                max_degree: g.max_degree(),
                min_degree_fraction: g.min_degree_fraction(),
                connected: g.is_connected(),
                algorithm: graph.graph.as_ref().and_then(|s| s.algorithm()),
                edge_list: g.edges().collect(),
            };
            Ok(ok(envelope(cfg, summary)))
        }
        Command::Simulate {
            graph,
            init,
            seed,
            dynamics,
            sample_every,
            trajectory,
        } => {
            check_positive("dt", dynamics.dt)?;
            check_positive("t-max", dynamics.t_max)?;
            check_positive("residual-tol", dynamics.residual_tol)?;
            let g = load_graph(graph)?;
            let s0 = initial_state(init, g.n(), *seed)?;
            let opts = IntegrateOptions {
                dt: dynamics.dt,
                t_max: dynamics.t_max,
                residual_tol: dynamics.residual_tol,
                sample_every: *sample_every,
            };
            let traj = integrate(&g, &s0, &opts)?;
            if let Some(path) = trajectory {
                write_artifact(path, &traj.samples_csv()).map_err(Failure::invalid)?;
            }
            match format {
                OutputFormat::Csv => Ok(ok(traj.samples_csv())),
                _ => Ok(ok(envelope(cfg, &traj))),
            }
        }
        Command::Classify {
            graph,
            init,
            seed,
            refine,
            equilibrium_tol,
            cone_phi,
        } => {
            check_positive("equilibrium-tol", *equilibrium_tol)?;
            if !(cone_phi.is_finite() && *cone_phi >= 0.0 && *cone_phi < std::f64::consts::FRAC_PI_4) {
                return Err(Failure::invalid(format!("cone-phi: must lie in [0, π/4), got {cone_phi}")));
            }
            let g = load_graph(graph)?;
            let mut s = initial_state(init, g.n(), *seed)?;
            if *refine {
                s = refine_equilibrium(&g, &s, &RefineOptions::default())?.state;
            }
            let opts = ClassifyOptions {
                equilibrium_tol: *equilibrium_tol,
                cone_phi: (*cone_phi > 0.0).then_some(*cone_phi),
                ..ClassifyOptions::default()
            };
            let report = classify(&g, &s, &opts)?;
            Ok(ok(envelope(cfg, report)))
        }
        Command::Census {
            graph,
            trials,
            seed,
            dt,
            t_max,
            residual_tol,
        } => {
            check_positive("dt", *dt)?;
            check_positive("t-max", *t_max)?;
            check_positive("residual-tol", *residual_tol)?;
            let g = load_graph(graph)?;
            let defaults = CensusOptions::default();
            let opts = CensusOptions {
                trials: *trials,
                seed: *seed,
                integrate: IntegrateOptions {
                    dt: *dt,
                    t_max: *t_max,
                    residual_tol: *residual_tol,
                    sample_every: 0,
                },
                ..defaults
            };
            let census = multistart_search(&g, &opts)?;
            match format {
                OutputFormat::Csv => {
                    let mut out = String::from("class,classification,hits,energy,order_magnitude,near_zero_eigenvalues,top_nonzero_eigenvalue\n");
                    for (k, e) in census.classes.iter().enumerate() {
                        let r = &e.report;
                        out.push_str(&format!(
                            "{k},{},{},{:.16e},{:.16e},{},{}\n",
                            r.classification,
                            e.hits,
                            r.energy,
                            r.order_magnitude,
                            r.near_zero_eigenvalues,
                            r.top_nonzero_eigenvalue().map(|v| format!("{v:.16e}")).unwrap_or_default()
                        ));
                    }
                    Ok(ok(out))
                }
                _ => Ok(ok(envelope(cfg, &census))),
            }
        }
        Command::VerifyCertificate { mu, alpha, eps, delta } => {
            let p = CertificateParams::new(*mu, *alpha, *eps, *delta)?;
            let e = evaluate_certificate(&p)?;
            let code = if e.verdict.pass { EXIT_OK } else { EXIT_CERTIFICATE };
            let diagnostic = (!e.verdict.pass).then(|| {
                format!(
                    "certificate fails at μ = {mu}, α = {alpha}: cond1 {}, cond2 {}, cond3 {}",
                    e.verdict.cond1, e.verdict.cond2, e.verdict.cond3
                )
            });
            Ok(Produced {
                code,
                body: envelope(cfg, e),
                diagnostic,
            })
        }
        Command::Sweep {
            alpha_min,
            alpha_max,
            mu_min,
            mu_max,
            eps,
            delta,
            grid: _,
            alpha_steps,
            mu_steps,
            hardened,
            cells,
            max_depth,
        } => {
            let sweep_cfg = SweepConfig {
                alpha_min: *alpha_min,
                alpha_max: *alpha_max,
                mu_min: *mu_min,
                mu_max: *mu_max,
                epsilon: *eps,
                delta: *delta,
                alpha_steps: *alpha_steps,
                mu_steps: *mu_steps,
                ..SweepConfig::default()
            };
            let report = sweep_certificate(&sweep_cfg)?;
            let hard = if *hardened {
                let mut h = HardenedConfig::from_sweep(&sweep_cfg, *cells, *cells);
                h.max_depth = *max_depth;
                Some(verify_hardened(&h)?)
            } else {
                None
            };
            let pass = report.pass && hard.as_ref().is_none_or(|h| h.pass);
            let diagnostic = (!pass).then(|| {
                let mut msg = format!("sweep fails at {} of {} grid points", report.failed, report.points);
                if let Some(h) = &hard {
                    msg.push_str(&format!(
                        "; hardened: {} failed, {} inconclusive of {} cells",
                        h.failed, h.inconclusive, h.cells
                    ));
                }
                msg
            });
            let body = match format {
                OutputFormat::Csv => report.grid_csv(),
                _ => {
                    #[derive(Serialize)]
                    struct SweepResult<'a> {
                        pass: bool,
                        sweep: &'a crate::certificate::SweepReport,
                        hardened: Option<&'a crate::certificate::HardenedReport>,
                    }
                    envelope(
                        cfg,
                        SweepResult {
                            pass,
                            sweep: &report,
                            hardened: hard.as_ref(),
                        },
                    )
                }
            };
            Ok(Produced {
                code: if pass { EXIT_OK } else { EXIT_CERTIFICATE },
                body,
                diagnostic,
            })
        }
        Command::Optimize {
            mu,
            alpha_max,
            eps_steps,
            delta_steps,
            alpha_samples,
        } => {
            let opts = OptimizeOptions {
                epsilon_steps: *eps_steps,
                delta_steps: *delta_steps,
                alpha_samples: *alpha_samples,
                ..OptimizeOptions::default()
            };
            let report = optimize_parameters(*mu, *alpha_max, &opts)?;
            Ok(ok(envelope(cfg, report)))
        }
    }
}

fn write_artifact(path: &Path, text: &str) -> Result<(), String> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| format!("output: cannot create {}: {e}", dir.display()))?;
    }
    std::fs::write(path, text).map_err(|e| format!("output: cannot write {}: {e}", path.display()))
}

/// Fills defaults that depend on the command and the environment.
pub fn resolve(mut cfg: RunConfig) -> Result<RunConfig, String> {
    let format = cfg.format.unwrap_or_else(|| cfg.command.default_format());
    if !cfg.command.supports(format) {
        return Err(format!("format: {format:?} output is not available for {}", cfg.command.name()).to_lowercase());
    }
    cfg.format = Some(format);
    if cfg.output.is_none() {
        if let Some(dir) = std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty()) {
            let ext = match format {
                OutputFormat::Json => "json",
                OutputFormat::Csv => "csv",
                OutputFormat::Edges => "edges",
            };
            cfg.output = Some(PathBuf::from(dir).join(format!("{}.{ext}", cfg.command.name())));
        }
    }
    if let Command::Sweep {
        grid: Some(k),
        alpha_steps,
        mu_steps,
        ..
    } = &mut cfg.command
    {
        *alpha_steps = *k;
        *mu_steps = *k;
    }
    if cfg.threads == Some(0) {
        return Err("threads: must be at least 1".into());
    }
    Ok(cfg)
}

/// Runs a resolved configuration and writes its artifact.
pub fn run(cfg: &RunConfig) -> RunOutcome {
    let format = cfg.format.unwrap_or_else(|| cfg.command.default_format());
    let produced = match cfg.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cfg, format)),
            Err(e) => Err(Failure::invalid(format!("threads: {e}"))),
        },
        None => dispatch(cfg, format),
    };
    match produced {
        Err(f) => RunOutcome {
            exit_code: f.code,
            artifact: None,
            destination: None,
            diagnostic: Some(f.message),
        },
        Ok(p) => {
            let mut outcome = RunOutcome {
                exit_code: p.code,
                artifact: Some(p.body),
                destination: cfg.output.clone(),
                diagnostic: p.diagnostic,
            };
            if let (Some(path), Some(text)) = (&outcome.destination, &outcome.artifact) {
                if let Err(e) = write_artifact(path, text) {
                    outcome.exit_code = EXIT_INVALID;
                    outcome.diagnostic = Some(e);
                }
            }
            outcome
        }
    }
}

/// Parses `args` (including the program name), resolves and runs.
/// Help and version requests succeed with their text as the artifact.
pub fn run_from_args<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let failed = |code, msg: String| RunOutcome {
        exit_code: code,
        artifact: None,
        destination: None,
        diagnostic: Some(msg),
    };
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunOutcome {
                    exit_code: EXIT_OK,
                    artifact: Some(e.to_string()),
                    destination: None,
                    diagnostic: None,
                },
                _ => failed(EXIT_INVALID, e.to_string().trim_end().to_string()),
            };
        }
    };
    match resolve(cfg) {
        Ok(cfg) => run(&cfg),
        Err(msg) => failed(EXIT_INVALID, msg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> RunOutcome {
        run_from_args(std::iter::once("kuramoto").chain(args.iter().copied()))
    }

    #[test]
    fn init_spec_parses() {
        assert_eq!("twisted:3".parse::<InitSpec>().unwrap(), InitSpec::Twisted(3));
        assert_eq!("random".parse::<InitSpec>().unwrap(), InitSpec::Random);
        assert!("twisted:x".parse::<InitSpec>().is_err());
        assert!("spiral".parse::<InitSpec>().is_err());
        assert_eq!(InitSpec::Twisted(-2).to_string(), "twisted:-2");
    }

    #[test]
    fn gen_graph_defaults_to_edge_list() {
        let out = go(&["gen-graph", "--graph", "complete:3"]);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.artifact.unwrap(), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn point_certificate_exit_codes() {
        let out = go(&["verify-certificate", "--mu", "0.7889", "--alpha", "0.0537"]);
        assert_eq!(out.exit_code, EXIT_OK);
        let art = out.artifact.unwrap();
        assert!(art.contains("\"schema_version\": 1"));
        assert!(art.contains("\"command\": \"verify-certificate\""));

        let out = go(&["verify-certificate", "--mu", "0.75", "--alpha", "0"]);
        assert_eq!(out.exit_code, EXIT_NUMERICAL);
        assert!(out.diagnostic.unwrap().contains("regime violation"));

        let out = go(&["verify-certificate", "--mu", "0.78", "--alpha", "0.0537"]);
        assert_eq!(out.exit_code, EXIT_CERTIFICATE);
    }

    #[test]
    fn validation_errors_exit_one() {
        assert_eq!(go(&["census"]).exit_code, EXIT_INVALID);
        assert_eq!(go(&["census", "--graph", "cube:3"]).exit_code, EXIT_INVALID);
        assert_eq!(go(&["verify-certificate", "--mu", "0.8", "--alpha", "0.7"]).exit_code, EXIT_INVALID);
        let out = go(&["classify", "--graph", "complete:4", "--init", "constant", "--format", "csv"]);
        assert_eq!(out.exit_code, EXIT_INVALID);
        assert!(out.diagnostic.unwrap().starts_with("format"));
        let out = go(&["simulate", "--graph", "complete:4", "--dt=-1"]);
        assert!(out.diagnostic.unwrap().starts_with("dt"));
    }

    #[test]
    fn help_is_not_an_error() {
        let out = go(&["--help"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.artifact.unwrap().contains("verify-certificate"));
    }

    #[test]
    fn classify_refines_twisted_state() {
        let out = go(&["classify", "--graph", "circulant:40,10", "--init", "twisted:1", "--refine"]);
        assert_eq!(out.exit_code, 0, "{:?}", out.diagnostic);
        assert!(out.artifact.unwrap().contains("spurious-local-max"));
    }

    #[test]
    fn non_equilibrium_is_numerical_failure() {
        let out = go(&["classify", "--graph", "complete:6", "--init", "random", "--seed", "3"]);
        assert_eq!(out.exit_code, EXIT_NUMERICAL);
    }
}
