//! Command-line front end. Every command writes its tables plus a
//! `manifest.json` into the output directory; `replay` re-runs a manifest.
//!
//! Exit status: 0 on success, 1 when the input or parameters are rejected,
//! 2 on a usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::generator::{generate, GenParams, Template};
use crate::geometry::{ConvexRegion, Point};
use crate::montecarlo::{
    estimate_events, estimate_sine_events, validity_study, Estimate, EventSpec, SimConfig,
};
use crate::network::{parse_network, ConfigKind, Network, PathConfiguration};
use crate::planner::{optimize_backup, rank_pairs, RingPlanModel};
use crate::survivability::{ClosedForm, DisasterParams};

pub const MANIFEST: &str = "manifest.json";

#[derive(Debug, Parser)]
#[command(
    name = "survnet",
    version,
    about = "Network survivability under random large-scale disasters"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form probability of every configuration and expected losses per source.
    Analyze(AnalyzeArgs),
    /// Pairwise probabilities between terminal nodes, best first.
    Rank(RankArgs),
    /// Monte Carlo estimates of connectivity events.
    Simulate(SimulateArgs),
    /// Error of the straight strip model against sine-edged disasters.
    ValidateStrip(ValidateArgs),
    /// Place a regional center and a backup on a ring of nodes.
    OptimizeBackup(OptimizeArgs),
    /// Write a synthetic network.
    Generate(GenerateArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Args)]
pub struct DisasterFlags {
    /// Strip breadth w. Probabilities for w > 0 are the w = 0 values scaled by
    /// L(A0) / (L(A0) + πw).
    #[arg(long, default_value_t = 0.0)]
    pub w: f64,
    /// Destroy only a strip of this breadth instead of a half-plane.
    #[arg(long, value_name = "W")]
    pub wide_strip: Option<f64>,
}

impl DisasterFlags {
    fn params(&self) -> DisasterParams {
        match self.wide_strip {
            Some(b) => DisasterParams::wide_strip(self.w, b),
            None => DisasterParams::half_plane(self.w),
        }
    }

    fn echo(&self) -> Value {
        json!({"w": self.w, "wide_strip": self.wide_strip})
    }
}

#[derive(Debug, Clone, Args)]
pub struct SimFlags {
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub parallelism: usize,
    #[arg(long, default_value_t = 0.95)]
    pub confidence: f64,
}

impl SimFlags {
    fn config(&self) -> SimConfig {
        SimConfig {
            confidence: self.confidence,
            parallelism: self.parallelism,
            ..SimConfig::new(self.trials, self.seed)
        }
    }

    /// Thread count is left out: it never changes results.
    fn echo(&self) -> Value {
        json!({"trials": self.trials, "seed": self.seed, "confidence": self.confidence})
    }
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub network: PathBuf,
    #[command(flatten)]
    pub disaster: DisasterFlags,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub network: PathBuf,
    #[command(flatten)]
    pub disaster: DisasterFlags,
    /// Simulate pairs that have no closed form instead of flagging them.
    #[arg(long)]
    pub simulate_unsupported: bool,
    #[command(flatten)]
    pub sim: SimFlags,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub network: PathBuf,
    /// pair:i,j | all:i-j;k-l | any:i:j1,j2 | through:i:j:k1,k2 | count:i:j1,j2
    #[arg(long = "event", required = true)]
    pub events: Vec<String>,
    #[command(flatten)]
    pub disaster: DisasterFlags,
    /// Use a sine-wave disaster edge with this wavelength.
    #[arg(long)]
    pub lambda: Option<f64>,
    #[command(flatten)]
    pub sim: SimFlags,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub network: PathBuf,
    /// Wavelengths, in units of the mean distance between terminals.
    #[arg(long, value_delimiter = ',', required = true)]
    pub lambda: Vec<f64>,
    /// Breadths, in the same unit.
    #[arg(long = "w-list", value_delimiter = ',', required = true)]
    pub w_list: Vec<f64>,
    #[command(flatten)]
    pub sim: SimFlags,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub ring_radius: Vec<f64>,
    /// Node spacing in degrees; defaults to spreading the nodes over the whole ring.
    #[arg(long)]
    pub gamma_deg: Option<f64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub nodes: Vec<usize>,
    /// Radius of the concentric disk A0; defaults to three ring radii.
    #[arg(long)]
    pub area_radius: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub grid_step_deg: f64,
    #[arg(long, default_value_t = 0.0)]
    pub w: f64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    /// tree | loop | ring-hub | random-subscriber
    pub template: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4)]
    pub cols: usize,
    #[arg(long, default_value_t = 4)]
    pub rows: usize,
    #[arg(long, default_value_t = 1.0)]
    pub spacing: f64,
    #[arg(long, default_value_t = 0.2)]
    pub jitter: f64,
    #[arg(long, default_value_t = 2.0)]
    pub area_scale: f64,
    #[arg(long, default_value_t = 50)]
    pub nodes: usize,
    #[arg(long, default_value_t = 8)]
    pub ring_nodes: usize,
    #[arg(long, default_value_t = 2)]
    pub fanout: usize,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Write into this directory instead of the recorded one.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Record of one run, enough to repeat it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    /// Command-line arguments without the output directory.
    pub args: Vec<String>,
    pub inputs: Vec<String>,
    pub params: Value,
    pub seed: Option<u64>,
    pub version: String,
    pub out_dir: String,
    pub outputs: Vec<String>,
}

/// Tables produced by a command, before anything touches the disk.
struct RunOutput {
    files: Vec<(String, String)>,
    params: Value,
    seed: Option<u64>,
    inputs: Vec<String>,
}

/// Entry point shared by the binary and the tests; returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let args: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(cli.command, &args) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(command: Command, args: &[String]) -> Result<()> {
    let (name, out, output) = match command {
        Command::Analyze(a) => ("analyze", a.out.clone(), analyze(&a)?),
        Command::Rank(a) => ("rank", a.out.clone(), rank(&a)?),
        Command::Simulate(a) => ("simulate", a.out.clone(), simulate(&a)?),
        Command::ValidateStrip(a) => ("validate-strip", a.out.clone(), validate_strip(&a)?),
        Command::OptimizeBackup(a) => ("optimize-backup", a.out.clone(), optimize(&a)?),
        Command::Generate(a) => ("generate", a.out.clone(), generate_cmd(&a)?),
        Command::Replay(a) => return replay(&a),
    };
    write_run(name, strip_out(args), &out, output)
}

/// Drops the subcommand name and any `--out` flag.
fn strip_out(args: &[String]) -> Vec<String> {
    let mut kept = Vec::new();
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--out" {
            it.next();
        } else if !a.starts_with("--out=") {
            kept.push(a.clone());
        }
    }
    kept
}

fn write_run(command: &str, args: Vec<String>, out: &Path, output: RunOutput) -> Result<()> {
    let io = |path: &Path| {
        let path = path.display().to_string();
        move |source| Error::Io { path, source }
    };
    fs::create_dir_all(out).map_err(io(out))?;
    for (name, contents) in &output.files {
        let path = out.join(name);
        fs::write(&path, contents).map_err(io(&path))?;
    }
    let manifest = RunManifest {
        command: command.to_string(),
        args,
        inputs: output.inputs,
        params: output.params,
        seed: output.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        out_dir: out.display().to_string(),
        outputs: output.files.iter().map(|f| f.0.clone()).collect(),
    };
    let path = out.join(MANIFEST);
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    fs::write(&path, text).map_err(io(&path))
}

fn replay(a: &ReplayArgs) -> Result<()> {
    let text = fs::read_to_string(&a.manifest).map_err(|source| Error::Io {
        path: a.manifest.display().to_string(),
        source,
    })?;
    let manifest: RunManifest =
        serde_json::from_str(&text).map_err(|e| Error::Schema(format!("manifest: {e}")))?;
    let out = a.out.clone().unwrap_or_else(|| PathBuf::from(&manifest.out_dir));
    let mut argv = vec!["survnet".to_string(), manifest.command.clone()];
    argv.extend(manifest.args.iter().cloned());
    argv.push("--out".into());
    argv.push(out.display().to_string());
    let cli = Cli::try_parse_from(&argv).map_err(|e| Error::Schema(format!("manifest arguments: {e}")))?;
    if matches!(cli.command, Command::Replay(_)) {
        return Err(Error::Schema("manifest records a replay".into()));
    }
    execute(cli.command, &argv[1..])
}

fn load(path: &Path) -> Result<(Network, String)> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let shown = fs::canonicalize(path).unwrap_or_else(|_| path.to_path_buf());
    Ok((parse_network(&text)?, shown.display().to_string()))
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn num(v: f64) -> String {
    format!("{v}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn analyze(a: &AnalyzeArgs) -> Result<RunOutput> {
    let (net, input) = load(&a.network)?;
    let cf = ClosedForm::new(&net, a.disaster.params())?;
    let mut rows = Vec::new();
    for c in net.configs() {
        let p = match c.kind {
            ConfigKind::Single => cf.pr_single_route(c)?,
            ConfigKind::Ring => cf.pr_ring(c)?,
        };
        rows.push(vec![
            net.node_id(c.source).to_string(),
            net.node_id(c.dest).to_string(),
            c.kind.as_str().to_string(),
            num(p.value()),
        ]);
    }
    let mut by_source: BTreeMap<usize, Vec<&PathConfiguration>> = BTreeMap::new();
    for c in net.configs() {
        by_source.entry(c.source).or_default().push(c);
    }
    let mut expected = Vec::new();
    for (source, cfgs) in by_source {
        expected.push(vec![
            net.node_id(source).to_string(),
            cfgs.len().to_string(),
            num(cf.expected_disconnected(source, &cfgs)?),
        ]);
    }
    Ok(RunOutput {
        files: vec![
            (
                "pairs.csv".into(),
                csv_text(&["source", "dest", "kind", "probability"], rows),
            ),
            (
                "expected.csv".into(),
                csv_text(&["source", "destinations", "expected_disconnected"], expected),
            ),
        ],
        params: json!({"disaster": a.disaster.echo()}),
        seed: None,
        inputs: vec![input],
    })
}

/// Column layout of `rank.csv`.
pub const RANK_HEADER: [&str; 9] = [
    "rank",
    "a",
    "b",
    "status",
    "exact",
    "independent",
    "line",
    "simulated",
    "simulated_stderr",
];

fn rank(a: &RankArgs) -> Result<RunOutput> {
    let (net, input) = load(&a.network)?;
    let cfg = a.sim.config();
    let fallback = a.simulate_unsupported.then_some(&cfg);
    let rows = rank_pairs(&net, a.disaster.params(), fallback)?;
    let table = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                (i + 1).to_string(),
                net.node_id(r.a).to_string(),
                net.node_id(r.b).to_string(),
                r.status.as_str().to_string(),
                opt(r.exact),
                opt(r.independent),
                opt(r.line),
                opt(r.simulated.map(|e| e.mean)),
                opt(r.simulated.map(|e| e.stderr)),
            ]
        })
        .collect();
    let mut params = json!({"disaster": a.disaster.echo(), "simulate_unsupported": a.simulate_unsupported});
    if a.simulate_unsupported {
        params["sim"] = a.sim.echo();
    }
    Ok(RunOutput {
        files: vec![("rank.csv".into(), csv_text(&RANK_HEADER, table))],
        params,
        seed: a.simulate_unsupported.then_some(a.sim.seed),
        inputs: vec![input],
    })
}

fn estimate_rows(net: &Network, events: &[EventSpec], estimates: &[Estimate], seed: u64) -> Vec<Vec<String>> {
    events
        .iter()
        .zip(estimates)
        .map(|(e, est)| {
            vec![
                e.label(net),
                num(est.mean),
                num(est.stderr),
                num(est.ci_low()),
                num(est.ci_high()),
                est.trials.to_string(),
                seed.to_string(),
            ]
        })
        .collect()
}

fn simulate(a: &SimulateArgs) -> Result<RunOutput> {
    let (net, input) = load(&a.network)?;
    let events = a
        .events
        .iter()
        .map(|e| EventSpec::parse(&net, e))
        .collect::<Result<Vec<_>>>()?;
    let cfg = a.sim.config();
    let estimates = match a.lambda {
        Some(lambda) => {
            if a.disaster.wide_strip.is_some() {
                return Err(Error::param("sine edges apply to half-plane disasters only"));
            }
            estimate_sine_events(&net, lambda, a.disaster.w, &events, &cfg)?
        }
        None => estimate_events(&net, &events, a.disaster.params(), &cfg)?,
    };
    let rows = estimate_rows(&net, &events, &estimates, a.sim.seed);
    Ok(RunOutput {
        files: vec![(
            "estimates.csv".into(),
            csv_text(
                &[
                    "event_id", "mean", "stderr", "ci_low", "ci_high", "trials", "seed",
                ],
                rows,
            ),
        )],
        params: json!({"disaster": a.disaster.echo(), "lambda": a.lambda, "sim": a.sim.echo(),
                       "events": events.iter().map(|e| e.label(&net)).collect::<Vec<_>>()}),
        seed: Some(a.sim.seed),
        inputs: vec![input],
    })
}

fn validate_strip(a: &ValidateArgs) -> Result<RunOutput> {
    let (net, input) = load(&a.network)?;
    let report = validity_study(&net, &a.lambda, &a.w_list, &a.sim.config())?;
    for (lambda, w, i, j) in &report.excluded {
        eprintln!(
            "warning: pair {i} - {j} has zero strip-model probability at lambda={lambda} w={w}; excluded"
        );
    }
    let rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                num(r.lambda),
                num(r.w),
                num(r.mean_rel_abs_error),
                r.pairs_used.to_string(),
            ]
        })
        .collect();
    Ok(RunOutput {
        files: vec![(
            "validity.csv".into(),
            csv_text(&["lambda", "w", "mean_rel_abs_error", "pairs_used"], rows),
        )],
        params: json!({"lambda": a.lambda, "w_list": a.w_list, "sim": a.sim.echo(), "unit": report.unit}),
        seed: Some(a.sim.seed),
        inputs: vec![input],
    })
}

fn optimize(a: &OptimizeArgs) -> Result<RunOutput> {
    let combos: Vec<(f64, usize)> = a
        .ring_radius
        .iter()
        .flat_map(|&r| a.nodes.iter().map(move |&n| (r, n)))
        .collect();
    let mut files = Vec::new();
    let mut summary = Vec::new();
    for &(r, n) in &combos {
        let gamma = match a.gamma_deg {
            Some(g) => g.to_radians(),
            None => 2.0 * std::f64::consts::PI / n.max(1) as f64,
        };
        let area_radius = a.area_radius.unwrap_or(3.0 * r);
        let model = RingPlanModel {
            ring_radius: r,
            gamma,
            node_count: n,
            area: ConvexRegion::disk(Point::new(0.0, 0.0), area_radius)?,
            grid_step: a.grid_step_deg.to_radians(),
            w: a.w,
        };
        let best = optimize_backup(&model)?;
        let cells = model
            .placement_grid()?
            .into_iter()
            .map(|c| {
                vec![
                    num(c.alpha1.to_degrees()),
                    num(c.alpha2.to_degrees()),
                    num(c.e1),
                    num(c.e2),
                ]
            })
            .collect();
        let name = if combos.len() == 1 {
            "placement.csv".to_string()
        } else {
            format!("placement_r{r}_n{n}.csv")
        };
        files.push((name, csv_text(&["alpha1_deg", "alpha2_deg", "E1", "E2"], cells)));
        let (p1, p2) = best.pair.expect("pair search always runs");
        let e2 = best.e2.expect("pair search always runs");
        summary.push(vec![
            num(r),
            n.to_string(),
            num(best.alpha1.to_degrees()),
            num(best.e1),
            num(p1.to_degrees()),
            num(p2.to_degrees()),
            num(e2),
            num(best.e1 - e2),
            num(best.e1 / e2),
        ]);
    }
    files.push((
        "summary.csv".into(),
        csv_text(
            &[
                "ring_radius",
                "node_count",
                "alpha1_deg",
                "E1",
                "pair_alpha1_deg",
                "alpha2_deg",
                "E2",
                "E1_minus_E2",
                "E1_over_E2",
            ],
            summary,
        ),
    ));
    Ok(RunOutput {
        files,
        params: json!({"ring_radius": a.ring_radius, "gamma_deg": a.gamma_deg, "nodes": a.nodes,
                       "area_radius": a.area_radius, "grid_step_deg": a.grid_step_deg, "w": a.w}),
        seed: None,
        inputs: Vec::new(),
    })
}

fn generate_cmd(a: &GenerateArgs) -> Result<RunOutput> {
    let template: Template = a.template.parse()?;
    let params = GenParams {
        seed: a.seed,
        cols: a.cols,
        rows: a.rows,
        spacing: a.spacing,
        jitter: a.jitter,
        area_scale: a.area_scale,
        nodes: a.nodes,
        ring_nodes: a.ring_nodes,
        fanout: a.fanout,
    };
    let net = generate(template, &params)?;
    Ok(RunOutput {
        files: vec![("network.json".into(), net.to_json() + "\n")],
        params: json!({"template": template.name(), "cols": a.cols, "rows": a.rows, "spacing": a.spacing,
                       "jitter": a.jitter, "area_scale": a.area_scale, "nodes": a.nodes,
                       "ring_nodes": a.ring_nodes, "fanout": a.fanout}),
        seed: Some(a.seed),
        inputs: Vec::new(),
    })
}
