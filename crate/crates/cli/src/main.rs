//! `mbposd`: simulate, sweep and inspect short-LDPC decoders from the shell.

mod llr_file;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use mbposd_core::bp::{alpha_from_girth, bp_decode, BpConfig};
use mbposd_core::mbposd::{default_beta, BpOsdDecoder, DecodeOutcome, DecodePath, MbpOsdConfig, MbpOsdDecoder};
use mbposd_core::osd::OsdDecoder;
use mbposd_core::sim::{
    default_beta_grid, run_campaign_on, write_report, CampaignConfig, DecoderKind, StopRule, SweepAxis, TrialReport,
};
use mbposd_core::{codes, CodeSpec, Error, Girth, MbpConfig, OpCounters};

use llr_file::LlrFormat;

#[derive(Parser)]
#[command(name = "mbposd", version, about = "BP, OSD and mBP-OSD decoding of short binary LDPC codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monte-Carlo BLER/BER, OSD invocation rate and complexity over an SNR grid.
    Simulate(SimArgs),
    /// Like `simulate`, repeated for each β in a grid (mbp-osd only).
    SweepBeta {
        #[command(flatten)]
        sim: SimArgs,
        /// β values; defaults to 0.40,0.45,...,1.00.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        betas: Option<Vec<f64>>,
    },
    /// Like `simulate`, repeated for each stopping threshold λ.
    SweepLambda {
        #[command(flatten)]
        sim: SimArgs,
        /// λ values, `inf` allowed.
        #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "0.5,1,2,5,10,inf")]
        lambdas: Vec<f64>,
    },
    /// Print N, K, girth, the mBP iteration count α and rank checks.
    InspectCode {
        #[arg(long)]
        code: String,
        /// Also compute the minimum distance by enumeration (small K only).
        #[arg(long)]
        min_distance: bool,
    },
    /// Decode a single frame of channel LLRs read from a file.
    Decode(DecodeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Bp,
    Osd,
    BpOsd,
    MbpOsd,
}

#[derive(Args)]
struct DecoderArgs {
    /// Bundled code name (hamming7_4, ldpc32_16, ldpc96_48, ccsds128_64) or alist path.
    #[arg(long)]
    code: String,
    #[arg(long, value_enum, default_value = "mbp-osd")]
    decoder: Family,
    /// OSD order m.
    #[arg(long, default_value_t = 2)]
    order: usize,
    /// Offset weight of the refinement stage; default depends on the order.
    #[arg(long)]
    beta: Option<f64>,
    /// Stopping threshold on the BP output's weighted Hamming distance; `inf` disables it.
    /// Defaults to the bundled code's value, or inf for files.
    #[arg(long)]
    lambda: Option<f64>,
    /// Refinement iterations; default floor(girth/4)+1.
    #[arg(long)]
    alpha: Option<usize>,
    /// Maximum BP iterations.
    #[arg(long, default_value_t = 30)]
    tmax: usize,
}

impl DecoderArgs {
    fn kind(&self) -> DecoderKind {
        match self.decoder {
            Family::Bp => DecoderKind::Bp,
            Family::Osd => DecoderKind::Osd(self.order),
            Family::BpOsd => DecoderKind::BpOsd(self.order),
            Family::MbpOsd => DecoderKind::MbpOsd(self.order),
        }
    }

    fn lambda(&self) -> f64 {
        self.lambda.or_else(|| codes::default_lambda(&self.code)).unwrap_or(f64::INFINITY)
    }
}

#[derive(Args)]
struct SimArgs {
    #[command(flatten)]
    dec: DecoderArgs,
    /// Comma-separated SNR points in dB. SNR = 2/N0 for unit-energy BPSK,
    /// which equals Eb/N0 only for rate-1/2 codes.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    snr: Vec<f64>,
    /// Frames per point (the cap when --target-errors is set).
    #[arg(long, default_value_t = 1000)]
    frames: u64,
    /// Stop a point after this many frame errors.
    #[arg(long)]
    target_errors: Option<u64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads; 0 uses all cores. Results do not depend on it.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// CSV output path; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-frame JSON-lines trace.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Record wall-clock time per frame (mean_ms column).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct DecodeArgs {
    #[command(flatten)]
    dec: DecoderArgs,
    /// File with N channel LLRs.
    #[arg(long)]
    llr: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: LlrFormat,
    /// Write the OSD candidate list (text, one candidate per line) to this path; `-` for stdout.
    #[arg(long)]
    candidates: Option<PathBuf>,
}

enum Failure {
    Config(String),
    Code(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_code_error() {
            Failure::Code(e.to_string())
        } else {
            Failure::Config(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match cli.command {
        Command::Simulate(sim) => simulate(&sim, SweepAxis::None),
        Command::SweepBeta { sim, betas } => simulate(&sim, SweepAxis::Beta(betas.unwrap_or_else(default_beta_grid))),
        Command::SweepLambda { sim, lambdas } => simulate(&sim, SweepAxis::Lambda(lambdas)),
        Command::InspectCode { code, min_distance } => inspect(&code, min_distance),
        Command::Decode(args) => decode(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Code(msg)) => {
            eprintln!("code error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Any failure while reading or validating the code is a code error.
fn load_code(name: &str) -> Result<CodeSpec, Failure> {
    codes::load(name).map_err(|e| Failure::Code(e.to_string()))
}

fn campaign_config(sim: &SimArgs, sweep: SweepAxis) -> CampaignConfig {
    let d = &sim.dec;
    let mut cfg = CampaignConfig::new(d.code.clone(), d.kind(), sim.snr.clone());
    cfg.stop = match sim.target_errors {
        Some(target) => StopRule::TargetErrors { target, max_frames: sim.frames },
        None => StopRule::Frames(sim.frames),
    };
    cfg.seed = sim.seed;
    cfg.bp = BpConfig::with_max_iters(d.tmax);
    cfg.alpha = d.alpha;
    cfg.beta = d.beta;
    cfg.lambda = d.lambda();
    cfg.sweep = sweep;
    cfg.workers = sim.workers;
    cfg.record_timing = sim.timing;
    cfg
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Config(format!("cannot create {}: {e}", path.display())))
}

fn simulate(sim: &SimArgs, sweep: SweepAxis) -> Result<(), Failure> {
    let code = load_code(&sim.dec.code)?;
    let cfg = campaign_config(sim, sweep);
    cfg.validate()?;
    let report = match &sim.trace {
        Some(path) => {
            let mut w = create(path)?;
            let rep = run_campaign_on(&code, &cfg, Some(&mut w))?;
            w.flush()?;
            rep
        }
        None => run_campaign_on(&code, &cfg, None)?,
    };
    match &sim.out {
        Some(path) => {
            let mut w = create(path)?;
            write_report(&report, &mut w)?;
            w.flush()?;
        }
        None => write_report(&report, io::stdout().lock())?,
    }
    summarize(&report, &cfg);
    Ok(())
}

fn summarize(report: &TrialReport, cfg: &CampaignConfig) {
    let axis = match cfg.sweep {
        SweepAxis::Beta(_) => "beta",
        SweepAxis::Lambda(_) => "lambda",
        SweepAxis::None => "",
    };
    eprintln!("{} (N={}, K={}) {} seed {}", report.code, report.n, report.k, report.decoder, report.seed);
    for c in &report.cells {
        let (lo, hi) = c.bler_interval();
        let sweep = c.sweep_value.map(|v| format!(" {axis}={v}")).unwrap_or_default();
        eprintln!(
            "  {:>6.2} dB{sweep}: {} frames, {} errors, BLER {:.3e} [{lo:.3e}, {hi:.3e}], gamma {:.4}, cost {:.0}",
            c.snr_db,
            c.frames,
            c.frame_errors,
            c.bler(),
            c.gamma_hat(),
            c.mean_cost()
        );
    }
}

fn inspect(name: &str, min_distance: bool) -> Result<(), Failure> {
    let code = load_code(name)?;
    let (n, k) = (code.n(), code.k());
    let graph = code.graph();
    let var_deg: Vec<usize> = (0..n).map(|i| graph.var_neighbors(i).len()).collect();
    let chk_deg: Vec<usize> = (0..n - k).map(|j| graph.check_neighbors(j).len()).collect();
    let h_rank = code.pcm().rank();
    let g_rank = code.gen().rank();
    let orthogonal = (0..k).all(|r| code.is_codeword(&code.gen().row_bits(r)));
    let girth = code.girth();

    let mut out = io::stdout().lock();
    if let Some(b) = codes::bundled(name) {
        writeln!(out, "code         {} ({})", b.name, b.description)?;
    } else {
        writeln!(out, "code         {name}")?;
    }
    writeln!(out, "N            {n}")?;
    writeln!(out, "K            {k}")?;
    writeln!(out, "rate         {:.4}", code.rate())?;
    writeln!(out, "edges        {}", graph.num_edges())?;
    writeln!(out, "var degree   {}..{}", min(&var_deg), max(&var_deg))?;
    writeln!(out, "check degree {}..{}", min(&chk_deg), max(&chk_deg))?;
    writeln!(out, "girth        {girth}")?;
    let note = if girth == Girth::Acyclic { " (no cycles; fixed default)" } else { "" };
    writeln!(out, "alpha        {}{note}", alpha_from_girth(girth))?;
    writeln!(out, "rank(H)      {h_rank} of {} {}", n - k, ok(h_rank == n - k))?;
    writeln!(out, "rank(G)      {g_rank} of {k} {}", ok(g_rank == k))?;
    writeln!(out, "G·H^T = 0    {}", ok(orthogonal))?;
    if let Some(l) = codes::default_lambda(name) {
        writeln!(out, "lambda       {l} (default)")?;
    }
    if min_distance {
        let code = code.with_min_distance()?;
        writeln!(out, "d_min        {}", code.min_distance().unwrap_or(0))?;
    }
    Ok(())
}

fn min(v: &[usize]) -> usize {
    v.iter().copied().min().unwrap_or(0)
}

fn max(v: &[usize]) -> usize {
    v.iter().copied().max().unwrap_or(0)
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn decode(args: &DecodeArgs) -> Result<(), Failure> {
    let d = &args.dec;
    let code = load_code(&d.code)?;
    let llr = llr_file::read(&args.llr, args.format).map_err(Failure::Config)?;
    if llr.len() != code.n() {
        return Err(Failure::Config(format!("LLR file holds {} values, code length is {}", llr.len(), code.n())));
    }
    let bp = BpConfig::with_max_iters(d.tmax);
    let mbp_cfg = |order| MbpOsdConfig {
        bp,
        mbp: MbpConfig {
            alpha: d.alpha.unwrap_or_else(|| alpha_from_girth(code.girth())),
            beta: d.beta.unwrap_or_else(|| default_beta(order)),
        },
        order,
        lambda: d.lambda(),
    };
    let kind = d.kind();
    // The outcome, plus the LLR the OSD stage works on.
    let (outcome, osd_input) = match kind {
        DecoderKind::Bp => {
            bp.validate()?;
            let out = bp_decode(&code, &llr, &bp)?;
            let whd = mbposd_core::mbposd::stopping_whd(&out.estimate, &llr)?;
            let path = if out.converged { "early-terminated" } else { "bp-exhausted" };
            let o = DecodeOutcome {
                estimate: out.estimate,
                path: DecodePath::EarlyTerminated,
                whd,
                counters: OpCounters::default(),
                converged_bp: out.converged,
                bp_iters: out.iters_used,
            };
            (Trace { outcome: o, path }, None)
        }
        DecoderKind::Osd(m) => {
            let mut counters = OpCounters::default();
            let out = OsdDecoder::new(&code, m).decode(&llr, &mut counters)?;
            let o = DecodeOutcome {
                estimate: out.estimate,
                path: DecodePath::OsdSelected,
                whd: out.whd,
                counters,
                converged_bp: false,
                bp_iters: 0,
            };
            (Trace::new(o), Some(llr.clone()))
        }
        DecoderKind::BpOsd(m) => {
            let o = BpOsdDecoder::new(&code, m, bp)?.decode(&llr)?;
            let input = bp_decode(&code, &llr, &bp)?.posterior.into_inner();
            (Trace::new(o), Some(input))
        }
        DecoderKind::MbpOsd(m) => {
            let cfg = mbp_cfg(m);
            let mut dec = MbpOsdDecoder::new(&code, cfg)?;
            let o = dec.decode(&llr)?;
            let input = dec.refined_llr(&llr)?;
            (Trace::new(o), Some(input))
        }
    };

    if let Some(path) = &args.candidates {
        let (Some(input), Some(m)) = (&osd_input, kind.order()) else {
            return Err(Failure::Config("the bp decoder has no OSD stage; --candidates needs an OSD-based decoder".into()));
        };
        if path.as_os_str() == "-" {
            dump_candidates(&code, input, m, &mut io::stdout().lock())?;
        } else {
            let mut w = create(path)?;
            dump_candidates(&code, input, m, &mut w)?;
            w.flush()?;
        }
    }

    let o = &outcome.outcome;
    let record = serde_json::json!({
        "code": d.code,
        "decoder": kind.to_string(),
        "n": code.n(),
        "k": code.k(),
        "path": outcome.path,
        "bp_iters": o.bp_iters,
        "converged_bp": o.converged_bp,
        "whd": o.whd,
        "is_codeword": code.is_codeword(&o.estimate),
        "estimate": o.estimate.iter().map(|b| char::from(b'0' + b)).collect::<String>(),
        "counters": o.counters,
    });
    writeln!(io::stdout().lock(), "{record}")?;
    Ok(())
}

struct Trace {
    outcome: DecodeOutcome,
    path: &'static str,
}

impl Trace {
    fn new(outcome: DecodeOutcome) -> Self {
        let path = match outcome.path {
            DecodePath::EarlyTerminated => "early-terminated",
            DecodePath::OsdSelected => "osd-selected",
        };
        Trace { outcome, path }
    }
}

/// One line per test pattern in enumeration order: index, weight, flipped
/// positions (sorted coordinates, ascending), WHD, and the candidate in
/// original bit order.
fn dump_candidates(code: &CodeSpec, llr: &[f64], order: usize, w: &mut dyn Write) -> Result<(), Failure> {
    let (out, cands, ws) = OsdDecoder::new(code, order).decode_with_candidates(llr)?;
    writeln!(w, "# order {order}, N={}, K={}, {} candidates", code.n(), code.k(), cands.len())?;
    writeln!(w, "# permutation {}", join(&ws.perm))?;
    writeln!(w, "# idx weight support whd codeword")?;
    for (i, c) in cands.iter().enumerate() {
        let mut support = c.support.clone();
        support.sort_unstable();
        let support = if support.is_empty() { "-".to_string() } else { join(&support) };
        let bits: String = ws.restore(&c.codeword).iter().map(|b| char::from(b'0' + b)).collect();
        writeln!(w, "{i} {} {support} {:.12} {bits}", c.tep_weight, c.whd)?;
    }
    writeln!(w, "# best whd {:.12}", out.whd)?;
    Ok(())
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
