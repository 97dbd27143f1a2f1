//! Command-line interface: statistics, generating functions, bijections,
//! involutions, and brute-force identity verification.
//!
//! Exit status: 0 on success (and on verified identities), 1 when an
//! identity check reports a mismatch, 2 on usage or input errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use colperm::bijections::{self, SequenceW};
use colperm::involutions::{self, SignedLabeledPartition};
use colperm::qseries;
use colperm::stats;
use colperm::verify::{self, CheckOptions, IdentityReport};
use colperm::{ColoredPermutation, IntPartition, LabeledPartition};

/// Environment variable overriding the default enumeration ceiling.
const CEILING_ENV: &str = "COLPERM_CEILING";

#[derive(Parser)]
#[command(
    name = "colperm",
    version,
    about = "Colored-permutation statistics, bijections, and exact identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print descent set, maj, color counts, and fmaj of a window
    Stats {
        /// Number of colors
        #[arg(long)]
        k: usize,
        /// Window in `d_c` notation, e.g. "3_2 4_2 6_0"
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Emit a closed-form generating function as an exact polynomial
    Gf {
        #[arg(long, value_enum)]
        which: GfKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Bracket order, or the lower Gaussian index
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Apply one of the constructive maps, forward or inverse
    Bijection {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Number of colors (required with text flags and by phi inverse)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        perm: Option<String>,
        /// Nonnegative integer sequence for phi inverse
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// One JSON record holding the inputs instead of the text flags,
        /// e.g. '{"lambda":{"parts":[3,0]},"perm":{"n":2,"k":3,…}}'
        #[arg(long, conflicts_with_all = ["lambda", "perm", "seq", "beta", "gamma", "alpha"])]
        json: Option<String>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Apply the sign-reversing involution to a signed labeled partition
    Involution {
        /// Partition parts, e.g. "3 3 0 0"
        #[arg(long, required_unless_present = "json")]
        lambda: Option<String>,
        /// Plain window over {1..n}, e.g. "2 1 3 4"
        #[arg(long, required_unless_present = "json")]
        perm: Option<String>,
        /// The pair as one JSON record: '{"lambda":{"parts":[…]},"pi":{…}}'
        #[arg(long, conflicts_with_all = ["lambda", "perm"])]
        json: Option<String>,
        /// Print the full orbit (the 2-cycle or the fixed point)
        #[arg(long)]
        orbit: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run a brute-force identity check; exit 1 if the check fails
    Verify {
        #[arg(long, value_enum)]
        identity: IdentityKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Fixed-point-free window for the wachs relation
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long = "max-weight")]
        max_weight: Option<u64>,
        /// Object-count guard (overrides COLPERM_CEILING and the default)
        #[arg(long)]
        ceiling: Option<u128>,
        /// Echoed into the report for reproducibility bookkeeping
        #[arg(long)]
        seed: Option<u64>,
        /// Include wall-clock timing in JSON output (off keeps output
        /// byte-identical across runs)
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the document to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GfKind {
    /// [m]_q
    Bracket,
    /// [k]_q [2k]_q … [nk]_q
    Fmaj,
    /// [n choose m] in base q^k
    Gauss,
    /// d_n^k(q)
    Derangement,
    /// [1]_q [2]_{-q} …
    Gs,
    /// [2]_{-q} [4]_q …
    Agr,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    /// The labeling map g_pi
    G,
    /// The sequence map phi
    Phi,
    /// The derangement decomposition theta (inverse: eta)
    Theta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Fwd,
    Inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityKind {
    Fmaj,
    Wachs,
    Derangement,
    Gs,
    Agr,
    Involution,
}

/// A rendered document plus the process exit status.
struct Outcome {
    document: String,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output_opts, result) = run(cli.command);
    match result {
        Ok(outcome) => {
            if let Some(path) = &output_opts.out {
                if let Err(e) = std::fs::write(path, outcome.document + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                println!("{}", outcome.document);
            }
            ExitCode::from(outcome.exit)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> (OutputOpts, Result<Outcome, String>) {
    match command {
        Command::Stats { k, perm, output } => {
            let result = cmd_stats(k, &perm, output.format);
            (output, result)
        }
        Command::Gf {
            which,
            n,
            k,
            m,
            output,
        } => {
            let result = cmd_gf(which, n, k, m, output.format);
            (output, result)
        }
        Command::Bijection {
            map,
            direction,
            k,
            lambda,
            perm,
            seq,
            beta,
            gamma,
            alpha,
            json,
            output,
        } => {
            let result = parse_json_record(json.as_deref()).and_then(|json| {
                let inputs = BijectionInputs {
                    k,
                    lambda,
                    perm,
                    seq,
                    beta,
                    gamma,
                    alpha,
                    json,
                };
                cmd_bijection(map, direction, &inputs, output.format)
            });
            (output, result)
        }
        Command::Involution {
            lambda,
            perm,
            json,
            orbit,
            output,
        } => {
            let result = cmd_involution(
                lambda.as_deref(),
                perm.as_deref(),
                json.as_deref(),
                orbit,
                output.format,
            );
            (output, result)
        }
        Command::Verify {
            identity,
            n,
            k,
            alpha,
            max_weight,
            ceiling,
            seed,
            timings,
            output,
        } => {
            let result = cmd_verify(
                identity,
                n,
                k,
                alpha.as_deref(),
                max_weight,
                ceiling,
                seed,
                timings,
                output.format,
            );
            (output, result)
        }
    }
}

fn cmd_stats(k: usize, window: &str, format: Format) -> Result<Outcome, String> {
    let pi = ColoredPermutation::parse(window, k).map_err(|e| e.to_string())?;
    let summary = stats::stat_summary(&pi);
    let document = match format {
        Format::Json => serde_json::to_string(&summary).expect("serializable"),
        Format::Text => {
            let mut text = String::new();
            let descents: Vec<String> = summary.descent_set.iter().map(|d| d.to_string()).collect();
            writeln!(text, "descent_set: {{{}}}", descents.join(", ")).unwrap();
            writeln!(text, "maj: {}", summary.maj).unwrap();
            let counts: Vec<String> = summary.color_counts.iter().map(|c| c.to_string()).collect();
            writeln!(text, "color_counts: [{}]", counts.join(", ")).unwrap();
            write!(text, "fmaj: {}", summary.fmaj).unwrap();
            text
        }
    };
    Ok(Outcome { document, exit: 0 })
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, String> {
    value.ok_or_else(|| format!("missing required flag --{flag}"))
}

fn cmd_gf(
    which: GfKind,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    format: Format,
) -> Result<Outcome, String> {
    let poly = match which {
        GfKind::Bracket => qseries::q_bracket(require(m, "m")?),
        GfKind::Fmaj => qseries::fmaj_product_rhs(require(n, "n")?, require(k, "k")?),
        GfKind::Gauss => {
            qseries::gaussian_binomial(require(n, "n")?, require(m, "m")?, require(k, "k")?)
        }
        GfKind::Derangement => qseries::derangement_rhs(require(n, "n")?, require(k, "k")?),
        GfKind::Gs => qseries::gessel_simon_rhs(require(n, "n")?),
        GfKind::Agr => qseries::agr_rhs(require(n, "n")?),
    }
    .map_err(|e| e.to_string())?;
    let document = match format {
        Format::Json => serde_json::to_string(&poly).expect("serializable"),
        Format::Text => poly.to_string(),
    };
    Ok(Outcome { document, exit: 0 })
}

fn parse_json_record(text: Option<&str>) -> Result<Option<Value>, String> {
    match text {
        None => Ok(None),
        Some(text) => {
            let value: Value =
                serde_json::from_str(text).map_err(|e| format!("--json: {e}"))?;
            if !value.is_object() {
                return Err("--json: expected a JSON object".to_string());
            }
            Ok(Some(value))
        }
    }
}

struct BijectionInputs {
    k: Option<usize>,
    lambda: Option<String>,
    perm: Option<String>,
    seq: Option<String>,
    beta: Option<String>,
    gamma: Option<String>,
    alpha: Option<String>,
    json: Option<Value>,
}

impl BijectionInputs {
    /// A colored window, from the JSON record (field named like the flag,
    /// with `pi` accepted as an alias so forward output chains into the
    /// inverse) or from the text flag plus `--k`.
    fn window(&self, flag: &str) -> Result<ColoredPermutation, String> {
        if let Some(record) = &self.json {
            let field = record
                .get(flag)
                .or_else(|| record.get("pi"))
                .ok_or_else(|| format!("--json: record is missing `{flag}`"))?;
            let pi: ColoredPermutation = serde_json::from_value(field.clone())
                .map_err(|e| format!("--json `{flag}`: {e}"))?;
            if let Some(k) = self.k {
                if k != pi.k() {
                    return Err(format!(
                        "--k {k} disagrees with the `{flag}` record (k = {})",
                        pi.k()
                    ));
                }
            }
            return Ok(pi);
        }
        let k = require(self.k, "k")?;
        let text = require(self.field(flag).clone(), flag)?;
        ColoredPermutation::parse(&text, k).map_err(|e| format!("--{flag}: {e}"))
    }

    fn partition(&self, flag: &str) -> Result<IntPartition, String> {
        if let Some(record) = &self.json {
            let field = record
                .get(flag)
                .ok_or_else(|| format!("--json: record is missing `{flag}`"))?;
            return serde_json::from_value(field.clone())
                .map_err(|e| format!("--json `{flag}`: {e}"));
        }
        let text = require(self.field(flag).clone(), flag)?;
        IntPartition::parse(&text).map_err(|e| format!("--{flag}: {e}"))
    }

    fn sequence(&self) -> Result<SequenceW, String> {
        if let Some(record) = &self.json {
            let field = record
                .get("seq")
                .ok_or_else(|| "--json: record is missing `seq`".to_string())?;
            return serde_json::from_value(field.clone())
                .map_err(|e| format!("--json `seq`: {e}"));
        }
        let text = require(self.seq.clone(), "seq")?;
        SequenceW::parse(&text).map_err(|e| format!("--seq: {e}"))
    }

    fn field(&self, flag: &str) -> &Option<String> {
        match flag {
            "lambda" => &self.lambda,
            "perm" => &self.perm,
            "seq" => &self.seq,
            "beta" => &self.beta,
            "gamma" => &self.gamma,
            "alpha" => &self.alpha,
            _ => unreachable!("unknown flag"),
        }
    }
}

fn labeled_value(lp: &LabeledPartition) -> Value {
    json!({ "lambda": lp.lambda(), "pi": lp.pi() })
}

fn cmd_bijection(
    map: MapKind,
    direction: Direction,
    inputs: &BijectionInputs,
    format: Format,
) -> Result<Outcome, String> {
    let (value, text) = match (map, direction) {
        (MapKind::G, Direction::Fwd) => {
            let pi = inputs.window("perm")?;
            let lambda = inputs.partition("lambda")?;
            let labeled = bijections::g_pi(&lambda, &pi).map_err(|e| e.to_string())?;
            let text = format!("mu: {}\npi: {}", labeled.lambda(), labeled.pi());
            (labeled_value(&labeled), text)
        }
        (MapKind::G, Direction::Inv) => {
            let pi = inputs.window("perm")?;
            let mu = inputs.partition("lambda")?;
            let labeled = LabeledPartition::new(mu, pi).map_err(|e| e.to_string())?;
            let lambda = bijections::g_pi_inverse(&labeled).map_err(|e| e.to_string())?;
            (json!({ "lambda": lambda }), format!("lambda: {lambda}"))
        }
        (MapKind::Phi, Direction::Fwd) => {
            let pi = inputs.window("perm")?;
            let lambda = inputs.partition("lambda")?;
            let s = bijections::phi(&lambda, &pi).map_err(|e| e.to_string())?;
            (json!({ "seq": s }), format!("s: {s}"))
        }
        (MapKind::Phi, Direction::Inv) => {
            let s = inputs.sequence()?;
            let k = require(inputs.k, "k")?;
            let (lambda, pi) = bijections::phi_inverse(&s, k).map_err(|e| e.to_string())?;
            let text = format!("lambda: {lambda}\npi: {pi}");
            (json!({ "lambda": lambda, "pi": pi }), text)
        }
        (MapKind::Theta, Direction::Fwd) => {
            let sigma = inputs.window("perm")?;
            let lambda = inputs.partition("lambda")?;
            let d = bijections::theta(&lambda, &sigma).map_err(|e| e.to_string())?;
            let text = format!("beta: {}\ngamma: {}\nalpha: {}", d.beta, d.gamma, d.alpha);
            (serde_json::to_value(&d).expect("serializable"), text)
        }
        (MapKind::Theta, Direction::Inv) => {
            let beta = inputs.partition("beta")?;
            let gamma = inputs.partition("gamma")?;
            let alpha = inputs.window("alpha")?;
            let (lambda, sigma) =
                bijections::eta(&beta, &gamma, &alpha).map_err(|e| e.to_string())?;
            let text = format!("lambda: {lambda}\nsigma: {sigma}");
            (json!({ "lambda": lambda, "sigma": sigma }), text)
        }
    };
    let document = match format {
        Format::Json => value.to_string(),
        Format::Text => text,
    };
    Ok(Outcome { document, exit: 0 })
}

fn cmd_involution(
    lambda: Option<&str>,
    window: Option<&str>,
    json: Option<&str>,
    orbit: bool,
    format: Format,
) -> Result<Outcome, String> {
    let x = if let Some(record) = json {
        serde_json::from_str::<SignedLabeledPartition>(record)
            .map_err(|e| format!("--json: {e}"))?
    } else {
        let window = require(window, "perm")?;
        let lambda = require(lambda, "lambda")?;
        let pi = ColoredPermutation::parse(window, 1).map_err(|e| e.to_string())?;
        let lambda = IntPartition::parse(lambda).map_err(|e| e.to_string())?;
        let lambda =
            IntPartition::new(lambda.parts().to_vec(), pi.n()).map_err(|e| e.to_string())?;
        SignedLabeledPartition::new(lambda, pi).map_err(|e| e.to_string())?
    };
    let stratum = involutions::classify(&x);
    let image = involutions::gs_involution(&x);
    let is_fixed = image == x;

    let mut value = json!({
        "input": x,
        "stratum": stratum,
        "image": image,
        "weight": x.weight(),
        "sign": x.sign(),
        "image_sign": image.sign(),
    });
    if orbit {
        let orbit_value = if is_fixed { json!([x]) } else { json!([x, image]) };
        value["orbit"] = orbit_value;
    }

    let mut text = String::new();
    writeln!(text, "stratum: {stratum}").unwrap();
    writeln!(text, "weight: {} (preserved)", x.weight()).unwrap();
    writeln!(text, "sign: {} -> {}", x.sign(), image.sign()).unwrap();
    write!(text, "image: {image}").unwrap();
    if orbit {
        if is_fixed {
            write!(text, "\norbit: fixed point {x}").unwrap();
        } else {
            write!(text, "\norbit: {x} <-> {image}").unwrap();
        }
    }

    let document = match format {
        Format::Json => value.to_string(),
        Format::Text => text,
    };
    Ok(Outcome { document, exit: 0 })
}

fn check_options(ceiling_flag: Option<u128>) -> Result<CheckOptions, String> {
    let mut options = CheckOptions::default();
    if let Ok(text) = std::env::var(CEILING_ENV) {
        options.ceiling = text
            .parse()
            .map_err(|_| format!("{CEILING_ENV} must be an integer, got `{text}`"))?;
    }
    if let Some(ceiling) = ceiling_flag {
        options.ceiling = ceiling;
    }
    Ok(options)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    identity: IdentityKind,
    n: Option<usize>,
    k: Option<usize>,
    alpha: Option<&str>,
    max_weight: Option<u64>,
    ceiling: Option<u128>,
    seed: Option<u64>,
    timings: bool,
    format: Format,
) -> Result<Outcome, String> {
    let options = check_options(ceiling)?;
    let mut report = dispatch_check(identity, n, k, alpha, max_weight, &options)?;
    if let Some(seed) = seed {
        report
            .parameters
            .insert("seed".to_string(), seed.to_string());
    }
    let document = render_report(&report, timings, format);
    Ok(Outcome {
        document,
        exit: if report.equal { 0 } else { 1 },
    })
}

fn dispatch_check(
    identity: IdentityKind,
    n: Option<usize>,
    k: Option<usize>,
    alpha: Option<&str>,
    max_weight: Option<u64>,
    options: &CheckOptions,
) -> Result<IdentityReport, String> {
    let report = match identity {
        IdentityKind::Fmaj => {
            verify::check_fmaj_identity(require(n, "n")?, require(k, "k")?, options)
        }
        IdentityKind::Wachs => {
            let k = require(k, "k")?;
            let alpha = ColoredPermutation::parse(alpha.unwrap_or(""), k)
                .map_err(|e| format!("--alpha: {e}"))?;
            verify::check_wachs_relation(require(n, "n")?, &alpha, options)
        }
        IdentityKind::Derangement => {
            verify::check_derangement_formula(require(n, "n")?, require(k, "k")?, options)
        }
        IdentityKind::Gs => verify::check_gessel_simon(require(n, "n")?, options),
        IdentityKind::Agr => verify::check_agr(require(n, "n")?, options),
        IdentityKind::Involution => verify::check_involution_stratum(
            require(n, "n")?,
            require(max_weight, "max-weight")?,
            options,
        ),
    };
    report.map_err(|e| e.to_string())
}

fn render_report(report: &IdentityReport, timings: bool, format: Format) -> String {
    match format {
        Format::Json => {
            let mut value = serde_json::to_value(report).expect("serializable");
            if timings {
                value["elapsed_ms"] = json!(report.elapsed.as_millis() as u64);
            }
            value.to_string()
        }
        Format::Text => {
            let mut text = String::new();
            writeln!(text, "identity: {}", report.identity_name).unwrap();
            let params: Vec<String> = report
                .parameters
                .iter()
                .map(|(key, value)| format!("{key}={value}"))
                .collect();
            writeln!(text, "parameters: {}", params.join(", ")).unwrap();
            writeln!(text, "objects: {}", report.objects_enumerated).unwrap();
            writeln!(text, "lhs: {}", report.lhs).unwrap();
            writeln!(text, "rhs: {}", report.rhs).unwrap();
            writeln!(
                text,
                "elapsed: {:.3} ms",
                report.elapsed.as_secs_f64() * 1e3
            )
            .unwrap();
            write!(
                text,
                "result: {}",
                if report.equal { "EQUAL" } else { "MISMATCH" }
            )
            .unwrap();
            text
        }
    }
}

