//! `qcong`: verify q-congruence sweeps, evaluate individual q-objects,
//! re-render saved reports, and list the statement catalog.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, ensure, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qcong_core::arith64::primes_in;
use qcong_core::qkit::{poch_neg_q, poch_qq, poch_qq_base, q_binom, q_fermat_quotient, q_int};
use qcong_core::theorems::{catalog, verify_range, Axis, RunConfig, StatementId, StatementKind};
use qcong_core::{IntPoly, Rational};

#[derive(Parser)]
#[command(
    name = "qcong",
    about = "Exact verification of q-analogues of classical congruences",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify catalogued statements over parameter ranges
    Verify(VerifyArgs),
    /// Print a single q-object exactly
    Eval(EvalArgs),
    /// Re-render a saved JSON report
    Report(ReportArgs),
    /// List the statement catalog
    List,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated statement ids, or "all"
    #[arg(long, value_delimiter = ',', default_value = "all")]
    statements: Vec<String>,

    /// Inclusive prime range lo..hi (integer-base statements read it as a
    /// base range); a single number means that one value
    #[arg(long, default_value = "3..31")]
    primes: String,

    /// Inclusive range lo..hi for the second parameter (base m, exponent
    /// k, or identity parameter n)
    #[arg(long, default_value = "1..6")]
    m_values: String,

    /// Replay each q-congruence verdict in random prime fields
    #[arg(long)]
    oracle: bool,

    /// Admissible oracle primes required per instance
    #[arg(long, default_value_t = 3)]
    oracle_primes: u32,

    /// Skip the q = 1 comparisons against classical companions
    #[arg(long)]
    no_limit_checks: bool,

    /// Self-test: perturb each right side so every q-congruence must fail
    #[arg(long)]
    mutate: bool,

    /// Stop at the first violation or error
    #[arg(long)]
    fail_fast: bool,

    /// Worker threads (defaults to QCONG_JOBS, then all cores)
    #[arg(long)]
    jobs: Option<usize>,

    /// Seed for the oracle prime stream
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Keep witnesses only when numerator and denominator degrees stay
    /// at or under this bound
    #[arg(long, default_value_t = 64)]
    normalize_threshold: usize,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the rendering here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(subcommand)]
    object: EvalObject,
}

#[derive(Subcommand)]
enum EvalObject {
    /// [n]_q = 1 + q + ... + q^(n-1)
    Qint {
        n: u64,
        #[command(flatten)]
        out: EvalOutput,
    },
    /// Gaussian binomial [n, m] in base q^s
    Qbinom {
        n: u64,
        m: u64,
        s: u64,
        #[command(flatten)]
        out: EvalOutput,
    },
    /// q-Pochhammer symbol
    Qpoch {
        /// qq n -> (q;q)_n, negq n -> (-q;q)_n, qqbase m n -> (q^m;q^m)_n
        kind: String,
        args: Vec<u64>,
        #[command(flatten)]
        out: EvalOutput,
    },
    /// q-Fermat quotient of base m at prime p
    Qfermat {
        p: u64,
        m: u64,
        #[command(flatten)]
        out: EvalOutput,
    },
}

#[derive(Args)]
struct EvalOutput {
    /// Evaluate at a rational point instead of printing coefficients
    #[arg(long)]
    at: Option<String>,

    /// Render as a polynomial in q instead of a coefficient list
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct ReportArgs {
    /// Path to a JSON report written by `qcong verify --format json`
    input: PathBuf,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the rendering here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Report(args) => cmd_report(args),
        Command::List => cmd_list(),
    };
    match run {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(2)
        }
    }
}

fn parse_range(text: &str) -> anyhow::Result<(u64, u64)> {
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo.trim().parse()?, hi.trim().parse()?),
        None => {
            let v: u64 = text.trim().parse()?;
            (v, v)
        }
    };
    ensure!(lo <= hi, "empty range {}..{}", lo, hi);
    Ok((lo, hi))
}

fn parse_statements(args: &[String]) -> anyhow::Result<Vec<StatementId>> {
    if args.iter().any(|s| s.eq_ignore_ascii_case("all")) {
        return Ok(Vec::new());
    }
    args.iter()
        .map(|s| StatementId::from_str(s).map_err(|e| anyhow!(e)))
        .collect()
}

fn emit(text: &str, output: Option<&PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let statements = parse_statements(&args.statements)?;
    let (prime_lo, prime_hi) = parse_range(&args.primes).context("--primes")?;
    let (m_lo, m_hi) = parse_range(&args.m_values).context("--m-values")?;

    let selected: Vec<_> = catalog::all()
        .iter()
        .filter(|st| statements.is_empty() || statements.contains(&st.id))
        .collect();
    ensure!(!selected.is_empty(), "no statements selected");
    let needs_primes = selected.iter().any(|st| {
        matches!(
            st.axis,
            Axis::Primes | Axis::PrimesTimesM { .. } | Axis::PrimesTimesK
        )
    });
    if needs_primes && primes_in(prime_lo, prime_hi).next().is_none() {
        bail!("no primes in range {}..{}", prime_lo, prime_hi);
    }

    let jobs = match args.jobs {
        Some(j) => {
            ensure!(j >= 1, "--jobs must be at least 1");
            j
        }
        None => std::env::var("QCONG_JOBS")
            .ok()
            .map(|v| v.parse().context("QCONG_JOBS"))
            .transpose()?
            .unwrap_or(0),
    };

    let cfg = RunConfig {
        statements,
        prime_lo,
        prime_hi,
        m_lo,
        m_hi,
        oracle: args.oracle,
        oracle_count: args.oracle_primes,
        limit_checks: !args.no_limit_checks,
        mutate: args.mutate,
        fail_fast: args.fail_fast,
        seed: args.seed,
        jobs,
        normalize_threshold: args.normalize_threshold,
    };
    let report = verify_range(&cfg);

    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Table => {
            let rows = render::report_rows(&report);
            let mut text = render::render_table(&rows);
            text.push('\n');
            text.push_str(&render::render_summary(&report));
            text
        }
        Format::Csv => render::render_csv(&render::report_rows(&report)),
    };
    emit(&text, args.output.as_ref())?;
    Ok(report.exit_code() as u8)
}

fn eval_poly(object: &EvalObject) -> anyhow::Result<IntPoly> {
    Ok(match object {
        EvalObject::Qint { n, .. } => q_int(*n),
        EvalObject::Qbinom { n, m, s, .. } => {
            ensure!(m <= n, "m must be at most n");
            ensure!(*s >= 1, "the base exponent s must be at least 1");
            q_binom(*n, *m, *s)
        }
        EvalObject::Qpoch { kind, args, .. } => match (kind.as_str(), args.as_slice()) {
            ("qq", [n]) => poch_qq(*n),
            ("negq", [n]) => poch_neg_q(*n),
            ("qqbase", [m, n]) => {
                ensure!(*m >= 1, "the base exponent must be at least 1");
                poch_qq_base(*m, *n)
            }
            _ => bail!("expected: qpoch qq N | qpoch negq N | qpoch qqbase M N"),
        },
        EvalObject::Qfermat { p, m, .. } => q_fermat_quotient(*p, *m)?,
    })
}

fn cmd_eval(args: EvalArgs) -> anyhow::Result<u8> {
    let poly = eval_poly(&args.object)?;
    let out = match &args.object {
        EvalObject::Qint { out, .. }
        | EvalObject::Qbinom { out, .. }
        | EvalObject::Qpoch { out, .. }
        | EvalObject::Qfermat { out, .. } => out,
    };
    let text = match &out.at {
        Some(point) => {
            let x: Rational = point
                .parse()
                .map_err(|e| anyhow!("invalid evaluation point {}: {}", point, e))?;
            poly.evaluate(&x).to_string()
        }
        None if out.pretty => poly.to_string(),
        None => {
            if poly.is_zero() {
                "0".to_string()
            } else {
                poly.coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        }
    };
    println!("{}", text);
    Ok(0)
}

fn cmd_report(args: ReportArgs) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).context("malformed report")?;
    let rows = render::value_rows(&value)?;
    let rendered = match args.format {
        Format::Table => render::render_table(&rows),
        Format::Csv => render::render_csv(&rows),
        Format::Json => serde_json::to_string_pretty(&value)? + "\n",
    };
    emit(&rendered, args.output.as_ref())?;
    Ok(0)
}

fn cmd_list() -> anyhow::Result<u8> {
    let mut out = String::new();
    for st in catalog::all() {
        let kind = match st.kind {
            StatementKind::QCongruence { k } => format!("q-congruence mod [p]_q^{}", k),
            StatementKind::QIdentity => "exact q-identity".to_string(),
            StatementKind::Classical { k } => format!("classical mod p^{}", k),
        };
        let axis = match st.axis {
            Axis::Primes => format!("primes >= {}", st.min_p),
            Axis::PrimesTimesM { min_m } => {
                format!("primes >= {} with coprime m >= {}", st.min_p, min_m)
            }
            Axis::IntegerBases => format!("integer bases >= {} with exponent k", st.min_p),
            Axis::PrimesTimesK => format!("primes >= {} with exponent k", st.min_p),
            Axis::ParamOnly => format!("parameter n >= {}", st.min_p),
        };
        out.push_str(&format!("{:<11} {:<26} {}\n", st.id.to_string(), kind, axis));
        out.push_str(&format!("{:<11} {}\n", "", st.summary));
        if let Some(companion) = st.companion {
            out.push_str(&format!("{:<11} q = 1 companion: {}\n", "", companion));
        }
        if let Some(note) = st.note {
            out.push_str(&format!("{:<11} note: {}\n", "", note));
        }
    }
    print!("{}", out);
    Ok(0)
}
