use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use eulersum::errata::{check_errata, LEDGER};
use eulersum::oracle::{builtin_suite, grid_verify, Catalog, EvalResult, IdentityCase, Params, SeriesConfig, Status, Variant};
use eulersum::report::{ReportDocument, ReportRow};
use eulersum::wsums::precision_warning;
use std::collections::HashSet;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

const DEFAULT_TOL: f64 = 1e-7;

#[derive(Parser)]
#[command(name = "eulersum", version, about = "Evaluate and verify closed-form Euler sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one catalog identity
    Eval(EvalArgs),
    /// Verify identities against the oracles and write a report
    Verify(VerifyArgs),
    /// Show the errata ledger
    Errata(ErrataArgs),
}

#[derive(Args)]
struct NumArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    m: Option<f64>,
    #[arg(long)]
    n: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
}

impl NumArgs {
    fn params(&self) -> Params {
        let mut p = Params::new();
        for (name, v) in [
            ("a", self.a),
            ("b", self.b),
            ("k", self.k),
            ("m", self.m),
            ("n", self.n),
            ("p", self.p),
            ("r", self.r),
            ("s", self.s),
            ("x", self.x),
            ("y", self.y),
        ] {
            if let Some(v) = v {
                p.set(name, v);
            }
        }
        p
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalMethod {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Corrected,
    AsPrinted,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ErrataFormat {
    Table,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    /// Catalog id, e.g. eq2.13
    id: String,
    #[command(flatten)]
    nums: NumArgs,
    #[arg(long, value_enum, default_value = "closed")]
    method: EvalMethod,
    /// Evaluate the printed closed form where one is catalogued
    #[arg(long)]
    as_printed: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog id or `all`
    #[arg(long, default_value = "all")]
    identity: String,
    /// `builtin` or a JSON file of cases (or a previous report)
    #[arg(long, default_value = "builtin")]
    grid: String,
    /// Relative tolerance; defaults to 1e-7 for the builtin grid
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "corrected")]
    variant: VariantArg,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
}

#[derive(Args)]
struct ErrataArgs {
    #[arg(long, value_enum, default_value = "table")]
    format: ErrataFormat,
    /// Re-run the witnesses and fail if a documented refutation does not reproduce
    #[arg(long)]
    check: bool,
}

fn series_config() -> anyhow::Result<SeriesConfig> {
    let mut c = SeriesConfig::default();
    if let Ok(v) = std::env::var("EULERSUM_MAX_TERMS") {
        c.max_terms = v.trim().parse().with_context(|| format!("EULERSUM_MAX_TERMS={v} is not an integer"))?;
    }
    c.validate()?;
    Ok(c)
}

/// Shortest round-trip rendering, identical to the JSON encoding.
fn num(x: Option<f64>) -> String {
    x.map(|v| serde_json::to_string(&v).unwrap_or_default()).unwrap_or_default()
}

fn human(x: f64) -> String {
    if x == 0.0 || (1e-4..1e10).contains(&x.abs()) {
        format!("{x:.10}")
    } else {
        format!("{x:.9e}")
    }
}

fn print_result(label: &str, r: &EvalResult) {
    println!(
        "{label}: value={} error={} method={:?} work={}",
        human(r.value),
        human(r.abs_error_estimate),
        r.method,
        r.work
    );
}

fn cmd_eval(args: &EvalArgs) -> anyhow::Result<ExitCode> {
    let def = Catalog::get(&args.id).ok_or_else(|| anyhow!("unknown identity {}", args.id))?;
    let params = args.nums.params();
    if let Some(w) = params.0.get("k").and_then(|&k| precision_warning(k as u32)) {
        eprintln!("warning: {w}");
    }
    let variant = if args.as_printed { Variant::AsPrinted } else { Variant::Corrected };
    if args.as_printed && !def.has_printed {
        eprintln!("note: {} has no separate printed form", def.id);
    }
    let config = series_config()?;
    if args.method != EvalMethod::Oracle {
        let v = Catalog::closed_form(def.id, &params, variant)?;
        print_result("closed", &EvalResult::closed(v));
    }
    if args.method != EvalMethod::Closed {
        let r = Catalog::oracle(def.id, &params, &config)?;
        print_result("oracle", &r);
    }
    Ok(ExitCode::SUCCESS)
}

fn load_grid(path: &str) -> anyhow::Result<Vec<IdentityCase>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading grid {path}"))?;
    if let Ok(doc) = serde_json::from_str::<ReportDocument>(&text) {
        return Ok(doc.records.iter().map(ReportRow::case).collect());
    }
    serde_json::from_str(&text).with_context(|| format!("parsing grid {path}"))
}

fn builtin_cases(tol: f64, variant: VariantArg) -> Vec<IdentityCase> {
    let mut seen = HashSet::new();
    let mut base = Vec::new();
    for c in builtin_suite(tol) {
        if seen.insert((c.identity_id.clone(), c.params.to_string())) {
            base.push(IdentityCase { variant: Variant::Corrected, ..c });
        }
    }
    let printed = || {
        base.iter()
            .filter(|c| Catalog::get(&c.identity_id).is_some_and(|d| d.has_printed) && c.identity_id != "eq2.20")
            .map(|c| IdentityCase { variant: Variant::AsPrinted, ..c.clone() })
            .collect::<Vec<_>>()
    };
    match variant {
        VariantArg::Corrected => base.clone(),
        VariantArg::AsPrinted => printed(),
        VariantArg::Both => {
            let p = printed();
            base.iter().cloned().chain(p).collect()
        }
    }
}

fn write_csv(out: &mut dyn Write, doc: &ReportDocument) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["identity", "variant", "params", "closed", "oracle", "abs_residual", "rel_residual", "status"])?;
    for r in &doc.records {
        w.write_record([
            r.identity.clone(),
            r.variant.to_string(),
            r.params.to_string(),
            num(r.closed),
            num(r.oracle),
            num(r.abs_residual),
            num(r.rel_residual),
            r.status.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    if args.identity != "all" && Catalog::get(&args.identity).is_none() {
        bail!("unknown identity {}", args.identity);
    }
    if let Some(t) = args.tol {
        if !(t > 0.0) {
            bail!("--tol must be > 0, got {t}");
        }
    }
    let config = series_config()?;
    let mut cases = if args.grid == "builtin" {
        builtin_cases(args.tol.unwrap_or(DEFAULT_TOL), args.variant)
    } else {
        let keep = |v: Variant| match args.variant {
            VariantArg::Corrected => v == Variant::Corrected,
            VariantArg::AsPrinted => v == Variant::AsPrinted,
            VariantArg::Both => true,
        };
        let mut cases: Vec<_> = load_grid(&args.grid)?.into_iter().filter(|c| keep(c.variant)).collect();
        if let Some(t) = args.tol {
            cases.iter_mut().for_each(|c| c.tol = t);
        }
        cases
    };
    if args.identity != "all" {
        cases.retain(|c| c.identity_id == args.identity);
    }
    let start = Instant::now();
    let records = grid_verify(&cases, &config);
    let doc = ReportDocument::new(config, &records, start.elapsed().as_millis() as u64);
    let mut out: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(p).with_context(|| format!("creating {p}"))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    };
    match args.format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => write_csv(&mut out, &doc)?,
    }
    out.flush()?;
    let s = doc.summary;
    eprintln!(
        "{} cases: {} confirmed, {} refuted, {} inconclusive ({} ms)",
        doc.records.len(),
        s.confirmed,
        s.refuted,
        s.inconclusive,
        s.wall_time_ms
    );
    let regression = records.iter().any(|r| r.case.variant == Variant::Corrected && r.status == Status::Refuted);
    Ok(if regression { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_errata(args: &ErrataArgs) -> anyhow::Result<ExitCode> {
    let checks = if args.check { Some(check_errata(&series_config()?)) } else { None };
    match args.format {
        ErrataFormat::Json => {
            let rows: Vec<_> = LEDGER
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let mut v = serde_json::to_value(e).expect("ledger rows serialize");
                    if let Some(c) = checks.as_ref().map(|c| &c[i]) {
                        v["check"] = serde_json::to_value(c).expect("checks serialize");
                    }
                    v
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
        ErrataFormat::Table => {
            println!("{:<10} {:<18} {:<14} {:<62} correction", "identity", "witness", "residual", "issue");
            for (i, e) in LEDGER.iter().enumerate() {
                let witness: Vec<String> = e.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let residual = match (checks.as_ref(), e.documented_residual) {
                    (Some(c), _) if c[i].residual.is_finite() => human(c[i].residual),
                    (_, Some(d)) => human(d),
                    _ => "n/a".to_string(),
                };
                println!("{:<10} {:<18} {:<14} {:<62} {}", e.identity, witness.join(","), residual, e.issue, e.correction);
            }
            if let Some(c) = &checks {
                for (e, c) in LEDGER.iter().zip(c) {
                    let fmt = |s: Option<Status>| s.map_or("-".to_string(), |s| s.to_string());
                    println!(
                        "check {:<10} printed={:<12} corrected={:<12} reproduced={}",
                        e.identity,
                        fmt(c.printed_status),
                        fmt(c.corrected_status),
                        c.reproduced
                    );
                }
            }
        }
    }
    let failed = checks.is_some_and(|c| c.iter().any(|c| !c.reproduced));
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Errata(a) => cmd_errata(a),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
