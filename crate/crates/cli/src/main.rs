//! `bary`: exact b-ary binomial coefficients, expansions, defect tables and
//! identity sweeps from the command line.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use bary_core::exec::with_workers;
use bary_core::identities::{defect_matrix, table1_matrix, DefectMatrix, IdentityReport, Suite, Sweep};
use bary_core::partitions::{enumerate_partitions, enumerate_restricted};
use bary_core::{bary_binom, gf_expand, to_digits, AltVariant, BaryQuery, Exec, Method, Point};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const WORKERS_VAR: &str = "BARY_WORKERS";
const MAX_WITNESSES: usize = 20;

#[derive(Parser)]
#[command(name = "bary", version, about = "Exact b-ary binomial coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum VariantArg {
    #[default]
    Std,
    Star,
    Dstar,
}

impl VariantArg {
    fn alt(self) -> Option<AltVariant> {
        match self {
            VariantArg::Std => None,
            VariantArg::Star => Some(AltVariant::Star),
            VariantArg::Dstar => Some(AltVariant::DoubleStar),
        }
    }

    fn name(self) -> &'static str {
        self.alt().map_or("std", AltVariant::name)
    }
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum MethodArg {
    #[default]
    Auto,
    Series,
    Partition,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Series => Method::Series,
            MethodArg::Partition => Method::Partition,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum At {
    Zero,
    Infinity,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Table1,
    PascalDefect,
}

#[derive(Subcommand)]
enum Command {
    /// Print binom(n, k)_b.
    Binom {
        #[arg(long)]
        base: u32,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the first `order` terms of the expansion of f_{n,b}.
    Expand {
        #[arg(long)]
        base: u32,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum)]
        at: At,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a Pascal defect matrix, rows n = 1..nmax, columns k = 1..kmax.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 4)]
        base: u32,
        #[arg(long, value_enum, default_value_t)]
        variant: VariantArg,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 19)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sweep one identity suite (or all of them) and report failures.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteArg,
        /// Restrict the sweep to this base.
        #[arg(long)]
        base: Option<u32>,
        /// Restrict the Lucas sweep to this prime.
        #[arg(long)]
        prime: Option<u32>,
        #[arg(long)]
        nmax: Option<i64>,
        #[arg(long)]
        kmax: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the partitions of k into parts 1, b, ..., b^(len-1).
    Partitions {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        len: usize,
        /// Require j_l >= the digits of this value; fixes the length.
        #[arg(long)]
        restrict: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy)]
enum SuiteArg {
    One(Suite),
    All,
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    Suite::from_id(s).map(SuiteArg::One).ok_or_else(|| {
        let ids: Vec<&str> = Suite::ALL.iter().map(|s| s.id()).collect();
        format!("unknown suite; expected one of: {}, all", ids.join(", "))
    })
}

/// Output written to stdout, diagnostics to stderr, and the exit status.
struct Outcome {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

fn workers() -> Result<usize, String> {
    match std::env::var(WORKERS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&w| w >= 1)
            .ok_or_else(|| format!("{WORKERS_VAR} must be a positive integer, got {v:?}")),
    }
}

fn line(out: &mut String, fields: &[String]) {
    out.push_str(&fields.join("\t"));
    out.push('\n');
}

fn json_line(out: &mut String, value: Value) {
    let _ = writeln!(out, "{value}");
}

fn binom_cmd(
    base: u32,
    n: i64,
    k: i64,
    variant: VariantArg,
    method: MethodArg,
    format: Format,
) -> bary_core::Result<String> {
    let value = match variant.alt() {
        None => bary_binom(&BaryQuery::new(n, k, base).with_method(method.into()))?,
        Some(v) => v.eval(n, k, base)?,
    };
    Ok(match format {
        Format::Tsv => format!("{value}\n"),
        Format::Json => format!(
            "{}\n",
            json!({
                "base": base.to_string(),
                "n": n.to_string(),
                "k": k.to_string(),
                "variant": variant.name(),
                "value": value.to_string(),
            })
        ),
    })
}

fn expand_cmd(base: u32, n: i64, at: At, order: usize, format: Format) -> bary_core::Result<String> {
    let point = match at {
        At::Zero => Point::Zero,
        At::Infinity => Point::Infinity,
    };
    let series = gf_expand(n, base, point, order)?;
    let mut out = String::new();
    if let Format::Tsv = format {
        line(&mut out, &["exponent".into(), "coefficient".into()]);
    }
    for (i, c) in series.coeffs().iter().enumerate() {
        let e = series.x_exponent(i).to_string();
        match format {
            Format::Tsv => line(&mut out, &[e, c.to_string()]),
            Format::Json => json_line(&mut out, json!({"exponent": e, "coefficient": c.to_string()})),
        }
    }
    Ok(out)
}

fn table_out(m: &DefectMatrix, format: Format) -> String {
    let mut out = String::new();
    if let Format::Tsv = format {
        let header: Vec<String> = std::iter::once("n".to_string())
            .chain((1..=m.cols()).map(|k| k.to_string()))
            .collect();
        line(&mut out, &header);
    }
    for (i, row) in m.entries.iter().enumerate() {
        let n = (i + 1).to_string();
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        match format {
            Format::Tsv => line(&mut out, &[vec![n], cells].concat()),
            Format::Json => json_line(&mut out, json!({"n": n, "values": cells})),
        }
    }
    out
}

fn table_cmd(
    kind: TableKind,
    base: u32,
    variant: VariantArg,
    nmax: usize,
    kmax: usize,
    format: Format,
) -> bary_core::Result<String> {
    let m = match kind {
        TableKind::Table1 => table1_matrix(),
        TableKind::PascalDefect => defect_matrix(base, variant.alt(), nmax, kmax)?,
    };
    Ok(table_out(&m, format))
}

struct Overrides {
    base: Option<u32>,
    prime: Option<u32>,
    nmax: Option<i64>,
    kmax: Option<i64>,
}

fn sweep_for(suite: Suite, o: &Overrides, exec: Exec) -> Sweep {
    let mut sweep = suite.default_sweep().with_exec(exec);
    let restrict = if suite == Suite::Lucas { o.prime.or(o.base) } else { o.base };
    if let Some(b) = restrict {
        sweep.bases = vec![b];
    }
    if let Some(n) = o.nmax {
        sweep.n_max = n;
    }
    if let Some(k) = o.kmax {
        sweep.k_max = k;
    }
    sweep
}

fn verify_cmd(suite: SuiteArg, o: &Overrides, format: Format, exec: Exec) -> bary_core::Result<Outcome> {
    let suites = match suite {
        SuiteArg::One(s) => vec![s],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let reports: Vec<IdentityReport> = suites
        .iter()
        .map(|&s| s.run(&sweep_for(s, o, exec)))
        .collect::<bary_core::Result<_>>()?;

    let mut stdout = String::new();
    let mut stderr = String::new();
    if let Format::Tsv = format {
        let header = ["suite", "status", "checked", "skipped", "failures", "domain"];
        line(&mut stdout, &header.map(String::from));
    }
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        match format {
            Format::Tsv => {
                line(
                    &mut stdout,
                    &[
                        r.identity_id.clone(),
                        status.into(),
                        r.checked.to_string(),
                        r.skipped.to_string(),
                        r.failures.len().to_string(),
                        r.domain.clone(),
                    ],
                );
                for w in r.failures.iter().take(MAX_WITNESSES) {
                    let _ = writeln!(stderr, "{}\t{w}", r.identity_id);
                }
                if r.failures.len() > MAX_WITNESSES {
                    let _ = writeln!(
                        stderr,
                        "{}\t... {} more witnesses",
                        r.identity_id,
                        r.failures.len() - MAX_WITNESSES
                    );
                }
            }
            Format::Json => {
                let witnesses: Vec<Value> = r
                    .failures
                    .iter()
                    .take(MAX_WITNESSES)
                    .map(|w| {
                        let inputs: serde_json::Map<String, Value> =
                            w.inputs.iter().map(|(k, v)| (k.to_string(), v.to_string().into())).collect();
                        json!({"inputs": inputs, "lhs": w.lhs.to_string(), "rhs": w.rhs.to_string()})
                    })
                    .collect();
                json_line(
                    &mut stdout,
                    json!({
                        "suite": r.identity_id,
                        "status": status,
                        "checked": r.checked.to_string(),
                        "skipped": r.skipped.to_string(),
                        "failures": r.failures.len().to_string(),
                        "domain": r.domain,
                        "witnesses": witnesses,
                    }),
                );
            }
        }
    }
    let code = if reports.iter().all(IdentityReport::passed) { 0 } else { 1 };
    Ok(Outcome { stdout, stderr, code })
}

fn partitions_cmd(
    base: u32,
    k: u64,
    len: usize,
    restrict: Option<i64>,
    format: Format,
) -> bary_core::Result<String> {
    let tuples = match restrict {
        Some(n) => enumerate_restricted(k, &to_digits(n, base, 0)?)?,
        None => enumerate_partitions(k, base, len)?,
    };
    let mut out = String::new();
    if let Format::Tsv = format {
        line(&mut out, &["partition".into()]);
    }
    for t in tuples {
        match format {
            Format::Tsv => line(&mut out, &[t.to_string()]),
            Format::Json => {
                let parts: Vec<String> = t.parts().iter().map(ToString::to_string).collect();
                json_line(&mut out, json!({ "parts": parts }))
            }
        }
    }
    Ok(out)
}

fn run(cli: Cli, exec: Exec) -> bary_core::Result<Outcome> {
    match cli.command {
        Command::Binom {
            base,
            n,
            k,
            variant,
            method,
            format,
        } => binom_cmd(base, n, k, variant, method, format).map(Outcome::ok),
        Command::Expand {
            base,
            n,
            at,
            order,
            format,
        } => expand_cmd(base, n, at, order, format).map(Outcome::ok),
        Command::Table {
            kind,
            base,
            variant,
            nmax,
            kmax,
            format,
        } => table_cmd(kind, base, variant, nmax, kmax, format).map(Outcome::ok),
        Command::Verify {
            suite,
            base,
            prime,
            nmax,
            kmax,
            format,
        } => verify_cmd(
            suite,
            &Overrides {
                base,
                prime,
                nmax,
                kmax,
            },
            format,
            exec,
        ),
        Command::Partitions {
            base,
            k,
            len,
            restrict,
            format,
        } => partitions_cmd(base, k, len, restrict, format).map(Outcome::ok),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let workers = match workers() {
        Ok(w) => w,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match with_workers(workers, |exec| run(cli, exec)) {
        Ok(outcome) => {
            let _ = std::io::stdout().lock().write_all(outcome.stdout.as_bytes());
            let _ = std::io::stderr().lock().write_all(outcome.stderr.as_bytes());
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
