//! Batch command line interface over the exact Hilbert depth library.
//!
//! Exit codes are a stable contract for CI: 0 for success or an all-pass
//! sweep, 1 for a mathematical failure (a mismatching row, a failed audit
//! point, or an input that is not a Hilbert series), 2 for usage and
//! parse errors.  All big integers cross the JSON boundary as decimal
//! strings, and every table is emitted in a fixed lexicographic order.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbert_depth::audit::grids::{run_named_check, GridBounds, CHECK_NAMES};
use hilbert_depth::audit::{DEFAULT_MARGIN, DEFAULT_SEED};
use hilbert_depth::{
    decompose, hdepth_via_multiplication, hdepth_via_numerator, power_ideal_series,
    syzygy_hilbert_closed, syzygy_hilbert_left, syzygy_hilbert_right, verify_decomposition,
    Certificate, Int, LaurentPolynomial, PowerIdealParams, Series, SyzygyParams,
};

#[derive(Parser)]
#[command(
    name = "hilbert",
    version,
    about = "Exact Hilbert depth of graded modules from their Hilbert series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Hilbert depth of a series, with certificates.
    Hdepth {
        #[command(flatten)]
        input: SeriesInput,
        /// Also print a decomposition witnessing the depth.
        #[arg(long)]
        decompose: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Split a series into nonnegative parts, one per level.
    Decompose {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the expansion coefficients of a series up to a degree.
    Expand {
        #[command(flatten)]
        input: SeriesInput,
        /// Highest degree to expand to.
        #[arg(long, value_name = "DEGREE", allow_negative_numbers = true)]
        upto: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Tabulate computed depth against ceil(n / (s + 1)) over a grid.
    PowerTable {
        /// Largest number of variables.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        nmax: u32,
        /// Largest power of the maximal ideal.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        smax: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate the three syzygy Hilbert function formulas and compare.
    Syzygy {
        /// Number of variables.
        #[arg(long)]
        n: u32,
        /// Number of quotiented variables, at most n.
        #[arg(long)]
        r: u32,
        /// Syzygy index, between 1 and r.
        #[arg(long)]
        u: u32,
        /// Highest degree to evaluate.
        #[arg(long, default_value_t = 20, value_name = "DEGREE")]
        kmax: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run one named verification sweep and report its failures.
    Audit(AuditArgs),
}

/// One input series: a catalog power ideal or an explicit numerator.
#[derive(Args)]
struct SeriesInput {
    /// Power of the maximal ideal, as `n=<vars> s=<power>`.
    #[arg(long, num_args = 2, value_name = "KEY=VALUE")]
    power: Option<Vec<String>>,
    /// Numerator polynomial: text `offset:c0,c1,...` or JSON
    /// `{"offset": o, "coeffs": ["c0", ...]}`.
    #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
    numerator: Option<String>,
    /// Denominator exponent for --numerator.
    #[arg(long, value_name = "EXPONENT")]
    n: Option<u32>,
}

#[derive(Args)]
struct AuditArgs {
    /// One of: lemma4, syzygy-triple, prop0, prop1, lemma1, lemma5,
    /// eq14, eq15, eq19, eq5, eq7, lemma3.
    check: String,
    /// Cubic bound for the triple identity grid.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max: Option<u32>,
    /// Bound for n.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    nmax: Option<u32>,
    /// Bound for s.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    smax: Option<u32>,
    /// Bound for the degree k.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    kmax: Option<i64>,
    /// Bound for l.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    lmax: Option<u32>,
    /// Number of random points for the sampled checks.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    points: Option<u64>,
    /// Pass margin for the floating point inequalities.
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    margin: f64,
    /// Seed for the sampled checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

struct Abort {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Abort {
    Abort {
        code: 2,
        message: message.into(),
    }
}

fn failed(message: impl Into<String>) -> Abort {
    Abort {
        code: 1,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    match run(&Cli::parse()) {
        Ok(code) => code,
        Err(abort) => {
            eprintln!("error: {}", abort.message);
            ExitCode::from(abort.code)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Abort> {
    match &cli.command {
        Command::Hdepth {
            input,
            decompose,
            format,
        } => run_hdepth(input, *decompose, *format),
        Command::Decompose { input, format } => run_decompose(input, *format),
        Command::Expand {
            input,
            upto,
            format,
        } => run_expand(input, *upto, *format),
        Command::PowerTable { nmax, smax, format } => run_power_table(*nmax, *smax, *format),
        Command::Syzygy {
            n,
            r,
            u,
            kmax,
            format,
        } => run_syzygy(*n, *r, *u, *kmax, *format),
        Command::Audit(args) => run_audit(args),
    }
}

impl SeriesInput {
    fn parse(&self) -> Result<Series, Abort> {
        match (&self.power, &self.numerator, self.n) {
            (Some(tokens), None, None) => {
                let (n, s) = parse_power_tokens(tokens)?;
                Ok(power_ideal_series(&PowerIdealParams::new(n, s)))
            }
            (None, Some(text), Some(n)) => Ok(Series::new(parse_poly(text)?, n)),
            (None, Some(_), None) => Err(usage("--numerator needs --n <exponent>")),
            (None, None, Some(_)) => Err(usage("--n needs --numerator <poly>")),
            (None, None, None) => Err(usage(
                "give a series: --power n=<vars> s=<power>, or --numerator <poly> --n <exponent>",
            )),
            _ => Err(usage("--power conflicts with --numerator and --n")),
        }
    }
}

fn parse_power_tokens(tokens: &[String]) -> Result<(u32, u32), Abort> {
    let mut n = None;
    let mut s = None;
    for token in tokens {
        let Some((key, value)) = token.split_once('=') else {
            return Err(usage(format!(
                "expected key=value after --power, got `{token}`"
            )));
        };
        let slot = match key {
            "n" => &mut n,
            "s" => &mut s,
            _ => return Err(usage(format!("unknown power parameter `{key}`"))),
        };
        if slot.is_some() {
            return Err(usage(format!("duplicate power parameter `{key}`")));
        }
        match value.parse::<u32>() {
            Ok(parsed) if parsed >= 1 => *slot = Some(parsed),
            _ => {
                return Err(usage(format!(
                    "`{key}` needs a positive integer, got `{value}`"
                )))
            }
        }
    }
    match (n, s) {
        (Some(n), Some(s)) => Ok((n, s)),
        _ => Err(usage("--power needs both n=<vars> and s=<power>")),
    }
}

fn parse_poly(text: &str) -> Result<LaurentPolynomial, Abort> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| usage(format!("bad JSON polynomial: {e}")))
    } else {
        trimmed
            .parse()
            .map_err(|e| usage(format!("bad polynomial: {e}")))
    }
}

fn describe(certificate: &Certificate) -> String {
    match certificate {
        Certificate::Positive { tail_bound } => format!(
            "positive (coefficients scanned through degree {tail_bound}, nonnegative tail beyond)"
        ),
        Certificate::NegativeAt { degree, value } => {
            format!("first negative coefficient {value} at degree {degree}")
        }
    }
}

fn run_hdepth(input: &SeriesInput, with_parts: bool, format: Format) -> Result<ExitCode, Abort> {
    let series = input.parse()?;
    let report = hdepth_via_numerator(&series).map_err(|e| failed(e.to_string()))?;
    let via_multiplication =
        hdepth_via_multiplication(&series).map_err(|e| failed(e.to_string()))?;
    if report.hdepth != via_multiplication {
        return Err(failed(format!(
            "depth characterizations disagree: {} via the numerator, {via_multiplication} via multiplication",
            report.hdepth
        )));
    }
    let decomposition = if with_parts {
        let d = decompose(&series).map_err(|e| failed(e.to_string()))?;
        if !verify_decomposition(&d, &series) {
            return Err(failed("constructed decomposition failed verification"));
        }
        Some(d)
    } else {
        None
    };

    match format {
        Format::Text => {
            println!("hdepth = {}", report.hdepth);
            println!("via multiplication = {via_multiplication}");
            println!(
                "certificate at depth: {}",
                describe(&report.certificate_at_d)
            );
            match &report.certificate_above_d {
                Some(cert) => println!("certificate above depth: {}", describe(cert)),
                None => println!(
                    "certificate above depth: none (depth equals the denominator exponent)"
                ),
            }
            if let Some(d) = &decomposition {
                println!("decomposition:");
                for part in &d.parts {
                    println!("  level {}: {}", part.level, part.numerator);
                }
            }
        }
        Format::Csv => {
            let tail_bound = match &report.certificate_at_d {
                Certificate::Positive { tail_bound } => tail_bound.to_string(),
                Certificate::NegativeAt { .. } => String::new(),
            };
            let (refuted_degree, refuted_value) = match &report.certificate_above_d {
                Some(Certificate::NegativeAt { degree, value }) => {
                    (degree.to_string(), value.to_string())
                }
                _ => (String::new(), String::new()),
            };
            println!("hdepth,via_multiplication,tail_bound,refuted_degree,refuted_value");
            println!(
                "{},{via_multiplication},{tail_bound},{refuted_degree},{refuted_value}",
                report.hdepth
            );
            if let Some(d) = &decomposition {
                println!();
                print_parts_csv(d);
            }
        }
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("report serializes");
            let object = value.as_object_mut().expect("report is an object");
            object.insert("viaMultiplication".into(), via_multiplication.into());
            let parts = match &decomposition {
                Some(d) => serde_json::to_value(d).expect("decomposition serializes"),
                None => serde_json::Value::Null,
            };
            object.insert("decomposition".into(), parts);
            println!("{value}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_parts_csv(decomposition: &hilbert_depth::HilbertDecomposition<Int>) {
    println!("level,numerator");
    for part in &decomposition.parts {
        println!("{},{}", part.level, csv_field(&part.numerator.to_string()));
    }
}

fn run_decompose(input: &SeriesInput, format: Format) -> Result<ExitCode, Abort> {
    let series = input.parse()?;
    let decomposition = decompose(&series).map_err(|e| failed(e.to_string()))?;
    if !verify_decomposition(&decomposition, &series) {
        return Err(failed("constructed decomposition failed verification"));
    }
    match format {
        Format::Text => {
            println!("hdepth = {}", decomposition.min_level);
            for part in &decomposition.parts {
                println!("level {}: {}", part.level, part.numerator);
            }
        }
        Format::Csv => print_parts_csv(&decomposition),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(&decomposition).expect("decomposition serializes")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_expand(input: &SeriesInput, upto: i64, format: Format) -> Result<ExitCode, Abort> {
    let series = input.parse()?;
    let offset = series.numerator().offset();
    if upto < offset {
        return Err(usage(format!(
            "--upto {upto} is below the numerator offset {offset}"
        )));
    }
    let prefix = series.expand(upto);
    match format {
        Format::Text => {
            let rendered: Vec<String> = prefix.coeffs().iter().map(|c| c.to_string()).collect();
            println!("{}:{}", prefix.offset(), rendered.join(","));
        }
        Format::Csv => {
            println!("degree,coefficient");
            for (i, c) in prefix.coeffs().iter().enumerate() {
                println!("{},{c}", prefix.offset() + i as i64);
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string(&prefix).expect("prefix serializes")
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_power_table(nmax: u32, smax: u32, format: Format) -> Result<ExitCode, Abort> {
    let mut rows = Vec::new();
    for n in 1..=nmax {
        for s in 1..=smax {
            let series: Series = power_ideal_series(&PowerIdealParams::new(n, s));
            let computed = hdepth_via_numerator(&series)
                .map_err(|e| failed(e.to_string()))?
                .hdepth;
            rows.push((n, s, computed, n.div_ceil(s + 1)));
        }
    }
    let mismatches = rows
        .iter()
        .filter(|(_, _, computed, closed)| computed != closed)
        .count();

    match format {
        Format::Text => {
            println!(
                "{:>4} {:>4} {:>9} {:>12} match",
                "n", "s", "computed", "closed_form"
            );
            for (n, s, computed, closed) in &rows {
                let flag = if computed == closed { "yes" } else { "NO" };
                println!("{n:>4} {s:>4} {computed:>9} {closed:>12} {flag}");
            }
        }
        Format::Csv => {
            println!("n,s,computed,closed_form,match");
            for (n, s, computed, closed) in &rows {
                println!("{n},{s},{computed},{closed},{}", computed == closed);
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, s, computed, closed)| {
                    serde_json::json!({
                        "n": n,
                        "s": s,
                        "computed": computed,
                        "closedForm": closed,
                        "match": computed == closed,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    if mismatches > 0 {
        eprintln!("error: {mismatches} rows disagree with the closed form");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_syzygy(n: u32, r: u32, u: u32, kmax: i64, format: Format) -> Result<ExitCode, Abort> {
    if !(1 <= u && u <= r && r <= n) {
        return Err(usage(format!(
            "syzygy parameters need 1 <= u <= r <= n, got u = {u}, r = {r}, n = {n}"
        )));
    }
    if kmax < 0 {
        return Err(usage(format!("--kmax must be nonnegative, got {kmax}")));
    }
    let mut rows = Vec::new();
    for k in 0..=kmax {
        let params = SyzygyParams::new(n, r, u, k);
        let right: Int = syzygy_hilbert_right(&params);
        let left: Int = syzygy_hilbert_left(&params);
        let closed: Int = syzygy_hilbert_closed(&params);
        rows.push((k, right, left, closed));
    }
    let mismatches = rows
        .iter()
        .filter(|(_, right, left, closed)| !(right == left && left == closed))
        .count();

    match format {
        Format::Text => {
            for (k, right, left, closed) in &rows {
                let flag = if right == left && left == closed {
                    ""
                } else {
                    " MISMATCH"
                };
                println!("k={k} right={right} left={left} closed={closed}{flag}");
            }
        }
        Format::Csv => {
            println!("k,right,left,closed,match");
            for (k, right, left, closed) in &rows {
                println!(
                    "{k},{right},{left},{closed},{}",
                    right == left && left == closed
                );
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(k, right, left, closed)| {
                    serde_json::json!({
                        "k": k,
                        "right": right.to_string(),
                        "left": left.to_string(),
                        "closed": closed.to_string(),
                        "match": right == left && left == closed,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    if mismatches > 0 {
        eprintln!("error: {mismatches} degrees break the triple equality");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_audit(args: &AuditArgs) -> Result<ExitCode, Abort> {
    if args.margin.is_nan() || args.margin <= 0.0 {
        return Err(usage(format!(
            "--margin must be positive, got {}",
            args.margin
        )));
    }
    let bounds = GridBounds {
        max: args.max,
        n_max: args.nmax,
        s_max: args.smax,
        k_max: args.kmax,
        l_max: args.lmax,
        points: args.points,
    };
    let Some(report) = run_named_check(&args.check, &bounds, args.margin, args.seed) else {
        return Err(usage(format!(
            "unknown check `{}`; expected one of: {}",
            args.check,
            CHECK_NAMES.join(", ")
        )));
    };

    match args.format {
        Format::Text => {
            println!(
                "check {}: {} points, {} failures",
                report.check_name,
                report.total_points,
                report.failures.len()
            );
            println!("grid: {}", report.grid_description);
            for failure in &report.failures {
                println!(
                    "fail {}: lhs={} rhs={}",
                    failure.parameters, failure.lhs, failure.rhs
                );
            }
        }
        Format::Csv => {
            println!("parameters,lhs,rhs");
            for failure in &report.failures {
                println!(
                    "{},{},{}",
                    csv_field(&failure.parameters),
                    csv_field(&failure.lhs),
                    csv_field(&failure.rhs)
                );
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        ),
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline.
fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}
