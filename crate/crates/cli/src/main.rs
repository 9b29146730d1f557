use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qfrac::contfrac::{
    build_catalog_cf, convergent, eval_finite_with, eval_series_depth, CatalogCf, CfArgs,
};
use qfrac::identities::{
    find_case, list_identities, verify_all_with, verify_with, IdentityReport, VerifyOptions,
};
use qfrac::partitions::{
    colored_table, colored_table_csv, count_colored, count_partitions, enumerate_colored,
    enumerate_partitions, PartSpec, Variant,
};
use qfrac::qseries::{series_to_json, ExactRational, QSeries};
use qfrac::realeval::{eval_cf_real, singular_value_check, Constant, SingularValueCase};
use qfrac::QfracError;

#[derive(Parser, Debug)]
#[command(
    name = "qfrac",
    version,
    about = "Exact q-series, continued fractions and partition identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check catalog identities coefficientwise.
    Verify(VerifyArgs),
    /// Expand a catalog fraction or both sides of a catalog identity.
    Expand(ExpandArgs),
    /// Count (or list) partitions of k with a part specification.
    Partitions(PartitionArgs),
    /// Count colored partitions, or tabulate them.
    Colored(ColoredArgs),
    /// Evaluate a numeric continued fraction.
    Real(RealArgs),
    /// List catalog identities.
    List,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "id", required_unless_present = "id")]
    all: bool,
    /// Identity id; may be repeated.
    #[arg(long)]
    id: Vec<String>,
    #[arg(long, default_value_t = 40)]
    order: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    parallel: bool,
    /// Report elapsed_ms as 0.
    #[arg(long)]
    no_timings: bool,
    #[arg(long, hide = true)]
    corrupt: Vec<String>,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    /// Catalog fraction key (R_AB, F_AC, THM_2_1, ...).
    #[arg(long, conflicts_with = "id", required_unless_present = "id")]
    cf: Option<String>,
    /// Catalog identity id; prints every component's two sides.
    #[arg(long)]
    id: Option<String>,
    #[arg(long, default_value_t = 10)]
    order: usize,
    /// Convergent depth; omitted means evaluate until stable.
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    c: Option<String>,
    /// q-exponents of the terms for THM_2_1, THM_2_2 and EULER, e.g. `1,2,3`.
    #[arg(long, value_delimiter = ',')]
    q_terms: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    #[arg(long)]
    k: u64,
    /// Allowed parts: `1..5`, `1,2,4`, `1..20:2`.
    #[arg(long)]
    parts: String,
    #[arg(long)]
    distinct: bool,
    /// Also list the partitions.
    #[arg(long)]
    enumerate: bool,
}

#[derive(Args, Debug)]
struct ColoredArgs {
    /// AN, BN, CN, AD, BD or CD; repeatable with --table.
    #[arg(long)]
    variant: Vec<String>,
    #[arg(long, required_unless_present = "table")]
    n: Option<u32>,
    #[arg(long, required_unless_present = "table")]
    i: Option<u32>,
    #[arg(long, required_unless_present = "table")]
    j: Option<u32>,
    /// Also list the partitions.
    #[arg(long, conflicts_with = "table")]
    enumerate: bool,
    /// Tabulate counts for n <= n-max, i <= i-max, j <= j-max.
    #[arg(long)]
    table: bool,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    #[arg(long, default_value_t = 2)]
    i_max: u32,
    #[arg(long, default_value_t = 2)]
    j_max: u32,
}

#[derive(Args, Debug)]
struct RealArgs {
    /// pi, e, ln2, rr or singular.
    #[arg(long = "const")]
    constant: String,
    #[arg(long, default_value_t = 1000)]
    depth: usize,
}

/// Outcome of a verb: text for stdout plus an exit code.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn parse_rational(s: &Option<String>) -> Result<Option<ExactRational>, QfracError> {
    s.as_deref().map(str::parse).transpose()
}

fn verify(args: VerifyArgs, format: Format) -> Result<Output, QfracError> {
    let opts = VerifyOptions {
        order: args.order,
        seed: args.seed,
        parallel: args.parallel,
        corrupt: args.corrupt,
    };
    let mut reports: Vec<IdentityReport> = if args.all {
        verify_all_with(&opts)
    } else {
        let mut ids = args.id.clone();
        ids.sort();
        ids.dedup();
        ids.iter()
            .map(|id| verify_with(id, &opts))
            .collect::<Result<_, _>>()?
    };
    if args.no_timings {
        reports.iter_mut().for_each(|r| r.elapsed_ms = 0);
    }
    let code = if reports.iter().all(IdentityReport::passed) {
        0
    } else {
        1
    };
    let text = match format {
        Format::Json => serde_json::to_string(&reports).expect("serializable"),
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for r in &reports {
                let status = serde_json::to_value(r.status).expect("serializable");
                s.push_str(&format!(
                    "{} {} order={} depth={} {}ms",
                    r.id,
                    status.as_str().unwrap_or_default(),
                    r.order,
                    r.depth,
                    r.elapsed_ms
                ));
                if let Some(m) = &r.first_mismatch {
                    s.push_str(&format!(
                        " first_mismatch q^{} a^{} b^{} c^{}: {} != {}",
                        m.q, m.ea, m.eb, m.ec, m.lhs, m.rhs
                    ));
                }
                if let Some(c) = &r.cause {
                    s.push_str(&format!(" cause: {c}"));
                }
                s.push('\n');
            }
            s.pop();
            s
        }
    };
    Ok(Output { text, code })
}

fn series_value(s: &QSeries) -> Value {
    serde_json::to_value(series_to_json(s)).expect("serializable")
}

fn expand(args: ExpandArgs) -> Result<Output, QfracError> {
    if let Some(id) = &args.id {
        let case = find_case(id)?;
        let cmp = (case.build)(&qfrac::identities::Ctx {
            order: args.order,
            seed: args.seed,
        })?;
        let components: Vec<Value> = cmp
            .pairs
            .iter()
            .map(|(l, r)| json!({"lhs": series_value(l), "rhs": series_value(r)}))
            .collect();
        return Ok(Output::ok(json_text(&json!({
            "id": case.id,
            "order": cmp.order.unwrap_or(args.order),
            "depth": cmp.depth,
            "components": components,
        }))));
    }
    let key: CatalogCf = args.cf.as_deref().unwrap_or_default().parse()?;
    let cf_args = CfArgs {
        a: parse_rational(&args.a)?,
        b: parse_rational(&args.b)?,
        c: parse_rational(&args.c)?,
        ..CfArgs::default()
    };
    if key.uses_terms() && args.q_terms.is_empty() {
        return Err(QfracError::Usage(format!("{key} needs --q-terms")));
    }
    let terms = |w: usize| {
        args.q_terms
            .iter()
            .map(|&e| QSeries::q_power(e, w))
            .collect::<Vec<_>>()
    };
    let order = args.order;
    let (value, depth) = match (key.uses_terms(), args.depth) {
        (true, depth) => {
            let depth = depth.unwrap_or(usize::MAX);
            let v = eval_finite_with(
                |w| build_catalog_cf(key, &cf_args.clone().with_terms(terms(w)), depth, w),
                order,
            )?;
            (
                v,
                build_catalog_cf(key, &cf_args.clone().with_terms(terms(0)), depth, 0)?.depth(),
            )
        }
        (false, Some(depth)) => {
            let cf = build_catalog_cf(key, &cf_args, depth, order)?;
            let c = convergent(&cf, depth)?;
            (c.p.div(&c.q)?, depth)
        }
        (false, None) => {
            let guard = qfrac::contfrac::default_depth_guard(order);
            let cf = build_catalog_cf(key, &cf_args, guard, order)?;
            eval_series_depth(&cf, order)?
        }
    };
    Ok(Output::ok(json_text(&json!({
        "cf": key.key(),
        "order": order,
        "depth": depth,
        "series": series_value(&value),
    }))))
}

fn partitions(args: PartitionArgs, format: Format) -> Result<Output, QfracError> {
    let spec = PartSpec::parse_parts(&args.parts, args.distinct)?;
    let count = count_partitions(args.k, &spec);
    let listed = if args.enumerate {
        Some(enumerate_partitions(args.k, &spec)?)
    } else {
        None
    };
    let text = match format {
        Format::Json => {
            let mut v = json!({"k": args.k, "count": count as u64});
            if count > u64::MAX as u128 {
                v["count"] = Value::String(count.to_string());
            }
            if let Some(ps) = listed {
                v["partitions"] = json!(ps);
            }
            json_text(&v)
        }
        Format::Text | Format::Csv => {
            let mut s = format!("{count}");
            for p in listed.unwrap_or_default() {
                let parts: Vec<_> = p.iter().map(u64::to_string).collect();
                s.push('\n');
                s.push_str(&parts.join("+"));
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn colored(args: ColoredArgs, format: Format) -> Result<Output, QfracError> {
    let variants: Vec<Variant> = args
        .variant
        .iter()
        .map(|v| v.parse())
        .collect::<Result<_, _>>()?;
    if args.table {
        let variants = if variants.is_empty() {
            Variant::ALL.to_vec()
        } else {
            variants
        };
        let rows = colored_table(&variants, args.n_max, args.i_max, args.j_max)?;
        let text = match format {
            Format::Csv | Format::Text => colored_table_csv(&rows).trim_end().to_string(),
            Format::Json => json_text(&Value::Array(
                rows.iter()
                    .map(|r| {
                        json!({"n": r.n, "i": r.i, "j": r.j, "variant": r.variant.name(), "count": r.count})
                    })
                    .collect(),
            )),
        };
        return Ok(Output::ok(text));
    }
    let [variant] = variants[..] else {
        return Err(QfracError::Usage(
            "exactly one --variant is needed without --table".into(),
        ));
    };
    let (n, i, j) = (
        args.n.unwrap_or(0),
        args.i.unwrap_or(0),
        args.j.unwrap_or(0),
    );
    let count = count_colored(variant, n, i, j)?;
    let text = match format {
        Format::Json => {
            let mut v = json!({"variant": variant.name(), "n": n, "i": i, "j": j, "count": count});
            if args.enumerate {
                let list: Vec<Value> = enumerate_colored(variant, n, i, j)?
                    .into_iter()
                    .map(|p| json!({"red": p.red_parts, "blue": p.blue_parts}))
                    .collect();
                v["partitions"] = Value::Array(list);
            }
            json_text(&v)
        }
        Format::Text | Format::Csv => format!("{count}"),
    };
    Ok(Output::ok(text))
}

fn real(args: RealArgs, format: Format) -> Result<Output, QfracError> {
    if args.constant == "singular" {
        let checks: Vec<_> = SingularValueCase::ALL
            .into_iter()
            .map(singular_value_check)
            .collect();
        let text = match format {
            Format::Json => serde_json::to_string(&checks).expect("serializable"),
            Format::Text | Format::Csv => checks
                .iter()
                .map(|c| {
                    format!(
                        "{} cf={:.15} product={:.15} closed_form={:.15} max_delta={:.3e}",
                        c.case.name(),
                        c.cf_value,
                        c.product_value,
                        c.closed_form_value,
                        c.max_delta
                    )
                })
                .collect::<Vec<_>>()
                .join("\n"),
        };
        return Ok(Output::ok(text));
    }
    let constant: Constant = args.constant.parse().map_err(|_| {
        QfracError::Usage(format!(
            "unknown constant `{}`; expected pi, e, ln2, rr or singular",
            args.constant
        ))
    })?;
    let value = eval_cf_real(&constant.cf(), args.depth)?;
    let reference = constant.reference();
    let delta = (value - reference).abs();
    let text = match format {
        Format::Json => json_text(&json!({
            "const": constant.name(),
            "depth": args.depth,
            "value": value,
            "reference": reference,
            "delta": delta,
        })),
        Format::Text | Format::Csv => {
            format!(
                "{} depth={} value={value:.15} delta={delta:.3e}",
                constant.name(),
                args.depth
            )
        }
    };
    Ok(Output::ok(text))
}

fn list(format: Format) -> Output {
    let infos = list_identities();
    let text = match format {
        Format::Json => serde_json::to_string(&infos).expect("serializable"),
        Format::Text | Format::Csv => infos
            .iter()
            .map(|i| format!("{}\t{}", i.id, i.description))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Output::ok(text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    let result = match cli.verb {
        Verb::Verify(a) => verify(a, format),
        Verb::Expand(a) => expand(a),
        Verb::Partitions(a) => partitions(a, format),
        Verb::Colored(a) => colored(a, format),
        Verb::Real(a) => real(a, format),
        Verb::List => Ok(list(format)),
    };
    match result {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                QfracError::Usage(_) => 2,
                _ => 1,
            })
        }
    }
}
