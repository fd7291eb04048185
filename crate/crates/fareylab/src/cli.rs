//! Command-line front end. One subcommand per library operation, records
//! on stdout, diagnostics on stderr, deterministic output.
//!
//! Exit codes: 0 ok (and all verify checks passed), 1 domain error or a
//! failed verification, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::{FactorSieve, SummatoryTable, TotientTable};
use crate::closed_form::{
    closed_form_unit_rank, rank_at_subdivision, rank_by_offset, ClosedFormInput,
};
use crate::error::{Error, Result};
use crate::farey::{
    complement_rank, farey_cardinality, rank_by_enumeration, rank_by_mobius, rank_upper_bound,
    unit_rank_eq3, Fraction,
};
use crate::poly::{count_polys, count_polys_naive, PolyCountOptions};
use crate::report::{write_records, Format, OutputRecord};
use crate::segment::{verify_bijection, SegmentSpec};
use crate::series::{series_sum_direct, series_sum_sweep, split_sums, summatory_checks, Constants};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "fareylab",
    version,
    about = "Farey sequence ranks, segment bijections, closed forms, and the totient-weighted rank series"
)]
struct Cli {
    /// Output encoding for the records on stdout.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Suppress diagnostics on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Lift the built-in cost guards (large sweeps, large censuses).
    #[arg(long, global = true)]
    guard_override: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Format {
        match arg {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RankMethodArg {
    Enum,
    Eq3,
    Mobius,
    Complement,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesMethodArg {
    Sweep,
    Direct,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank I_N(h/k) of a fraction within F_N.
    Rank {
        #[arg(long)]
        order: u64,
        /// The fraction, strictly as H/K in lowest terms.
        #[arg(long)]
        frac: String,
        #[arg(long, value_enum, default_value_t = RankMethodArg::Enum)]
        method: RankMethodArg,
    },
    /// |F_N| = 1 + Φ(N).
    Cardinality {
        #[arg(long)]
        order: u64,
    },
    /// The exact upper bound (N² + N)/(2k) on I_N(1/k).
    Bound {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        k: u64,
    },
    /// Verify the bijection F_i ↔ F_N^[1/q, 1/(q−1)], h/k ↦ k/(kq−h).
    Bijection(BijectionArgs),
    /// Closed-form I_N(1/k) under the divisibility hypothesis.
    ClosedForm {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        k: u64,
    },
    /// S(N) = Σ φ(k)·I_N(1/k) against its N³/(6ζ(3)) leading term.
    Series {
        #[arg(long)]
        order: u64,
        #[arg(long, value_enum, default_value_t = SeriesMethodArg::Sweep)]
        method: SeriesMethodArg,
    },
    /// Split S(N) at k = N/i_max with N = lcm(2..i_max).
    Split {
        #[arg(long)]
        imax: u64,
    },
    /// Summatory convergence rows for Σφ(k), Σφ(k)/k, Σφ(k)·k, Σφ(k)/k³.
    Asymptotics {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        k3max: u64,
    },
    /// Census of primitive linear polynomials with a root in the unit cube.
    Polycount {
        #[arg(long)]
        dim: u8,
        #[arg(long)]
        max: u64,
        /// Also count at N = step, 2·step, … up to max.
        #[arg(long)]
        step: Option<u64>,
        /// Count ±-related coefficient tuples separately.
        #[arg(long)]
        both_signs: bool,
        /// Drop polynomials that omit one of the D variables.
        #[arg(long)]
        exclude_degenerate: bool,
        /// Use the brute-force census instead of the batched count.
        #[arg(long)]
        naive: bool,
    },
    /// Run an invariant suite; exit 0 only if every check passes.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max: Option<u64>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct BijectionQ {
    /// Check a single q.
    #[arg(long)]
    q: Option<u64>,
    /// Check every admissible q in (N/(i+1), N/i].
    #[arg(long)]
    all_q: bool,
}

#[derive(Debug, Args)]
struct BijectionArgs {
    #[arg(long)]
    i: u64,
    /// The order N; must be a common multiple of i and i+1.
    #[arg(long)]
    multiple: u64,
    #[command(flatten)]
    q: BijectionQ,
}

/// Parses argv, dispatches, writes records to stdout. Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };

    let format: Format = cli.format.into();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let (records, code) = dispatch(&cli);
    if let Err(err) = write_records(&records, format, &mut out) {
        if !cli.quiet {
            eprintln!("error: {err}");
        }
        return 1;
    }
    let _ = out.flush();
    if code != 0 && !cli.quiet {
        for record in &records {
            if let Some(detail) = &record.error_detail {
                eprintln!("error: {detail}");
            }
        }
    }
    code
}

fn dispatch(cli: &Cli) -> (Vec<OutputRecord>, i32) {
    let guard_override = cli.guard_override;
    match &cli.command {
        Command::Rank {
            order,
            frac,
            method,
        } => {
            let base = OutputRecord::new("rank")
                .input("order", order)
                .input("frac", frac)
                .input("method", method_name(*method));
            wrap(base, cmd_rank(*order, frac, *method))
        }
        Command::Cardinality { order } => {
            let base = OutputRecord::new("cardinality").input("order", order);
            wrap(base, cmd_cardinality(*order))
        }
        Command::Bound { order, k } => {
            let base = OutputRecord::new("bound")
                .input("order", order)
                .input("k", k);
            wrap(base, cmd_bound(*order, *k))
        }
        Command::Bijection(args) => {
            let base = OutputRecord::new("bijection")
                .input("i", args.i)
                .input("multiple", args.multiple)
                .input(
                    "q",
                    args.q
                        .q
                        .map_or_else(|| "all".to_string(), |q| q.to_string()),
                );
            wrap(base, cmd_bijection(args))
        }
        Command::ClosedForm { order, i, k } => {
            let base = OutputRecord::new("closed-form")
                .input("order", order)
                .input("i", i)
                .input("k", k);
            wrap(base, cmd_closed_form(*order, *i, *k))
        }
        Command::Series { order, method } => {
            let base = OutputRecord::new("series").input("order", order).input(
                "method",
                match method {
                    SeriesMethodArg::Sweep => "sweep",
                    SeriesMethodArg::Direct => "direct",
                },
            );
            wrap(base, cmd_series(*order, *method, guard_override))
        }
        Command::Split { imax } => {
            let base = OutputRecord::new("split").input("imax", imax);
            wrap(base, cmd_split(*imax, guard_override))
        }
        Command::Asymptotics { max, k3max } => {
            let base = OutputRecord::new("asymptotics")
                .input("max", max)
                .input("k3max", k3max);
            wrap(base, cmd_asymptotics(*max, *k3max))
        }
        Command::Polycount {
            dim,
            max,
            step,
            both_signs,
            exclude_degenerate,
            naive,
        } => {
            let base = OutputRecord::new("polycount")
                .input("dim", dim)
                .input("max", max)
                .input("step", step.unwrap_or(*max))
                .input("both_signs", both_signs)
                .input("exclude_degenerate", exclude_degenerate)
                .input("naive", naive);
            let options = PolyCountOptions {
                count_both_signs: *both_signs,
                include_degenerate: !*exclude_degenerate,
            };
            wrap(
                base,
                cmd_polycount(*dim, *max, *step, options, *naive, guard_override),
            )
        }
        Command::Verify { suite, max } => cmd_verify(suite, *max, guard_override),
    }
}

fn method_name(method: RankMethodArg) -> &'static str {
    match method {
        RankMethodArg::Enum => "enum",
        RankMethodArg::Eq3 => "eq3",
        RankMethodArg::Mobius => "mobius",
        RankMethodArg::Complement => "complement",
        RankMethodArg::Closed => "closed",
    }
}

/// Turns a handler outcome into records plus an exit code; errors become
/// a single failed record echoing the inputs.
fn wrap(base: OutputRecord, outcome: Result<Vec<OutputRecord>>) -> (Vec<OutputRecord>, i32) {
    match outcome {
        Ok(records) => (records, 0),
        Err(err) => (vec![base.fail(&err)], 1),
    }
}

fn cmd_rank(order: u64, frac: &str, method: RankMethodArg) -> Result<Vec<OutputRecord>> {
    let target: Fraction = frac.parse()?;
    let base = OutputRecord::new("rank")
        .input("order", order)
        .input("frac", target)
        .input("method", method_name(method));
    let rank = match method {
        RankMethodArg::Enum => rank_by_enumeration(order, target)?,
        RankMethodArg::Eq3 => {
            if !target.is_unit() {
                return Err(Error::domain(format!(
                    "the eq3 method ranks unit fractions 1/k; got {target}"
                )));
            }
            unit_rank_eq3(order, target.den(), &FactorSieve::new(order.max(1))?)?
        }
        RankMethodArg::Mobius => rank_by_mobius(order, target, &FactorSieve::new(order.max(1))?)?,
        RankMethodArg::Complement => {
            if target.num() + 1 != target.den() {
                return Err(Error::domain(format!(
                    "the complement method ranks fractions (k−1)/k; got {target}"
                )));
            }
            let totients = TotientTable::new(order.max(1))?;
            let sums = SummatoryTable::new(&totients)?;
            complement_rank(order, target.den(), &FactorSieve::new(order.max(1))?, &sums)?
        }
        RankMethodArg::Closed => {
            if !target.is_unit() {
                return Err(Error::domain(format!(
                    "the closed method ranks unit fractions 1/k; got {target}"
                )));
            }
            let k = target.den();
            if k == 0 || k > order {
                return Err(Error::domain(format!("1/{k} is not in F_{order}")));
            }
            // k can lie in the window of i = ⌊N/k⌋ and, when k | N, also
            // of i − 1; accept whichever satisfies the hypothesis.
            let mut candidates = vec![order / k];
            if order / k > 1 {
                candidates.push(order / k - 1);
            }
            let mut input = ClosedFormInput::new(order, candidates[0], k);
            for &i in &candidates[1..] {
                if input.is_ok() {
                    break;
                }
                if let Ok(alternate) = ClosedFormInput::new(order, i, k) {
                    input = Ok(alternate);
                }
            }
            let input = input?;
            let totients = TotientTable::new(input.i.max(1))?;
            let sums = SummatoryTable::new(&totients)?;
            closed_form_unit_rank(input, &totients, &sums)?
        }
    };
    Ok(vec![base.output_int("index", rank.index)])
}

fn cmd_cardinality(order: u64) -> Result<Vec<OutputRecord>> {
    let totients = TotientTable::new(order.max(1))?;
    let sums = SummatoryTable::new(&totients)?;
    let value = farey_cardinality(order, &sums)?;
    Ok(vec![OutputRecord::new("cardinality")
        .input("order", order)
        .output_int("cardinality", value)])
}

fn cmd_bound(order: u64, k: u64) -> Result<Vec<OutputRecord>> {
    let bound = rank_upper_bound(order, k)?;
    let real = *bound.numer() as f64 / *bound.denom() as f64;
    Ok(vec![OutputRecord::new("bound")
        .input("order", order)
        .input("k", k)
        .output_int("bound_num", bound.numer())
        .output_int("bound_den", bound.denom())
        .output_real("bound_real", real)])
}

fn cmd_bijection(args: &BijectionArgs) -> Result<Vec<OutputRecord>> {
    let qs: Vec<u64> = if args.q.all_q {
        SegmentSpec::admissible_q(args.i, args.multiple)?
    } else {
        vec![args.q.q.expect("clap enforces exactly one of --q/--all-q")]
    };
    let mut records = Vec::with_capacity(qs.len());
    for q in qs {
        let report = verify_bijection(SegmentSpec::new(args.i, args.multiple, q)?)?;
        records.push(
            OutputRecord::new("bijection")
                .input("i", args.i)
                .input("multiple", args.multiple)
                .input("q", q)
                .output_int("domain_size", report.domain_size)
                .output_int("image_size", report.image_size)
                .output_str("order_preserved", report.order_preserved)
                .output_str("bijective", report.bijective)
                .output_int("violations", report.violations.len()),
        );
    }
    Ok(records)
}

fn cmd_closed_form(order: u64, i: u64, k: u64) -> Result<Vec<OutputRecord>> {
    let input = ClosedFormInput::new(order, i, k)?;
    let totients = TotientTable::new(i.max(1))?;
    let sums = SummatoryTable::new(&totients)?;
    let direct = closed_form_unit_rank(input, &totients, &sums)?;
    let offset = rank_by_offset(input, &sums)?;
    let subdivision = rank_at_subdivision(order, i, &sums)?;
    Ok(vec![OutputRecord::new("closed-form")
        .input("order", order)
        .input("i", i)
        .input("k", k)
        .output_int("index", direct.index)
        .output_int("index_by_offset", offset.index)
        .output_int("subdivision_k", order / i)
        .output_int("subdivision_index", subdivision.index)])
}

fn cmd_series(
    order: u64,
    method: SeriesMethodArg,
    guard_override: bool,
) -> Result<Vec<OutputRecord>> {
    let totients = TotientTable::new(order.max(1))?;
    let report = match method {
        SeriesMethodArg::Sweep => series_sum_sweep(order, &totients, guard_override)?,
        SeriesMethodArg::Direct => {
            let sieve = FactorSieve::new(order.max(1))?;
            series_sum_direct(order, &totients, &sieve, guard_override)?
        }
    };
    Ok(vec![OutputRecord::new("series")
        .input("order", order)
        .input(
            "method",
            match method {
                SeriesMethodArg::Sweep => "sweep",
                SeriesMethodArg::Direct => "direct",
            },
        )
        .output_int("sum", report.sum)
        .output_real("leading", report.leading)
        .output_real("ratio", report.ratio)])
}

fn cmd_split(imax: u64, guard_override: bool) -> Result<Vec<OutputRecord>> {
    let n = u64::try_from(crate::closed_form::lcm_up_to(imax)?)
        .map_err(|_| Error::Overflow("split order"))?;
    let totients = TotientTable::new(n.max(1))?;
    let sums = SummatoryTable::new(&totients)?;
    let report = split_sums(imax, &totients, &sums, guard_override)?;
    Ok(vec![OutputRecord::new("split")
        .input("imax", imax)
        .output_int("n", report.n)
        .output_int("head_sum", report.head_sum)
        .output_int("tail_sum", report.tail_sum)
        .output_int("tail_closed_form", report.tail_closed_form)
        .output_int("head_bound_num", report.head_bound.numer())
        .output_int("head_bound_den", report.head_bound.denom())
        .output_str("head_bound_holds", report.head_bound_holds())
        .output_real("head_asymptotic", report.head_asymptotic)])
}

fn cmd_asymptotics(max: u64, k3max: u64) -> Result<Vec<OutputRecord>> {
    let totients = TotientTable::new(max.max(k3max).max(1))?;
    let rows = summatory_checks(max, k3max, &totients, &Constants::standard())?;
    Ok(rows
        .into_iter()
        .map(|row| {
            let mut record = OutputRecord::new("asymptotics")
                .input("max", max)
                .input("k3max", k3max)
                .output_str("name", row.name)
                .output_int("n", row.n)
                .output_str(
                    "lhs_exact",
                    row.lhs_exact.map_or_else(String::new, |v| v.to_string()),
                )
                .output_real("lhs", row.lhs);
            record = record.output_real("leading", row.leading);
            record.output_real("ratio", row.ratio)
        })
        .collect())
}

fn cmd_polycount(
    dim: u8,
    max: u64,
    step: Option<u64>,
    options: PolyCountOptions,
    naive: bool,
    guard_override: bool,
) -> Result<Vec<OutputRecord>> {
    let step = step.unwrap_or(max);
    if step == 0 {
        return Err(Error::domain("polycount: step must be positive"));
    }
    let mut records = Vec::new();
    let mut n = step;
    while n <= max {
        let result = if naive {
            count_polys_naive(dim, n, options)?
        } else {
            count_polys(dim, n, options, guard_override)?
        };
        records.push(
            OutputRecord::new("polycount")
                .input("dim", dim)
                .input("max", max)
                .input("step", step)
                .input("both_signs", options.count_both_signs)
                .input("exclude_degenerate", !options.include_degenerate)
                .input("naive", naive)
                .output_int("n", result.n)
                .output_int("count", result.count)
                .output_real("leading", result.leading)
                .output_real("ratio", result.ratio),
        );
        if n == max {
            break;
        }
        n = (n + step).min(max);
    }
    Ok(records)
}

fn cmd_verify(suite: &str, max: Option<u64>, guard_override: bool) -> (Vec<OutputRecord>, i32) {
    let base = OutputRecord::new("verify").input("suite", suite).input(
        "max",
        max.map_or_else(|| "default".to_string(), |m| m.to_string()),
    );
    let suite_id = match Suite::parse(suite) {
        Ok(s) => s,
        Err(err) => return (vec![base.fail(&err)], 1),
    };
    match run_suite(suite_id, max, guard_override) {
        Ok(checks) => {
            let all_passed = checks.iter().all(|c| c.passed);
            let records = checks
                .into_iter()
                .map(|check| {
                    base.clone()
                        .output_str("check", check.name)
                        .output_str("result", if check.passed { "PASS" } else { "FAIL" })
                        .output_str("detail", check.detail)
                })
                .collect();
            (records, if all_passed { 0 } else { 1 })
        }
        Err(err) => (vec![base.fail(&err)], 1),
    }
}
