//! Command-line front end: tables, single exact values, symbolic
//! polynomials, verification sweeps, and b-file sequence output.
//!
//! Exit codes: 0 success/verified, 1 mathematical counterexample or
//! integrality violation, 2 usage error. Data goes to stdout; progress and
//! counterexample diagnostics go to stderr. All numeric output is exact:
//! decimal strings or num/den fractions, never floating point.

use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use amnum::am::{a_table, m_number, AmQuery};
use amnum::fox::{fox_number, FoxQuery};
use amnum::gy::{gy_coefficient, GyQuery};
use amnum::poly::m_polynomial;
use amnum::render;
use amnum::verify::{run_suite, Outcome, Suite, SweepConfig, SweepReport};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Inclusive integer range written as START..END.
#[derive(Clone, Copy, Debug)]
struct RangeArg {
    start: i64,
    end: i64,
}

impl RangeArg {
    fn iter(&self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }

    fn is_empty(&self) -> bool {
        self.start > self.end
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected START..END, got `{s}`"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{t}` is not an integer"))
        };
        Ok(RangeArg {
            start: parse(a)?,
            end: parse(b)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqFormat {
    Bfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// A_n(k) for a fixed k (requires --k).
    A,
    /// The Genocchi numbers, i.e. the k = 2 column.
    Genocchi,
    /// s^n E_n(0) scaled Euler values at 0 (requires --s).
    Fox0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    AmIntegrality,
    RouteEquivalence,
    Vandiver,
    AmSymmetry,
    PolyDivisibility,
    AmSigns,
    GyIntegrality,
    GyNecessity,
    Fox,
    HurwitzClosure,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::AmIntegrality => vec![Suite::AmIntegrality],
            SuiteArg::RouteEquivalence => vec![Suite::RouteEquivalence],
            SuiteArg::Vandiver => vec![Suite::Vandiver],
            SuiteArg::AmSymmetry => vec![Suite::AmSymmetry],
            SuiteArg::PolyDivisibility => vec![Suite::PolyDivisibility],
            SuiteArg::AmSigns => vec![Suite::AmSigns],
            SuiteArg::GyIntegrality => vec![Suite::GyIntegrality],
            SuiteArg::GyNecessity => vec![Suite::GyNecessity],
            SuiteArg::Fox => vec![Suite::Fox],
            SuiteArg::HurwitzClosure => vec![Suite::HurwitzClosure],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "amnum",
    version,
    about = "Exact Almkvist-Meurman / Bernoulli / Euler toolkit with verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the table of A_n(k) = k^n (B_n(1/k) - B_n) over given ranges.
    Table {
        /// Row range of k values, e.g. 2..6
        #[arg(long, allow_hyphen_values = true)]
        k: RangeArg,
        /// Column range of n values, e.g. 1..10
        #[arg(long)]
        n: RangeArg,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
    },
    /// Print one exact value (integer or num/den fraction).
    Value {
        #[command(subcommand)]
        which: ValueCmd,
    },
    /// Print M_n(h,k) as a polynomial in the symbols h and k.
    Poly {
        #[arg(long)]
        n: usize,
    },
    /// Run verification sweeps; any counterexample exits 1 with a JSON
    /// witness on stderr.
    Verify(VerifyArgs),
    /// Emit an integer sequence in OEIS b-file format.
    Seq {
        #[arg(long, value_enum)]
        family: Family,
        /// k for --family a
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// s for --family fox0
        #[arg(long, allow_negative_numbers = true)]
        s: Option<i64>,
        /// Index range, e.g. 1..10
        #[arg(long)]
        n: RangeArg,
        #[arg(long, value_enum, default_value_t = SeqFormat::Bfile)]
        format: SeqFormat,
    },
}

#[derive(Subcommand)]
enum ValueCmd {
    /// M_n(h,k) = k^n (B_n(h/k) - B_n)
    M {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        h: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// A_n(k) = M_n(1,k)
    A {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Coefficient n of ((e^{hx}-1)^j/j!)(kx/(e^{kx}-1))
    Gy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, allow_negative_numbers = true)]
        h: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// s^n E_n(r/s) for even s; (1/2)s^n(E_n(r/s) - (-1)^r E_n(0)) for odd s
    Fox {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    max_h: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    max_k: Option<i64>,
    #[arg(long)]
    max_j: Option<usize>,
    /// Series truncation order for the series-based suites.
    #[arg(long)]
    order: Option<usize>,
    /// Worker threads; the report is identical regardless of this value.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Serialize)]
struct CounterexampleMsg<'a> {
    suite: &'a str,
    query: &'a str,
    expected: &'a str,
    actual: &'a str,
}

fn usage_error(msg: impl Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn violation(msg: impl Display) -> ExitCode {
    eprintln!("counterexample: {msg}");
    ExitCode::from(EXIT_COUNTEREXAMPLE)
}

fn print_value<T: Display>(result: amnum::Result<T>) -> ExitCode {
    match result {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => violation(e),
    }
}

fn cmd_table(k: RangeArg, n: RangeArg, format: TableFormat) -> ExitCode {
    if k.is_empty() || n.is_empty() {
        return usage_error("empty or inverted range");
    }
    if n.start < 0 {
        return usage_error("n must be nonnegative");
    }
    if k.iter().any(|k| k == 0) {
        return usage_error("k = 0 is outside the domain");
    }
    let n_values: Vec<usize> = n.iter().map(|n| n as usize).collect();
    match a_table(k.iter(), n_values.iter().copied()) {
        Ok(rows) => {
            let text = match format {
                TableFormat::Tsv => render::table_tsv(&rows, &n_values),
                TableFormat::Json => {
                    let mut s = render::table_json(&rows, &n_values);
                    s.push('\n');
                    s
                }
            };
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => violation(e),
    }
}

fn cmd_poly(n: usize) -> ExitCode {
    println!("{}", m_polynomial(n).render());
    ExitCode::SUCCESS
}

fn report_exit_code(reports: &[SweepReport]) -> u8 {
    if reports.iter().all(SweepReport::passed) {
        0
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let cfg = SweepConfig {
        max_n: args.max_n,
        max_h: args.max_h,
        max_k: args.max_k,
        max_j: args.max_j,
        order: args.order,
        jobs: args.jobs,
    };
    let mut reports = Vec::new();
    for suite in args.suite.suites() {
        eprintln!("running {suite} ...");
        let report = run_suite(suite, &cfg);
        match &report.outcome {
            Outcome::Pass => {
                println!(
                    "{}: PASS ({} cells; {})",
                    report.suite, report.cells, report.grid
                );
            }
            Outcome::Counterexample(w) => {
                println!(
                    "{}: FAIL ({} cells; {})",
                    report.suite, report.cells, report.grid
                );
                let msg = CounterexampleMsg {
                    suite: report.suite.name(),
                    query: &w.query,
                    expected: &w.expected,
                    actual: &w.actual,
                };
                eprintln!("{}", serde_json::to_string(&msg).expect("witness serializes"));
            }
        }
        reports.push(report);
    }
    ExitCode::from(report_exit_code(&reports))
}

fn cmd_seq(family: Family, k: Option<i64>, s: Option<i64>, n: RangeArg) -> ExitCode {
    if n.start < 0 && !n.is_empty() {
        return usage_error("sequence indices must be nonnegative");
    }
    let values: amnum::Result<Vec<_>> = match family {
        Family::A => {
            let Some(k) = k else {
                return usage_error("--family a requires --k");
            };
            if k == 0 {
                return usage_error("k = 0 is outside the domain");
            }
            n.iter().map(|i| amnum::am::a_number(i as usize, k)).collect()
        }
        Family::Genocchi => n.iter().map(|i| amnum::am::a_number(i as usize, 2)).collect(),
        Family::Fox0 => {
            let Some(s) = s else {
                return usage_error("--family fox0 requires --s");
            };
            if s == 0 {
                return usage_error("s = 0 is outside the domain");
            }
            n.iter()
                .map(|i| fox_number(&FoxQuery::new(i as usize, 0, s)))
                .collect()
        }
    };
    match values {
        Ok(values) => {
            print!("{}", render::bfile(n.start, &values));
            ExitCode::SUCCESS
        }
        Err(e) => violation(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Table { k, n, format } => cmd_table(k, n, format),
        Cmd::Value { which } => match which {
            ValueCmd::M { n, h, k } => {
                if k == 0 {
                    return usage_error("k must be nonzero");
                }
                print_value(m_number(&AmQuery::new(n, h, k)))
            }
            ValueCmd::A { n, k } => {
                if k == 0 {
                    return usage_error("k must be nonzero");
                }
                print_value(amnum::am::a_number(n, k))
            }
            ValueCmd::Gy { n, j, h, k } => {
                if j == 0 {
                    return usage_error("j must be positive");
                }
                if k == 0 {
                    return usage_error("k must be nonzero");
                }
                print_value(Ok(gy_coefficient(n, &GyQuery::new(j, h, k))))
            }
            ValueCmd::Fox { n, r, s } => {
                if s == 0 {
                    return usage_error("s must be nonzero");
                }
                print_value(fox_number(&FoxQuery::new(n, r, s)))
            }
        },
        Cmd::Poly { n } => cmd_poly(n),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Seq {
            family,
            k,
            s,
            n,
            format: SeqFormat::Bfile,
        } => cmd_seq(family, k, s, n),
    }
}
