//! Command-line front door: construct the library's symbolic objects,
//! classify explicit windows, compute family duals, and run the
//! verification suites with text or JSON-lines reports.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::bail;
use clap::{Parser, Subcommand, ValueEnum};
use expanselab::corpus::seed_from_env;
use expanselab::report::{describe_witness, emit_json_lines, emit_text, Report};
use expanselab::suites::{self, SuiteConfig};
use expanselab::{parse_int_list, parse_rational};
use expanselab_core::constructions::{block_b_c, build_p, build_xbar, d_counts};
use expanselab_core::families::{ExplicitFamily, FamilyKind, WindowSet};

#[derive(Parser)]
#[command(
    name = "expanselab",
    version,
    about = "Exact separation windows, set-family classification, and expansivity certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a constructed object as plain text.
    Construct {
        #[command(subcommand)]
        object: ConstructCommand,
    },
    /// Classify an explicit window against a family property.
    Classify {
        /// Property to test the window against.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Size requirement the verdict is relative to.
        #[arg(long)]
        require: i64,
        /// Comma-separated window members, e.g. "1,2,5".
        #[arg(long, default_value = "")]
        members: String,
        /// Lower end of the observation window.
        #[arg(long, default_value_t = 1)]
        lo: i64,
        /// Upper end of the observation window.
        #[arg(long)]
        hi: i64,
        /// The window lives in a two-sided index range that skips zero.
        #[arg(long)]
        excludes_zero: bool,
    },
    /// Compute the dual of the family upward-generated from given subsets.
    Dual {
        /// Universe size n; subsets use indices 0..n-1.
        #[arg(long)]
        universe: usize,
        /// Comma-separated generator bitmasks, e.g. "3,5".
        #[arg(long)]
        subsets: String,
    },
    /// Run a verification suite; exit status 0 iff every claim passes.
    Verify {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Window horizon for iterate-indexed claims.
        #[arg(long, default_value_t = 1000)]
        horizon: i64,
        /// Initial enclosure budget in bits for symbolic distances.
        #[arg(long, default_value_t = 64)]
        precision: u32,
        /// Separation-threshold override, e.g. "1/4".
        #[arg(long)]
        delta: Option<String>,
        /// Tracking-accuracy override for the chen suite, e.g. "1/2".
        #[arg(long)]
        epsilon: Option<String>,
        /// Ladder size for the absorbing-interval system.
        #[arg(long = "N", default_value_t = 10)]
        n_points: i64,
        /// Write the report to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit JSON lines instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// The include set and its complement within [1, length].
    P {
        #[arg(long)]
        length: i64,
    },
    /// Prefix of the engineered fixed point as a bit string.
    Xbar {
        #[arg(long)]
        length: u64,
    },
    /// Run-length counts of the constrained block for one block pair.
    Ledger {
        #[arg(long)]
        m: i64,
    },
    /// Positions of one skip block and its constrained sub-block.
    Blocks {
        #[arg(long)]
        m: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Thick,
    Syndetic,
    Cofinite,
}

impl From<KindArg> for FamilyKind {
    fn from(kind: KindArg) -> FamilyKind {
        match kind {
            KindArg::Thick => FamilyKind::Thick,
            KindArg::Syndetic => FamilyKind::Syndetic,
            KindArg::Cofinite => FamilyKind::Cofinite,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ladder,
    EngineeredOrbit,
    Periodic,
    Powers,
    Product,
    Conjugacy,
    InverseLimit,
    Extension,
    Generators,
    Chen,
    Chainmix,
    SyndeticRefutation,
    All,
}

type SuiteFn = fn(&SuiteConfig) -> anyhow::Result<Vec<Report>>;

fn selected_suites(suite: SuiteArg) -> Vec<SuiteFn> {
    match suite {
        SuiteArg::Ladder => vec![suites::ladder_suite],
        SuiteArg::EngineeredOrbit => vec![suites::orbit_suite],
        SuiteArg::Periodic => vec![suites::periodic_suite],
        SuiteArg::Powers => vec![suites::powers_suite],
        SuiteArg::Product => vec![suites::product_suite],
        SuiteArg::Conjugacy => vec![suites::conjugacy_suite],
        SuiteArg::InverseLimit => vec![suites::inverse_limit_suite],
        SuiteArg::Extension => vec![suites::extension_suite],
        SuiteArg::Generators => vec![suites::generators_suite],
        SuiteArg::Chen => vec![suites::chen_suite],
        SuiteArg::Chainmix => vec![suites::chainmix_suite],
        SuiteArg::SyndeticRefutation => vec![suites::syndetic_suite],
        SuiteArg::All => vec![
            suites::ladder_suite,
            suites::orbit_suite,
            suites::periodic_suite,
            suites::powers_suite,
            suites::product_suite,
            suites::conjugacy_suite,
            suites::extension_suite,
            suites::inverse_limit_suite,
            suites::generators_suite,
            suites::chen_suite,
            suites::chainmix_suite,
            suites::syndetic_suite,
        ],
    }
}

fn index_set(mask: u32) -> String {
    let indices: Vec<String> = (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", indices.join(","))
}

fn run_construct(object: ConstructCommand) -> anyhow::Result<()> {
    match object {
        ConstructCommand::P { length } => {
            let p = build_p(length)?;
            let complement = p.complement_in_window();
            let show = |members: &[i64]| {
                members
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("P: {}", show(p.members()));
            println!("complement: {}", show(complement.members()));
        }
        ConstructCommand::Xbar { length } => {
            let spec = build_xbar(length)?;
            let text: String = spec
                .bits()
                .iter()
                .map(|&b| if b == 1 { '1' } else { '0' })
                .collect();
            println!("{text}");
        }
        ConstructCommand::Ledger { m } => {
            let ledger = d_counts(m)?;
            let counts: Vec<String> = ledger
                .counts()
                .iter()
                .map(|(r, count)| format!("d{}={}", 2 * r, count))
                .collect();
            println!("m={} counts: {}", ledger.m(), counts.join(" "));
        }
        ConstructCommand::Blocks { m } => {
            let span = block_b_c(m)?;
            println!("m: {}", span.m);
            println!("B: [{}, {}] len={}", span.b_start, span.b_end(), span.b_len);
            println!("C: [{}, {}] len={}", span.b_start, span.c_end(), span.c_len);
            let (tail_lo, tail_hi) = span.tail_range();
            println!("parity-tail: [{tail_lo}, {tail_hi}]");
        }
    }
    Ok(())
}

fn run_classify(
    kind: KindArg,
    require: i64,
    members: &str,
    lo: i64,
    hi: i64,
    excludes_zero: bool,
) -> anyhow::Result<()> {
    let window = WindowSet::new(parse_int_list(members)?, lo, hi, excludes_zero)?;
    let verdict = window.classify(kind.into(), require)?;
    println!(
        "window: [{lo}, {hi}] size={} excludes-zero={excludes_zero}",
        window.len()
    );
    println!("kind: {}", FamilyKind::from(kind));
    println!("require: {require}");
    println!("verdict: {}", verdict.kind);
    match &verdict.witness {
        Some(witness) => println!("witness: {}", describe_witness(witness)),
        None => println!("witness: none"),
    }
    Ok(())
}

fn run_dual(universe: usize, subsets: &str) -> anyhow::Result<()> {
    let masks: Vec<u32> = parse_int_list(subsets)?
        .into_iter()
        .map(|m| {
            if !(0..=u32::MAX as i64).contains(&m) {
                bail!("subset mask {m} out of range");
            }
            Ok(m as u32)
        })
        .collect::<anyhow::Result<_>>()?;
    let family = ExplicitFamily::upward_close(&masks, universe)?;
    let dual = family.dual();
    let show = |masks: &[u32]| {
        masks
            .iter()
            .map(|&m| index_set(m))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("universe: {universe}");
    println!(
        "family: {} subsets, minimal: {}",
        family.subsets().len(),
        show(&family.minimal_elements())
    );
    println!(
        "dual: {} subsets, minimal: {}",
        dual.subsets().len(),
        show(&dual.minimal_elements())
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    suite: SuiteArg,
    horizon: i64,
    precision: u32,
    delta: Option<String>,
    epsilon: Option<String>,
    n_points: i64,
    out: Option<PathBuf>,
    json: bool,
) -> anyhow::Result<()> {
    if horizon < 1 {
        bail!("horizon must be positive, got {horizon}");
    }
    if precision < 1 {
        bail!("precision must be positive, got {precision}");
    }
    let config = SuiteConfig {
        horizon,
        precision,
        delta: delta.as_deref().map(parse_rational).transpose()?,
        epsilon: epsilon.as_deref().map(parse_rational).transpose()?,
        n_points,
        seed: seed_from_env()?,
    };
    let mut reports = Vec::new();
    for run in selected_suites(suite) {
        let start = Instant::now();
        let mut batch = run(&config)?;
        let elapsed = start.elapsed().as_millis();
        for report in &mut batch {
            report.runtime_ms = elapsed;
        }
        reports.append(&mut batch);
    }
    let all_passed = reports.iter().all(|r| r.passed());
    match out {
        Some(path) => {
            let file = File::create(&path)?;
            write_reports(&mut reports, file, json)?;
        }
        None => {
            let stdout = std::io::stdout();
            write_reports(&mut reports, stdout.lock(), json)?;
        }
    }
    if !all_passed {
        std::process::exit(1);
    }
    Ok(())
}

fn write_reports(reports: &mut [Report], out: impl Write, json: bool) -> anyhow::Result<()> {
    if json {
        emit_json_lines(reports, out)
    } else {
        emit_text(reports, out)
    }
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Construct { object } => run_construct(object),
        Command::Classify {
            kind,
            require,
            members,
            lo,
            hi,
            excludes_zero,
        } => run_classify(kind, require, &members, lo, hi, excludes_zero),
        Command::Dual { universe, subsets } => run_dual(universe, &subsets),
        Command::Verify {
            suite,
            horizon,
            precision,
            delta,
            epsilon,
            n_points,
            out,
            json,
        } => run_verify(
            suite, horizon, precision, delta, epsilon, n_points, out, json,
        ),
    }
}
