//! Command-line front end: compute Hurwitz numbers, tabulate them, and run
//! the verification suites. All numeric output is exact; rationals are
//! printed as `p/q` (or `p` when the denominator is one) and never as
//! floats.
//!
//! Exit codes: 0 success, 1 internal error, 2 invalid parameters,
//! 3 verification failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fock::{
    charge_zero_states, verify_commutator, verify_commutator_at_zero,
    verify_vacuum_zeta_identity,
};
use crate::hurwitz::{
    connected_from_log_z, disconnected_fock, log_z_oracle, HurwitzEngine, HurwitzParams,
};
use crate::partitions::{partitions_of, CharTable, Partition};
use crate::quantum::{
    operators_agree_on_monomials, quantum_operator, semiclassical_check, verify_annihilation,
    verify_recurrence, OperatorForm,
};
use crate::spectral::{omega01_match, verify_spectral_equation, SpectralFamily};

#[derive(Parser)]
#[command(
    name = "hurwitz-wedge",
    about = "Exact q-double, r-spin and mixed Hurwitz numbers with spectral- and quantum-curve verification",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one connected Hurwitz number
    Compute(ComputeArgs),
    /// Tabulate all connected Hurwitz numbers up to a degree bound
    Table(TableArgs),
    /// Run verification suites and report machine-readable results
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Completed-cycle order (r+1 cycles)
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Uniform ramification profile (q,...,q) over the second special point
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Genus of the covering curve
    #[arg(long, default_value_t = 0)]
    genus: u32,
    /// Monodromy partition as comma-separated parts, e.g. "3,1,1"
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    out: OutputFormat,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Largest genus to include
    #[arg(long, default_value_t = 1)]
    genus: u32,
    /// Largest |mu| to include
    #[arg(long = "max-degree", default_value_t = 6)]
    max_degree: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    out: OutputFormat,
    /// Worker threads for the table computation
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum, default_value_t = CheckKind::All)]
    check: CheckKind,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Series truncation order
    #[arg(long, default_value_t = 30)]
    order: u32,
    /// Degree bound for the oracle cross-checks
    #[arg(long = "max-degree", default_value_t = 6)]
    max_degree: u32,
    /// Verify the raw (ordered-product) operator form instead of the
    /// simplified one
    #[arg(long, default_value_t = false)]
    raw: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Spectral,
    Quantum,
    Recurrence,
    Semiclassical,
    Commutators,
    Oracle,
    All,
}

/// One emitted Hurwitz number. Values are exact rational strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HurwitzRecord {
    pub r: u32,
    pub q: u32,
    pub g: u32,
    pub mu: String,
    pub m: u32,
    pub value: String,
}

impl HurwitzRecord {
    fn csv_row(&self) -> String {
        format!(
            "{},{},{},\"{}\",{},{}",
            self.r, self.q, self.g, self.mu, self.m, self.value
        )
    }
}

const CSV_HEADER: &str = "r,q,g,mu,m,value";

/// One verification outcome in the report stream.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub r: u32,
    pub q: u32,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    fn pass(check: &str, r: u32, q: u32) -> Self {
        CheckReport {
            check: check.into(),
            r,
            q,
            status: "pass",
            detail: None,
        }
    }

    fn fail(check: &str, r: u32, q: u32, detail: String) -> Self {
        CheckReport {
            check: check.into(),
            r,
            q,
            status: "fail",
            detail: Some(detail),
        }
    }

    fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn record_for(engine: &mut HurwitzEngine, params: &HurwitzParams) -> HurwitzRecord {
    let value = engine.connected_hurwitz(params);
    HurwitzRecord {
        r: params.r(),
        q: params.q(),
        g: params.genus(),
        mu: params.mu().to_string(),
        m: params.branch_points(),
        value: value.value.to_string(),
    }
}

fn emit_records(records: &[HurwitzRecord], out: OutputFormat) -> i32 {
    match out {
        OutputFormat::Json => {
            for rec in records {
                match serde_json::to_string(rec) {
                    Ok(line) => println!("{}", line),
                    Err(e) => {
                        eprintln!("internal error: {}", e);
                        return 1;
                    }
                }
            }
        }
        OutputFormat::Csv => {
            println!("{}", CSV_HEADER);
            for rec in records {
                println!("{}", rec.csv_row());
            }
        }
    }
    0
}

fn cmd_compute(args: &ComputeArgs) -> i32 {
    let mu: Partition = match args.mu.parse() {
        Ok(mu) => mu,
        Err(e) => {
            eprintln!("invalid --mu: {}", e);
            return 2;
        }
    };
    let params = match HurwitzParams::new(args.r, args.q, args.genus, mu) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("invalid parameters: {}", e);
            return 2;
        }
    };
    let mut engine = HurwitzEngine::new();
    let rec = record_for(&mut engine, &params);
    emit_records(&[rec], args.out)
}

fn cmd_table(args: &TableArgs) -> i32 {
    if args.r == 0 || args.q == 0 {
        eprintln!("invalid parameters: r and q must be positive");
        return 2;
    }
    // enumerate valid parameter sets in the documented emission order:
    // by |mu| ascending, then genus, then reverse-lexicographic mu
    let mut tasks = Vec::new();
    for degree in 1..=args.max_degree {
        if !degree.is_multiple_of(args.q) {
            continue;
        }
        for g in 0..=args.genus {
            for mu in partitions_of(degree) {
                if let Ok(params) = HurwitzParams::new(args.r, args.q, g, mu) {
                    tasks.push(params);
                }
            }
        }
    }
    let records: Vec<HurwitzRecord> = if args.jobs <= 1 {
        let mut engine = HurwitzEngine::new();
        tasks.iter().map(|p| record_for(&mut engine, p)).collect()
    } else {
        let pool = match rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
        {
            Ok(pool) => pool,
            Err(e) => {
                eprintln!("internal error: {}", e);
                return 1;
            }
        };
        // one memoizing engine per worker; the ordered collect keeps the
        // output deterministic for any jobs count
        pool.install(|| {
            tasks
                .par_iter()
                .map_init(HurwitzEngine::new, record_for)
                .collect()
        })
    };
    emit_records(&records, args.out)
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    if args.r == 0 || args.q == 0 {
        eprintln!("invalid parameters: r and q must be positive");
        return 2;
    }
    if args.order < args.q {
        eprintln!("invalid parameters: --order must be at least q");
        return 2;
    }
    let mut reports = Vec::new();
    let family = SpectralFamily::new(args.r, args.q);
    let run_kind = |kind: CheckKind, reports: &mut Vec<CheckReport>| match kind {
        CheckKind::Spectral => reports.push(check_spectral(family, args.order as usize)),
        CheckKind::Quantum => reports.extend(check_quantum(family, args.order, args.raw)),
        CheckKind::Recurrence => reports.push(check_recurrence(family, 20)),
        CheckKind::Semiclassical => {
            reports.push(check_semiclassical(family, args.order as usize))
        }
        CheckKind::Commutators => reports.extend(check_commutators(args.r, args.q)),
        CheckKind::Oracle => reports.push(check_oracle(args.r, args.q, args.max_degree)),
        CheckKind::All => unreachable!(),
    };
    match args.check {
        CheckKind::All => {
            for kind in [
                CheckKind::Spectral,
                CheckKind::Quantum,
                CheckKind::Recurrence,
                CheckKind::Semiclassical,
                CheckKind::Commutators,
                CheckKind::Oracle,
            ] {
                run_kind(kind, &mut reports);
            }
        }
        kind => run_kind(kind, &mut reports),
    }
    let mut all_pass = true;
    for report in &reports {
        all_pass &= report.passed();
        match serde_json::to_string(report) {
            Ok(line) => println!("{}", line),
            Err(e) => {
                eprintln!("internal error: {}", e);
                return 1;
            }
        }
    }
    if all_pass {
        0
    } else {
        3
    }
}

fn check_spectral(family: SpectralFamily, order: usize) -> CheckReport {
    if let Err(e) = verify_spectral_equation(family, order) {
        return CheckReport::fail("spectral", family.r, family.q, e.to_string());
    }
    let mut engine = HurwitzEngine::new();
    match omega01_match(family, 3, &mut engine) {
        Ok(()) => CheckReport::pass("spectral", family.r, family.q),
        Err(e) => CheckReport::fail("spectral", family.r, family.q, e.to_string()),
    }
}

fn check_quantum(family: SpectralFamily, order: u32, raw: bool) -> Vec<CheckReport> {
    let form = if raw {
        OperatorForm::Raw
    } else {
        OperatorForm::Simplified
    };
    let name = if raw { "quantum-raw" } else { "quantum" };
    let mut out = Vec::new();
    out.push(match verify_annihilation(family, order, form) {
        Ok(()) => CheckReport::pass(name, family.r, family.q),
        Err(e) => CheckReport::fail(name, family.r, family.q, e.to_string()),
    });
    let a = quantum_operator(family, OperatorForm::Simplified);
    let b = quantum_operator(family, OperatorForm::Raw);
    out.push(match operators_agree_on_monomials(&a, &b, 15) {
        Ok(()) => CheckReport::pass("quantum-forms-agree", family.r, family.q),
        Err(e2) => CheckReport::fail(
            "quantum-forms-agree",
            family.r,
            family.q,
            format!(
                "raw and simplified operators differ on x^{}",
                crate::quantum::fmt_exponent2(e2)
            ),
        ),
    });
    out
}

fn check_recurrence(family: SpectralFamily, d_max: u32) -> CheckReport {
    match verify_recurrence(family, d_max) {
        Ok(()) => CheckReport::pass("recurrence", family.r, family.q),
        Err(e) => CheckReport::fail("recurrence", family.r, family.q, e.to_string()),
    }
}

fn check_semiclassical(family: SpectralFamily, order: usize) -> CheckReport {
    match semiclassical_check(family, order) {
        Ok(()) => CheckReport::pass("semiclassical", family.r, family.q),
        Err(e) => CheckReport::fail("semiclassical", family.r, family.q, e.to_string()),
    }
}

fn check_commutators(r: u32, q: u32) -> Vec<CheckReport> {
    let states = charge_zero_states(4);
    let mut reports = Vec::new();
    let mut first_failure = None;
    'outer: for k in -2..=2i64 {
        for l in -2..=2i64 {
            if let Err(e) = verify_commutator(k, l, 4, &states) {
                first_failure = Some(e);
                break 'outer;
            }
            if let Err(e) = verify_commutator_at_zero(k, l, 4, &states) {
                first_failure = Some(e);
                break 'outer;
            }
        }
    }
    reports.push(match first_failure {
        None => CheckReport::pass("commutators", r, q),
        Some(e) => CheckReport::fail("commutators", r, q, e.to_string()),
    });
    reports.push(if verify_vacuum_zeta_identity(10) {
        CheckReport::pass("vacuum-zeta", r, q)
    } else {
        CheckReport::fail("vacuum-zeta", r, q, "zeta(z) E_0(z)|0> != |0>".into())
    });
    reports
}

fn check_oracle(r: u32, q: u32, max_degree: u32) -> CheckReport {
    let t_bound = 4;
    let mut chars = CharTable::new();
    let log_z = log_z_oracle(max_degree, t_bound, r, q, &mut chars);
    let mut engine = HurwitzEngine::new();
    for degree in 1..=max_degree {
        for mu in partitions_of(degree) {
            for m in 0..=t_bound {
                let d_char = engine.disconnected_vev(m, &mu, r, q);
                let d_fock = disconnected_fock(m, &mu, r, q);
                if d_char != d_fock {
                    return CheckReport::fail(
                        "oracle",
                        r,
                        q,
                        format!(
                            "disconnected mismatch at m={} mu=({}): character {} vs fock {}",
                            m, mu, d_char, d_fock
                        ),
                    );
                }
                let c_char = engine.connected_vev(m, &mu, r, q);
                let c_logz = connected_from_log_z(&log_z, m, &mu);
                if c_char != c_logz {
                    return CheckReport::fail(
                        "oracle",
                        r,
                        q,
                        format!(
                            "connected mismatch at m={} mu=({}): character {} vs log-Z {}",
                            m, mu, c_char, c_logz
                        ),
                    );
                }
            }
        }
    }
    CheckReport::pass("oracle", r, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trips_through_json() {
        let rec = HurwitzRecord {
            r: 2,
            q: 3,
            g: 1,
            mu: "3,2,1".into(),
            m: 4,
            value: "-7/3".into(),
        };
        let line = serde_json::to_string(&rec).unwrap();
        let back: HurwitzRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn csv_row_quotes_mu() {
        let rec = HurwitzRecord {
            r: 1,
            q: 1,
            g: 0,
            mu: "2,1".into(),
            m: 2,
            value: "1/2".into(),
        };
        assert_eq!(rec.csv_row(), "1,1,0,\"2,1\",2,1/2");
    }
}
