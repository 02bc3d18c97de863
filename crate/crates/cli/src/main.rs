//! `splitalg`: command-line front end. Every invocation prints one JSON document.
//!
//! Exit codes: 0 success, 1 bad arguments or input, 2 a mathematical check failed.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use splitalg::invariants::{self, check_subalgebra_in, check_conditions, fact_module, fixed_module_with_cap};
use splitalg::poly::parse_coeffs;
use splitalg::sweep::{run_sweep, SweepConfig};
use splitalg::{report, selftest, with_ring, Error, LinearRing, MonicPoly, RingSpec, SplitContext, SubgroupSpec};

const CAP_ENV: &str = "SPLITALG_CAP_N";

#[derive(Parser)]
#[command(name = "splitalg", version, about = "Exact splitting algebras and their symmetric invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct PolyArgs {
    /// Base ring: `Z` or `Z/m`.
    #[arg(long, default_value = "Z")]
    ring: RingSpec,
    /// Coefficients `a_0,...,a_n` of the monic polynomial, leading first (`a_0 = 1`).
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    /// Largest degree for invariant solving.
    #[arg(long = "cap-n", env = CAP_ENV, default_value_t = invariants::DEFAULT_INVARIANT_CAP)]
    cap_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Monomial basis of Split^r.
    Basis {
        #[command(flatten)]
        p: PolyArgs,
        /// Level r (defaults to the degree).
        #[arg(long)]
        level: Option<usize>,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Ψ by determinant and by product, plus the discriminant.
    Psi {
        #[command(flatten)]
        p: PolyArgs,
    },
    /// Same report as `psi`.
    Discr {
        #[command(flatten)]
        p: PolyArgs,
    },
    /// Fixed submodule of a subgroup acting on Split^n.
    Invariants {
        #[command(flatten)]
        p: PolyArgs,
        /// `sym`, `alt`, `sym-prime:<r>` or `sym-first:<r>`.
        #[arg(long, default_value = "sym")]
        subgroup: String,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// The four equivalent conditions on p, each computed independently.
    Check {
        #[command(flatten)]
        p: PolyArgs,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Subalgebra generated by e_1..e_r, compared with the S_r-invariants of k[ξ_1..ξ_r].
    Fact {
        #[command(flatten)]
        p: PolyArgs,
        #[arg(long)]
        level: usize,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Checks the equivalence over many (ring, polynomial) instances.
    Sweep {
        /// Rings: `Z/2..Z/12`, or a comma list such as `Z,Z/4,Z/9`.
        #[arg(long, default_value = "Z/2..Z/12")]
        rings: String,
        /// Degrees: `2..4`, `3` or `2,4`.
        #[arg(long, default_value = "2..4")]
        degree: String,
        /// Enumerate every monic polynomial over finite rings.
        #[arg(long)]
        all_polys: bool,
        /// Polynomials per (ring, degree) when sampling.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampled coefficients lie in [-bound, bound].
        #[arg(long, default_value_t = 9)]
        coeff_bound: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include every instance in the report, not only violations and witnesses.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Runs the built-in checks of the published worked examples.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Basis { .. } => "basis",
            Command::Psi { .. } => "psi",
            Command::Discr { .. } => "discr",
            Command::Invariants { .. } => "invariants",
            Command::Check { .. } => "check",
            Command::Fact { .. } => "fact",
            Command::Sweep { .. } => "sweep",
            Command::Selftest => "selftest",
        }
    }
}

/// A report and whether every check in it passed.
type Outcome = (Value, bool);

fn parse_poly<R: LinearRing>(ring: R, p: &PolyArgs) -> Result<MonicPoly<R>, Error> {
    MonicPoly::from_bigints(ring, &parse_coeffs(p.ring, &p.poly)?)
}

fn parse_rings(s: &str) -> Result<Vec<RingSpec>, Error> {
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (RingSpec, RingSpec) = (a.trim().parse()?, b.trim().parse()?);
        return match (a.modulus(), b.modulus()) {
            (Some(lo), Some(hi)) if lo <= hi => Ok((lo..=hi).map(RingSpec::IntegersMod).collect()),
            _ => Err(Error::Parse(format!("bad ring range `{s}` (expected Z/a..Z/b)"))),
        };
    }
    s.split(',').map(|t| t.trim().parse()).collect()
}

fn parse_degrees(s: &str) -> Result<Vec<usize>, Error> {
    let num = |t: &str| -> Result<usize, Error> {
        match t.trim().parse::<usize>() {
            Ok(n) if n >= 2 => Ok(n),
            _ => Err(Error::Parse(format!("bad degree `{t}` (need an integer >= 2)"))),
        }
    };
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(Error::Parse(format!("empty degree range `{s}`")));
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

fn positive(cap: CapArgs) -> Result<usize, Error> {
    if cap.cap_n == 0 {
        return Err(Error::Parse("--cap-n must be positive".into()));
    }
    Ok(cap.cap_n)
}

fn basis<R: LinearRing>(ring: R, p: &PolyArgs, level: Option<usize>, cap: usize) -> Result<Outcome, Error> {
    let poly = parse_poly(ring, p)?;
    let level = level.unwrap_or(poly.degree());
    let ctx = SplitContext::build_with_cap(&poly, level, cap.max(splitalg::split::DEFAULT_ARITH_CAP))?;
    let doc = report::basis(&ctx, level);
    let ok = doc["factorization_verified"] == Value::Bool(true);
    Ok((doc, ok))
}

fn invariants_cmd<R: LinearRing>(ring: R, p: &PolyArgs, subgroup: &str, cap: usize) -> Result<Outcome, Error> {
    let poly = parse_poly(ring, p)?;
    let n = poly.degree();
    let group = SubgroupSpec::parse(n, subgroup)?;
    let ctx = SplitContext::build(&poly, n)?;
    let fixed = fixed_module_with_cap(&ctx, &group, cap)?;
    let verified = invariants::all_fixed(&ctx, &group, &fixed)?;
    Ok((report::invariants(&ctx, &group, &fixed, verified), verified))
}

fn check_cmd<R: LinearRing>(ring: R, p: &PolyArgs, cap: usize) -> Result<Outcome, Error> {
    let poly = parse_poly(ring, p)?;
    let (ctx, rep) = check_conditions(&poly, cap)?;
    Ok((report::conditions(&ctx, &rep), rep.consistent()))
}

fn fact_cmd<R: LinearRing>(ring: R, p: &PolyArgs, level: usize, cap: usize) -> Result<Outcome, Error> {
    let poly = parse_poly(ring, p)?;
    let n = poly.degree();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "invariant solving",
            n,
            cap,
            flag: "--cap-n",
        });
    }
    let ctx = SplitContext::build(&poly, n)?;
    let fact = fact_module(&ctx, level)?;
    match check_subalgebra_in(&ctx, level) {
        Ok(rep) => Ok((report::fact(&ctx, level, &fact, Some(&rep), None), rep.holds)),
        Err(Error::Precondition(msg)) => Ok((report::fact(&ctx, level, &fact, None, Some(&msg)), true)),
        Err(e) => Err(e),
    }
}

fn run(cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Basis { p, level, cap } => {
            let cap = positive(*cap)?;
            with_ring!(p.ring, r => basis(r, p, *level, cap))
        }
        Command::Psi { p } | Command::Discr { p } => {
            with_ring!(p.ring, r => report::psi_discr(cmd.name(), &parse_poly(r, p)?))
        }
        Command::Invariants { p, subgroup, cap } => {
            let cap = positive(*cap)?;
            with_ring!(p.ring, r => invariants_cmd(r, p, subgroup, cap))
        }
        Command::Check { p, cap } => {
            let cap = positive(*cap)?;
            with_ring!(p.ring, r => check_cmd(r, p, cap))
        }
        Command::Fact { p, level, cap } => {
            let cap = positive(*cap)?;
            with_ring!(p.ring, r => fact_cmd(r, p, *level, cap))
        }
        Command::Sweep {
            rings,
            degree,
            all_polys,
            samples,
            seed,
            coeff_bound,
            jobs,
            full,
            cap,
        } => {
            let cfg = SweepConfig {
                rings: parse_rings(rings)?,
                degrees: parse_degrees(degree)?,
                all_polys: *all_polys,
                samples: *samples,
                seed: *seed,
                coeff_bound: (*coeff_bound).abs(),
                cap: positive(*cap)?,
                jobs: *jobs,
            };
            let (results, summary) = run_sweep(&cfg)?;
            Ok((report::sweep(&cfg, &results, &summary, *full), summary.violations() == 0))
        }
        Command::Selftest => {
            let outcomes = selftest::run_all();
            let ok = outcomes.iter().all(|o| o.passed);
            Ok((report::selftest(&outcomes), ok))
        }
    }
}

/// Failures of the arithmetic itself count as falsified checks; everything else is bad input.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NonScalar(_) | Error::Internal(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = cli.command.name();
    let (doc, code) = match run(&cli.command) {
        Ok((doc, ok)) => (doc, if ok { 0 } else { 2 }),
        Err(e) => {
            eprintln!("error: {e}");
            (report::error(name, &e.to_string()), exit_code_for(&e))
        }
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = writeln!(
        std::io::stdout().lock(),
        "{}",
        serde_json::to_string_pretty(&doc).expect("report serializes")
    );
    ExitCode::from(code)
}
