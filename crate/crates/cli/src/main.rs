//! `strongmon`: strongly closed exponent sets and composition of restricted
//! power series from the command line.
//!
//! Exit codes: 0 success or verdict holds, 1 verdict fails, 2 usage error.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use strongmon::expmonoid::{is_strongly_closed, multiplicative_prime_witnesses, satisfies_partition_condition};
use strongmon::verify::{self, Report, TrialConfig};
use strongmon::{
    with_ring, AdditiveMonoid, AnyRing, Error, ExplicitSet, ExponentSet, Ring, RingDescriptor, SeriesTuple,
    StrongMonoid, TruncatedSeries,
};

const SERIES_GRAMMAR: &str = "series: term (('+'|'-') term)*, term = [coeff ['*']] x['^'exp], \
coeff = integer or a/b, e.g. \"x - 2*x^3 + 1/2*x^5\"";
const TUPLE_GRAMMAR: &str = "tuple: series ('|' series)*, one series per variable, \
monomials x<i>['^'e] joined by '*', e.g. \"x1^2 + 3*x1*x2 | x2\"";

#[derive(Parser)]
#[command(name = "strongmon", version, about = "Strongly closed exponent sets and compositions of restricted power series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct SetArgs {
    /// Generators; T is their strong closure
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
    gens: Option<Vec<u64>>,
    /// Explicit members of T, taken as is up to the bound
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
    set: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Strong generators to the additive monoid S = T - 1
    T2s,
    /// Additive generators to the strongly closed T = 1 + S
    S2t,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Main,
    Inverse,
    Group,
    Nd,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List the strong closure of a generator set up to a bound
    Closure {
        #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check the pair and partition conditions on a set
    Check {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        /// Largest s enumerated by the partition condition
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        smax: u64,
        #[arg(long)]
        json: bool,
    },
    /// Move between a strongly closed set and its additive shadow
    Translate {
        #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        json: bool,
    },
    /// Minimal generators, gcd, conductor and gaps of an additive monoid
    Mingens {
        #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Membership in an additive monoid
    Member {
        #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Primes among a + k(a - 1)
    Primes {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        a: u64,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 100_000)]
        kmax: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compose two truncated series, f ∘ g
    Compose {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "z")]
        ring: RingDescriptor,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        prec: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compositional inverse of a truncated series
    Invert {
        #[arg(long)]
        f: String,
        #[arg(long, default_value = "z")]
        ring: RingDescriptor,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        prec: u64,
        /// Also check that f and its inverse stay on the strong closure of these generators
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        check_support: Option<Vec<u64>>,
        #[arg(long)]
        json: bool,
    },
    /// Several-variable series
    #[command(subcommand)]
    Multi(MultiCommand),
    /// Run the seeded verification suites
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_delimiter = ',', default_value = "4,6", value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
        prec: u64,
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        smax: u64,
        #[arg(long, value_delimiter = ',', default_value = "z,zmod:7")]
        ring: Vec<RingDescriptor>,
        /// Variable counts for the several-variable suite
        #[arg(long, value_delimiter = ',', default_value = "2,3", value_parser = clap::value_parser!(u64).range(2..=4))]
        n: Vec<u64>,
        /// Write the JSON report to PATH, or to standard output without PATH
        #[arg(long, value_name = "PATH", num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
    },
}

#[derive(Subcommand)]
enum MultiCommand {
    /// Compose tuples, F ∘ G
    Compose {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "z")]
        ring: RingDescriptor,
        /// Total-degree bound
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        prec: u64,
        #[arg(long)]
        json: bool,
    },
    /// Seeded closure trials for U = {u : |u| ∈ T}
    Check {
        #[arg(long, required = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
        gens: Vec<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=4))]
        n: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "z,zmod:7")]
        ring: Vec<RingDescriptor>,
        #[arg(long)]
        json: bool,
    },
}

/// A usage error tied to one flag.
struct Usage {
    flag: &'static str,
    message: String,
}

fn usage(flag: &'static str, message: impl Display) -> Usage {
    Usage {
        flag,
        message: message.to_string(),
    }
}

type Outcome = Result<bool, Usage>;

/// Rewrites every JSON number as a decimal string.
fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(items) => Value::Array(items.into_iter().map(stringify_numbers).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

fn render_json(v: Value) -> String {
    serde_json::to_string_pretty(&stringify_numbers(v)).expect("JSON values serialize")
}

fn print_json(v: Value) {
    println!("{}", render_json(v));
}

fn joined<T: Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn closure(gens: &[u64], bound: u64, json: bool) -> Outcome {
    let t = StrongMonoid::strong_closure(gens).map_err(|e| usage("--gens", e))?;
    let members = t.members_up_to(bound);
    if json {
        print_json(json!({
            "generators": gens,
            "bound": bound,
            "members": members,
            "summary": t.summary(),
        }));
    } else {
        println!("{}", joined(&members));
    }
    Ok(true)
}

fn check(set: SetArgs, bound: u64, smax: u64, json: bool) -> Outcome {
    let members: Box<dyn ExponentSet> = match (set.gens, set.set) {
        (Some(gens), _) => Box::new(StrongMonoid::strong_closure(&gens).map_err(|e| usage("--gens", e))?),
        (None, Some(set)) => Box::new(ExplicitSet::new(set.into_iter().filter(|&t| t <= bound))),
        (None, None) => unreachable!("clap requires one of --gens and --set"),
    };
    let set = |t| members.contains(t);
    let pair = is_strongly_closed(&set, bound).map_err(|e| usage("--bound", e))?;
    let partition = satisfies_partition_condition(&set, bound, smax.min(bound)).map_err(|e| usage("--bound", e))?;
    let holds = pair.holds && partition.holds;
    if json {
        print_json(json!({
            "bound": bound,
            "s_max": smax.min(bound),
            "members": (1..=bound).filter(|&t| set(t)).collect::<Vec<_>>(),
            "pair_condition": pair,
            "partition_condition": partition,
            "holds": holds,
        }));
    } else {
        println!("pair condition {pair}");
        println!("partition condition {partition}");
    }
    Ok(holds)
}

fn summary_lines(s: &strongmon::addmonoid::MonoidSummary) {
    println!("generators: {}", joined(&s.generators));
    println!("gcd: {}", s.gcd);
    println!("conductor: {}", s.conductor);
    println!("gaps: {}", joined(&s.gaps));
}

fn translate(gens: &[u64], direction: Direction, json: bool) -> Outcome {
    let (name, summary) = match direction {
        Direction::T2s => {
            let t = StrongMonoid::strong_closure(gens).map_err(|e| usage("--gens", e))?;
            ("S", t.to_additive().summary())
        }
        Direction::S2t => {
            let s = AdditiveMonoid::from_generators(gens).map_err(|e| usage("--gens", e))?;
            ("T", StrongMonoid::from_additive(s).summary())
        }
    };
    if json {
        print_json(json!({ "result": name, "summary": summary }));
    } else {
        println!("{name}");
        summary_lines(&summary);
    }
    Ok(true)
}

fn mingens(gens: &[u64], json: bool) -> Outcome {
    let s = AdditiveMonoid::from_generators(gens).map_err(|e| usage("--gens", e))?;
    let summary = s.summary();
    if json {
        print_json(serde_json::to_value(&summary).expect("summary serializes"));
    } else {
        summary_lines(&summary);
    }
    Ok(true)
}

fn member(gens: &[u64], n: u64, json: bool) -> Outcome {
    let s = AdditiveMonoid::from_generators(gens).map_err(|e| usage("--gens", e))?;
    let member = s.contains(n);
    if json {
        print_json(json!({ "generators": gens, "n": n, "member": member }));
    } else {
        println!("{member}");
    }
    Ok(member)
}

fn primes(a: u64, count: usize, kmax: u64, json: bool) -> Outcome {
    let w = multiplicative_prime_witnesses(a, count, kmax).map_err(|e| usage("--a", e))?;
    if json {
        let primes: Vec<Value> = w.primes.iter().map(|&(k, p)| json!({ "k": k, "p": p })).collect();
        print_json(json!({ "a": a, "primes": primes, "complete": w.complete }));
    } else {
        let ps: Vec<u64> = w.primes.iter().map(|&(_, p)| p).collect();
        println!("{}", joined(&ps));
        if !w.complete {
            eprintln!("note: found {} of {count} primes with k <= {kmax}", ps.len());
        }
    }
    Ok(true)
}

fn parse_series<R: Ring>(flag: &'static str, text: &str, ring: &R, prec: usize) -> Result<TruncatedSeries<R>, Usage> {
    let parsed = TruncatedSeries::parse(text, ring.clone(), prec)
        .map_err(|e| usage(flag, format!("{e}\n  {SERIES_GRAMMAR}")))?;
    if parsed.truncated {
        eprintln!("note: terms of {flag} above x^{prec} were dropped");
    }
    Ok(parsed.value)
}

fn parse_tuple<R: Ring>(flag: &'static str, text: &str, ring: &R, n: usize, prec: usize) -> Result<SeriesTuple<R>, Usage> {
    let parsed = SeriesTuple::parse(text, ring.clone(), n, prec)
        .map_err(|e| usage(flag, format!("{e}\n  {TUPLE_GRAMMAR}")))?;
    if parsed.truncated {
        eprintln!("note: terms of {flag} above total degree {prec} were dropped");
    }
    Ok(parsed.value)
}

fn ring_of(desc: RingDescriptor) -> Result<AnyRing, Usage> {
    AnyRing::from_descriptor(desc).map_err(|e| usage("--ring", e))
}

fn compose<R: Ring>(ring: R, f: &str, g: &str, prec: usize, json: bool) -> Outcome {
    let f = parse_series("--f", f, &ring, prec)?;
    let g = parse_series("--g", g, &ring, prec)?;
    let h = f.compose(&g).map_err(|e| usage("--ring", e))?;
    if json {
        print_json(h.to_json());
    } else {
        println!("{h}");
    }
    Ok(true)
}

fn invert<R: Ring>(ring: R, f: &str, prec: usize, support: Option<&[u64]>, json: bool) -> Outcome {
    let f = parse_series("--f", f, &ring, prec)?;
    let t = support
        .map(StrongMonoid::strong_closure)
        .transpose()
        .map_err(|e| usage("--check-support", e))?;
    let g = match f.invert() {
        Ok(g) => g,
        Err(Error::NotInvertible(c)) => {
            let reason = format!("not invertible: the coefficient of x is {c}, not a unit");
            if json {
                print_json(json!({ "invertible": false, "reason": reason }));
            } else {
                println!("{reason}");
            }
            return Ok(false);
        }
        Err(e) => return Err(usage("--f", e)),
    };
    let checks = t.map(|t| (f.is_supported_on(&t), g.is_supported_on(&t)));
    let holds = checks.as_ref().is_none_or(|(a, b)| a.holds && b.holds);
    if json {
        let mut out = json!({ "invertible": true, "inverse": g.to_json() });
        if let Some((fs, gs)) = &checks {
            out["support"] = json!({ "f": fs, "inverse": gs });
        }
        print_json(out);
    } else {
        println!("{g}");
        if let Some((fs, gs)) = &checks {
            println!("f support {fs}");
            println!("inverse support {gs}");
        }
    }
    Ok(holds)
}

fn multi_compose<R: Ring>(ring: R, n: usize, f: &str, g: &str, prec: usize, json: bool) -> Outcome {
    let f = parse_tuple("--f", f, &ring, n, prec)?;
    let g = parse_tuple("--g", g, &ring, n, prec)?;
    let h = f.compose(&g).map_err(|e| usage("--n", e))?;
    if json {
        print_json(h.to_json());
    } else {
        println!("{h}");
    }
    Ok(true)
}

fn print_report(r: &Report) {
    println!(
        "suite {}: {} ({})",
        r.suite,
        if r.passed { "PASS" } else { "FAIL" },
        r.subject
    );
    let coverage: Vec<String> = r.coverage.iter().map(|(k, v)| format!("{k} {v}")).collect();
    if !coverage.is_empty() {
        println!("  coverage: {}", coverage.join(", "));
    }
    for p in &r.properties {
        let status = if p.passed { "PASS" } else { "FAIL" };
        let kind = match p.expect {
            verify::Expect::Hold => "",
            verify::Expect::Fail => " [probe, expected to find a violation]",
        };
        println!("  {status} {}{kind}: {} cases, {} violations", p.name, p.cases, p.violations);
        // Failures show a few witnesses; a probe that passed shows its evidence.
        let shown = match (p.passed, p.expect) {
            (false, _) => 3,
            (true, verify::Expect::Fail) => 1,
            (true, verify::Expect::Hold) => 0,
        };
        for w in p.witnesses.iter().take(shown) {
            let inputs: Vec<String> = w.inputs.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            println!("    case {} [{}] {}: {}", w.case, w.ring, inputs.join("; "), w.detail);
        }
    }
}

fn run_suites(cfg: &TrialConfig, suite: Suite, gens: &[u64], ns: &[u64]) -> Result<Vec<Report>, Usage> {
    let t = StrongMonoid::strong_closure(gens).map_err(|e| usage("--gens", e))?;
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut reports = Vec::new();
    let err = |e: Error| usage("--gens", e);
    if wants(Suite::Main) {
        reports.push(verify::check_theorem_main(cfg, gens).map_err(err)?);
    }
    if wants(Suite::Inverse) {
        reports.push(verify::check_inverse_support(cfg, &t).map_err(err)?);
    }
    if wants(Suite::Group) {
        reports.push(verify::check_group_axioms(cfg, &t).map_err(err)?);
    }
    if wants(Suite::Nd) {
        for &n in ns {
            reports.push(verify::check_nd(cfg, &t, n as usize).map_err(|e| usage("--n", e))?);
        }
    }
    Ok(reports)
}

fn emit_reports(reports: &[Report], json: Option<Option<PathBuf>>) -> Outcome {
    let passed = reports.iter().all(|r| r.passed);
    let value = json!({
        "passed": passed,
        "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
    });
    match json {
        Some(None) => print_json(value),
        Some(Some(path)) => {
            std::fs::write(&path, render_json(value) + "\n")
                .map_err(|e| usage("--json", format!("cannot write {}: {e}", path.display())))?;
            reports.iter().for_each(print_report);
        }
        None => reports.iter().for_each(print_report),
    }
    Ok(passed)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Closure { gens, bound, json } => closure(&gens, bound, json),
        Command::Check { set, bound, smax, json } => check(set, bound, smax, json),
        Command::Translate { gens, direction, json } => translate(&gens, direction, json),
        Command::Mingens { gens, json } => mingens(&gens, json),
        Command::Member { gens, n, json } => member(&gens, n, json),
        Command::Primes { a, count, kmax, json } => primes(a, count, kmax, json),
        Command::Compose { f, g, ring, prec, json } => {
            with_ring!(ring_of(ring)?, |r| compose(r, &f, &g, prec as usize, json))
        }
        Command::Invert {
            f,
            ring,
            prec,
            check_support,
            json,
        } => with_ring!(ring_of(ring)?, |r| invert(r, &f, prec as usize, check_support.as_deref(), json)),
        Command::Multi(MultiCommand::Compose { n, f, g, ring, prec, json }) => {
            with_ring!(ring_of(ring)?, |r| multi_compose(r, n as usize, &f, &g, prec as usize, json))
        }
        Command::Multi(MultiCommand::Check {
            gens,
            n,
            degree,
            trials,
            seed,
            ring,
            json,
        }) => {
            let cfg = TrialConfig {
                seed,
                trials: trials as usize,
                degree: degree as usize,
                rings: ring,
                ..TrialConfig::default()
            };
            cfg.validate().map_err(|e| usage("--ring", e))?;
            let reports = run_suites(&cfg, Suite::Nd, &gens, &[n])?;
            emit_reports(&reports, json.then_some(None))
        }
        Command::Verify {
            suite,
            gens,
            seed,
            trials,
            prec,
            bound,
            degree,
            smax,
            ring,
            n,
            json,
        } => {
            let cfg = TrialConfig {
                seed,
                trials: trials as usize,
                bound,
                precision: prec as usize,
                degree: degree as usize,
                rings: ring,
                s_max: smax,
            };
            cfg.validate().map_err(|e| usage("--ring", e))?;
            let reports = run_suites(&cfg, suite, &gens, &n)?;
            emit_reports(&reports, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(u) => {
            let mut cmd = Cli::command();
            cmd.error(ErrorKind::ValueValidation, format!("invalid value for '{}': {}", u.flag, u.message))
                .exit()
        }
    }
}
