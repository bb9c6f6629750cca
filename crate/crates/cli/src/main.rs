use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use permlab::arith::{natural_perms, robin_check, sigma, sigma_via_divisor_perms, RobinCheck};
use permlab::census::{self, sigma_via_avoiders, EnumerationResult, Mode};
use permlab::relations::census as class_census;
use permlab::sequences;
use permlab::tableau::rsk;
use permlab::{BivincularPattern, Budget, Error, Permutation, Relation};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "permlab", version, about = "Bivincular patterns and equivalence classes of permutations")]
struct Cli {
    /// Output format; each verb has its own default.
    #[arg(long, global = true, value_enum)]
    emit: Option<Emit>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) avoiders or matchers over S_n.
    Enumerate {
        #[arg(long, default_value = "class-avoid")]
        mode: String,
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        /// A relation name, or `none` for plain avoidance.
        #[arg(long, default_value = "none")]
        relation: String,
        /// A single n or a range `a..b` (inclusive).
        #[arg(long)]
        n: String,
        #[arg(long)]
        members: bool,
    },
    /// Class-size census of a relation on S_n.
    Classes {
        #[arg(long)]
        relation: String,
        #[arg(long)]
        n: usize,
        /// Also print `size count` lines before the JSON.
        #[arg(long)]
        sizes: bool,
    },
    /// Ã_n counts for one pattern per symmetry orbit.
    Survey {
        #[arg(long)]
        relation: String,
        #[arg(long, default_value_t = 3)]
        length: usize,
        #[arg(long, default_value_t = 1)]
        n_from: usize,
        #[arg(long, default_value_t = 6)]
        n_to: usize,
    },
    /// Bounded check that class avoidance equals avoidance of the pattern class.
    Stable {
        #[arg(long)]
        relation: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Insertion and recording tableaux.
    Rsk {
        #[arg(long)]
        perm: String,
    },
    /// The natural permutations of S_n.
    Natural {
        #[arg(long)]
        n: usize,
    },
    /// Sum of divisors, checked along two paths.
    Sigma {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "divisor-perms")]
        via: SigmaPath,
    },
    /// Robin's inequality over a range.
    Robin {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Recompute an embedded sequence table.
    SeqCheck {
        #[arg(long)]
        id: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SigmaPath {
    DivisorPerms,
    Avoiders,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::Assertion(_) => Failure::Assertion(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Assertion(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> Outcome {
    Ok(serde_json::to_string(value)? + "\n")
}

fn parse_relation(s: &str) -> Result<Relation, Failure> {
    Ok(s.parse::<Relation>()?)
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("invalid n `{s}`: expected `N` or `A..B`"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn enumerate(
    mode: &str,
    patterns: &[String],
    relation: &str,
    n: &str,
    members: bool,
    emit: Emit,
    budget: Budget,
) -> Outcome {
    let mode: Mode = mode.parse()?;
    let pats = patterns
        .iter()
        .map(|p| p.parse::<BivincularPattern>())
        .collect::<Result<Vec<_>, _>>()?;
    let rel = match relation {
        "none" => None,
        r => Some(parse_relation(r)?),
    };
    let range = parse_range(n)?;
    budget.check(*range.end())?;
    let class_mode = matches!(mode, Mode::ClassAvoid | Mode::ClassMatch);
    if class_mode && pats.len() != 1 {
        return Err(Failure::Usage("class modes take exactly one --pattern".into()));
    }
    if class_mode != rel.is_some() {
        return Err(Failure::Usage(format!(
            "mode {mode:?} needs {}",
            if class_mode { "a relation" } else { "--relation none" }
        )));
    }
    let mut results = Vec::new();
    for n in range {
        let r = match (mode, rel) {
            (Mode::ClassAvoid, Some(rel)) => census::class_avoiders(&pats[0], rel, n, budget)?,
            (Mode::ClassMatch, Some(rel)) => census::class_matchers(&pats[0], rel, n, budget)?,
            (Mode::Avoid, _) => census::avoid_all(&pats, n, budget)?,
            _ => census::match_any(&pats, n, budget)?,
        };
        results.push(if members { r } else { r.without_members() });
    }
    match emit {
        Emit::Json if results.len() == 1 => json(&results[0]),
        Emit::Json => json(&results),
        Emit::Csv => Ok(count_csv(&results)),
        Emit::Text => {
            let mut out = String::new();
            for r in &results {
                writeln!(out, "n = {}: {}", r.n, r.count).unwrap();
                for pi in r.members() {
                    writeln!(out, "  {pi}").unwrap();
                }
            }
            Ok(out)
        }
    }
}

fn count_csv(results: &[EnumerationResult]) -> String {
    let mut out = String::from("n,count\n");
    for r in results {
        writeln!(out, "{},{}", r.n, r.count).unwrap();
    }
    out
}

fn classes(relation: &str, n: usize, sizes: bool, emit: Option<Emit>, budget: Budget) -> Outcome {
    let c = class_census(parse_relation(relation)?, n, budget)?;
    let lines = |sep: &str| {
        c.by_size
            .iter()
            .map(|(size, count)| format!("{size}{sep}{count}\n"))
            .collect::<String>()
    };
    match emit {
        Some(Emit::Json) => json(&c),
        Some(Emit::Text) => Ok(lines(" ")),
        Some(Emit::Csv) => Ok(format!("size,count\n{}", lines(","))),
        None if sizes => Ok(lines(" ") + &json(&c)?),
        None => json(&c),
    }
}

fn survey(relation: &str, length: usize, n_from: usize, n_to: usize, emit: Emit, budget: Budget) -> Outcome {
    if n_from > n_to {
        return Err(Failure::Usage(format!("empty range {n_from}..{n_to}")));
    }
    let s = census::survey(parse_relation(relation)?, length, n_from, n_to, budget)?;
    match emit {
        Emit::Json => json(&s),
        Emit::Csv | Emit::Text => {
            let sep = if emit == Emit::Csv { "," } else { " " };
            let mut out = String::new();
            if emit == Emit::Csv {
                let ns: Vec<String> = (n_from..=n_to).map(|n| format!("n{n}")).collect();
                writeln!(out, "pattern,orbit_size,{},sequence", ns.join(",")).unwrap();
            } else {
                writeln!(
                    out,
                    "{} patterns, {} orbits{}",
                    s.total_patterns,
                    s.representatives,
                    s.shift_merged.map(|m| format!(", {m} after shift merging")).unwrap_or_default()
                )
                .unwrap();
            }
            for row in &s.rows {
                let counts: Vec<String> = row.counts.iter().map(u64::to_string).collect();
                writeln!(
                    out,
                    "{}{sep}{}{sep}{}{sep}{}",
                    row.representative,
                    row.orbit_size,
                    counts.join(sep),
                    row.sequence.unwrap_or("")
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

fn stable(relation: &str, pattern: &str, n_max: usize, emit: Emit, budget: Budget) -> Outcome {
    let p: BivincularPattern = pattern.parse()?;
    let r = census::is_stable(&p, parse_relation(relation)?, n_max, budget)?;
    match emit {
        Emit::Json => json(&r),
        _ => Ok(match &r.witness {
            None => format!("stable up to n = {}\n", r.checked_up_to),
            Some((n, w)) => format!("not stable: differs at n = {n}, witness {w}\n"),
        }),
    }
}

#[derive(Serialize)]
struct RskOutput {
    perm: String,
    p: Vec<Vec<u32>>,
    q: Vec<Vec<u32>>,
}

fn rsk_verb(perm: &str, emit: Emit) -> Outcome {
    let pi: Permutation = perm.parse()?;
    let (p, q) = rsk(&pi);
    match emit {
        Emit::Json => json(&RskOutput { perm: pi.to_string(), p: p.rows().to_vec(), q: q.rows().to_vec() }),
        _ => Ok(format!("{p}\n\n{q}\n")),
    }
}

fn natural(n: usize, emit: Emit) -> Outcome {
    let perms = natural_perms(n);
    match emit {
        Emit::Json => json(&perms),
        _ => Ok(perms.iter().map(|nu| nu.table_line() + "\n").collect()),
    }
}

#[derive(Serialize)]
struct SigmaOutput {
    n: u64,
    sigma: u64,
    via: &'static str,
}

fn sigma_verb(n: u64, via: SigmaPath, emit: Emit, budget: Budget) -> Outcome {
    let direct = sigma(n);
    let (other, name) = match via {
        SigmaPath::DivisorPerms => (sigma_via_divisor_perms(n), "divisor-perms"),
        SigmaPath::Avoiders => {
            let n = usize::try_from(n).map_err(|_| Failure::Budget(format!("n = {n} is out of range")))?;
            (sigma_via_avoiders(n, budget)?, "avoiders")
        }
    };
    if other != direct {
        return Err(Failure::Assertion(format!("sigma({n}): {name} gives {other}, divisor sum gives {direct}")));
    }
    match emit {
        Emit::Json => json(&SigmaOutput { n, sigma: direct, via: name }),
        Emit::Csv => Ok(format!("n,sigma\n{n},{direct}\n")),
        Emit::Text => Ok(format!("{direct}\n")),
    }
}

fn robin(from: u64, to: u64, emit: Emit) -> Outcome {
    if from > to {
        return Err(Failure::Usage(format!("empty range {from}..{to}")));
    }
    let checks = (from..=to).map(robin_check).collect::<Result<Vec<RobinCheck>, _>>()?;
    match emit {
        Emit::Json => json(&checks),
        Emit::Csv | Emit::Text => {
            let mut out = if emit == Emit::Csv { String::from("n,sigma,bound,verdict\n") } else { String::new() };
            for c in &checks {
                let verdict = serde_json::to_value(c.verdict)?;
                let verdict = verdict.as_str().unwrap_or_default().to_string();
                if emit == Emit::Csv {
                    writeln!(out, "{},{},{:.6},{verdict}", c.n, c.sigma, c.bound).unwrap();
                } else {
                    writeln!(out, "{} {} {:.6} {verdict}", c.n, c.sigma, c.bound).unwrap();
                }
            }
            Ok(out)
        }
    }
}

fn seq_check(id: &str, emit: Emit, budget: Budget) -> Outcome {
    let report = sequences::recompute(id, budget)?;
    let out = match emit {
        Emit::Json => json(&report)?,
        Emit::Csv | Emit::Text => {
            let mut out = String::from("n,expected,actual,equal\n");
            for r in &report.rows {
                let actual = r.actual.map(|a| a.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{actual},{}", r.n, r.expected, r.equal).unwrap();
            }
            out
        }
    };
    if report.all_equal() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Assertion(format!("{id} differs at n in {:?}", report.mismatches())))
    }
}

fn run(cli: Cli) -> Outcome {
    let budget = Budget::from_env();
    let emit = cli.emit;
    let or = |default: Emit| emit.unwrap_or(default);
    match cli.command {
        Command::Enumerate { mode, patterns, relation, n, members } => {
            enumerate(&mode, &patterns, &relation, &n, members, or(Emit::Json), budget)
        }
        Command::Classes { relation, n, sizes } => classes(&relation, n, sizes, emit, budget),
        Command::Survey { relation, length, n_from, n_to } => {
            survey(&relation, length, n_from, n_to, or(Emit::Json), budget)
        }
        Command::Stable { relation, pattern, n_max } => stable(&relation, &pattern, n_max, or(Emit::Json), budget),
        Command::Rsk { perm } => rsk_verb(&perm, or(Emit::Text)),
        Command::Natural { n } => natural(n, or(Emit::Text)),
        Command::Sigma { n, via } => sigma_verb(n, via, or(Emit::Text), budget),
        Command::Robin { from, to } => robin(from, to, or(Emit::Json)),
        Command::SeqCheck { id } => seq_check(&id, or(Emit::Json), budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("permlab: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("permlab: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("permlab: {msg} (raise {} to allow it)", Budget::ENV_VAR);
            ExitCode::from(3)
        }
        Err(Failure::Assertion(msg)) => {
            eprintln!("permlab: {msg}");
            ExitCode::from(4)
        }
    }
}
