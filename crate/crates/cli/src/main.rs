use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use phisum::numtheory::{phi_cyclic_sum, q_of, table1};
use phisum::verify::{
    criterion_summary, table2_spot_check, verify_group_sweep, verify_group_statements,
    verify_main_range, verify_numtheory_sweep, verify_semidirect_sweep, VerificationReport,
    Verdicts,
};
use phisum::{GroupFactory, GroupSpec, PowerGraph};

#[derive(Parser, Debug)]
#[command(name = "phisum", version, about = "Totient sums of finite groups and their power graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest group order that may be constructed.
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// phi(C_n) for --n, or phi(G) for --group.
    Phi {
        #[arg(long, conflicts_with = "group", required_unless_present = "group")]
        n: Option<u64>,
        #[arg(long)]
        group: Option<GroupSpec>,
    },
    /// Q = prod (p + 1) / (p - 1) over the primes dividing n.
    Q {
        #[arg(long)]
        n: u64,
    },
    /// Directed power graph of a group.
    Graph {
        #[arg(long)]
        group: GroupSpec,
    },
    /// Compare every catalog group of each order against the cyclic group.
    VerifyMain {
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        n: Option<u64>,
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
    },
    /// Witnesses and Sylow data for one group.
    Criterion {
        #[arg(long)]
        group: GroupSpec,
    },
    /// Reproduce the Q table and the exceptional-case spot checks.
    Tables,
    /// Number-theory sweep over 1..=N and/or catalog sweep over a range of orders.
    Sweep {
        #[arg(long, required_unless_present = "range")]
        n: Option<u64>,
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
    },
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a == 0 || a > b {
        return Err(format!("range {a}..{b} must satisfy 1 <= A <= B"));
    }
    Ok((a, b))
}

fn require(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if !allowed.contains(&format) {
        let name = format!("{format:?}").to_lowercase();
        bail!("--format {name} is not available for `{command}`");
    }
    Ok(())
}

struct Output {
    body: String,
    pass: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, pass: true }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn failures_text(v: &Verdicts) -> String {
    let mut out = String::new();
    for f in v.failures() {
        if let Some(cx) = &f.counterexample {
            writeln!(out, "FAIL {}: {} {:?}: {}", f.id, cx.group, cx.elements, cx.detail).unwrap();
        }
    }
    out
}

fn run(cli: Cli) -> Result<Output> {
    let factory = match cli.cap {
        Some(cap) => GroupFactory::with_cap(cap),
        None => GroupFactory::default(),
    };
    let format = cli.format;
    use Format::*;

    match cli.command {
        Command::Phi { n, group } => {
            require(format, &[Text, Json], "phi")?;
            let (label, order, phi) = match (n, group) {
                (Some(n), _) => (format!("C{n}"), n, phi_cyclic_sum(n)?.to_string()),
                (None, Some(spec)) => {
                    let g = spec.build(&factory)?;
                    (g.name().to_string(), g.order() as u64, g.phi().to_string())
                }
                (None, None) => unreachable!("clap requires --n or --group"),
            };
            Ok(Output::ok(match format {
                Json => pretty(&json!({ "group": label, "n": order, "phi": phi })),
                _ => format!("{phi}\n"),
            }))
        }
        Command::Q { n } => {
            require(format, &[Text, Json], "q")?;
            let q = q_of(n)?;
            Ok(Output::ok(match format {
                Json => pretty(&json!({ "n": n, "q": q })),
                _ => format!("{q}\n"),
            }))
        }
        Command::Graph { group } => {
            require(format, &[Text, Json, Dot], "graph")?;
            let g = group.build(&factory)?;
            let pg = PowerGraph::build(&g);
            Ok(Output::ok(match format {
                Json => {
                    let mut s = pg.export_json();
                    s.push('\n');
                    s
                }
                Dot => pg.export_dot(),
                _ => format!(
                    "{}: n = {}, phi(G) = {}, directed edges = {}, undirected edges = {}\n",
                    g.name(),
                    g.order(),
                    g.phi(),
                    pg.directed_edge_count(),
                    pg.undirected_edge_count()
                ),
            }))
        }
        Command::VerifyMain { n, range } => {
            require(format, &[Text, Json, Csv], "verify-main")?;
            let (from, to) = range.or(n.map(|n| (n, n))).expect("clap requires --n or --range");
            let reports = verify_main_range(from, to, &factory, cli.jobs)?;
            let pass = reports.iter().all(VerificationReport::passed);
            let body = match format {
                Json => pretty(&json!(reports)),
                Csv => {
                    let mut s = format!("{}\n", VerificationReport::CSV_HEADER);
                    for r in &reports {
                        s.push_str(&r.csv_rows());
                    }
                    s
                }
                _ => {
                    let mut s = String::new();
                    for r in &reports {
                        s.push_str(&r.to_text());
                    }
                    s
                }
            };
            Ok(Output { body, pass })
        }
        Command::Criterion { group } => {
            require(format, &[Text, Json], "criterion")?;
            let g = group.build(&factory)?;
            let summary = criterion_summary(&g)?;
            let report = verify_group_statements(&g)?;
            let pass = report.verdicts.all_pass();
            let body = match format {
                Json => pretty(&json!({ "summary": summary, "report": report })),
                _ => format!("{summary}\n{}", failures_text(&report.verdicts)),
            };
            Ok(Output { body, pass })
        }
        Command::Tables => {
            require(format, &[Text, Json], "tables")?;
            let t1 = table1();
            let (rows, verdicts) = table2_spot_check();
            let pass = verdicts.all_pass();
            let body = match format {
                Json => pretty(&json!({ "table1": t1, "table2": rows, "verdicts": verdicts })),
                _ => {
                    let mut s = String::from("Q over the first l primes (F_l) and the first l odd primes (S_l)\n");
                    writeln!(s, "{:>2} {:>5} {:>10} {:>10}", "l", "pi(l)", "Q(F_l)", "Q(S_l)").unwrap();
                    for r in &t1 {
                        let skip = r.q_skip.as_ref().map_or("*".to_string(), |q| q.to_string());
                        writeln!(s, "{:>2} {:>5} {:>10} {:>10}", r.ell, r.prime, r.q_first.to_string(), skip).unwrap();
                    }
                    s.push_str("\nExceptional cases at minimal exponents\n");
                    for r in &rows {
                        writeln!(s, "{}", r.to_text()).unwrap();
                    }
                    s.push('\n');
                    s.push_str(&verdicts.to_text());
                    s
                }
            };
            Ok(Output { body, pass })
        }
        Command::Sweep { n, range } => {
            require(format, &[Text, Json], "sweep")?;
            let mut reports = Vec::new();
            if let Some(limit) = n {
                reports.push(verify_numtheory_sweep(limit, cli.jobs)?);
            }
            let mut semidirect = None;
            if let Some((from, to)) = range {
                reports.push(verify_group_sweep(from, to, &factory, cli.jobs, true)?);
                semidirect = Some(verify_semidirect_sweep(to, &factory, cli.jobs)?);
            }
            let pass = reports.iter().all(|r| r.passed())
                && semidirect.as_ref().is_none_or(|v| v.all_pass());
            let body = match format {
                Json => pretty(&json!({ "sweeps": reports, "semidirect": semidirect })),
                _ => {
                    let mut s = String::new();
                    for r in &reports {
                        s.push_str(&r.to_text());
                    }
                    if let (Some(v), Some((_, to))) = (&semidirect, range) {
                        writeln!(s, "semidirect products with ab <= {to}").unwrap();
                        s.push_str(&v.to_text());
                    }
                    s
                }
            };
            Ok(Output { body, pass })
        }
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
    let out = cli.out.clone();
    let result = run(cli).and_then(|output| {
        match &out {
            Some(path) => std::fs::write(path, &output.body)
                .with_context(|| format!("writing {}", path.display()))?,
            None => print!("{}", output.body),
        }
        Ok(output.pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("one or more statements failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
