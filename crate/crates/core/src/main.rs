use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordtop::io::{self, StructureFile};
use ordtop::morphisms::ValueMode;
use ordtop::predicate::{self, Predicate, PredicateExpr};
use ordtop::search::{self, generate, EnumSpec, WitnessOutcome};
use ordtop::{oracle, Error, Flag, Kind, Structure};

const PREDICATE_HELP: &str = "Predicates: complete, up_closed, down_closed, up_down_closed_pair, \
updown_closed, pospace, chain_closed, weakly_up_closed, chain_compact, zar_compact, sep_cont, \
joint_cont, v_semilattice, lawson, gdelta_separated, t0, t1, t2. \
Expressions combine them with ! (not), & (and), | (or) and parentheses, binding in that order.";

/// Finite topologized posets and semilattices.
///
/// Exit codes: 0 success, 1 no witness or a negative result, 2 input error,
/// 3 resource cap.
#[derive(Parser)]
#[command(name = "ordtop", version, after_help = PREDICATE_HELP)]
struct Cli {
    /// Worker threads for searches and audits (0 picks the default).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate predicates or expressions on a structure file.
    Check {
        file: PathBuf,
        /// Predicate names or expressions; all applicable predicates if none.
        props: Vec<String>,
    },
    /// Find the first structure satisfying an expression.
    Search {
        expr: String,
        #[arg(long, default_value = "topo_poset")]
        kind: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Maximum number of structures examined.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Examine one representative per isomorphism class.
        #[arg(long)]
        modulo_iso: bool,
        /// Write the witness structure file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Implication audit and theorem sweeps.
    Audit {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Count structures.
    Enumerate {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Codomain size for morphism pairs (defaults to `n`).
        #[arg(long)]
        n_y: Option<usize>,
        #[arg(long)]
        modulo_iso: bool,
        #[arg(long, value_enum, default_value_t = Mode::AllowEmpty)]
        mode: Mode,
    },
    /// Canonical structure file, or DOT with `--dot`.
    Export {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
        /// Draw the specialization preorder instead of the order.
        #[arg(long, requires = "dot")]
        specialization: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a brute-force oracle against the fast path.
    Oracle {
        #[arg(long, value_enum)]
        name: OracleName,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    AllowEmpty,
    Nonempty,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleName {
    RelationCount,
    PosetCount,
    FamilyCount,
    TableCount,
    CoverCompactness,
    LawsonLiteral,
}

enum Failure {
    Negative,
    Input(Error),
    Cap(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_cap() {
            Failure::Cap(e)
        } else {
            Failure::Input(e)
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn flag_text(f: &Flag) -> String {
    match f {
        Flag::Value(b) => b.to_string(),
        Flag::Unevaluated(why) => format!("unevaluated ({why})"),
    }
}

fn check(file: &Path, props: &[String], as_json: bool) -> Outcome {
    let loaded = io::load(&read(file)?)?;
    let subject = loaded
        .structure
        .subject()
        .ok_or_else(|| Error::InvalidFile("structure has no topology".into()))?;
    let mut rows: Vec<(String, Flag)> = Vec::new();
    if props.is_empty() {
        for &p in Predicate::ALL {
            match predicate::evaluate(p, subject) {
                Ok(f) => rows.push((p.name().to_string(), f)),
                Err(Error::NotApplicable { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
    }
    for prop in props {
        let expr = PredicateExpr::parse(prop)?;
        expr.check_applicable(subject)?;
        let flag = match &expr {
            PredicateExpr::Atom(p) => predicate::evaluate(*p, subject)?,
            _ => match expr.evaluate(subject)? {
                Some(b) => Flag::Value(b),
                None => Flag::Unevaluated("an operand is unevaluated".into()),
            },
        };
        rows.push((prop.clone(), flag));
    }
    if as_json {
        let results: Vec<_> = rows
            .iter()
            .map(|(name, f)| match f {
                Flag::Value(b) => json!({ "prop": name, "value": b }),
                Flag::Unevaluated(why) => json!({ "prop": name, "value": null, "reason": why }),
            })
            .collect();
        print_json(&json!({
            "kind": loaded.structure.kind(),
            "n": loaded.structure.n(),
            "discrete_default": loaded.discrete_default,
            "results": results,
        }));
    } else {
        if loaded.discrete_default {
            println!("note: no opens given, using the discrete topology");
        }
        for (name, f) in &rows {
            println!("{name}: {}", flag_text(f));
        }
    }
    Ok(())
}

fn witness_file(s: &Structure) -> Option<String> {
    StructureFile::from_structure(s).ok().map(|f| f.to_json())
}

#[allow(clippy::too_many_arguments)]
fn search_cmd(
    expr: &str,
    kind: &str,
    max_n: usize,
    budget: u64,
    modulo_iso: bool,
    out: Option<&Path>,
    workers: usize,
    as_json: bool,
) -> Outcome {
    let expr = PredicateExpr::parse(expr)?;
    let kind: Kind = kind.parse()?;
    let report = search::search_up_to(&expr, kind, max_n, budget, modulo_iso, workers)?;
    match report.outcome {
        WitnessOutcome::Found(w) => {
            let file = witness_file(&w.structure);
            if let (Some(path), Some(text)) = (out, &file) {
                write(path, text)?;
            }
            if as_json {
                print_json(&json!({
                    "status": "found",
                    "n": report.n,
                    "index": w.index,
                    "canonical": w.canonical,
                    "structure": w.structure.describe(),
                    "file": file.as_deref().map(|t| serde_json::from_str::<serde_json::Value>(t).expect("json")),
                }));
            } else {
                println!("witness at n = {} (index {})", report.n, w.index);
                println!("canonical: {}", w.canonical);
                println!("structure: {}", w.structure.describe());
                if out.is_none() {
                    if let Some(text) = &file {
                        print!("{text}");
                    }
                }
            }
            Ok(())
        }
        WitnessOutcome::Exhausted {
            examined,
            undetermined,
        } => {
            if as_json {
                print_json(&json!({
                    "status": "exhausted",
                    "max_n": max_n,
                    "examined": examined,
                    "undetermined": undetermined,
                }));
            } else {
                println!(
                    "no witness up to n = {max_n} (examined {examined}, undetermined {undetermined})"
                );
            }
            Err(Failure::Negative)
        }
        WitnessOutcome::BudgetExceeded { examined } => {
            if as_json {
                print_json(
                    &json!({ "status": "budget_exceeded", "n": report.n, "examined": examined }),
                );
            } else {
                println!(
                    "budget exhausted at n = {} after {examined} structures",
                    report.n
                );
            }
            Err(Failure::Cap(Error::CapacityExceeded {
                what: "search budget",
                size: examined as usize,
                cap: budget as usize,
            }))
        }
    }
}

fn audit(max_n: usize, workers: usize, as_json: bool) -> Outcome {
    let report = search::implication_audit(max_n, workers)?;
    if as_json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.violations == 0 {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn enumerate_cmd(
    kind: &str,
    n: usize,
    n_y: Option<usize>,
    modulo_iso: bool,
    mode: Mode,
    workers: usize,
    as_json: bool,
) -> Outcome {
    let kind: Kind = kind.parse()?;
    let mode = match mode {
        Mode::AllowEmpty => ValueMode::AllowEmpty,
        Mode::Nonempty => ValueMode::Nonempty,
    };
    let spec = EnumSpec::pair(kind, n, n_y.unwrap_or(n))
        .modulo_iso(modulo_iso)
        .mode(mode);
    let count = search::count(&spec, workers)?;
    if as_json {
        print_json(&json!({ "spec": spec, "count": count }));
    } else {
        println!("{count}");
    }
    Ok(())
}

fn export(file: &Path, dot: bool, specialization: bool, out: Option<&Path>) -> Outcome {
    let text = read(file)?;
    let result = if dot {
        io::to_dot(&io::load(&text)?.structure, specialization)?
    } else {
        io::canonicalize(&text)?
    };
    match out {
        Some(path) => write(path, &result),
        None => {
            print!("{result}");
            Ok(())
        }
    }
}

/// `(label, oracle value, fast value)` rows; the oracle passes when all agree.
fn oracle_cmd(name: OracleName, n: usize, workers: usize, as_json: bool) -> Outcome {
    let rows: Vec<(String, u64, u64)> = match name {
        OracleName::RelationCount => vec![(
            "labeled topologies".into(),
            oracle::relation_count(n, false)?,
            topologies_checked(n)?,
        )],
        OracleName::PosetCount => {
            let o = oracle::relation_count(n, true)?;
            check_cap(n)?;
            vec![("labeled posets".into(), o, generate::posets(n).len() as u64)]
        }
        OracleName::FamilyCount => vec![(
            "labeled topologies".into(),
            oracle::family_filter_count(n)?,
            topologies_checked(n)?,
        )],
        OracleName::TableCount => {
            let o = oracle::semilattice_table_count(n)?;
            check_cap(n)?;
            vec![(
                "labeled semilattices".into(),
                o,
                generate::semilattices(n).len() as u64,
            )]
        }
        OracleName::CoverCompactness => {
            check_cap(n)?;
            let mut subsets = 0u64;
            let mut compact = 0u64;
            for t in generate::topologies(n).iter() {
                for k in ordtop::mask::all_subsets(n) {
                    subsets += 1;
                    compact += t.is_compact_subset(k)? as u64;
                }
            }
            vec![(
                "compact subsets (every finite subset is compact)".into(),
                compact,
                subsets,
            )]
        }
        OracleName::LawsonLiteral => {
            EnumSpec::new(Kind::TopoSemilattice, n).validate()?;
            let all = generate::topo_semilattices(n);
            let agree = search::with_pool(workers, || {
                use rayon::prelude::*;
                all.par_iter()
                    .filter(|ts| ts.is_lawson() == oracle::lawson_literal(ts))
                    .count() as u64
            });
            vec![(
                "lawson fast path agrees with base search".into(),
                agree,
                all.len() as u64,
            )]
        }
    };
    let ok = rows.iter().all(|(_, a, b)| a == b);
    if as_json {
        let list: Vec<_> = rows
            .iter()
            .map(|(l, a, b)| json!({ "check": l, "oracle": a, "fast": b, "agree": a == b }))
            .collect();
        print_json(&json!({ "n": n, "rows": list, "agree": ok }));
    } else {
        for (label, a, b) in &rows {
            println!(
                "{label}: oracle {a}, fast {b}, {}",
                if a == b { "agree" } else { "DIFFER" }
            );
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn check_cap(n: usize) -> std::result::Result<(), Error> {
    if n > generate::GENERATOR_MAX_N {
        return Err(Error::CapacityExceeded {
            what: "generator carrier",
            size: n,
            cap: generate::GENERATOR_MAX_N,
        });
    }
    Ok(())
}

fn topologies_checked(n: usize) -> std::result::Result<u64, Error> {
    check_cap(n)?;
    Ok(generate::topologies(n).len() as u64)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (w, j) = (cli.workers, cli.json);
    let result = match cli.command {
        Command::Check { file, props } => check(&file, &props, j),
        Command::Search {
            expr,
            kind,
            max_n,
            budget,
            modulo_iso,
            out,
        } => search_cmd(
            &expr,
            &kind,
            max_n,
            budget,
            modulo_iso,
            out.as_deref(),
            w,
            j,
        ),
        Command::Audit { max_n } => audit(max_n, w, j),
        Command::Enumerate {
            kind,
            n,
            n_y,
            modulo_iso,
            mode,
        } => enumerate_cmd(&kind, n, n_y, modulo_iso, mode, w, j),
        Command::Export {
            file,
            dot,
            specialization,
            out,
        } => export(&file, dot, specialization, out.as_deref()),
        Command::Oracle { name, n } => oracle_cmd(name, n, w, j),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
