//! Command-line front end: emits character tables, lists agreeing character
//! pairs, runs the class-sum generation reports and the classification
//! verdicts, and counts l'-classes.
//!
//! Exit codes: 0 success / verification PASS, 1 usage or range error,
//! 2 classification mismatch.

mod cache;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use spinchar::agreement::{agreement_cliques_on, table_of, Scope};
use spinchar::characters::CharacterTable;
use spinchar::class_algebra::check_generation;
use spinchar::partitions::count_l_prime_classes;
use spinchar::{agreeing_pairs, verify_classification, GroupKind};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "spinchar", version, about = "Exact character tables of symmetric and alternating groups and their double covers", disable_help_subcommand = true)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Table cache directory (also honours SPINCHAR_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sym,
    Alt,
    SpinSym,
    SpinAlt,
}

impl GroupArg {
    fn kind(self, n: u32) -> GroupKind {
        match self {
            GroupArg::Sym => GroupKind::Sym(n),
            GroupArg::Alt => GroupKind::Alt(n),
            GroupArg::SpinSym => GroupKind::SpinSym(n),
            GroupArg::SpinAlt => GroupKind::SpinAlt(n),
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct GroupSelector {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the full character table.
    Table {
        #[command(flatten)]
        select: GroupSelector,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// List pairs and cliques of irreducible characters agreeing on l'-classes.
    Agree {
        #[command(flatten)]
        select: GroupSelector,
        #[arg(long)]
        l: u32,
        /// all-irreducible or spin-only
        #[arg(long, default_value = "all-irreducible")]
        scope: String,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Check the class-sum generation theorems by subalgebra closure.
    Generate {
        #[command(flatten)]
        select: GroupSelector,
        #[arg(long)]
        l: u32,
        /// Run outside the theorem hypotheses.
        #[arg(long)]
        force: bool,
        /// Append a TSV certificate expressing each target in the basis.
        #[arg(long)]
        certificate: bool,
    },
    /// Compare the found agreeing pairs against the classification.
    Verify {
        #[command(flatten)]
        select: GroupSelector,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Count l'-classes of S_n with the Glaisher cross-check.
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Exploratory: do agreeing pairs have equal vanishing sets?
    VanishCompare {
        #[command(flatten)]
        select: GroupSelector,
        #[arg(long, default_value = "3")]
        l: u32,
        #[arg(long, default_value = "all-irreducible")]
        scope: String,
    },
}

#[derive(Serialize)]
struct ConfigEcho {
    group: Option<String>,
    n: u32,
    l: Option<u32>,
    scope: Option<String>,
    format: String,
}

fn main() -> ExitCode {
    // behave like a well-mannered pipeline citizen: die quietly on SIGPIPE
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap prints its own message; usage problems are exit code 1
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("--threads must be positive");
            return ExitCode::from(1);
        }
        if rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .is_err()
        {
            eprintln!("thread pool was already configured");
        }
    }
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SPINCHAR_CACHE_DIR").map(PathBuf::from));
    match run(cli, cache_dir) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_table(kind: GroupKind, cache_dir: &Option<PathBuf>) -> Result<Arc<CharacterTable>, String> {
    kind.validate().map_err(|e| e.to_string())?;
    if let Some(dir) = cache_dir {
        if let Some(table) = cache::cache_load(dir, kind) {
            return Ok(table);
        }
    }
    let table = table_of(kind).map_err(|e| e.to_string())?;
    if let Some(dir) = cache_dir {
        if let Err(e) = cache::cache_store(dir, &table) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    Ok(table)
}

fn run(cli: Cli, cache_dir: Option<PathBuf>) -> Result<ExitCode, String> {
    match cli.command {
        Command::Table { select, format } => {
            let kind = select.group.kind(select.n);
            let table = load_table(kind, &cache_dir)?;
            match format {
                Format::Tsv => {
                    let mut header = vec!["char".to_string()];
                    header.extend(table.classes.iter().map(|c| c.id.to_string()));
                    println!("{}", header.join("\t"));
                    for (row, id) in table.chars.iter().enumerate() {
                        let mut line = vec![id.to_string()];
                        line.extend(table.values[row].iter().map(|v| v.to_string()));
                        println!("{}", line.join("\t"));
                    }
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "config": ConfigEcho {
                            group: Some(kind.family_name().into()),
                            n: select.n,
                            l: None,
                            scope: None,
                            format: "json".into(),
                        },
                        "table": table.to_dto(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Agree {
            select,
            l,
            scope,
            format,
        } => {
            let kind = select.group.kind(select.n);
            kind.validate().map_err(|e| e.to_string())?;
            validate_l(l)?;
            let scope = Scope::from_str(&scope)?;
            let pairs = agreeing_pairs(kind, l, scope).map_err(|e| e.to_string())?;
            let table = table_of(kind).map_err(|e| e.to_string())?;
            let cliques = agreement_cliques_on(&table, l, scope);
            match format {
                Format::Tsv => {
                    for p in &pairs {
                        println!("pair\t{}\t{}\t{:?}", p.a, p.b, p.kind);
                    }
                    for c in &cliques {
                        let names: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                        println!("clique\t{{{}}}", names.join(", "));
                    }
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "config": ConfigEcho {
                            group: Some(kind.family_name().into()),
                            n: select.n,
                            l: Some(l),
                            scope: Some(format!("{:?}", scope)),
                            format: "json".into(),
                        },
                        "pairs": pairs.iter().map(|p| serde_json::json!({
                            "a": p.a.to_string(),
                            "b": p.b.to_string(),
                            "kind": p.kind,
                        })).collect::<Vec<_>>(),
                        "cliques": cliques.iter().map(|c| {
                            c.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            select,
            l,
            force,
            certificate,
        } => {
            let kind = select.group.kind(select.n);
            kind.validate().map_err(|e| e.to_string())?;
            validate_l(l)?;
            let report = check_generation(kind, l, force).map_err(|e| e.to_string())?;
            let doc = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "config": ConfigEcho {
                    group: Some(kind.family_name().into()),
                    n: select.n,
                    l: Some(l),
                    scope: None,
                    format: "json".into(),
                },
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            if certificate {
                println!();
                println!("target\tbasis_coefficients");
                for (label, coeffs) in &report.certificates {
                    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                    println!("{label}\t{}", parts.join("\t"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { select, l, format } => {
            let kind = select.group.kind(select.n);
            kind.validate().map_err(|e| e.to_string())?;
            validate_l(l)?;
            let report = verify_classification(kind, l).map_err(|e| e.to_string())?;
            match format {
                Format::Tsv => {
                    println!("status\t{}", if report.status { "PASS" } else { "FAIL" });
                    for (a, b) in &report.found {
                        println!("found\t{a}\t{b}");
                    }
                    for (a, b) in &report.extra {
                        println!("extra\t{a}\t{b}");
                    }
                    for (a, b) in &report.missing {
                        println!("missing\t{a}\t{b}");
                    }
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "config": ConfigEcho {
                            group: Some(kind.family_name().into()),
                            n: select.n,
                            l: Some(l),
                            scope: None,
                            format: "json".into(),
                        },
                        "report": report,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(if report.status {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Count { n, l, format } => {
            if n > 40 {
                return Err(format!("n = {n} is out of the supported range"));
            }
            validate_l(l)?;
            let report = count_l_prime_classes(n, l);
            match format {
                Format::Tsv => {
                    println!("n\t{}", report.n);
                    println!("l\t{}", report.l);
                    println!("l_prime_classes\t{}", report.l_prime_classes);
                    println!(
                        "no_part_repeated_l_times\t{}",
                        report.no_part_repeated_l_times
                    );
                    println!("no_part_divisible_by_l\t{}", report.no_part_divisible_by_l);
                    match report.glaisher_equality {
                        Some(ok) => println!("glaisher_equality\t{ok}"),
                        None => println!("glaisher_equality\tnot-applicable"),
                    }
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "config": ConfigEcho {
                            group: None,
                            n,
                            l: Some(l),
                            scope: None,
                            format: "json".into(),
                        },
                        "report": report,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VanishCompare { select, l, scope } => {
            let kind = select.group.kind(select.n);
            kind.validate().map_err(|e| e.to_string())?;
            validate_l(l)?;
            let scope = Scope::from_str(&scope)?;
            let table = table_of(kind).map_err(|e| e.to_string())?;
            let pairs = agreeing_pairs(kind, l, scope).map_err(|e| e.to_string())?;
            println!("a\tb\tequal_vanishing_sets");
            for p in &pairs {
                let ia = table.char_index(&p.a).unwrap();
                let ib = table.char_index(&p.b).unwrap();
                let va: Vec<bool> = table.values[ia].iter().map(|v| v.is_zero()).collect();
                let vb: Vec<bool> = table.values[ib].iter().map(|v| v.is_zero()).collect();
                println!("{}\t{}\t{}", p.a, p.b, va == vb);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn validate_l(l: u32) -> Result<(), String> {
    if l < 2 {
        return Err(format!("l must be at least 2, got {l}"));
    }
    Ok(())
}
