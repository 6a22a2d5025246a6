use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use samuel::analysis::Budgets;
use samuel::corpus::{run_corpus, CorpusConfig, CorpusReport};
use samuel::golden::{verify_paper, GoldenReport};
use samuel::input::parse_input;
use samuel::report::{document, exit_code, to_csv, to_text, Format};
use samuel::theorems::check_with_triage;

#[derive(Parser)]
#[command(name = "samuel", version, about = "Invariants of m-primary ideals in Q[x1..xd]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Largest power considered.
    #[arg(long = "nmax", value_parser = clap::value_parser!(u32).range(1..))]
    n_max: Option<u32>,
    /// Consecutive stable powers required before a chain is called stable.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    window: Option<u32>,
    /// Number of sampled minimal reductions.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Lowest n scanned for the postulation number.
    #[arg(long, allow_hyphen_values = true)]
    floor: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the ideal described in an input file.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Recompute the embedded reference examples.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the theorem checks over a generated corpus.
    Fuzz {
        /// TOML corpus configuration; defaults apply when omitted.
        config: Option<PathBuf>,
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Directory for reproducer files of violations.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { file, budgets, format } => analyze(&file, budgets, format),
        Command::VerifyPaper { format } => verify(format),
        Command::Fuzz { config, count, budgets, dump, format } => fuzz(config, count, budgets, dump, format),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn analyze(file: &PathBuf, args: BudgetArgs, format: Format) -> Result<u8, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let input = parse_input(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let d = Budgets::default();
    let budgets = Budgets {
        n_max: args.n_max.unwrap_or(d.n_max),
        window: args.window.unwrap_or(d.window),
        samples: args.samples.map_or(d.samples, |s| s as usize),
        seed: args.seed.unwrap_or(d.seed),
        floor: args.floor,
        ..d
    };
    let element = input.element.as_ref().map(|e| &e.1);
    let t = check_with_triage(&input.ring, &input.ideal, element, budgets).map_err(|e| e.to_string())?;
    let rerun = t.rerun.then_some(t.budget_artifacts.as_slice());
    let doc = document(&t.analysis, &t.verdicts, rerun);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc).unwrap()),
        Format::Csv => print!("{}", to_csv(&doc)),
        Format::Text => print!("{}", to_text(&t.analysis, &t.verdicts)),
    }
    Ok(exit_code(&t.analysis, &t.verdicts) as u8)
}

fn verify(format: Format) -> Result<u8, String> {
    let report = verify_paper();
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Csv => print!("{}", golden_csv(&report)),
        Format::Text => print!("{}", golden_text(&report)),
    }
    Ok(if report.passed == report.total { 0 } else { 2 })
}

fn golden_text(r: &GoldenReport) -> String {
    let mut s = String::new();
    for ex in &r.examples {
        s += &format!("{} {} ({})\n", if ex.pass { "PASS" } else { "FAIL" }, ex.name, ex.ideal.join(", "));
        if let Some(e) = &ex.error {
            s += &format!("    error: {e}\n");
        }
        for c in &ex.checks {
            s += &format!(
                "    {} {:<40} expected {} computed {}\n",
                if c.pass { "ok  " } else { "FAIL" },
                c.name,
                c.expected,
                c.computed
            );
            if let Some(n) = c.note {
                s += &format!("         note: {n}\n");
            }
        }
    }
    s += &format!("{}/{} examples pass\n", r.passed, r.total);
    s
}

fn golden_csv(r: &GoldenReport) -> String {
    let mut s = String::from("example,check,expected,computed,pass\n");
    for ex in &r.examples {
        for c in &ex.checks {
            let q = |v: String| format!("\"{}\"", v.replace('"', "\"\""));
            s += &format!("{},{},{},{},{}\n", ex.name, q(c.name.into()), q(c.expected.to_string()), q(c.computed.to_string()), c.pass);
        }
    }
    s
}

fn fuzz(
    config: Option<PathBuf>,
    count: Option<usize>,
    args: BudgetArgs,
    dump: Option<PathBuf>,
    format: Format,
) -> Result<u8, String> {
    let mut cfg = match &config {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            CorpusConfig::from_toml(&text).map_err(|e| e.to_string())?
        }
        None => CorpusConfig::default(),
    };
    if let Some(c) = count {
        cfg.count = c;
    }
    cfg.n_max = args.n_max.unwrap_or(cfg.n_max);
    cfg.window = args.window.unwrap_or(cfg.window);
    cfg.samples = args.samples.map_or(cfg.samples, |s| s as usize);
    cfg.seed = args.seed.unwrap_or(cfg.seed);
    cfg.floor = args.floor.or(cfg.floor);
    if let Some(d) = &dump {
        std::fs::create_dir_all(d).map_err(|e| format!("{}: {e}", d.display()))?;
    }
    let report = run_corpus(&cfg, dump.as_deref());
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Csv => print!("{}", to_csv(&serde_json::to_value(&report.summary).unwrap())),
        Format::Text => print!("{}", corpus_text(&report)),
    }
    Ok(if report.violations > 0 { 2 } else { 0 })
}

fn corpus_text(r: &CorpusReport) -> String {
    let mut s = format!("{} ideals, {} violations, {} with errors\n", r.items.len(), r.violations, r.errors);
    for (id, counts) in &r.summary {
        let parts: Vec<String> = counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s += &format!("  {id:<28} {}\n", parts.join(" "));
    }
    for it in r.items.iter().filter(|i| !i.violations.is_empty()) {
        let ids: Vec<&str> = it.violations.iter().map(|v| v.id).collect();
        s += &format!("  violated {:?} #{} ({}) {}\n", it.kind, it.index, it.ideal.join(", "), ids.join(", "));
    }
    s
}
