use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use gt_cli::eval::builtin_signatures;
use gt_cli::{CliError, Context};
use gt_core::arith::is_prime;
use gt_core::corpus::corpus_under_60;
use gt_core::io::{read_group_with, write_group};
use gt_core::simple::normal_subgroup_with_method;
use gt_core::{Error, Limits};

#[derive(Parser)]
#[command(name = "gt", version, about = "Finite group calculator over explicit Cayley tables")]
struct Cli {
    /// Lift the order and symmetric-degree caps
    #[arg(long, global = true)]
    force_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression and print the result
    Eval {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Read expressions from stdin, one per line; `:quit` exits
    Repl,
    /// Evaluate each line of a file, stopping at the first error
    Batch { file: PathBuf },
    /// Find a proper normal subgroup for every sample group of composite order below 60
    #[command(name = "classify-under-60")]
    ClassifyUnder60,
    /// Rewrite a group file in canonical layout
    Fmt {
        file: PathBuf,
        /// Overwrite the file instead of printing
        #[arg(short = 'i', long)]
        in_place: bool,
    },
    /// List the builtins of the expression language
    Builtins,
}

/// Limits from the flags and the `GT_MAX_ORDER` environment variable.
fn limits(force_large: bool) -> Result<Limits, String> {
    if force_large {
        return Ok(Limits::unlimited());
    }
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var("GT_MAX_ORDER") {
        limits.max_order = v
            .trim()
            .parse()
            .map_err(|_| format!("GT_MAX_ORDER must be a natural number, found `{v}`"))?;
    }
    Ok(limits)
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn run_lines(ctx: &Context, input: impl BufRead, stop_on_error: bool) -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut status = ExitCode::SUCCESS;
    for line in input.lines() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == ":quit" {
            break;
        }
        match ctx.eval_str(line) {
            Ok(v) => {
                let _ = writeln!(out, "{v}");
                let _ = out.flush();
            }
            Err(e) => {
                let code = report(&e);
                if stop_on_error || e.exit_code() == 2 {
                    return code;
                }
                status = code;
            }
        }
    }
    status
}

fn classify(limits: &Limits) -> ExitCode {
    let groups: Vec<_> = corpus_under_60()
        .into_iter()
        .filter(|g| g.group.order() >= 4 && !is_prime(g.group.order()))
        .filter(|g| limits.check_order(g.group.order()).is_ok())
        .collect();
    let results: Vec<_> = groups.par_iter().map(|g| normal_subgroup_with_method(&g.group)).collect();
    let mut failures = 0;
    for (g, r) in groups.iter().zip(&results) {
        match r {
            Ok((h, method)) => println!(
                "{} {} witness-order={} method={}",
                g.group.order(),
                g.name,
                h.order(),
                method
            ),
            Err(e) => {
                failures += 1;
                eprintln!("error: {} {}: {e}", g.group.order(), g.name);
            }
        }
    }
    eprintln!("{} groups, {} failures", groups.len(), failures);
    if failures > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn fmt_file(file: &PathBuf, in_place: bool, limits: &Limits) -> ExitCode {
    let result = std::fs::read_to_string(file)
        .map_err(Error::from)
        .and_then(|text| read_group_with(&text, limits));
    let g = match result {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(1);
        }
    };
    let text = write_group(&g);
    if in_place {
        if let Err(e) = std::fs::write(file, text) {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(1);
        }
    } else {
        print!("{text}");
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match limits(cli.force_large) {
        Ok(l) => l,
        Err(m) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let ctx = Context::new(limits);
    match cli.command {
        Command::Eval { expr } => match ctx.eval_str(&expr.join(" ")) {
            Ok(v) => {
                println!("{v}");
                ExitCode::SUCCESS
            }
            Err(e) => report(&e),
        },
        Command::Repl => run_lines(&ctx, io::stdin().lock(), false),
        Command::Batch { file } => match std::fs::File::open(&file) {
            Ok(f) => run_lines(&ctx, io::BufReader::new(f), true),
            Err(e) => {
                eprintln!("error: {}: {e}", file.display());
                ExitCode::from(1)
            }
        },
        Command::ClassifyUnder60 => classify(&limits),
        Command::Fmt { file, in_place } => fmt_file(&file, in_place, &limits),
        Command::Builtins => {
            for s in builtin_signatures() {
                println!("{s}");
            }
            ExitCode::SUCCESS
        }
    }
}
