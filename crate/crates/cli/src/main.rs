use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use harmonia_cli::{defaults, run, validate, CliError, CliResult, ExperimentConfig, Format, CATALOG};

#[derive(Parser)]
#[command(name = "harmonia", version, about = "Seeded harmonic-analysis experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment and write its table.
    Run(ConfigArgs),
    /// Check a config without running it.
    Validate(ConfigArgs),
    /// List experiments, optionally filtered by a substring.
    List { filter: Option<String> },
    /// Print the resolved config as JSON.
    Config(ConfigArgs),
}

#[derive(Args)]
struct ConfigArgs {
    /// Experiment name; its documented defaults fill the config.
    #[arg(long)]
    experiment: Option<String>,
    /// JSON config file with every field present.
    #[arg(long)]
    config: Option<String>,
    /// Override a field, e.g. `grid.n=2048` or `params.p=inf`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    sets: Vec<String>,
    /// Output path, `-` for stdout.
    #[arg(long)]
    out: Option<String>,
    #[arg(long, value_parser = ["csv", "json"])]
    format: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

fn resolve(a: &ConfigArgs) -> CliResult<ExperimentConfig> {
    let mut cfg = match (&a.config, &a.experiment) {
        (Some(path), name) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Validation(format!("cannot read config {path}: {e}")))?;
            let cfg: ExperimentConfig =
                serde_json::from_str(&text).map_err(|e| CliError::Validation(format!("config {path}: {e}")))?;
            if let Some(n) = name.as_ref().filter(|n| **n != cfg.experiment) {
                return Err(CliError::Validation(format!(
                    "--experiment {n} disagrees with the config's {:?}",
                    cfg.experiment
                )));
            }
            cfg
        }
        (None, Some(name)) => defaults(name)?,
        (None, None) => return Err(CliError::Validation("give --experiment or --config".into())),
    };
    for s in &a.sets {
        cfg.set(s)?;
    }
    if let Some(seed) = a.seed {
        cfg.seed = seed;
    }
    if let Some(out) = &a.out {
        cfg.out = out.clone();
    }
    if let Some(f) = &a.format {
        cfg.format = if f == "json" { Format::Json } else { Format::Csv };
    }
    Ok(cfg)
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn say(text: &str) -> CliResult<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Runtime(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn emit(path: &str, text: &str) -> CliResult<()> {
    if path == "-" {
        say(text)
    } else {
        std::fs::write(path, text).map_err(|e| CliError::Runtime(format!("cannot write {path}: {e}")))
    }
}

fn execute(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::List { filter } => {
            let f = filter.unwrap_or_default();
            let mut text = String::new();
            for e in CATALOG.iter().filter(|e| e.name.contains(&f)) {
                let crit = e.criterion.map(|c| format!("[{c}] ")).unwrap_or_default();
                text += &format!("{:<18} {crit}{}\n", e.name, e.summary);
                text += &format!("{:<18} fields: {}\n", "", e.required().join(", "));
            }
            say(&text)
        }
        Command::Config(a) => {
            let cfg = resolve(&a)?;
            say(&(serde_json::to_string_pretty(&cfg).expect("config serializes") + "\n"))
        }
        Command::Validate(a) => {
            let diags = validate(&resolve(&a)?);
            if diags.is_empty() {
                say("ok\n")
            } else {
                Err(CliError::Validation(diags.join("; ")))
            }
        }
        Command::Run(a) => {
            let cfg = resolve(&a)?;
            let table = run(&cfg)?;
            emit(&cfg.out, &table.render(cfg.format))?;
            match table.passed() {
                Some(true) => eprintln!("{}: all {} rows pass", cfg.experiment, table.rows.len()),
                Some(false) => {
                    let fails = table.column("pass").unwrap().iter().filter(|&&v| v != 1.0).count();
                    eprintln!("{}: {fails} of {} rows fail", cfg.experiment, table.rows.len());
                }
                None => {}
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("harmonia: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
