use std::fmt::Write as _;
use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{Map, Value};

use cgc::fixtures::{fixture, fixtures, NAMES};
use cgc::report::{free_distance_of, verify_checks, Report};
use cgc::spec_file::{CodeSpecFile, SpecError};

const EXIT_CHECK_FAILED: u8 = 1;

/// Convolutional Goppa codes: construction, duals and free distance.
#[derive(Parser)]
#[command(name = "cgc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the code and print a JSON report.
    Report {
        spec: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include a state-space realization.
        #[arg(long)]
        realize: bool,
    },
    /// Run rank and duality checks.
    Verify { spec: PathBuf },
    /// Print the free distance.
    Freedist {
        spec: PathBuf,
        /// Also run the brute-force oracle with this input degree bound.
        #[arg(long, value_name = "DEG_BOUND")]
        oracle: Option<usize>,
    },
    /// Emit the built-in example specs.
    Examples {
        /// Write one `<name>.json` file per example into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Emit only this example.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(NAMES))]
        name: Option<String>,
    },
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        let disabled = std::env::var("CGC_COLOR").is_ok_and(|v| v == "0");
        Style { color: !disabled && io::stdout().is_terminal() }
    }

    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }
}

fn load(path: &Path) -> Result<CodeSpecFile, SpecError> {
    let text = fs::read_to_string(path).map_err(|e| SpecError::Parse(format!("{}: {e}", path.display())))?;
    CodeSpecFile::from_json(&text)
}

fn fail(e: &SpecError) -> ExitCode {
    eprintln!("cgc: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn io_fail(path: &Path, e: io::Error) -> ExitCode {
    eprintln!("cgc: {}: {e}", path.display());
    ExitCode::from(EXIT_CHECK_FAILED)
}

fn report(spec: &Path, out: Option<&Path>, realize: bool, stdout: &mut String) -> ExitCode {
    let r = match load(spec).and_then(|s| Report::build(&s, realize)) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let text = r.to_json_string();
    match out {
        Some(p) => fs::write(p, text).map_or_else(|e| io_fail(p, e), |()| ExitCode::SUCCESS),
        None => {
            stdout.push_str(&text);
            ExitCode::SUCCESS
        }
    }
}

fn verify(spec: &Path, stdout: &mut String) -> ExitCode {
    let checks = match load(spec).and_then(|s| verify_checks(&s)) {
        Ok(c) => c,
        Err(e) => return fail(&e),
    };
    let style = Style::detect();
    let mut ok = true;
    for c in &checks {
        let tag = match (c.passed, c.required) {
            (true, _) => style.paint("32", "PASS"),
            (false, true) => style.paint("31", "FAIL"),
            (false, false) => style.paint("33", "INFO"),
        };
        writeln!(stdout, "{tag} {}", c.name).unwrap();
        ok &= c.passed || !c.required;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn freedist(spec: &Path, oracle: Option<usize>, stdout: &mut String) -> ExitCode {
    match load(spec).and_then(|s| free_distance_of(&s, oracle)) {
        Ok((d, None)) => {
            writeln!(stdout, "{d}").unwrap();
            ExitCode::SUCCESS
        }
        Ok((d, Some(o))) => {
            writeln!(stdout, "{d} {o}").unwrap();
            if d == o {
                ExitCode::SUCCESS
            } else {
                eprintln!("cgc: oracle mismatch: state search gives {d}, oracle gives {o}");
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(e) => fail(&e),
    }
}

fn examples(out_dir: Option<&Path>, name: Option<&str>, stdout: &mut String) -> ExitCode {
    let selected = match name {
        Some(n) => vec![fixture(n).expect("validated by clap")],
        None => fixtures(),
    };
    match out_dir {
        Some(dir) => {
            if let Err(e) = fs::create_dir_all(dir) {
                return io_fail(dir, e);
            }
            for fx in &selected {
                let path = dir.join(format!("{}.json", fx.name));
                if let Err(e) = fs::write(&path, fx.spec.to_json() + "\n") {
                    return io_fail(&path, e);
                }
                writeln!(stdout, "{}", path.display()).unwrap();
            }
        }
        None if selected.len() == 1 => writeln!(stdout, "{}", selected[0].spec.to_json()).unwrap(),
        None => {
            let all: Map<String, Value> = selected
                .iter()
                .map(|fx| (fx.name.to_string(), serde_json::to_value(&fx.spec).expect("spec serializes")))
                .collect();
            writeln!(stdout, "{}", serde_json::to_string_pretty(&all).expect("specs serialize")).unwrap();
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = String::new();
    let code = match &cli.command {
        Command::Report { spec, out, realize } => report(spec, out.as_deref(), *realize, &mut stdout),
        Command::Verify { spec } => verify(spec, &mut stdout),
        Command::Freedist { spec, oracle } => freedist(spec, *oracle, &mut stdout),
        Command::Examples { out_dir, name } => examples(out_dir.as_deref(), name.as_deref(), &mut stdout),
    };
    let mut out = io::stdout().lock();
    match out.write_all(stdout.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("cgc: {e}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
        _ => code,
    }
}
