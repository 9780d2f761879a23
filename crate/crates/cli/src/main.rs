use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::error::ErrorKind;
use clap::Parser;
use grassmann::io::report::digest;
use grassmann::io::{run, Artifact, Command, Options, Report};
use grassmann::Error;

/// Straightedge constructions on plane cubics, in exact arithmetic.
///
/// Scenes are TOML files of named points and lines; results are JSON
/// reports. Exit status: 0 success or true, 1 false, 2 degenerate input or
/// violated hypothesis, 3 parse, usage or I/O error, 4 a result failed its
/// verification.
#[derive(Debug, Parser)]
#[command(name = "grassmann", version, after_help = commands_help())]
struct Cli {
    #[arg(value_parser = PossibleValuesParser::new(Command::ALL.map(Command::name)))]
    command: String,

    /// Scene file, or `-` for standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,

    /// Where to write the report, or the scene / SVG for `random` and `plot`.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Expression for `eval`.
    #[arg(long, value_name = "STRING", allow_hyphen_values = true)]
    expr: Option<String>,

    /// Seed for `random`.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,

    /// Extra points on the cubic for `random`.
    #[arg(long, value_name = "N")]
    count: Option<usize>,

    /// Point name; repeat or separate with commas where a command takes
    /// several.
    #[arg(long = "point", value_name = "NAME", value_delimiter = ',')]
    points: Vec<String>,

    /// Include construction steps in the report.
    #[arg(long)]
    verbose: bool,
}

fn commands_help() -> String {
    let mut s = String::from("Commands:\n");
    for c in Command::ALL {
        s.push_str(&format!("  {:<14}{}\n", c.name(), c.about()));
    }
    s
}

fn read_scene(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(cli: &Cli, report: &Report, artifact: Option<Artifact>) -> Result<(), Error> {
    let mut stdout = io::stdout().lock();
    match artifact {
        Some(Artifact::Scene(text) | Artifact::Svg(text)) => match &cli.out {
            Some(path) => {
                write_out(path, &text)?;
                stdout.write_all(report.to_json().as_bytes())?;
            }
            None => {
                stdout.write_all(text.as_bytes())?;
                if cli.verbose || report.exit_code != 0 {
                    io::stderr().write_all(report.to_json().as_bytes())?;
                }
            }
        },
        None => match &cli.out {
            Some(path) => write_out(path, &report.to_json())?,
            None => stdout.write_all(report.to_json().as_bytes())?,
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    let cmd: Command = cli.command.parse().expect("clap checked the name");
    let opts = Options {
        expr: cli.expr.clone(),
        seed: cli.seed,
        count: cli.count,
        points: cli.points.clone(),
        verbose: cli.verbose,
    };

    let scene_text = match cli.input.as_ref().map(read_scene).transpose() {
        Ok(t) => t,
        Err(e) => {
            let path = cli
                .input
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default();
            let mut r = Report::new(cmd.name(), digest(&[cmd.name(), &path]));
            r.fail(&e);
            let r = r.finish();
            let _ = io::stdout().write_all(r.to_json().as_bytes());
            return ExitCode::from(r.exit_code as u8);
        }
    };
    let response = run(cmd, scene_text.as_deref(), &opts);
    let code = response.report.exit_code;
    if let Err(e) = emit(&cli, &response.report, response.artifact) {
        eprintln!("grassmann: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    ExitCode::from(code as u8)
}
