//! `graphic` — analyze abstract Rubinstein–Scharlemann graphics.
//!
//! Subcommands: `validate`, `sweep`, `slice`, `plot`, `examples`.
//! Exit codes: 0 success, 1 I/O or parse failure, 2 validation or
//! genericity failure.

use graphic_cli::{format, report, shipped, svg};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graphic_core::{
    count_c, event_schedule, slice_census, slice_euler, trajectory_from_schedule, validate, Graphic,
};

#[derive(Parser)]
#[command(
    name = "graphic",
    version,
    about = "Rubinstein-Scharlemann graphic analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the local singularity axioms of a graphic file.
    Validate {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sweep the projection angle: events, genus trajectory, the feature
    /// count c and the stable-genus bound (p+q+c)/2.
    Sweep {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Census of a horizontal slice: fold-edge crossings and the Euler
    /// characteristics of the level surface and its Reeb graph.
    Slice {
        path: PathBuf,
        /// Sweep angle in radians.
        #[arg(long, allow_negative_numbers = true)]
        angle: f64,
        /// Height of the slice line in the rotated frame.
        #[arg(long, allow_negative_numbers = true)]
        level: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render the graphic as SVG.
    Plot {
        path: PathBuf,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
        /// Also draw the copy rotated by this angle, with its horizontal
        /// tangencies marked.
        #[arg(long, allow_negative_numbers = true)]
        angle: Option<f64>,
    },
    /// List or emit the shipped example graphics.
    Examples(ExamplesArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ExamplesArgs {
    /// List the example names.
    #[arg(long)]
    list: bool,
    /// Write `<name>.json` into a directory: `--emit <name> <dir>`.
    #[arg(long, num_args = 2, value_names = ["NAME", "DIR"])]
    emit: Option<Vec<String>>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> Result<Graphic, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse_graphic(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Validation gate shared by the analysis commands.
fn validated(path: &Path) -> Result<Result<Graphic, ExitCode>, String> {
    let g = load(path)?;
    let report = validate(&g);
    if !report.passed() {
        eprintln!("{}: validation failed:\n{report}", path.display());
        return Ok(Err(ExitCode::from(2)));
    }
    Ok(Ok(g))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { path, format } => {
            let g = load(&path)?;
            let rep = validate(&g);
            let out = report::ValidateReport::new(&path.display().to_string(), &rep);
            match format {
                Format::Json => print!("{}", report::to_json(&out)),
                Format::Text => print!("{}", out.text()),
            }
            Ok(if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Sweep { path, format } => {
            let g = match validated(&path)? {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let result = event_schedule(&g).and_then(|schedule| {
                let trajectory = trajectory_from_schedule(&g, &schedule)?;
                let c = count_c(&g)?;
                let bound = graphic_core::sweep::bound_from_parts(&trajectory, c)?;
                Ok((schedule, trajectory, c, bound))
            });
            let (schedule, trajectory, c, bound) = match result {
                Ok(parts) => parts,
                Err(e) => {
                    eprintln!("{}: {e}", path.display());
                    return Ok(ExitCode::from(2));
                }
            };
            let out = report::SweepReport::new(
                &path.display().to_string(),
                &schedule,
                &trajectory,
                c,
                bound,
            );
            match format {
                Format::Json => print!("{}", report::to_json(&out)),
                Format::Text => print!("{}", out.text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Slice {
            path,
            angle,
            level,
            format,
        } => {
            let g = match validated(&path)? {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let census = match slice_census(&g, angle, level) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("{}: {e}", path.display());
                    return Ok(ExitCode::from(2));
                }
            };
            let euler = match slice_euler(&census) {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("{}: {e}", path.display());
                    return Ok(ExitCode::from(2));
                }
            };
            let out = report::SliceReport::new(&path.display().to_string(), &census, &euler);
            match format {
                Format::Json => print!("{}", report::to_json(&out)),
                Format::Text => print!("{}", out.text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Plot { path, out, angle } => {
            let g = match validated(&path)? {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let svg = svg::render(&g, angle);
            std::fs::write(&out, svg).map_err(|e| format!("{}: {e}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Examples(args) => {
            if args.list {
                for name in shipped::NAMES {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let emit = args.emit.expect("clap enforces the group");
            let (name, dir) = (&emit[0], Path::new(&emit[1]));
            let Some(g) = shipped::by_name(name) else {
                return Err(format!("unknown example '{name}'; try --list"));
            };
            std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            let file = dir.join(format!("{name}.json"));
            std::fs::write(&file, format::serialize(&g))
                .map_err(|e| format!("{}: {e}", file.display()))?;
            println!("{}", file.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
