use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twisted_partial::io::{parse_spec_as, run, Command, Format, Options};
use twisted_partial::{Error, Field, Result};

/// Exact verification of twisted partial Hopf actions and the structures
/// built from them.
#[derive(Parser, Debug)]
#[command(name = "tpa", version)]
struct Cli {
    /// Field of scalars (`rational` or `prime:<p>`); overrides the file.
    #[arg(long, global = true)]
    field: Option<Field>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Worker threads for the verification sweeps.
    #[arg(long, global = true)]
    parallel: Option<usize>,

    /// Include wall time in the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Hopf, algebra and twisted partial action axioms.
    Verify { spec: PathBuf },
    /// The partial crossed product, its coaction and canonical map.
    BuildCrossed { spec: PathBuf },
    /// Enveloping action: given (global + theta), induced (global +
    /// idempotent), or constructed for group algebras.
    Globalize { spec: PathBuf },
    /// Morita context between the partial and global crossed products.
    Morita { spec: PathBuf },
    /// Gauge transformation by the file's `gauge` map.
    Gauge { spec: PathBuf },
    /// Separability idempotent from an integral t and a central c.
    Separability {
        spec: PathBuf,
        /// Comma-separated coordinates of t; overrides `integral_t`.
        #[arg(long)]
        integral: Option<String>,
        /// Comma-separated coordinates of c; overrides `center_c`.
        #[arg(long)]
        center: Option<String>,
    },
    /// Every command whose inputs are present.
    Report { spec: PathBuf },
}

fn scalars(field: Field, text: &str) -> Result<Vec<twisted_partial::Scalar>> {
    text.split(',').map(|s| field.parse(s)).collect()
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let (command, path) = match &cli.command {
        Cmd::Verify { spec } => (Command::Verify, spec),
        Cmd::BuildCrossed { spec } => (Command::BuildCrossed, spec),
        Cmd::Globalize { spec } => (Command::Globalize, spec),
        Cmd::Morita { spec } => (Command::Morita, spec),
        Cmd::Gauge { spec } => (Command::Gauge, spec),
        Cmd::Separability { spec, .. } => (Command::Separability, spec),
        Cmd::Report { spec } => (Command::Report, spec),
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Shape { path: path.display().to_string(), message: e.to_string() })?;
    let mut skip = Vec::new();
    if let Cmd::Separability { integral, center, .. } = &cli.command {
        if integral.is_some() {
            skip.push("integral_t");
        }
        if center.is_some() {
            skip.push("center_c");
        }
    }
    let mut spec = parse_spec_as(&text, cli.field, &skip)?;
    if let Cmd::Separability { integral, center, .. } = &cli.command {
        if let Some(t) = integral {
            spec.integral_t = Some(scalars(spec.field, t)?);
        }
        if let Some(c) = center {
            spec.center_c = Some(scalars(spec.field, c)?);
        }
    }
    let options = Options { parallel: cli.parallel, timing: cli.timing };
    let report = run(command, &spec, &options)?;
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    Ok((report.render(format), report.exit_code()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
