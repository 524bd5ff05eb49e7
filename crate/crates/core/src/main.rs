use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use gamme::cli::{
    cmd_catalog, cmd_enumerate, cmd_families, cmd_modes, cmd_notes, cmd_types, cmd_verify,
    render_scale, resolve_scale, NoteOrder, Options, OutputFormat,
};
use gamme::naming::Style;

/// Pythagorean notes, scale families, types and modes, computed exactly.
#[derive(Parser)]
#[command(name = "gamme", version)]
struct Cli {
    /// Output format: text, json, csv or scl.
    #[arg(long, global = true)]
    format: Option<OutputFormat>,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Use #, b, * and "re" instead of ♯, ♭, ✻ and "ré".
    #[arg(long, global = true)]
    ascii: bool,

    /// Allow enumerating families above 6.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Notes of the line of fifths with exact ratio, decimal value and cents.
    Notes {
        #[arg(long, default_value_t = -15, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, default_value_t = 19, allow_negative_numbers = true)]
        to: i64,
        /// index or pitch.
        #[arg(long, default_value = "index")]
        sort: NoteOrder,
    },
    /// Scale families produced by the tone-breaking recursion.
    Families {
        #[arg(long = "k-max", default_value_t = 10, allow_negative_numbers = true)]
        k_max: i64,
    },
    /// Every structure of a family, realized on a tonality.
    Enumerate {
        #[arg(allow_negative_numbers = true)]
        family: i64,
        #[arg(long, default_value = "do")]
        tonality: String,
    },
    /// Rotation classes of a family.
    Types {
        #[arg(allow_negative_numbers = true)]
        family: i64,
    },
    /// Modes of a type (t1, t2, ... or c0, c1, ... or a step word).
    Modes {
        #[arg(allow_negative_numbers = true)]
        family: i64,
        #[arg(name = "TYPE")]
        type_label: String,
        #[arg(long, default_value = "do")]
        tonality: String,
    },
    /// Show a catalog scale or a step word; lists the catalog when omitted.
    Scale {
        scale: Option<String>,
        #[arg(long)]
        tonality: Option<String>,
        /// Family of a step word, when its counts are ambiguous.
        #[arg(long)]
        family: Option<u32>,
    },
    /// Realize a scale on another tonality.
    Transpose {
        scale: String,
        tonality: String,
        #[arg(long)]
        family: Option<u32>,
    },
    /// Write a scale as a Scala .scl file (or JSON with --format json).
    Export {
        scale: String,
        #[arg(long)]
        tonality: Option<String>,
        #[arg(long)]
        description: Option<String>,
        #[arg(long)]
        family: Option<u32>,
    },
    /// Check the recursion's structural properties and known counterexamples.
    Verify {
        #[arg(long = "k-max", default_value_t = 20, allow_negative_numbers = true)]
        k_max: i64,
    },
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let default_format = match cli.command {
        Command::Export { .. } => OutputFormat::Scl,
        _ => OutputFormat::Text,
    };
    let opts = Options {
        format: cli.format.unwrap_or(default_format),
        style: if cli.ascii {
            Style::Ascii
        } else {
            Style::Unicode
        },
        force: cli.force,
    };
    let out = out.as_mut();
    let mut passed = true;
    match cli.command {
        Command::Notes { from, to, sort } => cmd_notes(out, from, to, sort, opts)?,
        Command::Families { k_max } => cmd_families(out, k_max, opts)?,
        Command::Enumerate { family, tonality } => cmd_enumerate(out, family, &tonality, opts)?,
        Command::Types { family } => cmd_types(out, family, opts)?,
        Command::Modes {
            family,
            type_label,
            tonality,
        } => cmd_modes(out, family, &type_label, &tonality, opts)?,
        Command::Scale {
            scale: None,
            tonality: None,
            family: None,
        } => cmd_catalog(out, opts)?,
        Command::Scale { scale: None, .. } => {
            anyhow::bail!("--tonality and --family need a scale argument")
        }
        Command::Scale {
            scale: Some(spec),
            tonality,
            family,
        } => {
            let r = resolve_scale(&spec, family, tonality.as_deref())?;
            render_scale(out, &r, None, opts)?;
        }
        Command::Transpose {
            scale,
            tonality,
            family,
        } => {
            let r = resolve_scale(&scale, family, Some(&tonality))?;
            render_scale(out, &r, None, opts)?;
        }
        Command::Export {
            scale,
            tonality,
            description,
            family,
        } => {
            let r = resolve_scale(&scale, family, tonality.as_deref())?;
            render_scale(out, &r, description.as_deref(), opts)?;
        }
        Command::Verify { k_max } => passed = cmd_verify(out, k_max, opts)?,
    }
    out.flush()?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
