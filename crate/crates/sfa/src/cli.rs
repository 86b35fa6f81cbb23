//! Command-line front end.
//!
//! Exit status: 0 success, 1 `iso` found the diagrams different, 2 bad input,
//! 3 no enumerable surface.

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use sfa_core::enumerate::EnumerationQuery;
use sfa_core::surface::to_ribbon;
use sfa_core::{is_isomorphic, reverse_code, CodeKind, DiagramCode};

use crate::audit::{audit_listing, count_mismatch};
use crate::catalog_file::{write_catalog, CatalogError, Format};
use crate::parallel::enumerate_parallel;
use crate::render::render;

#[derive(Parser, Debug)]
#[command(name = "sfa", version, about = "Chord diagrams of optimal flows on closed surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Sn,
    Sc,
    Base,
}

impl From<KindArg> for CodeKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Sn => CodeKind::Sn,
            KindArg::Sc => CodeKind::Sc,
            KindArg::Base => CodeKind::Base,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every diagram of one kind for a surface.
    #[command(group(ArgGroup::new("orientation").required(true).args(["orientable", "nonorientable"])))]
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        orientable: bool,
        #[arg(long)]
        nonorientable: bool,
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Worker threads, 0 for one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the catalog here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report kind, surface, cycle count and optimality of a code.
    Classify {
        code: String,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Print the canonical code.
    Canon {
        code: String,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Print the canonical code of the reverse diagram.
    Reverse {
        code: String,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Exit 0 if the two codes describe isomorphic diagrams, 1 otherwise.
    Iso {
        first: String,
        second: String,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
    /// Draw a diagram as SVG.
    Render {
        code: String,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {0}", .0.name())]
    Core(#[from] sfa_core::Error),
    #[error("{}: {0}", .0.name())]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_unsupported_surface() => 3,
            _ => 2,
        }
    }
}

fn parse(text: &str, kind: Option<KindArg>) -> Result<DiagramCode, sfa_core::Error> {
    match kind {
        Some(k) => DiagramCode::parse(k.into(), text),
        None => DiagramCode::parse_auto(text),
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli.command, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Enumerate {
            kind,
            orientable,
            nonorientable: _,
            genus,
            format,
            jobs,
            output,
        } => {
            let query = EnumerationQuery::new(kind.into(), orientable, genus)?;
            let catalog = enumerate_parallel(&query, jobs)?;
            if let Some((computed, expected)) = count_mismatch(&catalog) {
                writeln!(err, "warning: {computed} diagrams, reference count is {expected}")?;
                err.write_all(audit_listing(&catalog).as_bytes())?;
            }
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Table => Format::Table,
            };
            let bytes = write_catalog(&catalog, format);
            match output {
                Some(path) => std::fs::write(path, bytes)?,
                None => out.write_all(&bytes)?,
            }
            Ok(0)
        }
        Command::Classify { code, kind } => {
            let code = parse(&code, kind)?;
            let d = code.to_diagram();
            let rc = to_ribbon(&d);
            let surface = rc.surface_class();
            writeln!(out, "kind: {}", code.kind().as_str())?;
            writeln!(out, "surface: {surface}")?;
            writeln!(out, "euler characteristic: {}", surface.euler_characteristic())?;
            writeln!(out, "cycles: {}", rc.cycle_count())?;
            let optimal = sfa_core::is_optimal_shape(&d);
            writeln!(out, "optimal: {}", if optimal { "yes" } else { "no" })?;
            Ok(0)
        }
        Command::Canon { code, kind } => {
            let code = parse(&code, kind)?;
            writeln!(out, "{}", code.to_diagram().canonical_code())?;
            Ok(0)
        }
        Command::Reverse { code, kind } => {
            let code = parse(&code, kind)?;
            writeln!(out, "{}", reverse_code(&code)?)?;
            Ok(0)
        }
        Command::Iso { first, second, kind } => {
            let a = parse(&first, kind)?.to_diagram();
            let b = parse(&second, kind)?.to_diagram();
            if is_isomorphic(&a, &b)? {
                writeln!(out, "isomorphic")?;
                Ok(0)
            } else {
                writeln!(out, "not isomorphic")?;
                Ok(1)
            }
        }
        Command::Render { code, output, kind } => {
            let code = parse(&code, kind)?;
            std::fs::write(output, render(&code.to_diagram()))?;
            Ok(0)
        }
    }
}
