//! Command-line interface.
//!
//! Every subcommand is a thin, deterministic wrapper over the library:
//! file in (or `-` for standard input), stable text out.  Exit codes:
//! `0` success, `1` domain error (the input parsed as a request but the
//! data is bad), `2` usage error (the request itself is malformed).

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::fpgroup::{
    reidemeister_schreier, tietze_simplify, FiniteQuotientHom, GeneratorSymbol, Presentation,
    Transversal,
};
use crate::homrep::{load_representation, subgroup_indices};
use crate::linalg::{snf, IntegerMatrix};
use crate::surface::{build_polygon, glue, SurfaceSpec};
use crate::twist;

#[derive(Parser)]
#[command(
    name = "crosscap",
    version,
    about = "Exact computations with mapping class groups of nonorientable surfaces",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Surface parameters shared by several subcommands.
#[derive(Args)]
struct SpecArgs {
    /// Genus (number of crosscaps), at least 1.
    genus: u32,
    /// Number of boundary circles.
    boundary: u32,
    /// Number of marked points.
    punctures: u32,
}

impl SpecArgs {
    fn spec(&self) -> Result<SurfaceSpec> {
        SurfaceSpec::new(self.genus, self.boundary, self.punctures)
    }
}

/// One `--hom name=value` assignment.
#[derive(Clone)]
struct HomArg {
    name: String,
    value: u32,
}

fn parse_hom(s: &str) -> std::result::Result<HomArg, String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("'{s}' is not of the form name=value"))?;
    let value = value
        .parse()
        .map_err(|_| format!("'{value}' is not a residue"))?;
    Ok(HomArg {
        name: name.to_string(),
        value,
    })
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form of an integer matrix.
    Snf {
        /// Matrix file in "rows cols" text format, or `-` for stdin.
        input: String,
    },
    /// Abelianization of a finitely presented group.
    Abelianize {
        /// Presentation file, or `-` for stdin.
        input: String,
    },
    /// Present the kernel of a homomorphism onto a cyclic group.
    Rs {
        /// Presentation file, or `-` for stdin.
        input: String,
        /// Image of one generator, as `name=value`; unmentioned
        /// generators map to 0.
        #[arg(long = "hom", value_name = "NAME=VALUE", value_parser = parse_hom)]
        hom: Vec<HomArg>,
        /// Modulus of the target cyclic group.
        #[arg(long = "mod", value_name = "M")]
        modulus: u32,
        /// Tietze-simplify the kernel presentation before printing.
        #[arg(long)]
        simplify: bool,
    },
    /// Polygon side word of a nonorientable surface.
    Polygon(SpecArgs),
    /// Cell structure and first homology of a surface.
    #[command(name = "h1-surface")]
    H1Surface(SpecArgs),
    /// First homology of the twist subgroup (genus at least 3).
    #[command(name = "h1-twist")]
    H1Twist {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also print the relation ledger behind the answer.
        #[arg(long)]
        explain: bool,
    },
    /// Validate a homology-representation config against a surface.
    Verify {
        /// Representation config file, or `-` for stdin.
        config: String,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Factored index of the twist subgroup for n marked points.
    Indices {
        /// Number of marked points.
        punctures: u32,
    },
}

/// Entry point shared by the binary and the CLI tests.
pub fn run(
    argv: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(rendered.as_bytes());
                0
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
                2
            };
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Snf { input } => {
            let matrix = IntegerMatrix::parse_text(&read_input(&input, stdin)?)?;
            emit(out, snf(&matrix).s.to_text())
        }
        Command::Abelianize { input } => {
            let p = Presentation::parse(&read_input(&input, stdin)?)?;
            emit(out, p.abelianization())
        }
        Command::Rs {
            input,
            hom,
            modulus,
            simplify,
        } => {
            let p = Presentation::parse(&read_input(&input, stdin)?)?;
            let mut images: BTreeMap<GeneratorSymbol, u32> =
                p.alphabet().iter().map(|g| (g.clone(), 0)).collect();
            for assignment in hom {
                let symbol = GeneratorSymbol::new(&assignment.name)?;
                if !images.contains_key(&symbol) {
                    return Err(Error::Invalid(format!(
                        "--hom names generator '{symbol}', which the presentation lacks"
                    )));
                }
                images.insert(symbol, assignment.value);
            }
            let phi = FiniteQuotientHom::new(modulus, images)?;
            let transversal = Transversal::for_kernel(&p, &phi)?;
            let subgroup = reidemeister_schreier(&p, &phi, &transversal)?;
            if simplify {
                emit(out, tietze_simplify(&subgroup.presentation))
            } else {
                for g in &subgroup.generators {
                    writeln!(out, "# {} = {}", g.symbol, g.word).map_err(io_error)?;
                }
                emit(out, &subgroup.presentation)
            }
        }
        Command::Polygon(args) => emit(out, build_polygon(args.spec()?)),
        Command::H1Surface(args) => {
            let complex = glue(&build_polygon(args.spec()?))?;
            emit(
                out,
                format!(
                    "V={} E={} F=1 chi={} H1={}",
                    complex.vertex_count(),
                    complex.edges().len(),
                    complex.euler_characteristic(),
                    complex.h1()
                ),
            )
        }
        Command::H1Twist { spec, explain } => {
            let spec = spec.spec()?;
            let invariants = twist::compute_h1(&spec)?;
            writeln!(out, "H1(T({spec})) = {invariants}").map_err(io_error)?;
            if explain {
                emit(out, twist::explain(&spec)?)?;
            }
            Ok(())
        }
        Command::Verify { config, spec } => {
            let spec = spec.spec()?;
            let text = read_input(&config, stdin)?;
            let rep = load_representation(&text, &spec)?;
            let twists = rep.names().count() - 1;
            emit(
                out,
                format!(
                    "config ok for {spec}: dimension {}, {twists} twist curves, D(y) = -1",
                    rep.dimension()
                ),
            )
        }
        Command::Indices { punctures } => {
            let spec = SurfaceSpec::new(3, 0, punctures)?;
            emit(out, subgroup_indices(&spec)?)
        }
    }
}

/// Reads a file argument, with `-` meaning standard input.
fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Invalid(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read '{path}': {e}")))
    }
}

fn emit(out: &mut dyn Write, value: impl Display) -> Result<()> {
    let text = value.to_string();
    writeln!(out, "{}", text.trim_end_matches('\n')).map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Invalid(format!("cannot write output: {e}"))
}
