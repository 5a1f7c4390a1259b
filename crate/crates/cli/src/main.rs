//! Command-line front end for the orbit-cover engine.
//!
//! Four subcommands: `classify` (interval compositions of a given shape,
//! their rotation classes, and the affine orbits), `nerve` (cover members,
//! nerve invariants, homology, harmonic regions), `transport` (affine
//! transport of a cover between scales), and `isocheck` (nerve isomorphism
//! of two covers against the affine-orbit criterion).
//!
//! Exit codes: 0 success, 2 usage, 3 malformed input, 4 domain error
//! (inputs parse but are mathematically incompatible).

use std::path::PathBuf;

use clap::{Parser, Subcommand};

mod commands;
mod err;
mod parse;

use err::CliError;

#[derive(Parser)]
#[command(
    name = "orbitcover",
    version,
    about = "exact engine for scales and orbit covers"
)]
struct Cli {
    /// Emit the report as a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate interval compositions of n into k parts and classify them
    /// up to rotation and up to the affine action.
    Classify { n: usize, k: usize },

    /// Build the orbit cover of a scale and report its nerve, homology,
    /// and harmonic regions.
    Nerve {
        /// Scale literal, e.g. "12: 0,2,4,5,7,9,11".
        scale: String,
        /// Interval composition, e.g. "(2,2,3)".
        sigma: String,
        /// Root element; defaults to the tonic of the selected mode.
        root: Option<usize>,
        /// Root at the tonic of this mode instead of mode 0.
        #[arg(long, conflicts_with = "root")]
        mode_index: Option<usize>,
    },

    /// Transport a cover along x -> u * interval(root, x) + v into a target
    /// scale and verify the induced cover morphism.
    Transport {
        /// Source scale literal.
        source: String,
        /// Interval composition, e.g. "(2,2,3)".
        sigma: String,
        /// Unit multiplier mod the scale size.
        u: usize,
        /// Degree of the image root in the target scale.
        v: usize,
        /// Target scale literal.
        target: String,
        /// Root element of the source cover; defaults to the mode tonic.
        #[arg(long, conflicts_with = "mode_index")]
        root: Option<usize>,
        /// Root at the tonic of this mode instead of mode 0.
        #[arg(long)]
        mode_index: Option<usize>,
        /// File of pitch-class events (one residue per line, '#' comments)
        /// to push through the map.
        #[arg(long)]
        events: Option<PathBuf>,
    },

    /// Decide whether two covers have isomorphic nerves, and compare the
    /// answer with the affine-orbit criterion where it applies.
    Isocheck {
        /// Cover spec "SCALE; SIGMA[; ROOT]", e.g. "12: 0,2,4,5,7,9,11; (2,2,3); 0".
        a: String,
        /// Second cover spec in the same form.
        b: String,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Classify { n, k } => commands::classify(n, k, cli.json),
        Command::Nerve {
            scale,
            sigma,
            root,
            mode_index,
        } => commands::nerve(&scale, &sigma, root, mode_index, cli.json),
        Command::Transport {
            source,
            sigma,
            u,
            v,
            target,
            root,
            mode_index,
            events,
        } => commands::transport(
            &source,
            &sigma,
            u,
            v,
            &target,
            root,
            mode_index,
            events.as_deref(),
            cli.json,
        ),
        Command::Isocheck { a, b } => commands::isocheck(&a, &b, cli.json),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => print!("{report}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
