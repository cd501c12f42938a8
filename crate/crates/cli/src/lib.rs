//! `idealhom`: batch front end over the ideal-homology engine.
//!
//! Every run produces one [`report::Report`]. Exit statuses: 0 for a
//! completed computation (including mathematical findings such as a failing
//! axiom), 2 for parse and usage errors, 3 when an enumeration cap is hit, 4
//! for invariant violations.

pub mod commands;
pub mod doc;
pub mod report;

use clap::{Parser, Subcommand};

use commands::{CliError, HomologyVariant, IdealAction, Outcome, SideArg};
use doc::{load, BuildError, Loaded};
use report::{digest, Format, Report};

#[derive(Debug, Parser)]
#[command(name = "idealhom", version, about = "Annihilator ideals and ideal-theoretic homology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = ideal_homology::axioms::DEFAULT_SEED)]
    pub seed: u64,
    /// Largest group enumerated by exhaustive searches.
    #[arg(long, global = true, default_value_t = ideal_homology::ideals::DEFAULT_ENUM_CAP)]
    pub enum_cap: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

/// Documents are bundled names (`module-z4`, `matrix-f2`, `free-xab`,
/// `ses-z4`, `bo-z4`) or file paths.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a document.
    Validate { doc: String },
    /// Ideal operations on generators given as declared morphism names or `A -> B : coords`.
    Ideal {
        doc: String,
        /// Used by saturate, principal and closed.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, value_enum)]
        action: IdealAction,
    },
    /// Homology of a declared complex.
    Homology {
        doc: String,
        #[arg(long)]
        complex: Option<String>,
        #[arg(long, value_enum, default_value_t = HomologyVariant::Right)]
        variant: HomologyVariant,
        /// Restrict `hom-sequence` to one test object.
        #[arg(long)]
        at: Option<String>,
    },
    /// The axiom suite.
    Axioms { doc: String },
    /// Homotopy-category Hom tables, or the cokernel counterexample for `--u`.
    Khomotopy {
        doc: String,
        #[arg(long)]
        u: Option<String>,
    },
}

fn value_name<T: clap::ValueEnum>(v: &T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

impl Cli {
    /// The canonical command line: every option spelled out, so the echo
    /// does not depend on how the flags were written.
    pub fn echo(&self) -> String {
        let body = match &self.command {
            Command::Validate { doc } => format!("validate {doc}"),
            Command::Ideal { doc, side, gens, action } => {
                let gens: Vec<String> = gens.iter().map(|g| format!("--gen '{g}'")).collect();
                let side = if action.uses_side() { format!(" --side {}", value_name(side)) } else { String::new() };
                format!("ideal {doc}{side} {} --action {}", gens.join(" "), value_name(action))
            }
            Command::Homology { doc, complex, variant, at } => {
                let mut s = format!("homology {doc}");
                if let Some(c) = complex {
                    s.push_str(&format!(" --complex {c}"));
                }
                s.push_str(&format!(" --variant {}", value_name(variant)));
                if let Some(x) = at {
                    s.push_str(&format!(" --at {x}"));
                }
                s
            }
            Command::Axioms { doc } => format!("axioms {doc}"),
            Command::Khomotopy { doc, u } => match u {
                Some(u) => format!("khomotopy {doc} --u {u}"),
                None => format!("khomotopy {doc}"),
            },
        };
        format!("{body} --seed {} --enum-cap {}", self.seed, self.enum_cap)
    }

    fn doc(&self) -> &str {
        match &self.command {
            Command::Validate { doc }
            | Command::Ideal { doc, .. }
            | Command::Homology { doc, .. }
            | Command::Axioms { doc }
            | Command::Khomotopy { doc, .. } => doc,
        }
    }
}

fn execute(cli: &Cli, texts: &mut Vec<(String, String)>) -> Result<Outcome, CliError> {
    let loaded: Loaded = match load(cli.doc(), texts) {
        Ok(l) => l,
        Err(BuildError::Core(e @ ideal_homology::Error::InvalidCategory(_))) => {
            let (name, text) = texts.last().expect("a document was read");
            return commands::invalid_explicit(name, text)?.ok_or(CliError::Core(e));
        }
        Err(e) => return Err(e.into()),
    };
    let cap = cli.enum_cap;
    match &cli.command {
        Command::Validate { .. } => commands::validate_cmd(&loaded),
        Command::Ideal { side, gens, action, .. } => commands::ideal_cmd(&loaded, (*side).into(), gens, *action, cap),
        Command::Homology { complex, variant, at, .. } => {
            commands::homology_cmd(&loaded, complex.as_deref(), *variant, at.as_deref())
        }
        Command::Axioms { .. } => commands::axioms_cmd(&loaded, cli.seed, cap),
        Command::Khomotopy { u, .. } => commands::khomotopy_cmd(&loaded, u.as_deref(), cap),
    }
}

/// Runs one command to a report; errors become reports with a nonzero status.
pub fn run(cli: &Cli) -> Report {
    let command = cli.echo();
    let mut texts = Vec::new();
    let (lines, data, exit_status) = match execute(cli, &mut texts) {
        Ok(o) => (o.lines, o.data, o.exit_status),
        Err(e) => (vec![format!("error: {e}")], e.data(), e.exit_status()),
    };
    Report { inputs_digest: digest(&command, &texts), command, lines, data, exit_status }
}
