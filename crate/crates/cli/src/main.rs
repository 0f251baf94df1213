use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wlogkit::{
    cmd_artin, cmd_bb, cmd_flag_check, cmd_oracle, parse_tree_edges, read_document, ArtinOptions, BbOptions, CliError,
    Format, Outcome, EXIT_MALFORMED, TREE_BUDGET_ENV,
};
use wlogkit_core::graph::TreeSearch;

/// WLOG presentations of Bestvina–Brady and Artin groups, with H2 and B0
/// ranks checked by exact integer oracles.
#[derive(Parser)]
#[command(name = "wlogkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bestvina–Brady pipeline for a graph.
    Bb(BbArgs),
    /// Artin group pipeline for a labelled graph.
    Artin(ArtinArgs),
    /// Homology and exterior oracles for a WLOG or presentation.
    Oracle(CommonArgs),
    /// Simple-connectivity gate for the flag complex of a graph.
    FlagCheck(FlagCheckArgs),
}

#[derive(Args)]
struct CommonArgs {
    file: PathBuf,
    /// Emit one JSON document instead of the text report.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeMode {
    Exact,
    Greedy,
}

#[derive(Args)]
struct BbArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value = "exact")]
    tree: TreeMode,
    /// Maximum number of spanning trees the exact search may visit.
    #[arg(long)]
    tree_budget: Option<u64>,
    /// Use this spanning tree, given as u-v,u-v,...
    #[arg(long)]
    tree_edges: Option<String>,
    /// Emit every triangle instead of pruning redundant ones.
    #[arg(long)]
    emit_all: bool,
    #[arg(long)]
    assume_simply_connected: bool,
    #[arg(long, value_name = "PATH")]
    export_presentation: Option<PathBuf>,
}

#[derive(Args)]
struct ArtinArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_name = "PATH")]
    export_presentation: Option<PathBuf>,
}

#[derive(Args)]
struct FlagCheckArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long)]
    assume_simply_connected: bool,
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Bb(a) => {
            let doc = read_document(&a.common.file)?;
            let opts = BbOptions {
                tree: match a.tree {
                    TreeMode::Exact => TreeSearch::Exact,
                    TreeMode::Greedy => TreeSearch::Greedy,
                },
                tree_budget: a.tree_budget,
                tree_edges: a.tree_edges.as_deref().map(parse_tree_edges).transpose()?,
                emit_all: a.emit_all,
                assume_simply_connected: a.assume_simply_connected,
                format: format(a.common.json),
                export_presentation: a.export_presentation,
            };
            let env = std::env::var(TREE_BUDGET_ENV).ok();
            cmd_bb(doc, &opts, env.as_deref())
        }
        Command::Artin(a) => {
            let doc = read_document(&a.common.file)?;
            let opts = ArtinOptions { format: format(a.common.json), export_presentation: a.export_presentation };
            cmd_artin(doc, &opts)
        }
        Command::Oracle(a) => cmd_oracle(read_document(&a.file)?, format(a.json)),
        Command::FlagCheck(a) => {
            cmd_flag_check(read_document(&a.common.file)?, a.assume_simply_connected, format(a.common.json))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("wlogkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
