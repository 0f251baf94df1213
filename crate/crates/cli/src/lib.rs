//! Batch front end for `wlogkit-core`: reads a graph, Artin system, WLOG or
//! presentation, runs the matching pipeline and renders a text or JSON
//! report. Each command returns the rendered report with its exit code.

pub mod input;
mod render;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;
use wlogkit_core::artin::{self, ArtinReport};
use wlogkit_core::bb::{self, BbReport, EmissionMode, FlagGate};
use wlogkit_core::graph::{self, SpanningTree, TreeSearch, DEFAULT_TREE_BUDGET};
use wlogkit_core::homology::{
    exterior_rank, presentation_complex_homology, suspension_check, ComplexHomology, SuspensionCheck,
    DEFAULT_TIETZE_BUDGET,
};
use wlogkit_core::wlog::{ExteriorOracle, Presentation};

pub use input::{parse_document, AnyDocument, InputDocument, PresentationDocument, WlogDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_GATE: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

pub const TREE_BUDGET_ENV: &str = "WLOGKIT_TREE_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] wlogkit_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Core(_) => EXIT_MALFORMED,
            CliError::Io { .. } => 1,
        }
    }
}

/// A rendered report and the process exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default)]
pub struct BbOptions {
    pub tree: TreeSearch,
    /// Overrides both the environment variable and the default.
    pub tree_budget: Option<u64>,
    pub tree_edges: Option<Vec<(String, String)>>,
    pub emit_all: bool,
    pub assume_simply_connected: bool,
    pub format: Format,
    pub export_presentation: Option<PathBuf>,
}

#[derive(Clone, Debug, Default)]
pub struct ArtinOptions {
    pub format: Format,
    pub export_presentation: Option<PathBuf>,
}

pub fn read_document(path: &Path) -> Result<AnyDocument, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_document(&text)
}

fn expect_input(doc: AnyDocument) -> Result<InputDocument, CliError> {
    match doc {
        AnyDocument::Input(d) => Ok(d),
        AnyDocument::Wlog(_) => Err(CliError::Input("expected a graph or artin document, found a wlog".into())),
        AnyDocument::Presentation(_) => {
            Err(CliError::Input("expected a graph or artin document, found a presentation".into()))
        }
    }
}

/// Parses `a-b,c-d` into vertex name pairs.
pub fn parse_tree_edges(s: &str) -> Result<Vec<(String, String)>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p.split_once('-') {
            Some((u, v)) if !u.is_empty() && !v.is_empty() => Ok((u.trim().to_string(), v.trim().to_string())),
            _ => Err(CliError::Input(format!("tree edge {p:?} is not of the form u-v"))),
        })
        .collect()
}

/// Flag value, then environment value, then the built-in default.
pub fn resolve_tree_budget(flag: Option<u64>, env: Option<&str>) -> Result<u64, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match env {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{TREE_BUDGET_ENV}={s:?} is not a non-negative integer"))),
        None => Ok(DEFAULT_TREE_BUDGET),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeChoice {
    /// `exact`, `greedy`, or `explicit`.
    pub method: String,
    pub budget: u64,
    pub fell_back_to_greedy: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BbDocument {
    pub command: &'static str,
    pub input: InputDocument,
    pub gate: FlagGate,
    pub tree: Option<TreeChoice>,
    pub report: Option<BbReport>,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArtinDocument {
    pub command: &'static str,
    pub input: InputDocument,
    pub report: ArtinReport,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagCheckDocument {
    pub command: &'static str,
    pub input: InputDocument,
    pub gate: FlagGate,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleDocument {
    pub command: &'static str,
    /// `wlog` or `presentation`.
    pub input_kind: &'static str,
    pub generators: usize,
    pub relators: usize,
    pub homology: ComplexHomology,
    pub suspension: Option<SuspensionCheck>,
    /// Exterior rank of the relators, with vertex words substituted for a WLOG.
    pub exterior: ExteriorOracle,
    pub exit_code: i32,
}

fn finish<T: Serialize>(doc: &T, format: Format, text: impl FnOnce() -> String, exit_code: i32) -> Outcome {
    let output = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text(),
    };
    Outcome { output, exit_code }
}

/// Writes to a sibling temporary file and renames it into place.
pub fn write_atomically(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| CliError::Input(format!("{} is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io)
}

fn export(path: Option<&PathBuf>, p: &Presentation) -> Result<(), CliError> {
    match path {
        Some(path) => write_atomically(path, &p.to_text()),
        None => Ok(()),
    }
}

fn choose_tree(
    g: &graph::SimplicialGraph,
    opts: &BbOptions,
    budget: u64,
    warnings: &mut Vec<String>,
) -> Result<(SpanningTree, TreeChoice), CliError> {
    if let Some(pairs) = &opts.tree_edges {
        let refs: Vec<(&str, &str)> = pairs.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
        let tree = SpanningTree::from_names(g, &refs)?;
        return Ok((tree, TreeChoice { method: "explicit".into(), budget, fell_back_to_greedy: false }));
    }
    let (method, mode) = match opts.tree {
        TreeSearch::Exact => ("exact", TreeSearch::Exact),
        TreeSearch::Greedy => ("greedy", TreeSearch::Greedy),
    };
    match graph::favourable_spanning_tree(g, mode, budget) {
        Ok((tree, _)) => Ok((tree, TreeChoice { method: method.into(), budget, fell_back_to_greedy: false })),
        Err(wlogkit_core::Error::BudgetExceeded { budget }) => {
            warnings.push(format!(
                "exact tree search exceeded the budget of {budget} trees; using the greedy tree, which may not be optimal"
            ));
            let (tree, _) = graph::favourable_spanning_tree(g, TreeSearch::Greedy, budget)?;
            Ok((tree, TreeChoice { method: "greedy".into(), budget, fell_back_to_greedy: true }))
        }
        Err(e) => Err(e.into()),
    }
}

/// Gate, tree, WLOG, invariants and oracles for a graph document.
/// `env_budget` is the raw value of the tree-budget environment variable.
pub fn cmd_bb(doc: AnyDocument, opts: &BbOptions, env_budget: Option<&str>) -> Result<Outcome, CliError> {
    let input = expect_input(doc)?;
    let g = input.graph()?;
    let budget = resolve_tree_budget(opts.tree_budget, env_budget)?;
    let gate = bb::flag_gate(&g, opts.assume_simply_connected, DEFAULT_TIETZE_BUDGET);
    let mut warnings = Vec::new();
    if !gate.passed() {
        warnings.push(format!(
            "flag complex gate is {}; rerun with --assume-simply-connected to override an unknown result",
            gate.status.as_str()
        ));
        let doc = BbDocument { command: "bb", input, gate, tree: None, report: None, warnings, exit_code: EXIT_GATE };
        return Ok(finish(&doc, opts.format, || render::bb(&doc), EXIT_GATE));
    }
    let (tree, choice) = choose_tree(&g, opts, budget, &mut warnings)?;
    let mode = if opts.emit_all { EmissionMode::EmitAll } else { EmissionMode::Pruned };
    let report = bb::bb_pipeline(&g, &gate, &tree, mode)?;
    export(opts.export_presentation.as_ref(), &report.presentation)?;
    let exit_code = if report.all_agree() { EXIT_OK } else { EXIT_DISAGREE };
    let doc = BbDocument { command: "bb", input, gate, tree: Some(choice), report: Some(report), warnings, exit_code };
    Ok(finish(&doc, opts.format, || render::bb(&doc), exit_code))
}

pub fn cmd_artin(doc: AnyDocument, opts: &ArtinOptions) -> Result<Outcome, CliError> {
    let input = expect_input(doc)?;
    let system = input.artin()?;
    let report = artin::artin_invariants(&system)?;
    export(opts.export_presentation.as_ref(), &report.presentation)?;
    let exit_code = if report.all_agree() { EXIT_OK } else { EXIT_DISAGREE };
    let doc = ArtinDocument { command: "artin", input, report, exit_code };
    Ok(finish(&doc, opts.format, || render::artin(&doc), exit_code))
}

/// Homology of the presentation complex, the suspension comparison for a
/// WLOG, and the exterior rank where every relator is a commutator.
pub fn cmd_oracle(doc: AnyDocument, format: Format) -> Result<Outcome, CliError> {
    let (input_kind, presentation, substituted, suspension) = match doc {
        AnyDocument::Wlog(d) => {
            let w = d.to_wlog()?;
            ("wlog", w.presentation()?, w.substituted_presentation()?, Some(suspension_check(&w)?))
        }
        AnyDocument::Presentation(d) => {
            let p = d.to_presentation()?;
            ("presentation", p.clone(), p, None)
        }
        AnyDocument::Input(_) => {
            return Err(CliError::Input("oracle expects a wlog or presentation document".into()));
        }
    };
    let homology = presentation_complex_homology(&presentation)?;
    let exterior = match exterior_rank(substituted.generators(), substituted.relators()) {
        Ok(rank) => ExteriorOracle::Rank { rank },
        Err(wlogkit_core::Error::NotApplicable(reason)) => ExteriorOracle::NotApplicable { reason },
        Err(e) => return Err(e.into()),
    };
    let exit_code = if suspension.as_ref().is_none_or(|s| s.pass) { EXIT_OK } else { EXIT_DISAGREE };
    let doc = OracleDocument {
        command: "oracle",
        input_kind,
        generators: presentation.generators().len(),
        relators: presentation.relators().len(),
        homology,
        suspension,
        exterior,
        exit_code,
    };
    Ok(finish(&doc, format, || render::oracle(&doc), exit_code))
}

pub fn cmd_flag_check(doc: AnyDocument, assume: bool, format: Format) -> Result<Outcome, CliError> {
    let input = expect_input(doc)?;
    let g = input.graph()?;
    let gate = bb::flag_gate(&g, assume, DEFAULT_TIETZE_BUDGET);
    let exit_code = if gate.passed() { EXIT_OK } else { EXIT_GATE };
    let doc = FlagCheckDocument { command: "flag-check", input, gate, exit_code };
    Ok(finish(&doc, format, || render::flag_check(&doc), exit_code))
}
