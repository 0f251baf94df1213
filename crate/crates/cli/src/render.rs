// Plain-text renderings of the report documents. Every number printed here
// is also a field of the JSON form.

use std::fmt::Write as _;

use wlogkit_core::bb::{Certificate, Check, EmissionAction, EmissionRecord, FlagGate};
use wlogkit_core::homology::{Pi1Status, SuspensionCheck};
use wlogkit_core::wlog::{ExteriorOracle, MultiplierGenerator, MultiplierReport, Presentation, WlogGraph};

use crate::{ArtinDocument, BbDocument, FlagCheckDocument, InputDocument, OracleDocument};

fn input(out: &mut String, d: &InputDocument) {
    let kind = match d.kind {
        crate::input::InputKind::Graph => "graph",
        crate::input::InputKind::Artin => "artin",
    };
    let _ = writeln!(out, "input: {kind}, {} vertices, {} edges", d.vertices.len(), d.edges.len());
}

fn gate(out: &mut String, g: &FlagGate) {
    let pi1 = match g.pi1.status {
        Pi1Status::Certified => "certified trivial",
        Pi1Status::Unknown => "unknown",
    };
    let _ = writeln!(out, "gate: {}", g.status.as_str());
    let _ = writeln!(out, "  connected: {}", g.connected);
    let _ = writeln!(out, "  H1 of flag complex: {}", g.h1);
    let _ = writeln!(
        out,
        "  pi1: {pi1} ({} of {} generators eliminated, {} letters rewritten)",
        g.pi1.eliminated, g.pi1.generators, g.pi1.letters_rewritten
    );
}

fn wlog(out: &mut String, w: &WlogGraph) {
    let _ = writeln!(out, "wlog: {} vertices, {} edges, {} loops", w.vertex_count(), w.edges().len(), w.loop_count());
    for v in w.vertices() {
        match &v.word {
            Some(word) => {
                let _ = writeln!(out, "  vertex {} = {word}", v.name);
            }
            None => {
                let _ = writeln!(out, "  vertex {}", v.name);
            }
        }
    }
    for e in w.edges() {
        let _ = writeln!(out, "  edge {} -> {} : {}", w.name(e.origin), w.name(e.terminus), e.label);
    }
}

fn presentation(out: &mut String, title: &str, p: &Presentation) {
    let _ = writeln!(out, "{title}:");
    for line in p.to_text().lines() {
        let _ = writeln!(out, "  {line}");
    }
}

fn generators(out: &mut String, title: &str, gens: &[MultiplierGenerator]) {
    let _ = writeln!(out, "{title}: {}", gens.len());
    for g in gens {
        let _ = writeln!(out, "  edge {} at {}: {}", g.edge, g.base_vertex, g.commutator_word);
        let _ = writeln!(out, "    loop word: {}", g.loop_word);
        let _ = writeln!(out, "    relator: {}", g.relator);
    }
}

fn suspension(out: &mut String, s: &SuspensionCheck) {
    let _ = writeln!(
        out,
        "suspension check: {} (expected H1 {}, H2 rank {}; actual H1 {}, H2 rank {}; {} components)",
        if s.pass { "pass" } else { "FAIL" },
        s.expected_h1,
        s.expected_h2_rank,
        s.actual.h1,
        s.actual.h2_free_rank,
        s.components
    );
}

fn exterior(out: &mut String, e: &ExteriorOracle) {
    match e {
        ExteriorOracle::Rank { rank } => {
            let _ = writeln!(out, "exterior rank (lower bound): {rank}");
        }
        ExteriorOracle::NotApplicable { reason } => {
            let _ = writeln!(out, "exterior rank: not applicable ({reason})");
        }
    }
}

fn multiplier(out: &mut String, m: &MultiplierReport) {
    generators(out, "H2 generators", &m.h2_generators);
    generators(out, "B0 generators", &m.b0_generators);
    suspension(out, &m.oracle.suspension);
    exterior(out, &m.oracle.exterior);
}

fn checks(out: &mut String, cs: &[Check]) {
    let _ = writeln!(out, "checks:");
    for c in cs {
        let tag = if c.agree { "agree" } else { "DISAGREE" };
        let _ = writeln!(out, "  [{tag}] {}: claim {}, oracle {}", c.name, c.claim, c.oracle);
    }
}

fn warnings(out: &mut String, ws: &[String]) {
    for w in ws {
        let _ = writeln!(out, "warning: {w}");
    }
}

fn record(out: &mut String, r: &EmissionRecord) {
    let class = if r.strictly_internal {
        "strictly internal"
    } else if r.internal {
        "internal"
    } else {
        "boundary"
    };
    let fav = if r.favourable { "favourable" } else { "unfavourable" };
    let _ = write!(out, "  {} tree edges {}, {class}, {fav}: ", r.triangle, r.tree_edge_count);
    match (r.action, &r.placed_at) {
        (EmissionAction::Skipped, _) => {
            let _ = write!(out, "skipped");
            match &r.certificate {
                Some(Certificate::Apex { apex, supports }) => {
                    let _ = write!(out, " (apex {apex}; supports {})", supports.join(", "));
                }
                Some(Certificate::Span { coefficients }) => {
                    let terms: Vec<String> = coefficients.iter().map(|(t, c)| format!("{c}*{t}")).collect();
                    let _ = write!(out, " (span {})", terms.join(" + "));
                }
                None => {}
            }
            let _ = writeln!(out);
        }
        (action, placed) => {
            let what = if action == EmissionAction::EmittedVertexAndLoop { "new vertex and loop" } else { "loop" };
            let at = placed.as_ref().map_or(String::from("?"), |s| s.to_string());
            if action == EmissionAction::EmittedVertexAndLoop {
                let _ = writeln!(out, "{what} at {at} = {}, label {}", r.vertex_word, r.label);
            } else {
                let _ = writeln!(out, "{what} at {at}, label {}", r.label);
            }
        }
    }
}

pub(crate) fn bb(d: &BbDocument) -> String {
    let mut out = String::from("wlogkit bb report\n");
    input(&mut out, &d.input);
    gate(&mut out, &d.gate);
    if let Some(t) = &d.tree {
        let fb = if t.fell_back_to_greedy { ", fell back from exact" } else { "" };
        let _ = writeln!(out, "tree method: {} (budget {}{fb})", t.method, t.budget);
    }
    if let Some(r) = &d.report {
        let _ = writeln!(out, "tree edges: {}", r.tree_edges.join(" "));
        let gens: Vec<String> = r.tree_generators.iter().zip(&r.tree_edges).map(|(g, e)| format!("{g}={e}")).collect();
        let _ = writeln!(out, "tree generators: {}", gens.join(" "));
        let _ = writeln!(out, "unfavourable triangles: {}", r.unfavourable_triangles);
        let mode = match r.emission_mode {
            wlogkit_core::bb::EmissionMode::Pruned => "pruned",
            wlogkit_core::bb::EmissionMode::EmitAll => "emit-all",
        };
        let _ = writeln!(out, "emission mode: {mode}");
        let _ = writeln!(out, "triangles: {}", r.records.len());
        for rec in &r.records {
            record(&mut out, rec);
        }
        wlog(&mut out, &r.wlog);
        presentation(&mut out, "presentation", &r.presentation);
        presentation(&mut out, "substituted presentation", &r.substituted_presentation);
        let _ = writeln!(out, "abelianization: {}", r.abelianization);
        let _ = writeln!(out, "H2 rank: {}", r.h2_rank);
        let _ = writeln!(out, "B0 rank: {}", r.b0_rank);
        multiplier(&mut out, &r.multiplier);
        checks(&mut out, &r.checks);
        warnings(&mut out, &r.warnings);
    }
    warnings(&mut out, &d.warnings);
    let _ = writeln!(out, "exit code: {}", d.exit_code);
    out
}

pub(crate) fn artin(d: &ArtinDocument) -> String {
    let r = &d.report;
    let mut out = String::from("wlogkit artin report\n");
    input(&mut out, &d.input);
    let _ = writeln!(out, "all even: {}, right-angled: {}", r.all_even, r.right_angled);
    wlog(&mut out, &r.wlog);
    presentation(&mut out, "presentation", &r.presentation);
    let _ = writeln!(out, "abelianization: {}", r.abelianization);
    let _ = writeln!(out, "H2 rank: {}", r.h2_rank);
    let _ = writeln!(out, "B0 rank: {}", r.b0_rank);
    let c = &r.component_count;
    let _ = writeln!(out, "components: {} (formula {})", c.computed, c.formula);
    multiplier(&mut out, &r.multiplier);
    checks(&mut out, &r.checks);
    warnings(&mut out, &r.warnings);
    let _ = writeln!(out, "exit code: {}", d.exit_code);
    out
}

pub(crate) fn oracle(d: &OracleDocument) -> String {
    let mut out = String::from("wlogkit oracle report\n");
    let _ = writeln!(out, "input: {}, {} generators, {} relators", d.input_kind, d.generators, d.relators);
    let _ = writeln!(out, "H1: {}", d.homology.h1);
    let _ = writeln!(out, "H2 rank: {}", d.homology.h2_free_rank);
    if let Some(s) = &d.suspension {
        suspension(&mut out, s);
    }
    exterior(&mut out, &d.exterior);
    let _ = writeln!(out, "exit code: {}", d.exit_code);
    out
}

pub(crate) fn flag_check(d: &FlagCheckDocument) -> String {
    let mut out = String::from("wlogkit flag-check report\n");
    input(&mut out, &d.input);
    gate(&mut out, &d.gate);
    let _ = writeln!(out, "exit code: {}", d.exit_code);
    out
}
