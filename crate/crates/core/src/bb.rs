//! Bestvina–Brady groups: the simple-connectivity gate, the Dicks–Leary
//! and Papadima–Suciu presentations, and the triangle-by-triangle WLOG
//! construction with its multiplier report.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{
    apexes, classify_triangle, favourable_spanning_tree, flag_two_skeleton, tree_path, triangles, Edge, OrientedEdge,
    SimplicialGraph, SpanningTree, TreeSearch, Triangle, TriangleClassification, DEFAULT_TREE_BUDGET,
};
use crate::homology::{
    flag_h1, integer_span_solution, pi1_trivial_certificate, presentation_complex_homology, small, AbelianGroup,
    Pi1Certificate, Pi1Status, DEFAULT_TIETZE_BUDGET,
};
use crate::wlog::{multiplier_report, MultiplierReport, Presentation, Provenance, WlogEdge, WlogGraph, WlogVertex};
use crate::word::{Alphabet, Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GateStatus {
    Certified,
    Assumed,
    Refuted,
    Unknown,
}

impl GateStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            GateStatus::Certified => "certified",
            GateStatus::Assumed => "assumed",
            GateStatus::Refuted => "refuted",
            GateStatus::Unknown => "unknown",
        }
    }
}

/// Outcome of testing whether the flag complex is simply connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagGate {
    pub status: GateStatus,
    pub connected: bool,
    pub h1: AbelianGroup,
    pub pi1: Pi1Certificate,
}

impl FlagGate {
    pub fn passed(&self) -> bool {
        matches!(self.status, GateStatus::Certified | GateStatus::Assumed)
    }

    pub fn require(&self) -> Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::NotCertifiedSimplyConnected(self.status.as_str().into()))
        }
    }
}

/// Refuted when the graph is disconnected or `H₁` of the flag complex is
/// nonzero; certified when the Tietze run kills `π₁`; otherwise unknown,
/// or assumed if the caller vouches for simple connectivity. A refutation
/// is never overridden.
pub fn flag_gate(g: &SimplicialGraph, assume: bool, tietze_budget: u64) -> FlagGate {
    let connected = g.is_connected();
    let h1 = flag_h1(&flag_two_skeleton(g));
    let pi1 = pi1_trivial_certificate(g, tietze_budget);
    let status = if !connected || !h1.is_trivial() {
        GateStatus::Refuted
    } else if pi1.status == Pi1Status::Certified {
        GateStatus::Certified
    } else if assume {
        GateStatus::Assumed
    } else {
        GateStatus::Unknown
    };
    FlagGate { status, connected, h1, pi1 }
}

fn dl_generator(g: &SimplicialGraph, e: Edge) -> Symbol {
    Symbol::from(format!("e_{}_{}", g.name(e.origin), g.name(e.terminus)))
}

/// One generator per edge; per triangle `a < b < c` with `e = ab`,
/// `f = bc`, `g = ac` the relators `[e, f]` and `e f g⁻¹`.
pub fn dicks_leary_presentation(g: &SimplicialGraph, gate: &FlagGate) -> Result<Presentation> {
    gate.require()?;
    let gens = Alphabet::new(g.edges().iter().map(|&e| dl_generator(g, e)))
        .map_err(|_| invalid("edge generator names collide; rename vertices"))?;
    let letter = |e: Edge| Word::generator(dl_generator(g, e));
    let mut relators = Vec::new();
    let mut provenance = Vec::new();
    for t in triangles(g) {
        let [ab, ac, bc] = t.edges();
        let label = g.triangle_label(t);
        relators.push(Word::commutator(&letter(ab), &letter(bc)));
        provenance.push(Provenance::TriangleCommutator { triangle: label.clone() });
        relators.push(letter(ab).concat(&letter(bc)).concat(&letter(ac).inverse()));
        provenance.push(Provenance::TriangleProduct { triangle: label });
    }
    Presentation::new(gens, relators, Some(provenance))
}

/// Generator names `v1, v2, ...` of the tree edges, in tree order.
pub fn tree_generators(tree: &SpanningTree) -> Vec<Symbol> {
    (1..=tree.edges().len()).map(|i| Symbol::from(format!("v{i}"))).collect()
}

/// The edge `e` written in the tree generators along the tree path from
/// `o(e)` to `t(e)`.
pub fn edge_word(g: &SimplicialGraph, tree: &SpanningTree, e: OrientedEdge) -> Result<Word> {
    if e.origin >= g.vertex_count() || e.terminus >= g.vertex_count() || !g.adjacent(e.origin, e.terminus) {
        return Err(invalid("not an edge of the graph"));
    }
    let gens = tree_generators(tree);
    let steps = tree_path(tree, e.origin, e.terminus)?;
    Ok(Word::from_powers(steps.iter().map(|s| {
        let pos = tree.position(s.edge).expect("path uses tree edges");
        (gens[pos].clone(), s.sign as i64)
    })))
}

/// Tree generators; per triangle `[w(x), w(y)]` for its first two edges.
pub fn ps_presentation(g: &SimplicialGraph, tree: &SpanningTree, gate: &FlagGate) -> Result<Presentation> {
    gate.require()?;
    let gens = Alphabet::new(tree_generators(tree))?;
    let mut relators = Vec::new();
    let mut provenance = Vec::new();
    for t in triangles(g) {
        let [x, y, _] = t.edges();
        relators.push(Word::commutator(&edge_word(g, tree, x.into())?, &edge_word(g, tree, y.into())?));
        provenance.push(Provenance::Triangle { triangle: g.triangle_label(t) });
    }
    Presentation::new(gens, relators, Some(provenance))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmissionMode {
    /// Skip triangles whose relation is certified redundant.
    #[default]
    Pruned,
    EmitAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmissionAction {
    EmittedLoop,
    EmittedVertexAndLoop,
    Skipped,
}

/// Why a triangle was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// The three triangles through `apex` and the edges of the skipped
    /// triangle were all kept (or skipped earlier without depending on it).
    Apex { apex: String, supports: Vec<String> },
    /// The exterior image is this integer combination of kept images.
    Span { coefficients: Vec<(String, i64)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmissionRecord {
    pub triangle: String,
    #[serde(skip)]
    pub id: Triangle,
    pub tree_edge_count: u8,
    pub strictly_internal: bool,
    pub internal: bool,
    pub favourable: bool,
    pub action: EmissionAction,
    /// WLOG vertex carrying the loop; none for skipped triangles.
    pub placed_at: Option<Symbol>,
    /// The loop vertex written in the tree generators.
    pub vertex_word: Word,
    pub label: Word,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug)]
enum Placement {
    Tree(usize),
    New(Word),
}

struct Plan {
    triangle: Triangle,
    class: TriangleClassification,
    placement: Placement,
    label: Word,
    image: Vec<i64>,
}

/// Of two oriented edges, the one with the shorter word; ties go to the
/// earlier edge.
fn shorter_word(g: &SimplicialGraph, tree: &SpanningTree, fs: [OrientedEdge; 2]) -> Result<Word> {
    let mut best: Option<(usize, usize, Word)> = None;
    for f in fs {
        let w = edge_word(g, tree, f)?;
        let key = (w.len(), g.edge_position(g.canonical(f.origin, f.terminus)).expect("edge"));
        if best.as_ref().is_none_or(|b| key < (b.0, b.1)) {
            best = Some((key.0, key.1, w));
        }
    }
    Ok(best.expect("two candidates").2)
}

fn plan_triangle(g: &SimplicialGraph, tree: &SpanningTree, gens: &Alphabet, t: Triangle) -> Result<Plan> {
    let class = classify_triangle(g, tree, t)?;
    let edges = t.edges();
    let in_tree: Vec<Edge> = edges.iter().copied().filter(|&e| tree.contains(e)).collect();
    let (placement, label) = match in_tree.len() {
        2 => {
            let (p, q) = (tree.position(in_tree[0]).unwrap(), tree.position(in_tree[1]).unwrap());
            let (first, second) = if p < q { (p, q) } else { (q, p) };
            (Placement::Tree(first), gens.generator(second))
        }
        1 => {
            let e = in_tree[0];
            let x = t.apex_opposite(e);
            let fs = [OrientedEdge { origin: x, terminus: e.origin }, OrientedEdge { origin: x, terminus: e.terminus }];
            (Placement::Tree(tree.position(e).unwrap()), shorter_word(g, tree, fs)?)
        }
        0 => {
            let e = edges[0];
            let x = t.apex_opposite(e);
            let fs = [OrientedEdge { origin: x, terminus: e.origin }, OrientedEdge { origin: x, terminus: e.terminus }];
            (Placement::New(edge_word(g, tree, e.into())?), shorter_word(g, tree, fs)?)
        }
        _ => unreachable!("a triangle has at most two tree edges"),
    };
    let vertex_word = match &placement {
        Placement::Tree(p) => gens.generator(*p),
        Placement::New(w) => w.clone(),
    };
    let relator = vertex_word.concat(&label).concat(&vertex_word.inverse()).concat(&label.inverse());
    let image = gens.exterior_image(&relator)?.coords().to_vec();
    Ok(Plan { triangle: t, class, placement, label, image })
}

/// Result of the WLOG construction.
#[derive(Clone, Debug)]
pub struct BbWlog {
    pub wlog: WlogGraph,
    pub records: Vec<EmissionRecord>,
}

/// Builds the WLOG: one vertex per tree edge, one loop per kept triangle,
/// and a new vertex for each kept triangle with no tree edge.
pub fn build_bb_wlog(g: &SimplicialGraph, tree: &SpanningTree, gate: &FlagGate, mode: EmissionMode) -> Result<BbWlog> {
    gate.require()?;
    if tree.edges().len() + 1 != g.vertex_count() {
        return Err(invalid("tree does not span the graph"));
    }
    let tree = &SpanningTree::new(g, tree.edges().to_vec())?;
    let gens = Alphabet::new(tree_generators(tree))?;
    let ts = triangles(g);
    let plans = ts.iter().map(|&t| plan_triangle(g, tree, &gens, t)).collect::<Result<Vec<_>>>()?;
    let dim = gens.len() * gens.len().saturating_sub(1) / 2;
    let mut certs: Vec<Option<Certificate>> = vec![None; ts.len()];
    if mode == EmissionMode::Pruned {
        prune(g, &ts, &plans, dim, &mut certs);
    }

    let mut vertices: Vec<WlogVertex> =
        gens.symbols().iter().map(|s| WlogVertex { name: s.clone(), word: None }).collect();
    let mut edges = Vec::new();
    let mut records = Vec::new();
    let mut fresh = 0;
    for (plan, cert) in plans.into_iter().zip(certs) {
        let kept = cert.is_none();
        let (action, placed_at) = match (&plan.placement, kept) {
            (_, false) => (EmissionAction::Skipped, None),
            (Placement::Tree(p), true) => (EmissionAction::EmittedLoop, Some(*p)),
            (Placement::New(w), true) => {
                fresh += 1;
                vertices.push(WlogVertex { name: Symbol::from(format!("w{fresh}")), word: Some(w.clone()) });
                (EmissionAction::EmittedVertexAndLoop, Some(vertices.len() - 1))
            }
        };
        if let Some(v) = placed_at {
            edges.push(WlogEdge { origin: v, terminus: v, label: plan.label.clone() });
        }
        records.push(EmissionRecord {
            triangle: g.triangle_label(plan.triangle),
            id: plan.triangle,
            tree_edge_count: plan.class.tree_edge_count,
            strictly_internal: plan.class.strictly_internal,
            internal: plan.class.internal,
            favourable: plan.class.favourable,
            action,
            placed_at: placed_at.map(|v| vertices[v].name.clone()),
            vertex_word: match plan.placement {
                Placement::Tree(p) => gens.generator(p),
                Placement::New(w) => w,
            },
            label: plan.label,
            certificate: cert,
        });
    }
    Ok(BbWlog { wlog: WlogGraph::new(vertices, edges)?, records })
}

fn in_span(dim: usize, plans: &[Plan], kept: impl Fn(usize) -> bool, target: usize) -> Option<Vec<(usize, i64)>> {
    let idx: Vec<usize> = (0..plans.len()).filter(|&i| i != target && kept(i)).collect();
    let rows: Vec<Vec<i64>> = idx.iter().map(|&i| plans[i].image.clone()).collect();
    let x = integer_span_solution(dim, &rows, &plans[target].image)?;
    Some(idx.into_iter().zip(x.iter().map(small)).filter(|&(_, c)| c != 0).collect())
}

/// Two passes. First, strictly internal triangles with fewer than two tree
/// edges are skipped when an apex certificate exists whose supports do not
/// depend on the triangle, and its image lies in the span of the kept
/// images; repeated until stable. Second, any kept triangle whose image is
/// in the span of the other kept images is skipped.
fn prune(g: &SimplicialGraph, ts: &[Triangle], plans: &[Plan], dim: usize, certs: &mut [Option<Certificate>]) {
    let index: HashMap<Triangle, usize> = ts.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut supports: Vec<Vec<usize>> = vec![Vec::new(); ts.len()];

    fn depends(supports: &[Vec<usize>], s: usize, target: usize) -> bool {
        s == target || supports[s].iter().any(|&x| depends(supports, x, target))
    }

    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..ts.len() {
            let p = &plans[i];
            if certs[i].is_some() || !p.class.strictly_internal || p.class.tree_edge_count >= 2 {
                continue;
            }
            let [a, b, c] = ts[i].0;
            for x in apexes(g, ts[i]) {
                let flank: Vec<usize> = [[a, b, x], [a, c, x], [b, c, x]]
                    .iter()
                    .map(|vs| {
                        let mut vs = *vs;
                        vs.sort_by_key(|&v| g.rank(v));
                        index[&Triangle(vs)]
                    })
                    .collect();
                if flank.iter().any(|&f| depends(&supports, f, i)) {
                    continue;
                }
                if in_span(dim, plans, |j| certs[j].is_none(), i).is_none() {
                    break;
                }
                supports[i] = flank.clone();
                certs[i] = Some(Certificate::Apex {
                    apex: g.name(x).to_string(),
                    supports: flank.iter().map(|&f| g.triangle_label(ts[f])).collect(),
                });
                changed = true;
                break;
            }
        }
    }

    for i in 0..ts.len() {
        if certs[i].is_some() {
            continue;
        }
        if let Some(coeffs) = in_span(dim, plans, |j| certs[j].is_none(), i) {
            certs[i] = Some(Certificate::Span {
                coefficients: coeffs.into_iter().map(|(j, c)| (g.triangle_label(ts[j]), c)).collect(),
            });
        }
    }
}

/// A claim set against an oracle value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub claim: String,
    pub oracle: String,
    pub agree: bool,
}

impl Check {
    pub fn new(name: &str, claim: impl ToString, oracle: impl ToString) -> Self {
        let (claim, oracle) = (claim.to_string(), oracle.to_string());
        Check { name: name.into(), agree: claim == oracle, claim, oracle }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BbReport {
    pub gate: FlagGate,
    pub tree_edges: Vec<String>,
    pub tree_generators: Vec<Symbol>,
    pub unfavourable_triangles: usize,
    pub emission_mode: EmissionMode,
    pub records: Vec<EmissionRecord>,
    pub wlog: WlogGraph,
    pub presentation: Presentation,
    pub substituted_presentation: Presentation,
    pub abelianization: AbelianGroup,
    /// The reported `H₂` rank: the loop count when pruned, the exterior
    /// rank when every triangle is emitted.
    pub h2_rank: usize,
    pub b0_rank: usize,
    pub multiplier: MultiplierReport,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl BbReport {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.agree)
    }
}

/// Full pipeline on a given tree.
pub fn bb_pipeline(g: &SimplicialGraph, gate: &FlagGate, tree: &SpanningTree, mode: EmissionMode) -> Result<BbReport> {
    let built = build_bb_wlog(g, tree, gate, mode)?;
    let wlog = built.wlog;
    let presentation = wlog.presentation()?;
    let substituted = wlog.substituted_presentation()?;
    let multiplier = multiplier_report(&wlog)?;
    let abelianization = presentation_complex_homology(&substituted)?.h1;
    let exterior = multiplier.oracle.exterior.rank();
    let mut checks = Vec::new();
    let mut warnings = Vec::new();
    let h2_rank = match mode {
        EmissionMode::Pruned => {
            checks.push(Check::new(
                "h2 rank (loop count) vs exterior rank",
                multiplier.h2_rank_claim,
                exterior.map_or("not applicable".into(), |r| r.to_string()),
            ));
            multiplier.h2_rank_claim
        }
        EmissionMode::EmitAll => {
            warnings.push("every triangle emitted; H2 rank is reported as the exterior rank".into());
            exterior.unwrap_or(multiplier.h2_rank_claim)
        }
    };
    let s = &multiplier.oracle.suspension;
    checks.push(Check::new(
        "presentation complex vs suspension",
        format!("({}, {})", s.expected_h1, s.expected_h2_rank),
        format!("({}, {})", s.actual.h1, s.actual.h2_free_rank),
    ));
    checks.push(Check::new("b0 rank (no non-loop edges)", 0, multiplier.b0_rank_claim));
    checks.push(Check::new("abelianization", AbelianGroup::free(tree.edges().len()), &abelianization));
    let skipped_ok = span_recheck(&built.records, &substituted)?;
    checks.push(Check::new("skipped relations in span of kept ones", true, skipped_ok));
    for i in presentation.degenerate_relators() {
        warnings.push(format!("relator of edge {i} reduces to the empty word"));
    }
    Ok(BbReport {
        gate: gate.clone(),
        tree_edges: tree.edges().iter().map(|&e| g.edge_label(e)).collect(),
        tree_generators: tree_generators(tree),
        unfavourable_triangles: crate::graph::unfavourable_count(g, tree),
        emission_mode: mode,
        records: built.records,
        wlog,
        presentation,
        substituted_presentation: substituted,
        abelianization,
        h2_rank,
        b0_rank: multiplier.b0_rank_claim,
        multiplier,
        checks,
        warnings,
    })
}

/// Global re-check that every skipped triangle's relation image lies in the
/// span of the emitted relations' images.
fn span_recheck(records: &[EmissionRecord], substituted: &Presentation) -> Result<bool> {
    let gens = substituted.generators();
    let dim = gens.len() * gens.len().saturating_sub(1) / 2;
    let rows = substituted
        .relators()
        .iter()
        .map(|r| gens.exterior_image(r).map(|x| x.coords().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let mut ok = true;
    for r in records.iter().filter(|r| r.action == EmissionAction::Skipped) {
        let target = skipped_image(r, gens)?;
        ok &= integer_span_solution(dim, &rows, &target).is_some();
    }
    Ok(ok)
}

fn skipped_image(r: &EmissionRecord, gens: &Alphabet) -> Result<Vec<i64>> {
    let v = r.vertex_word.clone();
    let rel = v.concat(&r.label).concat(&v.inverse()).concat(&r.label.inverse());
    Ok(gens.exterior_image(&rel)?.coords().to_vec())
}

/// Gate without assumption, exact favourable tree, pruned emission.
pub fn bb_invariants(g: &SimplicialGraph) -> Result<BbReport> {
    let gate = flag_gate(g, false, DEFAULT_TIETZE_BUDGET);
    gate.require()?;
    let (tree, _) = favourable_spanning_tree(g, TreeSearch::Exact, DEFAULT_TREE_BUDGET)?;
    bb_pipeline(g, &gate, &tree, EmissionMode::Pruned)
}
