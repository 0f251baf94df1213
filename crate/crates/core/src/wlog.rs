//! Word labelled oriented graphs, their presentations, and the multiplier
//! generators read off a spanning forest.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{exterior_rank, suspension_check, SuspensionCheck};
use crate::word::{Alphabet, Symbol, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WlogVertex {
    pub name: Symbol,
    /// For vertices standing for a word in other vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WlogEdge {
    pub origin: usize,
    pub terminus: usize,
    pub label: Word,
}

impl WlogEdge {
    pub fn is_loop(&self) -> bool {
        self.origin == self.terminus
    }
}

/// A word labelled oriented graph. Loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlogGraph {
    vertices: Vec<WlogVertex>,
    alphabet: Alphabet,
    edges: Vec<WlogEdge>,
}

impl WlogGraph {
    pub fn new(vertices: Vec<WlogVertex>, edges: Vec<WlogEdge>) -> Result<Self> {
        let alphabet =
            Alphabet::new(vertices.iter().map(|v| v.name.clone())).map_err(|e| Error::InvalidWlog(e.to_string()))?;
        for v in &vertices {
            if let Some(w) = &v.word {
                alphabet.check(w).map_err(|e| Error::InvalidWlog(e.to_string()))?;
            }
        }
        for (i, e) in edges.iter().enumerate() {
            if e.origin >= vertices.len() || e.terminus >= vertices.len() {
                return Err(Error::InvalidWlog(format!("edge {i} has an endpoint out of range")));
            }
            if e.label.is_empty() {
                return Err(Error::InvalidWlog(format!("edge {i} has an empty label")));
            }
            alphabet.check(&e.label).map_err(|e| Error::InvalidWlog(e.to_string()))?;
        }
        Ok(WlogGraph { vertices, alphabet, edges })
    }

    /// Builds from vertex names and `(origin, terminus, label)` name triples.
    pub fn from_names(vertices: &[(&str, Option<&str>)], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let vs = vertices
            .iter()
            .map(|&(n, w)| Ok(WlogVertex { name: Symbol::new(n), word: w.map(Word::parse).transpose()? }))
            .collect::<Result<Vec<_>>>()?;
        let pos = |n: &str| {
            vertices.iter().position(|v| v.0 == n).ok_or_else(|| Error::InvalidWlog(format!("unknown vertex {n}")))
        };
        let es = edges
            .iter()
            .map(|&(o, t, l)| Ok(WlogEdge { origin: pos(o)?, terminus: pos(t)?, label: Word::parse(l)? }))
            .collect::<Result<Vec<_>>>()?;
        WlogGraph::new(vs, es)
    }

    pub fn vertices(&self) -> &[WlogVertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[WlogEdge] {
        &self.edges
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn name(&self, v: usize) -> &Symbol {
        &self.vertices[v].name
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// `o(e) λ(e) t(e)⁻¹ λ(e)⁻¹`, reduced.
    pub fn relator(&self, i: usize) -> Word {
        let e = &self.edges[i];
        let o = Word::generator(self.name(e.origin).clone());
        let t = Word::generator(self.name(e.terminus).clone());
        o.concat(&e.label).concat(&t.inverse()).concat(&e.label.inverse())
    }

    /// One generator per vertex, one relator per edge. Vertex words are not
    /// substituted.
    pub fn presentation(&self) -> Result<Presentation> {
        let relators = (0..self.edges.len()).map(|i| self.relator(i)).collect();
        let provenance = (0..self.edges.len()).map(|edge| Provenance::WlogEdge { edge }).collect();
        Presentation::new(self.alphabet.clone(), relators, Some(provenance))
    }

    /// The presentation with every vertex that carries a word replaced by
    /// that word; the remaining vertices are the generators.
    pub fn substituted_presentation(&self) -> Result<Presentation> {
        let defs: BTreeMap<Symbol, Word> =
            self.vertices.iter().filter_map(|v| v.word.clone().map(|w| (v.name.clone(), w))).collect();
        let gens = Alphabet::new(self.vertices.iter().filter(|v| v.word.is_none()).map(|v| v.name.clone()))?;
        let relators = (0..self.edges.len()).map(|i| self.relator(i).substitute(|s| defs.get(s).cloned())).collect();
        let provenance = (0..self.edges.len()).map(|edge| Provenance::WlogEdge { edge }).collect();
        Presentation::new(gens, relators, Some(provenance))
    }

    pub fn component_count(&self) -> usize {
        components_and_forest(self).components.len()
    }
}

impl Serialize for WlogGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Edge<'a> {
            o: &'a Symbol,
            t: &'a Symbol,
            label: &'a Word,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            kind: &'static str,
            vertices: &'a [WlogVertex],
            edges: Vec<Edge<'a>>,
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { o: self.name(e.origin), t: self.name(e.terminus), label: &e.label })
            .collect();
        Doc { kind: "wlog", vertices: &self.vertices, edges }.serialize(s)
    }
}

/// Where a relator came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum Provenance {
    WlogEdge { edge: usize },
    TriangleCommutator { triangle: String },
    TriangleProduct { triangle: String },
    Triangle { triangle: String },
    Unspecified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Alphabet,
    relators: Vec<Word>,
    provenance: Vec<Provenance>,
}

impl Presentation {
    pub fn new(generators: Alphabet, relators: Vec<Word>, provenance: Option<Vec<Provenance>>) -> Result<Self> {
        for r in &relators {
            generators.check(r)?;
        }
        let provenance = provenance.unwrap_or_else(|| vec![Provenance::Unspecified; relators.len()]);
        if provenance.len() != relators.len() {
            return Err(Error::InvalidInput("one provenance tag per relator required".into()));
        }
        Ok(Presentation { generators, relators, provenance })
    }

    pub fn generators(&self) -> &Alphabet {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    /// Indices of relators that reduce to the empty word.
    pub fn degenerate_relators(&self) -> Vec<usize> {
        (0..self.relators.len()).filter(|&i| self.relators[i].is_empty()).collect()
    }

    /// Plain-text export: a generator line, then one relator per line.
    pub fn to_text(&self) -> String {
        let gens: Vec<&str> = self.generators.symbols().iter().map(Symbol::as_str).collect();
        let mut out = format!("generators: {}\n", gens.join(", "));
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            generators: &'a [Symbol],
            relators: &'a [Word],
            provenance: &'a [Provenance],
        }
        Doc { generators: self.generators.symbols(), relators: &self.relators, provenance: &self.provenance }
            .serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub base: usize,
    pub vertices: Vec<usize>,
}

/// Components of a WLOG with a spanning forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
    pub component_of: Vec<usize>,
    pub forest_edges: Vec<usize>,
    pub extra_loops: Vec<usize>,
    pub extra_non_loops: Vec<usize>,
    /// Label product along the forest path from the component base.
    path_words: Vec<Word>,
}

impl ComponentDecomposition {
    pub fn path_word(&self, v: usize) -> &Word {
        &self.path_words[v]
    }

    pub fn extra_edges(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.extra_loops.iter().chain(&self.extra_non_loops).copied().collect();
        all.sort_unstable();
        all
    }
}

/// Components by undirected connectivity, based at their least-named
/// vertex, with a depth-first spanning forest that visits neighbours in
/// name order (parallel edges by declaration order).
pub fn components_and_forest(w: &WlogGraph) -> ComponentDecomposition {
    let n = w.vertex_count();
    // (neighbour, edge, traversal sign)
    let mut adj: Vec<Vec<(usize, usize, i8)>> = vec![Vec::new(); n];
    for (i, e) in w.edges.iter().enumerate() {
        if !e.is_loop() {
            adj[e.origin].push((e.terminus, i, 1));
            adj[e.terminus].push((e.origin, i, -1));
        }
    }
    for a in adj.iter_mut() {
        a.sort_by(|x, y| w.name(x.0).cmp(w.name(y.0)).then(x.1.cmp(&y.1)));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| w.name(a).cmp(w.name(b)));

    let mut component_of = vec![usize::MAX; n];
    let mut path_words = vec![Word::empty(); n];
    let mut components = Vec::new();
    let mut forest = Vec::new();
    for &base in &order {
        if component_of[base] != usize::MAX {
            continue;
        }
        let c = components.len();
        let mut members = Vec::new();
        component_of[base] = c;
        members.push(base);
        // iterative DFS with per-vertex neighbour cursors
        let mut stack = vec![(base, 0usize)];
        while let Some(&mut (u, ref mut cursor)) = stack.last_mut() {
            if *cursor == adj[u].len() {
                stack.pop();
                continue;
            }
            let (v, edge, sign) = adj[u][*cursor];
            *cursor += 1;
            if component_of[v] == usize::MAX {
                component_of[v] = c;
                members.push(v);
                forest.push(edge);
                let label = &w.edges[edge].label;
                let step = if sign == 1 { label.clone() } else { label.inverse() };
                path_words[v] = path_words[u].concat(&step);
                stack.push((v, 0));
            }
        }
        members.sort_by(|&a, &b| w.name(a).cmp(w.name(b)));
        components.push(Component { base, vertices: members });
    }
    forest.sort_unstable();
    let (mut extra_loops, mut extra_non_loops) = (Vec::new(), Vec::new());
    for i in 0..w.edges.len() {
        if forest.binary_search(&i).is_err() {
            if w.edges[i].is_loop() {
                extra_loops.push(i);
            } else {
                extra_non_loops.push(i);
            }
        }
    }
    ComponentDecomposition { components, component_of, forest_edges: forest, extra_loops, extra_non_loops, path_words }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalLoop {
    pub component: usize,
    pub edge: usize,
}

/// One loop per non-forest edge, in edge declaration order.
pub fn fundamental_loops(w: &WlogGraph, d: &ComponentDecomposition) -> Vec<FundamentalLoop> {
    d.extra_edges()
        .into_iter()
        .map(|edge| FundamentalLoop { component: d.component_of[w.edges[edge].origin], edge })
        .collect()
}

/// `g₁ λ(e) g₂⁻¹` with `g₁`, `g₂` the forest path words to `o(e)`, `t(e)`.
pub fn lambda_image(w: &WlogGraph, d: &ComponentDecomposition, l: FundamentalLoop) -> Word {
    let e = &w.edges[l.edge];
    d.path_word(e.origin).concat(&e.label).concat(&d.path_word(e.terminus).inverse())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierGenerator {
    pub edge: usize,
    pub base_vertex: Symbol,
    pub loop_word: Word,
    /// `[loop_word, base_vertex]`.
    pub commutator_word: Word,
    /// The edge relator conjugated into the base vertex: `g₁ r g₁⁻¹`.
    pub relator: Word,
}

/// Whether an oracle could be run on this input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ExteriorOracle {
    Rank { rank: usize },
    NotApplicable { reason: String },
}

impl ExteriorOracle {
    pub fn rank(&self) -> Option<usize> {
        match self {
            ExteriorOracle::Rank { rank } => Some(*rank),
            ExteriorOracle::NotApplicable { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRecord {
    pub suspension: SuspensionCheck,
    /// Exterior rank of the relators with vertex words substituted; a
    /// lower bound for the multiplier rank when all relators are
    /// commutators.
    pub exterior: ExteriorOracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplierReport {
    pub h2_rank_claim: usize,
    pub b0_rank_claim: usize,
    pub h2_generators: Vec<MultiplierGenerator>,
    pub b0_generators: Vec<MultiplierGenerator>,
    pub oracle: OracleRecord,
}

pub fn exterior_oracle(w: &WlogGraph) -> Result<ExteriorOracle> {
    let p = w.substituted_presentation()?;
    Ok(match exterior_rank(p.generators(), p.relators()) {
        Ok(rank) => ExteriorOracle::Rank { rank },
        Err(Error::NotApplicable(reason)) => ExteriorOracle::NotApplicable { reason },
        Err(e) => return Err(e),
    })
}

pub fn multiplier_report(w: &WlogGraph) -> Result<MultiplierReport> {
    let d = components_and_forest(w);
    let mut h2 = Vec::new();
    for l in fundamental_loops(w, &d) {
        let base = w.name(d.components[l.component].base).clone();
        let loop_word = lambda_image(w, &d, l);
        let commutator_word = Word::commutator(&loop_word, &Word::generator(base.clone()));
        let g1 = d.path_word(w.edges[l.edge].origin);
        let relator = g1.concat(&w.relator(l.edge)).concat(&g1.inverse());
        h2.push(MultiplierGenerator { edge: l.edge, base_vertex: base, loop_word, commutator_word, relator });
    }
    let b0: Vec<MultiplierGenerator> = h2.iter().filter(|g| !w.edges[g.edge].is_loop()).cloned().collect();
    Ok(MultiplierReport {
        h2_rank_claim: h2.len(),
        b0_rank_claim: b0.len(),
        h2_generators: h2,
        b0_generators: b0,
        oracle: OracleRecord { suspension: suspension_check(w)?, exterior: exterior_oracle(w)? },
    })
}
