//! Finite simplicial graphs, their triangles, and spanning trees.
//!
//! Vertices are compared by name: an edge is stored with its
//! lexicographically smaller endpoint as origin, triangles are sorted
//! vertex triples, and every list this module returns is in that order.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{invalid, Error, Result};
use crate::word::is_ident;

pub type VertexId = usize;

/// Undirected edge between distinct vertices, stored in canonical
/// orientation (`origin` has the smaller name).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub origin: VertexId,
    pub terminus: VertexId,
}

/// An edge with a chosen direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientedEdge {
    pub origin: VertexId,
    pub terminus: VertexId,
}

impl OrientedEdge {
    pub fn reversed(self) -> Self {
        OrientedEdge { origin: self.terminus, terminus: self.origin }
    }
}

impl From<Edge> for OrientedEdge {
    fn from(e: Edge) -> Self {
        OrientedEdge { origin: e.origin, terminus: e.terminus }
    }
}

/// Three pairwise adjacent vertices, sorted by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle(pub [VertexId; 3]);

impl Triangle {
    pub fn vertices(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The three edges in canonical order: `ab`, `ac`, `bc`.
    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge { origin: a, terminus: b }, Edge { origin: a, terminus: c }, Edge { origin: b, terminus: c }]
    }

    /// The vertex of the triangle not on `e`.
    pub fn apex_opposite(&self, e: Edge) -> VertexId {
        *self.0.iter().find(|&&v| v != e.origin && v != e.terminus).expect("edge of triangle")
    }
}

/// Finite graph without loops or multiple edges.
///
/// Vertex ids are positions in the declared vertex list; `rank` orders them
/// by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGraph {
    names: Vec<String>,
    rank: Vec<usize>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    adjacency: Vec<BTreeSet<VertexId>>,
}

impl SimplicialGraph {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if !is_ident(n) {
                return Err(invalid(format!("vertex name {n:?} is not an identifier")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(invalid(format!("duplicate vertex {n}")));
            }
        }
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut rank = vec![0; names.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let mut g =
            SimplicialGraph { names, rank, index, edges: Vec::new(), adjacency: vec![BTreeSet::new(); vertices.len()] };
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let a = g.vertex(u).ok_or_else(|| invalid(format!("edge endpoint {u} is not a vertex")))?;
            let b = g.vertex(v).ok_or_else(|| invalid(format!("edge endpoint {v} is not a vertex")))?;
            if a == b {
                return Err(invalid(format!("loop at {u}")));
            }
            let e = g.canonical(a, b);
            if !seen.insert(e) {
                return Err(invalid(format!("repeated edge {u}-{v}")));
            }
            g.adjacency[a].insert(b);
            g.adjacency[b].insert(a);
        }
        let mut es: Vec<Edge> = seen.into_iter().collect();
        es.sort_by_key(|e| (g.rank[e.origin], g.rank[e.terminus]));
        g.edges = es;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    /// Vertices sorted by name.
    pub fn sorted_vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = (0..self.vertex_count()).collect();
        vs.sort_by_key(|&v| self.rank[v]);
        vs
    }

    pub fn rank(&self, v: VertexId) -> usize {
        self.rank[v]
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].contains(&v)
    }

    /// Neighbours sorted by name.
    pub fn neighbours(&self, v: VertexId) -> Vec<VertexId> {
        let mut ns: Vec<VertexId> = self.adjacency[v].iter().copied().collect();
        ns.sort_by_key(|&u| self.rank[u]);
        ns
    }

    pub fn canonical(&self, u: VertexId, v: VertexId) -> Edge {
        if self.rank[u] <= self.rank[v] {
            Edge { origin: u, terminus: v }
        } else {
            Edge { origin: v, terminus: u }
        }
    }

    pub fn edge(&self, u: &str, v: &str) -> Option<Edge> {
        let (a, b) = (self.vertex(u)?, self.vertex(v)?);
        self.adjacent(a, b).then(|| self.canonical(a, b))
    }

    pub fn edge_position(&self, e: Edge) -> Option<usize> {
        self.edges
            .binary_search_by_key(&(self.rank[e.origin], self.rank[e.terminus]), |x| {
                (self.rank[x.origin], self.rank[x.terminus])
            })
            .ok()
    }

    pub fn edge_label(&self, e: Edge) -> String {
        format!("{}-{}", self.names[e.origin], self.names[e.terminus])
    }

    pub fn triangle(&self, a: &str, b: &str, c: &str) -> Option<Triangle> {
        let vs = [self.vertex(a)?, self.vertex(b)?, self.vertex(c)?];
        self.make_triangle(vs)
    }

    fn make_triangle(&self, mut vs: [VertexId; 3]) -> Option<Triangle> {
        if vs.iter().any(|&v| v >= self.vertex_count()) {
            return None;
        }
        vs.sort_by_key(|&v| self.rank[v]);
        let [a, b, c] = vs;
        (a != b && b != c && self.adjacent(a, b) && self.adjacent(a, c) && self.adjacent(b, c)).then_some(Triangle(vs))
    }

    pub fn triangle_label(&self, t: Triangle) -> String {
        let [a, b, c] = t.0;
        format!("({}, {}, {})", self.names[a], self.names[b], self.names[c])
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn check_triangle(&self, t: Triangle) -> Result<()> {
        if self.make_triangle(t.0) == Some(t) {
            Ok(())
        } else {
            Err(invalid(format!("{:?} is not a triangle of the graph", t.0)))
        }
    }

    /// Induced subgraph on the given vertices (kept in declared order).
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> SimplicialGraph {
        let vs: Vec<&str> = (0..self.vertex_count()).filter(|v| keep.contains(v)).map(|v| self.name(v)).collect();
        let es: Vec<(&str, &str)> = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.origin) && keep.contains(&e.terminus))
            .map(|e| (self.name(e.origin), self.name(e.terminus)))
            .collect();
        SimplicialGraph::new(&vs, &es).expect("induced subgraph of a valid graph")
    }
}

/// All 3-cliques, sorted by vertex triple.
pub fn triangles(g: &SimplicialGraph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for e in g.edges() {
        for &w in &g.adjacency[e.terminus] {
            if g.rank[w] > g.rank[e.terminus] && g.adjacent(e.origin, w) {
                out.push(Triangle([e.origin, e.terminus, w]));
            }
        }
    }
    out.sort_by_key(|t| t.0.map(|v| g.rank[v]));
    out
}

/// Remove the triangle's edges, drop vertices that became isolated, and
/// return the induced subgraph of `g` on what is left.
pub fn edge_set_complement(g: &SimplicialGraph, t: Triangle) -> Result<SimplicialGraph> {
    let keep = complement_vertices(g, t)?;
    Ok(g.induced(&keep))
}

fn complement_vertices(g: &SimplicialGraph, t: Triangle) -> Result<BTreeSet<VertexId>> {
    g.check_triangle(t)?;
    let removed = t.edges();
    let mut keep = BTreeSet::new();
    for e in g.edges().iter().filter(|e| !removed.contains(e)) {
        keep.insert(e.origin);
        keep.insert(e.terminus);
    }
    Ok(keep)
}

/// The triangle meets its edge-set complement in neither a single vertex
/// nor a single edge.
pub fn is_internal(g: &SimplicialGraph, t: Triangle) -> Result<bool> {
    let keep = complement_vertices(g, t)?;
    // The complement is induced, so the intersection is the sub-simplex of t
    // spanned by its surviving vertices: one survivor is a vertex, two an edge.
    let survivors = t.0.iter().filter(|v| keep.contains(v)).count();
    Ok(survivors != 1 && survivors != 2)
}

/// Some vertex outside `t` is adjacent to all three of its vertices.
pub fn is_strictly_internal(g: &SimplicialGraph, t: Triangle) -> Result<bool> {
    g.check_triangle(t)?;
    Ok(apexes(g, t).next().is_some())
}

/// Common neighbours of the triangle's vertices, sorted by name.
pub fn apexes(g: &SimplicialGraph, t: Triangle) -> impl Iterator<Item = VertexId> + '_ {
    let [a, b, c] = t.0;
    g.neighbours(a).into_iter().filter(move |&x| x != b && x != c && g.adjacent(x, b) && g.adjacent(x, c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleClassification {
    pub tree_edge_count: u8,
    pub strictly_internal: bool,
    pub internal: bool,
    pub favourable: bool,
}

pub fn classify_triangle(g: &SimplicialGraph, tree: &SpanningTree, t: Triangle) -> Result<TriangleClassification> {
    let strictly_internal = is_strictly_internal(g, t)?;
    let internal = is_internal(g, t)?;
    let tree_edge_count = t.edges().iter().filter(|e| tree.contains(**e)).count() as u8;
    debug_assert!(tree_edge_count <= 2);
    Ok(TriangleClassification {
        tree_edge_count,
        strictly_internal,
        internal,
        favourable: tree_edge_count == 2 || strictly_internal,
    })
}

/// A spanning tree of a connected graph. Edge order is significant: it is
/// the order in which tree edges become generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<Edge>,
    members: BTreeSet<Edge>,
    // tree adjacency: (neighbour, edge position)
    adjacency: Vec<Vec<(VertexId, usize)>>,
}

impl SpanningTree {
    /// Validates that `edges` are edges of `g` forming a spanning tree.
    pub fn new(g: &SimplicialGraph, edges: Vec<Edge>) -> Result<Self> {
        let n = g.vertex_count();
        let mut canonical = Vec::with_capacity(edges.len());
        for e in edges {
            let c = g.canonical(e.origin, e.terminus);
            if e.origin == e.terminus || !g.adjacent(c.origin, c.terminus) {
                return Err(invalid("tree edge is not an edge of the graph"));
            }
            canonical.push(c);
        }
        if n == 0 || canonical.len() != n - 1 {
            return Err(invalid(format!(
                "a spanning tree of {n} vertices needs {} edges, got {}",
                n.saturating_sub(1),
                canonical.len()
            )));
        }
        let mut uf = UnionFind::new(n);
        for e in &canonical {
            if !uf.union(e.origin, e.terminus) {
                return Err(invalid("tree edges contain a cycle"));
            }
        }
        let members: BTreeSet<Edge> = canonical.iter().copied().collect();
        let mut adjacency = vec![Vec::new(); n];
        for (i, e) in canonical.iter().enumerate() {
            adjacency[e.origin].push((e.terminus, i));
            adjacency[e.terminus].push((e.origin, i));
        }
        Ok(SpanningTree { edges: canonical, members, adjacency })
    }

    pub fn from_names(g: &SimplicialGraph, pairs: &[(&str, &str)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|(u, v)| g.edge(u, v).ok_or_else(|| invalid(format!("{u}-{v} is not an edge"))))
            .collect::<Result<Vec<_>>>()?;
        SpanningTree::new(g, edges)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.members.contains(&e)
    }

    pub fn position(&self, e: Edge) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }

    /// The tree edge list sorted by edge order of the host graph.
    pub fn sorted_edges(&self, g: &SimplicialGraph) -> Vec<Edge> {
        let mut es = self.edges.clone();
        es.sort_by_key(|e| (g.rank(e.origin), g.rank(e.terminus)));
        es
    }
}

/// Tree path step: the canonical tree edge and `+1` if traversed from its
/// origin to its terminus, `-1` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub edge: Edge,
    pub sign: i8,
}

/// The unique simple path from `u` to `v` in the tree.
pub fn tree_path(tree: &SpanningTree, u: VertexId, v: VertexId) -> Result<Vec<PathStep>> {
    let n = tree.adjacency.len();
    if u >= n || v >= n {
        return Err(invalid("unknown vertex"));
    }
    let mut parent: Vec<Option<(VertexId, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([u]);
    seen[u] = true;
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &(y, i) in &tree.adjacency[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, i));
                queue.push_back(y);
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = v;
    while cur != u {
        let (prev, i) = parent[cur].expect("spanning tree is connected");
        let e = tree.edges[i];
        let sign = if e.origin == prev { 1 } else { -1 };
        steps.push(PathStep { edge: e, sign });
        cur = prev;
    }
    steps.reverse();
    Ok(steps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TreeSearch {
    #[default]
    Exact,
    Greedy,
}

pub const DEFAULT_TREE_BUDGET: u64 = 1_000_000;

/// Precomputed triangle data for fast unfavourable counts.
struct TriangleTable {
    // edge positions of each triangle, and whether it is strictly internal
    rows: Vec<([usize; 3], bool)>,
}

impl TriangleTable {
    fn new(g: &SimplicialGraph) -> Self {
        let rows = triangles(g)
            .into_iter()
            .map(|t| {
                let es = t.edges().map(|e| g.edge_position(e).expect("triangle edge"));
                (es, apexes(g, t).next().is_some())
            })
            .collect();
        TriangleTable { rows }
    }

    fn unfavourable(&self, in_tree: &[bool]) -> usize {
        self.rows.iter().filter(|(es, strict)| !strict && es.iter().filter(|&&i| in_tree[i]).count() != 2).count()
    }
}

/// Number of triangles that are unfavourable with respect to `tree`.
pub fn unfavourable_count(g: &SimplicialGraph, tree: &SpanningTree) -> usize {
    let mut in_tree = vec![false; g.edges().len()];
    for &e in tree.edges() {
        in_tree[g.edge_position(e).expect("tree edge")] = true;
    }
    TriangleTable::new(g).unfavourable(&in_tree)
}

/// A spanning tree with the fewest unfavourable triangles.
///
/// Exact mode enumerates spanning trees in lexicographic order of their
/// sorted edge lists and keeps the first strict minimum; it fails with
/// [`Error::BudgetExceeded`] once more than `budget` trees have been seen.
/// Greedy mode hill-climbs over single edge swaps from the breadth-first
/// tree at the least vertex.
pub fn favourable_spanning_tree(g: &SimplicialGraph, mode: TreeSearch, budget: u64) -> Result<(SpanningTree, usize)> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(invalid("favourable spanning tree needs a connected, non-empty graph"));
    }
    let table = TriangleTable::new(g);
    let chosen = match mode {
        TreeSearch::Exact => exact_search(g, &table, budget)?,
        TreeSearch::Greedy => greedy_search(g, &table),
    };
    let edges = chosen.iter().map(|&i| g.edges()[i]).collect();
    let tree = SpanningTree::new(g, edges)?;
    let count = unfavourable_count(g, &tree);
    Ok((tree, count))
}

struct ExactSearch<'a> {
    g: &'a SimplicialGraph,
    table: &'a TriangleTable,
    budget: u64,
    seen: u64,
    chosen: Vec<usize>,
    in_tree: Vec<bool>,
    excluded: Vec<bool>,
    best: Option<(usize, Vec<usize>)>,
}

impl ExactSearch<'_> {
    fn run(&mut self, next: usize, uf: &UnionFind) -> Result<()> {
        let n = self.g.vertex_count();
        if self.chosen.len() == n - 1 {
            self.seen += 1;
            if self.seen > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            let count = self.table.unfavourable(&self.in_tree);
            if self.best.as_ref().is_none_or(|(b, _)| count < *b) {
                self.best = Some((count, self.chosen.clone()));
            }
            return Ok(());
        }
        if next == self.g.edges().len() {
            return Ok(());
        }
        let e = self.g.edges()[next];
        // include
        let mut with = uf.clone();
        if with.union(e.origin, e.terminus) {
            self.chosen.push(next);
            self.in_tree[next] = true;
            self.run(next + 1, &with)?;
            self.in_tree[next] = false;
            self.chosen.pop();
        }
        // exclude, if the remaining edges can still span
        self.excluded[next] = true;
        if self.still_spannable(next + 1) {
            self.run(next + 1, uf)?;
        }
        self.excluded[next] = false;
        Ok(())
    }

    fn still_spannable(&self, from: usize) -> bool {
        let mut uf = UnionFind::new(self.g.vertex_count());
        for (i, e) in self.g.edges().iter().enumerate() {
            if self.in_tree[i] || (i >= from && !self.excluded[i]) {
                uf.union(e.origin, e.terminus);
            }
        }
        uf.components() == 1
    }
}

fn exact_search(g: &SimplicialGraph, table: &TriangleTable, budget: u64) -> Result<Vec<usize>> {
    let m = g.edges().len();
    let mut s = ExactSearch {
        g,
        table,
        budget,
        seen: 0,
        chosen: Vec::new(),
        in_tree: vec![false; m],
        excluded: vec![false; m],
        best: None,
    };
    s.run(0, &UnionFind::new(g.vertex_count()))?;
    Ok(s.best.expect("connected graph has a spanning tree").1)
}

fn bfs_tree(g: &SimplicialGraph) -> Vec<usize> {
    let start = g.sorted_vertices()[0];
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(u) = queue.pop_front() {
        for v in g.neighbours(u) {
            if !seen[v] {
                seen[v] = true;
                out.push(g.edge_position(g.canonical(u, v)).expect("edge"));
                queue.push_back(v);
            }
        }
    }
    out.sort_unstable();
    out
}

fn greedy_search(g: &SimplicialGraph, table: &TriangleTable) -> Vec<usize> {
    let m = g.edges().len();
    let n = g.vertex_count();
    let mut in_tree = vec![false; m];
    for i in bfs_tree(g) {
        in_tree[i] = true;
    }
    let mut current = table.unfavourable(&in_tree);
    'improve: while current > 0 {
        for add in 0..m {
            if in_tree[add] {
                continue;
            }
            for drop in 0..m {
                if !in_tree[drop] {
                    continue;
                }
                in_tree[drop] = false;
                in_tree[add] = true;
                let mut uf = UnionFind::new(n);
                let spans = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| in_tree[*i])
                    .all(|(_, e)| uf.union(e.origin, e.terminus));
                if spans {
                    let c = table.unfavourable(&in_tree);
                    if c < current {
                        current = c;
                        continue 'improve;
                    }
                }
                in_tree[add] = false;
                in_tree[drop] = true;
            }
        }
        break;
    }
    (0..m).filter(|&i| in_tree[i]).collect()
}

/// 2-skeleton of the flag complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagSkeleton {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
}

pub fn flag_two_skeleton(g: &SimplicialGraph) -> FlagSkeleton {
    FlagSkeleton { vertices: g.sorted_vertices(), edges: g.edges().to_vec(), triangles: triangles(g) }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), count: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.count -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.count
    }
}
