//! Exact integer linear algebra and the homology oracles built on it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{FlagSkeleton, SimplicialGraph, UnionFind, VertexId};
use crate::wlog::{Presentation, WlogGraph};
use crate::word::{Alphabet, Word};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length; `cols` is needed when
    /// there are no rows.
    pub fn from_rows<T: Into<BigInt> + Copy>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = x.into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum()).collect()
    }

    /// Determinant by fraction-free elimination (Bareiss).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, x);
                }
            }
            prev = a.get(k, k).clone();
        }
        if n == 0 {
            BigInt::one()
        } else {
            sign * a.get(n - 1, n - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let x = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += x;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let x = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = x;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

/// `u * a * v = d` with `d` diagonal, `u` and `v` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries, each dividing the next.
    pub factors: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Smith normal form with transforms.
///
/// Pivot rule: the entry of smallest nonzero absolute value in the
/// remaining block, first in row-major order on ties.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                dirty |= !d.get(t, j).is_zero();
            }
            if !dirty {
                // pivot must divide the rest of the block
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !d.get(i, j).is_multiple_of(d.get(t, t)));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        d.add_row(t, i, &BigInt::one());
                        u.add_row(t, i, &BigInt::one());
                    }
                }
            }
            if let Some((pi, pj)) = smallest_in_cross(&d, t) {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let factors = (0..t).map(|i| d.get(i, i).clone()).collect();
    SmithForm { factors, u, v, d }
}

fn smallest_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d.get(i, j);
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` and column `t` of the block, so the
/// pivot strictly decreases while remainders are being cleared.
fn smallest_in_cross(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let cells = (t..d.rows).map(|i| (i, t)).chain((t + 1..d.cols).map(|j| (t, j)));
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in cells {
        let x = d.get(i, j);
        if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
            best = Some((i, j));
        }
    }
    best
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}

/// Finitely generated abelian group `ℤ^free_rank ⊕ ⊕ ℤ/t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

fn serialize_bigints<S: Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Cokernel of the map given by the rows of `a`: `ℤ^cols / rowspan(a)`.
    pub fn cokernel(a: &IntMatrix) -> Self {
        let snf = smith_normal_form(a);
        AbelianGroup {
            free_rank: a.cols - snf.rank(),
            torsion: snf.factors.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Exponent-sum matrix of a presentation: one row per relator.
pub fn relation_matrix(generators: &Alphabet, relators: &[Word]) -> Result<IntMatrix> {
    let rows = relators.iter().map(|r| generators.abelianize(r).map(|v| v.0)).collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_rows(generators.len(), &rows))
}

/// Homology of the presentation 2-complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexHomology {
    pub h1: AbelianGroup,
    pub h2_free_rank: usize,
}

pub fn presentation_complex_homology(p: &Presentation) -> Result<ComplexHomology> {
    let m = relation_matrix(p.generators(), p.relators())?;
    let snf = smith_normal_form(&m);
    Ok(ComplexHomology {
        h1: AbelianGroup {
            free_rank: m.cols - snf.rank(),
            torsion: snf.factors.iter().filter(|d| !d.is_one()).cloned().collect(),
        },
        h2_free_rank: m.rows - snf.rank(),
    })
}

/// Comparison of a WLOG's presentation complex with the homology of the
/// suspension of the graph plus a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuspensionCheck {
    pub components: usize,
    pub expected_h1: AbelianGroup,
    pub expected_h2_rank: usize,
    pub actual: ComplexHomology,
    pub pass: bool,
}

pub fn suspension_check(w: &WlogGraph) -> Result<SuspensionCheck> {
    let c = w.component_count();
    let expected_h2_rank = w.edges().len() + c - w.vertex_count();
    let actual = presentation_complex_homology(&w.presentation()?)?;
    let expected_h1 = AbelianGroup::free(c);
    let pass = actual.h1 == expected_h1 && actual.h2_free_rank == expected_h2_rank;
    Ok(SuspensionCheck { components: c, expected_h1, expected_h2_rank, actual, pass })
}

/// Exterior images of the relators, one row per relator.
pub fn exterior_matrix(generators: &Alphabet, relators: &[Word]) -> Result<IntMatrix> {
    let n = generators.len();
    let mut rows = Vec::with_capacity(relators.len());
    for r in relators {
        let img = generators.exterior_image(r).map_err(|e| match e {
            Error::NotInCommutatorSubgroup(w) => {
                Error::NotApplicable(format!("relator {w} is not in the commutator subgroup"))
            }
            other => other,
        })?;
        rows.push(img.coords().to_vec());
    }
    Ok(IntMatrix::from_rows(n * n.saturating_sub(1) / 2, &rows))
}

/// Rank of the span of the relators in `γ₂(F)/γ₃(F)`.
pub fn exterior_rank(generators: &Alphabet, relators: &[Word]) -> Result<usize> {
    Ok(rank(&exterior_matrix(generators, relators)?))
}

/// Integer coefficients `x` with `Σ x_i rows[i] = target`, if any exist.
pub fn integer_span_solution(dim: usize, rows: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigInt>> {
    assert_eq!(target.len(), dim, "target dimension");
    // Solve A x = target with A = rows^T (dim x k).
    let a = IntMatrix::from_rows(dim, rows).transpose();
    let snf = smith_normal_form(&a);
    let b: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
    let ub = snf.u.mul_vec(&b);
    let r = snf.rank();
    if ub[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut y = vec![BigInt::zero(); rows.len()];
    for i in 0..r {
        let (q, rem) = ub[i].div_rem(&snf.factors[i]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    Some(snf.v.mul_vec(&y))
}

/// Simplicial `H₁` of the flag 2-skeleton.
pub fn flag_h1(s: &FlagSkeleton) -> AbelianGroup {
    let pos = |v: VertexId| s.vertices.iter().position(|&x| x == v).expect("skeleton vertex");
    let mut d1 = IntMatrix::zeros(s.edges.len(), s.vertices.len());
    for (i, e) in s.edges.iter().enumerate() {
        d1.set(i, pos(e.terminus), BigInt::one());
        d1.set(i, pos(e.origin), -BigInt::one());
    }
    let mut d2 = IntMatrix::zeros(s.triangles.len(), s.edges.len());
    let epos = |o: VertexId, t: VertexId| {
        s.edges.iter().position(|e| e.origin == o && e.terminus == t).expect("skeleton edge")
    };
    for (i, t) in s.triangles.iter().enumerate() {
        let [a, b, c] = t.0;
        // ∂[a,b,c] = [b,c] - [a,c] + [a,b]
        d2.set(i, epos(b, c), BigInt::one());
        d2.set(i, epos(a, c), -BigInt::one());
        d2.set(i, epos(a, b), BigInt::one());
    }
    let r1 = rank(&d1);
    let snf2 = smith_normal_form(&d2);
    AbelianGroup {
        free_rank: s.edges.len() - r1 - snf2.rank(),
        torsion: snf2.factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

pub const DEFAULT_TIETZE_BUDGET: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pi1Status {
    Certified,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Certificate {
    pub status: Pi1Status,
    pub generators: usize,
    pub eliminated: usize,
    pub letters_rewritten: u64,
}

type Letters = Vec<(usize, i8)>;

fn free_reduce(w: Letters) -> Letters {
    let mut out: Letters = Vec::with_capacity(w.len());
    for l in w {
        if out.last().is_some_and(|&(g, e)| g == l.0 && e == -l.1) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(w: Letters) -> Letters {
    let w = free_reduce(w);
    let (mut i, mut j) = (0, w.len());
    while j >= i + 2 && w[i].0 == w[j - 1].0 && w[i].1 == -w[j - 1].1 {
        i += 1;
        j -= 1;
    }
    w[i..j].to_vec()
}

/// Tries to show `π₁` of the flag 2-skeleton is trivial.
///
/// Generators are the non-tree edges of a breadth-first spanning tree,
/// relators the triangle boundaries. A relator in which some generator
/// occurs exactly once defines that generator, which is then substituted
/// away. `budget` bounds the number of letters rewritten. The result is
/// certified only if every generator is eliminated; it is never a proof of
/// non-triviality.
pub fn pi1_trivial_certificate(g: &SimplicialGraph, budget: u64) -> Pi1Certificate {
    let n = g.vertex_count();
    let m = g.edges().len();
    let mut in_tree = vec![false; m];
    let mut uf = UnionFind::new(n);
    if n > 0 {
        let start = g.sorted_vertices()[0];
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    uf.union(u, v);
                    in_tree[g.edge_position(g.canonical(u, v)).expect("edge")] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let gen_of: Vec<Option<usize>> = {
        let mut k = 0;
        in_tree
            .iter()
            .map(|&t| {
                (!t).then(|| {
                    k += 1;
                    k - 1
                })
            })
            .collect()
    };
    let generators = gen_of.iter().flatten().count();
    if n > 1 && uf.components() != 1 {
        return Pi1Certificate { status: Pi1Status::Unknown, generators, eliminated: 0, letters_rewritten: 0 };
    }
    let letter = |o: VertexId, t: VertexId| -> Option<(usize, i8)> {
        let e = g.canonical(o, t);
        let gen = gen_of[g.edge_position(e).expect("edge")]?;
        Some((gen, if e.origin == o { 1 } else { -1 }))
    };
    let mut relators: Vec<Letters> = crate::graph::triangles(g)
        .into_iter()
        .map(|t| {
            let [a, b, c] = t.0;
            cyclic_reduce([letter(a, b), letter(b, c), letter(c, a)].into_iter().flatten().collect())
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut alive = vec![true; generators];
    let mut eliminated = 0;
    let mut spent = 0u64;
    loop {
        relators.retain(|r| !r.is_empty());
        let mut order: Vec<usize> = (0..relators.len()).collect();
        order.sort_by_key(|&i| relators[i].len());
        let found = order.into_iter().find_map(|i| {
            let r = &relators[i];
            let mut counts = std::collections::BTreeMap::new();
            for &(gen, _) in r {
                *counts.entry(gen).or_insert(0usize) += 1;
            }
            counts.into_iter().find(|&(_, c)| c == 1).map(|(gen, _)| (i, gen))
        });
        let Some((i, gen)) = found else { break };
        let r = relators.swap_remove(i);
        let p = r.iter().position(|&(x, _)| x == gen).expect("generator occurs");
        let eps = r[p].1;
        // rotate so the generator leads: x^eps * rest = 1
        let rest: Letters = r[p + 1..].iter().chain(r[..p].iter()).copied().collect();
        let value: Letters = if eps == 1 { rest.iter().rev().map(|&(x, e)| (x, -e)).collect() } else { rest };
        let inverse: Letters = value.iter().rev().map(|&(x, e)| (x, -e)).collect();
        for rel in relators.iter_mut() {
            if !rel.iter().any(|&(x, _)| x == gen) {
                continue;
            }
            let mut out = Letters::with_capacity(rel.len());
            for &(x, e) in rel.iter() {
                if x == gen {
                    let img = if e == 1 { &value } else { &inverse };
                    spent += img.len() as u64;
                    out.extend_from_slice(img);
                } else {
                    out.push((x, e));
                }
            }
            *rel = cyclic_reduce(out);
        }
        alive[gen] = false;
        eliminated += 1;
        if spent > budget {
            break;
        }
    }
    let status = if alive.iter().any(|&a| a) { Pi1Status::Unknown } else { Pi1Status::Certified };
    Pi1Certificate { status, generators, eliminated, letters_rewritten: spent }
}

/// Convert a small `BigInt` to `i64`, for reporting.
pub(crate) fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("coefficient fits in i64")
}
