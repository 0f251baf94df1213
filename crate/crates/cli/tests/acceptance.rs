//! Acceptance suite. Each criterion prints one PASS or FAIL line; run with
//! `cargo test -p wlogkit --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use wlogkit::{cmd_artin, parse_document, ArtinOptions, Format};
use wlogkit_core::artin::{artin_invariants, ArtinTitsSystem};
use wlogkit_core::bb::{
    bb_invariants, bb_pipeline, edge_word, flag_gate, ps_presentation, tree_generators, EmissionMode, GateStatus,
};
use wlogkit_core::graph::{favourable_spanning_tree, Edge, SimplicialGraph, SpanningTree, TreeSearch};
use wlogkit_core::homology::{
    exterior_rank, presentation_complex_homology, smith_normal_form, AbelianGroup, IntMatrix, DEFAULT_TIETZE_BUDGET,
};
use wlogkit_core::wlog::{MultiplierGenerator, WlogGraph};
use wlogkit_core::word::{Alphabet, Letter, Symbol, Word};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

fn graph(n: usize, edges: &[(usize, usize)]) -> SimplicialGraph {
    let ns = names(n);
    let es: Vec<(String, String)> = edges.iter().map(|&(i, j)| (ns[i].clone(), ns[j].clone())).collect();
    SimplicialGraph::new(&ns, &es).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Components of a WLOG's underlying graph, by union-find on its edges.
fn wlog_components(wl: &WlogGraph) -> usize {
    let n = wl.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for e in wl.edges() {
        let (a, b) = (find(&mut parent, e.origin), find(&mut parent, e.terminus));
        parent[a] = b;
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

fn same_up_to_inversion(got: &[Word], want: &[Word]) -> bool {
    got.len() == want.len() && want.iter().all(|x| got.iter().any(|g| g.same_relator(x)))
}

fn criterion_1(corpus: &mut Vec<WlogGraph>) -> Outcome {
    let g = SimplicialGraph::new(
        &names(6),
        &[
            ("a1", "a2"),
            ("a2", "a5"),
            ("a2", "a4"),
            ("a2", "a3"),
            ("a4", "a6"),
            ("a1", "a5"),
            ("a5", "a4"),
            ("a5", "a6"),
            ("a3", "a4"),
        ]
        .map(|(u, v)| (u.to_string(), v.to_string())),
    )
    .unwrap();
    let tree =
        SpanningTree::from_names(&g, &[("a1", "a2"), ("a2", "a5"), ("a2", "a4"), ("a2", "a3"), ("a4", "a6")]).unwrap();
    let gate = flag_gate(&g, false, DEFAULT_TIETZE_BUDGET);
    ensure!(gate.status == GateStatus::Certified, "gate is {}", gate.status.as_str());

    let ps = ps_presentation(&g, &tree, &gate).map_err(|e| e.to_string())?;
    let expected = ["v1*v2*v1^-1*v2^-1", "v2*v3*v2^-1*v3^-1", "v3*v4*v3^-1*v4^-1", "v5*v2^-1*v3*v5^-1*v3^-1*v2"].map(w);
    ensure!(same_up_to_inversion(ps.relators(), &expected), "PS relators {:?}", ps.relators());

    let report = bb_pipeline(&g, &gate, &tree, EmissionMode::Pruned).map_err(|e| e.to_string())?;
    let wl = &report.wlog;
    ensure!(wl.vertex_count() == 5 && wl.loop_count() == 4 && wl.edges().len() == 4, "WLOG shape");
    let labels: BTreeSet<String> = wl.edges().iter().map(|e| e.label.to_string()).collect();
    let want: BTreeSet<String> = ["v2", "v3", "v4", "v2^-1*v3"].map(String::from).into();
    ensure!(labels == want, "loop labels {labels:?}");
    ensure!(report.h2_rank == 4, "H2 rank {}", report.h2_rank);
    ensure!(
        report.multiplier.oracle.exterior.rank() == Some(4),
        "exterior oracle {:?}",
        report.multiplier.oracle.exterior
    );
    let basis = ["v1*v2*v1^-1*v2^-1", "v2*v3*v2^-1*v3^-1", "v3*v4*v3^-1*v4^-1", "v5*v2^-1*v3*v5^-1*v3^-1*v2"].map(w);
    let gens: Vec<Word> = report.multiplier.h2_generators.iter().map(|g| g.relator.clone()).collect();
    ensure!(same_up_to_inversion(&gens, &basis), "H2 generators {gens:?}");
    let comms: Vec<Word> = report.multiplier.h2_generators.iter().map(|g| g.commutator_word.clone()).collect();
    let comm_basis =
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v5", "v2^-1*v3")].map(|(a, b)| Word::commutator(&w(a), &w(b)));
    ensure!(same_up_to_inversion(&comms, &comm_basis), "commutators {comms:?}");
    ensure!(report.b0_rank == 0 && report.multiplier.b0_generators.is_empty(), "B0 rank {}", report.b0_rank);
    ensure!(report.all_agree(), "checks {:?}", report.checks);
    corpus.push(report.wlog.clone());
    Ok("H2 = Z^4, B0 trivial, WLOG and basis match".into())
}

fn criterion_2(corpus: &mut Vec<WlogGraph>) -> Outcome {
    let s = ArtinTitsSystem::new(&["a1", "a2", "a3"], &[("a1", "a2", 5), ("a1", "a3", 3), ("a2", "a3", 7)]).unwrap();
    let r = artin_invariants(&s).map_err(|e| e.to_string())?;
    let edges: Vec<(String, String, String)> = r
        .wlog
        .edges()
        .iter()
        .map(|e| (r.wlog.name(e.origin).to_string(), r.wlog.name(e.terminus).to_string(), e.label.to_string()))
        .collect();
    let want = [("a1", "a2", "a2*a1*a2*a1"), ("a1", "a3", "a3*a1"), ("a2", "a3", "a3*a2*a3*a2*a3*a2")]
        .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()));
    ensure!(edges == want, "WLOG edges {edges:?}");
    ensure!(r.h2_rank == 1 && r.b0_rank == 1, "ranks ({}, {})", r.h2_rank, r.b0_rank);
    let b0: &[MultiplierGenerator] = &r.multiplier.b0_generators;
    ensure!(b0.len() == 1, "B0 generators {}", b0.len());
    let (o, t) = (r.wlog.edges()[b0[0].edge].origin, r.wlog.edges()[b0[0].edge].terminus);
    ensure!((r.wlog.name(o).as_str(), r.wlog.name(t).as_str()) == ("a1", "a3"), "B0 generator not on a1-a3");
    // a1-a3 Artin relator a1 a3 a1 = a3 a1 a3, conjugated to the base a1 (trivially)
    let relator = w("a1*a3*a1*a3^-1*a1^-1*a3^-1");
    ensure!(b0[0].relator.same_relator(&relator), "B0 relator {}", b0[0].relator);
    let homology = presentation_complex_homology(&r.presentation).map_err(|e| e.to_string())?;
    ensure!(homology.h1 == AbelianGroup::free(1) && homology.h2_free_rank == 1, "complex homology {homology:?}");
    ensure!(r.all_agree(), "checks {:?}", r.checks);
    corpus.push(r.wlog.clone());
    Ok("H2 rank 1, B0 rank 1, generator from the a1-a3 relator".into())
}

fn criterion_3(corpus: &mut Vec<WlogGraph>) -> Outcome {
    for n in 3..=6 {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let g = graph(n, &edges);
        let r = bb_invariants(&g).map_err(|e| e.to_string())?;
        let p = &r.substituted_presentation;
        let ab = presentation_complex_homology(p).map_err(|e| e.to_string())?.h1;
        ensure!(ab == AbelianGroup::free(n - 1), "K{n}: abelianization {ab}");
        let loops = r.wlog.loop_count();
        ensure!(loops == binomial(n - 1, 2), "K{n}: {loops} loops");
        let ext = exterior_rank(p.generators(), p.relators()).map_err(|e| e.to_string())?;
        ensure!(ext == loops, "K{n}: exterior rank {ext} vs {loops} loops");
        ensure!(r.b0_rank == 0, "K{n}: B0 rank {}", r.b0_rank);
        ensure!(r.all_agree(), "K{n}: checks {:?}", r.checks);
        corpus.push(r.wlog.clone());
    }
    Ok("K3..K6: Z^(n-1), C(n-1,2) loops, exterior rank equal, B0 trivial".into())
}

fn criterion_4(rng: &mut ChaCha8Rng, corpus: &mut Vec<WlogGraph>) -> Outcome {
    let mut count = 0;
    for n in 3..=10 {
        for _ in 0..10 {
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
            let g = graph(n, &edges);
            let r = bb_invariants(&g).map_err(|e| e.to_string())?;
            ensure!(r.wlog.loop_count() == 0 && r.wlog.edges().is_empty(), "tree {edges:?}: edges in WLOG");
            ensure!(r.h2_rank == 0 && r.b0_rank == 0, "tree {edges:?}: ranks");
            ensure!(r.presentation.relators().is_empty(), "tree {edges:?}: relators");
            ensure!(r.all_agree(), "tree {edges:?}: checks {:?}", r.checks);
            corpus.push(r.wlog.clone());
            count += 1;
        }
    }
    Ok(format!("{count} random trees: no loops, no relators, H2 = B0 = 0"))
}

fn criterion_5(rng: &mut ChaCha8Rng, corpus: &mut Vec<WlogGraph>) -> Outcome {
    let systems = 150;
    for _ in 0..systems {
        let n = rng.gen_range(1..=6);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((i, j, 2 * rng.gen_range(1..=4u64)));
                }
            }
        }
        let ns = names(n);
        let labelled: Vec<(String, String, u64)> =
            edges.iter().map(|&(i, j, m)| (ns[i].clone(), ns[j].clone(), m)).collect();
        let s = ArtinTitsSystem::new(&ns, &labelled).unwrap();
        let r = artin_invariants(&s).map_err(|e| e.to_string())?;
        ensure!(r.h2_rank == edges.len(), "{labelled:?}: H2 rank {}", r.h2_rank);
        ensure!(r.b0_rank == 0, "{labelled:?}: B0 rank {}", r.b0_rank);
        ensure!(r.multiplier.oracle.suspension.pass, "{labelled:?}: suspension check");
        ensure!(r.all_agree(), "{labelled:?}: checks {:?}", r.checks);
        corpus.push(r.wlog.clone());
    }
    Ok(format!("{systems} even systems: H2 = |E|, B0 = 0, suspension passes"))
}

fn criterion_6(corpus: &[WlogGraph]) -> Outcome {
    for wl in corpus {
        let c = wlog_components(wl);
        let h =
            presentation_complex_homology(&wl.presentation().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(h.h1.torsion.is_empty(), "torsion in {h:?}");
        ensure!(h.h1 == AbelianGroup::free(c), "H1 {} vs Z^{c}", h.h1);
        let expected = wl.edges().len() + c - wl.vertex_count();
        ensure!(h.h2_free_rank == expected, "H2 rank {} vs {expected}", h.h2_free_rank);
    }
    Ok(format!("{} WLOGs: (Z^c, |E|-|V|+c), torsion-free", corpus.len()))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (r, c) = (rng.gen_range(1..=40), rng.gen_range(1..=40));
    let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMatrix::from_rows(c, &rows)
}

fn snf_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for k in 0..500 {
        let a = random_matrix(rng);
        let s = smith_normal_form(&a);
        ensure!(s.u.mul(&a).mul(&s.v) == s.d, "matrix {k}: U A V != D");
        ensure!(s.u.determinant().abs().is_one(), "matrix {k}: U not unimodular");
        ensure!(s.v.determinant().abs().is_one(), "matrix {k}: V not unimodular");
        ensure!(s.factors.iter().all(|f| f.is_positive()), "matrix {k}: nonpositive factor");
        ensure!(s.factors.windows(2).all(|p| p[1].is_multiple_of(&p[0])), "matrix {k}: divisibility");
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let want = if i == j && i < s.factors.len() { s.factors[i].clone() } else { Zero::zero() };
                ensure!(*s.d.get(i, j) == want, "matrix {k}: D[{i}][{j}]");
            }
        }
    }
    Ok(())
}

const LETTERS: [&str; 5] = ["x1", "x2", "x3", "x4", "x5"];

fn random_word(rng: &mut ChaCha8Rng, max: usize) -> Word {
    let len = rng.gen_range(0..=max);
    Word::from_letters(
        (0..len).map(|_| Letter::new(Symbol::new(LETTERS[rng.gen_range(0..5)]), if rng.gen() { 1 } else { -1 })),
    )
}

fn random_commutator_product(rng: &mut ChaCha8Rng) -> Word {
    let k = rng.gen_range(1..=3);
    (0..k).fold(Word::empty(), |acc, _| {
        let (u, v) = (random_word(rng, 6), random_word(rng, 6));
        acc.concat(&Word::commutator(&u, &v))
    })
}

/// Pair (i, j), i < j: half the signed count of ordered letter pairs.
fn brute_exterior(a: &Alphabet, word: &Word) -> Vec<i64> {
    let ls = word.letters();
    let idx: Vec<usize> = ls.iter().map(|l| a.index_of(&l.symbol).unwrap()).collect();
    let mut out = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let mut t = 0i64;
            for p in 0..ls.len() {
                for q in p + 1..ls.len() {
                    let e = ls[p].exp as i64 * ls[q].exp as i64;
                    if (idx[p], idx[q]) == (i, j) {
                        t += e;
                    } else if (idx[p], idx[q]) == (j, i) {
                        t -= e;
                    }
                }
            }
            out.push(t / 2);
        }
    }
    out
}

fn exterior_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let a = Alphabet::new(LETTERS).unwrap();
    let img = |x: &Word| a.exterior_image(x).map(|i| i.coords().to_vec()).map_err(|e| e.to_string());
    for k in 0..500 {
        let (u, v) = (random_commutator_product(rng), random_commutator_product(rng));
        let g = random_word(rng, 10);
        let (iu, iv) = (img(&u)?, img(&v)?);
        ensure!(iu == brute_exterior(&a, &u), "word {k}: image of {u}");
        let sum: Vec<i64> = iu.iter().zip(&iv).map(|(x, y)| x + y).collect();
        ensure!(img(&u.concat(&v))? == sum, "word {k}: additivity");
        ensure!(img(&u.conjugate_by(&g))? == iu, "word {k}: conjugation invariance");
        let (x, y, z) = (random_word(rng, 6), random_word(rng, 6), random_word(rng, 6));
        let c3 = Word::commutator(&Word::commutator(&x, &y), &z);
        ensure!(img(&c3)?.iter().all(|&c| c == 0), "word {k}: weight three commutator {c3}");
    }
    Ok(())
}

fn random_connected_graph(rng: &mut ChaCha8Rng) -> SimplicialGraph {
    loop {
        let n = rng.gen_range(2..=8);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(0.5)).collect();
        let g = graph(n, &edges);
        if g.is_connected() {
            return g;
        }
    }
}

/// Kruskal on a shuffled edge list.
fn random_spanning_tree(rng: &mut ChaCha8Rng, g: &SimplicialGraph) -> SpanningTree {
    let mut es: Vec<Edge> = g.edges().to_vec();
    es.shuffle(rng);
    let mut comp: Vec<usize> = (0..g.vertex_count()).collect();
    let mut chosen = Vec::new();
    for e in es {
        let (a, b) = (comp[e.origin], comp[e.terminus]);
        if a != b {
            for c in comp.iter_mut() {
                if *c == a {
                    *c = b;
                }
            }
            chosen.push(e);
        }
    }
    SpanningTree::new(g, chosen).unwrap()
}

fn telescoping_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for k in 0..200 {
        let g = random_connected_graph(rng);
        let tree = random_spanning_tree(rng, &g);
        let e = g.edges()[rng.gen_range(0..g.edges().len())];
        let oriented = if rng.gen() { e.into() } else { wlogkit_core::graph::OrientedEdge::from(e).reversed() };
        let gens = Alphabet::new(tree_generators(&tree)).unwrap();
        let word = edge_word(&g, &tree, oriented).map_err(|e| e.to_string())?;
        let ab = gens.abelianize(&word).map_err(|e| e.to_string())?;
        let mut image = vec![0i64; g.vertex_count()];
        for (i, te) in tree.edges().iter().enumerate() {
            image[te.origin] += ab.0[i];
            image[te.terminus] -= ab.0[i];
        }
        let mut expected = vec![0i64; g.vertex_count()];
        expected[oriented.origin] += 1;
        expected[oriented.terminus] -= 1;
        ensure!(image == expected, "triple {k}: boundary of edge word");
    }
    Ok(())
}

fn criterion_7(rng: &mut ChaCha8Rng) -> Outcome {
    snf_suite(rng)?;
    exterior_suite(rng)?;
    telescoping_suite(rng)?;
    Ok("500 SNF matrices, 500 exterior words, 200 telescoping triples".into())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, as edge lists.
fn connected_classes(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        if !graph(n, &edges).is_connected() {
            continue;
        }
        let canon =
            perms.iter().map(|p| edges.iter().fold(0u32, |m, &(i, j)| m | 1 << index[p[i]][p[j]])).min().unwrap();
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

fn criterion_8(corpus: &mut Vec<WlogGraph>) -> Outcome {
    let (mut classes, mut certified) = (0, 0);
    for n in 1..=6 {
        for edges in connected_classes(n) {
            classes += 1;
            let g = graph(n, &edges);
            let gate = flag_gate(&g, false, DEFAULT_TIETZE_BUDGET);
            if gate.status != GateStatus::Certified {
                continue;
            }
            certified += 1;
            let (tree, _) = favourable_spanning_tree(&g, TreeSearch::Exact, 1_000_000).map_err(|e| e.to_string())?;
            let pruned = bb_pipeline(&g, &gate, &tree, EmissionMode::Pruned).map_err(|e| e.to_string())?;
            let all = bb_pipeline(&g, &gate, &tree, EmissionMode::EmitAll).map_err(|e| e.to_string())?;
            let p = &all.substituted_presentation;
            let ext = exterior_rank(p.generators(), p.relators()).map_err(|e| e.to_string())?;
            ensure!(pruned.wlog.loop_count() == ext, "{edges:?}: {} loops vs rank {ext}", pruned.wlog.loop_count());
            let ab = |r: &wlogkit_core::bb::BbReport| {
                presentation_complex_homology(&r.substituted_presentation).map(|h| h.h1).map_err(|e| e.to_string())
            };
            ensure!(ab(&pruned)? == ab(&all)?, "{edges:?}: abelianizations differ");
            corpus.push(pruned.wlog.clone());
            corpus.push(all.wlog.clone());
        }
    }
    ensure!(classes == 143, "{classes} isomorphism classes, expected 143");
    Ok(format!("{certified} of {classes} connected graphs certified; pruned loops = emit-all exterior rank"))
}

fn run_artin(doc: &str) -> Result<(Value, i32), String> {
    let opts = ArtinOptions { format: Format::Json, export_presentation: None };
    let out = cmd_artin(parse_document(doc).map_err(|e| e.to_string())?, &opts).map_err(|e| e.to_string())?;
    Ok((serde_json::from_str(&out.output).map_err(|e| e.to_string())?, out.exit_code))
}

fn expected_exit(v: &Value) -> i32 {
    let disagree = v["report"]["checks"].as_array().unwrap().iter().any(|c| c["agree"] != true);
    if disagree {
        4
    } else {
        0
    }
}

fn criterion_9(corpus: &mut Vec<WlogGraph>) -> Outcome {
    let (v, code) = run_artin(r#"{"kind":"artin","vertices":["a","b"],"edges":[{"u":"a","v":"b","m":3}]}"#)?;
    ensure!(v["report"]["h2_rank"] == 0 && v["report"]["b0_rank"] == 0, "single m=3 edge ranks");
    ensure!(code == 0, "single m=3 edge exit {code}");

    let braid = r#"{"kind":"artin","vertices":["a1","a2","a3"],
        "edges":[{"u":"a1","v":"a2","m":3},{"u":"a2","v":"a3","m":3},{"u":"a1","v":"a3","m":2}]}"#;
    let (braid_v, braid_code) = run_artin(braid)?;
    let r = &braid_v["report"];
    ensure!(r["h2_rank"] == 1, "braid-like H2 claim {}", r["h2_rank"]);
    let oracle = &r["multiplier"]["oracle"];
    ensure!(oracle["suspension"].is_object() && oracle["exterior"]["status"].is_string(), "no oracle record");
    ensure!(r["checks"].as_array().is_some_and(|c| !c.is_empty()), "no checks");
    ensure!(braid_code == expected_exit(&braid_v), "braid-like exit {braid_code}");

    // a divergent case must surface as exit 4
    let two_odd = r#"{"kind":"artin","vertices":["a","b","c","d"],
        "edges":[{"u":"a","v":"b","m":3},{"u":"c","v":"d","m":5}]}"#;
    let (v, code) = run_artin(two_odd)?;
    ensure!(expected_exit(&v) == 4 && code == 4, "divergent case exit {code}");

    let s = ArtinTitsSystem::new(&["a1", "a2", "a3"], &[("a1", "a2", 3), ("a2", "a3", 3), ("a1", "a3", 2)]).unwrap();
    corpus.push(artin_invariants(&s).map_err(|e| e.to_string())?.wlog);
    Ok(format!(
        "m=3 edge gives (0, 0); braid-like claim 1 with exterior oracle {} and exit {braid_code}; divergent system exits 4",
        oracle["exterior"]["status"].as_str().unwrap_or("?"),
    ))
}

#[test]
fn acceptance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut corpus = Vec::new();
    let mut results: Vec<(u32, Outcome)> = vec![
        (1, criterion_1(&mut corpus)),
        (2, criterion_2(&mut corpus)),
        (3, criterion_3(&mut corpus)),
        (4, criterion_4(&mut rng, &mut corpus)),
        (5, criterion_5(&mut rng, &mut corpus)),
        (8, criterion_8(&mut corpus)),
        (9, criterion_9(&mut corpus)),
        (7, criterion_7(&mut rng)),
    ];
    results.push((6, criterion_6(&corpus)));
    results.sort_by_key(|r| r.0);
    let mut failed = Vec::new();
    for (k, r) in &results {
        match r {
            Ok(msg) => println!("criterion {k}: PASS ({msg})"),
            Err(msg) => {
                println!("criterion {k}: FAIL ({msg})");
                failed.push(*k);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
