#![allow(dead_code)]

use proptest::prelude::*;
use wlogkit_core::graph::SimplicialGraph;

pub fn graph_from_mask(n: usize, mask: &[bool]) -> SimplicialGraph {
    let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask[k] {
                edges.push((names[i].clone(), names[j].clone()));
            }
            k += 1;
        }
    }
    SimplicialGraph::new(&names, &edges).unwrap()
}

/// Random graphs on `lo..=hi` vertices.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = SimplicialGraph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.6), n * (n - 1) / 2).prop_map(move |m| graph_from_mask(n, &m))
    })
}

pub fn connected_graphs(lo: usize, hi: usize) -> impl Strategy<Value = SimplicialGraph> {
    graphs(lo, hi).prop_filter("connected", |g| g.is_connected())
}
