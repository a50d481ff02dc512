#![allow(dead_code)]

use densest_flow::densest::DensestFlowArray;
use densest_flow::network::{TemporalFlowNetwork, VertexId};
use densest_flow::preprocess::Rtfn;
use densest_flow::query::Query;
use densest_flow::synth::{random_query, random_tfn, RandomTfnConfig};
use densest_flow::{maxflow, pipeline::FlowEvaluator};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random network with up to `max_edges` edges over 4..=9 vertices.
pub fn small_tfn(rng: &mut ChaCha8Rng, max_edges: usize, distinct: bool) -> TemporalFlowNetwork {
    let vertices = rng.gen_range(4..=9);
    let edges = rng.gen_range(1..=max_edges);
    random_tfn(rng, RandomTfnConfig { vertices, edges, max_capacity: 9, max_timestamp: 6, distinct_timestamps: distinct })
}

/// Random network and query with `|S| + |T| <= max_terminals`.
pub fn instance(rng: &mut ChaCha8Rng, max_terminals: usize) -> (TemporalFlowNetwork, Query) {
    loop {
        let vertices = rng.gen_range(8..=14);
        let edges = rng.gen_range(12..=30);
        let tfn = random_tfn(rng, RandomTfnConfig { vertices, edges, max_capacity: 9, max_timestamp: 8, distinct_timestamps: false });
        let n = rng.gen_range(2..=max_terminals);
        let ns = rng.gen_range(1..n);
        let k = rng.gen_range(1..=n);
        if let Ok(q) = random_query(rng, &tfn, ns, n - ns, k) {
            return (tfn, q);
        }
    }
}

/// Flow from the earliest copy of `s` to the latest copy of `t`; zero when
/// either has no copy.
pub fn pair_flow(rtfn: &Rtfn, s: VertexId, t: VertexId) -> u64 {
    match (rtfn.earliest_copy(s), rtfn.latest_copy(t)) {
        (Some(a), Some(b)) => maxflow::max_flow(rtfn.network(), a, b).unwrap().value,
        _ => 0,
    }
}

/// Peeling flow of every terminal of `(s, t)`.
pub fn all_pf(eval: &FlowEvaluator<'_>, s: &[VertexId], t: &[VertexId]) -> Vec<(VertexId, u64)> {
    s.iter()
        .chain(t)
        .map(|&u| (u, densest_flow::peeling::peeling_flow(eval, s, t, u).unwrap()))
        .collect()
}

/// Max-plus convolution of three arrays by direct triple loop.
pub fn reference_merge3(a: &[u64], b: &[u64], c: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() + c.len() - 2];
    let mut seen = vec![false; out.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            for (k, z) in c.iter().enumerate() {
                let v = x + y + z;
                if !seen[i + j + k] || v > out[i + j + k] {
                    out[i + j + k] = v;
                    seen[i + j + k] = true;
                }
            }
        }
    }
    out
}

pub fn plain_values(a: &DensestFlowArray) -> Vec<u64> {
    a.values().into_iter().map(|v| v.expect("complete array")).collect()
}
