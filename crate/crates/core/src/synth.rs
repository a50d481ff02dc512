//! Seeded random networks and queries for tests and benchmarks.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::network::{TemporalFlowNetwork, VertexId};
use crate::query::Query;

#[derive(Clone, Copy, Debug)]
pub struct RandomTfnConfig {
    pub vertices: usize,
    pub edges: usize,
    pub max_capacity: u64,
    pub max_timestamp: u64,
    /// Give every edge a different timestamp (a permutation of `1..=edges`),
    /// ignoring `max_timestamp`.
    pub distinct_timestamps: bool,
}

/// A simple random temporal network: no self-loops, at most one edge per
/// ordered pair. Asks for at most `vertices * (vertices - 1)` edges.
pub fn random_tfn<R: Rng>(rng: &mut R, cfg: RandomTfnConfig) -> TemporalFlowNetwork {
    let n = cfg.vertices;
    let target = cfg.edges.min(n * n.saturating_sub(1));
    let mut pairs = HashSet::new();
    let mut list = Vec::with_capacity(target);
    while list.len() < target {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && pairs.insert((u, v)) {
            list.push((u, v));
        }
    }
    let mut stamps: Vec<u64> = (1..=target as u64).collect();
    stamps.shuffle(rng);
    let edges: Vec<(usize, usize, u64, u64)> = list
        .into_iter()
        .enumerate()
        .map(|(i, (u, v))| {
            let c = rng.gen_range(1..=cfg.max_capacity.max(1));
            let t = if cfg.distinct_timestamps { stamps[i] } else { rng.gen_range(1..=cfg.max_timestamp.max(1)) };
            (u, v, c, t)
        })
        .collect();
    TemporalFlowNetwork::from_edges(n, &edges).expect("generated edges are valid")
}

/// Random query with `sources` terminals of out-degree at least 1 and
/// `sinks` terminals of in-degree at least 1.
pub fn random_query<R: Rng>(rng: &mut R, tfn: &TemporalFlowNetwork, sources: usize, sinks: usize, k: usize) -> Result<Query> {
    let mut out_ok: Vec<VertexId> = tfn.vertices().filter(|&v| !tfn.out_edges(v).is_empty()).collect();
    out_ok.shuffle(rng);
    if out_ok.len() < sources {
        return Err(Error::Argument(format!("only {} vertices can act as sources, {sources} requested", out_ok.len())));
    }
    let chosen: Vec<VertexId> = out_ok[..sources].to_vec();
    let mut in_ok: Vec<VertexId> = tfn
        .vertices()
        .filter(|v| !tfn.in_edges(*v).is_empty() && !chosen.contains(v))
        .collect();
    in_ok.shuffle(rng);
    if in_ok.len() < sinks {
        return Err(Error::Argument(format!("only {} vertices can act as sinks, {sinks} requested", in_ok.len())));
    }
    Query::new(chosen, in_ok[..sinks].to_vec(), k)
}

#[derive(Clone, Copy, Debug)]
pub struct LayeredConfig {
    pub layers: usize,
    pub width: usize,
    /// Out-edges per account towards the next layer.
    pub fanout: usize,
    /// Number of planted fan-in/fan-out laundering motifs.
    pub motifs: usize,
    pub max_capacity: u64,
}

/// Layered transaction network: accounts in `layers` tiers, each paying a
/// few accounts of the next tier, with timestamps growing by tier plus
/// jitter so some paths are temporally dead. Planted motifs route several
/// first-tier accounts through one mule into several last-tier accounts with
/// large, time-ordered transfers.
pub fn layered_network<R: Rng>(rng: &mut R, cfg: LayeredConfig) -> TemporalFlowNetwork {
    let layers = cfg.layers.max(2);
    let w = cfg.width.max(1);
    let id = |layer: usize, i: usize| layer * w + i;
    let mut n = layers * w;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let span = 10u64;
    for layer in 0..layers - 1 {
        for i in 0..w {
            for _ in 0..cfg.fanout {
                let j = rng.gen_range(0..w);
                if seen.insert((id(layer, i), id(layer + 1, j))) {
                    let t = layer as u64 * span + rng.gen_range(1..=span + span / 2);
                    edges.push((id(layer, i), id(layer + 1, j), rng.gen_range(1..=cfg.max_capacity.max(1)), t));
                }
            }
        }
    }
    let end = layers as u64 * span + span;
    for _ in 0..cfg.motifs {
        let mule = n;
        n += 1;
        let big = cfg.max_capacity.max(1) * 3;
        for _ in 0..3 {
            let s = id(0, rng.gen_range(0..w));
            if seen.insert((s, mule)) {
                edges.push((s, mule, rng.gen_range(big / 2..=big), rng.gen_range(1..=span)));
            }
        }
        for _ in 0..3 {
            let t = id(layers - 1, rng.gen_range(0..w));
            if seen.insert((mule, t)) {
                edges.push((mule, t, rng.gen_range(big / 2..=big), rng.gen_range(span + 1..=end)));
            }
        }
    }
    TemporalFlowNetwork::from_edges(n, &edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_tfn_is_simple_and_seeded() {
        let cfg = RandomTfnConfig { vertices: 8, edges: 20, max_capacity: 5, max_timestamp: 6, distinct_timestamps: false };
        let a = random_tfn(&mut ChaCha8Rng::seed_from_u64(3), cfg);
        let b = random_tfn(&mut ChaCha8Rng::seed_from_u64(3), cfg);
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.num_vertices(), 8);
        assert_eq!(a.num_edges(), 20);
    }

    #[test]
    fn query_respects_degrees() {
        let cfg = RandomTfnConfig { vertices: 10, edges: 25, max_capacity: 5, max_timestamp: 6, distinct_timestamps: true };
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let tfn = random_tfn(&mut rng, cfg);
        let q = random_query(&mut rng, &tfn, 3, 3, 2).unwrap();
        assert!(q.sources.iter().all(|&s| !tfn.out_edges(s).is_empty()));
        assert!(q.sinks.iter().all(|&t| !tfn.in_edges(t).is_empty()));
        assert!(random_query(&mut rng, &tfn, 11, 1, 1).is_err());
    }

    #[test]
    fn layered_has_motif_mules() {
        let cfg = LayeredConfig { layers: 4, width: 5, fanout: 2, motifs: 2, max_capacity: 10 };
        let tfn = layered_network(&mut ChaCha8Rng::seed_from_u64(1), cfg);
        assert_eq!(tfn.num_vertices(), 22);
        assert!(tfn.num_edges() > 20);
    }
}
