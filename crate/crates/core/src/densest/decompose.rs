use serde::{Deserialize, Serialize};

use crate::maxflow::Reachability;
use crate::network::VertexId;
use crate::preprocess::Rtfn;
use crate::query::Query;
use crate::union_find::UnionFind;

/// One component of the source-sink reachability graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WccPair {
    pub sources: Vec<VertexId>,
    pub sinks: Vec<VertexId>,
}

impl WccPair {
    pub fn size(&self) -> usize {
        self.sources.len() + self.sinks.len()
    }
}

/// Components with at least one reachable source-sink pair, plus the
/// terminals that reach (or are reached by) no counterpart.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WccPartition {
    pub pairs: Vec<WccPair>,
    pub isolated_sources: Vec<VertexId>,
    pub isolated_sinks: Vec<VertexId>,
}

/// Splits the query's terminals by weak connectivity of the bipartite graph
/// with an edge `(s, t)` whenever the earliest copy of `s` reaches the
/// latest copy of `t`. Flows of different components never share an edge, so
/// their values add up.
///
/// Components are ordered by their smallest source id.
pub fn decompose(rtfn: &Rtfn, q: &Query) -> WccPartition {
    let (ns, nt) = (q.sources.len(), q.sinks.len());
    let mut uf = UnionFind::new(ns + nt);
    let mut linked = vec![false; ns + nt];
    let mut reach = Reachability::new(rtfn.network());
    for (i, &s) in q.sources.iter().enumerate() {
        let Some(sc) = rtfn.earliest_copy(s) else { continue };
        for (j, &t) in q.sinks.iter().enumerate() {
            let Some(tc) = rtfn.latest_copy(t) else { continue };
            if reach.reach(sc, tc) {
                uf.union(i, ns + j);
                linked[i] = true;
                linked[ns + j] = true;
            }
        }
    }
    let mut partition = WccPartition::default();
    let mut slot_of_root = vec![usize::MAX; ns + nt];
    for (i, &s) in q.sources.iter().enumerate() {
        if !linked[i] {
            partition.isolated_sources.push(s);
            continue;
        }
        let root = uf.find(i);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = partition.pairs.len();
            partition.pairs.push(WccPair { sources: Vec::new(), sinks: Vec::new() });
        }
        partition.pairs[slot_of_root[root]].sources.push(s);
    }
    for (j, &t) in q.sinks.iter().enumerate() {
        if !linked[ns + j] {
            partition.isolated_sinks.push(t);
            continue;
        }
        let root = uf.find(ns + j);
        partition.pairs[slot_of_root[root]].sinks.push(t);
    }
    partition
}
