use crate::error::{Error, Result};
use crate::network::{TemporalFlowNetwork, VertexId};

/// Greedy temporal augmenting paths without flow reversal.
///
/// Repeatedly searches depth-first (edges in id order) for a path whose
/// timestamps never decrease and whose edges all have residual capacity,
/// then saturates its bottleneck. Earlier routing decisions are never
/// undone, so the result is a feasible temporal flow value that can fall
/// short of the maximum.
pub fn naive_temporal_max_flow(tfn: &TemporalFlowNetwork, s: VertexId, t: VertexId) -> Result<u64> {
    let n = tfn.num_vertices();
    if s.index() >= n || t.index() >= n {
        return Err(Error::Argument(format!("terminal out of range for {n} vertices")));
    }
    if s == t {
        return Err(Error::Argument("source and sink coincide".into()));
    }
    let mut residual: Vec<u64> = tfn.edges().iter().map(|e| e.capacity).collect();
    let mut total: u64 = 0;
    while let Some(path) = find_path(tfn, &residual, s, t) {
        let bottleneck = path.iter().map(|&e| residual[e]).min().expect("non-empty path");
        for &e in &path {
            residual[e] -= bottleneck;
        }
        total = total.checked_add(bottleneck).ok_or(Error::FlowOverflow)?;
    }
    Ok(total)
}

fn find_path(tfn: &TemporalFlowNetwork, residual: &[u64], s: VertexId, t: VertexId) -> Option<Vec<usize>> {
    // `best[v]` is the earliest arrival time already explored at `v`; later
    // arrivals can reach nothing new.
    let mut best = vec![u64::MAX; tfn.num_vertices()];
    best[s.index()] = 0;
    let mut path: Vec<usize> = Vec::new();
    let mut cursor: Vec<usize> = vec![0];
    loop {
        let depth = cursor.len() - 1;
        let (v, time) = match path.last() {
            Some(&e) => (tfn.edge(e).dst, tfn.edge(e).timestamp),
            None => (s, 0),
        };
        if v == t {
            return Some(path);
        }
        let outs = tfn.out_edges(v);
        let mut advanced = false;
        while cursor[depth] < outs.len() {
            let e = outs[cursor[depth]];
            cursor[depth] += 1;
            let edge = tfn.edge(e);
            if residual[e] > 0 && edge.timestamp >= time && edge.timestamp < best[edge.dst.index()] {
                best[edge.dst.index()] = edge.timestamp;
                path.push(e);
                cursor.push(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            path.pop()?;
            cursor.pop();
        }
    }
}
