use std::collections::{HashMap, HashSet};
use std::io::Write;

use serde::{Deserialize, Serialize};

use super::VertexId;
use crate::error::{Error, Result};

/// A transaction: `capacity` units moved from `src` to `dst` at `timestamp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TemporalEdge {
    pub src: VertexId,
    pub dst: VertexId,
    pub capacity: u64,
    pub timestamp: u64,
}

/// A simple directed temporal flow network (no self-loops, no parallel edges).
///
/// Vertex ids are dense; `labels` maps them back to the user-facing names
/// they were ingested under.
#[derive(Clone, Debug)]
pub struct TemporalFlowNetwork {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<TemporalEdge>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl TemporalFlowNetwork {
    /// Builds a network from `(src, dst, capacity, timestamp)` tuples over
    /// vertices labelled `"0".."n-1"`. Parallel edges are rewritten through
    /// fresh intermediate vertices, as during ingestion.
    pub fn from_edges(num_vertices: usize, edges: &[(usize, usize, u64, u64)]) -> Result<Self> {
        let mut builder = TfnBuilder::new();
        for v in 0..num_vertices {
            builder.add_vertex(&v.to_string());
        }
        for (i, &(u, v, c, t)) in edges.iter().enumerate() {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::Argument(format!("edge {i} references a vertex >= {num_vertices}")));
            }
            builder.add_edge(&u.to_string(), &v.to_string(), c, t, i + 1)?;
        }
        builder.build()
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &TemporalEdge {
        &self.edges[id]
    }

    pub fn out_edges(&self, v: VertexId) -> &[usize] {
        &self.out_adj[v.index()]
    }

    pub fn in_edges(&self, v: VertexId) -> &[usize] {
        &self.in_adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.out_adj[v.index()].len() + self.in_adj[v.index()].len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len()).map(VertexId)
    }

    /// Number of vertices with at least one incident edge.
    pub fn num_touched_vertices(&self) -> usize {
        self.vertices().filter(|&v| self.degree(v) > 0).count()
    }

    pub fn max_timestamp(&self) -> Option<u64> {
        self.edges.iter().map(|e| e.timestamp).max()
    }

    pub fn min_timestamp(&self) -> Option<u64> {
        self.edges.iter().map(|e| e.timestamp).min()
    }

    /// Same vertex set (ids and labels preserved), keeping only edges for
    /// which `keep` returns true.
    pub fn retain_edges(&self, mut keep: impl FnMut(usize, &TemporalEdge) -> bool) -> Self {
        let edges: Vec<TemporalEdge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, e)| keep(*i, e))
            .map(|(_, e)| *e)
            .collect();
        Self::assemble(self.labels.clone(), edges)
    }

    /// Restricts the network to edges with `start <= τ <= end`. Vertices left
    /// without incident edges are dropped; labels and timestamps are kept.
    pub fn window(&self, start: u64, end: u64) -> Result<Self> {
        if start > end {
            return Err(Error::Argument(format!("window start {start} exceeds end {end}")));
        }
        let kept: Vec<TemporalEdge> = self
            .edges
            .iter()
            .filter(|e| (start..=end).contains(&e.timestamp))
            .copied()
            .collect();
        let mut used = vec![false; self.num_vertices()];
        for e in &kept {
            used[e.src.index()] = true;
            used[e.dst.index()] = true;
        }
        let mut remap = vec![usize::MAX; self.num_vertices()];
        let mut labels = Vec::new();
        for (old, &u) in used.iter().enumerate() {
            if u {
                remap[old] = labels.len();
                labels.push(self.labels[old].clone());
            }
        }
        let edges = kept
            .into_iter()
            .map(|e| TemporalEdge {
                src: VertexId(remap[e.src.index()]),
                dst: VertexId(remap[e.dst.index()]),
                ..e
            })
            .collect();
        Ok(Self::assemble(labels, edges))
    }

    /// Writes the network as a `src,dst,capacity,timestamp` CSV using labels.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["src", "dst", "capacity", "timestamp"])
            .map_err(csv_io)?;
        for e in &self.edges {
            w.write_record([
                self.label(e.src),
                self.label(e.dst),
                &e.capacity.to_string(),
                &e.timestamp.to_string(),
            ])
            .map_err(csv_io)?;
        }
        w.flush()?;
        Ok(())
    }

    fn assemble(labels: Vec<String>, edges: Vec<TemporalEdge>) -> Self {
        let n = labels.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            out_adj[e.src.index()].push(i);
            in_adj[e.dst.index()].push(i);
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), VertexId(i)))
            .collect();
        TemporalFlowNetwork { labels, index, edges, out_adj, in_adj }
    }
}

fn csv_io(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

/// Incremental constructor that validates records and removes parallel
/// edges by routing each extra copy through a fresh intermediate vertex.
#[derive(Debug, Default)]
pub struct TfnBuilder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<TemporalEdge>,
    pairs: HashSet<(VertexId, VertexId)>,
    total_capacity: u64,
    intermediates: usize,
}

impl TfnBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> VertexId {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = VertexId(self.labels.len());
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), v);
        v
    }

    /// Adds one transaction. `line` is only used for error reporting.
    pub fn add_edge(&mut self, src: &str, dst: &str, capacity: u64, timestamp: u64, line: usize) -> Result<()> {
        if src == dst {
            return Err(Error::Validation { line, message: format!("self-loop on vertex {src:?}") });
        }
        if timestamp == 0 {
            return Err(Error::Validation { line, message: "timestamp must be >= 1".into() });
        }
        let u = self.add_vertex(src);
        let v = self.add_vertex(dst);
        if self.pairs.insert((u, v)) {
            self.push(u, v, capacity, timestamp, line)
        } else {
            let m = self.fresh_intermediate(src, dst);
            self.pairs.insert((u, m));
            self.pairs.insert((m, v));
            self.push(u, m, capacity, timestamp, line)?;
            self.push(m, v, capacity, timestamp, line)
        }
    }

    pub fn build(self) -> Result<TemporalFlowNetwork> {
        Ok(TemporalFlowNetwork::assemble(self.labels, self.edges))
    }

    fn push(&mut self, src: VertexId, dst: VertexId, capacity: u64, timestamp: u64, line: usize) -> Result<()> {
        self.total_capacity = self.total_capacity.checked_add(capacity).ok_or_else(|| {
            Error::Ingest(format!("line {line}: total capacity overflows 64 bits"))
        })?;
        self.edges.push(TemporalEdge { src, dst, capacity, timestamp });
        Ok(())
    }

    fn fresh_intermediate(&mut self, src: &str, dst: &str) -> VertexId {
        loop {
            self.intermediates += 1;
            let label = format!("{src}~{dst}#{}", self.intermediates);
            if !self.index.contains_key(&label) {
                return self.add_vertex(&label);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_edge_is_routed_through_intermediate() {
        let g = TemporalFlowNetwork::from_edges(2, &[(0, 1, 5, 3), (0, 1, 2, 7)]).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 3);
        let m = VertexId(2);
        let e: Vec<_> = g.edges().iter().map(|e| (e.src.0, e.dst.0, e.capacity, e.timestamp)).collect();
        assert_eq!(e, vec![(0, 1, 5, 3), (0, m.0, 2, 7), (m.0, 1, 2, 7)]);
    }

    #[test]
    fn self_loop_rejected() {
        let err = TemporalFlowNetwork::from_edges(1, &[(0, 0, 5, 3)]).unwrap_err();
        assert!(matches!(err, Error::Validation { line: 1, .. }));
    }

    #[test]
    fn zero_timestamp_rejected() {
        let err = TemporalFlowNetwork::from_edges(2, &[(0, 1, 5, 0)]).unwrap_err();
        assert!(matches!(err, Error::Validation { .. }));
    }

    #[test]
    fn capacity_overflow_is_ingestion_error() {
        let err = TemporalFlowNetwork::from_edges(3, &[(0, 1, u64::MAX, 1), (1, 2, 1, 2)]).unwrap_err();
        assert!(matches!(err, Error::Ingest(_)));
    }

    #[test]
    fn window_bounds() {
        let g = TemporalFlowNetwork::from_edges(3, &[(0, 1, 1, 1), (1, 2, 1, 5)]).unwrap();
        assert!(g.window(4, 2).is_err());
        let all = g.window(1, 5).unwrap();
        assert_eq!(all.edges(), g.edges());
        let none = g.window(2, 4).unwrap();
        assert_eq!(none.num_edges(), 0);
        assert_eq!(none.num_vertices(), 0);
        let late = g.window(5, 9).unwrap();
        assert_eq!(late.num_vertices(), 2);
        assert_eq!(late.label(VertexId(0)), "1");
        assert_eq!(late.edge(0).timestamp, 5);
    }
}
