use serde::{Deserialize, Serialize};

use super::{StaticFlowNetwork, VertexId};
use crate::capacity::Capacity;

/// An integral flow on a [`StaticFlowNetwork`], indexed by edge id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flow {
    pub edge_flow: Vec<u64>,
    pub value: u64,
}

impl Flow {
    pub fn zero(num_edges: usize) -> Self {
        Flow { edge_flow: vec![0; num_edges], value: 0 }
    }

    /// Checks the capacity constraint, conservation at every non-terminal
    /// vertex, and that `value` equals the net outflow of `sources`.
    pub fn validate(&self, net: &StaticFlowNetwork, sources: &[VertexId], sinks: &[VertexId]) -> Result<(), String> {
        if self.edge_flow.len() != net.num_edges() {
            return Err(format!("flow covers {} edges, network has {}", self.edge_flow.len(), net.num_edges()));
        }
        for (i, (e, &f)) in net.edges().iter().zip(&self.edge_flow).enumerate() {
            if let Capacity::Finite(c) = e.capacity {
                if f > c {
                    return Err(format!("edge {i} carries {f} > capacity {c}"));
                }
            }
        }
        let mut balance = vec![0i128; net.num_vertices()];
        for (e, &f) in net.edges().iter().zip(&self.edge_flow) {
            balance[e.src.index()] -= f as i128;
            balance[e.dst.index()] += f as i128;
        }
        for (v, &b) in balance.iter().enumerate() {
            let v = VertexId(v);
            if b != 0 && !sources.contains(&v) && !sinks.contains(&v) {
                return Err(format!("conservation violated at vertex {v} (imbalance {b})"));
            }
        }
        let out: i128 = sources.iter().map(|s| -balance[s.index()]).sum();
        if out != self.value as i128 {
            return Err(format!("net source outflow {out} differs from value {}", self.value));
        }
        Ok(())
    }
}
