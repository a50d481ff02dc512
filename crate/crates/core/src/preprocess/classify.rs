use serde::{Deserialize, Serialize};

use crate::capacity::Capacity;
use crate::network::{StaticFlowNetwork, VertexId};

/// Degree/capacity class of a vertex in a time-expanded network.
///
/// A vertex may satisfy both the flow-out and flow-in conditions (isolated
/// vertices, pass-throughs on infinite edges); [`classify`] reports the first
/// match in the order FlowOut, FlowIn, FlowCrossing. `Neutral` covers merged
/// vertices that satisfy none, e.g. several infinite in-edges and a finite
/// out-edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    FlowOut,
    FlowIn,
    FlowCrossing,
    Neutral,
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Shape {
    pub flow_out: bool,
    pub flow_in: bool,
    pub crossing: bool,
}

impl Shape {
    pub(crate) fn of(ins: impl Iterator<Item = Capacity>, outs: impl Iterator<Item = Capacity>) -> Shape {
        let (in_deg, in_inf, in_fin) = tally(ins);
        let (out_deg, out_inf, out_fin) = tally(outs);
        Shape {
            flow_out: in_deg == 0 || (in_deg == 1 && in_inf == 1),
            flow_in: out_deg == 0 || (out_deg == 1 && out_inf == 1),
            crossing: in_fin && out_fin,
        }
    }

    pub(crate) fn class(self) -> VertexClass {
        if self.flow_out {
            VertexClass::FlowOut
        } else if self.flow_in {
            VertexClass::FlowIn
        } else if self.crossing {
            VertexClass::FlowCrossing
        } else {
            VertexClass::Neutral
        }
    }
}

fn tally(caps: impl Iterator<Item = Capacity>) -> (usize, usize, bool) {
    caps.fold((0, 0, false), |(deg, inf, fin), c| {
        (deg + 1, inf + c.is_infinite() as usize, fin || !c.is_infinite())
    })
}

pub(crate) fn shape(net: &StaticFlowNetwork, v: VertexId) -> Shape {
    Shape::of(
        net.in_edges(v).iter().map(|&e| net.edge(e).capacity),
        net.out_edges(v).iter().map(|&e| net.edge(e).capacity),
    )
}

pub fn classify(net: &StaticFlowNetwork, v: VertexId) -> VertexClass {
    shape(net, v).class()
}

pub fn is_flow_out(net: &StaticFlowNetwork, v: VertexId) -> bool {
    shape(net, v).flow_out
}

pub fn is_flow_in(net: &StaticFlowNetwork, v: VertexId) -> bool {
    shape(net, v).flow_in
}

pub fn is_flow_crossing(net: &StaticFlowNetwork, v: VertexId) -> bool {
    shape(net, v).crossing
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_is_flow_out_first() {
        let net = StaticFlowNetwork::new(1);
        assert_eq!(classify(&net, VertexId(0)), VertexClass::FlowOut);
        assert!(is_flow_in(&net, VertexId(0)));
    }

    #[test]
    fn finite_through_vertex_is_crossing() {
        let net = StaticFlowNetwork::from_edges(3, &[(0, 1, 2), (1, 2, 3)]).unwrap();
        assert_eq!(classify(&net, VertexId(1)), VertexClass::FlowCrossing);
    }

    #[test]
    fn infinite_successor_makes_flow_in() {
        let mut net = StaticFlowNetwork::from_edges(3, &[(0, 1, 2)]).unwrap();
        net.add_edge(VertexId(1), VertexId(2), Capacity::Infinite).unwrap();
        assert_eq!(classify(&net, VertexId(1)), VertexClass::FlowIn);
        assert_eq!(classify(&net, VertexId(2)), VertexClass::FlowOut);
    }

    #[test]
    fn neutral_vertex() {
        let mut net = StaticFlowNetwork::new(4);
        net.add_edge(VertexId(0), VertexId(2), Capacity::Infinite).unwrap();
        net.add_edge(VertexId(1), VertexId(2), Capacity::Infinite).unwrap();
        net.add_edge(VertexId(2), VertexId(3), Capacity::Finite(1)).unwrap();
        assert_eq!(classify(&net, VertexId(2)), VertexClass::Neutral);
    }
}
