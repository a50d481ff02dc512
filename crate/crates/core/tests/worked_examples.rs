use densest_flow::fixtures::{self, id};
use densest_flow::maxflow::max_flow;
use densest_flow::oracle::{check_temporal_feasibility, TemporalFlowAssignment, ViolationKind};
use densest_flow::preprocess::{classify, compress, transform, VertexClass};

#[test]
fn regret_network_classification() {
    let tfn = fixtures::regret_network();
    let rtfn = transform(&tfn);
    let copy = |label: &str, t: u64| rtfn.copy_at(id(&tfn, label), t).unwrap();
    let flow_out = [("s", 1), ("s", 2), ("v1", 3), ("v2", 5), ("v3", 4), ("v3", 6), ("v4", 8), ("v5", 7)];
    let flow_in = [("v1", 1), ("v2", 2), ("v3", 3), ("v4", 4), ("v3", 5), ("v5", 6), ("t", 7), ("t", 8)];
    for (v, t) in flow_out {
        assert_eq!(classify(rtfn.network(), copy(v, t)), VertexClass::FlowOut, "{v}^{t}");
    }
    for (v, t) in flow_in {
        assert_eq!(classify(rtfn.network(), copy(v, t)), VertexClass::FlowIn, "{v}^{t}");
    }
    assert_eq!(rtfn.num_vertices(), flow_out.len() + flow_in.len());
}

#[test]
fn regret_network_compression() {
    let tfn = fixtures::regret_network();
    let rtfn = transform(&tfn);
    let c = compress(&rtfn, &[]);
    // Terminal copies merge into one super vertex each, and v1 collapses.
    for label in ["s", "t", "v1"] {
        let copies = c.copies(id(&tfn, label));
        assert_eq!(copies.len(), 1, "{label}");
        let v = c.vertex(copies[0]);
        assert!(v.first < v.last, "{label} spans several timestamps");
    }
    let (s, t) = (c.copies(id(&tfn, "s"))[0], c.copies(id(&tfn, "t"))[0]);
    assert_eq!(max_flow(c.network(), s, t).unwrap().value, 8);
    assert!(c.num_vertices() < rtfn.num_vertices());
    assert!(c.num_edges() <= 2 * tfn.num_edges());
}

#[test]
fn window_keeps_first_timestamp_edges() {
    let w = fixtures::stranded_flow().window(1, 1).unwrap();
    assert_eq!(w.num_edges(), 2);
    let mut pairs: Vec<(String, String)> =
        w.edges().iter().map(|e| (w.label(e.src).to_owned(), w.label(e.dst).to_owned())).collect();
    pairs.sort();
    assert_eq!(pairs, [("s".into(), "v1".into()), ("v3".into(), "v5".into())]);
}

#[test]
fn early_departure_is_infeasible() {
    let tfn = fixtures::stranded_flow();
    let mut a = TemporalFlowAssignment::zero(&tfn);
    // s -> v1 -> v3 -> v5 -> t, where v3 -> v5 departs before v1 -> v3 arrives.
    for (u, v) in [("s", "v1"), ("v1", "v3"), ("v3", "v5"), ("v5", "t")] {
        let e = tfn.edges().iter().position(|e| e.src == id(&tfn, u) && e.dst == id(&tfn, v)).unwrap();
        a.edge_flow[e] = 3;
    }
    let report = check_temporal_feasibility(&tfn, &a, &[id(&tfn, "s")], &[id(&tfn, "t")]);
    assert!(!report.feasible);
    let violation = report.violation.unwrap();
    assert_eq!(violation.kind, ViolationKind::Temporal);
    assert_eq!(violation.vertex, Some(id(&tfn, "v3")));
    assert_eq!(violation.timestamp, Some(1));
}
