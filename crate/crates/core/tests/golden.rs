use densest_flow::densest::{stdf_exact, ExactOptions};
use densest_flow::fixtures::{self, id};
use densest_flow::maxflow::{max_flow, max_temporal_flow, naive_temporal_max_flow};
use densest_flow::peeling::{peel, peel_dc, peel_pruned, PeelDcOptions};
use densest_flow::pipeline::{PreparedQuery, Stages};
use densest_flow::preprocess::{reduce, transform};
use densest_flow::{Density, VertexId};

#[test]
fn static_flow_of_stranded_network() {
    let (net, s, t) = fixtures::stranded_flow_static();
    assert_eq!(max_flow(&net, s, t).unwrap().value, 7);
}

#[test]
fn temporal_flow_of_stranded_network() {
    let tfn = fixtures::stranded_flow();
    let r = max_temporal_flow(&tfn, id(&tfn, "s"), id(&tfn, "t")).unwrap();
    assert_eq!(r.value, 2);
}

#[test]
fn regret_network_values() {
    let tfn = fixtures::regret_network();
    let (s, t) = (id(&tfn, "s"), id(&tfn, "t"));
    assert_eq!(max_temporal_flow(&tfn, s, t).unwrap().value, 8);
    assert_eq!(naive_temporal_max_flow(&tfn, s, t).unwrap(), 6);
    let raw = transform(&tfn);
    assert_eq!((raw.num_vertices(), raw.num_edges()), (16, 17));
    let flow = max_flow(raw.network(), raw.earliest_copy(s).unwrap(), raw.latest_copy(t).unwrap()).unwrap();
    assert_eq!(flow.value, 8);
}

#[test]
fn reduction_example_keeps_flow() {
    let tfn = fixtures::reduction_example();
    let q = fixtures::reduction_query(&tfn).unwrap();
    let reduced = reduce(&tfn, &q.sources, &q.sinks).unwrap();
    let gone: Vec<(String, String)> = tfn
        .edges()
        .iter()
        .filter(|e| !reduced.edges().iter().any(|r| r.src == e.src && r.dst == e.dst))
        .map(|e| (tfn.label(e.src).to_string(), tfn.label(e.dst).to_string()))
        .collect();
    for (u, v) in [("v2", "v6"), ("v2", "v3"), ("v3", "v5")] {
        assert!(gone.contains(&(u.to_string(), v.to_string())), "{u}->{v} should be removed");
    }
    for stages in [Stages { reduce: false, compress: false }, Stages::default()] {
        let p = PreparedQuery::new(&tfn, &q, stages).unwrap();
        assert_eq!(p.evaluator().flow(&q.sources, &q.sinks).unwrap(), 2);
    }
}

#[test]
fn two_component_exact_answer() {
    let tfn = fixtures::two_component();
    let q = fixtures::two_component_query(&tfn, 4).unwrap();
    let out = stdf_exact(&tfn, &q, ExactOptions::default()).unwrap();
    let labels = |vs: &[VertexId]| vs.iter().map(|&v| tfn.label(v).to_string()).collect::<Vec<_>>();
    assert_eq!(out.partition.pairs.len(), 2);
    assert_eq!(labels(&out.partition.pairs[0].sources), ["s1", "s2"]);
    assert_eq!(labels(&out.partition.pairs[0].sinks), ["t1", "t2", "t3"]);
    assert_eq!(labels(&out.partition.pairs[1].sources), ["s3", "s4"]);
    assert_eq!(labels(&out.partition.pairs[1].sinks), ["t4", "t5"]);
    assert_eq!(out.arrays[0].values(), [0, 0, 5, 9, 10, 11].map(Some));
    assert_eq!(out.arrays[1].values(), [0, 0, 7, 8, 11].map(Some));
    let df2 = out.arrays[0].entry(2).unwrap();
    assert_eq!((labels(&df2.sources), labels(&df2.sinks)), (vec!["s2".to_string()], vec!["t2".to_string()]));
    assert_eq!(out.merged.value(5), Some(16));
    assert_eq!(out.answer.density, Density::new(16, 5));
    assert_eq!(labels(&out.answer.sources), ["s2", "s4"]);
    assert_eq!(labels(&out.answer.sinks), ["t2", "t3", "t5"]);
    assert_eq!(out.evaluations, 48);
    let whole = stdf_exact(&tfn, &q, ExactOptions { decompose: false, ..Default::default() }).unwrap();
    assert_eq!(whole.evaluations, 512);
    assert_eq!(whole.answer.density, Density::new(16, 5));
}

#[test]
fn two_component_peeling() {
    let tfn = fixtures::two_component();
    let q = fixtures::two_component_query(&tfn, 4).unwrap();
    let p = PreparedQuery::new(&tfn, &q, Stages::default()).unwrap();
    let (ans, trace) = peel(&p.rtfn, &q).unwrap();
    let order: Vec<&str> = trace.peel_order().iter().map(|&v| tfn.label(v)).collect();
    assert_eq!(&order[..5], ["t1", "s1", "s3", "t4", "t2"]);
    assert_eq!(trace.step_of_size(6).unwrap().delta, 1);
    assert_eq!(ans.size(), 5);
    assert_eq!(ans.density, Density::new(16, 5));
    let (pans, ptrace) = peel_pruned(&p.rtfn, &q).unwrap();
    assert_eq!(ptrace.peel_order()[..5], trace.peel_order()[..5]);
    assert_eq!(pans, ans);
    assert!(ptrace.pf_evaluations() < trace.pf_evaluations());
    for prune in [false, true] {
        let dc = peel_dc(&tfn, &q, PeelDcOptions { prune, exact_wcc_threshold: 0, ..Default::default() }).unwrap();
        assert_eq!(dc.answer.density, Density::new(16, 5));
    }
}
