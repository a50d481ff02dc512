use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use densest_flow::bench::{run_bench, Algorithm, BenchConfig, RunOptions};
use densest_flow::densest::{stdf_exact, ExactOptions};
use densest_flow::maxflow::{max_flow, max_temporal_flow, naive_temporal_max_flow};
use densest_flow::network::{ingest_edge_list, CsvFormat};
use densest_flow::oracle::{project_flow, stdf_bruteforce};
use densest_flow::peeling::{peel_dc, stdf_peel, PeelDcOptions};
use densest_flow::pipeline::Stages;
use densest_flow::preprocess::{compress, transform};
use densest_flow::query::QueryFile;
use densest_flow::synth::{layered_network, LayeredConfig};
use densest_flow::{Capacity, Query, StaticFlowNetwork, TemporalFlowNetwork, VertexId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::report::{self, CopyJson, EdgeFlowJson, MaxFlowJson, SidecarJson, StdfJson, WccJson};
use crate::{BenchArgs, Cli, Command, Global, MaxflowArgs, QueryArgs, StdfArgs, TransformArgs};

/// Runs the parsed command; returns the exit status on success paths (3 when
/// an anytime computation hit its deadline).
pub fn run(cli: &Cli) -> CliResult<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Transform(a) => transform_cmd(g, a),
        Command::Maxflow(a) => maxflow_cmd(g, a),
        Command::Stdf(a) => stdf_cmd(g, a),
        Command::Bench(a) => bench_cmd(g, a),
        Command::Oracle(a) => oracle_cmd(g, a),
    }
}

fn load(g: &Global) -> CliResult<TemporalFlowNetwork> {
    let path = g.input.as_deref().ok_or_else(|| CliError::arg("--input is required"))?;
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let tfn = ingest_edge_list(BufReader::new(file), CsvFormat::default())?;
    match g.window {
        Some((a, b)) => Ok(tfn.window(a, b)?),
        None => Ok(tfn),
    }
}

fn vertex(tfn: &TemporalFlowNetwork, label: &str) -> CliResult<VertexId> {
    tfn.vertex(label)
        .ok_or_else(|| CliError::new("EINFEASIBLE", 2, format!("unknown vertex {label:?}")))
}

fn open_out(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::io(p, e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> CliResult<()> {
    let mut w = open_out(path)?;
    let io_err = |e: io::Error| CliError::io(path.unwrap_or(Path::new("<stdout>")), e);
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| CliError::io(path.unwrap_or(Path::new("<stdout>")), e.into()))?;
    writeln!(w).map_err(io_err)?;
    w.flush().map_err(io_err)
}

fn copy_name(tfn: &TemporalFlowNetwork, v: densest_flow::preprocess::RtfnVertex) -> String {
    let label = tfn.label(v.original);
    if v.first == v.last {
        format!("{label}@{}", v.first)
    } else {
        format!("{label}@{}..{}", v.first, v.last)
    }
}

fn transform_cmd(g: &Global, a: &TransformArgs) -> CliResult<u8> {
    let tfn = load(g)?;
    let raw = transform(&tfn);
    let rtfn = if a.compress {
        let mut protected = Vec::new();
        for s in &a.sources {
            protected.extend(raw.earliest_copy(vertex(&tfn, s)?));
        }
        for t in &a.sinks {
            protected.extend(raw.latest_copy(vertex(&tfn, t)?));
        }
        compress(&raw, &protected)
    } else {
        raw
    };
    let names: Vec<String> = rtfn.vertices().iter().map(|&v| copy_name(&tfn, v)).collect();

    let path = g.out.as_deref();
    let io_err = |e: io::Error| CliError::io(path.unwrap_or(Path::new("<stdout>")), e);
    let mut w = csv::Writer::from_writer(open_out(path)?);
    let csv_err = |e: csv::Error| io_err(io::Error::other(e));
    w.write_record(["src", "dst", "capacity", "temporal_edge"]).map_err(csv_err)?;
    for (i, e) in rtfn.network().edges().iter().enumerate() {
        let cap = match e.capacity {
            Capacity::Finite(c) => c.to_string(),
            Capacity::Infinite => "inf".into(),
        };
        let origin = rtfn.tr_inv(i).map(|t| t.to_string()).unwrap_or_default();
        w.write_record([&names[e.src.index()], &names[e.dst.index()], &cap, &origin]).map_err(csv_err)?;
    }
    w.flush().map_err(io_err)?;

    let sidecar = a.sidecar.clone().or_else(|| path.map(|p| p.with_extension("json")));
    if let Some(sidecar) = sidecar {
        let body = SidecarJson {
            compressed: rtfn.is_compressed(),
            vertices: rtfn
                .vertices()
                .iter()
                .enumerate()
                .map(|(id, &v)| CopyJson { id, name: names[id].clone(), original: tfn.label(v.original).to_owned(), first: v.first, last: v.last })
                .collect(),
            horizontal: (0..rtfn.num_temporal_edges()).map(|e| rtfn.tr(e)).collect(),
        };
        write_json(Some(&sidecar), &body)?;
    }
    Ok(0)
}

fn maxflow_cmd(g: &Global, a: &MaxflowArgs) -> CliResult<u8> {
    let tfn = load(g)?;
    let (s, t) = (vertex(&tfn, &a.source)?, vertex(&tfn, &a.sink)?);
    if s == t {
        return Err(CliError::arg("source and sink coincide"));
    }
    let edge_json = |flows: &[u64]| -> Vec<EdgeFlowJson> {
        tfn.edges()
            .iter()
            .zip(flows)
            .filter(|(_, &f)| f > 0)
            .map(|(e, &flow)| EdgeFlowJson { src: tfn.label(e.src).into(), dst: tfn.label(e.dst).into(), timestamp: e.timestamp, flow })
            .collect()
    };
    let body = if a.naive {
        MaxFlowJson { value: naive_temporal_max_flow(&tfn, s, t)?, mode: "naive", edges: Vec::new() }
    } else if a.temporal {
        let value = max_temporal_flow(&tfn, s, t)?.value;
        // Per-edge flows come from the uncompressed expansion, whose edges map
        // one to one onto transactions.
        let raw = transform(&tfn);
        let flows = match raw.terminal_network(&[s], &[t])? {
            Some((net, ss, tt)) => project_flow(&raw, &max_flow(&net, ss, tt)?)?.edge_flow,
            None => vec![0; tfn.num_edges()],
        };
        let projected: u64 = tfn.in_edges(t).iter().map(|&e| flows[e]).sum::<u64>()
            - tfn.out_edges(t).iter().map(|&e| flows[e]).sum::<u64>();
        if projected != value {
            return Err(CliError::new("EFLOW", 1, format!("pipeline value {value} disagrees with expansion value {projected}")));
        }
        MaxFlowJson { value, mode: "temporal", edges: edge_json(&flows) }
    } else {
        let edges: Vec<(usize, usize, u64)> = tfn.edges().iter().map(|e| (e.src.index(), e.dst.index(), e.capacity)).collect();
        let net = StaticFlowNetwork::from_edges(tfn.num_vertices(), &edges)?;
        let flow = max_flow(&net, s, t)?;
        MaxFlowJson { value: flow.value, mode: "static", edges: edge_json(&flow.edge_flow) }
    };
    write_json(g.out.as_deref(), &body)?;
    Ok(0)
}

fn load_query(tfn: &TemporalFlowNetwork, a: &QueryArgs) -> CliResult<Query> {
    let mut file = match &a.query {
        Some(path) => {
            let f = File::open(path).map_err(|e| CliError::io(path, e))?;
            serde_json::from_reader::<_, QueryFile>(BufReader::new(f))
                .map_err(|e| CliError::new("EPARSE", 4, format!("{}: {e}", path.display())))?
        }
        None => QueryFile { sources: Vec::new(), sinks: Vec::new(), k: 0 },
    };
    if !a.sources.is_empty() {
        file.sources = a.sources.clone();
    }
    if !a.sinks.is_empty() {
        file.sinks = a.sinks.clone();
    }
    if let Some(k) = a.k {
        file.k = k as usize;
    }
    if file.k == 0 {
        return Err(CliError::arg("k missing: give --k or a query file"));
    }
    Ok(Query::from_file(tfn, &file)?)
}

fn stdf_cmd(g: &Global, a: &StdfArgs) -> CliResult<u8> {
    let tfn = load(g)?;
    let q = load_query(&tfn, &a.query)?;
    let stages = Stages { reduce: !a.no_reduce, compress: !a.no_compress };
    let start = Instant::now();
    let mut traces = Vec::new();
    let mut body = match a.algo {
        Algorithm::Dc => {
            let deadline = g.time_limit_ms.map(|ms| start + Duration::from_millis(ms));
            let out = stdf_exact(&tfn, &q, ExactOptions { budget: a.budget, deadline, stages, decompose: true })?;
            let methods = vec!["exact"; out.arrays.len()];
            let mut body = StdfJson::new(&tfn, a.algo.name(), q.k, &out.answer).with_partition(&tfn, &out.partition);
            body.per_wcc = WccJson::build(&tfn, &out.partition, &out.arrays, &methods);
            body.flow_runs = Some(out.flow_runs);
            body.sizes = Some(out.sizes);
            body
        }
        Algorithm::Peel | Algorithm::PeelPrune => {
            let out = stdf_peel(&tfn, &q, a.algo == Algorithm::PeelPrune, stages)?;
            let mut body = StdfJson::new(&tfn, a.algo.name(), q.k, &out.answer);
            body.flow_runs = Some(out.flow_runs);
            body.sizes = Some(out.sizes);
            traces.push(report::trace_json(&tfn, &out.trace));
            body
        }
        Algorithm::PeelDc | Algorithm::PeelDcPrune => {
            let opts = PeelDcOptions {
                prune: a.algo == Algorithm::PeelDcPrune,
                exact_wcc_threshold: a.exact_wcc_threshold,
                budget: a.budget,
                stages,
            };
            let out = peel_dc(&tfn, &q, opts)?;
            let methods: Vec<&'static str> = out.traces.iter().map(|t| if t.is_some() { "peel" } else { "exact" }).collect();
            let mut body = StdfJson::new(&tfn, a.algo.name(), q.k, &out.answer).with_partition(&tfn, &out.partition);
            body.per_wcc = WccJson::build(&tfn, &out.partition, &out.arrays, &methods);
            body.flow_runs = Some(out.flow_runs);
            body.sizes = Some(out.sizes);
            traces.extend(out.traces.iter().flatten().map(|t| report::trace_json(&tfn, t)));
            body
        }
    };
    if !g.no_timings {
        body.elapsed_us = Some(start.elapsed().as_micros());
    }
    if let Some(path) = &a.trace {
        write_json(Some(path), &traces)?;
    }
    write_json(g.out.as_deref(), &body)?;
    if body.timed_out {
        let e = CliError::new("ETIMEOUT", 3, "time limit reached; the answer is the best found so far");
        eprintln!("{}", serde_json::json!({ "error": e }));
        return Ok(3);
    }
    Ok(0)
}

#[derive(Serialize)]
struct BenchCsvRow<'a> {
    query: usize,
    algorithm: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_us: Option<u128>,
    value: u64,
    size: usize,
    density_num: u64,
    density_den: u64,
    timed_out: bool,
    error: &'a str,
}

fn bench_cmd(g: &Global, a: &BenchArgs) -> CliResult<u8> {
    let tfn = match &g.input {
        Some(_) => load(g)?,
        None => {
            let cfg = LayeredConfig { layers: a.layers, width: a.width, fanout: a.fanout, motifs: a.motifs, max_capacity: 20 };
            layered_network(&mut ChaCha8Rng::seed_from_u64(g.seed), cfg)
        }
    };
    let cfg = BenchConfig {
        queries: a.queries,
        terminals: a.terminals,
        k: a.k.unwrap_or((a.terminals / 2).max(1)),
        seed: g.seed,
        run: RunOptions {
            budget: a.budget,
            exact_wcc_threshold: a.exact_wcc_threshold,
            time_limit: g.time_limit_ms.map(Duration::from_millis),
            stages: Stages::default(),
        },
    };
    let report = run_bench(&tfn, cfg)?;
    let path = g.out.as_deref();
    let io_err = |e: io::Error| CliError::io(path.unwrap_or(Path::new("<stdout>")), e);
    let csv_err = |e: csv::Error| io_err(io::Error::other(e));
    let mut w = csv::Writer::from_writer(open_out(path)?);
    for r in &report.rows {
        w.serialize(BenchCsvRow {
            query: r.query,
            algorithm: r.algorithm.name(),
            elapsed_us: (!g.no_timings).then_some(r.elapsed_us),
            value: r.value,
            size: r.size,
            density_num: r.density_num,
            density_den: r.density_den,
            timed_out: r.timed_out,
            error: r.error.as_deref().unwrap_or(""),
        })
        .map_err(csv_err)?;
    }
    w.flush().map_err(io_err)?;
    if !report.violations.is_empty() {
        return Err(CliError::new("EINVARIANT", 1, report.violations.join("; ")));
    }
    Ok(0)
}

fn oracle_cmd(g: &Global, a: &QueryArgs) -> CliResult<u8> {
    let tfn = load(g)?;
    let q = load_query(&tfn, a)?;
    let answer = stdf_bruteforce(&tfn, &q)?;
    write_json(g.out.as_deref(), &StdfJson::new(&tfn, "bruteforce", q.k, &answer))?;
    Ok(0)
}
