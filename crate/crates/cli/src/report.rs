//! JSON shapes printed by the subcommands. Vertices are always reported by
//! their input labels.

use densest_flow::densest::{DensestFlowArray, WccPartition};
use densest_flow::peeling::{PeelingTrace, Side};
use densest_flow::pipeline::StageSizes;
use densest_flow::{Density, StdfAnswer, TemporalFlowNetwork, VertexId};
use serde::Serialize;

pub fn labels(tfn: &TemporalFlowNetwork, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| tfn.label(v).to_owned()).collect()
}

#[derive(Serialize)]
pub struct DensityJson {
    pub num: u64,
    pub den: u64,
    /// Informational only; comparisons use `num / den`.
    pub decimal: String,
}

impl From<Density> for DensityJson {
    fn from(d: Density) -> Self {
        DensityJson { num: d.num, den: d.den, decimal: format!("{:.6}", d.to_f64()) }
    }
}

#[derive(Serialize)]
pub struct EdgeFlowJson {
    pub src: String,
    pub dst: String,
    pub timestamp: u64,
    pub flow: u64,
}

#[derive(Serialize)]
pub struct MaxFlowJson {
    pub value: u64,
    pub mode: &'static str,
    pub edges: Vec<EdgeFlowJson>,
}

#[derive(Serialize)]
pub struct ArrayEntryJson {
    pub size: usize,
    pub value: u64,
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
}

#[derive(Serialize)]
pub struct WccJson {
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
    /// Best flow per size `2..=|S_i| + |T_i|`.
    pub array: Vec<ArrayEntryJson>,
    /// Whether this component was enumerated exactly or peeled.
    pub method: &'static str,
}

impl WccJson {
    pub fn build(tfn: &TemporalFlowNetwork, partition: &WccPartition, arrays: &[DensestFlowArray], methods: &[&'static str]) -> Vec<Self> {
        partition
            .pairs
            .iter()
            .zip(arrays)
            .zip(methods)
            .map(|((pair, array), &method)| WccJson {
                sources: labels(tfn, &pair.sources),
                sinks: labels(tfn, &pair.sinks),
                array: (2..=array.max_size())
                    .filter_map(|k| array.entry(k).map(|e| (k, e)))
                    .map(|(size, e)| ArrayEntryJson { size, value: e.value, sources: labels(tfn, &e.sources), sinks: labels(tfn, &e.sinks) })
                    .collect(),
                method,
            })
            .collect()
    }
}

#[derive(Serialize)]
pub struct StdfJson {
    pub algorithm: String,
    pub k: usize,
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
    pub value: u64,
    pub size: usize,
    pub density: DensityJson,
    pub degenerate: bool,
    pub timed_out: bool,
    pub isolated_sources: Vec<String>,
    pub isolated_sinks: Vec<String>,
    pub per_wcc: Vec<WccJson>,
    pub flow_runs: Option<u64>,
    pub sizes: Option<StageSizes>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u128>,
}

impl StdfJson {
    pub fn new(tfn: &TemporalFlowNetwork, algorithm: &str, k: usize, answer: &StdfAnswer) -> Self {
        StdfJson {
            algorithm: algorithm.to_owned(),
            k,
            sources: labels(tfn, &answer.sources),
            sinks: labels(tfn, &answer.sinks),
            value: answer.value,
            size: answer.size(),
            density: answer.density.into(),
            degenerate: answer.degenerate,
            timed_out: answer.timed_out,
            isolated_sources: Vec::new(),
            isolated_sinks: Vec::new(),
            per_wcc: Vec::new(),
            flow_runs: None,
            sizes: None,
            elapsed_us: None,
        }
    }

    pub fn with_partition(mut self, tfn: &TemporalFlowNetwork, partition: &WccPartition) -> Self {
        self.isolated_sources = labels(tfn, &partition.isolated_sources);
        self.isolated_sinks = labels(tfn, &partition.isolated_sinks);
        self
    }
}

#[derive(Serialize)]
pub struct StepJson {
    pub size: usize,
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
    pub flow: u64,
    pub peeled: String,
    pub side: Side,
    pub delta: u64,
    pub evaluations: usize,
    pub lower_bounds: Vec<(String, u64)>,
}

pub fn trace_json(tfn: &TemporalFlowNetwork, trace: &PeelingTrace) -> Vec<StepJson> {
    trace
        .steps
        .iter()
        .map(|s| StepJson {
            size: s.size,
            sources: labels(tfn, &s.sources),
            sinks: labels(tfn, &s.sinks),
            flow: s.flow,
            peeled: tfn.label(s.peeled).to_owned(),
            side: s.side,
            delta: s.delta,
            evaluations: s.evaluations,
            lower_bounds: s.lower_bounds.iter().map(|&(v, b)| (tfn.label(v).to_owned(), b)).collect(),
        })
        .collect()
}

#[derive(Serialize)]
pub struct CopyJson {
    pub id: usize,
    pub name: String,
    pub original: String,
    pub first: u64,
    pub last: u64,
}

#[derive(Serialize)]
pub struct SidecarJson {
    pub compressed: bool,
    pub vertices: Vec<CopyJson>,
    /// Static edge carrying each temporal edge, by temporal edge id.
    pub horizontal: Vec<usize>,
}
