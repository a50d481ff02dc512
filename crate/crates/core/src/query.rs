//! STDF queries and answers.

use serde::{Deserialize, Serialize};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::network::{TemporalFlowNetwork, VertexId};

/// An S-T densest flow query `(S, T, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub sources: Vec<VertexId>,
    pub sinks: Vec<VertexId>,
    pub k: usize,
}

impl Query {
    /// Validates and normalizes (sorts) the terminal sets.
    pub fn new(mut sources: Vec<VertexId>, mut sinks: Vec<VertexId>, k: usize) -> Result<Self> {
        sources.sort();
        sinks.sort();
        if sources.is_empty() || sinks.is_empty() {
            return Err(Error::Query("source and sink sets must be non-empty".into()));
        }
        if sources.windows(2).any(|w| w[0] == w[1]) || sinks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Query("duplicate terminal".into()));
        }
        if let Some(v) = sources.iter().find(|v| sinks.binary_search(v).is_ok()) {
            return Err(Error::Query(format!("vertex {v} is both a source and a sink")));
        }
        if k == 0 {
            return Err(Error::Query("k must be at least 1".into()));
        }
        let n = sources.len() + sinks.len();
        if k > n {
            return Err(Error::Infeasible { k, available: n });
        }
        Ok(Query { sources, sinks, k })
    }

    pub fn num_terminals(&self) -> usize {
        self.sources.len() + self.sinks.len()
    }

    /// Checks that every terminal is a vertex of `tfn`.
    pub fn check_against(&self, tfn: &TemporalFlowNetwork) -> Result<()> {
        let n = tfn.num_vertices();
        match self.sources.iter().chain(&self.sinks).find(|v| v.index() >= n) {
            Some(v) => Err(Error::Query(format!("terminal {v} is not a vertex of the network"))),
            None => Ok(()),
        }
    }

    /// Resolves a query file's labels against `tfn`.
    pub fn from_file(tfn: &TemporalFlowNetwork, file: &QueryFile) -> Result<Self> {
        Self::from_labels(tfn, &file.sources, &file.sinks, file.k)
    }

    pub fn from_labels<L: AsRef<str>>(tfn: &TemporalFlowNetwork, sources: &[L], sinks: &[L], k: usize) -> Result<Self> {
        let resolve = |labels: &[L]| -> Result<Vec<VertexId>> {
            labels
                .iter()
                .map(|l| {
                    tfn.vertex(l.as_ref())
                        .ok_or_else(|| Error::Query(format!("unknown vertex label {:?}", l.as_ref())))
                })
                .collect()
        };
        Query::new(resolve(sources)?, resolve(sinks)?, k)
    }

    pub fn to_file(&self, tfn: &TemporalFlowNetwork) -> QueryFile {
        let labels = |vs: &[VertexId]| vs.iter().map(|&v| tfn.label(v).to_string()).collect();
        QueryFile { sources: labels(&self.sources), sinks: labels(&self.sinks), k: self.k }
    }
}

/// On-disk query: `{"sources": [...], "sinks": [...], "k": int}`. Labels may
/// be JSON strings or integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryFile {
    #[serde(deserialize_with = "labels")]
    pub sources: Vec<String>,
    #[serde(deserialize_with = "labels")]
    pub sinks: Vec<String>,
    pub k: usize,
}

fn labels<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<String>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Label {
        Text(String),
        Int(u64),
    }
    let raw = Vec::<Label>::deserialize(d)?;
    Ok(raw
        .into_iter()
        .map(|l| match l {
            Label::Text(s) => s,
            Label::Int(i) => i.to_string(),
        })
        .collect())
}

/// The subsets `S' ⊆ S`, `T' ⊆ T` returned for a query, with their flow and
/// density.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StdfAnswer {
    pub sources: Vec<VertexId>,
    pub sinks: Vec<VertexId>,
    pub value: u64,
    pub density: Density,
    /// Set when the best density is zero: no witness carries any flow.
    pub degenerate: bool,
    /// Set when an anytime computation stopped at its deadline; the answer
    /// is then the best one found so far.
    pub timed_out: bool,
}

impl StdfAnswer {
    pub fn new(sources: Vec<VertexId>, sinks: Vec<VertexId>, value: u64) -> Self {
        let size = (sources.len() + sinks.len()) as u64;
        StdfAnswer {
            density: Density::new(value, size.max(1)),
            degenerate: value == 0,
            timed_out: false,
            sources,
            sinks,
            value,
        }
    }

    pub fn size(&self) -> usize {
        self.sources.len() + self.sinks.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn validation() {
        assert!(Query::new(vec![v(0)], vec![v(1)], 2).is_ok());
        assert!(matches!(Query::new(vec![v(0)], vec![v(0)], 1), Err(Error::Query(_))));
        assert!(matches!(Query::new(vec![], vec![v(0)], 1), Err(Error::Query(_))));
        assert!(matches!(Query::new(vec![v(0)], vec![v(1)], 0), Err(Error::Query(_))));
        assert!(matches!(Query::new(vec![v(0)], vec![v(1)], 3), Err(Error::Infeasible { k: 3, available: 2 })));
        assert!(matches!(Query::new(vec![v(0), v(0)], vec![v(1)], 1), Err(Error::Query(_))));
    }

    #[test]
    fn query_file_accepts_mixed_labels() {
        let f: QueryFile = serde_json::from_str(r#"{"sources":["a",3],"sinks":[7],"k":2}"#).unwrap();
        assert_eq!(f.sources, vec!["a".to_string(), "3".to_string()]);
        assert_eq!(f.sinks, vec!["7".to_string()]);
    }

    #[test]
    fn unknown_label_rejected() {
        let tfn = TemporalFlowNetwork::from_edges(2, &[(0, 1, 1, 1)]).unwrap();
        assert!(Query::from_labels(&tfn, &["0"], &["9"], 1).is_err());
        assert!(Query::from_labels(&tfn, &["0"], &["1"], 1).is_ok());
    }
}
