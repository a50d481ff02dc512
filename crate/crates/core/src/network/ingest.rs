use std::io::Read;

use super::temporal::{TemporalFlowNetwork, TfnBuilder};
use crate::error::{Error, Result};

/// Shape of an edge-list stream. Columns are always
/// `src,dst,capacity,timestamp`.
#[derive(Clone, Copy, Debug)]
pub struct CsvFormat {
    pub has_header: bool,
    pub delimiter: u8,
}

impl Default for CsvFormat {
    fn default() -> Self {
        CsvFormat { has_header: true, delimiter: b',' }
    }
}

const HEADER: [&str; 4] = ["src", "dst", "capacity", "timestamp"];

/// Reads an edge list into a normalized [`TemporalFlowNetwork`].
///
/// Vertex labels are arbitrary non-empty tokens; capacities and timestamps are
/// decimal integers. Parallel edges are rewritten through fresh intermediate
/// vertices.
pub fn ingest_edge_list<R: Read>(reader: R, format: CsvFormat) -> Result<TemporalFlowNetwork> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .delimiter(format.delimiter)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);

    let mut builder = TfnBuilder::new();
    let mut header_pending = format.has_header;
    let mut record = csv::StringRecord::new();
    loop {
        let more = rdr.read_record(&mut record).map_err(|e| {
            let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
            match e.into_kind() {
                csv::ErrorKind::Io(io) => Error::Io(io),
                other => Error::Parse { line, message: format!("{other:?}") },
            }
        })?;
        if !more {
            break;
        }
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if header_pending {
            header_pending = false;
            let names: Vec<&str> = record.iter().collect();
            if names != HEADER {
                return Err(Error::Parse {
                    line,
                    message: format!("expected header `src,dst,capacity,timestamp`, found `{}`", names.join(",")),
                });
            }
            continue;
        }
        if record.len() != 4 {
            return Err(Error::Parse { line, message: format!("expected 4 fields, found {}", record.len()) });
        }
        let src = &record[0];
        let dst = &record[1];
        if src.is_empty() || dst.is_empty() {
            return Err(Error::Parse { line, message: "empty vertex label".into() });
        }
        let capacity = parse_int(&record[2], "capacity", line)?;
        if capacity < 0 {
            return Err(Error::Validation { line, message: format!("negative capacity {capacity}") });
        }
        let capacity = u64::try_from(capacity)
            .map_err(|_| Error::Ingest(format!("line {line}: capacity {capacity} does not fit in 64 bits")))?;
        let timestamp = parse_int(&record[3], "timestamp", line)?;
        if timestamp < 1 {
            return Err(Error::Validation { line, message: format!("timestamp {timestamp} must be >= 1") });
        }
        let timestamp = u64::try_from(timestamp)
            .map_err(|_| Error::Validation { line, message: format!("timestamp {timestamp} out of range") })?;
        builder.add_edge(src, dst, capacity, timestamp, line)?;
    }
    builder.build()
}

fn parse_int(field: &str, what: &str, line: usize) -> Result<i128> {
    field
        .parse::<i128>()
        .map_err(|_| Error::Parse { line, message: format!("{what} `{field}` is not an integer") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::VertexId;

    fn ingest(text: &str) -> Result<TemporalFlowNetwork> {
        ingest_edge_list(text.as_bytes(), CsvFormat::default())
    }

    #[test]
    fn single_record() {
        let g = ingest("src,dst,capacity,timestamp\n0,1,5,3\n").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.edge(0).capacity, 5);
        assert_eq!(g.edge(0).timestamp, 3);
    }

    #[test]
    fn duplicate_pair_gets_intermediate_vertex() {
        let g = ingest("src,dst,capacity,timestamp\n0,1,5,3\n0,1,2,7\n").unwrap();
        assert_eq!(g.num_vertices(), 3);
        let m = g.edge(1).dst;
        assert_eq!(g.edge(1).src, g.vertex("0").unwrap());
        assert_eq!((g.edge(1).capacity, g.edge(1).timestamp), (2, 7));
        assert_eq!(g.edge(2).src, m);
        assert_eq!(g.edge(2).dst, g.vertex("1").unwrap());
        assert_eq!((g.edge(2).capacity, g.edge(2).timestamp), (2, 7));
    }

    #[test]
    fn self_loop_is_validation_error() {
        let err = ingest("src,dst,capacity,timestamp\n0,0,5,3\n").unwrap_err();
        assert!(matches!(err, Error::Validation { line: 2, .. }), "{err}");
    }

    #[test]
    fn malformed_record_reports_line() {
        let err = ingest("src,dst,capacity,timestamp\n0,1,5,3\n1,2,x,4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = ingest("src,dst,capacity,timestamp\n0,1,5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn bad_timestamps_and_capacities() {
        assert!(matches!(ingest("src,dst,capacity,timestamp\n0,1,5,0\n"), Err(Error::Validation { .. })));
        assert!(matches!(ingest("src,dst,capacity,timestamp\n0,1,5,-2\n"), Err(Error::Validation { .. })));
        assert!(matches!(
            ingest("src,dst,capacity,timestamp\n0,1,99999999999999999999999,2\n"),
            Err(Error::Ingest(_))
        ));
    }

    #[test]
    fn wrong_header_rejected() {
        assert!(matches!(ingest("a,b,c,d\n0,1,5,3\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn string_labels_and_headerless() {
        let fmt = CsvFormat { has_header: false, delimiter: b';' };
        let g = ingest_edge_list("alice;bob;10;4\nbob;carol;3;6\n".as_bytes(), fmt).unwrap();
        assert_eq!(g.vertex("carol"), Some(VertexId(2)));
        assert_eq!(g.label(VertexId(0)), "alice");
    }
}
