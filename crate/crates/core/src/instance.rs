//! JSON instance format shared by the library and the command-line frontend.
//!
//! One object per file, or one per line in batch files:
//!
//! ```json
//! {"type":"hypergraph","n":3,"edges":[[1,2],[1,2,3]]}
//! {"type":"cgraph","n":5,"colors":[1,1,1,2,2],"edges":[[1,4],[2,4],[1,5],[2,5],[3,5]]}
//! {"type":"digraph","n":3,"arcs":[[1,2],[1,3],[2,3]]}
//! ```
//!
//! Parsers reject negative `n`, out-of-range ids, empty hyperedges,
//! duplicate arcs, and self-loops in colored graphs. Serialization is
//! normalized, so parse -> serialize -> parse is a fixed point.

use crate::hypergraph::{ColoredGraph, Digraph, Hypergraph, StructureError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("n must be non-negative, got {0}")]
    NegativeCount(i64),
    #[error("vertex ids must be positive, got {0}")]
    NonPositiveId(i64),
    #[error("colors must be positive, got {0}")]
    NonPositiveColor(i64),
    #[error("edge endpoints must be pairs")]
    BadEdgeShape,
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawInstance {
    Hypergraph { n: i64, edges: Vec<Vec<i64>> },
    Cgraph { n: i64, colors: Vec<i64>, edges: Vec<Vec<i64>> },
    Digraph { n: i64, arcs: Vec<Vec<i64>> },
}

/// A parsed, validated instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Hypergraph(Hypergraph),
    CGraph(ColoredGraph),
    Digraph(Digraph),
}

impl Instance {
    pub fn type_name(&self) -> &'static str {
        match self {
            Instance::Hypergraph(_) => "hypergraph",
            Instance::CGraph(_) => "cgraph",
            Instance::Digraph(_) => "digraph",
        }
    }
}

fn usize_count(n: i64) -> Result<usize, ParseError> {
    if n < 0 {
        return Err(ParseError::NegativeCount(n));
    }
    Ok(n as usize)
}

fn vertex_id(v: i64) -> Result<usize, ParseError> {
    if v <= 0 {
        return Err(ParseError::NonPositiveId(v));
    }
    Ok(v as usize)
}

fn pair(edge: &[i64]) -> Result<(usize, usize), ParseError> {
    if edge.len() != 2 {
        return Err(ParseError::BadEdgeShape);
    }
    Ok((vertex_id(edge[0])?, vertex_id(edge[1])?))
}

/// Parses one instance from a JSON string.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let raw: RawInstance = serde_json::from_str(text)?;
    match raw {
        RawInstance::Hypergraph { n, edges } => {
            let n = usize_count(n)?;
            let mut converted = Vec::with_capacity(edges.len());
            for edge in edges {
                converted.push(edge.iter().map(|&v| vertex_id(v)).collect::<Result<_, _>>()?);
            }
            Ok(Instance::Hypergraph(Hypergraph::new(n, converted)?))
        }
        RawInstance::Cgraph { n, colors, edges } => {
            let n = usize_count(n)?;
            let colors: Vec<u32> = colors
                .into_iter()
                .map(|c| {
                    if c <= 0 {
                        Err(ParseError::NonPositiveColor(c))
                    } else {
                        Ok(c as u32)
                    }
                })
                .collect::<Result<_, _>>()?;
            let edges: Vec<(usize, usize)> =
                edges.iter().map(|e| pair(e)).collect::<Result<_, _>>()?;
            Ok(Instance::CGraph(ColoredGraph::new(n, colors, &edges)?))
        }
        RawInstance::Digraph { n, arcs } => {
            let n = usize_count(n)?;
            let arcs: Vec<(usize, usize)> =
                arcs.iter().map(|a| pair(a)).collect::<Result<_, _>>()?;
            Ok(Instance::Digraph(Digraph::new(n, arcs)?))
        }
    }
}

/// Parses a file body: either a single JSON object or one object per line.
pub fn parse_instances(text: &str) -> Result<Vec<Instance>, ParseError> {
    let trimmed = text.trim();
    if let Ok(single) = parse_instance(trimmed) {
        return Ok(vec![single]);
    }
    trimmed
        .lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| parse_instance(line.trim()))
        .collect()
}

/// Normalized JSON serialization of an instance.
pub fn to_json(instance: &Instance) -> String {
    let raw = match instance {
        Instance::Hypergraph(g) => RawInstance::Hypergraph {
            n: g.vertex_count() as i64,
            edges: g
                .edges()
                .iter()
                .map(|e| e.iter().map(|&v| v as i64).collect())
                .collect(),
        },
        Instance::CGraph(g) => RawInstance::Cgraph {
            n: g.vertex_count() as i64,
            colors: g.colors().iter().map(|&c| c as i64).collect(),
            edges: g
                .edge_list()
                .into_iter()
                .map(|(u, v)| vec![u as i64, v as i64])
                .collect(),
        },
        Instance::Digraph(d) => RawInstance::Digraph {
            n: d.vertex_count() as i64,
            arcs: d.arcs().iter().map(|&(u, v)| vec![u as i64, v as i64]).collect(),
        },
    };
    serde_json::to_string(&raw).expect("instances serialize cleanly")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_fixed_point() {
        let inputs = [
            r#"{"type":"hypergraph","n":3,"edges":[[2,1],[1,2,3]]}"#,
            r#"{"type":"cgraph","n":3,"colors":[1,1,2],"edges":[[3,1],[1,2]]}"#,
            r#"{"type":"digraph","n":3,"arcs":[[2,1],[1,3]]}"#,
        ];
        for input in inputs {
            let parsed = parse_instance(input).unwrap();
            let normalized = to_json(&parsed);
            let reparsed = parse_instance(&normalized).unwrap();
            assert_eq!(to_json(&reparsed), normalized);
        }
    }

    #[test]
    fn rejects_invalid_instances() {
        assert!(parse_instance(r#"{"type":"hypergraph","n":-1,"edges":[]}"#).is_err());
        assert!(parse_instance(r#"{"type":"hypergraph","n":2,"edges":[[]]}"#).is_err());
        assert!(parse_instance(r#"{"type":"hypergraph","n":2,"edges":[[3]]}"#).is_err());
        assert!(parse_instance(r#"{"type":"cgraph","n":2,"colors":[1,1],"edges":[[1,1]]}"#).is_err());
        assert!(parse_instance(r#"{"type":"cgraph","n":2,"colors":[1],"edges":[]}"#).is_err());
        assert!(parse_instance(r#"{"type":"digraph","n":2,"arcs":[[1,2],[1,2]]}"#).is_err());
        assert!(parse_instance(r#"{"type":"unknown","n":1}"#).is_err());
    }

    #[test]
    fn parses_json_lines() {
        let body = "{\"type\":\"hypergraph\",\"n\":1,\"edges\":[]}\n{\"type\":\"hypergraph\",\"n\":1,\"edges\":[[1]]}\n";
        let parsed = parse_instances(body).unwrap();
        assert_eq!(parsed.len(), 2);
    }
}
