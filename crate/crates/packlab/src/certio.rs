//! Certificate and partition files.
//!
//! Set files hold one vertex per line, either as a decimal index or, for
//! hypercubes, as an `n`-character binary string. Partition files hold one
//! class per line with members separated by whitespace. `#` starts a
//! comment in both formats. A file is read as binary strings only when a
//! hypercube dimension is supplied and every entry matches it, so decimal
//! files stay readable against any graph.

use thiserror::Error;

use crate::graph::VertexSet;
use crate::hypercube::HypercubeLabeling;
use crate::partition::{Partition, PartitionError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertIoError {
    #[error("line {line}: cannot parse `{token}` as a vertex")]
    BadToken { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range for {universe} vertices")]
    OutOfRange {
        line: usize,
        vertex: u64,
        universe: usize,
    },
    #[error("line {line}: vertex {vertex} listed twice")]
    Duplicate { line: usize, vertex: u32 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        (!stripped.is_empty()).then_some((i + 1, stripped))
    })
}

fn looks_binary(token: &str, dim: usize) -> bool {
    token.len() == dim && token.bytes().all(|b| b == b'0' || b == b'1')
}

fn parse_token(
    line: usize,
    token: &str,
    universe: usize,
    binary: Option<&HypercubeLabeling>,
) -> Result<u32, CertIoError> {
    let value: u64 = match binary {
        Some(labeling) => labeling.parse(token).map_err(|_| CertIoError::BadToken {
            line,
            token: token.to_string(),
        })? as u64,
        None => token.parse().map_err(|_| CertIoError::BadToken {
            line,
            token: token.to_string(),
        })?,
    };
    if value >= universe as u64 {
        return Err(CertIoError::OutOfRange {
            line,
            vertex: value,
            universe,
        });
    }
    Ok(value as u32)
}

/// Decides the file-wide encoding: binary strings when a dimension is given
/// and every token matches it.
fn detect_binary<'a>(
    tokens: impl Iterator<Item = &'a str>,
    dimension: Option<usize>,
) -> Option<HypercubeLabeling> {
    let dim = dimension?;
    let mut any = false;
    for t in tokens {
        any = true;
        if !looks_binary(t, dim) {
            return None;
        }
    }
    any.then(|| HypercubeLabeling::new(dim))
}

/// Reads a vertex set: one vertex per line.
pub fn parse_vertex_set(
    text: &str,
    universe: usize,
    dimension: Option<usize>,
) -> Result<VertexSet, CertIoError> {
    let binary = detect_binary(content_lines(text).map(|(_, t)| t), dimension);
    let mut set = VertexSet::empty(universe);
    for (line, token) in content_lines(text) {
        let v = parse_token(line, token, universe, binary.as_ref())?;
        if !set.insert(v) {
            return Err(CertIoError::Duplicate { line, vertex: v });
        }
    }
    Ok(set)
}

/// Writes a vertex set, one vertex per line, as binary strings when a
/// dimension is given.
pub fn format_vertex_set(set: &VertexSet, dimension: Option<usize>) -> String {
    let mut out = String::new();
    let labeling = dimension.map(HypercubeLabeling::new);
    for v in set.iter() {
        match &labeling {
            Some(l) => out.push_str(&l.label(v)),
            None => out.push_str(&v.to_string()),
        }
        out.push('\n');
    }
    out
}

/// Reads a partition: one class per line, members separated by whitespace.
pub fn parse_partition(
    text: &str,
    universe: usize,
    dimension: Option<usize>,
) -> Result<Partition, CertIoError> {
    let binary = detect_binary(
        content_lines(text).flat_map(|(_, l)| l.split_whitespace()),
        dimension,
    );
    let mut classes = Vec::new();
    for (line, content) in content_lines(text) {
        let mut class = VertexSet::empty(universe);
        for token in content.split_whitespace() {
            let v = parse_token(line, token, universe, binary.as_ref())?;
            if !class.insert(v) {
                return Err(CertIoError::Duplicate { line, vertex: v });
            }
        }
        classes.push(class);
    }
    Ok(Partition::new(universe, classes)?)
}

/// Writes a partition, one class per line.
pub fn format_partition(partition: &Partition, dimension: Option<usize>) -> String {
    let labeling = dimension.map(HypercubeLabeling::new);
    let mut out = String::new();
    for class in partition.classes() {
        let members: Vec<String> = class
            .iter()
            .map(|v| match &labeling {
                Some(l) => l.label(v),
                None => v.to_string(),
            })
            .collect();
        out.push_str(&members.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_round_trip() {
        let set = VertexSet::from_members(10, [1, 4, 9]);
        let text = format_vertex_set(&set, None);
        assert_eq!(text, "1\n4\n9\n");
        assert_eq!(parse_vertex_set(&text, 10, None).unwrap(), set);
    }

    #[test]
    fn binary_round_trip() {
        let set = VertexSet::from_members(8, [0, 5, 7]);
        let text = format_vertex_set(&set, Some(3));
        assert_eq!(text, "000\n101\n111\n");
        assert_eq!(parse_vertex_set(&text, 8, Some(3)).unwrap(), set);
    }

    #[test]
    fn decimal_fallback_when_lengths_differ() {
        // Tokens that are not all dimension-length stay decimal.
        let set = parse_vertex_set("0\n10\n", 16, Some(4)).unwrap();
        assert_eq!(set.to_vec(), vec![0, 10]);
    }

    #[test]
    fn comments_and_errors() {
        assert_eq!(
            parse_vertex_set("# heading\n3\n", 10, None).unwrap().to_vec(),
            vec![3]
        );
        assert!(matches!(
            parse_vertex_set("99\n", 10, None),
            Err(CertIoError::OutOfRange { line: 1, .. })
        ));
        assert!(matches!(
            parse_vertex_set("x\n", 10, None),
            Err(CertIoError::BadToken { .. })
        ));
        assert!(matches!(
            parse_vertex_set("3\n3\n", 10, None),
            Err(CertIoError::Duplicate { .. })
        ));
    }

    #[test]
    fn partition_round_trip() {
        let classes = vec![
            VertexSet::from_members(4, [0, 3]),
            VertexSet::from_members(4, [1, 2]),
        ];
        let p = Partition::new(4, classes).unwrap();
        let text = format_partition(&p, Some(2));
        assert_eq!(text, "00 11\n01 10\n");
        assert_eq!(parse_partition(&text, 4, Some(2)).unwrap(), p);
    }

    #[test]
    fn partition_structure_errors_surface() {
        assert!(matches!(
            parse_partition("0 1\n1 2\n", 3, None),
            Err(CertIoError::Duplicate { .. }) | Err(CertIoError::Partition(_))
        ));
        assert!(matches!(
            parse_partition("0\n", 2, None),
            Err(CertIoError::Partition(PartitionError::Gap { vertex: 1 }))
        ));
    }
}
