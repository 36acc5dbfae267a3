use std::collections::HashSet;
use std::fmt::Write as _;

use super::{check_edge, inf_weight, Edge, Graph, GraphError};

/// Parses the edge-list format.
///
/// ```text
/// # comment
/// n 4
/// 0 1 7
/// 2 3
/// ```
///
/// Blank lines and lines starting with `#` are ignored. The header must
/// precede every edge line; edges without a weight get weight 1. Errors
/// carry the 1-based line number.
pub fn load_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut seen = HashSet::new();
    let mut edges: Vec<Edge> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if n.is_some() || fields.len() != 2 {
                return Err(GraphError::Malformed(raw.to_string()).at_line(line_no));
            }
            let count: usize = fields[1]
                .parse()
                .map_err(|_| GraphError::Malformed(raw.to_string()).at_line(line_no))?;
            if count == 0 {
                return Err(GraphError::Empty.at_line(line_no));
            }
            n = Some(count);
            continue;
        }
        let count = n.ok_or_else(|| GraphError::MissingHeader.at_line(line_no))?;
        if fields.len() != 2 && fields.len() != 3 {
            return Err(GraphError::Malformed(raw.to_string()).at_line(line_no));
        }
        let mut nums = [0u64; 3];
        nums[2] = 1;
        for (slot, f) in nums.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| GraphError::Malformed(raw.to_string()).at_line(line_no))?;
        }
        let edge = check_edge(
            count,
            inf_weight(count),
            nums[0] as usize,
            nums[1] as usize,
            nums[2],
        )
        .map_err(|e| e.at_line(line_no))?;
        if !seen.insert((edge.u, edge.v)) {
            return Err(GraphError::DuplicateEdge(edge.u, edge.v).at_line(line_no));
        }
        edges.push(edge);
    }

    let n = n.ok_or(GraphError::MissingHeader)?;
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// Writes `n <count>` followed by one `u v w` line per edge, sorted by
/// `(u, v)`.
pub fn serialize(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 16 * g.m());
    let _ = writeln!(out, "n {}", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Model};
    use proptest::prelude::*;

    #[test]
    fn reads_unweighted_lines() {
        let g = load_edge_list("n 3\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert!(g.edges().iter().all(|e| e.w == 1));
    }

    #[test]
    fn reads_weights() {
        let g = load_edge_list("n 4\n0 1 7\n2 3 9").unwrap();
        let mut ws: Vec<_> = g.edges().iter().map(|e| e.w).collect();
        ws.sort();
        assert_eq!(ws, vec![7, 9]);
        assert_eq!(g.max_degree(), 1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = load_edge_list("# header follows\n\nn 2\n  # edge\n1 0 3\n").unwrap();
        assert_eq!(g.weight(0, 1), Some(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = load_edge_list("n 2\n0 0").unwrap_err();
        assert_eq!(err.line(), Some(2));
        assert!(matches!(
            err,
            GraphError::AtLine { ref source, .. } if **source == GraphError::SelfLoop(0)
        ));

        let err = load_edge_list("n 3\n0 1\n2 1\n1 0").unwrap_err();
        assert_eq!(err.line(), Some(4));
        assert!(err.to_string().contains("duplicate"));

        let err = load_edge_list("n 3\n0 5").unwrap_err();
        assert_eq!(err.line(), Some(2));
        assert!(err.to_string().contains("out of range"));

        let err = load_edge_list("n 3\n0 x").unwrap_err();
        assert_eq!(err.line(), Some(2));

        let err = load_edge_list("0 1\nn 3").unwrap_err();
        assert_eq!(err.line(), Some(1));

        assert_eq!(load_edge_list("# nothing"), Err(GraphError::MissingHeader));
        assert_eq!(load_edge_list("n 2\n0 1 2 3").unwrap_err().line(), Some(2));
    }

    #[test]
    fn serialization_is_sorted() {
        let g = load_edge_list("n 4\n3 2 1\n1 0 4").unwrap();
        assert_eq!(serialize(&g), "n 4\n0 1 4\n2 3 1\n");
    }

    proptest! {
        #[test]
        fn round_trip_generated(n in 4usize..40, p in 0.0f64..1.0, wmax in 1u64..200, seed: u64) {
            let g = generate(&Model::RandomWeighted { p, wmax }, n, seed).unwrap();
            prop_assert_eq!(load_edge_list(&serialize(&g)).unwrap(), g);
        }
    }
}
