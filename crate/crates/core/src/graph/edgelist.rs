//! Plain edge-list text: a header line `n m`, then `m` lines `i j`.

use super::{Graph, GraphError};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, msg: &str| GraphError::EdgeList { line, msg: msg.to_string() };
    let pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(bad(line, "expected two non-negative integers")),
        }
    };
    let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref().take(m) {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(bad(line, "endpoint out of range"));
        }
        if u == v {
            return Err(bad(line, "loop edge"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(hline, "fewer edge lines than declared"));
    }
    if let Some((line, _)) = lines.next() {
        return Err(bad(line, "more edge lines than declared"));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = to_edge_list(&g);
        assert!(t.starts_with("4 4\n"));
        assert_eq!(parse_edge_list(&t).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_edge_list("3 2\n0 1\n1 7\n").unwrap_err();
        assert_eq!(e, GraphError::EdgeList { line: 3, msg: "endpoint out of range".into() });
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n2 2\n").is_err());
    }
}
