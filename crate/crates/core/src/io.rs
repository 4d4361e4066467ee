//! File formats: PACE-2017 `.gr` graphs and `.td` tree decompositions
//! (1-indexed), a JSON graph form (0-indexed), and JSON witness schemas for
//! tassels, hassles and arrays.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treewidth::TreeDecomposition;
use serde::{Deserialize, Serialize};

/// Canonical `.gr` serialization: header then edges in ascending order,
/// 1-indexed. `parse_gr(write_gr(g))` reproduces `g` id-for-id, and writing
/// the parse of a canonical file reproduces it byte-for-byte.
pub fn write_gr(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p tw {} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut m = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        if line.starts_with('p') {
            if n.is_some() {
                return Err(Error::Parse(format!("line {}: duplicate header", lineno + 1)));
            }
            let (p, tw) = (tok.next(), tok.next());
            if p != Some("p") || tw != Some("tw") {
                return Err(Error::Parse(format!("line {}: expected 'p tw n m'", lineno + 1)));
            }
            n = Some(parse_num(tok.next(), lineno)?);
            m = parse_num(tok.next(), lineno)?;
            continue;
        }
        let u: usize = parse_num(tok.next(), lineno)?;
        let v: usize = parse_num(tok.next(), lineno)?;
        if u == 0 || v == 0 {
            return Err(Error::Parse(format!("line {}: ids are 1-indexed", lineno + 1)));
        }
        edges.push((u - 1, v - 1));
    }
    let n = n.ok_or_else(|| Error::Parse("missing 'p tw' header".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promises {} edges, found {}",
            m,
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

fn parse_num(tok: Option<&str>, lineno: usize) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse(format!("line {}: missing field", lineno + 1)))?
        .parse()
        .map_err(|e| Error::Parse(format!("line {}: {}", lineno + 1, e)))
}

/// PACE `.td`: `s td <#bags> <width+1> <n>`, bag lines, tree edge lines.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let max_bag = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    out.push_str(&format!("s td {} {} {}\n", td.bags.len(), max_bag, n));
    for (i, bag) in td.bags.iter().enumerate() {
        let ids: Vec<String> = bag.iter().map(|v| (v + 1).to_string()).collect();
        if ids.is_empty() {
            out.push_str(&format!("b {}\n", i + 1));
        } else {
            out.push_str(&format!("b {} {}\n", i + 1, ids.join(" ")));
        }
    }
    for &(a, b) in &td.tree_edges {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    let mut header: Option<(usize, usize, usize)> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        if line.starts_with('s') {
            let (s, td) = (tok.next(), tok.next());
            if s != Some("s") || td != Some("td") {
                return Err(Error::Parse(format!("line {}: expected 's td'", lineno + 1)));
            }
            let bags_n = parse_num(tok.next(), lineno)?;
            let width1 = parse_num(tok.next(), lineno)?;
            let n = parse_num(tok.next(), lineno)?;
            header = Some((bags_n, width1, n));
            bags = vec![Vec::new(); bags_n];
            continue;
        }
        if line.starts_with('b') {
            tok.next();
            let idx: usize = parse_num(tok.next(), lineno)?;
            let mut bag = Vec::new();
            for t in tok {
                let v: usize = t
                    .parse()
                    .map_err(|e| Error::Parse(format!("line {}: {}", lineno + 1, e)))?;
                bag.push(v - 1);
            }
            bag.sort_unstable();
            if idx == 0 || idx > bags.len() {
                return Err(Error::Parse(format!("line {}: bag index out of range", lineno + 1)));
            }
            bags[idx - 1] = bag;
            continue;
        }
        let a: usize = parse_num(tok.next(), lineno)?;
        let b: usize = parse_num(tok.next(), lineno)?;
        tree_edges.push((a - 1, b - 1));
    }
    let (_, _, n) = header.ok_or_else(|| Error::Parse("missing 's td' header".into()))?;
    Ok((TreeDecomposition { bags, tree_edges }, n))
}

/// JSON graph form, 0-indexed.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl JsonGraph {
    pub fn from_graph(g: &Graph) -> Self {
        JsonGraph {
            n: g.vertex_count(),
            edges: g.edges(),
            labels: g.labels().map(|l| l.to_vec()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, &self.edges)?;
        Ok(match &self.labels {
            Some(l) if l.len() == self.n => g.with_labels(l.clone()),
            _ => g,
        })
    }
}

/// JSON witness schema for the labeled structures, stored beside the `.gr`
/// graph. `paths` doubles as the walk list for hassles.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JsonWitness {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neck: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walks: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub apexes: Option<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn gr_roundtrip_bit_exact() {
        let g = cycle(5);
        let text = write_gr(&g);
        let back = parse_gr(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_gr(&back), text);
    }

    #[test]
    fn gr_accepts_comments_and_rejects_bad_counts() {
        let ok = "c a comment\np tw 3 2\n1 2\nc mid\n2 3\n";
        let g = parse_gr(ok).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);

        let bad = "p tw 3 5\n1 2\n";
        assert!(parse_gr(bad).is_err());
    }

    #[test]
    fn json_graph_roundtrip() {
        let g = cycle(4).with_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()]);
        let j = JsonGraph::from_graph(&g);
        let s = serde_json::to_string(&j).unwrap();
        let back: JsonGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
    }
}
