//! Simple undirected graphs over labeled vertices.
//!
//! Vertices are identified by their index into the graph's vertex table; the
//! table keeps labels in declaration order, which is the canonical order used
//! everywhere ties must break. Words are stored as index sequences against
//! that table, so the oracle's hot loop compares plain integers.

use std::collections::HashMap;
use std::fmt;

use crate::word::Word;
use crate::{Error, Result};

/// Index into a graph's vertex table.
pub type Vertex = usize;

#[derive(Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Graph with vertices labeled `"1".."n"` and no edges.
    pub fn edgeless(n: usize) -> Self {
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_vertex(&i.to_string()).unwrap();
        }
        g
    }

    /// Complete graph on `"1".."n"`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<Vertex> {
        if label.is_empty() || label.chars().any(|c| c.is_whitespace()) {
            return Err(Error::BadLabel(label.to_string()));
        }
        if self.index.contains_key(label) {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        for row in &mut self.adj {
            row.push(false);
        }
        self.adj.push(vec![false; self.labels.len()]);
        Ok(id)
    }

    /// Declares the vertex if it is new, otherwise returns its id.
    pub fn intern_vertex(&mut self, label: &str) -> Result<Vertex> {
        match self.index.get(label) {
            Some(&id) => Ok(id),
            None => self.add_vertex(label),
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        if self.adj[u][v] {
            return Err(Error::DuplicateEdge(
                self.labels[u].clone(),
                self.labels[v].clone(),
            ));
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u][v]
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_id(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.labels.len()
    }

    /// Edges as `(u, v)` with `u < v`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.labels.len();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| self.adj[u][v]).map(move |v| (u, v)))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].iter().filter(|&&e| e).count()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(u, _)| u)
    }

    /// Connected components as vertex lists in canonical order.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count() == self.vertex_count() - 1
            && self.is_connected()
    }

    /// Connected, every vertex of degree 2: a single cycle.
    pub fn is_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 3
            && self.edge_count() == n
            && self.is_connected()
            && self.vertices().all(|v| self.degree(v) == 2)
    }

    pub fn has_triangle(&self) -> bool {
        let n = self.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u][v] {
                    continue;
                }
                for w in v + 1..n {
                    if self.adj[u][w] && self.adj[v][w] {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Subgraph induced by `verts` (kept in the given order).
    pub fn induced_subgraph(&self, verts: &[Vertex]) -> Graph {
        let mut g = Graph::new();
        for &v in verts {
            g.add_vertex(&self.labels[v]).unwrap();
        }
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adj[u][v] {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    /// Parses the edge-list format: `#` comments, `vertex <label>` lines,
    /// `edge <u> <v>` lines. Endpoints auto-declare vertices in
    /// first-appearance order; duplicate edges are rejected.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut g = Graph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap();
            let err = |msg: &str| Error::GraphParse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            match keyword {
                "vertex" => {
                    let label = tokens.next().ok_or_else(|| err("vertex needs a label"))?;
                    if tokens.next().is_some() {
                        return Err(err("vertex takes exactly one label"));
                    }
                    g.add_vertex(label).map_err(|e| Error::GraphParse {
                        line: lineno + 1,
                        msg: e.to_string(),
                    })?;
                }
                "edge" => {
                    let a = tokens.next().ok_or_else(|| err("edge needs two endpoints"))?;
                    let b = tokens.next().ok_or_else(|| err("edge needs two endpoints"))?;
                    if tokens.next().is_some() {
                        return Err(err("edge takes exactly two endpoints"));
                    }
                    let u = g.intern_vertex(a).map_err(|e| Error::GraphParse {
                        line: lineno + 1,
                        msg: e.to_string(),
                    })?;
                    let v = g.intern_vertex(b).map_err(|e| Error::GraphParse {
                        line: lineno + 1,
                        msg: e.to_string(),
                    })?;
                    g.add_edge(u, v).map_err(|e| Error::GraphParse {
                        line: lineno + 1,
                        msg: e.to_string(),
                    })?;
                }
                other => return Err(err(&format!("unknown directive {other:?}"))),
            }
        }
        Ok(g)
    }

    /// Parses a word against this graph's vertex table. Bare strings (one
    /// character per letter) are accepted only when every label is a single
    /// character; otherwise tokens must be whitespace-separated.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Word::new(Vec::new()));
        }
        let lookup = |tok: &str| {
            self.vertex_id(tok)
                .ok_or_else(|| Error::UnknownVertex(tok.to_string()))
        };
        if trimmed.split_whitespace().nth(1).is_some() {
            let letters = trimmed
                .split_whitespace()
                .map(lookup)
                .collect::<Result<Vec<_>>>()?;
            return Ok(Word::new(letters));
        }
        if self.labels.iter().all(|l| l.chars().count() == 1) {
            let letters = trimmed
                .chars()
                .map(|c| lookup(&c.to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(Word::new(letters))
        } else if self.vertex_id(trimmed).is_some() {
            Ok(Word::new(vec![self.vertex_id(trimmed).unwrap()]))
        } else {
            Err(Error::WordParse(format!(
                "{trimmed:?}: graph has multi-character labels, separate letters with spaces"
            )))
        }
    }

    /// Renders a word over this graph's labels: compact when every label is a
    /// single character, space-separated tokens otherwise.
    pub fn word_string(&self, w: &Word) -> String {
        let compact = self.labels.iter().all(|l| l.chars().count() == 1);
        let sep = if compact { "" } else { " " };
        w.letters()
            .iter()
            .map(|&v| self.labels[v].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// Graphs are equal as labeled vertex/edge sets, irrespective of declaration
/// order.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        let mut a: Vec<&String> = self.labels.iter().collect();
        let mut b: Vec<&String> = other.labels.iter().collect();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
        let name_edges = |g: &Graph| {
            let mut es: Vec<(String, String)> = g
                .edges()
                .map(|(u, v)| {
                    let (x, y) = (g.labels[u].clone(), g.labels[v].clone());
                    if x <= y {
                        (x, y)
                    } else {
                        (y, x)
                    }
                })
                .collect();
            es.sort();
            es
        };
        name_edges(self) == name_edges(other)
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ vertices: {:?}, edges: [", self.labels)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} {}", self.labels[u], self.labels[v])?;
        }
        write!(f, "] }}")
    }
}

/// Decodes a Prüfer sequence over `0..n` into the labeled tree on vertices
/// `"1".."n"`. The empty sequence gives the unique tree on two vertices.
pub fn tree_from_prufer(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::TooFewVertices { need: 2, got: n });
    }
    if seq.len() != n - 2 {
        return Err(Error::WordParse(format!(
            "Prüfer sequence for {n} vertices must have length {}",
            n - 2
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::UnknownVertex(format!("{}", bad + 1)));
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::edgeless(n);
    let mut used = vec![false; n];
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1 && !used[u]).unwrap();
        used[leaf] = true;
        g.add_edge(leaf, v)?;
        degree[v] -= 1;
    }
    let mut last: Vec<Vertex> = (0..n).filter(|&u| !used[u] && degree[u] == 1).collect();
    debug_assert_eq!(last.len(), 2);
    let b = last.pop().unwrap();
    let a = last.pop().unwrap();
    g.add_edge(a, b)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_tree() -> Graph {
        Graph::parse("edge 1 2\nedge 1 3\nedge 3 4\n").unwrap()
    }

    #[test]
    fn parse_declares_in_first_appearance_order() {
        let g = fig1_tree();
        assert_eq!(g.labels(), &["1", "2", "3", "4"]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (2, 3)]);
        assert!(g.is_tree());
    }

    #[test]
    fn parse_rejects_duplicates_and_loops() {
        assert!(matches!(
            Graph::parse("edge 1 2\nedge 2 1\n"),
            Err(Error::GraphParse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("edge 1 1\n"),
            Err(Error::GraphParse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse("vertex a\nvertex a\n"),
            Err(Error::GraphParse { line: 2, .. })
        ));
    }

    #[test]
    fn parse_accepts_isolated_vertices_and_comments() {
        let g = Graph::parse("# a comment\nvertex 3\nedge 1 2  # trailing\n").unwrap();
        assert_eq!(g.labels(), &["3", "1", "2"]);
        assert_eq!(g.edge_count(), 1);
        assert!(!g.is_connected());
    }

    #[test]
    fn word_parsing_modes() {
        let g = fig1_tree();
        let w = g.parse_word("212434").unwrap();
        assert_eq!(w.letters(), &[1, 0, 1, 3, 2, 3]);
        let w2 = g.parse_word("2 1 2 4 3 4").unwrap();
        assert_eq!(w, w2);
        assert!(matches!(g.parse_word("215"), Err(Error::UnknownVertex(_))));

        let mut multi = Graph::new();
        multi.add_vertex("v10").unwrap();
        multi.add_vertex("v2").unwrap();
        assert!(multi.parse_word("v10 v2 v10").is_ok());
        assert!(matches!(multi.parse_word("v10v2"), Err(Error::WordParse(_))));
        let single = multi.parse_word("v10").unwrap();
        assert_eq!(single.letters(), &[0]);
    }

    #[test]
    fn graph_equality_ignores_declaration_order() {
        let a = Graph::parse("edge 1 3\nedge 2 3\n").unwrap();
        let b = Graph::parse("edge 2 3\nedge 1 3\n").unwrap();
        assert_eq!(a, b);
        let c = Graph::parse("edge 1 2\nedge 2 3\n").unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn prufer_decodes_all_trees_on_four_vertices() {
        let mut seen = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                let t = tree_from_prufer(&[a, b], 4).unwrap();
                assert!(t.is_tree());
                if !seen.contains(&t) {
                    seen.push(t);
                }
            }
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn prufer_star_and_path() {
        // all-center sequence gives the star
        let s = tree_from_prufer(&[0, 0, 0], 5).unwrap();
        assert_eq!(s.degree(0), 4);
        assert_eq!(s.edge_count(), 4);
        let p = tree_from_prufer(&[1, 2], 4).unwrap();
        assert!(p.is_tree());
        assert_eq!((0..4).map(|v| p.degree(v)).max(), Some(2));
    }
}
