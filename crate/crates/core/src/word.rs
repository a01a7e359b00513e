//! Words over a graph's vertex table and the primitive operations on them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::{Error, Result};

/// A finite sequence of vertex ids. All operations are pure; cloning is cheap
/// at the scales this crate targets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Vertex>,
}

impl Word {
    pub fn new(letters: Vec<Vertex>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains_letter(&self, v: Vertex) -> bool {
        self.letters.contains(&v)
    }

    /// Distinct letters in first-occurrence order.
    pub fn alphabet(&self) -> Vec<Vertex> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &v in &self.letters {
            if seen.insert(v) {
                out.push(v);
            }
        }
        out
    }

    /// Restriction `w|_S`: the subsequence of letters lying in `S`.
    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> Word {
        Word::new(
            self.letters
                .iter()
                .copied()
                .filter(|v| keep.contains(v))
                .collect(),
        )
    }

    /// Restriction to an unordered pair, the common case.
    pub fn restrict_pair(&self, x: Vertex, y: Vertex) -> Word {
        Word::new(
            self.letters
                .iter()
                .copied()
                .filter(|&v| v == x || v == y)
                .collect(),
        )
    }

    /// Initial permutation π(w): keep only the leftmost occurrence of each
    /// letter.
    pub fn initial_permutation(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word::new(self.alphabet()))
    }

    /// Final permutation σ(w): keep only the rightmost occurrence of each
    /// letter.
    pub fn final_permutation(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut rev: Vec<Vertex> = self.reverse().alphabet();
        rev.reverse();
        Ok(Word::new(rev))
    }

    pub fn reverse(&self) -> Word {
        Word::new(self.letters.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    /// Do `x` and `y` alternate in the word? Errors when `x == y` or when
    /// either letter is absent: alternation is only defined for letters that
    /// occur.
    pub fn alternates(&self, x: Vertex, y: Vertex, host: &Graph) -> Result<bool> {
        if x == y {
            return Err(Error::IdenticalPair(host.label(x).to_string()));
        }
        for v in [x, y] {
            if !self.contains_letter(v) {
                return Err(Error::LetterAbsent(host.label(v).to_string()));
            }
        }
        Ok(self.alternates_unchecked(x, y))
    }

    /// Alternation test without the presence precondition; absent letters
    /// yield `true` vacuously for an empty/singleton restriction. Internal
    /// helpers that have already checked presence use this.
    pub(crate) fn alternates_unchecked(&self, x: Vertex, y: Vertex) -> bool {
        let mut prev = None;
        for &v in &self.letters {
            if v != x && v != y {
                continue;
            }
            if prev == Some(v) {
                return false;
            }
            prev = Some(v);
        }
        true
    }

    /// Multiplicity report: `k` when every letter of the alphabet occurs
    /// exactly `k` times.
    pub fn uniformity(&self) -> Result<UniformityReport> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let alphabet = self.alphabet();
        let k = self.letters.iter().filter(|&&v| v == alphabet[0]).count();
        for &a in &alphabet[1..] {
            if self.letters.iter().filter(|&&v| v == a).count() != k {
                return Ok(UniformityReport { k: None });
            }
        }
        Ok(UniformityReport { k: Some(k) })
    }

    /// The graph this word 11-represents: vertices are the word's distinct
    /// letters (labels from `host`), and `xy` is an edge exactly when `x` and
    /// `y` alternate.
    pub fn induced_graph_11(&self, host: &Graph) -> Graph {
        let alphabet = self.alphabet();
        let mut g = Graph::new();
        for &v in &alphabet {
            g.add_vertex(host.label(v)).unwrap();
        }
        for (i, &x) in alphabet.iter().enumerate() {
            for (j, &y) in alphabet.iter().enumerate().skip(i + 1) {
                if self.alternates_unchecked(x, y) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UniformityReport {
    /// `Some(k)` when the word is k-uniform.
    pub k: Option<usize>,
}

impl UniformityReport {
    pub fn is_uniform(&self) -> bool {
        self.k.is_some()
    }
}

/// A pair of vertices on which verification failed, with the witness
/// restriction and, for missing edges, the offending factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairFault {
    pub x: String,
    pub y: String,
    /// `w` restricted to the pair, rendered over the graph's labels.
    pub restriction: String,
    /// For a missing edge: the contiguous factor of the restriction that
    /// breaks the criterion (an adjacent repeat for alternation, a pattern
    /// match otherwise). Spurious edges have no factor; the restriction
    /// itself is the witness.
    pub factor: Option<String>,
}

/// Verdict of checking a word against a graph, with per-pair witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    /// Vertices of the graph that never occur in the word.
    pub missing_vertices: Vec<String>,
    /// Pairs the word connects that are not edges of the graph.
    pub spurious_edges: Vec<PairFault>,
    /// Graph edges the word fails to realize.
    pub missing_edges: Vec<PairFault>,
}

impl RepresentationReport {
    pub fn represents(&self) -> bool {
        self.missing_vertices.is_empty()
            && self.spurious_edges.is_empty()
            && self.missing_edges.is_empty()
    }
}

/// Does `w` word-represent `g` (the pattern-`aa` criterion)?
pub fn represents_11(w: &Word, g: &Graph) -> RepresentationReport {
    check_pairs(w, g, |w, x, y| {
        if w.alternates_unchecked(x, y) {
            (true, None)
        } else {
            (false, first_repeat_factor(w, x, y))
        }
    })
}

fn first_repeat_factor(w: &Word, x: Vertex, y: Vertex) -> Option<Word> {
    let r = w.restrict_pair(x, y);
    r.letters()
        .windows(2)
        .find(|win| win[0] == win[1])
        .map(|win| Word::new(win.to_vec()))
}

/// Shared driver for the representation checks: `edge_test` decides whether
/// the word realizes the pair as an edge, returning an optional offending
/// factor when it does not.
pub(crate) fn check_pairs<F>(w: &Word, g: &Graph, edge_test: F) -> RepresentationReport
where
    F: Fn(&Word, Vertex, Vertex) -> (bool, Option<Word>),
{
    let missing_vertices: Vec<String> = g
        .vertices()
        .filter(|&v| !w.contains_letter(v))
        .map(|v| g.label(v).to_string())
        .collect();
    let mut spurious_edges = Vec::new();
    let mut missing_edges = Vec::new();
    let n = g.vertex_count();
    for x in 0..n {
        if !w.contains_letter(x) {
            continue;
        }
        for y in x + 1..n {
            if !w.contains_letter(y) {
                continue;
            }
            let (induced, factor) = edge_test(w, x, y);
            if induced == g.has_edge(x, y) {
                continue;
            }
            let fault = PairFault {
                x: g.label(x).to_string(),
                y: g.label(y).to_string(),
                restriction: g.word_string(&w.restrict_pair(x, y)),
                factor: factor.map(|f| g.word_string(&f)),
            };
            if induced {
                spurious_edges.push(fault);
            } else {
                missing_edges.push(fault);
            }
        }
    }
    RepresentationReport {
        missing_vertices,
        spurious_edges,
        missing_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fig1_tree() -> Graph {
        Graph::parse("edge 1 2\nedge 1 3\nedge 3 4\n").unwrap()
    }

    fn w(g: &Graph, s: &str) -> Word {
        g.parse_word(s).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let g = Graph::edgeless(5);
        let word = w(&g, "132435213");
        let keep: BTreeSet<Vertex> = [0, 1].into_iter().collect();
        assert_eq!(g.word_string(&word.restrict(&keep)), "1221");
        // identity restriction
        let all: BTreeSet<Vertex> = word.alphabet().into_iter().collect();
        assert_eq!(word.restrict(&all), word);
        // positional scan of 212434
        let word = w(&g, "212434");
        let keep: BTreeSet<Vertex> = [2, 3].into_iter().collect();
        assert_eq!(g.word_string(&word.restrict(&keep)), "434");
        // empty S yields the empty word
        assert!(word.restrict(&BTreeSet::new()).is_empty());
    }

    #[test]
    fn initial_and_final_permutation_examples() {
        let g = Graph::edgeless(5);
        assert_eq!(
            g.word_string(&w(&g, "132435213").initial_permutation().unwrap()),
            "13245"
        );
        assert_eq!(
            g.word_string(&w(&g, "2124341234").initial_permutation().unwrap()),
            "2143"
        );
        assert_eq!(
            g.word_string(&w(&g, "132435213").final_permutation().unwrap()),
            "45213"
        );
        assert_eq!(
            g.word_string(&w(&g, "212434").final_permutation().unwrap()),
            "1234"
        );
        // permutations are fixed points
        let p = w(&g, "35142");
        assert_eq!(p.initial_permutation().unwrap(), p);
        assert_eq!(p.final_permutation().unwrap(), p);
        assert_eq!(Word::new(vec![]).initial_permutation(), Err(Error::EmptyWord));
        assert_eq!(Word::new(vec![]).final_permutation(), Err(Error::EmptyWord));
    }

    #[test]
    fn alternation_examples() {
        let g = fig1_tree();
        let word = w(&g, "212434");
        assert_eq!(word.alternates(0, 1, &g), Ok(true)); // w|12 = 212
        assert_eq!(word.alternates(0, 3, &g), Ok(false)); // w|14 = 144
        let edge = w(&g, "12");
        assert_eq!(edge.alternates(0, 1, &g), Ok(true));
        // errors: identical pair, absent letter
        assert_eq!(
            word.alternates(0, 0, &g),
            Err(Error::IdenticalPair("1".into()))
        );
        assert_eq!(
            edge.alternates(0, 2, &g),
            Err(Error::LetterAbsent("3".into()))
        );
    }

    #[test]
    fn uniformity_examples() {
        let g = Graph::edgeless(4);
        assert_eq!(w(&g, "12332414").uniformity().unwrap().k, Some(2));
        assert_eq!(w(&g, "1234").uniformity().unwrap().k, Some(1));
        assert_eq!(w(&g, "212434").uniformity().unwrap().k, None);
    }

    #[test]
    fn induced_graph_examples() {
        let g = fig1_tree();
        assert_eq!(w(&g, "212434").induced_graph_11(&g), g);
        // a permutation induces the complete graph
        let k4 = Graph::complete(4);
        assert_eq!(w(&k4, "3142").induced_graph_11(&k4), k4);
        // 3312 -> single edge 12 plus isolated 3
        let host = Graph::edgeless(3);
        let induced = w(&host, "3312").induced_graph_11(&host);
        let expected = Graph::parse("vertex 3\nedge 1 2\n").unwrap();
        assert_eq!(induced, expected);
    }

    #[test]
    fn represents_11_examples() {
        let g = fig1_tree();
        assert!(represents_11(&w(&g, "212434"), &g).represents());

        let edge = Graph::parse("edge 1 2\n").unwrap();
        assert!(represents_11(&w(&edge, "12"), &edge).represents());

        let k4 = Graph::complete(4);
        let report = represents_11(&k4.parse_word("212434").unwrap(), &k4);
        assert!(!report.represents());
        assert!(report
            .missing_edges
            .iter()
            .any(|f| (f.x.as_str(), f.y.as_str()) == ("1", "4")));

        // missing vertices are reported
        let report = represents_11(&w(&g, "12"), &g);
        assert_eq!(report.missing_vertices, vec!["3", "4"]);
    }

    #[test]
    fn witness_factors_are_concrete() {
        let g = Graph::parse("edge 1 2\n").unwrap();
        let report = represents_11(&w(&g, "1122"), &g);
        let fault = &report.missing_edges[0];
        assert_eq!(fault.restriction, "1122");
        assert_eq!(fault.factor.as_deref(), Some("11"));
    }

    #[test]
    fn single_and_triple_occurrence_rules() {
        let g = Graph::edgeless(2);
        // x three times, y once: never alternates
        let word = w(&g, "1121");
        assert_eq!(word.alternates(0, 1, &g), Ok(false));
        // both once: always alternates
        let word = w(&g, "21");
        assert_eq!(word.alternates(0, 1, &g), Ok(true));
    }

    proptest! {
        #[test]
        fn restriction_composes_as_intersection(
            letters in proptest::collection::vec(0usize..6, 0..24),
            s in proptest::collection::btree_set(0usize..6, 0..6),
            t in proptest::collection::btree_set(0usize..6, 0..6),
        ) {
            let word = Word::new(letters);
            let both: BTreeSet<Vertex> = s.intersection(&t).copied().collect();
            prop_assert_eq!(word.restrict(&s).restrict(&t), word.restrict(&both));
        }

        #[test]
        fn initial_of_reverse_is_reverse_of_final(
            letters in proptest::collection::vec(0usize..6, 1..24),
        ) {
            let word = Word::new(letters);
            prop_assert_eq!(
                word.reverse().initial_permutation().unwrap(),
                word.final_permutation().unwrap().reverse()
            );
        }

        #[test]
        fn appending_final_permutation_preserves_induced_graph(
            letters in proptest::collection::vec(0usize..5, 1..20),
        ) {
            let host = Graph::edgeless(5);
            let word = Word::new(letters);
            let extended = word.concat(&word.final_permutation().unwrap());
            prop_assert_eq!(extended.induced_graph_11(&host), word.induced_graph_11(&host));
        }

        #[test]
        fn multiplicity_rules_for_alternation(
            letters in proptest::collection::vec(0usize..4, 2..20),
        ) {
            let word = Word::new(letters);
            let host = Graph::edgeless(4);
            for x in 0..4 {
                for y in 0..4 {
                    if x == y { continue; }
                    let cx = word.letters().iter().filter(|&&v| v == x).count();
                    let cy = word.letters().iter().filter(|&&v| v == y).count();
                    if cx == 0 || cy == 0 { continue; }
                    let alt = word.alternates(x, y, &host).unwrap();
                    if cx >= 3 && cy == 1 {
                        prop_assert!(!alt);
                    }
                    if cx == 1 && cy == 1 {
                        prop_assert!(alt);
                    }
                    // alternation forces multiplicities to differ by at most one
                    if alt {
                        prop_assert!(cx.abs_diff(cy) <= 1);
                    }
                }
            }
        }
    }
}
