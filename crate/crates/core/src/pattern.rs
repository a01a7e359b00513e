//! Patterns over the two-letter abstract alphabet {a, b}: isomorphism,
//! containment, and the t-induced graphs behind t-representability.

use std::fmt;

use itertools::Itertools;

use crate::graph::{Graph, Vertex};
use crate::word::{check_pairs, RepresentationReport, Word};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sym {
    A,
    B,
}

impl Sym {
    fn flip(self) -> Sym {
        match self {
            Sym::A => Sym::B,
            Sym::B => Sym::A,
        }
    }
}

/// A word over {a, b} used as an avoidance criterion. The spelling given at
/// parse time is preserved (it matters for the Kitaev variant); unordered
/// matching tries both letter assignments, so `aab` and `bba` give the same
/// criterion there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    symbols: Vec<Sym>,
}

impl Pattern {
    pub fn new(symbols: Vec<Sym>) -> Result<Pattern> {
        if symbols.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern { symbols })
    }

    /// Accepts both the {a,b} and the {1,2} spellings, e.g. "aab" or "112".
    pub fn parse(text: &str) -> Result<Pattern> {
        let symbols = text
            .chars()
            .map(|c| match c {
                'a' | '1' => Ok(Sym::A),
                'b' | '2' => Ok(Sym::B),
                other => Err(Error::BadPatternSymbol(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Pattern::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[Sym] {
        &self.symbols
    }

    pub fn uses_both_symbols(&self) -> bool {
        self.symbols.windows(2).any(|w| w[0] != w[1])
    }

    /// The same criterion spelled to start with `a`.
    pub fn canonical(&self) -> Pattern {
        if self.symbols[0] == Sym::A {
            self.clone()
        } else {
            Pattern {
                symbols: self.symbols.iter().map(|s| s.flip()).collect(),
            }
        }
    }

    /// The pattern `t[i, j]`: `a -> i`, `b -> j` as a concrete word.
    pub fn substitute(&self, i: Vertex, j: Vertex) -> Word {
        Word::new(
            self.symbols
                .iter()
                .map(|s| match s {
                    Sym::A => i,
                    Sym::B => j,
                })
                .collect(),
        )
    }

    pub fn shape(&self) -> PatternShape {
        classify_pattern(self)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            f.write_str(match s {
                Sym::A => "a",
                Sym::B => "b",
            })?;
        }
        Ok(())
    }
}

/// Exhaustive, mutually exclusive classification of the canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternShape {
    /// a^k: a single repeated symbol.
    Uniform(usize),
    /// a^k b, k >= 1.
    AkB(usize),
    /// a b^k, k >= 1 (k = 1 coincides with AkB(1) and is reported there).
    AbK(usize),
    /// a^k b^l with k, l >= 2.
    AkBl(usize, usize),
    /// a^k b^l a.
    AkBlA(usize, usize),
    /// Anything else.
    Other,
}

pub fn classify_pattern(t: &Pattern) -> PatternShape {
    let canon = t.canonical();
    let mut runs: Vec<(Sym, usize)> = Vec::new();
    for &s in canon.symbols() {
        match runs.last_mut() {
            Some((sym, count)) if *sym == s => *count += 1,
            _ => runs.push((s, 1)),
        }
    }
    match runs.as_slice() {
        [(Sym::A, k)] => PatternShape::Uniform(*k),
        [(Sym::A, k), (Sym::B, 1)] => PatternShape::AkB(*k),
        [(Sym::A, 1), (Sym::B, l)] => PatternShape::AbK(*l),
        [(Sym::A, k), (Sym::B, l)] => PatternShape::AkBl(*k, *l),
        [(Sym::A, k), (Sym::B, l), (Sym::A, 1)] => PatternShape::AkBlA(*k, *l),
        _ => PatternShape::Other,
    }
}

/// First-occurrence rank profile; two words are isomorphic exactly when their
/// profiles coincide.
fn profile(letters: &[Vertex]) -> Vec<usize> {
    letters
        .iter()
        .enumerate()
        .map(|(i, v)| letters[..i].iter().position(|u| u == v).unwrap_or(i))
        .collect()
}

/// Bijective, pattern-preserving correspondence: positions carry equal
/// letters in `u` exactly when they do in `v`.
pub fn is_isomorphic(u: &Word, v: &Word) -> bool {
    u.len() == v.len() && profile(u.letters()) == profile(v.letters())
}

fn window_isomorphic_to(restriction: &Word, target_profile: &[usize]) -> bool {
    let len = target_profile.len();
    restriction
        .letters()
        .windows(len)
        .any(|win| profile(win) == target_profile)
}

/// Does `w` contain the concrete word `u`: some subset of `|alphabet(u)|`
/// letters of `w` whose restriction has a contiguous factor isomorphic to
/// `u`? Subsets are scanned lexicographically with early exit.
pub fn contains_word(w: &Word, u: &Word) -> bool {
    contains_with_profile(w, u.alphabet().len(), &profile(u.letters()))
}

/// Pattern containment: the pattern's alphabet is the abstract {a, b}, so
/// subsets of two letters are scanned even when only one symbol occurs
/// (capped at the word's alphabet size for degenerate single-letter words).
pub fn contains_pattern(w: &Word, t: &Pattern) -> bool {
    let target = profile(t.substitute(0, 1).letters());
    contains_with_profile(w, 2, &target)
}

fn contains_with_profile(w: &Word, subset_size: usize, target_profile: &[usize]) -> bool {
    let mut alphabet = w.alphabet();
    alphabet.sort_unstable();
    let m = subset_size.min(alphabet.len());
    alphabet
        .into_iter()
        .combinations(m)
        .any(|subset| window_isomorphic_to(&w.restrict(&subset.into_iter().collect()), target_profile))
}

/// Does `w|_{xy}` avoid `t` under both assignments of {a, b} to {x, y}?
pub fn pair_avoids(w: &Word, x: Vertex, y: Vertex, t: &Pattern, host: &Graph) -> Result<bool> {
    if x == y {
        return Err(Error::IdenticalPair(host.label(x).to_string()));
    }
    for v in [x, y] {
        if !w.contains_letter(v) {
            return Err(Error::LetterAbsent(host.label(v).to_string()));
        }
    }
    Ok(pair_match_unordered(w, x, y, t).is_none())
}

/// The first factor of `w|_{xy}` matching `t` under either assignment.
fn pair_match_unordered(w: &Word, x: Vertex, y: Vertex, t: &Pattern) -> Option<Word> {
    let r = w.restrict_pair(x, y);
    let fwd = t.substitute(x, y);
    let bwd = t.substitute(y, x);
    r.letters()
        .windows(t.len())
        .find(|win| *win == fwd.letters() || *win == bwd.letters())
        .map(|win| Word::new(win.to_vec()))
}

/// Kitaev's ordered variant: only the assignment sending `a` to the smaller
/// vertex and `b` to the larger is tried. Single-symbol patterns carry no
/// order constraint, so both assignments apply and the variant coincides
/// with the unordered one.
fn pair_match_kitaev(w: &Word, x: Vertex, y: Vertex, u: &Pattern) -> Option<Word> {
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    let r = w.restrict_pair(x, y);
    let fwd = u.substitute(lo, hi);
    let also_flipped = !u.uses_both_symbols();
    let bwd = u.substitute(hi, lo);
    r.letters()
        .windows(u.len())
        .find(|win| *win == fwd.letters() || (also_flipped && *win == bwd.letters()))
        .map(|win| Word::new(win.to_vec()))
}

/// Graph on the distinct letters of `w` with an edge exactly where the pair
/// restriction avoids `t`. For `t = aa` this is the word-representability
/// criterion.
pub fn induced_graph_t(w: &Word, t: &Pattern, host: &Graph) -> Graph {
    induced_graph_by(w, host, |w, x, y| pair_match_unordered(w, x, y, t).is_none())
}

/// The Kitaev-variant induced graph (order-respecting assignment).
pub fn kitaev_induced_graph(w: &Word, u: &Pattern, host: &Graph) -> Graph {
    induced_graph_by(w, host, |w, x, y| pair_match_kitaev(w, x, y, u).is_none())
}

fn induced_graph_by<F>(w: &Word, host: &Graph, edge: F) -> Graph
where
    F: Fn(&Word, Vertex, Vertex) -> bool,
{
    let alphabet = w.alphabet();
    let mut g = Graph::new();
    for &v in &alphabet {
        g.add_vertex(host.label(v)).unwrap();
    }
    for (i, &x) in alphabet.iter().enumerate() {
        for (j, &y) in alphabet.iter().enumerate().skip(i + 1) {
            if edge(w, x, y) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Does `w` t-represent `g`?
pub fn represents_t(w: &Word, g: &Graph, t: &Pattern) -> RepresentationReport {
    check_pairs(w, g, |w, x, y| match pair_match_unordered(w, x, y, t) {
        None => (true, None),
        Some(factor) => (false, Some(factor)),
    })
}

/// Does `w` u-Kitaev-represent `g` (vertex order = declaration order)?
pub fn represents_kitaev(w: &Word, g: &Graph, u: &Pattern) -> RepresentationReport {
    check_pairs(w, g, |w, x, y| match pair_match_kitaev(w, x, y, u) {
        None => (true, None),
        Some(factor) => (false, Some(factor)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Pattern {
        Pattern::parse(s).unwrap()
    }

    fn word(g: &Graph, s: &str) -> Word {
        g.parse_word(s).unwrap()
    }

    #[test]
    fn parse_and_spellings() {
        assert_eq!(p("112"), p("aab"));
        assert_eq!(p("221").canonical(), p("aab"));
        assert_ne!(p("221"), p("aab"));
        assert!(matches!(Pattern::parse("axb"), Err(Error::BadPatternSymbol('x'))));
        assert!(matches!(Pattern::parse(""), Err(Error::EmptyPattern)));
        assert_eq!(p("aaba").to_string(), "aaba");
    }

    #[test]
    fn classification() {
        assert_eq!(p("aaba").shape(), PatternShape::AkBlA(2, 1));
        assert_eq!(p("aab").shape(), PatternShape::AkB(2));
        assert_eq!(p("ab").shape(), PatternShape::AkB(1));
        assert_eq!(p("abb").shape(), PatternShape::AbK(2));
        assert_eq!(p("abbb").shape(), PatternShape::AbK(3));
        assert_eq!(p("aabb").shape(), PatternShape::AkBl(2, 2));
        assert_eq!(p("aaabb").shape(), PatternShape::AkBl(3, 2));
        assert_eq!(p("aa").shape(), PatternShape::Uniform(2));
        assert_eq!(p("a").shape(), PatternShape::Uniform(1));
        assert_eq!(p("aabba").shape(), PatternShape::AkBlA(2, 2));
        assert_eq!(p("abab").shape(), PatternShape::Other);
        assert_eq!(p("aabaa").shape(), PatternShape::Other);
        // canonical form decides: bba reads as aab
        assert_eq!(p("bba").shape(), PatternShape::AkB(2));
    }

    #[test]
    fn isomorphism_examples() {
        let g = Graph::edgeless(9);
        assert!(is_isomorphic(&word(&g, "112134"), &word(&g, "332378")));
        // same profile with a disjoint alphabet
        let mut h = Graph::new();
        for l in ["a", "b", "c", "d"] {
            h.add_vertex(l).unwrap();
        }
        assert!(is_isomorphic(&word(&g, "112134"), &h.parse_word("aabacd").unwrap()));
        assert!(!is_isomorphic(&word(&g, "112"), &word(&g, "121")));
        assert!(!is_isomorphic(&word(&g, "11"), &word(&g, "112")));
    }

    #[test]
    fn containment_examples() {
        let g = Graph::edgeless(3);
        // paper example: w|23 = 2223 has factor 223
        assert!(contains_word(&word(&g, "121223"), &word(&g, "112")));
        // a single letter is contained in any nonempty word
        assert!(contains_pattern(&word(&g, "1"), &p("a")));
        assert!(contains_pattern(&word(&g, "231"), &p("a")));
        // the pattern alphabet is {a,b}, so aa is scanned over pairs
        assert!(!contains_pattern(&word(&g, "1212"), &p("aa")));
        assert!(contains_pattern(&word(&g, "1221"), &p("aa")));
        assert!(contains_pattern(&word(&g, "11"), &p("aa")));
    }

    #[test]
    fn pair_avoidance_examples() {
        let g = Graph::edgeless(4);
        let w121334 = word(&g, "121334");
        assert_eq!(pair_avoids(&w121334, 0, 1, &p("aab"), &g), Ok(true));
        assert_eq!(pair_avoids(&w121334, 0, 2, &p("aab"), &g), Ok(false)); // 1133 contains 113
        // restriction shorter than the pattern avoids trivially
        let xy = word(&g, "12");
        assert_eq!(pair_avoids(&xy, 0, 1, &p("aba"), &g), Ok(true));
        assert!(pair_avoids(&xy, 0, 0, &p("aa"), &g).is_err());
        assert!(pair_avoids(&xy, 0, 2, &p("aa"), &g).is_err());
    }

    #[test]
    fn induced_graph_t_examples() {
        let host = Graph::edgeless(4);
        // Fig. 6: 121334 aab-represents the star centered at 2
        let induced = induced_graph_t(&word(&host, "121334"), &p("aab"), &host);
        let star2 = Graph::parse("edge 1 2\nedge 2 3\nedge 2 4\n").unwrap();
        assert_eq!(induced, star2);
        // 2123 under aba: edges 13 and 23
        let induced = induced_graph_t(&word(&host, "2123"), &p("aba"), &host);
        assert_eq!(induced, Graph::parse("edge 1 3\nedge 2 3\n").unwrap());
        // ab admits only empty graphs
        let induced = induced_graph_t(&word(&host, "3142"), &p("ab"), &host);
        assert_eq!(induced.edge_count(), 0);
    }

    #[test]
    fn kitaev_example_differs_on_one_edge() {
        let host = Graph::edgeless(3);
        let w = word(&host, "2123");
        let kitaev = kitaev_induced_graph(&w, &p("aba"), &host);
        assert_eq!(kitaev, Graph::complete(3));
        let unordered = induced_graph_t(&w, &p("aba"), &host);
        assert!(!unordered.has_edge(
            unordered.vertex_id("1").unwrap(),
            unordered.vertex_id("2").unwrap()
        ));
        // all restrictions of a permutation are too short to match
        let k3 = kitaev_induced_graph(&word(&host, "123"), &p("aa"), &host);
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn represents_t_examples() {
        let star2 = Graph::parse("edge 1 2\nedge 2 3\nedge 2 4\n").unwrap();
        let w = star2.parse_word("121334").unwrap();
        assert!(represents_t(&w, &star2, &p("aab")).represents());

        let k5 = Graph::complete(5);
        assert!(represents_t(&k5.parse_word("12345").unwrap(), &k5, &p("aaba")).represents());

        // single vertex: no pairs to test
        let single = Graph::edgeless(1);
        assert!(represents_t(&single.parse_word("11").unwrap(), &single, &p("aa")).represents());
    }

    #[test]
    fn aa_matches_word_representability() {
        let host = Graph::edgeless(4);
        for text in ["212434", "3312", "1234", "12332414"] {
            let w = word(&host, text);
            assert_eq!(induced_graph_t(&w, &p("aa"), &host), w.induced_graph_11(&host));
        }
    }

    proptest! {
        #[test]
        fn isomorphism_is_an_equivalence(
            a in proptest::collection::vec(0usize..4, 0..10),
            b in proptest::collection::vec(0usize..4, 0..10),
            c in proptest::collection::vec(0usize..4, 0..10),
        ) {
            let (a, b, c) = (Word::new(a), Word::new(b), Word::new(c));
            prop_assert!(is_isomorphic(&a, &a));
            prop_assert_eq!(is_isomorphic(&a, &b), is_isomorphic(&b, &a));
            if is_isomorphic(&a, &b) && is_isomorphic(&b, &c) {
                prop_assert!(is_isomorphic(&a, &c));
            }
        }

        #[test]
        fn pair_avoidance_is_symmetric(
            letters in proptest::collection::vec(0usize..4, 2..16),
            t in "[ab]{1,4}",
        ) {
            let host = Graph::edgeless(4);
            let w = Word::new(letters);
            let t = Pattern::parse(&t).unwrap();
            for x in 0..4 {
                for y in x + 1..4 {
                    if w.contains_letter(x) && w.contains_letter(y) {
                        prop_assert_eq!(
                            pair_avoids(&w, x, y, &t, &host).unwrap(),
                            pair_avoids(&w, y, x, &t, &host).unwrap()
                        );
                    }
                }
            }
        }

        #[test]
        fn reversal_swaps_akb_and_abk(
            letters in proptest::collection::vec(0usize..4, 1..16),
            k in 1usize..4,
        ) {
            let host = Graph::edgeless(4);
            let w = Word::new(letters);
            let akb = Pattern::parse(&format!("{}b", "a".repeat(k))).unwrap();
            let abk = Pattern::parse(&format!("a{}", "b".repeat(k))).unwrap();
            prop_assert_eq!(
                induced_graph_t(&w.reverse(), &abk, &host),
                induced_graph_t(&w, &akb, &host)
            );
        }

        #[test]
        fn ab_only_represents_empty_graphs(
            letters in proptest::collection::vec(0usize..5, 2..16),
        ) {
            let host = Graph::edgeless(5);
            let w = Word::new(letters);
            if w.alphabet().len() >= 2 {
                prop_assert_eq!(induced_graph_t(&w, &Pattern::parse("ab").unwrap(), &host).edge_count(), 0);
            }
        }

        #[test]
        fn kitaev_edges_contain_unordered_edges(
            letters in proptest::collection::vec(0usize..4, 1..14),
            u in "[ab]{1,4}",
        ) {
            let host = Graph::edgeless(4);
            let w = Word::new(letters);
            let u = Pattern::parse(&u).unwrap();
            let unordered = induced_graph_t(&w, &u, &host);
            let kitaev = kitaev_induced_graph(&w, &u, &host);
            for (i, j) in unordered.edges() {
                let x = kitaev.vertex_id(unordered.label(i)).unwrap();
                let y = kitaev.vertex_id(unordered.label(j)).unwrap();
                prop_assert!(kitaev.has_edge(x, y));
            }
        }
    }
}
