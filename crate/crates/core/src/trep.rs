//! Edge-deletion constructions producing t-representants of arbitrary
//! graphs.
//!
//! Every supported shape follows the same scheme: a permutation of the
//! vertices t-represents the complete graph, and a shape-specific rewrite
//! removes one prescribed edge from the induced graph while leaving every
//! other pair untouched. Deleting the non-edges of the target graph one at a
//! time (lexicographically, for reproducible words) yields a t-representant
//! together with a replayable trace.

use crate::graph::{Graph, Vertex};
use crate::pattern::{classify_pattern, pair_avoids, Pattern, PatternShape};
use crate::word::{represents_11, Word};
use crate::{Error, Result};

/// Default cap on builder inputs; the words grow quadratically in the number
/// of deletions and stop being printable long before they stop being
/// computable.
pub const DEFAULT_VERTEX_LIMIT: usize = 12;

/// How one deletion step grew the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Growth {
    Appended(Word),
    Prepended(Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionStep {
    pub edge: (Vertex, Vertex),
    pub growth: Growth,
}

/// Replayable record of a build: applying the steps to `start_word` in order
/// reproduces `final_word`, and each intermediate word t-represents the
/// intermediate graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionTrace {
    pub start_word: Word,
    pub steps: Vec<DeletionStep>,
    pub final_word: Word,
}

impl DeletionTrace {
    pub fn replay(&self) -> Word {
        let mut w = self.start_word.clone();
        for step in &self.steps {
            w = match &step.growth {
                Growth::Appended(seg) => w.concat(seg),
                Growth::Prepended(seg) => seg.concat(&w),
            };
        }
        w
    }
}

fn require_edge_induced(w: &Word, i: Vertex, j: Vertex, t: &Pattern, host: &Graph) -> Result<()> {
    if pair_avoids(w, i, j, t, host)? {
        Ok(())
    } else {
        Err(Error::EdgeNotInduced(
            host.label(i).to_string(),
            host.label(j).to_string(),
        ))
    }
}

fn shape_error(t: &Pattern, expected: &str) -> Error {
    Error::UnsupportedPattern(
        t.to_string(),
        format!("expected a pattern of shape {expected}"),
    )
}

/// Deletion for t = a^k b^l a: append every letter of the reversed final
/// permutation l+1 times, then t[i, j].
pub fn delete_edge_akbla(
    w: &Word,
    i: Vertex,
    j: Vertex,
    t: &Pattern,
    host: &Graph,
) -> Result<Word> {
    let t = t.canonical();
    let PatternShape::AkBlA(_, l) = classify_pattern(&t) else {
        return Err(shape_error(&t, "a^k b^l a"));
    };
    require_edge_induced(w, i, j, &t, host)?;
    let mut tail = Vec::new();
    for &letter in w.final_permutation()?.reverse().letters() {
        tail.extend(std::iter::repeat_n(letter, l + 1));
    }
    tail.extend(t.substitute(i, j).letters());
    Ok(w.concat(&Word::new(tail)))
}

/// Deletion for t = a^k b^l (k, l >= 2): append the final permutation, then
/// t[i, j].
pub fn delete_edge_akbl(
    w: &Word,
    i: Vertex,
    j: Vertex,
    t: &Pattern,
    host: &Graph,
) -> Result<Word> {
    let t = t.canonical();
    let PatternShape::AkBl(..) = classify_pattern(&t) else {
        return Err(shape_error(&t, "a^k b^l with k, l >= 2"));
    };
    require_edge_induced(w, i, j, &t, host)?;
    Ok(w.concat(&w.final_permutation()?).concat(&t.substitute(i, j)))
}

/// Deletion for t = a^k b (k >= 3): prepend i^(k-1) v i j pi(w), with v the
/// ascending permutation of the remaining vertices.
pub fn delete_edge_akb(w: &Word, g: &Graph, i: Vertex, j: Vertex, t: &Pattern) -> Result<Word> {
    let t = t.canonical();
    match classify_pattern(&t) {
        PatternShape::AkB(k) if k >= 3 => {
            require_edge_induced(w, i, j, &t, g)?;
            let mut prefix = vec![i; k - 1];
            prefix.extend(g.vertices().filter(|&v| v != i && v != j));
            prefix.push(i);
            prefix.push(j);
            prefix.extend(w.initial_permutation()?.letters());
            Ok(Word::new(prefix).concat(w))
        }
        _ => Err(shape_error(&t, "a^k b with k >= 3")),
    }
}

/// Deletion for t = a b^k (k >= 3): the mirror image of the a^k b deletion,
/// realized as an append so traces stay replayable. Appends
/// sigma(w) j i rev(v) i^(k-1); the result is exactly the reverse of the
/// a^k b deletion applied to the reversed word.
pub fn delete_edge_abk(w: &Word, g: &Graph, i: Vertex, j: Vertex, t: &Pattern) -> Result<Word> {
    let t = t.canonical();
    match classify_pattern(&t) {
        PatternShape::AbK(k) if k >= 3 => {
            require_edge_induced(w, i, j, &t, g)?;
            let mut tail = w.final_permutation()?.letters().to_vec();
            tail.push(j);
            tail.push(i);
            tail.extend((0..g.vertex_count()).rev().filter(|&v| v != i && v != j));
            tail.extend(vec![i; k - 1]);
            Ok(w.concat(&Word::new(tail)))
        }
        _ => Err(shape_error(&t, "a b^k with k >= 3")),
    }
}

/// If `w` 11-represents G then `w sigma(w)` aab-represents G.
pub fn aab_from_11(w: &Word) -> Result<Word> {
    Ok(w.concat(&w.final_permutation()?))
}

/// Builds a t-representant of `g` for the supported shapes by deleting the
/// non-edges of `g` from a starting permutation, lexicographically.
///
/// For t = aab or abb the construction is only known relative to a
/// word-representant of `g`, which the caller supplies as `seed_11`; t = ab
/// admits exactly the edgeless graphs. `vertex_limit` defaults to
/// [`DEFAULT_VERTEX_LIMIT`] when `None`.
pub fn build_t_representant(
    g: &Graph,
    t: &Pattern,
    seed_11: Option<&Word>,
    vertex_limit: Option<usize>,
) -> Result<(Word, DeletionTrace)> {
    let n = g.vertex_count();
    let limit = vertex_limit.unwrap_or(DEFAULT_VERTEX_LIMIT);
    if n > limit {
        return Err(Error::TooManyVertices { limit, got: n });
    }
    if n == 0 {
        return Err(Error::TooFewVertices { need: 1, got: 0 });
    }
    let t = t.canonical();
    let non_edges = || {
        (0..n).flat_map(|i| (i + 1..n).filter(move |&j| !g.has_edge(i, j)).map(move |j| (i, j)))
    };
    let ascending = Word::new(g.vertices().collect());

    let fixed_point = |word: Word| DeletionTrace {
        start_word: word.clone(),
        steps: Vec::new(),
        final_word: word,
    };

    match classify_pattern(&t) {
        PatternShape::Uniform(_) => Err(Error::UnsupportedPattern(
            t.to_string(),
            "single-letter patterns coincide with word-representability; use the oracle".into(),
        )),
        PatternShape::AkB(1) => {
            // t = ab: every pair of present letters forms an ab factor, so
            // exactly the edgeless graphs are representable, by any
            // permutation.
            if g.edge_count() > 0 {
                Err(Error::NotAbRepresentable)
            } else {
                Ok((ascending.clone(), fixed_point(ascending)))
            }
        }
        shape @ (PatternShape::AkB(2) | PatternShape::AbK(2)) => {
            let Some(seed) = seed_11 else {
                return Err(Error::UnsupportedPattern(
                    t.to_string(),
                    "the a^2 b-representable graphs are not characterized; supply a word \
                     that 11-represents the graph"
                        .into(),
                ));
            };
            if !represents_11(seed, g).represents() {
                return Err(Error::BadSeed);
            }
            let aab_word = aab_from_11(seed)?;
            let word = if matches!(shape, PatternShape::AbK(2)) {
                aab_word.reverse()
            } else {
                aab_word
            };
            Ok((word.clone(), fixed_point(word)))
        }
        PatternShape::Other => Err(Error::UnsupportedPattern(
            t.to_string(),
            "no edge-deletion construction is known for this shape".into(),
        )),
        shape => {
            // the deletion chains; abk mirrors akb and starts from the
            // descending permutation
            let mut word = match shape {
                PatternShape::AbK(_) => ascending.reverse(),
                _ => ascending,
            };
            let start = word.clone();
            let mut steps = Vec::new();
            for (i, j) in non_edges() {
                let next = match shape {
                    PatternShape::AkB(_) => delete_edge_akb(&word, g, i, j, &t)?,
                    PatternShape::AbK(_) => delete_edge_abk(&word, g, i, j, &t)?,
                    PatternShape::AkBl(..) => delete_edge_akbl(&word, i, j, &t, g)?,
                    PatternShape::AkBlA(..) => delete_edge_akbla(&word, i, j, &t, g)?,
                    _ => unreachable!(),
                };
                let growth = if matches!(shape, PatternShape::AkB(_)) {
                    Growth::Prepended(Word::new(next.letters()[..next.len() - word.len()].to_vec()))
                } else {
                    Growth::Appended(Word::new(next.letters()[word.len()..].to_vec()))
                };
                steps.push(DeletionStep { edge: (i, j), growth });
                word = next;
            }
            let trace = DeletionTrace {
                start_word: start,
                steps,
                final_word: word.clone(),
            };
            Ok((word, trace))
        }
    }
}
