//! Word-representable graphs and their generalizations.
//!
//! A word `w` over the vertex set of a graph `G` *word-represents* `G` when
//! two vertices are adjacent exactly if their occurrences alternate in `w`.
//! Alternation is the same as the restriction of `w` to the pair avoiding the
//! pattern `aa`, which generalizes to `t`-representability for any pattern
//! `t` over two abstract letters.
//!
//! The crate provides:
//! - the primitive word operations (restriction, initial/final permutation,
//!   alternation, uniformity) in [`word`],
//! - pattern isomorphism, containment and `t`-induced graphs in [`pattern`],
//! - constructive generators and closed-form counts for minimal-length
//!   representants of trees, stars, cycles, paths and disjoint unions in
//!   [`construct`],
//! - edge-deletion builders producing `t`-representants of arbitrary graphs
//!   in [`trep`],
//! - an exhaustive brute-force oracle in [`oracle`].

pub mod construct;
pub mod graph;
pub mod oracle;
pub mod pattern;
pub mod trep;
pub mod word;

pub use graph::{Graph, Vertex};
pub use pattern::{Pattern, PatternShape};
pub use word::{RepresentationReport, UniformityReport, Word};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word is empty")]
    EmptyWord,
    #[error("pattern is empty")]
    EmptyPattern,
    #[error("invalid pattern symbol {0:?} (expected a, b, 1 or 2)")]
    BadPatternSymbol(char),
    #[error("letter {0} does not occur in the word")]
    LetterAbsent(String),
    #[error("alternation of {0} with itself is undefined")]
    IdenticalPair(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("vertex label {0:?} is empty or contains whitespace")]
    BadLabel(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("{0} {1} is not an edge of the graph")]
    NotAnEdge(String, String),
    #[error("need at least {need} vertices, got {got}")]
    TooFewVertices { need: usize, got: usize },
    #[error("graph has {got} vertices, builder limit is {limit} (raise the limit to override)")]
    TooManyVertices { limit: usize, got: usize },
    #[error("component alphabets overlap on {0}")]
    OverlappingAlphabets(String),
    #[error("edge {0} {1} is not present in the induced graph of the word")]
    EdgeNotInduced(String, String),
    #[error("only empty graphs are ab-representable")]
    NotAbRepresentable,
    #[error("pattern {0} is not supported: {1}")]
    UnsupportedPattern(String, String),
    #[error("the supplied word does not 11-represent the graph")]
    BadSeed,
    #[error("invalid graph file, line {line}: {msg}")]
    GraphParse { line: usize, msg: String },
    #[error("invalid word: {0}")]
    WordParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
