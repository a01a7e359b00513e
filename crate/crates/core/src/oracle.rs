//! Exhaustive, deterministic brute-force search for minimal-length
//! (optionally k-uniform) t-representants: the ground truth every formula
//! and constructive enumerator is checked against.
//!
//! The search runs length by length. At each length candidates are
//! enumerated in lexicographic order by a DFS over letters; the per-pair
//! restriction suffixes are maintained incrementally as bit strings, so a
//! complete candidate is verified with one mask comparison. The space is
//! partitioned by first letter into `|V|` fixed buckets; workers drain the
//! buckets and results merge in bucket order, which makes the outcome
//! independent of the worker count. Each bucket gets an equal share of the
//! exploration budget for the same reason.
//!
//! Pruning never changes results, only work: a prefix is abandoned when (a)
//! the remaining positions cannot cover the still-missing letters, or (b)
//! some pair that must be an edge already contains the pattern in its
//! restriction. Containment only grows as letters are appended, so no
//! completion of such a prefix can verify; both tests are covered by the
//! pruning-on/off differential test.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::graph::{Graph, Vertex};
use crate::pattern::Pattern;
use crate::word::Word;
use crate::{Error, Result};

/// Pair masks are u128, so the oracle handles up to 16 vertices; well past
/// the sizes exhaustive search can finish anyway.
const MAX_ORACLE_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Stop at the lexicographically first verifying word of minimal length.
    First,
    /// Collect every verifying word at the first length that has one.
    AllMinimal,
    /// Collect every verifying word of exactly this length.
    AllAtLength(usize),
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub pattern: Pattern,
    pub max_len: usize,
    pub uniform_k: Option<usize>,
    pub mode: SearchMode,
    pub threads: usize,
    pub prune: bool,
    pub max_explored: u64,
}

impl SearchConfig {
    /// Defaults: pattern aa, lengths up to 2|V|, all-minimal, one thread,
    /// pruning on, a budget of 10^9 candidates.
    pub fn new(g: &Graph) -> Self {
        SearchConfig {
            pattern: Pattern::parse("aa").unwrap(),
            max_len: 2 * g.vertex_count().max(1),
            uniform_k: None,
            mode: SearchMode::AllMinimal,
            threads: 1,
            prune: true,
            max_explored: 1_000_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Common length of `words` when any were found. Without `truncated`
    /// this is the true minimal length.
    pub ell: Option<usize>,
    pub words: Vec<Word>,
    /// Complete candidates verified.
    pub explored: u64,
    /// The exploration budget ran out; absence of words is then no claim.
    pub truncated: bool,
}

fn pair_index(n: usize, x: Vertex, y: Vertex) -> usize {
    debug_assert!(x < y);
    x * n - x * (x + 1) / 2 + (y - x - 1)
}

/// Per-bucket DFS state. Pair restrictions are tracked as bit strings
/// (bit = letter equals the larger vertex of the pair) clipped to the
/// pattern length; `violated` accumulates pairs whose restriction has
/// contained the pattern.
struct Dfs {
    n: usize,
    len: usize,
    t_len: usize,
    window_mask: u64,
    /// Pattern bits under a -> smaller, b -> larger, and the complement.
    enc_fwd: u64,
    enc_bwd: u64,
    /// Pairs that are edges of the target graph.
    edge_mask: u128,
    /// Expected `violated` value of a verifying candidate: the non-edges.
    target_mask: u128,
    uniform_k: Option<usize>,
    prune: bool,
    budget: u64,
    first_only: bool,

    letters: Vec<Vertex>,
    counts: Vec<usize>,
    missing: usize,
    bits: Vec<u64>,
    plen: Vec<u64>,
    violated: u128,
    saved_violated: Vec<u128>,
    saved_bits: Vec<Vec<u64>>,
    saved_plen: Vec<Vec<u64>>,

    explored: u64,
    truncated: bool,
    hits: Vec<Vec<Vertex>>,
}

struct SearchContext {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Dfs {
    fn new(ctx: &SearchContext, cfg: &SearchConfig, len: usize, budget: u64) -> Dfs {
        let n = ctx.n;
        let t = cfg.pattern.canonical();
        let t_len = t.len();
        let mut enc_fwd = 0u64;
        for s in t.symbols() {
            enc_fwd = (enc_fwd << 1) | u64::from(matches!(s, crate::pattern::Sym::B));
        }
        let window_mask = if t_len >= 64 { u64::MAX } else { (1 << t_len) - 1 };
        let enc_bwd = !enc_fwd & window_mask;
        let pairs = n * (n - 1) / 2;
        let mut edge_mask = 0u128;
        for &(u, v) in &ctx.edges {
            edge_mask |= 1 << pair_index(n, u, v);
        }
        let all_pairs: u128 = if pairs == 128 { u128::MAX } else { (1 << pairs) - 1 };
        Dfs {
            n,
            len,
            t_len,
            window_mask,
            enc_fwd,
            enc_bwd,
            edge_mask,
            target_mask: all_pairs & !edge_mask,
            uniform_k: cfg.uniform_k,
            prune: cfg.prune,
            budget,
            first_only: matches!(cfg.mode, SearchMode::First),
            letters: Vec::with_capacity(len),
            counts: vec![0; n],
            missing: n,
            bits: vec![0; pairs],
            plen: vec![0; pairs],
            violated: 0,
            saved_violated: vec![0; len],
            saved_bits: vec![vec![0; n]; len],
            saved_plen: vec![vec![0; n]; len],
            explored: 0,
            truncated: false,
            hits: Vec::new(),
        }
    }

    /// Appends `v`, updating pair states; returns false when pruning rules
    /// out every completion.
    fn push(&mut self, v: Vertex) -> bool {
        let depth = self.letters.len();
        self.saved_violated[depth] = self.violated;
        for y in 0..self.n {
            if y == v {
                continue;
            }
            let (lo, hi) = if v < y { (v, y) } else { (y, v) };
            let p = pair_index(self.n, lo, hi);
            self.saved_bits[depth][y] = self.bits[p];
            self.saved_plen[depth][y] = self.plen[p];
            self.bits[p] = ((self.bits[p] << 1) | u64::from(v == hi)) & self.window_mask;
            self.plen[p] += 1;
            if self.plen[p] >= self.t_len as u64
                && (self.bits[p] == self.enc_fwd || self.bits[p] == self.enc_bwd)
            {
                self.violated |= 1 << p;
            }
        }
        if self.counts[v] == 0 {
            self.missing -= 1;
        }
        self.counts[v] += 1;
        self.letters.push(v);

        if self.prune {
            if self.violated & self.edge_mask != 0 {
                return false;
            }
            if self.missing > self.len - self.letters.len() {
                return false;
            }
        }
        true
    }

    fn pop(&mut self) {
        let v = self.letters.pop().unwrap();
        self.counts[v] -= 1;
        if self.counts[v] == 0 {
            self.missing += 1;
        }
        let depth = self.letters.len();
        self.violated = self.saved_violated[depth];
        for y in 0..self.n {
            if y == v {
                continue;
            }
            let (lo, hi) = if v < y { (v, y) } else { (y, v) };
            let p = pair_index(self.n, lo, hi);
            self.bits[p] = self.saved_bits[depth][y];
            self.plen[p] = self.saved_plen[depth][y];
        }
    }

    /// Returns false when the bucket should stop (budget or first-hit).
    fn walk(&mut self) -> bool {
        if self.letters.len() == self.len {
            self.explored += 1;
            if self.missing == 0 && self.violated == self.target_mask {
                self.hits.push(self.letters.clone());
                if self.first_only {
                    return false;
                }
            }
            if self.explored >= self.budget {
                self.truncated = true;
                return false;
            }
            return true;
        }
        for v in 0..self.n {
            if let Some(k) = self.uniform_k {
                if self.counts[v] == k {
                    continue;
                }
            }
            let viable = self.push(v);
            let keep_going = if viable { self.walk() } else { true };
            self.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
}

struct BucketOutcome {
    hits: Vec<Vec<Vertex>>,
    explored: u64,
    truncated: bool,
}

/// Runs all first-letter buckets at one length, using up to `threads`
/// workers, and merges in bucket order.
fn run_length(
    ctx: &SearchContext,
    cfg: &SearchConfig,
    len: usize,
    budget_per_bucket: u64,
) -> BucketOutcome {
    let n = ctx.n;
    let outcomes: Mutex<Vec<Option<BucketOutcome>>> = Mutex::new((0..n).map(|_| None).collect());
    let next_bucket = AtomicUsize::new(0);
    let workers = cfg.threads.max(1).min(n);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let bucket = next_bucket.fetch_add(1, Ordering::Relaxed);
                if bucket >= n {
                    break;
                }
                let mut dfs = Dfs::new(ctx, cfg, len, budget_per_bucket);
                // a root-pruned bucket has no completions worth visiting
                if dfs.push(bucket) {
                    dfs.walk();
                }
                let outcome = BucketOutcome {
                    hits: dfs.hits,
                    explored: dfs.explored,
                    truncated: dfs.truncated,
                };
                outcomes.lock().unwrap()[bucket] = Some(outcome);
            });
        }
    });
    let mut merged = BucketOutcome {
        hits: Vec::new(),
        explored: 0,
        truncated: false,
    };
    for outcome in outcomes.into_inner().unwrap() {
        let outcome = outcome.expect("every bucket ran");
        merged.hits.extend(outcome.hits);
        merged.explored += outcome.explored;
        merged.truncated |= outcome.truncated;
    }
    merged
}

/// Exhaustive search for minimal-length representants of `g` under the
/// configured pattern. Lengths run from |V| to `max_len` (k-uniform mode
/// pins the length to k|V|); the first length with a verifying word yields
/// the result. A budget-exhausted search reports `truncated` rather than
/// claiming non-representability.
pub fn search_min_representants(g: &Graph, cfg: &SearchConfig) -> Result<SearchResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::TooFewVertices { need: 1, got: 0 });
    }
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::TooManyVertices {
            limit: MAX_ORACLE_VERTICES,
            got: n,
        });
    }
    let ctx = SearchContext {
        n,
        edges: g.edges().collect(),
    };
    let mut lengths: Vec<usize> = match (cfg.mode, cfg.uniform_k) {
        (SearchMode::AllAtLength(l), _) => vec![l],
        (_, Some(k)) => vec![k * n],
        (_, None) => (n..=cfg.max_len).collect(),
    };
    // words shorter than |V| cannot contain every vertex
    lengths.retain(|&l| l >= n);
    let budget_per_bucket = (cfg.max_explored / n as u64).max(1);

    let mut explored = 0u64;
    let mut truncated = false;
    for len in lengths {
        let outcome = run_length(&ctx, cfg, len, budget_per_bucket);
        explored += outcome.explored;
        truncated |= outcome.truncated;
        if !outcome.hits.is_empty() {
            let mut words: Vec<Word> = outcome.hits.into_iter().map(Word::new).collect();
            words.sort();
            if matches!(cfg.mode, SearchMode::First) {
                words.truncate(1);
            }
            return Ok(SearchResult {
                ell: Some(len),
                words,
                explored,
                truncated,
            });
        }
    }
    Ok(SearchResult {
        ell: None,
        words: Vec::new(),
        explored,
        truncated,
    })
}

/// All k-uniform words over V(G) that word-represent G (pattern aa),
/// enumerated as multiset permutations in lexicographic order.
pub fn count_uniform_representants(g: &Graph, k: usize) -> Result<(usize, Vec<Word>)> {
    let mut cfg = SearchConfig::new(g);
    cfg.uniform_k = Some(k.max(1));
    cfg.mode = SearchMode::AllAtLength(k.max(1) * g.vertex_count());
    let result = search_min_representants(g, &cfg)?;
    Ok((result.words.len(), result.words))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        count_tree_min, cycle_graph, enumerate_cycle_min_representants,
        enumerate_tree_min_representants, star_graph, star_min_representants,
    };
    use crate::word::represents_11;
    use num_bigint::BigUint;

    fn fig1_tree() -> Graph {
        Graph::parse("edge 1 2\nedge 1 3\nedge 3 4\n").unwrap()
    }

    fn all_minimal(g: &Graph) -> SearchResult {
        search_min_representants(g, &SearchConfig::new(g)).unwrap()
    }

    #[test]
    fn fig1_tree_matches_table_2() {
        let t = fig1_tree();
        let result = all_minimal(&t);
        assert_eq!(result.ell, Some(6));
        assert!(!result.truncated);
        assert_eq!(result.words, enumerate_tree_min_representants(&t).unwrap());
        assert_eq!(result.words.len(), 10);
    }

    #[test]
    fn triangle_minimal_words_are_the_permutations() {
        let c3 = cycle_graph(3);
        let result = all_minimal(&c3);
        assert_eq!(result.ell, Some(3));
        assert_eq!(result.words.len(), 6);
        assert_eq!(result.words, enumerate_cycle_min_representants(3).unwrap());
    }

    #[test]
    fn star_matches_table_1() {
        let s3 = star_graph(3);
        let result = all_minimal(&s3);
        assert_eq!(result.ell, Some(6));
        let (_, expected) = star_min_representants(3).unwrap();
        assert_eq!(result.words, expected);
    }

    #[test]
    fn tree_counts_match_formula_on_samples() {
        for (seq, n) in [(vec![0], 3), (vec![3, 3], 4), (vec![1, 0], 4)] {
            let t = crate::graph::tree_from_prufer(&seq, n).unwrap();
            let result = all_minimal(&t);
            assert_eq!(result.ell, Some(2 * n - 2));
            assert_eq!(
                BigUint::from(result.words.len()),
                count_tree_min(&t).unwrap()
            );
        }
    }

    #[test]
    fn uniform_counts() {
        let (count, words) = count_uniform_representants(&cycle_graph(4), 2).unwrap();
        assert_eq!(count, 16);
        for w in &words {
            assert_eq!(w.uniformity().unwrap().k, Some(2));
            assert!(represents_11(w, &cycle_graph(4)).represents());
        }
        // every permutation represents the complete graph
        let (count, _) = count_uniform_representants(&Graph::complete(4), 1).unwrap();
        assert_eq!(count, 24);
    }

    #[test]
    fn disjoint_edges_need_length_six() {
        // 2K2 is triangle-free on 4 vertices, so ell >= 6; composition
        // reaches 6 exactly
        let g = Graph::parse("edge 1 2\nedge 3 4\n").unwrap();
        let result = all_minimal(&g);
        assert_eq!(result.ell, Some(6));
        let w = g.parse_word("121234").unwrap();
        assert!(result.words.contains(&w));
    }

    #[test]
    fn first_mode_returns_lexicographic_head() {
        let t = fig1_tree();
        let full = all_minimal(&t);
        let mut cfg = SearchConfig::new(&t);
        cfg.mode = SearchMode::First;
        let first = search_min_representants(&t, &cfg).unwrap();
        assert_eq!(first.ell, full.ell);
        assert_eq!(first.words.len(), 1);
        assert_eq!(first.words[0], full.words[0]);
    }

    #[test]
    fn at_length_mode_collects_all_of_that_length() {
        let c3 = cycle_graph(3);
        let mut cfg = SearchConfig::new(&c3);
        cfg.mode = SearchMode::AllAtLength(3);
        let result = search_min_representants(&c3, &cfg).unwrap();
        assert_eq!(result.words.len(), 6);

        cfg.mode = SearchMode::AllAtLength(4);
        let result = search_min_representants(&c3, &cfg).unwrap();
        for w in &result.words {
            assert_eq!(w.len(), 4);
            assert!(represents_11(w, &c3).represents());
        }
        assert!(result.words.contains(&c3.parse_word("1231").unwrap()));
        assert_eq!(result.words.len(), 6);
    }

    #[test]
    fn results_identical_across_workers_and_pruning() {
        for g in [fig1_tree(), cycle_graph(4), Graph::complete(4), Graph::edgeless(3)] {
            let baseline = all_minimal(&g);
            for threads in [2, 8] {
                let mut cfg = SearchConfig::new(&g);
                cfg.threads = threads;
                let r = search_min_representants(&g, &cfg).unwrap();
                assert_eq!((r.ell, &r.words, r.truncated, r.explored),
                           (baseline.ell, &baseline.words, baseline.truncated, baseline.explored));
            }
            let mut cfg = SearchConfig::new(&g);
            cfg.prune = false;
            let r = search_min_representants(&g, &cfg).unwrap();
            assert_eq!((r.ell, r.words, r.truncated), (baseline.ell, baseline.words, baseline.truncated));
        }
    }

    #[test]
    fn budget_exhaustion_reports_truncation() {
        let k4 = Graph::complete(4);
        let mut cfg = SearchConfig::new(&k4);
        cfg.max_explored = 2;
        cfg.mode = SearchMode::AllAtLength(6);
        let result = search_min_representants(&k4, &cfg).unwrap();
        assert!(result.truncated);
        // no false "not representable": truncation is flagged instead
    }

    #[test]
    fn single_vertex_graph() {
        let g = Graph::edgeless(1);
        let result = all_minimal(&g);
        assert_eq!(result.ell, Some(1));
        assert_eq!(g.word_string(&result.words[0]), "1");
    }

    #[test]
    fn oracle_under_other_patterns() {
        // 121334 is a minimal aab-representant of the Fig. 6 star; the
        // oracle under aab must find length 6 with it included
        let star2 = Graph::parse("edge 1 2\nedge 2 3\nedge 2 4\n").unwrap();
        let mut cfg = SearchConfig::new(&star2);
        cfg.pattern = Pattern::parse("aab").unwrap();
        let result = search_min_representants(&star2, &cfg).unwrap();
        assert_eq!(result.ell, Some(6));
        assert!(result.words.contains(&star2.parse_word("121334").unwrap()));
    }

    #[test]
    fn triangle_free_samples_respect_lower_bound() {
        for g in [
            fig1_tree(),
            cycle_graph(4),
            cycle_graph(5),
            Graph::parse("edge 1 2\nedge 3 4\n").unwrap(),
        ] {
            let n = g.vertex_count();
            assert!(!g.has_triangle());
            let result = all_minimal(&g);
            assert!(result.ell.unwrap() >= 2 * n - 2);
        }
    }
}
