//! Constructive generators and closed-form counts for minimal-length
//! word-representants of trees, stars, cycles, paths and disjoint unions.
//!
//! Minimal representants of a tree on n >= 2 vertices have length 2n-2:
//! exactly two vertices occur once (the endpoints of some edge xy) and every
//! other vertex occurs twice, with all letters of the component of x coming
//! before all letters of the component of y. The enumerator below walks that
//! structure directly; the counting functions evaluate the closed forms in
//! exact integer arithmetic.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::graph::{Graph, Vertex};
use crate::word::Word;
use crate::{Error, Result};

/// The two components of a tree after deleting one edge.
#[derive(Debug, Clone)]
pub struct TreeSplit {
    pub edge: (Vertex, Vertex),
    pub side_x: Graph,
    pub side_y: Graph,
    /// Original vertex ids of each side, ascending.
    pub side_x_vertices: Vec<Vertex>,
    pub side_y_vertices: Vec<Vertex>,
}

fn require_tree(t: &Graph, min_vertices: usize) -> Result<()> {
    if t.vertex_count() < min_vertices {
        return Err(Error::TooFewVertices {
            need: min_vertices,
            got: t.vertex_count(),
        });
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(())
}

/// Vertices reachable from `x` without crossing the edge `xy`, ascending.
fn side_vertices(t: &Graph, x: Vertex, y: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; t.vertex_count()];
    seen[x] = true;
    let mut queue = vec![x];
    while let Some(u) = queue.pop() {
        for v in t.neighbors(u) {
            if (u == x && v == y) || (u == y && v == x) {
                continue;
            }
            if !seen[v] {
                seen[v] = true;
                queue.push(v);
            }
        }
    }
    (0..t.vertex_count()).filter(|&v| seen[v]).collect()
}

pub fn split_tree_at_edge(t: &Graph, x: Vertex, y: Vertex) -> Result<TreeSplit> {
    require_tree(t, 2)?;
    if x == y || !t.has_edge(x, y) {
        return Err(Error::NotAnEdge(
            t.label(x).to_string(),
            t.label(y).to_string(),
        ));
    }
    let side_x_vertices = side_vertices(t, x, y);
    let side_y_vertices = side_vertices(t, y, x);
    Ok(TreeSplit {
        edge: (x, y),
        side_x: t.induced_subgraph(&side_x_vertices),
        side_y: t.induced_subgraph(&side_y_vertices),
        side_x_vertices,
        side_y_vertices,
    })
}

/// One minimal-length representant of a tree (length 2n-2), built by
/// eliminating the leaf latest in canonical order down to a single edge and
/// replaying the removals: each removed leaf `a` with neighbor `b` replaces
/// the leftmost `b` with `aba` (any occurrence works; leftmost for
/// determinism).
pub fn tree_min_representant(t: &Graph) -> Result<Word> {
    require_tree(t, 2)?;
    let n = t.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed: Vec<(Vertex, Vertex)> = Vec::new();
    for _ in 0..n - 2 {
        let leaf = (0..n)
            .rev()
            .find(|&v| alive[v] && degree[v] == 1)
            .expect("a tree on >= 3 vertices has a leaf");
        let parent = t
            .neighbors(leaf)
            .find(|&u| alive[u])
            .expect("leaf has a live neighbor");
        alive[leaf] = false;
        degree[leaf] = 0;
        degree[parent] -= 1;
        removed.push((leaf, parent));
    }
    let survivors: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    let mut letters = survivors.clone();
    for &(leaf, parent) in removed.iter().rev() {
        let pos = letters.iter().position(|&v| v == parent).unwrap();
        letters.splice(pos..=pos, [leaf, parent, leaf]);
    }
    Ok(Word::new(letters))
}

/// The cycle graph on vertices "1".."n" with consecutive labels adjacent.
pub fn cycle_graph(n: usize) -> Graph {
    let mut g = Graph::edgeless(n);
    for i in 0..n.saturating_sub(1) {
        g.add_edge(i, i + 1).unwrap();
    }
    if n >= 3 {
        g.add_edge(n - 1, 0).unwrap();
    }
    g
}

/// The path 1-2-...-k.
pub fn path_graph(k: usize) -> Graph {
    let mut g = Graph::edgeless(k);
    for i in 0..k.saturating_sub(1) {
        g.add_edge(i, i + 1).unwrap();
    }
    g
}

/// The star with center "1" and leaves "2".."k+1".
pub fn star_graph(k: usize) -> Graph {
    let mut g = Graph::edgeless(k + 1);
    for leaf in 1..=k {
        g.add_edge(0, leaf).unwrap();
    }
    g
}

fn require_cycle_size(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFewVertices { need: 3, got: n });
    }
    Ok(())
}

/// Minimal length of a representant of the cycle C_n: 3 for the triangle,
/// 2n-2 otherwise.
pub fn ell_cycle(n: usize) -> Result<usize> {
    require_cycle_size(n)?;
    Ok(if n == 3 { 3 } else { 2 * n - 2 })
}

/// Number of minimal-length representants of C_n: 2n.
pub fn count_cycle_min(n: usize) -> Result<usize> {
    require_cycle_size(n)?;
    Ok(2 * n)
}

/// The word for the directed cycle edge (u, v): `u`, `v` occur once with `u`
/// first, all other vertices twice, nested deterministically. With the
/// canonical edge (1, 2) this instantiates the explicit template
/// n 1 (n-1) n (n-2)(n-1) ... 3 4 2 3.
fn cycle_word_for(n: usize, u: Vertex, v: Vertex) -> Vec<Vertex> {
    // direction of the walk leaving u through v around the ring
    let dir = if (u + 1) % n == v { 1 } else { n - 1 };
    let relabel = |paper: usize| -> Vertex {
        match paper {
            1 => u,
            2 => v,
            m => (v + (m - 2) * dir) % n,
        }
    };
    let mut letters = Vec::with_capacity(2 * n - 2);
    for j in (2..=n).rev() {
        letters.push(relabel(j));
        letters.push(relabel(j % n + 1));
    }
    letters
}

/// The canonical minimal representant of C_n over vertices "1".."n":
/// `123` for the triangle, the explicit length-(2n-2) template otherwise.
pub fn cycle_min_representant(n: usize) -> Result<Word> {
    require_cycle_size(n)?;
    if n == 3 {
        return Ok(Word::new(vec![0, 1, 2]));
    }
    Ok(Word::new(cycle_word_for(n, 0, 1)))
}

/// Minimal representant of an arbitrary cycle graph: the canonical template
/// instantiated along the ring, starting at the first-declared vertex and
/// walking toward its smaller neighbor.
pub fn cycle_min_representant_of(g: &Graph) -> Result<Word> {
    if !g.is_cycle() {
        return Err(Error::NotACycle);
    }
    let n = g.vertex_count();
    let mut ring = vec![0];
    let mut prev = None;
    for _ in 1..n {
        let here = *ring.last().unwrap();
        let next = g
            .neighbors(here)
            .find(|&v| Some(v) != prev)
            .expect("cycle vertex has two neighbors");
        prev = Some(here);
        ring.push(next);
    }
    if n == 3 {
        return Ok(Word::new(vec![0, 1, 2]));
    }
    Ok(Word::new(
        cycle_word_for(n, 0, 1).into_iter().map(|pos| ring[pos]).collect(),
    ))
}

/// All 2n minimal representants of C_n: one deterministic completion per
/// directed edge of the cycle (the six permutations for the triangle).
pub fn enumerate_cycle_min_representants(n: usize) -> Result<Vec<Word>> {
    require_cycle_size(n)?;
    let mut words: Vec<Word> = if n == 3 {
        (0..3).permutations(3).map(Word::new).collect()
    } else {
        let mut out = Vec::with_capacity(2 * n);
        for u in 0..n {
            for v in [(u + 1) % n, (u + n - 1) % n] {
                out.push(Word::new(cycle_word_for(n, u, v)));
            }
        }
        out
    };
    words.sort();
    let distinct: BTreeSet<&Word> = words.iter().collect();
    assert_eq!(distinct.len(), words.len(), "cycle enumerator emitted a duplicate");
    Ok(words)
}

/// All 2*k! minimal representants of the star S_k (center "1", leaves
/// "2".."k+1"), instantiating the two canonical templates.
pub fn star_min_representants(k: usize) -> Result<(Graph, Vec<Word>)> {
    if k < 1 {
        return Err(Error::TooFewVertices { need: 2, got: k + 1 });
    }
    let g = star_graph(k);
    let center: Vertex = 0;
    let leaves: Vec<Vertex> = (1..=k).collect();
    let mut words = Vec::new();
    for &single in &leaves {
        let rest: Vec<Vertex> = leaves.iter().copied().filter(|&l| l != single).collect();
        let m = rest.len();
        for perm in rest.into_iter().permutations(m) {
            let mut middle: Vec<Vertex> = perm.clone();
            middle.push(center);
            middle.extend(perm.iter().rev());
            let mut front = vec![single];
            front.extend(&middle);
            words.push(Word::new(front));
            let mut back = middle;
            back.push(single);
            words.push(Word::new(back));
        }
    }
    words.sort();
    let distinct: BTreeSet<&Word> = words.iter().collect();
    assert_eq!(distinct.len(), words.len(), "star enumerator emitted a duplicate");
    Ok((g, words))
}

/// Concatenation w1 s(w1) w2 s(w2) ... w_{k-1} s(w_{k-1}) w_k representing
/// the disjoint union of the components. Component alphabets must be
/// pairwise disjoint; ordering a maximum-size component last makes the
/// length Σ(|w_i| + |V_i|) - |V_last| minimal for minimal inputs.
pub fn compose_components(parts: &[(&Graph, &Word)]) -> Result<(Graph, Word)> {
    if parts.is_empty() {
        return Err(Error::TooFewVertices { need: 1, got: 0 });
    }
    let mut union = Graph::new();
    let mut offsets = Vec::with_capacity(parts.len());
    for (g, w) in parts {
        if w.is_empty() && g.vertex_count() > 0 {
            return Err(Error::EmptyWord);
        }
        offsets.push(union.vertex_count());
        for v in g.vertices() {
            union
                .add_vertex(g.label(v))
                .map_err(|_| Error::OverlappingAlphabets(g.label(v).to_string()))?;
        }
        let base = *offsets.last().unwrap();
        for (u, v) in g.edges() {
            union.add_edge(base + u, base + v).unwrap();
        }
    }
    let mut letters = Vec::new();
    for (i, (_, w)) in parts.iter().enumerate() {
        let shift =
            |word: &Word| word.letters().iter().map(|&v| v + offsets[i]).collect::<Vec<_>>();
        letters.extend(shift(w));
        if i + 1 < parts.len() {
            letters.extend(shift(&w.final_permutation()?));
        }
    }
    Ok((union, Word::new(letters)))
}

/// Upper bound Σ(ell_i + n_i) - max n_j on ell of a disconnected graph from
/// per-component (n_i, ell_i) pairs.
pub fn composition_length_bound(parts: &[(usize, usize)]) -> usize {
    let total: usize = parts.iter().map(|(n, ell)| n + ell).sum();
    total - parts.iter().map(|(n, _)| *n).max().unwrap_or(0)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

/// Number of minimal-length representants of a tree:
/// 2 * prod_v deg(v)! * sum_{xy in E} 1/(deg(x) deg(y)), evaluated as
/// 2 * sum_{xy} prod_v deg(v)! / (deg(x) deg(y)) so every summand is an
/// exact integer.
pub fn count_tree_min(t: &Graph) -> Result<BigUint> {
    require_tree(t, 2)?;
    let degree_product: BigUint = t.vertices().map(|v| factorial(t.degree(v))).product();
    let sum: BigUint = t
        .edges()
        .map(|(x, y)| &degree_product / BigUint::from(t.degree(x) * t.degree(y)))
        .sum();
    Ok(BigUint::from(2u32) * sum)
}

/// Number of minimal-length representants of the path P_k: (k+1) * 2^(k-3).
pub fn count_path_min(k: usize) -> Result<BigUint> {
    if k < 3 {
        return Err(Error::TooFewVertices { need: 3, got: k });
    }
    Ok(BigUint::from(k + 1) * BigUint::from(2u32).pow((k - 3) as u32))
}

/// Children of each side vertex when the side is rooted at `root`, in
/// canonical order.
fn side_children(t: &Graph, root: Vertex, side: &[Vertex]) -> Vec<Vec<Vertex>> {
    let n = t.vertex_count();
    let mut in_side = vec![false; n];
    for &v in side {
        in_side[v] = true;
    }
    let mut children: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in t.neighbors(u) {
            if in_side[v] && !seen[v] {
                seen[v] = true;
                children[u].push(v);
                queue.push_back(v);
            }
        }
    }
    children
}

/// All (left, right) expansions of a non-root side vertex: `v` occurs once
/// in each segment, and every strict descendant has both its occurrences in
/// one of the two segments. Each child pair either immediately surrounds an
/// occurrence of `v` or immediately surrounds an already-placed sibling
/// pair, which is exactly the nested structure minimality forces.
fn vertex_segments(v: Vertex, children: &[Vec<Vertex>]) -> Vec<(Vec<Vertex>, Vec<Vertex>)> {
    let kids = &children[v];
    if kids.is_empty() {
        return vec![(vec![v], vec![v])];
    }
    let kid_options: Vec<Vec<(Vec<Vertex>, Vec<Vertex>)>> =
        kids.iter().map(|&c| vertex_segments(c, children)).collect();
    let mut out = Vec::new();
    for perm in (0..kids.len()).permutations(kids.len()) {
        for split in 0..=kids.len() {
            for choice in kid_options
                .iter()
                .map(|opts| 0..opts.len())
                .multi_cartesian_product()
            {
                let wrap = |order: &[usize]| {
                    let mut acc = vec![v];
                    for &ki in order {
                        let (l, r) = &kid_options[ki][choice[ki]];
                        let mut next = l.clone();
                        next.extend(acc);
                        next.extend(r.iter().copied());
                        acc = next;
                    }
                    acc
                };
                out.push((wrap(&perm[..split]), wrap(&perm[split..])));
            }
        }
    }
    out
}

/// All words over one side in which the root occurs once and every other
/// side vertex twice, each representing the side subtree. All child pairs of
/// the root nest around its single occurrence.
fn side_words(t: &Graph, root: Vertex, side: &[Vertex]) -> Vec<Vec<Vertex>> {
    let children = side_children(t, root, side);
    let kids = children[root].clone();
    if kids.is_empty() {
        return vec![vec![root]];
    }
    let kid_options: Vec<Vec<(Vec<Vertex>, Vec<Vertex>)>> =
        kids.iter().map(|&c| vertex_segments(c, &children)).collect();
    let mut out = Vec::new();
    for perm in (0..kids.len()).permutations(kids.len()) {
        for choice in kid_options
            .iter()
            .map(|opts| 0..opts.len())
            .multi_cartesian_product()
        {
            let mut acc = vec![root];
            for &ki in &perm {
                let (l, r) = &kid_options[ki][choice[ki]];
                let mut next = l.clone();
                next.extend(acc);
                next.extend(r.iter().copied());
                acc = next;
            }
            out.push(acc);
        }
    }
    out
}

/// All minimal-length representants of a tree: for every edge xy and both
/// orders of its endpoints, every side word for the x-component followed by
/// every side word for the y-component.
pub fn enumerate_tree_min_representants(t: &Graph) -> Result<Vec<Word>> {
    require_tree(t, 2)?;
    let mut words = Vec::new();
    for (x, y) in t.edges() {
        let x_side = side_vertices(t, x, y);
        let y_side = side_vertices(t, y, x);
        let x_words = side_words(t, x, &x_side);
        let y_words = side_words(t, y, &y_side);
        for (first, second) in x_words
            .iter()
            .cartesian_product(&y_words)
            .chain(y_words.iter().cartesian_product(&x_words))
        {
            let mut letters = first.clone();
            letters.extend(second);
            words.push(Word::new(letters));
        }
    }
    words.sort();
    let distinct: BTreeSet<&Word> = words.iter().collect();
    assert_eq!(distinct.len(), words.len(), "tree enumerator emitted a duplicate");
    Ok(words)
}
