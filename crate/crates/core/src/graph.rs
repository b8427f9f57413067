//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency lists are kept sorted, which makes membership a binary search
//! and lets the square be built by merging neighbor lists.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Longest cycle the exhaustive cycle search will look for.
pub const MAX_CYCLE_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("requested cycle length {length} exceeds cap {cap} (hard limit {MAX_CYCLE_CAP})")]
    CapExceeded { length: usize, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if !g.try_add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Adds `uv`; returns `false` if the edge was already present.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    /// Panicking variant of [`Graph::try_add_edge`] for generators that
    /// construct edges they know to be valid.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        self.try_add_edge(u, v).expect("invalid edge")
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("asymmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The graph joining every pair of vertices at distance one or two.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut mark = vec![usize::MAX; n];
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            mark[v] = v;
            let mut out = Vec::new();
            for &w in &self.adj[v] {
                if mark[w] != v {
                    mark[w] = v;
                    out.push(w);
                }
                for &x in &self.adj[w] {
                    if mark[x] != v {
                        mark[x] = v;
                        out.push(x);
                    }
                }
            }
            out.sort_unstable();
            adj.push(out);
        }
        Graph { adj }
    }

    /// `N²(v)`: neighbors of `v` in the square, excluding `v`.
    pub fn distance2_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut set = BTreeSet::new();
        for &w in &self.adj[v] {
            set.insert(w);
            set.extend(self.adj[w].iter().copied().filter(|&x| x != v));
        }
        set.into_iter().collect()
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[s] = Some(0);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Component id per vertex, numbered in order of lowest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().iter().all(|&c| c == 0)
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut nb: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Graph { adj }
    }

    /// Removes the listed vertices, renumbering the rest in order.
    /// Returns the new graph and the old id of each new vertex.
    pub fn without_vertices(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n()).filter(|&v| !removed[v]).collect();
        (self.induced_subgraph(&kept), kept)
    }

    /// Adjacency as bitmasks; only valid for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask adjacency needs n <= 64");
        self.adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }

    /// Size of a maximum clique (exact; branch and bound on bitmasks).
    pub fn clique_number(&self) -> usize {
        if self.n() == 0 {
            return 0;
        }
        assert!(self.n() <= 64, "clique_number supports n <= 64");
        let masks = self.adjacency_masks();
        let all = if self.n() == 64 { u64::MAX } else { (1u64 << self.n()) - 1 };
        let mut best = 0;
        max_clique(&masks, 0, all, &mut best);
        best
    }
}

fn max_clique(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    while cand != 0 {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= !(1u64 << v);
        max_clique(adj, size + 1, cand & adj[v], best);
    }
}

/// Big/small split of the vertex set at degree threshold `beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub threshold: usize,
    pub big: BTreeSet<usize>,
    pub small: BTreeSet<usize>,
    /// Small vertices keyed by their number of big neighbors.
    pub by_big_neighbors: BTreeMap<usize, BTreeSet<usize>>,
}

impl VertexClass {
    #[inline]
    pub fn is_big(&self, v: usize) -> bool {
        self.big.contains(&v)
    }

    /// `S_i`: small vertices with exactly `i` big neighbors.
    pub fn s(&self, i: usize) -> BTreeSet<usize> {
        self.by_big_neighbors.get(&i).cloned().unwrap_or_default()
    }

    pub fn in_s(&self, v: usize, i: usize) -> bool {
        self.by_big_neighbors.get(&i).is_some_and(|s| s.contains(&v))
    }
}

/// `ceil(sqrt(Δ))`, the desk-scale stand-in for `sqrt(k)`; at least 1.
pub fn default_beta(g: &Graph) -> usize {
    let d = g.max_degree();
    let mut b = (d as f64).sqrt().ceil() as usize;
    while b * b < d {
        b += 1;
    }
    while b > 1 && (b - 1) * (b - 1) >= d {
        b -= 1;
    }
    b.max(1)
}

pub fn classify_vertices(g: &Graph, beta: usize) -> VertexClass {
    assert!(beta >= 1, "big threshold must be positive");
    let big: BTreeSet<usize> = (0..g.n()).filter(|&v| g.degree(v) >= beta).collect();
    let small: BTreeSet<usize> = (0..g.n()).filter(|v| !big.contains(v)).collect();
    let mut by_big_neighbors: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &v in &small {
        let count = g.neighbors(v).iter().filter(|w| big.contains(w)).count();
        by_big_neighbors.entry(count).or_default().insert(v);
    }
    VertexClass { threshold: beta, big, small, by_big_neighbors }
}

/// Cycles of the requested lengths, each listed once in canonical form:
/// starting at its least vertex, oriented so the second vertex is smaller
/// than the last.
pub fn forbidden_cycle_check(
    g: &Graph,
    lengths: &[usize],
    cap: usize,
) -> Result<Vec<Vec<usize>>, GraphError> {
    for &length in lengths {
        if length > cap || length > MAX_CYCLE_CAP {
            return Err(GraphError::CapExceeded { length, cap });
        }
    }
    if cap > MAX_CYCLE_CAP {
        return Err(GraphError::CapExceeded { length: cap, cap: MAX_CYCLE_CAP });
    }
    let wanted: BTreeSet<usize> = lengths.iter().copied().filter(|&l| l >= 3).collect();
    let Some(&max_len) = wanted.iter().next_back() else {
        return Ok(Vec::new());
    };
    let mut found = Vec::new();
    let mut on_path = vec![false; g.n()];
    for s in 0..g.n() {
        let mut path = vec![s];
        on_path[s] = true;
        extend_cycles(g, s, &wanted, max_len, &mut path, &mut on_path, &mut found);
        on_path[s] = false;
    }
    Ok(found)
}

fn extend_cycles(
    g: &Graph,
    start: usize,
    wanted: &BTreeSet<usize>,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && wanted.contains(&path.len()) && path[1] < last {
            found.push(path.clone());
        }
        if w > start && !on_path[w] && path.len() < max_len {
            on_path[w] = true;
            path.push(w);
            extend_cycles(g, start, wanted, max_len, path, on_path, found);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Some 4-cycle `[a, b, c, d]` (edges ab, bc, cd, da), if one exists.
///
/// Runs in `O(Σ d(v)²)` by looking for two distinct 2-paths between the
/// same pair of vertices.
pub fn find_four_cycle(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    let mut via = vec![usize::MAX; n];
    let mut stamp = vec![usize::MAX; n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            for &w in g.neighbors(v) {
                if w == u {
                    continue;
                }
                if stamp[w] == u {
                    return Some([u, via[w], w, v]);
                }
                stamp[w] = u;
                via[w] = v;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn square_of_small_graphs() {
        let c5 = cycle(5).square();
        assert_eq!(c5.m(), 10);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap().square();
        assert_eq!(p3.m(), 3);
    }

    #[test]
    fn distance2_neighborhoods() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.distance2_neighborhood(0), vec![1, 2, 3, 4]);
        let c6 = cycle(6);
        for v in 0..6 {
            assert_eq!(c6.distance2_neighborhood(v).len(), 4);
        }
    }

    #[test]
    fn classify_k2_and_star() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let vc = classify_vertices(&k2, 10);
        assert!(vc.big.is_empty());
        assert_eq!(vc.s(0), BTreeSet::from([0, 1]));

        let edges: Vec<_> = (1..=12).map(|i| (0, i)).collect();
        let star = Graph::from_edges(13, &edges).unwrap();
        let vc = classify_vertices(&star, 10);
        assert_eq!(vc.big, BTreeSet::from([0]));
        assert_eq!(vc.s(1).len(), 12);
    }

    #[test]
    fn default_beta_is_ceil_sqrt() {
        let edges: Vec<_> = (1..=10).map(|i| (0, i)).collect();
        let star = Graph::from_edges(11, &edges).unwrap();
        assert_eq!(default_beta(&star), 4);
        let edges: Vec<_> = (1..=9).map(|i| (0, i)).collect();
        let star = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(default_beta(&star), 3);
        assert_eq!(default_beta(&Graph::new(3)), 1);
    }

    #[test]
    fn four_cycle_in_c4() {
        let found = forbidden_cycle_check(&cycle(4), &[4], 4).unwrap();
        assert_eq!(found, vec![vec![0, 1, 2, 3]]);
        assert!(find_four_cycle(&cycle(4)).is_some());
        assert!(find_four_cycle(&cycle(5)).is_none());
    }

    #[test]
    fn cycle_cap_enforced() {
        assert!(matches!(
            forbidden_cycle_check(&cycle(5), &[5], 4),
            Err(GraphError::CapExceeded { length: 5, cap: 4 })
        ));
        assert!(forbidden_cycle_check(&cycle(5), &[13], 13).is_err());
    }

    #[test]
    fn cycles_counted_once() {
        // K4 has three 4-cycles and four triangles.
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(forbidden_cycle_check(&k4, &[4], 12).unwrap().len(), 3);
        assert_eq!(forbidden_cycle_check(&k4, &[3], 12).unwrap().len(), 4);
    }

    #[test]
    fn clique_number_basic() {
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(cycle(5).square().clique_number(), 5);
        assert_eq!(Graph::new(3).clique_number(), 1);
    }
}
