//! Exact solvers for ordinary, list and correspondence coloring, plus
//! standalone validity checkers that share no code with the solvers.
//!
//! Colors are positive integers throughout.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degeneracy::{degeneracy_order, greedy_color_from_order};
use crate::generators::next_permutation;
use crate::graph::Graph;

pub const CHROMATIC_MAX_N: usize = 64;
pub const LIST_MAX_N: usize = 30;
pub const CHOOSABILITY_MAX_N: usize = 6;
pub const CORR_EXACT_MAX_N: usize = 6;
pub const CORR_EXACT_MAX_DEGREE: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("{solver} supports at most {limit} vertices, got {n}")]
    TooLarge { solver: &'static str, n: usize, limit: usize },
    #[error("assignment covers {got} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("matching given for non-edge {0}-{1}")]
    NotAnEdge(usize, usize),
    #[error("matching on edge {u}-{v} uses color {color} more than once")]
    NotInjective { u: usize, v: usize, color: usize },
    #[error("color {color} at vertex {vertex} exceeds its capacity {capacity}")]
    ColorOutOfRange { vertex: usize, color: usize, capacity: usize },
}

fn guard(solver: &'static str, n: usize, soft: usize, hard: usize) -> Result<(), ColorError> {
    let limit = crate::limits::effective(soft, hard);
    if n > limit {
        Err(ColorError::TooLarge { solver, n, limit })
    } else {
        Ok(())
    }
}

/// Greedy clique: from every start vertex, repeatedly add the candidate
/// with the most neighbors among the remaining candidates.
fn greedy_clique(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut best = 0;
    for s in 0..n {
        let mut size = 1;
        let mut cand = adj[s];
        while cand != 0 {
            let mut pick = 0;
            let mut pick_deg = -1i64;
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = (adj[v] & cand).count_ones() as i64;
                if d > pick_deg {
                    pick_deg = d;
                    pick = v;
                }
            }
            size += 1;
            cand &= adj[pick];
        }
        best = best.max(size);
    }
    best
}

struct Dsatur<'a> {
    adj: &'a [u64],
    color: Vec<usize>,
    /// Bit `c` set when some neighbor has color `c`.
    seen: Vec<u128>,
    best: usize,
    best_color: Vec<usize>,
    lower: usize,
}

impl Dsatur<'_> {
    fn search(&mut self, colored: usize, used: usize) {
        if used >= self.best {
            return;
        }
        let n = self.adj.len();
        if colored == n {
            self.best = used;
            self.best_color = self.color.clone();
            return;
        }
        let mut uncolored = 0u64;
        for v in 0..n {
            if self.color[v] == 0 {
                uncolored |= 1 << v;
            }
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == 0)
            .max_by_key(|&v| {
                (self.seen[v].count_ones(), (self.adj[v] & uncolored).count_ones(), std::cmp::Reverse(v))
            })
            .unwrap();
        let limit = (used + 1).min(self.best - 1);
        for c in 1..=limit {
            if self.seen[v] >> c & 1 == 1 {
                continue;
            }
            self.color[v] = c;
            let mut touched = Vec::new();
            let mut nb = self.adj[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.seen[w] >> c & 1 == 0 {
                    self.seen[w] |= 1u128 << c;
                    touched.push(w);
                }
            }
            self.search(colored + 1, used.max(c));
            for w in touched {
                self.seen[w] &= !(1u128 << c);
            }
            self.color[v] = 0;
            if self.best <= self.lower {
                return;
            }
        }
    }
}

/// An optimal proper coloring, found by DSATUR branch and bound seeded with
/// a degeneracy-order greedy upper bound and a greedy clique lower bound.
pub fn exact_coloring(h: &Graph) -> Result<Vec<usize>, ColorError> {
    guard("chromatic", h.n(), CHROMATIC_MAX_N, 64)?;
    if h.n() == 0 {
        return Ok(Vec::new());
    }
    let (order, _) = degeneracy_order(h);
    let greedy = greedy_color_from_order(h, &order);
    let upper = *greedy.iter().max().unwrap();
    let adj = h.adjacency_masks();
    let lower = greedy_clique(&adj);
    if lower == upper {
        return Ok(greedy);
    }
    let mut s = Dsatur {
        adj: &adj,
        color: vec![0; h.n()],
        seen: vec![0; h.n()],
        best: upper,
        best_color: greedy,
        lower,
    };
    s.search(0, 0);
    Ok(s.best_color)
}

pub fn chromatic_number(h: &Graph) -> Result<usize, ColorError> {
    Ok(exact_coloring(h)?.into_iter().max().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Sorts and deduplicates every list.
    pub fn new(mut lists: Vec<Vec<usize>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    pub fn uniform(n: usize, colors: &[usize]) -> Self {
        ListAssignment::new(vec![colors.to_vec(); n])
    }
}

/// Backtracking list coloring: most constrained vertex first, with forward
/// checking of neighbor options. `Ok(None)` certifies exhaustive failure.
pub fn list_color(h: &Graph, lists: &ListAssignment) -> Result<Option<Vec<usize>>, ColorError> {
    guard("list-color", h.n(), LIST_MAX_N, 64)?;
    if lists.lists.len() != h.n() {
        return Err(ColorError::SizeMismatch { expected: h.n(), got: lists.lists.len() });
    }
    let domains: Vec<Vec<usize>> = lists.lists.clone();
    Ok(solve_domains(h, domains, &|_, c, _, d| c == d))
}

/// Generic backtracking over per-vertex domains where `conflict(v, c, w, d)`
/// says that `v` colored `c` clashes with neighbor `w` colored `d`.
fn solve_domains(
    h: &Graph,
    domains: Vec<Vec<usize>>,
    conflict: &dyn Fn(usize, usize, usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let n = h.n();
    let mut color = vec![0usize; n];
    let mut live: Vec<Vec<usize>> = domains;
    if live.iter().any(Vec::is_empty) {
        return None;
    }
    fn rec(
        h: &Graph,
        color: &mut Vec<usize>,
        live: &mut Vec<Vec<usize>>,
        remaining: usize,
        conflict: &dyn Fn(usize, usize, usize, usize) -> bool,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        let v = (0..h.n())
            .filter(|&v| color[v] == 0)
            .min_by_key(|&v| (live[v].len(), std::cmp::Reverse(h.degree(v)), v))
            .unwrap();
        for c in live[v].clone() {
            let mut pruned: Vec<(usize, Vec<usize>)> = Vec::new();
            let mut dead = false;
            for &w in h.neighbors(v) {
                if color[w] != 0 {
                    continue;
                }
                let before = live[w].len();
                let keep: Vec<usize> = live[w].iter().copied().filter(|&d| !conflict(v, c, w, d)).collect();
                if keep.len() != before {
                    let old = std::mem::replace(&mut live[w], keep);
                    dead |= live[w].is_empty();
                    pruned.push((w, old));
                }
            }
            color[v] = c;
            if !dead && rec(h, color, live, remaining - 1, conflict) {
                return true;
            }
            color[v] = 0;
            for (w, old) in pruned {
                live[w] = old;
            }
        }
        false
    }
    rec(h, &mut color, &mut live, n, conflict).then_some(color)
}

/// A matching between the colors of the two ends of an edge `u < v`:
/// `forward[a-1] = Some(b)` pairs color `a` at `u` with color `b` at `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub forward: Vec<Option<usize>>,
    pub backward: Vec<Option<usize>>,
}

impl Matching {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.forward.iter().enumerate().filter_map(|(i, b)| b.map(|b| (i + 1, b)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceAssignment {
    pub capacities: Vec<usize>,
    pub matchings: BTreeMap<(usize, usize), Matching>,
}

impl CorrespondenceAssignment {
    /// Validates and stores the matchings. Keys may be given in either
    /// orientation; pairs are always read as (color at first key vertex,
    /// color at second key vertex).
    pub fn new(
        h: &Graph,
        capacities: Vec<usize>,
        pairs: &BTreeMap<(usize, usize), Vec<(usize, usize)>>,
    ) -> Result<Self, ColorError> {
        if capacities.len() != h.n() {
            return Err(ColorError::SizeMismatch { expected: h.n(), got: capacities.len() });
        }
        let mut matchings = BTreeMap::new();
        for (u, v) in h.edges() {
            matchings.insert(
                (u, v),
                Matching { forward: vec![None; capacities[u]], backward: vec![None; capacities[v]] },
            );
        }
        for (&(a, b), list) in pairs {
            if a >= h.n() || b >= h.n() || !h.has_edge(a, b) {
                return Err(ColorError::NotAnEdge(a, b));
            }
            let (u, v) = (a.min(b), a.max(b));
            let m = matchings.get_mut(&(u, v)).unwrap();
            for &(ca, cb) in list {
                let (cu, cv) = if a == u { (ca, cb) } else { (cb, ca) };
                for (vertex, color) in [(u, cu), (v, cv)] {
                    if color == 0 || color > capacities[vertex] {
                        return Err(ColorError::ColorOutOfRange { vertex, color, capacity: capacities[vertex] });
                    }
                }
                if m.forward[cu - 1].is_some() {
                    return Err(ColorError::NotInjective { u, v, color: cu });
                }
                if m.backward[cv - 1].is_some() {
                    return Err(ColorError::NotInjective { u, v, color: cv });
                }
                m.forward[cu - 1] = Some(cv);
                m.backward[cv - 1] = Some(cu);
            }
        }
        Ok(CorrespondenceAssignment { capacities, matchings })
    }

    /// Identity matchings `(c, c)` on every edge for `c` up to the smaller
    /// capacity; coloring against it is ordinary coloring with lists `1..=f`.
    pub fn identity(h: &Graph, capacities: Vec<usize>) -> Self {
        let pairs = h
            .edges()
            .map(|(u, v)| ((u, v), (1..=capacities[u].min(capacities[v])).map(|c| (c, c)).collect()))
            .collect();
        CorrespondenceAssignment::new(h, capacities, &pairs).expect("identity matchings are valid")
    }

    /// Whether `u` colored `a` and its neighbor `v` colored `b` clash.
    pub fn conflicts(&self, u: usize, a: usize, v: usize, b: usize) -> bool {
        if u < v {
            self.matchings.get(&(u, v)).is_some_and(|m| m.forward.get(a - 1) == Some(&Some(b)))
        } else {
            self.matchings.get(&(v, u)).is_some_and(|m| m.backward.get(a - 1) == Some(&Some(b)))
        }
    }

    /// Adds pairs between unmatched colors, lowest first, until every
    /// matching saturates the side with smaller capacity.
    pub fn padded(&self) -> Self {
        let mut out = self.clone();
        for m in out.matchings.values_mut() {
            let free: Vec<usize> = (0..m.backward.len()).filter(|&j| m.backward[j].is_none()).collect();
            let mut free_b = free.into_iter();
            for i in 0..m.forward.len() {
                if m.forward[i].is_some() {
                    continue;
                }
                let Some(j) = free_b.next() else { break };
                m.forward[i] = Some(j + 1);
                m.backward[j] = Some(i + 1);
            }
        }
        out
    }
}

/// Backtracking correspondence coloring; `Ok(None)` certifies failure.
pub fn corr_color(h: &Graph, c: &CorrespondenceAssignment) -> Result<Option<Vec<usize>>, ColorError> {
    guard("corr-color", h.n(), LIST_MAX_N, 64)?;
    if c.capacities.len() != h.n() {
        return Err(ColorError::SizeMismatch { expected: h.n(), got: c.capacities.len() });
    }
    let domains = c.capacities.iter().map(|&f| (1..=f).collect()).collect();
    Ok(solve_domains(h, domains, &|v, a, w, b| c.conflicts(v, a, w, b)))
}

/// Whether every list assignment with lists of size `k` admits a coloring.
/// Lists are enumerated up to renaming of colors: each list draws from the
/// colors already used plus the next fresh ones in order.
pub fn is_k_choosable(h: &Graph, k: usize) -> Result<bool, ColorError> {
    guard("choosability", h.n(), CHOOSABILITY_MAX_N, 8)?;
    if k == 0 {
        return Ok(h.n() == 0);
    }
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(h.n());
    Ok(choosable_rec(h, k, &mut lists, 0))
}

fn choosable_rec(h: &Graph, k: usize, lists: &mut Vec<Vec<usize>>, palette: usize) -> bool {
    let i = lists.len();
    if i > 0 {
        let prefix: Vec<usize> = (0..i).collect();
        let sub = h.induced_subgraph(&prefix);
        if solve_domains(&sub, lists.clone(), &|_, a, _, b| a == b).is_none() {
            return false;
        }
    }
    if i == h.n() {
        return true;
    }
    // Choose j old colors out of `palette` and the fresh colors
    // palette+1 .. palette+(k-j).
    for j in (0..=k.min(palette)).rev() {
        let mut comb: Vec<usize> = (1..=j).collect();
        loop {
            let mut list = comb.clone();
            list.extend(palette + 1..=palette + k - j);
            lists.push(list);
            let ok = choosable_rec(h, k, lists, palette + k - j);
            lists.pop();
            if !ok {
                return false;
            }
            if !next_combination(&mut comb, palette) {
                break;
            }
        }
    }
    true
}

/// Advances a sorted combination of `1..=max`; `false` after the last one.
fn next_combination(comb: &mut [usize], max: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < max - (k - 1 - i) {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact list-chromatic number by exhaustive checking between `χ` and
/// `degeneracy + 1`.
pub fn choosability(h: &Graph) -> Result<usize, ColorError> {
    guard("choosability", h.n(), CHOOSABILITY_MAX_N, 8)?;
    let chi = chromatic_number(h)?;
    let top = degeneracy_order(h).1 + 1;
    for k in chi..top {
        if is_k_choosable(h, k)? {
            return Ok(k);
        }
    }
    Ok(top.max(chi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorrMode {
    Exact,
    /// Only sampled assignments were tried, so the value is a lower bound.
    LowerBound { samples: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrChromatic {
    pub value: usize,
    pub mode: CorrMode,
}

/// Correspondence chromatic number. Exhaustive for at most 6 vertices and
/// maximum degree 3; otherwise `samples` random full matchings per `k`
/// (seeded) give a lower bound.
pub fn corr_chromatic(h: &Graph, samples: usize, seed: u64) -> Result<CorrChromatic, ColorError> {
    guard("corr-chromatic", h.n(), LIST_MAX_N, 64)?;
    if h.n() == 0 {
        return Ok(CorrChromatic { value: 0, mode: CorrMode::Exact });
    }
    let chi = chromatic_number(h)?;
    let top = degeneracy_order(h).1 + 1;
    let exact = h.n() <= CORR_EXACT_MAX_N && h.max_degree() <= CORR_EXACT_MAX_DEGREE;
    if exact {
        for k in chi..top {
            if all_corr_assignments_colorable(h, k) {
                return Ok(CorrChromatic { value: k, mode: CorrMode::Exact });
            }
        }
        return Ok(CorrChromatic { value: top.max(chi), mode: CorrMode::Exact });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut value = chi;
    for k in chi..top {
        let mut all_ok = true;
        for _ in 0..samples {
            let pairs = edges
                .iter()
                .map(|&e| {
                    let mut perm: Vec<usize> = (1..=k).collect();
                    perm.shuffle(&mut rng);
                    (e, (1..=k).zip(perm).collect())
                })
                .collect();
            let c = CorrespondenceAssignment::new(h, vec![k; h.n()], &pairs).expect("valid permutations");
            if corr_color(h, &c)?.is_none() {
                all_ok = false;
                break;
            }
        }
        if all_ok {
            break;
        }
        value = k + 1;
    }
    Ok(CorrChromatic { value, mode: CorrMode::LowerBound { samples } })
}

/// Enumerates full `k`-matchings on every edge. Colors at each vertex can
/// be renamed independently, so the edges of a spanning forest are fixed to
/// the identity; partial matchings only remove constraints and need no
/// separate treatment.
fn all_corr_assignments_colorable(h: &Graph, k: usize) -> bool {
    let comp_forest = spanning_forest(h);
    let free: Vec<(usize, usize)> = h.edges().filter(|e| !comp_forest.contains(e)).collect();
    let identity: Vec<usize> = (1..=k).collect();
    let mut perms: Vec<Vec<usize>> = vec![identity.clone(); free.len()];
    loop {
        let mut pairs: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for &e in &comp_forest {
            pairs.insert(e, (1..=k).map(|c| (c, c)).collect());
        }
        for (e, p) in free.iter().zip(&perms) {
            pairs.insert(*e, (1..=k).zip(p.iter().copied()).collect());
        }
        let c = CorrespondenceAssignment::new(h, vec![k; h.n()], &pairs).expect("valid permutations");
        let domains = vec![(1..=k).collect(); h.n()];
        if solve_domains(h, domains, &|v, a, w, b| c.conflicts(v, a, w, b)).is_none() {
            return false;
        }
        // Odometer over the permutations of the free edges.
        let mut i = 0;
        loop {
            if i == perms.len() {
                return true;
            }
            let mut p: Vec<usize> = perms[i].iter().map(|c| c - 1).collect();
            if next_permutation(&mut p) {
                perms[i] = p.into_iter().map(|c| c + 1).collect();
                break;
            }
            perms[i] = identity.clone();
            i += 1;
        }
    }
}

fn spanning_forest(h: &Graph) -> Vec<(usize, usize)> {
    let mut seen = vec![false; h.n()];
    let mut out = Vec::new();
    for s in 0..h.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in h.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    out.push((v.min(w), v.max(w)));
                    stack.push(w);
                }
            }
        }
    }
    out
}

/// Colors are positive and differ across every edge.
pub fn is_proper_coloring(h: &Graph, color: &[usize]) -> bool {
    if color.len() != h.n() || color.contains(&0) {
        return false;
    }
    for u in 0..h.n() {
        for &v in h.neighbors(u) {
            if color[u] == color[v] {
                return false;
            }
        }
    }
    true
}

pub fn is_list_coloring(h: &Graph, lists: &ListAssignment, color: &[usize]) -> bool {
    is_proper_coloring(h, color)
        && lists.lists.len() == h.n()
        && (0..h.n()).all(|v| lists.lists[v].contains(&color[v]))
}

/// Every color is within capacity and no edge joins two matched colors.
pub fn is_corr_coloring(h: &Graph, c: &CorrespondenceAssignment, color: &[usize]) -> bool {
    if color.len() != h.n() || c.capacities.len() != h.n() {
        return false;
    }
    if (0..h.n()).any(|v| color[v] == 0 || color[v] > c.capacities[v]) {
        return false;
    }
    for (u, v) in h.edges() {
        let Some(m) = c.matchings.get(&(u, v)) else { continue };
        if m.pairs().any(|(a, b)| a == color[u] && b == color[v]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, connected_graphs, cycle, gadget, path, petersen, star};

    /// Smallest k admitting a proper coloring, by trying all k^n maps.
    fn brute_chromatic(h: &Graph) -> usize {
        let n = h.n();
        for k in 1..=n {
            let total = k.pow(n as u32);
            for code in 0..total {
                let mut c = vec![0; n];
                let mut x = code;
                for slot in c.iter_mut() {
                    *slot = x % k + 1;
                    x /= k;
                }
                if h.edges().all(|(u, v)| c[u] != c[v]) {
                    return k;
                }
            }
        }
        n
    }

    /// 2-choosability via the core characterization: after stripping
    /// degree-1 vertices, each component's core is K1, an even cycle, or
    /// theta(2, 2, 2m).
    fn two_choosable_oracle(h: &Graph) -> bool {
        let mut g = h.clone();
        loop {
            let leaf = (0..g.n()).find(|&v| g.degree(v) == 1);
            match leaf {
                Some(v) => {
                    let w = g.neighbors(v)[0];
                    g.remove_edge(v, w);
                }
                None => break,
            }
        }
        let comp = g.components();
        let k = comp.iter().max().map_or(0, |c| c + 1);
        (0..k).all(|c| {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| comp[v] == c).collect();
            let sub = g.induced_subgraph(&vs);
            let (n, m) = (sub.n(), sub.m());
            if n == 1 {
                return true;
            }
            if m == n && n % 2 == 0 && (0..n).all(|v| sub.degree(v) == 2) {
                return true;
            }
            // theta(2,2,2m): two vertices of degree 3, the rest degree 2,
            // n = 2m + 3 with m >= 1 and m = n + 1.
            let deg3: Vec<usize> = (0..n).filter(|&v| sub.degree(v) == 3).collect();
            m == n + 1
                && deg3.len() == 2
                && (0..n).all(|v| sub.degree(v) == 2 || sub.degree(v) == 3)
                && n % 2 == 1
                && {
                    let d = sub.distances_from(deg3[0]);
                    let paths_len2 = sub
                        .neighbors(deg3[0])
                        .iter()
                        .filter(|&&w| sub.has_edge(w, deg3[1]))
                        .count();
                    d[deg3[1]] == Some(2) && paths_len2 >= 2
                }
        })
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5).square()), Ok(5));
        assert_eq!(chromatic_number(&petersen().square()), Ok(10));
        assert_eq!(chromatic_number(&gadget(3, 3).unwrap().square()), Ok(9));
        assert_eq!(chromatic_number(&gadget(5, 2).unwrap().square()), Ok(5));
        assert_eq!(chromatic_number(&petersen()), Ok(3));
        assert_eq!(chromatic_number(&Graph::new(0)), Ok(0));
        assert!(matches!(chromatic_number(&Graph::new(65)), Err(ColorError::TooLarge { .. })));
    }

    #[test]
    fn solver_matches_brute_force() {
        for n in 1..=6 {
            for g in connected_graphs(n) {
                let c = exact_coloring(&g).unwrap();
                assert!(is_proper_coloring(&g, &c));
                assert_eq!(c.iter().copied().max().unwrap(), brute_chromatic(&g));
            }
        }
    }

    #[test]
    fn list_examples() {
        let k2 = complete(2);
        assert_eq!(list_color(&k2, &ListAssignment::new(vec![vec![1], vec![1]])), Ok(None));
        let l = ListAssignment::uniform(2, &[1, 2]);
        let c = list_color(&k2, &l).unwrap().unwrap();
        assert!(is_list_coloring(&k2, &l, &c));
        let l = ListAssignment::uniform(5, &[1, 2, 3]);
        let c = list_color(&cycle(5), &l).unwrap().unwrap();
        assert!(is_list_coloring(&cycle(5), &l, &c));
        assert_eq!(list_color(&Graph::new(1), &ListAssignment::new(vec![vec![]])), Ok(None));
    }

    #[test]
    fn choosability_examples() {
        assert_eq!(choosability(&cycle(5)), Ok(3));
        assert_eq!(is_k_choosable(&cycle(5), 2), Ok(false));
        assert_eq!(choosability(&cycle(4)), Ok(2));
        assert_eq!(choosability(&cycle(6)), Ok(2));
        assert_eq!(choosability(&complete(4)), Ok(4));
        assert_eq!(choosability(&star(3)), Ok(2));
        // K_{2,4} is not 2-choosable.
        let k24 = Graph::from_edges(6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(choosability(&k24), Ok(3));
    }

    #[test]
    fn two_choosability_matches_characterization() {
        for n in 1..=6 {
            for g in connected_graphs(n) {
                if chromatic_number(&g).unwrap() <= 2 {
                    assert_eq!(is_k_choosable(&g, 2).unwrap(), two_choosable_oracle(&g), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn corr_examples() {
        let k2 = complete(2);
        let pairs = BTreeMap::from([((0, 1), vec![(1, 1), (2, 2)])]);
        let c = CorrespondenceAssignment::new(&k2, vec![2, 2], &pairs).unwrap();
        let col = corr_color(&k2, &c).unwrap().unwrap();
        assert!(is_corr_coloring(&k2, &c, &col));

        let pairs = BTreeMap::from([((0, 1), vec![(1, 1)])]);
        let c = CorrespondenceAssignment::new(&k2, vec![1, 1], &pairs).unwrap();
        assert_eq!(corr_color(&k2, &c), Ok(None));

        let c4 = cycle(4);
        let c = CorrespondenceAssignment::identity(&c4, vec![2; 4]);
        let col = corr_color(&c4, &c).unwrap().unwrap();
        assert!(is_proper_coloring(&c4, &col));
    }

    #[test]
    fn corr_validation() {
        let k2 = complete(2);
        let bad = BTreeMap::from([((0, 1), vec![(1, 1), (1, 2)])]);
        assert!(matches!(
            CorrespondenceAssignment::new(&k2, vec![2, 2], &bad),
            Err(ColorError::NotInjective { .. })
        ));
        let bad = BTreeMap::from([((0, 1), vec![(3, 1)])]);
        assert!(matches!(
            CorrespondenceAssignment::new(&k2, vec![2, 2], &bad),
            Err(ColorError::ColorOutOfRange { vertex: 0, color: 3, .. })
        ));
        let reversed = BTreeMap::from([((1, 0), vec![(2, 1)])]);
        let c = CorrespondenceAssignment::new(&k2, vec![2, 2], &reversed).unwrap();
        assert!(c.conflicts(0, 1, 1, 2));
        assert!(c.conflicts(1, 2, 0, 1));
        assert!(!c.conflicts(0, 2, 1, 1));
    }

    #[test]
    fn padding_saturates_smaller_side() {
        let k2 = complete(2);
        let pairs = BTreeMap::from([((0, 1), vec![(2, 3)])]);
        let c = CorrespondenceAssignment::new(&k2, vec![2, 4], &pairs).unwrap().padded();
        let m = &c.matchings[&(0, 1)];
        assert!(m.forward.iter().all(Option::is_some));
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(1, 1), (2, 3)]);
    }

    #[test]
    fn corr_chromatic_examples() {
        let exact = |g: &Graph| {
            let r = corr_chromatic(g, 0, 0).unwrap();
            assert_eq!(r.mode, CorrMode::Exact);
            r.value
        };
        assert_eq!(exact(&complete(2)), 2);
        assert_eq!(exact(&cycle(4)), 3);
        assert_eq!(exact(&complete(3)), 3);
        assert_eq!(exact(&path(4)), 2);
        let r = corr_chromatic(&complete(5), 5, 1).unwrap();
        assert_eq!(r, CorrChromatic { value: 5, mode: CorrMode::LowerBound { samples: 5 } });
    }

    #[test]
    fn chi_list_corr_chain_on_small_graphs() {
        for n in 1..=5 {
            for g in connected_graphs(n) {
                let chi = chromatic_number(&g).unwrap();
                let ch = choosability(&g).unwrap();
                assert!(chi <= ch);
                if g.max_degree() <= CORR_EXACT_MAX_DEGREE {
                    let corr = corr_chromatic(&g, 0, 0).unwrap();
                    assert!(ch <= corr.value, "{g:?}");
                }
            }
        }
    }
}
