//! Orientations, eulerian-subgraph parity, the Alon–Tarsi number, and the
//! online list-coloring (paint) game.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::{choosability, chromatic_number, ColorError};
use crate::degeneracy::degeneracy_order;
use crate::graph::Graph;
use crate::kernel::Digraph;

pub const PARITY_MAX_ARCS: usize = 24;
pub const AT_MAX_EDGES: usize = 12;
pub const PAINT_MAX_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("{what} supports at most {limit}, got {got}")]
    TooLarge { what: &'static str, got: usize, limit: usize },
    #[error("edge {0}-{1} has no direction or a head that is not an endpoint")]
    BadDirection(usize, usize),
    #[error(transparent)]
    Color(#[from] ColorError),
}

fn guard(what: &'static str, got: usize, soft: usize, hard: usize) -> Result<(), GameError> {
    let limit = crate::limits::effective(soft, hard);
    if got > limit {
        Err(GameError::TooLarge { what, got, limit })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeDirection {
    /// Directed toward the given endpoint.
    Toward(usize),
    Both,
}

/// A direction for every edge of `base`, indexed like [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub base: Graph,
    pub heads: Vec<EdgeDirection>,
}

impl Orientation {
    pub fn new(base: Graph, heads: Vec<EdgeDirection>) -> Result<Self, GameError> {
        let edges: Vec<(usize, usize)> = base.edges().collect();
        if heads.len() != edges.len() {
            let (u, v) = edges.get(heads.len()).copied().unwrap_or((0, 0));
            return Err(GameError::BadDirection(u, v));
        }
        for (&(u, v), h) in edges.iter().zip(&heads) {
            if let EdgeDirection::Toward(x) = *h {
                if x != u && x != v {
                    return Err(GameError::BadDirection(u, v));
                }
            }
        }
        Ok(Orientation { base, heads })
    }

    /// Each edge toward its endpoint that comes later in `order`, which
    /// gives an acyclic orientation.
    pub fn from_order(base: Graph, order: &[usize]) -> Self {
        let mut pos = vec![0; base.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let heads = base
            .edges()
            .map(|(u, v)| EdgeDirection::Toward(if pos[u] > pos[v] { u } else { v }))
            .collect();
        Orientation { base, heads }
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut arcs = Vec::new();
        for ((u, v), h) in self.base.edges().zip(&self.heads) {
            match *h {
                EdgeDirection::Toward(x) if x == v => arcs.push((u, v)),
                EdgeDirection::Toward(_) => arcs.push((v, u)),
                EdgeDirection::Both => {
                    arcs.push((u, v));
                    arcs.push((v, u));
                }
            }
        }
        Digraph::new(self.base.n(), arcs).expect("orientation arcs come from graph edges")
    }

    pub fn max_out_degree(&self) -> usize {
        let d = self.to_digraph();
        (0..d.n()).map(|v| d.out_degree(v)).max().unwrap_or(0)
    }
}

/// `EE(D) − EO(D)`: even minus odd arc subsets in which every vertex has
/// equal in- and out-degree. Subsets are walked in Gray-code order so each
/// step updates two vertex balances.
pub fn eulerian_parity_diff(d: &Digraph) -> Result<i64, GameError> {
    let arcs = d.arcs();
    guard("eulerian parity (arcs)", arcs.len(), PARITY_MAX_ARCS, 40)?;
    Ok(parity_diff_arcs(d.n(), arcs))
}

fn parity_diff_arcs(n: usize, arcs: &[(usize, usize)]) -> i64 {
    let m = arcs.len();
    let mut balance = vec![0i32; n];
    let mut unbalanced = 0usize;
    let mut chosen = vec![false; m];
    let mut size = 0usize;
    let mut diff = 1i64;
    let adjust = |v: usize, delta: i32, balance: &mut Vec<i32>, unbalanced: &mut usize| {
        let before = balance[v];
        balance[v] += delta;
        match (before == 0, balance[v] == 0) {
            (true, false) => *unbalanced += 1,
            (false, true) => *unbalanced -= 1,
            _ => {}
        }
    };
    for i in 1u64..(1u64 << m) {
        let bit = i.trailing_zeros() as usize;
        let (a, b) = arcs[bit];
        let sign = if chosen[bit] { -1 } else { 1 };
        chosen[bit] = !chosen[bit];
        if chosen[bit] {
            size += 1;
        } else {
            size -= 1;
        }
        adjust(a, sign, &mut balance, &mut unbalanced);
        adjust(b, -sign, &mut balance, &mut unbalanced);
        if unbalanced == 0 {
            diff += if size % 2 == 0 { 1 } else { -1 };
        }
    }
    diff
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlonTarsi {
    pub value: usize,
    pub witness: Orientation,
    pub parity_diff: i64,
}

/// Least `k` such that some orientation with maximum out-degree `k − 1` has
/// nonzero eulerian parity difference, with a witness orientation.
pub fn alon_tarsi(h: &Graph) -> Result<AlonTarsi, GameError> {
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let m = edges.len();
    guard("alon-tarsi (edges)", m, AT_MAX_EDGES, 30)?;
    // An acyclic orientation along the degeneracy order already achieves
    // degeneracy + 1.
    let (order, _) = degeneracy_order(h);
    let mut best = Orientation::from_order(h.clone(), &order);
    let mut best_value = best.max_out_degree() + 1;
    let mut best_diff = 1;
    let mut out = vec![0usize; h.n()];
    for mask in 0u64..(1u64 << m) {
        out.iter_mut().for_each(|x| *x = 0);
        let mut arcs = Vec::with_capacity(m);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = if mask >> i & 1 == 1 { (v, u) } else { (u, v) };
            out[a] += 1;
            arcs.push((a, b));
        }
        let value = out.iter().copied().max().unwrap_or(0) + 1;
        if value >= best_value {
            continue;
        }
        let diff = parity_diff_arcs(h.n(), &arcs);
        if diff != 0 {
            best_value = value;
            best_diff = diff;
            let heads = arcs.iter().map(|&(_, b)| EdgeDirection::Toward(b)).collect();
            best = Orientation { base: h.clone(), heads };
        }
    }
    Ok(AlonTarsi { value: best_value, witness: best, parity_diff: best_diff })
}

pub fn alon_tarsi_number(h: &Graph) -> Result<usize, GameError> {
    Ok(alon_tarsi(h)?.value)
}

/// Whether Painter wins the online list-coloring game when every vertex
/// holds `k` tokens.
///
/// Each round Lister presents a nonempty set `S` of uncolored vertices,
/// spending one token of each; Painter colors an independent subset of `S`.
/// Lister wins once a presented, uncolored vertex has no tokens left.
/// Painter only needs to answer with maximal independent subsets of `S`
/// containing every vertex that just spent its last token, since coloring
/// more vertices never hurts.
pub fn painter_wins(h: &Graph, k: usize) -> Result<bool, GameError> {
    let n = h.n();
    guard("paint (vertices)", n, PAINT_MAX_N, PAINT_MAX_N)?;
    if n == 0 {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let adj: Vec<u32> = h.adjacency_masks().into_iter().map(|m| m as u32).collect();
    let mut memo = HashMap::new();
    let all = (1u32 << n) - 1;
    let budgets = vec![k as u8; n];
    Ok(paint_rec(&adj, all, &budgets, &mut memo))
}

fn paint_key(uncolored: u32, budgets: &[u8]) -> u64 {
    let mut key = uncolored as u64;
    for (v, &b) in budgets.iter().enumerate() {
        if uncolored >> v & 1 == 1 {
            key |= (b as u64) << (8 + 4 * v);
        }
    }
    key
}

fn paint_rec(adj: &[u32], uncolored: u32, budgets: &[u8], memo: &mut HashMap<u64, bool>) -> bool {
    if uncolored == 0 {
        return true;
    }
    let key = paint_key(uncolored, budgets);
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let mut result = true;
    // Lister: every nonempty subset of the uncolored vertices.
    let mut s = uncolored;
    while s != 0 {
        let forced = (0..adj.len()).filter(|&v| s >> v & 1 == 1 && budgets[v] == 1).fold(0u32, |m, v| m | 1 << v);
        let painter_ok = forced_independent(adj, forced) && {
            let mut next_budgets = budgets.to_vec();
            for (v, b) in next_budgets.iter_mut().enumerate() {
                if s >> v & 1 == 1 {
                    *b -= 1;
                }
            }
            let mut win = false;
            for_each_maximal_independent(adj, s, forced, &mut |i| {
                if !win && paint_rec(adj, uncolored & !i, &next_budgets, memo) {
                    win = true;
                }
                win
            });
            win
        };
        if !painter_ok {
            result = false;
            break;
        }
        s = (s - 1) & uncolored;
    }
    memo.insert(key, result);
    result
}

fn forced_independent(adj: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & set != 0 {
            return false;
        }
    }
    true
}

/// Calls `f` on every maximal independent subset of `within` that contains
/// `base` (assumed independent). Stops early when `f` returns true.
fn for_each_maximal_independent(adj: &[u32], within: u32, base: u32, f: &mut dyn FnMut(u32) -> bool) {
    fn rec(adj: &[u32], cand: u32, chosen: u32, excluded: u32, f: &mut dyn FnMut(u32) -> bool) -> bool {
        if cand == 0 {
            // Maximal: every excluded vertex has a neighbor in `chosen`.
            let mut rest = excluded;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[v] & chosen == 0 {
                    return false;
                }
            }
            return f(chosen);
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u32 << v;
        if rec(adj, cand & !bit & !adj[v], chosen | bit, excluded, f) {
            return true;
        }
        rec(adj, cand & !bit, chosen, excluded | bit, f)
    }
    let mut cand = within & !base;
    let mut rest = base;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        cand &= !adj[v];
    }
    rec(adj, cand, base, 0, f);
}

/// Least `k` for which Painter wins the paint game.
pub fn paint_number(h: &Graph) -> Result<usize, GameError> {
    guard("paint (vertices)", h.n(), PAINT_MAX_N, PAINT_MAX_N)?;
    let top = degeneracy_order(h).1 + 1;
    for k in 1..top {
        if painter_wins(h, k)? {
            return Ok(k);
        }
    }
    Ok(if h.n() == 0 { 0 } else { top })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub chi: usize,
    pub chi_list: usize,
    pub chi_paint: usize,
    pub alon_tarsi: usize,
    pub degeneracy_plus_one: usize,
    pub holds: bool,
}

/// Computes `χ ≤ χℓ ≤ χp ≤ AT ≤ degeneracy + 1` and reports whether the
/// chain holds.
pub fn parameter_chain_check(h: &Graph) -> Result<ChainReport, GameError> {
    let chi = chromatic_number(h)?;
    let chi_list = choosability(h)?;
    let chi_paint = paint_number(h)?;
    let alon_tarsi = alon_tarsi_number(h)?;
    let degeneracy_plus_one = if h.n() == 0 { 0 } else { degeneracy_order(h).1 + 1 };
    let holds = chi <= chi_list && chi_list <= chi_paint && chi_paint <= alon_tarsi && alon_tarsi <= degeneracy_plus_one;
    Ok(ChainReport { chi, chi_list, chi_paint, alon_tarsi, degeneracy_plus_one, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    /// Counts eulerian subsets by plain enumeration without Gray code.
    fn naive_parity(d: &Digraph) -> i64 {
        let arcs = d.arcs();
        let mut diff = 0;
        for mask in 0u64..(1 << arcs.len()) {
            let mut bal = vec![0i32; d.n()];
            for (i, &(a, b)) in arcs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    bal[a] += 1;
                    bal[b] -= 1;
                }
            }
            if bal.iter().all(|&x| x == 0) {
                diff += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
        diff
    }

    #[test]
    fn parity_examples() {
        assert_eq!(eulerian_parity_diff(&directed_cycle(4)), Ok(2));
        assert_eq!(eulerian_parity_diff(&directed_cycle(3)), Ok(0));
        let acyclic = Orientation::from_order(complete(4), &[0, 1, 2, 3]).to_digraph();
        assert_eq!(eulerian_parity_diff(&acyclic), Ok(1));
        let two_cycles = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(eulerian_parity_diff(&two_cycles), Ok(2));
    }

    #[test]
    fn gray_code_matches_naive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(2..=6);
            let m = rng.gen_range(0..=12);
            let arcs: Vec<(usize, usize)> = (0..m)
                .map(|_| {
                    let a = rng.gen_range(0..n);
                    let b = (a + rng.gen_range(1..n)) % n;
                    (a, b)
                })
                .collect();
            let d = Digraph::new(n, arcs).unwrap();
            assert_eq!(eulerian_parity_diff(&d).unwrap(), naive_parity(&d));
        }
    }

    #[test]
    fn alon_tarsi_examples() {
        assert_eq!(alon_tarsi_number(&complete(2)), Ok(2));
        assert_eq!(alon_tarsi_number(&cycle(4)), Ok(2));
        assert_eq!(alon_tarsi_number(&cycle(5)), Ok(3));
        assert_eq!(alon_tarsi_number(&path(5)), Ok(2));
        assert_eq!(alon_tarsi_number(&complete(4)), Ok(4));
        let at = alon_tarsi(&cycle(4)).unwrap();
        assert_eq!(at.witness.max_out_degree(), 1);
        assert_eq!(eulerian_parity_diff(&at.witness.to_digraph()), Ok(at.parity_diff));
        assert!(matches!(alon_tarsi_number(&complete(6)), Err(GameError::TooLarge { .. })));
    }

    #[test]
    fn paint_examples() {
        assert_eq!(paint_number(&complete(2)), Ok(2));
        assert_eq!(paint_number(&cycle(5)), Ok(3));
        assert_eq!(paint_number(&star(3)), Ok(2));
        assert_eq!(paint_number(&cycle(4)), Ok(2));
        assert_eq!(paint_number(&complete(4)), Ok(4));
        assert_eq!(painter_wins(&Graph::new(1), 1), Ok(true));
    }

    #[test]
    fn chain_examples() {
        let c5 = parameter_chain_check(&cycle(5)).unwrap();
        assert_eq!((c5.chi, c5.chi_list, c5.chi_paint, c5.alon_tarsi, c5.degeneracy_plus_one), (3, 3, 3, 3, 3));
        let k4 = parameter_chain_check(&complete(4)).unwrap();
        assert_eq!((k4.chi, k4.chi_list, k4.chi_paint, k4.alon_tarsi, k4.degeneracy_plus_one), (4, 4, 4, 4, 4));
        let c6 = parameter_chain_check(&cycle(6)).unwrap();
        assert_eq!((c6.chi, c6.chi_list, c6.alon_tarsi, c6.degeneracy_plus_one), (2, 2, 2, 3));
        assert_eq!(c6.chi_paint, 2);
        assert!(c5.holds && k4.holds && c6.holds);
    }
}
