//! Graphs covered by two cliques with few edges between them: the
//! kernel-perfect orientation used for list coloring, and the "save a
//! color" procedure for correspondence coloring.
//!
//! All numeric hypotheses are parameters. With cross-degree cap `p`, tail
//! size `z`, list slack `s` and `|T_i|` bounded by `t_cap`, the proofs'
//! counting inequalities are evaluated at run time; the large-scale values
//! are [`TwoCliqueParams::LARGE`].

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::{is_corr_coloring, CorrespondenceAssignment};
use crate::graph::Graph;
use crate::kernel::Digraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwoCliqueError {
    #[error("not a two-clique instance: {0}")]
    NotTwoCliques(String),
    #[error("hypotheses too tight: {0}")]
    HypothesesTooTight(String),
    #[error("no pair of colors saves a color on {v} via {w} and {x}")]
    InternalPigeonholeFailure { v: usize, w: usize, x: usize },
    #[error("no uncolored partner for saving a color on {v} via {w}")]
    NoSavePartner { v: usize, w: usize },
    #[error("greedy step found no available color for vertex {0}")]
    GreedyStuck(usize),
    #[error("final coloring failed validation")]
    InvalidResult,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCliqueParams {
    /// `p`: most neighbors any vertex has in the other clique.
    pub cross_degree_cap: usize,
    /// `z`: number of trailing vertices kept free of short alternating paths.
    pub tail_size: usize,
    /// `s`: how much shorter the lists on `T_i` may be.
    pub list_slack: usize,
    /// Upper bound on `|T_i|`.
    pub t_cap: usize,
}

impl TwoCliqueParams {
    pub const LARGE: TwoCliqueParams =
        TwoCliqueParams { cross_degree_cap: 11, tail_size: 11, list_slack: 44, t_cap: 4400 };
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCliqueInstance {
    pub h: Graph,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
    pub params: TwoCliqueParams,
}

/// Side of each vertex (1 or 2) plus `T` membership.
struct Sides {
    side: Vec<u8>,
    in_t: Vec<bool>,
}

impl TwoCliqueInstance {
    fn sides(&self) -> Result<Sides, TwoCliqueError> {
        let n = self.h.n();
        let mut side = vec![0u8; n];
        for (s, set) in [(1u8, &self.b1), (2u8, &self.b2)] {
            for &v in set {
                if v >= n || side[v] != 0 {
                    return Err(TwoCliqueError::NotTwoCliques(format!("vertex {v} missing or in both cliques")));
                }
                side[v] = s;
            }
        }
        if let Some(v) = side.iter().position(|&s| s == 0) {
            return Err(TwoCliqueError::NotTwoCliques(format!("vertex {v} is in neither clique")));
        }
        for set in [&self.b1, &self.b2] {
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    if !self.h.has_edge(u, v) {
                        return Err(TwoCliqueError::NotTwoCliques(format!("{u} and {v} are in one clique but not adjacent")));
                    }
                }
            }
        }
        let mut in_t = vec![false; n];
        for (s, t) in [(1u8, &self.t1), (2u8, &self.t2)] {
            for &v in t {
                if v >= n || side[v] != s {
                    return Err(TwoCliqueError::NotTwoCliques(format!("T vertex {v} is outside its clique")));
                }
                in_t[v] = true;
            }
            if t.len() > self.params.t_cap {
                return Err(TwoCliqueError::HypothesesTooTight(format!(
                    "|T| = {} exceeds cap {}",
                    t.len(),
                    self.params.t_cap
                )));
            }
        }
        let p = self.params.cross_degree_cap;
        for v in 0..n {
            let cross = self.h.neighbors(v).iter().filter(|&&w| side[w] != side[v]).count();
            if cross > p {
                return Err(TwoCliqueError::HypothesesTooTight(format!(
                    "vertex {v} has {cross} neighbors in the other clique, cap is {p}"
                )));
            }
        }
        Ok(Sides { side, in_t })
    }

    fn cross(&self, sides: &Sides, v: usize) -> Vec<usize> {
        self.h.neighbors(v).iter().copied().filter(|&w| sides.side[w] != sides.side[v]).collect()
    }
}

/// Smallest `|B_i|` for which the orientation's counting argument goes
/// through, given `|T_i|` and `|T_{3-i}|`.
pub fn orientation_size_floor(params: &TwoCliqueParams, t_own: usize, t_other: usize) -> usize {
    let p = params.cross_degree_cap;
    let z = params.tail_size;
    let q = p.saturating_sub(1);
    // Vertices of B_i reachable from the other tail by alternating paths of
    // length 1 or 3, plus the vertex defining that tail.
    let reach = z * q * q * q + z * q + 1;
    [t_own + reach + z, t_own + p * t_other + z, t_own + p + params.list_slack]
        .into_iter()
        .max()
        .unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCliqueOrientation {
    /// `B_1` in order `x_1, x_2, ...`: `T_1` first, tail `Z_1` last.
    pub order1: Vec<usize>,
    pub order2: Vec<usize>,
    pub z1: Vec<usize>,
    pub z2: Vec<usize>,
    pub digraph: Digraph,
    /// Guaranteed list length per vertex: `|B_i| − s` on `T_i`, else `|B_i|`.
    pub list_bounds: Vec<usize>,
}

fn lowest(candidates: impl Iterator<Item = usize>, count: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = candidates.collect();
    set.into_iter().take(count).collect()
}

/// Orders both cliques with `T_i` first and tails `Z_i` last such that no
/// alternating path of length at most 3 joins `Z_1` and `Z_2`, then orients
/// clique edges toward the lower index and cross edges both ways unless they
/// touch a tail, in which case toward the tail vertex.
pub fn build_two_clique_orientation(inst: &TwoCliqueInstance) -> Result<TwoCliqueOrientation, TwoCliqueError> {
    let sides = inst.sides()?;
    let p = inst.params.cross_degree_cap;
    let z = inst.params.tail_size;
    if z < p {
        return Err(TwoCliqueError::HypothesesTooTight(format!("tail size {z} is below the cross-degree cap {p}")));
    }
    for (b, t, t_other) in [(&inst.b1, &inst.t1, &inst.t2), (&inst.b2, &inst.t2, &inst.t1)] {
        let floor = orientation_size_floor(&inst.params, t.len(), t_other.len());
        if b.len() < floor {
            return Err(TwoCliqueError::HypothesesTooTight(format!("clique of size {} is below the floor {floor}", b.len())));
        }
    }

    let in_t1: BTreeSet<usize> = inst.t1.iter().copied().collect();
    let in_t2: BTreeSet<usize> = inst.t2.iter().copied().collect();
    let near_t2: BTreeSet<usize> = inst.t2.iter().flat_map(|&y| inst.cross(&sides, y)).collect();
    let near_t1: BTreeSet<usize> = inst.t1.iter().flat_map(|&x| inst.cross(&sides, x)).collect();

    let mut b1_sorted = inst.b1.clone();
    b1_sorted.sort_unstable();
    let anchor = b1_sorted
        .iter()
        .copied()
        .find(|&v| !near_t2.contains(&v) && inst.cross(&sides, v).len() >= z && z > 0);
    let z2 = match anchor {
        Some(v) => lowest(inst.cross(&sides, v).into_iter(), z),
        None => lowest(inst.b2.iter().copied().filter(|y| !in_t2.contains(y) && !near_t1.contains(y)), z),
    };
    if z2.len() < z {
        return Err(TwoCliqueError::HypothesesTooTight("not enough candidates for the tail of B_2".into()));
    }
    let z2_set: BTreeSet<usize> = z2.iter().copied().collect();
    let reach1: BTreeSet<usize> = z2.iter().flat_map(|&y| inst.cross(&sides, y)).collect();
    let reach2: BTreeSet<usize> =
        reach1.iter().flat_map(|&x| inst.cross(&sides, x)).filter(|y| !z2_set.contains(y)).collect();
    let reach3: BTreeSet<usize> = reach2.iter().flat_map(|&y| inst.cross(&sides, y)).collect();
    let z1 = lowest(
        inst.b1
            .iter()
            .copied()
            .filter(|x| !in_t1.contains(x) && !reach1.contains(x) && !reach3.contains(x) && Some(*x) != anchor),
        z,
    );
    if z1.len() < z {
        return Err(TwoCliqueError::HypothesesTooTight("not enough candidates for the tail of B_1".into()));
    }

    let order = |b: &[usize], t: &[usize], tail: &[usize]| -> Vec<usize> {
        let mut t_sorted = t.to_vec();
        t_sorted.sort_unstable();
        let mut middle: Vec<usize> = b.iter().copied().filter(|v| !t.contains(v) && !tail.contains(v)).collect();
        middle.sort_unstable();
        t_sorted.into_iter().chain(middle).chain(tail.iter().copied()).collect()
    };
    let order1 = order(&inst.b1, &inst.t1, &z1);
    let order2 = order(&inst.b2, &inst.t2, &z2);
    let n = inst.h.n();
    let mut index = vec![0usize; n];
    for ord in [&order1, &order2] {
        for (i, &v) in ord.iter().enumerate() {
            index[v] = i;
        }
    }
    let tail: BTreeSet<usize> = z1.iter().chain(&z2).copied().collect();
    let mut arcs = Vec::new();
    for (u, v) in inst.h.edges() {
        if sides.side[u] == sides.side[v] {
            if index[u] > index[v] {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        } else {
            match (tail.contains(&u), tail.contains(&v)) {
                (true, true) => {
                    return Err(TwoCliqueError::HypothesesTooTight(format!("edge {u}-{v} joins the two tails")));
                }
                (true, false) => arcs.push((v, u)),
                (false, true) => arcs.push((u, v)),
                (false, false) => {
                    arcs.push((u, v));
                    arcs.push((v, u));
                }
            }
        }
    }
    let digraph = Digraph::new(n, arcs).expect("arcs come from graph edges");
    let list_bounds = (0..n)
        .map(|v| {
            let size = if sides.side[v] == 1 { inst.b1.len() } else { inst.b2.len() };
            if sides.in_t[v] {
                size.saturating_sub(inst.params.list_slack)
            } else {
                size
            }
        })
        .collect();
    Ok(TwoCliqueOrientation { order1, order2, z1, z2, digraph, list_bounds })
}

/// Smallest clique size `n` for which the save-a-color procedure is
/// guaranteed to succeed.
pub fn save_color_size_floor(params: &TwoCliqueParams, t1: usize, t2: usize) -> usize {
    let p = params.cross_degree_cap;
    let z = params.tail_size;
    let s = params.list_slack;
    let q = p.saturating_sub(1);
    [
        // Room for the tail of B_2 after saving colors.
        t2 + p * p * p + p * p + z,
        // Room for A with pairwise disjoint neighborhoods in B_2.
        t1 + q * (p * q + 1) + 1,
        // Pigeonhole: 2(n − s − p² − p) > n.
        2 * s + 2 * p * p + 2 * p + 1,
        // Greedy on T_i still has a spare color.
        t1.max(t2) + p + p * p + s,
    ]
    .into_iter()
    .max()
    .unwrap()
}

/// Correspondence coloring of a two-clique graph with `|B_1| = |B_2| = n`.
///
/// Chooses `A ⊆ B_1 \ T_1` of size `Δ(H) + 1 − n` with pairwise disjoint
/// neighborhoods in `B_2`. For each `v ∈ A` and each neighbor `w ∈ B_2`, a
/// non-neighbor `x ∈ B_1` of `w` is colored together with `w` so that both
/// forbid the same color on `v`. Then the rest is colored greedily: `T_2`,
/// `B_2 \ T_2` with a tail of vertices without colored `B_1`-neighbors
/// last, `T_1`, `B_1 \ (T_1 ∪ A)`, and finally `A`.
pub fn save_color_coloring(inst: &TwoCliqueInstance, c: &CorrespondenceAssignment) -> Result<Vec<usize>, TwoCliqueError> {
    let sides = inst.sides()?;
    let h = &inst.h;
    let params = &inst.params;
    let n = inst.b1.len();
    if inst.b2.len() != n {
        return Err(TwoCliqueError::NotTwoCliques(format!("cliques have sizes {n} and {}", inst.b2.len())));
    }
    if c.capacities.len() != h.n() {
        return Err(TwoCliqueError::NotTwoCliques("assignment does not cover the graph".into()));
    }
    let floor = save_color_size_floor(params, inst.t1.len(), inst.t2.len());
    if n < floor {
        return Err(TwoCliqueError::HypothesesTooTight(format!("n = {n} is below the floor {floor}")));
    }
    let delta = h.max_degree();
    if delta + 1 > n + params.cross_degree_cap {
        return Err(TwoCliqueError::HypothesesTooTight(format!(
            "Δ(H) − n + 1 = {} exceeds {}",
            delta + 1 - n,
            params.cross_degree_cap
        )));
    }
    // Work with capacities cut down to the guaranteed values; a coloring
    // from fewer colors is still valid for the original assignment.
    let mut cap = vec![0usize; h.n()];
    for v in 0..h.n() {
        let need = if sides.in_t[v] { n - params.list_slack } else { n };
        if c.capacities[v] < need {
            return Err(TwoCliqueError::HypothesesTooTight(format!(
                "vertex {v} has capacity {} below {need}",
                c.capacities[v]
            )));
        }
        cap[v] = need;
    }
    let restricted = restrict(h, c, &cap).padded();

    let in_t1: BTreeSet<usize> = inst.t1.iter().copied().collect();
    let in_t2: BTreeSet<usize> = inst.t2.iter().copied().collect();
    let a_size = (delta + 1).saturating_sub(n);
    let mut b1_sorted = inst.b1.clone();
    b1_sorted.sort_unstable();
    let mut b2_sorted = inst.b2.clone();
    b2_sorted.sort_unstable();

    let mut a = Vec::new();
    let mut claimed: BTreeSet<usize> = BTreeSet::new();
    for &v in &b1_sorted {
        if a.len() == a_size {
            break;
        }
        if in_t1.contains(&v) {
            continue;
        }
        let nb = inst.cross(&sides, v);
        if nb.iter().all(|w| !claimed.contains(w)) {
            claimed.extend(nb);
            a.push(v);
        }
    }
    if a.len() < a_size {
        return Err(TwoCliqueError::HypothesesTooTight(format!("found only {} of {a_size} vertices for A", a.len())));
    }
    let in_a: BTreeSet<usize> = a.iter().copied().collect();

    let mut color = vec![0usize; h.n()];
    let available = |v: usize, color: &[usize]| -> Vec<usize> {
        (1..=cap[v])
            .filter(|&x| h.neighbors(v).iter().all(|&u| color[u] == 0 || !restricted.conflicts(v, x, u, color[u])))
            .collect()
    };
    for &v in &a {
        for w in inst.cross(&sides, v) {
            let x = b1_sorted
                .iter()
                .copied()
                .filter(|&x| color[x] == 0 && !in_a.contains(&x) && !h.has_edge(x, w))
                .min_by_key(|x| in_t1.contains(x))
                .ok_or(TwoCliqueError::NoSavePartner { v, w })?;
            // Colors at v forbidden by each candidate color of w.
            let mut via_w: BTreeMap<usize, usize> = BTreeMap::new();
            for alpha in available(w, &color) {
                if let Some(gamma) = partner(&restricted, w, alpha, v) {
                    via_w.entry(gamma).or_insert(alpha);
                }
            }
            let pick = available(x, &color).into_iter().find_map(|beta| {
                let gamma = partner(&restricted, x, beta, v)?;
                via_w.get(&gamma).map(|&alpha| (alpha, beta))
            });
            let (alpha, beta) = pick.ok_or(TwoCliqueError::InternalPigeonholeFailure { v, w, x })?;
            color[w] = alpha;
            color[x] = beta;
        }
    }

    let tail: Vec<usize> = b2_sorted
        .iter()
        .copied()
        .filter(|&y| {
            color[y] == 0 && !in_t2.contains(&y) && inst.cross(&sides, y).iter().all(|&x| color[x] == 0)
        })
        .take(params.tail_size)
        .collect();
    if tail.len() < params.tail_size.min(n) {
        return Err(TwoCliqueError::HypothesesTooTight("not enough vertices for the tail of B_2".into()));
    }
    let in_tail: BTreeSet<usize> = tail.iter().copied().collect();

    let mut sequence: Vec<usize> = Vec::with_capacity(h.n());
    sequence.extend(b2_sorted.iter().filter(|y| in_t2.contains(y)));
    sequence.extend(b2_sorted.iter().filter(|y| !in_t2.contains(y) && !in_tail.contains(y)));
    sequence.extend(&tail);
    sequence.extend(b1_sorted.iter().filter(|x| in_t1.contains(x)));
    sequence.extend(b1_sorted.iter().filter(|x| !in_t1.contains(x) && !in_a.contains(x)));
    sequence.extend(&a);
    for v in sequence {
        if color[v] != 0 {
            continue;
        }
        color[v] = *available(v, &color).first().ok_or(TwoCliqueError::GreedyStuck(v))?;
    }
    if !is_corr_coloring(h, c, &color) {
        return Err(TwoCliqueError::InvalidResult);
    }
    Ok(color)
}

/// The color at `v` matched to color `a` at its neighbor `u`.
fn partner(c: &CorrespondenceAssignment, u: usize, a: usize, v: usize) -> Option<usize> {
    let m = c.matchings.get(&(u.min(v), u.max(v)))?;
    if u < v {
        m.forward.get(a - 1).copied().flatten()
    } else {
        m.backward.get(a - 1).copied().flatten()
    }
}

/// Drops matched pairs that use colors above the new capacities.
fn restrict(h: &Graph, c: &CorrespondenceAssignment, cap: &[usize]) -> CorrespondenceAssignment {
    let pairs = c
        .matchings
        .iter()
        .map(|(&(u, v), m)| ((u, v), m.pairs().filter(|&(a, b)| a <= cap[u] && b <= cap[v]).collect()))
        .collect();
    CorrespondenceAssignment::new(h, cap.to_vec(), &pairs).expect("restriction keeps matchings valid")
}

/// Random two-clique instance: cliques `0..n1` and `n1..n1+n2`, cross edges
/// added in random order with probability `density` while both endpoints
/// stay within the cross-degree cap, and `T_i` the first `t1` / `t2`
/// vertices of each clique after shuffling.
pub fn random_instance(
    n1: usize,
    n2: usize,
    t1: usize,
    t2: usize,
    density: f64,
    params: TwoCliqueParams,
    seed: u64,
) -> TwoCliqueInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n1 + n2;
    let mut h = Graph::new(n);
    for block in [0..n1, n1..n] {
        for u in block.clone() {
            for v in u + 1..block.end {
                h.add_edge(u, v);
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n1).flat_map(|u| (n1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut cross = vec![0usize; n];
    for (u, v) in pairs {
        if cross[u] < params.cross_degree_cap && cross[v] < params.cross_degree_cap && rng.gen_bool(density) {
            h.add_edge(u, v);
            cross[u] += 1;
            cross[v] += 1;
        }
    }
    let mut b1: Vec<usize> = (0..n1).collect();
    let mut b2: Vec<usize> = (n1..n).collect();
    b1.shuffle(&mut rng);
    b2.shuffle(&mut rng);
    let mut t1v: Vec<usize> = b1[..t1].to_vec();
    let mut t2v: Vec<usize> = b2[..t2].to_vec();
    t1v.sort_unstable();
    t2v.sort_unstable();
    b1.sort_unstable();
    b2.sort_unstable();
    TwoCliqueInstance { h, b1, b2, t1: t1v, t2: t2v, params }
}

/// Random correspondence assignment with the given capacities: every edge
/// gets a random matching of `min(f(u), f(v)) − drop` pairs, where `drop` is
/// 0 or 1.
pub fn random_correspondence(h: &Graph, capacities: &[usize], seed: u64) -> CorrespondenceAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = BTreeMap::new();
    for (u, v) in h.edges() {
        let mut left: Vec<usize> = (1..=capacities[u]).collect();
        let mut right: Vec<usize> = (1..=capacities[v]).collect();
        left.shuffle(&mut rng);
        right.shuffle(&mut rng);
        let size = capacities[u].min(capacities[v]).saturating_sub(rng.gen_range(0..=1));
        pairs.insert((u, v), left.into_iter().zip(right).take(size).collect::<Vec<_>>());
    }
    CorrespondenceAssignment::new(h, capacities.to_vec(), &pairs).expect("random matchings are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::is_kernel_perfect;

    fn small_params(p: usize, z: usize, s: usize) -> TwoCliqueParams {
        TwoCliqueParams { cross_degree_cap: p, tail_size: z, list_slack: s, t_cap: 10 }
    }

    #[test]
    fn large_floor_matches_constant() {
        let p = TwoCliqueParams::LARGE;
        assert_eq!(save_color_size_floor(&p, 4400, 4400), 5863);
        // |T_2| + 11|T_1| + 11 dominates the alternating-path count 11111.
        assert_eq!(orientation_size_floor(&p, 4400, 4400), 52811);
        assert_eq!(orientation_size_floor(&p, 0, 0), 11111 + 11);
    }

    #[test]
    fn orientation_examples() {
        let params = small_params(2, 2, 0);
        let inst = random_instance(40, 40, 0, 0, 0.1, params, 5);
        let o = build_two_clique_orientation(&inst).unwrap();
        for &x in &o.z1 {
            for &y in &o.z2 {
                assert!(!inst.h.has_edge(x, y));
            }
        }
        let tight = random_instance(6, 6, 0, 0, 0.3, params, 5);
        assert!(matches!(build_two_clique_orientation(&tight), Err(TwoCliqueError::HypothesesTooTight(_))));

        let empty = random_instance(7, 7, 0, 0, 0.0, params, 1);
        let o = build_two_clique_orientation(&empty).unwrap();
        assert_eq!(is_kernel_perfect(&o.digraph), Ok(true));
    }

    #[test]
    fn small_orientation_is_kernel_perfect() {
        let mut built = 0;
        for seed in 0..20 {
            let (params, t) = if seed % 2 == 0 { (small_params(2, 2, 0), 0) } else { (small_params(1, 1, 2), 2) };
            let inst = random_instance(7, 7, t, t, 0.3, params, seed);
            if let Ok(o) = build_two_clique_orientation(&inst) {
                built += 1;
                assert_eq!(is_kernel_perfect(&o.digraph), Ok(true));
                for v in 0..14 {
                    assert!(o.digraph.out_degree(v) < o.list_bounds[v]);
                }
            }
        }
        assert!(built >= 15, "only {built} instances built");
    }

    #[test]
    fn save_color_on_disjoint_cliques() {
        let params = small_params(3, 3, 4);
        let inst = random_instance(60, 60, 5, 5, 0.0, params, 2);
        let c = CorrespondenceAssignment::identity(&inst.h, vec![60; 120]);
        let col = save_color_coloring(&inst, &c).unwrap();
        assert!(is_corr_coloring(&inst.h, &c, &col));
    }

    #[test]
    fn save_color_on_random_correspondences() {
        let params = small_params(3, 3, 4);
        for seed in 0..20 {
            let inst = random_instance(60, 60, 5, 5, 0.05, params, seed);
            let caps: Vec<usize> =
                (0..120).map(|v| if inst.t1.contains(&v) || inst.t2.contains(&v) { 56 } else { 60 }).collect();
            let c = random_correspondence(&inst.h, &caps, seed);
            let col = save_color_coloring(&inst, &c).unwrap();
            assert!(is_corr_coloring(&inst.h, &c, &col));
        }
    }

    #[test]
    fn save_color_rejects_dense_cross_edges() {
        let params = small_params(3, 3, 4);
        let mut inst = random_instance(60, 60, 0, 0, 0.0, params, 2);
        for v in 60..64 {
            inst.h.add_edge(0, v);
        }
        let c = CorrespondenceAssignment::identity(&inst.h, vec![60; 120]);
        assert!(matches!(save_color_coloring(&inst, &c), Err(TwoCliqueError::HypothesesTooTight(_))));
    }
}
