//! Digraphs, kernels, kernel-perfection and the kernel list-coloring
//! procedure.
//!
//! A kernel is a set `K` such that a vertex lies in `K` exactly when none
//! of its out-neighbors does: `K` is independent and absorbs every vertex
//! outside it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::ListAssignment;
use crate::graph::Graph;

pub const KERNEL_MAX_N: usize = 20;
pub const KERNEL_PERFECT_MAX_N: usize = 15;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("{what} supports at most {limit} vertices, got {n}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("arc {0} -> {1} references a missing vertex or is a loop")]
    BadArc(usize, usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// The sub-digraph induced on these vertices has no kernel.
    NoKernel(Vec<usize>),
    /// `|L(v)| < d⁺(v) + 1`.
    ListTooShort { vertex: usize, list: usize, out_degree: usize },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::NoKernel(vs) => write!(f, "no kernel in sub-digraph induced on {vs:?}"),
            Witness::ListTooShort { vertex, list, out_degree } => {
                write!(f, "vertex {vertex} has {list} colors but out-degree {out_degree}")
            }
        }
    }
}

/// Directed graph on `0..n`. A bidirected edge is stored as two opposite
/// arcs; out-neighbor sets are deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, KernelError> {
        let mut out = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            if a >= n || b >= n || a == b {
                return Err(KernelError::BadArc(a, b));
            }
            out[a].push(b);
        }
        for o in &mut out {
            o.sort_unstable();
            o.dedup();
        }
        Ok(Digraph { n, arcs, out })
    }

    /// Both arcs for every edge of `g`.
    pub fn symmetric(g: &Graph) -> Self {
        let arcs = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
        Digraph::new(g.n(), arcs).expect("graph edges are valid arcs")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out[a].binary_search(&b).is_ok()
    }

    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &(a, b) in &self.arcs {
            g.add_edge(a, b);
        }
        g
    }

    fn out_masks(&self) -> Vec<u32> {
        self.out.iter().map(|o| o.iter().fold(0u32, |m, &w| m | 1 << w)).collect()
    }
}

fn guard(what: &'static str, n: usize, soft: usize, hard: usize) -> Result<(), KernelError> {
    let limit = crate::limits::effective(soft, hard);
    if n > limit {
        Err(KernelError::TooLarge { what, n, limit })
    } else {
        Ok(())
    }
}

/// Kernel of the sub-digraph induced on `subset`, by include/exclude
/// backtracking. Vertices with no out-neighbor in the remaining candidates
/// are forced in.
fn kernel_in(out: &[u32], in_: &[u32], subset: u32) -> Option<u32> {
    fn rec(out: &[u32], in_: &[u32], subset: u32, undecided: u32, inside: u32, outside: u32) -> Option<u32> {
        // An excluded vertex must keep some out-neighbor that is in or
        // still undecided.
        let mut rest = outside;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if out[v] & (inside | undecided) == 0 {
                return None;
            }
        }
        if undecided == 0 {
            return Some(inside);
        }
        // Sinks among the undecided must be in the kernel.
        let mut forced = 0u32;
        let mut rest = undecided;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if out[v] & (inside | undecided) == 0 {
                forced |= 1 << v;
            }
        }
        let v = if forced != 0 { forced.trailing_zeros() } else { undecided.trailing_zeros() } as usize;
        let bit = 1u32 << v;
        let blocked = out[v] & subset | in_[v] & subset;
        if (out[v] & inside) == 0 && forced & blocked & !bit == 0 {
            let r = rec(out, in_, subset, undecided & !bit & !blocked, inside | bit, outside | (undecided & blocked & !bit));
            if r.is_some() {
                return r;
            }
        }
        if forced & bit != 0 {
            return None;
        }
        rec(out, in_, subset, undecided & !bit, inside, outside | bit)
    }
    let out: Vec<u32> = out.iter().map(|m| m & subset).collect();
    let in_: Vec<u32> = in_.iter().map(|m| m & subset).collect();
    rec(&out, &in_, subset, subset, 0, 0)
}

fn in_masks(out: &[u32]) -> Vec<u32> {
    let mut in_ = vec![0u32; out.len()];
    for (a, &m) in out.iter().enumerate() {
        let mut rest = m;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            in_[b] |= 1 << a;
        }
    }
    in_
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn find_kernel(d: &Digraph) -> Result<Option<Vec<usize>>, KernelError> {
    guard("find-kernel", d.n(), KERNEL_MAX_N, 31)?;
    let out = d.out_masks();
    let in_ = in_masks(&out);
    let all = if d.n() == 0 { 0 } else { u32::MAX >> (32 - d.n()) };
    Ok(kernel_in(&out, &in_, all).map(mask_to_vec))
}

/// Kernel of the sub-digraph induced on `vertices`.
pub fn find_kernel_in(d: &Digraph, vertices: &[usize]) -> Result<Option<Vec<usize>>, KernelError> {
    guard("find-kernel", d.n(), KERNEL_MAX_N, 31)?;
    let out = d.out_masks();
    let in_ = in_masks(&out);
    let subset = vertices.iter().fold(0u32, |m, &v| m | 1 << v);
    Ok(kernel_in(&out, &in_, subset).map(mask_to_vec))
}

/// Whether every induced sub-digraph has a kernel; on failure, returns a
/// vertex set whose induced sub-digraph has none.
pub fn kernel_perfection_witness(d: &Digraph) -> Result<Option<Vec<usize>>, KernelError> {
    guard("kernel-perfect", d.n(), KERNEL_PERFECT_MAX_N, 22)?;
    let out = d.out_masks();
    let in_ = in_masks(&out);
    for subset in 1u32..(1u32 << d.n()) {
        if kernel_in(&out, &in_, subset).is_none() {
            return Ok(Some(mask_to_vec(subset)));
        }
    }
    Ok(None)
}

pub fn is_kernel_perfect(d: &Digraph) -> Result<bool, KernelError> {
    Ok(kernel_perfection_witness(d)?.is_none())
}

/// Direct check of the kernel definition.
pub fn is_kernel(d: &Digraph, vertices: &[usize], k: &[usize]) -> bool {
    let in_sub = |v: usize| vertices.contains(&v);
    let in_k = |v: usize| k.contains(&v);
    k.iter().all(|&v| in_sub(v))
        && vertices.iter().all(|&v| {
            let absorbed = d.out_neighbors(v).iter().any(|&w| in_sub(w) && in_k(w));
            in_k(v) != absorbed
        })
}

/// List coloring of the underlying graph when every list is longer than the
/// out-degree: repeatedly take the smallest color `c` still in some list,
/// color a kernel of the vertices whose lists contain `c`, delete it and
/// strike `c` from the other lists.
pub fn kernel_coloring(d: &Digraph, lists: &ListAssignment) -> Result<Vec<usize>, KernelError> {
    guard("kernel-coloring", d.n(), KERNEL_MAX_N, 31)?;
    for v in 0..d.n() {
        let len = lists.lists.get(v).map_or(0, Vec::len);
        if len < d.out_degree(v) + 1 {
            return Err(KernelError::PreconditionViolated(Witness::ListTooShort {
                vertex: v,
                list: len,
                out_degree: d.out_degree(v),
            }));
        }
    }
    let out = d.out_masks();
    let in_ = in_masks(&out);
    let mut remaining: Vec<Vec<usize>> = lists.lists.clone();
    let mut color = vec![0usize; d.n()];
    let mut uncolored: u32 = if d.n() == 0 { 0 } else { u32::MAX >> (32 - d.n()) };
    while uncolored != 0 {
        let c = mask_to_vec(uncolored)
            .into_iter()
            .filter_map(|v| remaining[v].first().copied())
            .min()
            .expect("list lengths exceed remaining out-degree");
        let holders = mask_to_vec(uncolored).into_iter().filter(|&v| remaining[v].contains(&c)).fold(0u32, |m, v| m | 1 << v);
        let k = kernel_in(&out, &in_, holders)
            .ok_or_else(|| KernelError::PreconditionViolated(Witness::NoKernel(mask_to_vec(holders))))?;
        for v in mask_to_vec(k) {
            color[v] = c;
        }
        uncolored &= !k;
        for v in mask_to_vec(holders & !k) {
            remaining[v].retain(|&x| x != c);
        }
    }
    Ok(color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::is_list_coloring;

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn brute_kernel_exists(d: &Digraph, vertices: &[usize]) -> bool {
        let k = vertices.len();
        (0u32..1 << k).any(|m| {
            let set: Vec<usize> = (0..k).filter(|&i| m >> i & 1 == 1).map(|i| vertices[i]).collect();
            is_kernel(d, vertices, &set)
        })
    }

    #[test]
    fn kernel_examples() {
        let arc = Digraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(find_kernel(&arc), Ok(Some(vec![1])));
        assert_eq!(find_kernel(&directed_cycle(3)), Ok(None));
        assert_eq!(find_kernel(&directed_cycle(4)).unwrap().map(|k| k.len()), Some(2));
        assert_eq!(is_kernel_perfect(&directed_cycle(3)), Ok(false));
        assert_eq!(is_kernel_perfect(&directed_cycle(4)), Ok(true));
        assert_eq!(is_kernel_perfect(&directed_cycle(5)), Ok(false));
        let k3 = Digraph::symmetric(&crate::generators::complete(3));
        assert_eq!(is_kernel_perfect(&k3), Ok(true));
    }

    #[test]
    fn dags_are_kernel_perfect() {
        let d = Digraph::new(5, vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(is_kernel_perfect(&d), Ok(true));
    }

    #[test]
    fn backtracking_agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let mut arcs = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if a != b && rng.gen_bool(0.3) {
                        arcs.push((a, b));
                    }
                }
            }
            let d = Digraph::new(n, arcs).unwrap();
            let all: Vec<usize> = (0..n).collect();
            let found = find_kernel(&d).unwrap();
            assert_eq!(found.is_some(), brute_kernel_exists(&d, &all));
            if let Some(k) = found {
                assert!(is_kernel(&d, &all, &k));
            }
        }
    }

    #[test]
    fn kernel_coloring_examples() {
        let k2 = Digraph::symmetric(&crate::generators::complete(2));
        let lists = ListAssignment::new(vec![vec![1, 2], vec![2, 3]]);
        let c = kernel_coloring(&k2, &lists).unwrap();
        assert!(is_list_coloring(&k2.underlying(), &lists, &c));

        let p = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let lists = ListAssignment::uniform(3, &[1, 2]);
        let c = kernel_coloring(&p, &lists).unwrap();
        assert!(is_list_coloring(&p.underlying(), &lists, &c));

        let short = ListAssignment::new(vec![vec![1], vec![1, 2], vec![1, 2]]);
        assert!(matches!(
            kernel_coloring(&p, &short),
            Err(KernelError::PreconditionViolated(Witness::ListTooShort { vertex: 0, .. }))
        ));
        let lists = ListAssignment::uniform(3, &[1, 2]);
        assert!(matches!(
            kernel_coloring(&directed_cycle(3), &lists),
            Err(KernelError::PreconditionViolated(Witness::NoKernel(_)))
        ));
    }
}
