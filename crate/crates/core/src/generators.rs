//! Named constructions and the random C4-free plane corpus.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{find_four_cycle, Graph};
use crate::plane::{polyhedron_rotation, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("k = {k} must be odd and at least 3")]
    BadParity { k: usize },
    #[error("q = {0} is not prime")]
    NotPrime(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorSpec {
    WegnerFigure,
    WegnerFamily { k: usize },
    Gadget { k: usize, t: usize },
    IncidencePg { q: usize },
    Cycle { n: usize },
    Path { n: usize },
    Star { n: usize },
    Petersen,
    Complete { n: usize },
    Cube,
    Icosahedron,
    Dodecahedron,
    RandomPlaneC4Free { n: usize, seed: u64 },
}

/// A generated graph, its embedding when the construction has one, and a
/// human-readable label for every vertex id.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub plane: Option<PlaneGraph>,
    pub labels: Vec<String>,
}

impl Generated {
    fn plain(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        Generated { graph, plane: None, labels }
    }

    fn embedded(plane: PlaneGraph) -> Self {
        let mut g = Generated::plain(plane.graph().clone());
        g.plane = Some(plane);
        g
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated, GenError> {
    Ok(match *spec {
        GeneratorSpec::WegnerFigure => {
            let pg = wegner_figure();
            Generated { graph: pg.graph().clone(), plane: Some(pg), labels: wegner_labels(5, 5, 4) }
        }
        GeneratorSpec::WegnerFamily { k } => {
            let pg = wegner_family(k)?;
            let (a, b, c) = family_sizes(k);
            Generated { graph: pg.graph().clone(), plane: Some(pg), labels: wegner_labels(a, b, c) }
        }
        GeneratorSpec::Gadget { k, t } => {
            let graph = gadget(k, t)?;
            let mut labels: Vec<String> = (0..k).map(|i| format!("h{i}")).collect();
            for i in 0..k {
                for j in 0..t {
                    labels.push(format!("m{i}_{j}"));
                }
            }
            Generated { graph, plane: None, labels }
        }
        GeneratorSpec::IncidencePg { q } => {
            let graph = incidence_pg(q)?;
            let pts = projective_points(q);
            let labels = pts
                .iter()
                .map(|p| format!("p{}{}{}", p[0], p[1], p[2]))
                .chain(pts.iter().map(|l| format!("l{}{}{}", l[0], l[1], l[2])))
                .collect();
            Generated { graph, plane: None, labels }
        }
        GeneratorSpec::Cycle { n } => {
            if n < 3 {
                return Err(GenError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Generated::embedded(plane_cycle(n))
        }
        GeneratorSpec::Path { n } => Generated::plain(path(n)),
        GeneratorSpec::Star { n } => Generated::plain(star(n)),
        GeneratorSpec::Petersen => Generated::plain(petersen()),
        GeneratorSpec::Complete { n } => Generated::plain(complete(n)),
        GeneratorSpec::Cube => Generated::embedded(cube()),
        GeneratorSpec::Icosahedron => Generated::embedded(icosahedron()),
        GeneratorSpec::Dodecahedron => Generated::embedded(dodecahedron()),
        GeneratorSpec::RandomPlaneC4Free { n, seed } => {
            if n < 3 {
                return Err(GenError::InvalidParameter(format!("random plane graph needs n >= 3, got {n}")));
            }
            let (pg, orig) = random_plane_c4free(n, seed);
            let labels = orig.iter().map(|v| format!("t{v}")).collect();
            Generated { graph: pg.graph().clone(), plane: Some(pg), labels }
        }
    })
}

fn wegner_labels(a: usize, b: usize, c: usize) -> Vec<String> {
    let mut labels = vec!["v1".to_string(), "v2".to_string(), "v3".to_string()];
    labels.extend((1..=a).map(|i| format!("a{i}")));
    labels.extend((1..=b).map(|i| format!("b{i}")));
    labels.extend((1..=c).map(|i| format!("c{i}")));
    labels
}

/// Outer triangle `v1 = 0`, `v2 = 1`, `v3 = 2` with edges `v1v2` and `v2v3`,
/// then `a` common neighbors of `{v1, v2}`, `b` of `{v1, v3}` and `c` of
/// `{v2, v3}`, numbered in that order.
fn wegner_plane(a: usize, b: usize, c: usize) -> PlaneGraph {
    let n = 3 + a + b + c;
    let mut g = Graph::new(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    let corners = [(0.0, 10.0), (-8.66, -5.0), (8.66, -5.0)];
    let mut coords = corners.to_vec();
    let centroid: (f64, f64) = (0.0, 0.0);
    let mut next = 3;
    for (count, (p, q)) in [(a, (0, 1)), (b, (0, 2)), (c, (1, 2))] {
        let (x1, y1) = corners[p];
        let (x2, y2) = corners[q];
        let mid = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let len = ((centroid.0 - mid.0) * (centroid.0 - mid.0) + (centroid.1 - mid.1) * (centroid.1 - mid.1)).sqrt();
        let inward = ((centroid.0 - mid.0) / len, (centroid.1 - mid.1) / len);
        for i in 0..count {
            let depth = 0.5 + 0.5 * i as f64;
            coords.push((mid.0 + depth * inward.0, mid.1 + depth * inward.1));
            g.add_edge(next, p);
            g.add_edge(next, q);
            next += 1;
        }
    }
    PlaneGraph::from_coordinates(g, &coords).expect("straight-line drawing")
}

/// The fixed 17-vertex drawing with 5, 5 and 4 middle vertices.
pub fn wegner_figure() -> PlaneGraph {
    wegner_plane(5, 5, 4)
}

fn family_sizes(k: usize) -> (usize, usize, usize) {
    (k / 2 - 1, k / 2, k / 2 - 1)
}

/// Wegner-type graph with all three outer degrees equal to `k` (even) and
/// square a clique on `3k/2 + 1` vertices.
pub fn wegner_family(k: usize) -> Result<PlaneGraph, GenError> {
    if k < 2 || k % 2 != 0 {
        return Err(GenError::InvalidParameter(format!("wegner family needs even k >= 2, got {k}")));
    }
    let (a, b, c) = family_sizes(k);
    Ok(wegner_plane(a, b, c))
}

/// A `k`-cycle of hubs `0..k` with every cycle edge replaced by `K_{2,t}`.
/// The middle vertices of hub pair `(i, i+1)` are `k + i*t .. k + (i+1)*t`.
pub fn gadget(k: usize, t: usize) -> Result<Graph, GenError> {
    if k < 3 || k % 2 == 0 {
        return Err(GenError::BadParity { k });
    }
    if t == 0 {
        return Err(GenError::InvalidParameter("gadget needs t >= 1".into()));
    }
    let mut g = Graph::new(k + k * t);
    for i in 0..k {
        for j in 0..t {
            let m = k + i * t + j;
            g.add_edge(i, m);
            g.add_edge((i + 1) % k, m);
        }
    }
    Ok(g)
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Nonzero triples over GF(q) whose first nonzero coordinate is 1.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    pts.push([a, b, c]);
                }
            }
        }
    }
    pts
}

/// Point-line incidence graph of the projective plane over GF(q). Points
/// are `0..N`, lines `N..2N` with `N = q² + q + 1`.
pub fn incidence_pg(q: usize) -> Result<Graph, GenError> {
    if !is_prime(q) {
        return Err(GenError::NotPrime(q));
    }
    if q > 7 {
        return Err(GenError::InvalidParameter(format!("q = {q} exceeds the supported maximum 7")));
    }
    let pts = projective_points(q);
    let n = pts.len();
    let mut g = Graph::new(2 * n);
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0 {
                g.add_edge(i, n + j);
            }
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

pub fn plane_cycle(n: usize) -> PlaneGraph {
    let rot = (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect();
    PlaneGraph::from_rotation(rot).expect("cycle rotation")
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// `K_{1,n}` with center 0.
pub fn star(n: usize) -> Graph {
    let mut g = Graph::new(n + 1);
    for i in 1..=n {
        g.add_edge(0, i);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    g
}

fn polyhedron(coords: Vec<[f64; 3]>) -> PlaneGraph {
    let n = coords.len();
    let dist = |a: usize, b: usize| {
        let d: f64 = (0..3).map(|i| (coords[a][i] - coords[b][i]).powi(2)).sum();
        d.sqrt()
    };
    let edge_len = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| dist(a, b))
        .fold(f64::INFINITY, f64::min);
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if (dist(a, b) - edge_len).abs() < 1e-6 {
                g.add_edge(a, b);
            }
        }
    }
    let rot = polyhedron_rotation(&g, &coords);
    PlaneGraph::new(g, rot).expect("polyhedron rotation")
}

pub fn cube() -> PlaneGraph {
    let coords = (0..8)
        .map(|i| [(i & 1) as f64 * 2.0 - 1.0, ((i >> 1) & 1) as f64 * 2.0 - 1.0, ((i >> 2) & 1) as f64 * 2.0 - 1.0])
        .collect();
    polyhedron(coords)
}

const PHI: f64 = 1.618_033_988_749_895;

fn cyclic_perms(base: &[[f64; 3]]) -> Vec<[f64; 3]> {
    let mut out = Vec::new();
    for shift in 0..3 {
        for p in base {
            out.push([p[shift % 3], p[(shift + 1) % 3], p[(shift + 2) % 3]]);
        }
    }
    out
}

fn signed(a: f64, b: f64) -> Vec<[f64; 3]> {
    let mut out = Vec::new();
    for sa in [1.0, -1.0] {
        for sb in [1.0, -1.0] {
            out.push([0.0, sa * a, sb * b]);
        }
    }
    out
}

pub fn icosahedron() -> PlaneGraph {
    polyhedron(cyclic_perms(&signed(1.0, PHI)))
}

pub fn dodecahedron() -> PlaneGraph {
    let mut coords = Vec::new();
    for i in 0..8 {
        coords.push([
            (i & 1) as f64 * 2.0 - 1.0,
            ((i >> 1) & 1) as f64 * 2.0 - 1.0,
            ((i >> 2) & 1) as f64 * 2.0 - 1.0,
        ]);
    }
    coords.extend(cyclic_perms(&signed(1.0 / PHI, PHI)));
    polyhedron(coords)
}

/// Random connected C4-free plane graph, deterministic in `seed`.
///
/// A stacked triangulation on `n` vertices is grown by inserting each new
/// vertex into a uniformly random triangular face. Then an edge of some
/// 4-cycle is deleted until no 4-cycle remains, and vertices of degree at
/// most one are stripped. The output usually has fewer than `n` vertices;
/// the second component maps each output vertex to its insertion id.
pub fn random_plane_c4free(n: usize, seed: u64) -> (PlaneGraph, Vec<usize>) {
    assert!(n >= 3, "need at least 3 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rot: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Triangles (a, b, c) traced as darts a->b, b->c, c->a.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let idx = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[idx];
        insert_after(&mut rot[b], a, v);
        insert_after(&mut rot[c], b, v);
        insert_after(&mut rot[a], c, v);
        rot.push(vec![a, c, b]);
        faces[idx] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }

    let mut g = Graph::new(n);
    for (u, r) in rot.iter().enumerate() {
        for &w in r {
            if u < w {
                g.add_edge(u, w);
            }
        }
    }
    while let Some(cyc) = find_four_cycle(&g) {
        // Remove the cycle edge whose endpoints have the largest smaller
        // degree; this keeps low-degree vertices alive and hubs mostly intact.
        let (u, w) = (0..4)
            .map(|i| (cyc[i], cyc[(i + 1) % 4]))
            .max_by_key(|&(a, b)| {
                let (da, db) = (g.degree(a), g.degree(b));
                (da.min(db), std::cmp::Reverse(da.max(db)), std::cmp::Reverse((a.min(b), a.max(b))))
            })
            .unwrap();
        g.remove_edge(u, w);
        rot[u].retain(|&x| x != w);
        rot[w].retain(|&x| x != u);
    }

    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for w in g.neighbors(v).to_vec() {
            g.remove_edge(v, w);
            rot[w].retain(|&x| x != v);
            if !removed[w] && g.degree(w) <= 1 {
                stack.push(w);
            }
        }
        rot[v].clear();
    }
    let kept: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let new_rot: Vec<Vec<usize>> = kept.iter().map(|&v| rot[v].iter().map(|&w| index[w]).collect()).collect();
    let pg = PlaneGraph::from_rotation(new_rot).expect("edge deletion preserves the embedding");
    (pg, kept)
}

fn insert_after(list: &mut Vec<usize>, anchor: usize, x: usize) {
    let pos = list.iter().position(|&y| y == anchor).expect("anchor in rotation");
    list.insert(pos + 1, x);
}

/// Edge set of `g` as a bitmask over the pair index `i*n + j` (`i < j`),
/// minimized over all vertex permutations. Feasible for `n <= 7`.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 7, "canonical_form is exhaustive over permutations");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        for &(u, v) in &edges {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            mask |= 1 << (a * n + b);
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices (`1 <= n <= 6`).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "catalog supports 1..=6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        if seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify_vertices, forbidden_cycle_check};

    #[test]
    fn wegner_figure_degrees() {
        let pg = wegner_figure();
        let g = pg.graph();
        assert_eq!(g.n(), 17);
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (11, 11, 10));
        assert!((3..17).all(|v| g.degree(v) == 2));
        assert_eq!(g.max_degree(), 11);
        assert_eq!(g.square().m(), 17 * 16 / 2);
        assert_eq!(pg.euler_check(), Ok(true));
    }

    #[test]
    fn wegner_family_outer_degrees() {
        for k in (2..=12).step_by(2) {
            let pg = wegner_family(k).unwrap();
            let g = pg.graph();
            assert_eq!(g.n(), 3 * k / 2 + 1);
            assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (k, k, k));
            assert_eq!(g.square().m(), g.n() * (g.n() - 1) / 2);
            assert_eq!(pg.euler_check(), Ok(true));
        }
        assert!(wegner_family(5).is_err());
    }

    #[test]
    fn gadget_structure() {
        let g = gadget(3, 3).unwrap();
        assert_eq!((g.n(), g.m(), g.max_degree()), (12, 18, 6));
        assert_eq!((3..12).filter(|&v| g.degree(v) == 2).count(), 9);
        let vc = classify_vertices(&g, 5);
        assert_eq!(vc.big, (0..3).collect());
        assert_eq!(vc.s(2).len(), 9);
        assert!(!forbidden_cycle_check(&g, &[4], 4).unwrap().is_empty());
        assert_eq!(gadget(4, 2), Err(GenError::BadParity { k: 4 }));
    }

    #[test]
    fn incidence_graphs() {
        let heawood = incidence_pg(2).unwrap();
        assert_eq!(heawood.n(), 14);
        assert!((0..14).all(|v| heawood.degree(v) == 3));
        for len in [3, 4, 5] {
            assert!(forbidden_cycle_check(&heawood, &[len], 5).unwrap().is_empty());
        }
        assert!(!forbidden_cycle_check(&heawood, &[6], 6).unwrap().is_empty());

        let g3 = incidence_pg(3).unwrap();
        assert_eq!(g3.n(), 26);
        assert!((0..26).all(|v| g3.degree(v) == 4));
        assert_eq!(incidence_pg(4), Err(GenError::NotPrime(4)));
    }

    #[test]
    fn petersen_square_is_complete() {
        let p = petersen();
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.square().m(), 45);
        for v in 0..10 {
            assert_eq!(p.distance2_neighborhood(v).len(), 9);
        }
    }

    #[test]
    fn random_plane_is_deterministic_and_c4_free() {
        let (a, la) = random_plane_c4free(30, 1);
        let (b, lb) = random_plane_c4free(30, 1);
        assert_eq!(a, b);
        assert_eq!(la, lb);
        for seed in 0..20 {
            let (pg, _) = random_plane_c4free(60, seed);
            let g = pg.graph();
            assert!(find_four_cycle(g).is_none());
            assert!(forbidden_cycle_check(g, &[4], 4).unwrap().is_empty());
            assert!(g.is_connected());
            assert!(g.n() <= 1 || g.min_degree() >= 2);
            assert_eq!(pg.euler_check(), Ok(true));
        }
    }

    #[test]
    fn catalog_sizes() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }
}
