//! The reduction pipeline on plane graphs: `G′` (suppress 2-vertices away
//! from big vertices, contract `S_1`–`B` edges), `G″` (drop loops), `G‴`
//! (remove 2-faces), edge types, half-edge diagnostics and regions.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexClass};
use crate::plane::PlaneGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("suppressible vertices {0} and {1} are adjacent")]
    AdjacentSuppressible(usize, usize),
    #[error("edge {edge} with path {path:?} matches {matches} edge types")]
    UnclassifiableEdge { edge: usize, path: Vec<usize>, matches: usize },
    #[error("invalid multigraph: {0}")]
    InvalidMultiGraph(String),
}

/// One end of a multigraph edge: `side` 0 sits at `ends.0`, side 1 at
/// `ends.1`. A loop has both halves at the same vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MHalf {
    pub edge: usize,
    pub side: u8,
}

impl MHalf {
    pub fn twin(self) -> MHalf {
        MHalf { edge: self.edge, side: 1 - self.side }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MEdge {
    pub id: usize,
    pub ends: (usize, usize),
    /// Walk in the original graph whose end vertices map to `ends`; the
    /// contracted `S_1`–`B` edges at either end are not part of it.
    pub path: Vec<usize>,
}

impl MEdge {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    pub fn end(&self, side: u8) -> usize {
        if side == 0 {
            self.ends.0
        } else {
            self.ends.1
        }
    }
}

/// Embedded multigraph on the vertex ids of the original graph; vertices
/// that disappeared are marked absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    present: Vec<bool>,
    edges: BTreeMap<usize, MEdge>,
    rotation: Vec<Vec<MHalf>>,
}

impl MultiGraph {
    /// Builds and validates a multigraph: every half-edge appears exactly
    /// once in the rotation of its end vertex.
    pub fn new(present: Vec<bool>, edges: Vec<MEdge>, rotation: Vec<Vec<MHalf>>) -> Result<Self, ReductionError> {
        let bad = |m: String| ReductionError::InvalidMultiGraph(m);
        if rotation.len() != present.len() {
            return Err(bad("rotation count differs from vertex count".into()));
        }
        let edges: BTreeMap<usize, MEdge> = edges.into_iter().map(|e| (e.id, e)).collect();
        let mut seen = BTreeSet::new();
        for (v, rot) in rotation.iter().enumerate() {
            if !present[v] && !rot.is_empty() {
                return Err(bad(format!("absent vertex {v} has half-edges")));
            }
            for &h in rot {
                let e = edges.get(&h.edge).ok_or_else(|| bad(format!("unknown edge {}", h.edge)))?;
                if h.side > 1 || e.end(h.side) != v || !seen.insert(h) {
                    return Err(bad(format!("half-edge {h:?} misplaced at {v}")));
                }
            }
        }
        if seen.len() != 2 * edges.len() {
            return Err(bad("some half-edges are missing from the rotations".into()));
        }
        Ok(MultiGraph { present, edges, rotation })
    }

    pub fn vertex_slots(&self) -> usize {
        self.present.len()
    }

    pub fn is_present(&self, v: usize) -> bool {
        self.present[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.present.len()).filter(|&v| self.present[v])
    }

    pub fn edges(&self) -> impl Iterator<Item = &MEdge> {
        self.edges.values()
    }

    pub fn edge(&self, id: usize) -> Option<&MEdge> {
        self.edges.get(&id)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.values().filter(|e| e.is_loop()).count()
    }

    /// Half-edges at `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[MHalf] {
        &self.rotation[v]
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Number of edges joining `u` and `v` (`u != v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges.values().filter(|e| e.ends == (u, v) || e.ends == (v, u)).count()
    }

    pub fn remove_edge(&mut self, id: usize) -> Option<MEdge> {
        let e = self.edges.remove(&id)?;
        for v in [e.ends.0, e.ends.1] {
            self.rotation[v].retain(|h| h.edge != id);
        }
        Some(e)
    }

    pub fn without_loops(&self) -> MultiGraph {
        let mut out = self.clone();
        let loops: Vec<usize> = self.edges.values().filter(|e| e.is_loop()).map(|e| e.id).collect();
        for id in loops {
            out.remove_edge(id);
        }
        out
    }

    /// Faces as cyclic sequences of darts, each dart named by the half-edge
    /// it leaves from. From a dart arriving at `u` through half-edge `h`,
    /// the walk continues with the clockwise successor of `h` at `u`.
    pub fn faces(&self) -> Vec<Vec<MHalf>> {
        let mut place: HashMap<MHalf, (usize, usize)> = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &h) in rot.iter().enumerate() {
                place.insert(h, (v, i));
            }
        }
        let mut done: BTreeSet<MHalf> = BTreeSet::new();
        let mut faces = Vec::new();
        for rot in &self.rotation {
            for &start in rot {
                if done.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                loop {
                    done.insert(d);
                    face.push(d);
                    let (u, i) = place[&d.twin()];
                    let rot_u = &self.rotation[u];
                    d = rot_u[(i + 1) % rot_u.len()];
                    if d == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Faces of length 2 bounded by two distinct edges.
    pub fn two_faces(&self) -> Vec<Vec<MHalf>> {
        self.faces().into_iter().filter(|f| f.len() == 2 && f[0].edge != f[1].edge).collect()
    }
}

/// `G′` together with the bookkeeping that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GPrime {
    pub multigraph: MultiGraph,
    /// Vertex of `G′` each original vertex ends up in; `None` when
    /// suppressed.
    pub image: Vec<Option<usize>>,
    pub suppressed: Vec<usize>,
    /// Contracted edges `(x, b)` with `x ∈ S_1`, in increasing `x`.
    pub contractions: Vec<(usize, usize)>,
}

impl GPrime {
    /// The full walk behind edge `id`, with contracted ends restored.
    pub fn full_path(&self, id: usize) -> Option<Vec<usize>> {
        let e = self.multigraph.edge(id)?;
        let mut p = Vec::with_capacity(e.path.len() + 2);
        if e.path[0] != e.ends.0 {
            p.push(e.ends.0);
        }
        p.extend(&e.path);
        if *e.path.last().unwrap() != e.ends.1 {
            p.push(e.ends.1);
        }
        Some(p)
    }

    /// Whether the provenance paths together with the contracted edges use
    /// every edge of `g` exactly once, and every path ends where its edge
    /// does.
    pub fn provenance_round_trip(&self, g: &Graph) -> bool {
        let mut used: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        for e in self.multigraph.edges() {
            let (first, last) = (e.path[0], *e.path.last().unwrap());
            if self.image[first] != Some(e.ends.0) || self.image[last] != Some(e.ends.1) {
                return false;
            }
            for w in e.path.windows(2) {
                *used.entry(key(w[0], w[1])).or_default() += 1;
            }
        }
        for &(x, b) in &self.contractions {
            *used.entry(key(x, b)).or_default() += 1;
        }
        used.len() == g.m() && g.edges().all(|e| used.get(&e) == Some(&1))
    }

    /// Vertices of `g` that disappeared: suppressed ones and `S_1`.
    pub fn disappeared(&self) -> Vec<usize> {
        (0..self.image.len()).filter(|&v| self.image[v] != Some(v)).collect()
    }
}

fn is_suppressible(g: &Graph, vc: &VertexClass, v: usize) -> bool {
    g.degree(v) == 2 && !vc.is_big(v) && g.neighbors(v).iter().all(|&w| !vc.is_big(w))
}

/// Suppresses every 2-vertex of `S \ N[B]` and contracts every edge between
/// `S_1` and `B`, carrying the embedding and provenance along.
pub fn build_g_prime(pg: &PlaneGraph, vc: &VertexClass) -> Result<GPrime, ReductionError> {
    let g = pg.graph();
    let n = g.n();
    let suppress: Vec<bool> = (0..n).map(|v| is_suppressible(g, vc, v)).collect();
    for (u, v) in g.edges() {
        if suppress[u] && suppress[v] {
            return Err(ReductionError::AdjacentSuppressible(u, v));
        }
    }
    let mut image: Vec<Option<usize>> = (0..n).map(|v| (!suppress[v]).then_some(v)).collect();
    let mut contractions = Vec::new();
    for x in vc.s(1) {
        let b = *g.neighbors(x).iter().find(|&&w| vc.is_big(w)).expect("S_1 vertex has a big neighbor");
        image[x] = Some(b);
        contractions.push((x, b));
    }
    let contracted = |a: usize, b: usize| {
        (vc.in_s(a, 1) && image[a] == Some(b)) || (vc.in_s(b, 1) && image[b] == Some(a))
    };

    // Every remaining edge of G starts a walk that continues through
    // suppressed vertices; each walk becomes one edge of G′.
    let mut dart_half: HashMap<(usize, usize), MHalf> = HashMap::new();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if contracted(u, v) || dart_half.contains_key(&(u, v)) {
            continue;
        }
        let mut path = vec![u, v];
        if suppress[u] {
            let other = *g.neighbors(u).iter().find(|&&w| w != v).unwrap();
            path.insert(0, other);
        }
        if suppress[v] {
            let other = *g.neighbors(v).iter().find(|&&w| w != u).unwrap();
            path.push(other);
        }
        let id = edges.len();
        let (first, second) = (path[0], path[1]);
        let (last, before) = (path[path.len() - 1], path[path.len() - 2]);
        dart_half.insert((first, second), MHalf { edge: id, side: 0 });
        dart_half.insert((last, before), MHalf { edge: id, side: 1 });
        // Mark the interior darts so the walk is not started twice.
        for w in path.windows(2) {
            dart_half.entry((w[0], w[1])).or_insert(MHalf { edge: id, side: 0 });
            dart_half.entry((w[1], w[0])).or_insert(MHalf { edge: id, side: 1 });
        }
        let ends = (image[first].unwrap(), image[last].unwrap());
        edges.push(MEdge { id, ends, path });
    }

    let mut rotation = vec![Vec::new(); n];
    let mut present = vec![false; n];
    for c in 0..n {
        if image[c] != Some(c) {
            continue;
        }
        present[c] = true;
        for &t in pg.rotation(c) {
            if contracted(c, t) {
                // Splice the rotation of t, starting after c.
                let rot_t = pg.rotation(t);
                let at = rot_t.iter().position(|&s| s == c).unwrap();
                for k in 1..rot_t.len() {
                    let s = rot_t[(at + k) % rot_t.len()];
                    rotation[c].push(dart_half[&(t, s)]);
                }
            } else {
                rotation[c].push(dart_half[&(c, t)]);
            }
        }
    }
    let multigraph = MultiGraph::new(present, edges, rotation)?;
    let suppressed = (0..n).filter(|&v| suppress[v]).collect();
    Ok(GPrime { multigraph, image, suppressed, contractions })
}

/// Type of a `G′` edge with its anchor vertices, oriented as `(v, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeType {
    pub kind: u8,
    pub v: usize,
    pub w: usize,
    pub x: Option<usize>,
    pub x_prime: Option<usize>,
    pub y: Option<usize>,
}

fn match_types(g: &Graph, vc: &VertexClass, p: &[usize]) -> Vec<EdgeType> {
    let big = |v: usize| vc.is_big(v);
    let s1 = |v: usize| vc.in_s(v, 1);
    let two = |v: usize| g.degree(v) == 2;
    let mut out = Vec::new();
    let reversed: Vec<usize> = p.iter().rev().copied().collect();
    let orientations: Vec<&[usize]> = if p.first() == p.last() && p.len() > 1 && p == reversed.as_slice() {
        vec![p]
    } else {
        vec![p, &reversed]
    };
    for (i, q) in orientations.into_iter().enumerate() {
        let (v, w) = (q[0], q[q.len() - 1]);
        let t = |kind, x, x_prime, y| EdgeType { kind, v, w, x, x_prime, y };
        match q.len() - 1 {
            // Type 1 is symmetric; report it once.
            1 if i == 0 => out.push(t(1, None, None, None)),
            2 if !big(v) && big(w) && s1(q[1]) => out.push(t(2, Some(q[1]), None, None)),
            2 if !big(v) && !big(w) && two(q[1]) && i == 0 => out.push(t(4, None, None, Some(q[1]))),
            3 if !big(v) && big(w) && two(q[1]) && s1(q[2]) => out.push(t(3, Some(q[2]), None, Some(q[1]))),
            3 if big(v) && big(w) && s1(q[1]) && s1(q[2]) && (i == 0 || v != w) => {
                if i == 0 || out.iter().all(|e| e.kind != 5) {
                    out.push(t(5, Some(q[1]), Some(q[2]), None));
                }
            }
            4 if big(v) && big(w) && v != w && s1(q[1]) && two(q[2]) && s1(q[3]) => {
                if i == 0 || out.iter().all(|e| e.kind != 6) {
                    out.push(t(6, Some(q[1]), Some(q[3]), Some(q[2])));
                }
            }
            _ => {}
        }
    }
    out
}

/// Assigns each edge of `G′` its unique type 1–6.
pub fn classify_edge_types(
    g: &Graph,
    gp: &GPrime,
    vc: &VertexClass,
) -> Result<BTreeMap<usize, EdgeType>, ReductionError> {
    let mut out = BTreeMap::new();
    for e in gp.multigraph.edges() {
        let path = gp.full_path(e.id).unwrap();
        let mut found = match_types(g, vc, &path);
        let loop_ok = !e.is_loop() || found.iter().all(|t| t.kind == 5);
        if found.len() != 1 || !loop_ok {
            return Err(ReductionError::UnclassifiableEdge { edge: e.id, path, matches: found.len() });
        }
        out.insert(e.id, found.pop().unwrap());
    }
    Ok(out)
}

pub fn build_g_double_prime(gp: &MultiGraph) -> MultiGraph {
    gp.without_loops()
}

/// Repeatedly deletes the higher-id edge of some 2-face until no 2-face
/// remains. Returns the result and the deleted edge ids in order.
pub fn build_g_triple_prime(gpp: &MultiGraph) -> (MultiGraph, Vec<usize>) {
    let mut out = gpp.clone();
    let mut deleted = Vec::new();
    while let Some(face) = out.two_faces().into_iter().min_by_key(|f| f[0].edge.max(f[1].edge)) {
        let id = face[0].edge.max(face[1].edge);
        out.remove_edge(id);
        deleted.push(id);
    }
    (out, deleted)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub b1: usize,
    pub b2: usize,
    /// 2-faces of `G″` in consecutive order, each as its two edge ids.
    pub faces: Vec<[usize; 2]>,
    /// Edges of `G″` bounding the faces, plus the loops of `G′` lying in
    /// them.
    pub edges: Vec<usize>,
    pub loops: Vec<usize>,
    /// Vertices contracted into `b1` / `b2`, and suppressed vertices.
    pub big1: Vec<usize>,
    pub big2: Vec<usize>,
    pub d: Vec<usize>,
}

impl Region {
    pub fn size(&self) -> usize {
        self.faces.len()
    }

    /// `V(R)`: every vertex that disappears into the edges of the region.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.big1.iter().chain(&self.big2).chain(&self.d).copied().collect();
        all.sort_unstable();
        all
    }

    /// Disjoint `B_1, B_2, D` with `B_i ⊆ N(b_i)` and `D` an independent set
    /// of 2-vertices, each with a neighbor in both `B_1` and `B_2`.
    pub fn decomposition_holds(&self, g: &Graph) -> bool {
        let b1: BTreeSet<usize> = self.big1.iter().copied().collect();
        let b2: BTreeSet<usize> = self.big2.iter().copied().collect();
        let d: BTreeSet<usize> = self.d.iter().copied().collect();
        b1.is_disjoint(&b2)
            && b1.is_disjoint(&d)
            && b2.is_disjoint(&d)
            && b1.iter().all(|&x| g.has_edge(x, self.b1))
            && b2.iter().all(|&x| g.has_edge(x, self.b2))
            && d.iter().all(|&y| {
                g.degree(y) == 2
                    && g.neighbors(y).iter().all(|z| !d.contains(z))
                    && g.neighbors(y).iter().any(|z| b1.contains(z))
                    && g.neighbors(y).iter().any(|z| b2.contains(z))
            })
    }

    /// Vertices of `B_1 ∪ B_2` with two neighbors in one `B_i` or more than
    /// eight in `D`.
    pub fn few_edges_violations(&self, g: &Graph) -> Vec<usize> {
        let b1: BTreeSet<usize> = self.big1.iter().copied().collect();
        let b2: BTreeSet<usize> = self.big2.iter().copied().collect();
        let d: BTreeSet<usize> = self.d.iter().copied().collect();
        b1.iter()
            .chain(&b2)
            .copied()
            .filter(|&w| {
                let count = |s: &BTreeSet<usize>| g.neighbors(w).iter().filter(|z| s.contains(z)).count();
                count(&b1) > 1 || count(&b2) > 1 || count(&d) > 8
            })
            .collect()
    }

    /// The subgraph of `g` induced by `b1`, `b2` and `V(R)`; vertex `i` of the
    /// result is the `i`-th entry of the returned list.
    pub fn subgraph(&self, g: &Graph) -> (Graph, Vec<usize>) {
        let mut vs = self.vertices();
        vs.push(self.b1);
        vs.push(self.b2);
        vs.sort_unstable();
        vs.dedup();
        (g.induced_subgraph(&vs), vs)
    }
}

/// Maximal runs of consecutive 2-faces of `G″` between the same pair of
/// distinct big vertices.
pub fn find_regions(gp: &GPrime, gpp: &MultiGraph, vc: &VertexClass) -> Vec<Region> {
    let faces: Vec<Vec<MHalf>> = gpp
        .two_faces()
        .into_iter()
        .filter(|f| {
            let e = gpp.edge(f[0].edge).unwrap();
            vc.is_big(e.ends.0) && vc.is_big(e.ends.1) && !e.is_loop()
        })
        .collect();
    let mut by_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for h in f {
            by_edge.entry(h.edge).or_default().push(i);
        }
    }
    let mut seen = vec![false; faces.len()];
    let mut regions = Vec::new();
    for start in 0..faces.len() {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < component.len() {
            let f = component[k];
            k += 1;
            for h in &faces[f] {
                for &g2 in &by_edge[&h.edge] {
                    if !seen[g2] {
                        seen[g2] = true;
                        component.push(g2);
                    }
                }
            }
        }
        regions.push(region_from_faces(gp, gpp, &faces, &component));
    }
    regions.sort_by_key(|r| (r.b1, r.b2, r.edges.first().copied()));
    regions
}

fn region_from_faces(gp: &GPrime, gpp: &MultiGraph, faces: &[Vec<MHalf>], component: &[usize]) -> Region {
    // Order the faces along the run: start from a face with an edge not
    // shared with another face of the run, if any.
    let mut edge_use: BTreeMap<usize, usize> = BTreeMap::new();
    for &f in component {
        for h in &faces[f] {
            *edge_use.entry(h.edge).or_default() += 1;
        }
    }
    let start = component
        .iter()
        .copied()
        .filter(|&f| faces[f].iter().any(|h| edge_use[&h.edge] == 1))
        .min()
        .unwrap_or_else(|| *component.iter().min().unwrap());
    let mut ordered = vec![start];
    let mut used: BTreeSet<usize> = [start].into();
    loop {
        let last = *ordered.last().unwrap();
        let next = component
            .iter()
            .copied()
            .filter(|g2| !used.contains(g2))
            .find(|&g2| faces[g2].iter().any(|h| faces[last].iter().any(|h2| h2.edge == h.edge)));
        match next {
            Some(g2) => {
                used.insert(g2);
                ordered.push(g2);
            }
            None => break,
        }
    }
    let first_edge = gpp.edge(faces[start][0].edge).unwrap();
    let (b1, b2) = (first_edge.ends.0.min(first_edge.ends.1), first_edge.ends.0.max(first_edge.ends.1));
    let face_edges: Vec<[usize; 2]> = ordered
        .iter()
        .map(|&f| {
            let (a, b) = (faces[f][0].edge, faces[f][1].edge);
            [a.min(b), a.max(b)]
        })
        .collect();
    let edges: Vec<usize> = edge_use.keys().copied().collect();

    // Loops of G′ sitting in a corner of a region face: strictly between
    // the arriving half-edge and its successor in the rotation of G″.
    let mut loops = BTreeSet::new();
    let gprime = &gp.multigraph;
    for &f in &ordered {
        for (i, &d) in faces[f].iter().enumerate() {
            let arrive = faces[f][(i + faces[f].len() - 1) % faces[f].len()].twin();
            let v = gprime.edge(d.edge).unwrap().end(d.side);
            let rot = gprime.rotation(v);
            let Some(mut j) = rot.iter().position(|&h| h == arrive) else { continue };
            loop {
                j = (j + 1) % rot.len();
                let h = rot[j];
                if h == d || !gprime.edge(h.edge).unwrap().is_loop() {
                    break;
                }
                loops.insert(h.edge);
            }
        }
    }
    let loops: Vec<usize> = loops.into_iter().collect();

    let mut big1 = BTreeSet::new();
    let mut big2 = BTreeSet::new();
    let mut d = BTreeSet::new();
    for &id in edges.iter().chain(&loops) {
        for x in gp.full_path(id).unwrap() {
            if x == b1 || x == b2 {
                continue;
            }
            match gp.image[x] {
                None => {
                    d.insert(x);
                }
                Some(b) if b == b1 => {
                    big1.insert(x);
                }
                Some(b) if b == b2 => {
                    big2.insert(x);
                }
                Some(_) => {}
            }
        }
    }
    Region {
        b1,
        b2,
        faces: face_edges,
        edges,
        loops,
        big1: big1.into_iter().collect(),
        big2: big2.into_iter().collect(),
        d: d.into_iter().collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDiagnostic {
    pub vertex: usize,
    /// Half-edges at the vertex in `G′` (loops twice).
    pub degree: usize,
    /// Half-edges that are not half-loops.
    pub degree_without_loops: usize,
    /// `degree_without_loops ≥ degree / 5`.
    pub degree_ratio_ok: bool,
    /// Loops neither of whose half-loops is next to a non-loop half-edge.
    pub isolated_loops: Vec<usize>,
}

/// Per-vertex checks of the degree inequality between `G′` and `G″` and of
/// the loop-adjacency property. Violations are informative only.
pub fn half_edge_diagnostics(gp: &MultiGraph) -> Vec<VertexDiagnostic> {
    gp.vertices()
        .map(|v| {
            let rot = gp.rotation(v);
            let is_loop = |h: MHalf| gp.edge(h.edge).unwrap().is_loop();
            let plain = rot.iter().filter(|&&h| !is_loop(h)).count();
            let flanked = |i: usize| {
                let k = rot.len();
                !is_loop(rot[(i + 1) % k]) || !is_loop(rot[(i + k - 1) % k])
            };
            let mut isolated: BTreeSet<usize> = rot.iter().filter(|&&h| is_loop(h)).map(|h| h.edge).collect();
            for (i, &h) in rot.iter().enumerate() {
                if is_loop(h) && flanked(i) {
                    isolated.remove(&h.edge);
                }
            }
            VertexDiagnostic {
                vertex: v,
                degree: rot.len(),
                degree_without_loops: plain,
                degree_ratio_ok: 5 * plain >= rot.len(),
                isolated_loops: isolated.into_iter().collect(),
            }
        })
        .collect()
}

/// Everything the pipeline produces for one plane graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pipeline {
    pub g_prime: GPrime,
    pub types: BTreeMap<usize, EdgeType>,
    pub g_double_prime: MultiGraph,
    pub g_triple_prime: MultiGraph,
    pub deleted: Vec<usize>,
    pub regions: Vec<Region>,
}

pub fn run_pipeline(pg: &PlaneGraph, vc: &VertexClass) -> Result<Pipeline, ReductionError> {
    let g_prime = build_g_prime(pg, vc)?;
    let types = classify_edge_types(pg.graph(), &g_prime, vc)?;
    let g_double_prime = build_g_double_prime(&g_prime.multigraph);
    let (g_triple_prime, deleted) = build_g_triple_prime(&g_double_prime);
    let regions = find_regions(&g_prime, &g_double_prime, vc);
    Ok(Pipeline { g_prime, types, g_double_prime, g_triple_prime, deleted, regions })
}

/// The bundle of five `v`–`w` paths `v x_i y_i x'_i w` with a few extra
/// vertices around `v`, used to exercise the whole pipeline. Vertex ids:
/// `v = 0`, `w = 1`, `x_i = 2 + i`, `y_i = 7 + i`, `x'_i = 12 + i` for
/// `i = 0..5`, then `z = 17`, `x8 = 18`, `x6 = 19`, `x7 = 20`, `x9 = 21`.
pub fn small_faces_fixture() -> PlaneGraph {
    let mut coords = vec![(0.0, 10.0), (0.0, -10.0)];
    let xs = [-4.0, -2.0, 0.0, 2.0, 4.0];
    for y in [5.0, 0.0, -5.0] {
        for &x in &xs {
            coords.push((x, y));
        }
    }
    coords.extend([(-20.0, 0.0), (-5.0, 7.2), (5.5, 7.5), (6.5, 6.5), (0.0, 12.0)]);
    let mut g = Graph::new(coords.len());
    for i in 0..5 {
        g.add_edge(0, 2 + i);
        g.add_edge(2 + i, 7 + i);
        g.add_edge(7 + i, 12 + i);
        g.add_edge(12 + i, 1);
    }
    for (a, b) in [(17, 0), (17, 1), (18, 0), (18, 2), (0, 19), (19, 20), (20, 0), (21, 0)] {
        g.add_edge(a, b);
    }
    PlaneGraph::from_coordinates(g, &coords).expect("fixture coordinates give a plane embedding")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify_vertices;

    #[test]
    fn fixture_pipeline() {
        let pg = small_faces_fixture();
        let vc = classify_vertices(pg.graph(), 5);
        let p = run_pipeline(&pg, &vc).unwrap();
        assert!(p.g_prime.provenance_round_trip(pg.graph()));
        assert_eq!(p.g_prime.suppressed, vec![7, 8, 9, 10, 11]);
        assert_eq!(p.g_prime.multigraph.loop_count(), 2);
        assert_eq!(p.g_prime.multigraph.multiplicity(0, 1), 5);
        let sixes = p.types.values().filter(|t| t.kind == 6).count();
        assert_eq!(sixes, 5);
        assert_eq!(p.types.values().filter(|t| t.kind == 5).count(), 2);

        assert_eq!(p.g_double_prime.loop_count(), 0);
        assert_eq!(p.g_double_prime.multiplicity(0, 1), 5);
        assert_eq!(p.deleted.len(), 4);
        assert!(p.g_triple_prime.two_faces().is_empty());

        assert_eq!(p.regions.len(), 1);
        let r = &p.regions[0];
        assert_eq!((r.b1, r.b2, r.size()), (0, 1, 4));
        assert_eq!(r.big1, vec![2, 3, 4, 5, 6]);
        assert_eq!(r.d, vec![7, 8, 9, 10, 11]);
        assert_eq!(r.big2, vec![12, 13, 14, 15, 16]);
        assert!(r.loops.is_empty());
        assert!(r.decomposition_holds(pg.graph()));
        assert!(r.few_edges_violations(pg.graph()).is_empty());
    }

    #[test]
    fn contraction_and_suppression() {
        // Star-like hub with an S_1 leaf pair forming a triangle.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]).unwrap();
        let coords = [(0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];
        let pg = PlaneGraph::from_coordinates(g, &coords).unwrap();
        let vc = classify_vertices(pg.graph(), 4);
        let gp = build_g_prime(&pg, &vc).unwrap();
        assert_eq!(gp.multigraph.loop_count(), 1);
        assert_eq!(gp.multigraph.vertices().collect::<Vec<_>>(), vec![0]);
        assert!(gp.provenance_round_trip(pg.graph()));
        let diag = half_edge_diagnostics(&gp.multigraph);
        assert_eq!(diag[0].degree, 2);
        assert!(!diag[0].degree_ratio_ok);
        assert_eq!(diag[0].isolated_loops, vec![gp.multigraph.edges().next().unwrap().id]);

        // Path of small vertices: the middle 2-vertex is suppressed.
        let pg = crate::generators::plane_cycle(7);
        let vc = classify_vertices(pg.graph(), 3);
        assert!(matches!(build_g_prime(&pg, &vc), Err(ReductionError::AdjacentSuppressible(0, 1))));
    }

    #[test]
    fn type_catalogue() {
        let pg = small_faces_fixture();
        let vc = classify_vertices(pg.graph(), 5);
        let g = pg.graph();
        let kinds = |p: &[usize]| match_types(g, &vc, p).into_iter().map(|t| t.kind).collect::<Vec<_>>();
        assert_eq!(kinds(&[0, 17]), vec![1]);
        assert_eq!(kinds(&[0, 2, 7, 12, 1]), vec![6]);
        assert_eq!(kinds(&[7, 2, 0]), vec![2]);
        assert_eq!(kinds(&[12, 7, 2, 0]), vec![3]);
        assert_eq!(kinds(&[0, 18, 2, 0]), vec![5]);
    }

    #[test]
    fn loop_only_vertex_and_diagnostic_ratio() {
        let mut edges = Vec::new();
        let mut rot = Vec::new();
        for id in 0..4 {
            edges.push(MEdge { id, ends: (0, 0), path: vec![0, 0] });
            rot.push(MHalf { edge: id, side: 0 });
            rot.push(MHalf { edge: id, side: 1 });
        }
        edges.push(MEdge { id: 4, ends: (0, 1), path: vec![0, 1] });
        rot.push(MHalf { edge: 4, side: 0 });
        let mg = MultiGraph::new(vec![true, true], edges, vec![rot, vec![MHalf { edge: 4, side: 1 }]]).unwrap();
        let d = &half_edge_diagnostics(&mg)[0];
        assert_eq!((d.degree, d.degree_without_loops, d.degree_ratio_ok), (9, 1, false));
        let gpp = build_g_double_prime(&mg);
        assert_eq!(gpp.degree(0), 1);
        assert_eq!(gpp.loop_count(), 0);
    }
}
