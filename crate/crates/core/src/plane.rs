//! Plane graphs given by rotation systems.
//!
//! `rotation[v]` lists the neighbors of `v` in clockwise order. A face walk
//! leaving along the dart `u -> v` continues with `v -> w`, where `w` is the
//! neighbor following `u` in `rotation[v]`. Faces are stored as cyclic
//! sequences of darts, so a bridge contributes both of its sides to the same
//! face and face lengths always sum to `2m`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("rotation at vertex {vertex} is not a permutation of its neighbors")]
    InvalidRotation { vertex: usize },
    #[error("rotation lists {u} -> {v} but not {v} -> {u}")]
    Asymmetric { u: usize, v: usize },
    #[error("graph is disconnected; check each component separately")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One incidence of an edge at a vertex. For simple plane graphs `side` is
/// 0 at the lower endpoint and 1 at the higher one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfEdge {
    pub vertex: usize,
    pub edge: usize,
    pub side: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    /// Dart `(v, rotation[v][i])` has id `offset[v] + i`.
    offset: Vec<usize>,
    /// `rot_pos[v][j]` is the position of `graph.neighbors(v)[j]` in
    /// `rotation[v]`.
    rot_pos: Vec<Vec<usize>>,
    faces: Vec<Vec<(usize, usize)>>,
    dart_face: Vec<usize>,
}

impl PlaneGraph {
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, PlaneError> {
        if rotation.len() != graph.n() {
            return Err(PlaneError::InvalidRotation { vertex: rotation.len().min(graph.n()) });
        }
        let mut rot_pos = Vec::with_capacity(graph.n());
        for (v, rot) in rotation.iter().enumerate() {
            let nb = graph.neighbors(v);
            if rot.len() != nb.len() {
                return Err(PlaneError::InvalidRotation { vertex: v });
            }
            let mut pos = vec![usize::MAX; nb.len()];
            for (i, &w) in rot.iter().enumerate() {
                match nb.binary_search(&w) {
                    Ok(j) if pos[j] == usize::MAX => pos[j] = i,
                    _ => return Err(PlaneError::InvalidRotation { vertex: v }),
                }
            }
            rot_pos.push(pos);
        }
        let mut offset = Vec::with_capacity(graph.n() + 1);
        let mut total = 0;
        for rot in &rotation {
            offset.push(total);
            total += rot.len();
        }
        offset.push(total);
        let mut pg = PlaneGraph { graph, rotation, offset, rot_pos, faces: Vec::new(), dart_face: Vec::new() };
        pg.trace_faces();
        Ok(pg)
    }

    /// Builds the graph from the rotation itself, checking that every dart
    /// has a reverse.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, PlaneError> {
        let n = rotation.len();
        let mut graph = Graph::new(n);
        for (u, rot) in rotation.iter().enumerate() {
            for &v in rot {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
                }
                if !rotation[v].contains(&u) {
                    return Err(PlaneError::Asymmetric { u, v });
                }
                if u < v {
                    graph.try_add_edge(u, v)?;
                }
            }
        }
        PlaneGraph::new(graph, rotation)
    }

    /// Straight-line embedding: each rotation is sorted clockwise by the
    /// direction to the neighbor (y axis pointing up).
    pub fn from_coordinates(graph: Graph, coords: &[(f64, f64)]) -> Result<Self, PlaneError> {
        let rotation = (0..graph.n())
            .map(|v| {
                let (x0, y0) = coords[v];
                let mut nb: Vec<usize> = graph.neighbors(v).to_vec();
                let angle = |w: usize| (coords[w].1 - y0).atan2(coords[w].0 - x0);
                nb.sort_by(|&a, &b| angle(b).total_cmp(&angle(a)));
                nb
            })
            .collect();
        PlaneGraph::new(graph, rotation)
    }

    fn trace_faces(&mut self) {
        let total = *self.offset.last().unwrap();
        self.dart_face = vec![usize::MAX; total];
        self.faces.clear();
        for u in 0..self.graph.n() {
            for i in 0..self.rotation[u].len() {
                let start = self.offset[u] + i;
                if self.dart_face[start] != usize::MAX {
                    continue;
                }
                let id = self.faces.len();
                let mut face = Vec::new();
                let (mut a, mut b) = (u, self.rotation[u][i]);
                loop {
                    let d = self.dart_id(a, b);
                    if self.dart_face[d] != usize::MAX {
                        break;
                    }
                    self.dart_face[d] = id;
                    face.push((a, b));
                    let next = self.succ(b, a);
                    a = b;
                    b = next;
                }
                self.faces.push(face);
            }
        }
    }

    fn position(&self, v: usize, w: usize) -> usize {
        let j = self.graph.neighbors(v).binary_search(&w).expect("not a neighbor");
        self.rot_pos[v][j]
    }

    /// The neighbor following `w` in the clockwise rotation at `v`.
    pub fn succ(&self, v: usize, w: usize) -> usize {
        let rot = &self.rotation[v];
        rot[(self.position(v, w) + 1) % rot.len()]
    }

    /// The neighbor preceding `w` in the clockwise rotation at `v`.
    pub fn pred(&self, v: usize, w: usize) -> usize {
        let rot = &self.rotation[v];
        rot[(self.position(v, w) + rot.len() - 1) % rot.len()]
    }

    pub fn dart_id(&self, u: usize, v: usize) -> usize {
        self.offset[u] + self.position(u, v)
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Faces as cyclic dart sequences.
    pub fn faces(&self) -> &[Vec<(usize, usize)>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Number of edge-sides on face `f`.
    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Vertices met along the boundary walk of `f`, with repetition.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&(a, _)| a).collect()
    }

    /// The face lying to the walk side of dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> usize {
        self.dart_face[self.dart_id(u, v)]
    }

    /// Faces around `v` in rotation order, one per dart leaving `v`.
    pub fn faces_at_vertex(&self, v: usize) -> Vec<usize> {
        (0..self.rotation[v].len()).map(|i| self.dart_face[self.offset[v] + i]).collect()
    }

    /// The two faces on either side of edge `uv` (equal for a bridge).
    pub fn faces_at_edge(&self, u: usize, v: usize) -> [usize; 2] {
        [self.face_of_dart(u, v), self.face_of_dart(v, u)]
    }

    /// Edge ids follow the lexicographic order of [`Graph::edges`].
    pub fn edge_ids(&self) -> BTreeMap<(usize, usize), usize> {
        self.graph.edges().enumerate().map(|(i, e)| (e, i)).collect()
    }

    /// Half-edges at `v` in clockwise order.
    pub fn half_edges(&self, v: usize) -> Vec<HalfEdge> {
        let ids = self.edge_ids();
        self.rotation[v]
            .iter()
            .map(|&w| HalfEdge { vertex: v, edge: ids[&(v.min(w), v.max(w))], side: u8::from(v > w) })
            .collect()
    }

    /// `n - m + f == 2`. Errors on disconnected inputs; see
    /// [`PlaneGraph::euler_check_components`].
    pub fn euler_check(&self) -> Result<bool, PlaneError> {
        if !self.graph.is_connected() {
            return Err(PlaneError::Disconnected);
        }
        let (n, m, f) = (self.graph.n() as i64, self.graph.m() as i64, self.faces.len() as i64);
        // An edgeless single vertex traces no darts but bounds one face.
        let f = if m == 0 { 1 } else { f };
        Ok(n - m + f == 2)
    }

    /// Euler's formula on every connected component.
    pub fn euler_check_components(&self) -> bool {
        let comp = self.graph.components();
        let k = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut count = vec![(0i64, 0i64, 0i64); k];
        for v in 0..self.graph.n() {
            count[comp[v]].0 += 1;
            count[comp[v]].1 += self.graph.degree(v) as i64;
        }
        for face in &self.faces {
            count[comp[face[0].0]].2 += 1;
        }
        count.iter().all(|&(n, twice_m, f)| {
            let m = twice_m / 2;
            let f = if m == 0 { 1 } else { f };
            n - m + f == 2
        })
    }

    /// `Σ (d(v) - 4) + Σ (ℓ(f) - 4)`, which is `-8` for connected plane
    /// graphs.
    pub fn charge_sum(&self) -> i64 {
        let v: i64 = (0..self.graph.n()).map(|v| self.graph.degree(v) as i64 - 4).sum();
        let f: i64 = self.faces.iter().map(|f| f.len() as i64 - 4).sum();
        v + f
    }
}

/// Rotations for a convex polyhedron given by vertex coordinates around the
/// origin: neighbors are sorted clockwise as seen from outside.
pub fn polyhedron_rotation(graph: &Graph, coords: &[[f64; 3]]) -> Vec<Vec<usize>> {
    (0..graph.n())
        .map(|v| {
            let p = coords[v];
            let norm = dot(p, p).sqrt();
            let normal = [p[0] / norm, p[1] / norm, p[2] / norm];
            // Any vector not parallel to the normal seeds the tangent basis.
            let seed = if normal[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
            let e1 = normalize(cross(seed, normal));
            let e2 = cross(normal, e1);
            let mut nb = graph.neighbors(v).to_vec();
            let angle = |w: usize| {
                let d = [coords[w][0] - p[0], coords[w][1] - p[1], coords[w][2] - p[2]];
                dot(d, e2).atan2(dot(d, e1))
            };
            nb.sort_by(|&a, &b| angle(b).total_cmp(&angle(a)));
            nb
        })
        .collect()
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    let n = dot(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn k3() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let pg = k3();
        assert_eq!(pg.face_count(), 2);
        assert!(pg.faces().iter().all(|f| f.len() == 3));
        assert_eq!(pg.euler_check(), Ok(true));
        let [a, b] = pg.faces_at_edge(0, 1);
        assert_ne!(a, b);
    }

    #[test]
    fn tree_has_single_face() {
        let pg = PlaneGraph::from_rotation(vec![vec![1, 2, 3], vec![0], vec![0], vec![0, 4], vec![3]])
            .unwrap();
        assert_eq!(pg.face_count(), 1);
        assert_eq!(pg.face_len(0), 8);
        let [a, b] = pg.faces_at_edge(3, 4);
        assert_eq!(a, b);
        assert_eq!(pg.euler_check(), Ok(true));
    }

    #[test]
    fn single_edge_and_single_vertex() {
        let pg = PlaneGraph::from_rotation(vec![vec![1], vec![0]]).unwrap();
        assert_eq!(pg.face_count(), 1);
        assert_eq!(pg.euler_check(), Ok(true));
        let pg = PlaneGraph::from_rotation(vec![vec![]]).unwrap();
        assert_eq!(pg.euler_check(), Ok(true));
    }

    #[test]
    fn rejects_bad_rotations() {
        assert_eq!(
            PlaneGraph::from_rotation(vec![vec![1], vec![]]),
            Err(PlaneError::Asymmetric { u: 0, v: 1 })
        );
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            PlaneGraph::new(g, vec![vec![1], vec![0, 0], vec![1]]),
            Err(PlaneError::InvalidRotation { vertex: 1 })
        );
    }

    #[test]
    fn disconnected_needs_component_check() {
        let pg = PlaneGraph::from_rotation(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(pg.euler_check(), Err(PlaneError::Disconnected));
        assert!(pg.euler_check_components());
    }

    #[test]
    fn polyhedra_faces() {
        let cube = generators::cube();
        assert_eq!(cube.face_count(), 6);
        assert!(cube.faces().iter().all(|f| f.len() == 4));

        let ico = generators::icosahedron();
        for v in 0..12 {
            let faces = ico.faces_at_vertex(v);
            assert_eq!(faces.len(), 5);
            assert!(faces.iter().all(|&f| ico.face_len(f) == 3));
        }

        let dodec = generators::dodecahedron();
        assert_eq!(dodec.face_count(), 12);
        assert_eq!(dodec.euler_check(), Ok(true));
        assert_eq!(dodec.charge_sum(), -8);
    }

    #[test]
    fn perturbed_rotation_breaks_euler() {
        let dodec = generators::dodecahedron();
        let mut rot = dodec.rotations().to_vec();
        rot[0].swap(0, 1);
        let bad = PlaneGraph::new(dodec.graph().clone(), rot).unwrap();
        assert_eq!(bad.euler_check(), Ok(false));
    }

    #[test]
    fn half_edges_follow_rotation() {
        let pg = k3();
        let he = pg.half_edges(0);
        assert_eq!(he.len(), 2);
        assert_eq!(he[0], HalfEdge { vertex: 0, edge: 0, side: 0 });
        assert_eq!(he[1], HalfEdge { vertex: 0, edge: 1, side: 0 });
    }
}
