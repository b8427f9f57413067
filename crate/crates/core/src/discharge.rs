//! Discharging rules R1–R6 over vertices, edges and faces of a plane graph,
//! in exact rational arithmetic, and the matchers for the reducible
//! configurations they rely on.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{find_four_cycle, Graph};
use crate::plane::PlaneGraph;

pub type Charge = Ratio<i64>;

/// Degree threshold for big vertices used by the rules.
pub const DEFAULT_BIG_DEGREE: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Element {
    Vertex(usize),
    Edge(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Edge(e) => write!(f, "e{e}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Charges {
    pub vertices: Vec<Charge>,
    pub edges: Vec<Charge>,
    pub faces: Vec<Charge>,
}

impl Charges {
    pub fn get(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(i) => self.vertices[i],
            Element::Edge(i) => self.edges[i],
            Element::Face(i) => self.faces[i],
        }
    }

    fn slot(&mut self, e: Element) -> &mut Charge {
        match e {
            Element::Vertex(i) => &mut self.vertices[i],
            Element::Edge(i) => &mut self.edges[i],
            Element::Face(i) => &mut self.faces[i],
        }
    }

    pub fn total(&self) -> Charge {
        self.vertices.iter().chain(&self.edges).chain(&self.faces).copied().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, Charge)> + '_ {
        let v = self.vertices.iter().enumerate().map(|(i, &c)| (Element::Vertex(i), c));
        let e = self.edges.iter().enumerate().map(|(i, &c)| (Element::Edge(i), c));
        let f = self.faces.iter().enumerate().map(|(i, &c)| (Element::Face(i), c));
        v.chain(e).chain(f)
    }

    /// Smallest charge, ties broken by element order.
    pub fn minimum(&self) -> Option<(Element, Charge)> {
        self.iter().min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub name: &'static str,
    pub transfers: Vec<Transfer>,
    pub charges: Charges,
}

/// Charges after the initial assignment and after each rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLedger {
    pub beta: usize,
    /// Endpoints of edge `i`, in the order of [`Graph::edges`].
    pub edges: Vec<(usize, usize)>,
    pub stages: Vec<Stage>,
}

impl ChargeLedger {
    pub fn final_charges(&self) -> &Charges {
        &self.stages.last().expect("ledger has the initial stage").charges
    }

    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn totals(&self) -> Vec<(&'static str, Charge)> {
        self.stages.iter().map(|s| (s.name, s.charges.total())).collect()
    }
}

fn q(n: i64, d: i64) -> Charge {
    Ratio::new(n, d)
}

fn check_preconditions(pg: &PlaneGraph) -> Result<(), DischargeError> {
    let g = pg.graph();
    if g.n() == 0 || !g.is_connected() {
        return Err(DischargeError::PreconditionViolated("graph is not connected".into()));
    }
    if g.min_degree() < 2 {
        return Err(DischargeError::PreconditionViolated("minimum degree is below 2".into()));
    }
    if let Some(c) = find_four_cycle(g) {
        return Err(DischargeError::PreconditionViolated(format!("4-cycle {c:?}")));
    }
    Ok(())
}

/// Distinct 3-faces incident with `v`.
fn three_faces_at(pg: &PlaneGraph, v: usize) -> BTreeSet<usize> {
    pg.faces_at_vertex(v).into_iter().filter(|&f| pg.face_len(f) == 3).collect()
}

/// Runs R1–R6 in succession; within a rule every transfer is computed from
/// the charges at the start of that rule.
pub fn run_discharging(pg: &PlaneGraph, beta: usize) -> Result<ChargeLedger, DischargeError> {
    check_preconditions(pg)?;
    let g = pg.graph();
    let deg = |v: usize| g.degree(v);
    let big = |v: usize| deg(v) >= beta;
    let small = |v: usize| (5..beta).contains(&deg(v));
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let half = q(1, 2);

    let initial = Charges {
        vertices: (0..g.n()).map(|v| Charge::from(deg(v) as i64 - 4)).collect(),
        edges: vec![Charge::zero(); edges.len()],
        faces: (0..pg.face_count()).map(|f| Charge::from(pg.face_len(f) as i64 - 4)).collect(),
    };
    let mut stages = vec![Stage { name: "initial", transfers: Vec::new(), charges: initial }];
    let push = |stages: &mut Vec<Stage>, name: &'static str, transfers: Vec<Transfer>| {
        let mut charges = stages.last().unwrap().charges.clone();
        for t in &transfers {
            *charges.slot(t.from) -= t.amount;
            *charges.slot(t.to) += t.amount;
        }
        stages.push(Stage { name, transfers, charges });
    };
    let give = |from: Element, to: Element, amount: Charge| Transfer { from, to, amount };

    // R1
    let mut t = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let [f1, f2] = pg.faces_at_edge(u, v);
        if f1 == f2 {
            t.push(give(Element::Face(f1), Element::Edge(i), q(2, 5)));
        } else {
            for f in [f1, f2] {
                if pg.face_len(f) >= 5 {
                    t.push(give(Element::Face(f), Element::Edge(i), q(1, 5)));
                }
            }
        }
        for x in [u, v] {
            if big(x) {
                t.push(give(Element::Vertex(x), Element::Edge(i), q(1, 10)));
            }
        }
    }
    push(&mut stages, "R1", t);

    // R2
    let cur = stages.last().unwrap().charges.clone();
    let mut t = Vec::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let amount = cur.edges[i];
        if amount.is_zero() {
            continue;
        }
        let [f1, f2] = pg.faces_at_edge(u, v);
        let tri: Vec<usize> = [f1, f2].into_iter().filter(|&f| pg.face_len(f) == 3).collect();
        match tri.as_slice() {
            [f] => t.push(give(Element::Edge(i), Element::Face(*f), amount)),
            [] => {
                let low = deg(u).min(deg(v));
                let takers: Vec<usize> = [u, v].into_iter().filter(|&x| deg(x) == low).collect();
                let share = amount / Charge::from(takers.len() as i64);
                for x in takers {
                    t.push(give(Element::Edge(i), Element::Vertex(x), share));
                }
            }
            _ => {
                return Err(DischargeError::PreconditionViolated(format!("edge {u}-{v} lies on two 3-faces")));
            }
        }
    }
    push(&mut stages, "R2", t);

    // R3
    let mut t = Vec::new();
    for v in (0..g.n()).filter(|&v| big(v)) {
        for &w in g.neighbors(v) {
            t.push(give(Element::Vertex(v), Element::Vertex(w), half));
        }
    }
    push(&mut stages, "R3", t);

    // R4
    let mut t = Vec::new();
    for v in 0..g.n() {
        if !(deg(v) == 3 || deg(v) == 4 || small(v)) {
            continue;
        }
        for &w in g.neighbors(v) {
            if deg(w) == 2 {
                t.push(give(Element::Vertex(v), Element::Vertex(w), q(3, 5)));
            }
        }
        let big_nbrs = g.neighbors(v).iter().filter(|&&w| big(w)).count();
        if (deg(v) == 4 && big_nbrs >= 2) || small(v) {
            for f in three_faces_at(pg, v) {
                if pg.face_vertices(f).into_iter().any(|x| x != v && !big(x)) {
                    t.push(give(Element::Vertex(v), Element::Face(f), half));
                }
            }
        }
    }
    push(&mut stages, "R4", t);

    // R5
    let mut t = Vec::new();
    for f in (0..pg.face_count()).filter(|&f| pg.face_len(f) == 3) {
        let vs = pg.face_vertices(f);
        for i in 0..3 {
            let (a, b, x) = (vs[i], vs[(i + 1) % 3], vs[(i + 2) % 3]);
            if big(a) && big(b) {
                let target = if deg(x) <= 4 { Element::Vertex(x) } else { Element::Face(f) };
                t.push(give(Element::Vertex(b), target, half));
                t.push(give(Element::Vertex(a), target, half));
            }
        }
    }
    push(&mut stages, "R5", t);

    // R6
    let cur = stages.last().unwrap().charges.clone();
    let mut t = Vec::new();
    for v in (0..g.n()).filter(|&v| deg(v) == 3) {
        let tri = three_faces_at(pg, v);
        if tri.len() > 1 {
            return Err(DischargeError::PreconditionViolated(format!("3-vertex {v} lies on two 3-faces")));
        }
        if let Some(&f) = tri.first() {
            if cur.faces[f].is_negative() && cur.vertices[v].is_positive() {
                t.push(give(Element::Vertex(v), Element::Face(f), cur.vertices[v]));
            }
        }
    }
    push(&mut stages, "R6", t);

    Ok(ChargeLedger { beta, edges, stages })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ConfigKind {
    /// A vertex of degree 1.
    OneVertex,
    /// An edge whose non-big endpoints each have at most one big neighbor.
    KeyLemma,
    /// A 3-face with a 2-vertex and another non-big vertex.
    Face2Vertex,
    /// A 3-face with two 3-vertices and no big vertex.
    Face33,
    /// A 3-vertex without big neighbors.
    ThreeVertexNoBig,
    /// A 3-face with a 3-vertex, at most one big vertex, and a non-big
    /// neighbor of the 3-vertex off the face.
    Face3OffNeighbor,
}

impl ConfigKind {
    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::OneVertex => "oneVertex",
            ConfigKind::KeyLemma => "keyLemma",
            ConfigKind::Face2Vertex => "face2vertex",
            ConfigKind::Face33 => "face33",
            ConfigKind::ThreeVertexNoBig => "threeVertexNoBig",
            ConfigKind::Face3OffNeighbor => "face3OffNeighbor",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub kind: ConfigKind,
    pub vertices: Vec<usize>,
    pub face: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationReport {
    pub findings: Vec<Finding>,
}

impl ConfigurationReport {
    pub fn is_empty(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn count(&self, kind: ConfigKind) -> usize {
        self.findings.iter().filter(|f| f.kind == kind).count()
    }

    /// Re-checks every witness against the predicate of its kind.
    pub fn validate(&self, g: &Graph, beta: usize, plane: Option<&PlaneGraph>) -> bool {
        self.findings.iter().all(|f| witness_holds(g, beta, plane, f))
    }
}

fn big_neighbors(g: &Graph, beta: usize, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&w| g.degree(w) >= beta).count()
}

fn witness_holds(g: &Graph, beta: usize, plane: Option<&PlaneGraph>, f: &Finding) -> bool {
    let big = |v: usize| g.degree(v) >= beta;
    let tri = |face: Option<usize>| -> Option<Vec<usize>> {
        let (pg, face) = (plane?, face?);
        (pg.face_len(face) == 3).then(|| pg.face_vertices(face))
    };
    match (f.kind, f.vertices.as_slice()) {
        (ConfigKind::OneVertex, &[v]) => g.degree(v) == 1,
        (ConfigKind::KeyLemma, &[v, w]) => {
            g.has_edge(v, w) && !big(v) && !big(w) && big_neighbors(g, beta, v) <= 1 && big_neighbors(g, beta, w) <= 1
        }
        (ConfigKind::ThreeVertexNoBig, &[v]) => g.degree(v) == 3 && big_neighbors(g, beta, v) == 0,
        (ConfigKind::Face2Vertex, &[v, w]) => {
            tri(f.face).is_some_and(|vs| vs.contains(&v) && vs.contains(&w) && v != w && g.degree(v) == 2 && !big(w))
        }
        (ConfigKind::Face33, &[a, b, c]) => tri(f.face).is_some_and(|vs| {
            [a, b, c].iter().all(|x| vs.contains(x))
                && [a, b, c].iter().filter(|&&x| g.degree(x) == 3).count() >= 2
                && [a, b, c].iter().all(|&x| !big(x))
        }),
        (ConfigKind::Face3OffNeighbor, &[v, x]) => tri(f.face).is_some_and(|vs| {
            vs.contains(&v)
                && !vs.contains(&x)
                && g.degree(v) == 3
                && g.has_edge(v, x)
                && !big(x)
                && vs.iter().filter(|&&y| big(y)).count() <= 1
        }),
        _ => false,
    }
}

/// Lists every occurrence of the six reducible configurations. Face-based
/// kinds are only searched when an embedding is supplied.
pub fn find_reducible_configurations(g: &Graph, beta: usize, plane: Option<&PlaneGraph>) -> ConfigurationReport {
    let big = |v: usize| g.degree(v) >= beta;
    let mut findings = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) == 1 {
            findings.push(Finding { kind: ConfigKind::OneVertex, vertices: vec![v], face: None });
        }
    }
    for (v, w) in g.edges() {
        if !big(v) && !big(w) && big_neighbors(g, beta, v) <= 1 && big_neighbors(g, beta, w) <= 1 {
            findings.push(Finding { kind: ConfigKind::KeyLemma, vertices: vec![v, w], face: None });
        }
    }
    if let Some(pg) = plane {
        for f in (0..pg.face_count()).filter(|&f| pg.face_len(f) == 3) {
            let vs = pg.face_vertices(f);
            for &v in vs.iter().filter(|&&v| g.degree(v) == 2) {
                for &w in vs.iter().filter(|&&w| w != v && !big(w)) {
                    findings.push(Finding { kind: ConfigKind::Face2Vertex, vertices: vec![v, w], face: Some(f) });
                }
            }
            let threes = vs.iter().filter(|&&x| g.degree(x) == 3).count();
            if threes >= 2 && vs.iter().all(|&x| !big(x)) {
                let mut sorted = vs.clone();
                sorted.sort_unstable();
                findings.push(Finding { kind: ConfigKind::Face33, vertices: sorted, face: Some(f) });
            }
            let bigs = vs.iter().filter(|&&x| big(x)).count();
            if bigs <= 1 {
                for &v in vs.iter().filter(|&&v| g.degree(v) == 3) {
                    for &x in g.neighbors(v).iter().filter(|x| !vs.contains(x)) {
                        if !big(x) {
                            findings.push(Finding {
                                kind: ConfigKind::Face3OffNeighbor,
                                vertices: vec![v, x],
                                face: Some(f),
                            });
                        }
                    }
                }
            }
        }
    }
    for v in 0..g.n() {
        if g.degree(v) == 3 && big_neighbors(g, beta, v) == 0 {
            findings.push(Finding { kind: ConfigKind::ThreeVertexNoBig, vertices: vec![v], face: None });
        }
    }
    ConfigurationReport { findings }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContradictionVerdict {
    pub report: ConfigurationReport,
    pub ledger: ChargeLedger,
    /// Elements whose final charge is negative.
    pub negative: Vec<(Element, Charge)>,
    /// True when some reducible configuration is present. When none is,
    /// the rules should leave every charge nonnegative, which the `-8` total
    /// rules out; `false` therefore points at a bug.
    pub pass: bool,
}

/// Runs the rules with big threshold 10 on a graph with `Δ ≥ 10` and
/// confirms that a reducible configuration accounts for the `-8` total.
pub fn discharging_contradiction_check(pg: &PlaneGraph) -> Result<ContradictionVerdict, DischargeError> {
    check_preconditions(pg)?;
    let g = pg.graph();
    if g.max_degree() < DEFAULT_BIG_DEGREE {
        return Err(DischargeError::PreconditionViolated(format!("Δ = {} is below 10", g.max_degree())));
    }
    let ledger = run_discharging(pg, DEFAULT_BIG_DEGREE)?;
    let report = find_reducible_configurations(g, DEFAULT_BIG_DEGREE, Some(pg));
    let negative = ledger.final_charges().iter().filter(|(_, c)| c.is_negative()).collect();
    let pass = !report.is_empty();
    Ok(ContradictionVerdict { report, ledger, negative, pass })
}
