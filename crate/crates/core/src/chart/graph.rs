//! Charts as labelled planar graphs.
//!
//! A vertex of degree 1 is black (a branch point), 4 a crossing of two
//! commuting labels, 6 white (a triple point). Edges without endpoints are
//! loops. The cyclic order of edge ends at each vertex fixes the embedding.
//!
//! Loops carry no vertices, so concentric nesting cannot be read off the
//! rotation system; it is declared separately with [`ChartGraph::nest`].

use std::collections::{BTreeMap, HashMap, HashSet};

use super::report::{Location, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// From `from` to `to`; counterclockwise for a loop.
    Forward,
    /// From `to` to `from`; clockwise for a loop.
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub from: Option<String>,
    pub to: Option<String>,
    pub label: i64,
    pub orientation: Orientation,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.from.is_none() && self.to.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChartGraph {
    pub degree: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    /// Edge ids in counterclockwise order around each vertex. A self-loop
    /// appears twice, tail end first.
    pub rotations: BTreeMap<String, Vec<String>>,
    /// `(item, loop)`: edge `item` lies directly inside loop `loop`.
    pub nest: Vec<(String, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntacticKind {
    /// Only free edges.
    Unknotted,
    /// Only oval nests, at least one loop.
    Ribbon,
    /// Neither pattern; says nothing about ribbon-ness.
    Other,
}

/// One edge end at a vertex, in rotation order.
#[derive(Debug, Clone, Copy)]
struct Dart {
    edge: usize,
    /// 0 = the `from` end, 1 = the `to` end.
    end: usize,
    inward: bool,
}

impl ChartGraph {
    fn edge_index(&self) -> HashMap<&str, usize> {
        self.edges.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect()
    }

    /// Darts around `v` following the rotation, or why that fails.
    fn darts_at(&self, v: &Vertex, index: &HashMap<&str, usize>) -> Result<Vec<Dart>, String> {
        let rotation: Vec<String> = match self.rotations.get(&v.id) {
            Some(r) => r.clone(),
            None if v.degree == 1 => {
                let incident: Vec<String> = self
                    .edges
                    .iter()
                    .filter(|e| e.from.as_deref() == Some(&v.id) || e.to.as_deref() == Some(&v.id))
                    .map(|e| e.id.clone())
                    .collect();
                incident
            }
            None => return Err("missing rotation".into()),
        };
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut darts = Vec::with_capacity(rotation.len());
        for id in &rotation {
            let &edge = index
                .get(id.as_str())
                .ok_or_else(|| format!("rotation names unknown edge {id}"))?;
            let e = &self.edges[edge];
            let at_from = e.from.as_deref() == Some(&v.id);
            let at_to = e.to.as_deref() == Some(&v.id);
            let count = seen.entry(edge).or_insert(0);
            *count += 1;
            let end = match (at_from, at_to, *count) {
                (true, true, 1) | (true, false, 1) => 0,
                (true, true, 2) | (false, true, 1) => 1,
                _ => return Err(format!("edge {id} listed more often than it meets the vertex")),
            };
            let head_end = match e.orientation {
                Orientation::Forward => 1,
                Orientation::Backward => 0,
            };
            darts.push(Dart {
                edge,
                end,
                inward: end == head_end,
            });
        }
        Ok(darts)
    }
}

/// Checks the chart conditions: no edge reaches the boundary, labels lie in
/// `1..n`, vertex degrees are 1, 4 or 6 with the required label and
/// orientation patterns, and the rotation system is planar.
pub fn validate_chart_graph(g: &ChartGraph) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = g.degree as i64;
    let index = g.edge_index();

    let mut vertex_ids = HashSet::new();
    for v in &g.vertices {
        if !vertex_ids.insert(v.id.as_str()) {
            report.fail(Location::Vertex(v.id.clone()), "duplicate vertex id");
        }
    }
    if index.len() != g.edges.len() {
        report.fail(Location::Movie, "duplicate edge id");
    }

    for e in &g.edges {
        let loc = || Location::Edge(e.id.clone());
        match (&e.from, &e.to) {
            (None, None) => {}
            (Some(_), None) | (None, Some(_)) => report.fail(loc(), "edge meets the boundary of the disk"),
            (Some(a), Some(b)) => {
                for x in [a, b] {
                    if !vertex_ids.contains(x.as_str()) {
                        report.fail(loc(), format!("unknown vertex {x}"));
                    }
                }
            }
        }
        if e.label < 1 || e.label > n - 1 {
            report.fail(loc(), format!("label {} outside 1..={}", e.label, n - 1));
        }
    }

    let mut all_darts: HashMap<&str, Vec<Dart>> = HashMap::new();
    for v in &g.vertices {
        let loc = || Location::Vertex(v.id.clone());
        if !matches!(v.degree, 1 | 4 | 6) {
            report.fail(loc(), format!("degree {} is not 1, 4 or 6", v.degree));
        }
        let incident: usize = g
            .edges
            .iter()
            .map(|e| {
                (e.from.as_deref() == Some(&v.id)) as usize + (e.to.as_deref() == Some(&v.id)) as usize
            })
            .sum();
        if incident != v.degree {
            report.fail(loc(), format!("declared degree {} but {} edge ends meet it", v.degree, incident));
            continue;
        }
        let darts = match g.darts_at(v, &index) {
            Ok(d) => d,
            Err(reason) => {
                report.fail(loc(), reason);
                continue;
            }
        };
        if darts.len() != v.degree {
            report.fail(loc(), "rotation does not list every edge end once");
            continue;
        }
        let labels: Vec<i64> = darts.iter().map(|d| g.edges[d.edge].label).collect();
        match v.degree {
            6 => {
                let pattern: Vec<bool> = darts.iter().map(|d| d.inward).collect();
                let consecutive = (0..6).any(|s| (0..6).all(|k| pattern[(s + k) % 6] == (k < 3)));
                if !consecutive {
                    report.fail(loc(), "white vertex needs three consecutive inward and three outward edges");
                }
                let alternating = (0..6).all(|k| labels[k] == labels[k % 2]);
                if !alternating || (labels[0] - labels[1]).abs() != 1 {
                    report.fail(loc(), "white vertex labels must alternate i, i+1");
                }
            }
            4 => {
                for k in 0..2 {
                    let (x, y) = (darts[k], darts[k + 2]);
                    if labels[k] != labels[k + 2] {
                        report.fail(loc(), "diagonal edges carry different labels");
                    }
                    if x.inward == y.inward {
                        report.fail(loc(), "diagonal edges are not oriented coherently");
                    }
                }
                if (labels[0] - labels[1]).abs() <= 1 {
                    report.fail(
                        loc(),
                        format!("crossing labels {} and {} differ by at most one", labels[0], labels[1]),
                    );
                }
            }
            _ => {}
        }
        all_darts.insert(v.id.as_str(), darts);
    }

    let loops: HashSet<&str> = g.edges.iter().filter(|e| e.is_loop()).map(|e| e.id.as_str()).collect();
    for (item, container) in &g.nest {
        if !index.contains_key(item.as_str()) {
            report.fail(Location::Edge(item.clone()), "nested item is not an edge");
        }
        if !loops.contains(container.as_str()) {
            report.fail(Location::Edge(container.clone()), "only loops can contain other edges");
        }
    }

    if report.ok() {
        if let Some(reason) = planarity_failure(g, &all_darts) {
            report.fail(Location::Movie, reason);
        }
    }
    report
}

/// Checks `V − E + F = 2` on every connected component of the vertex graph.
fn planarity_failure(g: &ChartGraph, darts_at: &HashMap<&str, Vec<Dart>>) -> Option<String> {
    let mut dart_ids: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let verts: Vec<&Vertex> = g.vertices.iter().collect();
    for (vi, v) in verts.iter().enumerate() {
        for (k, d) in darts_at[v.id.as_str()].iter().enumerate() {
            dart_ids.insert((d.edge, d.end), (vi, k));
        }
    }
    let vertex_of: HashMap<&str, usize> = verts.iter().enumerate().map(|(i, v)| (v.id.as_str(), i)).collect();

    let mut comp = crate::union_find::DisjointSets::new(verts.len());
    for e in g.edges.iter().filter(|e| !e.is_loop()) {
        let (a, b) = (e.from.as_deref().unwrap(), e.to.as_deref().unwrap());
        comp.merge(vertex_of[a], vertex_of[b]);
    }

    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    let mut faces: HashMap<usize, i64> = HashMap::new();
    for (vi, v) in verts.iter().enumerate() {
        let len = darts_at[v.id.as_str()].len();
        for k in 0..len {
            if visited.contains(&(vi, k)) {
                continue;
            }
            let root = comp.find(vi);
            *faces.entry(root).or_default() += 1;
            let mut cur = (vi, k);
            while visited.insert(cur) {
                let d = darts_at[verts[cur.0].id.as_str()][cur.1];
                let (wi, j) = dart_ids[&(d.edge, 1 - d.end)];
                let around = darts_at[verts[wi].id.as_str()].len();
                cur = (wi, (j + 1) % around);
            }
        }
    }

    let mut v_count: HashMap<usize, i64> = HashMap::new();
    let mut e_count: HashMap<usize, i64> = HashMap::new();
    for vi in 0..verts.len() {
        *v_count.entry(comp.find(vi)).or_default() += 1;
    }
    for e in g.edges.iter().filter(|e| !e.is_loop()) {
        *e_count.entry(comp.find(vertex_of[e.from.as_deref().unwrap()])).or_default() += 1;
    }
    for (root, v) in v_count {
        let chi = v - e_count.get(&root).copied().unwrap_or(0) + faces.get(&root).copied().unwrap_or(0);
        if chi != 2 {
            return Some(format!("rotation system is not planar (V - E + F = {chi})"));
        }
    }
    None
}

/// Matches the unknotted (free edges only) and ribbon (oval nests only)
/// configurations. Anything else, including invalid graphs, is `Other`.
pub fn recognize_syntactic(g: &ChartGraph) -> SyntacticKind {
    if !validate_chart_graph(g).ok() {
        return SyntacticKind::Other;
    }
    if g.vertices.iter().any(|v| v.degree != 1) {
        return SyntacticKind::Other;
    }
    // with only degree-1 vertices every non-loop edge joins two black vertices
    let loops: HashSet<&str> = g.edges.iter().filter(|e| e.is_loop()).map(|e| e.id.as_str()).collect();
    if loops.is_empty() {
        return SyntacticKind::Unknotted;
    }

    let mut parent: HashMap<&str, &str> = HashMap::new();
    let mut children: HashMap<&str, usize> = HashMap::new();
    for (item, container) in &g.nest {
        if parent.insert(item.as_str(), container.as_str()).is_some() {
            return SyntacticKind::Other;
        }
        *children.entry(container.as_str()).or_default() += 1;
    }
    // every loop surrounds exactly one thing directly
    if loops.iter().any(|l| children.get(l).copied().unwrap_or(0) != 1) {
        return SyntacticKind::Other;
    }
    // no containment cycles
    for &start in parent.keys() {
        let mut cur = start;
        let mut steps = 0;
        while let Some(&up) = parent.get(cur) {
            cur = up;
            steps += 1;
            if steps > parent.len() {
                return SyntacticKind::Other;
            }
        }
    }
    SyntacticKind::Ribbon
}
