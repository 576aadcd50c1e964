//! Dual multigraphs of nodal curves.
//!
//! Vertices carry the geometric genus of an irreducible component; edges are
//! nodes and may be self-loops. Every edge owns two half-edges with stable
//! string ids, so that blowups can leave the former node branches behind as
//! named marked points. Arithmetic genus is always derived from the Euler
//! formula; the vertex label is the single source of truth for geometric
//! genus.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = String;
pub type EdgeId = String;
pub type HalfEdgeId = String;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub genus: u32,
}

/// A node of the curve: an edge between two vertices, possibly equal.
/// `half_edges[i]` is attached to `ends[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub ends: [VertexId; 2],
    pub half_edges: [HalfEdgeId; 2],
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    pub fn other_end(&self, v: &str) -> &str {
        if self.ends[0] == v {
            &self.ends[1]
        } else {
            &self.ends[0]
        }
    }
}

/// A marked point left behind by blowing up a node: the half-edge keeps its
/// id and remembers which vertex and original edge it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mark {
    pub half_edge: HalfEdgeId,
    pub vertex: VertexId,
    pub source_edge: EdgeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Stability {
    Stable,
    Semistable,
    Unstable,
}

/// A nonempty set of vertices of a parent graph, viewed with its induced
/// edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcurve {
    pub vertex_set: BTreeSet<VertexId>,
}

impl Subcurve {
    pub fn new(vertex_set: BTreeSet<VertexId>) -> Self {
        Subcurve { vertex_set }
    }
}

/// Degree of a line bundle on each component.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multidegree {
    pub degrees: BTreeMap<VertexId, i64>,
}

impl Multidegree {
    pub fn total_degree(&self) -> i64 {
        self.degrees.values().sum()
    }

    pub fn degree_on(&self, v: &str) -> i64 {
        self.degrees.get(v).copied().unwrap_or(0)
    }
}

const ID_CHARS: &str = "letters, digits, '_', '.', '-'";

fn validate_id(id: &str, what: &str) -> Result<()> {
    if id.is_empty() {
        return Err(Error::malformed(format!("{what} id is empty")));
    }
    if !id
        .chars()
        .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
    {
        return Err(Error::malformed(format!(
            "{what} id {id:?} contains characters outside {ID_CHARS}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    marks: Vec<Mark>,
    vertex_index: BTreeMap<VertexId, usize>,
}

impl CurveGraph {
    /// Build a graph, validating id uniqueness and endpoint references.
    /// Connectivity is not required here; analysis entry points check it.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        Self::with_marks(vertices, edges, Vec::new())
    }

    pub fn with_marks(vertices: Vec<Vertex>, edges: Vec<Edge>, marks: Vec<Mark>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::malformed("a curve graph needs at least one vertex"));
        }
        let mut vertex_index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            validate_id(&v.id, "vertex")?;
            if vertex_index.insert(v.id.clone(), i).is_some() {
                return Err(Error::malformed(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let mut edge_ids = BTreeSet::new();
        let mut half_edge_ids = BTreeSet::new();
        for e in &edges {
            validate_id(&e.id, "edge")?;
            if !edge_ids.insert(e.id.clone()) {
                return Err(Error::malformed(format!("duplicate edge id {:?}", e.id)));
            }
            for end in &e.ends {
                if !vertex_index.contains_key(end) {
                    return Err(Error::malformed(format!(
                        "edge {:?} references unknown vertex {:?}",
                        e.id, end
                    )));
                }
            }
            for he in &e.half_edges {
                if !half_edge_ids.insert(he.clone()) {
                    return Err(Error::malformed(format!("duplicate half-edge id {he:?}")));
                }
            }
        }
        for m in &marks {
            if !vertex_index.contains_key(&m.vertex) {
                return Err(Error::malformed(format!(
                    "mark {:?} sits on unknown vertex {:?}",
                    m.half_edge, m.vertex
                )));
            }
            if !half_edge_ids.insert(m.half_edge.clone()) {
                return Err(Error::malformed(format!(
                    "duplicate half-edge id {:?}",
                    m.half_edge
                )));
            }
        }
        Ok(CurveGraph {
            vertices,
            edges,
            marks,
            vertex_index,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertex_index.get(id).map(|&i| &self.vertices[i])
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertex_index.contains_key(id)
    }

    /// Number of node branches at `v`; a self-loop counts twice.
    pub fn branches(&self, v: &str) -> usize {
        self.edges
            .iter()
            .map(|e| e.ends.iter().filter(|end| *end == v).count())
            .sum()
    }

    /// Connected components as sorted vertex sets, in deterministic order
    /// (by smallest contained vertex id).
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut comps = Vec::new();
        for v in self.vertex_index.keys() {
            if seen.contains(v.as_str()) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::new();
            queue.push_back(v.as_str());
            seen.insert(v.as_str());
            while let Some(u) = queue.pop_front() {
                comp.insert(u.to_string());
                for e in &self.edges {
                    for (i, end) in e.ends.iter().enumerate() {
                        if end == u {
                            let w = &e.ends[1 - i];
                            if seen.insert(w.as_str()) {
                                queue.push_back(w.as_str());
                            }
                        }
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::unsuitable("curve is disconnected"))
        }
    }

    /// Arithmetic genus by the Euler formula:
    /// sum of vertex genera + E - V + number of components.
    pub fn arithmetic_genus(&self) -> i64 {
        let genus_sum: i64 = self.vertices.iter().map(|v| v.genus as i64).sum();
        genus_sum + self.edges.len() as i64 - self.vertices.len() as i64
            + self.connected_components().len() as i64
    }

    /// Degree of the dualizing sheaf on the component `v`:
    /// 2 genus - 2 + branches.
    pub fn omega_degree(&self, v: &str) -> Result<i64> {
        let vertex = self
            .vertex(v)
            .ok_or_else(|| Error::malformed(format!("unknown vertex {v:?}")))?;
        Ok(2 * vertex.genus as i64 - 2 + self.branches(v) as i64)
    }

    /// Stable / semistable / unstable by the sign of the omega-degree at
    /// every vertex. Rejects disconnected input.
    pub fn classify_stability(&self) -> Result<Stability> {
        self.require_connected()?;
        let mut stable = true;
        for v in &self.vertices {
            let d = self.omega_degree(&v.id)?;
            if d < 0 {
                return Ok(Stability::Unstable);
            }
            if d == 0 {
                stable = false;
            }
        }
        Ok(if stable {
            Stability::Stable
        } else {
            Stability::Semistable
        })
    }

    /// Delete the given edges; their half-edges persist as marked points on
    /// their vertices. The result may be disconnected.
    pub fn blowup(&self, edge_ids: &BTreeSet<EdgeId>) -> Result<CurveGraph> {
        for id in edge_ids {
            if self.edge(id).is_none() {
                return Err(Error::malformed(format!("unknown edge {id:?}")));
            }
        }
        let mut marks = self.marks.clone();
        let mut kept = Vec::new();
        for e in &self.edges {
            if edge_ids.contains(&e.id) {
                for i in 0..2 {
                    marks.push(Mark {
                        half_edge: e.half_edges[i].clone(),
                        vertex: e.ends[i].clone(),
                        source_edge: e.id.clone(),
                    });
                }
            } else {
                kept.push(e.clone());
            }
        }
        CurveGraph::with_marks(self.vertices.clone(), kept, marks)
    }

    /// Split a (possibly disconnected) graph into its connected components,
    /// each carrying its vertices, induced edges and marks.
    pub fn split_components(&self) -> Vec<CurveGraph> {
        self.connected_components()
            .into_iter()
            .map(|set| self.induced(&set).expect("component set is valid"))
            .collect()
    }

    /// Induced subgraph on a vertex set: edges with both ends inside, marks
    /// on contained vertices.
    pub fn induced(&self, vertex_set: &BTreeSet<VertexId>) -> Result<CurveGraph> {
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .filter(|v| vertex_set.contains(&v.id))
            .cloned()
            .collect();
        if vertices.len() != vertex_set.len() {
            return Err(Error::malformed("subcurve references unknown vertices"));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| vertex_set.contains(&e.ends[0]) && vertex_set.contains(&e.ends[1]))
            .cloned()
            .collect();
        let marks = self
            .marks
            .iter()
            .filter(|m| vertex_set.contains(&m.vertex))
            .cloned()
            .collect();
        CurveGraph::with_marks(vertices, edges, marks)
    }

    /// Edges of the parent with both ends in the subcurve.
    pub fn induced_edges(&self, sub: &Subcurve) -> Vec<&Edge> {
        self.edges
            .iter()
            .filter(|e| sub.vertex_set.contains(&e.ends[0]) && sub.vertex_set.contains(&e.ends[1]))
            .collect()
    }

    /// Total degree of a multidegree over a subcurve.
    pub fn subcurve_degree(&self, degree: &Multidegree, sub: &Subcurve) -> i64 {
        sub.vertex_set.iter().map(|v| degree.degree_on(v)).sum()
    }

    /// True when removing `removed` leaves the graph connected. Vertex set
    /// is unchanged; only edges are deleted.
    pub fn connected_without(&self, removed: &BTreeSet<&str>) -> bool {
        self.count_components_without(removed) == 1
    }

    pub fn count_components_without(&self, removed: &BTreeSet<&str>) -> usize {
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut comps = 0;
        for v in self.vertex_index.keys() {
            if seen.contains(v.as_str()) {
                continue;
            }
            comps += 1;
            let mut queue = VecDeque::new();
            queue.push_back(v.as_str());
            seen.insert(v.as_str());
            while let Some(u) = queue.pop_front() {
                for e in &self.edges {
                    if removed.contains(e.id.as_str()) {
                        continue;
                    }
                    for (i, end) in e.ends.iter().enumerate() {
                        if end == u {
                            let w = e.ends[1 - i].as_str();
                            if seen.insert(w) {
                                queue.push_back(w);
                            }
                        }
                    }
                }
            }
        }
        comps
    }

    /// Vertex sets of the components of the graph with `removed` edges
    /// deleted.
    pub fn components_without(&self, removed: &BTreeSet<&str>) -> Vec<BTreeSet<VertexId>> {
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut comps = Vec::new();
        for v in self.vertex_index.keys() {
            if seen.contains(v.as_str()) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::new();
            queue.push_back(v.as_str());
            seen.insert(v.as_str());
            while let Some(u) = queue.pop_front() {
                comp.insert(u.to_string());
                for e in &self.edges {
                    if removed.contains(e.id.as_str()) {
                        continue;
                    }
                    for (i, end) in e.ends.iter().enumerate() {
                        if end == u {
                            let w = e.ends[1 - i].as_str();
                            if seen.insert(w) {
                                queue.push_back(w);
                            }
                        }
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }
}

/// Spines (smooth rational inseparable components) and seps: together they
/// are the base locus of the canonical system on a semistable curve.
pub fn spines_and_base_locus(g: &CurveGraph) -> Result<(BTreeSet<VertexId>, BTreeSet<EdgeId>)> {
    g.require_connected()?;
    match g.classify_stability()? {
        Stability::Unstable => return Err(Error::unsuitable("curve is unstable")),
        Stability::Stable | Stability::Semistable => {}
    }
    if g.arithmetic_genus() < 1 {
        return Err(Error::unsuitable(
            "canonical system is empty in arithmetic genus 0",
        ));
    }
    let seps: BTreeSet<EdgeId> = crate::separators::find_seps(g)?
        .into_iter()
        .flat_map(|s| s.edges)
        .collect();
    let separation = g.blowup(&seps)?;
    let mut spines = BTreeSet::new();
    for comp in separation.split_components() {
        if comp.vertices().len() == 1 && comp.edges().is_empty() {
            let v = &comp.vertices()[0];
            if v.genus == 0 {
                spines.insert(v.id.clone());
            }
        }
    }
    Ok((spines, seps))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn vertex(id: &str, genus: u32) -> Vertex {
        Vertex {
            id: id.into(),
            genus,
        }
    }

    pub fn edge(id: &str, a: &str, b: &str) -> Edge {
        Edge {
            id: id.into(),
            ends: [a.into(), b.into()],
            half_edges: [format!("{id}.0"), format!("{id}.1")],
        }
    }

    /// Two vertices of the given genera joined by one edge.
    pub fn dumbbell(ga: u32, gb: u32) -> CurveGraph {
        CurveGraph::new(
            vec![vertex("A", ga), vertex("B", gb)],
            vec![edge("t1", "A", "B")],
        )
        .unwrap()
    }

    /// Two vertices joined by `r` parallel edges (an r-interlace when both
    /// genera are 0).
    pub fn parallel(ga: u32, gb: u32, r: usize) -> CurveGraph {
        let edges = (0..r).map(|i| edge(&format!("e{i}"), "A", "B")).collect();
        CurveGraph::new(vec![vertex("A", ga), vertex("B", gb)], edges).unwrap()
    }

    /// Triangle A-B-C with the given genus at every vertex.
    pub fn triangle(genus: u32) -> CurveGraph {
        CurveGraph::new(
            vec![vertex("A", genus), vertex("B", genus), vertex("C", genus)],
            vec![
                edge("ab", "A", "B"),
                edge("bc", "B", "C"),
                edge("ca", "C", "A"),
            ],
        )
        .unwrap()
    }

    /// Cycle on `n` vertices of the given genus.
    pub fn cycle(genus: u32, n: usize) -> CurveGraph {
        let names: Vec<String> = (0..n).map(|i| format!("V{i}")).collect();
        let vertices = names.iter().map(|n| vertex(n, genus)).collect();
        let edges = (0..n)
            .map(|i| edge(&format!("c{i}"), &names[i], &names[(i + 1) % n]))
            .collect();
        CurveGraph::new(vertices, edges).unwrap()
    }

    /// Path of vertices with the given genera.
    pub fn chain(genera: &[u32]) -> CurveGraph {
        let names: Vec<String> = (0..genera.len()).map(|i| format!("V{i}")).collect();
        let vertices = names
            .iter()
            .zip(genera)
            .map(|(n, &g)| vertex(n, g))
            .collect();
        let edges = (0..genera.len() - 1)
            .map(|i| edge(&format!("s{i}"), &names[i], &names[i + 1]))
            .collect();
        CurveGraph::new(vertices, edges).unwrap()
    }

    pub fn loop_vertex(genus: u32) -> CurveGraph {
        CurveGraph::new(vec![vertex("A", genus)], vec![edge("l", "A", "A")]).unwrap()
    }
}
