//! Cut structure of the dual graph: seps, biseps, polyseparators, the
//! 2-separation into marked 2-components, and the separation tree.
//!
//! Everything here is brute force over edge subsets, which is the contract
//! at desk scale; the structural facts (polyseparator disjointness, n-gon
//! shape, tree shape, inseparability of 2-components) are re-checked at
//! runtime and raise `Error::Internal` when violated.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{CurveGraph, EdgeId, HalfEdgeId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum StarSepKind {
    Sep,
    Bisep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An oriented sep (one edge) or bisep (two edges) with its two-part vertex
/// partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSep {
    pub kind: StarSepKind,
    /// One edge id for a sep, two (sorted) for a bisep.
    pub edges: Vec<EdgeId>,
    pub left: BTreeSet<VertexId>,
    pub right: BTreeSet<VertexId>,
}

impl StarSep {
    /// Edge ids joined by `+`; stable across orientation flips.
    pub fn id(&self) -> String {
        self.edges.join("+")
    }

    pub fn is_sep(&self) -> bool {
        self.kind == StarSepKind::Sep
    }

    pub fn flipped(&self) -> StarSep {
        StarSep {
            kind: self.kind,
            edges: self.edges.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn side(&self, side: Side) -> &BTreeSet<VertexId> {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// Reorient so the given vertex set is on the left.
    pub fn oriented_with_left(&self, vertices: &BTreeSet<VertexId>) -> Result<StarSep> {
        let inside_left = vertices.iter().all(|v| self.left.contains(v));
        let inside_right = vertices.iter().all(|v| self.right.contains(v));
        match (inside_left, inside_right) {
            (true, false) => Ok(self.clone()),
            (false, true) => Ok(self.flipped()),
            _ => Err(Error::internal(format!(
                "vertex set does not sit on one side of {}",
                self.id()
            ))),
        }
    }

    /// Which side of `self` contains all endpoints of `other`'s edges, if
    /// they sit on one side (they always do for the *-seps this crate
    /// produces; crossing returns None).
    pub fn side_containing(&self, g: &CurveGraph, other: &StarSep) -> Option<Side> {
        let mut endpoints = BTreeSet::new();
        for eid in &other.edges {
            let e = g.edge(eid)?;
            endpoints.insert(e.ends[0].clone());
            endpoints.insert(e.ends[1].clone());
        }
        if endpoints.iter().all(|v| self.left.contains(v)) {
            Some(Side::Left)
        } else if endpoints.iter().all(|v| self.right.contains(v)) {
            Some(Side::Right)
        } else {
            None
        }
    }
}

/// Canonical orientation: the left part is the one whose sorted vertex list
/// is lexicographically smaller.
fn orient_canonically(
    a: BTreeSet<VertexId>,
    b: BTreeSet<VertexId>,
) -> (BTreeSet<VertexId>, BTreeSet<VertexId>) {
    let av: Vec<&VertexId> = a.iter().collect();
    let bv: Vec<&VertexId> = b.iter().collect();
    if av <= bv {
        (a, b)
    } else {
        (b, a)
    }
}

/// All separating nodes: non-loop edges whose removal disconnects the
/// graph. A self-loop is never a sep.
pub fn find_seps(g: &CurveGraph) -> Result<Vec<StarSep>> {
    g.require_connected()?;
    let mut out = Vec::new();
    let mut edges: Vec<&crate::graph::Edge> = g.edges().iter().collect();
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    for e in edges {
        if e.is_loop() {
            continue;
        }
        let removed: BTreeSet<&str> = [e.id.as_str()].into_iter().collect();
        let comps = g.components_without(&removed);
        if comps.len() == 2 {
            let mut it = comps.into_iter();
            let (left, right) = orient_canonically(it.next().unwrap(), it.next().unwrap());
            out.push(StarSep {
                kind: StarSepKind::Sep,
                edges: vec![e.id.clone()],
                left,
                right,
            });
        } else if comps.len() > 2 {
            return Err(Error::internal(
                "removing one edge produced more than two components",
            ));
        }
    }
    Ok(out)
}

/// All properly separating binodes: unordered pairs of individually
/// nonseparating non-loop edges whose joint removal disconnects the graph
/// (necessarily into exactly two parts).
pub fn find_biseps(g: &CurveGraph) -> Result<Vec<StarSep>> {
    g.require_connected()?;
    let sep_ids: BTreeSet<String> = find_seps(g)?
        .into_iter()
        .map(|s| s.edges[0].clone())
        .collect();
    let mut candidates: Vec<&crate::graph::Edge> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop() && !sep_ids.contains(&e.id))
        .collect();
    candidates.sort_by(|a, b| a.id.cmp(&b.id));
    let mut out = Vec::new();
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            let (e, f) = (candidates[i], candidates[j]);
            let removed: BTreeSet<&str> = [e.id.as_str(), f.id.as_str()].into_iter().collect();
            let comps = g.components_without(&removed);
            match comps.len() {
                1 => {}
                2 => {
                    let mut it = comps.into_iter();
                    let (left, right) = orient_canonically(it.next().unwrap(), it.next().unwrap());
                    out.push(StarSep {
                        kind: StarSepKind::Bisep,
                        edges: vec![e.id.clone(), f.id.clone()],
                        left,
                        right,
                    });
                }
                _ => {
                    return Err(Error::internal(
                        "two nonseparating edges produced more than two components",
                    ))
                }
            }
        }
    }
    Ok(out)
}

/// A set of >= 2 nodes every pair of which is a bisep, in cyclic
/// arrangement: `parts[i]` is the component of the separation incident to
/// `edges[i]` and `edges[(i + 1) % n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyseparator {
    pub edges: Vec<EdgeId>,
    pub parts: Vec<BTreeSet<VertexId>>,
}

impl Polyseparator {
    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    /// Proper means degree >= 3; a curve with a proper polyseparator is not
    /// of semicompact type.
    pub fn is_proper(&self) -> bool {
        self.degree() >= 3
    }

    /// Sorted edge ids joined by `+`; independent of the cyclic arrangement.
    pub fn id(&self) -> String {
        let mut ids = self.edges.clone();
        ids.sort();
        ids.join("+")
    }

    pub fn contains_edge(&self, edge: &str) -> bool {
        self.edges.iter().any(|e| e == edge)
    }
}

/// Compute the cyclic arrangement of a claimed polyseparator, validating
/// the pairwise-bisep property and the n-gon shape of its dual.
pub fn cyclic_arrangement(g: &CurveGraph, edge_ids: &[EdgeId]) -> Result<Polyseparator> {
    g.require_connected()?;
    if edge_ids.len() < 2 {
        return Err(Error::malformed("a polyseparator needs at least two edges"));
    }
    let set: BTreeSet<&str> = edge_ids.iter().map(|s| s.as_str()).collect();
    if set.len() != edge_ids.len() {
        return Err(Error::malformed("polyseparator edges must be distinct"));
    }
    for id in &set {
        if g.edge(id).is_none() {
            return Err(Error::malformed(format!("unknown edge {id:?}")));
        }
    }
    // Pairwise bisep check against the definition.
    let biseps = find_biseps(g)?;
    let is_bisep = |a: &str, b: &str| {
        biseps
            .iter()
            .any(|s| s.edges.iter().any(|e| e == a) && s.edges.iter().any(|e| e == b))
    };
    let ids: Vec<&str> = set.iter().copied().collect();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if !is_bisep(ids[i], ids[j]) {
                return Err(Error::malformed(format!(
                    "edges {:?} and {:?} do not form a bisep; not a polyseparator",
                    ids[i], ids[j]
                )));
            }
        }
    }
    arrange_cycle(g, &set)
}

/// Order the parts and edges of a (validated) polyseparator into the n-gon
/// cycle, canonical up to the choice of start and direction made here:
/// start at the smallest edge id, walk toward the smaller second edge id.
fn arrange_cycle(g: &CurveGraph, set: &BTreeSet<&str>) -> Result<Polyseparator> {
    let parts = g.components_without(set);
    let n = set.len();
    if parts.len() != n {
        return Err(Error::internal(format!(
            "polyseparator of degree {n} has {} parts, expected {n}",
            parts.len()
        )));
    }
    // Incidence: which two parts does each edge join; which two edges touch
    // each part.
    let part_of = |v: &str| -> usize {
        parts
            .iter()
            .position(|p| p.contains(v))
            .expect("every vertex is in some part")
    };
    let mut edge_parts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    let mut part_edges: Vec<Vec<&str>> = vec![Vec::new(); n];
    for &eid in set {
        let e = g.edge(eid).expect("validated above");
        let (p, q) = (part_of(&e.ends[0]), part_of(&e.ends[1]));
        if p == q {
            return Err(Error::internal(format!(
                "polyseparator edge {eid:?} does not join two distinct parts"
            )));
        }
        edge_parts.insert(eid, (p, q));
        part_edges[p].push(eid);
        part_edges[q].push(eid);
    }
    for (i, touching) in part_edges.iter().enumerate() {
        if touching.len() != 2 {
            return Err(Error::internal(format!(
                "part {i} is incident to {} polyseparator edges, expected 2",
                touching.len()
            )));
        }
    }
    // Walk the cycle starting from the smallest edge id.
    let start = *set.iter().next().expect("nonempty");
    let (p, q) = edge_parts[start];
    let next_edge = |part: usize, arrived_by: &str| -> &str {
        let [a, b] = [part_edges[part][0], part_edges[part][1]];
        if a == arrived_by {
            b
        } else {
            a
        }
    };
    // Two directions; pick the one whose second edge id is smaller, and for
    // a 2-gon order the two parts lexicographically.
    let walk = |first_part: usize| -> (Vec<String>, Vec<usize>) {
        let mut edges = vec![start.to_string()];
        let mut order = vec![first_part];
        let mut cur_edge = start;
        let mut cur_part = first_part;
        for _ in 1..n {
            let e = next_edge(cur_part, cur_edge);
            let (a, b) = edge_parts[e];
            let nxt = if a == cur_part { b } else { a };
            edges.push(e.to_string());
            order.push(nxt);
            cur_edge = e;
            cur_part = nxt;
        }
        (edges, order)
    };
    let (edges_p, order_p) = walk(p);
    let (edges_q, order_q) = walk(q);
    let pick_p = if n == 2 {
        let pv: Vec<&VertexId> = parts[p].iter().collect();
        let qv: Vec<&VertexId> = parts[q].iter().collect();
        pv <= qv
    } else {
        edges_p[1..] <= edges_q[1..]
    };
    let (edges, order) = if pick_p {
        (edges_p, order_p)
    } else {
        (edges_q, order_q)
    };
    // The walk must close: the last part connects back to the start edge.
    let last = *order.last().expect("nonempty walk");
    if next_edge(last, edges.last().expect("nonempty").as_str()) != start {
        return Err(Error::internal("polyseparator dual is not a single cycle"));
    }
    Ok(Polyseparator {
        edges,
        parts: order.into_iter().map(|i| parts[i].clone()).collect(),
    })
}

/// Group all biseps into maximal polyseparators. These are pairwise
/// disjoint, cover every bisep, and each dual is a simple n-gon; all three
/// facts are enforced at runtime.
pub fn maximal_polyseparators(g: &CurveGraph) -> Result<Vec<Polyseparator>> {
    g.require_connected()?;
    let biseps = find_biseps(g)?;
    // Union-find over edges related by "forms a bisep with".
    let mut class: BTreeMap<&str, usize> = BTreeMap::new();
    let mut classes: Vec<BTreeSet<&str>> = Vec::new();
    for b in &biseps {
        let (e, f) = (b.edges[0].as_str(), b.edges[1].as_str());
        match (class.get(e).copied(), class.get(f).copied()) {
            (None, None) => {
                let idx = classes.len();
                classes.push([e, f].into_iter().collect());
                class.insert(e, idx);
                class.insert(f, idx);
            }
            (Some(i), None) => {
                classes[i].insert(f);
                class.insert(f, i);
            }
            (None, Some(j)) => {
                classes[j].insert(e);
                class.insert(e, j);
            }
            (Some(i), Some(j)) if i != j => {
                let moved: Vec<&str> = classes[j].iter().copied().collect();
                for m in moved {
                    classes[i].insert(m);
                    class.insert(m, i);
                }
                classes[j].clear();
            }
            _ => {}
        }
    }
    let mut out = Vec::new();
    for members in classes.iter().filter(|c| !c.is_empty()) {
        // The closure property: every pair in a class is itself a bisep.
        let ids: Vec<&str> = members.iter().copied().collect();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                let found = biseps.iter().any(|b| {
                    b.edges.iter().any(|e| e == ids[i]) && b.edges.iter().any(|e| e == ids[j])
                });
                if !found {
                    return Err(Error::internal(format!(
                        "bisep class {{{}}} is not pairwise separating",
                        ids.join(", ")
                    )));
                }
            }
        }
        out.push(arrange_cycle(g, members)?);
    }
    // Disjointness across classes.
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for p in &out {
        for e in &p.edges {
            if !seen.insert(e.as_str()) {
                return Err(Error::internal(
                    "maximal polyseparators are not pairwise disjoint",
                ));
            }
        }
    }
    // Every bisep lies in exactly one class.
    for b in &biseps {
        let count = out
            .iter()
            .filter(|p| p.contains_edge(&b.edges[0]) && p.contains_edge(&b.edges[1]))
            .count();
        if count != 1 {
            return Err(Error::internal(format!(
                "bisep {} lies in {count} maximal polyseparators",
                b.id()
            )));
        }
    }
    out.sort_by_key(|p| p.id());
    Ok(out)
}

/// No proper polyseparators.
pub fn is_semicompact_type(g: &CurveGraph) -> Result<bool> {
    Ok(maximal_polyseparators(g)?.iter().all(|p| !p.is_proper()))
}

/// A smooth marked point on a 2-component left by a blown-up sep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unimark {
    pub half_edge: HalfEdgeId,
    pub vertex: VertexId,
    /// The sep, oriented with the owning component on the left.
    pub sep: StarSep,
}

/// A smooth marked pair on a 2-component left by a blown-up bisep; the
/// half-edges follow the bisep's (sorted) edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimark {
    pub half_edges: [HalfEdgeId; 2],
    pub vertices: [VertexId; 2],
    /// The bisep, oriented with the owning component on the left.
    pub bisep: StarSep,
    /// True when the bisep is a maximal polyseparator of degree 2. Corner
    /// pairs of proper polyseparators carry `false`.
    pub maximal: bool,
}

impl Bimark {
    /// Half-edge ids joined by `+`, the oracle key for this mark.
    pub fn key(&self) -> String {
        format!("{}+{}", self.half_edges[0], self.half_edges[1])
    }
}

/// A connected component of the 2-separation, with the marks its *-seps
/// left behind, every one oriented with this component on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoComponent {
    /// Sorted vertex ids joined by `+`.
    pub id: String,
    pub subgraph: CurveGraph,
    pub unimarks: Vec<Unimark>,
    pub bimarks: Vec<Bimark>,
}

impl TwoComponent {
    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.subgraph
            .vertices()
            .iter()
            .map(|v| v.id.clone())
            .collect()
    }

    pub fn arithmetic_genus(&self) -> i64 {
        self.subgraph.arithmetic_genus()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.subgraph.has_vertex(v)
    }

    /// Vertices carrying marks, with multiplicity one entry per mark point.
    pub fn mark_support(&self) -> Vec<VertexId> {
        let mut support: Vec<VertexId> = self.unimarks.iter().map(|u| u.vertex.clone()).collect();
        for b in &self.bimarks {
            support.push(b.vertices[0].clone());
            support.push(b.vertices[1].clone());
        }
        support
    }
}

pub fn component_id(vertices: &BTreeSet<VertexId>) -> String {
    vertices
        .iter()
        .map(|s| s.as_str())
        .collect::<Vec<_>>()
        .join("+")
}

/// One *-sep blown during the iterated 2-separation. `round` 1 means a sep
/// or bisep of the curve itself; higher rounds arise inside pieces of
/// earlier blowups, and their sides are vertex sets of that piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub star: StarSep,
    pub round: usize,
    /// For bisep-kind cuts: the bisep is a degree-2 maximal polyseparator
    /// of its piece. Always false for seps.
    pub maximal: bool,
}

#[derive(Debug, Clone)]
pub struct TwoSeparation {
    pub components: Vec<TwoComponent>,
    pub cuts: Vec<Cut>,
}

/// Blow up seps and biseps round by round until every piece is both
/// inseparable and 2-inseparable, then package each piece with the marks
/// the cuts left behind.
///
/// One pass is not always enough: a component of the first blowup can
/// acquire a sep or bisep that was hidden by the removed edges, and those
/// are exactly the cuts the sepcanonical recursion peels next.
pub fn two_separation_full(g: &CurveGraph) -> Result<TwoSeparation> {
    g.require_connected()?;
    assert_one_sided(
        g,
        &find_seps(g)?,
        &find_biseps(g)?,
        &maximal_polyseparators(g)?,
    )?;

    let mut cuts: Vec<Cut> = Vec::new();
    let mut atoms: Vec<CurveGraph> = Vec::new();
    let mut queue: Vec<(CurveGraph, usize)> = vec![(g.clone(), 1)];
    while let Some((piece, round)) = queue.pop() {
        let seps = find_seps(&piece)?;
        let biseps = find_biseps(&piece)?;
        if seps.is_empty() && biseps.is_empty() {
            atoms.push(piece);
            continue;
        }
        let polyseps = maximal_polyseparators(&piece)?;
        let maximal_ids: BTreeSet<String> = polyseps
            .iter()
            .filter(|p| p.degree() == 2)
            .map(|p| p.id())
            .collect();
        let mut blown: BTreeSet<EdgeId> = BTreeSet::new();
        for s in seps {
            blown.insert(s.edges[0].clone());
            cuts.push(Cut {
                star: s,
                round,
                maximal: false,
            });
        }
        for b in biseps {
            blown.extend(b.edges.iter().cloned());
            let maximal = maximal_ids.contains(&b.id());
            cuts.push(Cut {
                star: b,
                round,
                maximal,
            });
        }
        for comp in piece.blowup(&blown)?.split_components() {
            queue.push((comp, round + 1));
        }
    }
    cuts.sort_by(|a, b| {
        a.round
            .cmp(&b.round)
            .then_with(|| a.star.id().cmp(&b.star.id()))
    });

    let mut components = Vec::new();
    for atom in atoms {
        let vset: BTreeSet<VertexId> = atom.vertices().iter().map(|v| v.id.clone()).collect();
        let mark_of = |edge: &str| -> Option<&crate::graph::Mark> {
            atom.marks().iter().find(|m| m.source_edge == edge)
        };
        let mut claimed: BTreeSet<HalfEdgeId> = BTreeSet::new();
        let mut unimarks = Vec::new();
        let mut bimarks = Vec::new();
        // Whole pairs first: a bisep whose two edge preimages both sit on
        // this atom leaves its bimark here.
        for cut in cuts.iter().filter(|c| !c.star.is_sep()) {
            let (m0, m1) = (mark_of(&cut.star.edges[0]), mark_of(&cut.star.edges[1]));
            if let (Some(m0), Some(m1)) = (m0, m1) {
                if !claimed.contains(&m0.half_edge) && !claimed.contains(&m1.half_edge) {
                    claimed.insert(m0.half_edge.clone());
                    claimed.insert(m1.half_edge.clone());
                    bimarks.push(Bimark {
                        half_edges: [m0.half_edge.clone(), m1.half_edge.clone()],
                        vertices: [m0.vertex.clone(), m1.vertex.clone()],
                        bisep: cut.star.oriented_with_left(&vset)?,
                        maximal: cut.maximal,
                    });
                }
            }
        }
        for cut in cuts.iter().filter(|c| c.star.is_sep()) {
            if let Some(m) = mark_of(&cut.star.edges[0]) {
                claimed.insert(m.half_edge.clone());
                unimarks.push(Unimark {
                    half_edge: m.half_edge.clone(),
                    vertex: m.vertex.clone(),
                    sep: cut.star.oriented_with_left(&vset)?,
                });
            }
        }
        // Orphans: a bisep point whose partner landed on another atom
        // (the pair was separated by a later round) stands alone.
        for m in atom.marks() {
            if claimed.contains(&m.half_edge) {
                continue;
            }
            let home = cuts
                .iter()
                .find(|c| !c.star.is_sep() && c.star.edges.contains(&m.source_edge));
            if let Some(cut) = home {
                claimed.insert(m.half_edge.clone());
                unimarks.push(Unimark {
                    half_edge: m.half_edge.clone(),
                    vertex: m.vertex.clone(),
                    sep: cut.star.oriented_with_left(&vset)?,
                });
            }
        }
        unimarks.sort_by(|a, b| a.half_edge.cmp(&b.half_edge));
        bimarks.sort_by_key(|b| b.key());
        let tc = TwoComponent {
            id: component_id(&vset),
            subgraph: atom,
            unimarks,
            bimarks,
        };
        verify_two_component(&tc)?;
        components.push(tc);
    }
    components.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(TwoSeparation { components, cuts })
}

/// The 2-components alone; see `two_separation_full` for the cut records.
pub fn two_separation(g: &CurveGraph) -> Result<Vec<TwoComponent>> {
    Ok(two_separation_full(g)?.components)
}

/// Structure checks on a freshly built 2-component: inseparable and
/// 2-inseparable outright (the iteration ran to its fixpoint), hence in
/// particular 2-inseparable relative to the marks.
fn verify_two_component(tc: &TwoComponent) -> Result<()> {
    if !find_seps(&tc.subgraph)?.is_empty() {
        return Err(Error::internal(format!(
            "2-component {} has an internal sep",
            tc.id
        )));
    }
    if !find_biseps(&tc.subgraph)?.is_empty() {
        return Err(Error::internal(format!(
            "2-component {} has an internal bisep",
            tc.id
        )));
    }
    let support = tc.mark_support();
    let rel = relative_two_inseparable(&tc.subgraph, &support)?;
    if !rel.two_inseparable {
        return Err(Error::internal(format!(
            "2-component {} is not 2-inseparable relative to its marks",
            tc.id
        )));
    }
    Ok(())
}

/// Pairwise one-sidedness of *-seps. Seps and maximal biseps never cross;
/// on semicompact-type curves no two *-seps of any kind cross.
fn assert_one_sided(
    g: &CurveGraph,
    seps: &[StarSep],
    biseps: &[StarSep],
    polyseps: &[Polyseparator],
) -> Result<()> {
    let semicompact = polyseps.iter().all(|p| !p.is_proper());
    let maximal_bisep_ids: BTreeSet<String> = polyseps
        .iter()
        .filter(|p| p.degree() == 2)
        .map(|p| p.id())
        .collect();
    let mut tree_edges: Vec<&StarSep> = seps.iter().collect();
    let checked: Vec<&StarSep> = if semicompact {
        tree_edges.extend(biseps.iter());
        tree_edges
    } else {
        tree_edges.extend(
            biseps
                .iter()
                .filter(|b| maximal_bisep_ids.contains(&b.id())),
        );
        tree_edges
    };
    for (i, a) in checked.iter().enumerate() {
        for b in checked.iter().skip(i + 1) {
            if a.side_containing(g, b).is_none() || b.side_containing(g, a).is_none() {
                return Err(Error::internal(format!(
                    "*-seps {} and {} do not lie to one side of each other",
                    a.id(),
                    b.id()
                )));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeVertex {
    /// Sorted vertex ids joined by `+`.
    pub id: String,
    pub vertex_set: BTreeSet<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub sep: StarSep,
    /// Ids of the two tree vertices this *-sep joins.
    pub endpoints: [String; 2],
}

/// The separation tree: edges are the seps and maximal biseps; vertices
/// are the co-side classes, i.e. maximal sets of curve vertices never
/// separated by any tree edge. Biseps inside proper polyseparators do not
/// appear; their cycle structure is reported by `maximal_polyseparators`
/// instead.
///
/// Co-side classes rather than blowup components: blowing up all tree
/// edges at once can split the far side of one bisep along another, while
/// the one-sided family of tree cuts always induces a tree on its classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationTree {
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<TreeEdge>,
}

pub fn separation_tree(g: &CurveGraph) -> Result<SeparationTree> {
    g.require_connected()?;
    let seps = find_seps(g)?;
    let biseps = find_biseps(g)?;
    let polyseps = maximal_polyseparators(g)?;
    let maximal_bisep_ids: BTreeSet<String> = polyseps
        .iter()
        .filter(|p| p.degree() == 2)
        .map(|p| p.id())
        .collect();
    let tree_seps: Vec<&StarSep> = seps
        .iter()
        .chain(
            biseps
                .iter()
                .filter(|b| maximal_bisep_ids.contains(&b.id())),
        )
        .collect();

    // Side signature per vertex; equal signatures mean no tree cut
    // separates the two vertices.
    let signature =
        |v: &str| -> Vec<bool> { tree_seps.iter().map(|s| s.left.contains(v)).collect() };
    let mut chunks: BTreeMap<Vec<bool>, BTreeSet<VertexId>> = BTreeMap::new();
    for v in g.vertices() {
        chunks
            .entry(signature(&v.id))
            .or_default()
            .insert(v.id.clone());
    }
    let mut vertices: Vec<TreeVertex> = chunks
        .into_values()
        .map(|set| TreeVertex {
            id: component_id(&set),
            vertex_set: set,
        })
        .collect();
    vertices.sort_by(|a, b| a.id.cmp(&b.id));

    let find_home = |v: &str| -> Result<String> {
        vertices
            .iter()
            .find(|tv| tv.vertex_set.contains(v))
            .map(|tv| tv.id.clone())
            .ok_or_else(|| Error::internal(format!("vertex {v:?} not in any tree chunk")))
    };
    let mut edges = Vec::new();
    for s in &tree_seps {
        let mut homes: Vec<BTreeSet<String>> = Vec::new();
        for eid in &s.edges {
            let e = g.edge(eid).expect("edge exists");
            homes.push(
                [find_home(&e.ends[0])?, find_home(&e.ends[1])?]
                    .into_iter()
                    .collect(),
            );
        }
        let first = &homes[0];
        if first.len() != 2 || homes.iter().any(|h| h != first) {
            return Err(Error::internal(format!(
                "tree edge {} does not join two tree chunks consistently",
                s.id()
            )));
        }
        let mut pair = first.iter().cloned();
        edges.push(TreeEdge {
            sep: (*s).clone(),
            endpoints: [pair.next().unwrap(), pair.next().unwrap()],
        });
    }
    edges.sort_by_key(|e| e.sep.id());

    let tree = SeparationTree { vertices, edges };
    verify_tree(&tree)?;
    Ok(tree)
}

fn verify_tree(tree: &SeparationTree) -> Result<()> {
    let n = tree.vertices.len();
    if tree.edges.len() + 1 != n {
        return Err(Error::internal(format!(
            "separation tree has {n} vertices and {} edges",
            tree.edges.len()
        )));
    }
    // Connectivity by union-find over tree vertices.
    let index: BTreeMap<&str, usize> = tree
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.id.as_str(), i))
        .collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for e in &tree.edges {
        let a = root(&mut parent, index[e.endpoints[0].as_str()]);
        let b = root(&mut parent, index[e.endpoints[1].as_str()]);
        if a == b {
            return Err(Error::internal("separation tree contains a cycle"));
        }
        parent[a] = b;
    }
    let r = root(&mut parent, 0);
    for i in 1..n {
        if root(&mut parent, i) != r {
            return Err(Error::internal("separation tree is disconnected"));
        }
    }
    Ok(())
}

/// One shared separation pass over a connected curve: every later
/// computation (classification, sepcanonical bookkeeping, exports) reads
/// from this.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub graph: CurveGraph,
    /// Seps of the curve itself.
    pub seps: Vec<StarSep>,
    /// Biseps of the curve itself.
    pub biseps: Vec<StarSep>,
    pub polyseps: Vec<Polyseparator>,
    pub components: Vec<TwoComponent>,
    /// Every cut of the iterated 2-separation, including later rounds.
    pub cuts: Vec<Cut>,
    pub tree: SeparationTree,
}

impl Analysis {
    pub fn run(g: &CurveGraph) -> Result<Analysis> {
        g.require_connected()?;
        let separation = two_separation_full(g)?;
        Ok(Analysis {
            graph: g.clone(),
            seps: find_seps(g)?,
            biseps: find_biseps(g)?,
            polyseps: maximal_polyseparators(g)?,
            components: separation.components,
            cuts: separation.cuts,
            tree: separation_tree(g)?,
        })
    }

    pub fn is_two_inseparable(&self) -> bool {
        self.seps.is_empty() && self.biseps.is_empty()
    }

    pub fn is_semicompact_type(&self) -> bool {
        self.polyseps.iter().all(|p| !p.is_proper())
    }

    /// Biseps of the curve that are maximal polyseparators of degree 2,
    /// i.e. the bisep edges of the separation tree.
    pub fn maximal_biseps(&self) -> Vec<&StarSep> {
        let ids: BTreeSet<String> = self
            .polyseps
            .iter()
            .filter(|p| p.degree() == 2)
            .map(|p| p.id())
            .collect();
        self.biseps
            .iter()
            .filter(|b| ids.contains(&b.id()))
            .collect()
    }

    /// The default twist collection: every sep-kind cut plus every
    /// maximal bisep-kind cut, over all rounds of the separation.
    pub fn default_theta(&self) -> Vec<&StarSep> {
        self.cuts
            .iter()
            .filter(|c| c.star.is_sep() || c.maximal)
            .map(|c| &c.star)
            .collect()
    }

    /// The curve's own seps and maximal biseps: the edges of the
    /// separation tree, which drive the hyperellipticity definition.
    pub fn flat_theta(&self) -> Vec<&StarSep> {
        self.cuts
            .iter()
            .filter(|c| c.round == 1 && (c.star.is_sep() || c.maximal))
            .map(|c| &c.star)
            .collect()
    }

    /// Total number of distinct edges deleted by the iterated 2-separation.
    pub fn blown_edge_count(&self) -> usize {
        self.cuts
            .iter()
            .flat_map(|c| c.star.edges.iter())
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn component(&self, id: &str) -> Option<&TwoComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn component_containing(&self, vertex: &str) -> Result<&TwoComponent> {
        self.components
            .iter()
            .find(|c| c.contains_vertex(vertex))
            .ok_or_else(|| Error::internal(format!("vertex {vertex:?} is in no 2-component")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelativeInseparability {
    /// Every bisep has support on both sides.
    pub two_inseparable: bool,
    /// Every sep has support on both sides.
    pub inseparable: bool,
}

/// Relative (2-)inseparability of `g` with respect to a set of marked
/// points, given by the vertices carrying them.
pub fn relative_two_inseparable(
    g: &CurveGraph,
    support: &[VertexId],
) -> Result<RelativeInseparability> {
    g.require_connected()?;
    for v in support {
        if !g.has_vertex(v) {
            return Err(Error::malformed(format!(
                "support point on unknown vertex {v:?}"
            )));
        }
    }
    let meets_both = |s: &StarSep| {
        support.iter().any(|v| s.left.contains(v)) && support.iter().any(|v| s.right.contains(v))
    };
    let inseparable = find_seps(g)?.iter().all(meets_both);
    let two_inseparable = find_biseps(g)?.iter().all(meets_both);
    Ok(RelativeInseparability {
        two_inseparable,
        inseparable,
    })
}

/// An oriented bisep is (right-)adjacent when its right part is
/// inseparable. On an inseparable curve this is equivalent to its two
/// edges being cyclically consecutive in their maximal polyseparator with
/// the right part the arc between them, and both routes are compared; a
/// separable curve can hang a bridge off the arc, so there the direct
/// test alone decides.
pub fn adjacency_check(g: &CurveGraph, b: &StarSep) -> Result<bool> {
    g.require_connected()?;
    if b.kind != StarSepKind::Bisep {
        return Err(Error::malformed("adjacency is defined for biseps"));
    }
    let biseps = find_biseps(g)?;
    let matches = biseps.iter().find(|s| s.id() == b.id());
    let canonical = matches
        .ok_or_else(|| Error::malformed(format!("{} is not a bisep of this curve", b.id())))?;
    if b.left != canonical.left && b.left != canonical.right {
        return Err(Error::malformed(
            "bisep orientation does not match the curve's partition",
        ));
    }

    // Route 1: the right part, as an induced subgraph, has no sep.
    let right_graph = g.induced(&b.right)?;
    let direct = right_graph.is_connected() && find_seps(&right_graph)?.is_empty();

    if !find_seps(g)?.is_empty() {
        return Ok(direct);
    }

    // Route 2, on an inseparable curve: consecutive in the cyclic
    // arrangement with the right part equal to the part between the two
    // edges.
    let polyseps = maximal_polyseparators(g)?;
    let home = polyseps
        .iter()
        .find(|p| p.contains_edge(&b.edges[0]))
        .ok_or_else(|| Error::internal("bisep not covered by any maximal polyseparator"))?;
    let n = home.degree();
    let mut cyclic = false;
    for i in 0..n {
        let j = (i + 1) % n;
        let pair: BTreeSet<&str> = [home.edges[i].as_str(), home.edges[j].as_str()]
            .into_iter()
            .collect();
        let ours: BTreeSet<&str> = b.edges.iter().map(|s| s.as_str()).collect();
        if pair == ours && home.parts[i] == b.right {
            cyclic = true;
            break;
        }
    }
    // For a 2-gon both orientations see a single part on each side.
    if n == 2 {
        cyclic = true;
    }

    if direct != cyclic {
        return Err(Error::internal(format!(
            "adjacency routes disagree for {}: direct={direct}, cyclic={cyclic}",
            b.id()
        )));
    }
    Ok(direct)
}
