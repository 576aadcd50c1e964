//! Hyperellipticity: the moduli oracle, PHEL classification of
//! 2-inseparable pieces, relative side-hyperellipticity along the
//! separation structure, and the top-level dichotomy classifier.
//!
//! The dual graph does not determine whether a component is hyperelliptic,
//! which marked points sit in its g^1_2, or whether an interlace's two
//! pointed lines are isomorphic. Those facts are oracle inputs; this module
//! computes only their combinatorial propagation.

use std::collections::BTreeMap;

use crate::azimuth::Azimuth;
use crate::error::{Error, Result};
use crate::graph::{CurveGraph, Edge, HalfEdgeId, Stability, Vertex};
use crate::separators::{Analysis, Side, StarSep, TwoComponent};

/// Moduli facts for the bimark of one bisep on one 2-component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BimarkFacts {
    /// The marked pair is a fibre of the component's g^1_2.
    pub is_hyperelliptic_divisor: bool,
    /// Present exactly when the pair is a hyperelliptic divisor; always
    /// regular. Coordinates follow the bisep's sorted edge order.
    pub hyperelliptic_azimuth: Option<Azimuth>,
}

/// Moduli facts for a single 2-component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComponentFacts {
    pub is_hyperelliptic: Option<bool>,
    /// For interlace-shaped components: the two pointed lines are
    /// isomorphic.
    pub is_true_interlace: Option<bool>,
    /// Per unimark half-edge: twice the point is a fibre of the g^1_2.
    pub weierstrass: BTreeMap<HalfEdgeId, bool>,
    /// Per bimark key (`<half-edge>+<half-edge>`).
    pub bimarks: BTreeMap<String, BimarkFacts>,
}

/// All moduli facts, keyed by 2-component id as emitted by `analyze`.
#[derive(Debug, Clone, Default)]
pub struct ModuliOracle {
    pub components: BTreeMap<String, ComponentFacts>,
}

impl ModuliOracle {
    pub fn facts(&self, component_id: &str) -> Option<&ComponentFacts> {
        self.components.get(component_id)
    }
}

/// Middle azimuths, keyed by maximal-bisep id (`<edge>+<edge>`, sorted).
#[derive(Debug, Clone, Default)]
pub struct MiddleAzimuthData {
    pub middles: BTreeMap<String, Azimuth>,
}

/// Outcome of classifying a 2-inseparable curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TwoInsepClass {
    VeryAmple,
    IrreducibleHyperelliptic,
    Interlace,
    LowGenus,
}

impl TwoInsepClass {
    /// Pseudo-hyperelliptic: the canonical system fails to embed. Includes
    /// everything of arithmetic genus <= 1.
    pub fn is_pseudo_hyperelliptic(self) -> bool {
        self != TwoInsepClass::VeryAmple
    }
}

/// Shape test: two genus-0 vertices joined by >= 3 parallel edges.
fn is_interlace_shape(g: &CurveGraph) -> bool {
    if g.vertices().len() != 2 || g.edges().len() < 3 {
        return false;
    }
    if g.vertices().iter().any(|v| v.genus != 0) {
        return false;
    }
    g.edges().iter().all(|e| !e.is_loop())
}

/// Classify a connected, semistable, 2-inseparable curve.
///
/// Components of arithmetic genus 2 with a single vertex are hyperelliptic
/// unconditionally; an oracle flag contradicting that is rejected.
pub fn classify_2inseparable(
    g: &CurveGraph,
    facts: Option<&ComponentFacts>,
    component_id: &str,
) -> Result<TwoInsepClass> {
    g.require_connected()?;
    // Stability in the pointed sense: marked points left by blowups count
    // as branches, so a spine with its marks is a stable pointed curve.
    for v in g.vertices() {
        let marks_at = g.marks().iter().filter(|m| m.vertex == v.id).count() as i64;
        let pointed_omega = 2 * (v.genus as i64) - 2 + g.branches(&v.id) as i64 + marks_at;
        if pointed_omega < 0 {
            return Err(Error::unsuitable("curve is unstable"));
        }
    }
    if !crate::separators::find_seps(g)?.is_empty()
        || !crate::separators::find_biseps(g)?.is_empty()
    {
        return Err(Error::unsuitable("curve is not 2-inseparable"));
    }
    let pa = g.arithmetic_genus();
    if pa <= 1 {
        return Ok(TwoInsepClass::LowGenus);
    }
    if is_interlace_shape(g) {
        let flag = facts.and_then(|f| f.is_true_interlace).ok_or_else(|| {
            Error::IncompleteOracle(vec![format!("{component_id}.isTrueInterlace")])
        })?;
        return Ok(if flag {
            TwoInsepClass::Interlace
        } else {
            TwoInsepClass::VeryAmple
        });
    }
    if g.vertices().len() == 1 {
        if pa == 2 {
            if facts.and_then(|f| f.is_hyperelliptic) == Some(false) {
                return Err(Error::malformed(format!(
                    "component {component_id} has arithmetic genus 2 and is \
                     hyperelliptic; the oracle flags it false"
                )));
            }
            return Ok(TwoInsepClass::IrreducibleHyperelliptic);
        }
        let flag = facts.and_then(|f| f.is_hyperelliptic).ok_or_else(|| {
            Error::IncompleteOracle(vec![format!("{component_id}.isHyperelliptic")])
        })?;
        return Ok(if flag {
            TwoInsepClass::IrreducibleHyperelliptic
        } else {
            TwoInsepClass::VeryAmple
        });
    }
    // Reducible, 2-inseparable, not an interlace: the canonical system is
    // very ample.
    Ok(TwoInsepClass::VeryAmple)
}

/// A reference to one mark on a 2-component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkRef<'a> {
    Uni(&'a crate::separators::Unimark),
    Bi(&'a crate::separators::Bimark),
}

impl MarkRef<'_> {
    pub fn key(&self) -> String {
        match self {
            MarkRef::Uni(u) => u.half_edge.clone(),
            MarkRef::Bi(b) => b.key(),
        }
    }
}

/// The mark a *-sep leaves on the 2-component facing its given side.
///
/// `Ok(None)` means the *-sep is a bisep whose preimage pair on that side
/// was separated by a later round of the 2-separation; such a split pair
/// is never a hyperelliptic divisor of a single component.
pub fn facing_mark<'a>(
    analysis: &'a Analysis,
    star: &StarSep,
    side: Side,
) -> Result<Option<(&'a TwoComponent, MarkRef<'a>)>> {
    let side_set = star.side(side);
    if star.is_sep() {
        for comp in &analysis.components {
            if let Some(u) = comp
                .unimarks
                .iter()
                .find(|u| u.sep.id() == star.id() && side_set.contains(&u.vertex))
            {
                return Ok(Some((comp, MarkRef::Uni(u))));
            }
        }
        Err(Error::internal(format!(
            "sep {} has no mark on its {side:?} side",
            star.id()
        )))
    } else {
        for comp in &analysis.components {
            if let Some(b) = comp
                .bimarks
                .iter()
                .find(|b| b.bisep.id() == star.id() && side_set.contains(&b.vertices[0]))
            {
                return Ok(Some((comp, MarkRef::Bi(b))));
            }
        }
        let split = analysis.components.iter().any(|c| {
            c.unimarks
                .iter()
                .any(|u| u.sep.id() == star.id() && side_set.contains(&u.vertex))
        });
        if split {
            Ok(None)
        } else {
            Err(Error::internal(format!(
                "bisep {} has no marks on its {side:?} side",
                star.id()
            )))
        }
    }
}

/// Is the marked pair `(component, mark)` hyperelliptic: the component is
/// pseudo-hyperelliptic and the mark sits in (a fibre of) its g^1_2.
pub fn locally_hyperelliptic(
    comp: &TwoComponent,
    mark: MarkRef<'_>,
    oracle: &ModuliOracle,
) -> Result<bool> {
    let facts = oracle.facts(&comp.id);
    let class = classify_2inseparable(&comp.subgraph, facts, &comp.id)?;
    if !class.is_pseudo_hyperelliptic() {
        return Ok(false);
    }
    match mark {
        MarkRef::Uni(u) => {
            if !comp.unimarks.iter().any(|x| x.half_edge == u.half_edge) {
                return Err(Error::malformed(format!(
                    "mark {} is not on component {}",
                    u.half_edge, comp.id
                )));
            }
            facts
                .and_then(|f| f.weierstrass.get(&u.half_edge).copied())
                .ok_or_else(|| {
                    Error::IncompleteOracle(vec![format!(
                        "{}.unimarks.{}.isWeierstrass",
                        comp.id, u.half_edge
                    )])
                })
        }
        MarkRef::Bi(b) => {
            if !comp.bimarks.iter().any(|x| x.key() == b.key()) {
                return Err(Error::malformed(format!(
                    "mark {} is not on component {}",
                    b.key(),
                    comp.id
                )));
            }
            facts
                .and_then(|f| f.bimarks.get(&b.key()))
                .map(|f| f.is_hyperelliptic_divisor)
                .ok_or_else(|| {
                    Error::IncompleteOracle(vec![format!(
                        "{}.bimarks.{}.isHyperellipticDivisor",
                        comp.id,
                        b.key()
                    )])
                })
        }
    }
}

/// The oracle's hyperelliptic azimuth at the bimark a bisep leaves on the
/// component facing the given side. Callers establish first that the side
/// is locally hyperelliptic, so the pair exists.
fn hyperelliptic_azimuth_on(
    analysis: &Analysis,
    bisep: &StarSep,
    side: Side,
    oracle: &ModuliOracle,
) -> Result<Azimuth> {
    let (comp, mark) = facing_mark(analysis, bisep, side)?.ok_or_else(|| {
        Error::internal(format!("azimuth requested at split pair of {}", bisep.id()))
    })?;
    let key = mark.key();
    let facts = oracle
        .facts(&comp.id)
        .and_then(|f| f.bimarks.get(&key))
        .ok_or_else(|| Error::IncompleteOracle(vec![format!("{}.bimarks.{key}", comp.id)]))?;
    let az = facts.hyperelliptic_azimuth.as_ref().ok_or_else(|| {
        Error::IncompleteOracle(vec![format!(
            "{}.bimarks.{key}.hyperellipticAzimuth",
            comp.id
        )])
    })?;
    if !az.is_regular() {
        return Err(Error::malformed(format!(
            "hyperelliptic azimuth at {}.bimarks.{key} must be regular",
            comp.id
        )));
    }
    Ok(az.clone())
}

/// Local bilateral hyperellipticity of a *-sep: both facing marked
/// components are hyperelliptic pairs.
pub fn locally_bilaterally_hyperelliptic(
    analysis: &Analysis,
    star: &StarSep,
    oracle: &ModuliOracle,
) -> Result<bool> {
    for side in [Side::Left, Side::Right] {
        match facing_mark(analysis, star, side)? {
            Some((comp, mark)) => {
                if !locally_hyperelliptic(comp, mark, oracle)? {
                    return Ok(false);
                }
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Does the middle azimuth at a maximal bisep equal the product of the two
/// hyperelliptic side azimuths? Only meaningful once the bisep is locally
/// bilaterally hyperelliptic.
pub fn middle_azimuth_is_hyperelliptic(
    analysis: &Analysis,
    bisep: &StarSep,
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
) -> Result<bool> {
    let middle = middles
        .middles
        .get(&bisep.id())
        .ok_or_else(|| Error::IncompleteOracle(vec![format!("middleAzimuths.{}", bisep.id())]))?;
    let left = hyperelliptic_azimuth_on(analysis, bisep, Side::Left, oracle)?;
    let right = hyperelliptic_azimuth_on(analysis, bisep, Side::Right, oracle)?;
    let product = left.compose(&right)?;
    Ok(product == *middle)
}

/// Is the *-sep hyperelliptic on the given side, relative to the
/// collection `theta`?
///
/// This requires the facing marked component to be a hyperelliptic pair,
/// the whole side to be free of proper polyseparators, every sep and
/// maximal bisep strictly on that side to be locally bilaterally
/// hyperelliptic, and every `theta`-bisep strictly on that side to carry
/// the hyperelliptic middle azimuth.
pub fn side_hyperelliptic(
    analysis: &Analysis,
    star: &StarSep,
    side: Side,
    theta: &[&StarSep],
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
) -> Result<bool> {
    let Some((comp, mark)) = facing_mark(analysis, star, side)? else {
        return Ok(false);
    };
    if !locally_hyperelliptic(comp, mark, oracle)? {
        return Ok(false);
    }
    // A hyperelliptic side is of semicompact type: a proper polyseparator
    // anywhere inside it kills hyperellipticity.
    let side_set = star.side(side);
    for p in &analysis.polyseps {
        if !p.is_proper() {
            continue;
        }
        let inside = p.edges.iter().all(|eid| {
            analysis
                .graph
                .edge(eid)
                .map(|e| e.ends.iter().all(|v| side_set.contains(v)))
                .unwrap_or(false)
        });
        if inside {
            return Ok(false);
        }
    }
    // Every sep and maximal bisep strictly on this side must be locally
    // bilaterally hyperelliptic.
    for other in analysis.default_theta() {
        if other.id() == star.id() {
            continue;
        }
        match star.side_containing(&analysis.graph, other) {
            Some(s) if s == side => {
                if !locally_bilaterally_hyperelliptic(analysis, other, oracle)? {
                    return Ok(false);
                }
                // Middle-azimuthal biseps in theta additionally need the
                // hyperelliptic middle azimuth.
                let in_theta = theta.iter().any(|t| t.id() == other.id());
                if !other.is_sep()
                    && in_theta
                    && !middle_azimuth_is_hyperelliptic(analysis, other, oracle, middles)?
                {
                    return Ok(false);
                }
            }
            // Elsewhere or straddling an earlier cut: not on this side.
            _ => {}
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum OverallVerdict {
    Hyperelliptic,
    NotHyperelliptic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ComponentVerdict {
    EssentiallyVeryAmple,
    TwoToOneOntoRationalNormalCurve,
}

/// Why a curve failed to be hyperelliptic.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum Witness {
    /// A proper polyseparator exists (the curve is not of semicompact type).
    ProperPolyseparator { edges: Vec<String> },
    /// A sep or maximal bisep is not locally bilaterally hyperelliptic.
    NotBilaterallyHyperelliptic { star_sep: String },
    /// A maximal bisep's middle azimuth is not the hyperelliptic one.
    MiddleAzimuthMismatch { bisep: String },
    /// The single 2-component of a 2-inseparable curve embeds canonically.
    ComponentVeryAmple { component: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub overall: OverallVerdict,
    pub per_component: BTreeMap<String, ComponentVerdict>,
    pub witness: Option<Witness>,
}

/// Contract every maximal chain of 2-branch genus-0 vertices (bridges) to a
/// single node. The result is the stable model; inputs must be connected,
/// semistable and of arithmetic genus >= 2.
pub fn stable_model(g: &CurveGraph) -> Result<CurveGraph> {
    g.require_connected()?;
    if g.classify_stability()? == Stability::Unstable {
        return Err(Error::unsuitable("curve is unstable"));
    }
    if g.arithmetic_genus() < 2 {
        return Err(Error::unsuitable(
            "stable model needs arithmetic genus at least 2",
        ));
    }
    let mut vertices: Vec<Vertex> = g.vertices().to_vec();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    loop {
        let bridge_vertex = vertices
            .iter()
            .filter(|v| v.genus == 0)
            .find(|v| {
                edges
                    .iter()
                    .map(|e| e.ends.iter().filter(|end| **end == v.id).count())
                    .sum::<usize>()
                    == 2
            })
            .map(|v| v.id.clone());
        let Some(vid) = bridge_vertex else { break };
        let incident: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.ends.contains(&vid))
            .map(|(i, _)| i)
            .collect();
        if incident.len() < 2 {
            // A single self-loop on a rational vertex would be the whole
            // curve, of genus 1, excluded by the genus gate above.
            return Err(Error::internal("bridge contraction found a lone loop"));
        }
        let (i, j) = (incident[0], incident[1]);
        let u = edges[i].other_end(&vid).to_string();
        let w = edges[j].other_end(&vid).to_string();
        let new_id = edges[i].id.clone().min(edges[j].id.clone());
        let (a, b) = if u <= w { (u, w) } else { (w, u) };
        let merged = Edge {
            half_edges: [format!("{new_id}.0"), format!("{new_id}.1")],
            id: new_id,
            ends: [a, b],
        };
        let (hi, lo) = (i.max(j), i.min(j));
        edges.remove(hi);
        edges.remove(lo);
        edges.push(merged);
        vertices.retain(|v| v.id != vid);
    }
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    CurveGraph::new(vertices, edges)
}

/// Stabilize a connected semistable curve of genus >= 2; stable inputs pass
/// through unchanged. Returns the graph and whether contraction happened.
pub fn prepare_stable(g: &CurveGraph) -> Result<(CurveGraph, bool)> {
    g.require_connected()?;
    match g.classify_stability()? {
        Stability::Unstable => Err(Error::unsuitable("curve is unstable")),
        Stability::Stable => {
            if g.arithmetic_genus() < 2 {
                Err(Error::unsuitable(
                    "classification needs arithmetic genus at least 2",
                ))
            } else {
                Ok((g.clone(), false))
            }
        }
        Stability::Semistable => {
            let model = stable_model(g)?;
            let changed = model != *g;
            Ok((model, changed))
        }
    }
}

/// The dichotomy, computed on an existing analysis of a stable curve:
/// hyperelliptic iff the curve is of semicompact type, every sep and
/// maximal bisep is locally bilaterally hyperelliptic, and every middle
/// azimuth is the product of its two hyperelliptic side azimuths. For
/// 2-inseparable curves this reduces to pseudo-hyperellipticity of the
/// single component.
pub fn classify_with_analysis(
    analysis: &Analysis,
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
) -> Result<ClassificationVerdict> {
    validate_oracle(analysis, oracle, middles)?;
    let mut witness: Option<Witness> = None;

    if analysis.is_two_inseparable() {
        let comp = &analysis.components[0];
        let class = classify_2inseparable(&comp.subgraph, oracle.facts(&comp.id), &comp.id)?;
        if !class.is_pseudo_hyperelliptic() {
            witness = Some(Witness::ComponentVeryAmple {
                component: comp.id.clone(),
            });
        }
    } else {
        if let Some(p) = analysis.polyseps.iter().find(|p| p.is_proper()) {
            witness = Some(Witness::ProperPolyseparator {
                edges: p.edges.clone(),
            });
        }
        if witness.is_none() {
            // The curve's own seps and maximal biseps carry the
            // hyperellipticity definition.
            for star in analysis.flat_theta() {
                if !locally_bilaterally_hyperelliptic(analysis, star, oracle)? {
                    witness = Some(Witness::NotBilaterallyHyperelliptic {
                        star_sep: star.id(),
                    });
                    break;
                }
                if !star.is_sep()
                    && !middle_azimuth_is_hyperelliptic(analysis, star, oracle, middles)?
                {
                    witness = Some(Witness::MiddleAzimuthMismatch { bisep: star.id() });
                    break;
                }
            }
        }
    }

    let overall = if witness.is_none() {
        OverallVerdict::Hyperelliptic
    } else {
        OverallVerdict::NotHyperelliptic
    };
    let component_verdict = match overall {
        OverallVerdict::Hyperelliptic => ComponentVerdict::TwoToOneOntoRationalNormalCurve,
        OverallVerdict::NotHyperelliptic => ComponentVerdict::EssentiallyVeryAmple,
    };
    let per_component = analysis
        .components
        .iter()
        .map(|c| (c.id.clone(), component_verdict))
        .collect();
    Ok(ClassificationVerdict {
        overall,
        per_component,
        witness,
    })
}

/// Full classification from a raw curve: stabilize, analyze, classify.
pub fn classify_curve(
    g: &CurveGraph,
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
) -> Result<ClassificationVerdict> {
    let (stable, _) = prepare_stable(g)?;
    let analysis = Analysis::run(&stable)?;
    classify_with_analysis(&analysis, oracle, middles)
}

/// Check the oracle for everything the classification will definitely
/// read, reporting every missing key at once. Mark-level data is needed
/// only on pseudo-hyperelliptic components; middle azimuths are needed at
/// every maximal bisep.
pub fn validate_oracle(
    analysis: &Analysis,
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
) -> Result<()> {
    let mut missing: Vec<String> = Vec::new();
    for b in analysis.maximal_biseps() {
        if !middles.middles.contains_key(&b.id()) {
            missing.push(format!("middleAzimuths.{}", b.id()));
        }
    }
    let mut phel: BTreeMap<&str, bool> = BTreeMap::new();
    for comp in &analysis.components {
        let facts = oracle.facts(&comp.id);
        match classify_2inseparable(&comp.subgraph, facts, &comp.id) {
            Ok(class) => {
                phel.insert(&comp.id, class.is_pseudo_hyperelliptic());
                validate_flag_consistency(comp, facts, class)?;
            }
            Err(Error::IncompleteOracle(keys)) => {
                missing.extend(keys);
                phel.insert(&comp.id, true);
            }
            Err(e) => return Err(e),
        }
    }
    for star in analysis.flat_theta() {
        for side in [Side::Left, Side::Right] {
            let Some((comp, mark)) = facing_mark(analysis, star, side)? else {
                // A split pair is never hyperelliptic; no data needed.
                continue;
            };
            if !phel.get(comp.id.as_str()).copied().unwrap_or(false) {
                continue;
            }
            let facts = oracle.facts(&comp.id);
            match mark {
                MarkRef::Uni(u) => {
                    if facts
                        .map(|f| !f.weierstrass.contains_key(&u.half_edge))
                        .unwrap_or(true)
                    {
                        missing.push(format!(
                            "{}.unimarks.{}.isWeierstrass",
                            comp.id, u.half_edge
                        ));
                    }
                }
                MarkRef::Bi(b) => {
                    let key = b.key();
                    match facts.and_then(|f| f.bimarks.get(&key)) {
                        None => missing
                            .push(format!("{}.bimarks.{key}.isHyperellipticDivisor", comp.id)),
                        Some(bf) => {
                            if bf.is_hyperelliptic_divisor && bf.hyperelliptic_azimuth.is_none() {
                                missing.push(format!(
                                    "{}.bimarks.{key}.hyperellipticAzimuth",
                                    comp.id
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    if missing.is_empty() {
        Ok(())
    } else {
        missing.sort();
        missing.dedup();
        Err(Error::IncompleteOracle(missing))
    }
}

/// Mark-level flags may only be raised on pseudo-hyperelliptic components,
/// and azimuths must accompany (exactly) hyperelliptic divisors.
fn validate_flag_consistency(
    comp: &TwoComponent,
    facts: Option<&ComponentFacts>,
    class: TwoInsepClass,
) -> Result<()> {
    let Some(facts) = facts else { return Ok(()) };
    if !class.is_pseudo_hyperelliptic() {
        if facts.weierstrass.values().any(|&b| b) {
            return Err(Error::malformed(format!(
                "component {} is not pseudo-hyperelliptic but a unimark is \
                 flagged Weierstrass",
                comp.id
            )));
        }
        if facts.bimarks.values().any(|f| f.is_hyperelliptic_divisor) {
            return Err(Error::malformed(format!(
                "component {} is not pseudo-hyperelliptic but a bimark is \
                 flagged as hyperelliptic divisor",
                comp.id
            )));
        }
    }
    for (key, bf) in &facts.bimarks {
        if let Some(az) = &bf.hyperelliptic_azimuth {
            if !bf.is_hyperelliptic_divisor {
                return Err(Error::malformed(format!(
                    "bimark {key} on {} carries an azimuth but is not a \
                     hyperelliptic divisor",
                    comp.id
                )));
            }
            if !az.is_regular() {
                return Err(Error::malformed(format!(
                    "hyperelliptic azimuth at bimark {key} on {} must be regular",
                    comp.id
                )));
            }
        }
    }
    Ok(())
}
