//! JSON schemas: curve files, oracle files, azimuth files, the `analyze`
//! manifest whose ids oracle files key against, and report serialization.
//! All output is deterministic: maps are sorted, lists are pre-sorted,
//! azimuths are canonically normalized.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::azimuth::Azimuth;
use crate::error::{Error, Result};
use crate::graph::{CurveGraph, Edge, Mark, Vertex};
use crate::hyperelliptic::{
    BimarkFacts, ClassificationVerdict, ComponentFacts, MiddleAzimuthData, ModuliOracle,
};
use crate::separators::{Analysis, Polyseparator, SeparationTree, StarSep, TwoComponent};
use crate::sepcanonical::SepcanonicalReport;

// ---------------------------------------------------------------------------
// Curve files

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexDef {
    pub id: String,
    pub genus: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeDef {
    pub id: String,
    pub ends: [String; 2],
    #[serde(rename = "halfEdges", default, skip_serializing_if = "Option::is_none")]
    pub half_edges: Option<[String; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MarkDef {
    #[serde(rename = "halfEdge")]
    pub half_edge: String,
    pub vertex: String,
    #[serde(rename = "sourceEdge")]
    pub source_edge: String,
}

/// The on-disk curve schema. Half-edge ids default to `<edge>.0` and
/// `<edge>.1` in `ends` order; `marks` appears only on exported blowup
/// results.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CurveFile {
    pub vertices: Vec<VertexDef>,
    pub edges: Vec<EdgeDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub marks: Vec<MarkDef>,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<CurveFile> {
        serde_json::from_str(text).map_err(|e| Error::malformed(format!("curve JSON: {e}")))
    }

    pub fn to_graph(&self) -> Result<CurveGraph> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                id: v.id.clone(),
                genus: v.genus,
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id.clone(),
                ends: e.ends.clone(),
                half_edges: e
                    .half_edges
                    .clone()
                    .unwrap_or_else(|| [format!("{}.0", e.id), format!("{}.1", e.id)]),
            })
            .collect();
        let marks = self
            .marks
            .iter()
            .map(|m| Mark {
                half_edge: m.half_edge.clone(),
                vertex: m.vertex.clone(),
                source_edge: m.source_edge.clone(),
            })
            .collect();
        CurveGraph::with_marks(vertices, edges, marks)
    }

    /// Canonical export: vertices and edges sorted by id, default half-edge
    /// ids elided.
    pub fn from_graph(g: &CurveGraph) -> CurveFile {
        let mut vertices: Vec<VertexDef> = g
            .vertices()
            .iter()
            .map(|v| VertexDef {
                id: v.id.clone(),
                genus: v.genus,
            })
            .collect();
        vertices.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges: Vec<EdgeDef> = g
            .edges()
            .iter()
            .map(|e| {
                let default = [format!("{}.0", e.id), format!("{}.1", e.id)];
                EdgeDef {
                    id: e.id.clone(),
                    ends: e.ends.clone(),
                    half_edges: if e.half_edges == default {
                        None
                    } else {
                        Some(e.half_edges.clone())
                    },
                }
            })
            .collect();
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        let mut marks: Vec<MarkDef> = g
            .marks()
            .iter()
            .map(|m| MarkDef {
                half_edge: m.half_edge.clone(),
                vertex: m.vertex.clone(),
                source_edge: m.source_edge.clone(),
            })
            .collect();
        marks.sort_by(|a, b| a.half_edge.cmp(&b.half_edge));
        CurveFile {
            vertices,
            edges,
            marks,
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle files

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnimarkFactsDef {
    #[serde(rename = "isWeierstrass")]
    pub is_weierstrass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BimarkFactsDef {
    #[serde(rename = "isHyperellipticDivisor")]
    pub is_hyperelliptic_divisor: bool,
    #[serde(
        rename = "hyperellipticAzimuth",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub hyperelliptic_azimuth: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ComponentFactsDef {
    #[serde(
        rename = "isHyperelliptic",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub is_hyperelliptic: Option<bool>,
    #[serde(
        rename = "isTrueInterlace",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub is_true_interlace: Option<bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub unimarks: BTreeMap<String, UnimarkFactsDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimarks: BTreeMap<String, BimarkFactsDef>,
}

/// Moduli facts keyed by 2-component id from a prior `analyze` run.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct OracleFile {
    pub components: BTreeMap<String, ComponentFactsDef>,
}

impl OracleFile {
    pub fn parse(text: &str) -> Result<OracleFile> {
        serde_json::from_str(text).map_err(|e| Error::malformed(format!("oracle JSON: {e}")))
    }

    pub fn to_oracle(&self) -> Result<ModuliOracle> {
        let mut oracle = ModuliOracle::default();
        for (id, def) in &self.components {
            let mut facts = ComponentFacts {
                is_hyperelliptic: def.is_hyperelliptic,
                is_true_interlace: def.is_true_interlace,
                ..Default::default()
            };
            for (he, u) in &def.unimarks {
                facts.weierstrass.insert(he.clone(), u.is_weierstrass);
            }
            for (key, b) in &def.bimarks {
                let azimuth = match &b.hyperelliptic_azimuth {
                    Some(v) => Some(Azimuth::from_json(v).map_err(Error::Malformed)?),
                    None => None,
                };
                facts.bimarks.insert(
                    key.clone(),
                    BimarkFacts {
                        is_hyperelliptic_divisor: b.is_hyperelliptic_divisor,
                        hyperelliptic_azimuth: azimuth,
                    },
                );
            }
            oracle.components.insert(id.clone(), facts);
        }
        Ok(oracle)
    }
}

/// Middle azimuths keyed by maximal-bisep id.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct AzimuthFile {
    #[serde(rename = "middleAzimuths")]
    pub middle_azimuths: BTreeMap<String, serde_json::Value>,
}

impl AzimuthFile {
    pub fn parse(text: &str) -> Result<AzimuthFile> {
        serde_json::from_str(text).map_err(|e| Error::malformed(format!("azimuth JSON: {e}")))
    }

    pub fn to_middles(&self) -> Result<MiddleAzimuthData> {
        let mut middles = MiddleAzimuthData::default();
        for (key, v) in &self.middle_azimuths {
            middles.middles.insert(
                key.clone(),
                Azimuth::from_json(v).map_err(Error::Malformed)?,
            );
        }
        Ok(middles)
    }
}

// ---------------------------------------------------------------------------
// Manifest

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StarSepDef {
    pub id: String,
    pub kind: String,
    pub edges: Vec<String>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl StarSepDef {
    fn from(s: &StarSep) -> StarSepDef {
        StarSepDef {
            id: s.id(),
            kind: match s.kind {
                crate::separators::StarSepKind::Sep => "sep".into(),
                crate::separators::StarSepKind::Bisep => "bisep".into(),
            },
            edges: s.edges.clone(),
            left: s.left.iter().cloned().collect(),
            right: s.right.iter().cloned().collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolysepDef {
    pub id: String,
    /// Edges in cyclic order; `parts[i]` sits between `edges[i]` and
    /// `edges[i+1]`.
    pub edges: Vec<String>,
    pub parts: Vec<Vec<String>>,
    pub proper: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct UnimarkDef {
    #[serde(rename = "halfEdge")]
    pub half_edge: String,
    pub vertex: String,
    /// Id of the *-sep that left this mark; a bisep id when the pair was
    /// separated by a later round.
    #[serde(rename = "starSep")]
    pub star_sep: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BimarkDef {
    pub key: String,
    #[serde(rename = "halfEdges")]
    pub half_edges: [String; 2],
    pub vertices: [String; 2],
    #[serde(rename = "bisepId")]
    pub bisep_id: String,
    pub maximal: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TwoComponentDef {
    pub id: String,
    pub vertices: Vec<String>,
    pub genus: i64,
    pub unimarks: Vec<UnimarkDef>,
    pub bimarks: Vec<BimarkDef>,
}

impl TwoComponentDef {
    fn from(c: &TwoComponent) -> TwoComponentDef {
        TwoComponentDef {
            id: c.id.clone(),
            vertices: c.vertex_set().into_iter().collect(),
            genus: c.arithmetic_genus(),
            unimarks: c
                .unimarks
                .iter()
                .map(|u| UnimarkDef {
                    half_edge: u.half_edge.clone(),
                    vertex: u.vertex.clone(),
                    star_sep: u.sep.id(),
                })
                .collect(),
            bimarks: c
                .bimarks
                .iter()
                .map(|b| BimarkDef {
                    key: b.key(),
                    half_edges: b.half_edges.clone(),
                    vertices: b.vertices.clone(),
                    bisep_id: b.bisep.id(),
                    maximal: b.maximal,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeDef {
    pub vertices: Vec<TreeVertexDef>,
    pub edges: Vec<TreeEdgeDef>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeVertexDef {
    pub id: String,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeEdgeDef {
    pub id: String,
    pub kind: String,
    pub endpoints: [String; 2],
}

impl TreeDef {
    fn from(t: &SeparationTree) -> TreeDef {
        TreeDef {
            vertices: t
                .vertices
                .iter()
                .map(|v| TreeVertexDef {
                    id: v.id.clone(),
                    vertices: v.vertex_set.iter().cloned().collect(),
                })
                .collect(),
            edges: t
                .edges
                .iter()
                .map(|e| TreeEdgeDef {
                    id: e.sep.id(),
                    kind: match e.sep.kind {
                        crate::separators::StarSepKind::Sep => "sep".into(),
                        crate::separators::StarSepKind::Bisep => "bisep".into(),
                    },
                    endpoints: e.endpoints.clone(),
                })
                .collect(),
        }
    }
}

/// Ids an oracle file may need to address.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OracleKeysDef {
    /// Every 2-component id.
    pub components: Vec<String>,
    /// Maximal bisep ids that need a middle azimuth.
    #[serde(rename = "middleAzimuthKeys")]
    pub middle_azimuth_keys: Vec<String>,
}

/// Everything `analyze` knows about a curve, in one deterministic blob.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Manifest {
    /// The analyzed curve; when the input was strictly semistable this is
    /// its stable model.
    pub curve: CurveFile,
    #[serde(rename = "arithmeticGenus")]
    pub arithmetic_genus: i64,
    pub stability: String,
    /// True when bridges were contracted before analysis.
    pub stabilized: bool,
    pub seps: Vec<StarSepDef>,
    pub biseps: Vec<StarSepDef>,
    #[serde(rename = "maximalPolyseparators")]
    pub maximal_polyseparators: Vec<PolysepDef>,
    #[serde(rename = "semicompactType")]
    pub semicompact_type: bool,
    #[serde(rename = "twoComponents")]
    pub two_components: Vec<TwoComponentDef>,
    #[serde(rename = "separationTree")]
    pub separation_tree: TreeDef,
    #[serde(rename = "oracleKeys")]
    pub oracle_keys: OracleKeysDef,
}

impl Manifest {
    pub fn from_analysis(analysis: &Analysis, stabilized: bool) -> Result<Manifest> {
        let stability = analysis.graph.classify_stability()?;
        let polysep = |p: &Polyseparator| PolysepDef {
            id: p.id(),
            edges: p.edges.clone(),
            parts: p
                .parts
                .iter()
                .map(|s| s.iter().cloned().collect())
                .collect(),
            proper: p.is_proper(),
        };
        Ok(Manifest {
            curve: CurveFile::from_graph(&analysis.graph),
            arithmetic_genus: analysis.graph.arithmetic_genus(),
            stability: format!("{stability:?}"),
            stabilized,
            seps: analysis.seps.iter().map(StarSepDef::from).collect(),
            biseps: analysis.biseps.iter().map(StarSepDef::from).collect(),
            maximal_polyseparators: analysis.polyseps.iter().map(polysep).collect(),
            semicompact_type: analysis.is_semicompact_type(),
            two_components: analysis
                .components
                .iter()
                .map(TwoComponentDef::from)
                .collect(),
            separation_tree: TreeDef::from(&analysis.tree),
            oracle_keys: OracleKeysDef {
                components: analysis.components.iter().map(|c| c.id.clone()).collect(),
                // Every maximal bisep-kind cut, later rounds included, may
                // need a middle azimuth.
                middle_azimuth_keys: analysis
                    .cuts
                    .iter()
                    .filter(|c| !c.star.is_sep() && c.maximal)
                    .map(|c| c.star.id())
                    .collect(),
            },
        })
    }
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Debug, Clone, Serialize)]
pub struct MarkedUnimarkDef {
    #[serde(rename = "halfEdge")]
    pub half_edge: String,
    #[serde(rename = "coHyperelliptic")]
    pub co_hyperelliptic: bool,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MarkedBimarkDef {
    pub key: String,
    #[serde(rename = "coHyperelliptic")]
    pub co_hyperelliptic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub azimuth: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReportDef {
    pub id: String,
    pub genus: i64,
    pub unimarks: Vec<MarkedUnimarkDef>,
    pub bimarks: Vec<MarkedBimarkDef>,
    pub twist: BTreeMap<String, i64>,
    #[serde(rename = "twistDegree")]
    pub twist_degree: i64,
    #[serde(rename = "bundleDegree")]
    pub bundle_degree: i64,
    #[serde(rename = "h0Ambient")]
    pub h0_ambient: i64,
    #[serde(rename = "residueConditions")]
    pub residue_conditions: i64,
    #[serde(rename = "azimuthalConditions")]
    pub azimuthal_conditions: i64,
    #[serde(rename = "systemDim")]
    pub system_dim: i64,
    pub verdict: crate::hyperelliptic::ComponentVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictDef {
    pub overall: crate::hyperelliptic::OverallVerdict,
    #[serde(rename = "perComponent")]
    pub per_component: BTreeMap<String, crate::hyperelliptic::ComponentVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<crate::hyperelliptic::Witness>,
}

impl VerdictDef {
    pub fn from(v: &ClassificationVerdict) -> VerdictDef {
        VerdictDef {
            overall: v.overall,
            per_component: v.per_component.clone(),
            witness: v.witness.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDef {
    pub verdict: VerdictDef,
    pub components: Vec<ComponentReportDef>,
    pub accounting: crate::sepcanonical::GenusAccounting,
    pub stabilized: bool,
}

impl ReportDef {
    pub fn from(report: &SepcanonicalReport) -> ReportDef {
        ReportDef {
            verdict: VerdictDef::from(&report.verdict),
            components: report
                .components
                .iter()
                .map(|c| ComponentReportDef {
                    id: c.component_id.clone(),
                    genus: c.dims.genus,
                    unimarks: c
                        .marking
                        .unimarks
                        .iter()
                        .map(|u| MarkedUnimarkDef {
                            half_edge: u.half_edge.clone(),
                            co_hyperelliptic: u.co_hyperelliptic,
                            multiplicity: u.multiplicity(),
                        })
                        .collect(),
                    bimarks: c
                        .marking
                        .bimarks
                        .iter()
                        .map(|b| MarkedBimarkDef {
                            key: b.key(),
                            co_hyperelliptic: b.co_hyperelliptic,
                            azimuth: b.azimuth.as_ref().map(|a| a.to_json()),
                        })
                        .collect(),
                    twist: c.dims.twist.coefficients.clone(),
                    twist_degree: c.dims.twist.degree,
                    bundle_degree: c.dims.bundle_degree,
                    h0_ambient: c.dims.h0_ambient,
                    residue_conditions: c.dims.residue_conditions,
                    azimuthal_conditions: c.dims.azimuthal_conditions,
                    system_dim: c.dims.system_dim,
                    verdict: c.verdict,
                })
                .collect(),
            accounting: report.accounting,
            stabilized: report.stabilized,
        }
    }

    /// Human-readable table: one row per component plus the verdict line.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<18} {:>5} {:>6} {:>7} {:>4} {:>4} {:>4} {:>4}  {}\n",
            "component", "g_Y", "twist", "bundle", "h0", "res", "azi", "dim", "verdict"
        ));
        for c in &self.components {
            out.push_str(&format!(
                "{:<18} {:>5} {:>6} {:>7} {:>4} {:>4} {:>4} {:>4}  {:?}\n",
                c.id,
                c.genus,
                c.twist_degree,
                c.bundle_degree,
                c.h0_ambient,
                c.residue_conditions,
                c.azimuthal_conditions,
                c.system_dim,
                c.verdict
            ));
        }
        out.push_str(&format!(
            "genus accounting: sum {} = pa {} - blown {} + (components {} - 1)\n",
            self.accounting.genus_sum,
            self.accounting.arithmetic_genus,
            self.accounting.blown_edges,
            self.accounting.component_count
        ));
        out.push_str(&format!("overall: {:?}", self.verdict.overall));
        if let Some(w) = &self.verdict.witness {
            out.push_str(&format!("  (witness: {w:?})"));
        }
        out.push('\n');
        out
    }
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::internal(format!("serialization: {e}")))
}
