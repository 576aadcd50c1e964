//! Sepcanonical bookkeeping: twist divisors, bundle degrees and system
//! dimensions per 2-component, the degree-0 vanishing certificate, the
//! very-ampleness dispatch, and the bridge-component recipe.
//!
//! Dimension counting: with `U` unimarks and `B` bimarks on a component of
//! genus `g` and twist degree `d > 0`, the ambient space has dimension
//! `g - 1 + d`; the `U + B` residue conditions satisfy exactly one global
//! relation (the sum of all residues vanishes), so `max(0, U + B - 1)` of
//! them are independent; each co-hyperelliptic bimark adds one azimuthal
//! condition on the order-2 Laurent part, independent of the residues.

use std::collections::{BTreeMap, BTreeSet};

use crate::azimuth::{induced_left_azimuth, Azimuth};
use crate::error::{Error, Result};
use crate::graph::{CurveGraph, HalfEdgeId, Multidegree, Subcurve, VertexId};
use crate::hyperelliptic::{
    classify_with_analysis, facing_mark, prepare_stable, side_hyperelliptic, ClassificationVerdict,
    ComponentVerdict, MarkRef, MiddleAzimuthData, ModuliOracle,
};
use crate::separators::{Analysis, Side, StarSep, TwoComponent};

/// A unimark of an azimuthal marking. Multiplicity is derived: 2 when
/// co-hyperelliptic, 3 otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedUnimark {
    pub half_edge: HalfEdgeId,
    pub co_hyperelliptic: bool,
}

impl MarkedUnimark {
    pub fn multiplicity(&self) -> i64 {
        if self.co_hyperelliptic {
            2
        } else {
            3
        }
    }
}

/// A bimark of an azimuthal marking. Co-hyperelliptic bimarks carry a
/// regular azimuth; others carry none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedBimark {
    pub half_edges: [HalfEdgeId; 2],
    pub co_hyperelliptic: bool,
    pub azimuth: Option<Azimuth>,
}

impl MarkedBimark {
    pub fn key(&self) -> String {
        format!("{}+{}", self.half_edges[0], self.half_edges[1])
    }
}

/// Unimarks and bimarks with their co-hyperelliptic designations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AzimuthalMarking {
    pub unimarks: Vec<MarkedUnimark>,
    pub bimarks: Vec<MarkedBimark>,
}

impl AzimuthalMarking {
    pub fn validate(&self) -> Result<()> {
        for b in &self.bimarks {
            match (&b.azimuth, b.co_hyperelliptic) {
                (Some(az), true) => {
                    if !az.is_regular() {
                        return Err(Error::malformed(format!(
                            "azimuth at bimark {} must be regular",
                            b.key()
                        )));
                    }
                }
                (None, false) => {}
                (Some(_), false) => {
                    return Err(Error::malformed(format!(
                        "bimark {} carries an azimuth but is not co-hyperelliptic",
                        b.key()
                    )))
                }
                (None, true) => {
                    return Err(Error::malformed(format!(
                        "co-hyperelliptic bimark {} is missing its azimuth",
                        b.key()
                    )))
                }
            }
        }
        Ok(())
    }
}

/// The sepcanonical twist: coefficient per marked half-edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwistDivisor {
    pub coefficients: BTreeMap<HalfEdgeId, i64>,
    pub degree: i64,
}

/// Coefficients n(xi, p) at unimarks and 2 at every bimark point.
pub fn twist_divisor(component: &TwoComponent, marking: &AzimuthalMarking) -> Result<TwistDivisor> {
    marking.validate()?;
    let on_component: BTreeSet<&str> = component
        .subgraph
        .marks()
        .iter()
        .map(|m| m.half_edge.as_str())
        .collect();
    let mut coefficients = BTreeMap::new();
    let mut add = |he: &HalfEdgeId, c: i64| -> Result<()> {
        if !on_component.contains(he.as_str()) {
            return Err(Error::malformed(format!(
                "mark {he} does not lie on component {}",
                component.id
            )));
        }
        if coefficients.insert(he.clone(), c).is_some() {
            return Err(Error::malformed(format!("mark {he} used twice")));
        }
        Ok(())
    };
    for u in &marking.unimarks {
        add(&u.half_edge, u.multiplicity())?;
    }
    for b in &marking.bimarks {
        add(&b.half_edges[0], 2)?;
        add(&b.half_edges[1], 2)?;
    }
    let degree = coefficients.values().sum();
    Ok(TwistDivisor {
        coefficients,
        degree,
    })
}

/// Dimension bookkeeping for one component of the sepcanonical system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDimensions {
    pub genus: i64,
    pub twist: TwistDivisor,
    pub bundle_degree: i64,
    pub h0_ambient: i64,
    pub residue_conditions: i64,
    pub azimuthal_conditions: i64,
    pub system_dim: i64,
}

/// Riemann-Roch bookkeeping for `omega(twist)` cut by residue and
/// azimuthal conditions. Never negative on components of stable curves;
/// a negative count is an internal error.
pub fn system_dimension(
    component: &TwoComponent,
    marking: &AzimuthalMarking,
) -> Result<SystemDimensions> {
    let genus = component.arithmetic_genus();
    let twist = twist_divisor(component, marking)?;
    let h0_ambient = if twist.degree == 0 {
        genus
    } else {
        genus - 1 + twist.degree
    };
    let marks = marking.unimarks.len() as i64 + marking.bimarks.len() as i64;
    let residue_conditions = (marks - 1).max(0);
    let azimuthal_conditions = marking
        .bimarks
        .iter()
        .filter(|b| b.co_hyperelliptic)
        .count() as i64;
    let system_dim = h0_ambient - residue_conditions - azimuthal_conditions;
    if system_dim < 0 {
        return Err(Error::internal(format!(
            "degenerate system on component {}: dimension {system_dim}",
            component.id
        )));
    }
    Ok(SystemDimensions {
        genus,
        bundle_degree: 2 * genus - 2 + twist.degree,
        twist,
        h0_ambient,
        residue_conditions,
        azimuthal_conditions,
        system_dim,
    })
}

/// Outcome of the degree-0 vanishing test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Deg0Certificate {
    /// Total degree <= 0, every subcurve degree <= 2, every bisep side
    /// degree <= 1: a nontrivial bundle with these degrees has no sections.
    CertifiedZero,
    HypothesesFail(Deg0Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Deg0Witness {
    PositiveTotalDegree {
        degree: i64,
    },
    SubcurveDegreeTooHigh {
        vertices: BTreeSet<VertexId>,
        degree: i64,
    },
    BisepSideDegreeTooHigh {
        bisep: String,
        vertices: BTreeSet<VertexId>,
        degree: i64,
    },
}

/// Check the vanishing hypotheses for a degree-<=-0 line bundle on an
/// inseparable curve by exhaustive enumeration. Nontriviality of the
/// bundle is the caller's assertion; the certificate is conditional on it.
pub fn deg0_vanishing_certificate(
    g: &CurveGraph,
    bundle: &Multidegree,
    biseps: &[StarSep],
) -> Result<Deg0Certificate> {
    g.require_connected()?;
    if !crate::separators::find_seps(g)?.is_empty() {
        return Err(Error::unsuitable(
            "degree-0 vanishing needs an inseparable curve",
        ));
    }
    let total = bundle.total_degree();
    if total > 0 {
        return Ok(Deg0Certificate::HypothesesFail(
            Deg0Witness::PositiveTotalDegree { degree: total },
        ));
    }
    let ids: Vec<VertexId> = g.vertices().iter().map(|v| v.id.clone()).collect();
    // Subsets in increasing size, lexicographic within a size.
    let mut subsets: Vec<BTreeSet<VertexId>> = Vec::new();
    for mask in 1u32..(1 << ids.len()) {
        let set: BTreeSet<VertexId> = ids
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .collect();
        subsets.push(set);
    }
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for set in subsets {
        let degree = g.subcurve_degree(bundle, &Subcurve::new(set.clone()));
        if degree > 2 {
            return Ok(Deg0Certificate::HypothesesFail(
                Deg0Witness::SubcurveDegreeTooHigh {
                    vertices: set,
                    degree,
                },
            ));
        }
    }
    for b in biseps {
        for side in [&b.left, &b.right] {
            let degree = g.subcurve_degree(bundle, &Subcurve::new(side.clone()));
            if degree > 1 {
                return Ok(Deg0Certificate::HypothesesFail(
                    Deg0Witness::BisepSideDegreeTooHigh {
                        bisep: b.id(),
                        vertices: side.clone(),
                        degree,
                    },
                ));
            }
        }
    }
    Ok(Deg0Certificate::CertifiedZero)
}

/// Which very-ampleness statement settled the dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum DispatchRule {
    /// Twist of degree >= 3 on a 2-inseparable curve.
    HighTwistTwoInseparable,
    /// Twist of degree >= 3 on an inseparable curve, 2-inseparable
    /// relative to the twist.
    HighTwistRelative,
    /// Degree-2 twist on a 2-inseparable curve.
    DegreeTwoTwoInseparable,
    /// Degree-2 twist on an inseparable, relatively 2-inseparable curve
    /// that is not 2-inseparable.
    DegreeTwoRelative,
    /// Degree-2 twist constrained by an azimuth.
    AzimuthConstrained,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum DispatchOutcome {
    /// No statement applies; the dispatch refuses to guess.
    NotApplicable,
    /// The hyperelliptic exceptional case.
    HyperellipticException,
    /// Very ample away from the twist support.
    VeryAmpleOffTwist,
    VeryAmple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DispatchVerdict {
    pub outcome: DispatchOutcome,
    pub rule: Option<DispatchRule>,
}

/// Moduli input for the degree-2 dispatch: whether the pair (curve, twist)
/// is hyperelliptic, and if so its hyperelliptic azimuth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairModuli {
    pub pair_hyperelliptic: bool,
    pub hyperelliptic_azimuth: Option<Azimuth>,
}

/// Decide very ampleness of `omega(twist)` by degree and separation shape.
///
/// The twist must be effective, smoothly supported and of degree >= 2.
/// With an azimuth constraint the hyperelliptic exception shrinks to the
/// single hyperelliptic azimuth.
pub fn very_ampleness_dispatch(
    g: &CurveGraph,
    twist: &Multidegree,
    pair_moduli: Option<&PairModuli>,
    constraint_azimuth: Option<&Azimuth>,
) -> Result<DispatchVerdict> {
    g.require_connected()?;
    if twist.degrees.values().any(|&d| d < 0) {
        return Err(Error::malformed("twist must be effective"));
    }
    for v in twist.degrees.keys() {
        if !g.has_vertex(v) {
            return Err(Error::malformed(format!("twist on unknown vertex {v:?}")));
        }
    }
    let degree = twist.total_degree();
    if degree < 2 {
        return Err(Error::malformed("twist must have degree at least 2"));
    }
    let support: Vec<VertexId> = twist
        .degrees
        .iter()
        .filter(|(_, &d)| d > 0)
        .map(|(v, _)| v.clone())
        .collect();
    let inseparable = crate::separators::find_seps(g)?.is_empty();
    let two_inseparable = inseparable && crate::separators::find_biseps(g)?.is_empty();
    let relatively =
        inseparable && crate::separators::relative_two_inseparable(g, &support)?.two_inseparable;

    if degree >= 3 {
        if two_inseparable {
            return Ok(DispatchVerdict {
                outcome: DispatchOutcome::VeryAmple,
                rule: Some(DispatchRule::HighTwistTwoInseparable),
            });
        }
        if relatively {
            return Ok(DispatchVerdict {
                outcome: DispatchOutcome::VeryAmple,
                rule: Some(DispatchRule::HighTwistRelative),
            });
        }
        return Ok(DispatchVerdict {
            outcome: DispatchOutcome::NotApplicable,
            rule: None,
        });
    }
    // degree == 2.
    if two_inseparable {
        let moduli = pair_moduli
            .ok_or_else(|| Error::IncompleteOracle(vec!["pairHyperelliptic".to_string()]))?;
        if !moduli.pair_hyperelliptic {
            return Ok(DispatchVerdict {
                outcome: DispatchOutcome::VeryAmpleOffTwist,
                rule: Some(DispatchRule::DegreeTwoTwoInseparable),
            });
        }
        if let Some(zeta) = constraint_azimuth {
            let hyp = moduli
                .hyperelliptic_azimuth
                .as_ref()
                .ok_or_else(|| Error::IncompleteOracle(vec!["hyperellipticAzimuth".to_string()]))?;
            let outcome = if zeta == hyp {
                DispatchOutcome::HyperellipticException
            } else {
                DispatchOutcome::VeryAmpleOffTwist
            };
            return Ok(DispatchVerdict {
                outcome,
                rule: Some(DispatchRule::AzimuthConstrained),
            });
        }
        return Ok(DispatchVerdict {
            outcome: DispatchOutcome::HyperellipticException,
            rule: Some(DispatchRule::DegreeTwoTwoInseparable),
        });
    }
    if relatively {
        // Not 2-inseparable, so the 2-inseparable-hyperelliptic exception
        // cannot occur.
        return Ok(DispatchVerdict {
            outcome: DispatchOutcome::VeryAmpleOffTwist,
            rule: Some(DispatchRule::DegreeTwoRelative),
        });
    }
    Ok(DispatchVerdict {
        outcome: DispatchOutcome::NotApplicable,
        rule: None,
    })
}

/// Monomial exponent pairs spanning the sepcanonical system on a bridge
/// component, by hyperellipticity of the two sides.
pub fn bridge_system(left_hyperelliptic: bool, right_hyperelliptic: bool) -> Vec<(u32, u32)> {
    match (left_hyperelliptic, right_hyperelliptic) {
        (true, true) => vec![(2, 0), (0, 2)],
        (true, false) => vec![(3, 0), (2, 1), (0, 3)],
        (false, true) => vec![(3, 0), (1, 2), (0, 3)],
        (false, false) => vec![(4, 0), (3, 1), (1, 3), (0, 4)],
    }
}

/// Build the induced azimuthal marking on a 2-component: unimarks and
/// bimarks from `theta` plus any inherited base marking, co-hyperelliptic
/// exactly when the *-sep is hyperelliptic on the far side relative to
/// `theta`. Co-hyperelliptic bimarks receive the induced left azimuth;
/// corner pairs of proper polyseparators are never co-hyperelliptic.
pub fn induced_azimuthal_marking(
    analysis: &Analysis,
    theta: &[&StarSep],
    component: &TwoComponent,
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
    base: &AzimuthalMarking,
) -> Result<AzimuthalMarking> {
    base.validate()?;
    let mut marking = base.clone();
    let in_theta = |star: &StarSep| theta.iter().any(|t| t.id() == star.id());
    for u in &component.unimarks {
        if !u.sep.is_sep() {
            // One point of a bisep pair separated by a later round: it
            // stands alone with the non-hyperelliptic multiplicity.
            marking.unimarks.push(MarkedUnimark {
                half_edge: u.half_edge.clone(),
                co_hyperelliptic: false,
            });
            continue;
        }
        if !in_theta(&u.sep) {
            continue;
        }
        // The sep is stored with this component on the left; the far side
        // is its right.
        let co = side_hyperelliptic(analysis, &u.sep, Side::Right, theta, oracle, middles)?;
        marking.unimarks.push(MarkedUnimark {
            half_edge: u.half_edge.clone(),
            co_hyperelliptic: co,
        });
    }
    for b in &component.bimarks {
        // Corner pairs of proper polyseparators always contribute their
        // residue pair; maximal bisep marks are part of the twist
        // collection and drop out when excluded from theta.
        if b.maximal && !in_theta(&b.bisep) {
            continue;
        }
        let co = if b.maximal {
            side_hyperelliptic(analysis, &b.bisep, Side::Right, theta, oracle, middles)?
        } else {
            false
        };
        let azimuth = if co {
            let middle = middles.middles.get(&b.bisep.id()).ok_or_else(|| {
                Error::IncompleteOracle(vec![format!("middleAzimuths.{}", b.bisep.id())])
            })?;
            let (right_comp, right_mark) = facing_mark(analysis, &b.bisep, Side::Right)?
                .ok_or_else(|| {
                    Error::internal("right-hyperelliptic bisep with a split right pair")
                })?;
            let MarkRef::Bi(right_bimark) = right_mark else {
                return Err(Error::internal("bisep mark is not a bimark"));
            };
            let hyp = oracle
                .facts(&right_comp.id)
                .and_then(|f| f.bimarks.get(&right_bimark.key()))
                .and_then(|f| f.hyperelliptic_azimuth.as_ref())
                .ok_or_else(|| {
                    Error::IncompleteOracle(vec![format!(
                        "{}.bimarks.{}.hyperellipticAzimuth",
                        right_comp.id,
                        right_bimark.key()
                    )])
                })?;
            Some(induced_left_azimuth(middle, hyp)?)
        } else {
            None
        };
        marking.bimarks.push(MarkedBimark {
            half_edges: b.half_edges.clone(),
            co_hyperelliptic: co,
            azimuth,
        });
    }
    marking
        .unimarks
        .sort_by(|a, b| a.half_edge.cmp(&b.half_edge));
    marking.bimarks.sort_by_key(|b| b.key());
    marking.validate()?;
    Ok(marking)
}

/// One row of the sepcanonical report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub component_id: String,
    pub marking: AzimuthalMarking,
    pub dims: SystemDimensions,
    pub verdict: ComponentVerdict,
}

/// Genus accounting across the 2-separation:
/// `sum of component genera = pa - blown edges + (components - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GenusAccounting {
    pub arithmetic_genus: i64,
    pub blown_edges: i64,
    pub component_count: i64,
    pub genus_sum: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SepcanonicalReport {
    pub components: Vec<ComponentReport>,
    pub accounting: GenusAccounting,
    pub verdict: ClassificationVerdict,
    /// True when the input was semistable and bridges were contracted.
    pub stabilized: bool,
}

/// The sepcanonical system of a stable (or semistable, via its stable
/// model) middle-azimuthal curve: per 2-component, the induced marking,
/// twist, degrees and dimensions, plus the dichotomy verdict.
///
/// `theta` restricts the twist collection to a subset of the seps and
/// maximal biseps; `None` means all of them.
pub fn full_report(
    g: &CurveGraph,
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
    theta: Option<&BTreeSet<String>>,
) -> Result<SepcanonicalReport> {
    let (stable, stabilized) = prepare_stable(g)?;
    let analysis = Analysis::run(&stable)?;
    full_report_with_analysis(&analysis, oracle, middles, theta, stabilized)
}

pub fn full_report_with_analysis(
    analysis: &Analysis,
    oracle: &ModuliOracle,
    middles: &MiddleAzimuthData,
    theta: Option<&BTreeSet<String>>,
    stabilized: bool,
) -> Result<SepcanonicalReport> {
    let default_theta = analysis.default_theta();
    let theta: Vec<&StarSep> = match theta {
        None => default_theta,
        Some(ids) => {
            let chosen: Vec<&StarSep> = default_theta
                .into_iter()
                .filter(|s| ids.contains(&s.id()))
                .collect();
            if chosen.len() != ids.len() {
                return Err(Error::malformed(
                    "theta must be a set of sep and maximal-bisep ids",
                ));
            }
            chosen
        }
    };
    let verdict = classify_with_analysis(analysis, oracle, middles)?;

    let mut components = Vec::new();
    let mut genus_sum = 0;
    for comp in &analysis.components {
        let marking = induced_azimuthal_marking(
            analysis,
            &theta,
            comp,
            oracle,
            middles,
            &AzimuthalMarking::default(),
        )?;
        let dims = system_dimension(comp, &marking)?;
        let comp_verdict = verdict.per_component[&comp.id];
        if comp_verdict == ComponentVerdict::TwoToOneOntoRationalNormalCurve
            && dims.bundle_degree != 2 * (dims.system_dim - 1)
        {
            return Err(Error::internal(format!(
                "component {}: 2:1 degree identity fails, bundle degree {} vs \
                 system dimension {}",
                comp.id, dims.bundle_degree, dims.system_dim
            )));
        }
        genus_sum += dims.genus;
        components.push(ComponentReport {
            component_id: comp.id.clone(),
            marking,
            dims,
            verdict: comp_verdict,
        });
    }

    let accounting = GenusAccounting {
        arithmetic_genus: analysis.graph.arithmetic_genus(),
        blown_edges: analysis.blown_edge_count() as i64,
        component_count: analysis.components.len() as i64,
        genus_sum,
    };
    if accounting.genus_sum
        != accounting.arithmetic_genus - accounting.blown_edges + (accounting.component_count - 1)
    {
        return Err(Error::internal("genus accounting identity failed"));
    }
    Ok(SepcanonicalReport {
        components,
        accounting,
        verdict,
        stabilized,
    })
}
