//! Command-line front end: ingest curve JSON (and optionally oracle and
//! azimuth JSON), run separation analyses, and emit reports or DOT exports
//! with stable exit codes:
//!
//! 0 success, 1 internal invariant violation (always a bug), 2 malformed
//! input, 3 incomplete oracle, 4 unsuitable curve (disconnected, unstable,
//! or genus too small).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sepcanon::dot;
use sepcanon::error::{Error, Result};
use sepcanon::format::{
    to_pretty_json, AzimuthFile, BimarkDef, CurveFile, Manifest, OracleFile, PolysepDef, ReportDef,
    StarSepDef, TreeDef, TreeEdgeDef, TreeVertexDef, TwoComponentDef, UnimarkDef, VerdictDef,
};
use sepcanon::graph::CurveGraph;
use sepcanon::hyperelliptic::{
    classify_with_analysis, prepare_stable, MiddleAzimuthData, ModuliOracle,
};
use sepcanon::separators::{
    find_biseps, find_seps, maximal_polyseparators, separation_tree, two_separation, Analysis,
    SeparationTree, StarSep, StarSepKind, TwoComponent,
};
use sepcanon::sepcanonical::{bridge_system, full_report_with_analysis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Parser)]
#[command(
    name = "sepcanon",
    version,
    about = "Separation calculus on dual graphs of nodal curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural analysis; emits the id manifest oracle files key
    /// against (stabilizes semistable input first).
    Analyze {
        curve: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List separating nodes.
    Seps {
        curve: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List properly separating binodes.
    Biseps {
        curve: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List maximal polyseparators in cyclic arrangement.
    Polyseps {
        curve: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List 2-components with their marks.
    Components {
        curve: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the separation tree.
    Tree {
        curve: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide the hyperelliptic dichotomy (needs the moduli oracle).
    Classify {
        curve: PathBuf,
        #[arg(long)]
        oracle: Option<PathBuf>,
        #[arg(long)]
        azimuths: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Per-component sepcanonical twists, degrees and dimensions.
    Sepcanon {
        curve: PathBuf,
        #[arg(long)]
        oracle: Option<PathBuf>,
        #[arg(long)]
        azimuths: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Also write an annotated DOT export of the dual graph here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Monomial basis of the sepcanonical system on a bridge component.
    Bridge {
        #[arg(long)]
        left_hyperelliptic: bool,
        #[arg(long)]
        right_hyperelliptic: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// DOT export of the dual graph, or of the separation tree.
    Dot {
        curve: PathBuf,
        #[arg(long)]
        tree: bool,
    },
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::malformed(format!("cannot read {}: {e}", path.display())))
}

fn load_curve(path: &Path) -> Result<CurveGraph> {
    CurveFile::parse(&read_file(path)?)?.to_graph()
}

fn load_oracle(path: Option<&PathBuf>) -> Result<ModuliOracle> {
    match path {
        Some(p) => OracleFile::parse(&read_file(p)?)?.to_oracle(),
        None => Ok(ModuliOracle::default()),
    }
}

fn load_azimuths(path: Option<&PathBuf>) -> Result<MiddleAzimuthData> {
    match path {
        Some(p) => AzimuthFile::parse(&read_file(p)?)?.to_middles(),
        None => Ok(MiddleAzimuthData::default()),
    }
}

fn star_sep_def(s: &StarSep) -> StarSepDef {
    StarSepDef {
        id: s.id(),
        kind: match s.kind {
            StarSepKind::Sep => "sep".into(),
            StarSepKind::Bisep => "bisep".into(),
        },
        edges: s.edges.clone(),
        left: s.left.iter().cloned().collect(),
        right: s.right.iter().cloned().collect(),
    }
}

fn component_def(c: &TwoComponent) -> TwoComponentDef {
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

fn tree_def(t: &SeparationTree) -> TreeDef {
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
                    StarSepKind::Sep => "sep".into(),
                    StarSepKind::Bisep => "bisep".into(),
                },
                endpoints: e.endpoints.clone(),
            })
            .collect(),
    }
}

fn print_star_seps(kind: &str, seps: &[StarSepDef], format: Format) -> Result<()> {
    match format {
        Format::Json => {
            let body = serde_json::json!({ kind: seps });
            println!("{}", to_pretty_json(&body)?);
        }
        Format::Table => {
            if seps.is_empty() {
                println!("no {kind}");
            }
            for s in seps {
                println!(
                    "{} {}: left={{{}}} right={{{}}}",
                    s.kind,
                    s.id,
                    s.left.join(", "),
                    s.right.join(", ")
                );
            }
        }
    }
    Ok(())
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { curve, format } => {
            let g = load_curve(&curve)?;
            let (stable, stabilized) = prepare_stable(&g)?;
            let analysis = Analysis::run(&stable)?;
            let manifest = Manifest::from_analysis(&analysis, stabilized)?;
            match format {
                Format::Json => println!("{}", to_pretty_json(&manifest)?),
                Format::Table => {
                    println!(
                        "arithmetic genus {}  stability {}  stabilized {}",
                        manifest.arithmetic_genus, manifest.stability, manifest.stabilized
                    );
                    println!(
                        "seps {}  biseps {}  maximal polyseparators {}  semicompact {}",
                        manifest.seps.len(),
                        manifest.biseps.len(),
                        manifest.maximal_polyseparators.len(),
                        manifest.semicompact_type
                    );
                    for c in &manifest.two_components {
                        println!(
                            "component {} (genus {}): {} unimarks, {} bimarks",
                            c.id,
                            c.genus,
                            c.unimarks.len(),
                            c.bimarks.len()
                        );
                        for u in &c.unimarks {
                            println!("  unimark {} (from {})", u.half_edge, u.star_sep);
                        }
                        for b in &c.bimarks {
                            println!(
                                "  bimark {} (bisep {}, maximal {})",
                                b.key, b.bisep_id, b.maximal
                            );
                        }
                    }
                    println!(
                        "middle azimuth keys: {}",
                        manifest.oracle_keys.middle_azimuth_keys.join(", ")
                    );
                }
            }
        }
        Command::Seps { curve, format } => {
            let g = load_curve(&curve)?;
            let seps: Vec<StarSepDef> = find_seps(&g)?.iter().map(star_sep_def).collect();
            print_star_seps("seps", &seps, format)?;
        }
        Command::Biseps { curve, format } => {
            let g = load_curve(&curve)?;
            let biseps: Vec<StarSepDef> = find_biseps(&g)?.iter().map(star_sep_def).collect();
            print_star_seps("biseps", &biseps, format)?;
        }
        Command::Polyseps { curve, format } => {
            let g = load_curve(&curve)?;
            let polyseps = maximal_polyseparators(&g)?;
            let semicompact = polyseps.iter().all(|p| !p.is_proper());
            let defs: Vec<PolysepDef> = polyseps
                .iter()
                .map(|p| PolysepDef {
                    id: p.id(),
                    edges: p.edges.clone(),
                    parts: p
                        .parts
                        .iter()
                        .map(|s| s.iter().cloned().collect())
                        .collect(),
                    proper: p.is_proper(),
                })
                .collect();
            match format {
                Format::Json => {
                    let body = serde_json::json!({
                        "maximalPolyseparators": defs,
                        "semicompactType": semicompact,
                    });
                    println!("{}", to_pretty_json(&body)?);
                }
                Format::Table => {
                    println!("semicompact type: {semicompact}");
                    for p in &defs {
                        let cycle: Vec<String> = p
                            .edges
                            .iter()
                            .zip(&p.parts)
                            .map(|(e, part)| format!("{e} [{}]", part.join(",")))
                            .collect();
                        println!(
                            "polyseparator {} degree {} proper {}: {}",
                            p.id,
                            p.edges.len(),
                            p.proper,
                            cycle.join(" -> ")
                        );
                    }
                }
            }
        }
        Command::Components { curve, format } => {
            let g = load_curve(&curve)?;
            let defs: Vec<TwoComponentDef> =
                two_separation(&g)?.iter().map(component_def).collect();
            match format {
                Format::Json => {
                    let body = serde_json::json!({ "twoComponents": defs });
                    println!("{}", to_pretty_json(&body)?);
                }
                Format::Table => {
                    for c in &defs {
                        println!("component {} genus {}", c.id, c.genus);
                        for u in &c.unimarks {
                            println!(
                                "  unimark {} on {} (from {})",
                                u.half_edge, u.vertex, u.star_sep
                            );
                        }
                        for b in &c.bimarks {
                            println!(
                                "  bimark {} (bisep {}, maximal {})",
                                b.key, b.bisep_id, b.maximal
                            );
                        }
                    }
                }
            }
        }
        Command::Tree { curve, format } => {
            let g = load_curve(&curve)?;
            let def = tree_def(&separation_tree(&g)?);
            match format {
                Format::Json => {
                    let body = serde_json::json!({ "separationTree": def });
                    println!("{}", to_pretty_json(&body)?);
                }
                Format::Table => {
                    for v in &def.vertices {
                        println!("tree vertex {}", v.id);
                    }
                    for e in &def.edges {
                        println!(
                            "tree edge {} ({}) joins {} and {}",
                            e.id, e.kind, e.endpoints[0], e.endpoints[1]
                        );
                    }
                }
            }
        }
        Command::Classify {
            curve,
            oracle,
            azimuths,
            format,
        } => {
            let g = load_curve(&curve)?;
            let oracle = load_oracle(oracle.as_ref())?;
            let middles = load_azimuths(azimuths.as_ref())?;
            let (stable, _) = prepare_stable(&g)?;
            let analysis = Analysis::run(&stable)?;
            let verdict = classify_with_analysis(&analysis, &oracle, &middles)?;
            let def = VerdictDef::from(&verdict);
            match format {
                Format::Json => println!("{}", to_pretty_json(&def)?),
                Format::Table => {
                    println!("overall: {:?}", def.overall);
                    if let Some(w) = &def.witness {
                        println!("witness: {w:?}");
                    }
                    for (id, v) in &def.per_component {
                        println!("component {id}: {v:?}");
                    }
                }
            }
        }
        Command::Sepcanon {
            curve,
            oracle,
            azimuths,
            format,
            dot: dot_path,
        } => {
            let g = load_curve(&curve)?;
            let oracle = load_oracle(oracle.as_ref())?;
            let middles = load_azimuths(azimuths.as_ref())?;
            let (stable, stabilized) = prepare_stable(&g)?;
            let analysis = Analysis::run(&stable)?;
            let report = full_report_with_analysis(&analysis, &oracle, &middles, None, stabilized)?;
            let def = ReportDef::from(&report);
            match format {
                Format::Json => println!("{}", to_pretty_json(&def)?),
                Format::Table => print!("{}", def.to_table()),
            }
            if let Some(path) = dot_path {
                std::fs::write(&path, dot::curve_dot(&analysis)).map_err(|e| {
                    Error::malformed(format!("cannot write {}: {e}", path.display()))
                })?;
            }
        }
        Command::Bridge {
            left_hyperelliptic,
            right_hyperelliptic,
            format,
        } => {
            let monomials = bridge_system(left_hyperelliptic, right_hyperelliptic);
            match format {
                Format::Json => {
                    let body = serde_json::json!({ "monomialExponents": monomials });
                    println!("{}", to_pretty_json(&body)?);
                }
                Format::Table => {
                    let rendered: Vec<String> = monomials
                        .iter()
                        .map(|&(a, b)| match (a, b) {
                            (a, 0) => format!("X0^{a}"),
                            (0, b) => format!("X1^{b}"),
                            (a, b) => format!("X0^{a} X1^{b}"),
                        })
                        .collect();
                    println!("[{}]", rendered.join(", "));
                }
            }
        }
        Command::Dot { curve, tree } => {
            let g = load_curve(&curve)?;
            if tree {
                print!("{}", dot::tree_dot(&separation_tree(&g)?));
            } else {
                print!("{}", dot::curve_dot(&Analysis::run(&g)?));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
