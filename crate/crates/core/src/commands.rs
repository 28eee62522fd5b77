//! The CLI commands as pure functions from input text to output text.
//!
//! File access and argument parsing live in the binary; everything here is
//! deterministic in its arguments.

use std::str::FromStr;

use thiserror::Error;

use crate::check::{run_checks, Status, Suite};
use crate::delaunay::{constrained_triangulate, triangulate, ConstraintSet, MeshError, SiteSet, TriMesh};
use crate::gen::{generate, Distribution, GenError};
use crate::geometry::number::{format_exact, parse_decimal};
use crate::geometry::ConvexOverlap;
use crate::io::{
    parse_constraint_file, parse_site_file, write_site_file, CellRecord, ConstraintFileError, DocumentError,
    QueryRecord, RegionRecord, ResultDocument, Selector, SelectorError, VoronoiRecord, WitnessRecord,
};
use crate::proximity::{near, shared_edge, triangles_near, Witness};
use crate::regions::{extract_regions, is_region_convex};
use crate::render::{render_svg, View};
use crate::voronoi::{cells_strongly_near, Frame, VoronoiDiagram, VoronoiError};

/// Exit status for success (and for a check run with no failures).
pub const EXIT_OK: u8 = 0;
/// Exit status for geometric errors and failed properties.
pub const EXIT_FAILURE: u8 = 1;
/// Exit status for usage, I/O and parse errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Geometry(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Geometry(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}

impl From<MeshError> for CommandError {
    fn from(e: MeshError) -> CommandError {
        CommandError::Geometry(e.to_string())
    }
}

impl From<VoronoiError> for CommandError {
    fn from(e: VoronoiError) -> CommandError {
        CommandError::Geometry(e.to_string())
    }
}

impl From<SelectorError> for CommandError {
    fn from(e: SelectorError) -> CommandError {
        CommandError::Usage(e.to_string())
    }
}

impl From<GenError> for CommandError {
    fn from(e: GenError) -> CommandError {
        CommandError::Usage(e.to_string())
    }
}

impl From<DocumentError> for CommandError {
    fn from(e: DocumentError) -> CommandError {
        match e {
            DocumentError::Mesh(m) => m.into(),
            other => CommandError::Parse(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    /// Indented JSON.
    #[default]
    Document,
    /// One-line JSON.
    JsonLike,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "document" => Ok(Format::Document),
            "json-like" => Ok(Format::JsonLike),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub frame: Option<Frame>,
    pub seed: u64,
    pub format: Format,
}

/// Command output text and the exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output {
            text,
            exit_code: EXIT_OK,
        }
    }
}

fn emit(doc: &ResultDocument, opts: &Options) -> String {
    match opts.format {
        Format::Document => doc.to_pretty_json(),
        Format::JsonLike => doc.to_compact_json(),
    }
}

/// Parses `x0,y0,x1,y1`.
pub fn parse_frame(text: &str) -> Result<Frame, CommandError> {
    let bad = || CommandError::Usage(format!("bad frame `{text}` (expected x0,y0,x1,y1)"));
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(bad());
    }
    let v = parts
        .iter()
        .map(|p| parse_decimal(p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    let [x0, y0, x1, y1]: [_; 4] = v.try_into().map_err(|_| bad())?;
    Frame::new(x0, y0, x1, y1).map_err(|e| CommandError::Usage(e.to_string()))
}

/// Sites from a site file or from a result document.
pub fn load_sites(text: &str) -> Result<SiteSet, CommandError> {
    if text.trim_start().starts_with('{') {
        return Ok(ResultDocument::from_json(text)?.site_set()?);
    }
    parse_site_file(text).map_err(|e| CommandError::Parse(e.to_string()))
}

fn load_constraints(text: &str, sites: &SiteSet) -> Result<ConstraintSet, CommandError> {
    parse_constraint_file(text, sites).map_err(|e| match e {
        ConstraintFileError::Mesh(m) => CommandError::Parse(m.to_string()),
        other => CommandError::Parse(other.to_string()),
    })
}

pub fn gen(n: usize, distribution: &str, opts: &Options) -> Result<String, CommandError> {
    let d: Distribution = distribution.parse()?;
    Ok(write_site_file(&generate(n, opts.seed, d)?))
}

fn voronoi_record(v: &VoronoiDiagram) -> VoronoiRecord {
    let pr = crate::io::point_record;
    let f = v.frame();
    VoronoiRecord {
        frame: [
            format_exact(f.min().x()),
            format_exact(f.min().y()),
            format_exact(f.max().x()),
            format_exact(f.max().y()),
        ],
        vertices: v.vertices().iter().map(pr).collect(),
        cells: v
            .cells()
            .iter()
            .map(|c| CellRecord {
                site: c.site,
                unbounded: c.unbounded,
                vertices: c.polygon.vertices().iter().map(pr).collect(),
            })
            .collect(),
    }
}

/// Triangulates the sites (constrained when a constraint file is given).
/// The Voronoi diagram is included on request for unconstrained runs.
pub fn triangulate_cmd(
    sites_text: &str,
    constraints_text: Option<&str>,
    with_voronoi: bool,
    opts: &Options,
) -> Result<Output, CommandError> {
    let sites = load_sites(sites_text)?;
    let mesh = match constraints_text {
        Some(text) => {
            let l = load_constraints(text, &sites)?;
            constrained_triangulate(&sites, &l)?
        }
        None => triangulate(&sites)?,
    };
    let mut doc = ResultDocument::new("triangulate").with_mesh(&mesh);
    if with_voronoi {
        if constraints_text.is_some() {
            return Err(CommandError::Usage(
                "the Voronoi dual is only defined for unconstrained runs".into(),
            ));
        }
        doc.voronoi = Some(voronoi_record(&VoronoiDiagram::from_delaunay(
            &mesh,
            opts.frame.as_ref(),
        )?));
    }
    Ok(Output::ok(emit(&doc, opts)))
}

/// Runs property suites; exit status 1 when any property fails.
pub fn check_cmd(sites_text: &str, suite: &str, opts: &Options) -> Result<Output, CommandError> {
    let suites = Suite::parse_list(suite).ok_or_else(|| CommandError::Usage(format!("unknown suite `{suite}`")))?;
    let sites = load_sites(sites_text)?;
    let checks = run_checks(&sites, &suites, opts.frame.as_ref())?;
    let mesh = triangulate(&sites)?;
    let mut doc = ResultDocument::new("check").with_mesh(&mesh);
    doc.edges.clear();
    if suites.contains(&Suite::Regions) {
        doc.regions = region_records(&mesh);
    }
    doc.checks = checks.iter().map(|c| c.record()).collect();
    let failed = checks.iter().any(|c| c.status == Status::Fail);
    Ok(Output {
        text: emit(&doc, opts),
        exit_code: if failed { EXIT_FAILURE } else { EXIT_OK },
    })
}

fn region_records(m: &TriMesh) -> Vec<RegionRecord> {
    extract_regions(m)
        .iter()
        .enumerate()
        .map(|(id, r)| RegionRecord {
            id,
            triangles: r.triangles().to_vec(),
            convex: is_region_convex(r).ok(),
        })
        .collect()
}

pub fn render_cmd(sites_text: &str, what: &str, opts: &Options) -> Result<String, CommandError> {
    let view: View = what.parse().map_err(CommandError::Usage)?;
    let sites = load_sites(sites_text)?;
    let mesh = triangulate(&sites)?;
    let v = VoronoiDiagram::from_delaunay(&mesh, opts.frame.as_ref())?;
    Ok(render_svg(&mesh, &v, view))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Near,
    Far,
    Strong,
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Relation, String> {
        match s {
            "near" => Ok(Relation::Near),
            "far" => Ok(Relation::Far),
            "strong" => Ok(Relation::Strong),
            _ => Err(format!("unknown relation `{s}` (expected near, far or strong)")),
        }
    }
}

fn witness_record(w: &Witness) -> WitnessRecord {
    let pr = crate::io::point_record;
    match w {
        Witness::Point(p) => WitnessRecord::Point(pr(p)),
        Witness::Segment(s) => WitnessRecord::Segment([pr(s.a()), pr(s.b())]),
    }
}

/// Evaluates one relation between two selected elements.
pub fn query_cmd(sites_text: &str, relation: &str, a: &str, b: &str, opts: &Options) -> Result<Output, CommandError> {
    let relation: Relation = relation.parse().map_err(CommandError::Usage)?;
    let (sa, sb): (Selector, Selector) = (a.parse()?, b.parse()?);
    let sites = load_sites(sites_text)?;
    let mesh = triangulate(&sites)?;
    let v = VoronoiDiagram::from_delaunay(&mesh, opts.frame.as_ref())?;
    let (ga, gb) = (sa.resolve(&mesh, &v)?, sb.resolve(&mesh, &v)?);

    let (holds, witness) = match relation {
        Relation::Near | Relation::Far => {
            let verdict = near(&ga, &gb);
            let is_near = match (sa, sb) {
                (Selector::Triangle(x), Selector::Triangle(y)) => {
                    let combinatorial = triangles_near(&mesh, x, y)?;
                    debug_assert_eq!(combinatorial, verdict.is_near());
                    combinatorial
                }
                _ => verdict.is_near(),
            };
            let holds = if relation == Relation::Near { is_near } else { !is_near };
            (holds, verdict.witness)
        }
        Relation::Strong => match (sa, sb) {
            (Selector::Triangle(x), Selector::Triangle(y)) => match shared_edge(&mesh, x, y)? {
                Some(e) => (true, Some(Witness::Segment(mesh.sites().segment(e)))),
                None => (false, None),
            },
            (Selector::Cell(x), Selector::Cell(y)) => {
                let holds = cells_strongly_near(&v, x, y)?;
                let witness = match v.cell_overlap(x, y)? {
                    ConvexOverlap::Segment(s) if holds => Some(Witness::Segment(s)),
                    _ => None,
                };
                (holds, witness)
            }
            _ => {
                return Err(CommandError::Usage(
                    "strong proximity is defined for triangle pairs and cell pairs only".into(),
                ))
            }
        },
    };
    let mut doc = ResultDocument::new("query");
    doc.queries.push(QueryRecord {
        relation: match relation {
            Relation::Near => "near",
            Relation::Far => "far",
            Relation::Strong => "strong",
        }
        .to_string(),
        a: sa.to_string(),
        b: sb.to_string(),
        holds,
        witness: witness.as_ref().map(witness_record),
    });
    Ok(Output::ok(emit(&doc, opts)))
}
