use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::delaunay::{Edge, MeshError, SiteSet, TriMesh};
use crate::geometry::number::{format_exact, parse_exact, ParseNumberError};
use crate::geometry::Point;

/// Schema tag written into every document.
pub const SCHEMA: &str = "delprox-result/1";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(String),
    #[error("unsupported schema `{0}` (expected `{SCHEMA}`)")]
    Schema(String),
    #[error("bad coordinate: {0}")]
    Number(#[from] ParseNumberError),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

/// Everything a command reports, as one self-describing tree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub schema: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sites: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub triangles: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub voronoi: Option<VoronoiRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub regions: Vec<RegionRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub queries: Vec<QueryRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub a: usize,
    pub b: usize,
    pub constrained: bool,
    pub locally_delaunay: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VoronoiRecord {
    /// `[x0, y0, x1, y1]`
    pub frame: [String; 4],
    pub vertices: Vec<[String; 2]>,
    pub cells: Vec<CellRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellRecord {
    pub site: usize,
    pub unbounded: bool,
    pub vertices: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionRecord {
    pub id: usize,
    pub triangles: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convex: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryRecord {
    pub relation: String,
    pub a: String,
    pub b: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum WitnessRecord {
    Point([String; 2]),
    Segment([[String; 2]; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    /// `pass`, `fail` or `degenerate-skip`.
    pub status: String,
    pub passed: usize,
    pub total: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

pub(crate) fn point_record(p: &Point) -> [String; 2] {
    [format_exact(p.x()), format_exact(p.y())]
}

fn parse_point(r: &[String; 2]) -> Result<Point, ParseNumberError> {
    Ok(Point::new(parse_exact(&r[0])?, parse_exact(&r[1])?))
}

impl ResultDocument {
    pub fn new(command: &str) -> ResultDocument {
        ResultDocument {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            ..ResultDocument::default()
        }
    }

    /// Records the sites, triangles and per-edge status of `m`.
    pub fn with_mesh(mut self, m: &TriMesh) -> ResultDocument {
        self.sites = m.points().iter().map(point_record).collect();
        self.triangles = m.triangles().to_vec();
        self.edges = m
            .edges()
            .map(|(e, info)| EdgeRecord {
                a: e.lo(),
                b: e.hi(),
                constrained: info.is_constrained(),
                locally_delaunay: crate::delaunay::is_locally_delaunay(m, e).expect("edge from the mesh"),
            })
            .collect();
        self
    }

    pub fn to_pretty_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_compact_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<ResultDocument, DocumentError> {
        let doc: ResultDocument = serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
        if doc.schema != SCHEMA {
            return Err(DocumentError::Schema(doc.schema));
        }
        Ok(doc)
    }

    pub fn site_set(&self) -> Result<SiteSet, DocumentError> {
        let points = self.sites.iter().map(parse_point).collect::<Result<Vec<_>, _>>()?;
        Ok(SiteSet::new(points)?)
    }

    /// Rebuilds (and validates) the mesh recorded by [`ResultDocument::with_mesh`].
    pub fn mesh(&self) -> Result<TriMesh, DocumentError> {
        let constrained: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| e.constrained)
            .map(|e| Edge::new(e.a, e.b))
            .collect();
        Ok(TriMesh::from_parts(
            self.site_set()?,
            self.triangles.clone(),
            &constrained,
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delaunay::{constrained_triangulate, ConstraintSet};

    #[test]
    fn mesh_round_trip() {
        let sites = SiteSet::new(vec![
            Point::parse("0", "0").unwrap(),
            Point::parse("4", "0").unwrap(),
            Point::parse("4.5", "3").unwrap(),
            Point::parse("0", "3.25").unwrap(),
            Point::parse("1", "1").unwrap(),
        ])
        .unwrap();
        let l = ConstraintSet::new(&sites, &[(1, 3)]).unwrap();
        let m = constrained_triangulate(&sites, &l).unwrap();
        let doc = ResultDocument::new("triangulate").with_mesh(&m);
        for text in [doc.to_pretty_json(), doc.to_compact_json()] {
            let back = ResultDocument::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.mesh().unwrap(), m);
        }
    }

    #[test]
    fn rejects_foreign_documents() {
        assert!(matches!(ResultDocument::from_json("{"), Err(DocumentError::Json(_))));
        assert_eq!(
            ResultDocument::from_json(r#"{"schema":"other/1","command":"x"}"#),
            Err(DocumentError::Schema("other/1".into()))
        );
        assert!(matches!(
            ResultDocument::from_json(r#"{"schema":"delprox-result/1","command":"x","extra":1}"#),
            Err(DocumentError::Json(_))
        ));
        let doc =
            ResultDocument::from_json(r#"{"schema":"delprox-result/1","command":"x","sites":[["1/3","0"]]}"#).unwrap();
        assert_eq!(doc.site_set().unwrap().points()[0].x(), &parse_exact("1/3").unwrap());
    }
}
