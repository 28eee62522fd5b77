//! Delaunay and constrained Delaunay triangulations of finite site sets.

mod build;
mod constrained;
mod edges;
mod mesh;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::geometry::{Point, Segment};

pub use build::triangulate;
pub use constrained::constrained_triangulate;
pub use edges::{
    is_constrained_delaunay_edge, is_delaunay_edge, is_delaunay_triangle, is_locally_delaunay, is_visible,
};
pub use mesh::{EdgeInfo, TriMesh};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MeshError {
    #[error("at least 3 sites are required, got {0}")]
    TooFewSites(usize),
    #[error("all sites are collinear")]
    AllCollinear,
    #[error("site {second} duplicates site {first} at {point}")]
    DuplicateSite {
        first: usize,
        second: usize,
        point: Box<Point>,
    },
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("index {0} given twice where distinct indices are required")]
    RepeatedIndex(usize),
    #[error("edge {0} is not in the mesh")]
    UnknownEdge(Edge),
    #[error("constraints {first} and {second} cross")]
    CrossingConstraints { first: Edge, second: Edge },
    #[error("constraint {constraint} passes through site {site}")]
    ConstraintThroughSite { constraint: Edge, site: usize },
    #[error("constraint endpoint {0} is not a site")]
    UnknownConstraintEndpoint(Box<Point>),
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),
}

/// Undirected edge between two site indices, stored with the smaller index first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Distinct sites in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiteSet {
    sites: Vec<Point>,
}

impl SiteSet {
    pub fn new(sites: Vec<Point>) -> Result<SiteSet, MeshError> {
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(sites.len());
        for (i, p) in sites.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(MeshError::DuplicateSite {
                    first,
                    second: i,
                    point: Box::new(p.clone()),
                });
            }
            seen.insert(p, i);
        }
        Ok(SiteSet { sites })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<SiteSet, MeshError> {
        SiteSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn get(&self, i: usize) -> Result<&Point, MeshError> {
        self.sites.get(i).ok_or(MeshError::IndexOutOfRange {
            index: i,
            len: self.sites.len(),
        })
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.sites.iter().position(|s| s == p)
    }

    pub(crate) fn check_pair(&self, p: usize, q: usize) -> Result<(), MeshError> {
        self.get(p)?;
        self.get(q)?;
        if p == q {
            return Err(MeshError::RepeatedIndex(p));
        }
        Ok(())
    }

    pub fn segment(&self, e: Edge) -> Segment {
        Segment::new(self.sites[e.0].clone(), self.sites[e.1].clone()).expect("sites are distinct")
    }
}

/// Constraint segments given as pairs of site indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    edges: Vec<Edge>,
}

impl ConstraintSet {
    pub fn empty() -> ConstraintSet {
        ConstraintSet::default()
    }

    /// Duplicate constraints are collapsed; order of first appearance is kept.
    pub fn new(sites: &SiteSet, pairs: &[(usize, usize)]) -> Result<ConstraintSet, MeshError> {
        let mut edges: Vec<Edge> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            sites.check_pair(a, b)?;
            let e = Edge::new(a, b);
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
        Ok(ConstraintSet { edges })
    }

    /// Resolves segment endpoints to site indices by exact coordinate match.
    pub fn from_segments(sites: &SiteSet, segments: &[Segment]) -> Result<ConstraintSet, MeshError> {
        let mut pairs = Vec::with_capacity(segments.len());
        for s in segments {
            let a = sites
                .index_of(s.a())
                .ok_or_else(|| MeshError::UnknownConstraintEndpoint(Box::new(s.a().clone())))?;
            let b = sites
                .index_of(s.b())
                .ok_or_else(|| MeshError::UnknownConstraintEndpoint(Box::new(s.b().clone())))?;
            pairs.push((a, b));
        }
        ConstraintSet::new(sites, &pairs)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }
}
