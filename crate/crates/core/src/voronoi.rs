//! Voronoi diagrams as duals of Delaunay triangulations.
//!
//! Each cell is the frame rectangle clipped by the bisector half-planes of the
//! site's Delaunay neighbours; every cell edge remembers which bisector (or
//! which frame side) produced it.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::delaunay::{triangulate, MeshError, SiteSet, TriMesh};
use crate::geometry::{
    clip_by_polygon, clip_tagged, orient_sign, ConvexOverlap, HalfPlane, Point, Polygon, Scalar, Segment,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VoronoiError {
    #[error("frame does not strictly contain {0}")]
    FrameTooSmall(Box<Point>),
    #[error("frame must have positive width and height")]
    InvalidFrame,
    #[error("more than three cells meet at {0}")]
    DegenerateIntersection(Box<Point>),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

/// Axis-aligned clipping rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    min: Point,
    max: Point,
}

impl Frame {
    pub fn new(x0: Scalar, y0: Scalar, x1: Scalar, y1: Scalar) -> Result<Frame, VoronoiError> {
        if x0 >= x1 || y0 >= y1 {
            return Err(VoronoiError::InvalidFrame);
        }
        Ok(Frame {
            min: Point::new(x0, y0),
            max: Point::new(x1, y1),
        })
    }

    /// Bounding box of the sites and all circumcenters, grown on every side by
    /// an integer margin of at least twice its diagonal and snapped outward to
    /// integers.
    pub fn enclosing(mesh: &TriMesh) -> Frame {
        let mut pts: Vec<Point> = mesh.points().to_vec();
        pts.extend((0..mesh.triangle_count()).map(|t| mesh.circumcircle(t).expect("valid id").center));
        Frame::around(&pts, None)
    }

    /// Box around `pts`, grown by `margin` (default: twice the diagonal, rounded up).
    pub(crate) fn around(pts: &[Point], margin: Option<Scalar>) -> Frame {
        let (mut x0, mut y0) = (pts[0].x().clone(), pts[0].y().clone());
        let (mut x1, mut y1) = (x0.clone(), y0.clone());
        for p in &pts[1..] {
            x0 = x0.min(p.x().clone());
            x1 = x1.max(p.x().clone());
            y0 = y0.min(p.y().clone());
            y1 = y1.max(p.y().clone());
        }
        let margin = margin.unwrap_or_else(|| {
            let w = (&x1 - &x0).to_f64().unwrap_or(f64::MAX);
            let h = (&y1 - &y0).to_f64().unwrap_or(f64::MAX);
            let diag = (w * w + h * h).sqrt().ceil() + 1.0;
            let diag = BigInt::from(diag.min(1e300) as u128);
            BigRational::from_integer(diag * 2)
        });
        Frame {
            min: Point::new((x0 - &margin).floor(), (y0 - &margin).floor()),
            max: Point::new((x1 + &margin).ceil(), (y1 + &margin).ceil()),
        }
    }

    pub fn min(&self) -> &Point {
        &self.min
    }

    pub fn max(&self) -> &Point {
        &self.max
    }

    pub fn strictly_contains(&self, p: &Point) -> bool {
        self.min.x() < p.x() && p.x() < self.max.x() && self.min.y() < p.y() && p.y() < self.max.y()
    }

    /// Counterclockwise corners starting at the minimum corner.
    pub fn corners(&self) -> [Point; 4] {
        [
            self.min.clone(),
            Point::new(self.max.x().clone(), self.min.y().clone()),
            self.max.clone(),
            Point::new(self.min.x().clone(), self.max.y().clone()),
        ]
    }

    pub fn polygon(&self) -> Polygon {
        Polygon::new(self.corners().to_vec()).expect("frame has positive area")
    }

    /// Whether the whole segment lies on one side of the frame boundary.
    pub fn is_on_boundary(&self, s: &Segment) -> bool {
        let on = |f: fn(&Point) -> &Scalar, v: &Scalar| f(s.a()) == v && f(s.b()) == v;
        on(Point::x, self.min.x())
            || on(Point::x, self.max.x())
            || on(Point::y, self.min.y())
            || on(Point::y, self.max.y())
    }
}

/// What produced an edge of a clipped cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellEdgeKind {
    /// Part of the bisector with this neighbouring site.
    Neighbor(usize),
    /// Part of the clip frame.
    Frame,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellEdge {
    pub segment: Segment,
    pub kind: CellEdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoronoiCell {
    pub site: usize,
    pub polygon: Polygon,
    /// True when the unclipped region is unbounded (the site is on the hull).
    pub unbounded: bool,
    /// Counterclockwise boundary edges.
    pub edges: Vec<CellEdge>,
}

impl VoronoiCell {
    pub fn neighbors(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(|e| match e.kind {
            CellEdgeKind::Neighbor(j) => Some(j),
            CellEdgeKind::Frame => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoronoiDiagram {
    sites: SiteSet,
    cells: Vec<VoronoiCell>,
    vertices: Vec<Point>,
    frame: Frame,
}

/// Voronoi diagram of `sites`, clipped to `frame` (or to the default enclosing frame).
pub fn voronoi_diagram(sites: &SiteSet, frame: Option<&Frame>) -> Result<VoronoiDiagram, VoronoiError> {
    let mesh = triangulate(sites)?;
    VoronoiDiagram::from_delaunay(&mesh, frame)
}

impl VoronoiDiagram {
    /// Dual of a Delaunay mesh as produced by [`triangulate`].
    pub(crate) fn from_delaunay(mesh: &TriMesh, frame: Option<&Frame>) -> Result<VoronoiDiagram, VoronoiError> {
        let frame = match frame {
            Some(f) => f.clone(),
            None => Frame::enclosing(mesh),
        };
        let pts = mesh.points();
        if let Some(p) = pts.iter().find(|p| !frame.strictly_contains(p)) {
            return Err(VoronoiError::FrameTooSmall(Box::new(p.clone())));
        }
        let mut vertices: Vec<Point> = Vec::new();
        for t in 0..mesh.triangle_count() {
            let center = mesh.circumcircle(t)?.center;
            if !frame.strictly_contains(&center) {
                return Err(VoronoiError::FrameTooSmall(Box::new(center)));
            }
            if !vertices.contains(&center) {
                vertices.push(center);
            }
        }
        let corners = frame.corners();
        let cells = (0..pts.len())
            .map(|i| {
                let mut neighbors: Vec<usize> = mesh
                    .vertex_triangles(i)
                    .iter()
                    .flat_map(|&t| mesh.triangles()[t])
                    .filter(|&j| j != i)
                    .collect();
                neighbors.sort_unstable();
                neighbors.dedup();
                let mut loop_: Vec<(Point, CellEdgeKind)> =
                    corners.iter().map(|c| (c.clone(), CellEdgeKind::Frame)).collect();
                for &j in &neighbors {
                    loop_ = clip_tagged(
                        &loop_,
                        &HalfPlane::closer_to(&pts[i], &pts[j]),
                        &CellEdgeKind::Neighbor(j),
                    );
                }
                let loop_ = merge_collinear(loop_);
                let n = loop_.len();
                let edges = (0..n)
                    .map(|k| CellEdge {
                        segment: Segment::new(loop_[k].0.clone(), loop_[(k + 1) % n].0.clone())
                            .expect("zero-length edges were dropped"),
                        kind: loop_[k].1,
                    })
                    .collect();
                let polygon = Polygon::convex_from_loop(loop_.into_iter().map(|(p, _)| p).collect())
                    .expect("a site strictly inside the frame has a cell of positive area");
                VoronoiCell {
                    site: i,
                    polygon,
                    unbounded: mesh.is_hull_vertex(i),
                    edges,
                }
            })
            .collect();
        Ok(VoronoiDiagram {
            sites: mesh.sites().clone(),
            cells,
            vertices,
            frame,
        })
    }

    pub fn sites(&self) -> &SiteSet {
        &self.sites
    }

    pub fn cells(&self) -> &[VoronoiCell] {
        &self.cells
    }

    pub fn cell(&self, site: usize) -> Result<&VoronoiCell, VoronoiError> {
        self.cells
            .get(site)
            .ok_or(VoronoiError::Mesh(MeshError::IndexOutOfRange {
                index: site,
                len: self.cells.len(),
            }))
    }

    /// Distinct circumcenters of the Delaunay triangles.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Bisector edges, each reported once (from the lower-indexed site).
    pub fn ridges(&self) -> Vec<(usize, usize, Segment)> {
        let mut out = Vec::new();
        for cell in &self.cells {
            for e in &cell.edges {
                if let CellEdgeKind::Neighbor(j) = e.kind {
                    if cell.site < j {
                        out.push((cell.site, j, e.segment.clone()));
                    }
                }
            }
        }
        out
    }

    /// Classification of `cl V_p ∩ cl V_q`.
    pub fn cell_overlap(&self, p: usize, q: usize) -> Result<ConvexOverlap, VoronoiError> {
        self.sites.check_pair(p, q)?;
        let (a, b) = (&self.cells[p].polygon, &self.cells[q].polygon);
        Ok(ConvexOverlap::from_loop(clip_by_polygon(a.vertices().to_vec(), b)))
    }
}

/// Merges consecutive collinear edges that came from the same source.
fn merge_collinear(mut loop_: Vec<(Point, CellEdgeKind)>) -> Vec<(Point, CellEdgeKind)> {
    loop {
        let n = loop_.len();
        if n <= 3 {
            return loop_;
        }
        let redundant = (0..n).find(|&k| {
            let prev = (k + n - 1) % n;
            loop_[prev].1 == loop_[k].1
                && orient_sign(&loop_[prev].0, &loop_[k].0, &loop_[(k + 1) % n].0) == Ordering::Equal
        });
        match redundant {
            Some(k) => {
                loop_.remove(k);
            }
            None => return loop_,
        }
    }
}

/// The single point shared by the closed cells of three sites.
///
/// Returns `None` when the three closed cells have no common point, and
/// `DegenerateIntersection` when the common point is also on a fourth cell
/// (cocircular sites), since then it is not a vertex of exactly three cells.
pub fn common_vertex(v: &VoronoiDiagram, p: usize, q: usize, r: usize) -> Result<Option<Point>, VoronoiError> {
    v.sites.check_pair(p, q)?;
    v.sites.check_pair(q, r)?;
    v.sites.check_pair(p, r)?;
    let clipped = clip_by_polygon(v.cells[p].polygon.vertices().to_vec(), &v.cells[q].polygon);
    let clipped = clip_by_polygon(clipped, &v.cells[r].polygon);
    match ConvexOverlap::from_loop(clipped) {
        ConvexOverlap::Empty => Ok(None),
        ConvexOverlap::Point(u) => {
            let pts = v.sites.points();
            let radius = u.squared_distance(&pts[p]);
            let fourth = (0..pts.len()).any(|s| s != p && s != q && s != r && u.squared_distance(&pts[s]) == radius);
            if fourth {
                Err(VoronoiError::DegenerateIntersection(Box::new(u)))
            } else {
                Ok(Some(u))
            }
        }
        ConvexOverlap::Segment(s) => Err(VoronoiError::DegenerateIntersection(Box::new(s.a().clone()))),
        ConvexOverlap::Area(poly) => Err(VoronoiError::DegenerateIntersection(Box::new(
            poly.vertices()[0].clone(),
        ))),
    }
}

/// Strong proximity of cells: their closures share a positive-length edge
/// that is not merely part of the clip frame.
pub fn cells_strongly_near(v: &VoronoiDiagram, p: usize, q: usize) -> Result<bool, VoronoiError> {
    Ok(match v.cell_overlap(p, q)? {
        ConvexOverlap::Segment(s) => !v.frame.is_on_boundary(&s),
        ConvexOverlap::Empty | ConvexOverlap::Point(_) => false,
        ConvexOverlap::Area(_) => {
            debug_assert!(false, "Voronoi cells have disjoint interiors");
            false
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn int_frame(x0: i64, y0: i64, x1: i64, y1: i64) -> Frame {
        let q = |v: i64| BigRational::from_integer(v.into());
        Frame::new(q(x0), q(y0), q(x1), q(y1)).unwrap()
    }

    #[test]
    fn center_cell_of_five_point_cross() {
        let sites = SiteSet::from_ints(&[(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)]).unwrap();
        let v = voronoi_diagram(&sites, None).unwrap();
        let cell = &v.cell(4).unwrap().polygon;
        assert_eq!(cell, &Polygon::new(vec![p(1, 0), p(2, 1), p(1, 2), p(0, 1)]).unwrap());
        assert!(!v.cell(4).unwrap().unbounded);
        assert!(v.cell(0).unwrap().unbounded);
    }

    #[test]
    fn single_triangle_has_one_vertex() {
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (0, 4)]).unwrap();
        let v = voronoi_diagram(&sites, None).unwrap();
        assert_eq!(v.vertices(), &[p(2, 2)]);
        assert!(v.cells().iter().all(|c| c.unbounded));
        assert_eq!(v.ridges().len(), 3);
        assert_eq!(common_vertex(&v, 0, 1, 2).unwrap(), Some(p(2, 2)));
    }

    #[test]
    fn frame_must_contain_circumcenters() {
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (0, 4)]).unwrap();
        assert_eq!(
            voronoi_diagram(&sites, Some(&int_frame(-1, -1, 5, 1))),
            Err(VoronoiError::FrameTooSmall(Box::new(p(0, 4))))
        );
        // contains the sites but its boundary passes through the circumcenter (2,-1)
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (1, 1)]).unwrap();
        let center = circumcenter(&sites);
        assert!(matches!(
            voronoi_diagram(&sites, Some(&int_frame(-1, -1, 5, 2))),
            Err(VoronoiError::FrameTooSmall(c)) if *c == center
        ));
        let z = || BigRational::from_integer(0.into());
        assert_eq!(
            Frame::new(z(), z(), z(), BigRational::from_integer(1.into())),
            Err(VoronoiError::InvalidFrame)
        );
    }

    fn circumcenter(sites: &SiteSet) -> Point {
        let pts = sites.points();
        crate::geometry::circumcircle(&pts[0], &pts[1], &pts[2]).unwrap().center
    }

    #[test]
    fn fan_corners_share_no_vertex() {
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (0, 4), (1, 1)]).unwrap();
        let v = voronoi_diagram(&sites, None).unwrap();
        assert_eq!(common_vertex(&v, 0, 1, 2).unwrap(), None);
        assert!(cells_strongly_near(&v, 0, 3).unwrap());
    }

    #[test]
    fn cocircular_square_is_degenerate() {
        let sites = SiteSet::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        let v = voronoi_diagram(&sites, None).unwrap();
        for (a, b, c) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            assert_eq!(
                common_vertex(&v, a, b, c),
                Err(VoronoiError::DegenerateIntersection(Box::new(p(1, 1))))
            );
        }
        // diagonal cells touch only at the center
        assert!(!cells_strongly_near(&v, 0, 2).unwrap());
        assert!(cells_strongly_near(&v, 0, 1).unwrap());
    }

    #[test]
    fn collinear_middle_site_separates_ends() {
        let sites = SiteSet::from_ints(&[(0, 0), (2, 0), (4, 0), (2, 1)]).unwrap();
        let v = voronoi_diagram(&sites, None).unwrap();
        assert!(!cells_strongly_near(&v, 0, 2).unwrap());
        assert!(cells_strongly_near(&v, 0, 1).unwrap());
        assert_eq!(
            cells_strongly_near(&v, 1, 1),
            Err(VoronoiError::Mesh(MeshError::RepeatedIndex(1)))
        );
    }
}
