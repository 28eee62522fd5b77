//! Near, far and strongly near.
//!
//! Two sets are near when their closures meet. Every `Near` verdict carries a
//! witness lying in both closures; `strongly` is set when the sets share a
//! positive-length piece of boundary.

use serde::{Deserialize, Serialize};

use crate::delaunay::{Edge, MeshError, TriMesh};
use crate::geometry::{locate_point, segment_intersection, Point, Polygon, Segment, SegmentIntersection};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Point(Point),
    Segment(Segment),
    Polygon(Polygon),
    Points(Vec<Point>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Near,
    Far,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Point(Point),
    Segment(Segment),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProximityVerdict {
    pub relation: Relation,
    pub witness: Option<Witness>,
    pub strongly: bool,
}

impl ProximityVerdict {
    fn far() -> ProximityVerdict {
        ProximityVerdict {
            relation: Relation::Far,
            witness: None,
            strongly: false,
        }
    }

    fn at(p: Point) -> ProximityVerdict {
        ProximityVerdict {
            relation: Relation::Near,
            witness: Some(Witness::Point(p)),
            strongly: false,
        }
    }

    fn along(s: Segment) -> ProximityVerdict {
        ProximityVerdict {
            relation: Relation::Near,
            witness: Some(Witness::Segment(s)),
            strongly: true,
        }
    }

    pub fn is_near(&self) -> bool {
        self.relation == Relation::Near
    }
}

/// `cl a ∩ cl b ≠ ∅`, with a witness.
pub fn near(a: &Shape, b: &Shape) -> ProximityVerdict {
    use Shape::*;
    match (a, b) {
        (Points(ps), other) | (other, Points(ps)) => ps
            .iter()
            .find(|p| in_closure(p, other))
            .map(|p| ProximityVerdict::at(p.clone()))
            .unwrap_or_else(ProximityVerdict::far),
        (Point(p), other) | (other, Point(p)) => {
            if in_closure(p, other) {
                ProximityVerdict::at(p.clone())
            } else {
                ProximityVerdict::far()
            }
        }
        (Segment(s), Segment(t)) => match segment_intersection(s, t) {
            SegmentIntersection::Empty => ProximityVerdict::far(),
            SegmentIntersection::SinglePoint(p) => ProximityVerdict::at(p),
            SegmentIntersection::SubSegment(u) => ProximityVerdict::along(u),
        },
        (Segment(s), Polygon(poly)) | (Polygon(poly), Segment(s)) => boundary_contact(std::slice::from_ref(s), poly)
            .or_else(|| {
                [s.a(), s.b()]
                    .into_iter()
                    .find(|p| locate_point(p, poly).in_closure())
                    .cloned()
                    .map(ProximityVerdict::at)
            })
            .unwrap_or_else(ProximityVerdict::far),
        (Polygon(p), Polygon(q)) => boundary_contact(&p.edge_segments(), q)
            .or_else(|| {
                let inside = |x: &crate::geometry::Polygon, y: &crate::geometry::Polygon| {
                    x.vertices().iter().find(|v| locate_point(v, y).in_closure()).cloned()
                };
                inside(p, q).or_else(|| inside(q, p)).map(ProximityVerdict::at)
            })
            .unwrap_or_else(ProximityVerdict::far),
    }
}

/// `cl a ∩ cl b = ∅`.
pub fn far(a: &Shape, b: &Shape) -> bool {
    !near(a, b).is_near()
}

fn in_closure(p: &Point, g: &Shape) -> bool {
    match g {
        Shape::Point(q) => p == q,
        Shape::Segment(s) => s.contains(p),
        Shape::Polygon(poly) => locate_point(p, poly).in_closure(),
        Shape::Points(qs) => qs.contains(p),
    }
}

/// Contact between `segments` and the boundary of `poly`; overlaps of positive
/// length take precedence over single points.
fn boundary_contact(segments: &[Segment], poly: &Polygon) -> Option<ProximityVerdict> {
    let mut point = None;
    for s in segments {
        for e in poly.edge_segments() {
            match segment_intersection(s, &e) {
                SegmentIntersection::SubSegment(u) => return Some(ProximityVerdict::along(u)),
                SegmentIntersection::SinglePoint(p) if point.is_none() => point = Some(p),
                _ => {}
            }
        }
    }
    point.map(ProximityVerdict::at)
}

/// Triangles are near when they share a vertex (their closures then meet).
/// Every triangle is near itself.
pub fn triangles_near(m: &TriMesh, t1: usize, t2: usize) -> Result<bool, MeshError> {
    let (a, b) = (m.triangle(t1)?, m.triangle(t2)?);
    Ok(a.iter().any(|v| b.contains(v)))
}

/// Distinct triangles are strongly near when they share a full edge.
pub fn strongly_near_triangles(m: &TriMesh, t1: usize, t2: usize) -> Result<bool, MeshError> {
    Ok(shared_edge(m, t1, t2)?.is_some())
}

/// The mesh edge shared by two distinct triangles, if any.
pub fn shared_edge(m: &TriMesh, t1: usize, t2: usize) -> Result<Option<Edge>, MeshError> {
    let (a, b) = (m.triangle(t1)?, m.triangle(t2)?);
    if t1 == t2 {
        return Err(MeshError::RepeatedIndex(t1));
    }
    let common: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
    Ok(match common[..] {
        [u, v] => Some(Edge::new(u, v)),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delaunay::{triangulate, SiteSet};

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Shape {
        Shape::Segment(Segment::new(p(a.0, a.1), p(b.0, b.1)).unwrap())
    }

    fn poly(coords: &[(i64, i64)]) -> Shape {
        Shape::Polygon(Polygon::new(coords.iter().map(|&(x, y)| p(x, y)).collect()).unwrap())
    }

    #[test]
    fn segments_meeting_at_a_vertex() {
        let v = near(&seg((0, 0), (1, 1)), &seg((1, 1), (2, 0)));
        assert_eq!(v, ProximityVerdict::at(p(1, 1)));
        assert!(far(&seg((0, 0), (1, 0)), &seg((0, 1), (1, 1))));
        let s = seg((0, 0), (3, 1));
        assert!(near(&s, &s).strongly);
    }

    #[test]
    fn polygons() {
        let t1 = poly(&[(0, 0), (4, 0), (1, 3)]);
        let t2 = poly(&[(4, 0), (5, 3), (1, 3)]);
        let v = near(&t1, &t2);
        assert!(v.strongly);
        assert_eq!(
            v.witness,
            Some(Witness::Segment(Segment::new(p(1, 3), p(4, 0)).unwrap()))
        );
        // nested: no boundary contact but the closures meet
        let big = poly(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
        let small = poly(&[(2, 2), (3, 2), (3, 3)]);
        assert_eq!(near(&big, &small), ProximityVerdict::at(p(2, 2)));
        assert!(far(&small, &poly(&[(5, 5), (6, 5), (6, 6)])));
        // segment fully inside a polygon
        assert_eq!(near(&seg((1, 1), (2, 2)), &big), ProximityVerdict::at(p(1, 1)));
        assert!(far(&seg((11, 0), (12, 5)), &big));
    }

    #[test]
    fn point_sets() {
        let pts = Shape::Points(vec![p(9, 9), p(1, 0)]);
        assert_eq!(near(&pts, &seg((0, 0), (2, 0))), ProximityVerdict::at(p(1, 0)));
        assert!(far(&pts, &Shape::Point(p(0, 0))));
        assert!(near(&pts, &pts).is_near());
    }

    #[test]
    fn mesh_triangles() {
        let s = SiteSet::from_ints(&[(0, 0), (4, 0), (0, 4), (1, 1)]).unwrap();
        let m = triangulate(&s).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert!(triangles_near(&m, a, b).unwrap());
                if a != b {
                    assert!(strongly_near_triangles(&m, a, b).unwrap());
                }
            }
        }
        assert_eq!(strongly_near_triangles(&m, 1, 1), Err(MeshError::RepeatedIndex(1)));
        assert!(matches!(
            triangles_near(&m, 0, 3),
            Err(MeshError::IndexOutOfRange { .. })
        ));
    }
}
