use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::number::Scalar;
use super::predicates::{cross, orient_sign, Orientation};
use super::segment::{between, segment_intersection, Segment, SegmentIntersection};
use super::{GeometryError, Point};

/// A simple polygon with counterclockwise boundary.
///
/// Vertices are normalized: consecutive duplicates and straight-through
/// collinear vertices are removed and the lexicographically smallest vertex
/// comes first, so structural equality is geometric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Builds and validates a polygon from counterclockwise vertices.
    pub fn new(vertices: Vec<Point>) -> Result<Polygon, GeometryError> {
        let vertices = normalize(vertices);
        if vertices.len() < 3 {
            return Err(GeometryError::InvalidPolygon("fewer than three distinct vertices"));
        }
        match signed_area2(&vertices).cmp(&Scalar::zero()) {
            Ordering::Greater => {}
            Ordering::Equal => return Err(GeometryError::InvalidPolygon("zero area")),
            Ordering::Less => return Err(GeometryError::InvalidPolygon("clockwise orientation")),
        }
        if !is_simple(&vertices) {
            return Err(GeometryError::InvalidPolygon("self-intersecting boundary"));
        }
        Ok(Polygon { vertices })
    }

    /// For vertex loops known to bound a convex region, e.g. clipping output.
    /// Returns `None` when the loop has no area.
    pub(crate) fn convex_from_loop(vertices: Vec<Point>) -> Option<Polygon> {
        let vertices = normalize(vertices);
        if vertices.len() < 3 || signed_area2(&vertices) <= Scalar::zero() {
            return None;
        }
        Some(Polygon { vertices })
    }

    pub fn triangle(a: Point, b: Point, c: Point) -> Result<Polygon, GeometryError> {
        Polygon::new(vec![a, b, c])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Boundary edges in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn edge_segments(&self) -> Vec<Segment> {
        self.edges()
            .map(|(a, b)| Segment::new(a.clone(), b.clone()).expect("normalized vertices are distinct"))
            .collect()
    }

    /// Exact area.
    pub fn area(&self) -> Scalar {
        signed_area2(&self.vertices) / BigRational::from_integer(2.into())
    }
}

impl fmt::Debug for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vertices.iter()).finish()
    }
}

/// Twice the signed area (shoelace).
pub(crate) fn signed_area2(vertices: &[Point]) -> Scalar {
    let n = vertices.len();
    if n < 3 {
        return Scalar::zero();
    }
    let origin = &vertices[0];
    (1..n - 1).fold(Scalar::zero(), |acc, i| {
        acc + cross(origin, &vertices[i], &vertices[i + 1])
    })
}

fn normalize(mut vertices: Vec<Point>) -> Vec<Point> {
    loop {
        let n = vertices.len();
        if n < 3 {
            vertices.dedup();
            if vertices.len() > 1 && vertices.first() == vertices.last() {
                vertices.pop();
            }
            return vertices;
        }
        let mut removed = None;
        for i in 0..n {
            let prev = &vertices[(i + n - 1) % n];
            let cur = &vertices[i];
            let next = &vertices[(i + 1) % n];
            let redundant = cur == next
                || (orient_sign(prev, cur, next) == Ordering::Equal && prev != cur && between(prev, next, cur));
            if redundant {
                removed = Some(i);
                break;
            }
        }
        match removed {
            Some(i) => {
                vertices.remove(i);
            }
            None => break,
        }
    }
    let start = (0..vertices.len())
        .min_by(|&i, &j| vertices[i].cmp(&vertices[j]))
        .unwrap_or(0);
    vertices.rotate_left(start);
    vertices
}

fn is_simple(vertices: &[Point]) -> bool {
    let n = vertices.len();
    let segs: Vec<Segment> = (0..n)
        .map(|i| Segment::new(vertices[i].clone(), vertices[(i + 1) % n].clone()))
        .collect::<Result<_, _>>()
        .unwrap_or_default();
    if segs.len() != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            match segment_intersection(&segs[i], &segs[j]) {
                SegmentIntersection::Empty => {}
                SegmentIntersection::SubSegment(_) => return false,
                SegmentIntersection::SinglePoint(p) => {
                    if !adjacent {
                        return false;
                    }
                    let shared = if j == i + 1 { segs[i].b() } else { segs[i].a() };
                    if &p != shared {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True iff no boundary vertex is reflex.
pub fn is_convex_polygon(p: &Polygon) -> bool {
    let v = p.vertices();
    let n = v.len();
    (0..n).all(|i| crate::geometry::orientation(&v[(i + n - 1) % n], &v[i], &v[(i + 1) % n]) != Orientation::Cw)
}
