//! Half-plane clipping of convex vertex loops and convex-convex intersection.

use std::cmp::Ordering;

use num_rational::BigRational;

use super::number::{sign_of, Scalar};
use super::polygon::is_convex_polygon;
use super::predicates::orient_sign;
use super::{GeometryError, Point, Polygon, Segment};

/// Closed half-plane `{ v : offset - normal · v >= 0 }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    nx: Scalar,
    ny: Scalar,
    offset: Scalar,
}

impl HalfPlane {
    /// Points on or to the left of the directed line `a -> b`.
    pub fn left_of(a: &Point, b: &Point) -> HalfPlane {
        let dx = b.x() - a.x();
        let dy = b.y() - a.y();
        let offset = &dy * a.x() - &dx * a.y();
        HalfPlane {
            nx: dy,
            ny: -dx,
            offset,
        }
    }

    /// Points at least as close to `site` as to `other`.
    pub fn closer_to(site: &Point, other: &Point) -> HalfPlane {
        // 2 v·(other - site) <= |other|² - |site|²
        let two = BigRational::from_integer(2.into());
        let nx = &two * (other.x() - site.x());
        let ny = &two * (other.y() - site.y());
        let offset = other.x() * other.x() + other.y() * other.y() - site.x() * site.x() - site.y() * site.y();
        HalfPlane { nx, ny, offset }
    }

    /// Signed slack; nonnegative inside.
    pub fn slack(&self, v: &Point) -> Scalar {
        &self.offset - &self.nx * v.x() - &self.ny * v.y()
    }

    pub fn contains(&self, v: &Point) -> bool {
        sign_of(&self.slack(v)) != Ordering::Less
    }
}

/// One step of Sutherland–Hodgman on a closed convex loop carrying a tag per
/// edge (edge `i` runs from vertex `i` to vertex `i + 1`). Edges created along
/// the clip line receive `line_tag`. Degenerate loops (segments, points) are
/// clipped correctly as well.
pub(crate) fn clip_tagged<T: Clone>(loop_: &[(Point, T)], plane: &HalfPlane, line_tag: &T) -> Vec<(Point, T)> {
    let n = loop_.len();
    if n == 0 {
        return Vec::new();
    }
    let slacks: Vec<Scalar> = loop_.iter().map(|(v, _)| plane.slack(v)).collect();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let j = (i + 1) % n;
        let (vi, ti) = &loop_[i];
        let (vj, _) = &loop_[j];
        let in_i = sign_of(&slacks[i]) != Ordering::Less;
        let in_j = sign_of(&slacks[j]) != Ordering::Less;
        match (in_i, in_j) {
            (true, true) => out.push((vi.clone(), ti.clone())),
            (true, false) => {
                out.push((vi.clone(), ti.clone()));
                let t = &slacks[i] / (&slacks[i] - &slacks[j]);
                out.push((vi.lerp(vj, &t), line_tag.clone()));
            }
            (false, true) => {
                let t = &slacks[i] / (&slacks[i] - &slacks[j]);
                out.push((vi.lerp(vj, &t), ti.clone()));
            }
            (false, false) => {}
        }
    }
    drop_zero_length_edges(out)
}

/// Removes vertices equal to their successor; the surviving vertex keeps the
/// tag of the edge that actually leaves it.
pub(crate) fn drop_zero_length_edges<T>(mut loop_: Vec<(Point, T)>) -> Vec<(Point, T)> {
    loop {
        let n = loop_.len();
        if n <= 1 {
            return loop_;
        }
        match (0..n).find(|&i| loop_[i].0 == loop_[(i + 1) % n].0) {
            Some(i) => {
                loop_.remove(i);
            }
            None => return loop_,
        }
    }
}

/// Clips a closed convex vertex loop (possibly degenerate) by a half-plane.
pub(crate) fn clip_points(points: &[Point], plane: &HalfPlane) -> Vec<Point> {
    let tagged: Vec<(Point, ())> = points.iter().map(|p| (p.clone(), ())).collect();
    clip_tagged(&tagged, plane, &()).into_iter().map(|(p, _)| p).collect()
}

/// Shape of the intersection of closed convex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexOverlap {
    Empty,
    Point(Point),
    Segment(Segment),
    Area(Polygon),
}

impl ConvexOverlap {
    /// Classifies the convex hull of a clipped loop.
    pub(crate) fn from_loop(points: Vec<Point>) -> ConvexOverlap {
        let mut distinct = points.clone();
        distinct.sort();
        distinct.dedup();
        match distinct.len() {
            0 => ConvexOverlap::Empty,
            1 => ConvexOverlap::Point(distinct.pop().unwrap()),
            _ => {
                let first = &distinct[0];
                let last = &distinct[distinct.len() - 1];
                let all_collinear = distinct.iter().all(|p| orient_sign(first, last, p) == Ordering::Equal);
                if all_collinear {
                    ConvexOverlap::Segment(Segment::new(first.clone(), last.clone()).expect("distinct extremes"))
                } else {
                    match Polygon::convex_from_loop(points) {
                        Some(poly) => ConvexOverlap::Area(poly),
                        None => ConvexOverlap::Empty,
                    }
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ConvexOverlap::Empty)
    }
}

/// Intersection of a convex loop with the closed region of convex polygon `q`.
pub(crate) fn clip_by_polygon(points: Vec<Point>, q: &Polygon) -> Vec<Point> {
    q.edges().fold(points, |acc, (a, b)| {
        if acc.is_empty() {
            acc
        } else {
            clip_points(&acc, &HalfPlane::left_of(a, b))
        }
    })
}

/// Full classification of `cl p ∩ cl q` for convex polygons.
pub fn convex_overlap(p: &Polygon, q: &Polygon) -> ConvexOverlap {
    ConvexOverlap::from_loop(clip_by_polygon(p.vertices().to_vec(), q))
}

/// Intersection of two convex polygons when it has positive area.
pub fn convex_polygon_intersection(p: &Polygon, q: &Polygon) -> Result<Option<Polygon>, GeometryError> {
    if !is_convex_polygon(p) || !is_convex_polygon(q) {
        return Err(GeometryError::NonConvexInput);
    }
    Ok(match convex_overlap(p, q) {
        ConvexOverlap::Area(poly) => Some(poly),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(c: &[(i64, i64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    fn poly(c: &[(i64, i64)]) -> Polygon {
        Polygon::new(pts(c)).unwrap()
    }

    #[test]
    fn overlapping_squares() {
        let a = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let b = poly(&[(1, 1), (3, 1), (3, 3), (1, 3)]);
        assert_eq!(
            convex_polygon_intersection(&a, &b).unwrap(),
            Some(poly(&[(1, 1), (2, 1), (2, 2), (1, 2)]))
        );
        assert_eq!(convex_polygon_intersection(&a, &a).unwrap(), Some(a.clone()));
    }

    #[test]
    fn disjoint_triangle_and_square() {
        let t = poly(&[(0, 0), (4, 0), (0, 4)]);
        let s = poly(&[(3, 3), (5, 3), (5, 5), (3, 5)]);
        assert_eq!(convex_polygon_intersection(&t, &s).unwrap(), None);
        // independent check: every vertex of the square violates x + y <= 4
        assert!(s
            .vertices()
            .iter()
            .all(|v| !HalfPlane::left_of(&Point::from_ints(4, 0), &Point::from_ints(0, 4)).contains(v)));
    }

    #[test]
    fn rejects_non_convex() {
        let reflex = poly(&[(0, 0), (4, 0), (1, 1), (0, 4)]);
        let t = poly(&[(0, 0), (4, 0), (0, 4)]);
        assert_eq!(
            convex_polygon_intersection(&reflex, &t),
            Err(GeometryError::NonConvexInput)
        );
    }

    #[test]
    fn lower_dimensional_overlaps() {
        let a = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let right = poly(&[(1, 0), (2, 0), (2, 1), (1, 1)]);
        let corner = poly(&[(1, 1), (2, 1), (2, 2), (1, 2)]);
        let far = poly(&[(5, 5), (6, 5), (6, 6)]);
        assert_eq!(
            convex_overlap(&a, &right),
            ConvexOverlap::Segment(Segment::new(Point::from_ints(1, 0), Point::from_ints(1, 1)).unwrap())
        );
        assert_eq!(
            convex_overlap(&a, &corner),
            ConvexOverlap::Point(Point::from_ints(1, 1))
        );
        assert_eq!(convex_overlap(&a, &far), ConvexOverlap::Empty);
    }

    #[test]
    fn bisector_half_plane() {
        let h = HalfPlane::closer_to(&Point::from_ints(0, 0), &Point::from_ints(2, 0));
        assert!(h.contains(&Point::from_ints(1, 7)));
        assert!(h.contains(&Point::from_ints(-3, 0)));
        assert!(!h.contains(&Point::parse("1.001", "0").unwrap()));
    }

    #[test]
    fn tagged_clip_labels_new_edge() {
        let square: Vec<(Point, u8)> = pts(&[(0, 0), (2, 0), (2, 2), (0, 2)])
            .into_iter()
            .zip([0u8, 1, 2, 3])
            .collect();
        // keep x <= 1
        let plane = HalfPlane::left_of(&Point::from_ints(1, 0), &Point::from_ints(1, 1));
        let out = clip_tagged(&square, &plane, &9u8);
        assert_eq!(
            out,
            vec![
                (Point::from_ints(0, 0), 0),
                (Point::from_ints(1, 0), 9),
                (Point::from_ints(1, 2), 2),
                (Point::from_ints(0, 2), 3)
            ]
        );
    }
}
