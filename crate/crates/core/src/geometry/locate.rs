use std::cmp::Ordering;

use super::predicates::orient_sign;
use super::{Point, Polygon, Segment};

/// Where a point sits relative to a closed set: closure = interior ∪ boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointLocation {
    Interior,
    Boundary,
    Exterior,
}

impl PointLocation {
    pub fn in_closure(self) -> bool {
        self != PointLocation::Exterior
    }
}

/// Closed point sets that can classify a query point exactly.
pub trait Locate {
    fn locate(&self, p: &Point) -> PointLocation;
}

/// Free-function form of [`Locate::locate`].
pub fn locate_point<G: Locate + ?Sized>(p: &Point, g: &G) -> PointLocation {
    g.locate(p)
}

impl Locate for Segment {
    /// Boundary is the endpoint pair; interior the open segment.
    fn locate(&self, p: &Point) -> PointLocation {
        if p == self.a() || p == self.b() {
            PointLocation::Boundary
        } else if self.contains(p) {
            PointLocation::Interior
        } else {
            PointLocation::Exterior
        }
    }
}

impl Locate for Polygon {
    fn locate(&self, p: &Point) -> PointLocation {
        let mut winding = 0i64;
        for (a, b) in self.edges() {
            let side = orient_sign(a, b, p);
            if side == Ordering::Equal && super::segment::between(a, b, p) {
                return PointLocation::Boundary;
            }
            if a.y() <= p.y() {
                if b.y() > p.y() && side == Ordering::Greater {
                    winding += 1;
                }
            } else if b.y() <= p.y() && side == Ordering::Less {
                winding -= 1;
            }
        }
        if winding != 0 {
            PointLocation::Interior
        } else {
            PointLocation::Exterior
        }
    }
}

impl Locate for Point {
    fn locate(&self, p: &Point) -> PointLocation {
        // a singleton is closed with empty interior
        if self == p {
            PointLocation::Boundary
        } else {
            PointLocation::Exterior
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn segment_examples() {
        let s = Segment::new(p(0, 0), p(2, 2)).unwrap();
        assert_eq!(locate_point(&p(1, 1), &s), PointLocation::Interior);
        assert_eq!(locate_point(&p(0, 0), &s), PointLocation::Boundary);
        assert_eq!(locate_point(&p(3, 3), &s), PointLocation::Exterior);
        assert_eq!(locate_point(&p(1, 0), &s), PointLocation::Exterior);
    }

    #[test]
    fn polygon_examples() {
        let t = Polygon::new(vec![p(0, 0), p(4, 0), p(0, 4)]).unwrap();
        assert_eq!(locate_point(&p(3, 3), &t), PointLocation::Exterior);
        assert_eq!(locate_point(&p(1, 1), &t), PointLocation::Interior);
        assert_eq!(locate_point(&p(2, 2), &t), PointLocation::Boundary);
        assert_eq!(locate_point(&p(0, 4), &t), PointLocation::Boundary);
        assert_eq!(locate_point(&p(-1, 0), &t), PointLocation::Exterior);
        assert_eq!(locate_point(&p(5, 0), &t), PointLocation::Exterior);
    }

    #[test]
    fn non_convex_polygon() {
        let q = Polygon::new(vec![p(0, 0), p(4, 0), p(1, 1), p(0, 4)]).unwrap();
        assert_eq!(locate_point(&p(2, 1), &q), PointLocation::Exterior);
        assert_eq!(
            locate_point(&Point::parse("0.5", "0.25").unwrap(), &q),
            PointLocation::Interior
        );
        assert_eq!(locate_point(&p(1, 1), &q), PointLocation::Boundary);
    }

    #[test]
    fn ray_through_vertex_counts_once() {
        let diamond = Polygon::new(vec![p(0, -2), p(2, 0), p(0, 2), p(-2, 0)]).unwrap();
        assert_eq!(locate_point(&p(-1, 0), &diamond), PointLocation::Interior);
        assert_eq!(locate_point(&p(-3, 0), &diamond), PointLocation::Exterior);
        assert_eq!(locate_point(&p(3, 0), &diamond), PointLocation::Exterior);
    }
}
