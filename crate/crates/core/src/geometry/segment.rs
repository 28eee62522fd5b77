use std::cmp::Ordering;
use std::fmt;

use super::predicates::{cross, orient_sign};
use super::{GeometryError, Point};

/// A closed straight segment with distinct endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Segment, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    /// Endpoints in lexicographic order.
    pub fn sorted(&self) -> (&Point, &Point) {
        if self.a <= self.b {
            (&self.a, &self.b)
        } else {
            (&self.b, &self.a)
        }
    }

    /// The same point set with endpoints in lexicographic order.
    pub fn canonical(&self) -> Segment {
        let (a, b) = self.sorted();
        Segment {
            a: a.clone(),
            b: b.clone(),
        }
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// True when the two segments cover the same point set.
    pub fn same_set(&self, other: &Segment) -> bool {
        self.sorted() == other.sorted()
    }

    /// Whether `p` lies on the closed segment.
    pub fn contains(&self, p: &Point) -> bool {
        orient_sign(&self.a, &self.b, p) == Ordering::Equal && between(&self.a, &self.b, p)
    }

    /// Whether `p` lies strictly between the endpoints.
    pub fn contains_in_interior(&self, p: &Point) -> bool {
        p != &self.a && p != &self.b && self.contains(p)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} -> {:?}]", self.a, self.b)
    }
}

/// For `p` collinear with `a, b`: whether `p` lies within their bounding range.
pub(crate) fn between(a: &Point, b: &Point, p: &Point) -> bool {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lo <= p && p <= hi
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Empty,
    SinglePoint(Point),
    /// Collinear overlap of positive length, endpoints in lexicographic order.
    SubSegment(Segment),
}

/// Exact intersection of two closed segments.
pub fn segment_intersection(s: &Segment, t: &Segment) -> SegmentIntersection {
    let o1 = orient_sign(&s.a, &s.b, &t.a);
    let o2 = orient_sign(&s.a, &s.b, &t.b);
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        // On a common line, lexicographic order is a linear order along it.
        let (s_lo, s_hi) = s.sorted();
        let (t_lo, t_hi) = t.sorted();
        let lo = s_lo.max(t_lo);
        let hi = s_hi.min(t_hi);
        return match lo.cmp(hi) {
            Ordering::Greater => SegmentIntersection::Empty,
            Ordering::Equal => SegmentIntersection::SinglePoint(lo.clone()),
            Ordering::Less => SegmentIntersection::SubSegment(Segment {
                a: lo.clone(),
                b: hi.clone(),
            }),
        };
    }
    let o3 = orient_sign(&t.a, &t.b, &s.a);
    let o4 = orient_sign(&t.a, &t.b, &s.b);
    if same_strict_side(o1, o2) || same_strict_side(o3, o4) {
        return SegmentIntersection::Empty;
    }
    let point = if o1 == Ordering::Equal {
        t.a.clone()
    } else if o2 == Ordering::Equal {
        t.b.clone()
    } else if o3 == Ordering::Equal {
        s.a.clone()
    } else if o4 == Ordering::Equal {
        s.b.clone()
    } else {
        // s.a + u (s.b - s.a) with u = cross(t.a, t.b, s.a) / (cross(t.a, t.b, s.a) - cross(t.a, t.b, s.b))
        let ca = cross(&t.a, &t.b, &s.a);
        let cb = cross(&t.a, &t.b, &s.b);
        let u = &ca / (&ca - &cb);
        s.a.lerp(&s.b, &u)
    };
    SegmentIntersection::SinglePoint(point)
}

fn same_strict_side(a: Ordering, b: Ordering) -> bool {
    a != Ordering::Equal && a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment {
        Segment::new(Point::from_ints(ax, ay), Point::from_ints(bx, by)).unwrap()
    }

    #[test]
    fn rejects_zero_length() {
        let p = Point::from_ints(1, 1);
        assert_eq!(Segment::new(p.clone(), p), Err(GeometryError::DegenerateSegment));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            segment_intersection(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)),
            SegmentIntersection::SinglePoint(Point::from_ints(1, 1))
        );
        assert_eq!(
            segment_intersection(&seg(0, 0, 2, 0), &seg(1, 0, 3, 0)),
            SegmentIntersection::SubSegment(seg(1, 0, 2, 0))
        );
        assert_eq!(
            segment_intersection(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1)),
            SegmentIntersection::Empty
        );
    }

    #[test]
    fn touching_and_collinear_disjoint_cases() {
        assert_eq!(
            segment_intersection(&seg(0, 0, 1, 0), &seg(1, 0, 2, 5)),
            SegmentIntersection::SinglePoint(Point::from_ints(1, 0))
        );
        assert_eq!(
            segment_intersection(&seg(0, 0, 1, 0), &seg(1, 0, 3, 0)),
            SegmentIntersection::SinglePoint(Point::from_ints(1, 0))
        );
        assert_eq!(
            segment_intersection(&seg(0, 0, 1, 0), &seg(2, 0, 3, 0)),
            SegmentIntersection::Empty
        );
        // T-junction in the interior of the first segment
        assert_eq!(
            segment_intersection(&seg(0, 0, 4, 0), &seg(2, 3, 2, 0)),
            SegmentIntersection::SinglePoint(Point::from_ints(2, 0))
        );
        // vertical collinear overlap
        assert_eq!(
            segment_intersection(&seg(0, 5, 0, 0), &seg(0, 2, 0, 9)),
            SegmentIntersection::SubSegment(seg(0, 2, 0, 5))
        );
    }

    #[test]
    fn non_integer_crossing_point() {
        let r = segment_intersection(&seg(0, 0, 3, 1), &seg(0, 1, 3, 0));
        let expected = Point::parse("1.5", "0.5").unwrap();
        assert_eq!(r, SegmentIntersection::SinglePoint(expected));
    }

    fn small_segment() -> impl Strategy<Value = Segment> {
        (-6i64..6, -6i64..6, -6i64..6, -6i64..6)
            .prop_filter("non-degenerate", |(a, b, c, d)| (a, b) != (c, d))
            .prop_map(|(a, b, c, d)| seg(a, b, c, d))
    }

    proptest! {
        #[test]
        fn intersection_is_symmetric(s in small_segment(), t in small_segment()) {
            prop_assert_eq!(segment_intersection(&s, &t), segment_intersection(&t, &s));
            prop_assert_eq!(segment_intersection(&s, &t), segment_intersection(&s.reversed(), &t));
        }

        #[test]
        fn witnesses_lie_on_both(s in small_segment(), t in small_segment()) {
            match segment_intersection(&s, &t) {
                SegmentIntersection::Empty => {}
                SegmentIntersection::SinglePoint(p) => {
                    prop_assert!(s.contains(&p) && t.contains(&p));
                }
                SegmentIntersection::SubSegment(o) => {
                    for p in [o.a(), o.b(), &o.a().midpoint(o.b())] {
                        prop_assert!(s.contains(p) && t.contains(p));
                    }
                }
            }
        }
    }
}
