//! Orientation and in-circle predicates.
//!
//! Each predicate is first evaluated in interval arithmetic over the cached
//! coordinate enclosures. Only when the interval straddles zero is the
//! determinant recomputed exactly, on integer numerators over a common
//! denominator.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[cfg(test)]
use super::number::sign_of;
use super::number::{common_numerators, Scalar};
use super::{GeometryError, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    fn from_sign(sign: Ordering) -> Orientation {
        match sign {
            Ordering::Greater => Orientation::Ccw,
            Ordering::Less => Orientation::Cw,
            Ordering::Equal => Orientation::Collinear,
        }
    }

    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Position of a query point relative to a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CirclePosition {
    Inside,
    On,
    Outside,
}

/// Exact orientation of the triple `(a, b, c)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    Orientation::from_sign(orient_sign(a, b, c))
}

/// Sign of `(b - a) x (c - a)`.
pub(crate) fn orient_sign(a: &Point, b: &Point, c: &Point) -> Ordering {
    let filtered = (b.ix - a.ix) * (c.iy - a.iy) - (b.iy - a.iy) * (c.ix - a.ix);
    if let Some(sign) = filtered.sign() {
        return sign;
    }
    let [ax, ay, bx, by, cx, cy] = common_numerators([a.x(), a.y(), b.x(), b.y(), c.x(), c.y()]);
    let det = (bx - &ax) * (cy - &ay) - (by - &ay) * (cx - &ax);
    det.sign_cmp()
}

/// Exact value of `(b - a) x (c - a)`, twice the signed area of the triangle.
pub fn cross(a: &Point, b: &Point, c: &Point) -> Scalar {
    (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x())
}

/// Sign of the in-circle determinant: `Greater` when `d` is inside the circle
/// through `a, b, c` taken counterclockwise (reversed for a clockwise triple).
pub(crate) fn incircle_sign(a: &Point, b: &Point, c: &Point, d: &Point) -> Ordering {
    let (adx, ady) = (a.ix - d.ix, a.iy - d.iy);
    let (bdx, bdy) = (b.ix - d.ix, b.iy - d.iy);
    let (cdx, cdy) = (c.ix - d.ix, c.iy - d.iy);
    let filtered = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    if let Some(sign) = filtered.sign() {
        return sign;
    }
    let [ax, ay, bx, by, cx, cy, dx, dy] = common_numerators([a.x(), a.y(), b.x(), b.y(), c.x(), c.y(), d.x(), d.y()]);
    let (adx, ady) = (ax - &dx, ay - &dy);
    let (bdx, bdy) = (bx - &dx, by - &dy);
    let (cdx, cdy) = (cx - &dx, cy - &dy);
    let det = (&adx * &adx + &ady * &ady) * (&bdx * &cdy - &cdx * &bdy)
        + (&bdx * &bdx + &bdy * &bdy) * (&cdx * &ady - &adx * &cdy)
        + (&cdx * &cdx + &cdy * &cdy) * (&adx * &bdy - &bdx * &ady);
    det.sign_cmp()
}

/// Classifies `d` against the circle through the counterclockwise triple `a, b, c`.
pub fn in_circumcircle(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<CirclePosition, GeometryError> {
    if orient_sign(a, b, c) != Ordering::Greater {
        return Err(GeometryError::NotCcw);
    }
    Ok(match incircle_sign(a, b, c, d) {
        Ordering::Greater => CirclePosition::Inside,
        Ordering::Equal => CirclePosition::On,
        Ordering::Less => CirclePosition::Outside,
    })
}

/// In-circle test under a symbolic perturbation of the lifted points.
///
/// Site `i` is lifted to `x² + y² + ε^(i+1)`, so lower site indices carry the
/// dominant perturbation. The lifted determinant is linear in each lift, hence
/// a zero determinant is resolved by the first nonzero cofactor taken in
/// ascending site-index order. `abc` must be counterclockwise and the four
/// sites distinct; the answer is never "on the circle".
pub(crate) fn incircle_perturbed(points: &[Point], abcd: [usize; 4]) -> bool {
    let [a, b, c, d] = abcd.map(|i| &points[i]);
    match incircle_sign(a, b, c, d) {
        Ordering::Greater => return true,
        Ordering::Less => return false,
        Ordering::Equal => {}
    }
    let mut rows = [0usize, 1, 2, 3];
    rows.sort_by_key(|&r| abcd[r]);
    for row in rows {
        let others: Vec<&Point> = (0..4).filter(|&r| r != row).map(|r| &points[abcd[r]]).collect();
        let minor = orient_sign(others[0], others[1], others[2]);
        if minor == Ordering::Equal {
            continue;
        }
        // cofactor sign is (-1)^row for 0-based rows
        let cofactor = if row % 2 == 0 { minor } else { minor.reverse() };
        return cofactor == Ordering::Greater;
    }
    // Unreachable for distinct sites: any three of four cocircular points are not collinear.
    false
}

/// Circle through three points; the radius is kept squared so it stays exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircumCircle {
    pub center: Point,
    pub radius_sq: Scalar,
}

impl CircumCircle {
    /// Decimal approximation of the radius, for display only.
    pub fn approx_radius(&self) -> f64 {
        super::number::approx(&self.radius_sq).sqrt()
    }
}

pub fn circumcircle(a: &Point, b: &Point, c: &Point) -> Result<CircumCircle, GeometryError> {
    if orient_sign(a, b, c) == Ordering::Equal {
        return Err(GeometryError::CollinearInput);
    }
    let center = circumcenter_unchecked(a, b, c);
    let radius_sq = center.squared_distance(a);
    Ok(CircumCircle { center, radius_sq })
}

pub(crate) fn circumcenter_unchecked(a: &Point, b: &Point, c: &Point) -> Point {
    let bx = b.x() - a.x();
    let by = b.y() - a.y();
    let cx = c.x() - a.x();
    let cy = c.y() - a.y();
    let two = BigRational::from_integer(BigInt::from(2));
    let d = two * (&bx * &cy - &by * &cx);
    debug_assert!(!d.is_zero());
    let b2 = &bx * &bx + &by * &by;
    let c2 = &cx * &cx + &cy * &cy;
    let ux = (&cy * &b2 - &by * &c2) / &d;
    let uy = (&bx * &c2 - &cx * &b2) / &d;
    Point::new(a.x() + ux, a.y() + uy)
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        match self.sign() {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}
