use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Zero};

use super::number::{self, ExactDisplay, Interval, ParseNumberError, Scalar};
use super::GeometryError;

/// A planar point with exact rational coordinates.
///
/// Each point also carries a floating-point enclosure of its coordinates so
/// that predicates can usually be decided without touching big integers.
#[derive(Clone)]
pub struct Point {
    x: Scalar,
    y: Scalar,
    pub(crate) ix: Interval,
    pub(crate) iy: Interval,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Point {
        let ix = Interval::enclose(&x);
        let iy = Interval::enclose(&y);
        Point { x, y, ix, iy }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    /// Converts binary floating-point coordinates exactly. Non-finite values are rejected.
    pub fn from_f64(x: f64, y: f64) -> Result<Point, GeometryError> {
        match (BigRational::from_f64(x), BigRational::from_f64(y)) {
            (Some(x), Some(y)) => Ok(Point::new(x, y)),
            _ => Err(GeometryError::NonFinite),
        }
    }

    /// Parses two decimal literals.
    pub fn parse(x: &str, y: &str) -> Result<Point, ParseNumberError> {
        Ok(Point::new(number::parse_decimal(x)?, number::parse_decimal(y)?))
    }

    pub fn origin() -> Point {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn y(&self) -> &Scalar {
        &self.y
    }

    /// Approximate coordinates for rendering.
    pub fn to_f64(&self) -> (f64, f64) {
        (number::approx(&self.x), number::approx(&self.y))
    }

    pub fn squared_distance(&self, other: &Point) -> Scalar {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = BigRational::from_integer(2.into());
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Scalar) -> Point {
        Point::new(&self.x + t * (&other.x - &self.x), &self.y + t * (&other.y - &self.y))
    }
}

impl PartialEq for Point {
    fn eq(&self, other: &Point) -> bool {
        self.x == other.x && self.y == other.y
    }
}

impl Eq for Point {}

impl Hash for Point {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.x.hash(state);
        self.y.hash(state);
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Point) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on `(x, y)`.
impl Ord for Point {
    fn cmp(&self, other: &Point) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", ExactDisplay(&self.x), ExactDisplay(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
