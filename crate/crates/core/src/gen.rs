//! Seeded site generators, including deliberately degenerate layouts.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::delaunay::SiteSet;
use crate::geometry::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distribution {
    /// Independent coordinates on a 0.001 grid in `[0, 100)`.
    Uniform,
    /// Tight groups around a few random centres.
    Clustered,
    /// Up to twelve sites on the radius-5 circle centred at `(50, 50)`, the rest uniform.
    Cocircular,
    /// Most sites on a few grid lines, at least one site off them.
    CollinearHeavy,
}

impl Distribution {
    pub const ALL: [Distribution; 4] = [
        Distribution::Uniform,
        Distribution::Clustered,
        Distribution::Cocircular,
        Distribution::CollinearHeavy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Clustered => "clustered",
            Distribution::Cocircular => "cocircular",
            Distribution::CollinearHeavy => "collinear-heavy",
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Distribution {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Distribution, GenError> {
        Distribution::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| GenError::UnknownDistribution(s.to_string()))
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("site count must be between 3 and {MAX_SITES}, got {0}")]
    BadCount(usize),
    #[error("unknown distribution `{0}`")]
    UnknownDistribution(String),
}

/// Largest count every distribution can fill with distinct grid points.
pub const MAX_SITES: usize = 40_000;

/// Points `(±3,±4), (±4,±3), (±5,0), (0,±5)`.
const PYTHAGOREAN: [(i64, i64); 12] = [
    (5, 0),
    (4, 3),
    (3, 4),
    (0, 5),
    (-3, 4),
    (-4, 3),
    (-5, 0),
    (-4, -3),
    (-3, -4),
    (0, -5),
    (3, -4),
    (4, -3),
];

/// Milli-units: the grid every generator draws from.
fn milli(v: i64) -> BigRational {
    BigRational::new(BigInt::from(v), BigInt::from(1000))
}

struct Sink {
    points: Vec<Point>,
    seen: HashSet<(i64, i64)>,
}

impl Sink {
    fn push(&mut self, x: i64, y: i64) -> bool {
        if self.seen.insert((x, y)) {
            self.points.push(Point::new(milli(x), milli(y)));
            true
        } else {
            false
        }
    }
}

/// `n` distinct sites; identical `(n, seed, distribution)` gives identical output.
pub fn generate(n: usize, seed: u64, distribution: Distribution) -> Result<SiteSet, GenError> {
    if !(3..=MAX_SITES).contains(&n) {
        return Err(GenError::BadCount(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sink = Sink {
        points: Vec::with_capacity(n),
        seen: HashSet::with_capacity(n),
    };
    let uniform = |rng: &mut ChaCha8Rng| (rng.gen_range(0..100_000), rng.gen_range(0..100_000));
    match distribution {
        Distribution::Uniform => {
            while sink.points.len() < n {
                let (x, y) = uniform(&mut rng);
                sink.push(x, y);
            }
        }
        Distribution::Clustered => {
            let k = (n / 8).clamp(2, 6);
            let centres: Vec<(i64, i64)> = (0..k)
                .map(|_| (rng.gen_range(10_000..90_000), rng.gen_range(10_000..90_000)))
                .collect();
            while sink.points.len() < n {
                let (cx, cy) = centres[rng.gen_range(0..k)];
                let r = rng.gen_range(500..5_000);
                sink.push(cx + rng.gen_range(-r..=r), cy + rng.gen_range(-r..=r));
            }
        }
        Distribution::Cocircular => {
            let on_circle = n.min(PYTHAGOREAN.len());
            let start = rng.gen_range(0..PYTHAGOREAN.len());
            for i in 0..on_circle {
                let (x, y) = PYTHAGOREAN[(start + i) % PYTHAGOREAN.len()];
                sink.push(50_000 + 1000 * x, 50_000 + 1000 * y);
            }
            while sink.points.len() < n {
                let (x, y) = uniform(&mut rng);
                sink.push(x, y);
            }
        }
        Distribution::CollinearHeavy => {
            // horizontal, vertical and diagonal lines through integer points
            let lines = 1 + n / 10;
            let specs: Vec<(u8, i64)> = (0..lines)
                .map(|_| (rng.gen_range(0..3u8), rng.gen_range(10..90)))
                .collect();
            let off_line = (n / 5).max(1);
            while sink.points.len() < n - off_line {
                let (kind, c) = specs[rng.gen_range(0..lines)];
                let t: i64 = rng.gen_range(0..100);
                let (x, y) = match kind {
                    0 => (t, c),
                    1 => (c, t),
                    _ => (t, (t + c) % 100),
                };
                sink.push(1000 * x, 1000 * y);
            }
            while sink.points.len() < n {
                // half-integer coordinates miss every line above
                let (x, y) = (rng.gen_range(0..100) * 1000 + 500, rng.gen_range(0..100) * 1000 + 250);
                sink.push(x, y);
            }
        }
    }
    Ok(SiteSet::new(sink.points).expect("points are distinct"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{orientation, Orientation};

    #[test]
    fn deterministic_and_distinct() {
        for d in Distribution::ALL {
            for n in [3, 8, 40] {
                let a = generate(n, 7, d).unwrap();
                assert_eq!(a.len(), n);
                assert_eq!(a, generate(n, 7, d).unwrap());
            }
        }
        assert_ne!(
            generate(10, 1, Distribution::Uniform),
            generate(10, 2, Distribution::Uniform)
        );
        assert_eq!(generate(2, 1, Distribution::Uniform), Err(GenError::BadCount(2)));
        assert_eq!("collinear-heavy".parse(), Ok(Distribution::CollinearHeavy));
        assert!("gaussian".parse::<Distribution>().is_err());
    }

    #[test]
    fn cocircular_sites_share_a_circle() {
        let s = generate(8, 7, Distribution::Cocircular).unwrap();
        let centre = Point::from_ints(50, 50);
        let r2 = BigRational::from_integer(25.into());
        let on = s.points().iter().filter(|p| p.squared_distance(&centre) == r2).count();
        assert!(on >= 4);
    }

    #[test]
    fn collinear_heavy_is_not_all_collinear() {
        for seed in 0..20 {
            let s = generate(12, seed, Distribution::CollinearHeavy).unwrap();
            let pts = s.points();
            assert!((2..pts.len()).any(|k| orientation(&pts[0], &pts[1], &pts[k]) != Orientation::Collinear));
        }
    }
}
