use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::delaunay::{Edge, TriMesh};
use crate::proximity::Shape;
use crate::voronoi::VoronoiDiagram;

/// Names a mesh or diagram element on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    /// `t:<id>`, a closed triangle.
    Triangle(usize),
    /// `e:<i>-<j>`, a closed mesh edge.
    Edge(usize, usize),
    /// `v:<site>`, a site.
    Vertex(usize),
    /// `c:<site>`, the clipped Voronoi cell of a site.
    Cell(usize),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SelectorError {
    #[error("malformed selector `{0}` (expected t:<id>, e:<i>-<j>, v:<site> or c:<site>)")]
    Malformed(String),
    #[error("unknown selector `{0}`")]
    Unknown(Selector),
}

impl FromStr for Selector {
    type Err = SelectorError;

    fn from_str(s: &str) -> Result<Selector, SelectorError> {
        let bad = || SelectorError::Malformed(s.to_string());
        let num = |t: &str| -> Result<usize, SelectorError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "t" => Ok(Selector::Triangle(num(rest)?)),
            "v" => Ok(Selector::Vertex(num(rest)?)),
            "c" => Ok(Selector::Cell(num(rest)?)),
            "e" => {
                let (i, j) = rest.split_once('-').ok_or_else(bad)?;
                Ok(Selector::Edge(num(i)?, num(j)?))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Triangle(t) => write!(f, "t:{t}"),
            Selector::Edge(i, j) => write!(f, "e:{i}-{j}"),
            Selector::Vertex(v) => write!(f, "v:{v}"),
            Selector::Cell(c) => write!(f, "c:{c}"),
        }
    }
}

impl Selector {
    /// The selected element as a closed shape.
    pub fn resolve(self, m: &TriMesh, v: &VoronoiDiagram) -> Result<Shape, SelectorError> {
        let unknown = SelectorError::Unknown(self);
        match self {
            Selector::Triangle(t) => m.triangle_polygon(t).map(Shape::Polygon).map_err(|_| unknown),
            Selector::Edge(i, j) => {
                if i == j || !m.has_edge(i, j) {
                    return Err(unknown);
                }
                Ok(Shape::Segment(m.sites().segment(Edge::new(i, j))))
            }
            Selector::Vertex(s) => m.sites().get(s).map(|p| Shape::Point(p.clone())).map_err(|_| unknown),
            Selector::Cell(s) => v
                .cell(s)
                .map(|c| Shape::Polygon(c.polygon.clone()))
                .map_err(|_| unknown),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_text() {
        for s in ["t:0", "e:3-12", "v:7", "c:1"] {
            assert_eq!(s.parse::<Selector>().unwrap().to_string(), s);
        }
        for s in ["t:", "t:-1", "x:1", "e:1", "e:1-", "t:+1", "t 1", "e:1-2-3"] {
            assert!(s.parse::<Selector>().is_err(), "{s}");
        }
    }
}
