use thiserror::Error;

use super::data_lines;
use crate::delaunay::{ConstraintSet, MeshError, SiteSet};
use crate::geometry::number::ParseNumberError;
use crate::geometry::{Point, Segment};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstraintFileError {
    #[error("line {line}: expected four coordinates, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: {source}")]
    Number { line: usize, source: ParseNumberError },
    #[error("line {line}: segment endpoints coincide")]
    Degenerate { line: usize },
    #[error("line {line}: endpoint {point} is not a site")]
    UnknownEndpoint { line: usize, point: Box<Point> },
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

/// Segments of a constraint file (`x1 y1 x2 y2` per line) with their line numbers.
pub fn parse_segments(text: &str) -> Result<Vec<(usize, Segment)>, ConstraintFileError> {
    data_lines(text)
        .map(|(line, text)| {
            let f: Vec<&str> = text.split_whitespace().collect();
            if f.len() != 4 {
                return Err(ConstraintFileError::FieldCount { line, found: f.len() });
            }
            let number = |source| ConstraintFileError::Number { line, source };
            let a = Point::parse(f[0], f[1]).map_err(number)?;
            let b = Point::parse(f[2], f[3]).map_err(number)?;
            let seg = Segment::new(a, b).map_err(|_| ConstraintFileError::Degenerate { line })?;
            Ok((line, seg))
        })
        .collect()
}

/// Constraint file resolved against `sites` by exact endpoint match.
pub fn parse_constraint_file(text: &str, sites: &SiteSet) -> Result<ConstraintSet, ConstraintFileError> {
    let mut pairs = Vec::new();
    for (line, seg) in parse_segments(text)? {
        let index = |p: &Point| {
            sites.index_of(p).ok_or_else(|| ConstraintFileError::UnknownEndpoint {
                line,
                point: Box::new(p.clone()),
            })
        };
        pairs.push((index(seg.a())?, index(seg.b())?));
    }
    Ok(ConstraintSet::new(sites, &pairs)?)
}
