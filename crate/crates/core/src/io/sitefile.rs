use std::collections::HashMap;
use std::fmt::Write;

use thiserror::Error;

use super::data_lines;
use crate::delaunay::SiteSet;
use crate::geometry::number::{format_exact, ParseNumberError};
use crate::geometry::Point;

/// First data line of every site file.
pub const SITE_HEADER: &str = "DELPROX-SITES 1";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SiteFileError {
    #[error("missing `{SITE_HEADER}` header")]
    MissingHeader,
    #[error("line {line}: unsupported header `{found}`")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected two coordinates, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: {source}")]
    Number { line: usize, source: ParseNumberError },
    #[error("line {line}: duplicate of the site on line {first_line} at {point}")]
    Duplicate {
        line: usize,
        first_line: usize,
        point: Box<Point>,
    },
}

/// Parses a site file: a header line, then one `x y` pair of decimal literals per line.
pub fn parse_site_file(text: &str) -> Result<SiteSet, SiteFileError> {
    let mut lines = data_lines(text);
    match lines.next() {
        None => return Err(SiteFileError::MissingHeader),
        Some((line, header)) => {
            if header.split_whitespace().collect::<Vec<_>>() != SITE_HEADER.split(' ').collect::<Vec<_>>() {
                return Err(if header.starts_with("DELPROX-SITES") {
                    SiteFileError::BadHeader {
                        line,
                        found: header.to_string(),
                    }
                } else {
                    SiteFileError::MissingHeader
                });
            }
        }
    }
    let mut points = Vec::new();
    let mut seen: HashMap<Point, usize> = HashMap::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(SiteFileError::FieldCount {
                line,
                found: fields.len(),
            });
        }
        let p = Point::parse(fields[0], fields[1]).map_err(|source| SiteFileError::Number { line, source })?;
        if let Some(&first_line) = seen.get(&p) {
            return Err(SiteFileError::Duplicate {
                line,
                first_line,
                point: Box::new(p),
            });
        }
        seen.insert(p.clone(), line);
        points.push(p);
    }
    Ok(SiteSet::new(points).expect("duplicates were rejected above"))
}

/// Site file text; coordinates that are not terminating decimals are written as `n/d`
/// and will not load back, so only decimal-valued sites round-trip.
pub fn write_site_file(sites: &SiteSet) -> String {
    let mut out = format!("{SITE_HEADER}\n");
    for p in sites.points() {
        writeln!(out, "{} {}", format_exact(p.x()), format_exact(p.y())).expect("write to string");
    }
    out
}
