//! Text formats: site files, constraint files, element selectors and result documents.

mod constraints;
mod document;
mod selector;
mod sitefile;

pub use constraints::{parse_constraint_file, parse_segments, ConstraintFileError};
pub(crate) use document::point_record;
pub use document::{
    CellRecord, CheckRecord, DocumentError, EdgeRecord, QueryRecord, RegionRecord, ResultDocument, VoronoiRecord,
    WitnessRecord, SCHEMA,
};
pub use selector::{Selector, SelectorError};
pub use sitefile::{parse_site_file, write_site_file, SiteFileError, SITE_HEADER};

/// Lines that carry data: trimmed, non-blank and not `#` comments, with 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}
