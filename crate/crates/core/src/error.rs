use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::grid_map::Coord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Problems with the text of a `.map` document. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapParseError {
    #[error("map is empty")]
    EmptyMap,
    #[error("line {line} has {found} columns, expected {expected}")]
    RaggedRows { line: usize, expected: usize, found: usize },
    #[error("illegal character {ch:?} at line {line}, column {column}")]
    IllegalChar { line: usize, column: usize, ch: char },
    #[error("second start marker at line {line}, column {column}")]
    MultipleStarts { line: usize, column: usize },
    #[error("map has no traversable cells")]
    NoTraversable,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] MapParseError),
    #[error("coordinate ({}, {}) is out of bounds", .0.x, .0.y)]
    OutOfBounds(Coord),
    #[error("start cell ({}, {}) is not traversable", .0.x, .0.y)]
    StartUntraversable(Coord),
    #[error("observer cell ({}, {}) is not traversable", .0.x, .0.y)]
    PosUntraversable(Coord),
    #[error("blocked step from ({}, {}) towards {dir:?}", .from.x, .from.y)]
    BlockedStep { from: Coord, dir: crate::visibility::Heading },
    #[error("field is {field_width}x{field_height} but map is {map_width}x{map_height}")]
    DimensionMismatch {
        field_width: usize,
        field_height: usize,
        map_width: usize,
        map_height: usize,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("no episode records to summarize")]
    EmptyInput,
    #[error("failed to load map {}: {source}", path.display())]
    MapLoad {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
