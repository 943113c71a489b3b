//! Grid representation: the three-state cell model, map parsing and
//! von Neumann neighborhood queries.
//!
//! Map documents are line-oriented ASCII:
//!
//! ```text
//! #####
//! #S..#
//! #..##
//! #####
//! ```
//!
//! `#` is untraversable, `.` is traversable, `S` is traversable and marks the
//! start (at most one). Every non-blank line must have the same length; LF and
//! CRLF line endings are both accepted and trailing blank lines are ignored.

use std::fmt;

use crate::error::{Error, MapParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellState {
    Untraversable,
    Unseen,
    Seen,
}

impl CellState {
    pub fn is_traversable(self) -> bool {
        !matches!(self, CellState::Untraversable)
    }
}

/// Column/row position in node units, origin at the top-left cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub x: usize,
    pub y: usize,
}

impl Coord {
    pub const fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }

    pub fn manhattan(self, other: Coord) -> usize {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Neighbor offsets in the fixed evaluation order: up, right, down, left.
pub(crate) const NEIGHBOR_OFFSETS: [(isize, isize); 4] = [(0, -1), (1, 0), (0, 1), (-1, 0)];

/// Rectangular lattice of cells stored row-major.
///
/// The only mutation offered is [`GridMap::mark_seen`], so a cell can never
/// become unseen again and walls never change.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridMap {
    width: usize,
    height: usize,
    cells: Vec<CellState>,
}

impl GridMap {
    pub fn from_cells(width: usize, height: usize, cells: Vec<CellState>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidGrid(format!("dimensions {width}x{height} must be positive")));
        }
        if cells.len() != width * height {
            return Err(Error::InvalidGrid(format!(
                "{} cells supplied for a {width}x{height} grid",
                cells.len()
            )));
        }
        if !cells.iter().any(|c| c.is_traversable()) {
            return Err(MapParseError::NoTraversable.into());
        }
        Ok(Self { width, height, cells })
    }

    /// An all-traversable, all-unseen rectangle.
    pub fn open(width: usize, height: usize) -> Result<Self> {
        Self::from_cells(width, height, vec![CellState::Unseen; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[CellState] {
        &self.cells
    }

    pub fn in_bounds(&self, c: Coord) -> bool {
        c.x < self.width && c.y < self.height
    }

    pub fn index(&self, c: Coord) -> usize {
        c.y * self.width + c.x
    }

    pub fn coord(&self, index: usize) -> Coord {
        Coord::new(index % self.width, index / self.width)
    }

    pub fn get(&self, c: Coord) -> Option<CellState> {
        self.in_bounds(c).then(|| self.cells[self.index(c)])
    }

    pub fn is_traversable(&self, c: Coord) -> bool {
        self.get(c).is_some_and(CellState::is_traversable)
    }

    pub(crate) fn check_bounds(&self, c: Coord) -> Result<()> {
        if self.in_bounds(c) {
            Ok(())
        } else {
            Err(Error::OutOfBounds(c))
        }
    }

    /// Flips an unseen cell to seen. Returns whether a transition happened.
    pub fn mark_seen(&mut self, c: Coord) -> bool {
        if !self.in_bounds(c) {
            return false;
        }
        let i = self.index(c);
        if self.cells[i] == CellState::Unseen {
            self.cells[i] = CellState::Seen;
            true
        } else {
            false
        }
    }

    pub fn traversable_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_traversable()).count()
    }

    pub fn unseen_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c == CellState::Unseen).count()
    }

    pub fn traversable_coords(&self) -> impl Iterator<Item = Coord> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_traversable())
            .map(|(i, _)| self.coord(i))
    }

    /// In-bounds von Neumann neighbors of `c`, ordered up, right, down, left.
    /// Traversability is not filtered.
    pub fn neighbors(&self, c: Coord) -> Result<Vec<Coord>> {
        self.check_bounds(c)?;
        Ok(self.neighbor_iter(c).collect())
    }

    pub(crate) fn neighbor_iter(&self, c: Coord) -> impl Iterator<Item = Coord> + '_ {
        NEIGHBOR_OFFSETS.iter().filter_map(move |&(dx, dy)| self.offset(c, dx, dy))
    }

    pub(crate) fn offset(&self, c: Coord, dx: isize, dy: isize) -> Option<Coord> {
        let x = c.x.checked_add_signed(dx)?;
        let y = c.y.checked_add_signed(dy)?;
        let n = Coord::new(x, y);
        self.in_bounds(n).then_some(n)
    }

    /// Flood fill over traversable cells from `from`.
    pub fn reachable_set(&self, from: Coord) -> Result<Region> {
        self.check_bounds(from)?;
        if !self.is_traversable(from) {
            return Err(Error::StartUntraversable(from));
        }
        let mut mask = vec![false; self.cells.len()];
        let mut stack = vec![from];
        mask[self.index(from)] = true;
        let mut len = 1;
        while let Some(c) = stack.pop() {
            for n in self.neighbor_iter(c) {
                let i = self.index(n);
                if !mask[i] && self.cells[i].is_traversable() {
                    mask[i] = true;
                    len += 1;
                    stack.push(n);
                }
            }
        }
        Ok(Region { width: self.width, mask, len })
    }

    /// Emits the map document for this grid. Seen and unseen cells both
    /// serialize as `.`; the parse→emit cycle is byte-exact for canonical
    /// documents (LF endings, one trailing newline).
    pub fn to_map_string(&self, start: Option<Coord>) -> String {
        let mut out = String::with_capacity((self.width + 1) * self.height);
        for y in 0..self.height {
            for x in 0..self.width {
                let c = Coord::new(x, y);
                let ch = if Some(c) == start {
                    'S'
                } else if self.cells[self.index(c)].is_traversable() {
                    '.'
                } else {
                    '#'
                };
                out.push(ch);
            }
            out.push('\n');
        }
        out
    }
}

/// A set of cells of one grid, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    width: usize,
    mask: Vec<bool>,
    len: usize,
}

impl Region {
    pub fn contains(&self, c: Coord) -> bool {
        c.x < self.width && self.mask.get(c.y * self.width + c.x).copied().unwrap_or(false)
    }

    pub(crate) fn contains_index(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Coord> + '_ {
        let w = self.width;
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(move |(i, _)| Coord::new(i % w, i / w))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageStats {
    pub total_traversable: usize,
    pub unseen: usize,
    pub unseen_percent: f64,
}

/// Coverage counts restricted to `reachable`.
pub fn coverage_stats(map: &GridMap, reachable: &Region) -> CoverageStats {
    let mut total = 0;
    let mut unseen = 0;
    for (i, &cell) in map.cells.iter().enumerate() {
        if reachable.contains_index(i) && cell.is_traversable() {
            total += 1;
            if cell == CellState::Unseen {
                unseen += 1;
            }
        }
    }
    let unseen_percent = if total == 0 { 0.0 } else { 100.0 * unseen as f64 / total as f64 };
    CoverageStats { total_traversable: total, unseen, unseen_percent }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedMap {
    pub map: GridMap,
    pub start: Option<Coord>,
}

pub fn parse_map(text: &str) -> Result<ParsedMap, MapParseError> {
    let mut lines: Vec<&str> = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    let Some(first) = lines.first() else {
        return Err(MapParseError::EmptyMap);
    };
    let width = first.chars().count();

    let mut cells = Vec::with_capacity(width * lines.len());
    let mut start = None;
    for (row, line) in lines.iter().enumerate() {
        let mut found = 0;
        for (col, ch) in line.chars().enumerate() {
            let cell = match ch {
                '#' => CellState::Untraversable,
                '.' => CellState::Unseen,
                'S' => {
                    if start.is_some() {
                        return Err(MapParseError::MultipleStarts { line: row + 1, column: col + 1 });
                    }
                    start = Some(Coord::new(col, row));
                    CellState::Unseen
                }
                ch => return Err(MapParseError::IllegalChar { line: row + 1, column: col + 1, ch }),
            };
            cells.push(cell);
            found += 1;
        }
        if found != width {
            return Err(MapParseError::RaggedRows { line: row + 1, expected: width, found });
        }
    }
    if width == 0 {
        return Err(MapParseError::EmptyMap);
    }
    if !cells.iter().any(|c| c.is_traversable()) {
        return Err(MapParseError::NoTraversable);
    }
    let map = GridMap { width, height: lines.len(), cells };
    Ok(ParsedMap { map, start })
}
