//! The ripple distance field.
//!
//! For every traversable cell the field holds the number of von Neumann steps,
//! through traversable cells, to the nearest unseen cell. Unseen cells are the
//! sources and read 0; walls and seen cells cut off from every source read
//! [`UNREACHED`].
//!
//! Two ways to compute it:
//!
//! - [`bfs_oracle`]: multi-source breadth-first search, exact in one pass.
//! - [`relax_sweep`]: one in-place row-major pass of the wavefront update
//!   `D(n) = 1 + min D(neighbor)`. Repeated sweeps reach the same fixpoint.
//!
//! [`propagate`] is what the simulation calls once per tick.

use std::fmt;
use std::num::NonZeroU32;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid_map::{CellState, Coord, GridMap, NEIGHBOR_OFFSETS};

pub const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceField {
    width: usize,
    height: usize,
    values: Vec<u32>,
    complete: bool,
}

impl DistanceField {
    /// Sources at 0, everything else unreached: the starting state for
    /// sweep relaxation.
    pub fn seeded(map: &GridMap) -> Self {
        let values = map.cells().iter().map(|&c| if c == CellState::Unseen { 0 } else { UNREACHED }).collect();
        Self { width: map.width(), height: map.height(), values, complete: map.unseen_count() == 0 }
    }

    /// Arbitrary field contents, e.g. a stale field from an earlier tick.
    pub fn from_values(width: usize, height: usize, values: Vec<u32>) -> Result<Self> {
        if values.len() != width * height {
            return Err(Error::InvalidGrid(format!("{} values for a {width}x{height} field", values.len())));
        }
        Ok(Self { width, height, values, complete: false })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// `None` for unreached or out-of-bounds cells.
    pub fn get(&self, c: Coord) -> Option<u32> {
        if c.x >= self.width || c.y >= self.height {
            return None;
        }
        match self.values[c.y * self.width + c.x] {
            UNREACHED => None,
            v => Some(v),
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// True when the map had no unseen cell left when this field was computed.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    fn check_dims(&self, map: &GridMap) -> Result<()> {
        if self.width != map.width() || self.height != map.height() {
            return Err(Error::DimensionMismatch {
                field_width: self.width,
                field_height: self.height,
                map_width: map.width(),
                map_height: map.height(),
            });
        }
        Ok(())
    }

    fn reset_from(&mut self, map: &GridMap) {
        for (v, &c) in self.values.iter_mut().zip(map.cells()) {
            *v = if c == CellState::Unseen { 0 } else { UNREACHED };
        }
        self.complete = !self.values.contains(&0);
    }
}

/// Whitespace-separated integers, `.` for unreached, one row per line.
impl fmt::Display for DistanceField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.values.chunks(self.width) {
            for (i, &v) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                if v == UNREACHED {
                    f.write_str(".")?;
                } else {
                    write!(f, "{v}")?;
                }
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FieldMode {
    /// Exact recomputation every tick.
    #[default]
    Fixpoint,
    /// At most `k` relaxation sweeps per tick after invalidating seen cells.
    Sweeps(NonZeroU32),
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Fixpoint => f.write_str("fixpoint"),
            FieldMode::Sweeps(k) => write!(f, "sweeps:{k}"),
        }
    }
}

impl FromStr for FieldMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "fixpoint" {
            return Ok(FieldMode::Fixpoint);
        }
        let k = s
            .strip_prefix("sweeps:")
            .ok_or_else(|| format!("invalid field mode {s:?}, expected fixpoint or sweeps:K"))?;
        let k: NonZeroU32 = k.parse().map_err(|_| format!("invalid sweep count {k:?}, expected a positive integer"))?;
        Ok(FieldMode::Sweeps(k))
    }
}

/// Multi-source BFS from every unseen cell through traversable cells.
pub fn bfs_oracle(map: &GridMap) -> DistanceField {
    let mut field = DistanceField::seeded(map);
    let mut queue = Vec::with_capacity(map.len());
    bfs_into(map, &mut field, &mut queue);
    field
}

fn bfs_into(map: &GridMap, field: &mut DistanceField, queue: &mut Vec<(u32, u32)>) {
    field.reset_from(map);
    let (w, h) = (map.width(), map.height());
    queue.clear();
    queue.extend(
        field.values.iter().enumerate().filter(|(_, &v)| v == 0).map(|(i, _)| ((i % w) as u32, (i / w) as u32)),
    );
    let cells = map.cells();
    let values = &mut field.values;
    let mut head = 0;
    while head < queue.len() {
        let (x, y) = queue[head];
        head += 1;
        let (xu, yu) = (x as usize, y as usize);
        let i = yu * w + xu;
        let next = values[i] + 1;
        let mut visit = |j: usize, nx: u32, ny: u32| {
            if values[j] == UNREACHED && cells[j].is_traversable() {
                values[j] = next;
                queue.push((nx, ny));
            }
        };
        if yu > 0 {
            visit(i - w, x, y - 1);
        }
        if xu + 1 < w {
            visit(i + 1, x + 1, y);
        }
        if yu + 1 < h {
            visit(i + w, x, y + 1);
        }
        if xu > 0 {
            visit(i - 1, x - 1, y);
        }
    }
}

/// One in-place row-major pass. Seen cells take `1 + min` over traversable
/// neighbors (unreached counts as infinity), unseen cells are pinned to 0 and
/// walls to unreached. Returns whether any entry changed.
pub fn relax_sweep(map: &GridMap, field: &mut DistanceField) -> Result<bool> {
    field.check_dims(map)?;
    let cells = map.cells();
    let mut changed = false;
    for i in 0..cells.len() {
        let new = match cells[i] {
            CellState::Untraversable => UNREACHED,
            CellState::Unseen => 0,
            CellState::Seen => {
                let c = map.coord(i);
                let best = NEIGHBOR_OFFSETS
                    .iter()
                    .filter_map(|&(dx, dy)| map.offset(c, dx, dy))
                    .map(|n| map.index(n))
                    .filter(|&j| cells[j].is_traversable())
                    .map(|j| field.values[j])
                    .min()
                    .unwrap_or(UNREACHED);
                best.saturating_add(1)
            }
        };
        if field.values[i] != new {
            field.values[i] = new;
            changed = true;
        }
    }
    field.complete = !cells.contains(&CellState::Unseen);
    Ok(changed)
}

/// Brings `field` up to date with `map` for one tick.
///
/// Sweep mode first resets every seen cell to unreached: values computed
/// against an older, larger unseen set can be too small, and relaxation only
/// ever lowers values.
pub fn propagate(map: &GridMap, field: &mut DistanceField, mode: FieldMode) -> Result<()> {
    field.check_dims(map)?;
    match mode {
        FieldMode::Fixpoint => {
            let mut queue = Vec::with_capacity(map.len());
            bfs_into(map, field, &mut queue);
        }
        FieldMode::Sweeps(k) => {
            field.reset_from(map);
            for _ in 0..k.get() {
                if !relax_sweep(map, field)? {
                    break;
                }
            }
        }
    }
    Ok(())
}
