//! Cone field of view with Bresenham occlusion.
//!
//! A cell is visible when its center lies within `range` (Euclidean,
//! center-to-center) of the observer, the angle between the heading and the
//! offset to it is at most `half_angle`, and no wall lies strictly between
//! the two on the Bresenham line. Walls can themselves be visible; only
//! traversable cells are ever marked seen.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid_map::{CellState, Coord, GridMap};

/// Slack for the range and angle comparisons so cells exactly on the
/// boundary (e.g. a diagonal at 45°) stay included despite rounding.
const BOUNDARY_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heading {
    North,
    East,
    South,
    West,
}

impl Heading {
    /// Neighbor evaluation order, clockwise from north.
    pub const ALL: [Heading; 4] = [Heading::North, Heading::East, Heading::South, Heading::West];

    /// Unit vector in grid coordinates (y grows downwards).
    pub fn delta(self) -> (isize, isize) {
        match self {
            Heading::North => (0, -1),
            Heading::East => (1, 0),
            Heading::South => (0, 1),
            Heading::West => (-1, 0),
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Heading::North => '^',
            Heading::East => '>',
            Heading::South => 'v',
            Heading::West => '<',
        }
    }

    pub fn mirror_x(self) -> Heading {
        match self {
            Heading::East => Heading::West,
            Heading::West => Heading::East,
            h => h,
        }
    }

    pub fn mirror_y(self) -> Heading {
        match self {
            Heading::North => Heading::South,
            Heading::South => Heading::North,
            h => h,
        }
    }
}

impl fmt::Display for Heading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Heading::North => "n",
            Heading::East => "e",
            Heading::South => "s",
            Heading::West => "w",
        };
        f.write_str(s)
    }
}

impl FromStr for Heading {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "n" | "north" => Ok(Heading::North),
            "e" | "east" => Ok(Heading::East),
            "s" | "south" => Ok(Heading::South),
            "w" | "west" => Ok(Heading::West),
            _ => Err(format!("invalid heading {s:?}, expected one of n, e, s, w")),
        }
    }
}

/// Vision parameters. `half_angle` is in degrees; 180 is omnidirectional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FovCone {
    range: f64,
    half_angle: f64,
}

impl FovCone {
    pub const DEFAULT_RANGE: f64 = 6.0;
    pub const DEFAULT_HALF_ANGLE: f64 = 45.0;

    pub fn new(range: f64, half_angle: f64) -> Result<Self> {
        if !(range > 0.0 && range.is_finite()) {
            return Err(Error::InvalidConfig(format!("fov range must be positive, got {range}")));
        }
        if !(half_angle > 0.0 && half_angle <= 180.0) {
            return Err(Error::InvalidConfig(format!(
                "fov half-angle must be in (0, 180] degrees, got {half_angle}"
            )));
        }
        Ok(Self { range, half_angle })
    }

    pub fn range(&self) -> f64 {
        self.range
    }

    pub fn half_angle(&self) -> f64 {
        self.half_angle
    }

    fn contains_offset(&self, dx: isize, dy: isize, heading: Heading) -> bool {
        if dx == 0 && dy == 0 {
            return true;
        }
        let (dx, dy) = (dx as f64, dy as f64);
        let dist_sq = dx * dx + dy * dy;
        if dist_sq > self.range * self.range + BOUNDARY_EPS {
            return false;
        }
        let (hx, hy) = heading.delta();
        let cos = (dx * hx as f64 + dy * hy as f64) / dist_sq.sqrt();
        cos >= self.half_angle.to_radians().cos() - BOUNDARY_EPS
    }
}

impl Default for FovCone {
    fn default() -> Self {
        Self { range: Self::DEFAULT_RANGE, half_angle: Self::DEFAULT_HALF_ANGLE }
    }
}

/// True when no wall lies strictly between `a` and `b` on the Bresenham line
/// traced from `a`.
///
/// The tracer works on absolute deltas with per-axis step signs, so the
/// traced cells are mirror-consistent under axis reflections. It is not
/// symmetric under swapping `a` and `b`.
pub fn line_of_sight(map: &GridMap, a: Coord, b: Coord) -> Result<bool> {
    map.check_bounds(a)?;
    map.check_bounds(b)?;
    Ok(clear_line(map, a, b))
}

fn clear_line(map: &GridMap, a: Coord, b: Coord) -> bool {
    if a == b {
        return true;
    }
    let (x0, y0) = (a.x as isize, a.y as isize);
    let (x1, y1) = (b.x as isize, b.y as isize);
    let dx = (x1 - x0).abs();
    let dy = -(y1 - y0).abs();
    let sx = if x0 < x1 { 1 } else { -1 };
    let sy = if y0 < y1 { 1 } else { -1 };
    let mut err = dx + dy;
    let (mut x, mut y) = (x0, y0);
    loop {
        let e2 = 2 * err;
        if e2 >= dy {
            err += dy;
            x += sx;
        }
        if e2 <= dx {
            err += dx;
            y += sy;
        }
        if x == x1 && y == y1 {
            return true;
        }
        let c = Coord::new(x as usize, y as usize);
        if map.cells()[map.index(c)] == CellState::Untraversable {
            return false;
        }
    }
}

fn for_each_visible(map: &GridMap, pos: Coord, heading: Heading, cone: &FovCone, mut f: impl FnMut(Coord)) {
    let reach = cone.range.floor() as isize;
    let (px, py) = (pos.x as isize, pos.y as isize);
    let y_lo = (py - reach).max(0);
    let y_hi = (py + reach).min(map.height() as isize - 1);
    let x_lo = (px - reach).max(0);
    let x_hi = (px + reach).min(map.width() as isize - 1);
    for y in y_lo..=y_hi {
        for x in x_lo..=x_hi {
            let c = Coord::new(x as usize, y as usize);
            if cone.contains_offset(x - px, y - py, heading) && clear_line(map, pos, c) {
                f(c);
            }
        }
    }
}

/// Cells inside the cone with clear line of sight, in row-major order.
/// Always contains `pos`; may contain walls.
pub fn visible_set(map: &GridMap, pos: Coord, heading: Heading, cone: &FovCone) -> Result<Vec<Coord>> {
    map.check_bounds(pos)?;
    if !map.is_traversable(pos) {
        return Err(Error::PosUntraversable(pos));
    }
    let mut out = Vec::new();
    for_each_visible(map, pos, heading, cone, |c| out.push(c));
    Ok(out)
}

/// Marks every visible traversable cell seen and returns how many flipped.
/// `pos` itself is always seen afterwards.
pub fn apply_vision(map: &mut GridMap, pos: Coord, heading: Heading, cone: &FovCone) -> Result<usize> {
    let visible = visible_set(map, pos, heading, cone)?;
    let mut flipped = usize::from(map.mark_seen(pos));
    for c in visible {
        flipped += usize::from(map.mark_seen(c));
    }
    Ok(flipped)
}
