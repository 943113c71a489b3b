//! Frame output: ASCII text and binary PPM (P6), one cell per glyph/pixel.
//!
//! ASCII frames look like
//!
//! ```text
//! tick=1 unseen=20.0%
//! ·@··█
//! agent=(1,0) heading=>
//! ```
//!
//! `#` wall, `·` seen, `█` unseen, `@` agent.

use std::fmt::Write as _;

use crate::agent::AgentState;
use crate::grid_map::{CellState, Coord, CoverageStats, GridMap};
use crate::ripple_field::DistanceField;

pub const PPM_WALL: [u8; 3] = [64, 64, 64];
pub const PPM_UNSEEN: [u8; 3] = [16, 16, 16];
pub const PPM_SEEN: [u8; 3] = [200, 200, 200];
pub const PPM_AGENT: [u8; 3] = [220, 40, 40];

pub fn render_ascii(map: &GridMap, agent: &AgentState, tick: u64, stats: &CoverageStats) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tick={tick} unseen={:.1}%", stats.unseen_percent);
    for y in 0..map.height() {
        for x in 0..map.width() {
            let c = Coord::new(x, y);
            let glyph = if c == agent.pos {
                '@'
            } else {
                match map.cells()[map.index(c)] {
                    CellState::Untraversable => '#',
                    CellState::Seen => '·',
                    CellState::Unseen => '█',
                }
            };
            out.push(glyph);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "agent=({},{}) heading={}", agent.pos.x, agent.pos.y, agent.heading.glyph());
    out
}

/// ASCII frame followed by a blank line and the field dump.
pub fn render_ascii_with_field(
    map: &GridMap,
    agent: &AgentState,
    tick: u64,
    stats: &CoverageStats,
    field: &DistanceField,
) -> String {
    let mut out = render_ascii(map, agent, tick, stats);
    out.push('\n');
    out.push_str(&field.to_string());
    out
}

pub fn render_ppm(map: &GridMap, agent: &AgentState) -> Vec<u8> {
    let header = format!("P6\n{} {}\n255\n", map.width(), map.height());
    let mut out = Vec::with_capacity(header.len() + map.len() * 3);
    out.extend_from_slice(header.as_bytes());
    for (i, &cell) in map.cells().iter().enumerate() {
        let rgb = if map.coord(i) == agent.pos {
            PPM_AGENT
        } else {
            match cell {
                CellState::Untraversable => PPM_WALL,
                CellState::Unseen => PPM_UNSEEN,
                CellState::Seen => PPM_SEEN,
            }
        };
        out.extend_from_slice(&rgb);
    }
    out
}
