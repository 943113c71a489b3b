//! Greedy step policy: face and step towards the neighbor closest to an
//! unseen cell.

use crate::error::{Error, Result};
use crate::grid_map::{CellState, Coord, GridMap};
use crate::ripple_field::DistanceField;
use crate::visibility::Heading;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AgentState {
    pub pos: Coord,
    pub heading: Heading,
    /// Node-to-node moves so far. Turning is free and not counted.
    pub steps_taken: u64,
}

impl AgentState {
    pub fn new(pos: Coord, heading: Heading) -> Self {
        Self { pos, heading, steps_taken: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepDecision {
    Move(Heading),
    NoMove,
}

/// Argmin of the field over traversable neighbors, ties broken up, right,
/// down, left. Unseen neighbors count as 0 whatever the field says.
///
/// Yields `NoMove` when no traversable neighbor has a finite value. With a
/// consistent field that only happens once the field is complete or the
/// agent's own cell is cut off from every unseen cell.
pub fn choose_step(map: &GridMap, field: &DistanceField, state: &AgentState) -> StepDecision {
    let mut best: Option<(u32, Heading)> = None;
    for heading in Heading::ALL {
        let (dx, dy) = heading.delta();
        let Some(n) = map.offset(state.pos, dx, dy) else { continue };
        let value = match map.cells()[map.index(n)] {
            CellState::Untraversable => continue,
            CellState::Unseen => Some(0),
            CellState::Seen => field.get(n),
        };
        if let Some(v) = value {
            if best.map_or(true, |(b, _)| v < b) {
                best = Some((v, heading));
            }
        }
    }
    match best {
        Some((_, heading)) => StepDecision::Move(heading),
        None => StepDecision::NoMove,
    }
}

/// Moves one cell in `dir` and faces that way.
pub fn apply_step(map: &GridMap, state: &AgentState, dir: Heading) -> Result<AgentState> {
    let (dx, dy) = dir.delta();
    match map.offset(state.pos, dx, dy) {
        Some(target) if map.is_traversable(target) => Ok(AgentState {
            pos: target,
            heading: dir,
            steps_taken: state.steps_taken + 1,
        }),
        _ => Err(Error::BlockedStep { from: state.pos, dir }),
    }
}
