//! Episode lifecycle.
//!
//! Each tick runs, in order: propagate the field, pick a step, move, look.
//! An episode ends when every cell reachable from the start is seen (done),
//! when the agent has nowhere to go while reachable unseen cells remain
//! (stuck), or when the tick guard trips.

use crate::agent::{apply_step, choose_step, AgentState, StepDecision};
use crate::error::{Error, Result};
use crate::grid_map::{coverage_stats, CellState, Coord, CoverageStats, GridMap, Region};
use crate::ripple_field::{propagate, DistanceField, FieldMode};
use crate::rng::SplitMix64;
use crate::visibility::{apply_vision, FovCone, Heading};

/// Tick guard multiplier applied to the reachable cell count.
pub const DEFAULT_TICKS_PER_CELL: u64 = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub cone: FovCone,
    pub field_mode: FieldMode,
    /// `None` means `DEFAULT_TICKS_PER_CELL` × reachable cells.
    pub max_ticks: Option<u64>,
    /// Drives random start selection only.
    pub seed: u64,
    pub record_trace: bool,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            cone: FovCone::default(),
            field_mode: FieldMode::Fixpoint,
            max_ticks: None,
            seed: 0,
            record_trace: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TickOutcome {
    Continue,
    Done,
    Stuck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    Completed,
    Stuck,
    TickLimit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub tick: u64,
    pub unseen_percent: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EpisodeRecord {
    pub map_id: String,
    pub start: Coord,
    pub initial_heading: Heading,
    pub seed: u64,
    pub total_steps: u64,
    pub ticks: u64,
    pub completed: bool,
    pub termination: Termination,
    /// Traversable cells outside the start's component still unseen at the end.
    pub unreachable_unseen: usize,
    pub final_unseen_percent: f64,
    pub trace: Option<Vec<TracePoint>>,
}

fn reachable_unseen(map: &GridMap, reachable: &Region) -> usize {
    map.cells()
        .iter()
        .enumerate()
        .filter(|&(i, &c)| c == CellState::Unseen && reachable.contains_index(i))
        .count()
}

/// One tick on the given world state, updating `field` and `state` in place.
pub fn tick(
    map: &mut GridMap,
    field: &mut DistanceField,
    state: &mut AgentState,
    reachable: &Region,
    config: &SimConfig,
) -> Result<TickOutcome> {
    propagate(map, field, config.field_mode)?;
    match choose_step(map, field, state) {
        StepDecision::Move(dir) => {
            *state = apply_step(map, state, dir)?;
            apply_vision(map, state.pos, state.heading, &config.cone)?;
        }
        StepDecision::NoMove => {
            apply_vision(map, state.pos, state.heading, &config.cone)?;
            if reachable_unseen(map, reachable) > 0 {
                return Ok(TickOutcome::Stuck);
            }
        }
    }
    if reachable_unseen(map, reachable) == 0 {
        Ok(TickOutcome::Done)
    } else {
        Ok(TickOutcome::Continue)
    }
}

/// A running episode. [`run_episode`] drives one to completion; the renderer
/// steps it tick by tick.
#[derive(Debug, Clone)]
pub struct Episode {
    map: GridMap,
    reachable: Region,
    field: DistanceField,
    state: AgentState,
    config: SimConfig,
    start: Coord,
    initial_heading: Heading,
    max_ticks: u64,
    ticks: u64,
    termination: Option<Termination>,
    trace: Option<Vec<TracePoint>>,
}

impl Episode {
    /// Places the agent, marks the start seen and applies the initial vision.
    pub fn new(mut map: GridMap, start: Coord, heading: Heading, config: SimConfig) -> Result<Self> {
        map.check_bounds(start)?;
        if !map.is_traversable(start) {
            return Err(Error::StartUntraversable(start));
        }
        if config.max_ticks == Some(0) {
            return Err(Error::InvalidConfig("max_ticks must be at least 1".into()));
        }
        let reachable = map.reachable_set(start)?;
        map.mark_seen(start);
        apply_vision(&mut map, start, heading, &config.cone)?;
        let field = DistanceField::seeded(&map);
        let max_ticks = config.max_ticks.unwrap_or(DEFAULT_TICKS_PER_CELL * reachable.len() as u64);
        let mut episode = Self {
            map,
            reachable,
            field,
            state: AgentState::new(start, heading),
            trace: config.record_trace.then(Vec::new),
            config,
            start,
            initial_heading: heading,
            max_ticks,
            ticks: 0,
            termination: None,
        };
        episode.record_trace_point();
        if reachable_unseen(&episode.map, &episode.reachable) == 0 {
            episode.termination = Some(Termination::Completed);
        }
        Ok(episode)
    }

    fn record_trace_point(&mut self) {
        if self.trace.is_none() {
            return;
        }
        let point = TracePoint { tick: self.ticks, unseen_percent: self.stats().unseen_percent };
        if let Some(trace) = self.trace.as_mut() {
            trace.push(point);
        }
    }

    /// Advances one tick. A no-op returning `None` once the episode is over.
    pub fn step(&mut self) -> Result<Option<TickOutcome>> {
        if self.termination.is_some() {
            return Ok(None);
        }
        let outcome = tick(&mut self.map, &mut self.field, &mut self.state, &self.reachable, &self.config)?;
        self.ticks += 1;
        self.record_trace_point();
        self.termination = match outcome {
            TickOutcome::Done => Some(Termination::Completed),
            TickOutcome::Stuck => Some(Termination::Stuck),
            TickOutcome::Continue if self.ticks >= self.max_ticks => Some(Termination::TickLimit),
            TickOutcome::Continue => None,
        };
        Ok(Some(outcome))
    }

    pub fn map(&self) -> &GridMap {
        &self.map
    }

    pub fn field(&self) -> &DistanceField {
        &self.field
    }

    pub fn state(&self) -> &AgentState {
        &self.state
    }

    pub fn reachable(&self) -> &Region {
        &self.reachable
    }

    pub fn ticks(&self) -> u64 {
        self.ticks
    }

    pub fn max_ticks(&self) -> u64 {
        self.max_ticks
    }

    pub fn termination(&self) -> Option<Termination> {
        self.termination
    }

    pub fn is_finished(&self) -> bool {
        self.termination.is_some()
    }

    pub fn stats(&self) -> CoverageStats {
        coverage_stats(&self.map, &self.reachable)
    }

    /// Runs until termination and returns the record.
    pub fn finish(mut self, map_id: &str) -> Result<EpisodeRecord> {
        while self.step()?.is_some() {}
        let unreachable_unseen = self
            .map
            .cells()
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c == CellState::Unseen && !self.reachable.contains_index(i))
            .count();
        let termination = self.termination.expect("loop ends only on termination");
        Ok(EpisodeRecord {
            map_id: map_id.to_owned(),
            start: self.start,
            initial_heading: self.initial_heading,
            seed: self.config.seed,
            total_steps: self.state.steps_taken,
            ticks: self.ticks,
            completed: termination == Termination::Completed,
            termination,
            unreachable_unseen,
            final_unseen_percent: self.stats().unseen_percent,
            trace: self.trace,
        })
    }
}

pub fn run_episode(
    map: &GridMap,
    map_id: &str,
    start: Coord,
    initial_heading: Heading,
    config: &SimConfig,
) -> Result<EpisodeRecord> {
    Episode::new(map.clone(), start, initial_heading, config.clone())?.finish(map_id)
}

/// Uniform draw over traversable cells.
pub fn random_start(map: &GridMap, rng: &mut SplitMix64) -> Coord {
    let count = map.traversable_count() as u64;
    let pick = rng.below(count) as usize;
    map.traversable_coords().nth(pick).expect("pick is below the traversable count")
}
