//! Headless grid coverage planning.
//!
//! An agent with a cone field of view greedily descends a distance field
//! that measures, for every seen traversable cell, the number of von Neumann
//! steps to the nearest still-unseen cell. Walking downhill on that field
//! reaches new territory every time, so every reachable cell is eventually
//! observed.
//!
//! The crate is organised bottom-up:
//!
//! - [`grid_map`]: map parsing, the three-state cell model, neighborhoods
//! - [`visibility`]: cone field of view with Bresenham occlusion
//! - [`ripple_field`]: the distance field (exact BFS and sweep relaxation)
//! - [`agent`]: the greedy step policy
//! - [`sim`]: tick orchestration and episode records
//! - [`bench`]: multi-episode benchmark harness and CSV output
//! - [`maps`]: bundled 48×48 scenario fixtures
//! - [`render`]: ASCII and PPM frame output

pub mod agent;
pub mod bench;
pub mod error;
pub mod grid_map;
pub mod maps;
pub mod render;
pub mod ripple_field;
pub mod rng;
pub mod sim;
pub mod visibility;

pub use agent::{apply_step, choose_step, AgentState, StepDecision};
pub use bench::{run_bench, summarize, BenchConfig, BenchReport, BenchSummary};
pub use error::{Error, MapParseError, Result};
pub use grid_map::{coverage_stats, parse_map, CellState, Coord, CoverageStats, GridMap, ParsedMap, Region};
pub use maps::{load_scenarios, Scenario, ScenarioSet};
pub use ripple_field::{bfs_oracle, propagate, relax_sweep, DistanceField, FieldMode};
pub use rng::SplitMix64;
pub use sim::{run_episode, Episode, EpisodeRecord, SimConfig, Termination, TickOutcome};
pub use visibility::{apply_vision, line_of_sight, visible_set, FovCone, Heading};
