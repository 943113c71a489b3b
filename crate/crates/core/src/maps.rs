//! The four bundled 48×48 scenarios, embedded from the workspace `maps/`
//! directory.

use crate::error::{Error, Result};
use crate::grid_map::{parse_map, GridMap};

pub const SCENARIO_NAMES: [&str; 4] = ["square", "passages", "docks", "hall"];

const SOURCES: [(&str, &str); 4] = [
    ("square", include_str!("../../../maps/square.map")),
    ("passages", include_str!("../../../maps/passages.map")),
    ("docks", include_str!("../../../maps/docks.map")),
    ("hall", include_str!("../../../maps/hall.map")),
];

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: &'static str,
    pub map: GridMap,
}

#[derive(Debug, Clone)]
pub struct ScenarioSet {
    pub scenarios: Vec<Scenario>,
}

impl ScenarioSet {
    pub fn get(&self, name: &str) -> Option<&Scenario> {
        self.scenarios.iter().find(|s| s.name == name)
    }

    /// `(id, map)` pairs in bundle order, as the bench harness takes them.
    pub fn named_maps(&self) -> Vec<(String, GridMap)> {
        self.scenarios.iter().map(|s| (s.name.to_owned(), s.map.clone())).collect()
    }
}

/// Raw text of a bundled map.
pub fn scenario_source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Parses all bundled maps and checks that each is one connected component
/// and that they share a grid size.
pub fn load_scenarios() -> Result<ScenarioSet> {
    let mut scenarios = Vec::with_capacity(SOURCES.len());
    for (name, text) in SOURCES {
        let map = parse_map(text)?.map;
        let first = map.traversable_coords().next().expect("parse guarantees a traversable cell");
        let reachable = map.reachable_set(first)?.len();
        if reachable != map.traversable_count() {
            return Err(Error::InvalidGrid(format!(
                "scenario {name} is disconnected: {reachable} of {} cells reachable",
                map.traversable_count()
            )));
        }
        scenarios.push(Scenario { name, map });
    }
    let (w, h) = (scenarios[0].map.width(), scenarios[0].map.height());
    if let Some(s) = scenarios.iter().find(|s| (s.map.width(), s.map.height()) != (w, h)) {
        return Err(Error::InvalidGrid(format!("scenario {} is not {w}x{h}", s.name)));
    }
    Ok(ScenarioSet { scenarios })
}
