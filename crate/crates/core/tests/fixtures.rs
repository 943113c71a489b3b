use sha2::{Digest, Sha256};

use ripplefront_core::maps::{scenario_source, SCENARIO_NAMES};
use ripplefront_core::{load_scenarios, parse_map};

const PINNED: [(&str, &str); 4] = [
    ("square", "e4eaab680292f2b35ab7c5c295f6568b787a35b9d19e6aab9a6f4bf33097c3a4"),
    ("passages", "e4ccae0ba61e227b5d821dee008ecc0acd6b05c5194784f64de82155a53b13a9"),
    ("docks", "92aed1f42e42d76b0d3523800251ba2edd92a5b25d5126ec223d93489be7fef5"),
    ("hall", "c15a1f7b37c759db1b8fda36b6d121fd8a60d33c8cebc7a50f9615b209584a8f"),
];

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn fixture_checksums_are_pinned() {
    for (name, want) in PINNED {
        let text = scenario_source(name).unwrap();
        assert_eq!(hex(&Sha256::digest(text.as_bytes())), want, "{name}.map changed");
    }
}

#[test]
fn embedded_fixtures_match_files() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../maps");
    for name in SCENARIO_NAMES {
        let on_disk = std::fs::read_to_string(dir.join(format!("{name}.map"))).unwrap();
        assert_eq!(on_disk, scenario_source(name).unwrap());
    }
}

#[test]
fn every_scenario_is_one_component() {
    let set = load_scenarios().unwrap();
    assert_eq!(set.scenarios.len(), 4);
    for s in &set.scenarios {
        for probe in s.map.traversable_coords().step_by(97) {
            assert_eq!(s.map.reachable_set(probe).unwrap().len(), s.map.traversable_count(), "{}", s.name);
        }
    }
}

#[test]
fn fixtures_round_trip_through_the_emitter() {
    for name in SCENARIO_NAMES {
        let text = scenario_source(name).unwrap();
        let parsed = parse_map(text).unwrap();
        assert_eq!(parsed.map.to_map_string(parsed.start), text);
    }
}
