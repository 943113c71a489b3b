//! Fixtures shared by the engine benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ripplefront_core::{CellState, Coord, GridMap};

/// Random map with the given wall density; roughly `seen_ratio` of the
/// open cells start out seen. Same seed gives the same map.
pub fn random_map(width: usize, height: usize, wall_density: f64, seen_ratio: f64, seed: u64) -> GridMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells = (0..width * height)
        .map(|_| {
            if rng.gen_bool(wall_density) {
                CellState::Untraversable
            } else if rng.gen_bool(seen_ratio) {
                CellState::Seen
            } else {
                CellState::Unseen
            }
        })
        .collect();
    GridMap::from_cells(width, height, cells).expect("dimensions match")
}

/// A mostly explored map: everything seen except a few scattered frontier cells.
pub fn sparse_frontier(map: &GridMap, frontier: usize, seed: u64) -> GridMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let open: Vec<Coord> = map.traversable_coords().collect();
    let keep: Vec<Coord> = (0..frontier).map(|_| open[rng.gen_range(0..open.len())]).collect();
    let mut out = map.clone();
    for c in open {
        if !keep.contains(&c) {
            out.mark_seen(c);
        }
    }
    out
}

/// An interior traversable cell, for vision benchmarks.
pub fn central_open_cell(map: &GridMap) -> Coord {
    let center = Coord::new(map.width() / 2, map.height() / 2);
    map.traversable_coords().min_by_key(|c| c.manhattan(center)).expect("map has open cells")
}
