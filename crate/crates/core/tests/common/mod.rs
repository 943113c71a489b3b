//! Shared fixtures for integration tests: seeded random grids and an
//! independent distance oracle.

#![allow(dead_code)]

use std::collections::VecDeque;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ripplefront_core::{CellState, Coord, GridMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random `w`×`h` grid: wall density drawn from 0–40%, the remaining cells
/// split between seen and unseen with a random ratio.
pub fn random_grid(rng: &mut ChaCha8Rng, w: usize, h: usize) -> GridMap {
    let wall_density: f64 = rng.gen_range(0.0..=0.4);
    let unseen_ratio: f64 = rng.gen_range(0.0..=1.0);
    let mut cells: Vec<CellState> = (0..w * h)
        .map(|_| {
            if rng.gen_bool(wall_density) {
                CellState::Untraversable
            } else if rng.gen_bool(unseen_ratio) {
                CellState::Unseen
            } else {
                CellState::Seen
            }
        })
        .collect();
    if !cells.iter().any(|c| *c != CellState::Untraversable) {
        cells[0] = CellState::Seen;
    }
    GridMap::from_cells(w, h, cells).unwrap()
}

/// Distance from each cell to its nearest unseen cell by a separate
/// single-source search per cell. `None` for walls and cut-off cells.
pub fn nearest_unseen_by_search(map: &GridMap) -> Vec<Option<u32>> {
    let (w, h) = (map.width(), map.height());
    let state = |x: usize, y: usize| map.get(Coord::new(x, y)).unwrap();
    let mut out = vec![None; w * h];
    for y in 0..h {
        for x in 0..w {
            if state(x, y) == CellState::Untraversable {
                continue;
            }
            let mut dist = vec![u32::MAX; w * h];
            let mut queue = VecDeque::from([(x, y)]);
            dist[y * w + x] = 0;
            while let Some((cx, cy)) = queue.pop_front() {
                let d = dist[cy * w + cx];
                if state(cx, cy) == CellState::Unseen {
                    out[y * w + x] = Some(d);
                    break;
                }
                let mut push = |nx: usize, ny: usize| {
                    if state(nx, ny) != CellState::Untraversable && dist[ny * w + nx] == u32::MAX {
                        dist[ny * w + nx] = d + 1;
                        queue.push_back((nx, ny));
                    }
                };
                if cy > 0 {
                    push(cx, cy - 1);
                }
                if cx + 1 < w {
                    push(cx + 1, cy);
                }
                if cy + 1 < h {
                    push(cx, cy + 1);
                }
                if cx > 0 {
                    push(cx - 1, cy);
                }
            }
        }
    }
    out
}

pub fn field_as_options(field: &ripplefront_core::DistanceField) -> Vec<Option<u32>> {
    let mut out = Vec::with_capacity(field.width() * field.height());
    for y in 0..field.height() {
        for x in 0..field.width() {
            out.push(field.get(Coord::new(x, y)));
        }
    }
    out
}
