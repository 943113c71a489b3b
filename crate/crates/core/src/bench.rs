//! Multi-episode benchmark harness.
//!
//! For every map and every episode index a seed is derived with
//! [`episode_seed`], a start cell is drawn from it and one episode is run.
//! Episodes are independent, so they may run on a thread pool; output order is
//! always `(map, episode index)`.
//!
//! Episode CSV columns:
//! `map_id,episode,seed,start_x,start_y,steps,completed,unreachable_unseen`.
//! Summary CSV columns:
//! `map_id,episodes,mean_steps,sd_steps,min_steps,median_steps,max_steps,completion_rate`.

use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid_map::{parse_map, GridMap};
use crate::rng::{episode_seed, SplitMix64};
use crate::sim::{random_start, run_episode, EpisodeRecord, SimConfig};
use crate::visibility::Heading;

pub const DEFAULT_EPISODES: usize = 200;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub episodes: usize,
    pub base_seed: u64,
    /// Template; the seed field is overwritten per episode.
    pub sim: SimConfig,
    pub initial_heading: Heading,
    pub maps: Vec<PathBuf>,
    pub jobs: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            episodes: DEFAULT_EPISODES,
            base_seed: 0,
            sim: SimConfig::default(),
            initial_heading: Heading::East,
            maps: Vec::new(),
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSummary {
    pub map_id: String,
    pub episodes: usize,
    pub mean_steps: f64,
    /// Sample (n − 1) standard deviation, 0 for a single episode.
    pub sd_steps: f64,
    pub min_steps: u64,
    /// Lower-middle element for an even count.
    pub median_steps: u64,
    pub max_steps: u64,
    pub completion_rate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub episodes_per_map: usize,
    /// Ordered by map, then episode index.
    pub records: Vec<EpisodeRecord>,
    pub summaries: Vec<BenchSummary>,
}

/// Map id used in reports: the file stem.
pub fn map_id_for(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string())
}

pub fn load_map_file(path: &Path) -> Result<GridMap> {
    let wrap = |source: Error| Error::MapLoad { path: path.to_owned(), source: Box::new(source) };
    let text = std::fs::read_to_string(path).map_err(|e| wrap(e.into()))?;
    Ok(parse_map(&text).map_err(|e| wrap(e.into()))?.map)
}

/// Loads every map in `config.maps` and benchmarks them.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    let maps = config
        .maps
        .iter()
        .map(|p| Ok((map_id_for(p), load_map_file(p)?)))
        .collect::<Result<Vec<_>>>()?;
    run_bench_maps(&maps, config)
}

/// Benchmarks already-loaded maps; `config.maps` is ignored.
pub fn run_bench_maps(maps: &[(String, GridMap)], config: &BenchConfig) -> Result<BenchReport> {
    if config.episodes == 0 {
        return Err(Error::InvalidConfig("episodes must be at least 1".into()));
    }
    let jobs: Vec<(usize, u64)> =
        (0..maps.len()).flat_map(|m| (0..config.episodes as u64).map(move |e| (m, e))).collect();
    let run_one = |&(m, e): &(usize, u64)| -> Result<EpisodeRecord> {
        let (id, map) = &maps[m];
        let seed = episode_seed(config.base_seed, e);
        let start = random_start(map, &mut SplitMix64::new(seed));
        let sim = SimConfig { seed, ..config.sim.clone() };
        run_episode(map, id, start, config.initial_heading, &sim)
    };
    let records: Vec<EpisodeRecord> = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        pool.install(|| jobs.par_iter().map(run_one).collect::<Result<_>>())?
    } else {
        jobs.iter().map(run_one).collect::<Result<_>>()?
    };
    let summaries = records
        .chunks(config.episodes)
        .map(summarize)
        .collect::<Result<Vec<_>>>()?;
    Ok(BenchReport { episodes_per_map: config.episodes, records, summaries })
}

/// Statistics over one map's records (the first record's id names the row).
pub fn summarize(records: &[EpisodeRecord]) -> Result<BenchSummary> {
    let first = records.first().ok_or(Error::EmptyInput)?;
    let n = records.len();
    let mut steps: Vec<u64> = records.iter().map(|r| r.total_steps).collect();
    steps.sort_unstable();
    let mean = steps.iter().map(|&s| s as f64).sum::<f64>() / n as f64;
    let sd = if n > 1 {
        let ss: f64 = steps.iter().map(|&s| (s as f64 - mean).powi(2)).sum();
        (ss / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    let completed = records.iter().filter(|r| r.completed).count();
    Ok(BenchSummary {
        map_id: first.map_id.clone(),
        episodes: n,
        mean_steps: mean,
        sd_steps: sd,
        min_steps: steps[0],
        median_steps: steps[(n - 1) / 2],
        max_steps: steps[n - 1],
        completion_rate: completed as f64 / n as f64,
    })
}

pub fn write_episodes_csv<W: Write>(out: W, report: &BenchReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["map_id", "episode", "seed", "start_x", "start_y", "steps", "completed", "unreachable_unseen"])?;
    for (i, r) in report.records.iter().enumerate() {
        w.write_record([
            r.map_id.clone(),
            (i % report.episodes_per_map).to_string(),
            r.seed.to_string(),
            r.start.x.to_string(),
            r.start.y.to_string(),
            r.total_steps.to_string(),
            u8::from(r.completed).to_string(),
            r.unreachable_unseen.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary_csv<W: Write>(out: W, summaries: &[BenchSummary]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "map_id",
        "episodes",
        "mean_steps",
        "sd_steps",
        "min_steps",
        "median_steps",
        "max_steps",
        "completion_rate",
    ])?;
    for s in summaries {
        w.write_record([
            s.map_id.clone(),
            s.episodes.to_string(),
            format!("{:.4}", s.mean_steps),
            format!("{:.4}", s.sd_steps),
            s.min_steps.to_string(),
            s.median_steps.to_string(),
            s.max_steps.to_string(),
            format!("{:.4}", s.completion_rate),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Per-tick coverage rows `map_id,episode,tick,unseen_percent` for records
/// that carry a trace.
pub fn write_trace_csv<W: Write>(out: W, report: &BenchReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["map_id", "episode", "tick", "unseen_percent"])?;
    for (i, r) in report.records.iter().enumerate() {
        for p in r.trace.iter().flatten() {
            w.write_record([
                r.map_id.clone(),
                (i % report.episodes_per_map).to_string(),
                p.tick.to_string(),
                format!("{:.4}", p.unseen_percent),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid_map::Coord;
    use crate::sim::Termination;
    use crate::visibility::FovCone;

    fn record(steps: u64, completed: bool) -> EpisodeRecord {
        EpisodeRecord {
            map_id: "m".into(),
            start: Coord::new(0, 0),
            initial_heading: Heading::East,
            seed: 0,
            total_steps: steps,
            ticks: steps,
            completed,
            termination: if completed { Termination::Completed } else { Termination::TickLimit },
            unreachable_unseen: 0,
            final_unseen_percent: 0.0,
            trace: None,
        }
    }

    #[test]
    fn summary_single() {
        let s = summarize(&[record(4, true)]).unwrap();
        assert_eq!((s.mean_steps, s.sd_steps, s.min_steps, s.median_steps, s.max_steps), (4.0, 0.0, 4, 4, 4));
    }

    #[test]
    fn summary_even_uses_lower_middle() {
        let s = summarize(&[record(4, true), record(2, false)]).unwrap();
        assert_eq!((s.mean_steps, s.min_steps, s.median_steps, s.max_steps), (3.0, 2, 2, 4));
        assert_eq!(s.completion_rate, 0.5);
    }

    #[test]
    fn summary_odd() {
        let recs: Vec<_> = [5, 3, 1, 4, 2].iter().map(|&s| record(s, true)).collect();
        let s = summarize(&recs).unwrap();
        assert_eq!((s.mean_steps, s.median_steps), (3.0, 3));
        assert!((s.sd_steps - 2.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn summary_empty() {
        assert!(matches!(summarize(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn degenerate_single_cell() {
        let maps = vec![("one".to_string(), GridMap::open(1, 1).unwrap())];
        let config = BenchConfig { episodes: 1, ..BenchConfig::default() };
        let report = run_bench_maps(&maps, &config).unwrap();
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.records[0].total_steps, 0);
        assert_eq!(report.summaries[0].mean_steps, 0.0);
        assert_eq!(report.summaries[0].completion_rate, 1.0);
    }

    #[test]
    fn omnidirectional_open_room_needs_no_steps() {
        let maps = vec![("open".to_string(), GridMap::open(10, 10).unwrap())];
        let sim = SimConfig { cone: FovCone::new(20.0, 180.0).unwrap(), ..SimConfig::default() };
        let config = BenchConfig { episodes: 25, sim, ..BenchConfig::default() };
        let report = run_bench_maps(&maps, &config).unwrap();
        assert!(report.records.iter().all(|r| r.total_steps == 0 && r.completed));
        assert_eq!(report.summaries[0].mean_steps, 0.0);
    }

    #[test]
    fn parallel_matches_serial() {
        let maps = vec![
            ("a".to_string(), crate::grid_map::parse_map("......\n.##...\n......\n...#..").unwrap().map),
            ("b".to_string(), GridMap::open(7, 5).unwrap()),
        ];
        let serial = BenchConfig { episodes: 12, base_seed: 3, ..BenchConfig::default() };
        let parallel = BenchConfig { jobs: 4, ..serial.clone() };
        let a = run_bench_maps(&maps, &serial).unwrap();
        let b = run_bench_maps(&maps, &parallel).unwrap();
        assert_eq!(a, b);
        let mut csv_a = Vec::new();
        let mut csv_b = Vec::new();
        write_episodes_csv(&mut csv_a, &a).unwrap();
        write_episodes_csv(&mut csv_b, &b).unwrap();
        assert_eq!(csv_a, csv_b);
        let text = String::from_utf8(csv_a).unwrap();
        assert!(text.starts_with("map_id,episode,seed,start_x,start_y,steps,completed,unreachable_unseen\n"));
        assert_eq!(text.lines().count(), 25);
    }

    #[test]
    fn summary_csv_format() {
        let s = summarize(&[record(2, true), record(4, true)]).unwrap();
        let mut out = Vec::new();
        write_summary_csv(&mut out, &[s]).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "map_id,episodes,mean_steps,sd_steps,min_steps,median_steps,max_steps,completion_rate\n\
             m,2,3.0000,1.4142,2,2,4,1.0000\n"
        );
    }

    #[test]
    fn missing_map_file_reports_path() {
        let config = BenchConfig { maps: vec![PathBuf::from("/nonexistent/x.map")], ..BenchConfig::default() };
        match run_bench(&config) {
            Err(Error::MapLoad { path, .. }) => assert_eq!(path, PathBuf::from("/nonexistent/x.map")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
