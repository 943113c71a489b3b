mod args;

use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use ripplefront_core::bench::{load_map_file, map_id_for, write_episodes_csv, write_summary_csv, write_trace_csv};
use ripplefront_core::render::{render_ascii, render_ascii_with_field, render_ppm};
use ripplefront_core::rng::SplitMix64;
use ripplefront_core::sim::random_start;
use ripplefront_core::{
    propagate, run_bench, BenchConfig, Coord, Episode, EpisodeRecord, Error, FieldMode, FovCone, GridMap,
    SimConfig, Termination,
};

use args::{BenchArgs, Cli, Command, FrameFormat, RenderArgs, RunArgs, SimArgs};

const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        Self { code: EXIT_INTERNAL, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MapLoad { .. } | Error::Io(_) | Error::Csv(_) => EXIT_IO,
            Error::InvalidConfig(_) | Error::StartUntraversable(_) | Error::OutOfBounds(_) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: EXIT_IO, message: e.to_string() }
    }
}

fn sim_config(args: &SimArgs, record_trace: bool) -> Result<SimConfig, Failure> {
    Ok(SimConfig {
        cone: FovCone::new(args.fov_range, args.fov_angle)?,
        field_mode: args.field_mode,
        max_ticks: args.max_ticks,
        seed: args.seed,
        record_trace,
    })
}

fn pick_start(map: &GridMap, start: Option<args::StartArg>, seed: u64) -> Coord {
    start.map(|s| s.0).unwrap_or_else(|| random_start(map, &mut SplitMix64::new(seed)))
}

/// A stuck agent under an exact field means the engine broke an invariant.
fn check_not_stuck(record: &EpisodeRecord, mode: FieldMode) -> Result<(), Failure> {
    if record.termination == Termination::Stuck && mode == FieldMode::Fixpoint {
        return Err(Failure::internal(format!(
            "agent stuck in fixpoint mode on {} from {}",
            record.map_id, record.start
        )));
    }
    Ok(())
}

fn report_line(record: &EpisodeRecord) -> String {
    format!(
        "{} {} {} {:.2}",
        record.map_id,
        record.total_steps,
        u8::from(record.completed),
        record.final_unseen_percent
    )
}

fn cmd_run(args: RunArgs) -> Result<(), Failure> {
    let map = load_map_file(&args.map)?;
    let map_id = map_id_for(&args.map);
    let config = sim_config(&args.sim, args.trace)?;
    let start = pick_start(&map, args.start, args.sim.seed);
    let episode = Episode::new(map, start, args.sim.heading, config.clone())?;
    if args.dump_field {
        let mut field = episode.field().clone();
        propagate(episode.map(), &mut field, config.field_mode)?;
        eprint!("{field}");
    }
    let record = episode.finish(&map_id)?;
    println!("{}", report_line(&record));
    if let Some(trace) = &record.trace {
        let mut err = io::stderr().lock();
        writeln!(err, "tick,unseen_percent")?;
        for p in trace {
            writeln!(err, "{},{:.4}", p.tick, p.unseen_percent)?;
        }
    }
    check_not_stuck(&record, config.field_mode)
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    if args.episodes == 0 {
        return Err(Failure::usage("--episodes must be at least 1"));
    }
    if args.jobs == 0 {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    let sim = sim_config(&args.sim, args.trace)?;
    let config = BenchConfig {
        episodes: args.episodes,
        base_seed: args.sim.seed,
        sim,
        initial_heading: args.sim.heading,
        maps: args.map,
        jobs: args.jobs,
    };
    let report = run_bench(&config)?;
    match &args.out {
        Some(path) => write_episodes_csv(fs::File::create(path)?, &report)?,
        None => write_episodes_csv(io::stdout().lock(), &report)?,
    }
    match &args.summary_out {
        Some(path) => write_summary_csv(fs::File::create(path)?, &report.summaries)?,
        None => write_summary_csv(io::stderr().lock(), &report.summaries)?,
    }
    if args.trace {
        write_trace_csv(io::stderr().lock(), &report)?;
    }
    for record in &report.records {
        check_not_stuck(record, config.sim.field_mode)?;
    }
    Ok(())
}

fn write_frame(dir: &Path, episode: &Episode, format: FrameFormat, dump_field: bool) -> Result<(), Failure> {
    let tick = episode.ticks();
    match format {
        FrameFormat::Ascii => {
            let text = if dump_field {
                render_ascii_with_field(episode.map(), episode.state(), tick, &episode.stats(), episode.field())
            } else {
                render_ascii(episode.map(), episode.state(), tick, &episode.stats())
            };
            fs::write(dir.join(format!("frame_{tick:06}.txt")), text)?;
        }
        FrameFormat::Ppm => {
            fs::write(dir.join(format!("frame_{tick:06}.ppm")), render_ppm(episode.map(), episode.state()))?;
        }
    }
    Ok(())
}

fn cmd_render(args: RenderArgs) -> Result<(), Failure> {
    let map = load_map_file(&args.map)?;
    let map_id = map_id_for(&args.map);
    let config = sim_config(&args.sim, false)?;
    let start = pick_start(&map, args.start, args.sim.seed);
    let mut episode = Episode::new(map, start, args.sim.heading, config.clone())?;
    fs::create_dir_all(&args.out_dir)?;
    write_frame(&args.out_dir, &episode, args.format, args.dump_field)?;
    while episode.step()?.is_some() {
        if episode.ticks() % args.every == 0 || episode.is_finished() {
            write_frame(&args.out_dir, &episode, args.format, args.dump_field)?;
        }
    }
    let record = episode.finish(&map_id)?;
    println!("{}", report_line(&record));
    check_not_stuck(&record, config.field_mode)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Render(args) => cmd_render(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
