use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ripplefront_core::{Coord, FieldMode, Heading};

#[derive(Debug, Parser)]
#[command(name = "ripplefront", version, about = "Grid coverage planning by distance-field descent")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one episode and print `map_id steps completed unseen_percent_final`
    Run(RunArgs),
    /// Run seeded random-start episodes over one or more maps and write CSV
    Bench(BenchArgs),
    /// Run one episode and write frames to a directory
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StartArg(pub Coord);

impl FromStr for StartArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s.split_once(',').ok_or_else(|| format!("expected X,Y, got {s:?}"))?;
        let parse = |v: &str| v.trim().parse::<usize>().map_err(|_| format!("invalid coordinate {v:?}"));
        Ok(StartArg(Coord::new(parse(x)?, parse(y)?)))
    }
}

#[derive(Debug, Clone, Args)]
pub struct SimArgs {
    /// Vision range in node units, center to center
    #[arg(long, value_name = "FLOAT", default_value_t = 6.0)]
    pub fov_range: f64,
    /// Vision HALF-angle in degrees (180 = omnidirectional)
    #[arg(long, value_name = "FLOAT", default_value_t = 45.0)]
    pub fov_angle: f64,
    /// Distance field update per tick: fixpoint or sweeps:K
    #[arg(long, value_name = "MODE", default_value = "fixpoint")]
    pub field_mode: FieldMode,
    /// Tick guard per episode [default: 10 x reachable cells]
    #[arg(long, value_name = "N")]
    pub max_ticks: Option<u64>,
    /// Initial heading: n, e, s or w
    #[arg(long, value_name = "DIR", default_value = "e")]
    pub heading: Heading,
    /// Seed for random starts (base seed for bench)
    #[arg(long, value_name = "U64", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Map file (.map)
    #[arg(long, value_name = "PATH")]
    pub map: PathBuf,
    /// Start cell; a seeded random start is drawn when omitted
    #[arg(long, value_name = "X,Y")]
    pub start: Option<StartArg>,
    #[command(flatten)]
    pub sim: SimArgs,
    /// Print the distance field before the first step to stderr
    #[arg(long)]
    pub dump_field: bool,
    /// Print per-tick coverage CSV to stderr
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Map file (.map); repeat for several maps
    #[arg(long, value_name = "PATH", required = true)]
    pub map: Vec<PathBuf>,
    /// Episodes per map
    #[arg(long, value_name = "N", default_value_t = 200)]
    pub episodes: usize,
    #[command(flatten)]
    pub sim: SimArgs,
    /// Episode CSV path [default: stdout]
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Summary CSV path [default: stderr]
    #[arg(long, value_name = "PATH")]
    pub summary_out: Option<PathBuf>,
    /// Worker threads; output order does not depend on it
    #[arg(long, value_name = "N", default_value_t = 1)]
    pub jobs: usize,
    /// Print per-tick coverage CSV for every episode to stderr
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrameFormat {
    Ascii,
    Ppm,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Map file (.map)
    #[arg(long, value_name = "PATH")]
    pub map: PathBuf,
    /// Start cell; a seeded random start is drawn when omitted
    #[arg(long, value_name = "X,Y")]
    pub start: Option<StartArg>,
    #[command(flatten)]
    pub sim: SimArgs,
    /// Write a frame every N ticks (the first and last are always written)
    #[arg(long, value_name = "N", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub every: u64,
    /// Frame format
    #[arg(long, value_enum, default_value_t = FrameFormat::Ascii)]
    pub format: FrameFormat,
    /// Output directory for frame files
    #[arg(long, value_name = "DIR")]
    pub out_dir: PathBuf,
    /// Append the distance field to each ASCII frame
    #[arg(long)]
    pub dump_field: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("ripplefront").chain(args.iter().copied()))
    }

    #[test]
    fn run_with_omnidirectional_cone() {
        let cli = parse(&["run", "--map", "square.map", "--start", "0,0", "--fov-angle", "180"]).unwrap();
        let Command::Run(run) = cli.command else { panic!("expected run") };
        assert_eq!(run.start, Some(StartArg(Coord::new(0, 0))));
        assert_eq!(run.sim.fov_angle, 180.0);
        assert_eq!(run.sim.fov_range, 6.0);
        assert_eq!(run.sim.field_mode, FieldMode::Fixpoint);
        assert_eq!(run.sim.heading, Heading::East);
    }

    #[test]
    fn bench_over_two_maps() {
        let cli = parse(&["bench", "--map", "a.map", "--map", "b.map", "--episodes", "200", "--seed", "7", "--out", "r.csv"])
            .unwrap();
        let Command::Bench(bench) = cli.command else { panic!("expected bench") };
        assert_eq!(bench.map, vec![PathBuf::from("a.map"), PathBuf::from("b.map")]);
        assert_eq!((bench.episodes, bench.sim.seed), (200, 7));
        assert_eq!(bench.out, Some(PathBuf::from("r.csv")));
        assert_eq!(bench.jobs, 1);
    }

    #[test]
    fn bad_heading_is_a_usage_error() {
        let err = parse(&["run", "--map", "x.map", "--heading", "q"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn field_mode_and_render_flags() {
        let cli = parse(&["render", "--map", "m.map", "--field-mode", "sweeps:4", "--format", "ppm", "--out-dir", "f"])
            .unwrap();
        let Command::Render(r) = cli.command else { panic!("expected render") };
        assert_eq!(r.sim.field_mode.to_string(), "sweeps:4");
        assert_eq!((r.format, r.every), (FrameFormat::Ppm, 1));
        assert_eq!(parse(&["render", "--map", "m", "--out-dir", "f", "--every", "0"]).unwrap_err().exit_code(), 2);
        assert_eq!(parse(&["run", "--map", "m", "--start", "1;2"]).unwrap_err().exit_code(), 2);
        assert_eq!(parse(&["run", "--map", "m", "--field-mode", "sweeps:0"]).unwrap_err().exit_code(), 2);
    }
}
