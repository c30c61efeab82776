//! Command-line front door for the k3wall toolkit.
//!
//! Exit codes: 0 on success (and green scenarios), 1 when a scenario run
//! comes back red, 2 on usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use k3wall::exact::rat_str;
use k3wall::ideals::{default_horizon, min_colength_subideal, MonomialIdeal};
use k3wall::irrationality::admissible_table;
use k3wall::mukai::{MukaiVector, PolarizedK3};
use k3wall::plot::render_svg;
use k3wall::report::{serialize_report, CheckKind, ScenarioReport};
use k3wall::scenario::{builtin_genera, builtin_scenario, Scenario};
use k3wall::walls::{holes_on_wall, wall_between, WallEndpoints, WallKind};

#[derive(Parser)]
#[command(
    name = "k3wall",
    version,
    about = "Exact tilt-stability walls, staircase bounds and scenario dossiers for Picard-rank-1 K3 surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mukai pairing and Euler pairing of two classes
    Pairing {
        /// Genus of the polarized K3 (L² = 2g − 2)
        genus: u32,
        /// First class as r,c,s
        #[arg(allow_hyphen_values = true)]
        v: String,
        /// Second class as r,c,s
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Numerical wall between two classes: equation, kind, endpoints
    Wall {
        genus: u32,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Spherical hole classes sitting on the wall of two classes
    Holes {
        genus: u32,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        /// Rank bound for the spherical search (default 20, env K3WALL_RMAX)
        #[arg(long)]
        rmax: Option<u32>,
    },
    /// Scenario dossiers
    Scenario {
        #[command(subcommand)]
        command: ScenarioCommand,
    },
    /// Admissible-c2 table over a genus range
    Table {
        /// Genus selection: `7..14`, `9` or `7,9,11`
        #[arg(long)]
        genus: String,
        /// Degree list, e.g. `3,4`
        #[arg(long)]
        degrees: String,
    },
    /// Monomial staircase queries
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Run dossiers: targets are genera (`7`), `all`, a range (`7..14`) or
    /// paths to TOML scenario configs
    Run {
        #[arg(required = true)]
        targets: Vec<String>,
        /// Write JSON report(s); a directory when several scenarios run
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write SVG wall diagram(s); a directory when several scenarios run
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Minimum colength over subideals with bounded generator count
    MinColength {
        /// Staircase generators, e.g. "x^3, x^2y, xy^3, y^5"
        gens: String,
        #[arg(long)]
        max_gens: u32,
        /// Search horizon on generator total degree
        /// (default: max degree + max_gens + 2, env K3WALL_HORIZON)
        #[arg(long)]
        horizon: Option<u32>,
    },
    /// Product of two staircase ideals
    Product { left: String, right: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn env_u32(name: &str) -> Option<u32> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn parse_pair(genus: u32, v: &str, w: &str) -> k3wall::Result<(MukaiVector, MukaiVector)> {
    let surface = PolarizedK3::new(genus)?;
    Ok((
        MukaiVector::parse(surface, v)?,
        MukaiVector::parse(surface, w)?,
    ))
}

fn run(cli: Cli) -> k3wall::Result<ExitCode> {
    match cli.command {
        Command::Pairing { genus, v, w } => {
            let (v, w) = parse_pair(genus, &v, &w)?;
            println!("<v,w> = {}", v.pairing(&w)?);
            println!("chi(v,w) = {}", v.euler_characteristic(&w)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wall { genus, v, w } => {
            let (v, w) = parse_pair(genus, &v, &w)?;
            let wall = wall_between(&v, &w)?;
            println!(
                "pair: {v}, {w} on a genus-{genus} K3 (L^2 = {})",
                v.surface().lsquare()
            );
            println!("kind: {}", wall.kind().name());
            println!("equation: {}", wall.equation());
            match wall.kind() {
                WallKind::Semicircle { center, radius_sq } => {
                    println!("center: β = {}", rat_str(center));
                    println!("radius²: {}", rat_str(radius_sq));
                    match wall.endpoints()? {
                        WallEndpoints::Rational(lo, hi) => {
                            println!("endpoints: β = {}, {}", rat_str(&lo), rat_str(&hi));
                        }
                        WallEndpoints::Irrational { quadratic: (a, b, c) } => {
                            println!("endpoints: irrational roots of {a}β²+{b}β+{c} = 0");
                        }
                    }
                }
                WallKind::Vertical { beta } => {
                    println!("line: β = {}", rat_str(beta));
                }
                WallKind::Degenerate => {
                    println!("no point of the locus has α > 0");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Holes { genus, v, w, rmax } => {
            let (v, w) = parse_pair(genus, &v, &w)?;
            let rmax = rmax.or_else(|| env_u32("K3WALL_RMAX")).unwrap_or(20);
            let wall = wall_between(&v, &w)?;
            let holes = holes_on_wall(&wall, rmax);
            println!("wall: {}", wall.equation());
            if holes.is_empty() {
                println!("no holes up to rank {rmax}");
            } else {
                for hole in holes {
                    println!(
                        "{} at (β = {}, α² = {})",
                        hole.delta,
                        rat_str(hole.point.beta()),
                        rat_str(hole.point.alpha_sq())
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scenario {
            command: ScenarioCommand::Run { targets, json, svg },
        } => run_scenarios(&targets, json.as_deref(), svg.as_deref()),
        Command::Table { genus, degrees } => {
            let genera = parse_genus_selection(&genus)?;
            let degrees = parse_u32_list(&degrees)?;
            let rows = admissible_table(&genera, &degrees)?;
            print!("genus  L^2  min c2");
            for d in &degrees {
                print!("  | d={d}");
            }
            println!();
            for row in rows {
                print!("g={:<4} {:<4} {:<6}", row.genus, row.lsquare, row.minimal_c2);
                for (_, values) in &row.per_degree {
                    let cell: Vec<String> = values.iter().map(|c| c.to_string()).collect();
                    print!("  | {{{}}}", cell.join(","));
                }
                println!();
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ideal {
            command: IdealCommand::MinColength {
                gens,
                max_gens,
                horizon,
            },
        } => {
            let ideal = MonomialIdeal::parse(&gens)?;
            let horizon = horizon
                .or_else(|| env_u32("K3WALL_HORIZON"))
                .unwrap_or_else(|| default_horizon(&ideal, max_gens as usize));
            let value = min_colength_subideal(&ideal, max_gens as usize, horizon)?;
            println!(
                "subideals of {ideal} with <= {max_gens} generators (horizon {horizon})"
            );
            println!("minimum colength: {value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Ideal {
            command: IdealCommand::Product { left, right },
        } => {
            let l = MonomialIdeal::parse(&left)?;
            let r = MonomialIdeal::parse(&right)?;
            println!("{}", l.product(&r));
            Ok(ExitCode::SUCCESS)
        }
    }
}

enum Target {
    Builtin(u32),
    Custom(PathBuf),
}

fn parse_genus_selection(text: &str) -> k3wall::Result<Vec<u32>> {
    let trimmed = text.trim();
    let parse_one = |part: &str| -> k3wall::Result<u32> {
        part.trim().parse().map_err(|_| k3wall::Error::Parse {
            pos: 0,
            msg: format!("expected a genus, found {part:?}"),
        })
    };
    if let Some((lo, hi)) = trimmed.split_once("..") {
        let lo = parse_one(lo)?;
        let hi = parse_one(hi)?;
        if hi < lo {
            return Err(k3wall::Error::Parse {
                pos: 0,
                msg: format!("empty genus range {trimmed:?}"),
            });
        }
        return Ok((lo..=hi).collect());
    }
    trimmed.split(',').map(parse_one).collect()
}

fn parse_u32_list(text: &str) -> k3wall::Result<Vec<u32>> {
    text.split(',')
        .map(|part| {
            part.trim().parse().map_err(|_| k3wall::Error::Parse {
                pos: 0,
                msg: format!("expected an integer, found {part:?}"),
            })
        })
        .collect()
}

fn parse_targets(targets: &[String]) -> k3wall::Result<Vec<Target>> {
    let mut genera = Vec::new();
    let mut customs = Vec::new();
    for target in targets {
        let trimmed = target.trim();
        if trimmed == "all" {
            genera.extend(builtin_genera());
        } else if trimmed.chars().all(|c| c.is_ascii_digit()) && !trimmed.is_empty() {
            genera.push(trimmed.parse().expect("digits"));
        } else if trimmed.contains("..")
            && trimmed.chars().all(|c| c.is_ascii_digit() || c == '.')
        {
            genera.extend(parse_genus_selection(trimmed)?);
        } else {
            customs.push(PathBuf::from(trimmed));
        }
    }
    genera.sort_unstable();
    genera.dedup();
    let mut out: Vec<Target> = genera.into_iter().map(Target::Builtin).collect();
    out.extend(customs.into_iter().map(Target::Custom));
    Ok(out)
}

fn print_report(report: &ScenarioReport) {
    let computed = report
        .checks
        .iter()
        .filter(|c| c.kind == CheckKind::Computed)
        .count();
    let assumed = report.checks.len() - computed;
    println!(
        "scenario genus {} — {} computed checks, {} assumed lines",
        report.genus, computed, assumed
    );
    for check in &report.checks {
        match check.kind {
            CheckKind::Computed => {
                let mark = if check.pass { "ok     " } else { "FAIL   " };
                let derived = if check.derived { " [derived]" } else { "" };
                if check.pass {
                    println!("  {mark} {}: {}{derived}", check.id, check.actual);
                } else {
                    println!(
                        "  {mark} {}: expected {} but computed {}{derived}",
                        check.id, check.expected, check.actual
                    );
                }
            }
            CheckKind::Assumed => {
                println!("  assumed {}: {} [{}]", check.id, check.expected, check.citation);
            }
        }
    }
    for wall in &report.walls {
        let mut line = format!(
            "  wall {} between {} and {}: {} {}",
            wall.label, wall.pair[0], wall.pair[1], wall.kind, wall.equation
        );
        if let (Some(center), Some(radius_sq)) = (&wall.center, &wall.radius_sq) {
            line.push_str(&format!(", center {center}, radius² {radius_sq}"));
        }
        if let Some([lo, hi]) = &wall.endpoints {
            line.push_str(&format!(", endpoints {lo}, {hi}"));
        }
        if let Some([a, b, c]) = &wall.endpoint_quadratic {
            line.push_str(&format!(", endpoints irrational: {a}β²+{b}β+{c} = 0"));
        }
        println!("{line}");
    }
    for hole in &report.holes {
        println!(
            "  hole on {}: {} at (β = {}, α² = {})",
            hole.wall, hole.class, hole.beta, hole.alpha_sq
        );
    }
    println!(
        "result: {}",
        if report.is_green() { "GREEN" } else { "RED" }
    );
}

fn output_path(base: &Path, multiple: bool, stem: &str, ext: &str) -> k3wall::Result<PathBuf> {
    if multiple {
        std::fs::create_dir_all(base)?;
        Ok(base.join(format!("{stem}.{ext}")))
    } else {
        if let Some(parent) = base.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)?;
            }
        }
        Ok(base.to_path_buf())
    }
}

fn run_scenarios(
    targets: &[String],
    json: Option<&Path>,
    svg: Option<&Path>,
) -> k3wall::Result<ExitCode> {
    let targets = parse_targets(targets)?;
    let multiple = targets.len() > 1;
    let mut all_green = true;
    let mut first = true;
    for target in &targets {
        let (scenario, stem) = match target {
            Target::Builtin(genus) => (
                builtin_scenario(*genus)?,
                format!("report-g{genus}"),
            ),
            Target::Custom(path) => {
                let stem = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().to_string())
                    .unwrap_or_else(|| "scenario".into());
                (Scenario::from_path(path)?, format!("report-{stem}"))
            }
        };
        let report = scenario.run();
        if !first {
            println!();
        }
        first = false;
        print_report(&report);
        if let Some(base) = json {
            let path = output_path(base, multiple, &stem, "json")?;
            std::fs::write(&path, serialize_report(&report)?)?;
            println!("wrote {}", path.display());
        }
        if let Some(base) = svg {
            match scenario.plot_spec()? {
                Some(spec) => {
                    let diagram = stem.replace("report", "wall-diagram");
                    let path = output_path(base, multiple, &diagram, "svg")?;
                    std::fs::write(&path, render_svg(&spec)?)?;
                    println!("wrote {}", path.display());
                }
                None => eprintln!("note: scenario has no plot section; skipping SVG"),
            }
        }
        all_green &= report.is_green();
    }
    Ok(if all_green {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
