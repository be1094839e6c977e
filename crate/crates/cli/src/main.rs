// Copyright 2026 The pcycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pcycle_core::cycle_gen::{enumerate_shortest_cycles, enumerate_sla_cycles};
use pcycle_core::generate::{generate_scenario, GenParams};
use pcycle_core::graph::{parse_demands, parse_scenario, write_scenario};
use pcycle_core::heuristics::{cida_candidates, run_aggregation_heuristic, run_cida, run_sla};
use pcycle_core::solution_file::{parse_solution, write_solution};
use pcycle_core::verify::{
    compare_report, route_demands, solution_report, verify_protection, SolutionReport,
};
use pcycle_core::{oracle, AeMode, CapacityPolicy, NetworkState, Solution, Topology};

#[derive(Parser)]
#[command(
    name = "pcycle",
    version,
    about = "p-cycle protection design for WDM mesh networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Route demands over shortest paths and write the loaded scenario.
    Route {
        scenario: PathBuf,
        /// Demand file; defaults to the scenario's own `demand` lines.
        #[arg(long)]
        demands: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Dump candidate cycles.
    Candidates {
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t = CandidateSet::Shortest)]
        set: CandidateSet,
        #[command(flatten)]
        out: Output,
    },
    /// Compute a p-cycle design.
    Design {
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Aggregation)]
        algorithm: Algorithm,
        #[command(flatten)]
        knobs: Knobs,
        #[command(flatten)]
        out: Output,
    },
    /// Replay every single-link failure against a solution file.
    Verify {
        solution: PathBuf,
        scenario: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Run algorithms side by side and emit a CSV comparison.
    Compare {
        #[arg(required = true)]
        scenarios: Vec<PathBuf>,
        /// Run every algorithm (the default when --algorithm is absent).
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum)]
        algorithm: Vec<Algorithm>,
        #[command(flatten)]
        knobs: Knobs,
        /// Leave runtime_ms empty so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Exact minimum-spare design (at most 8 nodes).
    Oracle {
        scenario: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Generate a random bridgeless scenario with all-pairs demand.
    Gen {
        #[arg(long, default_value_t = 28)]
        nodes: usize,
        #[arg(long, default_value_t = 90.0 / 28.0)]
        degree: f64,
        #[arg(long, default_value_t = 1)]
        demand_min: u64,
        #[arg(long, default_value_t = 2)]
        demand_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Knobs {
    #[arg(long, value_enum, default_value_t = Policy::MinOnCycle)]
    capacity_policy: Policy,
    #[arg(long, value_enum, default_value_t = Ae::Product)]
    ae_mode: Ae,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Aggregation,
    Cida,
    Sla,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Aggregation => "aggregation",
            Algorithm::Cida => "cida",
            Algorithm::Sla => "sla",
        }
    }

    fn run(self, t: &Topology, s: &NetworkState, knobs: &Knobs) -> Solution {
        match self {
            Algorithm::Aggregation => run_aggregation_heuristic(t, s, knobs.capacity_policy.into()),
            Algorithm::Cida => run_cida(t, s, knobs.ae_mode.into()),
            Algorithm::Sla => run_sla(t, s),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CandidateSet {
    Shortest,
    Sla,
    Cida,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    MinOnCycle,
    BestRatio,
}

impl From<Policy> for CapacityPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::MinOnCycle => CapacityPolicy::MinOnCycle,
            Policy::BestRatio => CapacityPolicy::BestRatio,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Ae {
    Product,
    Min,
}

impl From<Ae> for AeMode {
    fn from(m: Ae) -> Self {
        match m {
            Ae::Product => AeMode::Product,
            Ae::Min => AeMode::Min,
        }
    }
}

impl Output {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Topology with any embedded demands routed onto its working capacities.
fn load_loaded(path: &Path) -> Result<(Topology, NetworkState)> {
    let scenario =
        parse_scenario(&read(path)?).with_context(|| format!("loading {}", path.display()))?;
    Ok(route_demands(&scenario.topology, &scenario.demands)?)
}

fn scenario_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn run_compare(
    scenarios: &[PathBuf],
    algorithms: &[Algorithm],
    knobs: &Knobs,
    timing: bool,
) -> Result<String> {
    let mut reports: Vec<SolutionReport> = Vec::new();
    for path in scenarios {
        let (t, s) = load_loaded(path)?;
        let name = scenario_name(path);
        let runs: Vec<(Algorithm, Solution, f64)> = std::thread::scope(|scope| {
            let handles: Vec<_> = algorithms
                .iter()
                .map(|&a| {
                    let (t, s) = (&t, &s);
                    scope.spawn(move || {
                        let start = Instant::now();
                        let sol = a.run(t, s, knobs);
                        (a, sol, start.elapsed().as_secs_f64() * 1e3)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("algorithm thread panicked"))
                .collect()
        });
        for (a, sol, ms) in runs {
            reports.push(solution_report(
                &t,
                &sol,
                &name,
                a.name(),
                timing.then_some(ms),
            )?);
        }
    }
    Ok(compare_report(&reports))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Route {
            scenario,
            demands,
            out,
        } => {
            let parsed = parse_scenario(&read(&scenario)?)?;
            let demands = match demands {
                Some(path) => parse_demands(&read(&path)?)?,
                None => parsed.demands,
            };
            let (loaded, _) = route_demands(&parsed.topology, &demands)?;
            out.emit(&write_scenario(&loaded, &[]))?;
        }
        Command::Candidates { scenario, set, out } => {
            let (t, s) = load_loaded(&scenario)?;
            let cycles = match set {
                CandidateSet::Shortest => enumerate_shortest_cycles(&t),
                CandidateSet::Sla => enumerate_sla_cycles(&t),
                CandidateSet::Cida => cida_candidates(&t, &s).0,
            };
            let mut text = String::new();
            for c in &cycles {
                let chords: Vec<&str> = c
                    .straddling_links()
                    .iter()
                    .map(|&l| t.link(l).id.as_str())
                    .collect();
                text.push_str(&format!(
                    "cycle {} straddling {}\n",
                    c.display(&t),
                    chords.join(" ")
                ));
            }
            out.emit(&text)?;
        }
        Command::Design {
            scenario,
            algorithm,
            knobs,
            out,
        } => {
            let (t, s) = load_loaded(&scenario)?;
            let sol = algorithm.run(&t, &s, &knobs);
            out.emit(&write_solution(&t, &sol, algorithm.name()))?;
        }
        Command::Verify {
            solution,
            scenario,
            out,
        } => {
            let (t, _) = load_loaded(&scenario)?;
            let sol = parse_solution(&t, &read(&solution)?)
                .with_context(|| format!("loading {}", solution.display()))?;
            let verdicts = verify_protection(&t, &sol)?;
            let mut text = String::from("link,working,claimed,restoration,routes,verdict\n");
            for v in &verdicts {
                text.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    t.link(v.link).id,
                    v.working,
                    v.claimed,
                    v.restoration,
                    v.routes,
                    if v.protected {
                        "protected"
                    } else {
                        "unprotected"
                    }
                ));
            }
            out.emit(&text)?;
            let failed = verdicts.iter().filter(|v| !v.protected).count();
            if failed > 0 {
                eprintln!("{failed} link(s) unprotected");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Compare {
            scenarios,
            all,
            algorithm,
            knobs,
            no_timing,
            out,
        } => {
            let algorithms = if all || algorithm.is_empty() {
                vec![Algorithm::Aggregation, Algorithm::Cida, Algorithm::Sla]
            } else {
                algorithm
            };
            out.emit(&run_compare(&scenarios, &algorithms, &knobs, !no_timing)?)?;
        }
        Command::Oracle { scenario, out } => {
            let (t, s) = load_loaded(&scenario)?;
            let sol = oracle::optimal_pcycle_cover(&t, &s)?;
            out.emit(&write_solution(&t, &sol, "oracle"))?;
        }
        Command::Gen {
            nodes,
            degree,
            demand_min,
            demand_max,
            seed,
            out,
        } => {
            if !degree.is_finite() {
                bail!("degree must be finite");
            }
            let text = generate_scenario(&GenParams {
                nodes,
                avg_degree: degree,
                demand_min,
                demand_max,
                seed,
            })?;
            out.emit(&text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
