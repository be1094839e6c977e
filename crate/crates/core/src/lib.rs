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

//! p-cycle protection design for WDM mesh networks.
//!
//! The crate computes sets of pre-configured protection cycles that cover
//! the working capacity of a network against any single link failure:
//!
//! * [`heuristics::run_aggregation_heuristic`] grows capacitated p-cycles by
//!   merging shortest cycles while per-cycle redundancy keeps falling;
//! * [`heuristics::run_cida`] and [`heuristics::run_sla`] are the classic
//!   candidate-then-select baselines;
//! * [`verify`] replays every single-link failure against a solution and
//!   computes redundancy metrics;
//! * [`oracle`] finds minimum-spare covers exactly on small graphs.

pub mod cycle_gen;
pub mod error;
pub mod generate;
pub mod graph;
pub mod heuristics;
pub mod oracle;
pub mod solution_file;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Cycle, LinkIdx, NetworkState, NodeIdx, Rational, Topology};
pub use heuristics::{AeMode, CapacityPolicy, PCycle, Solution};
