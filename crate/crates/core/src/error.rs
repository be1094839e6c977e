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

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop: link {0} joins a node to itself")]
    SelfLoop(String),
    #[error("duplicate link id {0}")]
    DuplicateLink(String),
    #[error("duplicate node id {0}")]
    DuplicateNode(String),
    #[error("parallel links: {0} and {1} join the same node pair")]
    ParallelLink(String, String),
    #[error("non-positive cost on link {0}")]
    NonPositiveCost(String),
    #[error("unknown node {0}")]
    UnknownNode(String),
    #[error("unknown link {0}")]
    UnknownLink(String),
    #[error("topology is disconnected: node {0} is unreachable")]
    Disconnected(String),
    #[error("node count mismatch: header says {declared}, found {found}")]
    NodeCountMismatch { declared: usize, found: usize },
    #[error("topology has no nodes")]
    Empty,

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("cycle protects nothing under the current state")]
    NothingToProtect,
    #[error("cycles cannot be aggregated: {0}")]
    NotAggregable(String),

    #[error("total working capacity is zero")]
    ZeroWorking,
    #[error("no route for demand {0} -> {1}")]
    UnroutableDemand(String, String),
    #[error("invalid demand: {0}")]
    InvalidDemand(String),

    #[error("instance too large: {nodes} nodes exceeds the limit of {limit}")]
    InstanceTooLarge { nodes: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
