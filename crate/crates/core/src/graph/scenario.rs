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

//! Scenario text format.
//!
//! ```text
//! # comment
//! nodes 3
//! node a
//! node b
//! node c
//! link ab a b 1 0      # link <id> <u> <v> <cost> <working>
//! demand a c 2         # demand <src> <dst> <units>
//! ```

use std::fmt::Write;

use super::{parse_rational, LinkSpec, Topology};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Demand {
    pub src: String,
    pub dst: String,
    pub units: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub topology: Topology,
    pub demands: Vec<Demand>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, tagged with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_demand(line: usize, fields: &[&str]) -> Result<Demand> {
    let [_, src, dst, units] = fields else {
        return Err(parse_err(line, "expected `demand <src> <dst> <units>`"));
    };
    let units: u64 = units
        .parse()
        .map_err(|_| parse_err(line, format!("bad demand units `{units}`")))?;
    if units == 0 {
        return Err(parse_err(line, "demand units must be positive"));
    }
    if src == dst {
        return Err(parse_err(line, format!("demand from {src} to itself")));
    }
    Ok(Demand {
        src: src.to_string(),
        dst: dst.to_string(),
        units,
    })
}

/// Parses a scenario file: topology plus any embedded demand lines.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let mut declared: Option<usize> = None;
    let mut nodes = Vec::new();
    let mut links = Vec::new();
    let mut demands = Vec::new();
    for (line, fields) in content_lines(text) {
        match fields[0] {
            "nodes" => {
                if declared.is_some() {
                    return Err(parse_err(line, "repeated `nodes` header"));
                }
                let [_, n] = fields.as_slice() else {
                    return Err(parse_err(line, "expected `nodes <count>`"));
                };
                declared = Some(
                    n.parse()
                        .map_err(|_| parse_err(line, format!("bad node count `{n}`")))?,
                );
            }
            _ if declared.is_none() => {
                return Err(parse_err(
                    line,
                    "expected `nodes <count>` before anything else",
                ));
            }
            "node" => {
                let [_, id] = fields.as_slice() else {
                    return Err(parse_err(line, "expected `node <id>`"));
                };
                nodes.push(id.to_string());
            }
            "link" => {
                let [_, id, a, b, cost, working] = fields.as_slice() else {
                    return Err(parse_err(
                        line,
                        "expected `link <id> <u> <v> <cost> <working>`",
                    ));
                };
                let cost = parse_rational(cost)
                    .ok_or_else(|| parse_err(line, format!("bad cost `{cost}`")))?;
                let working: u64 = working
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad working capacity `{working}`")))?;
                links.push(LinkSpec {
                    id: id.to_string(),
                    a: a.to_string(),
                    b: b.to_string(),
                    cost,
                    working,
                });
            }
            "demand" => demands.push(parse_demand(line, &fields)?),
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let declared = declared.ok_or_else(|| parse_err(1, "missing `nodes <count>` header"))?;
    if declared != nodes.len() {
        return Err(Error::NodeCountMismatch {
            declared,
            found: nodes.len(),
        });
    }
    Ok(Scenario {
        topology: Topology::new(nodes, links)?,
        demands,
    })
}

pub fn load_topology(text: &str) -> Result<Topology> {
    parse_scenario(text).map(|s| s.topology)
}

/// Parses a demand file: `demand` lines and comments only.
pub fn parse_demands(text: &str) -> Result<Vec<Demand>> {
    content_lines(text)
        .map(|(line, fields)| match fields[0] {
            "demand" => parse_demand(line, &fields),
            other => Err(parse_err(line, format!("unknown directive `{other}`"))),
        })
        .collect()
}

pub fn write_scenario(t: &Topology, demands: &[Demand]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "nodes {}", t.node_count());
    for id in t.node_ids() {
        let _ = writeln!(out, "node {id}");
    }
    for link in t.links() {
        let _ = writeln!(
            out,
            "link {} {} {} {} {}",
            link.id,
            t.node_id(link.ends.0),
            t.node_id(link.ends.1),
            link.cost,
            link.working
        );
    }
    for d in demands {
        let _ = writeln!(out, "demand {} {} {}", d.src, d.dst, d.units);
    }
    out
}
