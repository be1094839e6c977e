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

//! Solution file format.
//!
//! ```text
//! pcycle 2 ring a b c d protects ab=2 ac=3 ad=2
//! summary algorithm aggregation
//! summary pcycles 1
//! ```
//!
//! `summary` lines are informational and ignored when reading.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{format_decimal, Cycle, NetworkState, Topology};
use crate::heuristics::{PCycle, Solution};

pub fn write_solution(t: &Topology, sol: &Solution, algorithm: &str) -> String {
    let mut out = String::new();
    for p in &sol.pcycles {
        let protects: Vec<String> = p
            .protected
            .iter()
            .map(|&(l, amount)| format!("{}={amount}", t.link(l).id))
            .collect();
        let _ = writeln!(
            out,
            "pcycle {} ring {} protects {}",
            p.capacity,
            p.cycle.display(t),
            protects.join(" ")
        );
    }
    let spare = sol.total_spare(t);
    let working = t.weighted_working();
    let _ = writeln!(out, "summary algorithm {algorithm}");
    let _ = writeln!(out, "summary pcycles {}", sol.pcycles.len());
    let _ = writeln!(out, "summary spare {spare}");
    let _ = writeln!(out, "summary working {working}");
    if working == num_traits::Zero::zero() {
        let _ = writeln!(out, "summary redundancy n/a");
    } else {
        let r = spare / working;
        let _ = writeln!(out, "summary redundancy {r} {}", format_decimal(&r, 6));
    }
    let _ = writeln!(out, "summary leftover {}", sol.leftover.total());
    let unprotectable: Vec<&str> = sol
        .unprotectable
        .iter()
        .map(|&l| t.link(l).id.as_str())
        .collect();
    if !unprotectable.is_empty() {
        let _ = writeln!(out, "summary unprotectable {}", unprotectable.join(" "));
    }
    if !sol.backstop_links.is_empty() {
        let backstop: Vec<&str> = sol
            .backstop_links
            .iter()
            .map(|&l| t.link(l).id.as_str())
            .collect();
        let _ = writeln!(out, "summary backstop {}", backstop.join(" "));
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Reads p-cycles back against `t`. The leftover is recomputed as working
/// minus claimed protection, floored at zero.
pub fn parse_solution(t: &Topology, text: &str) -> Result<Solution> {
    let mut pcycles = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.first() {
            None | Some(&"summary") => continue,
            Some(&"pcycle") => {}
            Some(other) => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
        let capacity: u64 = fields
            .get(1)
            .and_then(|v| v.parse().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| parse_err(line, "expected a positive capacity after `pcycle`"))?;
        if fields.get(2) != Some(&"ring") {
            return Err(parse_err(line, "expected `ring`"));
        }
        let split = fields
            .iter()
            .position(|&f| f == "protects")
            .ok_or_else(|| parse_err(line, "expected `protects`"))?;
        let ring = fields[3..split]
            .iter()
            .map(|id| t.node(id).ok_or_else(|| Error::UnknownNode(id.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let cycle = Cycle::from_ring(t, ring)?;
        let mut protected = Vec::new();
        for entry in &fields[split + 1..] {
            let (id, amount) = entry.split_once('=').ok_or_else(|| {
                parse_err(line, format!("expected `<link>=<amount>`, got `{entry}`"))
            })?;
            let l = t
                .link_by_id(id)
                .ok_or_else(|| Error::UnknownLink(id.to_string()))?;
            let amount: u64 = amount
                .parse()
                .map_err(|_| parse_err(line, format!("bad amount `{amount}`")))?;
            if amount > 0 {
                protected.push((l, amount));
            }
        }
        protected.sort();
        if protected.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(parse_err(line, "link listed twice"));
        }
        pcycles.push(PCycle {
            cycle,
            capacity,
            protected,
        });
    }

    let leftover: Vec<u64> = t
        .link_indices()
        .map(|l| {
            let claimed: u64 = pcycles.iter().map(|p: &PCycle| p.protected_on(l)).sum();
            t.working(l).saturating_sub(claimed)
        })
        .collect();
    let leftover = NetworkState::new(t, leftover)?;
    Ok(Solution::new(t, pcycles, leftover))
}
