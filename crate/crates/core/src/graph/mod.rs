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

//! Network model: an undirected simple graph whose links carry a positive
//! rational cost and a non-negative working wavelength count.
//!
//! Nodes and links are addressed by dense indices ([`NodeIdx`], [`LinkIdx`])
//! assigned in sorted identifier order, so index order doubles as the
//! deterministic tie-break order used by every algorithm in the crate.

mod cycle;
mod paths;
mod scenario;
mod state;

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use cycle::Cycle;
pub use paths::{node_disjoint_path_pair, shortest_path, Path};
pub use scenario::{
    load_topology, parse_demands, parse_scenario, write_scenario, Demand, Scenario,
};
pub use state::NetworkState;

/// Exact arithmetic for costs, spare capacity and redundancy ratios.
pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeIdx(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkIdx(pub usize);

impl fmt::Display for NodeIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

impl fmt::Display for LinkIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l{}", self.0)
    }
}

/// Orders identifiers numerically when both parse as unsigned integers,
/// numbers before names, and names lexicographically.
pub fn compare_ids(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// Parses `7`, `2.5` or `3/2` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    if let Some((num, den)) = text.split_once('/') {
        let num: i128 = num.trim().parse().ok()?;
        let den: i128 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Ratio::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return None;
        }
        let negative = int.starts_with('-');
        let int_part: i128 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().ok()?
        };
        let scale = 10i128.pow(frac.len() as u32);
        let frac_part: i128 = frac.parse().ok()?;
        let magnitude = int_part.abs() * scale + frac_part;
        let num = if negative || int_part < 0 {
            -magnitude
        } else {
            magnitude
        };
        return Some(Ratio::new(num, scale));
    }
    text.parse::<i128>().ok().map(Ratio::from_integer)
}

/// Renders a rational with exactly `places` decimals, rounding half away
/// from zero.
pub fn format_decimal(value: &Rational, places: usize) -> String {
    let scale = 10i128.pow(places as u32);
    let scaled = (value * scale).round().to_integer();
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.unsigned_abs();
    let (whole, frac) = (abs / scale as u128, abs % scale as u128);
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0places$}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub id: String,
    /// Endpoints with `ends.0 < ends.1`.
    pub ends: (NodeIdx, NodeIdx),
    pub cost: Rational,
    pub working: u64,
}

impl Link {
    pub fn touches(&self, n: NodeIdx) -> bool {
        self.ends.0 == n || self.ends.1 == n
    }

    pub fn other_end(&self, n: NodeIdx) -> NodeIdx {
        if self.ends.0 == n {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

/// A link as written in a scenario, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkSpec {
    pub id: String,
    pub a: String,
    pub b: String,
    pub cost: Rational,
    pub working: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    nodes: Vec<String>,
    links: Vec<Link>,
    node_index: HashMap<String, NodeIdx>,
    link_index: HashMap<String, LinkIdx>,
    pair_index: HashMap<(NodeIdx, NodeIdx), LinkIdx>,
    /// Per node, `(neighbor, link)` sorted by neighbor.
    adjacency: Vec<Vec<(NodeIdx, LinkIdx)>>,
}

impl Topology {
    /// Validates and builds a topology. Nodes and links are re-ordered by
    /// [`compare_ids`].
    pub fn new(nodes: Vec<String>, links: Vec<LinkSpec>) -> Result<Self> {
        let mut nodes = nodes;
        if nodes.is_empty() {
            return Err(Error::Empty);
        }
        nodes.sort_by(|a, b| compare_ids(a, b));
        if let Some(w) = nodes.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateNode(w[0].clone()));
        }
        let node_index: HashMap<String, NodeIdx> = nodes
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), NodeIdx(i)))
            .collect();

        let mut specs = links;
        specs.sort_by(|x, y| compare_ids(&x.id, &y.id));
        if let Some(w) = specs.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateLink(w[0].id.clone()));
        }

        let mut links = Vec::with_capacity(specs.len());
        let mut link_index = HashMap::new();
        let mut pair_index: HashMap<(NodeIdx, NodeIdx), LinkIdx> = HashMap::new();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for spec in specs {
            let a = *node_index
                .get(&spec.a)
                .ok_or_else(|| Error::UnknownNode(spec.a.clone()))?;
            let b = *node_index
                .get(&spec.b)
                .ok_or_else(|| Error::UnknownNode(spec.b.clone()))?;
            if a == b {
                return Err(Error::SelfLoop(spec.id));
            }
            if !spec.cost.is_positive() {
                return Err(Error::NonPositiveCost(spec.id));
            }
            let ends = if a < b { (a, b) } else { (b, a) };
            let idx = LinkIdx(links.len());
            if let Some(prev) = pair_index.insert(ends, idx) {
                let prev_id: &Link = &links[prev.0];
                return Err(Error::ParallelLink(prev_id.id.clone(), spec.id));
            }
            link_index.insert(spec.id.clone(), idx);
            adjacency[a.0].push((b, idx));
            adjacency[b.0].push((a, idx));
            links.push(Link {
                id: spec.id,
                ends,
                cost: spec.cost,
                working: spec.working,
            });
        }
        for adj in &mut adjacency {
            adj.sort();
        }

        let topology = Topology {
            nodes,
            links,
            node_index,
            link_index,
            pair_index,
            adjacency,
        };
        if let Some(unreached) = topology.first_unreachable() {
            return Err(Error::Disconnected(topology.nodes[unreached.0].clone()));
        }
        Ok(topology)
    }

    fn first_unreachable(&self) -> Option<NodeIdx> {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([NodeIdx(0)]);
        seen[0] = true;
        while let Some(n) = queue.pop_front() {
            for &(m, _) in &self.adjacency[n.0] {
                if !seen[m.0] {
                    seen[m.0] = true;
                    queue.push_back(m);
                }
            }
        }
        seen.iter().position(|s| !s).map(NodeIdx)
    }

    /// Same graph with working capacities replaced, indexed by link.
    pub fn with_working(&self, working: &[u64]) -> Result<Self> {
        if working.len() != self.links.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} working values, got {}",
                self.links.len(),
                working.len()
            )));
        }
        let mut t = self.clone();
        for (link, &w) in t.links.iter_mut().zip(working) {
            link.working = w;
        }
        Ok(t)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn node_ids(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_id(&self, n: NodeIdx) -> &str {
        &self.nodes[n.0]
    }

    pub fn node(&self, id: &str) -> Option<NodeIdx> {
        self.node_index.get(id).copied()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeIdx> {
        (0..self.nodes.len()).map(NodeIdx)
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn link_indices(&self) -> impl Iterator<Item = LinkIdx> {
        (0..self.links.len()).map(LinkIdx)
    }

    pub fn link(&self, l: LinkIdx) -> &Link {
        &self.links[l.0]
    }

    pub fn link_by_id(&self, id: &str) -> Option<LinkIdx> {
        self.link_index.get(id).copied()
    }

    pub fn link_between(&self, a: NodeIdx, b: NodeIdx) -> Option<LinkIdx> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.pair_index.get(&key).copied()
    }

    pub fn neighbors(&self, n: NodeIdx) -> &[(NodeIdx, LinkIdx)] {
        &self.adjacency[n.0]
    }

    pub fn cost(&self, l: LinkIdx) -> Rational {
        self.links[l.0].cost
    }

    pub fn working(&self, l: LinkIdx) -> u64 {
        self.links[l.0].working
    }

    pub fn total_working(&self) -> u64 {
        self.links.iter().map(|l| l.working).sum()
    }

    /// Σ w_j × C_j over all links.
    pub fn weighted_working(&self) -> Rational {
        self.links
            .iter()
            .map(|l| l.cost * Rational::from_integer(l.working as i128))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Links lying on no cycle, in index order (Tarjan low-link).
    pub fn bridges(&self) -> Vec<LinkIdx> {
        let n = self.nodes.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut out = Vec::new();
        // Iterative DFS: (node, parent link, next neighbor position).
        let mut stack: Vec<(usize, Option<LinkIdx>, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, None, 0));
            while let Some(&(v, parent, pos)) = stack.last() {
                if pos < self.adjacency[v].len() {
                    let (w, l) = self.adjacency[v][pos];
                    if let Some(top) = stack.last_mut() {
                        top.2 += 1;
                    }
                    if Some(l) == parent {
                        continue;
                    }
                    if disc[w.0] == usize::MAX {
                        disc[w.0] = timer;
                        low[w.0] = timer;
                        timer += 1;
                        stack.push((w.0, Some(l), 0));
                    } else {
                        low[v] = low[v].min(disc[w.0]);
                    }
                } else {
                    stack.pop();
                    if let (Some(&(u, _, _)), Some(l)) = (stack.last(), parent) {
                        low[u] = low[u].min(low[v]);
                        if low[v] > disc[u] {
                            out.push(l);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Node ids of a path or ring, space separated.
    pub fn format_nodes(&self, nodes: &[NodeIdx]) -> String {
        nodes
            .iter()
            .map(|&n| self.node_id(n))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
