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

use std::collections::HashMap;

use num_traits::Zero;

use super::{LinkIdx, NodeIdx, Rational, Topology};
use crate::error::{Error, Result};

/// An elementary cycle in canonical orientation.
///
/// The ring starts at its smallest node and continues toward the smaller of
/// that node's two ring neighbors, so any rotation or reflection of the same
/// ring yields an identical value. Ordering compares rings lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    ring: Vec<NodeIdx>,
    on_cycle: Vec<LinkIdx>,
    straddling: Vec<LinkIdx>,
}

impl Cycle {
    pub fn from_ring(t: &Topology, ring: Vec<NodeIdx>) -> Result<Self> {
        if ring.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "ring has {} nodes, need at least 3",
                ring.len()
            )));
        }
        let mut on_ring = vec![false; t.node_count()];
        for &n in &ring {
            if n.0 >= t.node_count() {
                return Err(Error::InvalidCycle(format!("node {n} out of range")));
            }
            if std::mem::replace(&mut on_ring[n.0], true) {
                return Err(Error::InvalidCycle(format!(
                    "node {} repeats",
                    t.node_id(n)
                )));
            }
        }
        let mut on_cycle = Vec::with_capacity(ring.len());
        for i in 0..ring.len() {
            let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
            let l = t.link_between(a, b).ok_or_else(|| {
                Error::InvalidCycle(format!(
                    "no link between {} and {}",
                    t.node_id(a),
                    t.node_id(b)
                ))
            })?;
            on_cycle.push(l);
        }
        on_cycle.sort();
        let mut straddling = Vec::new();
        for &n in &ring {
            for &(m, l) in t.neighbors(n) {
                if n < m && on_ring[m.0] && on_cycle.binary_search(&l).is_err() {
                    straddling.push(l);
                }
            }
        }
        straddling.sort();
        Ok(Cycle {
            ring: canonical_ring(ring),
            on_cycle,
            straddling,
        })
    }

    /// Builds the cycle whose on-cycle links are exactly `links`. Fails unless
    /// the links form one elementary cycle.
    pub fn from_links(t: &Topology, links: &[LinkIdx]) -> Result<Self> {
        if links.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "{} links cannot form a cycle",
                links.len()
            )));
        }
        let mut incident: HashMap<NodeIdx, Vec<NodeIdx>> = HashMap::new();
        for &l in links {
            let (a, b) = t.link(l).ends;
            incident.entry(a).or_default().push(b);
            incident.entry(b).or_default().push(a);
        }
        if let Some((n, _)) = incident.iter().find(|(_, adj)| adj.len() != 2) {
            return Err(Error::InvalidCycle(format!(
                "node {} has degree other than 2",
                t.node_id(*n)
            )));
        }
        let start = *incident.keys().min().expect("non-empty");
        let mut ring = vec![start];
        let mut prev = start;
        let mut cur = incident[&start][0];
        while cur != start {
            ring.push(cur);
            let adj = &incident[&cur];
            let next = if adj[0] == prev { adj[1] } else { adj[0] };
            prev = cur;
            cur = next;
        }
        if ring.len() != incident.len() {
            return Err(Error::InvalidCycle(
                "links form more than one cycle".to_string(),
            ));
        }
        Cycle::from_ring(t, ring)
    }

    pub fn ring(&self) -> &[NodeIdx] {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ring.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ring.is_empty()
    }

    /// Ring links, sorted by index.
    pub fn on_cycle_links(&self) -> &[LinkIdx] {
        &self.on_cycle
    }

    /// Chords of the ring, sorted by index.
    pub fn straddling_links(&self) -> &[LinkIdx] {
        &self.straddling
    }

    pub fn is_on_cycle(&self, l: LinkIdx) -> bool {
        self.on_cycle.binary_search(&l).is_ok()
    }

    pub fn is_straddling(&self, l: LinkIdx) -> bool {
        self.straddling.binary_search(&l).is_ok()
    }

    pub fn contains_node(&self, n: NodeIdx) -> bool {
        self.ring.contains(&n)
    }

    /// Σ C_j over ring links: the spare cost of one unit of capacity.
    pub fn cost(&self, t: &Topology) -> Rational {
        self.on_cycle
            .iter()
            .fold(Rational::zero(), |acc, &l| acc + t.cost(l))
    }

    pub fn display(&self, t: &Topology) -> String {
        t.format_nodes(&self.ring)
    }
}

fn canonical_ring(mut ring: Vec<NodeIdx>) -> Vec<NodeIdx> {
    let min_pos = ring
        .iter()
        .enumerate()
        .min_by_key(|(_, n)| **n)
        .map(|(i, _)| i)
        .unwrap_or(0);
    ring.rotate_left(min_pos);
    if ring.len() > 2 && ring[ring.len() - 1] < ring[1] {
        ring[1..].reverse();
    }
    ring
}
