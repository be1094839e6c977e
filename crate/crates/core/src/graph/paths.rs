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

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_traits::Zero;

use super::{LinkIdx, NodeIdx, Rational, Topology};

/// A simple path with its node sequence, link sequence and total cost.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub nodes: Vec<NodeIdx>,
    pub links: Vec<LinkIdx>,
    pub cost: Rational,
}

impl Path {
    pub fn hops(&self) -> usize {
        self.links.len()
    }

    fn from_nodes(t: &Topology, nodes: Vec<NodeIdx>) -> Option<Path> {
        let mut links = Vec::with_capacity(nodes.len().saturating_sub(1));
        let mut cost = Rational::zero();
        for w in nodes.windows(2) {
            let l = t.link_between(w[0], w[1])?;
            cost += t.cost(l);
            links.push(l);
        }
        Some(Path { nodes, links, cost })
    }

    /// (cost, hops, node sequence): the tie-break order used throughout.
    pub fn preference(&self, other: &Path) -> Ordering {
        self.cost
            .cmp(&other.cost)
            .then(self.hops().cmp(&other.hops()))
            .then_with(|| self.nodes.cmp(&other.nodes))
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Label {
    cost: Rational,
    hops: usize,
    nodes: Vec<NodeIdx>,
}

/// Minimum-cost path from `u` to `v` that uses no excluded link and passes
/// through no excluded node. Ties go to fewer hops, then to the
/// lexicographically smallest node sequence.
///
/// That order is preserved under extension by a common suffix, so plain
/// Dijkstra over full labels finds the optimum.
pub fn shortest_path(
    t: &Topology,
    u: NodeIdx,
    v: NodeIdx,
    excluded_links: &[LinkIdx],
    excluded_nodes: &[NodeIdx],
) -> Option<Path> {
    if u == v {
        return None;
    }
    let mut link_blocked = vec![false; t.link_count()];
    for l in excluded_links {
        link_blocked[l.0] = true;
    }
    let mut node_blocked = vec![false; t.node_count()];
    for n in excluded_nodes {
        node_blocked[n.0] = true;
    }
    if node_blocked[u.0] || node_blocked[v.0] {
        return None;
    }

    let mut best: Vec<Option<Label>> = vec![None; t.node_count()];
    let mut settled = vec![false; t.node_count()];
    let mut heap = BinaryHeap::new();
    let start = Label {
        cost: Rational::zero(),
        hops: 0,
        nodes: vec![u],
    };
    best[u.0] = Some(start.clone());
    heap.push(Reverse(start));

    while let Some(Reverse(label)) = heap.pop() {
        let here = *label.nodes.last().expect("non-empty label");
        if settled[here.0] {
            continue;
        }
        settled[here.0] = true;
        if here == v {
            return Path::from_nodes(t, label.nodes);
        }
        for &(next, l) in t.neighbors(here) {
            if settled[next.0] || link_blocked[l.0] || node_blocked[next.0] {
                continue;
            }
            let mut nodes = label.nodes.clone();
            nodes.push(next);
            let candidate = Label {
                cost: label.cost + t.cost(l),
                hops: label.hops + 1,
                nodes,
            };
            if best[next.0].as_ref().is_none_or(|b| candidate < *b) {
                best[next.0] = Some(candidate.clone());
                heap.push(Reverse(candidate));
            }
        }
    }
    None
}

struct Arc {
    to: usize,
    cap: i32,
    cost: Rational,
    link: Option<LinkIdx>,
}

/// Residual network over the node-split graph: node `x` becomes `2x` (in)
/// and `2x + 1` (out) joined by a unit-capacity arc.
struct SplitNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn add_arc(&mut self, from: usize, to: usize, cost: Rational, link: Option<LinkIdx>) {
        let fwd = self.arcs.len();
        self.arcs.push(Arc {
            to,
            cap: 1,
            cost,
            link,
        });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            cost: -cost,
            link,
        });
        self.out[from].push(fwd);
        self.out[to].push(fwd + 1);
    }

    /// Bellman-Ford over residual arcs; returns the arc path source → sink.
    fn augmenting_path(&self, source: usize, sink: usize) -> Option<Vec<usize>> {
        let n = self.out.len();
        let mut dist: Vec<Option<(Rational, usize)>> = vec![None; n];
        let mut via: Vec<Option<usize>> = vec![None; n];
        dist[source] = Some((Rational::zero(), 0));
        for _ in 0..n {
            let mut changed = false;
            for from in 0..n {
                let Some((d, h)) = dist[from] else { continue };
                for &a in &self.out[from] {
                    let arc = &self.arcs[a];
                    if arc.cap <= 0 {
                        continue;
                    }
                    let cand = (d + arc.cost, h + 1);
                    if dist[arc.to].is_none_or(|cur| cand < cur) {
                        dist[arc.to] = Some(cand);
                        via[arc.to] = Some(a);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        dist[sink]?;
        let mut path = Vec::new();
        let mut at = sink;
        while at != source {
            let a = via[at]?;
            path.push(a);
            at = self.arcs[a ^ 1].to;
            if path.len() > self.arcs.len() {
                return None;
            }
        }
        path.reverse();
        Some(path)
    }

    fn push(&mut self, path: &[usize]) {
        for &a in path {
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
        }
    }
}

/// The pair of internally node-disjoint `u`–`v` paths of minimum combined
/// cost, neither using `forbidden_link`. Computed as a two-unit min-cost
/// flow with unit node capacities, so it never falls into the trap where
/// the single shortest path blocks every disjoint partner.
///
/// The returned pair is ordered by [`Path::preference`].
pub fn node_disjoint_path_pair(
    t: &Topology,
    u: NodeIdx,
    v: NodeIdx,
    forbidden_link: Option<LinkIdx>,
) -> Option<(Path, Path)> {
    if u == v {
        return None;
    }
    let n = t.node_count();
    let mut net = SplitNetwork {
        arcs: Vec::new(),
        out: vec![Vec::new(); 2 * n],
    };
    for x in 0..n {
        net.add_arc(2 * x, 2 * x + 1, Rational::zero(), None);
    }
    for l in t.link_indices() {
        if Some(l) == forbidden_link {
            continue;
        }
        let (a, b) = t.link(l).ends;
        let cost = t.cost(l);
        net.add_arc(2 * a.0 + 1, 2 * b.0, cost, Some(l));
        net.add_arc(2 * b.0 + 1, 2 * a.0, cost, Some(l));
    }
    let (source, sink) = (2 * u.0 + 1, 2 * v.0);
    for _ in 0..2 {
        let path = net.augmenting_path(source, sink)?;
        net.push(&path);
    }

    // Net flow per link direction; opposite flows on one link cancel.
    let mut next_hop: Vec<Vec<NodeIdx>> = vec![Vec::new(); n];
    for l in t.link_indices() {
        if Some(l) == forbidden_link {
            continue;
        }
        let (a, b) = t.link(l).ends;
        let flow_ab = arc_flow(&net, 2 * a.0 + 1, 2 * b.0, l);
        let flow_ba = arc_flow(&net, 2 * b.0 + 1, 2 * a.0, l);
        match flow_ab - flow_ba {
            1 => next_hop[a.0].push(b),
            -1 => next_hop[b.0].push(a),
            _ => {}
        }
    }
    for hops in &mut next_hop {
        hops.sort();
    }
    if next_hop[u.0].len() != 2 {
        return None;
    }
    let mut paths = Vec::with_capacity(2);
    for &first in &next_hop[u.0].clone() {
        let mut nodes = vec![u, first];
        let mut at = first;
        while at != v {
            let &[step] = next_hop[at.0].as_slice() else {
                return None;
            };
            nodes.push(step);
            at = step;
            if nodes.len() > n {
                return None;
            }
        }
        paths.push(Path::from_nodes(t, nodes)?);
    }
    let mut second = paths.pop()?;
    let mut first = paths.pop()?;
    if second.preference(&first) == Ordering::Less {
        std::mem::swap(&mut first, &mut second);
    }
    Some((first, second))
}

fn arc_flow(net: &SplitNetwork, from: usize, to: usize, link: LinkIdx) -> i32 {
    net.out[from]
        .iter()
        .filter(|&&a| a % 2 == 0)
        .map(|&a| &net.arcs[a])
        .filter(|arc| arc.to == to && arc.link == Some(link))
        .map(|arc| 1 - arc.cap)
        .sum()
}
