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

//! Candidate cycle generation.

use std::collections::BTreeSet;

use crate::graph::{node_disjoint_path_pair, shortest_path, Cycle, LinkIdx, Topology};

/// Link `x` closed by the cheapest path between its endpoints that avoids
/// `x`. `None` when `x` is a bridge.
pub fn shortest_cycle_for_link(t: &Topology, x: LinkIdx) -> Option<Cycle> {
    let (a, b) = t.link(x).ends;
    let path = shortest_path(t, a, b, &[x], &[])?;
    Cycle::from_ring(t, path.nodes).ok()
}

/// One shortest cycle per non-bridge link, deduplicated and sorted.
pub fn enumerate_shortest_cycles(t: &Topology) -> Vec<Cycle> {
    t.link_indices()
        .filter_map(|x| shortest_cycle_for_link(t, x))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// The cycle made of two node-disjoint paths between `x`'s endpoints, so
/// that `x` straddles it.
pub fn sla_cycle_for_link(t: &Topology, x: LinkIdx) -> Option<Cycle> {
    let (a, b) = t.link(x).ends;
    let (p, q) = node_disjoint_path_pair(t, a, b, Some(x))?;
    let mut ring = p.nodes;
    ring.extend(q.nodes[1..q.nodes.len() - 1].iter().rev());
    Cycle::from_ring(t, ring).ok()
}

pub fn enumerate_sla_cycles(t: &Topology) -> Vec<Cycle> {
    t.link_indices()
        .filter_map(|x| sla_cycle_for_link(t, x))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Replaces one on-cycle link `l` of `c` with a detour through nodes off the
/// ring, turning `l` into a straddling link.
pub fn expand_cycle_at(t: &Topology, c: &Cycle, l: LinkIdx) -> Option<Cycle> {
    let (p, q) = t.link(l).ends;
    let blocked_nodes: Vec<_> = c
        .ring()
        .iter()
        .copied()
        .filter(|&n| n != p && n != q)
        .collect();
    let detour = shortest_path(t, p, q, c.on_cycle_links(), &blocked_nodes)?;

    // Walk the ring starting at q so that it ends at p, then return to q via
    // the detour interior.
    let ring = c.ring();
    let start = ring.iter().position(|&n| n == q)?;
    let len = ring.len();
    let forward = ring[(start + 1) % len] != p;
    let mut nodes: Vec<_> = (0..len)
        .map(|i| {
            if forward {
                ring[(start + i) % len]
            } else {
                ring[(start + len - i) % len]
            }
        })
        .collect();
    debug_assert_eq!(nodes.last(), Some(&p));
    nodes.extend(&detour.nodes[1..detour.nodes.len() - 1]);
    Cycle::from_ring(t, nodes).ok()
}

/// `base` plus every successful single-link expansion of each base cycle.
/// One pass, not iterated.
pub fn expand_candidates(t: &Topology, base: &[Cycle]) -> Vec<Cycle> {
    let mut out: BTreeSet<Cycle> = base.iter().cloned().collect();
    for c in base {
        for &l in c.on_cycle_links() {
            if let Some(expanded) = expand_cycle_at(t, c, l) {
                out.insert(expanded);
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::topo;

    fn rings(t: &Topology, cycles: &[Cycle]) -> Vec<String> {
        cycles.iter().map(|c| c.display(t)).collect()
    }

    fn k4() -> Topology {
        topo(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 1, 1),
                ("a", "c", 1, 1),
                ("a", "d", 1, 1),
                ("b", "c", 1, 1),
                ("b", "d", 1, 1),
                ("c", "d", 1, 1),
            ],
        )
    }

    fn square_with_chord() -> Topology {
        topo(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 1, 1),
                ("b", "c", 1, 1),
                ("c", "d", 1, 1),
                ("a", "d", 1, 1),
                ("a", "c", 1, 1),
            ],
        )
    }

    fn triangle() -> Topology {
        topo(
            &["a", "b", "c"],
            &[("a", "b", 1, 1), ("b", "c", 1, 1), ("a", "c", 1, 1)],
        )
    }

    #[test]
    fn shortest_cycle_cases() {
        let t = triangle();
        let c = shortest_cycle_for_link(&t, t.link_by_id("ab").unwrap()).unwrap();
        assert_eq!(c.display(&t), "a b c");

        let t = square_with_chord();
        let c = shortest_cycle_for_link(&t, t.link_by_id("ac").unwrap()).unwrap();
        assert_eq!(c.display(&t), "a b c");

        let t = topo(&["a", "b", "c"], &[("a", "b", 1, 1), ("b", "c", 1, 1)]);
        assert!(t
            .link_indices()
            .all(|x| shortest_cycle_for_link(&t, x).is_none()));
        assert!(enumerate_shortest_cycles(&t).is_empty());
    }

    #[test]
    fn enumerate_triangle_collapses() {
        let t = triangle();
        assert_eq!(rings(&t, &enumerate_shortest_cycles(&t)), ["a b c"]);
    }

    #[test]
    fn enumerate_k4_follows_per_link_tie_break() {
        // Each link's lexicographically first 2-hop detour runs through a or
        // b, so triangle b-c-d is never the chosen cycle of any link.
        let t = k4();
        assert_eq!(
            rings(&t, &enumerate_shortest_cycles(&t)),
            ["a b c", "a b d", "a c d"]
        );
    }

    #[test]
    fn enumerate_bowtie() {
        let t = topo(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 1, 1),
                ("b", "c", 1, 1),
                ("a", "c", 1, 1),
                ("a", "d", 1, 1),
                ("b", "d", 1, 1),
            ],
        );
        assert_eq!(
            rings(&t, &enumerate_shortest_cycles(&t)),
            ["a b c", "a b d"]
        );
    }

    #[test]
    fn sla_cycles() {
        let t = k4();
        let ab = t.link_by_id("ab").unwrap();
        let c = sla_cycle_for_link(&t, ab).unwrap();
        assert_eq!(c.display(&t), "a c b d");
        assert!(c.is_straddling(ab));

        let t = triangle();
        assert!(sla_cycle_for_link(&t, t.link_by_id("ab").unwrap()).is_none());

        let t = square_with_chord();
        let ac = t.link_by_id("ac").unwrap();
        let c = sla_cycle_for_link(&t, ac).unwrap();
        assert_eq!(c.display(&t), "a b c d");
        assert!(c.is_straddling(ac));
    }

    #[test]
    fn expand_triangle_in_k4() {
        let t = k4();
        let tri = Cycle::from_ring(
            &t,
            vec![
                t.node("a").unwrap(),
                t.node("b").unwrap(),
                t.node("c").unwrap(),
            ],
        )
        .unwrap();
        let ab = t.link_by_id("ab").unwrap();
        let expanded = expand_cycle_at(&t, &tri, ab).unwrap();
        // a-b replaced by a-d-b: ring c-a-d-b.
        assert_eq!(expanded.display(&t), "a c b d");
        assert!(expanded.is_straddling(ab));

        let all = expand_candidates(&t, std::slice::from_ref(&tri));
        assert_eq!(rings(&t, &all), ["a b c", "a b c d", "a b d c", "a c b d"]);
    }

    #[test]
    fn expand_without_spare_nodes_is_identity() {
        let t = triangle();
        let base = enumerate_shortest_cycles(&t);
        assert_eq!(expand_candidates(&t, &base), base);
        assert!(expand_candidates(&t, &[]).is_empty());
    }
}
