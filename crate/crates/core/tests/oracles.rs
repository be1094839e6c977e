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

//! Graph primitives checked against brute-force enumeration.

mod common;

use std::collections::BTreeSet;

use pcycle_core::graph::{node_disjoint_path_pair, shortest_path};
use pcycle_core::oracle::all_simple_cycles;
use pcycle_core::{Cycle, LinkIdx, NodeIdx, Rational, Topology};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::random_topology;

/// Every simple path from `u` to `v` as a node sequence.
fn all_paths(t: &Topology, u: NodeIdx, v: NodeIdx) -> Vec<Vec<NodeIdx>> {
    fn walk(
        t: &Topology,
        at: NodeIdx,
        v: NodeIdx,
        path: &mut Vec<NodeIdx>,
        out: &mut Vec<Vec<NodeIdx>>,
    ) {
        if at == v {
            out.push(path.clone());
            return;
        }
        for &(next, _) in t.neighbors(at) {
            if !path.contains(&next) {
                path.push(next);
                walk(t, next, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(t, u, v, &mut vec![u], &mut out);
    out
}

fn links_of(t: &Topology, nodes: &[NodeIdx]) -> Vec<LinkIdx> {
    nodes
        .windows(2)
        .map(|w| t.link_between(w[0], w[1]).expect("adjacent"))
        .collect()
}

fn cost_of(t: &Topology, nodes: &[NodeIdx]) -> Rational {
    links_of(t, nodes).into_iter().map(|l| t.cost(l)).sum()
}

fn connected_without(t: &Topology, removed: LinkIdx) -> bool {
    let mut seen = vec![false; t.node_count()];
    let mut stack = vec![NodeIdx(0)];
    seen[0] = true;
    while let Some(n) = stack.pop() {
        for &(m, l) in t.neighbors(n) {
            if l != removed && !seen[m.0] {
                seen[m.0] = true;
                stack.push(m);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[test]
fn shortest_path_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let t = random_topology(&mut rng, n, 0.5, 3, 0..=0, false);
        let u = NodeIdx(rng.gen_range(0..n));
        let v = NodeIdx(rng.gen_range(0..n));
        if u == v {
            continue;
        }
        let excluded_links: Vec<LinkIdx> =
            t.link_indices().filter(|_| rng.gen_bool(0.15)).collect();
        let excluded_nodes: Vec<NodeIdx> = t
            .nodes()
            .filter(|&x| x != u && x != v && rng.gen_bool(0.15))
            .collect();

        let expected = all_paths(&t, u, v)
            .into_iter()
            .filter(|p| p.iter().all(|x| !excluded_nodes.contains(x)))
            .filter(|p| links_of(&t, p).iter().all(|l| !excluded_links.contains(l)))
            .min_by(|a, b| {
                cost_of(&t, a)
                    .cmp(&cost_of(&t, b))
                    .then(a.len().cmp(&b.len()))
                    .then_with(|| a.cmp(b))
            });
        let got = shortest_path(&t, u, v, &excluded_links, &excluded_nodes);
        match (expected, got) {
            (None, None) => {}
            (Some(e), Some(g)) => {
                assert_eq!(g.nodes, e);
                assert_eq!(g.links, links_of(&t, &e));
                assert_eq!(g.cost, cost_of(&t, &e));
            }
            (e, g) => panic!("existence differs: expected {e:?}, got {g:?}"),
        }
    }
}

#[test]
fn disjoint_pair_cost_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.gen_range(3..=6);
        let t = random_topology(&mut rng, n, 0.6, 4, 0..=0, false);
        let u = NodeIdx(rng.gen_range(0..n));
        let v = NodeIdx(rng.gen_range(0..n));
        if u == v {
            continue;
        }
        let forbidden = t.link_between(u, v).filter(|_| rng.gen_bool(0.7));
        let paths: Vec<Vec<NodeIdx>> = all_paths(&t, u, v)
            .into_iter()
            .filter(|p| forbidden.is_none_or(|f| !links_of(&t, p).contains(&f)))
            .collect();
        let mut best: Option<Rational> = None;
        for (i, p) in paths.iter().enumerate() {
            for q in &paths[i + 1..] {
                let inner_p = &p[1..p.len() - 1];
                if q[1..q.len() - 1].iter().any(|x| inner_p.contains(x)) {
                    continue;
                }
                let c = cost_of(&t, p) + cost_of(&t, q);
                if best.is_none_or(|b| c < b) {
                    best = Some(c);
                }
            }
        }

        let got = node_disjoint_path_pair(&t, u, v, forbidden);
        match (best, got) {
            (None, None) => {}
            (Some(b), Some((p, q))) => {
                assert_eq!(p.cost + q.cost, b);
                for path in [&p, &q] {
                    assert_eq!(path.nodes.first(), Some(&u));
                    assert_eq!(path.nodes.last(), Some(&v));
                    assert_eq!(path.links, links_of(&t, &path.nodes));
                    assert!(forbidden.is_none_or(|f| !path.links.contains(&f)));
                }
                let inner: BTreeSet<NodeIdx> =
                    p.nodes[1..p.nodes.len() - 1].iter().copied().collect();
                assert!(q.nodes[1..q.nodes.len() - 1]
                    .iter()
                    .all(|x| !inner.contains(x)));
                assert_ne!(p.nodes, q.nodes);
                assert!(p.preference(&q).is_le());
            }
            (b, g) => panic!("existence differs: expected {b:?}, got {g:?}"),
        }
    }
}

#[test]
fn bridges_match_removal_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.2..0.7);
        let t = random_topology(&mut rng, n, p, 1, 0..=0, false);
        let expected: Vec<LinkIdx> = t
            .link_indices()
            .filter(|&l| !connected_without(&t, l))
            .collect();
        assert_eq!(t.bridges(), expected);
    }
}

#[test]
fn cycle_enumeration_matches_link_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..60 {
        let n = rng.gen_range(3..=6);
        let t = random_topology(&mut rng, n, 0.7, 1, 0..=0, false);
        let m = t.link_count();
        let mut expected = BTreeSet::new();
        for mask in 1u32..(1 << m) {
            let links: Vec<LinkIdx> = (0..m).filter(|i| mask >> i & 1 == 1).map(LinkIdx).collect();
            let mut degree = vec![0; n];
            for &l in &links {
                let (a, b) = t.link(l).ends;
                degree[a.0] += 1;
                degree[b.0] += 1;
            }
            if degree.iter().any(|&d| d != 0 && d != 2) {
                continue;
            }
            if let Ok(c) = Cycle::from_links(&t, &links) {
                expected.insert(c);
            }
        }
        let listed = all_simple_cycles(&t).unwrap();
        let got: BTreeSet<Cycle> = listed.iter().cloned().collect();
        assert_eq!(listed.len(), got.len(), "duplicate cycles");
        assert_eq!(got, expected);
    }
}
