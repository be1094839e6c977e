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

//! Instance builders for the acceptance suite.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use pcycle_core::graph::LinkSpec;
use pcycle_core::{Rational, Topology};
use rand::seq::SliceRandom;
use rand::Rng;

fn node_name(i: usize) -> String {
    format!("v{i}")
}

fn spec(a: usize, b: usize, cost: i128, working: u64) -> LinkSpec {
    LinkSpec {
        id: format!("{}-{}", node_name(a), node_name(b)),
        a: node_name(a),
        b: node_name(b),
        cost: Rational::from_integer(cost),
        working,
    }
}

/// Connected bridgeless graph on 3 to `max_nodes` nodes with link costs in
/// 1..=`max_cost` and working capacity drawn from `working`.
pub fn small_bridgeless<R: Rng>(
    rng: &mut R,
    max_nodes: usize,
    max_cost: i128,
    working: RangeInclusive<u64>,
) -> Topology {
    let n = rng.gen_range(3..=max_nodes);
    let p = rng.gen_range(0.4..=1.0);
    loop {
        let mut links = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    links.push(spec(
                        a,
                        b,
                        rng.gen_range(1..=max_cost),
                        rng.gen_range(working.clone()),
                    ));
                }
            }
        }
        if let Ok(t) = Topology::new((0..n).map(node_name).collect(), links) {
            if t.bridges().is_empty() {
                return t;
            }
        }
    }
}

/// Two rings sharing exactly one link and only that link's endpoints.
#[derive(Debug, Clone)]
pub struct MergePair {
    pub topology: Topology,
    pub first: Vec<String>,
    pub second: Vec<String>,
    pub shared: String,
}

/// Builds a [`MergePair`] with rings of 3 to 7 nodes each, random costs and
/// working capacity, and up to three extra random links.
pub fn merge_pair<R: Rng>(rng: &mut R) -> MergePair {
    let k1 = rng.gen_range(3..=7);
    let k2 = rng.gen_range(3..=7);
    let n = k1 + k2 - 2;
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let (u, v) = (labels[0], labels[1]);

    let mut first = vec![u, v];
    first.extend_from_slice(&labels[2..k1]);
    let mut second = vec![v, u];
    second.extend_from_slice(&labels[k1..]);

    let mut pairs = BTreeSet::new();
    for ring in [&first, &second] {
        for i in 0..ring.len() {
            let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    for _ in 0..rng.gen_range(0..=3) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    let links = pairs
        .into_iter()
        .map(|(a, b)| spec(a, b, rng.gen_range(1..=4), rng.gen_range(0..=5)))
        .collect();
    let topology =
        Topology::new((0..n).map(node_name).collect(), links).expect("valid construction");
    let names = |r: &[usize]| r.iter().map(|&i| node_name(i)).collect();
    MergePair {
        topology,
        first: names(&first),
        second: names(&second),
        shared: format!("{}-{}", node_name(u.min(v)), node_name(u.max(v))),
    }
}
