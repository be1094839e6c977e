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

//! Random instance builders shared by the integration tests.

use pcycle_core::graph::LinkSpec;
use pcycle_core::{Rational, Topology};
use rand::Rng;

pub fn node_name(i: usize) -> String {
    format!("n{i}")
}

pub fn spec(a: usize, b: usize, cost: i128, working: u64) -> LinkSpec {
    LinkSpec {
        id: format!("l{a}-{b}"),
        a: node_name(a),
        b: node_name(b),
        cost: Rational::from_integer(cost),
        working,
    }
}

/// Every unordered pair on `n` nodes with probability `p`, retried until the
/// graph is connected and, when asked, bridgeless.
pub fn random_topology<R: Rng>(
    rng: &mut R,
    n: usize,
    p: f64,
    max_cost: i128,
    working: std::ops::RangeInclusive<u64>,
    bridgeless: bool,
) -> Topology {
    loop {
        let mut links = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    let cost = rng.gen_range(1..=max_cost);
                    links.push(spec(a, b, cost, rng.gen_range(working.clone())));
                }
            }
        }
        let nodes = (0..n).map(node_name).collect();
        let Ok(t) = Topology::new(nodes, links) else {
            continue;
        };
        if bridgeless && !t.bridges().is_empty() {
            continue;
        }
        return t;
    }
}
